//! Graded quotients and per-degree Hilbert dimensions.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// A presentation `A/I` of a standard graded algebra.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    pub ring: Ring,
    pub ideal: Ideal,
}

impl GradedQuotient {
    pub fn new(ring: &Ring, ideal: Ideal) -> Result<GradedQuotient> {
        ring.check_same(&ideal.ring)?;
        if !ideal.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        Ok(GradedQuotient {
            ring: ring.clone(),
            ideal,
        })
    }

    pub fn polynomial_ring(ring: &Ring) -> GradedQuotient {
        GradedQuotient {
            ring: ring.clone(),
            ideal: Ideal::zero(ring),
        }
    }

    /// `dim_K (A/I)_d`: the number of degree-`d` standard monomials of the
    /// initial ideal of the reduced grevlex basis.
    pub fn hilbert_dim(&self, d: u32) -> usize {
        standard_monomial_count(&self.ideal, d)
    }

    /// Values of the Hilbert function on degrees `0..=horizon`.
    pub fn hilbert_function(&self, horizon: u32) -> Vec<u64> {
        (0..=horizon).map(|d| self.hilbert_dim(d) as u64).collect()
    }

    /// The quotient by additional homogeneous elements.
    pub fn quotient_by(&self, extra: &[Polynomial]) -> Result<GradedQuotient> {
        let mut gens = self.ideal.generators().to_vec();
        for f in extra {
            self.ring.check_same(&f.ring)?;
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            gens.push(f.clone());
        }
        GradedQuotient::new(&self.ring, Ideal::new(&self.ring, gens))
    }
}

/// Number of degree-`d` monomials outside the initial ideal of `ideal`.
pub fn standard_monomial_count(ideal: &Ideal, d: u32) -> usize {
    let leads: Vec<Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.leading_term(MonomialOrder::GrevLex).unwrap().0.clone())
        .collect();
    monomials_of_degree(ideal.ring.num_vars, d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

/// `dim_K (I)_d` as a subspace of the ambient degree-`d` component.
pub fn ideal_component_dim(ideal: &Ideal, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let d = d as u32;
    let total = monomials_of_degree(ideal.ring.num_vars, d).len();
    total - standard_monomial_count(ideal, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::monomials_of_degree;
    use crate::field::Scalar;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize) -> Ring {
        Ring::new(n, FieldSpec::prime(65521).unwrap())
    }

    fn x(r: &Ring, i: usize) -> Polynomial {
        Polynomial::var(r, i)
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let q = GradedQuotient::polynomial_ring(&ring(3));
        assert_eq!(q.hilbert_dim(2), 6);
        assert_eq!(q.hilbert_function(4), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn quadric_xy_quotient() {
        let r = ring(2);
        let i = Ideal::new(
            &r,
            vec![x(&r, 0).pow(2).sub(&x(&r, 1).pow(2)), x(&r, 0).mul(&x(&r, 1))],
        );
        let q = GradedQuotient::new(&r, i).unwrap();
        // initial ideal (x^2, xy, y^3); sole degree-2 standard monomial y^2
        assert_eq!(q.hilbert_dim(2), 1);
        assert_eq!(q.hilbert_function(4), vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn unit_ideal_vanishes() {
        let r = ring(2);
        let q = GradedQuotient::new(&r, Ideal::unit(&r)).unwrap();
        for d in 0..4 {
            assert_eq!(q.hilbert_dim(d), 0);
        }
    }

    #[test]
    fn complete_intersection_hilbert_functions() {
        let r = ring(3);
        let g1 = x(&r, 0).pow(2).add(&x(&r, 1).mul(&x(&r, 2)));
        let g2 = x(&r, 1).pow(2).sub(&x(&r, 0).mul(&x(&r, 2)));
        // two quadrics in three variables: series (1+t)^2/(1-t)
        let q = GradedQuotient::new(&r, Ideal::new(&r, vec![g1.clone(), g2.clone()])).unwrap();
        assert_eq!(q.hilbert_function(6), vec![1, 3, 4, 4, 4, 4, 4]);
        // adding a cubic makes it Artinian of type (2,2,3): (1+t)^2(1+t+t^2)
        let g3 = x(&r, 0).pow(3).add(&x(&r, 1).pow(3)).add(&x(&r, 2).pow(3));
        let q3 = GradedQuotient::new(&r, Ideal::new(&r, vec![g1, g2, g3])).unwrap();
        assert_eq!(q3.hilbert_function(6), vec![1, 3, 4, 3, 1, 0, 0]);
    }

    /// Independent oracle: dim (A/I)_d = (# degree-d monomials) - rank of the
    /// matrix whose rows are m*g for generators g and monomial multipliers m.
    fn linear_algebra_dim(ideal: &Ideal, d: u32) -> usize {
        let ring = &ideal.ring;
        let basis = monomials_of_degree(ring.num_vars, d);
        let index: std::collections::HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let p = match ring.field {
            FieldSpec::Prime(p) => p,
            _ => panic!("oracle is prime-field only"),
        };
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for g in ideal.generators() {
            let gd = g.homogeneous_degree().unwrap();
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(ring.num_vars, d - gd) {
                let prod = g.mul_term(&m, &ring.field.one());
                let mut row = vec![0u64; basis.len()];
                for (mm, c) in prod.terms() {
                    let Scalar::Fp(v) = c else { unreachable!() };
                    row[index[mm]] = *v;
                }
                rows.push(row);
            }
        }
        // row reduction mod p
        let mut rank = 0;
        let cols = basis.len();
        for col in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = {
                let f = FieldSpec::Prime(p);
                let Scalar::Fp(v) = f.inv(&Scalar::Fp(rows[rank][col])) else {
                    unreachable!()
                };
                v
            };
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let factor = (rows[r][col] as u128 * inv as u128 % p as u128) as u64;
                    for c in col..cols {
                        let sub = (rows[rank][c] as u128 * factor as u128 % p as u128) as u64;
                        rows[r][c] = (rows[r][c] + p - sub) % p;
                    }
                }
            }
            rank += 1;
        }
        cols - rank
    }

    #[test]
    fn groebner_count_matches_linear_algebra_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let field = FieldSpec::prime(65521).unwrap();
        for _ in 0..50 {
            let n = rng.gen_range(1..=3usize);
            let r = Ring::new(n, field.clone());
            let ngens = rng.gen_range(1..=3usize);
            let mut gens = Vec::new();
            for _ in 0..ngens {
                let deg = rng.gen_range(1..=3u32);
                let mut g = Polynomial::zero(&r);
                for m in monomials_of_degree(n, deg) {
                    g.add_term(m, r.field.from_i64(rng.gen_range(0..65521i64)));
                }
                gens.push(g);
            }
            let ideal = Ideal::new(&r, gens);
            let q = GradedQuotient::new(&r, ideal.clone()).unwrap();
            for d in 0..=4u32 {
                assert_eq!(
                    q.hilbert_dim(d),
                    linear_algebra_dim(&ideal, d),
                    "mismatch at degree {d}"
                );
            }
        }
    }
}
