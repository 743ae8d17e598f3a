//! Ideals, Buchberger's algorithm and the elimination-based ideal operations.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::sync::{Arc, OnceLock};

/// Remainder of `f` on division by `basis`; no term of the result is
/// divisible by any basis leading monomial.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let ring = &f.ring;
    let leads: Vec<(Monomial, crate::field::Scalar)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (m, c) = g.leading_term(order).unwrap();
            (m.clone(), c.clone())
        })
        .collect();
    let reducers: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();

    let mut rem = Polynomial::zero(ring);
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (m, c) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if let Some(q) = m.try_div(lm) {
                let factor = ring.field.div(&c, lc);
                work = work.sub(&reducers[i].mul_term(&q, &factor));
                continue 'outer;
            }
        }
        // move the irreducible leading term to the remainder
        rem.add_term(m.clone(), c.clone());
        let mut lead = Polynomial::zero(ring);
        lead.add_term(m, c);
        work = work.sub(&lead);
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = fm.lcm(gm);
    let qf = l.try_div(fm).unwrap();
    let qg = l.try_div(gm).unwrap();
    let a = f.mul_term(&qf, &f.ring.field.inv(fc));
    let b = g.mul_term(&qg, &g.ring.field.inv(gc));
    a.sub(&b)
}

/// The unique reduced Groebner basis of the ideal generated by `gens`.
///
/// Normal selection strategy (pairs by lcm degree) with the coprime
/// criterion. A unit among the generators collapses the output to `{1}`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let ring = match basis.first() {
        None => return vec![],
        Some(g) => g.ring.clone(),
    };

    // pair queue keyed by (lcm degree, i, j) for determinism
    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let push_pairs =
        |pairs: &mut BinaryHeap<Reverse<(u32, usize, usize)>>, basis: &[Polynomial], j: usize| {
            let (jm, _) = basis[j].leading_term(order).unwrap();
            for i in 0..j {
                let (im, _) = basis[i].leading_term(order).unwrap();
                pairs.push(Reverse((im.lcm(jm).degree(), i, j)));
            }
        };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        let (im, _) = basis[i].leading_term(order).unwrap();
        let (jm, _) = basis[j].leading_term(order).unwrap();
        if im.is_coprime_with(jm) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            basis.push(r);
            push_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    reduce_basis(basis, &ring, order)
}

/// Interreduction: minimal leading terms, fully reduced tails, monic, sorted.
fn reduce_basis(mut basis: Vec<Polynomial>, _ring: &Ring, order: MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let mi = mi.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = basis[j].leading_term(order).unwrap();
            if mj.divides(&mi) && (mj != &mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // reduce each tail against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order);
        reduced.push(r.monic(order));
    }
    minimal.clear();

    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        let (am, _) = a.leading_term(order).unwrap();
        let (bm, _) = b.leading_term(order).unwrap();
        order.cmp(am, bm)
    });
    reduced
}

/// A homogeneous-or-not ideal with a write-once reduced grevlex basis cache.
#[derive(Debug)]
pub struct Ideal {
    pub ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<Vec<Polynomial>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl PartialEq for Ideal {
    /// Equality of ideals, not of generator lists: compared via the reduced
    /// grevlex bases.
    fn eq(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// Construct with a caller-supplied basis, verified by two-way
    /// normal-form membership against the generators.
    pub fn with_certified_basis(
        ring: &Ring,
        gens: Vec<Polynomial>,
        basis: Vec<Polynomial>,
    ) -> Result<Ideal> {
        let ideal = Ideal::new(ring, gens);
        let own = ideal.groebner_basis().to_vec();
        let ok = own
            .iter()
            .all(|g| normal_form(g, &basis, MonomialOrder::GrevLex).is_zero())
            && basis
                .iter()
                .all(|g| normal_form(g, &own, MonomialOrder::GrevLex).is_zero())
            && basis == own;
        if !ok {
            return Err(Error::Parse(
                "supplied basis does not match the reduced basis of the generators".into(),
            ));
        }
        Ok(ideal)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced grevlex Groebner basis (cached; idempotent fill).
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb
            .get_or_init(|| Arc::new(buchberger(&self.gens, MonomialOrder::GrevLex)))
    }

    pub fn groebner_basis_under(&self, order: MonomialOrder) -> Vec<Polynomial> {
        if order == MonomialOrder::GrevLex {
            self.groebner_basis().to_vec()
        } else {
            buchberger(&self.gens, order)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self.groebner_basis(), MonomialOrder::GrevLex).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].total_degree() == Some(0)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn plus_polynomial(&self, f: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(&f.ring)?;
        let mut gens = self.gens.clone();
        if !f.is_zero() {
            gens.push(f.clone());
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Ideal quotient `(self : f)` via the one-extra-variable intersection:
    /// eliminate `t` from `t*I + (1-t)*(f)`, then divide by `f`.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(&f.ring)?;
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        let n = self.ring.num_vars;
        let ext = Ring::new(n + 1, self.ring.field.clone());
        let lift = |p: &Polynomial| -> Polynomial {
            let terms = p
                .terms()
                .map(|(m, c)| {
                    let mut e = vec![0u32];
                    e.extend_from_slice(&m.0);
                    (Monomial(e), c.clone())
                })
                .collect();
            Polynomial::from_terms(&ext, terms)
        };
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| t.mul(&lift(g))).collect();
        gens.push(one_minus_t.mul(&lift(f)));
        let gb = buchberger(&gens, MonomialOrder::Block(1));

        let mut out = Vec::new();
        for g in &gb {
            if g.terms().all(|(m, _)| m.0[0] == 0) {
                let proj = Polynomial::from_terms(
                    &self.ring,
                    g.terms()
                        .map(|(m, c)| (Monomial(m.0[1..].to_vec()), c.clone()))
                        .collect(),
                );
                out.push(exact_div(&proj, f));
            }
        }
        // a colon of homogeneous data is homogeneous, but the elimination
        // basis is not graded; regenerate from homogeneous components
        if f.is_homogeneous() && self.is_homogeneous() {
            out = out
                .iter()
                .flat_map(|g| g.homogeneous_components())
                .collect();
        }
        Ok(Ideal::new(&self.ring, out))
    }

    /// True iff every ambient variable reduces to zero modulo the ideal.
    pub fn contains_maximal_ideal(&self) -> bool {
        (0..self.ring.num_vars).all(|i| self.contains(&Polynomial::var(&self.ring, i)))
    }
}

/// Exact polynomial division; panics if the division leaves a remainder.
fn exact_div(g: &Polynomial, f: &Polynomial) -> Polynomial {
    let order = MonomialOrder::GrevLex;
    let (fm, fc) = f.leading_term(order).unwrap();
    let mut q = Polynomial::zero(&g.ring);
    let mut r = g.clone();
    while !r.is_zero() {
        let (rm, rc) = {
            let (m, c) = r.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let qm = rm
            .try_div(fm)
            .expect("exact division failed: leading term not divisible");
        let qc = g.ring.field.div(&rc, fc);
        q.add_term(qm.clone(), qc.clone());
        r = r.sub(&f.mul_term(&qm, &qc));
    }
    q
}

/// Kernel of the map sending presentation variable `T_i` to the monomial
/// `images[i]`, computed by eliminating the `target_vars` source variables
/// from `(T_i - images[i])`. The result lives in a ring with
/// `images.len()` variables.
pub fn kernel_of_monomial_map(
    target_vars: usize,
    images: &[Monomial],
    field: &FieldSpec,
) -> Result<Ideal> {
    let k = images.len();
    let pres = Ring::new(k, field.clone());
    if k == 0 {
        return Ok(Ideal::zero(&pres));
    }
    let deg = images[0].degree();
    if images.iter().any(|m| m.degree() != deg) {
        return Err(Error::UnequalImageDegrees);
    }
    for m in images {
        assert_eq!(m.num_vars(), target_vars);
    }

    let ext = Ring::new(target_vars + k, field.clone());
    let mut gens = Vec::with_capacity(k);
    for (i, img) in images.iter().enumerate() {
        let mut xe = img.0.clone();
        xe.extend(std::iter::repeat(0).take(k));
        let mut te = vec![0u32; target_vars + k];
        te[target_vars + i] = 1;
        let p = Polynomial::from_terms(
            &ext,
            vec![
                (Monomial(te), field.one()),
                (Monomial(xe), field.neg(&field.one())),
            ],
        );
        gens.push(p);
    }
    let gb = buchberger(&gens, MonomialOrder::Block(target_vars));
    let mut out = Vec::new();
    for g in &gb {
        if g.terms().all(|(m, _)| m.0[..target_vars].iter().all(|&e| e == 0)) {
            out.push(Polynomial::from_terms(
                &pres,
                g.terms()
                    .map(|(m, c)| (Monomial(m.0[target_vars..].to_vec()), c.clone()))
                    .collect(),
            ));
        }
    }
    Ok(Ideal::new(&pres, out))
}
