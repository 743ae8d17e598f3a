//! The five experiment subcommands. Each resolves its configuration
//! (file < flags), runs, and returns a report plus the number of
//! violations, which drives the exit status.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Args;
use greenlex::parse::parse_polynomial;
use greenlex::{
    check_green_bound, chain_toric, criterion_holds, fiber_cone, lex_restricted_dim,
    lex_segment_ideal, macaulay_growth, macaulay_lower, monomials_of_degree, sample_linear_form,
    segre, segre_veronese, structured_form, verify_grd, verify_reduction, veronese, FieldSpec,
    GradedQuotient, HilbertFunction, Ideal, LinearForm, Monomial, Polynomial, Ring,
    StructuredVariant, ToricPresentation,
};
use num::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{
    check_sizes, load_file, parse_sizes, split_list, Common, CommonArgs, FileConfig,
};
use crate::report::Report;

pub struct Outcome {
    pub report: Report,
    pub failures: u64,
    pub common: Common,
}

/// Per-trial generator: trial `t` of master seed `s` replays exactly.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial.wrapping_mul(0x9E3779B97F4A7C15)))
}

fn random_nonzero_coeff(field: &FieldSpec, rng: &mut ChaCha8Rng) -> i64 {
    match field {
        FieldSpec::Prime(p) => rng.gen_range(1..(*p).min(i64::MAX as u64)) as i64,
        FieldSpec::Rationals => {
            let v = rng.gen_range(-999..999i64);
            if v >= 0 {
                v + 1
            } else {
                v
            }
        }
    }
}

/// A random homogeneous polynomial with dense support: every monomial of
/// the degree appears with a nonzero coefficient.
fn random_homogeneous(ring: &Ring, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    for m in monomials_of_degree(ring.num_vars, degree) {
        let c = ring.field.from_i64(random_nonzero_coeff(&ring.field, rng));
        p.add_term(m, c);
    }
    p
}

fn linear_form_from_poly(p: &Polynomial) -> Result<LinearForm> {
    let field = p.ring.field.clone();
    let n = p.ring.num_vars;
    let mut coeffs = vec![field.zero(); n];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            bail!("forms must be linear, got term of degree {}", m.degree());
        }
        let i = m.0.iter().position(|&e| e == 1).expect("degree-1 monomial");
        coeffs[i] = field.add(&coeffs[i], c);
    }
    Ok(LinearForm::new(coeffs, field))
}

fn form_string(l: &LinearForm, ring: &Ring) -> String {
    match l.to_polynomial(ring) {
        Ok(p) if !p.is_zero() => p.to_string(),
        _ => "0".to_string(),
    }
}

// ---------------------------------------------------------------------------
// green-check
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct GreenArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Largest number of ring variables sampled per trial
    #[arg(long)]
    pub max_vars: Option<usize>,
    /// Largest generator degree sampled per trial
    #[arg(long)]
    pub max_gen_degree: Option<u32>,
    /// Largest bound degree d sampled per trial
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Restrict by the zero form instead of a sampled one (a guaranteed
    /// violation; exercises the failure path)
    #[arg(long)]
    pub zero_form: bool,
}

pub fn green_check(args: &GreenArgs) -> Result<Outcome> {
    let start = Instant::now();
    let file = load_file(args.common.config.as_deref())?;
    let common = Common::resolve(&args.common, &file, "65521", 100)?;
    let seed = common.require_seed()?;
    let max_vars = args.max_vars.or(file.max_vars).unwrap_or(4).clamp(1, 8);
    let max_gen_degree = args.max_gen_degree.or(file.max_gen_degree).unwrap_or(3).max(1);
    let max_degree = args.max_degree.or(file.max_degree).unwrap_or(4).max(1);
    let zero_form = args.zero_form || file.zero_form.unwrap_or(false);

    let config = json!({
        "field": common.field_name,
        "seed": seed,
        "trials": common.trials,
        "max_vars": max_vars,
        "max_gen_degree": max_gen_degree,
        "max_degree": max_degree,
        "zero_form": zero_form,
    });
    let mut report = Report::new("green-check", config);
    let mut violations = 0u64;

    for trial in 0..common.trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let lo = max_vars.min(2);
        let n = rng.gen_range(lo..=max_vars);
        let ring = Ring::new(n, common.field.clone());
        let num_gens = rng.gen_range(1..=3usize);
        let gens: Vec<Polynomial> = (0..num_gens)
            .map(|_| {
                let deg = rng.gen_range(1..=max_gen_degree);
                random_homogeneous(&ring, deg, &mut rng)
            })
            .collect();
        let d = rng.gen_range(1..=max_degree);
        let l = if zero_form {
            LinearForm::zero(n, &ring.field)
        } else {
            sample_linear_form(n, &ring.field, &mut rng)
        };
        let quotient = GradedQuotient::new(&ring, Ideal::new(&ring, gens.clone()))
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        let check = check_green_bound(&quotient, &l, d).map_err(|e| anyhow::anyhow!("{e}"))?;
        if !check.holds {
            violations += 1;
        }
        report.trials.push(json!({
            "trial": trial,
            "num_vars": n,
            "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "form": form_string(&l, &ring),
            "degree": d,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "holds": check.holds,
        }));
    }

    report.summary = json!({
        "trials": common.trials,
        "violations": violations,
        "all_hold": violations == 0,
    });
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome {
        report,
        failures: violations,
        common,
    })
}

// ---------------------------------------------------------------------------
// grd-verify
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct GrdArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Number of ring variables (explicit mode)
    #[arg(long)]
    pub vars: Option<usize>,
    /// Comma-separated linear forms, e.g. "x, y" (explicit mode)
    #[arg(long)]
    pub forms: Option<String>,
    /// Comma-separated generators of the defining ideal (explicit mode)
    #[arg(long)]
    pub ideal: Option<String>,
    /// The degree d of the property
    #[arg(long)]
    pub degree: Option<u32>,
    /// Also check the stronger fourth condition
    #[arg(long)]
    pub strict: bool,
    /// Named scenario; currently `char2-veronese`
    #[arg(long)]
    pub preset: Option<String>,
}

pub fn grd_verify(args: &GrdArgs) -> Result<Outcome> {
    let file = load_file(args.common.config.as_deref())?;
    let preset = args.preset.clone().or_else(|| file.preset.clone());
    match preset.as_deref() {
        Some("char2-veronese") => grd_char2_veronese(args, &file),
        Some(other) => bail!("unknown preset {other:?}; available: char2-veronese"),
        None => grd_explicit(args, &file),
    }
}

fn grd_explicit(args: &GrdArgs, file: &FileConfig) -> Result<Outcome> {
    let start = Instant::now();
    let common = Common::resolve(&args.common, file, "65521", 1)?;
    let vars = args.vars.or(file.vars).context("--vars is required")?;
    if vars == 0 {
        bail!("--vars must be positive");
    }
    let form_sources: Vec<String> = match &args.forms {
        Some(s) => split_list(s),
        None => file.forms.clone().context("--forms is required")?,
    };
    let ideal_sources: Vec<String> = match &args.ideal {
        Some(s) => split_list(s),
        None => file.ideal.clone().unwrap_or_default(),
    };
    let degree = args.degree.or(file.degree).unwrap_or(1);
    let strict = args.strict || file.strict.unwrap_or(false);

    let ring = Ring::new(vars, common.field.clone());
    let gens = ideal_sources
        .iter()
        .map(|s| parse_polynomial(s, &ring).map_err(|e| anyhow::anyhow!("{e}")))
        .collect::<Result<Vec<_>>>()?;
    let quotient = GradedQuotient::new(&ring, Ideal::new(&ring, gens))
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let forms = form_sources
        .iter()
        .map(|s| {
            let p = parse_polynomial(s, &ring).map_err(|e| anyhow::anyhow!("{e}"))?;
            linear_form_from_poly(&p)
        })
        .collect::<Result<Vec<LinearForm>>>()?;

    let grd = verify_grd(&quotient, &forms, degree, strict).map_err(|e| anyhow::anyhow!("{e}"))?;

    let config = json!({
        "field": common.field_name,
        "vars": vars,
        "forms": form_sources,
        "ideal": ideal_sources,
        "degree": degree,
        "strict": strict,
    });
    let mut report = Report::new("grd-verify", config);
    report.trials.push(json!({
        "trial": 0,
        "forms": forms.iter().map(|l| form_string(l, &ring)).collect::<Vec<_>>(),
        "grd": serde_json::to_value(&grd)?,
    }));
    let failures = if grd.passed { 0 } else { 1 };
    report.summary = json!({
        "passed": grd.passed,
        "violations": grd.violations.len(),
    });
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome {
        report,
        failures,
        common,
    })
}

/// The degenerate small-characteristic scenario: the squared structured
/// forms of the quadratic Veronese collapse modulo 2 and both the ladder
/// property and the restriction bound fail on every sample. Over a large
/// prime field the same construction satisfies both.
fn grd_char2_veronese(args: &GrdArgs, file: &FileConfig) -> Result<Outcome> {
    let start = Instant::now();
    let common = Common::resolve(&args.common, file, "2", 16)?;
    let seed = common.require_seed()?;
    let degree = args.degree.or(file.degree).unwrap_or(1);
    let strict = args.strict || file.strict.unwrap_or(false);

    let pres = veronese(2, 2, &common.field).map_err(|e| anyhow::anyhow!("{e}"))?;
    let ring = pres.presentation_ring().clone();
    let z = |i: usize| Polynomial::var(&ring, i);
    let quotient = pres
        .quotient()
        .quotient_by(&[z(0), z(2)])
        .map_err(|e| anyhow::anyhow!("{e}"))?;

    let config = json!({
        "field": common.field_name,
        "seed": seed,
        "trials": common.trials,
        "degree": degree,
        "strict": strict,
        "preset": "char2-veronese",
    });
    let mut report = Report::new("grd-verify", config);
    let mut grd_failures = 0u64;
    let mut bound_violations = 0u64;

    for trial in 0..common.trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let underlying = sample_linear_form(2, &common.field, &mut rng);
        let form = structured_form(&pres, &[underlying.clone()], StructuredVariant::VeronesePower)
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        let grd =
            verify_grd(&quotient, &[form.clone()], degree, strict).map_err(|e| anyhow::anyhow!("{e}"))?;
        let bound =
            check_green_bound(&quotient, &form, degree).map_err(|e| anyhow::anyhow!("{e}"))?;
        if !grd.passed {
            grd_failures += 1;
        }
        if !bound.holds {
            bound_violations += 1;
        }
        report.trials.push(json!({
            "trial": trial,
            "underlying": underlying.to_strings(),
            "form": form_string(&form, &ring),
            "grd_passed": grd.passed,
            "grd_violations": grd.violations.len(),
            "lhs": bound.lhs,
            "rhs": bound.rhs,
            "holds": bound.holds,
        }));
    }

    report.summary = json!({
        "trials": common.trials,
        "grd_failures": grd_failures,
        "bound_violations": bound_violations,
    });
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome {
        report,
        failures: grd_failures + bound_violations,
        common,
    })
}

// ---------------------------------------------------------------------------
// lex-restrict
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct LexArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Largest number of ring variables sampled per trial
    #[arg(long)]
    pub max_vars: Option<usize>,
    /// Highest degree checked
    #[arg(long)]
    pub horizon: Option<u32>,
}

/// Samples a valid Hilbert function: start at 1, then each value is drawn
/// below both the Macaulay growth bound and the ring capacity.
fn random_hilbert_function(
    n: usize,
    horizon: u32,
    rng: &mut ChaCha8Rng,
) -> Result<HilbertFunction> {
    let mut values = vec![1u64];
    for d in 1..=horizon {
        let prev = values[d as usize - 1];
        let next = if prev == 0 {
            0
        } else {
            let cap: u64 = greenlex::binom((n - 1) as i64 + d as i64, d)
                .try_into()
                .unwrap_or(u64::MAX);
            // growth above degree 0 is capped only by the ring
            let max = if d == 1 {
                cap
            } else {
                let growth: u64 = macaulay_growth(&BigUint::from(prev), d - 1)
                    .try_into()
                    .unwrap_or(u64::MAX);
                growth.min(cap)
            };
            rng.gen_range(0..=max)
        };
        values.push(next);
    }
    HilbertFunction::new(values, n).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn lex_restrict(args: &LexArgs) -> Result<Outcome> {
    let start = Instant::now();
    let file = load_file(args.common.config.as_deref())?;
    let common = Common::resolve(&args.common, &file, "65521", 100)?;
    let seed = common.require_seed()?;
    let max_vars = args.max_vars.or(file.max_vars).unwrap_or(4).clamp(1, 8);
    let horizon = args.horizon.or(file.horizon).unwrap_or(5).max(1);

    let config = json!({
        "field": common.field_name,
        "seed": seed,
        "trials": common.trials,
        "max_vars": max_vars,
        "horizon": horizon,
    });
    let mut report = Report::new("lex-restrict", config);
    let mut mismatches = 0u64;

    // fixed cases first, then the random corpus
    let mut cases: Vec<(String, HilbertFunction)> = vec![
        (
            "fixed".into(),
            HilbertFunction::new(vec![1, 2, 1, 1], 2).map_err(|e| anyhow::anyhow!("{e}"))?,
        ),
        (
            "fixed".into(),
            HilbertFunction::new(vec![1, 3, 6, 10], 3).map_err(|e| anyhow::anyhow!("{e}"))?,
        ),
    ];
    for trial in 0..common.trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let n = rng.gen_range(1..=max_vars);
        cases.push(("random".into(), random_hilbert_function(n, horizon, &mut rng)?));
    }

    for (i, (kind, hf)) in cases.iter().enumerate() {
        let ideal =
            lex_segment_ideal(hf, &common.field).map_err(|e| anyhow::anyhow!("{e}"))?;
        let mut bad_degrees = Vec::new();
        for d in 1..hf.values.len() as u32 {
            let lhs = lex_restricted_dim(&ideal, d) as u64;
            let rhs: u64 = macaulay_lower(&BigUint::from(hf.values[d as usize]), d)
                .try_into()
                .unwrap_or(u64::MAX);
            if lhs != rhs {
                bad_degrees.push(json!({"degree": d, "restricted": lhs, "expected": rhs}));
            }
        }
        if !bad_degrees.is_empty() {
            mismatches += 1;
        }
        report.trials.push(json!({
            "trial": i,
            "kind": kind,
            "num_vars": hf.num_vars,
            "hilbert_function": hf.values,
            "mismatches": bad_degrees,
        }));
    }

    report.summary = json!({
        "cases": cases.len(),
        "mismatching_cases": mismatches,
        "identity_holds": mismatches == 0,
    });
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome {
        report,
        failures: mismatches,
        common,
    })
}

// ---------------------------------------------------------------------------
// eakin-sathaye
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct EakinArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Scenario: quadric | segre | veronese | char2-veronese
    #[arg(long)]
    pub preset: Option<String>,
    /// Override the power i whose component must vanish
    #[arg(long)]
    pub power: Option<u32>,
    /// Override the number of elements p searched for
    #[arg(long)]
    pub target: Option<usize>,
    /// Run power-type sampling below the characteristic safety bound
    #[arg(long)]
    pub allow_small_characteristic: bool,
}

struct EakinScenario {
    algebra: GradedQuotient,
    toric: Option<(ToricPresentation, StructuredVariant)>,
    power: u32,
    target: usize,
    needs_large_characteristic: bool,
}

fn eakin_scenario(preset: &str, field: &FieldSpec) -> Result<EakinScenario> {
    let err = |e: greenlex::Error| anyhow::anyhow!("{e}");
    match preset {
        // hypersurface cut out by one quadric in three variables
        "quadric" => {
            let ring = Ring::new(3, field.clone());
            let q = parse_polynomial("x*y - z^2", &ring).map_err(err)?;
            let algebra = GradedQuotient::new(&ring, Ideal::new(&ring, vec![q])).map_err(err)?;
            Ok(EakinScenario {
                algebra,
                toric: None,
                power: 2,
                target: 2,
                needs_large_characteristic: false,
            })
        }
        "segre" => {
            let pres = segre(&[2, 2], field).map_err(err)?;
            Ok(EakinScenario {
                algebra: pres.quotient(),
                toric: Some((pres, StructuredVariant::SegreProduct)),
                power: 1,
                target: 4,
                needs_large_characteristic: false,
            })
        }
        "veronese" | "char2-veronese" => {
            let pres = veronese(2, 2, field).map_err(err)?;
            let ring = pres.presentation_ring().clone();
            let z = |i: usize| Polynomial::var(&ring, i);
            let algebra = pres.quotient().quotient_by(&[z(0), z(2)]).map_err(err)?;
            let target = if preset == "char2-veronese" { 1 } else { 2 };
            Ok(EakinScenario {
                algebra,
                toric: Some((pres, StructuredVariant::VeronesePower)),
                power: 1,
                target,
                needs_large_characteristic: true,
            })
        }
        other => bail!("unknown preset {other:?}; available: quadric, segre, veronese, char2-veronese"),
    }
}

pub fn eakin_sathaye(args: &EakinArgs) -> Result<Outcome> {
    let start = Instant::now();
    let file = load_file(args.common.config.as_deref())?;
    let preset = args
        .preset
        .clone()
        .or_else(|| file.preset.clone())
        .context("--preset is required (quadric | segre | veronese | char2-veronese)")?;
    let default_field = if preset == "char2-veronese" { "2" } else { "65521" };
    let default_trials = if preset == "char2-veronese" { 32 } else { 10 };
    let common = Common::resolve(&args.common, &file, default_field, default_trials)?;
    let seed = common.require_seed()?;
    // Both Veronese presets override the guard: the degenerate scenario
    // is a deliberate small-characteristic run, and the default working
    // prime 65521 sits just below the power-sampling safety bound.
    let allow_small = args.allow_small_characteristic
        || file.allow_small_characteristic.unwrap_or(false)
        || preset == "char2-veronese"
        || preset == "veronese";

    let mut scenario = eakin_scenario(&preset, &common.field)?;
    if let Some(p) = args.power {
        scenario.power = p;
    }
    if let Some(t) = args.target {
        scenario.target = t;
    }
    let trials = common.trials;

    let dim = scenario.algebra.hilbert_dim(scenario.power) as u64;
    let bound: u64 = greenlex::binom(
        scenario.power as i64 + scenario.target as i64,
        scenario.power,
    )
    .try_into()
    .unwrap_or(u64::MAX);
    let criterion = criterion_holds(&scenario.algebra, scenario.power, scenario.target);
    if !criterion && !common.exploratory {
        bail!(
            "numerical criterion fails (dim {dim} >= binomial bound {bound}); \
             pass --exploratory to search anyway"
        );
    }
    let ch = common.field.characteristic();
    if scenario.needs_large_characteristic
        && !allow_small
        && ch != 0
        && ch < greenlex::reduction::CHARACTERISTIC_SAFETY_BOUND
    {
        bail!(
            "characteristic {ch} is below the safety bound for power-type sampling; \
             pass --allow-small-characteristic to proceed"
        );
    }

    let config = json!({
        "field": common.field_name,
        "seed": seed,
        "trials": trials,
        "preset": preset,
        "power": scenario.power,
        "target": scenario.target,
        "exploratory": common.exploratory,
        "allow_small_characteristic": allow_small,
    });
    let mut report = Report::new("eakin-sathaye", config);
    let ring = scenario.algebra.ring.clone();

    let mut verified = false;
    let mut trials_used = 0usize;
    for trial in 0..trials as u64 {
        let mut rng = trial_rng(seed, trial);
        let forms: Vec<LinearForm> = (0..scenario.target)
            .map(|_| -> Result<LinearForm> {
                match &scenario.toric {
                    None => Ok(sample_linear_form(ring.num_vars, &ring.field, &mut rng)),
                    Some((pres, variant)) => {
                        let underlying: Vec<LinearForm> = match variant {
                            StructuredVariant::VeronesePower => {
                                vec![sample_linear_form(pres.blocks[0], pres.field(), &mut rng)]
                            }
                            _ => pres
                                .blocks
                                .iter()
                                .map(|&size| sample_linear_form(size, pres.field(), &mut rng))
                                .collect(),
                        };
                        structured_form(pres, &underlying, *variant)
                            .map_err(|e| anyhow::anyhow!("{e}"))
                    }
                }
            })
            .collect::<Result<_>>()?;
        let ok = verify_reduction(&scenario.algebra, &forms, scenario.power)
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        report.trials.push(json!({
            "trial": trial,
            "forms": forms.iter().map(|l| form_string(l, &ring)).collect::<Vec<_>>(),
            "verified": ok,
        }));
        trials_used = trial as usize + 1;
        if ok {
            verified = true;
            break;
        }
    }

    report.summary = json!({
        "criterion_dim": dim,
        "criterion_bound": bound,
        "criterion_holds": criterion,
        "verified": verified,
        "trials_used": trials_used,
        "max_trials": trials,
    });
    report.elapsed_ms = start.elapsed().as_millis();
    let failures = if verified || trials == 0 { 0 } else { 1 };
    Ok(Outcome {
        report,
        failures,
        common,
    })
}

// ---------------------------------------------------------------------------
// toric-demo
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct ToricArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Presentation family: segre | veronese | segre-veronese | chain | fiber-cone
    #[arg(long)]
    pub kind: Option<String>,
    /// Size parameters, e.g. "2,2" (block sizes, (s, b), or chain bounds)
    #[arg(long)]
    pub params: Option<String>,
    /// Per-block degrees for segre-veronese, e.g. "1,2"
    #[arg(long)]
    pub exponents: Option<String>,
    /// Comma-separated equigenerated monomials for fiber-cone, e.g. "x^2, x*y, y^2"
    #[arg(long)]
    pub gens: Option<String>,
    /// Number of source variables of the fiber-cone monomials
    #[arg(long)]
    pub vars: Option<usize>,
}

fn build_presentation(args: &ToricArgs, file: &FileConfig, field: &FieldSpec) -> Result<ToricPresentation> {
    let err = |e: greenlex::Error| anyhow::anyhow!("{e}");
    let kind = args
        .kind
        .clone()
        .or_else(|| file.kind.clone())
        .context("--kind is required (segre | veronese | segre-veronese | chain | fiber-cone)")?;
    let params: Vec<usize> = match &args.params {
        Some(s) => parse_sizes(s)?,
        None => file.params.clone().unwrap_or_default(),
    };
    match kind.as_str() {
        "segre" => {
            check_sizes(&params)?;
            segre(&params, field).map_err(err)
        }
        "veronese" => {
            check_sizes(&params)?;
            if params.len() != 2 {
                bail!("veronese takes two parameters: variables, degree");
            }
            veronese(params[0], params[1] as u32, field).map_err(err)
        }
        "segre-veronese" => {
            check_sizes(&params)?;
            let exps: Vec<u32> = match &args.exponents {
                Some(s) => parse_sizes(s)?.into_iter().map(|v| v as u32).collect(),
                None => file
                    .exponents
                    .clone()
                    .context("--exponents is required for segre-veronese")?,
            };
            if exps.len() != params.len() {
                bail!("--exponents must list one degree per block");
            }
            segre_veronese(&params, &exps, field).map_err(err)
        }
        "chain" => {
            check_sizes(&params)?;
            chain_toric(&params, field).map_err(err)
        }
        "fiber-cone" => {
            let sources: Vec<String> = match &args.gens {
                Some(s) => split_list(s),
                None => file.gens.clone().context("--gens is required for fiber-cone")?,
            };
            let n = args.vars.or(file.vars).context("--vars is required for fiber-cone")?;
            if n == 0 {
                bail!("--vars must be positive");
            }
            let ring = Ring::new(n, field.clone());
            let monomials = sources
                .iter()
                .map(|s| -> Result<Monomial> {
                    let p = parse_polynomial(s, &ring).map_err(err)?;
                    if p.num_terms() != 1 {
                        bail!("fiber-cone generators must be monomials, got {s:?}");
                    }
                    let (m, c) = p.terms().next().expect("one term");
                    if *c != ring.field.one() {
                        bail!("fiber-cone generators must have coefficient 1, got {s:?}");
                    }
                    Ok(m.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            fiber_cone(&monomials, field).map_err(err)
        }
        other => bail!(
            "unknown kind {other:?}; available: segre, veronese, segre-veronese, chain, fiber-cone"
        ),
    }
}

fn variant_name(v: StructuredVariant) -> &'static str {
    match v {
        StructuredVariant::SegreProduct => "segre-product",
        StructuredVariant::VeronesePower => "veronese-power",
        StructuredVariant::SegreVeronese => "segre-veronese",
        StructuredVariant::ChainPartialSums => "chain-partial-sums",
    }
}

pub fn toric_demo(args: &ToricArgs) -> Result<Outcome> {
    let start = Instant::now();
    let file = load_file(args.common.config.as_deref())?;
    let common = Common::resolve(&args.common, &file, "65521", 1)?;
    let pres = build_presentation(args, &file, &common.field)?;

    let source_ring = Ring::new(pres.source_vars, common.field.clone());
    let source_names = source_ring.var_names();
    let pres_names: Vec<String> = (1..=pres.presentation_vars())
        .map(|i| format!("z{i}"))
        .collect();
    let variant = pres.natural_variant();
    let quotient = pres.quotient();

    // every kernel generator must vanish under substitution by the images
    let image_polys: Vec<Polynomial> = pres
        .images
        .iter()
        .map(|m| Polynomial::monomial(&source_ring, m.clone()))
        .collect();
    let mut substitution_failures = 0u64;
    for g in pres.presentation_ideal.generators() {
        let sub = g.substitute(&image_polys).map_err(|e| anyhow::anyhow!("{e}"))?;
        if !sub.is_zero() {
            substitution_failures += 1;
        }
    }

    // optional structured-form sample when a seed is supplied
    let sample = match common.seed {
        None => Value::Null,
        Some(seed) => {
            let mut rng = trial_rng(seed, 0);
            let underlying: Vec<LinearForm> = match variant {
                StructuredVariant::VeronesePower => {
                    vec![sample_linear_form(pres.blocks[0], pres.field(), &mut rng)]
                }
                _ => pres
                    .blocks
                    .iter()
                    .map(|&size| sample_linear_form(size, pres.field(), &mut rng))
                    .collect(),
            };
            let form = structured_form(&pres, &underlying, variant)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            json!({
                "underlying": underlying
                    .iter()
                    .map(|l| l.to_strings())
                    .collect::<Vec<_>>(),
                "form": form
                    .to_polynomial(pres.presentation_ring())
                    .map(|p| p.to_string_with(&pres_names))
                    .unwrap_or_else(|_| "0".to_string()),
            })
        }
    };

    let config = json!({
        "field": common.field_name,
        "seed": common.seed,
        "kind": args.kind.clone().or_else(|| file.kind.clone()),
        "params": match &args.params {
            Some(s) => parse_sizes(s)?,
            None => file.params.clone().unwrap_or_default(),
        },
    });
    let mut report = Report::new("toric-demo", config);
    report.trials.push(json!({
        "trial": 0,
        "source_vars": pres.source_vars,
        "presentation_vars": pres.presentation_vars(),
        "images": pres
            .images
            .iter()
            .map(|m| Polynomial::monomial(&source_ring, m.clone()).to_string_with(&source_names))
            .collect::<Vec<_>>(),
        "kernel": pres
            .presentation_ideal
            .generators()
            .iter()
            .map(|g| g.to_string_with(&pres_names))
            .collect::<Vec<_>>(),
        "degree_one_dim": quotient.hilbert_dim(1),
        "natural_variant": variant_name(variant),
        "substitution_failures": substitution_failures,
        "structured_sample": sample,
    }));
    report.summary = json!({
        "kernel_generators": pres.presentation_ideal.generators().len(),
        "substitution_failures": substitution_failures,
    });
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome {
        report,
        failures: substitution_failures,
        common,
    })
}
