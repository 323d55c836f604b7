//! End-to-end acceptance checks. Each test prints one `PASS`/`FAIL` line;
//! run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use charnum_core::charnum::{
    critical_dimension, divisibility_sweep, hypersurface_s_top, lambda_integrality, surface_family,
    surface_e1_number,
};
use charnum_core::chow::degree_of_variety;
use charnum_core::degform::{degree_formula_check, quadric_report, ObstructionIdeal, VerdictStatus};
use charnum_core::oracle::{oracle_sweep, SplitBundle};
use charnum_core::poly::{rat, GradedPoly};
use charnum_core::symfunc::elementary_ring;
use charnum_core::{s_number, t_number, t_number_detail, to_elementary, AlphaTuple, AmbientSpace, TCase};
use charnum_core::{Residue, VarietyDescriptor};

const QUADRIC_BUDGET: Duration = Duration::from_secs(5);
const SURFACE_SWEEP_BUDGET: Duration = Duration::from_secs(10);
const MIN_SURFACES: usize = 30;
const RANDOM_DESCRIPTORS: usize = 20;
const MIN_RANDOM_BUNDLES: usize = 50;
const ORACLE_MAX_WEIGHT: u32 = 8;
const NEWTON_MAX_DEGREE: u32 = 10;

fn report(n: u32, title: &str, ok: bool, detail: impl AsRef<str>) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[{n}] {verdict} {title}: {}", detail.as_ref());
}

fn projective(n: u32) -> VarietyDescriptor {
    VarietyDescriptor::whole(AmbientSpace::projective(n))
}

fn ci(n: u32, degrees: &[u32]) -> VarietyDescriptor {
    VarietyDescriptor::in_projective(n, degrees).unwrap()
}

#[test]
fn criterion_1_quadric_invariant_is_odd() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=5u32 {
        let r = match quadric_report(m) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("m={m}: {e}"));
                continue;
            }
        };
        let expected_s = BigInt::from(2) * BigInt::from((1u32 << m) + 1) - BigInt::from(2).pow(1u32 << m);
        if r.hyperplane_degree != BigInt::from(2) {
            failures.push(format!("m={m}: hyperplane degree {}", r.hyperplane_degree));
        }
        if r.s_top != expected_s {
            failures.push(format!("m={m}: s = {}, expected {expected_s}", r.s_top));
        }
        if r.t != Residue::from_i64(1, 2) {
            failures.push(format!("m={m}: t = {}", r.t));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < QUADRIC_BUDGET;
    report(1, "quadric t = 1 (mod 2) for m = 1..5", ok, format!("{elapsed:.2?}; {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed < QUADRIC_BUDGET, "took {elapsed:?}");
}

fn random_descriptor(rng: &mut ChaCha8Rng) -> VarietyDescriptor {
    let factors = if rng.gen_bool(0.6) {
        vec![rng.gen_range(1..=7)]
    } else {
        vec![rng.gen_range(1..=3), rng.gen_range(1..=3)]
    };
    let dim: u32 = factors.iter().sum();
    let count = rng.gen_range(0..=dim.min(2) as usize);
    let degrees = (0..count)
        .map(|_| loop {
            let d: Vec<u32> = factors.iter().map(|_| rng.gen_range(0..=3)).collect();
            if d.iter().any(|&x| x > 0) {
                break d;
            }
        })
        .collect();
    VarietyDescriptor::new(AmbientSpace::new(factors).unwrap(), degrees).unwrap()
}

#[test]
fn criterion_2_t_number_case_split() {
    let mut failures = Vec::new();

    // Zero-dimensional members with degrees known by Bezout.
    let points: Vec<(VarietyDescriptor, i64)> = vec![
        (ci(1, &[1]), 1),
        (ci(1, &[4]), 4),
        (ci(2, &[2, 3]), 6),
        (ci(2, &[5, 5]), 25),
        (ci(3, &[2, 2, 3]), 12),
        (
            VarietyDescriptor::new(AmbientSpace::new(vec![1, 1]).unwrap(), vec![vec![1, 1], vec![1, 2]]).unwrap(),
            3,
        ),
        (
            VarietyDescriptor::new(AmbientSpace::new(vec![1, 1]).unwrap(), vec![vec![2, 3], vec![4, 1]]).unwrap(),
            14,
        ),
    ];
    for (x, deg) in &points {
        if degree_of_variety(x).unwrap() != BigInt::from(*deg) {
            failures.push(format!("deg {x}"));
        }
        for q in [2u64, 3, 5, 7] {
            let t = t_number_detail(x, q, 1).unwrap();
            if t.case != TCase::Points || t.residue != Residue::from_i64(*deg, q) {
                failures.push(format!("{x} at q={q}: {:?}", t.residue));
            }
        }
    }

    // Dimensions off the critical values vanish.
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    let mut vanishing = 0;
    while vanishing < RANDOM_DESCRIPTORS {
        let x = random_descriptor(&mut rng);
        let q = [2u64, 3, 5][rng.gen_range(0..3)];
        let t = rng.gen_range(1..=2u32);
        let dim = x.dim() as u64;
        if dim == 0 || Some(dim) == critical_dimension(q, t) {
            continue;
        }
        vanishing += 1;
        let r = t_number_detail(&x, q, t).unwrap();
        if r.case != TCase::Vanishing || r.residue != Residue::zero(q) || !r.value.is_zero() {
            failures.push(format!("{x} at q={q}, t={t}"));
        }
    }

    // Every surface sits in the critical case for q = 3 and divides exactly.
    let surfaces = surface_family();
    for x in &surfaces {
        match t_number_detail(x, 3, 1) {
            Ok(r) => {
                let s = r.s_value.clone().unwrap_or_default();
                if r.case != TCase::Critical || BigInt::from(-3) * &r.value != s {
                    failures.push(format!("{x}: {r:?}"));
                }
            }
            Err(e) => failures.push(format!("{x}: {e}")),
        }
    }

    let ok = failures.is_empty();
    report(
        2,
        "t-number case split",
        ok,
        format!("{} point sets, {vanishing} vanishing, {} surfaces; {failures:?}", points.len(), surfaces.len()),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_3_surface_sweep_mod_3() {
    let start = Instant::now();
    let family = surface_family();
    let sweep = divisibility_sweep(&family, 3, 1).unwrap();
    let elapsed = start.elapsed();
    let bad: Vec<_> = sweep.entries.iter().filter(|e| !e.pass).map(|e| e.descriptor.to_string()).collect();
    let ok = sweep.pass && bad.is_empty() && sweep.entries.len() >= MIN_SURFACES && elapsed < SURFACE_SWEEP_BUDGET;
    report(3, "3 | deg s_(0,1)(T_X) on surfaces", ok, format!("{} surfaces in {elapsed:.2?}; {bad:?}", sweep.entries.len()));
    assert!(sweep.entries.len() >= MIN_SURFACES);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(elapsed < SURFACE_SWEEP_BUDGET, "took {elapsed:?}");
}

#[test]
fn criterion_4_lambda_family_integrality() {
    let lambdas: Vec<i64> = (-4..=4).collect();
    let mut failures = Vec::new();
    let family = surface_family();
    for x in &family {
        let r = lambda_integrality(x, &lambdas).unwrap();
        if !r.pass || !r.divisibility_form {
            failures.push(format!("{x}: S={}, C={}", r.s, r.c));
        }
    }
    let quadric = ci(3, &[2]);
    let plane = projective(2);
    for &lambda in &lambdas {
        let q = surface_e1_number(&quadric, lambda).unwrap();
        if q != Residue::from_i64(lambda, 3) {
            failures.push(format!("quadric surface at λ={lambda}: {q}"));
        }
        let p = surface_e1_number(&plane, lambda).unwrap();
        if p != Residue::from_i64(2, 3) {
            failures.push(format!("P2 at λ={lambda}: {p}"));
        }
    }
    let ok = failures.is_empty();
    report(4, "λ-family integral for λ in -4..=4", ok, format!("{} surfaces; {failures:?}", family.len()));
    assert!(ok, "{failures:?}");
}

fn newton_identity_holds(i: u32) -> bool {
    let ring = elementary_ring(NEWTON_MAX_DEGREE);
    let lift = |k: u32| -> GradedPoly {
        let f = to_elementary(&AlphaTuple::single_row(k)).unwrap();
        let images: Vec<GradedPoly> = (0..k as usize).map(|j| GradedPoly::var(&ring, j)).collect();
        f.body.substitute(&ring, &images).unwrap()
    };
    let sigma = |j: u32| GradedPoly::var(&ring, j as usize - 1);
    let sign = |j: u32| if j % 2 == 1 { rat(1) } else { rat(-1) };
    let mut rhs = sigma(i).scale(&(sign(i) * rat(i)));
    for j in 1..i {
        rhs = rhs.add(&sigma(j).mul(&lift(i - j)).unwrap().scale(&sign(j))).unwrap();
    }
    lift(i) == rhs
}

#[test]
fn criterion_5_oracle_gate() {
    let ring = AmbientSpace::projective(8).ring();
    let palette = [1i64, 2, 3, -1];
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a_c1e);
    let bundles: Vec<SplitBundle> = (0..MIN_RANDOM_BUNDLES)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let coeffs: Vec<i64> = (0..n).map(|_| palette[rng.gen_range(0..palette.len())]).collect();
            SplitBundle::from_multiples(&ring, 0, &coeffs).unwrap()
        })
        .collect();
    let sweep = oracle_sweep(&bundles, ORACLE_MAX_WEIGHT).unwrap();
    let failed: Vec<_> = sweep.failures().map(|r| format!("{:?} {}", r.roots, r.alpha)).collect();
    let newton_bad: Vec<u32> = (2..=NEWTON_MAX_DEGREE).filter(|&i| !newton_identity_holds(i)).collect();
    let ok = sweep.pass && failed.is_empty() && newton_bad.is_empty();
    report(
        5,
        "split-bundle oracle and Newton recurrence",
        ok,
        format!("{} bundles, {} checks; failures {failed:?}; Newton {newton_bad:?}", bundles.len(), sweep.rows.len()),
    );
    assert!(bundles.len() >= MIN_RANDOM_BUNDLES);
    assert!(failed.is_empty(), "{failed:?}");
    assert!(newton_bad.is_empty(), "{newton_bad:?}");
}

#[test]
fn criterion_6_closed_form_cross_check() {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=8u32 {
        for d in 1..=5u32 {
            cases += 1;
            let x = VarietyDescriptor::hypersurface(n, d);
            let pipeline = s_number(&x, &AlphaTuple::single_row(n)).unwrap();
            if pipeline != hypersurface_s_top(n, d) {
                failures.push(format!("n={n}, d={d}: {pipeline}"));
            }
        }
    }
    for n in 1..=10u32 {
        let s = s_number(&projective(n), &AlphaTuple::single_row(n)).unwrap();
        if s != BigInt::from(n + 1) {
            failures.push(format!("P{n}: {s}"));
        }
    }
    let ok = failures.is_empty() && cases == 40;
    report(6, "hypersurface closed form and projective spaces", ok, format!("{cases} hypersurfaces; {failures:?}"));
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_7_degree_formula_verdicts() {
    // (source, q, t, t-number of the source computed by hand)
    let sources: Vec<(VarietyDescriptor, u64, u32, i64)> = vec![
        (ci(4, &[2]), 2, 2, 1),
        (projective(3), 2, 2, 0),
        (projective(2), 3, 1, 2),
        (ci(3, &[2]), 3, 1, 0),
        (ci(3, &[3]), 3, 1, 2),
    ];
    let mut failures = Vec::new();
    let mut checked = 0;
    for (y, q, t, ty) in &sources {
        let (q, t) = (*q, *t);
        let ty = Residue::from_i64(*ty, q);
        if t_number(y, q, t).unwrap() != ty {
            failures.push(format!("t({y}) at q={q}"));
        }
        let identity = degree_formula_check(y, ty, &BigInt::one(), ObstructionIdeal::zero(q), q, t).unwrap();
        if identity.status != VerdictStatus::Holds {
            failures.push(format!("identity on {y}"));
        }
        for xt in 0..q as i64 {
            let x_t = Residue::from_i64(xt, q);
            for deg in 0..q as i64 {
                for full in [false, true] {
                    let ideal = if full { ObstructionIdeal::full(q) } else { ObstructionIdeal::zero(q) };
                    let expected = if full {
                        VerdictStatus::HoldsTrivially
                    } else if ty == Residue::from_i64(deg * xt, q) {
                        VerdictStatus::Holds
                    } else {
                        VerdictStatus::Violated
                    };
                    for shift in [-2i64, -1, 0, 1, 2, 7] {
                        checked += 1;
                        let deg_f = BigInt::from(deg + shift * q as i64);
                        let v = degree_formula_check(y, x_t, &deg_f, ideal, q, t).unwrap();
                        if v.status != expected {
                            failures.push(format!("{y}, x_t={xt}, deg={deg_f}, full={full}: {:?}", v.status));
                        }
                    }
                }
            }
        }
    }
    let v = degree_formula_check(&ci(4, &[2]), Residue::zero(2), &BigInt::from(3), ObstructionIdeal::zero(2), 2, 2)
        .unwrap();
    if v.status != VerdictStatus::Violated {
        failures.push("quadric 3-fold onto a vanishing target".into());
    }
    let off = degree_formula_check(&projective(4), Residue::from_i64(1, 2), &BigInt::one(), ObstructionIdeal::zero(2), 2, 2)
        .unwrap();
    if off.status != VerdictStatus::HoldsTrivially {
        failures.push("off-critical source".into());
    }
    let ok = failures.is_empty();
    report(7, "degree-formula verdicts for q in {2, 3}", ok, format!("{checked} configurations; {failures:?}"));
    assert!(ok, "{failures:?}");
}
