use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use charnum_core::charnum::{
    critical_dimension, default_family, divisibility_sweep, lambda_integrality, surface_family, Report,
};
use charnum_core::degform::{quadric_report, PointPreset};
use charnum_core::oracle::{oracle_sweep, palette_bundles};
use charnum_core::{
    degree_formula_check, hoffmann_verdict, hurewicz_vector, obstruction_ideal, s_number, t_number,
    t_number_detail, AlphaTuple, AmbientSpace, Error, ObstructionIdeal, Residue, VarietyDescriptor,
};

/// What a subcommand produced: the same content in both output modes, and
/// whether every property it checked held.
pub struct Outcome {
    pub json: Value,
    pub table: String,
    pub pass: bool,
}

pub enum Failure {
    /// Malformed or out-of-range input.
    Input(String),
    /// A checked property failed outright.
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DivisibilityViolation { .. }
            | Error::NonIntegral { .. }
            | Error::PropertyViolation(_)
            | Error::Internal(_) => Failure::Property(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w + c.len() - c.chars().count()))
            .collect();
        format!("{}\n", parts.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn pass_word(pass: bool) -> String {
    if pass { "pass" } else { "FAIL" }.to_string()
}

pub fn snumber(x: &VarietyDescriptor, alpha: &AlphaTuple) -> CmdResult {
    let value = s_number(x, alpha)?;
    let report = Report {
        descriptor: x.clone(),
        alpha: Some(alpha.clone()),
        value: value.to_string(),
        modulus: None,
        residue: None,
        pass: true,
    };
    let table = key_values(&[
        ("variety", x.to_string()),
        ("alpha", alpha.to_string()),
        ("s", report.value.clone()),
    ]);
    Ok(Outcome { json: to_json(&report), table, pass: true })
}

pub fn hurewicz(x: &VarietyDescriptor) -> CmdResult {
    let v = hurewicz_vector(x)?;
    let rows: Vec<Vec<String>> = v.ordered().iter().map(|(a, n)| vec![a.to_string(), n.to_string()]).collect();
    let table = format!("variety  {x}\n") + &grid(&["alpha", "deg s_alpha(-T)"], &rows);
    Ok(Outcome { json: json!({ "descriptor": x, "hurewicz": v }), table, pass: true })
}

pub fn tnumber(x: &VarietyDescriptor, q: u64, t: u32) -> CmdResult {
    let r = t_number_detail(x, q, t)?;
    let mut json = to_json(&r);
    json["descriptor"] = to_json(x);
    json["q"] = json!(q);
    json["t"] = json!(t);
    let mut rows = vec![("variety", x.to_string()), ("case", to_json(&r.case).as_str().unwrap().to_string())];
    if let Some(s) = &r.s_value {
        rows.push(("s", s.to_string()));
    }
    rows.push(("t-number", r.value.to_string()));
    rows.push(("residue", r.residue.to_string()));
    Ok(Outcome { json, table: key_values(&rows), pass: true })
}

pub fn lambda_family(x: &VarietyDescriptor, lambdas: &[i64]) -> CmdResult {
    let r = lambda_integrality(x, lambdas)?;
    let rows: Vec<Vec<String>> = r
        .entries
        .iter()
        .map(|e| {
            vec![
                e.lambda.to_string(),
                e.value.clone(),
                e.residue.map_or("-".into(), |r| r.to_string()),
                pass_word(e.integral),
            ]
        })
        .collect();
    let table = key_values(&[
        ("variety", x.to_string()),
        ("S", r.s.to_string()),
        ("C", r.c.to_string()),
        ("3 | S and 4 | 2S+C", r.divisibility_form.to_string()),
    ]) + &grid(&["lambda", "value", "residue", "integral"], &rows);
    let pass = r.pass && r.divisibility_form;
    Ok(Outcome { json: to_json(&r), table, pass })
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Family {
    /// Complete intersections in P^1..P^6 of the critical dimension.
    Default,
    /// Surfaces in P^3, P^4 and P^2 x P^1.
    Surfaces,
}

pub fn check_divisibility(members: Option<Vec<VarietyDescriptor>>, family: Family, q: u64, t: u32) -> CmdResult {
    charnum_core::charnum::check_prime(q)?;
    let n = critical_dimension(q, t).ok_or_else(|| Failure::Input(format!("{q}^{t} - 1 is too large")))?;
    let members = match members {
        Some(m) => m,
        None => match family {
            Family::Default => default_family(u32::try_from(n).map_err(|_| Failure::Input("dimension too large".into()))?),
            Family::Surfaces => surface_family(),
        },
    };
    let r = divisibility_sweep(&members, q, t)?;
    let rows: Vec<Vec<String>> = r
        .entries
        .iter()
        .map(|e| {
            vec![
                e.descriptor.to_string(),
                e.value.clone(),
                format!("{} (mod {q})", e.residue.unwrap_or_default()),
                pass_word(e.pass),
            ]
        })
        .collect();
    let table = format!("q = {q}, t = {t}, dimension {n}, {} varieties\n", r.entries.len())
        + &grid(&["variety", "s", "residue", "divisible"], &rows);
    Ok(Outcome { json: to_json(&r), table, pass: r.pass })
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum Preset {
    /// A rational point exists.
    AlgebraicallyClosed,
    /// Only even-degree points.
    AnisotropicQuadric,
}

impl From<Preset> for PointPreset {
    fn from(p: Preset) -> Self {
        match p {
            Preset::AlgebraicallyClosed => PointPreset::AlgebraicallyClosed,
            Preset::AnisotropicQuadric => PointPreset::AnisotropicQuadric,
        }
    }
}

pub fn ideal(points: Option<Vec<u64>>, preset: Option<Preset>, q: u64) -> Result<ObstructionIdeal, Failure> {
    let degrees = match (points, preset) {
        (Some(p), None) => p,
        (None, Some(p)) => PointPreset::from(p).degrees(),
        (None, None) => Vec::new(),
        (Some(_), Some(_)) => return Err(Failure::Input("give --points or --preset, not both".into())),
    };
    Ok(obstruction_ideal(&degrees, q)?)
}

pub enum TargetT {
    Given(u64),
    Of(VarietyDescriptor),
}

pub fn degree_formula(
    y: &VarietyDescriptor,
    target: TargetT,
    deg_f: &BigInt,
    ideal: ObstructionIdeal,
    q: u64,
    t: u32,
) -> CmdResult {
    charnum_core::charnum::check_prime(q)?;
    let x_t = match target {
        TargetT::Given(r) => Residue::from_i64(r as i64, q),
        TargetT::Of(x) => t_number(&x, q, t)?,
    };
    let v = degree_formula_check(y, x_t, deg_f, ideal, q, t)?;
    let table = key_values(&[
        ("source", y.to_string()),
        ("t(source)", v.lhs.to_string()),
        ("deg f * t(target)", v.rhs.to_string()),
        ("ideal", if v.ideal.full { "everything".into() } else { "zero".into() }),
        ("status", to_json(&v.status).as_str().unwrap().to_string()),
    ]);
    Ok(Outcome { json: to_json(&v), table, pass: true })
}

pub fn quadric(m: u32, target: Option<(u64, ObstructionIdeal)>) -> CmdResult {
    let r = quadric_report(m)?;
    let mut rows = vec![
        ("quadric", r.descriptor.to_string()),
        ("deg(Q . h^top)", r.hyperplane_degree.to_string()),
        ("s (pipeline)", r.s_top.to_string()),
        ("s (closed form)", r.closed_form.to_string()),
        ("t-number", r.t.to_string()),
    ];
    let mut json = to_json(&r);
    if let Some((dim_x, ideal)) = target {
        let dim_q = (1u64 << m) - 1;
        let verdict = hoffmann_verdict(dim_q, dim_x, ideal)?;
        let text = match &verdict {
            charnum_core::HoffmannVerdict::MorphismImpossible { threshold } => {
                format!("no rational map Q -> X (dim X < {threshold})")
            }
            charnum_core::HoffmannVerdict::ReverseMapExists { threshold } => {
                format!("a rational map Q -> X forces one X -> Q (dim X = {threshold}, Springer)")
            }
            charnum_core::HoffmannVerdict::Inconclusive { reason } => format!("inconclusive: {reason}"),
        };
        rows.push(("verdict", text));
        json["verdict"] = to_json(&verdict);
    }
    Ok(Outcome { json, table: key_values(&rows), pass: true })
}

pub fn oracle(n: u32, palette: &[i64], max_roots: usize, max_weight: u32) -> CmdResult {
    if max_weight > n {
        return Err(Failure::Input(format!("weight {max_weight} exceeds dim P^{n}")));
    }
    let ring = AmbientSpace::new(vec![n]).map_err(|e| Failure::Input(e.to_string()))?.ring();
    let bundles = palette_bundles(&ring, palette, max_roots);
    let r = oracle_sweep(&bundles, max_weight)?;
    let per_bundle = r.rows.len() / bundles.len().max(1);
    let rows: Vec<Vec<String>> = r
        .rows
        .chunks(per_bundle.max(1))
        .map(|chunk| {
            let failed: Vec<String> = chunk.iter().filter(|x| !x.pass).map(|x| x.alpha.to_string()).collect();
            vec![
                chunk[0].roots.join(", "),
                format!("{}/{}", chunk.len() - failed.len(), chunk.len()),
                if failed.is_empty() { "pass".into() } else { failed.join(" ") },
            ]
        })
        .collect();
    let table = format!("P^{n}, weights 1..={max_weight}, {} bundles\n", bundles.len())
        + &grid(&["roots", "agree", "status"], &rows);
    Ok(Outcome { json: to_json(&r), table, pass: r.pass })
}
