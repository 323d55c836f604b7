//! Characteristic numbers of complete intersections: `s_α` degrees, the
//! Hurewicz vector, the mod-`q` invariant `t_n`, and the λ-family of
//! rational combinations for surfaces at `q = 3`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bundles::{evaluate_elementary, negate, s_alpha_class, tangent_class};
use crate::chow::{degree_of_class, degree_of_variety, AmbientSpace, VarietyDescriptor};
use crate::error::{Error, Result};
use crate::poly::{rat, ratio, Rational};
use crate::symfunc::{enumerate_alpha, AlphaTuple, ElementaryExpander};

/// Element of `Z/q`, normalized into `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: &BigInt, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let r = value.mod_floor(&BigInt::from(modulus));
        Residue { value: u64::try_from(r).expect("residue below modulus"), modulus }
    }

    pub fn from_i64(value: i64, modulus: u64) -> Self {
        Self::new(&BigInt::from(value), modulus)
    }

    pub fn zero(modulus: u64) -> Self {
        Residue { value: 0, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Residue::new(&(k * BigInt::from(self.value)), self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

pub fn check_prime(q: u64) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

/// `q^t − 1`, or `None` if it overflows (no variety has that dimension).
pub fn critical_dimension(q: u64, t: u32) -> Option<u64> {
    q.checked_pow(t).map(|x| x - 1)
}

fn integral(value: Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::Internal(format!("{} = {value} is not an integer", what())))
    }
}

/// `deg s_α(T_X)`.
pub fn s_number(x: &VarietyDescriptor, alpha: &AlphaTuple) -> Result<BigInt> {
    if alpha.weighted_degree() != x.dim() {
        return Err(Error::Contract(format!(
            "{alpha} has weighted degree {}, but {x} has dimension {}",
            alpha.weighted_degree(),
            x.dim()
        )));
    }
    let class = s_alpha_class(&tangent_class(x), alpha)?;
    integral(degree_of_class(&class, x)?, || format!("deg s_{alpha}(T) on {x}"))
}

/// `deg s_n(T_X)` for a degree-`d` hypersurface `X ⊂ P^{n+1}`, in closed
/// form: `((n+2) − d^n) · d`.
pub fn hypersurface_s_top(n: u32, d: u32) -> BigInt {
    let d = BigInt::from(d);
    (BigInt::from(n + 2) - d.pow(n)) * d
}

/// Integers `deg s_α(−T_X)` for every `α` of weighted degree `dim X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurewiczVector {
    pub dimension: u32,
    pub entries: BTreeMap<AlphaTuple, BigInt>,
}

impl HurewiczVector {
    pub fn get(&self, alpha: &AlphaTuple) -> Option<&BigInt> {
        self.entries.get(alpha)
    }

    /// Entries in [`enumerate_alpha`] order.
    pub fn ordered(&self) -> Vec<(AlphaTuple, BigInt)> {
        enumerate_alpha(self.dimension)
            .into_iter()
            .map(|a| {
                let v = self.entries[&a].clone();
                (a, v)
            })
            .collect()
    }
}

impl Serialize for HurewiczVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            alpha: &'a AlphaTuple,
            #[serde(with = "crate::serde_big")]
            value: &'a BigInt,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            dimension: u32,
            entries: Vec<Entry<'a>>,
        }
        let order = enumerate_alpha(self.dimension);
        let entries = order
            .iter()
            .filter_map(|a| self.entries.get_key_value(a))
            .map(|(alpha, value)| Entry { alpha, value })
            .collect();
        Out { dimension: self.dimension, entries }.serialize(s)
    }
}

pub fn hurewicz_vector(x: &VarietyDescriptor) -> Result<HurewiczVector> {
    let n = x.dim();
    let minus_tangent = negate(&tangent_class(x));
    let mut expander = ElementaryExpander::new(n);
    let mut entries = BTreeMap::new();
    for alpha in enumerate_alpha(n) {
        let f = crate::symfunc::SymPoly {
            basis: crate::symfunc::Basis::Elementary,
            body: expander.expand(&alpha)?,
        };
        let class = evaluate_elementary(&minus_tangent, &f)?;
        let value = integral(degree_of_class(&class, x)?, || format!("deg s_{alpha}(-T) on {x}"))?;
        entries.insert(alpha, value);
    }
    Ok(HurewiczVector { dimension: n, entries })
}

/// Which branch of the case split produced a `t` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TCase {
    /// `dim X = 0`: `deg X`.
    Points,
    /// `dim X = q^t − 1`: `−(1/q) deg s_{q^t−1}(T_X)`.
    Critical,
    /// Any other dimension.
    Vanishing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TNumber {
    pub case: TCase,
    /// `deg s_{q^t−1}(T_X)` in the critical case.
    #[serde(with = "crate::serde_big::option")]
    pub s_value: Option<BigInt>,
    /// Exact integer before reduction.
    #[serde(with = "crate::serde_big")]
    pub value: BigInt,
    pub residue: Residue,
}

/// `t_n(X)` with the intermediate integers kept.
pub fn t_number_detail(x: &VarietyDescriptor, q: u64, t: u32) -> Result<TNumber> {
    check_prime(q)?;
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let dim = x.dim() as u64;
    if dim == 0 {
        let value = degree_of_variety(x)?;
        let residue = Residue::new(&value, q);
        return Ok(TNumber { case: TCase::Points, s_value: None, value, residue });
    }
    if critical_dimension(q, t) != Some(dim) {
        return Ok(TNumber {
            case: TCase::Vanishing,
            s_value: None,
            value: BigInt::zero(),
            residue: Residue::zero(q),
        });
    }
    let s = s_number(x, &AlphaTuple::single_row(x.dim()))?;
    let (quot, rem) = s.div_rem(&BigInt::from(q));
    if !rem.is_zero() {
        return Err(Error::DivisibilityViolation { value: s, modulus: q });
    }
    let value = -quot;
    let residue = Residue::new(&value, q);
    Ok(TNumber { case: TCase::Critical, s_value: Some(s), value, residue })
}

pub fn t_number(x: &VarietyDescriptor, q: u64, t: u32) -> Result<Residue> {
    Ok(t_number_detail(x, q, t)?.residue)
}

/// `S = deg s_{(0,1)}(T_X)` and `C = deg(s_{(1)}(T_X)² − s_{(2)}(T_X))` of
/// a surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceNumbers {
    #[serde(with = "crate::serde_big")]
    pub s: BigInt,
    #[serde(with = "crate::serde_big")]
    pub c: BigInt,
}

pub fn surface_numbers(x: &VarietyDescriptor) -> Result<SurfaceNumbers> {
    if x.dim() != 2 {
        return Err(Error::Contract(format!("{x} is not a surface")));
    }
    let tangent = tangent_class(x);
    let s = s_number(x, &AlphaTuple::new(vec![0, 1]))?;
    let s1 = s_alpha_class(&tangent, &AlphaTuple::new(vec![1]))?;
    let s2 = s_alpha_class(&tangent, &AlphaTuple::new(vec![2]))?;
    let class = s1.mul(&s1)?.sub(&s2)?;
    let c = integral(degree_of_class(&class, x)?, || format!("deg(s_1^2 - s_2) on {x}"))?;
    Ok(SurfaceNumbers { s, c })
}

/// `−(1/3 − λ/2) S + (λ/4) C`, exactly.
pub fn e1_expression(n: &SurfaceNumbers, lambda: i64) -> Rational {
    let lam = rat(lambda);
    -(ratio(1, 3) - &lam / rat(2)) * rat(n.s.clone()) + (&lam / rat(4)) * rat(n.c.clone())
}

pub fn surface_e1_value(x: &VarietyDescriptor, lambda: i64) -> Result<Rational> {
    Ok(e1_expression(&surface_numbers(x)?, lambda))
}

/// The surface number reduced mod 3; fails loudly if it is not an integer.
pub fn surface_e1_number(x: &VarietyDescriptor, lambda: i64) -> Result<Residue> {
    let value = surface_e1_value(x, lambda)?;
    if !value.is_integer() {
        return Err(Error::NonIntegral { value });
    }
    Ok(Residue::new(&value.to_integer(), 3))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaEntry {
    pub lambda: i64,
    /// Exact rational, as text.
    pub value: String,
    pub integral: bool,
    pub residue: Option<Residue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    pub descriptor: VarietyDescriptor,
    #[serde(with = "crate::serde_big")]
    pub s: BigInt,
    #[serde(with = "crate::serde_big")]
    pub c: BigInt,
    pub entries: Vec<LambdaEntry>,
    /// `3 | S` and `4 | 2S + C`.
    pub divisibility_form: bool,
    pub pass: bool,
}

pub fn lambda_integrality(x: &VarietyDescriptor, lambdas: &[i64]) -> Result<LambdaReport> {
    let numbers = surface_numbers(x)?;
    let entries: Vec<LambdaEntry> = lambdas
        .iter()
        .map(|&lambda| {
            let v = e1_expression(&numbers, lambda);
            let integral = v.is_integer();
            LambdaEntry {
                lambda,
                value: v.to_string(),
                integral,
                residue: integral.then(|| Residue::new(&v.to_integer(), 3)),
            }
        })
        .collect();
    let divisibility_form = (&numbers.s % 3u32).is_zero()
        && ((BigInt::from(2) * &numbers.s + &numbers.c) % 4u32).is_zero();
    let pass = entries.iter().all(|e| e.integral);
    Ok(LambdaReport {
        descriptor: x.clone(),
        s: numbers.s,
        c: numbers.c,
        entries,
        divisibility_form,
        pass,
    })
}

/// One line of machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub descriptor: VarietyDescriptor,
    pub alpha: Option<AlphaTuple>,
    pub value: String,
    pub modulus: Option<u64>,
    pub residue: Option<u64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub q: u64,
    pub t: u32,
    pub entries: Vec<Report>,
    pub pass: bool,
}

/// `deg s_{q^t−1}(T_X)` and its `q`-divisibility for every member.
pub fn divisibility_sweep(family: &[VarietyDescriptor], q: u64, t: u32) -> Result<DivisibilityReport> {
    check_prime(q)?;
    let n = critical_dimension(q, t)
        .ok_or_else(|| Error::Precondition(format!("{q}^{t} - 1 overflows")))?;
    if let Some(bad) = family.iter().find(|x| x.dim() as u64 != n) {
        return Err(Error::Precondition(format!("{bad} does not have dimension {n}")));
    }
    let mut members = family.to_vec();
    members.sort();
    members.dedup();
    let alpha = AlphaTuple::single_row(n as u32);
    let entries = members
        .par_iter()
        .map(|x| {
            let s = s_number(x, &alpha)?;
            let residue = Residue::new(&s, q);
            Ok(Report {
                descriptor: x.clone(),
                alpha: Some(alpha.clone()),
                value: s.to_string(),
                modulus: Some(q),
                residue: Some(residue.value()),
                pass: residue.value() == 0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = entries.iter().all(|e| e.pass);
    Ok(DivisibilityReport { q, t, entries, pass })
}

/// Complete intersections in `P^N`, `N ≤ 6`, each degree at most 5, at most
/// two equations, of dimension `dim`.
pub fn default_family(dim: u32) -> Vec<VarietyDescriptor> {
    let mut out: Vec<VarietyDescriptor> = (1..=6)
        .flat_map(|n| VarietyDescriptor::family(&AmbientSpace::projective(n), 5, 2, Some(dim)))
        .collect();
    out.sort();
    out
}

/// Surfaces with entries at most 5 and at most two equations in `P^3`,
/// `P^4` and `P^2 × P^1`.
pub fn surface_family() -> Vec<VarietyDescriptor> {
    let ambients = [vec![3], vec![4], vec![2, 1]];
    let mut out: Vec<VarietyDescriptor> = ambients
        .into_iter()
        .flat_map(|f| VarietyDescriptor::family(&AmbientSpace::new(f).unwrap(), 5, 2, Some(2)))
        .collect();
    out.sort();
    out
}
