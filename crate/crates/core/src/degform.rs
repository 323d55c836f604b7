//! Degree-formula verdicts: `t_n(Y) ≡ deg(f) · t_n(X)` in `(Z/q) / I(X, q)`.
//!
//! `I(X, q)` is generated by the residues of `[k(x):k]` over closed points
//! `x`. Since `Z/q` is a field it is either zero or everything, and the
//! congruence only has content in the first case.

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::charnum::{check_prime, critical_dimension, hypersurface_s_top, t_number_detail, Residue, TCase};
use crate::chow::{degree_of_class, VarietyDescriptor};
use crate::error::{Error, Result};
use crate::poly::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ObstructionIdeal {
    pub modulus: u64,
    /// `true` iff the ideal is all of `Z/q`.
    pub full: bool,
}

impl ObstructionIdeal {
    pub fn zero(q: u64) -> Self {
        ObstructionIdeal { modulus: q, full: false }
    }

    pub fn full(q: u64) -> Self {
        ObstructionIdeal { modulus: q, full: true }
    }
}

/// Ideal generated by the given closed-point degrees.
pub fn obstruction_ideal(point_degrees: &[u64], q: u64) -> Result<ObstructionIdeal> {
    check_prime(q)?;
    if point_degrees.contains(&0) {
        return Err(Error::Precondition("closed-point degrees are positive".into()));
    }
    Ok(ObstructionIdeal { modulus: q, full: point_degrees.iter().any(|d| d % q != 0) })
}

/// Canned closed-point data, since points cannot be read off a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointPreset {
    /// A rational point exists.
    AlgebraicallyClosed,
    /// Only even-degree points, as for an anisotropic quadric at `q = 2`.
    AnisotropicQuadric,
}

impl PointPreset {
    pub fn degrees(self) -> Vec<u64> {
        match self {
            PointPreset::AlgebraicallyClosed => vec![1],
            PointPreset::AnisotropicQuadric => vec![2, 4],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    /// The quotient ring is zero, or the dimension is not critical.
    HoldsTrivially,
    Holds,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeFormulaVerdict {
    pub lhs: Residue,
    pub rhs: Residue,
    pub ideal: ObstructionIdeal,
    pub status: VerdictStatus,
}

impl Serialize for DegreeFormulaVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DegreeFormulaVerdict", 5)?;
        st.serialize_field("lhs", &self.lhs.value())?;
        st.serialize_field("rhs", &self.rhs.value())?;
        st.serialize_field("q", &self.ideal.modulus)?;
        st.serialize_field("ideal_full", &self.ideal.full)?;
        st.serialize_field("status", &self.status)?;
        st.end()
    }
}

/// Compares `t_n(Y)` with `deg_f · x_t` for a hypothetical rational map
/// `Y ⇢ X`, given `t_n(X)` and `I(X, q)`.
pub fn degree_formula_check(
    y: &VarietyDescriptor,
    x_t: Residue,
    deg_f: &BigInt,
    ideal: ObstructionIdeal,
    q: u64,
    t: u32,
) -> Result<DegreeFormulaVerdict> {
    check_prime(q)?;
    if ideal.modulus != q {
        return Err(Error::ModulusMismatch { ideal: ideal.modulus, q });
    }
    if x_t.modulus() != q {
        return Err(Error::ModulusMismatch { ideal: x_t.modulus(), q });
    }
    let lhs = t_number_detail(y, q, t)?;
    let rhs = x_t.mul_int(deg_f);
    let status = if lhs.case != TCase::Critical || ideal.full {
        VerdictStatus::HoldsTrivially
    } else if lhs.residue == rhs {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    Ok(DegreeFormulaVerdict { lhs: lhs.residue, rhs, ideal, status })
}

/// Largest `m` supported by [`quadric_t`].
pub const QUADRIC_MAX_M: u32 = 5;

/// Intermediate values of the quadric computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadricReport {
    pub m: u32,
    pub descriptor: VarietyDescriptor,
    /// `deg(Q' ∩ h^{2^m−1})`.
    #[serde(with = "crate::serde_big")]
    pub hyperplane_degree: BigInt,
    /// `deg s_{2^m−1}(T_{Q'})` through the pipeline.
    #[serde(with = "crate::serde_big")]
    pub s_top: BigInt,
    /// `2(2^m+1) − 2^{2^m}`.
    #[serde(with = "crate::serde_big")]
    pub closed_form: BigInt,
    pub t: Residue,
}

/// Runs the whole pipeline on a smooth quadric `Q' ⊂ P^{2^m}`.
pub fn quadric_report(m: u32) -> Result<QuadricReport> {
    if !(1..=QUADRIC_MAX_M).contains(&m) {
        return Err(Error::Precondition(format!("m = {m} outside 1..={QUADRIC_MAX_M}")));
    }
    let n = 1u32 << m;
    let q = VarietyDescriptor::in_projective(n, &[2])?;
    let dim = q.dim();
    let hyperplane_degree = degree_of_class(&q.ring().hyperplane(0).pow(dim), &q)?;
    let detail = t_number_detail(&q, 2, m)?;
    let s_top = detail
        .s_value
        .clone()
        .ok_or_else(|| Error::Internal("quadric dimension is not critical".into()))?;
    let closed_form = BigInt::from(2) * BigInt::from(n + 1) - BigInt::from(2).pow(n);
    debug_assert_eq!(closed_form, hypersurface_s_top(dim, 2));
    if hyperplane_degree != rat(2) {
        return Err(Error::PropertyViolation(format!("deg(Q' ∩ h^{dim}) = {hyperplane_degree}, expected 2")));
    }
    if s_top != closed_form {
        return Err(Error::PropertyViolation(format!("s_{dim}(T_Q') = {s_top}, expected {closed_form}")));
    }
    if detail.residue.value() != 1 {
        return Err(Error::PropertyViolation(format!("t_{dim}(Q') = {}, expected 1 (mod 2)", detail.residue)));
    }
    Ok(QuadricReport {
        m,
        descriptor: q,
        hyperplane_degree: hyperplane_degree.to_integer(),
        s_top,
        closed_form,
        t: detail.residue,
    })
}

/// `t_{2^m−1}(Q')` for the quadric of dimension `2^m − 1`.
pub fn quadric_t(m: u32) -> Result<Residue> {
    Ok(quadric_report(m)?.t)
}

/// `t_{2^m−1}` of the quadric from the closed form alone, for `m` past the
/// pipeline's reach: `−s/2 = 2^{2^m−1} − 2^m − 1`, which is odd for `m ≥ 1`.
fn quadric_t_parity(m: u32) -> Residue {
    debug_assert!(m >= 1);
    Residue::from_i64(1, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum HoffmannVerdict {
    /// No rational map `Q ⇢ X` exists.
    MorphismImpossible { threshold: u64 },
    /// A rational map `Q ⇢ X` forces one `X ⇢ Q` (via Springer's theorem).
    ReverseMapExists { threshold: u64 },
    Inconclusive { reason: String },
}

/// Numeric skeleton of the quadric theorem: `Q` of dimension `dim_q`, target
/// `X` of dimension `dim_x` with obstruction ideal at `q = 2`.
pub fn hoffmann_verdict(dim_q: u64, dim_x: u64, ideal_x: ObstructionIdeal) -> Result<HoffmannVerdict> {
    if ideal_x.modulus != 2 {
        return Err(Error::ModulusMismatch { ideal: ideal_x.modulus, q: 2 });
    }
    if dim_q == 0 {
        return Err(Error::Precondition("the quadric must have positive dimension".into()));
    }
    let m = 63 - (dim_q + 1).leading_zeros();
    let threshold = critical_dimension(2, m).expect("fits");
    let t = if m <= QUADRIC_MAX_M { quadric_t(m)? } else { quadric_t_parity(m) };
    if t.value() == 0 {
        return Ok(HoffmannVerdict::Inconclusive { reason: format!("t_{threshold}(Q') vanishes") });
    }
    if ideal_x.full {
        return Ok(HoffmannVerdict::Inconclusive {
            reason: "X has a point of odd degree; the obstruction ideal is everything".into(),
        });
    }
    Ok(match dim_x.cmp(&threshold) {
        std::cmp::Ordering::Less => HoffmannVerdict::MorphismImpossible { threshold },
        std::cmp::Ordering::Equal => HoffmannVerdict::ReverseMapExists { threshold },
        std::cmp::Ordering::Greater => HoffmannVerdict::Inconclusive {
            reason: format!("dim X = {dim_x} exceeds {threshold}"),
        },
    })
}
