//! Chern classes of virtual bundles built from ambient line bundles.
//!
//! Everything lives in the ambient Chow ring and is implicitly restricted to
//! the variety; pairing with the variety happens in
//! [`degree_of_class`](crate::chow::degree_of_class).

use crate::chow::{ChowClass, ChowRing, VarietyDescriptor};
use crate::error::{Error, Result};
use crate::symfunc::{to_elementary, AlphaTuple, Basis, SymPoly};

/// Total Chern class `1 + c_1 + c_2 + ⋯` together with a virtual rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalChernClass {
    unit: ChowClass,
    virtual_rank: i64,
}

impl TotalChernClass {
    pub fn new(unit: ChowClass, virtual_rank: i64) -> Result<Self> {
        if unit.constant_term() != crate::poly::rat(1) {
            return Err(Error::Contract(format!("total Chern class must start with 1, got {unit}")));
        }
        Ok(TotalChernClass { unit, virtual_rank })
    }

    /// Trivial bundle of the given rank.
    pub fn trivial(ring: &ChowRing, rank: i64) -> Self {
        TotalChernClass { unit: ring.one(), virtual_rank: rank }
    }

    pub fn unit(&self) -> &ChowClass {
        &self.unit
    }

    pub fn virtual_rank(&self) -> i64 {
        self.virtual_rank
    }

    pub fn ring(&self) -> &ChowRing {
        self.unit.ring()
    }

    /// `c_j`, the codimension-`j` part.
    pub fn chern_class(&self, j: u32) -> ChowClass {
        self.unit.part(j)
    }
}

/// Line bundle with the given first Chern class.
pub fn line_bundle(first_chern: &ChowClass) -> Result<TotalChernClass> {
    if !first_chern.is_pure_codim(1) {
        return Err(Error::Contract(format!(
            "a line bundle needs a codimension-1 first Chern class, got {first_chern}"
        )));
    }
    Ok(TotalChernClass {
        unit: first_chern.ring().one().add(first_chern)?,
        virtual_rank: 1,
    })
}

/// `O(d_1, …, d_k)` on the ambient.
pub fn twisting_sheaf(ring: &ChowRing, multidegree: &[u32]) -> TotalChernClass {
    line_bundle(&ring.divisor(multidegree)).expect("divisor classes have codimension 1")
}

/// `A ⊕ B`.
pub fn whitney(a: &TotalChernClass, b: &TotalChernClass) -> Result<TotalChernClass> {
    Ok(TotalChernClass {
        unit: a.unit.mul(&b.unit)?,
        virtual_rank: a.virtual_rank + b.virtual_rank,
    })
}

/// `A − B` in `K_0`.
pub fn virtual_difference(a: &TotalChernClass, b: &TotalChernClass) -> Result<TotalChernClass> {
    Ok(TotalChernClass {
        unit: a.unit.mul(&b.unit.invert_unit()?)?,
        virtual_rank: a.virtual_rank - b.virtual_rank,
    })
}

/// `−V`.
pub fn negate(v: &TotalChernClass) -> TotalChernClass {
    virtual_difference(&TotalChernClass::trivial(v.ring(), 0), v).expect("units invert")
}

/// `c(T_X)` from the Euler sequences of the factors and the normal bundle
/// sequence of the complete intersection:
/// `Π_i (1+h_i)^{n_i+1} · Π_r (1 + Σ_i d_{r,i} h_i)^{-1}`.
pub fn tangent_class(x: &VarietyDescriptor) -> TotalChernClass {
    let ring = x.ring();
    let mut tangent = TotalChernClass::trivial(&ring, 0);
    for (i, &n) in x.ambient().factors().iter().enumerate() {
        let o1 = line_bundle(&ring.hyperplane(i)).expect("hyperplane");
        for _ in 0..=n {
            tangent = whitney(&tangent, &o1).expect("same ring");
        }
        tangent = virtual_difference(&tangent, &TotalChernClass::trivial(&ring, 1)).expect("same ring");
    }
    for d in x.multidegrees() {
        tangent = virtual_difference(&tangent, &twisting_sheaf(&ring, d)).expect("same ring");
    }
    debug_assert_eq!(tangent.virtual_rank, x.dim() as i64);
    tangent
}

/// `s_α(V)`: `f_α` with `σ_j` replaced by `c_j(V)`.
pub fn s_alpha_class(v: &TotalChernClass, alpha: &AlphaTuple) -> Result<ChowClass> {
    let top = v.ring().top_degree();
    if alpha.weighted_degree() > top {
        return Err(Error::Precondition(format!(
            "{alpha} has weighted degree {} above the ambient dimension {top}",
            alpha.weighted_degree()
        )));
    }
    evaluate_elementary(v, &to_elementary(alpha)?)
}

/// Evaluates an elementary-basis polynomial at the Chern classes of `v`.
pub fn evaluate_elementary(v: &TotalChernClass, f: &SymPoly) -> Result<ChowClass> {
    if f.basis != Basis::Elementary {
        return Err(Error::Precondition("expected an elementary-basis polynomial".into()));
    }
    let ring = v.ring();
    let n = f.body.ring().nvars() as u32;
    let images: Vec<_> = (1..=n).map(|j| v.chern_class(j).body().clone()).collect();
    ring.from_poly(f.body.substitute(ring.poly_ring(), &images)?)
}
