//! Splitting-principle oracle for `s_α`.
//!
//! For a sum of line bundles the class `s_α` is `m_α` evaluated at the
//! first Chern classes. This path uses only monomial enumeration and direct
//! substitution; it never touches the elementary-basis expansion it is
//! meant to certify.

use rayon::prelude::*;
use serde::Serialize;

use crate::bundles::{evaluate_elementary, line_bundle, whitney, TotalChernClass};
use crate::chow::{ChowClass, ChowRing};
use crate::error::{Error, Result};
use crate::poly::rat;
use crate::symfunc::{enumerate_alpha, monomial_symmetric, to_elementary, AlphaTuple, SymPoly};

/// A bundle presented by its Chern roots.
#[derive(Debug, Clone)]
pub struct SplitBundle {
    roots: Vec<ChowClass>,
}

impl SplitBundle {
    pub fn new(roots: Vec<ChowClass>) -> Result<Self> {
        let Some(first) = roots.first() else {
            return Err(Error::Precondition("a split bundle needs at least one root".into()));
        };
        let ring = first.ring().clone();
        for r in &roots {
            if r.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if !r.is_pure_codim(1) {
                return Err(Error::Contract(format!("Chern root {r} is not of codimension 1")));
            }
        }
        Ok(SplitBundle { roots })
    }

    /// Roots `c · h_factor` for each coefficient.
    pub fn from_multiples(ring: &ChowRing, factor: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| ring.hyperplane(factor).scale(&rat(c))).collect())
    }

    pub fn roots(&self) -> &[ChowClass] {
        &self.roots
    }

    pub fn ring(&self) -> &ChowRing {
        self.roots[0].ring()
    }

    /// Adds trivial roots until there are at least `n`.
    pub fn padded(&self, n: usize) -> Self {
        let mut roots = self.roots.clone();
        while roots.len() < n {
            roots.push(self.ring().zero());
        }
        SplitBundle { roots }
    }

    /// `⊕ L_i` as a total Chern class.
    pub fn total_chern_class(&self) -> TotalChernClass {
        self.roots.iter().fold(TotalChernClass::trivial(self.ring(), 0), |acc, r| {
            whitney(&acc, &line_bundle(r).expect("roots are codimension 1")).expect("same ring")
        })
    }
}

/// `m_α(root_1, …, root_z)`.
pub fn s_alpha_split(b: &SplitBundle, alpha: &AlphaTuple) -> Result<ChowClass> {
    let z = b.roots.len() as u32;
    let m = monomial_symmetric(alpha, z)?;
    let ring = b.ring();
    let images: Vec<_> = b.roots.iter().map(|r| r.body().clone()).collect();
    ring.from_poly(m.body.substitute(ring.poly_ring(), &images)?)
}

/// Whether the split evaluation and the Chern-class pipeline agree.
pub fn oracle_equivalence(b: &SplitBundle, alpha: &AlphaTuple) -> Result<bool> {
    let f = to_elementary(alpha)?;
    equivalence_with(b, alpha, &f)
}

fn equivalence_with(b: &SplitBundle, alpha: &AlphaTuple, f: &SymPoly) -> Result<bool> {
    let split = s_alpha_split(b, alpha)?;
    let pipeline = evaluate_elementary(&b.total_chern_class(), f)?;
    Ok(split == pipeline)
}

/// Every multiset of `1..=max_roots` roots drawn from `palette · h` on a
/// single projective factor.
pub fn palette_bundles(ring: &ChowRing, palette: &[i64], max_roots: usize) -> Vec<SplitBundle> {
    fn go(palette: &[i64], start: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..palette.len() {
            cur.push(palette[i]);
            go(palette, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut coeffs = Vec::new();
    go(palette, 0, max_roots, &mut Vec::new(), &mut coeffs);
    coeffs
        .iter()
        .map(|c| SplitBundle::from_multiples(ring, 0, c).expect("nonempty"))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub bundle: usize,
    pub roots: Vec<String>,
    pub alpha: AlphaTuple,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub max_weight: u32,
    pub rows: Vec<OracleRow>,
    pub pass: bool,
}

impl OracleReport {
    pub fn failures(&self) -> impl Iterator<Item = &OracleRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Checks every `α` of weighted degree `1..=max_weight` on every bundle,
/// padding with trivial roots where `α` needs more roots than given.
pub fn oracle_sweep(bundles: &[SplitBundle], max_weight: u32) -> Result<OracleReport> {
    let alphas: Vec<AlphaTuple> = (1..=max_weight).flat_map(enumerate_alpha).collect();
    let expansions = alphas.iter().map(to_elementary).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..bundles.len())
        .flat_map(|b| (0..alphas.len()).map(move |a| (b, a)))
        .collect();
    let rows = pairs
        .par_iter()
        .map(|&(bi, ai)| {
            let alpha = &alphas[ai];
            let b = bundles[bi].padded(alpha.num_parts() as usize);
            let pass = equivalence_with(&b, alpha, &expansions[ai])?;
            Ok(OracleRow {
                bundle: bi,
                roots: bundles[bi].roots.iter().map(|r| r.to_string()).collect(),
                alpha: alpha.clone(),
                pass,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.pass);
    Ok(OracleReport { max_weight, rows, pass })
}
