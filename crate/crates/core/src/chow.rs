//! Chow rings of products of projective spaces and complete intersections
//! inside them.
//!
//! `CH*(P^{n_1} × ⋯ × P^{n_k}) ⊗ Q = Q[h_1..h_k] / (h_i^{n_i+1})`. A
//! complete intersection is never presented as its own quotient ring: its
//! classes are ambient classes, and the degree of a top class is read off
//! after multiplying by the hypersurface classes `Σ_i d_{r,i} h_i`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rat, GradedPoly, PolyRing, Rational, Variable};

/// `P^{n_1} × ⋯ × P^{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct AmbientSpace {
    factors: Vec<u32>,
}

impl TryFrom<Vec<u32>> for AmbientSpace {
    type Error = Error;

    fn try_from(factors: Vec<u32>) -> Result<Self> {
        AmbientSpace::new(factors)
    }
}

impl From<AmbientSpace> for Vec<u32> {
    fn from(a: AmbientSpace) -> Self {
        a.factors
    }
}

impl AmbientSpace {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDescriptor("ambient needs at least one factor".into()));
        }
        if factors.contains(&0) {
            return Err(Error::InvalidDescriptor("projective factors must have dimension ≥ 1".into()));
        }
        Ok(AmbientSpace { factors })
    }

    pub fn projective(n: u32) -> Self {
        AmbientSpace::new(vec![n]).expect("n ≥ 1")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().sum()
    }

    pub fn ring(&self) -> ChowRing {
        ChowRing::new(self.clone())
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "P{n}")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ChowRingInner {
    ambient: AmbientSpace,
    poly: Arc<PolyRing>,
}

/// Handle on `CH*(ambient) ⊗ Q`; cheap to clone.
#[derive(Debug, Clone)]
pub struct ChowRing(Arc<ChowRingInner>);

impl PartialEq for ChowRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ChowRing {}

impl ChowRing {
    pub fn new(ambient: AmbientSpace) -> Self {
        let k = ambient.factors.len();
        let vars = ambient
            .factors
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let name = if k == 1 { "h".to_string() } else { format!("h{}", i + 1) };
                Variable::new(name, 1).with_cap(n)
            })
            .collect();
        let poly = PolyRing::new(vars, ambient.dim());
        ChowRing(Arc::new(ChowRingInner { ambient, poly }))
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.0.ambient
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.0.poly
    }

    pub fn top_degree(&self) -> u32 {
        self.0.ambient.dim()
    }

    pub fn zero(&self) -> ChowClass {
        self.wrap(GradedPoly::zero(&self.0.poly))
    }

    pub fn one(&self) -> ChowClass {
        self.wrap(GradedPoly::one(&self.0.poly))
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> ChowClass {
        self.wrap(GradedPoly::constant(&self.0.poly, rat(c)))
    }

    /// Pullback of the hyperplane class of factor `i`.
    pub fn hyperplane(&self, i: usize) -> ChowClass {
        self.wrap(GradedPoly::var(&self.0.poly, i))
    }

    /// `Σ_i d_i h_i`, the class of a hypersurface of multidegree `d`.
    pub fn divisor(&self, multidegree: &[u32]) -> ChowClass {
        assert_eq!(multidegree.len(), self.0.ambient.factors.len(), "multidegree length");
        let n = multidegree.len();
        let body = GradedPoly::from_terms(
            &self.0.poly,
            multidegree.iter().enumerate().map(|(i, &d)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, rat(d))
            }),
        );
        self.wrap(body)
    }

    /// `c · h^exps`.
    pub fn monomial(&self, exps: &[u32], c: impl Into<BigInt>) -> ChowClass {
        self.wrap(GradedPoly::monomial(&self.0.poly, exps.to_vec(), rat(c)))
    }

    /// The point class `h_1^{n_1} ⋯ h_k^{n_k}`.
    pub fn point_class(&self) -> ChowClass {
        self.monomial(&self.0.ambient.factors.clone(), 1)
    }

    pub fn from_poly(&self, body: GradedPoly) -> Result<ChowClass> {
        if **body.ring() != *self.0.poly {
            return Err(Error::RingMismatch);
        }
        Ok(self.wrap(body))
    }

    fn wrap(&self, body: GradedPoly) -> ChowClass {
        ChowClass { ring: self.clone(), body }
    }
}

/// Rational class in the Chow ring of an ambient product of projective
/// spaces, graded by codimension.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    ring: ChowRing,
    body: GradedPoly,
}

impl ChowClass {
    pub fn ring(&self) -> &ChowRing {
        &self.ring
    }

    pub fn ambient(&self) -> &AmbientSpace {
        self.ring.ambient()
    }

    pub fn body(&self) -> &GradedPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.wrap(self.body.add(&other.body)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.wrap(self.body.sub(&other.body)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.wrap(self.body.mul(&other.body)?))
    }

    pub fn neg(&self) -> Self {
        self.ring.wrap(self.body.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.ring.wrap(self.body.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        self.ring.wrap(self.body.pow(k))
    }

    pub fn invert_unit(&self) -> Result<Self> {
        Ok(self.ring.wrap(self.body.invert_unit()?))
    }

    /// Codimension-`d` component.
    pub fn part(&self, d: u32) -> Self {
        self.ring.wrap(self.body.homogeneous_part(d))
    }

    pub fn constant_term(&self) -> Rational {
        self.body.constant_term()
    }

    pub fn is_pure_codim(&self, d: u32) -> bool {
        self.body.is_homogeneous_of(d)
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.body.coefficient(exps)
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in CH*({})", self.body, self.ring.ambient())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.body, f)
    }
}

/// Complete intersection of hypersurfaces of the given multidegrees.
/// Smoothness (genericity) is assumed, not checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor")]
pub struct VarietyDescriptor {
    ambient: AmbientSpace,
    multidegrees: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawDescriptor {
    ambient: AmbientSpace,
    multidegrees: Vec<Vec<u32>>,
}

impl TryFrom<RawDescriptor> for VarietyDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        VarietyDescriptor::new(raw.ambient, raw.multidegrees)
    }
}

impl VarietyDescriptor {
    pub fn new(ambient: AmbientSpace, multidegrees: Vec<Vec<u32>>) -> Result<Self> {
        let k = ambient.factors.len();
        for d in &multidegrees {
            if d.len() != k {
                return Err(Error::InvalidDescriptor(format!(
                    "multidegree {d:?} has {} entries, ambient {ambient} has {k} factors",
                    d.len()
                )));
            }
            if d.iter().all(|&x| x == 0) {
                return Err(Error::InvalidDescriptor("multidegree vectors must be nonzero".into()));
            }
        }
        if multidegrees.len() as u32 > ambient.dim() {
            return Err(Error::InvalidDescriptor(format!(
                "{} hypersurfaces in {ambient} leave negative dimension",
                multidegrees.len()
            )));
        }
        Ok(VarietyDescriptor { ambient, multidegrees })
    }

    /// The ambient space itself.
    pub fn whole(ambient: AmbientSpace) -> Self {
        VarietyDescriptor { ambient, multidegrees: Vec::new() }
    }

    /// Hypersurface of degree `d` in `P^{n+1}` (dimension `n`).
    pub fn hypersurface(n: u32, d: u32) -> Self {
        Self::new(AmbientSpace::projective(n + 1), vec![vec![d]]).expect("valid hypersurface")
    }

    /// Complete intersection of single-factor degrees in `P^n`.
    pub fn in_projective(n: u32, degrees: &[u32]) -> Result<Self> {
        Self::new(AmbientSpace::projective(n), degrees.iter().map(|&d| vec![d]).collect())
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn multidegrees(&self) -> &[Vec<u32>] {
        &self.multidegrees
    }

    pub fn dim(&self) -> u32 {
        self.ambient.dim() - self.multidegrees.len() as u32
    }

    pub fn ring(&self) -> ChowRing {
        self.ambient.ring()
    }

    /// `X × Y` inside the product of the ambients.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.ambient.factors.clone();
        factors.extend_from_slice(&other.ambient.factors);
        let (ka, kb) = (self.ambient.factors.len(), other.ambient.factors.len());
        let mut multidegrees = Vec::new();
        for d in &self.multidegrees {
            let mut v = d.clone();
            v.resize(ka + kb, 0);
            multidegrees.push(v);
        }
        for d in &other.multidegrees {
            let mut v = vec![0; ka];
            v.extend_from_slice(d);
            multidegrees.push(v);
        }
        VarietyDescriptor { ambient: AmbientSpace { factors }, multidegrees }
    }

    /// Every complete intersection in `ambient` with at most
    /// `max_hypersurfaces` equations, each multidegree entry at most
    /// `max_degree`, and dimension `dim` when given. Equations are taken as
    /// an unordered multiset; output is sorted.
    pub fn family(
        ambient: &AmbientSpace,
        max_degree: u32,
        max_hypersurfaces: usize,
        dim: Option<u32>,
    ) -> Vec<Self> {
        let k = ambient.factors.len();
        let mut vectors: Vec<Vec<u32>> = Vec::new();
        let mut cur = vec![0u32; k];
        loop {
            if cur.iter().any(|&x| x > 0) {
                vectors.push(cur.clone());
            }
            let Some(i) = (0..k).rev().find(|&i| cur[i] < max_degree) else {
                break;
            };
            cur[i] += 1;
            for x in cur.iter_mut().skip(i + 1) {
                *x = 0;
            }
        }
        let mut out = Vec::new();
        fn choose(
            vectors: &[Vec<u32>],
            start: usize,
            left: usize,
            cur: &mut Vec<Vec<u32>>,
            ambient: &AmbientSpace,
            dim: Option<u32>,
            out: &mut Vec<VarietyDescriptor>,
        ) {
            if let Ok(x) = VarietyDescriptor::new(ambient.clone(), cur.clone()) {
                if dim.is_none_or(|d| x.dim() == d) {
                    out.push(x);
                }
            }
            if left == 0 {
                return;
            }
            for i in start..vectors.len() {
                cur.push(vectors[i].clone());
                choose(vectors, i, left - 1, cur, ambient, dim, out);
                cur.pop();
            }
        }
        choose(&vectors, 0, max_hypersurfaces, &mut Vec::new(), ambient, dim, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ambient)?;
        if !self.multidegrees.is_empty() {
            write!(f, " cut by ")?;
            for (i, d) in self.multidegrees.iter().enumerate() {
                if i > 0 {
                    write!(f, ";")?;
                }
                let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))?;
            }
        }
        Ok(())
    }
}

/// Degree of a class of codimension `dim X` on `X`: intersect with the
/// hypersurface classes and read the coefficient of the ambient point class.
pub fn degree_of_class(c: &ChowClass, x: &VarietyDescriptor) -> Result<Rational> {
    if c.ambient() != x.ambient() {
        return Err(Error::RingMismatch);
    }
    if !c.is_pure_codim(x.dim()) {
        return Err(Error::Contract(format!(
            "degree needs a class of pure codimension {} on {x}, got {c}",
            x.dim()
        )));
    }
    let ring = c.ring();
    let mut acc = c.clone();
    for d in &x.multidegrees {
        acc = acc.mul(&ring.divisor(d))?;
    }
    Ok(acc.coefficient(x.ambient.factors()))
}

/// `deg X`: the number of points of a zero-dimensional `X`, or the degree of
/// the fundamental class paired with the point class otherwise.
pub fn degree_of_variety(x: &VarietyDescriptor) -> Result<BigInt> {
    let ring = x.ring();
    let mut acc = ring.one();
    for d in &x.multidegrees {
        acc = acc.mul(&ring.divisor(d))?;
    }
    let total = acc.coefficient(x.ambient.factors());
    if !total.is_integer() {
        return Err(Error::Internal(format!("non-integral degree {total}")));
    }
    Ok(total.to_integer())
}

/// Exterior product `pr_1^* a · pr_2^* b` on the product of the ambients.
pub fn exterior_product(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    let mut factors = a.ambient().factors().to_vec();
    factors.extend_from_slice(b.ambient().factors());
    let ring = AmbientSpace::new(factors)?.ring();
    let ka = a.ambient().factors().len();
    let n = ring.poly_ring().nvars();
    let lift = |c: &ChowClass, offset: usize| {
        GradedPoly::from_terms(
            ring.poly_ring(),
            c.body().terms().map(|(e, x)| {
                let mut v = vec![0; n];
                v[offset..offset + e.len()].copy_from_slice(e);
                (v, x.clone())
            }),
        )
    };
    let body = lift(a, 0).mul(&lift(b, ka))?;
    ring.from_poly(body)
}

/// Formal integral combination of closed points, each recorded as
/// `(multiplicity, [L:k])`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCycle {
    points: Vec<(i64, u64)>,
}

impl ZeroCycle {
    pub fn new(points: Vec<(i64, u64)>) -> Result<Self> {
        if points.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Precondition("extension degrees are at least 1".into()));
        }
        Ok(ZeroCycle { points })
    }

    pub fn points(&self) -> &[(i64, u64)] {
        &self.points
    }
}

/// `Σ λ_i [L_i : k]`.
pub fn zero_cycle_degree(z: &ZeroCycle) -> BigInt {
    z.points
        .iter()
        .fold(BigInt::zero(), |acc, &(m, e)| acc + BigInt::from(m) * BigInt::from(e))
}
