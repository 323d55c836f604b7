//! Exact graded polynomial arithmetic over the rationals.
//!
//! A [`PolyRing`] fixes an ordered list of weighted variables and a
//! truncation degree; every [`GradedPoly`] produced inside that ring drops
//! terms whose weighted degree exceeds the truncation. A variable may also
//! carry an exponent cap, which is how the relations `h^(n+1) = 0` of a
//! projective-space Chow ring are enforced.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds an integral [`Rational`].
pub fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds `n / d`; panics if `d == 0`.
pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
    /// Largest exponent that survives multiplication; `None` means unbounded.
    pub cap: Option<u32>,
}

impl Variable {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        assert!(weight >= 1, "variable weights must be positive");
        Variable { name: name.into(), weight, cap: None }
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = Some(cap);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<Variable>,
    truncation: u32,
}

impl PolyRing {
    pub fn new(vars: Vec<Variable>, truncation: u32) -> Arc<Self> {
        Arc::new(PolyRing { vars, truncation })
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.vars).map(|(e, v)| e * v.weight).sum()
    }

    /// Whether a monomial survives truncation and the exponent caps.
    pub fn admits(&self, exps: &[u32]) -> bool {
        self.weighted_degree(exps) <= self.truncation
            && exps
                .iter()
                .zip(&self.vars)
                .all(|(e, v)| v.cap.is_none_or(|c| *e <= c))
    }
}

/// Sparse polynomial keyed by exponent vectors.
#[derive(Clone)]
pub struct GradedPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GradedPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        GradedPoly { ring: Arc::clone(ring), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::monomial(ring, vec![0; ring.nvars()], c)
    }

    /// `c * x^exps`, or zero if the monomial is truncated away.
    pub fn monomial(ring: &Arc<PolyRing>, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
        let mut p = Self::zero(ring);
        if !c.is_zero() && ring.admits(&exps) {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The `i`-th variable of the ring.
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut exps = vec![0; ring.nvars()];
        exps[i] = 1;
        Self::monomial(ring, exps, Rational::one())
    }

    /// Collects terms, summing duplicates and dropping anything the ring
    /// does not admit.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (exps, c) in terms {
            assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
            if ring.admits(&exps) {
                p.add_term(exps, c);
            }
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.ring.nvars()])
    }

    /// The weighted-degree-`d` component.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.ring.weighted_degree(e) == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        GradedPoly { ring: Arc::clone(&self.ring), terms }
    }

    /// `Some(d)` when every term has weighted degree `d`; zero is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| self.ring.weighted_degree(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| self.ring.weighted_degree(e) == d)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        GradedPoly { ring: Arc::clone(&self.ring), terms }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let ring = &self.ring;
        let n = ring.nvars();
        let mut out = Self::zero(ring);
        let mut buf = vec![0u32; n];
        for (ea, ca) in &self.terms {
            let da = ring.weighted_degree(ea);
            for (eb, cb) in &other.terms {
                if da + ring.weighted_degree(eb) > ring.truncation {
                    continue;
                }
                for i in 0..n {
                    buf[i] = ea[i] + eb[i];
                }
                if ring.admits(&buf) {
                    out.add_term(buf.clone(), ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Multiplicative inverse up to the truncation degree.
    ///
    /// Writes `a = c (1 + n)` with `n` of positive degree and sums the
    /// geometric series in `-n`, which terminates because `n` is nilpotent
    /// modulo truncation.
    pub fn invert_unit(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv_c = c.recip();
        let mut neg_tail = self.scale(&inv_c);
        neg_tail.terms.remove(&vec![0; self.ring.nvars()]);
        let neg_tail = neg_tail.neg();
        if neg_tail.is_zero() {
            return Ok(Self::constant(&self.ring, inv_c));
        }
        let min_weight = self.ring.vars.iter().map(|v| v.weight).min().unwrap_or(1);
        let steps = self.ring.truncation / min_weight;
        let mut sum = Self::one(&self.ring);
        let mut power = Self::one(&self.ring);
        for _ in 0..steps {
            power = power.mul(&neg_tail)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum.scale(&inv_c))
    }

    /// Evaluates `self` at `x_i -> images[i]`, all images living in one
    /// target ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[GradedPoly]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Precondition(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        if images.iter().any(|p| !same_ring(&p.ring, target)) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<GradedPoly>> = images
            .iter()
            .map(|p| vec![GradedPoly::one(target), p.clone()])
            .collect();
        let mut out = GradedPoly::zero(target);
        for (exps, c) in &self.terms {
            let mut term = GradedPoly::constant(target, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize])?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Lowest degree first reads naturally for truncated series.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (self.ring.weighted_degree(e), std::cmp::Reverse((*e).clone())));
        for (k, (exps, c)) in terms.into_iter().enumerate() {
            let is_const = exps.iter().all(|&e| e == 0);
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            let mut first = is_const || !mag.is_one();
            for (v, &e) in self.ring.vars.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if first {
                    write!(f, "*")?;
                }
                first = true;
                write!(f, "{}", v.name)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
