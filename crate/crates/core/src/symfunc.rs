//! Symmetric polynomials: monomial symmetric functions `m_α` in formal
//! roots and their expansion in elementary symmetric functions.
//!
//! An [`AlphaTuple`] stores multiplicities: `α_j` roots appear to the power
//! `j`. So `(0,1)` is the power sum `Σ t_i²` and `(2)` is `e_2 = Σ t_i t_j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{rat, GradedPoly, PolyRing, Rational, Variable};

/// Multiplicity tuple indexing a characteristic class. Trailing zeros are
/// trimmed, so `(0,1)` and `(0,1,0)` are the same tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct AlphaTuple {
    counts: Vec<u32>,
}

impl From<Vec<u32>> for AlphaTuple {
    fn from(counts: Vec<u32>) -> Self {
        AlphaTuple::new(counts)
    }
}

impl From<AlphaTuple> for Vec<u32> {
    fn from(a: AlphaTuple) -> Self {
        a.counts
    }
}

impl AlphaTuple {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        AlphaTuple { counts }
    }

    pub fn empty() -> Self {
        AlphaTuple { counts: Vec::new() }
    }

    /// `(0,…,0,1)` with the `1` in slot `i`: the power-sum class `s_i`.
    pub fn single_row(i: u32) -> Self {
        assert!(i >= 1, "single-row tuples start at weight 1");
        let mut counts = vec![0; i as usize];
        counts[i as usize - 1] = 1;
        AlphaTuple { counts }
    }

    /// Builds the tuple from a partition (list of exponents, any order).
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut counts = Vec::new();
        for &p in parts.iter().filter(|&&p| p > 0) {
            if counts.len() < p as usize {
                counts.resize(p as usize, 0);
            }
            counts[p as usize - 1] += 1;
        }
        AlphaTuple::new(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `Σ j·α_j`.
    pub fn weighted_degree(&self) -> u32 {
        self.counts.iter().enumerate().map(|(j, &a)| (j as u32 + 1) * a).sum()
    }

    /// `Σ α_j`, the number of roots carrying a nonzero exponent.
    pub fn num_parts(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Exponents in nonincreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::with_capacity(self.num_parts() as usize);
        for (j, &a) in self.counts.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(j as u32 + 1, a as usize));
        }
        parts
    }

    pub fn is_single_row(&self) -> bool {
        self.num_parts() == 1
    }
}

impl fmt::Display for AlphaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for AlphaTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(AlphaTuple::empty());
        }
        s.split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Precondition(format!("bad alpha entry {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(AlphaTuple::new)
    }
}

/// Integer partitions of `m`, parts nonincreasing, in reverse lexicographic
/// order (`(m)` first, `(1,…,1)` last).
pub fn partitions(m: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// All tuples of weighted degree `m`, ordered lexicographically descending
/// on the count vector: `m = 2` gives `[(2), (0,1)]`.
pub fn enumerate_alpha(m: u32) -> Vec<AlphaTuple> {
    let mut out: Vec<AlphaTuple> = partitions(m).iter().map(|p| AlphaTuple::from_parts(p)).collect();
    out.sort_by(|a, b| b.counts.cmp(&a.counts));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    FormalRoots,
    Elementary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    pub basis: Basis,
    pub body: GradedPoly,
}

/// `Q[t_1..t_z]` truncated at `trunc`.
pub fn roots_ring(z: u32, trunc: u32) -> Arc<PolyRing> {
    PolyRing::new((1..=z).map(|i| Variable::new(format!("t{i}"), 1)).collect(), trunc)
}

/// `Q[σ_1..σ_n]` with `σ_j` of weight `j`, truncated at `n`.
pub fn elementary_ring(n: u32) -> Arc<PolyRing> {
    PolyRing::new((1..=n).map(|j| Variable::new(format!("s{j}"), j)).collect(), n)
}

/// Distinct permutations of `v`, starting from its sorted order.
pub(crate) fn distinct_permutations(mut v: Vec<u32>) -> Vec<Vec<u32>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// `m_α(t_1, …, t_z)`: every distinct monomial with the exponent multiset
/// of `α` (padded with zeros), each with coefficient one.
pub fn monomial_symmetric(alpha: &AlphaTuple, z: u32) -> Result<SymPoly> {
    if z < alpha.num_parts() {
        return Err(Error::Precondition(format!(
            "{z} roots cannot carry the {} nonzero exponents of {alpha}",
            alpha.num_parts()
        )));
    }
    let ring = roots_ring(z, alpha.weighted_degree());
    let mut exps = alpha.parts();
    exps.resize(z as usize, 0);
    let body = GradedPoly::from_terms(
        &ring,
        distinct_permutations(exps).into_iter().map(|e| (e, Rational::one())),
    );
    Ok(SymPoly { basis: Basis::FormalRoots, body })
}

/// `e_j(t_1..t_z)` inside `ring`, which must have at least `z` weight-one
/// variables first.
pub fn elementary_in_roots(ring: &Arc<PolyRing>, z: u32, j: u32) -> GradedPoly {
    if j > z {
        return GradedPoly::zero(ring);
    }
    let mut exps = vec![1u32; j as usize];
    exps.resize(z as usize, 0);
    GradedPoly::from_terms(
        ring,
        distinct_permutations(exps).into_iter().map(|mut e| {
            e.resize(ring.nvars(), 0);
            (e, Rational::one())
        }),
    )
}

/// Expands monomial symmetric functions of weighted degree at most `n` in
/// the elementary basis.
///
/// Power sums come from Newton's identities. A general `m_λ` with largest
/// part `k` is peeled with
///
/// `p_k · m_μ = mult_λ(k) · m_λ + Σ_v mult_ν(v+k) · m_ν`,
///
/// where `μ = λ \ {k}` and `ν` runs over `μ` with one part `v` raised to
/// `v + k`. Every `ν` has one part fewer than `λ`, so the recursion ends at
/// `m_∅ = 1`.
pub struct ElementaryExpander {
    ring: Arc<PolyRing>,
    power_sums: Vec<GradedPoly>,
    memo: HashMap<Vec<u32>, GradedPoly>,
}

impl ElementaryExpander {
    pub fn new(n: u32) -> Self {
        let ring = elementary_ring(n);
        let mut power_sums = vec![GradedPoly::zero(&ring)];
        for k in 1..=n {
            let mut p = GradedPoly::var(&ring, k as usize - 1).scale(&rat(k));
            if k % 2 == 0 {
                p = p.neg();
            }
            for i in 1..k {
                let sigma = GradedPoly::var(&ring, i as usize - 1);
                let mut term = sigma.mul(&power_sums[(k - i) as usize]).expect("same ring");
                if i % 2 == 0 {
                    term = term.neg();
                }
                p = p.add(&term).expect("same ring");
            }
            power_sums.push(p);
        }
        ElementaryExpander { ring, power_sums, memo: HashMap::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `p_k` in elementary functions.
    pub fn power_sum(&self, k: u32) -> &GradedPoly {
        &self.power_sums[k as usize]
    }

    pub fn expand(&mut self, alpha: &AlphaTuple) -> Result<GradedPoly> {
        if alpha.weighted_degree() > self.ring.truncation() {
            return Err(Error::Precondition(format!(
                "{alpha} has weight above the expander bound {}",
                self.ring.truncation()
            )));
        }
        self.monomial(&alpha.parts())
    }

    fn monomial(&mut self, parts: &[u32]) -> Result<GradedPoly> {
        if parts.is_empty() {
            return Ok(GradedPoly::one(&self.ring));
        }
        if let Some(p) = self.memo.get(parts) {
            return Ok(p.clone());
        }
        let k = parts[0];
        let rest = &parts[1..];
        let m_rest = self.monomial(rest)?;
        let mut acc = self.power_sums[k as usize].mul(&m_rest)?;
        let mut seen = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            if seen.contains(&v) {
                continue;
            }
            seen.push(v);
            let mut nu = rest.to_vec();
            nu[i] = v + k;
            nu.sort_unstable_by(|a, b| b.cmp(a));
            let mult = nu.iter().filter(|&&x| x == v + k).count();
            let m_nu = self.monomial(&nu)?;
            acc = acc.sub(&m_nu.scale(&rat(mult as u64)))?;
        }
        let mult_k = parts.iter().filter(|&&x| x == k).count();
        let out = acc.scale(&Rational::new(BigInt::one(), BigInt::from(mult_k)));
        self.memo.insert(parts.to_vec(), out.clone());
        Ok(out)
    }
}

/// `f_α`: the polynomial in `σ_1..σ_n` (`n` the weighted degree of `α`)
/// that equals `m_α` after substituting elementary symmetric functions.
pub fn to_elementary(alpha: &AlphaTuple) -> Result<SymPoly> {
    let mut ex = ElementaryExpander::new(alpha.weighted_degree());
    let body = ex.expand(alpha)?;
    Ok(SymPoly { basis: Basis::Elementary, body })
}

/// Symmetric function of homogeneous degree in the monomial basis,
/// partitions stored with parts nonincreasing.
type MonomialBasis = BTreeMap<Vec<u32>, BigInt>;

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `F · e_k` in the monomial basis.
fn times_elementary(f: &MonomialBasis, k: u32) -> MonomialBasis {
    // Candidate targets: raise k distinct positions (zeros included) by one.
    let mut targets = std::collections::BTreeSet::new();
    for lambda in f.keys() {
        let mut padded = lambda.clone();
        padded.resize(lambda.len() + k as usize, 0);
        raise_blocks(&padded, k, &mut targets);
    }
    let mut out = MonomialBasis::new();
    for nu in targets {
        let c = pull_coefficient(f, &nu, k);
        if !c.is_zero() {
            out.insert(nu, c);
        }
    }
    out
}

fn blocks(parts: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((v, n)) if *v == p => *n += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn raise_blocks(padded: &[u32], k: u32, targets: &mut std::collections::BTreeSet<Vec<u32>>) {
    let bl = blocks(padded);
    let mut choice = vec![0usize; bl.len()];
    fn rec(
        bl: &[(u32, usize)],
        idx: usize,
        left: usize,
        choice: &mut Vec<usize>,
        targets: &mut std::collections::BTreeSet<Vec<u32>>,
    ) {
        if idx == bl.len() {
            if left == 0 {
                let mut nu = Vec::new();
                for (&(v, n), &j) in bl.iter().zip(choice.iter()) {
                    nu.extend(std::iter::repeat_n(v + 1, j));
                    nu.extend(std::iter::repeat_n(v, n - j));
                }
                nu.retain(|&x| x > 0);
                nu.sort_unstable_by(|a, b| b.cmp(a));
                targets.insert(nu);
            }
            return;
        }
        for j in 0..=bl[idx].1.min(left) {
            choice[idx] = j;
            rec(bl, idx + 1, left - j, choice, targets);
        }
    }
    rec(&bl, 0, k as usize, &mut choice, targets);
}

/// Coefficient of `x^ν` in `F · e_k`: sum over `k`-subsets `S` of the
/// support of `ν` of `F(ν − 1_S)`, grouped by blocks of equal parts.
fn pull_coefficient(f: &MonomialBasis, nu: &[u32], k: u32) -> BigInt {
    let bl = blocks(nu);
    let mut total = BigInt::zero();
    let mut choice = vec![0usize; bl.len()];
    fn rec(
        f: &MonomialBasis,
        bl: &[(u32, usize)],
        idx: usize,
        left: usize,
        choice: &mut Vec<usize>,
        total: &mut BigInt,
    ) {
        if idx == bl.len() {
            if left != 0 {
                return;
            }
            let mut lambda = Vec::new();
            let mut ways = BigInt::one();
            for (&(v, n), &j) in bl.iter().zip(choice.iter()) {
                lambda.extend(std::iter::repeat_n(v - 1, j));
                lambda.extend(std::iter::repeat_n(v, n - j));
                ways *= binomial(n as u64, j as u64);
            }
            lambda.retain(|&x| x > 0);
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(c) = f.get(&lambda) {
                *total += ways * c;
            }
            return;
        }
        for j in 0..=bl[idx].1.min(left) {
            choice[idx] = j;
            rec(f, bl, idx + 1, left - j, choice, total);
        }
    }
    rec(f, &bl, 0, k as usize, &mut choice, &mut total);
    total
}

fn conjugate(parts: &[u32]) -> Vec<u32> {
    let Some(&first) = parts.first() else {
        return Vec::new();
    };
    (1..=first).map(|i| parts.iter().filter(|&&p| p >= i).count() as u32).collect()
}

/// Leading-term elimination: repeatedly take the lexicographically largest
/// monomial `x^ν` left in the remainder and subtract the matching multiple
/// of `e_{ν'}` (ν' the conjugate partition), whose leading monomial is
/// exactly `x^ν`. Works on partition-indexed coefficients, so the cost
/// grows like the square of the partition count.
pub fn to_elementary_by_elimination(alpha: &AlphaTuple) -> Result<SymPoly> {
    let n = alpha.weighted_degree();
    let ring = elementary_ring(n);
    let mut remainder = MonomialBasis::new();
    remainder.insert(alpha.parts(), BigInt::one());
    let mut result: Vec<(Vec<u32>, Rational)> = Vec::new();
    let mut expansions: HashMap<Vec<u32>, MonomialBasis> = HashMap::new();
    let mut guard = 0usize;
    while let Some((nu, c)) = remainder.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        guard += 1;
        if guard > 1_000_000 {
            return Err(Error::Internal("elimination did not terminate".into()));
        }
        let mu = conjugate(&nu);
        let e_mu = expansions.entry(mu.clone()).or_insert_with(|| {
            let mut acc = MonomialBasis::new();
            acc.insert(Vec::new(), BigInt::one());
            for &part in &mu {
                acc = times_elementary(&acc, part);
            }
            acc
        });
        let lead = e_mu.get(&nu).cloned().unwrap_or_default();
        if !lead.is_one() {
            return Err(Error::Internal(format!("leading coefficient of e_{mu:?} is {lead}")));
        }
        for (lambda, coef) in e_mu.iter() {
            let slot = remainder.entry(lambda.clone()).or_insert_with(BigInt::zero);
            *slot -= &c * coef;
            if slot.is_zero() {
                remainder.remove(lambda);
            }
        }
        let mut exps = vec![0u32; n as usize];
        for &p in &mu {
            exps[p as usize - 1] += 1;
        }
        result.push((exps, Rational::from_integer(c)));
    }
    Ok(SymPoly { basis: Basis::Elementary, body: GradedPoly::from_terms(&ring, result) })
}

/// Substitutes `σ_j -> e_j(t_1..t_z)` into an elementary-basis polynomial.
pub fn elementary_to_roots(f: &SymPoly, z: u32) -> Result<SymPoly> {
    if f.basis != Basis::Elementary {
        return Err(Error::Precondition("expected an elementary-basis polynomial".into()));
    }
    let n = f.body.ring().nvars() as u32;
    let ring = roots_ring(z, n);
    let images: Vec<GradedPoly> = (1..=n).map(|j| elementary_in_roots(&ring, z, j)).collect();
    Ok(SymPoly { basis: Basis::FormalRoots, body: f.body.substitute(&ring, &images)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(n: u32, terms: &[(&[u32], i64)]) -> GradedPoly {
        let ring = elementary_ring(n);
        GradedPoly::from_terms(&ring, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c))))
    }

    /// Brute force: count multiplicity vectors with Σ j·α_j = m directly.
    fn brute_force_alphas(m: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        fn go(j: u32, m: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if j > m {
                if rest == 0 {
                    let mut c = cur.clone();
                    while c.last() == Some(&0) {
                        c.pop();
                    }
                    out.push(c);
                }
                return;
            }
            for a in 0..=rest / j {
                cur.push(a);
                go(j + 1, m, rest - a * j, cur, out);
                cur.pop();
            }
        }
        go(1, m, m, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn enumerate_alpha_examples() {
        assert_eq!(enumerate_alpha(0), vec![AlphaTuple::empty()]);
        assert_eq!(enumerate_alpha(2), vec![AlphaTuple::new(vec![2]), AlphaTuple::new(vec![0, 1])]);
        assert_eq!(enumerate_alpha(4).len(), 5);
        for m in 0..=12 {
            let mut got: Vec<Vec<u32>> = enumerate_alpha(m).into_iter().map(Vec::from).collect();
            let mut want = brute_force_alphas(m);
            got.sort();
            want.sort();
            assert_eq!(got, want, "m = {m}");
        }
    }

    #[test]
    fn alpha_canonical_form() {
        assert_eq!(AlphaTuple::new(vec![0, 1, 0]), AlphaTuple::new(vec![0, 1]));
        assert_eq!(AlphaTuple::single_row(3).counts(), &[0, 0, 1]);
        assert_eq!("0,1".parse::<AlphaTuple>().unwrap(), AlphaTuple::new(vec![0, 1]));
        assert_eq!("()".parse::<AlphaTuple>().unwrap(), AlphaTuple::empty());
        assert_eq!(AlphaTuple::new(vec![1, 0, 2]).parts(), vec![3, 3, 1]);
        assert_eq!(AlphaTuple::new(vec![1, 0, 2]).weighted_degree(), 7);
        assert!("1,x".parse::<AlphaTuple>().is_err());
    }

    #[test]
    fn monomial_symmetric_examples() {
        let m = monomial_symmetric(&AlphaTuple::new(vec![1]), 1).unwrap();
        assert_eq!(m.body.to_string(), "t1");
        let m = monomial_symmetric(&AlphaTuple::new(vec![0, 1]), 2).unwrap();
        assert_eq!(m.body.len(), 2);
        assert_eq!(m.body.coefficient(&[2, 0]), rat(1));
        assert_eq!(m.body.coefficient(&[0, 2]), rat(1));
        let m = monomial_symmetric(&AlphaTuple::new(vec![2]), 2).unwrap();
        assert_eq!(m.body.to_string(), "t1*t2");
        assert!(matches!(
            monomial_symmetric(&AlphaTuple::new(vec![3]), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn monomial_symmetric_is_symmetric() {
        let m = monomial_symmetric(&AlphaTuple::new(vec![1, 1, 1]), 4).unwrap();
        for (e, c) in m.body.terms() {
            let mut swapped = e.to_vec();
            swapped.swap(0, 2);
            assert_eq!(m.body.coefficient(&swapped), *c);
        }
    }

    #[test]
    fn to_elementary_examples() {
        let f = to_elementary(&AlphaTuple::new(vec![1])).unwrap();
        assert_eq!(f.body, elem(1, &[(&[1], 1)]));
        let f = to_elementary(&AlphaTuple::new(vec![0, 1])).unwrap();
        assert_eq!(f.body, elem(2, &[(&[2, 0], 1), (&[0, 1], -2)]));
        let f = to_elementary(&AlphaTuple::new(vec![2])).unwrap();
        assert_eq!(f.body, elem(2, &[(&[0, 1], 1)]));
        let f = to_elementary(&AlphaTuple::empty()).unwrap();
        assert_eq!(f.body.constant_term(), rat(1));
    }

    #[test]
    fn round_trip_through_roots() {
        for m in 1..=7 {
            for alpha in enumerate_alpha(m) {
                let f = to_elementary(&alpha).unwrap();
                for z in [m, m + 1] {
                    let back = elementary_to_roots(&f, z).unwrap();
                    let direct = monomial_symmetric(&alpha, z).unwrap();
                    assert_eq!(back.body, direct.body, "alpha {alpha} z {z}");
                }
            }
        }
    }

    #[test]
    fn elimination_agrees_with_power_sum_route() {
        for m in 0..=10 {
            for alpha in enumerate_alpha(m) {
                let a = to_elementary(&alpha).unwrap();
                let b = to_elementary_by_elimination(&alpha).unwrap();
                assert_eq!(a.body, b.body, "alpha {alpha}");
            }
        }
    }

    #[test]
    fn newton_identity_for_power_sums() {
        for i in 1..=10u32 {
            let ring = elementary_ring(i);
            let sigma = |j: u32| GradedPoly::var(&ring, j as usize - 1);
            let p = |k: u32| -> GradedPoly {
                let f = to_elementary_by_elimination(&AlphaTuple::single_row(k)).unwrap();
                let pad: Vec<GradedPoly> = (1..=k).map(sigma).collect();
                f.body.substitute(&ring, &pad).unwrap()
            };
            let mut rhs = sigma(i).scale(&rat(i as i64 * if i % 2 == 1 { 1 } else { -1 }));
            for j in 1..i {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                rhs = rhs.add(&sigma(j).mul(&p(i - j)).unwrap().scale(&rat(sign))).unwrap();
            }
            let lhs = to_elementary(&AlphaTuple::single_row(i)).unwrap().body;
            assert_eq!(lhs, rhs, "p_{i}");
        }
    }

    #[test]
    fn coefficients_are_integral() {
        for alpha in enumerate_alpha(9) {
            let f = to_elementary(&alpha).unwrap();
            assert!(f.body.terms().all(|(_, c)| c.is_integer()), "{alpha}");
        }
    }

    #[test]
    fn conjugate_partition() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
        assert_eq!(conjugate(&[2, 2]), vec![2, 2]);
    }
}
