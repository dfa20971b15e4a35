//! Nested coset coding schemes `C_2 ⊊ C_1 = C_2 ⊕ W`.
//!
//! A message `x ∈ F_{q^m}^ℓ` is sent as `(x_2, x)·G_1` with `x_2` uniform,
//! where `G_1 = [G_2; G']` stacks generators of `C_2` and `W`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Odometer, Subspace, Tag};
use crate::puncture::{self, PunctureContext};
use crate::rankcore::{self, LinearCode};
use crate::weights::{self, RelMethod};

#[derive(Clone, Debug)]
pub struct NestedCodePair {
    c1: LinearCode,
    c2: LinearCode,
    g2: Matrix,
    g_prime: Matrix,
    g1: Matrix,
}

impl NestedCodePair {
    /// Pair from generators of `C_2` and of `W`. Dependent rows of `G_2`
    /// and rows of `G'` that are dependent modulo `C_2` are dropped.
    pub fn new(field: Arc<Field>, n: usize, g2: &[Vec<Fe>], g_prime: &[Vec<Fe>]) -> Result<Self> {
        let c2 = LinearCode::new(field.clone(), n, g2)?;
        let mut rows = c2.space().basis_rows();
        let k2 = rows.len();
        for r in g_prime {
            if r.len() != n {
                return Err(Error::Shape(format!("row of length {} in a length-{n} pair", r.len())));
            }
            if let Some(x) = r.iter().find(|x| !field.contains(**x)) {
                return Err(Error::InvalidElement(format!("{x:?} is not in the field")));
            }
            rows.push(r.clone());
            if Matrix::from_rows(n, &rows)?.rank(&field) < rows.len() {
                rows.pop();
            }
        }
        if rows.len() == k2 {
            return Err(Error::PreconditionViolated("W must be nonzero: C_2 ⊊ C_1".into()));
        }
        let c1 = LinearCode::new(field, n, &rows)?;
        let g1 = Matrix::from_rows(n, &rows)?;
        Ok(NestedCodePair {
            g2: Matrix::from_rows(n, &rows[..k2])?,
            g_prime: Matrix::from_rows(n, &rows[k2..])?,
            g1,
            c1,
            c2,
        })
    }

    /// Pair with the default complement `W`: RREF rows of `C_1` greedily
    /// added to the basis of `C_2`.
    pub fn from_codes(c1: &LinearCode, c2: &LinearCode) -> Result<Self> {
        if c1.field() != c2.field() {
            return Err(Error::ContextMismatch);
        }
        if !c2.space().is_subspace_of(c1.field(), c1.space())? || c2.k() == c1.k() {
            return Err(Error::PreconditionViolated("requires C_2 ⊊ C_1".into()));
        }
        let g1 = weights::stacked_generator(c1, c2)?;
        let rows = g1.to_rows();
        Self::new(c1.field().clone(), c1.n(), &rows[..c2.k()], &rows[c2.k()..])
    }

    pub fn field(&self) -> &Arc<Field> {
        self.c1.field()
    }
    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }
    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }
    pub fn g2(&self) -> &Matrix {
        &self.g2
    }
    pub fn g_prime(&self) -> &Matrix {
        &self.g_prime
    }
    pub fn g1(&self) -> &Matrix {
        &self.g1
    }
    pub fn n(&self) -> usize {
        self.c1.n()
    }
    pub fn k1(&self) -> usize {
        self.c1.k()
    }
    pub fn k2(&self) -> usize {
        self.c2.k()
    }
    pub fn ell(&self) -> usize {
        self.k1() - self.k2()
    }

    /// `C_1^⊥ ⊊ C_2^⊥`.
    pub fn dual_pair(&self) -> Result<NestedCodePair> {
        Self::from_codes(&self.c2.dual(), &self.c1.dual())
    }

    /// `(x_2, x)·G_1`.
    pub fn encode_with(&self, x2: &[Fe], x: &[Fe]) -> Result<Vec<Fe>> {
        if x.len() != self.ell() || x2.len() != self.k2() {
            return Err(Error::Shape(format!(
                "expected message of length {} and randomness of length {}",
                self.ell(),
                self.k2()
            )));
        }
        let mut v = x2.to_vec();
        v.extend_from_slice(x);
        self.g1.left_mul_vec(self.field(), &v)
    }

    pub fn encode<R: Rng>(&self, x: &[Fe], rng: &mut R) -> Result<Vec<Fe>> {
        let x2 = linalg::random_vector(self.field(), Tag::Ext, self.k2(), rng);
        self.encode_with(&x2, x)
    }

    /// The message of the coset `c + C_2`.
    pub fn message_of(&self, c: &[Fe]) -> Result<Vec<Fe>> {
        let (v, _) = self.g1.transpose().solve(self.field(), c)?;
        Ok(v[self.k2()..].to_vec())
    }

    /// All messages in odometer order.
    pub fn messages(&self) -> impl Iterator<Item = Vec<Fe>> + '_ {
        Subspace::full(self.ell(), Tag::Ext)
            .vectors(self.field())
            .collect::<Vec<_>>()
            .into_iter()
    }

    /// `C_x = xG' + C_2` for every message, materialized.
    pub fn cosets(&self, cap: u128) -> Result<Vec<Vec<Vec<Fe>>>> {
        let size = self.c1.size();
        if size > cap {
            return Err(Error::cap("codewords of C_1", size, cap));
        }
        let c2: Vec<Vec<Fe>> = self.c2.codewords().collect();
        let f = self.field();
        Ok(self
            .messages()
            .map(|x| {
                let shift = self.g_prime.left_mul_vec(f, &x).expect("shapes agree");
                c2.iter().map(|c| linalg::vec_add(f, &shift, c)).collect()
            })
            .collect())
    }
}

/// Checks that the cosets partition `C_1`, that `C_0 = C_2`, and that
/// `x ↦ C_x` is additive and homogeneous.
pub fn partition_check(pair: &NestedCodePair, cap: u128) -> Result<bool> {
    let f = pair.field();
    let cosets = pair.cosets(cap)?;
    let messages: Vec<Vec<Fe>> = pair.messages().collect();
    let mut seen = HashSet::new();
    for class in &cosets {
        for c in class {
            if !pair.c1().contains(c) || !seen.insert(c.clone()) {
                return Ok(false);
            }
        }
    }
    if seen.len() as u128 != pair.c1().size() {
        return Ok(false);
    }
    let zero_class: HashSet<&Vec<Fe>> = cosets[0].iter().collect();
    if zero_class != pair.c2().codewords().collect::<Vec<_>>().iter().collect::<HashSet<_>>() {
        return Ok(false);
    }
    let index: HashMap<&Vec<Fe>, usize> = messages.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let class_sets: Vec<HashSet<&Vec<Fe>>> = cosets.iter().map(|c| c.iter().collect()).collect();
    for (i, x) in messages.iter().enumerate() {
        for (j, y) in messages.iter().enumerate() {
            let sum = linalg::vec_add(f, x, y);
            let rep = linalg::vec_add(f, &cosets[i][0], &cosets[j][0]);
            if !class_sets[index[&sum]].contains(&rep) {
                return Ok(false);
            }
        }
        for l in f.elements() {
            let scaled = linalg::vec_scale(f, l, x);
            let rep = linalg::vec_scale(f, l, &cosets[i][0]);
            if !class_sets[index[&scaled]].contains(&rep) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Rank,
    Hamming,
}

fn distance(f: &Field, metric: Metric, a: &[Fe], b: &[Fe]) -> usize {
    let d = linalg::vec_sub(f, a, b);
    match metric {
        Metric::Rank => rankcore::rank_weight(f, &d),
        Metric::Hamming => rankcore::hamming_weight(&d),
    }
}

/// Minimum distance between codewords of different cosets, computed
/// literally and compared with the first relative weight.
pub fn scheme_min_distance(pair: &NestedCodePair, metric: Metric, cap: u128) -> Result<usize> {
    let f = pair.field();
    let size = pair.c1().size();
    if size.saturating_mul(size) > cap {
        return Err(Error::cap("codeword pairs", size.saturating_mul(size), cap));
    }
    let cosets = pair.cosets(cap)?;
    let mut best = usize::MAX;
    for (i, a) in cosets.iter().enumerate() {
        for b in &cosets[i + 1..] {
            for x in a {
                for y in b {
                    best = best.min(distance(f, metric, x, y));
                }
            }
        }
    }
    let m1 = match metric {
        Metric::Rank => weights::relative_grw(pair.c1(), pair.c2(), RelMethod::Def3r, cap)?.values[0],
        Metric::Hamming => weights::relative_hamming_weights(pair.c1(), pair.c2(), cap)?.values[0],
    };
    if m1 != best {
        return Err(Error::InternalInconsistency(format!(
            "coset distance {best} differs from the first relative weight {m1}"
        )));
    }
    Ok(best)
}

/// `dim(C_1^L / C_2^L)`, checked against `dim((C_2^⊥)_L / (C_1^⊥)_L)`.
pub fn leakage(pair: &NestedCodePair, l: &Subspace) -> Result<usize> {
    let punctured = puncture::punctured_dim(pair.c1(), l) - puncture::punctured_dim(pair.c2(), l);
    let dual = puncture::shorten(&pair.c2().dual(), l)?.k() - puncture::shorten(&pair.c1().dual(), l)?.k();
    if punctured != dual {
        return Err(Error::InternalInconsistency(format!(
            "leakage {punctured} via puncturing, {dual} via dual shortening"
        )));
    }
    Ok(punctured)
}

/// Leakage to an observation `y = xBᵀ` with `B` over `F_q`.
pub fn leakage_of_matrix(pair: &NestedCodePair, b: &Matrix) -> Result<usize> {
    leakage(pair, &observation_space(pair.field(), b, pair.n())?)
}

/// Leakage to the coordinates in `idx`.
pub fn leakage_of_index_set(pair: &NestedCodePair, idx: &[usize]) -> Result<usize> {
    leakage(pair, &Subspace::coordinate(pair.n(), Tag::Base, idx))
}

fn observation_space(f: &Field, b: &Matrix, n: usize) -> Result<Subspace> {
    if b.cols() != n {
        return Err(Error::Shape(format!("B has {} columns for length {n}", b.cols())));
    }
    if !b.is_base(f) {
        return Err(Error::PreconditionViolated("B must have entries in F_q".into()));
    }
    Subspace::from_matrix(f, Tag::Base, b)
}

/// Formal sum `Σ c_p log p` over primes `p`.
#[derive(Default)]
struct LogSum(BTreeMap<u64, BigRational>);

impl LogSum {
    fn add_log(&mut self, coeff: &BigRational, mut value: u64) {
        let mut p = 2;
        while p * p <= value {
            while value.is_multiple_of(p) {
                *self.0.entry(p).or_insert_with(BigRational::zero) += coeff;
                value /= p;
            }
            p += 1;
        }
        if value > 1 {
            *self.0.entry(value).or_insert_with(BigRational::zero) += coeff;
        }
    }
}

/// `I(S; XBᵀ)` for uniform `S` and uniform randomness, in units of
/// `log q^m`, from the full joint distribution.
///
/// Logarithms are kept as formal combinations of `log p` over primes; the
/// result is rational exactly when only the characteristic survives.
pub fn leakage_entropy_oracle(pair: &NestedCodePair, b: &Matrix, cap: u128) -> Result<BigRational> {
    let f = pair.field();
    observation_space(f, b, pair.n())?;
    let size = pair.c1().size();
    if size > cap {
        return Err(Error::cap("joint outcomes", size, cap));
    }
    let k1 = pair.k1();
    let k2 = pair.k2();
    let scalars: Vec<Fe> = f.elements().collect();
    let mut n_y: HashMap<Vec<Fe>, u64> = HashMap::new();
    let mut n_sy: HashMap<(Vec<Fe>, Vec<Fe>), u64> = HashMap::new();
    for digits in Odometer::new(scalars.len(), k1) {
        let v: Vec<Fe> = digits.iter().map(|&d| scalars[d]).collect();
        let x = pair.g1().left_mul_vec(f, &v)?;
        let y: Vec<Fe> = (0..b.rows()).map(|i| linalg::dot(f, &x, b.row(i))).collect();
        *n_y.entry(y.clone()).or_default() += 1;
        *n_sy.entry((v[k2..].to_vec(), y)).or_default() += 1;
    }
    let total = size as u64;
    let per_message = (f.order() as u64).pow(k2 as u32);
    let mut sum = LogSum::default();
    for ((_, y), &count) in &n_sy {
        let w = BigRational::new(BigInt::from(count), BigInt::from(total));
        sum.add_log(&w, count);
        sum.add_log(&w, total);
        sum.add_log(&-w.clone(), per_message);
        sum.add_log(&-w, n_y[y]);
    }
    let p = f.p() as u64;
    let mut result = BigRational::zero();
    for (prime, coeff) in sum.0 {
        if prime == p {
            result = coeff;
        } else if !coeff.is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "mutual information has an irrational part in log {prime}"
            )));
        }
    }
    let units = BigInt::from(f.e() as u64 * f.m() as u64);
    Ok(result / BigRational::from_integer(units))
}

/// Observation sets bucketed by leakage.
#[derive(Clone, Debug)]
pub struct AccessStructure {
    pub metric: Metric,
    pub ell: usize,
    /// `buckets[r]` holds every `L` (or coordinate space `L_I`) leaking `r`.
    pub buckets: Vec<Vec<Subspace>>,
}

impl AccessStructure {
    /// Index sets, for the Hamming structure.
    pub fn index_sets(&self) -> Vec<Vec<Vec<usize>>> {
        self.buckets
            .iter()
            .map(|b| b.iter().map(|l| l.pivots().to_vec()).collect())
            .collect()
    }
}

fn coordinate_spaces(n: usize, cap: u128) -> Result<Vec<Subspace>> {
    let count = 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::cap("index sets", count, cap));
    }
    Ok((0..count)
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            Subspace::coordinate(n, Tag::Base, &idx)
        })
        .collect())
}

fn observation_domain(pair: &NestedCodePair, metric: Metric, cap: u128) -> Result<Vec<Subspace>> {
    match metric {
        Metric::Rank => linalg::all_subspaces(pair.field(), pair.n(), Tag::Base, cap),
        Metric::Hamming => coordinate_spaces(pair.n(), cap),
    }
}

pub fn access_structure(pair: &NestedCodePair, metric: Metric, cap: u128) -> Result<AccessStructure> {
    let mut buckets = vec![Vec::new(); pair.ell() + 1];
    for l in observation_domain(pair, metric, cap)? {
        buckets[leakage(pair, &l)?].push(l);
    }
    Ok(AccessStructure {
        metric,
        ell: pair.ell(),
        buckets,
    })
}

/// Whether the dual pair's structure is the complement (Hamming) or
/// orthogonal (rank) image of the original one, bucket by bucket.
pub fn access_duality_check(pair: &NestedCodePair, metric: Metric, cap: u128) -> Result<bool> {
    let f = pair.field();
    let dual = pair.dual_pair()?;
    let ell = pair.ell();
    let primal = access_structure(pair, metric, cap)?;
    let other = access_structure(&dual, metric, cap)?;
    let n = pair.n();
    for r in 0..=ell {
        let lhs: HashSet<Subspace> = other.buckets[r].iter().cloned().collect();
        let rhs: HashSet<Subspace> = primal.buckets[ell - r]
            .iter()
            .map(|l| match metric {
                Metric::Rank => l.perp(f),
                Metric::Hamming => {
                    let idx: Vec<usize> = (0..n).filter(|i| !l.pivots().contains(i)).collect();
                    Subspace::coordinate(n, Tag::Base, &idx)
                }
            })
            .collect();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub rule: String,
    pub relation: String,
    pub value: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileRow {
    /// `dim L` (rank) or `#I` (Hamming).
    pub size: usize,
    pub observed_min: usize,
    pub observed_max: usize,
    pub predictions: Vec<Prediction>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeakageProfile {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub ell: usize,
    pub r1: Option<usize>,
    pub r2: Option<usize>,
    pub s1: i64,
    pub s2: i64,
    pub mrd_pair: bool,
    pub mds_pair: bool,
    pub rank: Vec<ProfileRow>,
    pub hamming: Vec<ProfileRow>,
    pub all_hold: bool,
}

fn predict(rule: &str, relation: &str, value: usize, lo: usize, hi: usize) -> Prediction {
    let holds = match relation {
        "=" => lo == value && hi == value,
        ">=" => lo >= value,
        _ => hi <= value,
    };
    Prediction {
        rule: rule.into(),
        relation: relation.into(),
        value,
        holds,
    }
}

/// Smallest `r ≤ k` such that a code of dimension `k` with dual distance
/// `dual_d` (`None` for a zero dual) is `r`-optimal.
fn smallest_r(k: usize, dual_d: Option<usize>) -> Option<usize> {
    let r = match dual_d {
        None => 1,
        Some(d) => (k + 2).saturating_sub(d).max(1),
    };
    (r <= k).then_some(r)
}

fn first_weight(c: &LinearCode, metric: Metric, cap: u128) -> Result<Option<usize>> {
    if c.k() == 0 {
        return Ok(None);
    }
    Ok(Some(match metric {
        Metric::Rank => weights::grw_profile(c, cap)?[0],
        Metric::Hamming => weights::hamming_weights(c, cap)?.values[0],
    }))
}

/// Observed leakage per observation size against the piecewise predictions.
pub fn leakage_profile(pair: &NestedCodePair, cap: u128) -> Result<LeakageProfile> {
    let n = pair.n();
    let (k1, k2, ell) = (pair.k1(), pair.k2(), pair.ell());
    let mut rank_rows = Vec::new();
    let mut hamming_rows = Vec::new();
    let mut mrd_pair = false;
    let mut mds_pair = false;
    let mut first = None;
    for metric in [Metric::Rank, Metric::Hamming] {
        let d1 = first_weight(pair.c1(), metric, cap)?.expect("C_1 ≠ 0");
        let d2 = first_weight(pair.c2(), metric, cap)?;
        let d1_dual = first_weight(&pair.c1().dual(), metric, cap)?;
        let d2_dual = first_weight(&pair.c2().dual(), metric, cap)?.expect("C_2^⊥ ≠ 0");
        let r1 = smallest_r(k1, d1_dual);
        let r2 = smallest_r(n - k2, d2);
        let s1 = n as i64 - k1 as i64 - d1 as i64 + 1;
        let s2 = k2 as i64 - d2_dual as i64 + 1;
        let optimal = d1 == n - k1 + 1 && d2.is_none_or(|d| d == n - k2 + 1);
        if metric == Metric::Rank {
            first = Some((r1, r2, s1, s2));
            mrd_pair = optimal;
        } else {
            mds_pair = optimal;
        }
        let mut by_size: Vec<Option<(usize, usize)>> = vec![None; n + 1];
        for l in observation_domain(pair, metric, cap)? {
            let v = leakage(pair, &l)?;
            let slot = &mut by_size[l.dim()];
            *slot = Some(slot.map_or((v, v), |(a, b)| (a.min(v), b.max(v))));
        }
        let rows = if metric == Metric::Rank {
            &mut rank_rows
        } else {
            &mut hamming_rows
        };
        for (j, entry) in by_size.iter().enumerate() {
            let (lo, hi) = entry.expect("every size occurs");
            let ji = j as i64;
            let mut preds = Vec::new();
            if ji >= k1 as i64 + s1 {
                preds.push(predict("full", "=", ell, lo, hi));
            }
            if ji <= k2 as i64 - s2 {
                preds.push(predict("none", "=", 0, lo, hi));
            }
            if let (Some(r1), Some(r2)) = (r1, r2) {
                let (low, high) = (k2 + r2 - 1, k1 + 1 - r1);
                if low <= high && low <= j && j <= high {
                    preds.push(predict("dimension", "=", j - k2, lo, hi));
                }
                if low < high {
                    if j > high && ji < k1 as i64 + s1 {
                        preds.push(predict("upper", ">=", ell + 1 - r1, lo, hi));
                    }
                    if j < low && ji > k2 as i64 - s2 {
                        preds.push(predict("lower", "<=", r2 - 1, lo, hi));
                    }
                }
            }
            if optimal {
                let v = if j >= k1 { ell } else { j.saturating_sub(k2) };
                preds.push(predict("optimal_pair", "=", v, lo, hi));
            }
            rows.push(ProfileRow {
                size: j,
                observed_min: lo,
                observed_max: hi,
                predictions: preds,
            });
        }
    }
    let (r1, r2, s1, s2) = first.expect("rank pass ran");
    let all_hold = rank_rows
        .iter()
        .chain(&hamming_rows)
        .all(|r| r.predictions.iter().all(|p| p.holds));
    Ok(LeakageProfile {
        n,
        k1,
        k2,
        ell,
        r1,
        r2,
        s1,
        s2,
        mrd_pair,
        mds_pair,
        rank: rank_rows,
        hamming: hamming_rows,
        all_hold,
    })
}

/// Messages consistent with a projected observation: `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredCoset {
    pub particular: Vec<Fe>,
    pub kernel: Subspace,
}

impl RecoveredCoset {
    pub fn unique(&self) -> Option<&[Fe]> {
        self.kernel.is_zero().then_some(&self.particular[..])
    }
}

/// Solves `π(c) = x̃ (G_1 AᵀA')` and keeps the last `ℓ` coordinates.
pub fn recover_message(pair: &NestedCodePair, ctx: &PunctureContext, observed: &[Fe]) -> Result<RecoveredCoset> {
    let f = pair.field();
    let n = pair.n();
    if observed.len() != n {
        return Err(Error::Shape(format!(
            "observation of length {} for n={n}",
            observed.len()
        )));
    }
    let k2 = pair.k2();
    let ell = pair.ell();
    let m = pair.g1().mul(f, &ctx.projection_matrix(f))?;
    let (x, ker) = m.transpose().solve(f, observed)?;
    let tail: Vec<Vec<Fe>> = ker.iter().map(|v| v[k2..].to_vec()).collect();
    Ok(RecoveredCoset {
        particular: x[k2..].to_vec(),
        kernel: Subspace::span(f, Tag::Ext, ell, &tail)?,
    })
}

/// `ℓ − dim ker`, to compare with [`leakage`].
pub fn recovered_information(pair: &NestedCodePair, coset: &RecoveredCoset) -> usize {
    pair.ell() - coset.kernel.dim()
}

pub fn rational(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Fe = Fe(2);
    const CAP: u128 = 1_000_000;

    fn f4() -> Arc<Field> {
        Field::new(2, 1, 2).unwrap()
    }

    fn small_pair() -> NestedCodePair {
        let f = f4();
        let c1 = LinearCode::from_subspace(f.clone(), Subspace::full(2, Tag::Ext));
        let c2 = LinearCode::new(f, 2, &[vec![Fe::ONE, A]]).unwrap();
        NestedCodePair::from_codes(&c1, &c2).unwrap()
    }

    fn gabidulin_pair() -> NestedCodePair {
        let f = Field::new(2, 1, 4).unwrap();
        let g: Vec<Fe> = f.basis()[..3].to_vec();
        let g2: Vec<Fe> = g.iter().map(|&x| f.frobenius(x, 1)).collect();
        NestedCodePair::new(f, 3, &[g], &[g2]).unwrap()
    }

    #[test]
    fn encoding_census() {
        let p = small_pair();
        assert_eq!(p.ell(), 1);
        let mut rng = crate::rng::seeded(0);
        let f = p.field().clone();
        let mut classes: HashMap<Vec<Fe>, HashSet<Vec<Fe>>> = HashMap::new();
        for x in p.messages() {
            for x2 in f.elements() {
                let c = p.encode_with(&[x2], &x).unwrap();
                assert_eq!(p.message_of(&c).unwrap(), x);
                classes.entry(x.clone()).or_default().insert(c);
            }
            let c = p.encode(&x, &mut rng).unwrap();
            assert!(classes[&x].contains(&c));
        }
        assert_eq!(classes.len(), 4);
        assert!(classes.values().all(|s| s.len() == 4));
        assert!(partition_check(&p, CAP).unwrap());
        let zero = p.encode(&[Fe::ZERO], &mut rng).unwrap();
        assert!(p.c2().contains(&zero));
    }

    #[test]
    fn deterministic_when_c2_is_zero() {
        let f = f4();
        let p = NestedCodePair::new(f.clone(), 2, &[], &[vec![Fe::ONE, A]]).unwrap();
        let mut rng = crate::rng::seeded(1);
        let a = p.encode(&[A], &mut rng).unwrap();
        let b = p.encode(&[A], &mut rng).unwrap();
        assert_eq!(a, b);
        assert_eq!(scheme_min_distance(&p, Metric::Rank, CAP).unwrap(), 2);
    }

    #[test]
    fn min_distance_examples() {
        let p = small_pair();
        assert_eq!(scheme_min_distance(&p, Metric::Rank, CAP).unwrap(), 1);
        assert_eq!(scheme_min_distance(&p, Metric::Hamming, CAP).unwrap(), 1);
    }

    #[test]
    fn leakage_examples() {
        let p = small_pair();
        let f = p.field().clone();
        assert_eq!(leakage(&p, &Subspace::coordinate(2, Tag::Base, &[0])).unwrap(), 0);
        assert_eq!(leakage_of_matrix(&p, &Matrix::zeros(1, 2)).unwrap(), 0);
        assert_eq!(leakage(&p, &Subspace::full(2, Tag::Base)).unwrap(), 1);
        for l in linalg::all_subspaces(&f, 2, Tag::Base, CAP).unwrap() {
            let v = leakage(&p, &l).unwrap();
            let oracle = leakage_entropy_oracle(&p, l.basis(), CAP).unwrap();
            assert_eq!(oracle, rational(v), "{l:?}");
        }
    }

    #[test]
    fn leakage_depends_on_row_space_only() {
        let p = gabidulin_pair();
        let f = p.field().clone();
        let b1 = Matrix::from_rows(3, &[vec![Fe::ONE, Fe::ONE, Fe::ZERO], vec![Fe::ZERO, Fe::ONE, Fe::ONE]]).unwrap();
        let b2 = Matrix::from_rows(
            3,
            &[
                vec![Fe::ONE, Fe::ZERO, Fe::ONE],
                vec![Fe::ONE, Fe::ONE, Fe::ZERO],
                vec![Fe::ZERO, Fe::ONE, Fe::ONE],
            ],
        )
        .unwrap();
        assert_eq!(leakage_of_matrix(&p, &b1).unwrap(), leakage_of_matrix(&p, &b2).unwrap());
        assert_eq!(
            leakage_entropy_oracle(&p, &b1, CAP).unwrap(),
            leakage_entropy_oracle(&p, &b2, CAP).unwrap()
        );
        let l = Subspace::from_matrix(&f, Tag::Base, &b1).unwrap();
        assert_eq!(
            leakage_entropy_oracle(&p, &b1, CAP).unwrap(),
            rational(leakage(&p, &l).unwrap())
        );
    }

    #[test]
    fn leakage_is_monotone_and_w_independent() {
        let f = Field::new(2, 1, 2).unwrap();
        let c1 = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, A, Fe::ZERO], vec![Fe::ZERO, Fe::ONE, A]]).unwrap();
        let c2 = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, Fe::ONE, Fe::ONE]]).unwrap();
        let c1 = LinearCode::from_subspace(f.clone(), c1.space().sum(&f, c2.space()).unwrap());
        let p = NestedCodePair::from_codes(&c1, &c2).unwrap();
        let other_w: Vec<Vec<Fe>> = c1.codewords().filter(|w| !c2.contains(w)).take(1).collect();
        let mut alt_rows = other_w.clone();
        for r in c1.space().basis_rows() {
            alt_rows.push(r);
        }
        let q = NestedCodePair::new(f.clone(), 3, &c2.space().basis_rows(), &alt_rows).unwrap();
        assert_eq!(q.c1(), p.c1());
        let all = linalg::all_subspaces(&f, 3, Tag::Base, CAP).unwrap();
        for l in &all {
            assert_eq!(leakage(&p, l).unwrap(), leakage(&q, l).unwrap());
            for l2 in &all {
                if l.is_subspace_of(&f, l2).unwrap() {
                    assert!(leakage(&p, l).unwrap() <= leakage(&p, l2).unwrap());
                }
            }
        }
    }

    #[test]
    fn access_structures() {
        let p = small_pair();
        let rank = access_structure(&p, Metric::Rank, CAP).unwrap();
        assert!(rank.buckets[1].contains(&Subspace::full(2, Tag::Base)));
        assert!(rank.buckets[0].contains(&Subspace::zero(2, Tag::Base)));
        assert_eq!(rank.buckets.iter().map(|b| b.len()).sum::<usize>(), 5);
        assert!(access_duality_check(&p, Metric::Rank, CAP).unwrap());
        assert!(access_duality_check(&p, Metric::Hamming, CAP).unwrap());
        let h = access_structure(&p, Metric::Hamming, CAP).unwrap();
        assert_eq!(h.index_sets()[1], vec![vec![0, 1]]);
    }

    #[test]
    fn gabidulin_profile() {
        let p = gabidulin_pair();
        let prof = leakage_profile(&p, CAP).unwrap();
        assert!(prof.mrd_pair);
        assert!(prof.all_hold, "{prof:?}");
        let f = p.field().clone();
        for l in linalg::all_subspaces(&f, 3, Tag::Base, CAP).unwrap() {
            let expect = match l.dim() {
                0 | 1 => 0,
                2 => 1,
                _ => 1,
            };
            assert_eq!(leakage(&p, &l).unwrap(), expect);
        }
    }

    #[test]
    fn recovery() {
        let p = small_pair();
        let f = p.field().clone();
        for l in linalg::all_subspaces(&f, 2, Tag::Base, CAP).unwrap() {
            let ctx = PunctureContext::new(&f, &l).unwrap();
            let leak = leakage(&p, &l).unwrap();
            for x in p.messages() {
                for x2 in f.elements() {
                    let c = p.encode_with(&[x2], &x).unwrap();
                    let rec = recover_message(&p, &ctx, &ctx.project(&f, &c)).unwrap();
                    assert_eq!(recovered_information(&p, &rec), leak);
                    let diff = linalg::vec_sub(&f, &x, &rec.particular);
                    assert!(rec.kernel.contains(&f, &diff));
                    if leak == p.ell() {
                        assert_eq!(rec.unique(), Some(&x[..]));
                    }
                }
            }
        }
        let zero = PunctureContext::new(&f, &Subspace::zero(2, Tag::Base)).unwrap();
        let rec = recover_message(&p, &zero, &[Fe::ZERO, Fe::ZERO]).unwrap();
        assert_eq!(rec.kernel.dim(), 1);
        let full = PunctureContext::new(&f, &Subspace::full(2, Tag::Base)).unwrap();
        assert_eq!(
            recover_message(&p, &full, &[Fe::ONE, Fe::ZERO]).map(|r| r.kernel.dim()),
            Ok(0)
        );
    }
}
