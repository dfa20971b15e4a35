//! Coherent linear network channel `y = cAᵀ + e` and exhaustive decoders.
//!
//! Codes and coset schemes are both handled as a [`Codebook`]: a list of
//! classes, each a set of words. A plain code has singleton classes.

use std::collections::HashSet;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Subspace, Tag};
use crate::rankcore::{self, LinearCode};
use crate::schemes::NestedCodePair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Coherent,
    NonCoherent,
}

pub fn require_coherent(mode: Mode) -> Result<()> {
    match mode {
        Mode::Coherent => Ok(()),
        Mode::NonCoherent => Err(Error::UnsupportedMode(
            "only coherent network coding (known transfer matrix) is supported".into(),
        )),
    }
}

#[derive(Clone, Debug)]
pub struct Codebook {
    field: Arc<Field>,
    n: usize,
    classes: Vec<Vec<Vec<Fe>>>,
}

impl Codebook {
    pub fn from_code(c: &LinearCode, cap: u128) -> Result<Self> {
        if c.size() > cap {
            return Err(Error::cap("codewords", c.size(), cap));
        }
        Ok(Codebook {
            field: c.field().clone(),
            n: c.n(),
            classes: c.codewords().map(|w| vec![w]).collect(),
        })
    }

    pub fn from_pair(p: &NestedCodePair, cap: u128) -> Result<Self> {
        Ok(Codebook {
            field: p.field().clone(),
            n: p.n(),
            classes: p.cosets(cap)?,
        })
    }

    /// Arbitrary code given by its words, one class each.
    pub fn from_words(field: Arc<Field>, n: usize, words: Vec<Vec<Fe>>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::Shape(format!("word of length {} in a length-{n} code", w.len())));
        }
        let distinct: HashSet<&Vec<Fe>> = words.iter().collect();
        if distinct.len() != words.len() {
            return Err(Error::InvalidParams("repeated codeword".into()));
        }
        Ok(Codebook {
            field,
            n,
            classes: words.into_iter().map(|w| vec![w]).collect(),
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn classes(&self) -> &[Vec<Vec<Fe>>] {
        &self.classes
    }

    /// Minimum rank distance between words of different classes, with a
    /// pair attaining it (first in enumeration order).
    pub fn min_distance(&self) -> Option<(usize, Vec<Fe>, Vec<Fe>)> {
        let f = &self.field;
        let mut best: Option<(usize, Vec<Fe>, Vec<Fe>)> = None;
        for (i, a) in self.classes.iter().enumerate() {
            for b in &self.classes[i + 1..] {
                for x in a {
                    for y in b {
                        let w = rankcore::rank_weight(f, &linalg::vec_sub(f, x, y));
                        if best.as_ref().is_none_or(|(d, _, _)| w < *d) {
                            best = Some((w, x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
        best
    }

    pub fn class_of(&self, word: &[Fe]) -> Option<usize> {
        self.classes.iter().position(|c| c.iter().any(|w| w == word))
    }
}

/// `cAᵀ`.
pub fn transmit(f: &Field, a: &Matrix, c: &[Fe]) -> Vec<Fe> {
    (0..a.rows()).map(|j| linalg::dot(f, c, a.row(j))).collect()
}

/// `Δ_A(c, y) = wt_R(y − cAᵀ)`.
pub fn discrepancy(f: &Field, a: &Matrix, c: &[Fe], y: &[Fe]) -> usize {
    rankcore::rank_weight(f, &linalg::vec_sub(f, y, &transmit(f, a, c)))
}

/// Smallest `r ≤ max_r` with `y = cAᵀ + zDᵀ` for some `z ∈ F_{q^m}^r` and
/// `D ∈ F_q^{N×r}`, by enumerating every `(z, D)`.
pub fn discrepancy_brute(f: &Field, a: &Matrix, c: &[Fe], y: &[Fe], max_r: usize, cap: u128) -> Result<Option<usize>> {
    let target = linalg::vec_sub(f, y, &transmit(f, a, c));
    let big_n = a.rows();
    let sub = f.subfield();
    let elems: Vec<Fe> = f.elements().collect();
    for r in 0..=max_r {
        let count = (sub.len() as u128)
            .saturating_pow((big_n * r) as u32)
            .saturating_mul((elems.len() as u128).saturating_pow(r as u32));
        if count > cap {
            return Err(Error::cap("(z, D) pairs", count, cap));
        }
        for d in linalg::Odometer::new(sub.len(), big_n * r) {
            for z in linalg::Odometer::new(elems.len(), r) {
                let hit = (0..big_n).all(|j| {
                    let v = (0..r).fold(Fe::ZERO, |acc, i| f.add(acc, f.mul(elems[z[i]], sub[d[j * r + i]])));
                    v == target[j]
                });
                if hit {
                    return Ok(Some(r));
                }
            }
        }
    }
    Ok(None)
}

/// Error `zDᵀ` of rank weight exactly `t`.
pub fn random_error<R: Rng>(f: &Field, n_rows: usize, t: usize, rng: &mut R) -> Result<Vec<Fe>> {
    if t > n_rows.min(f.m()) {
        return Err(Error::InfeasibleBudget { t, n_rows, m: f.m() });
    }
    if t == 0 {
        return Ok(vec![Fe::ZERO; n_rows]);
    }
    let zc = linalg::random_full_rank(f, Tag::Base, t, f.m(), rng);
    let z: Vec<Fe> = (0..t).map(|i| f.from_coords(zc.row(i))).collect();
    let d = linalg::random_full_rank(f, Tag::Base, t, n_rows, rng).transpose();
    let e = transmit(f, &d, &z);
    debug_assert_eq!(rankcore::rank_weight(f, &e), t);
    Ok(e)
}

#[derive(Clone, Debug)]
pub struct Channel {
    a: Matrix,
    rho: usize,
}

impl Channel {
    pub fn new(f: &Field, a: Matrix) -> Result<Self> {
        if !a.is_base(f) {
            return Err(Error::PreconditionViolated(
                "transfer matrix must have entries in F_q".into(),
            ));
        }
        let rho = a.cols() - a.rank(f);
        Ok(Channel { a, rho })
    }

    /// Uniform rank-`(n − ρ)` transfer matrix `PQ` with full-rank factors
    /// `P ∈ F_q^{N×r}` and `Q ∈ F_q^{r×n}`.
    pub fn random<R: Rng>(f: &Field, n: usize, n_rows: usize, rho: usize, rng: &mut R) -> Result<Self> {
        if rho > n || n - rho > n_rows {
            return Err(Error::InvalidParams(format!(
                "rank {} transfer matrix needs ρ ≤ n and N ≥ n − ρ (n={n}, N={n_rows}, ρ={rho})",
                n.saturating_sub(rho)
            )));
        }
        let r = n - rho;
        let p = linalg::random_full_rank(f, Tag::Base, r, n_rows, rng).transpose();
        let q = linalg::random_full_rank(f, Tag::Base, r, n, rng);
        let a = if r == 0 {
            Matrix::zeros(n_rows, n)
        } else {
            p.mul(f, &q)?
        };
        Ok(Channel { a, rho })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }
    pub fn n_rows(&self) -> usize {
        self.a.rows()
    }
    pub fn rho(&self) -> usize {
        self.rho
    }
}

/// Exhaustive argmin of the discrepancy over a codebook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoding {
    /// First minimizing class in enumeration order.
    pub class: usize,
    pub representative: Vec<Fe>,
    pub discrepancy: usize,
    /// Every minimizing class.
    pub minimizers: Vec<usize>,
    pub ambiguous: bool,
}

fn decode_against(book: &Codebook, a: &Matrix, y: &[Fe], cap: u128) -> Result<Decoding> {
    let f = book.field();
    let words: u128 = book.classes.iter().map(|c| c.len() as u128).sum();
    if words > cap {
        return Err(Error::cap("codewords", words, cap));
    }
    let mut best = usize::MAX;
    let mut minimizers = Vec::new();
    let mut representative = Vec::new();
    for (i, class) in book.classes.iter().enumerate() {
        let (d, w) = class
            .iter()
            .map(|w| (discrepancy(f, a, w, y), w))
            .min_by_key(|(d, _)| *d)
            .expect("classes are nonempty");
        if d < best {
            best = d;
            minimizers.clear();
            representative = w.clone();
        }
        if d == best {
            minimizers.push(i);
        }
    }
    Ok(Decoding {
        class: minimizers[0],
        representative,
        discrepancy: best,
        ambiguous: minimizers.len() > 1,
        minimizers,
    })
}

pub fn decode_full(book: &Codebook, a: &Matrix, y: &[Fe], cap: u128) -> Result<Decoding> {
    if a.cols() != book.n() || y.len() != a.rows() {
        return Err(Error::Shape(format!(
            "A is {}×{}, y has length {}, codebook length {}",
            a.rows(),
            a.cols(),
            y.len(),
            book.n()
        )));
    }
    decode_against(book, a, y, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmatrixChoice {
    /// Greedy first maximal independent set of rows.
    First,
    Explicit(Vec<usize>),
}

/// Greedy first maximal independent set of rows.
pub fn first_independent_rows(f: &Field, a: &Matrix) -> Vec<usize> {
    let mut rows: Vec<Vec<Fe>> = Vec::new();
    let mut idx = Vec::new();
    for i in 0..a.rows() {
        rows.push(a.row(i).to_vec());
        if Matrix::from_rows(a.cols(), &rows).expect("rectangular").rank(f) == rows.len() {
            idx.push(i);
        } else {
            rows.pop();
        }
    }
    idx
}

/// Every set of rows forming a basis of the row space of `A`.
pub fn all_independent_row_sets(f: &Field, a: &Matrix, cap: u128) -> Result<Vec<Vec<usize>>> {
    let r = a.rank(f);
    let total = 1u128.checked_shl(a.rows() as u32).unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::cap("row subsets", total, cap));
    }
    let mut out = Vec::new();
    for mask in 0..total {
        if mask.count_ones() as usize != r {
            continue;
        }
        let idx: Vec<usize> = (0..a.rows()).filter(|i| mask >> i & 1 == 1).collect();
        if a.select_rows(&idx).rank(f) == r {
            out.push(idx);
        }
    }
    out.sort();
    Ok(out)
}

fn validate_rows(f: &Field, a: &Matrix, idx: &[usize]) -> Result<()> {
    if idx.iter().any(|&i| i >= a.rows()) {
        return Err(Error::InvalidSubmatrix(format!("row index out of range in {idx:?}")));
    }
    let sub = a.select_rows(idx);
    let r = sub.rank(f);
    if r != idx.len() || r != a.rank(f) {
        return Err(Error::InvalidSubmatrix(format!(
            "rows {idx:?} have rank {r}, row space of A has dimension {}",
            a.rank(f)
        )));
    }
    Ok(())
}

/// Decodes against `(Ã, ỹ)` for a row submatrix `Ã` whose rows form a basis
/// of the row space of `A`.
pub fn decode_sub(book: &Codebook, a: &Matrix, y: &[Fe], choice: &SubmatrixChoice, cap: u128) -> Result<Decoding> {
    let f = book.field();
    if a.cols() != book.n() || y.len() != a.rows() {
        return Err(Error::Shape("A, y and codebook disagree in shape".into()));
    }
    let idx = match choice {
        SubmatrixChoice::First => first_independent_rows(f, a),
        SubmatrixChoice::Explicit(idx) => idx.clone(),
    };
    validate_rows(f, a, &idx)?;
    let y_sub: Vec<Fe> = idx.iter().map(|&i| y[i]).collect();
    decode_against(book, &a.select_rows(&idx), &y_sub, cap)
}

/// One channel use with every decoder's answer.
#[derive(Clone, Debug)]
pub struct TransmissionRecord {
    pub class: usize,
    pub sent: Vec<Fe>,
    pub a: Matrix,
    pub error: Vec<Fe>,
    pub received: Vec<Fe>,
    pub full: Decoding,
    pub subs: Vec<(Vec<usize>, Decoding)>,
}

impl TransmissionRecord {
    pub fn is_consistent(&self, f: &Field) -> bool {
        linalg::vec_add(f, &transmit(f, &self.a, &self.sent), &self.error) == self.received
    }

    fn failed(&self, d: &Decoding) -> bool {
        d.ambiguous || d.class != self.class
    }

    pub fn full_failed(&self) -> bool {
        self.failed(&self.full)
    }

    pub fn sub_failures(&self) -> usize {
        self.subs.iter().filter(|(_, d)| self.failed(d)).count()
    }

    /// Every submatrix decoder returns the same minimizers as the full one.
    pub fn decoders_agree(&self) -> bool {
        self.subs.iter().all(|(_, d)| d.minimizers == self.full.minimizers)
    }
}

pub fn transmit_and_decode(
    book: &Codebook,
    channel: &Channel,
    class: usize,
    sent: Vec<Fe>,
    error: Vec<Fe>,
    cap: u128,
) -> Result<TransmissionRecord> {
    let f = book.field();
    let a = channel.a().clone();
    let received = linalg::vec_add(f, &transmit(f, &a, &sent), &error);
    let full = decode_full(book, &a, &received, cap)?;
    let mut subs = Vec::new();
    for idx in all_independent_row_sets(f, &a, cap)? {
        let d = decode_sub(book, &a, &received, &SubmatrixChoice::Explicit(idx.clone()), cap)?;
        subs.push((idx, d));
    }
    Ok(TransmissionRecord {
        class,
        sent,
        a,
        error,
        received,
        full,
        subs,
    })
}

/// Two words and errors of rank weight at most `t` that collide on `Ã`.
#[derive(Clone, Debug)]
pub struct ConverseWitness {
    pub a: Matrix,
    pub c: Vec<Fe>,
    pub c_prime: Vec<Fe>,
    pub e: Vec<Fe>,
    pub e_prime: Vec<Fe>,
    /// The decoder fails on `(c, e)` or on `(c′, e′)`.
    pub verified: bool,
}

/// Writes `δ = zDᵀ` with `z` an `F_q`-basis of the span of the entries.
fn rank_decompose(f: &Field, delta: &[Fe]) -> (Vec<Fe>, Vec<Vec<Fe>>) {
    let coords: Vec<Vec<Fe>> = delta.iter().map(|&x| f.coords(x)).collect();
    let span = Subspace::span(f, Tag::Base, f.m(), &coords).expect("coordinates lie in F_q");
    let z: Vec<Fe> = span.basis_rows().iter().map(|r| f.from_coords(r)).collect();
    let d: Vec<Vec<Fe>> = coords
        .iter()
        .map(|c| span.coordinates_of(f, c).expect("in the span"))
        .collect();
    (z, d)
}

/// The deterministic failure instance for `d_R ≤ 2t + ρ`: a minimum-distance
/// pair `c, c′`, `L^⊥` spanned by `ρ` vectors of a basis of `⟨c − c′⟩*|_{F_q}`
/// extended to `F_q^n`, `A` a generator of `L`, and `(c′ − c)Aᵀ` split into
/// two errors of rank weight at most `t`.
pub fn converse_witness(book: &Codebook, t: usize, rho: usize, cap: u128) -> Result<ConverseWitness> {
    let f = book.field();
    let n = book.n();
    let (d, c, c_prime) = book
        .min_distance()
        .ok_or_else(|| Error::InvalidParams("codebook has a single class".into()))?;
    if d > 2 * t + rho {
        return Err(Error::PreconditionViolated(format!(
            "d_R = {d} > 2t + ρ = {}",
            2 * t + rho
        )));
    }
    if rho > n {
        return Err(Error::InvalidParams(format!("ρ = {rho} exceeds n = {n}")));
    }
    let diff = linalg::vec_sub(f, &c, &c_prime);
    let support = rankcore::rank_support(f, &diff);
    let basis = support.extend_to_full_basis(f);
    let l_perp = Subspace::span(f, Tag::Base, n, &basis[..rho])?;
    let l = l_perp.perp(f);
    let a = if l.dim() == 0 {
        Matrix::zeros(1, n)
    } else {
        l.basis().clone()
    };
    let delta = transmit(f, &a, &linalg::vec_sub(f, &c_prime, &c));
    let (z, dm) = rank_decompose(f, &delta);
    let w = z.len();
    let split = t.min(w);
    let part = |range: std::ops::Range<usize>| -> Vec<Fe> {
        dm.iter()
            .map(|row| range.clone().fold(Fe::ZERO, |acc, i| f.add(acc, f.mul(z[i], row[i]))))
            .collect()
    };
    let e = part(0..split);
    let e_prime: Vec<Fe> = part(split..w).iter().map(|&x| f.neg(x)).collect();

    let y = linalg::vec_add(f, &transmit(f, &a, &c), &e);
    let y_prime = linalg::vec_add(f, &transmit(f, &a, &c_prime), &e_prime);
    let class = book.class_of(&c).expect("c is a codeword");
    let class_prime = book.class_of(&c_prime).expect("c' is a codeword");
    let mut verified = y == y_prime
        && rankcore::rank_weight(f, &e) <= t
        && rankcore::rank_weight(f, &e_prime) <= t
        && a.cols() - a.rank(f) == rho;
    let choices = all_independent_row_sets(f, &a, cap)?;
    for idx in choices {
        let dec = decode_sub(book, &a, &y, &SubmatrixChoice::Explicit(idx), cap)?;
        let ok_c = !dec.ambiguous && dec.class == class;
        let ok_c_prime = !dec.ambiguous && dec.class == class_prime;
        verified &= !(ok_c && ok_c_prime);
    }
    Ok(ConverseWitness {
        a,
        c,
        c_prime,
        e,
        e_prime,
        verified,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub trials: usize,
    pub t: usize,
    pub rho: usize,
    pub n_rows: usize,
    pub d_r: usize,
    /// `d_R > 2t + ρ`.
    pub guaranteed: bool,
    pub failures_full: usize,
    pub failures_sub: usize,
    pub failures: usize,
    pub ambiguous: usize,
    /// Trials in which every submatrix decoder agreed with the full one.
    pub per_submatrix_agreement: usize,
    pub submatrix_decodings: usize,
    pub converse_verified: Option<bool>,
    pub seed: u64,
}

#[derive(Default)]
struct Tally {
    failures_full: usize,
    failures_sub: usize,
    failures: usize,
    ambiguous: usize,
    agreement: usize,
    decodings: usize,
}

fn run_trial(
    book: &Codebook,
    t: usize,
    rho: usize,
    n_rows: usize,
    fixed: Option<&Channel>,
    seed: u64,
    cap: u128,
) -> Result<TransmissionRecord> {
    let f = book.field();
    let mut rng = crate::rng::seeded(seed);
    let class = rng.random_range(0..book.classes.len());
    let members = &book.classes[class];
    let sent = members[rng.random_range(0..members.len())].clone();
    let channel = match fixed {
        Some(c) => c.clone(),
        None => Channel::random(f, book.n(), n_rows, rho, &mut rng)?,
    };
    let error = random_error(f, n_rows, t, &mut rng)?;
    transmit_and_decode(book, &channel, class, sent, error, cap)
}

/// Seeded trials with random rank-`(n − ρ)` transfer matrices and errors of
/// rank weight exactly `t`.
pub fn infallibility_experiment(
    book: &Codebook,
    t: usize,
    rho: usize,
    n_rows: Option<usize>,
    trials: usize,
    seed: u64,
    cap: u128,
) -> Result<ExperimentReport> {
    run_experiment(book, t, rho, n_rows, None, trials, seed, cap)
}

/// Like [`infallibility_experiment`], optionally with one fixed transfer
/// matrix, whose shape and rank then override `n_rows` and `rho`. Trials use
/// independent derived seeds and run in parallel; the tallies do not depend
/// on scheduling.
#[allow(clippy::too_many_arguments)]
pub fn run_experiment(
    book: &Codebook,
    t: usize,
    rho: usize,
    n_rows: Option<usize>,
    fixed: Option<&Channel>,
    trials: usize,
    seed: u64,
    cap: u128,
) -> Result<ExperimentReport> {
    let f = book.field();
    let n = book.n();
    let (rho, n_rows) = match fixed {
        Some(c) => {
            if c.a().cols() != n {
                return Err(Error::Shape(format!(
                    "transfer matrix has {} columns for n={n}",
                    c.a().cols()
                )));
            }
            (c.rho(), c.n_rows())
        }
        None => (rho, n_rows.unwrap_or(n)),
    };
    if t > n_rows.min(f.m()) {
        return Err(Error::InfeasibleBudget { t, n_rows, m: f.m() });
    }
    let d_r = book
        .min_distance()
        .ok_or_else(|| Error::InvalidParams("codebook has a single class".into()))?
        .0;
    let workers = std::thread::available_parallelism()
        .map_or(1, |x| x.get())
        .min(trials.max(1));
    let results: Vec<Result<Tally>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || -> Result<Tally> {
                    let mut tally = Tally::default();
                    for i in (w..trials).step_by(workers) {
                        let trial_seed = crate::rng::derive(seed, i as u64);
                        let rec = run_trial(book, t, rho, n_rows, fixed, trial_seed, cap)?;
                        let full = rec.full_failed() as usize;
                        let sub = rec.sub_failures();
                        tally.failures_full += full;
                        tally.failures_sub += sub;
                        tally.failures += (full + sub > 0) as usize;
                        tally.ambiguous += (rec.full.ambiguous || rec.subs.iter().any(|(_, d)| d.ambiguous)) as usize;
                        tally.agreement += rec.decoders_agree() as usize;
                        tally.decodings += rec.subs.len();
                    }
                    Ok(tally)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut total = Tally::default();
    for r in results {
        let r = r?;
        total.failures_full += r.failures_full;
        total.failures_sub += r.failures_sub;
        total.failures += r.failures;
        total.ambiguous += r.ambiguous;
        total.agreement += r.agreement;
        total.decodings += r.decodings;
    }
    let guaranteed = d_r > 2 * t + rho;
    if guaranteed && total.failures > 0 {
        return Err(Error::InternalInconsistency(format!(
            "{} decoding failures with d_R = {d_r} > 2t + ρ",
            total.failures
        )));
    }
    let converse_verified = if guaranteed {
        None
    } else {
        Some(converse_witness(book, t, rho, cap)?.verified)
    };
    Ok(ExperimentReport {
        trials,
        t,
        rho,
        n_rows,
        d_r,
        guaranteed,
        failures_full: total.failures_full,
        failures_sub: total.failures_sub,
        failures: total.failures,
        ambiguous: total.ambiguous,
        per_submatrix_agreement: total.agreement,
        submatrix_decodings: total.decodings,
        converse_verified,
        seed,
    })
}

/// Recovers `c` from `y = c + e` when the rank support `L` of `e` is known,
/// by solving `yAᵀ = xAᵀ` over `x ∈ C` with `A` a generator of `L^⊥`.
pub fn erasures_as_errors(c: &LinearCode, y: &[Fe], l: &Subspace) -> Result<Vec<Fe>> {
    let f = c.field();
    if y.len() != c.n() || l.n() != c.n() {
        return Err(Error::Shape("y, L and the code disagree in length".into()));
    }
    let a = l.perp(f);
    if a.dim() == 0 {
        return if c.contains(y) && c.k() == 0 {
            Ok(y.to_vec())
        } else {
            Err(Error::AmbiguityDetected("L is the whole space".into()))
        };
    }
    let g = c.generator();
    let m = g.mul(f, &a.basis().transpose())?;
    let rhs = transmit(f, a.basis(), y);
    let (u, kernel) = m.transpose().solve(f, &rhs)?;
    if !kernel.is_empty() {
        return Err(Error::AmbiguityDetected(format!(
            "{} free parameters in the erasure system",
            kernel.len()
        )));
    }
    g.left_mul_vec(f, &u)
}

/// Checks that exactly one codeword `c′` has `wt_R(y − c′) < d_R(C)` and
/// `G(y − c′) = L`.
pub fn erasure_uniqueness(c: &LinearCode, y: &[Fe], l: &Subspace, d_r: usize, cap: u128) -> Result<bool> {
    if c.size() > cap {
        return Err(Error::cap("codewords", c.size(), cap));
    }
    let f = c.field();
    let hits = c
        .codewords()
        .filter(|w| {
            let diff = linalg::vec_sub(f, y, w);
            rankcore::rank_weight(f, &diff) < d_r && rankcore::rank_support(f, &diff) == *l
        })
        .count();
    Ok(hits == 1)
}
