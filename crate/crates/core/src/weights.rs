//! Generalized Hamming and rank weights, absolute and relative.
//!
//! Every definition of the rank hierarchy is implemented separately so the
//! implementations can be checked against each other:
//!
//! * `Def1`: smallest Galois-closed `V = L ⊗ F_{q^m}` with `dim(C ∩ V) ≥ r`,
//!   enumerating `L ⊂ F_q^n`;
//! * `Def3`: smallest `wt_R(D)` over `r`-dimensional subcodes `D`;
//! * `Def5`: `n − max dim L^G_U` over `U ⊂ F_{q^m}^k` of dimension `k − r`;
//! * `MaxMin` (`n ≤ m`): smallest `max{wt_R(x) : x ∈ D*}` over subcodes `D`;
//! * bases: smallest `d_{H,r}(φ_B(C))` over bases `B` of `F_q^n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::Serialize;

use crate::equivalence::{self, MonomialMap};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Odometer, Subspace, Tag};
use crate::puncture;
use crate::rankcore::{self, LinearCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Def1,
    Def3,
    Def5,
    MaxMin,
    Bases,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelMethod {
    Def1r,
    Def3r,
    Def5r,
    Bases,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    pub kind: WeightKind,
    pub relative: bool,
    pub method: String,
    pub values: Vec<usize>,
}

impl WeightProfile {
    fn new(kind: WeightKind, relative: bool, method: impl Into<String>, values: Vec<usize>) -> Self {
        WeightProfile {
            kind,
            relative,
            method: method.into(),
            values,
        }
    }

    /// `values[r-1]`.
    pub fn get(&self, r: usize) -> usize {
        self.values[r - 1]
    }
}

fn sum_counts(counts: impl Iterator<Item = u128>) -> u128 {
    counts.fold(0u128, |a, b| a.saturating_add(b))
}

fn q_of(f: &Field) -> u64 {
    f.q() as u64
}

fn big_q(f: &Field) -> u64 {
    f.order() as u64
}

/// `dim(C ∩ (L ⊗ F_{q^m})) = k + dim L − dim(C + L ⊗ F_{q^m})`.
pub fn shortened_dim(c: &LinearCode, l: &Subspace) -> usize {
    if c.k() == 0 || l.is_zero() {
        return 0;
    }
    let stacked = c.generator().stack(l.basis()).expect("same width");
    c.k() + l.dim() - stacked.rank(c.field())
}

/// `r`-dimensional subcodes `U·G` of the code generated by `g`.
fn subcodes<'a>(f: &'a Field, g: &'a Matrix, r: usize, cap: u128) -> Result<impl Iterator<Item = Subspace> + 'a> {
    let n = g.cols();
    let it = linalg::enumerate_subspaces(f, g.rows(), r, Tag::Ext, cap)?;
    Ok(it.map(move |u| {
        let rows = u.basis().mul(f, g).expect("shapes agree").to_rows();
        Subspace::span(f, Tag::Ext, n, &rows).expect("rows of length n")
    }))
}

fn subcode_count(f: &Field, k: usize) -> u128 {
    sum_counts((1..=k).map(|r| linalg::gaussian_binomial(k, r, big_q(f))))
}

fn base_subspace_count(f: &Field, n: usize) -> u128 {
    sum_counts((0..=n).map(|j| linalg::gaussian_binomial(n, j, q_of(f))))
}

/// Union of the supports of a spanning set.
fn support_of_rows(rows: &[Vec<Fe>]) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    (0..n).filter(|&j| rows.iter().any(|r| !r[j].is_zero())).count()
}

/// `d_{H,1..k}` by enumerating subcodes.
pub fn hamming_weights(c: &LinearCode, cap: u128) -> Result<WeightProfile> {
    let f = c.field();
    let count = subcode_count(f, c.k());
    if count > cap {
        return Err(Error::cap("subcodes", count, cap));
    }
    let mut values = Vec::with_capacity(c.k());
    for r in 1..=c.k() {
        let best = subcodes(f, c.generator(), r, cap)?
            .map(|d| rankcore::hamming_weight_space(&d))
            .min()
            .expect("at least one subcode");
        values.push(best);
    }
    Ok(WeightProfile::new(WeightKind::Hamming, false, "subcodes", values))
}

fn check_nested(c1: &LinearCode, c2: &LinearCode) -> Result<()> {
    if c1.field() != c2.field() {
        return Err(Error::ContextMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::AmbientMismatch(format!("n={}", c1.n()), format!("n={}", c2.n())));
    }
    if !c2.space().is_subspace_of(c1.field(), c1.space())? || c2.k() == c1.k() {
        return Err(Error::PreconditionViolated("requires C_2 ⊊ C_1".into()));
    }
    Ok(())
}

/// Subcodes `D ⊂ C_1` of dimension `r` with `D ∩ C_2 = 0`, scored by `score`.
fn relative_min(c1: &LinearCode, c2: &LinearCode, cap: u128, score: impl Fn(&Subspace) -> usize) -> Result<Vec<usize>> {
    let f = c1.field();
    let count = subcode_count(f, c1.k());
    if count > cap {
        return Err(Error::cap("subcodes of C_1", count, cap));
    }
    let ell = c1.k() - c2.k();
    let mut values = Vec::with_capacity(ell);
    for r in 1..=ell {
        let mut best = usize::MAX;
        for d in subcodes(f, c1.generator(), r, cap)? {
            if d.sum(f, c2.space())?.dim() == r + c2.k() {
                best = best.min(score(&d));
            }
        }
        values.push(best);
    }
    Ok(values)
}

/// `M_{H,1..ℓ}(C_1, C_2)`.
pub fn relative_hamming_weights(c1: &LinearCode, c2: &LinearCode, cap: u128) -> Result<WeightProfile> {
    check_nested(c1, c2)?;
    let values = relative_min(c1, c2, cap, rankcore::hamming_weight_space)?;
    Ok(WeightProfile::new(WeightKind::Hamming, true, "subcodes", values))
}

/// Generalized rank weights by the requested definition.
pub fn grw(c: &LinearCode, method: Method, cap: u128) -> Result<WeightProfile> {
    let values = match method {
        Method::Def1 => grw_def1(c, cap)?,
        Method::Def3 => grw_def3(c, cap)?,
        Method::Def5 => grw_def5(c, cap)?,
        Method::MaxMin => grw_maxmin(c, cap)?,
        Method::Bases => grw_bases(c, cap)?,
    };
    let name = match method {
        Method::Def1 => "def1",
        Method::Def3 => "def3",
        Method::Def5 => "def5",
        Method::MaxMin => "maxmin",
        Method::Bases => "bases",
    };
    Ok(WeightProfile::new(WeightKind::Rank, false, name, values))
}

/// The cheaper of `Def1` and `Def3`, cached on the code.
pub fn grw_profile(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    c.cached_profile(|| {
        let f = c.field();
        if base_subspace_count(f, c.n()) <= subcode_count(f, c.k()) {
            grw_def1(c, cap)
        } else {
            grw_def3(c, cap)
        }
    })
}

fn grw_def1(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    let f = c.field();
    let n = c.n();
    let count = base_subspace_count(f, n);
    if count > cap {
        return Err(Error::cap("subspaces of F_q^n", count, cap));
    }
    let mut values = Vec::with_capacity(c.k());
    for j in 0..=n {
        if values.len() == c.k() {
            break;
        }
        let best = linalg::enumerate_subspaces(f, n, j, Tag::Base, cap)?
            .map(|l| shortened_dim(c, &l))
            .max()
            .unwrap_or(0);
        while values.len() < best {
            values.push(j);
        }
    }
    Ok(values)
}

fn grw_def3(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    let f = c.field();
    let count = subcode_count(f, c.k());
    if count > cap {
        return Err(Error::cap("subcodes", count, cap));
    }
    (1..=c.k())
        .map(|r| {
            Ok(subcodes(f, c.generator(), r, cap)?
                .map(|d| rankcore::space_rank_weight(f, &d))
                .min()
                .expect("at least one subcode"))
        })
        .collect()
}

/// `dim L^G_U` with `L^G_U = {x ∈ F_q^n : G xᵀ ∈ U}`: the `F_q`-kernel of
/// the coordinate expansion of `H G`, `H` a basis of `U^⊥`.
fn lgu_dim(f: &Field, g: &Matrix, u: &Subspace) -> usize {
    let n = g.cols();
    let h = u.perp(f);
    if h.is_zero() {
        return n;
    }
    let hg = h.basis().mul(f, g).expect("shapes agree");
    let mut eqs = Matrix::zeros(0, n);
    for i in 0..hg.rows() {
        eqs = eqs.stack(&rankcore::mu_expand(f, hg.row(i))).expect("same width");
    }
    eqs.kernel(f).len()
}

fn grw_def5(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    let f = c.field();
    let k = c.k();
    let count = subcode_count(f, k);
    if count > cap {
        return Err(Error::cap("subspaces of F_{q^m}^k", count, cap));
    }
    let g = c.generator();
    (1..=k)
        .map(|r| {
            let best = linalg::enumerate_subspaces(f, k, k - r, Tag::Ext, cap)?
                .map(|u| lgu_dim(f, g, &u))
                .max()
                .expect("at least one U");
            Ok(c.n() - best)
        })
        .collect()
}

fn grw_maxmin(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    let f = c.field();
    if c.n() > f.m() {
        return Err(Error::PreconditionViolated("the max-min form requires n ≤ m".into()));
    }
    let count = subcode_count(f, c.k()).saturating_mul(c.closure().size(f));
    if count > cap {
        return Err(Error::cap("subcodes times closure vectors", count, cap));
    }
    (1..=c.k())
        .map(|r| {
            Ok(subcodes(f, c.generator(), r, cap)?
                .map(|d| {
                    rankcore::closure(f, &d)
                        .vectors(f)
                        .map(|x| rankcore::rank_weight(f, &x))
                        .max()
                        .unwrap_or(0)
                })
                .min()
                .expect("at least one subcode"))
        })
        .collect()
}

/// Every matrix of `GL(n, q)`; refuses above `cap`.
fn all_invertible(f: &Field, n: usize, cap: u128) -> Result<Vec<Matrix>> {
    Ok(linalg::enumerate_bases(f, n, Tag::Base, cap)?
        .into_iter()
        .map(|rows| Matrix::from_rows(n, &rows).expect("square"))
        .collect())
}

/// `c ↦ cA` applied to a list of rows.
fn map_rows(f: &Field, rows: &[Vec<Fe>], a: &Matrix) -> Vec<Vec<Fe>> {
    rows.iter()
        .map(|r| a.left_mul_vec(f, r).expect("shapes agree"))
        .collect()
}

/// `min_B d_{H,r}(φ_B(C))`. Since `φ_B` runs over `c ↦ cA` for all
/// `A ∈ GL(n,q)`, the enumeration is over matrices directly.
fn grw_bases(c: &LinearCode, cap: u128) -> Result<Vec<usize>> {
    let f = c.field();
    let gl = linalg::gl_order(c.n(), q_of(f));
    let cost = gl.saturating_mul(subcode_count(f, c.k()));
    if cost > cap {
        return Err(Error::cap("bases times subcodes", cost, cap));
    }
    let subs: Vec<Vec<Subspace>> = (1..=c.k())
        .map(|r| Ok(subcodes(f, c.generator(), r, cap)?.collect()))
        .collect::<Result<_>>()?;
    let mut best = vec![usize::MAX; c.k()];
    for a in all_invertible(f, c.n(), cap)? {
        for (r, list) in subs.iter().enumerate() {
            for d in list {
                let w = support_of_rows(&map_rows(f, &d.basis_rows(), &a));
                best[r] = best[r].min(w);
            }
        }
    }
    Ok(best)
}

/// Relative generalized rank weights by the requested definition.
pub fn relative_grw(c1: &LinearCode, c2: &LinearCode, method: RelMethod, cap: u128) -> Result<WeightProfile> {
    check_nested(c1, c2)?;
    let f = c1.field();
    let ell = c1.k() - c2.k();
    let values = match method {
        RelMethod::Def1r => {
            let n = c1.n();
            let count = base_subspace_count(f, n);
            if count > cap {
                return Err(Error::cap("subspaces of F_q^n", count, cap));
            }
            let mut values = Vec::with_capacity(ell);
            for j in 0..=n {
                if values.len() == ell {
                    break;
                }
                let best = linalg::enumerate_subspaces(f, n, j, Tag::Base, cap)?
                    .map(|l| shortened_dim(c1, &l) - shortened_dim(c2, &l))
                    .max()
                    .unwrap_or(0);
                while values.len() < best {
                    values.push(j);
                }
            }
            values
        }
        RelMethod::Def3r => relative_min(c1, c2, cap, |d| rankcore::space_rank_weight(f, d))?,
        RelMethod::Def5r => {
            let k1 = c1.k();
            let k2 = c2.k();
            let count = subcode_count(f, k1);
            if count > cap {
                return Err(Error::cap("subspaces of F_{q^m}^{k_1}", count, cap));
            }
            let g = stacked_generator(c1, c2)?;
            let mut values = Vec::with_capacity(ell);
            for r in 1..=ell {
                let mut best = 0;
                for u in linalg::enumerate_subspaces(f, k1, k1 - r, Tag::Ext, cap)? {
                    let proj: Vec<Vec<Fe>> = u.basis_rows().iter().map(|row| row[..k2].to_vec()).collect();
                    if Subspace::span(f, Tag::Ext, k2, &proj)?.dim() == k2 {
                        best = best.max(lgu_dim(f, &g, &u));
                    }
                }
                values.push(c1.n() - best);
            }
            values
        }
        RelMethod::Bases => {
            let gl = linalg::gl_order(c1.n(), q_of(f));
            let cost = gl.saturating_mul(subcode_count(f, c1.k()));
            if cost > cap {
                return Err(Error::cap("bases times subcodes", cost, cap));
            }
            let mut pool: Vec<Vec<Vec<Vec<Fe>>>> = vec![Vec::new(); ell];
            for (r, slot) in pool.iter_mut().enumerate() {
                for d in subcodes(f, c1.generator(), r + 1, cap)? {
                    if d.sum(f, c2.space())?.dim() == r + 1 + c2.k() {
                        slot.push(d.basis_rows());
                    }
                }
            }
            let mut best = vec![usize::MAX; ell];
            for a in all_invertible(f, c1.n(), cap)? {
                for (r, list) in pool.iter().enumerate() {
                    for rows in list {
                        best[r] = best[r].min(support_of_rows(&map_rows(f, rows, &a)));
                    }
                }
            }
            best
        }
    };
    let name = match method {
        RelMethod::Def1r => "def1r",
        RelMethod::Def3r => "def3r",
        RelMethod::Def5r => "def5r",
        RelMethod::Bases => "bases",
    };
    Ok(WeightProfile::new(WeightKind::Rank, true, name, values))
}

/// `G_1 = [G_2; G']` with `G'` completing the RREF basis of `C_2` greedily
/// from the RREF rows of `C_1`.
pub fn stacked_generator(c1: &LinearCode, c2: &LinearCode) -> Result<Matrix> {
    let f = c1.field();
    let mut rows = c2.space().basis_rows();
    for r in c1.space().basis_rows() {
        rows.push(r);
        if Matrix::from_rows(c1.n(), &rows)?.rank(f) < rows.len() {
            rows.pop();
        }
    }
    Matrix::from_rows(c1.n(), &rows)
}

/// Value and minimizing basis for `min_B wt_H(φ_B(D))`.
#[derive(Clone, Debug)]
pub struct BasisMinimum {
    pub value: usize,
    pub basis: Vec<Vec<Fe>>,
    pub exact: bool,
}

/// The proof's basis: an `F_q`-basis of `D*|_{F_q}` extended to `F_q^n`.
pub fn closure_basis(f: &Field, d: &Subspace) -> Vec<Vec<Fe>> {
    rankcore::subfield_code(f, &rankcore::closure(f, d)).extend_to_full_basis(f)
}

fn phi_b_weight(f: &Field, d: &Subspace, basis: &[Vec<Fe>]) -> Result<usize> {
    let phi = equivalence::phi_b(f, basis)?;
    Ok(rankcore::hamming_weight_space(&phi.apply_space(f, d)?))
}

/// Exact mode enumerates every basis; sampled mode evaluates `samples`
/// random bases together with the closure basis.
pub fn grw_via_bases(
    f: &Field,
    d: &Subspace,
    exact: bool,
    samples: usize,
    cap: u128,
    seed: u64,
) -> Result<BasisMinimum> {
    let n = d.n();
    let proof = closure_basis(f, d);
    let mut best = BasisMinimum {
        value: phi_b_weight(f, d, &proof)?,
        basis: proof,
        exact,
    };
    if exact {
        let rows = d.basis_rows();
        for a in all_invertible(f, n, cap)? {
            let w = support_of_rows(&map_rows(f, &rows, &a));
            if w < best.value {
                best.value = w;
                best.basis = a.inverse(f)?.to_rows();
            }
        }
    } else {
        let mut rng = crate::rng::seeded(seed);
        for _ in 0..samples {
            let b = linalg::random_full_rank(f, Tag::Base, n, n, &mut rng).to_rows();
            let w = phi_b_weight(f, d, &b)?;
            if w < best.value {
                best.value = w;
                best.basis = b;
            }
        }
    }
    Ok(best)
}

/// Max of `wt_R(φ(D))` over monomial maps on `F_{q^m}^n`.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialMaximum {
    pub hamming_weight: usize,
    pub structured: usize,
    /// Maximum over the whole monomial group, when under the cap.
    pub exact: Option<usize>,
    pub sampled: usize,
}

pub fn monomial_maximum(f: &Field, d: &Subspace, samples: usize, cap: u128, seed: u64) -> Result<MonomialMaximum> {
    let n = d.n();
    let structured_map = MonomialMap::structured_for(f, d)?;
    let structured = rankcore::space_rank_weight(f, &structured_map.apply_space(f, d)?);
    let nonzero: Vec<Fe> = (1..f.order()).map(Fe).collect();
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut p: Vec<usize> = (0..n).collect();
    while next_permutation(&mut p) {
        perms.push(p.clone());
    }
    let group = (perms.len() as u128).saturating_mul((nonzero.len() as u128).saturating_pow(n as u32));
    let weight_under = |sigma: &[usize], gamma: Vec<Fe>| -> Result<usize> {
        let m = MonomialMap::new(n, n, (0..n).collect(), sigma.to_vec(), gamma)?;
        Ok(rankcore::space_rank_weight(f, &m.apply_space(f, d)?))
    };
    let exact = if group <= cap {
        let mut best = 0;
        for sigma in &perms {
            for digits in Odometer::new(nonzero.len(), n) {
                let gamma = digits.iter().map(|&i| nonzero[i]).collect();
                best = best.max(weight_under(sigma, gamma)?);
            }
        }
        Some(best)
    } else {
        None
    };
    let mut rng = crate::rng::seeded(seed);
    let mut sampled = structured;
    for _ in 0..samples {
        let sigma = &perms[rng.random_range(0..perms.len())];
        let gamma = (0..n).map(|_| nonzero[rng.random_range(0..nonzero.len())]).collect();
        sampled = sampled.max(weight_under(sigma, gamma)?);
    }
    Ok(MonomialMaximum {
        hamming_weight: rankcore::hamming_weight_space(d),
        structured,
        exact,
        sampled,
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Checks of the duality theorem and of the shortening characterization.
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub d: Vec<usize>,
    pub d_dual: Vec<usize>,
    /// `n + 1 − d^⊥_s`.
    pub reflected: Vec<usize>,
    pub partition_holds: bool,
    /// `max{dim C_L : dim L = j}` for `j = 0..n`.
    pub shortening_maxima: Vec<usize>,
    pub characterization_holds: bool,
    pub violations: Vec<String>,
}

pub fn duality_check(c: &LinearCode, cap: u128) -> Result<DualityReport> {
    let f = c.field();
    let n = c.n();
    let d = grw(c, Method::Def3, cap)?.values;
    let dual = c.dual();
    let d_dual = grw(&dual, Method::Def3, cap)?.values;
    let reflected: Vec<usize> = d_dual.iter().map(|&x| n + 1 - x).collect();
    let mut violations = Vec::new();
    let mut all: BTreeSet<usize> = BTreeSet::new();
    for &x in d.iter().chain(&reflected) {
        if !all.insert(x) {
            violations.push(format!("{x} appears twice"));
        }
    }
    let partition_holds = violations.is_empty() && all == (1..=n).collect();
    if !partition_holds && violations.is_empty() {
        violations.push(format!("union {all:?} differs from 1..={n}"));
    }

    let count = base_subspace_count(f, n);
    if count > cap {
        return Err(Error::cap("subspaces of F_q^n", count, cap));
    }
    let maxima: Vec<usize> = (0..=n)
        .map(|j| {
            Ok(linalg::enumerate_subspaces(f, n, j, Tag::Base, cap)?
                .map(|l| puncture::shorten(c, &l).map(|s| s.k()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .unwrap_or(0))
        })
        .collect::<Result<_>>()?;
    let characterization: Vec<Option<usize>> = (1..=c.k()).map(|r| maxima.iter().position(|&x| x == r)).collect();
    let characterization_holds = characterization.iter().zip(&d).all(|(a, &b)| *a == Some(b));
    if !characterization_holds {
        violations.push(format!("shortening characterization {characterization:?} vs {d:?}"));
    }
    Ok(DualityReport {
        n,
        d,
        d_dual,
        reflected,
        partition_holds,
        shortening_maxima: maxima,
        characterization_holds,
        violations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

/// One bound instance: `left relation right`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRecord {
    pub name: String,
    pub r: usize,
    pub s: Option<usize>,
    pub left: String,
    pub relation: Relation,
    pub right: String,
    pub holds: bool,
    pub sharp: bool,
    /// False when the bound is only claimed outside these parameters; its
    /// truth value is still reported.
    pub applicable: bool,
}

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn fmt_rat(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

struct Builder(Vec<BoundRecord>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: &str,
        r: usize,
        s: Option<usize>,
        left: BigRational,
        rel: Relation,
        right: BigRational,
        applicable: bool,
    ) {
        let holds = match rel {
            Relation::Le => left <= right,
            Relation::Ge => left >= right,
        };
        self.0.push(BoundRecord {
            name: name.into(),
            r,
            s,
            left: fmt_rat(&left),
            relation: rel,
            right: fmt_rat(&right),
            holds,
            sharp: left == right,
            applicable,
        });
    }
}

/// Every listed bound on a rank weight profile `d` of an `[n, k]` code over
/// `F_{q^m}`. Field size in the bounds is `Q = q^m`.
pub fn bounds_report(d: &[usize], n: usize, q: u64, m: usize) -> Vec<BoundRecord> {
    let k = d.len();
    let big_q = BigInt::from(q).pow(m as u32);
    let qp = |e: usize| big_q.pow(e as u32);
    let dr = |r: usize| BigInt::from(d[r - 1]);
    let mut b = Builder(Vec::new());
    let one = BigInt::one();
    let (n_b, k_b, m_b) = (BigInt::from(n), BigInt::from(k), BigInt::from(m));

    for r in 1..k {
        b.push(
            "monotonicity",
            r,
            Some(r + 1),
            rat(dr(r + 1)),
            Relation::Ge,
            rat(dr(r) + 1),
            true,
        );
    }
    for r in 1..=k {
        let sum: BigInt = (0..r).map(|i| ceil_div(&dr(1), &qp(i))).sum();
        b.push("griesmer", r, None, rat(dr(r)), Relation::Ge, rat(sum), true);
    }
    for r in 1..=k {
        for s in r..=k {
            let num = (&big_q - &one) * dr(r);
            let sum: BigInt = (1..=s - r).map(|i| ceil_div(&num, &((qp(r) - &one) * qp(i)))).sum();
            b.push(
                "griesmer_relative",
                r,
                Some(s),
                rat(dr(s)),
                Relation::Ge,
                rat(dr(r) + sum),
                true,
            );
            b.push(
                "ratio",
                r,
                Some(s),
                rat((qp(s) - &one) * dr(r)),
                Relation::Le,
                rat((qp(s) - qp(s - r)) * dr(s)),
                true,
            );
        }
        b.push(
            "ratio_first",
            r,
            None,
            rat((qp(r) - &one) * dr(1)),
            Relation::Le,
            rat((qp(r) - qp(r - 1)) * dr(r)),
            true,
        );
        if r >= 2 {
            b.push(
                "ratio_consecutive",
                r,
                None,
                rat((qp(r) - &one) * dr(r - 1)),
                Relation::Le,
                rat((qp(r) - &big_q) * dr(r)),
                true,
            );
        }
    }
    for s in 1..k {
        for r in 1..=s {
            let num = (qp(k - r) - &one) * (&n_b - dr(s));
            let den = qp(k - s) - &one;
            let rhs = &n_b - num.div_floor(&den);
            b.push("tsfasman", r, Some(s), rat(dr(r)), Relation::Ge, rat(rhs), true);
        }
    }
    for r in 1..k {
        let gap = dr(r + 1) - dr(r);
        b.push("spacing", r, Some(r + 1), rat(gap.clone()), Relation::Ge, rat(1), true);
        b.push(
            "spacing",
            r,
            Some(r + 1),
            rat(gap),
            Relation::Le,
            rat(m_b.clone()),
            true,
        );
    }
    for r in 1..=k {
        b.push("trivial", r, None, rat(dr(r)), Relation::Ge, rat(r), true);
        b.push(
            "singleton",
            r,
            None,
            rat(dr(r)),
            Relation::Le,
            rat(&n_b - &k_b + r),
            true,
        );
        b.push(
            "singleton_field",
            r,
            None,
            rat(dr(r)),
            Relation::Le,
            rat((&m_b - 1) * &k_b + r),
            true,
        );
        b.push("singleton_rm", r, None, rat(dr(r)), Relation::Le, rat(&m_b * r), true);
        let base = BigRational::new(&m_b * (&n_b - &k_b), n_b.clone()) + rat(1);
        if r == 1 {
            b.push(
                "singleton_loidreau",
                r,
                None,
                rat(dr(r)),
                Relation::Le,
                base.clone(),
                true,
            );
        }
        let alt = base + rat(&m_b * (r - 1));
        b.push("singleton_alternative", r, None, rat(dr(r)), Relation::Le, alt, n > m);
    }
    b.0
}

/// Relative Singleton-type bounds on `M_{R,s}(C_1, C_2)` plus monotonicity.
pub fn relative_bounds_report(mv: &[usize], n: usize, k1: usize, k2: usize, m: usize) -> Vec<BoundRecord> {
    let ell = mv.len();
    let mut b = Builder(Vec::new());
    let m_b = BigInt::from(m);
    for s in 1..=ell {
        let ms = rat(mv[s - 1]);
        b.push(
            "relative_singleton",
            s,
            None,
            ms.clone(),
            Relation::Le,
            rat(n - k1 + s),
            true,
        );
        b.push(
            "relative_singleton_field",
            s,
            None,
            ms.clone(),
            Relation::Le,
            rat((m - 1) * (k1 - k2) + s),
            true,
        );
        b.push(
            "relative_singleton_rm",
            s,
            None,
            ms.clone(),
            Relation::Le,
            rat(&m_b * s),
            true,
        );
        let alt = if n > k2 {
            BigRational::new(&m_b * BigInt::from(n - k1), BigInt::from(n - k2)) + rat(&m_b * (s - 1) + 1)
        } else {
            rat(&m_b * s)
        };
        b.push(
            "relative_singleton_alternative",
            s,
            None,
            ms.clone(),
            Relation::Le,
            alt,
            n > m,
        );
        b.push("trivial", s, None, ms, Relation::Ge, rat(s), true);
        if s < ell {
            b.push(
                "monotonicity",
                s,
                Some(s + 1),
                rat(mv[s]),
                Relation::Ge,
                rat(mv[s - 1] + 1),
                true,
            );
        }
    }
    b.0
}

/// `⌊(n(n−1) − (n−m)k) / (n(m−1))⌋`; undefined for `m = 1`.
pub fn r_bound(n: usize, k: usize, m: usize) -> Option<i64> {
    if m == 1 || n == 0 {
        return None;
    }
    let num = (n * (n - 1)) as i64 - (n as i64 - m as i64) * k as i64;
    Some(Integer::div_floor(&num, &((n * (m - 1)) as i64)))
}

/// `r`-MRD and `r`-MDS classification with the equivalent conditions
/// evaluated separately.
#[derive(Clone, Debug, Serialize)]
pub struct MrdReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub is_r_mrd: bool,
    pub dual_distance_condition: bool,
    pub small_punctured_condition: bool,
    pub large_dual_punctured_condition: bool,
    pub is_r_mds: bool,
    pub dual_hamming_condition: bool,
    /// `C` is `r`-MRD iff `φ_B(C)` is `r`-MDS for every basis; `None` above the cap.
    pub bases_cross_check: Option<bool>,
    pub smallest_r_mrd: Option<usize>,
    pub smallest_r_mds: Option<usize>,
    pub r_bound: Option<i64>,
}

fn smallest_r(k: usize, dual_distance: Option<usize>) -> Option<usize> {
    let r = match dual_distance {
        None => 1,
        Some(d) => (k + 2).saturating_sub(d).max(1),
    };
    (r <= k).then_some(r)
}

pub fn classify_mrd(c: &LinearCode, r: usize, cap: u128) -> Result<MrdReport> {
    c.ensure_nonempty()?;
    let f = c.field();
    let (n, k) = (c.n(), c.k());
    if r == 0 || r > k {
        return Err(Error::InvalidParams(format!("r must lie in 1..={k}")));
    }
    let d = grw_profile(c, cap)?;
    let dh = hamming_weights(c, cap)?.values;
    let dual = c.dual();
    let (dual_rank, dual_ham) = if dual.k() == 0 {
        (None, None)
    } else {
        (
            Some(grw_profile(&dual, cap)?[0]),
            Some(hamming_weights(&dual, cap)?.values[0]),
        )
    };

    let is_r_mrd = d[r - 1] == n - k + r;
    let dual_distance_condition = dual_rank.is_none_or(|x| x + r >= k + 2);
    let mut small = true;
    for j in 0..=(k + 1 - r).min(n) {
        for l in linalg::enumerate_subspaces(f, n, j, Tag::Base, cap)? {
            if puncture::punctured_dim(c, &l) != j {
                small = false;
            }
        }
    }
    let mut large = true;
    for j in (n - k + r).saturating_sub(1)..=n {
        for l in linalg::enumerate_subspaces(f, n, j, Tag::Base, cap)? {
            if puncture::punctured_dim(&dual, &l) != n - k {
                large = false;
            }
        }
    }
    let is_r_mds = dh[r - 1] == n - k + r;
    let dual_hamming_condition = dual_ham.is_none_or(|x| x + r >= k + 2);

    let flags = [is_r_mrd, dual_distance_condition, small, large];
    if flags.iter().any(|&x| x != is_r_mrd) {
        return Err(Error::InternalInconsistency(format!(
            "r-MRD conditions disagree: {flags:?}"
        )));
    }
    if is_r_mds != dual_hamming_condition {
        return Err(Error::InternalInconsistency("r-MDS conditions disagree".into()));
    }

    let gl = linalg::gl_order(n, q_of(f));
    let bases_cross_check = if gl.saturating_mul(subcode_count(f, k)) <= cap {
        let subs: Vec<Vec<Vec<Fe>>> = subcodes(f, c.generator(), r, cap)?.map(|s| s.basis_rows()).collect();
        let mut all_mds = true;
        for a in all_invertible(f, n, cap)? {
            let w = subs
                .iter()
                .map(|rows| support_of_rows(&map_rows(f, rows, &a)))
                .min()
                .expect("nonempty");
            if w != n - k + r {
                all_mds = false;
                break;
            }
        }
        if all_mds != is_r_mrd {
            return Err(Error::InternalInconsistency(
                "basis cross-check disagrees with r-MRD".into(),
            ));
        }
        Some(all_mds)
    } else {
        None
    };

    let smallest_r_mrd = smallest_r(k, dual_rank);
    let direct = (1..=k).find(|&s| d[s - 1] == n - k + s);
    if direct != smallest_r_mrd {
        return Err(Error::InternalInconsistency(format!(
            "smallest r-MRD: formula {smallest_r_mrd:?}, profile {direct:?}"
        )));
    }
    Ok(MrdReport {
        n,
        k,
        r,
        is_r_mrd,
        dual_distance_condition,
        small_punctured_condition: small,
        large_dual_punctured_condition: large,
        is_r_mds,
        dual_hamming_condition,
        bases_cross_check,
        smallest_r_mrd,
        smallest_r_mds: smallest_r(k, dual_ham),
        r_bound: r_bound(n, k, f.m()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyReport {
    pub n: usize,
    pub k: usize,
    pub min_length: usize,
    pub is_degenerate: bool,
    /// `mk < n`, in which case every `[n, k]` code is degenerate.
    pub forced: bool,
}

pub fn degeneracy(c: &LinearCode) -> DegeneracyReport {
    let min_length = c.rank_weight();
    DegeneracyReport {
        n: c.n(),
        k: c.k(),
        min_length,
        is_degenerate: min_length < c.n(),
        forced: c.field().m() * c.k() < c.n(),
    }
}

/// A non-degenerate `[n, k]` code for `mk ≥ n`: `u_i = Σ_l α_l x_{l,i}`
/// with `x_{l,i} = e_{im+l}` while the index is below `n`, padded with unit
/// vectors until the dimension reaches `k`.
pub fn nondegenerate_code(f: &std::sync::Arc<Field>, n: usize, k: usize) -> Result<LinearCode> {
    let m = f.m();
    if m * k < n || k > n {
        return Err(Error::InvalidParams(format!(
            "needs k ≤ n ≤ mk, got n={n}, k={k}, m={m}"
        )));
    }
    let mut rows: Vec<Vec<Fe>> = Vec::new();
    for i in 0..k {
        let mut u = vec![Fe::ZERO; n];
        for (l, &alpha) in f.basis().iter().enumerate() {
            let t = i * m + l;
            if t < n {
                u[t] = alpha;
            }
        }
        if !linalg::is_zero_vec(&u) {
            rows.push(u);
        }
    }
    let mut space = Subspace::span(f, Tag::Ext, n, &rows)?;
    for i in 0..n {
        if space.dim() == k {
            break;
        }
        let mut e = vec![Fe::ZERO; n];
        e[i] = Fe::ONE;
        let bigger = space.sum(f, &Subspace::span(f, Tag::Ext, n, &[e])?)?;
        if bigger.dim() > space.dim() {
            space = bigger;
        }
    }
    Ok(LinearCode::from_subspace(f.clone(), space))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    const A: Fe = Fe(2);
    const CAP: u128 = 10_000_000;

    fn f4() -> Arc<Field> {
        Field::new(2, 1, 2).unwrap()
    }

    fn worked_example_code() -> LinearCode {
        LinearCode::new(
            f4(),
            4,
            &[
                vec![Fe::ONE, A, Fe::ZERO, Fe::ZERO],
                vec![Fe::ZERO, Fe::ZERO, A, Fe::ONE],
            ],
        )
        .unwrap()
    }

    fn gabidulin_k1() -> LinearCode {
        let f = Field::new(2, 1, 3).unwrap();
        let b = Fe(2);
        LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, b, f.mul(b, b)]]).unwrap()
    }

    #[test]
    fn worked_example_all_methods() {
        let c = worked_example_code();
        for m in [Method::Def1, Method::Def3, Method::Def5, Method::Bases] {
            assert_eq!(grw(&c, m, CAP).unwrap().values, vec![2, 4], "{m:?}");
        }
        assert_eq!(hamming_weights(&c, CAP).unwrap().values, vec![2, 4]);
        assert_eq!(c.rank_weight(), 4);
        assert!(matches!(
            grw(&c, Method::MaxMin, CAP),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn gabidulin_distance() {
        let c = gabidulin_k1();
        for m in [Method::Def1, Method::Def3, Method::Def5, Method::MaxMin, Method::Bases] {
            assert_eq!(grw(&c, m, CAP).unwrap().values, vec![3], "{m:?}");
        }
    }

    #[test]
    fn trivial_profiles() {
        let f = f4();
        let v = LinearCode::from_subspace(f.clone(), Subspace::coordinate(4, Tag::Ext, &[0, 2, 3]));
        assert_eq!(hamming_weights(&v, CAP).unwrap().values, vec![1, 2, 3]);
        assert_eq!(grw_profile(&v, CAP).unwrap(), vec![1, 2, 3]);
        let rep = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE; 3]]).unwrap();
        assert_eq!(hamming_weights(&rep, CAP).unwrap().values, vec![3]);
        assert_eq!(grw_profile(&rep, CAP).unwrap(), vec![1]);
    }

    #[test]
    fn brute_force_first_weight() {
        // d_{R,1} = min rank weight of a nonzero codeword
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(4);
        for _ in 0..20 {
            let n = rng.random_range(2..=4);
            let k = rng.random_range(1..n);
            let s = linalg::random_subspace(&f, Tag::Ext, n, k, &mut rng);
            let c = LinearCode::from_subspace(f.clone(), s);
            let brute = c
                .codewords()
                .filter(|w| !linalg::is_zero_vec(w))
                .map(|w| rankcore::rank_weight(&f, &w))
                .min()
                .unwrap();
            assert_eq!(grw_profile(&c, CAP).unwrap()[0], brute);
            let hb = c
                .codewords()
                .filter(|w| !linalg::is_zero_vec(w))
                .map(|w| rankcore::hamming_weight(&w))
                .min()
                .unwrap();
            assert_eq!(hamming_weights(&c, CAP).unwrap().values[0], hb);
        }
    }

    #[test]
    fn galois_closed_profile_is_identity() {
        let f = f4();
        let c = LinearCode::new(
            f.clone(),
            3,
            &[vec![Fe::ONE, Fe::ONE, Fe::ZERO], vec![Fe::ZERO, Fe::ONE, Fe::ONE]],
        )
        .unwrap();
        assert_eq!(grw_profile(&c, CAP).unwrap(), vec![1, 2]);
    }

    #[test]
    fn relative_examples() {
        let f = f4();
        let c1 = LinearCode::from_subspace(f.clone(), Subspace::full(2, Tag::Ext));
        let c2 = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        for m in [RelMethod::Def1r, RelMethod::Def3r, RelMethod::Def5r, RelMethod::Bases] {
            assert_eq!(relative_grw(&c1, &c2, m, CAP).unwrap().values, vec![1], "{m:?}");
        }
        // C_2 = 0 reduces to the absolute weights
        let c = worked_example_code();
        let zero = LinearCode::from_subspace(f.clone(), Subspace::zero(4, Tag::Ext));
        for m in [RelMethod::Def1r, RelMethod::Def3r, RelMethod::Def5r] {
            assert_eq!(relative_grw(&c, &zero, m, CAP).unwrap().values, vec![2, 4]);
        }
        assert!(relative_grw(&c2, &c2, RelMethod::Def1r, CAP).is_err());
    }

    #[test]
    fn duality_examples() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        let r = duality_check(&c, CAP).unwrap();
        assert_eq!(r.d, vec![2]);
        assert_eq!(r.d_dual, vec![2]);
        assert_eq!(r.reflected, vec![1]);
        assert!(r.partition_holds && r.characterization_holds);
        let full = LinearCode::from_subspace(f.clone(), Subspace::full(3, Tag::Ext));
        let r = duality_check(&full, CAP).unwrap();
        assert_eq!(r.d, vec![1, 2, 3]);
        assert!(r.reflected.is_empty() && r.partition_holds);
        let r = duality_check(&worked_example_code(), CAP).unwrap();
        assert!(r.partition_holds && r.characterization_holds, "{:?}", r.violations);
    }

    #[test]
    fn bases_minimum_equals_closure_dimension() {
        let f = f4();
        for d in linalg::enumerate_subspaces(&f, 3, 1, Tag::Ext, CAP).unwrap() {
            let b = grw_via_bases(&f, &d, true, 0, CAP, 0).unwrap();
            assert_eq!(b.value, rankcore::closure(&f, &d).dim());
            assert_eq!(phi_b_weight(&f, &d, &b.basis).unwrap(), b.value);
            let s = grw_via_bases(&f, &d, false, 10, CAP, 1).unwrap();
            assert_eq!(s.value, b.value);
            let canon = Matrix::identity(3).to_rows();
            assert!(phi_b_weight(&f, &d, &canon).unwrap() >= b.value);
        }
    }

    #[test]
    fn bounds_on_examples() {
        let recs = bounds_report(&[2, 4], 4, 2, 2);
        assert!(recs.iter().all(|b| b.holds), "{recs:?}");
        let alt: Vec<&BoundRecord> = recs.iter().filter(|b| b.name == "singleton_alternative").collect();
        assert_eq!(alt[1].right, "4");
        assert!(alt[1].sharp && alt[1].applicable);
        let sing: Vec<&BoundRecord> = recs.iter().filter(|b| b.name == "singleton").collect();
        assert!(sing[1].sharp);
        let g = gabidulin_k1();
        let recs = bounds_report(&grw_profile(&g, CAP).unwrap(), 3, 2, 3);
        assert!(recs.iter().any(|b| b.name == "singleton" && b.sharp));
    }

    #[test]
    fn bounds_hold_on_random_codes() {
        let mut rng = crate::rng::seeded(77);
        for _ in 0..40 {
            let m = rng.random_range(1..=3);
            let f = Field::new(2, 1, m).unwrap();
            let n = rng.random_range(1..=4);
            let k = rng.random_range(1..=n.min(3));
            let c = LinearCode::from_subspace(f.clone(), linalg::random_subspace(&f, Tag::Ext, n, k, &mut rng));
            let d = grw_profile(&c, CAP).unwrap();
            for b in bounds_report(&d, n, 2, m as usize) {
                assert!(b.holds, "{b:?} for {c:?} with d={d:?}");
            }
        }
    }

    #[test]
    fn mrd_classification() {
        let f = Field::new(2, 1, 4).unwrap();
        let g: Vec<Fe> = f.basis().to_vec();
        let row2: Vec<Fe> = g.iter().map(|&x| f.frobenius(x, 1)).collect();
        let c = LinearCode::new(f.clone(), 4, &[g, row2]).unwrap();
        let rep = classify_mrd(&c, 1, 100_000).unwrap();
        assert!(rep.is_r_mrd);
        assert_eq!(rep.smallest_r_mrd, Some(1));
        assert_eq!(grw_profile(&c, CAP).unwrap()[0], 3);
        let full = LinearCode::from_subspace(Field::new(2, 1, 2).unwrap(), Subspace::full(3, Tag::Ext));
        for r in 1..=3 {
            assert!(classify_mrd(&full, r, CAP).unwrap().is_r_mrd);
        }
        // n > m: never 1-MRD
        let p = worked_example_code();
        let rep = classify_mrd(&p, 1, CAP).unwrap();
        assert!(!rep.is_r_mrd);
        assert_eq!(rep.smallest_r_mrd, Some(2));
        assert_eq!(rep.bases_cross_check, Some(false));
    }

    #[test]
    fn degeneracy_examples() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        assert!(!degeneracy(&c).is_degenerate);
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, Fe::ONE]]).unwrap();
        let d = degeneracy(&c);
        assert!(d.is_degenerate);
        assert_eq!(d.min_length, 1);
        let mut count = 0;
        for s in linalg::enumerate_subspaces(&f, 3, 1, Tag::Ext, CAP).unwrap() {
            let c = LinearCode::from_subspace(f.clone(), s);
            let d = degeneracy(&c);
            assert!(d.forced && d.is_degenerate);
            count += 1;
        }
        assert_eq!(count, 21);
    }

    #[test]
    fn nondegenerate_construction() {
        for (m, n, k) in [(2, 3, 2), (2, 4, 2), (3, 3, 1), (3, 5, 2), (2, 2, 1)] {
            let f = Field::new(2, 1, m).unwrap();
            let c = nondegenerate_code(&f, n, k).unwrap();
            assert_eq!(c.k(), k);
            assert!(!degeneracy(&c).is_degenerate, "m={m} n={n} k={k}");
        }
        assert!(nondegenerate_code(&Field::new(2, 1, 2).unwrap(), 5, 2).is_err());
    }

    #[test]
    fn monomial_maximum_matches_hamming_weight() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(3);
        for _ in 0..10 {
            let d = linalg::random_subspace(&f, Tag::Ext, 3, rng.random_range(1..=2), &mut rng);
            let r = monomial_maximum(&f, &d, 20, CAP, 1).unwrap();
            assert_eq!(r.exact, Some(r.hamming_weight));
            assert_eq!(r.structured, r.hamming_weight);
            assert!(r.sampled <= r.hamming_weight);
        }
    }

    #[test]
    fn r_bound_values() {
        assert_eq!(r_bound(4, 2, 1), None);
        assert_eq!(r_bound(4, 2, 2), Some(2));
        assert_eq!(r_bound(3, 1, 3), Some(1));
    }
}
