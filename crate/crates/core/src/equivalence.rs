//! Rank-metric and Hamming equivalences between Galois-closed spaces.
//!
//! A rank-metric equivalence is `c ↦ β·cA` with `β ∈ F_{q^m}*` and `A` over
//! `F_q`; a Hamming equivalence is monomial, `e_i ↦ γ_i e_{σ(i)}`.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Subspace, Tag};
use crate::rankcore::{self, LinearCode};

/// An `F_{q^m}`-linear map `c ↦ cΦ` restricted to a domain subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
    domain: Subspace,
}

impl LinearMap {
    pub fn new(matrix: Matrix, domain: Subspace) -> Result<Self> {
        if domain.tag() != Tag::Ext {
            return Err(Error::PreconditionViolated("domain must be an F_{q^m}-subspace".into()));
        }
        if matrix.rows() != domain.n() {
            return Err(Error::Shape(format!(
                "map has {} rows for vectors of length {}",
                matrix.rows(),
                domain.n()
            )));
        }
        Ok(LinearMap { matrix, domain })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
    pub fn domain(&self) -> &Subspace {
        &self.domain
    }
    pub fn n_out(&self) -> usize {
        self.matrix.cols()
    }

    pub fn apply(&self, f: &Field, c: &[Fe]) -> Result<Vec<Fe>> {
        if c.len() != self.domain.n() || !self.domain.contains(f, c) {
            return Err(Error::DomainViolation);
        }
        self.matrix.left_mul_vec(f, c)
    }

    pub fn apply_space(&self, f: &Field, d: &Subspace) -> Result<Subspace> {
        if !d.is_subspace_of(f, &self.domain)? {
            return Err(Error::DomainViolation);
        }
        let rows: Vec<Vec<Fe>> = d
            .basis_rows()
            .iter()
            .map(|r| self.matrix.left_mul_vec(f, r))
            .collect::<Result<_>>()?;
        Subspace::span(f, Tag::Ext, self.n_out(), &rows)
    }

    pub fn codomain(&self, f: &Field) -> Subspace {
        self.apply_space(f, &self.domain)
            .expect("domain maps into the codomain")
    }

    pub fn is_injective(&self, f: &Field) -> bool {
        self.codomain(f).dim() == self.domain.dim()
    }
}

/// `c ↦ β·cA` on a Galois-closed domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEquivalence {
    beta: Fe,
    a: Matrix,
    domain: Subspace,
    codomain: Subspace,
}

impl RankEquivalence {
    pub fn new(f: &Field, beta: Fe, a: Matrix, domain: Subspace) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::PreconditionViolated("β must be nonzero".into()));
        }
        if !a.is_base(f) {
            return Err(Error::PreconditionViolated("A must have entries in F_q".into()));
        }
        if domain.tag() != Tag::Ext || !rankcore::is_galois_closed(f, &domain) {
            return Err(Error::PreconditionViolated("domain must be Galois closed".into()));
        }
        let map = LinearMap::new(a.clone(), domain.clone())?;
        let codomain = map.codomain(f);
        if codomain.dim() != domain.dim() {
            return Err(Error::PreconditionViolated("c ↦ βcA is not injective on V".into()));
        }
        Ok(RankEquivalence {
            beta,
            a,
            domain,
            codomain,
        })
    }

    pub fn identity(n: usize) -> Self {
        RankEquivalence {
            beta: Fe::ONE,
            a: Matrix::identity(n),
            domain: Subspace::full(n, Tag::Ext),
            codomain: Subspace::full(n, Tag::Ext),
        }
    }

    pub fn beta(&self) -> Fe {
        self.beta
    }
    pub fn a(&self) -> &Matrix {
        &self.a
    }
    pub fn domain(&self) -> &Subspace {
        &self.domain
    }
    pub fn codomain(&self) -> &Subspace {
        &self.codomain
    }

    pub fn to_map(&self, f: &Field) -> LinearMap {
        let mut m = self.a.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m.set(i, j, f.mul(self.beta, m.get(i, j)));
            }
        }
        LinearMap::new(m, self.domain.clone()).expect("shapes agree")
    }

    pub fn apply(&self, f: &Field, c: &[Fe]) -> Result<Vec<Fe>> {
        self.to_map(f).apply(f, c)
    }

    pub fn apply_space(&self, f: &Field, d: &Subspace) -> Result<Subspace> {
        self.to_map(f).apply_space(f, d)
    }

    pub fn apply_code(&self, c: &LinearCode) -> Result<LinearCode> {
        let s = self.apply_space(c.field(), c.space())?;
        Ok(LinearCode::from_subspace(c.field().clone(), s))
    }

    /// `other ∘ self`; requires the codomain of `self` inside the domain of `other`.
    pub fn then(&self, f: &Field, other: &RankEquivalence) -> Result<RankEquivalence> {
        if !self.codomain.is_subspace_of(f, &other.domain)? {
            return Err(Error::DomainViolation);
        }
        RankEquivalence::new(
            f,
            f.mul(self.beta, other.beta),
            self.a.mul(f, &other.a)?,
            self.domain.clone(),
        )
    }

    /// The inverse map `V' → V`, with `A'` over `F_q` solving `(vA)A' = v` on
    /// an `F_q`-basis of `V|_{F_q}`.
    pub fn inverse(&self, f: &Field) -> Result<RankEquivalence> {
        let v = rankcore::subfield_code(f, &self.domain).basis_rows();
        let w: Vec<Vec<Fe>> = v.iter().map(|r| self.a.left_mul_vec(f, r)).collect::<Result<_>>()?;
        let n = self.domain.n();
        let n_out = self.a.cols();
        let wm = Matrix::from_rows(n_out, &w)?;
        let mut inv = Matrix::zeros(n_out, n);
        for j in 0..n {
            let col: Vec<Fe> = v.iter().map(|r| r[j]).collect();
            let (x, _) = if wm.rows() == 0 {
                (vec![Fe::ZERO; n_out], vec![])
            } else {
                wm.solve(f, &col)?
            };
            for (i, &xi) in x.iter().enumerate() {
                inv.set(i, j, xi);
            }
        }
        RankEquivalence::new(f, f.inv(self.beta)?, inv, self.codomain.clone())
    }
}

/// `e_{I[t]} ↦ γ_t e_{σ[t]}` on `V_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    n: usize,
    n_out: usize,
    support: Vec<usize>,
    sigma: Vec<usize>,
    gamma: Vec<Fe>,
}

impl MonomialMap {
    pub fn new(n: usize, n_out: usize, support: Vec<usize>, sigma: Vec<usize>, gamma: Vec<Fe>) -> Result<Self> {
        if support.len() != sigma.len() || sigma.len() != gamma.len() {
            return Err(Error::Shape("σ and γ must be indexed by I".into()));
        }
        let mut seen_in = vec![false; n];
        let mut seen_out = vec![false; n_out];
        for (&i, &j) in support.iter().zip(&sigma) {
            if i >= n || j >= n_out || seen_in[i] || seen_out[j] {
                return Err(Error::PreconditionViolated("σ must be a bijection I → J".into()));
            }
            seen_in[i] = true;
            seen_out[j] = true;
        }
        if gamma.iter().any(|g| g.is_zero()) {
            return Err(Error::PreconditionViolated("γ_i must be nonzero".into()));
        }
        Ok(MonomialMap {
            n,
            n_out,
            support,
            sigma,
            gamma,
        })
    }

    /// Diagonal map on the full space.
    pub fn diagonal(gamma: Vec<Fe>) -> Result<Self> {
        let n = gamma.len();
        Self::new(n, n, (0..n).collect(), (0..n).collect(), gamma)
    }

    pub fn gamma(&self) -> &[Fe] {
        &self.gamma
    }
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn domain(&self) -> Subspace {
        Subspace::coordinate(self.n, Tag::Ext, &self.support)
    }

    pub fn to_map(&self) -> LinearMap {
        let mut m = Matrix::zeros(self.n, self.n_out);
        for t in 0..self.support.len() {
            m.set(self.support[t], self.sigma[t], self.gamma[t]);
        }
        LinearMap::new(m, self.domain()).expect("shapes agree")
    }

    pub fn apply(&self, f: &Field, c: &[Fe]) -> Result<Vec<Fe>> {
        self.to_map().apply(f, c)
    }

    pub fn apply_space(&self, f: &Field, d: &Subspace) -> Result<Subspace> {
        self.to_map().apply_space(f, d)
    }

    /// For `n ≤ m`: a diagonal map with `wt_R(φ(D)) = wt_H(D)`.
    ///
    /// Each support coordinate `j` is assigned to the first RREF row of `D`
    /// that is nonzero there, and `γ_j = α_j / g_{i,j}` with distinct basis
    /// elements `α_j`. The rank support of `φ(D)` then grows block by block
    /// into the span of the unit vectors on `Supp(D)`.
    pub fn structured_for(f: &Field, d: &Subspace) -> Result<Self> {
        let n = d.n();
        if n > f.m() {
            return Err(Error::PreconditionViolated("requires n ≤ m".into()));
        }
        let rows = d.basis_rows();
        let mut gamma = vec![Fe::ONE; n];
        for (j, slot) in gamma.iter_mut().enumerate() {
            if let Some(r) = rows.iter().find(|r| !r[j].is_zero()) {
                *slot = f.div(f.basis()[j], r[j])?;
            }
        }
        Self::diagonal(gamma)
    }
}

/// Which of the two characterization theorems a verification runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Rank,
    Hamming,
}

/// The five conditions, evaluated independently.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub metric: Metric,
    pub weight_one: bool,
    pub vector_weights: bool,
    pub subspace_weights: bool,
    pub closed_spaces: bool,
    pub structural_form: bool,
    /// Every enumeration was complete rather than sampled.
    pub exhaustive: bool,
}

impl EquivalenceReport {
    pub fn items(&self) -> [bool; 5] {
        [
            self.weight_one,
            self.vector_weights,
            self.subspace_weights,
            self.closed_spaces,
            self.structural_form,
        ]
    }
    pub fn is_equivalence(&self) -> bool {
        self.weight_one
    }
}

const SAMPLES: usize = 200;

/// Checks the five conditions for an injective linear map on its domain and
/// fails with [`Error::InternalInconsistency`] if they disagree.
pub fn verify_equivalence(
    f: &Field,
    map: &LinearMap,
    metric: Metric,
    cap: u128,
    seed: u64,
) -> Result<EquivalenceReport> {
    if !map.is_injective(f) {
        return Err(Error::PreconditionViolated("map is not injective on its domain".into()));
    }
    let report = match metric {
        Metric::Rank => verify_rank(f, map, cap, seed)?,
        Metric::Hamming => verify_hamming(f, map, cap, seed)?,
    };
    let items = report.items();
    if items.iter().any(|&b| b != items[0]) {
        return Err(Error::InternalInconsistency(format!(
            "equivalence conditions disagree: {items:?}"
        )));
    }
    Ok(report)
}

/// Subspaces of `V` as `U·B` for coefficient subspaces `U ⊂ K^s`, or a sample.
fn subspaces_of<R: Rng>(
    f: &Field,
    basis: &[Vec<Fe>],
    n: usize,
    tag: Tag,
    cap: u128,
    rng: &mut R,
) -> Result<(Vec<Subspace>, bool)> {
    let s = basis.len();
    let lift = |u: &Subspace| -> Result<Subspace> {
        let rows: Vec<Vec<Fe>> = u.basis_rows().iter().map(|c| linalg::combine(f, c, basis, n)).collect();
        Subspace::span(f, tag, n, &rows)
    };
    match linalg::all_subspaces(f, s, tag, cap) {
        Ok(all) => Ok((all.iter().map(lift).collect::<Result<_>>()?, true)),
        Err(Error::CapExceeded { .. }) => {
            let mut out = Vec::with_capacity(SAMPLES);
            for i in 0..SAMPLES {
                let dim = 1 + i % s.max(1);
                out.push(lift(&linalg::random_subspace(f, tag, s, dim.min(s), rng))?);
            }
            Ok((out, false))
        }
        Err(e) => Err(e),
    }
}

fn vectors_of<R: Rng>(f: &Field, v: &Subspace, cap: u128, rng: &mut R) -> (Vec<Vec<Fe>>, bool) {
    if v.size(f) <= cap {
        (v.vectors(f).collect(), true)
    } else {
        let rows = v.basis_rows();
        let out = (0..SAMPLES)
            .map(|_| {
                let coeffs = linalg::random_vector(f, v.tag(), v.dim(), rng);
                linalg::combine(f, &coeffs, &rows, v.n())
            })
            .collect();
        (out, false)
    }
}

/// Basis vectors and their pairwise sums.
fn spanning_family(f: &Field, basis: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let mut out: Vec<Vec<Fe>> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(linalg::vec_add(f, &basis[i], &basis[j]));
        }
    }
    out
}

fn verify_rank(f: &Field, map: &LinearMap, cap: u128, seed: u64) -> Result<EquivalenceReport> {
    let v = map.domain();
    if !rankcore::is_galois_closed(f, v) {
        return Err(Error::PreconditionViolated("domain must be Galois closed".into()));
    }
    let mut rng = crate::rng::seeded(seed);
    let n = v.n();
    let base = rankcore::subfield_code(f, v);
    let vb = base.basis_rows();
    let (mut weight_one_family, mut exhaustive) = vectors_of(f, &base, cap, &mut rng);
    weight_one_family.retain(|x| !linalg::is_zero_vec(x));
    if !exhaustive {
        weight_one_family = spanning_family(f, &vb);
    }
    let img = |c: &[Fe]| map.apply(f, c).expect("inside the domain");

    let weight_one = weight_one_family.iter().all(|x| rankcore::rank_weight(f, &img(x)) == 1);

    let (mut vecs, ex2) = vectors_of(f, v, cap, &mut rng);
    exhaustive &= ex2;
    vecs.extend(weight_one_family.iter().cloned());
    let vector_weights = vecs
        .iter()
        .all(|c| rankcore::rank_weight(f, c) == rankcore::rank_weight(f, &img(c)));

    let (mut spaces, ex3) = subspaces_of(f, &vb, n, Tag::Ext, cap, &mut rng)?;
    exhaustive &= ex3;
    for x in &weight_one_family {
        spaces.push(Subspace::span(f, Tag::Ext, n, std::slice::from_ref(x))?);
    }
    let mut subspace_weights = true;
    for d in &spaces {
        let image = map.apply_space(f, d)?;
        if rankcore::space_rank_weight(f, d) != rankcore::space_rank_weight(f, &image) {
            subspace_weights = false;
            break;
        }
    }

    let (closed, ex4) = subspaces_of(f, &vb, n, Tag::Base, cap, &mut rng)?;
    exhaustive &= ex4;
    let mut closed_spaces = true;
    for u in closed.iter().map(|u| u.extend()).chain(std::iter::once(v.clone())) {
        if !rankcore::is_galois_closed(f, &map.apply_space(f, &u)?) {
            closed_spaces = false;
            break;
        }
    }

    // β is pinned to F_q* times the first nonzero entry of φ(v_1)
    let images: Vec<Vec<Fe>> = vb.iter().map(|x| img(x)).collect();
    let structural_form = match images.first().and_then(|w| w.iter().find(|x| !x.is_zero())) {
        None => true,
        Some(&beta) => {
            let binv = f.inv(beta)?;
            images.iter().all(|w| w.iter().all(|&x| f.in_subfield(f.mul(binv, x))))
        }
    };

    Ok(EquivalenceReport {
        metric: Metric::Rank,
        weight_one,
        vector_weights,
        subspace_weights,
        closed_spaces,
        structural_form,
        exhaustive,
    })
}

fn verify_hamming(f: &Field, map: &LinearMap, cap: u128, seed: u64) -> Result<EquivalenceReport> {
    let v = map.domain();
    let n = v.n();
    let support: Vec<usize> = rankcore::hamming_support(v);
    if *v != Subspace::coordinate(n, Tag::Ext, &support) {
        return Err(Error::PreconditionViolated(
            "domain must be a coordinate space V_I".into(),
        ));
    }
    let mut rng = crate::rng::seeded(seed);
    let units: Vec<Vec<Fe>> = support
        .iter()
        .map(|&i| {
            let mut e = vec![Fe::ZERO; n];
            e[i] = Fe::ONE;
            e
        })
        .collect();
    let img = |c: &[Fe]| map.apply(f, c).expect("inside the domain");
    let unit_images: Vec<Vec<Fe>> = units.iter().map(|e| img(e)).collect();

    let weight_one = unit_images.iter().all(|w| rankcore::hamming_weight(w) == 1);

    let (mut vecs, mut exhaustive) = vectors_of(f, v, cap, &mut rng);
    vecs.extend(spanning_family(f, &units));
    let vector_weights = vecs
        .iter()
        .all(|c| rankcore::hamming_weight(c) == rankcore::hamming_weight(&img(c)));

    let (mut spaces, ex3) = subspaces_of(f, &units, n, Tag::Ext, cap, &mut rng)?;
    exhaustive &= ex3;
    for x in spanning_family(f, &units) {
        spaces.push(Subspace::span(f, Tag::Ext, n, &[x])?);
    }
    let mut subspace_weights = true;
    for d in &spaces {
        if rankcore::hamming_weight_space(d) != rankcore::hamming_weight_space(&map.apply_space(f, d)?) {
            subspace_weights = false;
            break;
        }
    }

    let s = support.len();
    let subsets = 1u128.checked_shl(s as u32).unwrap_or(u128::MAX);
    let masks: Vec<u128> = if subsets <= cap {
        (0..subsets).collect()
    } else {
        exhaustive = false;
        let mut m: Vec<u128> = (0..SAMPLES).map(|_| rng.random::<u128>() & (subsets - 1)).collect();
        m.push(subsets - 1);
        m
    };
    let mut closed_spaces = true;
    for mask in masks {
        let idx: Vec<usize> = (0..s).filter(|t| mask >> t & 1 == 1).map(|t| support[t]).collect();
        let u = Subspace::coordinate(n, Tag::Ext, &idx);
        let image = map.apply_space(f, &u)?;
        if !image.basis_rows().iter().all(|r| rankcore::hamming_weight(r) == 1) {
            closed_spaces = false;
            break;
        }
    }

    let mut targets = std::collections::HashSet::new();
    let structural_form = unit_images.iter().all(|w| {
        let nz: Vec<usize> = (0..w.len()).filter(|&j| !w[j].is_zero()).collect();
        nz.len() == 1 && targets.insert(nz[0])
    });

    Ok(EquivalenceReport {
        metric: Metric::Hamming,
        weight_one,
        vector_weights,
        subspace_weights,
        closed_spaces,
        structural_form,
        exhaustive,
    })
}

/// `φ_B(c) = x` where `c = Σ x_i v_i`: the map `c ↦ c·M_B^{-1}`.
pub fn phi_b(f: &Field, basis: &[Vec<Fe>]) -> Result<RankEquivalence> {
    let n = basis.len();
    let m = Matrix::from_rows(n, basis)?;
    if !m.is_base(f) {
        return Err(Error::NotABasis("vectors must lie in F_q^n".into()));
    }
    if basis.iter().any(|r| r.len() != n) {
        return Err(Error::NotABasis(format!("expected {n} vectors of length {n}")));
    }
    let inv = m.inverse(f)?;
    RankEquivalence::new(f, Fe::ONE, inv, Subspace::full(n, Tag::Ext))
}

/// `ψ_B : V → F_{q^m}^{dim V}` for an `F_q`-basis `B` of `V|_{F_q}`.
pub fn psi_b(f: &Field, v: &Subspace, basis: &[Vec<Fe>]) -> Result<RankEquivalence> {
    let n = v.n();
    let s = basis.len();
    if !rankcore::is_galois_closed(f, v) {
        return Err(Error::PreconditionViolated("V must be Galois closed".into()));
    }
    let m = Matrix::from_rows(n, basis)?;
    if !m.is_base(f) || m.rank(f) != s || s != v.dim() || basis.iter().any(|r| !v.contains(f, r)) {
        return Err(Error::NotABasis("B must be an F_q-basis of V|_{F_q}".into()));
    }
    // A with M A = I_s, column by column
    let mut a = Matrix::zeros(n, s);
    for j in 0..s {
        let mut e = vec![Fe::ZERO; s];
        e[j] = Fe::ONE;
        let (x, _) = m.solve(f, &e)?;
        for (i, &xi) in x.iter().enumerate() {
            a.set(i, j, xi);
        }
    }
    RankEquivalence::new(f, Fe::ONE, a, v.clone())
}

/// `ψ_B` on `C*` with the RREF basis of `C*|_{F_q}`, and the compressed code.
pub fn minimum_length_form(c: &LinearCode) -> Result<(LinearCode, RankEquivalence)> {
    let f = c.field();
    let v = c.closure().clone();
    let b = rankcore::subfield_code(f, &v).basis_rows();
    let psi = psi_b(f, &v, &b)?;
    let s = psi.apply_space(f, c.space())?;
    Ok((LinearCode::from_subspace(f.clone(), s), psi))
}

/// Appends `extra` zero coordinates; the map `c ↦ (c, 0)` is the witness.
pub fn append_zeros(c: &LinearCode, extra: usize) -> Result<(LinearCode, RankEquivalence)> {
    let f = c.field();
    let n = c.n();
    let mut a = Matrix::zeros(n, n + extra);
    for i in 0..n {
        a.set(i, i, Fe::ONE);
    }
    let eq = RankEquivalence::new(f, Fe::ONE, a, Subspace::full(n, Tag::Ext))?;
    Ok((eq.apply_code(c)?, eq))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivMode {
    Verify(Box<RankEquivalence>),
    Invariants,
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(RankEquivalence),
    Inequivalent(String),
    PossiblyEquivalent,
    /// The supplied witness does not map `C` onto `C'`.
    WitnessRejected(String),
}

fn rank_distribution(c: &LinearCode) -> Vec<u128> {
    let f = c.field();
    let mut dist = vec![0u128; c.n() + 1];
    for w in c.codewords() {
        dist[rankcore::rank_weight(f, &w)] += 1;
    }
    dist
}

fn invariant_mismatch(c1: &LinearCode, c2: &LinearCode, cap: u128) -> Result<Option<String>> {
    if c1.k() != c2.k() {
        return Ok(Some(format!("dimensions differ: {} vs {}", c1.k(), c2.k())));
    }
    if c1.rank_weight() != c2.rank_weight() {
        return Ok(Some(format!(
            "Galois closures differ in dimension: {} vs {}",
            c1.rank_weight(),
            c2.rank_weight()
        )));
    }
    let p1 = crate::weights::grw_profile(c1, cap)?;
    let p2 = crate::weights::grw_profile(c2, cap)?;
    if p1 != p2 {
        return Ok(Some(format!("rank weight profiles differ: {p1:?} vs {p2:?}")));
    }
    if c1.size() <= cap && c2.size() <= cap {
        let mut d1 = rank_distribution(c1);
        let mut d2 = rank_distribution(c2);
        let len = d1.len().max(d2.len());
        d1.resize(len, 0);
        d2.resize(len, 0);
        if d1 != d2 {
            return Ok(Some(format!("rank weight distributions differ: {d1:?} vs {d2:?}")));
        }
    }
    Ok(None)
}

/// Decides whether some rank-metric equivalence maps `C` onto `C'`.
///
/// Search compresses both codes to their Galois closures and runs over
/// `GL(dim C*, q)`; `β` is irrelevant because codes are `F_{q^m}`-linear.
pub fn codes_equivalent(c1: &LinearCode, c2: &LinearCode, mode: &EquivMode, cap: u128) -> Result<Verdict> {
    if c1.field() != c2.field() {
        return Err(Error::ContextMismatch);
    }
    let f = c1.field();
    match mode {
        EquivMode::Verify(w) => {
            if w.domain().n() != c1.n() || w.a().cols() != c2.n() {
                return Ok(Verdict::WitnessRejected("witness has the wrong shape".into()));
            }
            match w.apply_space(f, c1.space()) {
                Ok(img) if img == *c2.space() => Ok(Verdict::Equivalent((**w).clone())),
                Ok(_) => Ok(Verdict::WitnessRejected("image of C differs from C'".into())),
                Err(Error::DomainViolation) => {
                    Ok(Verdict::WitnessRejected("C is not inside the witness domain".into()))
                }
                Err(e) => Err(e),
            }
        }
        EquivMode::Invariants => Ok(match invariant_mismatch(c1, c2, cap)? {
            Some(reason) => Verdict::Inequivalent(reason),
            None => Verdict::PossiblyEquivalent,
        }),
        EquivMode::Search => {
            if let Some(reason) = invariant_mismatch(c1, c2, cap)? {
                return Ok(Verdict::Inequivalent(reason));
            }
            let (m1, psi1) = minimum_length_form(c1)?;
            let (m2, psi2) = minimum_length_form(c2)?;
            let s = m1.n();
            let count = linalg::gl_order(s, f.q() as u64);
            if count > cap {
                return Ok(Verdict::PossiblyEquivalent);
            }
            let back = psi2.inverse(f)?;
            for rows in linalg::enumerate_bases(f, s, Tag::Base, cap)? {
                let a = Matrix::from_rows(s, &rows)?;
                let maps_into = (0..m1.k()).all(|i| {
                    let img = a.left_mul_vec(f, m1.generator().row(i)).expect("shapes agree");
                    m2.contains(&img)
                });
                if maps_into {
                    let mid = RankEquivalence::new(f, Fe::ONE, a, Subspace::full(s, Tag::Ext))?;
                    let w = psi1.then(f, &mid)?.then(f, &back)?;
                    if w.apply_space(f, c1.space())? != *c2.space() {
                        return Err(Error::InternalInconsistency(
                            "search witness fails to map C onto C'".into(),
                        ));
                    }
                    return Ok(Verdict::Equivalent(w));
                }
            }
            Ok(Verdict::Inequivalent(format!(
                "no A in GL({s}, q) maps the compressed codes onto each other"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    const A: Fe = Fe(2);
    const A2: Fe = Fe(3);

    fn f4() -> Arc<Field> {
        Field::new(2, 1, 2).unwrap()
    }

    fn swap() -> Matrix {
        Matrix::from_rows(2, &[vec![Fe::ZERO, Fe::ONE], vec![Fe::ONE, Fe::ZERO]]).unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let f = f4();
        let id = RankEquivalence::identity(2);
        assert_eq!(id.apply(&f, &[A, A2]).unwrap(), vec![A, A2]);
        let eq = RankEquivalence::new(&f, A, swap(), Subspace::full(2, Tag::Ext)).unwrap();
        assert_eq!(eq.apply(&f, &[Fe::ONE, A]).unwrap(), vec![A2, A]);
        let canon: Vec<Vec<Fe>> = Matrix::identity(3).to_rows();
        let phi = phi_b(&f, &canon).unwrap();
        assert_eq!(phi.apply(&f, &[A, Fe::ONE, A2]).unwrap(), vec![A, Fe::ONE, A2]);
    }

    #[test]
    fn domain_violation() {
        let f = f4();
        let v = Subspace::coordinate(2, Tag::Ext, &[0]);
        let eq = RankEquivalence::new(&f, Fe::ONE, Matrix::identity(2), v).unwrap();
        assert_eq!(eq.apply(&f, &[Fe::ONE, Fe::ONE]), Err(Error::DomainViolation));
    }

    #[test]
    fn phi_b_sends_basis_to_units() {
        let f = Field::new(2, 1, 3).unwrap();
        let b = vec![
            vec![Fe::ONE, Fe::ONE, Fe::ZERO],
            vec![Fe::ZERO, Fe::ONE, Fe::ONE],
            vec![Fe::ONE, Fe::ONE, Fe::ONE],
        ];
        let phi = phi_b(&f, &b).unwrap();
        for (i, v) in b.iter().enumerate() {
            let mut e = vec![Fe::ZERO; 3];
            e[i] = Fe::ONE;
            assert_eq!(phi.apply(&f, v).unwrap(), e);
        }
        // commutes with Frobenius
        let mut rng = crate::rng::seeded(5);
        for _ in 0..20 {
            let c = linalg::random_vector(&f, Tag::Ext, 3, &mut rng);
            let lhs = phi.apply(&f, &rankcore::frobenius_vec(&f, &c, 1)).unwrap();
            let rhs = rankcore::frobenius_vec(&f, &phi.apply(&f, &c).unwrap(), 1);
            assert_eq!(lhs, rhs);
        }
        let singular = vec![b[0].clone(), b[0].clone(), b[1].clone()];
        assert!(matches!(phi_b(&f, &singular), Err(Error::NotABasis(_))));
    }

    #[test]
    fn diagonal_alpha_is_not_rank_equivalence() {
        let f = f4();
        let m = Matrix::from_rows(2, &[vec![Fe::ONE, Fe::ZERO], vec![Fe::ZERO, A]]).unwrap();
        let map = LinearMap::new(m, Subspace::full(2, Tag::Ext)).unwrap();
        assert_eq!(map.apply(&f, &[Fe::ONE, Fe::ONE]).unwrap(), vec![Fe::ONE, A]);
        let r = verify_equivalence(&f, &map, Metric::Rank, 1_000_000, 0).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.items(), [false; 5]);
        // but it is a Hamming equivalence
        let h = verify_equivalence(&f, &map, Metric::Hamming, 1_000_000, 0).unwrap();
        assert_eq!(h.items(), [true; 5]);
    }

    #[test]
    fn all_beta_a_maps_on_f4_squared() {
        let f = f4();
        let mut count = 0;
        for beta in (1..4).map(Fe) {
            for rows in linalg::enumerate_bases(&f, 2, Tag::Base, 100).unwrap() {
                let a = Matrix::from_rows(2, &rows).unwrap();
                let eq = RankEquivalence::new(&f, beta, a, Subspace::full(2, Tag::Ext)).unwrap();
                let r = verify_equivalence(&f, &eq.to_map(&f), Metric::Rank, 1_000_000, 1).unwrap();
                assert!(r.exhaustive);
                assert_eq!(r.items(), [true; 5]);
                count += 1;
            }
        }
        assert_eq!(count, 18);
    }

    #[test]
    fn every_invertible_map_on_f4_squared_agrees() {
        // all 180 invertible F_4-matrices: conditions agree, and exactly 18 are rank equivalences
        let f = f4();
        let mut rank_eq = 0;
        let mut ham_eq = 0;
        for rows in linalg::enumerate_bases(&f, 2, Tag::Ext, 1000).unwrap() {
            let m = Matrix::from_rows(2, &rows).unwrap();
            let map = LinearMap::new(m, Subspace::full(2, Tag::Ext)).unwrap();
            if verify_equivalence(&f, &map, Metric::Rank, 1_000_000, 2)
                .unwrap()
                .is_equivalence()
            {
                rank_eq += 1;
            }
            if verify_equivalence(&f, &map, Metric::Hamming, 1_000_000, 2)
                .unwrap()
                .is_equivalence()
            {
                ham_eq += 1;
            }
        }
        assert_eq!(rank_eq, 18);
        // monomial: 2 permutations times 3^2 scalars
        assert_eq!(ham_eq, 18);
    }

    #[test]
    fn composition_and_inverse() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(11);
        for _ in 0..20 {
            let a = linalg::random_full_rank(&f, Tag::Base, 3, 3, &mut rng);
            let b = linalg::random_full_rank(&f, Tag::Base, 3, 3, &mut rng);
            let beta = Fe(rng.random_range(1..8));
            let e1 = RankEquivalence::new(&f, beta, a, Subspace::full(3, Tag::Ext)).unwrap();
            let e2 = RankEquivalence::new(&f, Fe::ONE, b, Subspace::full(3, Tag::Ext)).unwrap();
            let comp = e1.then(&f, &e2).unwrap();
            let r = verify_equivalence(&f, &comp.to_map(&f), Metric::Rank, 100_000, 3).unwrap();
            assert!(r.is_equivalence());
            let inv = e1.inverse(&f).unwrap();
            let c = linalg::random_vector(&f, Tag::Ext, 3, &mut rng);
            assert_eq!(inv.apply(&f, &e1.apply(&f, &c).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn psi_b_compresses() {
        let f = Field::new(2, 1, 2).unwrap();
        let c = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, Fe::ONE, Fe::ZERO]]).unwrap();
        let (short, psi) = minimum_length_form(&c).unwrap();
        assert_eq!(short.n(), 1);
        assert_eq!(psi.codomain().n(), 1);
        assert_eq!(crate::weights::grw_profile(&short, 1000).unwrap(), vec![1]);
        let v = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, A, Fe::ZERO]]).unwrap();
        let (vs, _) = minimum_length_form(&v).unwrap();
        assert_eq!(vs.n(), 2);
        assert_eq!(
            crate::weights::grw_profile(&vs, 1000).unwrap(),
            crate::weights::grw_profile(&v, 1000).unwrap()
        );
        let r = verify_equivalence(&f, &psi.to_map(&f), Metric::Rank, 100_000, 0).unwrap();
        assert!(r.is_equivalence());
    }

    #[test]
    fn code_equivalence_verdicts() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        let c1 = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, Fe::ONE]]).unwrap();
        let v = codes_equivalent(&c, &c, &EquivMode::Verify(Box::new(RankEquivalence::identity(2))), 1000).unwrap();
        assert!(matches!(v, Verdict::Equivalent(_)));
        assert!(matches!(
            codes_equivalent(&c, &c1, &EquivMode::Invariants, 1000).unwrap(),
            Verdict::Inequivalent(_)
        ));
        assert!(matches!(
            codes_equivalent(&c, &c, &EquivMode::Search, 1000).unwrap(),
            Verdict::Equivalent(_)
        ));
        let c2 = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A2]]).unwrap();
        match codes_equivalent(&c, &c2, &EquivMode::Search, 1000).unwrap() {
            Verdict::Equivalent(w) => assert_eq!(w.apply_code(&c).unwrap(), c2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn compression_is_its_own_witness() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, A, Fe::ONE]]).unwrap();
        let (short, psi) = minimum_length_form(&c).unwrap();
        assert!(matches!(
            codes_equivalent(&c, &short, &EquivMode::Verify(Box::new(psi)), 1000).unwrap(),
            Verdict::Equivalent(_)
        ));
        assert!(matches!(
            codes_equivalent(&c, &short, &EquivMode::Search, 100_000).unwrap(),
            Verdict::Equivalent(_)
        ));
    }

    #[test]
    fn zero_padding() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        let (padded, eq) = append_zeros(&c, 2).unwrap();
        assert_eq!(padded.n(), 4);
        assert_eq!(
            crate::weights::grw_profile(&padded, 10_000).unwrap(),
            crate::weights::grw_profile(&c, 10_000).unwrap()
        );
        let r = verify_equivalence(&f, &eq.to_map(&f), Metric::Rank, 100_000, 0).unwrap();
        assert_eq!(r.items(), [true; 5]);
    }

    #[test]
    fn structured_monomial_attains_hamming_weight() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(9);
        for _ in 0..30 {
            let dim = rng.random_range(1..=2);
            let d = linalg::random_subspace(&f, Tag::Ext, 3, dim, &mut rng);
            let phi = MonomialMap::structured_for(&f, &d).unwrap();
            let img = phi.apply_space(&f, &d).unwrap();
            assert_eq!(
                rankcore::space_rank_weight(&f, &img),
                rankcore::hamming_weight_space(&d)
            );
        }
    }
}
