//! Rank-puncturing and rank-shortening along a subspace `L ⊂ F_q^n`.
//!
//! Puncturing projects along `L^⊥ ⊗ F_{q^m}` onto `L' ⊗ F_{q^m}` for a
//! complement `L'` of `L^⊥`. With generator matrices `A` of `L` and `A'` of
//! `L'` normalized so that `A'Aᵀ = I`, the projection is `c ↦ c AᵀA'`.

use serde::Serialize;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Odometer, Subspace, Tag};
use crate::rankcore::{self, LinearCode};

/// A subspace `L` together with a chosen complement `L'` of `L^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctureContext {
    l: Subspace,
    l_prime: Subspace,
    a: Matrix,
    a_prime: Matrix,
}

impl PunctureContext {
    /// Canonical complement: each row of `A'` is the particular solution of
    /// `A a'ᵀ = e_iᵀ` with free variables set to zero.
    pub fn new(f: &Field, l: &Subspace) -> Result<Self> {
        Self::with_offsets(f, l, &[])
    }

    /// Complement obtained by adding kernel combinations to the canonical
    /// rows: `offsets[i]` holds the coefficients for row `i`.
    pub fn with_offsets(f: &Field, l: &Subspace, offsets: &[Vec<Fe>]) -> Result<Self> {
        if l.tag() != Tag::Base {
            return Err(Error::PreconditionViolated("L must be a subspace of F_q^n".into()));
        }
        let n = l.n();
        let a = l.basis().clone();
        let mut rows = Vec::with_capacity(l.dim());
        for i in 0..l.dim() {
            let mut e = vec![Fe::ZERO; l.dim()];
            e[i] = Fe::ONE;
            let (x, ker) = a.solve(f, &e)?;
            let row = match offsets.get(i) {
                Some(coeffs) => linalg::vec_add(f, &x, &linalg::combine(f, coeffs, &ker, n)),
                None => x,
            };
            rows.push(row);
        }
        let a_prime = Matrix::from_rows(n, &rows)?;
        Self::from_matrices(f, a, a_prime)
    }

    /// Validates `A'Aᵀ = I` with `A`, `A'` over `F_q`.
    pub fn from_matrices(f: &Field, a: Matrix, a_prime: Matrix) -> Result<Self> {
        if !a.is_base(f) || !a_prime.is_base(f) {
            return Err(Error::PreconditionViolated("A and A' must have entries in F_q".into()));
        }
        if a.rows() != a_prime.rows() || a.cols() != a_prime.cols() {
            return Err(Error::Shape("A and A' must have the same shape".into()));
        }
        let prod = a_prime.mul(f, &a.transpose())?;
        if prod != Matrix::identity(a.rows()) {
            return Err(Error::PreconditionViolated("A'Aᵀ is not the identity".into()));
        }
        let l = Subspace::from_matrix(f, Tag::Base, &a)?;
        if l.dim() != a.rows() {
            return Err(Error::NotABasis("A does not have full row rank".into()));
        }
        let l_prime = Subspace::from_matrix(f, Tag::Base, &a_prime)?;
        Ok(PunctureContext { l, l_prime, a, a_prime })
    }

    /// Every valid complement of `L^⊥`, as contexts sharing `A`.
    pub fn all_complements(f: &Field, l: &Subspace, cap: u128) -> Result<Vec<Self>> {
        let k = l.dim();
        let free = l.n() - k;
        let count = (f.q() as u128).checked_pow((k * free) as u32).unwrap_or(u128::MAX);
        if count > cap {
            return Err(Error::cap("complements of L^⊥", count, cap));
        }
        let q = f.subfield();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for digits in Odometer::new(q.len(), k * free) {
            let offsets: Vec<Vec<Fe>> = (0..k)
                .map(|i| digits[i * free..(i + 1) * free].iter().map(|&d| q[d]).collect())
                .collect();
            let ctx = Self::with_offsets(f, l, &offsets)?;
            if seen.insert(ctx.l_prime.clone()) {
                out.push(ctx);
            }
        }
        Ok(out)
    }

    pub fn l(&self) -> &Subspace {
        &self.l
    }
    pub fn l_prime(&self) -> &Subspace {
        &self.l_prime
    }
    pub fn a(&self) -> &Matrix {
        &self.a
    }
    pub fn a_prime(&self) -> &Matrix {
        &self.a_prime
    }
    pub fn n(&self) -> usize {
        self.l.n()
    }
    pub fn dim(&self) -> usize {
        self.l.dim()
    }

    /// `π_{L,L'}(c) = c AᵀA'`.
    pub fn project(&self, f: &Field, c: &[Fe]) -> Vec<Fe> {
        let coords = self.compress(f, c);
        self.a_prime
            .left_mul_vec(f, &coords)
            .unwrap_or_else(|_| vec![Fe::ZERO; self.n()])
    }

    /// Coordinates of `π(c)` in the basis `A'`, i.e. `c Aᵀ ∈ F_{q^m}^{dim L}`.
    pub fn compress(&self, f: &Field, c: &[Fe]) -> Vec<Fe> {
        (0..self.a.rows()).map(|i| linalg::dot(f, c, self.a.row(i))).collect()
    }

    /// `AᵀA'`, the `n×n` projection matrix.
    pub fn projection_matrix(&self, f: &Field) -> Matrix {
        if self.dim() == 0 {
            return Matrix::zeros(self.n(), self.n());
        }
        self.a.transpose().mul(f, &self.a_prime).expect("shapes agree")
    }
}

/// `C^{L,L'} = row(G AᵀA')`.
pub fn puncture_with(c: &LinearCode, ctx: &PunctureContext) -> LinearCode {
    let f = c.field();
    let rows: Vec<Vec<Fe>> = (0..c.k()).map(|i| ctx.project(f, c.generator().row(i))).collect();
    LinearCode::new(f.clone(), c.n(), &rows).expect("projected rows have length n")
}

/// `C^L` with the canonical complement.
pub fn puncture(c: &LinearCode, l: &Subspace) -> Result<LinearCode> {
    Ok(puncture_with(c, &PunctureContext::new(c.field(), l)?))
}

/// `dim C^L = Rk(G Aᵀ)`; independent of the complement.
pub fn punctured_dim(c: &LinearCode, l: &Subspace) -> usize {
    if l.is_zero() || c.k() == 0 {
        return 0;
    }
    let f = c.field();
    c.generator()
        .mul(f, &l.basis().transpose())
        .expect("shapes agree")
        .rank(f)
}

/// `C_L = C ∩ (L ⊗ F_{q^m})`.
pub fn shorten(c: &LinearCode, l: &Subspace) -> Result<LinearCode> {
    let s = c.space().intersect(c.field(), &l.extend())?;
    Ok(LinearCode::from_subspace(c.field().clone(), s))
}

/// `C^L` inside `F_{q^m}^{dim L}` through the basis `A'`: `row(G Aᵀ)`.
pub fn puncture_compressed(c: &LinearCode, ctx: &PunctureContext) -> LinearCode {
    let f = c.field();
    let rows: Vec<Vec<Fe>> = (0..c.k()).map(|i| ctx.compress(f, c.generator().row(i))).collect();
    LinearCode::new(f.clone(), ctx.dim(), &rows).expect("compressed rows have length dim L")
}

/// `C_L` inside `F_{q^m}^{dim L}` through the RREF basis of `L`.
pub fn shorten_compressed(c: &LinearCode, l: &Subspace) -> Result<LinearCode> {
    let f = c.field();
    let s = shorten(c, l)?;
    let ext = l.extend();
    let rows: Vec<Vec<Fe>> = s
        .space()
        .basis_rows()
        .iter()
        .map(|r| ext.coordinates_of(f, r).expect("C_L lies in L ⊗ F"))
        .collect();
    LinearCode::new(f.clone(), l.dim(), &rows)
}

/// The three sides of `dim C^L = dim L − dim (C^⊥)_L = k − dim C_{L^⊥}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ForneyDims {
    pub punctured: usize,
    pub via_dual_shortening: usize,
    pub via_shortening: usize,
}

pub fn forney_dims(c: &LinearCode, l: &Subspace) -> Result<ForneyDims> {
    let f = c.field();
    let punctured = puncture(c, l)?.k();
    let dual = c.dual();
    let via_dual_shortening = l.dim() - shorten(&dual, l)?.k();
    let via_shortening = c.k() - shorten(c, &l.perp(f))?.k();
    let dims = ForneyDims {
        punctured,
        via_dual_shortening,
        via_shortening,
    };
    if punctured != via_dual_shortening || punctured != via_shortening {
        return Err(Error::InternalInconsistency(format!(
            "dimension identity fails: {dims:?}"
        )));
    }
    Ok(dims)
}

pub fn is_information_space(c: &LinearCode, l: &Subspace) -> bool {
    punctured_dim(c, l) == c.k()
}

/// `dim(C_1^L / C_2^L) = dim(C_1 / C_2)`.
pub fn is_information_space_pair(c1: &LinearCode, c2: &LinearCode, l: &Subspace) -> bool {
    punctured_dim(c1, l) - punctured_dim(c2, l) == c1.k() - c2.k()
}

/// Injectivity of the projection on an arbitrary code.
pub fn is_information_space_arbitrary(f: &Field, code: &[Vec<Fe>], l: &Subspace, cap: u128) -> Result<bool> {
    if code.len() as u128 > cap {
        return Err(Error::cap("codewords", code.len() as u128, cap));
    }
    let ctx = PunctureContext::new(f, l)?;
    let mut seen = HashSet::new();
    Ok(code.iter().all(|c| seen.insert(ctx.project(f, c))))
}

/// Pairwise disjointness of the projected classes of a coding scheme.
pub fn is_information_space_scheme(f: &Field, classes: &[Vec<Vec<Fe>>], l: &Subspace, cap: u128) -> Result<bool> {
    let total: u128 = classes.iter().map(|c| c.len() as u128).sum();
    if total > cap {
        return Err(Error::cap("scheme codewords", total, cap));
    }
    let ctx = PunctureContext::new(f, l)?;
    let mut owner = std::collections::HashMap::new();
    for (idx, class) in classes.iter().enumerate() {
        for c in class {
            if let Some(&prev) = owner.get(&ctx.project(f, c)) {
                if prev != idx {
                    return Ok(false);
                }
            } else {
                owner.insert(ctx.project(f, c), idx);
            }
        }
    }
    Ok(true)
}

/// Minimum rank distance between distinct words of an arbitrary code,
/// `None` for fewer than two distinct words.
pub fn min_rank_distance(f: &Field, code: &[Vec<Fe>]) -> Option<usize> {
    let mut best = None;
    for (i, a) in code.iter().enumerate() {
        for b in &code[i + 1..] {
            if a == b {
                continue;
            }
            let w = rankcore::rank_weight(f, &linalg::vec_sub(f, a, b));
            best = Some(best.map_or(w, |x: usize| x.min(w)));
        }
    }
    best
}

/// Outcome of the erasure-threshold checks for `ρ` erasures.
#[derive(Clone, Debug, Serialize)]
pub struct ErasureReport {
    pub rho: usize,
    pub d_r: usize,
    /// Every `L` with `dim L ≥ n − ρ` is an information space.
    pub all_info_spaces: bool,
    /// Minimum of `d_R(C^L)` over those `L`, when they are all information spaces.
    pub min_punctured_distance: Option<usize>,
    /// `d_R(C^L) ≥ d_R(C) − ρ` on every such `L`.
    pub distance_bound_holds: bool,
    /// Rows of `L^⊥` built from a basis of `⟨c⟩*` extended to `F_q^n`.
    #[serde(skip)]
    pub witness: Subspace,
    pub witness_dim: usize,
    /// For `ρ < d_R`: the witness attains `d_R(C^L) = d_R(C) − ρ`.
    /// For `ρ ≥ d_R`: the witness is not an information space.
    pub witness_confirmed: bool,
    #[serde(skip)]
    pub collision: Option<(Vec<Fe>, Vec<Fe>)>,
}

/// The proof's witness: a minimum-distance difference `c`, a basis of
/// `⟨c⟩*|_{F_q}` extended to `F_q^n`, and `L^⊥` spanned by its first `ρ`
/// vectors. Returns `(L, L', c1, c2)`.
fn erasure_witness(
    f: &Field,
    code: &[Vec<Fe>],
    n: usize,
    rho: usize,
) -> Result<(Subspace, Subspace, Vec<Fe>, Vec<Fe>)> {
    let d = min_rank_distance(f, code).ok_or_else(|| Error::InvalidParams("code has fewer than two words".into()))?;
    let (c1, c2) = code
        .iter()
        .enumerate()
        .flat_map(|(i, a)| code[i + 1..].iter().map(move |b| (a, b)))
        .find(|(a, b)| a != b && rankcore::rank_weight(f, &linalg::vec_sub(f, a, b)) == d)
        .map(|(a, b)| (a.clone(), b.clone()))
        .expect("a pair attains the minimum");
    let diff = linalg::vec_sub(f, &c1, &c2);
    let span = Subspace::span(f, Tag::Ext, n, &[diff])?;
    let base = rankcore::subfield_code(f, &rankcore::closure(f, &span));
    let basis = base.extend_to_full_basis(f);
    let rho = rho.min(n);
    let l_perp = Subspace::span(f, Tag::Base, n, &basis[..rho])?;
    let l_prime = Subspace::span(f, Tag::Base, n, &basis[rho..])?;
    Ok((l_perp.perp(f), l_prime, c1, c2))
}

/// Erasure thresholds of an arbitrary code given as a list of codewords.
pub fn erasure_thresholds(f: &Field, code: &[Vec<Fe>], n: usize, rho: usize, cap: u128) -> Result<ErasureReport> {
    let d_r = min_rank_distance(f, code).ok_or_else(|| Error::InvalidParams("code has fewer than two words".into()))?;
    let (witness, w_prime, c1, c2) = erasure_witness(f, code, n, rho)?;
    if rho < d_r {
        let mut all_info = true;
        let mut min_pd: Option<usize> = None;
        for dim in n.saturating_sub(rho)..=n {
            for l in linalg::enumerate_subspaces(f, n, dim, Tag::Base, cap)? {
                let ctx = PunctureContext::new(f, &l)?;
                let images: Vec<Vec<Fe>> = code.iter().map(|c| ctx.project(f, c)).collect();
                let distinct: HashSet<&Vec<Fe>> = images.iter().collect();
                if distinct.len() != code.len() {
                    all_info = false;
                    continue;
                }
                if let Some(pd) = min_rank_distance(f, &images) {
                    min_pd = Some(min_pd.map_or(pd, |x| x.min(pd)));
                }
            }
        }
        // the proof's complement L' = span of the remaining basis vectors
        let ctx = witness_context(f, &witness, &w_prime)?;
        let images: Vec<Vec<Fe>> = code.iter().map(|c| ctx.project(f, c)).collect();
        let attains = min_rank_distance(f, &images) == Some(d_r - rho)
            && rankcore::rank_weight(f, &linalg::vec_sub(f, &ctx.project(f, &c1), &ctx.project(f, &c2))) == d_r - rho;
        Ok(ErasureReport {
            rho,
            d_r,
            all_info_spaces: all_info,
            min_punctured_distance: min_pd,
            distance_bound_holds: min_pd.is_some_and(|x| x + rho >= d_r),
            witness_dim: witness.dim(),
            witness,
            witness_confirmed: attains,
            collision: None,
        })
    } else {
        let ctx = PunctureContext::new(f, &witness)?;
        let collide = ctx.project(f, &c1) == ctx.project(f, &c2);
        Ok(ErasureReport {
            rho,
            d_r,
            all_info_spaces: false,
            min_punctured_distance: None,
            distance_bound_holds: true,
            witness_dim: witness.dim(),
            witness,
            witness_confirmed: collide,
            collision: collide.then_some((c1, c2)),
        })
    }
}

/// Context with a prescribed complement `L'`, normalizing its basis so that
/// `A'Aᵀ = I`.
pub fn witness_context(f: &Field, l: &Subspace, l_prime: &Subspace) -> Result<PunctureContext> {
    let a = l.basis().clone();
    if l.dim() == 0 {
        return PunctureContext::from_matrices(f, a.clone(), a);
    }
    let b = l_prime.basis();
    let m = b.mul(f, &a.transpose())?;
    let inv = m
        .inverse(f)
        .map_err(|_| Error::PreconditionViolated("L' is not a complement of L^⊥".into()))?;
    PunctureContext::from_matrices(f, a, inv.mul(f, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{all_subspaces, enumerate_subspaces};
    use std::sync::Arc;

    const A: Fe = Fe(2);

    fn f4() -> Arc<Field> {
        Field::new(2, 1, 2).unwrap()
    }

    fn example_code() -> LinearCode {
        let f = f4();
        LinearCode::new(
            f,
            4,
            &[
                vec![Fe::ONE, A, Fe::ZERO, Fe::ZERO],
                vec![Fe::ZERO, Fe::ZERO, A, Fe::ONE],
            ],
        )
        .unwrap()
    }

    #[test]
    fn coordinate_complement_is_itself() {
        let f = f4();
        let l = Subspace::coordinate(4, Tag::Base, &[1, 3]);
        let ctx = PunctureContext::new(&f, &l).unwrap();
        assert_eq!(ctx.a(), ctx.a_prime());
    }

    #[test]
    fn small_complement() {
        let f = Field::new(2, 1, 1).unwrap();
        let l = Subspace::span(&f, Tag::Base, 3, &[vec![Fe::ONE, Fe::ONE, Fe::ZERO]]).unwrap();
        let ctx = PunctureContext::new(&f, &l).unwrap();
        assert_eq!(ctx.a_prime().to_rows(), vec![vec![Fe::ONE, Fe::ZERO, Fe::ZERO]]);
        for l in all_subspaces(&f, 3, Tag::Base, 100)
            .unwrap()
            .into_iter()
            .filter(|l| !l.is_zero())
        {
            for ctx in PunctureContext::all_complements(&f, &l, 1000).unwrap() {
                let prod = ctx.a_prime().mul(&f, &ctx.a().transpose()).unwrap();
                assert_eq!(prod, Matrix::identity(l.dim()));
                assert!(ctx.l_prime().intersect(&f, &l.perp(&f)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn complement_count() {
        // complements of a line in F_2^3 are the 4 lines off a plane
        let f = Field::new(2, 1, 1).unwrap();
        let l = Subspace::span(&f, Tag::Base, 3, &[vec![Fe::ONE, Fe::ONE, Fe::ZERO]]).unwrap();
        let all = PunctureContext::all_complements(&f, &l, 1000).unwrap();
        let brute = Subspace::full(3, Tag::Base)
            .vectors(&f)
            .filter(|v| !linalg::dot(&f, v, &[Fe::ONE, Fe::ONE, Fe::ZERO]).is_zero())
            .count();
        assert_eq!(all.len(), brute);
    }

    #[test]
    fn projection_examples() {
        let f = f4();
        let l = Subspace::coordinate(2, Tag::Base, &[0]);
        let ctx = PunctureContext::new(&f, &l).unwrap();
        assert_eq!(ctx.project(&f, &[A, Fe::ONE]), vec![A, Fe::ZERO]);
        assert_eq!(ctx.project(&f, &[Fe::ZERO, A]), vec![Fe::ZERO, Fe::ZERO]);
        let full = PunctureContext::new(&f, &Subspace::full(2, Tag::Base)).unwrap();
        assert_eq!(full.project(&f, &[A, Fe::ONE]), vec![A, Fe::ONE]);
    }

    #[test]
    fn projection_properties() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(2);
        for l in all_subspaces(&f, 3, Tag::Base, 100).unwrap() {
            let ctx = PunctureContext::new(&f, &l).unwrap();
            let img = ctx.l_prime().extend();
            let ker = l.perp(&f).extend();
            for _ in 0..10 {
                let c = linalg::random_vector(&f, Tag::Ext, 3, &mut rng);
                let p = ctx.project(&f, &c);
                assert_eq!(ctx.project(&f, &p), p);
                assert!(img.contains(&f, &p));
                assert!(ker.contains(&f, &linalg::vec_sub(&f, &c, &p)));
            }
        }
    }

    #[test]
    fn worked_example_puncturing() {
        let c = example_code();
        let l = Subspace::coordinate(4, Tag::Base, &[0, 1]);
        let p = puncture(&c, &l).unwrap();
        let expected = LinearCode::new(c.field().clone(), 4, &[vec![Fe::ONE, A, Fe::ZERO, Fe::ZERO]]).unwrap();
        assert_eq!(p, expected);
        let full = Subspace::full(4, Tag::Base);
        assert_eq!(puncture(&c, &full).unwrap(), c);
        assert_eq!(shorten(&c, &full).unwrap(), c);
    }

    #[test]
    fn forney_exhaustive_on_worked_example() {
        let c = example_code();
        let f = c.field().clone();
        for l in all_subspaces(&f, 4, Tag::Base, 1000).unwrap() {
            let d = forney_dims(&c, &l).unwrap();
            assert_eq!(d.punctured, punctured_dim(&c, &l));
        }
    }

    #[test]
    fn classical_puncturing_on_coordinates() {
        let c = example_code();
        let f = c.field().clone();
        for mask in 0u32..16 {
            let idx: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            let l = Subspace::coordinate(4, Tag::Base, &idx);
            // classical puncturing: zero the coordinates outside I
            let rows: Vec<Vec<Fe>> = c
                .codewords()
                .map(|w| (0..4).map(|j| if idx.contains(&j) { w[j] } else { Fe::ZERO }).collect())
                .collect();
            let classical = Subspace::span(&f, Tag::Ext, 4, &rows).unwrap();
            assert_eq!(puncture(&c, &l).unwrap().space(), &classical);
            let short: Vec<Vec<Fe>> = c
                .codewords()
                .filter(|w| (0..4).all(|j| idx.contains(&j) || w[j].is_zero()))
                .collect();
            let classical_short = Subspace::span(&f, Tag::Ext, 4, &short).unwrap();
            assert_eq!(shorten(&c, &l).unwrap().space(), &classical_short);
        }
    }

    #[test]
    fn one_dim_code_over_f4() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        for l in all_subspaces(&f, 2, Tag::Base, 100).unwrap() {
            let expect = usize::from(!l.is_zero());
            assert_eq!(puncture(&c, &l).unwrap().k(), expect);
            assert_eq!(is_information_space(&c, &l), !l.is_zero());
        }
    }

    #[test]
    fn shortening_not_inside_puncturing() {
        // a witness that C_L ⊄ C^L can occur
        let f = f4();
        let c = LinearCode::new(
            f.clone(),
            3,
            &[vec![Fe::ONE, Fe::ONE, Fe::ZERO], vec![Fe::ZERO, A, Fe::ONE]],
        )
        .unwrap();
        let mut witness = false;
        for l in all_subspaces(&f, 3, Tag::Base, 1000).unwrap() {
            let s = shorten(&c, &l).unwrap();
            let p = puncture(&c, &l).unwrap();
            if !s.space().is_subspace_of(&f, p.space()).unwrap() {
                witness = true;
            }
        }
        assert!(witness);
    }

    #[test]
    fn complements_give_equivalent_punctured_codes() {
        let c = example_code();
        let f = c.field().clone();
        for l in enumerate_subspaces(&f, 4, 2, Tag::Base, 1000).unwrap().take(12) {
            let all = PunctureContext::all_complements(&f, &l, 1000).unwrap();
            let base = puncture_with(&c, &all[0]);
            for ctx in &all[1..] {
                let other = puncture_with(&c, ctx);
                assert_eq!(other.k(), base.k());
                // the canonical map π_{L,L''} restricted to L' ⊗ F preserves rank weight
                for i in 0..base.k() {
                    let v = base.generator().row(i);
                    let w = ctx.project(&f, v);
                    assert!(other.contains(&w));
                    assert_eq!(rankcore::rank_weight(&f, v), rankcore::rank_weight(&f, &w));
                }
            }
        }
    }

    #[test]
    fn erasure_examples() {
        let f = Field::new(2, 1, 3).unwrap();
        let b = Fe(2);
        let c = LinearCode::new(f.clone(), 3, &[vec![Fe::ONE, b, f.mul(b, b)]]).unwrap();
        let words: Vec<Vec<Fe>> = c.codewords().collect();
        let r0 = erasure_thresholds(&f, &words, 3, 0, 1000).unwrap();
        assert!(r0.all_info_spaces && r0.witness_confirmed);
        assert_eq!(r0.min_punctured_distance, Some(3));
        let r1 = erasure_thresholds(&f, &words, 3, 1, 1000).unwrap();
        assert!(r1.all_info_spaces && r1.distance_bound_holds && r1.witness_confirmed);
        assert_eq!(r1.min_punctured_distance, Some(2));
        assert_eq!(r1.witness_dim, 2);
        let r3 = erasure_thresholds(&f, &words, 3, 3, 1000).unwrap();
        assert!(!r3.all_info_spaces && r3.witness_confirmed);
        let (x, y) = r3.collision.unwrap();
        assert_ne!(x, y);
    }

    #[test]
    fn information_space_variants() {
        let f = f4();
        let c = LinearCode::new(f.clone(), 2, &[vec![Fe::ONE, A]]).unwrap();
        assert!(!is_information_space(&c, &Subspace::zero(2, Tag::Base)));
        let words: Vec<Vec<Fe>> = c.codewords().collect();
        for l in all_subspaces(&f, 2, Tag::Base, 100).unwrap() {
            assert_eq!(
                is_information_space_arbitrary(&f, &words, &l, 100).unwrap(),
                is_information_space(&c, &l)
            );
        }
    }
}
