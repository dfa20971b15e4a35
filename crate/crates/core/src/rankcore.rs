//! Rank supports, Frobenius images, Galois closures and the trace/subfield
//! codes of subspaces of `F_{q^m}^n`.

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{Matrix, Subspace, Tag};

/// `μ(c)`: the `m×n` matrix over `F_q` whose row `i` holds the
/// `α_i`-coordinates of the entries of `c`.
pub fn mu_expand(f: &Field, c: &[Fe]) -> Matrix {
    let m = f.m();
    let mut out = Matrix::zeros(m, c.len());
    for (j, &x) in c.iter().enumerate() {
        for (i, v) in f.coords(x).into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

/// Inverse of [`mu_expand`].
pub fn mu_collapse(f: &Field, m: &Matrix) -> Result<Vec<Fe>> {
    if m.rows() != f.m() {
        return Err(Error::Shape(format!("expected {} rows, got {}", f.m(), m.rows())));
    }
    Ok((0..m.cols())
        .map(|j| {
            let col: Vec<Fe> = (0..m.rows()).map(|i| m.get(i, j)).collect();
            f.from_coords(&col)
        })
        .collect())
}

/// `G(c)`, the row space of `μ(c)`.
pub fn rank_support(f: &Field, c: &[Fe]) -> Subspace {
    Subspace::from_matrix(f, Tag::Base, &mu_expand(f, c)).expect("coordinates lie in F_q")
}

pub fn rank_weight(f: &Field, c: &[Fe]) -> usize {
    mu_expand(f, c).rank(f)
}

/// `G(D)`, the sum of the rank supports of a basis of `D`.
pub fn space_support(f: &Field, d: &Subspace) -> Subspace {
    let mut stacked = Matrix::zeros(0, d.n());
    for i in 0..d.dim() {
        stacked = stacked.stack(&mu_expand(f, d.basis().row(i))).expect("same width");
    }
    Subspace::from_matrix(f, Tag::Base, &stacked).expect("coordinates lie in F_q")
}

pub fn space_rank_weight(f: &Field, d: &Subspace) -> usize {
    space_support(f, d).dim()
}

/// Hamming support of a subspace: coordinates where some vector is nonzero.
pub fn hamming_support(d: &Subspace) -> Vec<usize> {
    (0..d.n())
        .filter(|&j| (0..d.dim()).any(|i| !d.basis().get(i, j).is_zero()))
        .collect()
}

pub fn hamming_weight_space(d: &Subspace) -> usize {
    hamming_support(d).len()
}

pub fn hamming_weight(c: &[Fe]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

pub fn frobenius_vec(f: &Field, c: &[Fe], i: u64) -> Vec<Fe> {
    c.iter().map(|&x| f.frobenius(x, i)).collect()
}

/// `D^{q^i}`.
pub fn frobenius_image(f: &Field, d: &Subspace, i: u64) -> Subspace {
    let rows: Vec<Vec<Fe>> = d.basis_rows().iter().map(|r| frobenius_vec(f, r, i)).collect();
    Subspace::span(f, Tag::Ext, d.n(), &rows).expect("rows share a length")
}

/// `D* = Σ_{i<m} D^{q^i}`.
pub fn closure(f: &Field, d: &Subspace) -> Subspace {
    let mut acc = d.clone();
    for i in 1..f.m() as u64 {
        acc = acc.sum(f, &frobenius_image(f, d, i)).expect("same ambient");
    }
    acc
}

pub fn is_galois_closed(f: &Field, d: &Subspace) -> bool {
    frobenius_image(f, d, 1) == *d
}

/// `Tr(D)`, spanned over `F_q` by `Tr(α_j d_i)` for a basis `d_i` of `D`.
pub fn trace_code(f: &Field, d: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for r in d.basis_rows() {
        for &a in f.basis() {
            rows.push(r.iter().map(|&x| f.trace(f.mul(a, x))).collect::<Vec<_>>());
        }
    }
    Subspace::span(f, Tag::Base, d.n(), &rows).expect("traces lie in F_q")
}

/// `D|_{F_q} = D ∩ F_q^n`, as the `F_q`-kernel of the expanded parity checks.
pub fn subfield_code(f: &Field, d: &Subspace) -> Subspace {
    let n = d.n();
    let h = d.perp(f);
    if h.is_zero() {
        return Subspace::full(n, Tag::Base);
    }
    let mut eqs = Matrix::zeros(0, n);
    for i in 0..h.dim() {
        eqs = eqs.stack(&mu_expand(f, h.basis().row(i))).expect("same width");
    }
    let ker = eqs.kernel(f);
    Subspace::span(f, Tag::Base, n, &ker).expect("kernel of a base matrix")
}

/// `⟨L⟩_{F_{q^m}}`.
pub fn extend(l: &Subspace) -> Subspace {
    l.extend()
}

/// A linear code `C ⊂ F_{q^m}^n`.
#[derive(Clone)]
pub struct LinearCode {
    field: Arc<Field>,
    space: Subspace,
    closure: OnceLock<Subspace>,
    profile: OnceLock<Vec<usize>>,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fmt, "LinearCode[{}, {}] {:?}", self.n(), self.k(), self.space.basis())
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.space == other.space
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// Code spanned by the rows of `generator`; dependent rows are reduced away.
    pub fn new(field: Arc<Field>, n: usize, generator: &[Vec<Fe>]) -> Result<Self> {
        for r in generator {
            if let Some(x) = r.iter().find(|x| !field.contains(**x)) {
                return Err(Error::InvalidElement(format!("{x:?} is not in the field")));
            }
        }
        let space = Subspace::span(&field, Tag::Ext, n, generator)?;
        Ok(Self::from_subspace(field, space))
    }

    pub fn from_subspace(field: Arc<Field>, space: Subspace) -> Self {
        assert_eq!(space.tag(), Tag::Ext, "codes are F_q^m-linear");
        let code = LinearCode {
            field,
            space,
            closure: OnceLock::new(),
            profile: OnceLock::new(),
        };
        if code.k() * code.n() <= 64 {
            code.closure();
        }
        code
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn n(&self) -> usize {
        self.space.n()
    }
    pub fn k(&self) -> usize {
        self.space.dim()
    }
    /// RREF generator matrix.
    pub fn generator(&self) -> &Matrix {
        self.space.basis()
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::from_subspace(self.field.clone(), self.space.perp(&self.field))
    }

    pub fn closure(&self) -> &Subspace {
        self.closure.get_or_init(|| closure(&self.field, &self.space))
    }

    pub fn contains(&self, c: &[Fe]) -> bool {
        self.space.contains(&self.field, c)
    }

    /// Encodes `x` with the RREF generator.
    pub fn encode(&self, x: &[Fe]) -> Result<Vec<Fe>> {
        self.generator().left_mul_vec(&self.field, x)
    }

    pub fn codewords(&self) -> impl Iterator<Item = Vec<Fe>> + '_ {
        self.space.vectors(&self.field)
    }

    pub fn size(&self) -> u128 {
        self.space.size(&self.field)
    }

    /// Cached generalized rank weight profile; `compute` runs at most once.
    pub fn cached_profile(&self, compute: impl FnOnce() -> Result<Vec<usize>>) -> Result<Vec<usize>> {
        if let Some(p) = self.profile.get() {
            return Ok(p.clone());
        }
        let p = compute()?;
        Ok(self.profile.get_or_init(|| p).clone())
    }

    pub fn is_galois_closed(&self) -> bool {
        self.closure() == &self.space
    }

    pub fn rank_weight(&self) -> usize {
        self.closure().dim()
    }

    pub fn ensure_nonempty(&self) -> Result<()> {
        if self.k() == 0 {
            return Err(Error::Input("code has dimension zero".into()));
        }
        Ok(())
    }
}

/// The eight equivalent conditions for a code to be Galois closed.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GaloisReport {
    pub closed: bool,
    pub rref_basis_in_base_field: bool,
    pub weight_one_basis: bool,
    pub equals_extended_subfield_code: bool,
    pub equals_extended_trace_code: bool,
    pub trace_equals_subfield: bool,
    pub trace_dim_is_k: bool,
    pub subfield_dim_is_k: bool,
}

impl GaloisReport {
    pub fn flags(&self) -> [bool; 8] {
        [
            self.closed,
            self.rref_basis_in_base_field,
            self.weight_one_basis,
            self.equals_extended_subfield_code,
            self.equals_extended_trace_code,
            self.trace_equals_subfield,
            self.trace_dim_is_k,
            self.subfield_dim_is_k,
        ]
    }

    pub fn value(&self) -> bool {
        self.closed
    }
}

/// Evaluates each condition separately and fails if they disagree.
pub fn galois_characterize(c: &LinearCode, cap: u128) -> Result<GaloisReport> {
    let f = c.field();
    let d = c.space();
    let k = c.k();
    let sub = subfield_code(f, d);
    let tr = trace_code(f, d);
    let weight_one_basis = if c.size() <= cap {
        let ones: Vec<Vec<Fe>> = c.codewords().filter(|v| rank_weight(f, v) == 1).collect();
        Subspace::span(f, Tag::Ext, c.n(), &ones)? == *d
    } else {
        // every weight-one vector is β·x with x ∈ F_q^n, so they span ⟨C|_{F_q}⟩
        sub.extend() == *d
    };
    let report = GaloisReport {
        closed: is_galois_closed(f, d),
        rref_basis_in_base_field: d.basis().is_base(f),
        weight_one_basis,
        equals_extended_subfield_code: sub.extend() == *d,
        equals_extended_trace_code: tr.extend() == *d,
        trace_equals_subfield: tr == sub,
        trace_dim_is_k: tr.dim() == k,
        subfield_dim_is_k: sub.dim() == k,
    };
    let flags = report.flags();
    if flags.iter().any(|&b| b != flags[0]) {
        return Err(Error::InternalInconsistency(format!(
            "Galois-closedness conditions disagree: {flags:?}"
        )));
    }
    Ok(report)
}

/// Checks `(C|_{F_q})^⊥ = Tr(C^⊥)` and `(C^⊥)|_{F_q} = Tr(C)^⊥`.
pub fn delsarte_check(c: &LinearCode) -> (bool, bool) {
    let f = c.field();
    let dual = c.space().perp(f);
    let first = subfield_code(f, c.space()).perp(f) == trace_code(f, &dual);
    let second = subfield_code(f, &dual) == trace_code(f, c.space()).perp(f);
    (first, second)
}

/// `wt_R(D) = wt_R(D*) = dim Tr(D) = dim D*`, each side computed separately.
pub fn characteristic_check(f: &Field, d: &Subspace) -> bool {
    let w = space_rank_weight(f, d);
    let cl = closure(f, d);
    w == space_rank_weight(f, &cl) && w == trace_code(f, d).dim() && w == cl.dim()
}

/// Sum of rank supports over every vector of `D`; exponential, test oracle only.
pub fn space_support_exhaustive(f: &Field, d: &Subspace) -> Subspace {
    let mut acc = Subspace::zero(d.n(), Tag::Base);
    for v in d.vectors(f) {
        acc = acc.sum(f, &rank_support(f, &v)).expect("same ambient");
    }
    acc
}

/// `Tr(D)` from every vector of `D`; test oracle only.
pub fn trace_code_exhaustive(f: &Field, d: &Subspace) -> Subspace {
    let rows: Vec<Vec<Fe>> = d.vectors(f).map(|v| v.iter().map(|&x| f.trace(x)).collect()).collect();
    Subspace::span(f, Tag::Base, d.n(), &rows).expect("traces lie in F_q")
}

/// `D ∩ F_q^n` by scanning `F_q^n`; test oracle only.
pub fn subfield_code_exhaustive(f: &Field, d: &Subspace) -> Subspace {
    let rows: Vec<Vec<Fe>> = Subspace::full(d.n(), Tag::Base)
        .vectors(f)
        .filter(|v| d.contains(f, v))
        .collect();
    Subspace::span(f, Tag::Base, d.n(), &rows).expect("vectors lie in F_q^n")
}
