//! Dense matrices and canonical subspaces over `F_q` or `F_{q^m}`.
//!
//! Entries are always [`Fe`] values of the extension field; a matrix "over
//! `F_q`" simply has every entry in the subfield, and every operation here
//! keeps it there. [`Tag`] records which scalar field a subspace is a vector
//! space over, which matters for spans and enumeration but not for echelon
//! forms.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Scalar field of a subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    /// `F_q`
    Base,
    /// `F_{q^m}`
    Ext,
}

impl Tag {
    /// The scalars of this field, zero first.
    pub fn scalars(self, f: &Field) -> Vec<Fe> {
        match self {
            Tag::Base => f.subfield().to_vec(),
            Tag::Ext => f.elements().collect(),
        }
    }

    pub fn size(self, f: &Field) -> u64 {
        match self {
            Tag::Base => f.q() as u64,
            Tag::Ext => f.order() as u64,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tag::Base => "F_q",
            Tag::Ext => "F_q^m",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<u32> = self.row(i).iter().map(|x| x.0).collect();
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

pub fn vec_add(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, s: Fe, a: &[Fe]) -> Vec<Fe> {
    a.iter().map(|&x| f.mul(s, x)).collect()
}

pub fn dot(f: &Field, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn is_zero_vec(a: &[Fe]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// `Σ coeffs[i]·rows[i]`.
pub fn combine(f: &Field, coeffs: &[Fe], rows: &[Vec<Fe>], n: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; n];
    for (&c, r) in coeffs.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(r) {
            *o = f.add(*o, f.mul(c, x));
        }
    }
    out
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Fe>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix, `x·M`.
    pub fn left_mul_vec(&self, f: &Field, x: &[Fe]) -> Result<Vec<Fe>> {
        if x.len() != self.rows {
            return Err(Error::Shape(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.rows
            )));
        }
        Ok(combine(f, x, &self.to_rows(), self.cols))
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Shape("stacking matrices with different column counts".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows: Vec<Vec<Fe>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Matrix::from_rows(self.cols, &rows).expect("rows share a length")
    }

    /// Reduced row echelon form and pivot columns; zero rows are dropped.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right kernel `{x : M xᵀ = 0}`, one vector per free column.
    pub fn kernel(&self, f: &Field) -> Vec<Vec<Fe>> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![Fe::ZERO; self.cols];
                x[fc] = Fe::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(i, fc));
                }
                x
            })
            .collect()
    }

    /// Basis of the left kernel `{y : y M = 0}`.
    pub fn left_kernel(&self, f: &Field) -> Vec<Vec<Fe>> {
        self.transpose().kernel(f)
    }

    /// Solves `M xᵀ = bᵀ`. Returns the particular solution with every free
    /// variable set to zero, and a kernel basis.
    pub fn solve(&self, f: &Field, b: &[Fe]) -> Result<(Vec<Fe>, Vec<Vec<Fe>>)> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, bi);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Ok((x, self.kernel(f)))
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Fe::ONE);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotABasis("matrix is singular".into()));
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// True when every entry lies in `F_q`.
    pub fn is_base(&self, f: &Field) -> bool {
        self.data.iter().all(|&x| f.in_subfield(x))
    }
}

/// A subspace of `K^n` (`K` given by the tag) stored as its RREF basis.
///
/// Equal subspaces have identical representations, so `==` and `Hash` are
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    tag: Tag,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace<{}^{}, dim {}> {:?}",
            self.tag.name(),
            self.n,
            self.dim(),
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(n: usize, tag: Tag) -> Self {
        Subspace {
            n,
            tag,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize, tag: Tag) -> Self {
        Subspace {
            n,
            tag,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    /// Span of `rows`. Rows for a base-field subspace must lie in `F_q^n`.
    pub fn span(f: &Field, tag: Tag, n: usize, rows: &[Vec<Fe>]) -> Result<Self> {
        let m = Matrix::from_rows(n, rows)?;
        Self::from_matrix(f, tag, &m)
    }

    pub fn from_matrix(f: &Field, tag: Tag, m: &Matrix) -> Result<Self> {
        if tag == Tag::Base && !m.is_base(f) {
            return Err(Error::InvalidElement(
                "base-field subspace spanned by vectors outside F_q^n".into(),
            ));
        }
        let (basis, pivots) = m.rref(f);
        Ok(Subspace {
            n: m.cols(),
            tag,
            basis,
            pivots,
        })
    }

    /// Coordinate subspace spanned by `e_i`, `i ∈ idx`.
    pub fn coordinate(n: usize, tag: Tag, idx: &[usize]) -> Self {
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let rows: Vec<Vec<Fe>> = sorted
            .iter()
            .map(|&i| {
                let mut v = vec![Fe::ZERO; n];
                v[i] = Fe::ONE;
                v
            })
            .collect();
        Subspace {
            n,
            tag,
            basis: Matrix::from_rows(n, &rows).expect("unit rows"),
            pivots: sorted,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn tag(&self) -> Tag {
        self.tag
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn basis_rows(&self) -> Vec<Vec<Fe>> {
        self.basis.to_rows()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.n != other.n || self.tag != other.tag {
            return Err(Error::AmbientMismatch(
                format!("{}^{}", self.tag.name(), self.n),
                format!("{}^{}", other.tag.name(), other.n),
            ));
        }
        Ok(())
    }

    pub fn contains(&self, f: &Field, v: &[Fe]) -> bool {
        if v.len() != self.n {
            return false;
        }
        if self.tag == Tag::Base && !v.iter().all(|&x| f.in_subfield(x)) {
            return false;
        }
        self.coordinates_of(f, v).is_some()
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the span.
    pub fn coordinates_of(&self, f: &Field, v: &[Fe]) -> Option<Vec<Fe>> {
        let coeffs: Vec<Fe> = self.pivots.iter().map(|&p| v[p]).collect();
        let back = combine(f, &coeffs, &self.basis_rows(), self.n);
        (back == v).then_some(coeffs)
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok((0..self.dim()).all(|i| other.contains(f, self.basis.row(i))))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Subspace::from_matrix(f, self.tag, &self.basis.stack(&other.basis)?)
    }

    /// Intersection from the left kernel of the stacked bases: `aU = -bV`.
    pub fn intersect(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.n, self.tag));
        }
        let stacked = self.basis.stack(&other.basis)?;
        let rows = self.basis_rows();
        let vecs: Vec<Vec<Fe>> = stacked
            .left_kernel(f)
            .iter()
            .map(|y| combine(f, &y[..self.dim()], &rows, self.n))
            .collect();
        Subspace::span(f, self.tag, self.n, &vecs)
    }

    /// Orthogonal complement under `x·y = Σ x_i y_i`.
    pub fn perp(&self, f: &Field) -> Subspace {
        let rows = if self.is_zero() {
            Matrix::identity(self.n).to_rows()
        } else {
            self.basis.kernel(f)
        };
        Subspace::span(f, self.tag, self.n, &rows).expect("kernel stays in the scalar field")
    }

    /// `⟨D⟩_{F_{q^m}}` for a base-field subspace; identity on extension subspaces.
    pub fn extend(&self) -> Subspace {
        Subspace {
            n: self.n,
            tag: Tag::Ext,
            basis: self.basis.clone(),
            pivots: self.pivots.clone(),
        }
    }

    /// Every vector of the subspace, in odometer order over RREF coefficients.
    pub fn vectors<'a>(&'a self, f: &'a Field) -> impl Iterator<Item = Vec<Fe>> + 'a {
        let scalars = self.tag.scalars(f);
        let rows = self.basis_rows();
        let n = self.n;
        Odometer::new(scalars.len(), self.dim()).map(move |digits| {
            let coeffs: Vec<Fe> = digits.iter().map(|&d| scalars[d]).collect();
            combine(f, &coeffs, &rows, n)
        })
    }

    /// `|K|^dim`, saturating.
    pub fn size(&self, f: &Field) -> u128 {
        (self.tag.size(f) as u128)
            .checked_pow(self.dim() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Extends the basis by standard unit vectors to a basis of the ambient space.
    /// The original RREF rows come first.
    pub fn extend_to_full_basis(&self, f: &Field) -> Vec<Vec<Fe>> {
        let mut rows = self.basis_rows();
        let mut rank = rows.len();
        for i in 0..self.n {
            if rank == self.n {
                break;
            }
            let mut e = vec![Fe::ZERO; self.n];
            e[i] = Fe::ONE;
            rows.push(e);
            let r = Matrix::from_rows(self.n, &rows).unwrap().rank(f);
            if r > rank {
                rank = r;
            } else {
                rows.pop();
            }
        }
        rows
    }
}

/// Mixed-radix counter over `len` digits in `0..radix`, first digit fastest.
#[derive(Clone, Debug)]
pub struct Odometer {
    radix: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Odometer {
    pub fn new(radix: usize, len: usize) -> Self {
        Odometer {
            radix,
            digits: vec![0; len],
            done: radix == 0 && len > 0,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.digits.clone();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.radix {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// `[n choose r]_q`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, r: usize, q: u64) -> u128 {
    if r > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        let a = q.checked_pow((n - i) as u32).map(|x| x - 1);
        let b = q.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(x), Some(y)) => {
                let g = gcd(x, y);
                num = x / g;
                den = y / g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `|GL(n, q)| = Π (q^n − q^i)`, saturating.
pub fn gl_order(n: usize, q: u64) -> u128 {
    let q = q as u128;
    let Some(qn) = q.checked_pow(n as u32) else {
        return u128::MAX;
    };
    let mut acc: u128 = 1;
    for i in 0..n {
        let t = qn - q.pow(i as u32);
        match acc.checked_mul(t) {
            Some(v) => acc = v,
            None => return u128::MAX,
        }
    }
    acc
}

/// All `r`-dimensional subspaces of `K^n`, each exactly once.
///
/// Pivot sets are visited in colexicographic order; within a pivot set the
/// free RREF entries run through an odometer.
pub struct SubspaceIter {
    n: usize,
    r: usize,
    tag: Tag,
    scalars: Vec<Fe>,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    odo: Odometer,
}

impl SubspaceIter {
    fn load_pattern(&mut self) {
        if let Some(p) = &self.pivots {
            self.free.clear();
            for (i, &pc) in p.iter().enumerate() {
                for j in pc + 1..self.n {
                    if !p.contains(&j) {
                        self.free.push((i, j));
                    }
                }
            }
            self.odo = Odometer::new(self.scalars.len(), self.free.len());
        }
    }
}

/// Colex successor of a strictly increasing combination within `0..n`.
fn next_colex(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in 0..r {
        let limit = if i + 1 < r { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            let pivots = self.pivots.clone()?;
            if let Some(digits) = self.odo.next() {
                let mut m = Matrix::zeros(self.r, self.n);
                for (i, &pc) in pivots.iter().enumerate() {
                    m.set(i, pc, Fe::ONE);
                }
                for (&(i, j), &d) in self.free.iter().zip(&digits) {
                    m.set(i, j, self.scalars[d]);
                }
                return Some(Subspace {
                    n: self.n,
                    tag: self.tag,
                    basis: m,
                    pivots,
                });
            }
            let mut p = pivots;
            if next_colex(&mut p, self.n) {
                self.pivots = Some(p);
                self.load_pattern();
            } else {
                self.pivots = None;
            }
        }
    }
}

/// Iterates the `r`-dimensional subspaces of `K^n`, refusing when their
/// number exceeds `cap`.
pub fn enumerate_subspaces(f: &Field, n: usize, r: usize, tag: Tag, cap: u128) -> Result<SubspaceIter> {
    if r > n {
        return Err(Error::InvalidParams(format!("dimension {r} exceeds ambient {n}")));
    }
    let count = gaussian_binomial(n, r, tag.size(f));
    if count > cap {
        return Err(Error::cap(
            format!("subspaces of dimension {r} in {}^{n}", tag.name()),
            count,
            cap,
        ));
    }
    let mut it = SubspaceIter {
        n,
        r,
        tag,
        scalars: tag.scalars(f),
        pivots: Some((0..r).collect()),
        free: Vec::new(),
        odo: Odometer::new(1, 0),
    };
    it.load_pattern();
    Ok(it)
}

/// Every subspace of `K^n`, by increasing dimension.
pub fn all_subspaces(f: &Field, n: usize, tag: Tag, cap: u128) -> Result<Vec<Subspace>> {
    let total: u128 = (0..=n)
        .map(|r| gaussian_binomial(n, r, tag.size(f)))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > cap {
        return Err(Error::cap(format!("subspaces of {}^{n}", tag.name()), total, cap));
    }
    let mut out = Vec::new();
    for r in 0..=n {
        out.extend(enumerate_subspaces(f, n, r, tag, cap)?);
    }
    Ok(out)
}

/// Every invertible `n×n` matrix over `K`, as lists of rows.
pub fn enumerate_bases(f: &Field, n: usize, tag: Tag, cap: u128) -> Result<Vec<Vec<Vec<Fe>>>> {
    let count = gl_order(n, tag.size(f));
    if count > cap {
        return Err(Error::cap(format!("bases of {}^{n}", tag.name()), count, cap));
    }
    let all: Vec<Vec<Fe>> = Subspace::full(n, tag).vectors(f).collect();
    let mut out = Vec::with_capacity(count as usize);
    let mut current: Vec<Vec<Fe>> = Vec::with_capacity(n);
    fn rec(f: &Field, n: usize, all: &[Vec<Fe>], current: &mut Vec<Vec<Fe>>, out: &mut Vec<Vec<Vec<Fe>>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in all {
            current.push(v.clone());
            if Matrix::from_rows(n, current).unwrap().rank(f) == current.len() {
                rec(f, n, all, current, out);
            }
            current.pop();
        }
    }
    rec(f, n, &all, &mut current, &mut out);
    Ok(out)
}

pub fn random_scalar<R: Rng>(f: &Field, tag: Tag, rng: &mut R) -> Fe {
    match tag {
        Tag::Base => f.subfield()[rng.random_range(0..f.subfield().len())],
        Tag::Ext => Fe(rng.random_range(0..f.order())),
    }
}

pub fn random_vector<R: Rng>(f: &Field, tag: Tag, n: usize, rng: &mut R) -> Vec<Fe> {
    (0..n).map(|_| random_scalar(f, tag, rng)).collect()
}

pub fn random_matrix<R: Rng>(f: &Field, tag: Tag, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let data: Vec<Vec<Fe>> = (0..rows).map(|_| random_vector(f, tag, cols, rng)).collect();
    Matrix::from_rows(cols, &data).expect("rectangular")
}

/// Uniformly random matrix of full row rank `rows ≤ cols`, by rejection.
pub fn random_full_rank<R: Rng>(f: &Field, tag: Tag, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    assert!(rows <= cols);
    loop {
        let m = random_matrix(f, tag, rows, cols, rng);
        if m.rank(f) == rows {
            return m;
        }
    }
}

/// A uniformly random subspace of the given dimension.
pub fn random_subspace<R: Rng>(f: &Field, tag: Tag, n: usize, dim: usize, rng: &mut R) -> Subspace {
    let m = random_full_rank(f, tag, dim, n, rng);
    Subspace::from_matrix(f, tag, &m).expect("entries in the scalar field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;
    use std::collections::HashSet;
    use std::sync::Arc;

    fn f4() -> Arc<Field> {
        Field::new(2, 1, 2).unwrap()
    }

    const A: Fe = Fe(2);
    const A1: Fe = Fe(3);

    #[test]
    fn rref_of_identity_and_zero() {
        let f = f4();
        let i = Matrix::identity(3);
        assert_eq!(i.rref(&f).0, i);
        assert_eq!(i.rank(&f), 3);
        assert_eq!(Matrix::zeros(2, 3).rank(&f), 0);
    }

    #[test]
    fn dependent_rows_over_f4() {
        let f = f4();
        let m = Matrix::from_rows(2, &[vec![Fe::ONE, A], vec![A, A1]]).unwrap();
        assert_eq!(f.mul(A, A), A1);
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn solve_cases() {
        let f = Field::new(2, 1, 1).unwrap();
        let a = Matrix::from_rows(3, &[vec![Fe::ONE, Fe::ONE, Fe::ZERO]]).unwrap();
        let (x, k) = a.solve(&f, &[Fe::ONE]).unwrap();
        assert_eq!(x, vec![Fe::ONE, Fe::ZERO, Fe::ZERO]);
        assert_eq!(k.len(), 2);
        // oracle: every vector in F_2^3 with x1+x2 = 1 is x + span(kernel)
        let sols: HashSet<Vec<Fe>> = Subspace::full(3, Tag::Base)
            .vectors(&f)
            .filter(|v| f.add(v[0], v[1]) == Fe::ONE)
            .collect();
        let ker = Subspace::span(&f, Tag::Base, 3, &k).unwrap();
        let found: HashSet<Vec<Fe>> = ker.vectors(&f).map(|v| vec_add(&f, &x, &v)).collect();
        assert_eq!(sols, found);

        let z = Matrix::zeros(1, 2);
        assert_eq!(z.solve(&f, &[Fe::ONE]), Err(Error::NoSolution));
        let (x, k) = Matrix::identity(2).solve(&f, &[Fe::ONE, Fe::ZERO]).unwrap();
        assert_eq!(x, vec![Fe::ONE, Fe::ZERO]);
        assert!(k.is_empty());
    }

    #[test]
    fn perp_examples() {
        let f = f4();
        assert!(Subspace::full(3, Tag::Ext).perp(&f).is_zero());
        let u = Subspace::span(&f, Tag::Ext, 2, &[vec![Fe::ONE, A]]).unwrap();
        let oracle: Vec<Vec<Fe>> = Subspace::full(2, Tag::Ext)
            .vectors(&f)
            .filter(|v| dot(&f, v, &[Fe::ONE, A]).is_zero())
            .collect();
        assert_eq!(oracle.len(), 4);
        let expected = Subspace::span(&f, Tag::Ext, 2, &[vec![A, Fe::ONE]]).unwrap();
        assert_eq!(u.perp(&f), expected);
        for v in &oracle {
            assert!(expected.contains(&f, v));
        }
    }

    #[test]
    fn double_perp_exhaustive() {
        let f = Field::new(2, 1, 1).unwrap();
        for n in 1..=4 {
            for u in all_subspaces(&f, n, Tag::Base, 1 << 20).unwrap() {
                assert_eq!(u.perp(&f).perp(&f), u);
                assert_eq!(u.perp(&f).dim(), n - u.dim());
            }
        }
    }

    #[test]
    fn dimension_formula_random() {
        let f = Field::new(3, 1, 2).unwrap();
        let mut rng = rng::seeded(7);
        for _ in 0..100 {
            let n = rng.random_range(1..=4);
            let tag = if rng.random_bool(0.5) { Tag::Base } else { Tag::Ext };
            let u = random_subspace(&f, tag, n, rng.random_range(0..=n), &mut rng);
            let v = random_subspace(&f, tag, n, rng.random_range(0..=n), &mut rng);
            let s = u.sum(&f, &v).unwrap();
            let i = u.intersect(&f, &v).unwrap();
            assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            assert!(i.is_subspace_of(&f, &u).unwrap() && i.is_subspace_of(&f, &v).unwrap());
        }
    }

    #[test]
    fn ambient_mismatch() {
        let f = f4();
        let u = Subspace::zero(2, Tag::Ext);
        let v = Subspace::zero(3, Tag::Ext);
        assert!(matches!(u.sum(&f, &v), Err(Error::AmbientMismatch(..))));
        let w = Subspace::zero(2, Tag::Base);
        assert!(matches!(u.intersect(&f, &w), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn canonical_form() {
        let f = f4();
        let a = Subspace::span(
            &f,
            Tag::Ext,
            3,
            &[vec![Fe::ONE, A, Fe::ZERO], vec![Fe::ZERO, Fe::ONE, Fe::ONE]],
        )
        .unwrap();
        let b = Subspace::span(
            &f,
            Tag::Ext,
            3,
            &[
                vec![Fe::ONE, A1, Fe::ONE],
                vec![A, A1, Fe::ZERO],
                vec![Fe::ONE, A1, Fe::ONE],
            ],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_counts() {
        let f2 = Field::new(2, 1, 1).unwrap();
        assert_eq!(enumerate_subspaces(&f2, 3, 1, Tag::Base, 100).unwrap().count(), 7);
        assert_eq!(enumerate_subspaces(&f2, 4, 2, Tag::Base, 100).unwrap().count(), 35);
        let z: Vec<_> = enumerate_subspaces(&f2, 4, 0, Tag::Base, 100).unwrap().collect();
        assert_eq!(z, vec![Subspace::zero(4, Tag::Base)]);
        for q in [2u32, 3] {
            let f = Field::new(q, 1, 1).unwrap();
            for n in 0..=5 {
                for r in 0..=n {
                    let all: Vec<_> = enumerate_subspaces(&f, n, r, Tag::Base, 1 << 30).unwrap().collect();
                    let distinct: HashSet<_> = all.iter().cloned().collect();
                    assert_eq!(all.len() as u128, gaussian_binomial(n, r, q as u64));
                    assert_eq!(distinct.len(), all.len());
                    assert!(all.iter().all(|s| s.dim() == r));
                }
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let f = Field::new(2, 1, 1).unwrap();
        let err = enumerate_subspaces(&f, 4, 2, Tag::Base, 10).err().unwrap();
        assert_eq!(err, Error::cap("subspaces of dimension 2 in F_q^4", 35, 10));
    }

    #[test]
    fn gl_enumeration() {
        let f = Field::new(2, 1, 2).unwrap();
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(enumerate_bases(&f, 3, Tag::Base, 1000).unwrap().len(), 168);
        assert_eq!(enumerate_bases(&f, 2, Tag::Base, 1000).unwrap().len(), 6);
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = rng::seeded(3);
        for _ in 0..20 {
            let m = random_full_rank(&f, Tag::Ext, 3, 3, &mut rng);
            let inv = m.inverse(&f).unwrap();
            assert_eq!(m.mul(&f, &inv).unwrap(), Matrix::identity(3));
        }
        assert!(Matrix::zeros(2, 2).inverse(&f).is_err());
    }
}
