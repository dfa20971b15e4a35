//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}` with `q = p^e`.
//!
//! Every element of `F_{q^m}` is a polynomial of degree `< e·m` over `F_p`
//! reduced modulo a fixed irreducible polynomial. An element is stored as a
//! [`Fe`] index: the base-`p` integer whose digits are the polynomial
//! coefficients, little-endian in the variable. The base field `F_q` is the
//! subfield fixed by `x ↦ x^q`; its elements are ordinary [`Fe`] values, so a
//! single element type serves both levels of the tower.
//!
//! Multiplication goes through discrete log / antilog tables built from a
//! primitive element at construction time, which is why the total field size
//! is capped at `2^20`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Largest supported `p^{e·m}`.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of `F_{q^m}`, identified by its coefficient index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.0)
    }
}

/// The tower `F_p ⊂ F_q ⊂ F_{q^m}` together with a fixed `F_q`-basis
/// `α_1, …, α_m` of `F_{q^m}`.
///
/// A context is immutable once built; share it through an [`Arc`].
pub struct Field {
    p: u32,
    e: u32,
    m: u32,
    deg: u32,
    q: u32,
    order: u32,
    modulus: Vec<u32>,
    basis: Vec<Fe>,
    dual_basis: Vec<Fe>,
    exp: Vec<Fe>,
    log: Vec<u32>,
    subfield: Vec<Fe>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("basis", &self.basis)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.e == other.e
            && self.m == other.m
            && self.modulus == other.modulus
            && self.basis == other.basis
    }
}

impl Eq for Field {}

/// Optional overrides for [`Field::with_options`].
#[derive(Clone, Debug, Default)]
pub struct FieldOptions {
    /// Monic modulus of degree `e·m`, coefficients little-endian over `F_p`.
    pub modulus: Option<Vec<u32>>,
    /// Basis elements as coefficient arrays over `F_p`.
    pub basis: Option<Vec<Vec<u32>>>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod_u64(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Dense polynomials over `F_p`, little-endian, used while building tables.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
    }

    fn inv_mod_p(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r as u32
    }

    /// Remainder of `a` modulo `b` (b nonzero).
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        let lead_inv = inv_mod_p(b[db], p);
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
            if c != 0 {
                let shift = dr - db;
                for (i, &bi) in b.iter().enumerate() {
                    let t = (c as u64 * bi as u64 % p as u64) as u32;
                    r[shift + i] = (r[shift + i] + p - t) % p;
                }
            }
            r.pop();
            if r.is_empty() {
                r.push(0);
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
        let mut prod = vec![0u32; a.len() + b.len()];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p as u64) as u32;
            }
        }
        rem(&prod, modulus, p)
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let mut f = f.to_vec();
        trim(&mut f);
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut x = low;
                for _ in 0..d {
                    g.push((x % p as u64) as u32);
                    x /= p as u64;
                }
                g.push(1);
                let r = rem(&f, &g, p);
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds `F_{q^m}` with `q = p^e`, the smallest monic irreducible
    /// modulus and the power basis `1, x, …, x^{m-1}`.
    pub fn new(p: u32, e: u32, m: u32) -> Result<Arc<Field>> {
        Self::with_options(p, e, m, &FieldOptions::default())
    }

    pub fn with_options(p: u32, e: u32, m: u32, opts: &FieldOptions) -> Result<Arc<Field>> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        if e == 0 || m == 0 {
            return Err(Error::InvalidField("e and m must be positive".into()));
        }
        let deg = e
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidField("e·m overflows".into()))?;
        let order = (p as u64)
            .checked_pow(deg)
            .filter(|&o| o <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("p^(e·m) = {p}^{deg} exceeds the cap 2^20")))?;
        let q = (p as u64).pow(e) as u32;
        let modulus = match &opts.modulus {
            Some(md) => {
                let mut md = md.clone();
                poly::trim(&mut md);
                if md.len() != deg as usize + 1 || *md.last().unwrap() != 1 {
                    return Err(Error::InvalidField(format!("modulus must be monic of degree {deg}")));
                }
                if md.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField("modulus coefficient out of range".into()));
                }
                if !poly::is_irreducible(&md, p) {
                    return Err(Error::InvalidField("modulus is reducible".into()));
                }
                md
            }
            None => smallest_irreducible(p, deg as usize),
        };

        let mut field = Field {
            p,
            e,
            m,
            deg,
            q,
            order: order as u32,
            modulus,
            basis: Vec::new(),
            dual_basis: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
            subfield: Vec::new(),
        };
        field.build_tables();
        field.subfield = (0..field.order)
            .map(Fe)
            .filter(|&x| field.frobenius(x, 1) == x)
            .collect();
        if field.subfield.len() as u32 != q {
            return Err(Error::InternalInconsistency(
                "subfield fixed by x -> x^q has the wrong size".into(),
            ));
        }

        let basis = match &opts.basis {
            Some(rows) => {
                if rows.len() != m as usize {
                    return Err(Error::InvalidField(format!("basis must have {m} elements")));
                }
                rows.iter().map(|c| field.from_coeffs(c)).collect::<Result<Vec<_>>>()?
            }
            None => {
                let x = if deg == 1 { Fe::ONE } else { Fe(p) };
                let mut out = Vec::with_capacity(m as usize);
                let mut acc = Fe::ONE;
                for _ in 0..m {
                    out.push(acc);
                    acc = field.mul(acc, x);
                }
                out
            }
        };
        field.set_basis(basis)?;
        Ok(Arc::new(field))
    }

    fn set_basis(&mut self, basis: Vec<Fe>) -> Result<()> {
        let m = self.m as usize;
        // Trace form Tr(α_i α_j); invertible exactly when the α_i are independent.
        let mut gram = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                gram.set(i, j, self.trace(self.mul(basis[i], basis[j])));
            }
        }
        let inv = gram
            .inverse(self)
            .map_err(|_| Error::InvalidField("basis is not linearly independent over F_q".into()))?;
        let mut dual = vec![Fe::ZERO; m];
        for (j, d) in dual.iter_mut().enumerate() {
            for (i, &a) in basis.iter().enumerate() {
                *d = self.add(*d, self.mul(inv.get(j, i), a));
            }
        }
        self.basis = basis;
        self.dual_basis = dual;
        Ok(())
    }

    fn build_tables(&mut self) {
        let order = self.order as usize;
        let n = order - 1;
        let factors = prime_factors(n as u64);
        let mut gen = None;
        for cand in 1..self.order {
            let c = Fe(cand);
            if n == 1 || factors.iter().all(|&r| self.poly_pow(c, n as u64 / r) != Fe::ONE) {
                gen = Some(c);
                break;
            }
        }
        let g = gen.expect("finite field has a primitive element");
        let mut exp = vec![Fe::ZERO; n.max(1)];
        let mut log = vec![0u32; order];
        let mut acc = Fe::ONE;
        let gd = self.digits(g);
        for (i, slot) in exp.iter_mut().enumerate().take(n) {
            *slot = acc;
            log[acc.0 as usize] = i as u32;
            let prod = poly::mul_mod(&self.digits(acc), &gd, &self.modulus, self.p);
            acc = self.undigits(&prod);
        }
        self.exp = exp;
        self.log = log;
    }

    fn poly_pow(&self, a: Fe, mut k: u64) -> Fe {
        let mut acc = vec![1u32];
        let mut base = self.digits(a);
        while k > 0 {
            if k & 1 == 1 {
                acc = poly::mul_mod(&acc, &base, &self.modulus, self.p);
            }
            base = poly::mul_mod(&base, &base, &self.modulus, self.p);
            k >>= 1;
        }
        self.undigits(&acc)
    }

    fn digits(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.deg as usize);
        let mut x = a.0;
        for _ in 0..self.deg {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u32]) -> Fe {
        let mut v = 0u32;
        for &c in d.iter().rev() {
            v = v * self.p + c;
        }
        Fe(v)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn m(&self) -> usize {
        self.m as usize
    }
    /// Size of the base field `F_q`.
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Size of the extension `F_{q^m}`.
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The fixed basis `α_1, …, α_m`.
    pub fn basis(&self) -> &[Fe] {
        &self.basis
    }
    /// Elements of `F_q`, sorted by index; `subfield()[0]` is zero.
    pub fn subfield(&self) -> &[Fe] {
        &self.subfield
    }
    /// Every element of `F_{q^m}` in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(Fe)
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.order
    }

    pub fn in_subfield(&self, a: Fe) -> bool {
        self.frobenius(a, 1) == a
    }

    /// Same context with a different `F_q`-basis of `F_{q^m}`.
    pub fn with_basis(&self, basis: Vec<Fe>) -> Result<Arc<Field>> {
        if basis.len() != self.m as usize {
            return Err(Error::InvalidField(format!("basis must have {} elements", self.m)));
        }
        let mut f = Field {
            p: self.p,
            e: self.e,
            m: self.m,
            deg: self.deg,
            q: self.q,
            order: self.order,
            modulus: self.modulus.clone(),
            basis: Vec::new(),
            dual_basis: Vec::new(),
            exp: self.exp.clone(),
            log: self.log.clone(),
            subfield: self.subfield.clone(),
        };
        f.set_basis(basis)?;
        Ok(Arc::new(f))
    }

    pub fn to_coeffs(&self, a: Fe) -> Vec<u32> {
        self.digits(a)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.deg as usize && coeffs[self.deg as usize..].iter().any(|&c| c != 0) {
            return Err(Error::InvalidElement(format!(
                "expected at most {} coefficients",
                self.deg
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(format!(
                "coefficient {c} not below p = {}",
                self.p
            )));
        }
        Ok(self.undigits(&coeffs[..coeffs.len().min(self.deg as usize)]))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let p = self.p;
        let (mut x, mut y, mut pw, mut r) = (a.0, b.0, 1u32, 0u32);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * pw;
            x /= p;
            y /= p;
            pw = pw.wrapping_mul(p);
        }
        Fe(r)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let (mut x, mut pw, mut r) = (a.0, 1u32, 0u32);
        while x > 0 {
            r += ((p - x % p) % p) * pw;
            x /= p;
            pw = pw.wrapping_mul(p);
        }
        Fe(r)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let n = self.order - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.order - 1;
        let l = self.log[a.0 as usize];
        Ok(self.exp[((n - l) % n) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let n = (self.order - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        self.exp[((l as u128 * (k % n) as u128) % n as u128) as usize]
    }

    /// `x^{q^i}`.
    pub fn frobenius(&self, x: Fe, i: u64) -> Fe {
        if x.is_zero() {
            return x;
        }
        let n = (self.order - 1) as u64;
        let shift = pow_mod_u64(self.q as u64, i, n.max(1));
        let l = self.log[x.0 as usize] as u64;
        self.exp[((l as u128 * shift as u128) % n.max(1) as u128) as usize]
    }

    /// `Tr(x) = Σ_{i<m} x^{q^i}`, an element of `F_q`.
    pub fn trace(&self, x: Fe) -> Fe {
        (0..self.m as u64).fold(Fe::ZERO, |acc, i| self.add(acc, self.frobenius(x, i)))
    }

    /// Coordinates of `x` in the basis `α_1..α_m`; each coordinate lies in `F_q`.
    pub fn coords(&self, x: Fe) -> Vec<Fe> {
        self.dual_basis.iter().map(|&b| self.trace(self.mul(x, b))).collect()
    }

    pub fn from_coords(&self, c: &[Fe]) -> Fe {
        c.iter()
            .zip(&self.basis)
            .fold(Fe::ZERO, |acc, (&ci, &a)| self.add(acc, self.mul(ci, a)))
    }

    /// Index of a subfield element within [`Field::subfield`].
    pub fn subfield_index(&self, a: Fe) -> Option<usize> {
        self.subfield.binary_search(&a).ok()
    }
}

fn smallest_irreducible(p: u32, deg: usize) -> Vec<u32> {
    let count = (p as u64).pow(deg as u32);
    for low in 0..count {
        let mut f = Vec::with_capacity(deg + 1);
        let mut x = low;
        for _ in 0..deg {
            f.push((x % p as u64) as u32);
            x /= p as u64;
        }
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
