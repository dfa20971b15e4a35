//! Code constructions used by `gen`, the verification suites and tests.

use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix, Tag};
use crate::rankcore::LinearCode;
use crate::schemes::NestedCodePair;

/// Gabidulin code with rows `(g_1^{q^i}, …, g_n^{q^i})`, `i < k`. The
/// evaluation points default to the first `n` basis elements.
pub fn gabidulin(f: &Arc<Field>, n: usize, k: usize, points: Option<&[Fe]>) -> Result<LinearCode> {
    let m = f.m();
    if n > m {
        return Err(Error::InvalidParams(format!(
            "Gabidulin codes need n ≤ m, got n={n}, m={m}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!(
            "Gabidulin codes need 1 ≤ k ≤ n, got k={k}, n={n}"
        )));
    }
    let g: Vec<Fe> = match points {
        Some(p) => p.to_vec(),
        None => f.basis()[..n].to_vec(),
    };
    if g.len() != n {
        return Err(Error::Shape(format!("{} evaluation points for n={n}", g.len())));
    }
    let coords: Vec<Vec<Fe>> = g.iter().map(|&x| f.coords(x)).collect();
    if Matrix::from_rows(m, &coords)?.rank(f) < n {
        return Err(Error::InvalidParams("evaluation points must be F_q-independent".into()));
    }
    let rows: Vec<Vec<Fe>> = (0..k as u64)
        .map(|i| g.iter().map(|&x| f.frobenius(x, i)).collect())
        .collect();
    LinearCode::new(f.clone(), n, &rows)
}

/// Uniformly random `[n, k]` code.
pub fn random_code<R: Rng>(f: &Arc<Field>, n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidParams(format!("k={k} exceeds n={n}")));
    }
    let space = linalg::random_subspace(f, Tag::Ext, n, k, rng);
    Ok(LinearCode::from_subspace(f.clone(), space))
}

/// Galois-closed code spanned by random rows over `F_q`.
pub fn galois_closed_code<R: Rng>(f: &Arc<Field>, n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidParams(format!("k={k} exceeds n={n}")));
    }
    let base = linalg::random_subspace(f, Tag::Base, n, k, rng);
    Ok(LinearCode::from_subspace(f.clone(), base.extend()))
}

/// Random pair `C_2 ⊊ C_1` with `dim C_i = k_i`.
pub fn random_pair<R: Rng>(f: &Arc<Field>, n: usize, k1: usize, k2: usize, rng: &mut R) -> Result<NestedCodePair> {
    if k2 >= k1 || k1 > n {
        return Err(Error::InvalidParams(format!(
            "needs k2 < k1 ≤ n, got k1={k1}, k2={k2}, n={n}"
        )));
    }
    let c1 = random_code(f, n, k1, rng)?;
    let mix = linalg::random_full_rank(f, Tag::Ext, k2, k1, rng);
    let rows = if k2 == 0 {
        Vec::new()
    } else {
        mix.mul(f, c1.generator())?.to_rows()
    };
    let c2 = LinearCode::new(f.clone(), n, &rows)?;
    NestedCodePair::from_codes(&c1, &c2)
}

/// The Gabidulin pair `Gab(n, k_2) ⊊ Gab(n, k_1)`.
pub fn gabidulin_pair(f: &Arc<Field>, n: usize, k1: usize, k2: usize) -> Result<NestedCodePair> {
    if k2 >= k1 {
        return Err(Error::InvalidParams(format!("needs k2 < k1, got k1={k1}, k2={k2}")));
    }
    gabidulin(f, n, k1, None)?;
    let rows: Vec<Vec<Fe>> = (0..k1 as u64)
        .map(|i| f.basis()[..n].iter().map(|&x| f.frobenius(x, i)).collect())
        .collect();
    NestedCodePair::new(f.clone(), n, &rows[..k2], &rows[k2..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights;

    #[test]
    fn gabidulin_is_mrd() {
        for m in 2..=4u32 {
            let f = Field::new(2, 1, m).unwrap();
            for n in 1..=m as usize {
                for k in 1..=n {
                    let c = gabidulin(&f, n, k, None).unwrap();
                    assert_eq!(c.k(), k);
                    assert_eq!(weights::grw_profile(&c, 1 << 24).unwrap()[0], n - k + 1);
                }
            }
        }
        let f = Field::new(2, 1, 3).unwrap();
        assert!(matches!(gabidulin(&f, 4, 1, None), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn random_constructions() {
        let f = Field::new(2, 1, 3).unwrap();
        let mut rng = crate::rng::seeded(1);
        let c = galois_closed_code(&f, 4, 2, &mut rng).unwrap();
        assert!(c.is_galois_closed());
        let p = random_pair(&f, 4, 3, 1, &mut rng).unwrap();
        assert_eq!((p.k1(), p.k2()), (3, 1));
        let g = gabidulin_pair(&f, 3, 2, 1).unwrap();
        assert_eq!(g.ell(), 1);
    }
}
