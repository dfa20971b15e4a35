//! Rank-metric codes over `F_{q^m}`: generalized rank weights, rank
//! puncturing and shortening, code equivalences, nested coset coding schemes
//! with exact leakage, and a coherent network-coding channel simulator.
//!
//! Everything here works by exact finite-field linear algebra and, where a
//! quantity is defined as a minimum over subspaces, by exhaustive
//! enumeration. Parameters are therefore meant to be small; each enumerator
//! takes a cap and fails with [`Error::CapExceeded`] instead of running away.

pub mod cli;
pub mod construct;
pub mod equivalence;
pub mod error;
pub mod gf;
pub mod io;
pub mod linalg;
pub mod netsim;
pub mod puncture;
pub mod rankcore;
pub mod schemes;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use gf::{Fe, Field};
pub use linalg::{Matrix, Subspace, Tag};
pub use rankcore::LinearCode;

/// Default enumeration cap, overridable through `RANKMETRIC_CAP`.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Reads `RANKMETRIC_CAP`, falling back to [`DEFAULT_CAP`].
pub fn default_cap() -> u128 {
    std::env::var("RANKMETRIC_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// Seeded generators. Every randomized routine takes an explicit seed and
/// draws from SplitMix64 so runs are reproducible across platforms.
pub mod rng {
    use rand::SeedableRng;
    pub use rand_xoshiro::SplitMix64 as Rng;

    pub fn seeded(seed: u64) -> Rng {
        Rng::seed_from_u64(seed)
    }

    /// Seed for the `index`-th independent sub-stream of `seed`.
    pub fn derive(seed: u64, index: u64) -> u64 {
        let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}
