//! Size guards for exhaustive computations.
//!
//! Every guarded operation has a default limit. Setting `ATN_GUARD_OVERRIDE`
//! to an integer replaces all defaults with that value.

use crate::error::{Error, Result};

pub const ENV_OVERRIDE: &str = "ATN_GUARD_OVERRIDE";

pub const SNF_ENTRIES: u128 = 1_000_000;
pub const DENSE_DIM: u128 = 4096;
pub const EXHAUSTIVE_CONFIGS: u128 = 1_000_000;
pub const GHZ_TERMS: u128 = 100_000;
pub const GLOBAL_3D_TERMS: u128 = 1_000_000;

pub fn limit(default: u128) -> u128 {
    std::env::var(ENV_OVERRIDE)
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .unwrap_or(default)
}

pub fn check(what: &str, size: u128, default: u128) -> Result<()> {
    let limit = limit(default);
    if size > limit {
        return Err(Error::SizeGuard {
            what: what.to_string(),
            size,
            limit,
        });
    }
    Ok(())
}

/// `base^exp` saturating at `u128::MAX`.
pub fn pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
