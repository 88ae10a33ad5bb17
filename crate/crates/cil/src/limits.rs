//! Size guards for the exponential-cost oracles.

use std::sync::OnceLock;

/// Default bound on the ambient variable count for anything that enumerates
/// 2^n subsets (Hochster, Reisner, face enumeration, vertex decomposability).
pub const DEFAULT_MAX_N: usize = 12;

/// Hard ceiling even when `CIL_MAX_N` is set; 2^25 face bitmaps are the
/// largest allocation we are willing to make.
pub const ABSOLUTE_MAX_N: usize = 25;

/// Facet cap for the exhaustive shelling search.
pub const MAX_SHELLING_FACETS: usize = 12;

/// Generator count up to which the linear-quotient search is run to
/// exhaustion with no step budget (absence is then a proof).
pub const LQ_EXHAUSTIVE_GENERATORS: usize = 20;

/// Step budget for the linear-quotient search above the exhaustive cap.
pub const LQ_SEARCH_BUDGET: u64 = 5_000_000;

/// Generator cap for Taylor-complex strand enumeration (2^m subsets).
pub const MAX_TAYLOR_GENERATORS: usize = 20;

/// The subset-enumeration guard, overridable through `CIL_MAX_N`.
pub fn max_subset_n() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("CIL_MAX_N")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .map(|v| v.clamp(1, ABSOLUTE_MAX_N))
            .unwrap_or(DEFAULT_MAX_N)
    })
}

/// Checks `n` against the subset guard.
pub fn check_subset_guard(n: usize) -> crate::Result<()> {
    let limit = max_subset_n();
    if n > limit {
        Err(crate::Error::SizeGuard { n, limit })
    } else {
        Ok(())
    }
}
