//! Size limits shared by the enumeration routines.

use crate::root_system::DEFAULT_WEYL_CAP;

pub const DEFAULT_WEIGHT_CAP: usize = 100_000;

/// Environment variable that overrides the Weyl group cap.
pub const WEYL_CAP_ENV: &str = "HODGE_SL2_WEYL_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub weyl_cap: usize,
    pub weight_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { weyl_cap: DEFAULT_WEYL_CAP, weight_cap: DEFAULT_WEIGHT_CAP }
    }
}

impl Limits {
    /// Defaults, with the Weyl cap taken from `HODGE_SL2_WEYL_CAP` when it parses.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        if let Some(cap) = std::env::var(WEYL_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            l.weyl_cap = cap;
        }
        l
    }
}
