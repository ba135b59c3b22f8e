//! Enumeration bounds shared by the exhaustive routines.

use crate::{Error, Result};

/// Environment variable overriding [`Limits::diagrams`].
pub const DIAGRAM_BOUND_ENV: &str = "BOSON_HOPF_MAX_ORDER";

/// Upper bounds on the size of exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for unordered set partitions (Bell(12) = 4 213 597).
    pub partitions: usize,
    /// Largest ground set for ordered set partitions (Fubini(9) = 7 087 261).
    pub ordered_partitions: usize,
    /// Largest order for pair-of-partitions enumeration and diagram tallies.
    pub diagrams: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            partitions: 12,
            ordered_partitions: 9,
            diagrams: 6,
        }
    }
}

impl Limits {
    /// Defaults, with the diagram bound taken from `BOSON_HOPF_MAX_ORDER` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(DIAGRAM_BOUND_ENV) {
            let bound = raw.trim().parse::<usize>().map_err(|_| {
                Error::Precondition(format!(
                    "{DIAGRAM_BOUND_ENV} must be a nonnegative integer, got {raw:?}"
                ))
            })?;
            limits.diagrams = bound;
            limits.partitions = limits.partitions.max(bound);
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, requested: usize, bound: usize) -> Result<()> {
        if requested > bound {
            Err(Error::BoundExceeded {
                what,
                requested,
                bound,
            })
        } else {
            Ok(())
        }
    }
}
