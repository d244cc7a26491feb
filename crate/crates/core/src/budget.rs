use crate::error::{Error, Result};

/// Caps on exhaustive work. Every enumeration checks its size up front and
/// fails with [`Error::Budget`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest map or matrix family an enumeration may walk.
    pub maps: u128,
    /// Largest entry count of any tensor built.
    pub tensor_entries: u128,
    /// Largest node count of a combinatorial search (rank decompositions,
    /// counting sweeps).
    pub search_nodes: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            maps: 1 << 24,
            tensor_entries: 1 << 20,
            search_nodes: 1 << 26,
        }
    }
}

impl Budget {
    pub(crate) fn check_maps(&self, what: &'static str, needed: u128) -> Result<()> {
        check(what, needed, self.maps)
    }

    pub(crate) fn check_entries(&self, what: &'static str, needed: u128) -> Result<()> {
        check(what, needed, self.tensor_entries)
    }

    pub(crate) fn check_nodes(&self, what: &'static str, needed: u128) -> Result<()> {
        check(what, needed, self.search_nodes)
    }
}

fn check(what: &'static str, needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::Budget {
            what,
            needed,
            budget,
        })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn pow_sat(base: u128, exp: u128) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
