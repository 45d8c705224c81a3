use crate::error::{Error, Result};

/// Hard bounds on exponential work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Players enumerated by measures, power values and property checks.
    pub max_players: usize,
    /// Players up to which `combine` validates every team against its inputs.
    pub combine_validation: usize,
    /// Players accepted by the isomorphism search.
    pub iso_players: usize,
    /// Elements/vertices accepted by the brute-force oracles.
    pub oracle_size: usize,
    /// Total weight accepted by the pseudo-polynomial weighted construction.
    pub weight_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_players: 20,
            combine_validation: 12,
            iso_players: 8,
            oracle_size: 20,
            weight_budget: 1 << 16,
        }
    }
}

impl Limits {
    pub fn with_max_players(mut self, max_players: usize) -> Self {
        self.max_players = max_players;
        self
    }

    pub(crate) fn check_players(&self, n: usize) -> Result<()> {
        check("player enumeration", self.max_players, n)
    }
}

pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    // 63 keeps every coalition mask strictly inside a u64 shift.
    if actual > limit || actual > 63 {
        return Err(Error::Limit {
            what,
            limit: limit.min(63),
            actual,
        });
    }
    Ok(())
}
