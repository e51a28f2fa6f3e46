use crate::error::{Error, Result};

/// Resource guard for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest rank `n` any enumerator will accept.
    pub max_rank: usize,
    /// Largest number of objects a single enumeration may materialize.
    pub max_items: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank: 10,
            max_items: 20_000_000,
        }
    }
}

impl Limits {
    pub fn with_max_rank(max_rank: usize) -> Self {
        Limits {
            max_rank,
            ..Limits::default()
        }
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if n > self.max_rank {
            return Err(Error::ResourceCap(format!(
                "rank {n} exceeds the configured maximum {}",
                self.max_rank
            )));
        }
        Ok(())
    }

    pub fn check_items(&self, count: usize) -> Result<()> {
        if count > self.max_items {
            return Err(Error::ResourceCap(format!(
                "enumeration produced more than {} objects",
                self.max_items
            )));
        }
        Ok(())
    }
}
