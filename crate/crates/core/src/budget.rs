//! Cooperative limits on search effort.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// A wall-clock deadline and/or a cap on search nodes. Solvers call
/// [`Budget::tick`] at each branching node and abort with
/// [`Error::Budget`] once either limit is hit.
#[derive(Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + timeout),
            ..Budget::default()
        }
    }

    pub fn with_node_limit(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            ..Budget::default()
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.node_limit.is_some_and(|lim| n > lim) {
            return Err(Error::Budget);
        }
        // reading the clock on every node is measurable in tight loops
        if n & 0xff == 0 || n == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Budget);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_trips() {
        let b = Budget::with_node_limit(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::Budget));
    }

    #[test]
    fn zero_timeout_trips_immediately() {
        let b = Budget::with_timeout(Duration::ZERO);
        assert_eq!(b.tick(), Err(Error::Budget));
    }
}
