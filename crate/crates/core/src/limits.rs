//! Global size bound for materialized structures.
//!
//! Rings and modules store full operation tables, so the supported order is
//! capped. The default keeps the worst-case table under a couple hundred MB.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 4096;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Override the global order bound (the CLI wires this to `RINGLAB_MAX_ORDER`).
pub fn set_max_order(bound: usize) {
    MAX_ORDER.store(bound.max(2), Ordering::Relaxed);
}

pub fn check_order(requested: usize) -> Result<()> {
    let max = max_order();
    if requested > max {
        Err(Error::OrderBound { requested, max })
    } else {
        Ok(())
    }
}
