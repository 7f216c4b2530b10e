//! Coarse flop accounting for the scaling reports.
//!
//! Counters are cumulative process-wide; callers snapshot [`total`] before and
//! after a run. Counts cover the dense kernels and FMM box work, not every
//! scalar operation.

use std::sync::atomic::{AtomicU64, Ordering};

static FLOPS: AtomicU64 = AtomicU64::new(0);

pub fn add(n: u64) {
    FLOPS.fetch_add(n, Ordering::Relaxed);
}

pub fn total() -> u64 {
    FLOPS.load(Ordering::Relaxed)
}

pub fn reset() {
    FLOPS.store(0, Ordering::Relaxed);
}
