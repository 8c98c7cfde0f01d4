//! Benchmark support: instance builders shared by the criterion benches.

use mpm::{fixtures, SigmaIntervalSystem};

/// The whirl on `n` elements (`n` even, at least 4).
pub fn whirl_instance(n: u32) -> SigmaIntervalSystem {
    assert!(n >= 4 && n.is_multiple_of(2));
    fixtures::whirl(n / 2)
}

/// The uniform matroid U(n/2, n), a wide-diagram contrast to the whirl's
/// narrow band.
pub fn uniform_instance(n: u32) -> SigmaIntervalSystem {
    assert!(n >= 2 && n.is_multiple_of(2));
    fixtures::uniform(n / 2, n)
}
