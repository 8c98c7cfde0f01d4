//! Standard instances used by tests, benchmarks, and the CLI bench command.

use crate::cyclic::SigmaInterval;
use crate::presentation::SigmaIntervalSystem;

/// The rank-`r` whirl on `2r` elements: intervals `[2i-1, 2i+1]` around the
/// cycle.  For `r = 3` this is `([1,3],[3,5],[5,1])`, the standard example of
/// a multi-path matroid that is not a lattice path matroid.
pub fn whirl(r: u32) -> SigmaIntervalSystem {
    assert!(r >= 2, "whirls need rank at least 2");
    let n = 2 * r;
    let intervals = (1..=r)
        .map(|i| SigmaInterval::new(2 * i - 1, (2 * i) % n + 1))
        .collect();
    SigmaIntervalSystem::new(n, intervals).unwrap()
}

/// The uniform matroid U(r,n) presented by the r intervals of size n-r+1
/// starting at 1..=r.
pub fn uniform(r: u32, n: u32) -> SigmaIntervalSystem {
    assert!(r >= 1 && r <= n);
    let m = n - r;
    let intervals = (1..=r).map(|i| SigmaInterval::new(i, i + m)).collect();
    SigmaIntervalSystem::new(n, intervals).unwrap()
}

/// A second presentation of U(3,6) with longer intervals, not minimal.
pub fn u36_long() -> SigmaIntervalSystem {
    SigmaIntervalSystem::new(
        6,
        vec![
            SigmaInterval::new(1, 5),
            SigmaInterval::new(2, 6),
            SigmaInterval::new(3, 1),
        ],
    )
    .unwrap()
}

/// A rank-3 multi-path matroid on seven elements with two distinct minimal
/// interval presentations; this is the first of them.
pub fn two_minimal_a() -> SigmaIntervalSystem {
    SigmaIntervalSystem::new(
        7,
        vec![
            SigmaInterval::new(5, 2),
            SigmaInterval::new(2, 4),
            SigmaInterval::new(4, 7),
        ],
    )
    .unwrap()
}

/// The second minimal presentation of the matroid of [`two_minimal_a`].
pub fn two_minimal_b() -> SigmaIntervalSystem {
    SigmaIntervalSystem::new(
        7,
        vec![
            SigmaInterval::new(6, 3),
            SigmaInterval::new(2, 4),
            SigmaInterval::new(4, 7),
        ],
    )
    .unwrap()
}
