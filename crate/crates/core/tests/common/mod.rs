#![allow(dead_code)] // each test target uses a different subset

//! Shared corpus generators and independent brute-force oracles for the
//! integration suites.  Nothing here calls into the dynamic programs it is
//! used to check: paths are enumerated by depth-first search over the
//! region predicates only.

use std::collections::BTreeSet;

use mpm::{CyclicOrder, Diagram, Element, SigmaInterval, SigmaIntervalSystem, Step};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Fixed seed for the randomized part of the corpus.
pub const CORPUS_SEED: u64 = 0x6d70_6d31;

/// All interval endpoint pairs on [n] whose member sets are pairwise
/// incomparable, enumerated as systems in canonical (sorted) interval order.
pub fn all_antichains(n: u32) -> Vec<SigmaIntervalSystem> {
    let order = CyclicOrder::new(n).unwrap();
    let mut intervals: Vec<(SigmaInterval, BTreeSet<Element>)> = Vec::new();
    for f in 1..=n {
        for l in 1..=n {
            let iv = SigmaInterval::new(f, l);
            let members = order.interval_members(iv).unwrap().into_iter().collect();
            intervals.push((iv, members));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn dfs(
        start: usize,
        intervals: &[(SigmaInterval, BTreeSet<Element>)],
        chosen: &mut Vec<usize>,
        n: u32,
        out: &mut Vec<SigmaIntervalSystem>,
    ) {
        if !chosen.is_empty() {
            let ivs = chosen.iter().map(|&i| intervals[i].0).collect();
            out.push(SigmaIntervalSystem::new(n, ivs).unwrap());
        }
        for i in start..intervals.len() {
            let ok = chosen.iter().all(|&j| {
                let a = &intervals[i].1;
                let b = &intervals[j].1;
                !a.is_subset(b) && !b.is_subset(a)
            });
            if ok {
                chosen.push(i);
                dfs(i + 1, intervals, chosen, n, out);
                chosen.pop();
            }
        }
    }
    dfs(0, &intervals, &mut chosen, n, &mut out);
    out
}

/// The exhaustive corpus: every antichain on every ground set up to `max_n`.
pub fn exhaustive_corpus(max_n: u32) -> Vec<SigmaIntervalSystem> {
    (1..=max_n).flat_map(all_antichains).collect()
}

/// Deterministic random antichains with ground sets between 8 and 12.
pub fn random_corpus(count: usize) -> Vec<SigmaIntervalSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(8..=12u32);
        let order = CyclicOrder::new(n).unwrap();
        let target = rng.random_range(1..=n);
        let mut pool: Vec<SigmaInterval> = (1..=n)
            .flat_map(|f| (1..=n).map(move |l| SigmaInterval::new(f, l)))
            .collect();
        pool.shuffle(&mut rng);
        let mut chosen: Vec<(SigmaInterval, BTreeSet<Element>)> = Vec::new();
        for iv in pool {
            if chosen.len() as u32 == target {
                break;
            }
            let members: BTreeSet<Element> =
                order.interval_members(iv).unwrap().into_iter().collect();
            let ok = chosen
                .iter()
                .all(|(_, m)| !members.is_subset(m) && !m.is_subset(&members));
            if ok {
                chosen.push((iv, members));
            }
        }
        let mut ivs: Vec<SigmaInterval> = chosen.into_iter().map(|(iv, _)| iv).collect();
        ivs.sort();
        out.push(SigmaIntervalSystem::new(n, ivs).unwrap());
    }
    out
}

/// Monotone paths from `from` to `to` staying inside the region, as words.
pub fn enumerate_paths(d: &Diagram, from: (i64, i64), to: (i64, i64)) -> Vec<Vec<Step>> {
    let mut out = Vec::new();
    if !d.in_region(from) {
        return out;
    }
    let mut word = Vec::new();
    walk(d, from, to, &mut word, &mut out);
    out
}

fn walk(
    d: &Diagram,
    at: (i64, i64),
    to: (i64, i64),
    word: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    if at == to {
        out.push(word.clone());
        return;
    }
    let east = (at.0 + 1, at.1);
    if east.0 <= to.0 && d.in_region(east) {
        word.push(Step::E);
        walk(d, east, to, word, out);
        word.pop();
    }
    let north = (at.0, at.1 + 1);
    if north.1 <= to.1 && d.in_region(north) {
        word.push(Step::N);
        walk(d, north, to, word, out);
        word.pop();
    }
}

/// Pseudo-activity statistics of one path, straight from the definitions.
#[derive(Debug, PartialEq, Eq)]
pub struct PathClass {
    pub pseudo_internal: u32,
    pub pseudo_external: u32,
    pub touches_bottom: bool,
    pub touches_top: bool,
}

pub fn classify_path(d: &Diagram, start: (i64, i64), word: &[Step]) -> PathClass {
    let mut points = vec![start];
    let mut at = start;
    for s in word {
        at = match s {
            Step::E => (at.0 + 1, at.1),
            Step::N => (at.0, at.1 + 1),
        };
        points.push(at);
    }
    let touches_bottom = points.iter().any(|&p| d.on_bottom(p));
    let touches_top = points.iter().any(|&p| d.on_top(p));
    let mut pseudo_internal = 0;
    let mut pseudo_external = 0;
    for (t, s) in word.iter().enumerate() {
        let tail_touches_bottom = points[t + 1..].iter().any(|&p| d.on_bottom(p));
        let tail_touches_top = points[t + 1..].iter().any(|&p| d.on_top(p));
        match s {
            Step::N => {
                if d.on_top(points[t]) && d.on_top(points[t + 1]) && tail_touches_bottom {
                    pseudo_internal += 1;
                }
            }
            Step::E => {
                if d.on_bottom(points[t]) && d.on_bottom(points[t + 1]) && tail_touches_top {
                    pseudo_external += 1;
                }
            }
        }
    }
    PathClass {
        pseudo_internal,
        pseudo_external,
        touches_bottom,
        touches_top,
    }
}

/// All region lattice points of a diagram.
pub fn region_points(d: &Diagram) -> Vec<(i64, i64)> {
    let k = d.k() as i64;
    let span = k + d.ground_size() as i64;
    let mut out = Vec::new();
    for x in 0..span {
        for y in 0..span {
            if d.in_region((x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// The monotone relabelling of `1..=n` minus one deleted element, applied
/// to a basis family: used to compare minors against the oracle.
pub fn relabel_after_removal(
    bases: &BTreeSet<Vec<Element>>,
    removed: Element,
) -> BTreeSet<Vec<Element>> {
    bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|&e| if e > removed { e - 1 } else { e })
                .collect()
        })
        .collect()
}
