//! Interval presentations of multi-path matroids.
//!
//! A presentation is an ordered multiset of intervals in the canonical cyclic
//! order on `1..=n`.  Valid presentations are either antichains (no interval
//! contains another) or at least satisfy condition (C): whenever `I` is
//! contained in `J`, one of the endpoints of `J` lies in `I`.  Condition-(C)
//! multisets can always be reduced to an antichain presenting the same
//! matroid, which is how single-element deletion and contraction stay inside
//! the class.

use std::collections::BTreeSet;

use crate::cyclic::{CyclicOrder, SigmaInterval};
use crate::error::{Error, Result};
use crate::oracle::SetSystem;
use crate::Element;

/// An ordered multiset of intervals in the canonical cyclic order on
/// `1..=n`.  The index of an interval doubles as its identity, so repeated
/// intervals are representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaIntervalSystem {
    order: CyclicOrder,
    intervals: Vec<SigmaInterval>,
}

/// Structural flags of a presentation, as given (no normalization, no
/// isomorphism checks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_antichain: bool,
    pub satisfies_c: bool,
    /// Elements lying in no interval, ascending.
    pub loops: Vec<Element>,
    /// True when a loop exists, some first element is missing from the
    /// predecessor interval in the induced cycle, or the rank is at most 1.
    /// For non-antichain input only the loop and rank clauses apply.
    pub is_lattice_path: bool,
}

/// The cyclic permutation induced on interval indices by the cyclic order of
/// their last elements (equivalently, for antichains, of their first
/// elements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCycle {
    next: Vec<usize>,
    prev: Vec<usize>,
}

impl IntervalCycle {
    pub fn next(&self, i: usize) -> usize {
        self.next[i]
    }

    pub fn prev(&self, i: usize) -> usize {
        self.prev[i]
    }

    /// Indices in cycle order starting from `start`.
    pub fn order_from(&self, start: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.next.len());
        let mut i = start;
        loop {
            out.push(i);
            i = self.next[i];
            if i == start {
                break;
            }
        }
        out
    }
}

impl SigmaIntervalSystem {
    pub fn new(n: u32, intervals: Vec<SigmaInterval>) -> Result<Self> {
        let order = CyclicOrder::new(n)?;
        for iv in &intervals {
            for e in [iv.first, iv.last] {
                if !order.contains(e) {
                    return Err(Error::InvalidElement(e));
                }
            }
        }
        Ok(SigmaIntervalSystem { order, intervals })
    }

    pub fn ground_size(&self) -> u32 {
        self.order.len()
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    pub fn intervals(&self) -> &[SigmaInterval] {
        &self.intervals
    }

    /// Number of intervals; equals the matroid rank for valid presentations.
    pub fn rank(&self) -> u32 {
        self.intervals.len() as u32
    }

    pub fn nullity(&self) -> u32 {
        self.ground_size().saturating_sub(self.rank())
    }

    pub fn interval_members(&self, i: usize) -> Vec<Element> {
        self.order.interval_members(self.intervals[i]).unwrap()
    }

    fn member_sets(&self) -> Vec<BTreeSet<Element>> {
        self.intervals
            .iter()
            .map(|&iv| {
                self.order
                    .interval_members(iv)
                    .unwrap()
                    .into_iter()
                    .collect()
            })
            .collect()
    }

    /// Elements lying in no interval.
    pub fn loops(&self) -> Vec<Element> {
        let mut covered = vec![false; self.ground_size() as usize + 1];
        for i in 0..self.intervals.len() {
            for e in self.interval_members(i) {
                covered[e as usize] = true;
            }
        }
        (1..=self.ground_size())
            .filter(|&e| !covered[e as usize])
            .collect()
    }

    pub fn is_antichain(&self) -> bool {
        let sets = self.member_sets();
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i != j && sets[i].is_subset(&sets[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Structural report on the presentation as given.
    pub fn validate(&self) -> ValidationReport {
        let sets = self.member_sets();
        let mut is_antichain = true;
        let mut satisfies_c = true;
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i == j || !sets[i].is_subset(&sets[j]) {
                    continue;
                }
                is_antichain = false;
                let outer = self.intervals[j];
                if !sets[i].contains(&outer.first) && !sets[i].contains(&outer.last) {
                    satisfies_c = false;
                }
            }
        }
        let loops = self.loops();
        // nullity 0 means every element is a coloop: the free matroid,
        // which is a (disconnected) lattice path matroid
        let mut is_lattice_path =
            !loops.is_empty() || self.rank() <= 1 || self.rank() >= self.ground_size();
        if is_antichain && !is_lattice_path {
            let sigma = self.induced_interval_cycle().unwrap();
            for i in 0..self.intervals.len() {
                let pred = self.intervals[sigma.prev(i)];
                if !self
                    .order
                    .in_interval(pred, self.intervals[i].first)
                    .unwrap()
                {
                    is_lattice_path = true;
                    break;
                }
            }
        }
        ValidationReport {
            is_antichain,
            satisfies_c,
            loops,
            is_lattice_path,
        }
    }

    /// The induced cyclic permutation on interval indices.  Requires an
    /// antichain, which guarantees that last elements are pairwise distinct
    /// and that ordering by last elements agrees with ordering by first
    /// elements.
    pub fn induced_interval_cycle(&self) -> Result<IntervalCycle> {
        if !self.is_antichain() {
            return Err(Error::NotAntichain);
        }
        let r = self.intervals.len();
        let by_last = self.cycle_by(|iv| iv.last);
        debug_assert_eq!(by_last, self.cycle_by(|iv| iv.first));
        let mut prev = vec![0usize; r];
        for (i, &j) in by_last.iter().enumerate() {
            prev[j] = i;
        }
        Ok(IntervalCycle {
            next: by_last,
            prev,
        })
    }

    fn cycle_by(&self, key: impl Fn(&SigmaInterval) -> Element) -> Vec<usize> {
        let r = self.intervals.len();
        let mut idx: Vec<usize> = (0..r).collect();
        idx.sort_by_key(|&i| key(&self.intervals[i]));
        let mut next = vec![0usize; r];
        for w in 0..r {
            next[idx[w]] = idx[(w + 1) % r];
        }
        next
    }

    /// Reduces a condition-(C) multiset to an antichain presenting the same
    /// matroid: repeatedly pick a containment `I ⊆ J` with an endpoint of `J`
    /// in `I`, replace the longest interval sharing that endpoint by the
    /// interval with the endpoint dropped, and delete it if it empties.
    /// Deterministic: containments with the first endpoint in `I` are
    /// preferred, then smaller endpoint, then shorter `J`, then index.
    pub fn normalize_to_antichain(&self) -> Result<SigmaIntervalSystem> {
        let mut sys = self.clone();
        loop {
            let sets = sys.member_sets();
            // (endpoint value, |J|, j, trim_first)
            let mut best: Option<(u32, u32, usize, bool)> = None;
            let mut found_containment = false;
            for i in 0..sets.len() {
                for j in 0..sets.len() {
                    if i == j || !sets[i].is_subset(&sets[j]) {
                        continue;
                    }
                    found_containment = true;
                    let outer = sys.intervals[j];
                    let len_j = sys.order.interval_len(outer)?;
                    let f_in = sets[i].contains(&outer.first);
                    let l_in = sets[i].contains(&outer.last);
                    if !f_in && !l_in {
                        return Err(Error::ConditionCViolated {
                            inner_first: sys.intervals[i].first,
                            inner_last: sys.intervals[i].last,
                            outer_first: outer.first,
                            outer_last: outer.last,
                        });
                    }
                    let cand = if f_in {
                        (outer.first, len_j, j, true)
                    } else {
                        (outer.last, len_j, j, false)
                    };
                    let better = match best {
                        None => true,
                        // prefer first-endpoint reductions outright
                        Some((_, _, _, true)) if !cand.3 => false,
                        Some((_, _, _, false)) if cand.3 => true,
                        Some(b) => (cand.0, cand.1, cand.2) < (b.0, b.1, b.2),
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
            if !found_containment {
                return Ok(sys);
            }
            let (endpoint, _, _, trim_first) = best.unwrap();
            // Replace the longest interval with this endpoint, as the
            // reduction requires.
            let target = (0..sys.intervals.len())
                .filter(|&j| {
                    let iv = sys.intervals[j];
                    if trim_first {
                        iv.first == endpoint
                    } else {
                        iv.last == endpoint
                    }
                })
                .max_by_key(|&j| sys.order.interval_len(sys.intervals[j]).unwrap())
                .unwrap();
            let iv = sys.intervals[target];
            if iv.first == iv.last {
                sys.intervals.remove(target);
            } else if trim_first {
                sys.intervals[target] = SigmaInterval::new(sys.order.successor(iv.first)?, iv.last);
            } else {
                sys.intervals[target] =
                    SigmaInterval::new(iv.first, sys.order.predecessor(iv.last)?);
            }
        }
    }

    /// Relabels the elements of `kept` (a subset of the ground set, in
    /// ascending order) to `1..=kept.len()` and maps the given member sets to
    /// interval endpoint pairs in the new order.
    fn rebuild(kept: &[Element], sets: Vec<(Element, Element)>) -> Result<SigmaIntervalSystem> {
        if kept.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let relabel = |e: Element| -> Element { (kept.binary_search(&e).unwrap() + 1) as Element };
        let intervals = sets
            .into_iter()
            .map(|(f, l)| SigmaInterval::new(relabel(f), relabel(l)))
            .collect();
        SigmaIntervalSystem::new(kept.len() as u32, intervals)
    }

    /// Presentation of the single-element deletion: every interval loses `x`
    /// (endpoints adjusted in the induced order), emptied intervals are
    /// dropped, the survivors are relabelled to `1..=n-1`, and the result is
    /// normalized back to an antichain.
    pub fn delete_element(&self, x: Element) -> Result<SigmaIntervalSystem> {
        if !self.order.contains(x) {
            return Err(Error::InvalidElement(x));
        }
        let kept: Vec<Element> = (1..=self.ground_size()).filter(|&e| e != x).collect();
        let mut sets = Vec::new();
        for &iv in &self.intervals {
            if !self.order.in_interval(iv, x)? {
                sets.push((iv.first, iv.last));
                continue;
            }
            if iv.first == iv.last {
                // the singleton {x}; deleting it empties the interval
                continue;
            }
            let f = if iv.first == x {
                self.order.successor(x)?
            } else {
                iv.first
            };
            let l = if iv.last == x {
                self.order.predecessor(x)?
            } else {
                iv.last
            };
            sets.push((f, l));
        }
        Self::rebuild(&kept, sets)?.normalize_to_antichain()
    }

    /// Presentation of the single-element contraction.  With the interval
    /// cycle rotated so that the `t` intervals containing `x` come first:
    /// `t = 0` keeps all intervals, `t = 1` drops the unique one, and for
    /// `t > 1` consecutive pairs are merged as `(I_i ∪ I_{i+1}) - x`.
    pub fn contract_element(&self, x: Element) -> Result<SigmaIntervalSystem> {
        if !self.order.contains(x) {
            return Err(Error::InvalidElement(x));
        }
        let n = self.ground_size();
        let kept: Vec<Element> = (1..=n).filter(|&e| e != x).collect();
        let block: Vec<usize> = (0..self.intervals.len())
            .filter(|&i| self.order.in_interval(self.intervals[i], x).unwrap())
            .collect();
        let t = block.len();
        let r = self.intervals.len();

        if t <= 1 {
            let sets = (0..r)
                .filter(|i| !block.contains(i))
                .map(|i| (self.intervals[i].first, self.intervals[i].last))
                .collect();
            return Self::rebuild(&kept, sets)?.normalize_to_antichain();
        }

        let sigma = self.induced_interval_cycle()?;
        let in_block = |i: usize| block.contains(&i);
        let start = if t == r {
            // every interval contains x; start at the one whose last element
            // is nearest after x
            (0..r)
                .min_by_key(|&i| self.order.distance(x, self.intervals[i].last).unwrap())
                .unwrap()
        } else {
            *block
                .iter()
                .find(|&&i| !in_block(sigma.prev(i)))
                .ok_or(Error::NonConsecutiveBlock(x))?
        };
        let chain = sigma.order_from(start);
        // the x-containing intervals must occupy the first t cycle positions
        if chain[..t].iter().any(|&i| !in_block(i)) {
            return Err(Error::NonConsecutiveBlock(x));
        }

        let kept_order = self.order.induced(&kept)?;
        let mut sets: Vec<(Element, Element)> = Vec::with_capacity(r - 1);
        for w in 0..t - 1 {
            let a = self.intervals[chain[w]];
            let b = self.intervals[chain[w + 1]];
            let mut union: BTreeSet<Element> =
                self.order.interval_members(a)?.into_iter().collect();
            union.extend(self.order.interval_members(b)?);
            union.remove(&x);
            if union.len() as u32 == n - 1 {
                // the merged interval is the whole contracted ground set;
                // by convention it starts at the first element of I_i
                let f = if a.first == x {
                    self.order.successor(x)?
                } else {
                    a.first
                };
                sets.push((f, kept_order.predecessor(f)?));
            } else {
                sets.push(arc_endpoints(&kept_order, &union)?);
            }
        }
        for &i in &chain[t..] {
            sets.push((self.intervals[i].first, self.intervals[i].last));
        }
        Self::rebuild(&kept, sets)?.normalize_to_antichain()
    }

    /// Validates (normalizing a condition-(C) multiset to an antichain if
    /// needed) and removes loops.  Returns the loops in the original labels
    /// and the loopless antichain relabelled to its own ground set, or None
    /// when every element is a loop.
    pub fn split_loops(&self) -> Result<(Vec<Element>, Option<SigmaIntervalSystem>)> {
        let report = self.validate();
        let sys = if report.is_antichain {
            self.clone()
        } else if report.satisfies_c {
            self.normalize_to_antichain()?
        } else {
            return Err(Error::NotAntichain);
        };
        // loops of the matroid = uncovered elements, now that it is an antichain
        let loops = sys.loops();
        if sys.rank() == 0 {
            return Ok(((1..=sys.ground_size()).collect(), None));
        }
        let mut core = sys;
        // deleting a loop never disturbs the other intervals, only the labels
        for &l in loops.iter().rev() {
            core = core.delete_element(l)?;
        }
        Ok((loops, Some(core)))
    }

    /// The presentation as a plain set system, for the brute-force oracles.
    pub fn to_set_system(&self) -> SetSystem {
        SetSystem::new(
            self.ground_size(),
            (0..self.intervals.len()).map(|i| self.interval_members(i)),
        )
        .unwrap()
    }
}

/// Endpoints of a nonempty set that forms an interval of `order`; fails if
/// the set is not an interval.
fn arc_endpoints(order: &CyclicOrder, set: &BTreeSet<Element>) -> Result<(Element, Element)> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if set.len() as u32 == order.len() {
        return Err(Error::Domain(
            "full set has no canonical arc endpoints".into(),
        ));
    }
    let mut first = None;
    for &e in set {
        if !set.contains(&order.predecessor(e)?) {
            if first.is_some() {
                return Err(Error::Domain(format!("{set:?} is not an interval")));
            }
            first = Some(e);
        }
    }
    let first = first.ok_or_else(|| Error::Domain(format!("{set:?} is not an interval")))?;
    let mut last = first;
    for _ in 1..set.len() {
        last = order.successor(last)?;
    }
    Ok((first, last))
}

impl std::fmt::Display for SigmaIntervalSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} ", self.ground_size())?;
        let mut sorted = self.intervals.clone();
        sorted.sort();
        for (i, iv) in sorted.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}
