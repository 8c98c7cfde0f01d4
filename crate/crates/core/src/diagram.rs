//! Planar diagrams whose bounded lattice paths encode matroid bases.
//!
//! A diagram is a 5-tuple `(k, m, r, P, Q)`: `P` runs from `(k-1, 0)` to
//! `(k-1+m, r)`, `Q` runs from `(0, k-1)` to `(m, k-1+r)` never dipping below
//! `P`, and the antidiagonals `L` (coordinate sum `k-1`) and `L'` (sum
//! `k-1+m+r`) close off the region.  A b-path walks monotonically from a
//! start point `p_i = (k-i, i-1)` to the matching end point `p'_i`; the
//! labels of its North steps form a basis, and every basis arises this way.
//!
//! Besides the construction from an interval presentation, this module
//! implements duality (reflect in the diagonal), the extension trick that
//! realizes an arbitrary diagram as a contraction of one coming from a
//! presentation, and diagrams of initial minors, which drive the Tutte
//! polynomial dynamic program.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::presentation::SigmaIntervalSystem;
use crate::{Element, SigmaInterval};

/// One unit step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }
}

/// A word over {E, N}; anchoring in the plane is supplied by the diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn from_word(word: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(word.len());
        for ch in word.chars() {
            match ch {
                'E' => steps.push(Step::E),
                'N' => steps.push(Step::N),
                _ => {
                    return Err(Error::InvalidDiagram(format!(
                        "invalid path character {ch:?}; expected E or N"
                    )))
                }
            }
        }
        Ok(LatticePath { steps })
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::E => 'E',
                Step::N => 'N',
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::N).count()
    }

    pub fn east_count(&self) -> usize {
        self.len() - self.north_count()
    }

    /// The word with E and N exchanged (reflection in the diagonal).
    pub fn flipped(&self) -> Self {
        LatticePath::new(self.steps.iter().map(|s| s.flipped()).collect())
    }

    /// The word read backwards (traversal after a half-turn of the plane).
    pub fn reversed(&self) -> Self {
        LatticePath::new(self.steps.iter().rev().copied().collect())
    }

    /// The word followed by `count` North steps.
    pub fn with_north_tail(&self, count: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.extend(std::iter::repeat_n(Step::N, count));
        LatticePath::new(steps)
    }
}

/// Classification of the greatest element of the matroid of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Loop,
    Isthmus,
    Ordinary,
}

/// A diagram `(k, m, r, P, Q)`.  Equality, ordering, and hashing use exactly
/// this 5-tuple, which is the canonical encoding for deduplication.
#[derive(Debug, Clone)]
pub struct Diagram {
    k: u32,
    m: u32,
    r: u32,
    p: LatticePath,
    q: LatticePath,
    /// height of P at coordinate sum `k-1+t`, indexed by t
    yp: Vec<i64>,
    /// height of Q at the same sums
    yq: Vec<i64>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}
impl Eq for Diagram {}
impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}
impl std::hash::Hash for Diagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl Diagram {
    pub fn new(k: u32, m: u32, r: u32, p: LatticePath, q: LatticePath) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDiagram("k must be positive".into()));
        }
        let len = (m + r) as usize;
        if p.len() != len || q.len() != len {
            return Err(Error::InvalidDiagram(format!(
                "border length mismatch: |P|={}, |Q|={}, m+r={}",
                p.len(),
                q.len(),
                len
            )));
        }
        if p.north_count() != r as usize {
            return Err(Error::InvalidDiagram(format!(
                "P must contain exactly r={} North steps, found {}",
                r,
                p.north_count()
            )));
        }
        if q.north_count() != r as usize {
            return Err(Error::InvalidDiagram(format!(
                "Q must contain exactly r={} North steps, found {}",
                r,
                q.north_count()
            )));
        }
        let mut yp = Vec::with_capacity(len + 1);
        let mut yq = Vec::with_capacity(len + 1);
        let mut hp = 0i64;
        let mut hq = (k - 1) as i64;
        yp.push(hp);
        yq.push(hq);
        for t in 0..len {
            if p.steps()[t] == Step::N {
                hp += 1;
            }
            if q.steps()[t] == Step::N {
                hq += 1;
            }
            yp.push(hp);
            yq.push(hq);
        }
        for t in 0..=len {
            if yq[t] < yp[t] {
                let s = (k - 1) as i64 + t as i64;
                return Err(Error::InvalidDiagram(format!(
                    "Q passes below P at ({}, {})",
                    s - yq[t],
                    yq[t]
                )));
            }
        }
        Ok(Diagram {
            k,
            m,
            r,
            p,
            q,
            yp,
            yq,
        })
    }

    fn key(&self) -> (u32, u32, u32, &LatticePath, &LatticePath) {
        (self.k, self.m, self.r, &self.p, &self.q)
    }

    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn nullity(&self) -> u32 {
        self.m
    }
    pub fn rank(&self) -> u32 {
        self.r
    }
    /// Ground set size of the matroid the diagram presents.
    pub fn ground_size(&self) -> u32 {
        self.m + self.r
    }
    pub fn bottom(&self) -> &LatticePath {
        &self.p
    }
    pub fn top(&self) -> &LatticePath {
        &self.q
    }

    fn lo(&self) -> i64 {
        (self.k - 1) as i64
    }
    fn hi(&self) -> i64 {
        (self.k - 1 + self.m + self.r) as i64
    }
    /// Height of the bottom border at coordinate sum `s`.
    pub(crate) fn y_p(&self, s: i64) -> i64 {
        self.yp[(s - self.lo()) as usize]
    }
    /// Height of the top border at coordinate sum `s`.
    pub(crate) fn y_q(&self, s: i64) -> i64 {
        self.yq[(s - self.lo()) as usize]
    }

    pub fn in_region(&self, pt: (i64, i64)) -> bool {
        let s = pt.0 + pt.1;
        s >= self.lo() && s <= self.hi() && pt.1 >= self.y_p(s) && pt.1 <= self.y_q(s)
    }

    /// True iff `pt` is a vertex of the bottom border path.
    pub fn on_bottom(&self, pt: (i64, i64)) -> bool {
        let s = pt.0 + pt.1;
        s >= self.lo() && s <= self.hi() && pt.1 == self.y_p(s)
    }

    /// True iff `pt` is a vertex of the top border path.
    pub fn on_top(&self, pt: (i64, i64)) -> bool {
        let s = pt.0 + pt.1;
        s >= self.lo() && s <= self.hi() && pt.1 == self.y_q(s)
    }

    /// Start point `p_i`, 1-based.
    pub fn start_point(&self, i: usize) -> (i64, i64) {
        debug_assert!(1 <= i && i <= self.k as usize);
        ((self.k as usize - i) as i64, i as i64 - 1)
    }

    /// End point `p'_i`.
    pub fn end_point(&self, i: usize) -> (i64, i64) {
        let (x, y) = self.start_point(i);
        (x + self.m as i64, y + self.r as i64)
    }

    /// Label of the edge whose earlier endpoint is `pt`.
    pub fn edge_label(&self, pt: (i64, i64)) -> Element {
        (pt.0 + pt.1 - self.lo() + 1) as Element
    }

    /// Builds the diagram of an antichain presentation anchored at `x`: walk
    /// the ground set from `x`, marking last elements North in the bottom
    /// border and first elements North in the top border; `k-1` counts the
    /// intervals containing `x` other than as their first element.
    pub fn from_presentation(sys: &SigmaIntervalSystem, x: Element) -> Result<Diagram> {
        if sys.intervals().is_empty() {
            return Err(Error::NoIntervals);
        }
        if !sys.order().contains(x) {
            return Err(Error::InvalidElement(x));
        }
        if !sys.is_antichain() {
            return Err(Error::NotAntichain);
        }
        let r = sys.rank();
        let n = sys.ground_size();
        let lasts: BTreeSet<Element> = sys.intervals().iter().map(|iv| iv.last).collect();
        let firsts: BTreeSet<Element> = sys.intervals().iter().map(|iv| iv.first).collect();
        let seq = sys.order().elements_from(x)?;
        let mark = |set: &BTreeSet<Element>| {
            LatticePath::new(
                seq.iter()
                    .map(|e| if set.contains(e) { Step::N } else { Step::E })
                    .collect(),
            )
        };
        let k = 1 + sys
            .intervals()
            .iter()
            .filter(|iv| sys.order().in_interval(**iv, x).unwrap() && iv.first != x)
            .count() as u32;
        Diagram::new(k, n - r, r, mark(&lasts), mark(&firsts))
    }

    /// Runs `f` on the North-step label set of every b-path, with repeats
    /// when the same word is realizable from several start points.
    fn for_each_bpath_labels(&self, mut f: impl FnMut(&[Element])) {
        let mut labels: Vec<Element> = Vec::with_capacity(self.r as usize);
        for i in 1..=self.k as usize {
            let end = self.end_point(i);
            self.walk(self.start_point(i), end, &mut labels, &mut f);
        }
    }

    fn walk(
        &self,
        pt: (i64, i64),
        end: (i64, i64),
        labels: &mut Vec<Element>,
        f: &mut impl FnMut(&[Element]),
    ) {
        if pt == end {
            f(labels);
            return;
        }
        let east = (pt.0 + 1, pt.1);
        if east.0 <= end.0 && self.in_region(east) {
            self.walk(east, end, labels, f);
        }
        let north = (pt.0, pt.1 + 1);
        if north.1 <= end.1 && self.in_region(north) {
            labels.push(self.edge_label(pt));
            self.walk(north, end, labels, f);
            labels.pop();
        }
    }

    /// The set of all b-path label sets; exponential, for small diagrams.
    pub fn label_sets(&self) -> BTreeSet<Vec<Element>> {
        let mut out = BTreeSet::new();
        self.for_each_bpath_labels(|labels| {
            out.insert(labels.to_vec());
        });
        out
    }

    /// Number of distinct label sets, by path counting: each label set has
    /// exactly one representation touching the top border (the highest valid
    /// start point), so count, per start, the paths that touch the top.
    pub fn count_bases(&self) -> BigInt {
        let mut total = BigInt::ZERO;
        for i in 1..=self.k as usize {
            let all = self.count_paths(i, false);
            let avoiding = self.count_paths(i, true);
            total += all - avoiding;
        }
        total
    }

    fn count_paths(&self, i: usize, avoid_top: bool) -> BigInt {
        let start = self.start_point(i);
        let end = self.end_point(i);
        let usable = |pt: (i64, i64)| {
            self.in_region(pt)
                && pt.0 <= end.0
                && pt.1 <= end.1
                && pt.0 >= start.0
                && pt.1 >= start.1
                && !(avoid_top && self.on_top(pt))
        };
        if !usable(start) {
            return BigInt::ZERO;
        }
        // heights at the current antidiagonal, from y_p(s) up
        let mut cur = vec![BigInt::ZERO; (self.y_q(self.lo()) - self.y_p(self.lo()) + 1) as usize];
        cur[(start.1 - self.y_p(self.lo())) as usize] = BigInt::from(1);
        for s in self.lo()..self.hi() {
            let base = self.y_p(s);
            let next_base = self.y_p(s + 1);
            let mut next = vec![BigInt::ZERO; (self.y_q(s + 1) - next_base + 1) as usize];
            for (off, v) in cur.iter().enumerate() {
                if v == &BigInt::ZERO {
                    continue;
                }
                let y = base + off as i64;
                for dy in [0i64, 1] {
                    let pt = (s + 1 - y - dy, y + dy);
                    if usable(pt) {
                        next[(pt.1 - next_base) as usize] += v;
                    }
                }
            }
            cur = next;
        }
        std::mem::take(&mut cur[(end.1 - self.y_p(self.hi())) as usize])
    }

    /// Reflection in the line y = x: East and North steps swap, the borders
    /// exchange roles, and the label sets become complements.
    pub fn reflect_dual(&self) -> Diagram {
        Diagram::new(self.k, self.r, self.m, self.q.flipped(), self.p.flipped())
            .expect("reflection preserves diagram invariants")
    }

    /// The extension `(k, m, r+k+1, P N^(k+1), Q N^(k+1))` together with the
    /// contraction set Z (the last k+1 elements) and the interval
    /// presentation read off the extension's rows; the original diagram's
    /// matroid is the presented matroid contracted by Z.
    pub fn extend(&self) -> Result<(Diagram, Vec<Element>, SigmaIntervalSystem)> {
        let k = self.k as usize;
        let tail = k + 1;
        let ext = Diagram::new(
            self.k,
            self.m,
            self.r + self.k + 1,
            self.p.with_north_tail(tail),
            self.q.with_north_tail(tail),
        )?;
        let n = ext.ground_size();
        let z: Vec<Element> = (n - self.k..=n).collect();

        // labels on the North steps of each unit-height row of the extension
        let row_count = (self.r + 2 * self.k) as usize;
        let mut rows: Vec<Vec<Element>> = vec![Vec::new(); row_count + 1];
        for (row, labels) in rows.iter_mut().enumerate().skip(1) {
            let y = row as i64 - 1;
            for s in ext.lo().max(y)..=ext.hi() {
                let x = s - y;
                if ext.in_region((x, y)) && ext.in_region((x, y + 1)) {
                    labels.push(ext.edge_label((x, y)));
                }
            }
            labels.sort_unstable();
            debug_assert!(
                labels.windows(2).all(|w| w[1] == w[0] + 1),
                "row labels must be consecutive"
            );
        }

        let mut intervals = Vec::new();
        for j in 1..k {
            let low = &rows[j];
            let high = &rows[self.r as usize + k + j + 1];
            debug_assert!(!low.is_empty() && !high.is_empty());
            // the two halves wrap around the end of the ground set
            debug_assert_eq!(*low.first().unwrap(), 1);
            debug_assert_eq!(*high.last().unwrap(), n);
            intervals.push(SigmaInterval::new(
                *high.first().unwrap(),
                *low.last().unwrap(),
            ));
        }
        for row in rows.iter().take(k + self.r as usize + 2).skip(k) {
            debug_assert!(!row.is_empty());
            intervals.push(SigmaInterval::new(
                *row.first().unwrap(),
                *row.last().unwrap(),
            ));
        }
        let sys = SigmaIntervalSystem::new(n, intervals)?;
        Ok((ext, z, sys))
    }

    /// Diagram of the initial minor that deletes `xs` and contracts `ys`,
    /// where `xs` and `ys` partition a suffix of the ground set.  The last
    /// `|xs| + |ys|` steps of a b-path are forced (East on `xs`, North on
    /// `ys`); the feasible start points form the range `a..=b` computed from
    /// suffix step counts against the borders, and the new borders are the
    /// extreme paths to the truncated end points.  Returns None when no
    /// b-path realizes the forced suffix.
    pub fn initial_minor_diagram(&self, xs: &[Element], ys: &[Element]) -> Result<Option<Diagram>> {
        let n = self.ground_size();
        let q = xs.len() + ys.len();
        let mut seen = vec![0u8; q];
        for (&e, tag) in xs
            .iter()
            .map(|e| (e, 1u8))
            .chain(ys.iter().map(|e| (e, 2u8)))
        {
            if e <= n.saturating_sub(q as u32) || e > n {
                return Err(Error::NotASuffixPartition);
            }
            let slot = (e - (n - q as u32) - 1) as usize;
            if seen[slot] != 0 {
                return Err(Error::NotASuffixPartition);
            }
            seen[slot] = tag;
        }
        if q == 0 {
            return Ok(Some(self.clone()));
        }
        if xs.len() > self.m as usize || ys.len() > self.r as usize {
            return Ok(None);
        }

        // forced suffix word, earliest element first
        let forced: Vec<Step> = seen
            .iter()
            .map(|&t| if t == 1 { Step::E } else { Step::N })
            .collect();
        let mut a_shift = 0i64; // max over suffix lengths of N(forced) - N(P)
        let mut b_shift = 0i64; // max of E(forced) - E(Q)
        let mut nf = 0i64;
        let mut ef = 0i64;
        let mut np = 0i64;
        let mut eq = 0i64;
        let plen = self.p.len();
        for i in 1..=q {
            if forced[q - i] == Step::N {
                nf += 1;
            } else {
                ef += 1;
            }
            if self.p.steps()[plen - i] == Step::N {
                np += 1;
            }
            if self.q.steps()[plen - i] == Step::E {
                eq += 1;
            }
            a_shift = a_shift.max(nf - np);
            b_shift = b_shift.max(ef - eq);
        }
        let a = 1 + a_shift;
        let b = self.k as i64 - b_shift;
        if a > b {
            return Ok(None);
        }

        let m2 = self.m - xs.len() as u32;
        let r2 = self.r - ys.len() as u32;
        let s_cut = self.hi() - q as i64;
        // y-coordinates of the truncated end points for start indices a and b
        let ya = (a - 1) + r2 as i64;
        let yb = (b - 1) + r2 as i64;

        // bottom border: lowest path from p_a to its truncated end point
        let mut p_steps = Vec::with_capacity((m2 + r2) as usize);
        let mut prev = (a - 1)
            .max(self.y_p(self.lo()))
            .max(ya - (s_cut - self.lo()));
        for s in self.lo() + 1..=s_cut {
            let h = (a - 1).max(self.y_p(s)).max(ya - (s_cut - s));
            p_steps.push(if h > prev { Step::N } else { Step::E });
            prev = h;
        }
        // top border: highest path from p_b to its truncated end point
        let mut q_steps = Vec::with_capacity((m2 + r2) as usize);
        let mut prev = (b - 1).min(self.y_q(self.lo())).min(yb);
        for s in self.lo() + 1..=s_cut {
            let h = ((b - 1) + (s - self.lo())).min(self.y_q(s)).min(yb);
            q_steps.push(if h > prev { Step::N } else { Step::E });
            prev = h;
        }
        let minor = Diagram::new(
            (b - a + 1) as u32,
            m2,
            r2,
            LatticePath::new(p_steps),
            LatticePath::new(q_steps),
        )?;
        Ok(Some(minor))
    }

    /// Whether the greatest element is a loop (no b-path takes it North), an
    /// isthmus (none takes it East), or ordinary.  Decided by construction:
    /// the corresponding initial minor is infeasible exactly in the first
    /// two cases.
    pub fn classify_greatest_element(&self) -> Result<ElementClass> {
        let n = self.ground_size();
        if n == 0 {
            return Err(Error::Domain("empty diagram has no elements".into()));
        }
        let deletion = self.initial_minor_diagram(&[n], &[])?;
        let contraction = self.initial_minor_diagram(&[], &[n])?;
        match (deletion.is_some(), contraction.is_some()) {
            (true, true) => Ok(ElementClass::Ordinary),
            (true, false) => Ok(ElementClass::Loop),
            (false, true) => Ok(ElementClass::Isthmus),
            (false, false) => unreachable!("element cannot be both loop and isthmus"),
        }
    }

    /// Canonical text form, shared with the CLI.
    pub fn to_text(&self) -> String {
        let mut out = String::from("diagram\n");
        out.push_str(&format!("k {}\n", self.k));
        out.push_str(&format!("m {}\n", self.m));
        out.push_str(&format!("r {}\n", self.r));
        if self.p.is_empty() {
            out.push_str("P\nQ\n");
        } else {
            out.push_str(&format!("P {}\n", self.p.word()));
            out.push_str(&format!("Q {}\n", self.q.word()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w3_diagram() -> Diagram {
        Diagram::from_presentation(&fixtures::whirl(3), 1).unwrap()
    }

    fn unit_square() -> Diagram {
        Diagram::new(
            1,
            1,
            1,
            LatticePath::from_word("EN").unwrap(),
            LatticePath::from_word("NE").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn whirl_diagram_shape() {
        let d = w3_diagram();
        assert_eq!(
            (
                d.k(),
                d.nullity(),
                d.rank(),
                d.bottom().word(),
                d.top().word()
            ),
            (2, 3, 3, "NENENE".into(), "NENENE".into())
        );
    }

    #[test]
    fn uniform_diagram_is_single_start() {
        let d = Diagram::from_presentation(&fixtures::uniform(3, 6), 1).unwrap();
        assert_eq!(d.k(), 1);
        assert_eq!(d.label_sets().len(), 20);
    }

    #[test]
    fn loop_anchor_gives_k1() {
        let s =
            SigmaIntervalSystem::new(4, vec![SigmaInterval::new(2, 3), SigmaInterval::new(4, 4)])
                .unwrap();
        let d = Diagram::from_presentation(&s, 1).unwrap();
        assert_eq!(d.k(), 1);
    }

    #[test]
    fn whirl_label_sets_match_oracle() {
        let d = w3_diagram();
        let sets = d.label_sets();
        assert_eq!(sets.len(), 17);
        assert!(sets.contains(&vec![1, 3, 5]));
        assert!(sets.contains(&vec![1, 2, 3]));
        assert!(!sets.contains(&vec![2, 3, 4]));
        let oracle = fixtures::whirl(3)
            .to_set_system()
            .bases_bruteforce()
            .unwrap();
        assert_eq!(sets, oracle);
    }

    #[test]
    fn unit_square_is_u12() {
        let d = unit_square();
        let sets = d.label_sets();
        assert_eq!(sets, BTreeSet::from([vec![1], vec![2]]));
        assert_eq!(d.count_bases(), 2.into());
    }

    #[test]
    fn count_bases_matches_enumeration() {
        assert_eq!(w3_diagram().count_bases(), 17.into());
    }

    #[test]
    fn staircase_count_equals_path_count() {
        // a linear-order presentation: one start point, bases = monotone
        // paths between the borders
        let sys = SigmaIntervalSystem::new(
            9,
            vec![
                SigmaInterval::new(1, 5),
                SigmaInterval::new(2, 7),
                SigmaInterval::new(5, 8),
                SigmaInterval::new(7, 9),
            ],
        )
        .unwrap();
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        assert_eq!(d.k(), 1);
        let bases = sys.to_set_system().bases_bruteforce().unwrap();
        assert_eq!(d.count_bases(), bases.len().into());
        assert_eq!(d.label_sets(), bases);
    }

    #[test]
    fn reflect_dual_complements() {
        let d = w3_diagram();
        let dual = d.reflect_dual();
        let complement =
            |b: &Vec<Element>| -> Vec<Element> { (1..=6).filter(|e| !b.contains(e)).collect() };
        let complements: BTreeSet<Vec<Element>> = d.label_sets().iter().map(complement).collect();
        assert_eq!(dual.label_sets(), complements);
        assert_eq!(dual.reflect_dual(), d);
    }

    #[test]
    fn five_start_extension() {
        let d = Diagram::new(
            5,
            6,
            3,
            LatticePath::from_word("EEEEENENN").unwrap(),
            LatticePath::from_word("NENNEEEEE").unwrap(),
        )
        .unwrap();
        let (ext, z, _sys) = d.extend().unwrap();
        assert_eq!(ext.k(), 5);
        assert_eq!(ext.nullity(), 6);
        assert_eq!(ext.rank(), 9);
        assert_eq!(ext.bottom().word(), "EEEEENENNNNNNNN");
        assert_eq!(ext.top().word(), "NENNEEEEENNNNNN");
        assert_eq!(z, vec![10, 11, 12, 13, 14, 15]);
    }

    #[test]
    fn extension_matroid_contracts_to_original() {
        let d = unit_square();
        let (ext, z, sys) = d.extend().unwrap();
        assert_eq!(ext.rank(), 3);
        let bases = sys.to_set_system().bases_bruteforce().unwrap();
        let contracted: BTreeSet<Vec<Element>> = bases
            .iter()
            .filter(|b| z.iter().all(|e| b.contains(e)))
            .map(|b| b.iter().copied().filter(|e| !z.contains(e)).collect())
            .collect();
        assert_eq!(contracted, d.label_sets());
    }

    #[test]
    fn initial_minor_example() {
        let d = w3_diagram();
        let minor = d.initial_minor_diagram(&[6], &[5]).unwrap().unwrap();
        assert_eq!((minor.k(), minor.nullity(), minor.rank()), (2, 2, 2));
        assert_eq!(minor.bottom().word(), "NENE");
        assert_eq!(minor.top().word(), "NENE");
        // label sets = bases containing 5 but not 6, with 5 removed
        let bases = fixtures::whirl(3)
            .to_set_system()
            .bases_bruteforce()
            .unwrap();
        let expected: BTreeSet<Vec<Element>> = bases
            .iter()
            .filter(|b| b.contains(&5) && !b.contains(&6))
            .map(|b| b.iter().copied().filter(|&e| e != 5).collect())
            .collect();
        assert_eq!(minor.label_sets(), expected);
    }

    #[test]
    fn empty_suffix_returns_self() {
        let d = w3_diagram();
        assert_eq!(d.initial_minor_diagram(&[], &[]).unwrap().unwrap(), d);
    }

    #[test]
    fn dependent_forced_suffix_is_infeasible() {
        // forcing two North steps in a rank-1 square is impossible
        let d = unit_square();
        assert_eq!(d.initial_minor_diagram(&[], &[1, 2]).unwrap(), None);
    }

    #[test]
    fn suffix_partition_is_checked() {
        let d = w3_diagram();
        assert!(matches!(
            d.initial_minor_diagram(&[4], &[6]),
            Err(Error::NotASuffixPartition)
        ));
        assert!(matches!(
            d.initial_minor_diagram(&[6], &[6]),
            Err(Error::NotASuffixPartition)
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            unit_square().classify_greatest_element().unwrap(),
            ElementClass::Ordinary
        );
        assert_eq!(
            w3_diagram().classify_greatest_element().unwrap(),
            ElementClass::Ordinary
        );
        let coloop = Diagram::new(
            1,
            0,
            1,
            LatticePath::from_word("N").unwrap(),
            LatticePath::from_word("N").unwrap(),
        )
        .unwrap();
        assert_eq!(
            coloop.classify_greatest_element().unwrap(),
            ElementClass::Isthmus
        );
        let single_loop = Diagram::new(
            1,
            1,
            0,
            LatticePath::from_word("E").unwrap(),
            LatticePath::from_word("E").unwrap(),
        )
        .unwrap();
        assert_eq!(
            single_loop.classify_greatest_element().unwrap(),
            ElementClass::Loop
        );
    }

    #[test]
    fn q_below_p_is_rejected() {
        let err = Diagram::new(
            1,
            1,
            1,
            LatticePath::from_word("NE").unwrap(),
            LatticePath::from_word("EN").unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidDiagram(_)));
    }
}
