//! Internal and external basis activities through lattice paths.
//!
//! Fix the element order 1 < 2 < ... < n and the diagram anchored at 1.  A
//! subset X is drawn from a start point as the path whose u-th step is North
//! exactly when u is in X; a basis is a set whose drawing stays inside the
//! diagram.  Exchange feasibility, and with it activity, is readable off any
//! one valid drawing: an element of B is internally active iff its prefix is
//! all of B's smaller elements or its step runs along the top border with
//! the rest of the path touching the bottom; external activity is the
//! mirror statement.
//!
//! Counting bases by activity class reduces to counting constrained paths.
//! The table Γ(p, p'_i, a, b, τP, τQ) counts paths from p to the i-th end
//! point with a pseudo-internally and b pseudo-externally active steps that
//! touch the bottom border iff τP and the top iff τQ.  It fills backwards
//! from each end point one antidiagonal at a time, and the β sums assemble
//! the activity classes of the bases containing element 1 from it; the
//! remaining bases are counted on the reflected diagram with the exponents
//! swapped.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::diagram::{Diagram, Step};
use crate::error::{Error, Result};
use crate::polynomial::BivariatePolynomial;
use crate::presentation::SigmaIntervalSystem;

use crate::Element;

type Point = (i64, i64);

/// A subset drawn from a start point: the u-th step is North iff u is in
/// the subject set.
#[derive(Debug, Clone)]
pub struct PathRepresentation {
    subject: Vec<Element>,
    start_index: usize,
    word: Vec<Step>,
    /// lattice points visited, `points[t]` after t steps
    points: Vec<Point>,
    valid: bool,
}

impl PathRepresentation {
    pub fn subject(&self) -> &[Element] {
        &self.subject
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Entirely contained in the diagram region.
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    /// Points of `[v,u]`: from the beginning of step v to the end of step u.
    pub fn segment_closed(&self, v: u32, u: u32) -> &[Point] {
        &self.points[(v - 1) as usize..=u as usize]
    }

    /// Points of `(v,u)`: strictly between steps v and u; for v = u-1 this
    /// is the single point the two steps share.
    pub fn segment_open(&self, v: u32, u: u32) -> &[Point] {
        &self.points[v as usize..=(u - 1) as usize]
    }

    /// Points of `[1,v)`: from the start up to the beginning of step v.
    pub fn segment_prefix(&self, v: u32) -> &[Point] {
        &self.points[0..=(v - 1) as usize]
    }

    /// Points of `(u, n]`: from the end of step u to the end of the path.
    pub fn segment_suffix(&self, u: u32) -> &[Point] {
        &self.points[u as usize..]
    }
}

/// Draws `subject` from the i-th start point (1-based).
pub fn represent(d: &Diagram, subject: &[Element], i: usize) -> Result<PathRepresentation> {
    if i < 1 || i > d.k() as usize {
        return Err(Error::StartIndexOutOfRange { index: i, k: d.k() });
    }
    let n = d.ground_size();
    let mut subject: Vec<Element> = subject.to_vec();
    subject.sort_unstable();
    subject.dedup();
    if let Some(&e) = subject.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::InvalidElement(e));
    }
    let mut word = Vec::with_capacity(n as usize);
    let mut points = Vec::with_capacity(n as usize + 1);
    let mut pt = d.start_point(i);
    let mut valid = d.in_region(pt);
    points.push(pt);
    for u in 1..=n {
        let step = if subject.binary_search(&u).is_ok() {
            Step::N
        } else {
            Step::E
        };
        pt = match step {
            Step::E => (pt.0 + 1, pt.1),
            Step::N => (pt.0, pt.1 + 1),
        };
        valid = valid && d.in_region(pt);
        word.push(step);
        points.push(pt);
    }
    Ok(PathRepresentation {
        subject,
        start_index: i,
        word,
        points,
        valid,
    })
}

fn touches(d: &Diagram, pts: &[Point], top: bool) -> bool {
    pts.iter()
        .any(|&p| if top { d.on_top(p) } else { d.on_bottom(p) })
}

/// Whether `(basis - u) ∪ v` is again a basis, decided on the drawing of
/// `basis` from the i-th start point by the exchange conditions: for v < u
/// the strictly-between segment must avoid the top border, or else both the
/// prefix before v and the suffix after u must avoid the bottom border;
/// dually for u < v.
pub fn exchange_feasible(
    d: &Diagram,
    basis: &[Element],
    i: usize,
    u: Element,
    v: Element,
) -> Result<bool> {
    let rep = represent(d, basis, i)?;
    if !rep.is_valid() || rep.subject().len() != d.rank() as usize {
        return Err(Error::NotABasis(rep.subject().to_vec()));
    }
    let in_basis = |e: Element| rep.subject().binary_search(&e).is_ok();
    if !in_basis(u) || in_basis(v) || v == 0 || v > d.ground_size() {
        return Err(Error::Domain(format!(
            "exchange requires u in the basis and v outside it; got u={u}, v={v}"
        )));
    }
    let ok = if v < u {
        !touches(d, rep.segment_open(v, u), true)
            || (!touches(d, rep.segment_prefix(v), false)
                && !touches(d, rep.segment_suffix(u), false))
    } else {
        !touches(d, rep.segment_open(u, v), false)
            || (!touches(d, rep.segment_prefix(u), true)
                && !touches(d, rep.segment_suffix(v), true))
    };
    Ok(ok)
}

/// Internal and external activity of a basis of the diagram's matroid,
/// read off any valid representation.
pub fn basis_activities(d: &Diagram, basis: &[Element]) -> Result<(u32, u32)> {
    let rep = (1..=d.k() as usize)
        .map(|i| represent(d, basis, i))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|r| r.is_valid() && r.subject().len() == d.rank() as usize)
        .ok_or_else(|| {
            let mut b = basis.to_vec();
            b.sort_unstable();
            Error::NotABasis(b)
        })?;
    Ok(activities_of_representation(d, &rep))
}

/// Like [`basis_activities`] but pinned to a specific start point; errors
/// when the drawing from that start point leaves the region.  Activities do
/// not depend on the start point chosen, which tests assert.
pub fn basis_activities_at(d: &Diagram, basis: &[Element], i: usize) -> Result<(u32, u32)> {
    let rep = represent(d, basis, i)?;
    if !rep.is_valid() || rep.subject().len() != d.rank() as usize {
        return Err(Error::NotABasis(rep.subject().to_vec()));
    }
    Ok(activities_of_representation(d, &rep))
}

pub(crate) fn activities_of_representation(d: &Diagram, rep: &PathRepresentation) -> (u32, u32) {
    let n = d.ground_size();
    let in_basis = |e: Element| rep.subject().binary_search(&e).is_ok();
    let pts = rep.points();
    let mut internal = 0;
    let mut external = 0;
    for u in 1..=n {
        let tail = (u - 1) as usize;
        let head = u as usize;
        if in_basis(u) {
            let prefix_full = (1..u).all(in_basis);
            let step_on_top = d.on_top(pts[tail]) && d.on_top(pts[head]);
            if prefix_full || (step_on_top && touches(d, rep.segment_suffix(u), false)) {
                internal += 1;
            }
        } else {
            let prefix_empty = (1..u).all(|e| !in_basis(e));
            let step_on_bottom = d.on_bottom(pts[tail]) && d.on_bottom(pts[head]);
            if prefix_empty || (step_on_bottom && touches(d, rep.segment_suffix(u), true)) {
                external += 1;
            }
        }
    }
    (internal, external)
}

/// Activities of a basis of a presented system (order 1 < ... < n).  Loops
/// are split off first; each loop is externally active for every basis.
pub fn activities_of_basis(sys: &SigmaIntervalSystem, basis: &[Element]) -> Result<(u32, u32)> {
    let (loops, core) = sys.split_loops()?;
    let loop_count = loops.len() as u32;
    let mut sorted = basis.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let core = match core {
        Some(c) => c,
        None => {
            return if sorted.is_empty() {
                Ok((0, loop_count))
            } else {
                Err(Error::NotABasis(sorted))
            }
        }
    };
    if sorted.iter().any(|e| loops.binary_search(e).is_ok()) {
        return Err(Error::NotABasis(sorted));
    }
    let kept: Vec<Element> = (1..=sys.ground_size())
        .filter(|e| loops.binary_search(e).is_err())
        .collect();
    let relabelled: Vec<Element> = sorted
        .iter()
        .map(|e| {
            kept.binary_search(e)
                .map(|i| (i + 1) as Element)
                .map_err(|_| Error::InvalidElement(*e))
        })
        .collect::<Result<_>>()?;
    let d = Diagram::from_presentation(&core, 1)?;
    let (i, e) = basis_activities(&d, &relabelled)?;
    Ok((i, e + loop_count))
}

/// Per-point block of Γ values for one end point, dimensioned by the
/// remaining step budget: a ≤ dy, b ≤ dx.
#[derive(Debug, Clone)]
struct PointGamma {
    dx: usize,
    dy: usize,
    v: Vec<BigInt>,
}

impl PointGamma {
    fn zero(dx: usize, dy: usize) -> Self {
        PointGamma {
            dx,
            dy,
            v: vec![BigInt::ZERO; (dx + 1) * (dy + 1) * 4],
        }
    }

    fn idx(&self, a: usize, b: usize, tp: bool, tq: bool) -> usize {
        ((a * (self.dx + 1) + b) * 2 + tp as usize) * 2 + tq as usize
    }

    fn get(&self, a: usize, b: usize, tp: bool, tq: bool) -> BigInt {
        if a > self.dy || b > self.dx {
            return BigInt::ZERO;
        }
        self.v[self.idx(a, b, tp, tq)].clone()
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, bool, bool, &BigInt)> {
        let dx = self.dx;
        self.v
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != BigInt::ZERO)
            .map(move |(i, v)| {
                let tq = i & 1 == 1;
                let tp = (i >> 1) & 1 == 1;
                let rest = i >> 2;
                (rest / (dx + 1), rest % (dx + 1), tp, tq, v)
            })
    }

    fn is_zero(&self) -> bool {
        self.v.iter().all(|v| *v == BigInt::ZERO)
    }
}

/// Γ values for every end point of a diagram.
#[derive(Debug, Clone)]
pub struct GammaTable {
    k: u32,
    tables: Vec<BTreeMap<Point, PointGamma>>,
}

impl GammaTable {
    /// Γ(p, p'_i, a, b, τP, τQ); zero outside the stored domain.
    pub fn get(&self, p: Point, i: usize, a: u32, b: u32, tp: bool, tq: bool) -> BigInt {
        assert!(
            1 <= i && i <= self.k as usize,
            "end point index out of range"
        );
        self.tables[i - 1]
            .get(&p)
            .map(|pg| pg.get(a as usize, b as usize, tp, tq))
            .unwrap_or(BigInt::ZERO)
    }
}

/// Fills the full Γ table of a diagram.
pub fn compute_gamma(d: &Diagram) -> GammaTable {
    let tables = (1..=d.k() as usize)
        .map(|i| fill_gamma(d, i, None))
        .collect();
    GammaTable { k: d.k(), tables }
}

/// Dynamic program over antidiagonals towards the i-th end point.  When
/// `retain` is given, only those points' blocks are kept; otherwise the
/// whole table for this end point is returned.
fn fill_gamma(d: &Diagram, i: usize, retain: Option<&[Point]>) -> BTreeMap<Point, PointGamma> {
    let end = d.end_point(i);
    let lo = (d.k() - 1) as i64;
    let hi = lo + d.ground_size() as i64;
    let keep = |p: &Point| retain.is_none_or(|r| r.contains(p));
    let mut out: BTreeMap<Point, PointGamma> = BTreeMap::new();
    // layer at the antidiagonal one step closer to the end, keyed by height
    let mut tail: BTreeMap<i64, PointGamma> = BTreeMap::new();
    for s in (lo..=hi).rev() {
        let mut layer: BTreeMap<i64, PointGamma> = BTreeMap::new();
        if s == hi {
            let mut base = PointGamma::zero(0, 0);
            let idx = base.idx(0, 0, d.on_bottom(end), d.on_top(end));
            base.v[idx] = BigInt::from(1);
            layer.insert(end.1, base);
        } else {
            let y_min = (s - end.0).max(d.y_p(s));
            let y_max = end.1.min(d.y_q(s));
            for y in y_min..=y_max {
                let p = (s - y, y);
                let pg = gather(d, p, end, tail.get(&(y + 1)), tail.get(&y));
                if !pg.is_zero() {
                    layer.insert(y, pg);
                }
            }
        }
        for (&y, pg) in &layer {
            let p = (s - y, y);
            if keep(&p) {
                out.insert(p, pg.clone());
            }
        }
        tail = layer;
    }
    out
}

/// One step of the recurrence: combine the Γ blocks of the two successor
/// points into the block at `p`.  A North step along the top border is
/// pseudo-internally active when the tail touches the bottom; an East step
/// along the bottom is pseudo-externally active when the tail touches the
/// top.  Touch flags absorb the current point's border membership.
fn gather(
    d: &Diagram,
    p: Point,
    end: Point,
    north_tail: Option<&PointGamma>,
    east_tail: Option<&PointGamma>,
) -> PointGamma {
    let dx = (end.0 - p.0) as usize;
    let dy = (end.1 - p.1) as usize;
    let mut pg = PointGamma::zero(dx, dy);
    let on_p = d.on_bottom(p);
    let on_q = d.on_top(p);
    if let Some(c) = north_tail {
        let pn = (p.0, p.1 + 1);
        if pn.1 <= end.1 && d.in_region(pn) {
            let edge_on_top = on_q && d.on_top(pn);
            for (a, b, tp, tq, v) in c.entries() {
                let a2 = a + (edge_on_top && tp) as usize;
                let idx = pg.idx(a2, b, on_p || tp, on_q || tq);
                pg.v[idx] += v;
            }
        }
    }
    if let Some(c) = east_tail {
        let pe = (p.0 + 1, p.1);
        if pe.0 <= end.0 && d.in_region(pe) {
            let edge_on_bottom = on_p && d.on_bottom(pe);
            for (a, b, tp, tq, v) in c.entries() {
                let b2 = b + (edge_on_bottom && tq) as usize;
                let idx = pg.idx(a, b2, on_p || tp, on_q || tq);
                pg.v[idx] += v;
            }
        }
    }
    pg
}

/// Activity class counts of the bases containing element 1, assembled from
/// Γ by the β sums: a basis containing exactly the prefix [t] starts as
/// N^t E from its unique top-touching start point, the t prefix steps are
/// internally active, and the Γ block at the end of that prefix supplies
/// the remaining activity counts.
fn count_bases_with_one(d: &Diagram) -> BTreeMap<(u32, u32), BigInt> {
    let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    let r = d.rank();
    let m = d.nullity();
    if r == 0 {
        return out;
    }
    if m == 0 {
        // the unique basis is [r], entirely internally active
        out.insert((r, 0), BigInt::from(1));
        return out;
    }
    for j in 1..=d.k() as usize {
        let pj = d.start_point(j);
        // prefix N^t then one East step; record reachable corners and
        // whether the prefix already touches the top border
        let mut targets: Vec<(u32, Point, bool, bool)> = Vec::new();
        let mut prefix_touches_top = d.on_top(pj);
        for t in 1..=r {
            let shoulder = (pj.0, pj.1 + t as i64);
            if !d.in_region(shoulder) {
                break;
            }
            prefix_touches_top = prefix_touches_top || d.on_top(shoulder);
            let corner = (pj.0 + 1, pj.1 + t as i64);
            if !d.in_region(corner) {
                continue;
            }
            let edge_on_bottom = d.on_bottom(shoulder) && d.on_bottom(corner);
            targets.push((
                t,
                corner,
                edge_on_bottom,
                prefix_touches_top || d.on_top(corner),
            ));
        }
        if targets.is_empty() {
            continue;
        }
        let points: Vec<Point> = targets.iter().map(|&(_, p, _, _)| p).collect();
        let gamma = fill_gamma(d, j, Some(&points));
        for (t, corner, edge_on_bottom, touches_top) in targets {
            let Some(pg) = gamma.get(&corner) else {
                continue;
            };
            for (a, b, tp, tq, v) in pg.entries() {
                // the whole path must touch the top border (uniqueness of
                // the counted representation)
                if !touches_top && !tq {
                    continue;
                }
                // starting on the bottom border forces the touch flag
                if edge_on_bottom && !tp {
                    continue;
                }
                let internal = t + a as u32;
                let external = b as u32 + (edge_on_bottom && tq) as u32;
                *out.entry((internal, external)).or_default() += v;
            }
        }
    }
    out
}

/// Number of bases in each (internal, external) activity class.  Bases
/// containing element 1 come from the diagram itself; the rest are bases of
/// the dual containing 1, counted on the reflected diagram with the two
/// activities exchanged.
pub fn count_activity_classes(d: &Diagram) -> BTreeMap<(u32, u32), BigInt> {
    if d.ground_size() == 0 {
        return BTreeMap::from([((0, 0), BigInt::from(1))]);
    }
    let mut out = count_bases_with_one(d);
    for ((i_dual, e_dual), v) in count_bases_with_one(&d.reflect_dual()) {
        *out.entry((e_dual, i_dual)).or_default() += v;
    }
    out
}

/// Tutte polynomial as the activity generating function
/// `sum over bases of x^i(B) y^e(B)`.
pub fn tutte_via_activities(sys: &SigmaIntervalSystem) -> Result<BivariatePolynomial> {
    let (loops, core) = sys.split_loops()?;
    let poly = match core {
        None => BivariatePolynomial::one(),
        Some(core) => {
            let d = Diagram::from_presentation(&core, 1)?;
            let mut p = BivariatePolynomial::zero();
            for ((i, e), v) in count_activity_classes(&d) {
                p.add_scaled_assign(
                    &BivariatePolynomial::monomial(i as usize, e as usize, 1),
                    &v,
                );
            }
            p
        }
    };
    Ok(poly.shifted(0, loops.len()))
}

/// Tutte polynomial of the matroid presented by a diagram, via activities.
pub fn tutte_of_diagram_via_activities(d: &Diagram) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for ((i, e), v) in count_activity_classes(d) {
        p.add_scaled_assign(
            &BivariatePolynomial::monomial(i as usize, e as usize, 1),
            &v,
        );
    }
    p
}
