//! Cyclic orders and intervals in them.
//!
//! Ground sets are canonically `1..=n` with the cyclic successor
//! `1 -> 2 -> ... -> n -> 1`.  A suborder induced by a subset skips the
//! missing elements.  Intervals are stored as endpoint pairs; membership and
//! length are arithmetic on cyclic positions, never materialized sets.

use crate::error::{Error, Result};
use crate::Element;

/// A cyclic order, either the full canonical cycle on `1..=n` or the order
/// induced on a subset of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrder {
    n: u32,
    /// Sorted members of a subset view; `None` means the full cycle.
    members: Option<Vec<Element>>,
}

/// An interval `[first, last]` in a cyclic order: `first` together with its
/// successors up to and including `last`.  A singleton has `first == last`;
/// the whole ground set arises when `successor(last) == first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaInterval {
    pub first: Element,
    pub last: Element,
}

impl SigmaInterval {
    pub fn new(first: Element, last: Element) -> Self {
        SigmaInterval { first, last }
    }
}

impl std::fmt::Display for SigmaInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.first, self.last)
    }
}

impl CyclicOrder {
    /// The full canonical cycle `(1, 2, ..., n)`.
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(CyclicOrder { n, members: None })
    }

    /// The order induced on `subset` by skipping missing elements.
    /// Inducing twice flattens: the result is always a view of the canonical
    /// parent cycle.
    pub fn induced(&self, subset: &[Element]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut members: Vec<Element> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        for &e in &members {
            if !self.contains(e) {
                return Err(Error::InvalidElement(e));
            }
        }
        if members.len() as u32 == self.n {
            return Ok(CyclicOrder {
                n: self.n,
                members: None,
            });
        }
        Ok(CyclicOrder {
            n: self.n,
            members: Some(members),
        })
    }

    pub fn len(&self) -> u32 {
        match &self.members {
            Some(m) => m.len() as u32,
            None => self.n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, e: Element) -> bool {
        match &self.members {
            Some(m) => m.binary_search(&e).is_ok(),
            None => 1 <= e && e <= self.n,
        }
    }

    /// Position of `e` along the cycle, counted from the smallest member.
    pub fn position(&self, e: Element) -> Result<u32> {
        match &self.members {
            Some(m) => m
                .binary_search(&e)
                .map(|i| i as u32)
                .map_err(|_| Error::InvalidElement(e)),
            None => {
                if 1 <= e && e <= self.n {
                    Ok(e - 1)
                } else {
                    Err(Error::InvalidElement(e))
                }
            }
        }
    }

    pub fn element_at(&self, pos: u32) -> Element {
        let pos = pos % self.len();
        match &self.members {
            Some(m) => m[pos as usize],
            None => pos + 1,
        }
    }

    pub fn successor(&self, e: Element) -> Result<Element> {
        Ok(self.element_at(self.position(e)? + 1))
    }

    pub fn predecessor(&self, e: Element) -> Result<Element> {
        Ok(self.element_at((self.position(e)? + self.len() - 1) % self.len()))
    }

    /// Number of successor steps from `a` to `b` (zero when `a == b`).
    pub fn distance(&self, a: Element, b: Element) -> Result<u32> {
        let pa = self.position(a)?;
        let pb = self.position(b)?;
        Ok((pb + self.len() - pa) % self.len())
    }

    /// Elements in cyclic order starting from `start`.
    pub fn elements_from(&self, start: Element) -> Result<Vec<Element>> {
        let p = self.position(start)?;
        Ok((0..self.len()).map(|i| self.element_at(p + i)).collect())
    }

    /// Elements in ascending label order.
    pub fn elements(&self) -> Vec<Element> {
        match &self.members {
            Some(m) => m.clone(),
            None => (1..=self.n).collect(),
        }
    }

    /// Number of elements of the interval, by position arithmetic.
    pub fn interval_len(&self, iv: SigmaInterval) -> Result<u32> {
        Ok(self.distance(iv.first, iv.last)? + 1)
    }

    pub fn in_interval(&self, iv: SigmaInterval, x: Element) -> Result<bool> {
        let span = self.distance(iv.first, iv.last)?;
        Ok(self.distance(iv.first, x)? <= span)
    }

    /// The members `first, successor(first), ..., last` in cyclic order.
    pub fn interval_members(&self, iv: SigmaInterval) -> Result<Vec<Element>> {
        let len = self.interval_len(iv)?;
        let p = self.position(iv.first)?;
        Ok((0..len).map(|i| self.element_at(p + i)).collect())
    }

    /// Splits `iv` at a member `x` into the first part `[first, pred(x)]`
    /// (absent when `x == first`) and the last part `[succ(x), last]`
    /// (absent when `x == last`).
    pub fn split_at(
        &self,
        iv: SigmaInterval,
        x: Element,
    ) -> Result<(Option<SigmaInterval>, Option<SigmaInterval>)> {
        if !self.in_interval(iv, x)? {
            return Err(Error::NotInInterval {
                element: x,
                first: iv.first,
                last: iv.last,
            });
        }
        let first_part = if x == iv.first {
            None
        } else {
            Some(SigmaInterval::new(iv.first, self.predecessor(x)?))
        };
        let last_part = if x == iv.last {
            None
        } else {
            Some(SigmaInterval::new(self.successor(x)?, iv.last))
        };
        Ok((first_part, last_part))
    }
}
