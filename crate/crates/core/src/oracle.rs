//! Brute-force ground truth for small instances.
//!
//! Everything here is deliberately naive: rank by augmenting-path matching,
//! bases by exhaustive enumeration, the Tutte polynomial by the subset
//! expansion, activities straight from the exchange definition.  The
//! enumerative operations are guarded by ground-set size and are never used
//! above their guards; rank itself is polynomial and unguarded.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polynomial::BivariatePolynomial;
use crate::Element;

/// Guard for operations enumerating all subsets or all r-subsets.
pub const ENUMERATION_GUARD: u32 = 20;
/// Guard for the connectivity test, which enumerates all splits.
pub const CONNECTIVITY_GUARD: u32 = 16;

/// A multiset of subsets of `1..=n`; the sets need not be intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    n: u32,
    sets: Vec<Vec<Element>>,
}

impl SetSystem {
    pub fn new<I, S>(n: u32, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = Element>,
    {
        let mut out = Vec::new();
        for s in sets {
            let mut v: Vec<Element> = s.into_iter().collect();
            v.sort_unstable();
            v.dedup();
            if let Some(&e) = v.iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::InvalidElement(e));
            }
            out.push(v);
        }
        Ok(SetSystem { n, sets: out })
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn sets(&self) -> &[Vec<Element>] {
        &self.sets
    }

    /// Matroid rank of `subset`: the size of a maximum matching between the
    /// subset elements and the sets containing them.
    pub fn rank(&self, subset: &[Element]) -> u32 {
        // owner[j] = element currently matched to set j
        let mut owner: Vec<Option<u32>> = vec![None; self.sets.len()];
        let mut size = 0u32;
        for &e in subset {
            let mut seen = vec![false; self.sets.len()];
            if self.augment(e, &mut owner, &mut seen) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, e: Element, owner: &mut [Option<u32>], seen: &mut [bool]) -> bool {
        for (j, set) in self.sets.iter().enumerate() {
            if seen[j] || set.binary_search(&e).is_err() {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || self.augment(owner[j].unwrap(), owner, seen) {
                owner[j] = Some(e);
                return true;
            }
        }
        false
    }

    pub fn full_rank(&self) -> u32 {
        let all: Vec<Element> = (1..=self.n).collect();
        self.rank(&all)
    }

    fn guard(&self, guard: u32) -> Result<()> {
        if self.n > guard {
            Err(Error::ResourceGuard { n: self.n, guard })
        } else {
            Ok(())
        }
    }

    /// All bases, by checking every r-subset of the ground set.
    pub fn bases_bruteforce(&self) -> Result<BTreeSet<Vec<Element>>> {
        self.guard(ENUMERATION_GUARD)?;
        let r = self.full_rank();
        let mut out = BTreeSet::new();
        for comb in (1..=self.n).combinations(r as usize) {
            if self.rank(&comb) == r {
                out.insert(comb);
            }
        }
        Ok(out)
    }

    /// The Tutte polynomial by the subset expansion
    /// `sum over A of (x-1)^(r(S)-r(A)) (y-1)^(|A|-r(A))`.
    pub fn tutte_subset_expansion(&self) -> Result<BivariatePolynomial> {
        self.guard(ENUMERATION_GUARD)?;
        let n = self.n as usize;
        let r = self.full_rank() as usize;
        let m = n - r;
        // tally subsets by (corank, nullity) first, then expand the binomials
        let mut count = vec![vec![BigInt::ZERO; m + 1]; r + 1];
        let mut elems: Vec<Element> = Vec::with_capacity(n);
        for mask in 0u32..(1u32 << n) {
            elems.clear();
            for e in 1..=self.n {
                if mask >> (e - 1) & 1 == 1 {
                    elems.push(e);
                }
            }
            let ra = self.rank(&elems) as usize;
            count[r - ra][elems.len() - ra] += 1;
        }
        let mut out = BivariatePolynomial::zero();
        for (a, row) in count.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if c != &BigInt::ZERO {
                    let term = BivariatePolynomial::binomial_power_product(a, b);
                    out.add_scaled_assign(&term, c);
                }
            }
        }
        Ok(out)
    }

    /// Internal and external activity of a basis under the order `1 < 2 <
    /// ... < n`, by direct exchange testing against the full basis list.
    pub fn activities_by_definition(&self, basis: &[Element]) -> Result<(u32, u32)> {
        let bases = self.bases_bruteforce()?;
        activities_from_bases(self.n, &bases, basis)
    }

    /// True when no proper nonempty subset X satisfies
    /// `r(X) + r(S - X) = r(S)`.
    pub fn is_connected_bruteforce(&self) -> Result<bool> {
        self.guard(CONNECTIVITY_GUARD)?;
        if self.n <= 1 {
            return Ok(true);
        }
        let r = self.full_rank();
        let n = self.n as usize;
        // only splits with element 1 on the X side need checking
        for mask in 0u32..(1u32 << (n - 1)) {
            let mut x = vec![1u32];
            let mut y = Vec::new();
            for e in 2..=self.n {
                if mask >> (e - 2) & 1 == 1 {
                    x.push(e);
                } else {
                    y.push(e);
                }
            }
            if y.is_empty() {
                continue;
            }
            if self.rank(&x) + self.rank(&y) == r {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Activity computation shared with callers that already hold the basis
/// list.
pub fn activities_from_bases(
    n: u32,
    bases: &BTreeSet<Vec<Element>>,
    basis: &[Element],
) -> Result<(u32, u32)> {
    let sorted: Vec<Element> = {
        let mut v = basis.to_vec();
        v.sort_unstable();
        v
    };
    if !bases.contains(&sorted) {
        return Err(Error::NotABasis(sorted));
    }
    let in_basis = |e: Element| sorted.binary_search(&e).is_ok();
    let mut internal = 0u32;
    for &u in &sorted {
        let active = (1..u).filter(|&v| !in_basis(v)).all(|v| {
            let mut cand: Vec<Element> = sorted.iter().copied().filter(|&w| w != u).collect();
            cand.push(v);
            cand.sort_unstable();
            !bases.contains(&cand)
        });
        if active {
            internal += 1;
        }
    }
    let mut external = 0u32;
    for u in (1..=n).filter(|&u| !in_basis(u)) {
        let active = (1..u).filter(|&v| in_basis(v)).all(|v| {
            let mut cand: Vec<Element> = sorted.iter().copied().filter(|&w| w != v).collect();
            cand.push(u);
            cand.sort_unstable();
            !bases.contains(&cand)
        });
        if active {
            external += 1;
        }
    }
    Ok((internal, external))
}

/// Subset-expansion Tutte polynomial of a matroid given only by its bases
/// (rank of a subset = largest intersection with a basis).
pub fn tutte_from_bases(n: u32, bases: &BTreeSet<Vec<Element>>) -> Result<BivariatePolynomial> {
    if n > ENUMERATION_GUARD {
        return Err(Error::ResourceGuard {
            n,
            guard: ENUMERATION_GUARD,
        });
    }
    let base_masks: Vec<u32> = bases
        .iter()
        .map(|b| b.iter().fold(0u32, |acc, &e| acc | 1 << (e - 1)))
        .collect();
    let r = bases.iter().next().map_or(0, |b| b.len());
    let m = n as usize - r;
    let mut count = vec![vec![BigInt::ZERO; m + 1]; r + 1];
    for mask in 0u32..(1u32 << n) {
        let ra = base_masks
            .iter()
            .map(|&b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0);
        count[r - ra][mask.count_ones() as usize - ra] += 1;
    }
    let mut out = BivariatePolynomial::zero();
    for (a, row) in count.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if c != &BigInt::ZERO {
                let term = BivariatePolynomial::binomial_power_product(a, b);
                out.add_scaled_assign(&term, c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w3() -> SetSystem {
        fixtures::whirl(3).to_set_system()
    }

    #[test]
    fn rank_of_whirl_subsets() {
        let s = w3();
        assert_eq!(s.rank(&[1, 3, 5]), 3);
        assert_eq!(s.rank(&[]), 0);
        assert_eq!(s.rank(&[1, 2, 3, 4, 5, 6]), 3);
    }

    #[test]
    fn whirl_has_17_bases() {
        let s = w3();
        let bases = s.bases_bruteforce().unwrap();
        assert_eq!(bases.len(), 17);
        // the three non-bases are the triangles of the whirl
        assert!(!bases.contains(&vec![1, 2, 6]));
        assert!(!bases.contains(&vec![2, 3, 4]));
        assert!(!bases.contains(&vec![4, 5, 6]));
        assert!(bases.contains(&vec![1, 2, 3]));
        assert!(bases.contains(&vec![2, 4, 6]));
    }

    #[test]
    fn uniform_has_all_subsets_as_bases() {
        let s = fixtures::u36_long().to_set_system();
        assert_eq!(s.bases_bruteforce().unwrap().len(), 20);
    }

    #[test]
    fn single_interval_single_element() {
        let s = SetSystem::new(1, vec![vec![1u32]]).unwrap();
        let bases = s.bases_bruteforce().unwrap();
        assert_eq!(bases, BTreeSet::from([vec![1]]));
    }

    #[test]
    fn tutte_of_coloop_and_loop() {
        let coloop = SetSystem::new(1, vec![vec![1u32]]).unwrap();
        let t = coloop.tutte_subset_expansion().unwrap();
        assert_eq!(t.to_string(), "x");

        let lp = SetSystem::new(1, Vec::<Vec<u32>>::new()).unwrap();
        let t = lp.tutte_subset_expansion().unwrap();
        assert_eq!(t.to_string(), "y");
    }

    #[test]
    fn tutte_of_whirl_evaluations() {
        let t = w3().tutte_subset_expansion().unwrap();
        assert_eq!(t.eval_i64(1, 1), 17.into());
        assert_eq!(t.eval_i64(2, 2), 64.into());
        // independent sets: the empty set, 6 singletons, all 15 pairs, 17 bases
        assert_eq!(t.eval_i64(2, 1), BigInt::from(1 + 6 + 15 + 17));
    }

    #[test]
    fn whirl_standard_counts() {
        // t(1,1)=bases, t(2,2)=2^n, t(2,1)=independent sets, t(1,2)=spanning
        let s = w3();
        let t = s.tutte_subset_expansion().unwrap();
        let mut independent = 0;
        let mut spanning = 0;
        for mask in 0u32..64 {
            let elems: Vec<u32> = (1..=6).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
            let ra = s.rank(&elems);
            if ra == elems.len() as u32 {
                independent += 1;
            }
            if ra == 3 {
                spanning += 1;
            }
        }
        assert_eq!(t.eval_i64(2, 1), BigInt::from(independent));
        assert_eq!(t.eval_i64(1, 2), BigInt::from(spanning));
    }

    #[test]
    fn activities_examples() {
        let s = w3();
        assert_eq!(s.activities_by_definition(&[1, 2, 3]).unwrap(), (3, 0));
        // U(1,2): the basis {2} exchanges with 1, so 1 is externally active
        let u12 = SetSystem::new(2, vec![vec![1u32, 2]]).unwrap();
        assert_eq!(u12.activities_by_definition(&[2]).unwrap(), (0, 1));
        assert_eq!(u12.activities_by_definition(&[1]).unwrap(), (1, 0));
        assert!(matches!(
            s.activities_by_definition(&[2, 3, 4]),
            Err(Error::NotABasis(_))
        ));
    }

    #[test]
    fn connectivity_examples() {
        assert!(w3().is_connected_bruteforce().unwrap());
        let two_coloops = SetSystem::new(2, vec![vec![1u32], vec![2u32]]).unwrap();
        assert!(!two_coloops.is_connected_bruteforce().unwrap());
        let u36 = fixtures::uniform(3, 6).to_set_system();
        assert!(u36.is_connected_bruteforce().unwrap());
    }

    #[test]
    fn guards_fire() {
        let big = SetSystem::new(21, vec![vec![1u32, 2]]).unwrap();
        assert!(matches!(
            big.bases_bruteforce(),
            Err(Error::ResourceGuard { .. })
        ));
        assert!(matches!(
            big.tutte_subset_expansion(),
            Err(Error::ResourceGuard { .. })
        ));
        let mid = SetSystem::new(17, vec![vec![1u32, 2]]).unwrap();
        assert!(matches!(
            mid.is_connected_bruteforce(),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn tutte_from_bases_matches_subset_expansion() {
        let s = w3();
        let bases = s.bases_bruteforce().unwrap();
        let t1 = tutte_from_bases(6, &bases).unwrap();
        let t2 = s.tutte_subset_expansion().unwrap();
        assert_eq!(t1, t2);
    }
}
