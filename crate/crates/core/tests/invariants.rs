//! Cross-module invariants checked on exhaustively generated small corpora.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use common::*;
use mpm::activities::{
    basis_activities_at, compute_gamma, count_activity_classes, represent, tutte_via_activities,
};
use mpm::oracle::tutte_from_bases;
use mpm::structure::{is_minimal_sigma_presentation, verify_cocircuit_presentation};
use mpm::tutte::{tutte, tutte_of_diagram};
use mpm::{CyclicOrder, Diagram, Element, SigmaInterval, SigmaIntervalSystem};

fn loopless_cores(max_n: u32) -> Vec<SigmaIntervalSystem> {
    let mut out: Vec<SigmaIntervalSystem> = exhaustive_corpus(max_n)
        .into_iter()
        .filter_map(|sys| sys.split_loops().unwrap().1)
        .collect();
    out.sort_by_key(|s| (s.ground_size(), s.intervals().to_vec()));
    out.dedup();
    out
}

#[test]
fn normalization_preserves_bases() {
    // grow condition-(C) multisets out of antichains by stretching one
    // interval over another while keeping an endpoint inside it
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for sys in exhaustive_corpus(6) {
        if sys.rank() < 1 || !rng.random_bool(0.25) {
            continue;
        }
        let order = sys.order().clone();
        let pick = rng.random_range(0..sys.intervals().len());
        let iv = sys.intervals()[pick];
        let grow = rng.random_range(0..order.len());
        let mut last = iv.last;
        for _ in 0..grow {
            last = order.successor(last).unwrap();
        }
        let mut intervals = sys.intervals().to_vec();
        intervals.push(SigmaInterval::new(iv.first, last));
        let multi = SigmaIntervalSystem::new(sys.ground_size(), intervals).unwrap();
        let report = multi.validate();
        if !report.satisfies_c {
            assert!(multi.normalize_to_antichain().is_err());
            continue;
        }
        let normal = multi.normalize_to_antichain().unwrap();
        assert!(normal.is_antichain());
        assert_eq!(
            normal.to_set_system().bases_bruteforce().unwrap(),
            multi.to_set_system().bases_bruteforce().unwrap(),
            "normalization changed the matroid of {multi}"
        );
        checked += 1;
    }
    assert!(checked > 300, "only {checked} multisets exercised");
}

#[test]
fn antichains_have_distinct_endpoints_and_consistent_cycles() {
    for sys in exhaustive_corpus(6) {
        let firsts: BTreeSet<Element> = sys.intervals().iter().map(|iv| iv.first).collect();
        let lasts: BTreeSet<Element> = sys.intervals().iter().map(|iv| iv.last).collect();
        assert_eq!(firsts.len(), sys.intervals().len());
        assert_eq!(lasts.len(), sys.intervals().len());
        // the cycle computation internally asserts last-order == first-order
        sys.induced_interval_cycle().unwrap();
    }
}

#[test]
fn minors_match_basis_filters() {
    for sys in exhaustive_corpus(6) {
        if sys.ground_size() == 1 {
            // the empty matroid has no interval presentation
            continue;
        }
        let oracle = sys.to_set_system();
        let bases = oracle.bases_bruteforce().unwrap();
        let r = sys.rank();
        for x in 1..=sys.ground_size() {
            let is_loop = sys.loops().contains(&x);
            let all: Vec<Element> = (1..=sys.ground_size()).filter(|&e| e != x).collect();
            let is_coloop = oracle.rank(&all) < r;
            if !is_coloop {
                let expected: BTreeSet<Vec<Element>> =
                    bases.iter().filter(|b| !b.contains(&x)).cloned().collect();
                let deleted = sys.delete_element(x).unwrap();
                assert_eq!(
                    deleted.to_set_system().bases_bruteforce().unwrap(),
                    relabel_after_removal(&expected, x),
                    "deletion of {x} from {sys}"
                );
            }
            if !is_loop {
                let expected: BTreeSet<Vec<Element>> = bases
                    .iter()
                    .filter(|b| b.contains(&x))
                    .map(|b| b.iter().copied().filter(|&e| e != x).collect())
                    .collect();
                let contracted = sys.contract_element(x).unwrap();
                assert_eq!(
                    contracted.to_set_system().bases_bruteforce().unwrap(),
                    relabel_after_removal(&expected, x),
                    "contraction of {x} from {sys}"
                );
            }
        }
    }
}

#[test]
fn diagram_duality_complements_label_sets() {
    for sys in loopless_cores(6) {
        let n = sys.ground_size();
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let dual = d.reflect_dual();
        let complements: BTreeSet<Vec<Element>> = d
            .label_sets()
            .iter()
            .map(|b| (1..=n).filter(|e| !b.contains(e)).collect())
            .collect();
        assert_eq!(dual.label_sets(), complements, "duality failed for {sys}");
        assert_eq!(dual.reflect_dual(), d);
    }
}

#[test]
fn diagram_rotation_matches_reverse_anchor() {
    // building at the predecessor anchor under the reversed cyclic order
    // gives the half-turn of the diagram: borders swap and reverse
    for sys in loopless_cores(6) {
        let n = sys.ground_size();
        let rho = |e: Element| n + 1 - e;
        for x in 1..=n {
            let d = Diagram::from_presentation(&sys, x).unwrap();
            let reversed = SigmaIntervalSystem::new(
                n,
                sys.intervals()
                    .iter()
                    .map(|iv| SigmaInterval::new(rho(iv.last), rho(iv.first)))
                    .collect(),
            )
            .unwrap();
            let anchor = rho(if x == 1 { n } else { x - 1 });
            let rotated = Diagram::from_presentation(&reversed, anchor).unwrap();
            let expected = Diagram::new(
                d.k(),
                d.nullity(),
                d.rank(),
                d.top().reversed(),
                d.bottom().reversed(),
            )
            .unwrap();
            assert_eq!(rotated, expected, "rotation failed for {sys} at {x}");
        }
    }
}

#[test]
fn count_bases_agrees_with_enumeration() {
    for sys in loopless_cores(6) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        assert_eq!(
            d.count_bases(),
            BigInt::from(d.label_sets().len()),
            "count mismatch for {sys}"
        );
    }
}

#[test]
fn extension_realizes_diagram_as_contraction() {
    let mut checked = 0;
    for sys in loopless_cores(4) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let (ext, z, presented) = d.extend().unwrap();
        assert_eq!(ext.rank(), d.rank() + d.k() + 1);
        if presented.ground_size() > 14 {
            continue;
        }
        assert!(
            presented.is_antichain(),
            "extension of {sys} not an antichain"
        );
        let bases = presented.to_set_system().bases_bruteforce().unwrap();
        let contracted: BTreeSet<Vec<Element>> = bases
            .iter()
            .filter(|b| z.iter().all(|e| b.contains(e)))
            .map(|b| b.iter().copied().filter(|e| !z.contains(e)).collect())
            .collect();
        assert_eq!(contracted, d.label_sets(), "extension of {sys}");
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn initial_minor_diagrams_match_minor_bases() {
    for sys in loopless_cores(5) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let n = d.ground_size();
        let oracle = sys.to_set_system();
        let bases = oracle.bases_bruteforce().unwrap();
        let r = sys.rank();
        for q in 1..=n.min(3) {
            let suffix: Vec<Element> = (n - q + 1..=n).collect();
            for mask in 0..(1u32 << q) {
                let xs: Vec<Element> = suffix
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let ys: Vec<Element> = suffix.iter().filter(|e| !xs.contains(e)).copied().collect();
                let minor = d.initial_minor_diagram(&xs, &ys).unwrap();
                let survivors: Vec<Element> = (1..=n).filter(|e| !xs.contains(e)).collect();
                let x_coindependent = oracle.rank(&survivors) == r;
                let y_independent = oracle.rank(&ys) == ys.len() as u32;
                assert_eq!(
                    minor.is_some(),
                    x_coindependent && y_independent,
                    "feasibility mismatch for {sys}, X={xs:?} Y={ys:?}"
                );
                let Some(minor) = minor else { continue };
                let expected: BTreeSet<Vec<Element>> = bases
                    .iter()
                    .filter(|b| {
                        xs.iter().all(|e| !b.contains(e)) && ys.iter().all(|e| b.contains(e))
                    })
                    .map(|b| b.iter().copied().filter(|e| !ys.contains(e)).collect())
                    .collect();
                assert_eq!(
                    minor.label_sets(),
                    expected,
                    "minor bases mismatch for {sys}, X={xs:?} Y={ys:?}"
                );
            }
        }
    }
}

#[test]
fn exchange_matches_oracle() {
    for sys in loopless_cores(5) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let n = sys.ground_size();
        let bases = sys.to_set_system().bases_bruteforce().unwrap();
        for basis in &bases {
            let valid_starts: Vec<usize> = (1..=d.k() as usize)
                .filter(|&i| represent(&d, basis, i).unwrap().is_valid())
                .collect();
            assert!(!valid_starts.is_empty());
            for &u in basis {
                for v in (1..=n).filter(|v| !basis.contains(v)) {
                    let mut swapped: Vec<Element> =
                        basis.iter().copied().filter(|&e| e != u).collect();
                    swapped.push(v);
                    swapped.sort_unstable();
                    let expected = bases.contains(&swapped);
                    for &i in &valid_starts {
                        assert_eq!(
                            mpm::activities::exchange_feasible(&d, basis, i, u, v).unwrap(),
                            expected,
                            "exchange {u}->{v} in {basis:?} of {sys} from start {i}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn every_basis_has_one_top_touching_representation() {
    for sys in loopless_cores(6) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        for basis in d.label_sets() {
            let touching = (1..=d.k() as usize)
                .filter(|&i| {
                    let rep = represent(&d, &basis, i).unwrap();
                    rep.is_valid() && rep.points().iter().any(|&p| d.on_top(p))
                })
                .count();
            assert_eq!(touching, 1, "basis {basis:?} of {sys}");
        }
    }
}

#[test]
fn gamma_base_cases() {
    for sys in loopless_cores(4) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let g = compute_gamma(&d);
        for i in 1..=d.k() as usize {
            let end = d.end_point(i);
            for tp in [false, true] {
                for tq in [false, true] {
                    let expected = tp == d.on_bottom(end) && tq == d.on_top(end);
                    assert_eq!(g.get(end, i, 0, 0, tp, tq) == 1.into(), expected);
                    assert_eq!(g.get(end, i, 1, 0, tp, tq), 0.into());
                }
            }
        }
    }
}

#[test]
fn activity_classes_total_to_basis_count() {
    for sys in loopless_cores(5) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let classes = count_activity_classes(&d);
        let total: BigInt = classes.values().cloned().sum();
        assert_eq!(total, d.count_bases(), "class totals for {sys}");
    }
}

#[test]
fn engines_agree_on_diagrams_of_every_anchor() {
    // anchoring at different elements changes k and the border words but
    // not the matroid; both engines must agree on all of these diagrams
    let mut seen = BTreeSet::new();
    for sys in exhaustive_corpus(6) {
        for x in 1..=sys.ground_size() {
            let d = Diagram::from_presentation(&sys, x).unwrap();
            if !seen.insert(d.clone()) {
                continue;
            }
            assert_eq!(
                tutte_of_diagram(&d).unwrap(),
                mpm::activities::tutte_of_diagram_via_activities(&d),
                "engines disagree on the anchor-{x} diagram of {sys}"
            );
        }
    }
    assert!(seen.len() > 2000, "only {} distinct diagrams", seen.len());
}

#[test]
fn gamma_matches_bruteforce_on_anchored_diagrams() {
    let mut seen = BTreeSet::new();
    for sys in exhaustive_corpus(5) {
        for x in 1..=sys.ground_size() {
            let d = Diagram::from_presentation(&sys, x).unwrap();
            if !seen.insert(d.clone()) {
                continue;
            }
            let g = compute_gamma(&d);
            for i in 1..=d.k() as usize {
                let end = d.end_point(i);
                for p in region_points(&d) {
                    if p.0 > end.0 || p.1 > end.1 {
                        continue;
                    }
                    let mut tally: BTreeMap<(u32, u32, bool, bool), BigInt> = BTreeMap::new();
                    for word in enumerate_paths(&d, p, end) {
                        let class = classify_path(&d, p, &word);
                        *tally
                            .entry((
                                class.pseudo_internal,
                                class.pseudo_external,
                                class.touches_bottom,
                                class.touches_top,
                            ))
                            .or_default() += 1;
                    }
                    for a in 0..=d.rank() {
                        for b in 0..=d.nullity() {
                            for tp in [false, true] {
                                for tq in [false, true] {
                                    let expected =
                                        tally.get(&(a, b, tp, tq)).cloned().unwrap_or_default();
                                    assert_eq!(
                                        g.get(p, i, a, b, tp, tq),
                                        expected,
                                        "gamma mismatch at {p:?} ending {i} in anchor-{x} diagram of {sys}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn engines_agree_beyond_bruteforce_reach() {
    // sizes the subset expansion cannot touch: compare the two engines
    // against each other and against closed forms
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut big = num_bigint::BigInt::from(1);
    for _ in 0..150 {
        let n = rng.random_range(13..=30u32);
        let order = CyclicOrder::new(n).unwrap();
        let target = rng.random_range(2..=n / 2);
        let mut chosen: Vec<(SigmaInterval, BTreeSet<Element>)> = Vec::new();
        for _ in 0..20 * target {
            if chosen.len() as u32 == target {
                break;
            }
            let iv = SigmaInterval::new(
                rng.random_range(1..=n),
                rng.random_range(1..=n),
            );
            let members: BTreeSet<Element> =
                order.interval_members(iv).unwrap().into_iter().collect();
            if chosen
                .iter()
                .all(|(_, m)| !members.is_subset(m) && !m.is_subset(&members))
            {
                chosen.push((iv, members));
            }
        }
        let sys = SigmaIntervalSystem::new(
            n,
            chosen.into_iter().map(|(iv, _)| iv).collect(),
        )
        .unwrap();
        let dp = tutte(&sys).unwrap();
        let act = tutte_via_activities(&sys).unwrap();
        assert_eq!(dp, act, "engines disagree on {sys}");
        assert_eq!(
            dp.eval_i64(2, 2),
            num_bigint::BigInt::from(2u8).pow(n),
            "t(2,2) must be 2^n for {sys}"
        );
        let (loops, core) = sys.split_loops().unwrap();
        if let Some(core) = core {
            let d = Diagram::from_presentation(&core, 1).unwrap();
            assert_eq!(dp.eval_i64(1, 1), d.count_bases(), "basis count for {sys}");
            let _ = loops;
        }
        if dp.eval_i64(1, 1) > big {
            big = dp.eval_i64(1, 1);
        }
    }
    // make sure the sample actually reached interesting sizes
    assert!(big > num_bigint::BigInt::from(100_000u32), "largest count {big}");
}

#[test]
fn dp_duality_swaps_variables() {
    for sys in loopless_cores(5) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let t = tutte_of_diagram(&d).unwrap();
        let t_dual = tutte_of_diagram(&d.reflect_dual()).unwrap();
        assert_eq!(t_dual, t.swap_variables(), "duality for {sys}");
    }
}

#[test]
fn diagram_tutte_from_label_sets_agrees() {
    // rank function reconstructed from bases gives the same polynomial
    for (i, sys) in loopless_cores(5).into_iter().enumerate() {
        if i % 7 != 0 {
            continue;
        }
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        let via_bases = tutte_from_bases(d.ground_size(), &d.label_sets()).unwrap();
        assert_eq!(via_bases, tutte(&sys).unwrap());
    }
}

#[test]
fn subset_expansion_satisfies_deletion_contraction() {
    for (i, sys) in exhaustive_corpus(5).into_iter().enumerate() {
        if i % 5 != 0 {
            continue;
        }
        let oracle = sys.to_set_system();
        let t = oracle.tutte_subset_expansion().unwrap();
        let r = sys.rank();
        if sys.ground_size() == 1 {
            // single element: x on a coloop, y on a loop
            let expected = if r == 1 { "x" } else { "y" };
            assert_eq!(t.to_string(), expected);
            continue;
        }
        for x in 1..=sys.ground_size() {
            let is_loop = sys.loops().contains(&x);
            let rest: Vec<Element> = (1..=sys.ground_size()).filter(|&e| e != x).collect();
            let is_coloop = oracle.rank(&rest) < r;
            let del = sys
                .delete_element(x)
                .unwrap()
                .to_set_system()
                .tutte_subset_expansion()
                .unwrap();
            let con = sys
                .contract_element(x)
                .unwrap()
                .to_set_system()
                .tutte_subset_expansion()
                .unwrap();
            let expected = if is_loop {
                del.times_y()
            } else if is_coloop {
                con.times_x()
            } else {
                del.add(&con)
            };
            assert_eq!(t, expected, "recurrence at {x} of {sys}");
        }
    }
}

#[test]
fn rank_is_monotone_and_submodular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (i, sys) in exhaustive_corpus(6).into_iter().enumerate() {
        if i % 11 != 0 {
            continue;
        }
        let oracle = sys.to_set_system();
        let n = sys.ground_size();
        for _ in 0..8 {
            let a: Vec<Element> = (1..=n).filter(|_| rng.random_bool(0.4)).collect();
            let b: Vec<Element> = (1..=n).filter(|_| rng.random_bool(0.4)).collect();
            let union: Vec<Element> = (1..=n).filter(|e| a.contains(e) || b.contains(e)).collect();
            let inter: Vec<Element> = (1..=n).filter(|e| a.contains(e) && b.contains(e)).collect();
            assert!(oracle.rank(&inter) <= oracle.rank(&union));
            assert!(oracle.rank(&union) + oracle.rank(&inter) <= oracle.rank(&a) + oracle.rank(&b));
        }
    }
}

#[test]
fn oracle_tutte_evaluations_count_structures() {
    for (i, sys) in exhaustive_corpus(5).into_iter().enumerate() {
        if i % 3 != 0 {
            continue;
        }
        let oracle = sys.to_set_system();
        let t = oracle.tutte_subset_expansion().unwrap();
        let n = sys.ground_size();
        let r = oracle.full_rank();
        let bases = oracle.bases_bruteforce().unwrap();
        let mut independent = 0u64;
        let mut spanning = 0u64;
        for mask in 0u64..(1 << n) {
            let subset: Vec<Element> = (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
            let ra = oracle.rank(&subset);
            if ra == subset.len() as u32 {
                independent += 1;
            }
            if ra == r {
                spanning += 1;
            }
        }
        assert_eq!(t.eval_i64(1, 1), BigInt::from(bases.len()));
        assert_eq!(t.eval_i64(2, 1), BigInt::from(independent));
        assert_eq!(t.eval_i64(1, 2), BigInt::from(spanning));
        assert_eq!(t.eval_i64(2, 2), BigInt::from(1u64 << n));
    }
}

#[test]
fn cocircuit_presentations_are_exactly_minimal_ones() {
    for sys in exhaustive_corpus(5) {
        if !sys.is_antichain() {
            continue;
        }
        let cocircuit = verify_cocircuit_presentation(&sys).unwrap();
        let minimal = is_minimal_sigma_presentation(&sys).unwrap();
        assert_eq!(
            cocircuit, minimal,
            "cocircuit/minimality disagreement for {sys}"
        );
        if minimal {
            let m = sys.nullity();
            for i in 0..sys.intervals().len() {
                assert!(sys.interval_members(i).len() as u32 <= m + 1);
            }
        }
    }
}

#[test]
fn representation_independence_of_activities() {
    for sys in loopless_cores(5) {
        let d = Diagram::from_presentation(&sys, 1).unwrap();
        for basis in d.label_sets() {
            let results: BTreeSet<(u32, u32)> = (1..=d.k() as usize)
                .filter_map(|i| basis_activities_at(&d, &basis, i).ok())
                .collect();
            assert_eq!(results.len(), 1, "basis {basis:?} of {sys}");
        }
    }
}

#[test]
fn engines_agree_on_condition_c_multisets() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0;
    for sys in exhaustive_corpus(5) {
        if !rng.random_bool(0.1) {
            continue;
        }
        // duplicate an interval: still condition (C)
        let mut intervals = sys.intervals().to_vec();
        intervals.push(intervals[rng.random_range(0..intervals.len())]);
        let multi = SigmaIntervalSystem::new(sys.ground_size(), intervals).unwrap();
        assert!(multi.validate().satisfies_c);
        let brute = multi.to_set_system().tutte_subset_expansion().unwrap();
        assert_eq!(tutte(&multi).unwrap(), brute);
        assert_eq!(tutte_via_activities(&multi).unwrap(), brute);
        checked += 1;
    }
    assert!(checked > 20);
}

proptest! {
    #[test]
    fn interval_members_are_distinct_and_split_partitions(
        n in 1u32..=9,
        f in 1u32..=9,
        l in 1u32..=9,
        x_off in 0u32..9,
    ) {
        let f = (f - 1) % n + 1;
        let l = (l - 1) % n + 1;
        let order = CyclicOrder::new(n).unwrap();
        let iv = SigmaInterval::new(f, l);
        let members = order.interval_members(iv).unwrap();
        let distinct: BTreeSet<Element> = members.iter().copied().collect();
        prop_assert_eq!(distinct.len(), members.len());
        let x = members[(x_off as usize) % members.len()];
        let (first, last) = order.split_at(iv, x).unwrap();
        let mut rebuilt = Vec::new();
        if let Some(p) = first {
            rebuilt.extend(order.interval_members(p).unwrap());
        }
        rebuilt.push(x);
        if let Some(p) = last {
            rebuilt.extend(order.interval_members(p).unwrap());
        }
        prop_assert_eq!(rebuilt, members);
    }

    #[test]
    fn induced_order_restriction_composes(
        n in 2u32..=10,
        keep_a in proptest::collection::vec(any::<bool>(), 10),
        keep_b in proptest::collection::vec(any::<bool>(), 10),
    ) {
        let order = CyclicOrder::new(n).unwrap();
        let a: Vec<Element> = (1..=n).filter(|&e| keep_a[(e - 1) as usize]).collect();
        prop_assume!(!a.is_empty());
        let b: Vec<Element> = a.iter().copied()
            .filter(|&e| keep_b[(e - 1) as usize]).collect();
        prop_assume!(!b.is_empty());
        let via_a = order.induced(&a).unwrap().induced(&b).unwrap();
        let direct = order.induced(&b).unwrap();
        prop_assert_eq!(via_a, direct);
    }
}
