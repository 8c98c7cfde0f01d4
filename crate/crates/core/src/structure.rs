//! Structural consequences of interval presentations: spanning circuits,
//! cocircuit presentations, and minimality of presentations.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::presentation::SigmaIntervalSystem;
use crate::{Element, SigmaInterval};

/// Guard for the exhaustive minimality search.
pub const MINIMALITY_GUARD: u32 = 12;

/// The set of first elements together with any element outside it forms a
/// spanning circuit, provided the matroid is not a lattice path matroid.
/// The returned set is rank-checked: it is dependent, spanning, and every
/// proper subset is independent.
pub fn spanning_circuit(sys: &SigmaIntervalSystem, x: Element) -> Result<Vec<Element>> {
    if !sys.is_antichain() {
        return Err(Error::NotAntichain);
    }
    let report = sys.validate();
    if report.is_lattice_path || sys.rank() < 2 {
        return Err(Error::Domain(
            "spanning circuits of this form require a non-lattice-path presentation".into(),
        ));
    }
    if !sys.order().contains(x) {
        return Err(Error::InvalidElement(x));
    }
    let mut circuit: Vec<Element> = sys.intervals().iter().map(|iv| iv.first).collect();
    circuit.sort_unstable();
    if circuit.binary_search(&x).is_ok() {
        return Err(Error::Domain(format!(
            "element {x} is a first element; pick one outside the first-element set"
        )));
    }
    circuit.push(x);
    circuit.sort_unstable();

    let r = sys.rank();
    let oracle = sys.to_set_system();
    let spanning_and_dependent = oracle.rank(&circuit) == r;
    let proper_parts_independent = (0..circuit.len()).all(|skip| {
        let part: Vec<Element> = circuit
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &e)| e)
            .collect();
        oracle.rank(&part) == part.len() as u32
    });
    if !spanning_and_dependent || !proper_parts_independent {
        return Err(Error::Domain(format!(
            "{circuit:?} failed the spanning-circuit rank checks"
        )));
    }
    Ok(circuit)
}

/// True iff every interval is a cocircuit: its complement is a flat of rank
/// r-1.  A presentation by cocircuits is a minimal presentation.
pub fn verify_cocircuit_presentation(sys: &SigmaIntervalSystem) -> Result<bool> {
    if !sys.is_antichain() {
        return Err(Error::NotAntichain);
    }
    let oracle = sys.to_set_system();
    let r = sys.rank();
    for i in 0..sys.intervals().len() {
        let members = sys.interval_members(i);
        let complement: Vec<Element> = (1..=sys.ground_size())
            .filter(|e| !members.contains(e))
            .collect();
        if oracle.rank(&complement) != r - 1 {
            return Ok(false);
        }
        // complement must be a flat: every interval element raises its rank
        for &e in &members {
            let mut widened = complement.clone();
            widened.push(e);
            widened.sort_unstable();
            if oracle.rank(&widened) != r {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff no properly contained interval system presents the same
/// matroid.  Exhaustive: every choice of subintervals is tried, cheapest
/// trims first, comparing basis sets through the rank oracle.
pub fn is_minimal_sigma_presentation(sys: &SigmaIntervalSystem) -> Result<bool> {
    if !sys.is_antichain() {
        return Err(Error::NotAntichain);
    }
    let n = sys.ground_size();
    if n > MINIMALITY_GUARD {
        return Err(Error::ResourceGuard {
            n,
            guard: MINIMALITY_GUARD,
        });
    }
    let oracle = sys.to_set_system();
    let bases: Vec<Vec<Element>> = oracle.bases_bruteforce()?.into_iter().collect();
    let order = sys.order();

    // all subintervals of each interval, as (trimmed amount, interval)
    let mut choices: Vec<Vec<(u32, SigmaInterval)>> = Vec::new();
    for &iv in sys.intervals() {
        let len = order.interval_len(iv)?;
        let mut subs = Vec::new();
        for head in 0..len {
            for tail in 0..len - head {
                let mut first = iv.first;
                for _ in 0..head {
                    first = order.successor(first)?;
                }
                let mut last = iv.last;
                for _ in 0..tail {
                    last = order.predecessor(last)?;
                }
                subs.push((head + tail, SigmaInterval::new(first, last)));
            }
        }
        choices.push(subs);
    }

    for candidate in choices.iter().multi_cartesian_product() {
        let total_trim: u32 = candidate.iter().map(|&&(t, _)| t).sum();
        if total_trim == 0 {
            continue;
        }
        let trial = SigmaIntervalSystem::new(n, candidate.iter().map(|&&(_, iv)| iv).collect())?;
        let trial_oracle = trial.to_set_system();
        // a contained presentation only loses transversals, so equality
        // holds iff every original basis survives
        if bases.iter().all(|b| trial_oracle.rank(b) == b.len() as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}
