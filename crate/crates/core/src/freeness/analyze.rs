use super::betti::{b2_with, BettiReport};
use super::flag::{decide_freeness_flag, find_heavy_flag};
use super::heavy::decide_freeness_heavy;
use super::supersolvable::{check_cor_nonfree, supersolvable_multi_free};
use super::verdict::{FreenessVerdict, Witness};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lattice::is_supersolvable;
use crate::model::Multiarrangement;
use crate::restriction::{is_heavy, is_locally_heavy};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decider {
    /// Restriction onto a heavy or locally heavy hyperplane.
    Heavy,
    /// `b2` against the pairwise sum along a heavy flag (simple only).
    Flag,
    /// Heavy flag plus non-supersolvability.
    Corollary,
    /// A supersolvable filtration of the underlying arrangement.
    Supersolvable,
}

impl Decider {
    pub fn name(&self) -> &'static str {
        match self {
            Decider::Heavy => "heavy",
            Decider::Flag => "flag",
            Decider::Corollary => "corollary",
            Decider::Supersolvable => "supersolvable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub rank: usize,
    pub heavy: Vec<usize>,
    pub locally_heavy: Vec<usize>,
    pub betti: BettiReport,
    /// Every decider tried, in order, with its verdict.
    pub attempts: Vec<(Decider, FreenessVerdict)>,
    pub verdict: FreenessVerdict,
}

pub fn analyze(a: &Multiarrangement) -> Result<Analysis> {
    analyze_with(a, Execution::default())
}

/// Runs the deciders in turn until one of them is conclusive. The
/// corollary check runs whenever a heavy flag exists.
pub fn analyze_with(a: &Multiarrangement, exec: Execution) -> Result<Analysis> {
    let betti = b2_with(a, exec)?;
    let mut heavy = Vec::new();
    let mut locally_heavy = Vec::new();
    for h in 0..a.len() {
        if is_heavy(a, h)? {
            heavy.push(h);
        }
        if is_locally_heavy(a, h)? {
            locally_heavy.push(h);
        }
    }
    let mut attempts = Vec::new();
    let done = |attempts: &Vec<(Decider, FreenessVerdict)>| {
        attempts.iter().any(|(_, v): &(Decider, FreenessVerdict)| !v.is_unknown())
    };

    attempts.push((Decider::Heavy, decide_freeness_heavy(a)?));
    if !done(&attempts) && a.is_simple() {
        attempts.push((Decider::Flag, decide_freeness_flag(a, None)?));
    }
    // runs even after a conclusive verdict: its certificate is independent
    let first = usize::from(a.is_simple());
    if let Some(flag) = find_heavy_flag(a, first)? {
        attempts.push((Decider::Corollary, check_cor_nonfree(a, &flag)?));
    }
    if !done(&attempts) {
        let v = match is_supersolvable(a, None) {
            None => FreenessVerdict::unknown("the underlying arrangement is not supersolvable"),
            Some(f) if a.is_simple() => {
                let mut exponents = vec![1];
                for w in f.levels.windows(2) {
                    exponents.push((w[1].len() - w[0].len()) as u64);
                }
                exponents.extend(std::iter::repeat_n(0, a.nvars() - f.levels.len()));
                FreenessVerdict::free(exponents, Witness::Supersolvable { levels: f.levels })
            }
            Some(f) => supersolvable_multi_free(a, &f)?,
        };
        attempts.push((Decider::Supersolvable, v));
    }
    let verdict = match attempts.iter().find(|(_, v)| !v.is_unknown()) {
        Some((_, v)) => v.clone(),
        None => attempts[0].1.clone(),
    };
    if attempts.iter().any(|(_, v)| v.is_free() != verdict.is_free() && !v.is_unknown()) {
        return Err(Error::InvariantViolation(format!("deciders disagree on {}", crate::model::format_defining_polynomial(a))));
    }
    verdict.check_consistency(a, betti.b2)?;
    Ok(Analysis {
        rank: a.essential_rank(),
        heavy,
        locally_heavy,
        betti,
        attempts,
        verdict,
    })
}
