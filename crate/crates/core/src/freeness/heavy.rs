use super::betti::{b2, reduced_from};
use super::verdict::{Certificate, FreenessVerdict, Witness};
use crate::error::Result;
use crate::model::Multiarrangement;
use crate::rank2::low_rank_exponents;
use crate::restriction::{is_heavy, is_locally_heavy, multi_ziegler_restriction};

/// Decides freeness through restrictions onto heavy or locally heavy
/// hyperplanes, recursing on the restriction.
///
/// A heavy hyperplane gives an equivalence, so the answer is `Free` or
/// `NonFree` whenever the restriction is decided. A locally heavy one only
/// gives the sufficient direction.
pub fn decide_freeness_heavy(a: &Multiarrangement) -> Result<FreenessVerdict> {
    let (ess, _) = a.essentialize();
    let zeros = a.nvars() - ess.nvars();
    Ok(match decide_essential(&ess)? {
        FreenessVerdict::Free {
            mut exponents,
            witness,
        } => {
            exponents.extend(std::iter::repeat_n(0, zeros));
            FreenessVerdict::free(exponents, witness)
        }
        other => other,
    })
}

fn by_multiplicity(a: &Multiarrangement, keep: impl Fn(usize) -> Result<bool>) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for h in 0..a.len() {
        if keep(h)? {
            out.push(h);
        }
    }
    out.sort_by(|&i, &j| {
        a.multiplicity(j)
            .cmp(&a.multiplicity(i))
            .then_with(|| a.hyperplane(i).cmp(a.hyperplane(j)))
    });
    Ok(out)
}

fn decide_essential(a: &Multiarrangement) -> Result<FreenessVerdict> {
    if a.nvars() <= 2 {
        let e = low_rank_exponents(a)?;
        let mut exponents = vec![e.e1, e.e2];
        exponents.truncate(a.nvars());
        if a.nvars() == 1 {
            exponents = vec![a.total()];
        }
        return Ok(FreenessVerdict::free(exponents, Witness::LowRank));
    }
    let heavy = by_multiplicity(a, |h| is_heavy(a, h))?;
    if let Some(&h0) = heavy.first() {
        return restrict_and_compare(a, h0, true);
    }
    let local = by_multiplicity(a, |h| is_locally_heavy(a, h))?;
    let mut last = None;
    for &h0 in &local {
        let v = restrict_and_compare(a, h0, false)?;
        if v.is_free() {
            return Ok(v);
        }
        last = Some(v);
    }
    Ok(match last {
        Some(FreenessVerdict::Unknown { reason }) => FreenessVerdict::unknown(reason),
        _ => FreenessVerdict::unknown("no heavy or locally heavy hyperplane"),
    })
}

fn restrict_and_compare(a: &Multiarrangement, h0: usize, heavy: bool) -> Result<FreenessVerdict> {
    let label = a.describe_hyperplane(h0);
    let restriction = multi_ziegler_restriction(a, h0)?;
    let inner = decide_essential(&restriction.arrangement)?;
    let reduced = reduced_from(a, h0, b2(a)?.b2)?;
    let restricted = b2(&restriction.arrangement)?.b2;
    let kind = if heavy { "heavy" } else { "locally heavy" };
    Ok(match inner {
        FreenessVerdict::Free { mut exponents, .. } if reduced == restricted => {
            exponents.push(a.multiplicity(h0));
            FreenessVerdict::free(
                exponents,
                Witness::Restriction {
                    h0,
                    label,
                    heavy,
                    reduced_b2: reduced,
                    restriction_b2: restricted,
                },
            )
        }
        FreenessVerdict::Free { .. } if heavy => FreenessVerdict::NonFree(Certificate::HeavyB2 {
            h0,
            label,
            reduced_b2: reduced,
            restriction_b2: restricted,
        }),
        FreenessVerdict::Free { .. } => FreenessVerdict::unknown(format!(
            "locally heavy {label}: restriction is free but b2^H = {reduced} differs from {restricted}"
        )),
        FreenessVerdict::NonFree(c) if heavy => FreenessVerdict::NonFree(Certificate::RestrictionNotFree {
            h0,
            label,
            inner: Box::new(c),
        }),
        FreenessVerdict::NonFree(_) => FreenessVerdict::unknown(format!(
            "restriction onto locally heavy {label} is not free"
        )),
        FreenessVerdict::Unknown { reason } => {
            FreenessVerdict::unknown(format!("restriction onto {kind} {label} undecided: {reason}"))
        }
    })
}
