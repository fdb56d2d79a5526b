use super::verdict::{Certificate, FreenessVerdict, Witness};
use crate::error::{Error, Result};
use crate::lattice::{check_filtration, is_supersolvable, Filtration, Flag, Flat};
use crate::model::Multiarrangement;
use crate::rank2::low_rank_exponents;
use crate::restriction::iterated_restriction;

/// Freeness of `(A, m)` over a supersolvable filtration of `A` when every
/// new/old pair meets in a double point or satisfies
/// `m(H'') >= Σ_{H ∈ (A_d)_X \ (A_{d-1})_X} m(H) - 1`.
pub fn supersolvable_multi_free(a: &Multiarrangement, filtration: &Filtration) -> Result<FreenessVerdict> {
    check_filtration(a, filtration).map_err(|v| Error::Domain(format!("invalid filtration: {v:?}")))?;
    let levels = &filtration.levels;
    if levels.len() < 2 {
        return Err(Error::Domain("the supersolvable criterion needs rank at least 2".into()));
    }
    for d in 2..levels.len() {
        let (new_level, old_level) = (&levels[d], &levels[d - 1]);
        for &h1 in new_level.iter().filter(|h| !old_level.contains(h)) {
            for &h2 in old_level {
                let x = Flat::closure(a, &[h1, h2])?;
                if x.hyperplanes().len() == 2 {
                    continue;
                }
                let bound: u64 = x
                    .hyperplanes()
                    .iter()
                    .filter(|h| new_level.contains(h) && !old_level.contains(h))
                    .map(|&h| a.multiplicity(h))
                    .sum();
                if a.multiplicity(h2) + 1 < bound {
                    return Ok(FreenessVerdict::unknown(format!(
                        "multiplicity {} of {} is below {} - 1 at level {}",
                        a.multiplicity(h2),
                        a.describe_hyperplane(h2),
                        bound,
                        d + 1
                    )));
                }
            }
        }
    }
    let base = low_rank_exponents(&a.subarrangement(&levels[1]))?;
    let mass = |level: &[usize]| -> u64 { level.iter().map(|&h| a.multiplicity(h)).sum() };
    let mut exponents = vec![base.e1, base.e2];
    for d in 2..levels.len() {
        exponents.push(mass(&levels[d]) - mass(&levels[d - 1]));
    }
    exponents.extend(std::iter::repeat_n(0, a.nvars() - levels.len()));
    Ok(FreenessVerdict::free(
        exponents,
        Witness::Supersolvable {
            levels: levels.clone(),
        },
    ))
}

/// The localizations `A_{X_1} ⊂ ... ⊂ A_{X_r}` along a heavy flag. Every
/// step must be heavy; for a simple arrangement the first step is exempt.
pub fn filtration_from_flag(a: &Multiarrangement, flag: &Flag) -> Result<Filtration> {
    if !flag.is_maximal(a) {
        return Err(Error::Precondition("flag is not maximal".into()));
    }
    let steps = iterated_restriction(a, flag)?;
    let first = usize::from(a.is_simple());
    if let Some(i) = (first..steps.len()).find(|&i| !steps[i].is_heavy()) {
        return Err(Error::Precondition(format!(
            "flag is not heavy at step {i}: 2*{} < {}",
            steps[i].value, steps[i].total
        )));
    }
    Ok(Filtration {
        levels: flag.flats()[1..].iter().map(|x| x.hyperplanes().to_vec()).collect(),
    })
}

/// A multiarrangement with a heavy flag is not free when its underlying
/// arrangement is not supersolvable. Otherwise nothing is concluded.
pub fn check_cor_nonfree(a: &Multiarrangement, flag: &Flag) -> Result<FreenessVerdict> {
    let candidate = filtration_from_flag(a, flag)?;
    let simple = a.simple();
    let candidate_violation = check_filtration(&simple, &candidate).err();
    if candidate_violation.is_none() {
        return Ok(FreenessVerdict::unknown(
            "the filtration induced by the heavy flag is supersolvable",
        ));
    }
    Ok(match is_supersolvable(&simple, None) {
        Some(_) => FreenessVerdict::unknown("the underlying arrangement is supersolvable"),
        None => FreenessVerdict::NonFree(Certificate::NotSupersolvable {
            flag: candidate.levels,
            candidate_violation,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::b2;

    #[test]
    fn boolean_any_multiplicity() {
        let a = Multiarrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[4, 2, 7]).unwrap();
        let f = Filtration {
            levels: vec![vec![0], vec![0, 1], vec![0, 1, 2]],
        };
        assert_eq!(supersolvable_multi_free(&a, &f).unwrap().exponents(), Some(&[2, 4, 7][..]));
    }

    #[test]
    fn supersolvable_with_heavy_top() {
        // x, y, x - y, z
        let a = Multiarrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[0, 0, 1]], &[1, 1, 1, 5]).unwrap();
        let f = Filtration {
            levels: vec![vec![0], vec![0, 1, 2], vec![0, 1, 2, 3]],
        };
        let v = supersolvable_multi_free(&a, &f).unwrap();
        assert_eq!(v.exponents(), Some(&[1, 2, 5][..]));
        v.check_consistency(&a, b2(&a).unwrap().b2).unwrap();
    }

    #[test]
    fn hypothesis_failure_is_unknown() {
        let a = Multiarrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]],
            &[3; 6],
        )
        .unwrap();
        let f = is_supersolvable(&a, None).unwrap();
        assert!(supersolvable_multi_free(&a, &f).unwrap().is_unknown());
        let bad = Filtration { levels: vec![vec![0]] };
        assert!(matches!(supersolvable_multi_free(&a, &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn boolean_cor_delegates() {
        let b = Multiarrangement::simple_from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let flag = Flag::from_hyperplanes(&b, &[0, 1, 2]).unwrap();
        assert!(check_cor_nonfree(&b, &flag).unwrap().is_unknown());
        let light = b.with_mult(vec![1, 2, 2]).unwrap();
        assert!(matches!(check_cor_nonfree(&light, &flag), Err(Error::Precondition(_))));
        let heavy = b.with_mult(vec![3, 2, 1]).unwrap();
        let f = filtration_from_flag(&heavy, &flag).unwrap();
        assert!(check_filtration(&b, &f).is_ok());
        assert!(check_cor_nonfree(&heavy, &flag).unwrap().is_unknown());
    }
}
