use super::betti::b2;
use super::verdict::{pairwise_sum, Certificate, FlagData, FreenessVerdict, Witness};
use crate::error::{Error, Result};
use crate::lattice::{Flag, Flat};
use crate::model::Multiarrangement;
use crate::restriction::{iterated_restriction, multi_ziegler_restriction};

/// `m^{X_i}(X_{i+1})` for every step of the flag.
pub fn flag_values(a: &Multiarrangement, flag: &Flag) -> Result<Vec<u64>> {
    Ok(iterated_restriction(a, flag)?.iter().map(|s| s.value).collect())
}

/// `Σ_{i<j} m^{X_i}(X_{i+1}) m^{X_j}(X_{j+1})`.
pub fn flag_rhs(a: &Multiarrangement, flag: &Flag) -> Result<u64> {
    Ok(pairwise_sum(&flag_values(a, flag)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagInequality {
    pub b2: u64,
    pub rhs: u64,
    pub equality: bool,
}

/// `b2(A) >= Σ_{i<j} ...` for any maximal flag of a simple arrangement.
pub fn flag_inequality(a: &Multiarrangement, flag: &Flag) -> Result<FlagInequality> {
    require_simple(a)?;
    require_maximal(a, flag)?;
    let b2 = b2(a)?.b2;
    let rhs = flag_rhs(a, flag)?;
    if b2 < rhs {
        return Err(Error::InvariantViolation(format!("b2 = {b2} is below the flag sum {rhs}")));
    }
    Ok(FlagInequality {
        b2,
        rhs,
        equality: b2 == rhs,
    })
}

fn require_simple(a: &Multiarrangement) -> Result<()> {
    if a.is_simple() {
        Ok(())
    } else {
        Err(Error::Domain("the flag criterion applies to simple arrangements".into()))
    }
}

fn require_maximal(a: &Multiarrangement, flag: &Flag) -> Result<()> {
    if flag.is_maximal(a) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "flag has {} steps but the arrangement has rank {}",
            flag.len(),
            a.essential_rank()
        )))
    }
}

/// Depth-first search for a maximal flag whose step `i` is heavy for every
/// `i >= heavy_from`. At each level candidates are tried by descending
/// restricted multiplicity, ties broken by normalized form.
pub fn find_heavy_flag(a: &Multiarrangement, heavy_from: usize) -> Result<Option<Flag>> {
    let (ess, _) = a.essentialize();
    let sources: Vec<Vec<usize>> = (0..ess.len()).map(|i| vec![i]).collect();
    let mut chosen = Vec::new();
    if !dfs(&ess, &sources, 0, heavy_from, &mut chosen)? {
        return Ok(None);
    }
    let mut flats = vec![Flat::whole_space(a)];
    for set in &chosen {
        flats.push(Flat::closure(a, set)?);
    }
    Ok(Some(Flag::new(flats)?))
}

fn dfs(
    current: &Multiarrangement,
    sources: &[Vec<usize>],
    step: usize,
    heavy_from: usize,
    chosen: &mut Vec<Vec<usize>>,
) -> Result<bool> {
    if current.is_empty() {
        return Ok(current.nvars() == 0);
    }
    let total = current.total();
    let mut order: Vec<usize> = (0..current.len())
        .filter(|&h| step < heavy_from || 2 * current.multiplicity(h) >= total)
        .collect();
    order.sort_by(|&i, &j| {
        current
            .multiplicity(j)
            .cmp(&current.multiplicity(i))
            .then_with(|| current.hyperplane(i).cmp(current.hyperplane(j)))
    });
    for h in order {
        chosen.push(sources[h].clone());
        if current.nvars() == 1 {
            return Ok(true);
        }
        let r = multi_ziegler_restriction(current, h)?;
        let next_sources: Vec<Vec<usize>> = r
            .fibers
            .iter()
            .map(|fiber| {
                let mut s = sources[h].clone();
                for &j in fiber {
                    s.extend_from_slice(&sources[j]);
                }
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        if dfs(&r.arrangement, &next_sources, step + 1, heavy_from, chosen)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// The heavy-flag criterion for simple arrangements: with a flag whose
/// steps `i >= 1` are heavy, `A` is free iff `b2` equals the pairwise sum
/// of the flag values. Without a supplied flag one is searched for.
pub fn decide_freeness_flag(a: &Multiarrangement, flag: Option<&Flag>) -> Result<FreenessVerdict> {
    require_simple(a)?;
    let flag = match flag {
        Some(f) => {
            require_maximal(a, f)?;
            f.clone()
        }
        None => match find_heavy_flag(a, 1)? {
            Some(f) => f,
            None => return Ok(FreenessVerdict::unknown("no heavy flag")),
        },
    };
    let steps = iterated_restriction(a, &flag)?;
    if let Some(i) = steps.iter().skip(1).position(|s| !s.is_heavy()) {
        return Ok(FreenessVerdict::unknown(format!("flag is not heavy at step {}", i + 1)));
    }
    let values: Vec<u64> = steps.iter().map(|s| s.value).collect();
    let b2 = b2(a)?.b2;
    let data = FlagData {
        flag: flag.flats()[1..].iter().map(|x| x.hyperplanes().to_vec()).collect(),
        rhs: pairwise_sum(&values),
        b2,
        literal_step0_heavy: steps[0].is_heavy(),
        values: values.clone(),
    };
    let zeros = a.nvars() - values.len();
    Ok(if data.b2 == data.rhs {
        let mut exponents = values;
        exponents.extend(std::iter::repeat_n(0, zeros));
        FreenessVerdict::free(exponents, Witness::HeavyFlag(data))
    } else {
        FreenessVerdict::NonFree(Certificate::HeavyFlag(data))
    })
}
