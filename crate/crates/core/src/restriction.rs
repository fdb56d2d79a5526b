//! Heaviness and the restriction of a multiarrangement onto one of its
//! hyperplanes, with multi-Ziegler or Euler multiplicities.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kernel::{Matrix, Rational};
use crate::lattice::{build_flats, Flag, Flat};
use crate::model::{LinearForm, Multiarrangement};
use crate::rank2::euler_multiplicity;

/// `2 m(H0) >= |m|`.
pub fn is_heavy(a: &Multiarrangement, h0: usize) -> Result<bool> {
    a.check_index(h0)?;
    Ok(2 * a.multiplicity(h0) >= a.total())
}

/// First codim-2 flat `X ⊆ H0` with `|A_X| >= 3` and `2 m(H0) < |m_X|`.
pub fn locally_heavy_violation(a: &Multiarrangement, h0: usize) -> Result<Option<Flat>> {
    a.check_index(h0)?;
    if a.nvars() < 2 {
        return Ok(None);
    }
    let m0 = a.multiplicity(h0);
    let lattice = build_flats(a, 2)?;
    Ok(lattice
        .codim(2)
        .iter()
        .find(|x| x.contains_hyperplane(h0) && x.hyperplanes().len() >= 3 && 2 * m0 < x.mass(a))
        .cloned())
}

pub fn is_locally_heavy(a: &Multiarrangement, h0: usize) -> Result<bool> {
    let local = locally_heavy_violation(a, h0)?.is_none();
    if is_heavy(a, h0)? && !local {
        return Err(Error::InvariantViolation(format!(
            "hyperplane {h0} is heavy but not locally heavy"
        )));
    }
    Ok(local)
}

/// A restriction `(A^{H0}, m')` in coordinates on `H0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionResult {
    /// The restricted multiarrangement in `l - 1` variables.
    pub arrangement: Multiarrangement,
    /// `l x (l-1)` matrix `E` with `x = E x'` on `H0`.
    pub embedding: Matrix,
    /// Source hyperplanes (indices into the original arrangement) whose
    /// traces give each restricted hyperplane.
    pub fibers: Vec<Vec<usize>>,
    pub h0: usize,
}

impl RestrictionResult {
    /// Restricted multiplicities as a sorted multiset, largest first.
    pub fn sorted_mult(&self) -> Vec<u64> {
        let mut m = self.arrangement.mult().to_vec();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }
}

/// Traces of the other hyperplanes on `H0`, merged by normalized form.
fn traces(a: &Multiarrangement, h0: usize) -> Result<(Vec<String>, Vec<LinearForm>, Vec<Vec<usize>>, Matrix)> {
    a.check_index(h0)?;
    let n = a.nvars();
    if n < 2 {
        return Err(Error::Domain("cannot restrict a 1-variable arrangement".into()));
    }
    let c = a.hyperplane(h0).coeffs();
    let p = c.iter().position(|v| !v.is_zero()).expect("nonzero form");
    let keep: Vec<usize> = (0..n).filter(|&j| j != p).collect();
    let ratios: Vec<Rational> = keep.iter().map(|&j| &c[j] / &c[p]).collect();
    let mut embedding = Matrix::zeros(n, n - 1);
    for (k, &j) in keep.iter().enumerate() {
        embedding[(j, k)] = Rational::from_integer(1.into());
        embedding[(p, k)] = -ratios[k].clone();
    }
    let mut forms: Vec<LinearForm> = Vec::new();
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<LinearForm, usize> = HashMap::new();
    for i in (0..a.len()).filter(|&i| i != h0) {
        let alpha = a.hyperplane(i).coeffs();
        let trace: Vec<Rational> = keep
            .iter()
            .zip(&ratios)
            .map(|(&j, r)| &alpha[j] - &alpha[p] * r)
            .collect();
        let form = LinearForm::new(trace)?;
        match slot.get(&form) {
            Some(&s) => fibers[s].push(i),
            None => {
                slot.insert(form.clone(), forms.len());
                forms.push(form);
                fibers.push(vec![i]);
            }
        }
    }
    let vars = keep.iter().map(|&j| a.vars()[j].clone()).collect();
    Ok((vars, forms, fibers, embedding))
}

/// `m^{H0}(X) = Σ_{H ∈ A_X \ {H0}} m(H)`.
pub fn multi_ziegler_restriction(a: &Multiarrangement, h0: usize) -> Result<RestrictionResult> {
    let (vars, forms, fibers, embedding) = traces(a, h0)?;
    let mult = fibers
        .iter()
        .map(|f| f.iter().map(|&i| a.multiplicity(i)).sum())
        .collect();
    Ok(RestrictionResult {
        arrangement: Multiarrangement::from_parts(vars, forms, mult),
        embedding,
        fibers,
        h0,
    })
}

/// The multi-Ziegler restriction onto a locally heavy hyperplane.
pub fn euler_ziegler_restriction(a: &Multiarrangement, h0: usize) -> Result<RestrictionResult> {
    if let Some(x) = locally_heavy_violation(a, h0)? {
        let names: Vec<String> = x.hyperplanes().iter().map(|&i| a.describe_hyperplane(i)).collect();
        return Err(Error::Precondition(format!(
            "{} is not locally heavy: 2*{} < {} at the flat {{{}}}",
            a.describe_hyperplane(h0),
            a.multiplicity(h0),
            x.mass(a),
            names.join(", ")
        )));
    }
    multi_ziegler_restriction(a, h0)
}

/// Restriction with the Euler multiplicity of each codim-2 localization.
pub fn euler_restriction(a: &Multiarrangement, h0: usize) -> Result<RestrictionResult> {
    let (vars, forms, fibers, embedding) = traces(a, h0)?;
    let mut mult = Vec::with_capacity(fibers.len());
    for fiber in &fibers {
        let x = Flat::closure(a, &[h0, fiber[0]])?;
        let local = a.localization(&x)?;
        let pos = x.hyperplanes().binary_search(&h0).expect("H0 contains the flat");
        mult.push(euler_multiplicity(&local, pos)?);
    }
    Ok(RestrictionResult {
        arrangement: Multiarrangement::from_parts(vars, forms, mult),
        embedding,
        fibers,
        h0,
    })
}

/// One step `(A^{X_i}, m^{X_i})` of an iterated restriction along a flag.
#[derive(Clone, Debug)]
pub struct IteratedStep {
    pub arrangement: Multiarrangement,
    /// `A_Y` in the original arrangement for each hyperplane `Y` here.
    pub sources: Vec<Vec<usize>>,
    /// Index of `X_{i+1}` in `arrangement`.
    pub hyperplane: usize,
    /// `m^{X_i}(X_{i+1})`.
    pub value: u64,
    /// `|m^{X_i}|`.
    pub total: u64,
    /// Restriction onto `X_{i+1}`; absent once a single variable is left.
    pub restriction: Option<RestrictionResult>,
}

impl IteratedStep {
    pub fn is_heavy(&self) -> bool {
        2 * self.value >= self.total
    }
}

/// Restricts repeatedly along a flag, one step per flag element after `V`.
pub fn iterated_restriction(a: &Multiarrangement, flag: &Flag) -> Result<Vec<IteratedStep>> {
    let mut current = a.clone();
    let mut sources: Vec<Vec<usize>> = (0..a.len()).map(|i| vec![i]).collect();
    let mut steps = Vec::with_capacity(flag.len());
    for (i, target) in flag.flats().iter().skip(1).enumerate() {
        let hyperplane = sources
            .iter()
            .position(|s| s.as_slice() == target.hyperplanes())
            .ok_or_else(|| {
                Error::Domain(format!(
                    "flag element {} is not a hyperplane of the restriction at step {i}",
                    i + 1
                ))
            })?;
        let restriction = if current.nvars() >= 2 {
            Some(multi_ziegler_restriction(&current, hyperplane)?)
        } else {
            None
        };
        let next_sources: Vec<Vec<usize>> = match &restriction {
            Some(r) => r
                .fibers
                .iter()
                .map(|fiber| {
                    let mut s = sources[hyperplane].clone();
                    for &j in fiber {
                        s.extend_from_slice(&sources[j]);
                    }
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect(),
            None => Vec::new(),
        };
        let next = restriction.as_ref().map(|r| r.arrangement.clone());
        steps.push(IteratedStep {
            value: current.multiplicity(hyperplane),
            total: current.total(),
            arrangement: current,
            sources,
            hyperplane,
            restriction,
        });
        match next {
            Some(n) => current = n,
            None => break,
        }
        sources = next_sources;
    }
    if steps.len() != flag.len() {
        return Err(Error::Domain("flag is longer than the restriction sequence".into()));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::flag_enumerate;

    fn example1() -> Multiarrangement {
        Multiarrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[1, 0, -1]],
            &[5, 2, 16, 3, 2, 4],
        )
        .unwrap()
    }

    fn example2() -> Multiarrangement {
        example1().with_mult(vec![2, 2, 14, 3, 3, 4]).unwrap()
    }

    fn a3(m: u64) -> Multiarrangement {
        Multiarrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]],
            &[m; 6],
        )
        .unwrap()
    }

    #[test]
    fn heaviness() {
        assert!(is_heavy(&example1(), 2).unwrap());
        assert!(is_heavy(&example2(), 2).unwrap());
        let a = a3(3);
        for h in 0..6 {
            assert!(!is_heavy(&a, h).unwrap());
            assert!(!is_locally_heavy(&a, h).unwrap());
        }
        let shifted = example1().with_mult(vec![5, 2, 9, 3, 2, 4]).unwrap();
        assert!(!is_heavy(&shifted, 2).unwrap());
        assert!(is_locally_heavy(&shifted, 2).unwrap());
    }

    #[test]
    fn ziegler_restrictions() {
        let r = multi_ziegler_restriction(&example1(), 2).unwrap();
        assert_eq!(r.sorted_mult(), vec![9, 4, 3]);
        assert_eq!(r.arrangement.total(), 16);
        assert_eq!(r.arrangement.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(r.fibers, vec![vec![0, 5], vec![1, 4], vec![3]]);
        let r2 = multi_ziegler_restriction(&example2(), 2).unwrap();
        assert_eq!(r2.sorted_mult(), vec![6, 5, 3]);
        let simple = a3(1);
        let r3 = multi_ziegler_restriction(&simple, 0).unwrap();
        assert_eq!(r3.sorted_mult(), vec![2, 2, 1]);
    }

    #[test]
    fn euler_ziegler_precondition() {
        assert_eq!(euler_ziegler_restriction(&example1(), 2).unwrap().sorted_mult(), vec![9, 4, 3]);
        assert!(matches!(euler_ziegler_restriction(&a3(3), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn euler_restrictions() {
        let r = euler_restriction(&a3(3), 0).unwrap();
        assert_eq!(r.sorted_mult(), vec![4, 4, 3]);
        let e1 = euler_restriction(&example1(), 2).unwrap();
        assert_eq!(e1, multi_ziegler_restriction(&example1(), 2).unwrap());
        assert_eq!(euler_restriction(&a3(1), 0).unwrap().sorted_mult(), vec![1, 1, 1]);
    }

    #[test]
    fn embedding_lands_in_h0() {
        let a = example1();
        let r = multi_ziegler_restriction(&a, 4).unwrap();
        let h0 = a.hyperplane(4).coeffs();
        for k in 0..r.embedding.cols() {
            let col: Vec<Rational> = (0..3).map(|i| r.embedding[(i, k)].clone()).collect();
            let v: Rational = h0.iter().zip(&col).map(|(x, y)| x * y).sum();
            assert!(v.is_zero());
        }
        assert_eq!(r.arrangement.total(), a.total() - a.multiplicity(4));
    }

    #[test]
    fn iterated_boolean() {
        let b = Multiarrangement::simple_from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let flag = Flag::from_hyperplanes(&b, &[0, 1, 2]).unwrap();
        let steps = iterated_restriction(&b, &flag).unwrap();
        let values: Vec<u64> = steps.iter().map(|s| s.value).collect();
        assert_eq!(values, vec![1, 1, 1]);
        assert!(steps.last().unwrap().restriction.is_none());
    }

    #[test]
    fn iterated_values_match_localization_masses() {
        let a = example1();
        for flag in flag_enumerate(&a).unwrap() {
            let steps = iterated_restriction(&a, &flag).unwrap();
            for (i, s) in steps.iter().enumerate() {
                let xi = &flag.flats()[i];
                let xn = &flag.flats()[i + 1];
                assert_eq!(s.value, xn.mass(&a) - xi.mass(&a));
                assert_eq!(s.total, a.total() - xi.mass(&a));
                let tail: u64 = steps[i..].iter().map(|t| t.value).sum();
                assert_eq!(s.total, tail);
            }
        }
    }
}
