use crate::error::{Error, Result};
use crate::kernel::{poly_det, Poly, Rational};
use crate::model::Multiarrangement;
use crate::rank2::Derivation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaitoOutcome {
    /// `det M = c Q(A, m)` with `c` a nonzero constant.
    IsBasis(Rational),
    /// Every derivation lies in `D(A, m)` but `det M = f Q` with `f` not a
    /// nonzero constant.
    InModuleNotBasis(Poly),
    /// `α_H^{m(H)}` does not divide `θ(α_H)`.
    NotInModule { hyperplane: usize, derivation: usize },
}

fn check_arity(a: &Multiarrangement, d: &Derivation) -> Result<()> {
    let n = a.nvars();
    if d.nvars() != n || d.coords.iter().any(|c| c.nvars() != n) {
        return Err(Error::Shape(format!(
            "derivation has {} coordinates, expected {n}",
            d.nvars()
        )));
    }
    Ok(())
}

/// Index of the first hyperplane with `α^m ∤ θ(α)`.
fn first_violation(a: &Multiarrangement, d: &Derivation) -> Result<Option<usize>> {
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let image = d.apply(h);
        let power = h.to_poly().pow(a.multiplicity(i) as u32);
        if image.div_exact(&power)?.is_none() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Saito's criterion for `l` derivations.
pub fn saito_verify(a: &Multiarrangement, ds: &[Derivation]) -> Result<SaitoOutcome> {
    if ds.len() != a.nvars() {
        return Err(Error::Shape(format!(
            "{} derivations supplied for {} variables",
            ds.len(),
            a.nvars()
        )));
    }
    for d in ds {
        check_arity(a, d)?;
    }
    for (j, d) in ds.iter().enumerate() {
        if let Some(i) = first_violation(a, d)? {
            return Ok(SaitoOutcome::NotInModule {
                hyperplane: i,
                derivation: j,
            });
        }
    }
    let rows: Vec<Vec<Poly>> = ds.iter().map(|d| d.coords.clone()).collect();
    let det = poly_det(&rows)?;
    let f = det.div_exact(&a.defining_polynomial())?.ok_or_else(|| {
        Error::InvariantViolation("determinant of logarithmic derivations not divisible by Q".into())
    })?;
    Ok(match f.as_constant() {
        Some(c) if !f.is_zero() => SaitoOutcome::IsBasis(c),
        _ => SaitoOutcome::InModuleNotBasis(f),
    })
}

/// Whether `θ ∈ D(A, m)` is homogeneous of degree `m(H0)` with
/// `θ(α_{H0}) = α_{H0}^{m(H0)}`.
pub fn is_good_summand(a: &Multiarrangement, h0: usize, theta: &Derivation) -> Result<bool> {
    a.check_index(h0)?;
    check_arity(a, theta)?;
    let m0 = a.multiplicity(h0);
    if theta.is_zero() || u64::from(theta.degree) != m0 {
        return Ok(false);
    }
    let alpha = a.hyperplane(h0);
    if theta.apply(alpha) != alpha.to_poly().pow(m0 as u32) {
        return Ok(false);
    }
    Ok(first_violation(a, theta)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn xy(m: [u64; 2]) -> Multiarrangement {
        Multiarrangement::from_ints(2, &[&[1, 0], &[0, 1]], &m).unwrap()
    }

    fn d(coords: Vec<Poly>) -> Derivation {
        Derivation::new(coords).unwrap()
    }

    #[test]
    fn saito_examples() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let z = Poly::zero(2);
        let a = xy([2, 1]);
        let basis = [d(vec![x.pow(2), z.clone()]), d(vec![z.clone(), y.clone()])];
        assert_eq!(saito_verify(&a, &basis).unwrap(), SaitoOutcome::IsBasis(rat(1)));

        let braid = Multiarrangement::simple_from_ints(2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap();
        let pair = [Derivation::euler(2), d(vec![x.pow(2), y.pow(2)])];
        assert!(matches!(saito_verify(&braid, &pair).unwrap(), SaitoOutcome::IsBasis(_)));

        let e = Derivation::euler(2);
        let proportional = [e.clone(), e.scale_by(&x)];
        assert_eq!(
            saito_verify(&braid, &proportional).unwrap(),
            SaitoOutcome::InModuleNotBasis(Poly::zero(2))
        );

        let dx = d(vec![Poly::one(2), z.clone()]);
        assert_eq!(
            saito_verify(&a, &[dx, e]).unwrap(),
            SaitoOutcome::NotInModule { hyperplane: 0, derivation: 0 }
        );
        assert!(matches!(saito_verify(&a, &[d(vec![x.clone(), z])]), Err(Error::Shape(_))));
    }

    #[test]
    fn good_summands() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let z = Poly::zero(2);
        let simple = Multiarrangement::simple_from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(is_good_summand(&simple, 2, &Derivation::euler(2)).unwrap());
        let a = xy([2, 1]);
        assert!(is_good_summand(&a, 0, &d(vec![x.pow(2), z.clone()])).unwrap());
        assert!(!is_good_summand(&a, 0, &d(vec![z, y])).unwrap());
    }
}
