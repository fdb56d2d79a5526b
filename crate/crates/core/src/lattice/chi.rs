use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{build_lattice, IntersectionLattice};
use crate::error::{Error, Result};
use crate::kernel::UniPoly;
use crate::model::Multiarrangement;

/// Möbius values `mu(V, X)` for every flat, indexed like the lattice.
pub fn mobius_values(lattice: &IntersectionLattice) -> Vec<Vec<BigInt>> {
    let mut mu: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..=lattice.max_codim() {
        let row = lattice
            .codim(r)
            .iter()
            .map(|x| {
                if r == 0 {
                    return BigInt::one();
                }
                let mut sum = BigInt::zero();
                for (s, lower) in mu.iter().enumerate() {
                    for (y, val) in lattice.codim(s).iter().zip(lower) {
                        if x.is_subspace_of(y) {
                            sum += val;
                        }
                    }
                }
                -sum
            })
            .collect();
        mu.push(row);
    }
    mu
}

/// Combinatorial characteristic polynomial `sum_X mu(X) t^dim(X)` of a
/// simple arrangement.
pub fn characteristic_polynomial_simple(a: &Multiarrangement) -> Result<UniPoly> {
    if !a.is_simple() {
        return Err(Error::Domain(
            "the Möbius characteristic polynomial needs a simple arrangement".into(),
        ));
    }
    let lattice = build_lattice(a)?;
    let mu = mobius_values(&lattice);
    let mut coeffs = vec![BigInt::zero(); a.nvars() + 1];
    for r in 0..=lattice.max_codim() {
        for (x, val) in lattice.codim(r).iter().zip(&mu[r]) {
            coeffs[x.dim()] += val;
        }
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_is_cube() {
        let b = Multiarrangement::simple_from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let one = BigInt::one();
        assert_eq!(
            characteristic_polynomial_simple(&b).unwrap(),
            UniPoly::from_roots(&[one.clone(), one.clone(), one])
        );
    }

    #[test]
    fn braid_a3() {
        let a = Multiarrangement::simple_from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]],
        )
        .unwrap();
        let chi = characteristic_polynomial_simple(&a).unwrap();
        assert_eq!(chi.to_string(), "t^3 - 6t^2 + 11t - 6");
    }

    #[test]
    fn mobius_sums_vanish() {
        let a = Multiarrangement::simple_from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, -1], &[-1, 0, 1]],
        )
        .unwrap();
        let l = build_lattice(&a).unwrap();
        let mu = mobius_values(&l);
        for r in 1..=l.max_codim() {
            for x in l.codim(r) {
                let mut sum = BigInt::zero();
                for s in 0..=r {
                    for (y, v) in l.codim(s).iter().zip(&mu[s]) {
                        if x.is_subspace_of(y) {
                            sum += v;
                        }
                    }
                }
                assert!(sum.is_zero());
            }
        }
    }

    #[test]
    fn rejects_multiplicities() {
        let a = Multiarrangement::from_ints(2, &[&[1, 0], &[0, 1]], &[2, 1]).unwrap();
        assert!(characteristic_polynomial_simple(&a).is_err());
    }
}
