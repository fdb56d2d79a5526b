use std::collections::HashMap;

use super::{build_lattice, IntersectionLattice};
use crate::model::Multiarrangement;

/// A chain `A_1 ⊂ A_2 ⊂ ... ⊂ A_r = A` of sub-arrangements, each stored as
/// sorted hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub levels: Vec<Vec<usize>>,
}

/// Why a filtration is not supersolvable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationViolation {
    /// Level `level` (1-based) does not have rank `level`, or the chain is
    /// not nested, or the last level is not the whole arrangement.
    Shape { level: usize, reason: String },
    /// Two new hyperplanes at `level` whose intersection lies in no
    /// hyperplane of the previous level.
    Pair { level: usize, first: usize, second: usize },
}

/// Checks both defining conditions of a supersolvable filtration.
pub fn check_filtration(a: &Multiarrangement, f: &Filtration) -> Result<(), FiltrationViolation> {
    let r = a.essential_rank();
    if f.levels.len() != r {
        return Err(FiltrationViolation::Shape {
            level: f.levels.len(),
            reason: format!("{} levels for an arrangement of rank {r}", f.levels.len()),
        });
    }
    let mut prev: Vec<usize> = Vec::new();
    for (k, level) in f.levels.iter().enumerate() {
        let i = k + 1;
        if !prev.iter().all(|h| level.contains(h)) {
            return Err(FiltrationViolation::Shape {
                level: i,
                reason: "levels are not nested".into(),
            });
        }
        if level.iter().any(|&h| h >= a.len()) {
            return Err(FiltrationViolation::Shape {
                level: i,
                reason: "hyperplane index out of range".into(),
            });
        }
        if a.normals_of(level).rank() != i {
            return Err(FiltrationViolation::Shape {
                level: i,
                reason: format!("rank differs from {i}"),
            });
        }
        let new: Vec<usize> = level.iter().copied().filter(|h| !prev.contains(h)).collect();
        if i >= 2 {
            for (s, &h) in new.iter().enumerate() {
                for &g in &new[s + 1..] {
                    let covered = prev
                        .iter()
                        .any(|&p| a.normals_of(&[h, g, p]).rank() == 2);
                    if !covered {
                        return Err(FiltrationViolation::Pair {
                            level: i,
                            first: h,
                            second: g,
                        });
                    }
                }
            }
        }
        prev = level.clone();
    }
    if prev.len() != a.len() {
        return Err(FiltrationViolation::Shape {
            level: r,
            reason: "top level is not the whole arrangement".into(),
        });
    }
    Ok(())
}

/// Returns a supersolvable filtration if one exists. A supplied candidate
/// is verified first and returned when it passes; otherwise the lattice is
/// searched for a chain of modular coatoms.
pub fn is_supersolvable(a: &Multiarrangement, candidate: Option<&Filtration>) -> Option<Filtration> {
    if let Some(f) = candidate {
        if check_filtration(a, f).is_ok() {
            return Some(f.clone());
        }
    }
    let lattice = build_lattice(a).ok()?;
    let mut search = Search::new(a, &lattice);
    let all: Vec<usize> = (0..a.len()).collect();
    let levels = search.solve(&all, lattice.max_codim())?;
    Some(Filtration { levels })
}

struct Search<'l> {
    lattice: &'l IntersectionLattice,
    /// `pair_flat[i][j]` = containing set of the codim-2 flat through `i, j`.
    pair_flat: Vec<Vec<usize>>,
    n: usize,
    memo: HashMap<Vec<usize>, Option<Vec<Vec<usize>>>>,
}

impl<'l> Search<'l> {
    fn new(a: &Multiarrangement, lattice: &'l IntersectionLattice) -> Self {
        let n = a.len();
        let mut pair_flat = vec![usize::MAX; n * n];
        for (k, x) in lattice.codim(2).iter().enumerate() {
            for &i in x.hyperplanes() {
                for &j in x.hyperplanes() {
                    pair_flat[i * n + j] = k;
                }
            }
        }
        let pair_flat = pair_flat.chunks(n.max(1)).map(|c| c.to_vec()).collect();
        Search {
            lattice,
            pair_flat,
            n,
            memo: HashMap::new(),
        }
    }

    fn covered(&self, h: usize, g: usize, lower: &[usize]) -> bool {
        let x = &self.lattice.codim(2)[self.pair_flat[h][g]];
        lower.iter().any(|p| x.contains_hyperplane(*p))
    }

    /// Filtration of the localization with containing set `set` and rank
    /// `rank`, ending in `set` itself.
    fn solve(&mut self, set: &[usize], rank: usize) -> Option<Vec<Vec<usize>>> {
        if rank == 0 {
            return Some(Vec::new());
        }
        if rank == 1 {
            return Some(vec![set.to_vec()]);
        }
        if let Some(hit) = self.memo.get(set) {
            return hit.clone();
        }
        let _ = self.n;
        let coatoms: Vec<Vec<usize>> = self
            .lattice
            .codim(rank - 1)
            .iter()
            .filter(|y| y.hyperplanes().iter().all(|h| set.binary_search(h).is_ok()))
            .map(|y| y.hyperplanes().to_vec())
            .collect();
        let mut result = None;
        for lower in coatoms {
            let new: Vec<usize> = set.iter().copied().filter(|h| lower.binary_search(h).is_err()).collect();
            let modular = new.iter().enumerate().all(|(s, &h)| {
                new[s + 1..].iter().all(|&g| self.covered(h, g, &lower))
            });
            if !modular {
                continue;
            }
            if let Some(mut chain) = self.solve(&lower, rank - 1) {
                chain.push(set.to_vec());
                result = Some(chain);
                break;
            }
        }
        self.memo.insert(set.to_vec(), result.clone());
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_is_supersolvable() {
        let b = Multiarrangement::simple_from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let f = is_supersolvable(&b, None).unwrap();
        assert_eq!(f.levels.len(), 3);
        assert!(check_filtration(&b, &f).is_ok());
    }

    #[test]
    fn non_supersolvable_six_planes() {
        // x, y, z, x + y, y - z, z - x
        let a = Multiarrangement::simple_from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, -1], &[-1, 0, 1]],
        )
        .unwrap();
        assert!(is_supersolvable(&a, None).is_none());
    }

    #[test]
    fn braid_is_supersolvable() {
        let a = Multiarrangement::simple_from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]],
        )
        .unwrap();
        let f = is_supersolvable(&a, None).unwrap();
        assert!(check_filtration(&a, &f).is_ok());
    }

    #[test]
    fn verifier_reports_violating_pair() {
        let a = Multiarrangement::simple_from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, -1], &[-1, 0, 1]],
        )
        .unwrap();
        let f = Filtration {
            levels: vec![vec![2], vec![1, 2, 4], vec![0, 1, 2, 3, 4, 5]],
        };
        assert_eq!(
            check_filtration(&a, &f),
            Err(FiltrationViolation::Pair { level: 3, first: 3, second: 5 })
        );
        let bad_rank = Filtration {
            levels: vec![vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3, 4, 5]],
        };
        assert!(matches!(check_filtration(&a, &bad_rank), Err(FiltrationViolation::Shape { level: 1, .. })));
    }
}
