use super::{build_lattice, Flat, IntersectionLattice};
use crate::error::{Error, Result};
use crate::model::Multiarrangement;

/// A chain `V = X_0 ⊃ X_1 ⊃ ... ⊃ X_s` of flats with `codim X_i = i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    flats: Vec<Flat>,
}

impl Flag {
    /// Validates a chain of flats starting at `V`.
    pub fn new(flats: Vec<Flat>) -> Result<Flag> {
        if flats.first().map(|f| f.codim()) != Some(0) {
            return Err(Error::Domain("a flag starts with the whole space".into()));
        }
        for (i, w) in flats.windows(2).enumerate() {
            if w[1].codim() != i + 1 || !w[1].is_subspace_of(&w[0]) || w[1] == w[0] {
                return Err(Error::Domain(format!(
                    "flag step {} is not a codimension-one refinement",
                    i + 1
                )));
            }
        }
        Ok(Flag { flats })
    }

    /// The flag `X_i = H_1 ∩ ... ∩ H_i` cut out by a sequence of hyperplanes.
    pub fn from_hyperplanes(a: &Multiarrangement, seq: &[usize]) -> Result<Flag> {
        let mut flats = vec![Flat::whole_space(a)];
        for k in 1..=seq.len() {
            flats.push(Flat::closure(a, &seq[..k])?);
        }
        Flag::new(flats)
    }

    /// All flats including `X_0 = V`.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Number of steps `s`.
    pub fn len(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_maximal(&self, a: &Multiarrangement) -> bool {
        self.len() == a.essential_rank()
    }
}

type Pruner<'p> = Box<dyn FnMut(&[&Flat], &Flat) -> bool + 'p>;

/// Lazy depth-first enumeration of maximal flags. An optional predicate
/// sees the chain built so far and a candidate next flat; returning `false`
/// prunes that branch.
pub struct FlagIter<'p> {
    lattice: IntersectionLattice,
    children: Vec<Vec<Vec<usize>>>,
    stack: Vec<(usize, usize)>,
    prune: Option<Pruner<'p>>,
}

impl<'p> FlagIter<'p> {
    fn new(lattice: IntersectionLattice, prune: Option<Pruner<'p>>) -> Self {
        let top = lattice.max_codim();
        let children = (0..top)
            .map(|r| {
                lattice
                    .codim(r)
                    .iter()
                    .map(|x| {
                        lattice
                            .codim(r + 1)
                            .iter()
                            .enumerate()
                            .filter(|(_, y)| y.is_subspace_of(x))
                            .map(|(j, _)| j)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FlagIter {
            lattice,
            children,
            stack: vec![(0, 0)],
            prune,
        }
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }
}

impl Iterator for FlagIter<'_> {
    type Item = Flag;

    fn next(&mut self) -> Option<Flag> {
        let top = self.lattice.max_codim();
        while let Some(&(idx, cursor)) = self.stack.last() {
            let r = self.stack.len() - 1;
            if r == top {
                let flats = self
                    .stack
                    .iter()
                    .enumerate()
                    .map(|(s, &(i, _))| self.lattice.codim(s)[i].clone())
                    .collect();
                self.stack.pop();
                return Some(Flag { flats });
            }
            let kids = &self.children[r][idx];
            if cursor >= kids.len() {
                self.stack.pop();
                continue;
            }
            let child = kids[cursor];
            self.stack.last_mut().unwrap().1 += 1;
            let accept = match self.prune.as_mut() {
                None => true,
                Some(p) => {
                    let chain: Vec<&Flat> = self
                        .stack
                        .iter()
                        .enumerate()
                        .map(|(s, &(i, _))| &self.lattice.codim(s)[i])
                        .collect();
                    p(&chain, &self.lattice.codim(r + 1)[child])
                }
            };
            if accept {
                self.stack.push((child, 0));
            }
        }
        None
    }
}

/// All maximal flags (of length `r(A)`).
pub fn flag_enumerate(a: &Multiarrangement) -> Result<FlagIter<'static>> {
    Ok(FlagIter::new(build_lattice(a)?, None))
}

/// Maximal flags passing a pruning predicate.
pub fn flag_enumerate_pruned<'p>(
    a: &Multiarrangement,
    prune: impl FnMut(&[&Flat], &Flat) -> bool + 'p,
) -> Result<FlagIter<'p>> {
    Ok(FlagIter::new(build_lattice(a)?, Some(Box::new(prune))))
}
