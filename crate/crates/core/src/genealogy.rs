//! Parents, children and lineages induced by the birth rule.
//!
//! A cell's children are born exactly one generation after it, so its child
//! list is final once the state has advanced past its birth generation.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::engine::AutomatonState;
use crate::error::{Error, Result};
use crate::lattice::{self, Cell, LatticeKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FertilityClass {
    Patriarch,
    Leaf,
    One,
    Two,
    Three,
}

impl FertilityClass {
    fn from_children(n: usize) -> Option<FertilityClass> {
        match n {
            0 => Some(FertilityClass::Leaf),
            1 => Some(FertilityClass::One),
            2 => Some(FertilityClass::Two),
            3 => Some(FertilityClass::Three),
            _ => None,
        }
    }
}

/// Child counts a finalized non-patriarch cell may have on each lattice.
pub fn permitted_child_counts(kind: LatticeKind) -> &'static [usize] {
    match kind {
        LatticeKind::Square => &[0, 1, 3],
        LatticeKind::Hex => &[0, 1, 2, 3],
    }
}

pub fn parent_of(state: &AutomatonState, c: Cell) -> Result<Option<Cell>> {
    Ok(state.require(c)?.parent)
}

/// Live cells whose parent is `c`, sorted.
pub fn children_of(state: &AutomatonState, c: Cell) -> Result<Vec<Cell>> {
    state.require(c)?;
    Ok(children_unchecked(state, c))
}

fn children_unchecked(state: &AutomatonState, c: Cell) -> Vec<Cell> {
    let mut kids: Vec<Cell> = lattice::neighbors(state.kind(), c)
        .expect("live cells are valid")
        .into_iter()
        .filter(|&n| state.record(n).is_some_and(|r| r.parent == Some(c)))
        .collect();
    kids.sort();
    kids
}

/// Whether the child list of the live cell `c` can no longer change.
pub fn is_final(state: &AutomatonState, c: Cell) -> Result<bool> {
    Ok(state.require(c)?.generation < state.generation())
}

/// `c`, its parent, its grandparent, ... ending at the patriarch.
pub fn lineage(state: &AutomatonState, c: Cell) -> Result<Vec<Cell>> {
    let mut rec = state.require(c)?;
    let mut chain = Vec::with_capacity(rec.generation as usize + 1);
    chain.push(c);
    while let Some(p) = rec.parent {
        chain.push(p);
        rec = state.require(p)?;
    }
    Ok(chain)
}

pub fn fertility_class(state: &AutomatonState, c: Cell) -> Result<FertilityClass> {
    if !is_final(state, c)? {
        return Err(Error::FertilityNotFinal(c));
    }
    if c.is_patriarch() {
        return Ok(FertilityClass::Patriarch);
    }
    let n = children_unchecked(state, c).len();
    // At most degree - 1 children; anything above 3 is a hex-only possibility
    // that never occurs, reported as an invariant failure rather than a class.
    FertilityClass::from_children(n).ok_or_else(|| {
        Error::Precondition(format!(
            "{c} has {n} children, outside every fertility class"
        ))
    })
}

/// Child-count histogram over finalized non-patriarch cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FertilityHistogram {
    pub counts: BTreeMap<usize, u64>,
    /// Cells whose child count is not permitted on this lattice, sorted.
    pub out_of_domain: Vec<Cell>,
}

pub fn fertility_histogram(state: &AutomatonState) -> FertilityHistogram {
    let permitted = permitted_child_counts(state.kind());
    let mut hist = FertilityHistogram::default();
    for (c, rec) in state.iter() {
        if c.is_patriarch() || rec.generation >= state.generation() {
            continue;
        }
        let n = children_unchecked(state, c).len();
        *hist.counts.entry(n).or_default() += 1;
        if !permitted.contains(&n) {
            hist.out_of_domain.push(c);
        }
    }
    hist.out_of_domain.sort();
    hist
}

/// `(parent, child)` for every non-patriarch live cell, sorted.
pub fn family_tree_edges(state: &AutomatonState) -> Vec<(Cell, Cell)> {
    let mut edges: Vec<(Cell, Cell)> = state
        .iter()
        .filter_map(|(c, r)| r.parent.map(|p| (p, c)))
        .collect();
    edges.sort_unstable();
    edges
}

/// Edge list text: one `parent child` pair per line, sorted.
pub fn write_family_tree(state: &AutomatonState) -> String {
    let mut out = String::new();
    for (p, c) in family_tree_edges(state) {
        writeln!(out, "{p} {c}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use std::collections::{HashMap, HashSet};

    use super::*;
    use crate::engine::{run, AutomatonState};

    const SQ: LatticeKind = LatticeKind::Square;
    const HX: LatticeKind = LatticeKind::Hex;

    fn naive(kind: LatticeKind, n: u32) -> AutomatonState {
        let mut s = AutomatonState::new(kind);
        for _ in 0..n {
            s.step_naive().unwrap();
        }
        s
    }

    #[test]
    fn parent_examples() {
        let s = naive(SQ, 3);
        assert_eq!(
            parent_of(&s, Cell::square(1, 0)),
            Ok(Some(Cell::square(0, 0)))
        );
        assert_eq!(
            parent_of(&s, Cell::square(2, 1)),
            Ok(Some(Cell::square(2, 0)))
        );
        assert_eq!(parent_of(&s, Cell::square(0, 0)), Ok(None));
        assert_eq!(
            parent_of(&s, Cell::square(1, 1)),
            Err(Error::CellNotLive(Cell::square(1, 1)))
        );
    }

    #[test]
    fn children_examples() {
        let s = naive(SQ, 2);
        assert_eq!(children_of(&s, Cell::square(0, 0)).unwrap().len(), 4);
        assert_eq!(
            children_of(&s, Cell::square(1, 0)).unwrap(),
            vec![Cell::square(2, 0)]
        );
        let h = naive(HX, 1);
        assert_eq!(children_of(&h, HX.patriarch()).unwrap().len(), 6);
    }

    #[test]
    fn lineage_examples() {
        let s = naive(SQ, 3);
        assert_eq!(
            lineage(&s, Cell::square(0, 0)).unwrap(),
            vec![Cell::square(0, 0)]
        );
        assert_eq!(
            lineage(&s, Cell::square(2, 1)).unwrap(),
            vec![
                Cell::square(2, 1),
                Cell::square(2, 0),
                Cell::square(1, 0),
                Cell::square(0, 0)
            ]
        );
    }

    #[test]
    fn fertility_examples() {
        let s = naive(SQ, 4);
        assert_eq!(
            fertility_class(&s, Cell::square(0, 0)),
            Ok(FertilityClass::Patriarch)
        );
        assert_eq!(
            fertility_class(&s, Cell::square(2, 0)),
            Ok(FertilityClass::Three)
        );
        assert_eq!(
            fertility_class(&s, Cell::square(2, 1)),
            Ok(FertilityClass::Leaf)
        );
        let frontier = s.frontier()[0];
        assert_eq!(
            fertility_class(&s, frontier),
            Err(Error::FertilityNotFinal(frontier))
        );
    }

    #[test]
    fn histogram_examples() {
        assert!(fertility_histogram(&run(SQ, 1).unwrap()).counts.is_empty());
        let sq = fertility_histogram(&run(SQ, 16).unwrap());
        assert!(sq.out_of_domain.is_empty());
        assert!(sq.counts.keys().all(|k| [0, 1, 3].contains(k)));
        let hx = fertility_histogram(&run(HX, 16).unwrap());
        assert!(hx.out_of_domain.is_empty());
        assert!(hx.counts.keys().all(|k| [0, 1, 2, 3].contains(k)));
    }

    #[test]
    fn tree_edges() {
        assert!(family_tree_edges(&run(SQ, 0).unwrap()).is_empty());
        assert_eq!(family_tree_edges(&run(SQ, 6).unwrap()).len(), 48);
        let text = write_family_tree(&run(SQ, 1).unwrap());
        assert_eq!(text, "0,0 -1,0\n0,0 0,-1\n0,0 0,1\n0,0 1,0\n");
    }

    #[test]
    fn parent_relation_is_a_spanning_tree() {
        for kind in [SQ, HX] {
            let s = run(kind, 64).unwrap();
            let edges = family_tree_edges(&s);
            assert_eq!(edges.len() as u64, s.live_count() - 1);
            let mut kids: HashMap<Cell, Vec<Cell>> = HashMap::new();
            for &(p, c) in &edges {
                kids.entry(p).or_default().push(c);
            }
            let mut seen = HashSet::from([kind.patriarch()]);
            let mut stack = vec![kind.patriarch()];
            while let Some(c) = stack.pop() {
                for &k in kids.get(&c).into_iter().flatten() {
                    assert!(seen.insert(k), "cycle through {k}");
                    stack.push(k);
                }
            }
            assert_eq!(seen.len() as u64, s.live_count());
            for (c, rec) in s.iter() {
                assert_eq!(lineage(&s, c).unwrap().len(), rec.generation as usize + 1);
            }
        }
    }

    #[test]
    fn child_lists_do_not_change_once_final() {
        for kind in [SQ, HX] {
            let early = run(kind, 20).unwrap();
            let late = run(kind, 40).unwrap();
            for (c, rec) in early.iter() {
                if rec.generation < early.generation() {
                    assert_eq!(children_of(&early, c), children_of(&late, c));
                }
            }
        }
    }
}
