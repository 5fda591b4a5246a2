//! Counting and listing standard Young tableaux of an arbitrary
//! [`CellRegion`] by walking the lattice of order ideals of its cell poset.
//!
//! Rows of a region are intervals ordered left to right, so every order
//! ideal fills a prefix of each row and is described by its per-row fill
//! counts (a [`FillProfile`]). A tableau is a maximal chain in this lattice;
//! the count is the number of monotone paths from the empty profile to the
//! full one.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::shapes::{Cell, CellRegion, Tableau};
use crate::{Error, ExactCount, Result};

/// Number of filled cells in each row; the filled cells of a row are always
/// a prefix of its interval.
pub type FillProfile = Vec<u16>;

/// Region compiled for fast eligibility checks.
struct Lattice {
    starts: Vec<usize>,
    lens: Vec<usize>,
    /// `preds[r][j]`: cells (row index, column) that must precede the `j`-th
    /// cell of row `r`, excluding its left neighbour.
    preds: Vec<Vec<Vec<(usize, usize)>>>,
    size: usize,
}

impl Lattice {
    fn new(region: &CellRegion) -> Self {
        let starts: Vec<usize> = region.rows().iter().map(|r| r.0).collect();
        let lens: Vec<usize> = region.rows().iter().map(|r| r.1).collect();
        let preds = region
            .rows()
            .iter()
            .enumerate()
            .map(|(i, &(s, l))| {
                (s..s + l)
                    .map(|c| {
                        region
                            .predecessors((i + 1, c))
                            .into_iter()
                            .filter(|&p| p != (i + 1, c - 1))
                            .map(|(r, c)| (r - 1, c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Lattice { starts, lens, preds, size: region.size() }
    }

    fn is_filled(&self, fill: &[u16], (r, c): (usize, usize)) -> bool {
        c < self.starts[r] + fill[r] as usize
    }

    /// Whether the next cell of row `r` may be added to the ideal `fill`.
    fn eligible(&self, fill: &[u16], r: usize) -> bool {
        let j = fill[r] as usize;
        j < self.lens[r] && self.preds[r][j].iter().all(|&p| self.is_filled(fill, p))
    }
}

/// Number of standard Young tableaux of `region` (1 for the empty region).
pub fn count_syt(region: &CellRegion) -> ExactCount {
    let lattice = Lattice::new(region);
    let rows = lattice.lens.len();
    let mut layer: BTreeMap<FillProfile, BigUint> = BTreeMap::new();
    layer.insert(vec![0; rows], BigUint::one());
    for _ in 0..lattice.size {
        let mut next: BTreeMap<FillProfile, BigUint> = BTreeMap::new();
        for (fill, ways) in &layer {
            for r in 0..rows {
                if lattice.eligible(fill, r) {
                    let mut grown = fill.clone();
                    grown[r] += 1;
                    *next.entry(grown).or_insert_with(BigUint::zero) += ways;
                }
            }
        }
        layer = next;
    }
    layer.into_values().next().unwrap_or_else(BigUint::zero)
}

/// Brute-force count by depth-first search over linear extensions, with no
/// memoization and no use of the row structure. Exponential; meant for
/// regions of at most a dozen cells.
pub fn count_syt_dfs(region: &CellRegion) -> ExactCount {
    let cells: Vec<Cell> = region.cells().collect();
    let index = |cell: Cell| cells.iter().position(|&x| x == cell).expect("cell in region");
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|&c| region.predecessors(c).into_iter().map(index).collect())
        .collect();
    fn rec(placed: &mut Vec<bool>, left: usize, preds: &[Vec<usize>]) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..placed.len() {
            if !placed[i] && preds[i].iter().all(|&p| placed[p]) {
                placed[i] = true;
                total += rec(placed, left - 1, preds);
                placed[i] = false;
            }
        }
        total
    }
    let mut placed = vec![false; cells.len()];
    BigUint::from(rec(&mut placed, cells.len(), &preds))
}

/// Iterator over the standard Young tableaux of a region.
///
/// Labels are placed in increasing order; label `k + 1` goes to the lowest
/// eligible row first. Tableaux therefore come out in lexicographic order of
/// the sequence "row of label 1, row of label 2, ...".
pub struct SytIter<'a> {
    region: &'a CellRegion,
    lattice: Lattice,
    fill: Vec<u16>,
    chosen: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> SytIter<'a> {
    pub fn new(region: &'a CellRegion) -> Self {
        let lattice = Lattice::new(region);
        let fill = vec![0; lattice.lens.len()];
        SytIter { region, lattice, fill, chosen: Vec::new(), started: false, done: false }
    }

    /// Completes the current partial chain, trying rows from `min_row` at the
    /// current depth and backtracking out of dead ends.
    fn fill_from(&mut self, mut min_row: usize) -> bool {
        let rows = self.fill.len();
        loop {
            if self.chosen.len() == self.lattice.size {
                return true;
            }
            match (min_row..rows).find(|&r| self.lattice.eligible(&self.fill, r)) {
                Some(r) => {
                    self.chosen.push(r);
                    self.fill[r] += 1;
                    min_row = 0;
                }
                None => match self.chosen.pop() {
                    Some(r) => {
                        self.fill[r] -= 1;
                        min_row = r + 1;
                    }
                    None => return false,
                },
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut labels: Vec<Vec<usize>> = self.lattice.lens.iter().map(|&l| Vec::with_capacity(l)).collect();
        for (k, &r) in self.chosen.iter().enumerate() {
            labels[r].push(k + 1);
        }
        Tableau::new(self.region.clone(), labels).expect("labels follow the row lengths")
    }
}

impl Iterator for SytIter<'_> {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.fill_from(0)
        } else {
            match self.chosen.pop() {
                Some(r) => {
                    self.fill[r] -= 1;
                    self.fill_from(r + 1)
                }
                None => false,
            }
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// All tableaux of `region` in [`SytIter`] order, at most `limit` of them.
pub fn enumerate_syt(region: &CellRegion, limit: Option<usize>) -> Vec<Tableau> {
    let iter = SytIter::new(region);
    match limit {
        Some(l) => iter.take(l).collect(),
        None => iter.collect(),
    }
}

/// Whether labels increase along rows, down columns and along every extra
/// precedence. The labels must be exactly `1..=N`.
pub fn is_valid_tableau(t: &Tableau) -> Result<bool> {
    let mut labels: Vec<usize> = t.rows().iter().flatten().copied().collect();
    labels.sort_unstable();
    if labels.iter().enumerate().any(|(i, &l)| l != i + 1) {
        return Err(Error::LabelSetMismatch);
    }
    let region = t.region();
    for (cell, label) in t.entries() {
        for p in region.predecessors(cell) {
            if t.label_at(p).is_some_and(|lp| lp >= label) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, StrictPartition};

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn count(region: &CellRegion) -> u64 {
        u64::try_from(count_syt(region)).unwrap()
    }

    #[test]
    fn small_counts() {
        let stair41 = CellRegion::truncated_staircase(4, &part(&[1])).unwrap();
        assert_eq!(count(&stair41), 4);
        assert_eq!(count(&CellRegion::ordinary(&part(&[1]))), 1);
        assert_eq!(count(&CellRegion::ordinary(&part(&[2, 2]))), 2);
        assert_eq!(count(&CellRegion::truncated_rectangle(3, 3, &part(&[1])).unwrap()), 12);
        assert_eq!(count(&CellRegion::ordinary(&Partition::empty())), 1);
    }

    #[test]
    fn truncated_rectangle_with_empty_row() {
        // (2^2) \ (2) is a single row of two cells
        let r = CellRegion::truncated_rectangle(2, 2, &part(&[2])).unwrap();
        assert_eq!(count(&r), 1);
    }

    #[test]
    fn enumerate_example_listing() {
        let r = CellRegion::truncated_staircase(4, &part(&[1])).unwrap();
        let all = enumerate_syt(&r, None);
        let rows: Vec<Vec<Vec<usize>>> = all.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8], vec![9]],
                vec![vec![1, 2, 3], vec![4, 5, 7], vec![6, 8], vec![9]],
                vec![vec![1, 2, 4], vec![3, 5, 6], vec![7, 8], vec![9]],
                vec![vec![1, 2, 4], vec![3, 5, 7], vec![6, 8], vec![9]],
            ]
        );
    }

    #[test]
    fn enumerate_limits_and_trivial_cases() {
        let one = enumerate_syt(&CellRegion::ordinary(&part(&[1])), None);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), &[vec![1]]);
        let sq = CellRegion::ordinary(&part(&[2, 2]));
        assert_eq!(enumerate_syt(&sq, None).len(), 2);
        let first = enumerate_syt(&sq, Some(1));
        assert_eq!(first.len(), 1);
        assert_eq!(first[0].rows(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(enumerate_syt(&CellRegion::ordinary(&Partition::empty()), None).len(), 1);
    }

    #[test]
    fn validity_checks() {
        let sq = CellRegion::ordinary(&part(&[2, 2]));
        let good = Tableau::new(sq.clone(), vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(is_valid_tableau(&good), Ok(true));
        let bad = Tableau::new(sq.clone(), vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(is_valid_tableau(&bad), Ok(false));
        let dup = Tableau::new(sq, vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(is_valid_tableau(&dup), Err(Error::LabelSetMismatch));
        let single = Tableau::new(CellRegion::ordinary(&part(&[1])), vec![vec![1]]).unwrap();
        assert_eq!(is_valid_tableau(&single), Ok(true));

        let stair = CellRegion::truncated_staircase(4, &part(&[1])).unwrap();
        let example = Tableau::new(stair, vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8], vec![9]]).unwrap();
        assert_eq!(is_valid_tableau(&example), Ok(true));
    }

    #[test]
    fn diagonal_constraint_matters_when_truncated() {
        // [3] \ (2): row 1 is the single cell (1,1); only the diagonal
        // orders it before (2,2)
        let r = CellRegion::truncated_staircase(3, &part(&[2])).unwrap();
        assert_eq!(count(&r), 1);
        assert_eq!(count(&r.without_extra_precedences()), 4);
    }

    #[test]
    fn dfs_agrees_on_small_regions() {
        let shapes = [
            CellRegion::shifted(&StrictPartition::new(vec![4, 2, 1]).unwrap()),
            CellRegion::truncated_rectangle(3, 3, &part(&[2, 1])).unwrap(),
            CellRegion::truncated_staircase(4, &part(&[2, 1])).unwrap(),
            CellRegion::ordinary(&part(&[3, 2, 2])),
        ];
        for r in &shapes {
            assert_eq!(count_syt(r), count_syt_dfs(r));
        }
    }
}
