//! Splitting a tableau into two smaller tableaux, either at a threshold
//! value or at the label of a pivot cell on the north-east boundary.
//!
//! The upper piece is relabeled `i -> N - i + 1` and reflected in the
//! anti-diagonal of the bounding box, which turns the order filter of large
//! entries back into an order ideal. Pieces are then recognized as ordinary
//! or shifted diagrams when their cells allow it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::exact_count::SytIter;
use crate::formulas::{frobenius_young, schur_count};
use crate::shapes::{
    complement_in_rectangle, complement_in_staircase, partitions_in_box, staircase,
    strict_subsets_of_staircase, Cell, CellRegion, Partition, RegionKind, ShapeSpec, StrictPartition, Tableau,
};
use crate::{count_syt, is_valid_tableau, Error, ExactCount, Result};

/// Tableaux of regions with more SYT than this are not enumerated when
/// building the term-by-term histogram of a pivot identity.
pub const HISTOGRAM_LIMIT: u64 = 200_000;

/// The two pieces of a split tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    /// The threshold, or the label found in the pivot cell.
    pub t: usize,
    /// Entries `<= t` (threshold) or `< t` (pivot), unchanged.
    pub first: Tableau,
    /// Remaining entries, relabeled and reflected.
    pub second: Tableau,
}

/// `(r, c) -> (cols + 1 - c, rows + 1 - r)`.
fn reflect((r, c): Cell, rows: usize, cols: usize) -> Cell {
    (cols + 1 - c, rows + 1 - r)
}

/// Row lengths of `cells` when they occupy rows `1..=k` without gaps.
fn row_lengths(cells: &[Cell]) -> Option<Vec<usize>> {
    let mut lens: Vec<usize> = Vec::new();
    for &(r, _) in cells {
        if lens.len() < r {
            lens.resize(r, 0);
        }
        lens[r - 1] += 1;
    }
    lens.iter().all(|&l| l > 0).then_some(lens)
}

fn same_cells(region: &CellRegion, sorted: &[Cell]) -> bool {
    region.size() == sorted.len() && region.cells().zip(sorted).all(|(a, b)| a == *b)
}

/// The smallest region on `cells`: a shifted or ordinary diagram when the
/// cells form one, otherwise a general region carrying `extra`.
fn recognize(cells: &mut [Cell], extra: Vec<(Cell, Cell)>, prefer_shifted: bool) -> Result<CellRegion> {
    cells.sort_unstable();
    if let Some(lens) = row_lengths(cells) {
        if prefer_shifted {
            if let Ok(lam) = StrictPartition::new(lens.clone()) {
                let region = CellRegion::shifted(&lam);
                if same_cells(&region, cells) {
                    return Ok(region);
                }
            }
        }
        if let Ok(lam) = Partition::new(lens) {
            let region = CellRegion::ordinary(&lam);
            if same_cells(&region, cells) && (extra.is_empty() || !prefer_shifted) {
                return Ok(region);
            }
        }
    }
    CellRegion::from_cells(cells, extra)
}

/// Builds a piece from `(cell, label)` pairs in source coordinates,
/// optionally reflecting, then translating to the top-left corner.
fn make_piece(source: &CellRegion, entries: Vec<(Cell, usize)>, reflected: bool) -> Result<Tableau> {
    let (rows, cols) = (source.row_count(), source.width());
    let map = |cell: Cell| if reflected { reflect(cell, rows, cols) } else { cell };
    let mut moved: Vec<(Cell, usize)> = entries.iter().map(|&(c, l)| (map(c), l)).collect();
    let dr = moved.iter().map(|e| e.0 .0).min().unwrap_or(1) - 1;
    let dc = moved.iter().map(|e| e.0 .1).min().unwrap_or(1) - 1;
    for e in &mut moved {
        e.0 = (e.0 .0 - dr, e.0 .1 - dc);
    }
    let shift = |cell: Cell| {
        let (r, c) = map(cell);
        (r - dr, c - dc)
    };
    let inside: Vec<Cell> = entries.iter().map(|e| e.0).collect();
    let extra: Vec<(Cell, Cell)> = source
        .extra_precedences()
        .iter()
        .filter(|(a, b)| inside.contains(a) && inside.contains(b))
        .map(|&(a, b)| if reflected { (shift(b), shift(a)) } else { (shift(a), shift(b)) })
        .collect();
    let prefer_shifted = matches!(source.kind(), RegionKind::Shifted | RegionKind::TruncatedStaircase)
        || !source.extra_precedences().is_empty();
    let mut cells: Vec<Cell> = moved.iter().map(|e| e.0).collect();
    let region = recognize(&mut cells, extra, prefer_shifted)?;
    Tableau::from_cell_labels(region, &moved)
}

/// The descriptor of a region, `None` for general cell sets.
pub fn shape_of(region: &CellRegion) -> Option<ShapeSpec> {
    let lens: Vec<usize> = region.rows().iter().map(|r| r.1).collect();
    match region.kind() {
        RegionKind::Ordinary => Partition::new(lens).ok().map(ShapeSpec::Ordinary),
        RegionKind::Shifted => StrictPartition::new(lens).ok().map(ShapeSpec::Shifted),
        RegionKind::TruncatedStaircase => {
            let m = region.row_count();
            let kappa = lens.iter().enumerate().map(|(i, &l)| m - i - l).collect::<Vec<_>>();
            Partition::new(kappa).ok().map(|kappa| ShapeSpec::Staircase { m, kappa })
        }
        RegionKind::TruncatedRectangle => {
            let (m, n) = (region.row_count(), region.width());
            let kappa = lens.iter().map(|&l| n - l).collect::<Vec<_>>();
            Partition::new(kappa).ok().map(|kappa| ShapeSpec::Rectangle { m, n, kappa })
        }
        RegionKind::General => None,
    }
}

fn require_full(region: &CellRegion) -> Result<()> {
    if region.as_full_staircase().is_some() || region.as_full_rectangle().is_some() {
        Ok(())
    } else {
        Err(Error::UnsupportedRegion)
    }
}

/// Splits a tableau of a full rectangle or full shifted staircase into the
/// entries `<= thresh` and the reflected complement.
pub fn split_threshold(t: &Tableau, thresh: usize) -> Result<SplitResult> {
    let region = t.region();
    require_full(region)?;
    let n = t.size();
    if thresh > n {
        return Err(Error::InvalidParameter(alloc::format!("threshold {thresh} exceeds {n}")));
    }
    let (low, high): (Vec<_>, Vec<_>) = t.entries().partition(|&(_, l)| l <= thresh);
    let high = high.into_iter().map(|(c, l)| (c, n - l + 1)).collect();
    Ok(SplitResult {
        t: thresh,
        first: make_piece(region, low, false)?,
        second: make_piece(region, high, true)?,
    })
}

/// Inverse of [`split_threshold`] for the given full region.
pub fn unsplit_threshold(r: &SplitResult, region: &CellRegion) -> Result<Tableau> {
    require_full(region)?;
    let n = region.size();
    if r.first.size() != r.t || r.first.size() + r.second.size() != n {
        return Err(Error::IncompatibleShapes);
    }
    let (rows, cols) = (region.row_count(), region.width());
    let mut entries: Vec<(Cell, usize)> = r.first.entries().collect();
    for ((a, b), l) in r.second.entries() {
        if a > cols || b > rows {
            return Err(Error::IncompatibleShapes);
        }
        entries.push(((rows + 1 - b, cols + 1 - a), n - l + 1));
    }
    let mut cells: Vec<Cell> = entries.iter().map(|e| e.0).collect();
    cells.sort_unstable();
    cells.dedup();
    if !same_cells(region, &cells) {
        return Err(Error::IncompatibleShapes);
    }
    let t = Tableau::from_cell_labels(region.clone(), &entries).map_err(|_| Error::IncompatibleShapes)?;
    match is_valid_tableau(&t) {
        Ok(true) => Ok(t),
        _ => Err(Error::IncompatibleShapes),
    }
}

/// Whether no cell of `region` lies strictly north and strictly east of `cell`.
pub fn is_on_ne_boundary(region: &CellRegion, (r, c): Cell) -> bool {
    region.contains((r, c)) && (1..r).all(|i| region.row_interval(i).is_none_or(|(_, e)| e <= c))
}

/// Splits a tableau at the label `t` found in `pivot`: entries `< t` form
/// the first piece, entries `> t` the reflected second piece.
pub fn split_pivot(t: &Tableau, pivot: Cell) -> Result<SplitResult> {
    let region = t.region();
    if !is_on_ne_boundary(region, pivot) {
        return Err(Error::NotOnBoundary { row: pivot.0, col: pivot.1 });
    }
    let n = t.size();
    let tp = t.label_at(pivot).expect("pivot lies in the region");
    let low = t.entries().filter(|&(_, l)| l < tp).collect();
    let high = t.entries().filter(|&(_, l)| l > tp).map(|(c, l)| (c, n - l + 1)).collect();
    Ok(SplitResult { t: tp, first: make_piece(region, low, false)?, second: make_piece(region, high, true)? })
}

/// One term of a pivot identity: a pair of piece shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotTerm {
    pub first: ShapeSpec,
    pub second: ShapeSpec,
    /// Product of the two closed-form counts.
    pub expected: ExactCount,
    /// Number of tableaux whose split produced this pair, when enumerated.
    pub observed: Option<ExactCount>,
}

/// Outcome of checking `count(zeta) = sum of products` for one region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotReport {
    pub region: CellRegion,
    pub pivot: Cell,
    /// Oracle count of the truncated region.
    pub oracle: ExactCount,
    /// Sum of the expected term values.
    pub rhs: ExactCount,
    pub terms: Vec<PivotTerm>,
    /// Whether every tableau was split and the pieces histogrammed.
    pub enumerated: bool,
    /// Splits whose pieces were invalid tableaux or unexpected shapes.
    pub stray_splits: u64,
}

impl PivotReport {
    pub fn passed(&self) -> bool {
        self.oracle == self.rhs
            && (!self.enumerated
                || (self.stray_splits == 0 && self.terms.iter().all(|t| t.observed.as_ref() == Some(&t.expected))))
    }
}

/// Checks a region against its expected terms, splitting every tableau when
/// the region is small enough.
fn check_terms(region: CellRegion, pivot: Cell, expected: Vec<(ShapeSpec, ShapeSpec, ExactCount)>) -> PivotReport {
    let oracle = count_syt(&region);
    let rhs = expected.iter().fold(BigUint::zero(), |acc, e| acc + &e.2);
    let enumerated = oracle <= BigUint::from(HISTOGRAM_LIMIT);
    let mut seen: BTreeMap<usize, u64> = BTreeMap::new();
    let mut stray = 0;
    if enumerated {
        for t in SytIter::new(&region) {
            let Ok(split) = split_pivot(&t, pivot) else {
                stray += 1;
                continue;
            };
            let valid = is_valid_tableau(&split.first) == Ok(true) && is_valid_tableau(&split.second) == Ok(true);
            let key = (shape_of(split.first.region()), shape_of(split.second.region()));
            match expected.iter().position(|e| (Some(&e.0), Some(&e.1)) == (key.0.as_ref(), key.1.as_ref())) {
                Some(i) if valid => *seen.entry(i).or_insert(0) += 1,
                _ => stray += 1,
            }
        }
    }
    let terms = expected
        .into_iter()
        .enumerate()
        .map(|(i, (first, second, value))| PivotTerm {
            first,
            second,
            expected: value,
            observed: enumerated.then(|| BigUint::from(seen.get(&i).copied().unwrap_or(0))),
        })
        .collect();
    PivotReport { region, pivot, oracle, rhs, terms, enumerated, stray_splits: stray }
}

/// Validates that `cells` form `[size] \ kappa` and returns that region.
fn as_truncated_staircase(cells: &mut Vec<Cell>, size: usize) -> Result<CellRegion> {
    cells.sort_unstable();
    cells.dedup();
    let probe = CellRegion::from_cells(cells, Vec::new())?;
    let unsupported = || Error::InvalidParameter("pieces do not assemble into a truncated staircase".into());
    if probe.row_count() != size {
        return Err(unsupported());
    }
    let mut kappa = Vec::new();
    for (i, &(s, l)) in probe.rows().iter().enumerate() {
        if s != i + 1 || l == 0 || l > size - i {
            return Err(unsupported());
        }
        kappa.push(size - i - l);
    }
    let kappa = Partition::new(kappa).map_err(|_| unsupported())?;
    let region = CellRegion::truncated_staircase(size, &kappa).map_err(|_| unsupported())?;
    if same_cells(&region, cells) {
        Ok(region)
    } else {
        Err(unsupported())
    }
}

/// Validates that `cells` form `(cols^rows) \ kappa` and returns that region.
fn as_truncated_rectangle(cells: &mut Vec<Cell>, rows: usize, cols: usize) -> Result<CellRegion> {
    cells.sort_unstable();
    cells.dedup();
    let unsupported = || Error::InvalidParameter("pieces do not assemble into a truncated rectangle".into());
    let mut lens = alloc::vec![0usize; rows];
    for &(r, c) in cells.iter() {
        if r > rows || c > cols {
            return Err(unsupported());
        }
        lens[r - 1] += 1;
    }
    let kappa = Partition::new(lens.iter().map(|&l| cols - l).collect::<Vec<_>>()).map_err(|_| unsupported())?;
    let region = CellRegion::truncated_rectangle(rows, cols, &kappa).map_err(|_| unsupported())?;
    if same_cells(&region, cells) {
        Ok(region)
    } else {
        Err(unsupported())
    }
}

/// The truncated staircase assembled from `mu` (with `k` parts, all
/// greater than `m`): shifted `mu` in the top rows, the pivot right after
/// row `k` of `mu`, a copy of `[m]` below and the reflected copy of `mu`
/// along the right edge. Returns the region and its pivot.
pub fn staircase_pivot_region(mu: &StrictPartition, m: usize) -> Result<(CellRegion, Cell)> {
    let k = mu.len();
    if let Some(&part) = mu.parts().iter().find(|&&p| p <= m) {
        return Err(Error::PartTooSmall { part, bound: m });
    }
    if k == 0 {
        return Err(Error::InvalidParameter("mu must have at least one part".into()));
    }
    let size = m + 2 * k;
    let mu_cells: Vec<Cell> = CellRegion::shifted(mu).cells().collect();
    let pivot = (k, k + mu.parts()[k - 1]);
    let mut cells = mu_cells.clone();
    cells.push(pivot);
    for &c in &mu_cells {
        if c.0 > size || c.1 > size {
            return Err(Error::InvalidParameter("mu does not fit the staircase".into()));
        }
        cells.push(reflect(c, size, size));
    }
    cells.extend(CellRegion::shifted(&staircase(m)).cells().map(|(r, c)| (r + k, c + k)));
    let region = as_truncated_staircase(&mut cells, size)?;
    if region.size() != 2 * mu.size() + m * (m + 1) / 2 + 1 {
        return Err(Error::InvalidParameter("pieces of the staircase overlap".into()));
    }
    Ok((region, pivot))
}

/// The truncated rectangle assembled from `mu` (at most `k` parts): the
/// diagram of `mu + (n^k)` on top, the pivot right after its row `k`, the
/// box `(n^m)` below and the reflected diagram of `mu + (m^k)` on the right,
/// all inside `((n+k)^{m+k})`.
pub fn rect_pivot_region(mu: &Partition, k: usize, m: usize, n: usize) -> Result<(CellRegion, Cell)> {
    if k == 0 || mu.len() > k {
        return Err(Error::InvalidParameter("mu needs at most k parts, k >= 1".into()));
    }
    let (rows, cols) = (m + k, n + k);
    let top = mu.sum(&Partition::rectangle(k, n));
    let side = mu.sum(&Partition::rectangle(k, m));
    let pivot = (k, mu.part(k - 1) + n + 1);
    let mut cells: Vec<Cell> = CellRegion::ordinary(&top).cells().collect();
    cells.push(pivot);
    for (r, c) in CellRegion::ordinary(&side).cells() {
        // side lives in the reflected (cols x rows) box
        if r > cols || c > rows {
            return Err(Error::InvalidParameter("mu does not fit the rectangle".into()));
        }
        cells.push(reflect((r, c), cols, rows));
    }
    cells.extend(CellRegion::ordinary(&Partition::rectangle(m, n)).cells().map(|(r, c)| (r + k, c)));
    let region = as_truncated_rectangle(&mut cells, rows, cols)?;
    if region.size() != top.size() + side.size() + m * n + 1 {
        return Err(Error::InvalidParameter("pieces of the rectangle overlap".into()));
    }
    Ok((region, pivot))
}

/// Checks `g^zeta = sum_{lam ⊆ [m]} g^{mu ∪ lam} g^{mu ∪ lam^c}` on the
/// region of [`staircase_pivot_region`], term by term when small.
pub fn verify_pivot_identity_staircase(mu: &StrictPartition, m: usize) -> Result<PivotReport> {
    let (region, pivot) = staircase_pivot_region(mu, m)?;
    let mut expected = Vec::new();
    for lam in strict_subsets_of_staircase(m) {
        let first = mu.union(&lam)?;
        let second = mu.union(&complement_in_staircase(&lam, m)?)?;
        let value = schur_count(&first) * schur_count(&second);
        expected.push((ShapeSpec::Shifted(first), ShapeSpec::Shifted(second), value));
    }
    Ok(check_terms(region, pivot, expected))
}

/// Checks `f^zeta = sum_{lam ⊆ (n^m)} f^{(mu+(n^k)) ∪ lam} f^{(mu+(m^k)) ∪ lam^c}`
/// on the region of [`rect_pivot_region`], term by term when small.
pub fn verify_pivot_identity_rect(mu: &Partition, k: usize, m: usize, n: usize) -> Result<PivotReport> {
    let (region, pivot) = rect_pivot_region(mu, k, m, n)?;
    let top = mu.sum(&Partition::rectangle(k, n));
    let side = mu.sum(&Partition::rectangle(k, m));
    let mut expected = Vec::new();
    for lam in partitions_in_box(m, n) {
        let first = top.union(&lam);
        let second = side.union(&complement_in_rectangle(&lam, m, n)?);
        let value = frobenius_young(&first) * frobenius_young(&second);
        expected.push((ShapeSpec::Ordinary(first), ShapeSpec::Ordinary(second), value));
    }
    Ok(check_terms(region, pivot, expected))
}
