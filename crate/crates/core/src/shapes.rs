//! Partitions and the cell regions built from them.
//!
//! Cells are addressed as 1-based `(row, column)` pairs in English
//! orientation: row 1 is on top and columns grow to the right.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A cell of a diagram, `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// A weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so `(2,1,0)` and `(2,1)`
/// are the same value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(width^rows)`.
    pub fn rectangle(rows: usize, width: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition { parts: vec![width; rows] }
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts zero-padded (or kept) to at least `k` entries.
    pub fn padded(&self, k: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Componentwise sum after zero-padding to a common length.
    pub fn sum(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        let parts = (0..k).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.last() == Some(&0) {
            return Err(Error::NotStrict);
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    /// Builds the strict partition whose part set is `set` (any order, no zeros).
    pub fn from_set(set: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = set.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Union of part sets; fails if a part occurs in both.
    pub fn union(&self, other: &StrictPartition) -> Result<StrictPartition> {
        if let Some(&p) = self.parts.iter().find(|p| other.parts.contains(p)) {
            return Err(Error::StrictnessViolation(p));
        }
        Self::from_set(self.parts.iter().chain(&other.parts).copied())
    }

    pub fn to_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// The shifted staircase `[m] = (m, m-1, ..., 1)`.
pub fn staircase(m: usize) -> StrictPartition {
    StrictPartition { parts: (1..=m).rev().collect() }
}

/// Set complement of `lam` inside `{1..m}`.
pub fn complement_in_staircase(lam: &StrictPartition, m: usize) -> Result<StrictPartition> {
    if lam.parts.iter().any(|&p| p > m) {
        return Err(Error::NotContained);
    }
    StrictPartition::from_set((1..=m).filter(|p| !lam.parts.contains(p)))
}

/// The partner `lam^c ⊆ (m^n)` of `lam ⊆ (n^m)`: `lam^c + [n]` is the
/// complement of `lam + [m]` in `[m + n]`.
pub fn complement_in_rectangle(lam: &Partition, m: usize, n: usize) -> Result<Partition> {
    if !Partition::rectangle(m, n).contains(lam) && !lam.is_empty() {
        return Err(Error::NotContained);
    }
    // lam + [m], as a set of values in 1..=m+n
    let shifted: Vec<usize> = (0..m).map(|i| lam.part(i) + m - i).collect();
    let rest: Vec<usize> = (1..=m + n).rev().filter(|v| !shifted.contains(v)).collect();
    debug_assert_eq!(rest.len(), n);
    let parts: Vec<usize> = rest.iter().enumerate().map(|(j, &v)| v - (n - j)).collect();
    Partition::new(parts)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All strict partitions of `n`.
pub fn strict_partitions_of(n: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rem == 0 {
            out.push(StrictPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions fitting in `(n^m)`: at most `m` parts, each at most `n`.
///
/// These are the monotone lattice paths across an `m x n` box.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if cur.len() == rows {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition { parts });
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    rec(m, n, &mut cur, &mut out);
    out
}

/// All strict partitions whose parts lie in `{1..m}`, i.e. subsets of `[m]`.
pub fn strict_subsets_of_staircase(m: usize) -> Vec<StrictPartition> {
    (0u64..1 << m)
        .map(|mask| StrictPartition {
            parts: (1..=m).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect(),
        })
        .collect()
}

/// Which construction produced a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    Ordinary,
    Shifted,
    TruncatedStaircase,
    TruncatedRectangle,
    /// Any other region with interval rows, e.g. a rotated shape or one half
    /// of a pivot split.
    General,
}

/// A finite set of cells whose rows are contiguous intervals, ordered by
/// left-to-right along rows, top-to-bottom down columns, plus any extra
/// precedences (the main diagonal for shifted shapes).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellRegion {
    /// `(start_column, length)` per row; a length of zero is an empty row.
    rows: Vec<(usize, usize)>,
    /// Sorted, deduplicated `(smaller, larger)` pairs.
    extra: Vec<(Cell, Cell)>,
    kind: RegionKind,
}

impl CellRegion {
    fn from_parts(rows: Vec<(usize, usize)>, mut extra: Vec<(Cell, Cell)>, kind: RegionKind) -> Self {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.1 == 0) {
            rows.pop();
        }
        extra.sort_unstable();
        extra.dedup();
        CellRegion { rows, extra, kind }
    }

    fn diagonal_pairs(rows: &[(usize, usize)]) -> Vec<(Cell, Cell)> {
        let has = |r: usize, c: usize| {
            rows.get(r - 1).is_some_and(|&(s, l)| l > 0 && s <= c && c < s + l)
        };
        (1..rows.len())
            .filter(|&i| has(i, i) && has(i + 1, i + 1))
            .map(|i| ((i, i), (i + 1, i + 1)))
            .collect()
    }

    /// Ferrers diagram of `lam`.
    pub fn ordinary(lam: &Partition) -> Self {
        let rows = lam.parts.iter().map(|&p| (1, p)).collect();
        Self::from_parts(rows, Vec::new(), RegionKind::Ordinary)
    }

    /// Shifted diagram of `lam`: row `i` starts in column `i`.
    pub fn shifted(lam: &StrictPartition) -> Self {
        let rows: Vec<_> = lam.parts.iter().enumerate().map(|(i, &p)| (i + 1, p)).collect();
        let extra = Self::diagonal_pairs(&rows);
        Self::from_parts(rows, extra, RegionKind::Shifted)
    }

    /// `[m] \ kappa`: `kappa_i` cells removed from the end of row `i`.
    ///
    /// Requires `kappa_i <= m - i` for `1 <= i <= k < m`, `k` the number of
    /// nonzero parts of `kappa`. An empty `kappa` gives the plain staircase.
    pub fn truncated_staircase(m: usize, kappa: &Partition) -> Result<Self> {
        let k = kappa.len();
        if k == 0 {
            return Ok(Self::shifted(&staircase(m)));
        }
        if k >= m {
            return Err(Error::InvalidTruncation(format!(
                "kappa has {k} parts, staircase [{m}] allows fewer than {m}"
            )));
        }
        for i in 1..=k {
            if kappa.part(i - 1) > m - i {
                return Err(Error::InvalidTruncation(format!(
                    "kappa_{i} = {} exceeds {}",
                    kappa.part(i - 1),
                    m - i
                )));
            }
        }
        let rows: Vec<_> = (1..=m).map(|i| (i, m - i + 1 - kappa.part(i - 1))).collect();
        let extra = Self::diagonal_pairs(&rows);
        Ok(Self::from_parts(rows, extra, RegionKind::TruncatedStaircase))
    }

    /// `(n^m) \ kappa`: `m` rows of length `n`, `kappa_i` cells removed from
    /// the end of row `i`. An empty `kappa` gives the plain rectangle.
    pub fn truncated_rectangle(m: usize, n: usize, kappa: &Partition) -> Result<Self> {
        if !Partition::rectangle(m, n).contains(kappa) {
            return Err(Error::InvalidTruncation(format!(
                "kappa = {kappa} does not fit in ({n}^{m})"
            )));
        }
        if kappa.is_empty() {
            return Ok(Self::ordinary(&Partition::rectangle(m, n)));
        }
        let rows = (0..m).map(|i| (1, n - kappa.part(i))).collect();
        Ok(Self::from_parts(rows, Vec::new(), RegionKind::TruncatedRectangle))
    }

    /// A general region from an explicit cell list. Rows must be intervals;
    /// `extra` pairs must reference cells of the region.
    pub fn from_cells(cells: &[Cell], extra: Vec<(Cell, Cell)>) -> Result<Self> {
        let mut by_row: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in cells {
            if r == 0 || c == 0 {
                return Err(Error::InvalidParameter(format!("cell ({r},{c}) is not 1-based")));
            }
            by_row.entry(r).or_default().push(c);
        }
        let max_row = by_row.keys().next_back().copied().unwrap_or(0);
        let mut rows = vec![(1, 0); max_row];
        for (r, mut cols) in by_row {
            cols.sort_unstable();
            cols.dedup();
            let start = cols[0];
            if cols.iter().enumerate().any(|(j, &c)| c != start + j) {
                return Err(Error::InvalidParameter(format!("row {r} is not an interval")));
            }
            rows[r - 1] = (start, cols.len());
        }
        let region = Self::from_parts(rows, extra, RegionKind::General);
        if region.extra.iter().any(|(a, b)| !region.contains(*a) || !region.contains(*b)) {
            return Err(Error::InvalidParameter("precedence references a missing cell".into()));
        }
        Ok(region)
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    /// Number of rows, including empty rows above the last nonempty one.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// `(start_column, length)` of row `r` (1-based).
    pub fn row(&self, r: usize) -> (usize, usize) {
        self.rows.get(r.wrapping_sub(1)).copied().unwrap_or((1, 0))
    }

    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    /// Inclusive column interval of row `r`, `None` for an empty row.
    pub fn row_interval(&self, r: usize) -> Option<(usize, usize)> {
        let (s, l) = self.row(r);
        (l > 0).then(|| (s, s + l - 1))
    }

    pub fn extra_precedences(&self) -> &[(Cell, Cell)] {
        &self.extra
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Largest column index used by any row.
    pub fn width(&self) -> usize {
        self.rows.iter().filter(|r| r.1 > 0).map(|r| r.0 + r.1 - 1).max().unwrap_or(0)
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        let (s, l) = self.row(r);
        l > 0 && s <= c && c < s + l
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &(s, l))| (s..s + l).map(move |c| (i + 1, c)))
    }

    /// Cells that must carry a smaller label than `cell`: its left and upper
    /// neighbours plus any extra precedence ending at it.
    pub fn predecessors(&self, (r, c): Cell) -> Vec<Cell> {
        let mut out = Vec::with_capacity(3);
        if c > 1 && self.contains((r, c - 1)) {
            out.push((r, c - 1));
        }
        if r > 1 && self.contains((r - 1, c)) {
            out.push((r - 1, c));
        }
        out.extend(self.extra.iter().filter(|(_, b)| *b == (r, c)).map(|(a, _)| *a));
        out
    }

    /// The same cells with the extra precedences dropped.
    pub fn without_extra_precedences(&self) -> Self {
        CellRegion { rows: self.rows.clone(), extra: Vec::new(), kind: RegionKind::General }
    }

    /// Rotation by 180 degrees inside the bounding box; precedences reverse.
    pub fn rotated(&self) -> Self {
        let (h, w) = (self.row_count(), self.width());
        let rot = |(r, c): Cell| (h + 1 - r, w + 1 - c);
        let rows = (1..=h)
            .rev()
            .map(|r| match self.row_interval(r) {
                Some((s, e)) => (w + 1 - e, e + 1 - s),
                None => (1, 0),
            })
            .collect();
        let extra = self.extra.iter().map(|&(a, b)| (rot(b), rot(a))).collect();
        Self::from_parts(rows, extra, RegionKind::General)
    }

    /// `Some(m)` if the region is the full shifted staircase `[m]`.
    pub fn as_full_staircase(&self) -> Option<usize> {
        let m = self.row_count();
        let geometric = self.rows.iter().enumerate().all(|(i, &(s, l))| s == i + 1 && l == m - i);
        let shifted = matches!(self.kind, RegionKind::Shifted | RegionKind::TruncatedStaircase);
        (geometric && shifted).then_some(m)
    }

    /// `Some((m, n))` if the region is the full rectangle `(n^m)`.
    pub fn as_full_rectangle(&self) -> Option<(usize, usize)> {
        let m = self.row_count();
        let n = self.row(1).1;
        let geometric = self.rows.iter().all(|&(s, l)| s == 1 && l == n);
        let plain = matches!(self.kind, RegionKind::Ordinary | RegionKind::TruncatedRectangle);
        (geometric && plain && self.extra.is_empty()).then_some((m, n))
    }
}

/// Descriptor of a shape, the input to [`ShapeSpec::build_region`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ShapeSpec {
    /// Ferrers diagram of a partition.
    Ordinary(Partition),
    /// Shifted diagram of a strict partition.
    Shifted(StrictPartition),
    /// `[m] \ kappa`.
    Staircase { m: usize, kappa: Partition },
    /// `(n^m) \ kappa`: `m` rows, `n` columns.
    Rectangle { m: usize, n: usize, kappa: Partition },
}

impl ShapeSpec {
    pub fn build_region(&self) -> Result<CellRegion> {
        match self {
            ShapeSpec::Ordinary(lam) => Ok(CellRegion::ordinary(lam)),
            ShapeSpec::Shifted(lam) => Ok(CellRegion::shifted(lam)),
            ShapeSpec::Staircase { m, kappa } => CellRegion::truncated_staircase(*m, kappa),
            ShapeSpec::Rectangle { m, n, kappa } => CellRegion::truncated_rectangle(*m, *n, kappa),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Writes the descriptor form: `part:3,3,2`, `shifted:4,1`, `stair:4/1`,
/// `rect:6x7/2`.
impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeSpec::Ordinary(lam) => {
                f.write_str("part:")?;
                write_list(f, lam.parts())
            }
            ShapeSpec::Shifted(lam) => {
                f.write_str("shifted:")?;
                write_list(f, lam.parts())
            }
            ShapeSpec::Staircase { m, kappa } => {
                write!(f, "stair:{m}")?;
                if !kappa.is_empty() {
                    f.write_str("/")?;
                    write_list(f, kappa.parts())?;
                }
                Ok(())
            }
            ShapeSpec::Rectangle { m, n, kappa } => {
                write!(f, "rect:{m}x{n}")?;
                if !kappa.is_empty() {
                    f.write_str("/")?;
                    write_list(f, kappa.parts())?;
                }
                Ok(())
            }
        }
    }
}

fn parse_int(s: &str, whole: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidSpec(format!("`{whole}`: expected an integer, found `{s}`")));
    }
    s.parse().map_err(|_| Error::InvalidSpec(format!("`{whole}`: `{s}` is too large")))
}

fn parse_ints(s: &str, whole: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| parse_int(x, whole)).collect()
}

/// Parses a descriptor. Integers are comma-separated without spaces; an
/// empty list denotes the empty partition. Only the syntax and the partition
/// conditions are checked here; whether a truncation fits is checked by
/// [`ShapeSpec::build_region`].
impl core::str::FromStr for ShapeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("`{s}`: missing `kind:`")))?;
        let truncation = |body: &str| -> Result<(String, Partition)> {
            match body.split_once('/') {
                Some((head, k)) => Ok((head.into(), Partition::new(parse_ints(k, s)?)?)),
                None => Ok((body.into(), Partition::empty())),
            }
        };
        match kind {
            "part" => Ok(ShapeSpec::Ordinary(Partition::new(parse_ints(rest, s)?)?)),
            "shifted" => Ok(ShapeSpec::Shifted(StrictPartition::new(parse_ints(rest, s)?)?)),
            "stair" => {
                let (head, kappa) = truncation(rest)?;
                Ok(ShapeSpec::Staircase { m: parse_int(&head, s)?, kappa })
            }
            "rect" => {
                let (head, kappa) = truncation(rest)?;
                let (m, n) = head
                    .split_once('x')
                    .ok_or_else(|| Error::InvalidSpec(format!("`{s}`: expected `rect:<m>x<n>`")))?;
                Ok(ShapeSpec::Rectangle { m: parse_int(m, s)?, n: parse_int(n, s)?, kappa })
            }
            other => Err(Error::InvalidSpec(format!("`{s}`: unknown kind `{other}`"))),
        }
    }
}

/// A labeling of the cells of a region, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    region: CellRegion,
    labels: Vec<Vec<usize>>,
}

impl Tableau {
    /// Pairs a region with per-row labels. Only the row lengths are checked
    /// here; see [`crate::is_valid_tableau`] for the ordering conditions.
    pub fn new(region: CellRegion, labels: Vec<Vec<usize>>) -> Result<Self> {
        let mut labels = labels;
        while labels.len() > region.row_count() && labels.last().is_some_and(|r| r.is_empty()) {
            labels.pop();
        }
        if labels.len() > region.row_count() {
            return Err(Error::ShapeMismatch);
        }
        labels.resize(region.row_count(), Vec::new());
        if labels.iter().zip(region.rows()).any(|(l, r)| l.len() != r.1) {
            return Err(Error::ShapeMismatch);
        }
        Ok(Tableau { region, labels })
    }

    /// Builds a tableau from `(cell, label)` pairs covering the region.
    pub fn from_cell_labels(region: CellRegion, entries: &[(Cell, usize)]) -> Result<Self> {
        let mut labels: Vec<Vec<usize>> = region.rows().iter().map(|r| vec![0; r.1]).collect();
        let mut seen = 0;
        for &((r, c), v) in entries {
            if !region.contains((r, c)) {
                return Err(Error::ShapeMismatch);
            }
            let (s, _) = region.row(r);
            labels[r - 1][c - s] = v;
            seen += 1;
        }
        if seen != region.size() {
            return Err(Error::ShapeMismatch);
        }
        Ok(Tableau { region, labels })
    }

    pub fn region(&self) -> &CellRegion {
        &self.region
    }

    /// Labels of each row, left to right.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.region.size()
    }

    pub fn label_at(&self, (r, c): Cell) -> Option<usize> {
        if !self.region.contains((r, c)) {
            return None;
        }
        let (s, _) = self.region.row(r);
        Some(self.labels[r - 1][c - s])
    }

    /// `(cell, label)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.region.cells().map(move |cell| (cell, self.label_at(cell).unwrap_or(0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_rules() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(Partition::new(vec![1, 2]), Err(Error::NotAPartition));
        assert_eq!(StrictPartition::new(vec![2, 2]), Err(Error::NotStrict));
        assert_eq!(StrictPartition::new(vec![2, 0]), Err(Error::NotStrict));
        assert!(StrictPartition::new(Vec::new()).unwrap().is_empty());
    }

    #[test]
    fn union_examples() {
        assert_eq!(p(&[3, 1]).union(&p(&[2])), p(&[3, 2, 1]));
        assert_eq!(p(&[5, 4]).union(&Partition::empty()), p(&[5, 4]));
        assert_eq!(sp(&[3, 1]).union(&sp(&[2])).unwrap(), sp(&[3, 2, 1]));
        assert_eq!(sp(&[3, 1]).union(&sp(&[1])), Err(Error::StrictnessViolation(1)));
        // the usual "parts of one above the other" layout is not required
        assert_eq!(p(&[1]).union(&p(&[4, 2])), p(&[4, 2, 1]));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(p(&[2, 1]).sum(&p(&[1, 1])), p(&[3, 2]));
        assert_eq!(p(&[1]).sum(&staircase(2).to_partition()), p(&[3, 1]));
        assert_eq!(p(&[4, 2]).sum(&Partition::empty()), p(&[4, 2]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::rectangle(3, 5).conjugate(), Partition::rectangle(5, 3));
    }

    #[test]
    fn staircase_examples() {
        assert!(staircase(0).is_empty());
        assert_eq!(staircase(3), sp(&[3, 2, 1]));
        for m in 0..10 {
            assert_eq!(staircase(m).size(), m * (m + 1) / 2);
        }
    }

    #[test]
    fn staircase_complement_examples() {
        assert_eq!(complement_in_staircase(&sp(&[3, 1]), 3).unwrap(), sp(&[2]));
        assert_eq!(complement_in_staircase(&StrictPartition::empty(), 3).unwrap(), sp(&[3, 2, 1]));
        assert!(complement_in_staircase(&staircase(5), 5).unwrap().is_empty());
        assert_eq!(complement_in_staircase(&sp(&[4]), 3), Err(Error::NotContained));
    }

    #[test]
    fn rectangle_complement_examples() {
        assert_eq!(complement_in_rectangle(&p(&[1]), 2, 2).unwrap(), p(&[2, 1]));
        assert_eq!(complement_in_rectangle(&Partition::empty(), 1, 1).unwrap(), p(&[1]));
        assert!(complement_in_rectangle(&Partition::rectangle(3, 4), 3, 4).unwrap().is_empty());
        assert_eq!(complement_in_rectangle(&p(&[3]), 2, 2), Err(Error::NotContained));
        assert_eq!(complement_in_rectangle(&p(&[1, 1, 1]), 2, 2), Err(Error::NotContained));
    }

    #[test]
    fn build_region_examples() {
        let r = CellRegion::truncated_staircase(4, &p(&[1])).unwrap();
        let lens: Vec<_> = r.rows().iter().map(|x| x.1).collect();
        assert_eq!(lens, vec![3, 3, 2, 1]);
        assert!(r.rows().iter().enumerate().all(|(i, x)| x.0 == i + 1));
        assert_eq!(r.size(), 9);

        let r = CellRegion::truncated_rectangle(6, 7, &p(&[2])).unwrap();
        let lens: Vec<_> = r.rows().iter().map(|x| x.1).collect();
        assert_eq!(lens, vec![5, 7, 7, 7, 7, 7]);
        assert_eq!(r.size(), 40);

        let r = CellRegion::ordinary(&p(&[1]));
        assert_eq!(r.cells().collect::<Vec<_>>(), vec![(1, 1)]);
    }

    #[test]
    fn truncation_bounds() {
        assert!(matches!(
            CellRegion::truncated_staircase(3, &p(&[1, 1, 1])),
            Err(Error::InvalidTruncation(_))
        ));
        assert!(matches!(
            CellRegion::truncated_staircase(4, &p(&[4])),
            Err(Error::InvalidTruncation(_))
        ));
        assert!(CellRegion::truncated_staircase(4, &p(&[3])).is_ok());
        assert!(matches!(
            CellRegion::truncated_rectangle(2, 2, &p(&[3])),
            Err(Error::InvalidTruncation(_))
        ));
        // a fully removed first row leaves an empty row in place
        let r = CellRegion::truncated_rectangle(2, 2, &p(&[2])).unwrap();
        assert_eq!(r.row_interval(1), None);
        assert_eq!(r.row_interval(2), Some((1, 2)));
    }

    #[test]
    fn shifted_regions_carry_diagonal() {
        let r = CellRegion::shifted(&sp(&[3, 2]));
        assert_eq!(r.extra_precedences(), &[((1, 1), (2, 2))]);
        let r = CellRegion::truncated_staircase(3, &p(&[2])).unwrap();
        assert_eq!(r.extra_precedences(), &[((1, 1), (2, 2)), ((2, 2), (3, 3))]);
        assert_eq!(r.predecessors((2, 2)), vec![(1, 1)]);
    }

    #[test]
    fn rotation_is_an_involution_up_to_kind() {
        let r = CellRegion::truncated_staircase(5, &p(&[2, 1])).unwrap();
        let back = r.rotated().rotated();
        assert_eq!(back.rows(), r.rows());
        assert_eq!(back.extra_precedences(), r.extra_precedences());
    }

    #[test]
    fn from_cells_rejects_gaps() {
        assert!(CellRegion::from_cells(&[(1, 1), (1, 3)], Vec::new()).is_err());
        let r = CellRegion::from_cells(&[(2, 2), (2, 3), (1, 1)], Vec::new()).unwrap();
        assert_eq!(r.rows(), &[(1, 1), (2, 2)]);
    }

    #[test]
    fn generators_have_expected_sizes() {
        let counts: Vec<_> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let strict: Vec<_> = (0..10).map(|n| strict_partitions_of(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        // binomial(m + n, m) lattice paths
        assert_eq!(partitions_in_box(3, 4).len(), 35);
        assert_eq!(strict_subsets_of_staircase(4).len(), 16);
    }

    #[test]
    fn descriptor_round_trip() {
        use alloc::string::ToString;
        for text in ["part:3,3,2", "part:", "shifted:4,1", "stair:4/1", "stair:5", "rect:6x7/2", "rect:3x3/2,1"] {
            let spec: ShapeSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let stair: ShapeSpec = "stair:4/1".parse().unwrap();
        assert_eq!(stair, ShapeSpec::Staircase { m: 4, kappa: p(&[1]) });
        assert_eq!(stair.build_region().unwrap().size(), 9);
        let rect: ShapeSpec = "rect:6x7/2".parse().unwrap();
        assert_eq!(rect.build_region().unwrap().size(), 40);
        for bad in ["", "part", "part:1,,2", "part: 1", "rect:3/1", "rect:3x", "stair:x", "box:2", "part:-1"] {
            assert!(matches!(bad.parse::<ShapeSpec>(), Err(Error::InvalidSpec(_))), "{bad}");
        }
        assert_eq!("part:1,2".parse::<ShapeSpec>(), Err(Error::NotAPartition));
        assert_eq!("shifted:2,2".parse::<ShapeSpec>(), Err(Error::NotStrict));
    }
}
