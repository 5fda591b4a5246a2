use std::io::{self, Write};

use syt_core::{ExactCount, Tableau};

/// Digits beyond which a count also shows its length.
pub const LONG_COUNT: usize = 80;

/// Full decimal expansion; long values get a digit count appended.
pub fn count(v: &ExactCount) -> String {
    let s = v.to_string();
    if s.len() > LONG_COUNT {
        format!("{s} ({} digits)", s.len())
    } else {
        s
    }
}

/// Writes a tableau as a grid. Cells are right-aligned to a common width
/// and each row is indented to its first column, so shifted and truncated
/// shapes keep their geometry. A row with no cells prints as `.`.
pub fn grid(out: &mut impl Write, t: &Tableau) -> io::Result<()> {
    let w = t.size().max(1).to_string().len();
    for (&(start, len), labels) in t.region().rows().iter().zip(t.rows()) {
        if len == 0 {
            writeln!(out, ".")?;
            continue;
        }
        let cells: Vec<String> = labels.iter().map(|l| format!("{l:>w$}")).collect();
        writeln!(out, "{}{}", " ".repeat((start - 1) * (w + 1)), cells.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use syt_core::{CellRegion, Partition};

    #[test]
    fn long_counts_show_digits() {
        assert_eq!(count(&ExactCount::from(12u8)), "12");
        let big = ExactCount::from(10u8).pow(80);
        assert!(count(&big).ends_with(" (81 digits)"));
        assert!(!count(&(big - 1u8)).contains("digits"));
    }

    #[test]
    fn grid_keeps_the_staircase_indent() {
        let r = CellRegion::truncated_staircase(4, &Partition::new(vec![1]).unwrap()).unwrap();
        let t = Tableau::new(r, vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8], vec![9]]).unwrap();
        let mut out = Vec::new();
        grid(&mut out, &t).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "1 2 3\n  4 5 6\n    7 8\n      9\n");
    }
}
