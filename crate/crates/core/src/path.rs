//! Rational `(m, n)`-Dyck paths.
//!
//! A path runs from `(0, 0)` to `(m, n)` by unit north and east steps and
//! stays weakly above the rectangle diagonal `y = (n/m) x`. Paths are stored
//! by their east-step heights: `heights[a - 1]` is the number of north steps
//! taken before the `a`-th east step. Everything else (the step word, the
//! Ferrers shape above the path, arms and legs) is derived from that.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Smallest admissible height of the `column`-th east step, `ceil(column * n / m)`.
pub fn min_height(m: usize, n: usize, column: usize) -> usize {
    (column * n).div_ceil(m)
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroDimension { m, n });
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok(())
}

/// A lattice cell, 1-indexed, column first, rows counted bottom to top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    pub column: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(column: usize, row: usize) -> Self {
        Cell { column, row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.column, self.row)
    }
}

/// A validated `(m, n)`-Dyck path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    m: usize,
    n: usize,
    heights: Vec<usize>,
}

impl DyckPath {
    /// Builds a path from its east-step heights, checking every invariant.
    pub fn new(m: usize, n: usize, heights: Vec<usize>) -> Result<Self> {
        check_dims(m, n)?;
        if heights.len() != m {
            return Err(Error::WrongLength {
                expected: m,
                got: heights.len(),
            });
        }
        let monotone = heights.windows(2).all(|w| w[0] <= w[1]);
        if !monotone || heights.iter().any(|&y| y > n) {
            return Err(Error::NotMonotone { n, heights });
        }
        for (i, &height) in heights.iter().enumerate() {
            let min = min_height(m, n, i + 1);
            if height < min {
                return Err(Error::BelowDiagonal {
                    column: i + 1,
                    height,
                    min,
                });
            }
        }
        Ok(DyckPath { m, n, heights })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// East-step heights `y_1 <= ... <= y_m`.
    pub fn east_heights(&self) -> &[usize] {
        &self.heights
    }

    /// Height of the east step in `column` (1-indexed).
    pub fn height(&self, column: usize) -> usize {
        self.heights[column - 1]
    }

    /// The step word over `{N, E}`.
    pub fn steps(&self) -> String {
        let mut out = String::with_capacity(self.m + self.n);
        let mut y = 0;
        for &h in &self.heights {
            out.extend(std::iter::repeat_n('N', h - y));
            out.push('E');
            y = h;
        }
        out.extend(std::iter::repeat_n('N', self.n - y));
        out
    }

    /// Parses a step word. `m` and `n` are the counts of `E` and `N`.
    pub fn parse(word: &str) -> Result<Self> {
        let mut heights = Vec::new();
        let mut y = 0;
        for (position, ch) in word.chars().enumerate() {
            match ch {
                'N' => y += 1,
                'E' => heights.push(y),
                _ => return Err(Error::BadCharacter { ch, position }),
            }
        }
        DyckPath::new(heights.len(), y, heights)
    }

    /// The Ferrers shape of cells lying above the path.
    pub fn cells_above(&self) -> FerrersShape {
        FerrersShape {
            rows: self.n,
            columns: self.heights.iter().map(|&y| self.n - y).collect(),
        }
    }

    /// Whether `cell` lies above the path (inside the lattice).
    pub fn is_above(&self, cell: Cell) -> bool {
        (1..=self.m).contains(&cell.column)
            && cell.row <= self.n
            && cell.row > self.height(cell.column)
    }

    fn require_above(&self, cell: Cell) -> Result<()> {
        if self.is_above(cell) {
            Ok(())
        } else {
            Err(Error::CellNotAboveThePath(cell))
        }
    }

    /// Shape cells strictly east of `cell` in the same row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.require_above(cell)?;
        Ok(self.heights[cell.column..]
            .iter()
            .filter(|&&y| y < cell.row)
            .count())
    }

    /// Shape cells strictly south of `cell` in the same column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.require_above(cell)?;
        Ok(cell.row - self.height(cell.column) - 1)
    }

    /// Reflection across the rectangle diagonal: reverse the step word and
    /// swap `N` with `E`. The result is an `(n, m)`-path.
    pub fn transpose(&self) -> DyckPath {
        let word: String = self
            .steps()
            .chars()
            .rev()
            .map(|c| if c == 'N' { 'E' } else { 'N' })
            .collect();
        DyckPath::parse(&word).expect("transpose of a Dyck path is a Dyck path")
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.steps())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

/// Convenience wrapper around [`DyckPath::new`].
pub fn make_path(m: usize, n: usize, east_heights: Vec<usize>) -> Result<DyckPath> {
    DyckPath::new(m, n, east_heights)
}

/// English Ferrers diagram of the cells above a path, stored as column
/// lengths `c_1 >= c_2 >= ... >= c_m`. Column `a` occupies the top `c_a` rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersShape {
    rows: usize,
    columns: Vec<usize>,
}

impl FerrersShape {
    pub fn column_counts(&self) -> &[usize] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.column >= 1
            && cell.column <= self.columns.len()
            && cell.row <= self.rows
            && cell.row + self.columns[cell.column - 1] > self.rows
    }

    /// Cells of the shape, column by column, bottom to top.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let rows = self.rows;
        self.columns
            .iter()
            .enumerate()
            .flat_map(move |(i, &c)| (rows - c + 1..=rows).map(move |row| Cell::new(i + 1, row)))
    }
}

/// All `(m, n)`-Dyck paths in lexicographic order of east-step heights.
pub fn enumerate_paths(m: usize, n: usize) -> Result<Paths> {
    check_dims(m, n)?;
    let heights = (1..=m).map(|a| min_height(m, n, a)).collect();
    Ok(Paths {
        m,
        n,
        next: Some(heights),
    })
}

/// Iterator returned by [`enumerate_paths`].
#[derive(Debug, Clone)]
pub struct Paths {
    m: usize,
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for Paths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        // rightmost height that can still grow; the last one is pinned at n
        if let Some(i) = (0..self.m).rev().find(|&i| current[i] < self.n) {
            let mut succ = current.clone();
            succ[i] += 1;
            for j in i + 1..self.m {
                succ[j] = succ[i].max(min_height(self.m, self.n, j + 1));
            }
            self.next = Some(succ);
        }
        Some(DyckPath {
            m: self.m,
            n: self.n,
            heights: current,
        })
    }
}

/// `binomial(m + n, m) / (m + n)`, the number of `(m, n)`-Dyck paths for coprime `m, n`.
pub fn rational_catalan_number(m: usize, n: usize) -> u128 {
    let total = (m + n) as u128;
    let mut binom: u128 = 1;
    for i in 0..m.min(n) as u128 {
        binom = binom * (total - i) / (i + 1);
    }
    binom / total
}
