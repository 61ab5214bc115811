//! Rank words of the three-column lattice `L(3, n)`.
//!
//! Cell `(a, b)` of the lattice carries the rank `-a*n + 3(b - 1)`. The rank
//! word lists the positive ranks in increasing order; ranks from the first
//! column are colored 1 and ranks from the second column are colored 2 (the
//! third column has no positive ranks). Marking a word from a path boxes the
//! entries whose cells lie above the path.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{Cell, DyckPath};

/// The rank `-a*n + 3(b - 1)` of cell `(a, b)` in `L(3, n)`.
pub fn rank(column: usize, row: usize, n: usize) -> Result<i64> {
    if !(1..=3).contains(&column) || !(1..=n).contains(&row) {
        return Err(Error::CellOutOfBounds {
            cell: Cell::new(column, row),
            m: 3,
            n,
        });
    }
    Ok(3 * (row as i64 - 1) - (column * n) as i64)
}

pub(crate) fn check_residue(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension { m: 3, n });
    }
    if n.is_multiple_of(3) {
        return Err(Error::BadResidue(n));
    }
    Ok(())
}

pub(crate) fn check_path(p: &DyckPath) -> Result<()> {
    if p.m() != 3 {
        return Err(Error::UnsupportedM(p.m()));
    }
    check_residue(p.n())
}

/// Which lattice column an entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "u8")]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn column(self) -> usize {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.column() as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RankEntry {
    pub rank: usize,
    pub color: Color,
    pub boxed: bool,
}

impl RankEntry {
    /// The lattice cell holding this rank in `L(3, n)`.
    pub fn cell(&self, n: usize) -> Cell {
        let column = self.color.column();
        Cell::new(column, (self.rank + column * n) / 3 + 1)
    }
}

impl fmt::Display for RankEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxed {
            write!(f, "[{}_{}]", self.rank, self.color.column())
        } else {
            write!(f, "{}_{}", self.rank, self.color.column())
        }
    }
}

/// A rank word of `L(3, n)` with some entries boxed.
///
/// Text form: entries `<rank>_<color>` separated by single spaces, boxed
/// entries wrapped in brackets, e.g. `1_1 [2_2] 4_1 [7_1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedRankWord {
    n: usize,
    entries: Vec<RankEntry>,
}

impl MarkedRankWord {
    /// The unmarked rank word of `L(3, n)`.
    pub fn lattice(n: usize) -> Result<Self> {
        check_residue(n)?;
        // color 1: 0 < r < 2n, r = 2n mod 3; color 2: 0 < r < n, r = n mod 3
        let entries = (1..2 * n)
            .filter_map(|r| {
                let color = if r % 3 == (2 * n) % 3 {
                    Color::One
                } else if r < n && r % 3 == n % 3 {
                    Color::Two
                } else {
                    return None;
                };
                Some(RankEntry {
                    rank: r,
                    color,
                    boxed: false,
                })
            })
            .collect();
        Ok(MarkedRankWord { n, entries })
    }

    /// The lattice word of `L(3, n)` with exactly the given ranks boxed.
    pub fn with_boxed(n: usize, boxed: &[usize]) -> Result<Self> {
        let mut word = Self::lattice(n)?;
        for &r in boxed {
            let entry = word
                .entries
                .iter_mut()
                .find(|e| e.rank == r)
                .ok_or_else(|| Error::BadRankWord(format!("{r} is not a rank of L(3, {n})")))?;
            entry.boxed = true;
        }
        Ok(word)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Boxed ranks in increasing order.
    pub fn boxed_ranks(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.boxed)
            .map(|e| e.rank)
            .collect()
    }

    pub fn unboxed_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.boxed).count()
    }

    /// `(k, l)`: number of boxed color-1 and color-2 entries.
    pub fn boxed_counts(&self) -> (usize, usize) {
        self.entries
            .iter()
            .filter(|e| e.boxed)
            .fold((0, 0), |(k, l), e| match e.color {
                Color::One => (k + 1, l),
                Color::Two => (k, l + 1),
            })
    }

    /// Number of skips: maximal runs of unboxed entries with a boxed entry
    /// somewhere on each side.
    pub fn count_skips(&self) -> usize {
        let mut skips = 0;
        let mut seen_box = false;
        let mut open_run = false;
        for e in &self.entries {
            if e.boxed {
                if open_run {
                    skips += 1;
                    open_run = false;
                }
                seen_box = true;
            } else if seen_box {
                open_run = true;
            }
        }
        skips
    }

    /// Whether each color's boxed entries are exactly its rightmost ones.
    fn boxed_are_suffixes(&self) -> bool {
        [Color::One, Color::Two].into_iter().all(|color| {
            let mut seen_box = false;
            self.entries.iter().filter(|e| e.color == color).all(|e| {
                seen_box |= e.boxed;
                e.boxed || !seen_box
            })
        })
    }

    /// Recovers the `(3, n)`-path whose marking is this word.
    pub fn to_path(&self) -> Result<DyckPath> {
        if !self.boxed_are_suffixes() {
            return Err(Error::NotRealizable(format!(
                "boxed entries of some color are not its rightmost ones in {self}"
            )));
        }
        let (k, l) = self.boxed_counts();
        if k < l {
            return Err(Error::NotRealizable(format!(
                "{k} boxed color-1 entries but {l} boxed color-2 entries"
            )));
        }
        let n = self.n;
        DyckPath::new(3, n, vec![n - k, n - l, n])
    }
}

impl fmt::Display for MarkedRankWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for MarkedRankWord {
    type Err = Error;

    /// Parses the bracket text form. `n` is one more than the number of entries.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let n = tokens.len() + 1;
        let mut word = MarkedRankWord::lattice(n).map_err(|_| {
            Error::BadRankWord(format!("{} entries cannot form a rank word", n - 1))
        })?;
        for (token, entry) in tokens.iter().zip(word.entries.iter_mut()) {
            let (inner, boxed) = match token.strip_prefix('[') {
                Some(rest) => match rest.strip_suffix(']') {
                    Some(inner) => (inner, true),
                    None => {
                        return Err(Error::BadRankWord(format!("unclosed bracket in {token:?}")))
                    }
                },
                None => (*token, false),
            };
            let expected = format!("{}_{}", entry.rank, entry.color.column());
            if inner != expected {
                return Err(Error::BadRankWord(format!(
                    "expected {expected}, found {token:?}"
                )));
            }
            entry.boxed = boxed;
        }
        Ok(word)
    }
}

/// Unmarked rank word of `L(3, n)`.
pub fn lattice_rank_word(n: usize) -> Result<MarkedRankWord> {
    MarkedRankWord::lattice(n)
}

/// The rank word of a `(3, n)`-path: entries whose cells lie above the path are boxed.
pub fn mark_from_path(p: &DyckPath) -> Result<MarkedRankWord> {
    check_path(p)?;
    let mut word = MarkedRankWord::lattice(p.n())?;
    let n = p.n();
    for e in &mut word.entries {
        e.boxed = p.is_above(e.cell(n));
    }
    Ok(word)
}

pub fn count_skips(w: &MarkedRankWord) -> usize {
    w.count_skips()
}

pub fn boxed_counts(w: &MarkedRankWord) -> (usize, usize) {
    w.boxed_counts()
}

pub fn path_from_word(w: &MarkedRankWord) -> Result<DyckPath> {
    w.to_path()
}

/// `s <= a`, `s <= d` and `3` does not divide `a + s + d + 1`.
pub fn is_valid_triple(a: usize, s: usize, d: usize) -> bool {
    s <= a && s <= d && !(a + s + d + 1).is_multiple_of(3)
}

/// Rebuilds the marked rank word of the unique `(3, n)`-path with
/// `(area, skips, dinv) = (a, s, d)`, where `n = a + s + d + 1`.
///
/// Boxes the rightmost `d` entries, then `s` times: walk left over the run
/// of same-colored entries next to the cursor and box the entry after it.
pub fn omega(a: usize, s: usize, d: usize) -> Result<MarkedRankWord> {
    if !is_valid_triple(a, s, d) {
        return Err(Error::InvalidTriple { a, s, d });
    }
    let mut word = MarkedRankWord::lattice(a + s + d + 1)?;
    let len = word.entries.len();
    for e in &mut word.entries[len - d..] {
        e.boxed = true;
    }
    let mut cursor = len - d;
    for _ in 0..s {
        let exhausted = || Error::InvalidTriple { a, s, d };
        let color = word.entries[..cursor].last().ok_or_else(exhausted)?.color;
        while cursor > 0 && word.entries[cursor - 1].color == color {
            cursor -= 1;
        }
        if cursor == 0 {
            return Err(exhausted());
        }
        cursor -= 1;
        word.entries[cursor].boxed = true;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rank(1, 3, 5), Ok(1));
        assert_eq!(rank(2, 5, 5), Ok(2));
        assert_eq!(rank(1, 5, 5), Ok(7));
        assert_eq!(rank(1, 1, 5), Ok(-5));
        for n in [1, 2, 4, 5, 7, 8] {
            for b in 1..=n {
                assert!(rank(3, b, n).unwrap() < 0);
            }
        }
        assert!(rank(4, 1, 5).is_err());
        assert!(rank(1, 6, 5).is_err());
        assert!(rank(1, 0, 5).is_err());
    }

    #[test]
    fn lattice_words() {
        assert_eq!(lattice_rank_word(5).unwrap().to_string(), "1_1 2_2 4_1 7_1");
        assert_eq!(
            lattice_rank_word(8).unwrap().to_string(),
            "1_1 2_2 4_1 5_2 7_1 10_1 13_1"
        );
        assert_eq!(lattice_rank_word(4).unwrap().to_string(), "1_2 2_1 5_1");
        assert_eq!(lattice_rank_word(1).unwrap().to_string(), "");
        assert_eq!(lattice_rank_word(6), Err(Error::BadResidue(6)));
    }

    #[test]
    fn entries_map_back_to_cells() {
        for n in [2, 4, 5, 7, 8, 10, 11] {
            for e in lattice_rank_word(n).unwrap().entries() {
                let c = e.cell(n);
                assert_eq!(rank(c.column, c.row, n), Ok(e.rank as i64));
            }
        }
    }

    #[test]
    fn skips_examples() {
        let w1 = MarkedRankWord::with_boxed(8, &[2, 5, 10, 13]).unwrap();
        let w2 = MarkedRankWord::with_boxed(8, &[5, 13]).unwrap();
        assert_eq!(count_skips(&w1), 2);
        assert_eq!(count_skips(&w2), 1);
        assert_eq!(count_skips(&lattice_rank_word(8).unwrap()), 0);
        assert_eq!(boxed_counts(&w1), (2, 2));
        assert_eq!(boxed_counts(&w2), (1, 1));
        assert_eq!(boxed_counts(&lattice_rank_word(8).unwrap()), (0, 0));
        assert_eq!(
            MarkedRankWord::with_boxed(5, &[2, 7])
                .unwrap()
                .count_skips(),
            1
        );
        assert!(MarkedRankWord::with_boxed(8, &[3]).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(3, 2, 2).unwrap().boxed_ranks(), vec![2, 5, 10, 13]);
        assert_eq!(omega(5, 1, 1).unwrap().boxed_ranks(), vec![5, 13]);
        for n in [1, 2, 4, 5, 7, 8] {
            assert!(omega(n - 1, 0, 0).unwrap().boxed_ranks().is_empty());
        }
        assert_eq!(
            omega(1, 2, 3),
            Err(Error::InvalidTriple { a: 1, s: 2, d: 3 })
        );
    }

    #[test]
    fn triple_validity() {
        assert!(is_valid_triple(3, 2, 2));
        assert!(!is_valid_triple(1, 2, 3));
        assert!(!is_valid_triple(2, 2, 4));
        assert!(is_valid_triple(0, 0, 0));
    }

    #[test]
    fn word_to_path() {
        let w1 = MarkedRankWord::with_boxed(8, &[2, 5, 10, 13]).unwrap();
        assert_eq!(w1.to_path().unwrap().east_heights(), &[6, 6, 8]);
        let w = lattice_rank_word(5).unwrap();
        assert_eq!(path_from_word(&w).unwrap().east_heights(), &[5, 5, 5]);

        let only_five = MarkedRankWord::with_boxed(8, &[5]).unwrap();
        assert!(matches!(
            path_from_word(&only_five),
            Err(Error::NotRealizable(_))
        ));
        let gap = MarkedRankWord::with_boxed(8, &[10]).unwrap();
        assert!(matches!(path_from_word(&gap), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn marking_from_paths() {
        let p1 = DyckPath::new(3, 8, vec![6, 6, 8]).unwrap();
        let p2 = DyckPath::new(3, 8, vec![7, 7, 8]).unwrap();
        assert_eq!(
            mark_from_path(&p1).unwrap().boxed_ranks(),
            vec![2, 5, 10, 13]
        );
        assert_eq!(mark_from_path(&p2).unwrap().boxed_ranks(), vec![5, 13]);
        let top = DyckPath::new(3, 8, vec![8, 8, 8]).unwrap();
        assert!(mark_from_path(&top).unwrap().boxed_ranks().is_empty());

        let wide = DyckPath::new(4, 5, vec![2, 3, 4, 5]).unwrap();
        assert_eq!(mark_from_path(&wide), Err(Error::UnsupportedM(4)));
    }

    #[test]
    fn cells_above_have_positive_rank() {
        for n in (1..=16).filter(|n| n % 3 != 0) {
            for p in crate::path::enumerate_paths(3, n).unwrap() {
                for x in p.cells_above().cells() {
                    assert!(rank(x.column, x.row, n).unwrap() > 0, "{p}: {x}");
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let w = MarkedRankWord::with_boxed(5, &[2, 7]).unwrap();
        assert_eq!(w.to_string(), "1_1 [2_2] 4_1 [7_1]");
        assert_eq!("1_1 [2_2] 4_1 [7_1]".parse::<MarkedRankWord>().unwrap(), w);
        assert_eq!("".parse::<MarkedRankWord>().unwrap().n(), 1);
        assert!("1_1 2_2 4_1".parse::<MarkedRankWord>().is_err());
        assert!("1_1 [2_2 4_1 7_1".parse::<MarkedRankWord>().is_err());
        assert!("1_2 2_2 4_1 7_1".parse::<MarkedRankWord>().is_err());
    }
}
