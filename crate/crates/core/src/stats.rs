//! Path statistics: `area`, `dinv` and, for `m = 3`, `skips`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{min_height, Cell, DyckPath};
use crate::rankword::{check_path, mark_from_path};

/// Full cells between the path and the diagonal.
pub fn area(p: &DyckPath) -> usize {
    let (m, n) = (p.m(), p.n());
    (1..=m).map(|a| p.height(a) - min_height(m, n, a)).sum()
}

/// Whether a shape cell with the given arm and leg satisfies
/// `arm/(leg+1) < m/n < (arm+1)/leg`, with the right bound infinite at `leg = 0`.
pub fn dinv_condition(arm: usize, leg: usize, m: usize, n: usize) -> bool {
    arm * n < m * (leg + 1) && (leg == 0 || m * leg < n * (arm + 1))
}

/// Cells above the path satisfying the dinv inequality.
pub fn dinv(p: &DyckPath) -> usize {
    let (m, n) = (p.m(), p.n());
    p.cells_above()
        .cells()
        .filter(|&x| {
            let arm = p.arm(x).expect("shape cell");
            let leg = p.leg(x).expect("shape cell");
            dinv_condition(arm, leg, m, n)
        })
        .count()
}

/// Number of skips in the marked rank word of a `(3, n)`-path.
pub fn skips(p: &DyckPath) -> Result<usize> {
    Ok(mark_from_path(p)?.count_skips())
}

/// `(area, skips, dinv)` of a `(3, n)`-path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StatTriple {
    pub area: usize,
    pub skips: usize,
    pub dinv: usize,
}

impl StatTriple {
    pub fn new(area: usize, skips: usize, dinv: usize) -> Self {
        StatTriple { area, skips, dinv }
    }

    pub fn sum(&self) -> usize {
        self.area + self.skips + self.dinv
    }

    /// The triple with area and dinv exchanged.
    pub fn swapped(&self) -> Self {
        StatTriple::new(self.dinv, self.skips, self.area)
    }
}

impl fmt::Display for StatTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.area, self.skips, self.dinv)
    }
}

pub fn stat_triple(p: &DyckPath) -> Result<StatTriple> {
    let skips = skips(p)?;
    Ok(StatTriple::new(area(p), skips, dinv(p)))
}

/// Label of a cell above a `(3, n)`-path with respect to dinv.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CellClass {
    /// Satisfies the dinv inequality.
    Contributes,
    /// Fails it with `arm = 1` and `leg < n/3 - 1`.
    Case1,
    /// Fails it with `arm = 0` and `leg > n/3`.
    Case2,
}

/// The three conditions a cell may satisfy, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellConditions {
    pub contributes: bool,
    pub case1: bool,
    pub case2: bool,
}

impl CellConditions {
    /// Labels that apply: `Contributes` alone if the cell contributes,
    /// otherwise whichever of the two failure cases hold.
    pub fn labels(&self) -> Vec<CellClass> {
        if self.contributes {
            return vec![CellClass::Contributes];
        }
        let mut out = Vec::new();
        if self.case1 {
            out.push(CellClass::Case1);
        }
        if self.case2 {
            out.push(CellClass::Case2);
        }
        out
    }
}

pub fn cell_conditions(p: &DyckPath, x: Cell) -> Result<CellConditions> {
    check_path(p)?;
    let arm = p.arm(x)?;
    let leg = p.leg(x)?;
    let n = p.n();
    Ok(CellConditions {
        contributes: dinv_condition(arm, leg, 3, n),
        // leg < n/3 - 1  <=>  3 leg + 3 < n
        case1: arm == 1 && 3 * leg + 3 < n,
        // leg > n/3  <=>  3 leg > n
        case2: arm == 0 && 3 * leg > n,
    })
}

/// Classifies a cell above a `(3, n)`-path.
pub fn classify_nondinv_cell(p: &DyckPath, x: Cell) -> Result<CellClass> {
    match cell_conditions(p, x)?.labels().as_slice() {
        [only] => Ok(*only),
        _ => Err(Error::Unclassified(x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{enumerate_paths, make_path};

    fn pi1() -> DyckPath {
        make_path(3, 8, vec![6, 6, 8]).unwrap()
    }

    fn pi2() -> DyckPath {
        make_path(3, 8, vec![7, 7, 8]).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(area(&pi1()), 3);
        assert_eq!(area(&pi2()), 5);
        assert_eq!(dinv(&pi1()), 2);
        assert_eq!(dinv(&pi2()), 1);
        assert_eq!(skips(&pi1()), Ok(2));
        assert_eq!(skips(&pi2()), Ok(1));
        assert_eq!(stat_triple(&pi1()), Ok(StatTriple::new(3, 2, 2)));
        assert_eq!(stat_triple(&pi2()), Ok(StatTriple::new(5, 1, 1)));
    }

    #[test]
    fn single_column_has_no_area() {
        for n in 1..12 {
            let p = make_path(1, n, vec![n]).unwrap();
            assert_eq!(area(&p), 0);
            assert_eq!(dinv(&p), 0);
        }
    }

    #[test]
    fn empty_shape() {
        for n in [1, 2, 4, 5, 7, 8, 10] {
            let p = make_path(3, n, vec![n, n, n]).unwrap();
            assert_eq!(stat_triple(&p), Ok(StatTriple::new(n - 1, 0, 0)));
        }
    }

    #[test]
    fn max_area() {
        for (m, n) in [(3, 5), (4, 7), (5, 8), (2, 9)] {
            let best = enumerate_paths(m, n).unwrap().map(|p| area(&p)).max();
            assert_eq!(best, Some((m - 1) * (n - 1) / 2));
        }
    }

    #[test]
    fn corner_cell_contributes() {
        assert!(dinv_condition(0, 0, 3, 8));
        assert!(dinv_condition(0, 0, 5, 2));
    }

    #[test]
    fn skips_rejects_other_shapes() {
        let p = make_path(2, 5, vec![3, 5]).unwrap();
        assert_eq!(skips(&p), Err(Error::UnsupportedM(2)));
        assert!(make_path(3, 6, vec![2, 4, 6]).is_err());
    }

    #[test]
    fn classification_examples() {
        let p = pi1();
        for x in [Cell::new(2, 7), Cell::new(2, 8)] {
            assert_eq!(classify_nondinv_cell(&p, x), Ok(CellClass::Contributes));
        }
        // arm 1, leg 0 in a (3,8)-path
        assert_eq!(
            classify_nondinv_cell(&p, Cell::new(1, 7)),
            Ok(CellClass::Case1)
        );
        assert_eq!(
            classify_nondinv_cell(&p, Cell::new(1, 8)),
            Ok(CellClass::Case1)
        );
        // arm 0 with a long leg
        let tall = make_path(3, 8, vec![3, 8, 8]).unwrap();
        assert_eq!(
            classify_nondinv_cell(&tall, Cell::new(1, 8)),
            Ok(CellClass::Case2)
        );
        assert_eq!(
            classify_nondinv_cell(&p, Cell::new(1, 3)),
            Err(Error::CellNotAboveThePath(Cell::new(1, 3)))
        );
    }
}
