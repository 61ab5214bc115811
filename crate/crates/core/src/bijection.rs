//! The area/dinv involution on `(3, n)`-Dyck paths.
//!
//! A `(3, n)`-path is determined by its `(area, skips, dinv)` triple, and
//! `(a, s, d)` is realizable exactly when `(d, s, a)` is. The involution sends
//! a path to the one whose triple has area and dinv exchanged.

use crate::error::Result;
use crate::path::DyckPath;
use crate::rankword::omega;
use crate::stats::stat_triple;

pub fn involution(p: &DyckPath) -> Result<DyckPath> {
    let triple = stat_triple(p)?;
    omega(triple.dinv, triple.skips, triple.area)?.to_path()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::path::{enumerate_paths, make_path};
    use crate::stats::StatTriple;

    #[test]
    fn exchanges_area_and_dinv() {
        let pi1 = make_path(3, 8, vec![6, 6, 8]).unwrap();
        let image = involution(&pi1).unwrap();
        assert_eq!(stat_triple(&image), Ok(StatTriple::new(2, 2, 3)));
        assert_eq!(involution(&image).unwrap(), pi1);
    }

    #[test]
    fn balanced_paths_are_fixed() {
        for p in enumerate_paths(3, 7).unwrap() {
            let t = stat_triple(&p).unwrap();
            if t.area == t.dinv {
                assert_eq!(involution(&p).unwrap(), p);
            }
        }
    }

    #[test]
    fn squares_to_identity() {
        for p in enumerate_paths(3, 5).unwrap() {
            assert_eq!(involution(&involution(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn rejects_other_m() {
        let p = make_path(2, 5, vec![3, 5]).unwrap();
        assert_eq!(involution(&p), Err(Error::UnsupportedM(2)));
    }
}
