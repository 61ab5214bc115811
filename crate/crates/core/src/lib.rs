//! Rational `(m, n)`-Dyck paths and the `q,t`-Catalan polynomial `C(3, n)`.
//!
//! - [`path`]: validated paths, enumeration, Ferrers shapes, arms and legs, transpose
//! - [`stats`]: `area`, `dinv` and the `skips` statistic for `m = 3`
//! - [`rankword`]: marked rank words of `L(3, n)` and the reconstruction [`omega`]
//! - [`poly`]: exact `q,t` polynomials, brute-force and closed-form `C(3, n)`
//! - [`bijection`]: the skips-preserving area/dinv involution
//! - [`verify`]: the exhaustive invariant suite

pub mod bijection;
pub mod error;
#[doc(hidden)]
pub mod fuzzing;
pub mod path;
pub mod poly;
pub mod rankword;
pub mod stats;
pub mod verify;

pub use bijection::involution;
pub use error::{Error, Result};
pub use path::{enumerate_paths, make_path, rational_catalan_number, Cell, DyckPath, FerrersShape};
pub use poly::{catalan3_closed_form, catalan_bruteforce, is_qt_symmetric, QtPolynomial, Term};
pub use rankword::{
    boxed_counts, count_skips, is_valid_triple, lattice_rank_word, mark_from_path, omega,
    path_from_word, rank, Color, MarkedRankWord, RankEntry,
};
pub use stats::{
    area, classify_nondinv_cell, dinv, skips, stat_triple, CellClass, CellConditions, StatTriple,
};
