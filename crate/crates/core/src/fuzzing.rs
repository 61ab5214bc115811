//! Bodies of the fuzz targets, shared with the corpus replay test.
//!
//! Each entry point accepts arbitrary bytes, must never panic on malformed
//! input, and asserts round-trip properties on anything that decodes.

use crate::path::DyckPath;
use crate::poly::QtPolynomial;
use crate::rankword::{mark_from_path, MarkedRankWord};
use crate::stats::{area, dinv};

pub fn parse_path(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = DyckPath::parse(s) else {
        return;
    };
    assert_eq!(p.steps(), s);
    // keep the quadratic statistics cheap on huge inputs
    if p.m() * p.n() > 1 << 16 {
        return;
    }
    let t = p.transpose();
    assert_eq!(t.transpose(), p);
    assert_eq!(area(&t), area(&p));
    assert_eq!(dinv(&t), dinv(&p));
    if let Ok(word) = mark_from_path(&p) {
        assert_eq!(word.to_path().unwrap(), p);
    }
}

pub fn parse_rank_word(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = s.parse::<MarkedRankWord>() else {
        return;
    };
    assert_eq!(word.to_string().parse::<MarkedRankWord>().unwrap(), word);
    let _ = word.count_skips();
    if let Ok(p) = word.to_path() {
        assert_eq!(mark_from_path(&p).unwrap(), word);
    }
}

pub fn poly_json(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(p) = QtPolynomial::from_json(s) else {
        return;
    };
    assert_eq!(QtPolynomial::from_json(&p.to_json()).unwrap(), p);
    assert_eq!(p.swap_qt().swap_qt(), p);
    let _ = p.to_string();
    let _ = p.evaluate(1, 1);
}
