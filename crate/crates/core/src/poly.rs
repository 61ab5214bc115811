//! Sparse polynomials in `q` and `t` with nonnegative integer coefficients,
//! and the rational `q,t`-Catalan polynomials built from them.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{enumerate_paths, DyckPath};
use crate::rankword::check_residue;
use crate::stats::{area, dinv};

/// One term `c q^q t^t` of the JSON form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub q: u32,
    pub t: u32,
    pub c: u64,
}

/// Exact polynomial in `q` and `t`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QtPolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, c: u64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert((q, t), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^i t^j`.
    pub fn coeff(&self, i: u32, j: u32) -> u64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c q^i t^j` in place.
    pub fn add_term(&mut self, i: u32, j: u32, c: u64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry((i, j)).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::CoefficientOverflow)?;
        Ok(())
    }

    pub fn checked_add(&self, other: &QtPolynomial) -> Result<QtPolynomial> {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }

    /// The polynomial with `q` and `t` exchanged.
    pub fn swap_qt(&self) -> QtPolynomial {
        QtPolynomial {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((j, i), c)).collect(),
        }
    }

    pub fn is_qt_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(i, j), &c)| self.coeff(j, i) == c)
    }

    /// Value at `(q0, t0)`, computed exactly.
    pub fn evaluate(&self, q0: i64, t0: i64) -> Result<i128> {
        let pow = |base: i64, e: u32| -> Result<i128> {
            (base as i128)
                .checked_pow(e)
                .ok_or(Error::CoefficientOverflow)
        };
        self.terms.iter().try_fold(0i128, |acc, (&(i, j), &c)| {
            let term = pow(q0, i)?
                .checked_mul(pow(t0, j)?)
                .and_then(|v| v.checked_mul(c as i128))
                .ok_or(Error::CoefficientOverflow)?;
            acc.checked_add(term).ok_or(Error::CoefficientOverflow)
        })
    }

    /// Largest `i + j` over the terms, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Terms in render order: total degree descending, then `q`-degree descending.
    pub fn terms(&self) -> Vec<Term> {
        let mut out: Vec<Term> = self
            .terms
            .iter()
            .map(|(&(q, t), &c)| Term { q, t, c })
            .collect();
        out.sort_by_key(|term| (Reverse(term.q + term.t), Reverse(term.q)));
        out
    }

    /// Builds a polynomial from JSON-form terms; repeated exponents are summed.
    pub fn from_terms(terms: &[Term]) -> Result<QtPolynomial> {
        let mut p = QtPolynomial::zero();
        for term in terms {
            p.add_term(term.q, term.t, term.c)?;
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.terms()).expect("terms serialize")
    }

    pub fn from_json(s: &str) -> Result<QtPolynomial> {
        let terms: Vec<Term> =
            serde_json::from_str(s).map_err(|e| Error::BadPolynomial(e.to_string()))?;
        Self::from_terms(&terms)
    }
}

fn power(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for QtPolynomial {
    /// Plain-text form, e.g. `q^2 + 2 q t + t^2`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, term) in self.terms().iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut parts: Vec<String> = Vec::with_capacity(3);
            if term.c != 1 || (term.q == 0 && term.t == 0) {
                parts.push(term.c.to_string());
            }
            parts.extend(power("q", term.q));
            parts.extend(power("t", term.t));
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

/// `sum over (m, n)-paths of q^dinv t^area`, by enumeration.
pub fn catalan_bruteforce(m: usize, n: usize) -> Result<QtPolynomial> {
    catalan_with(m, n, dinv, area)
}

/// Brute-force sum with caller-supplied statistics.
pub fn catalan_with(
    m: usize,
    n: usize,
    q_stat: impl Fn(&DyckPath) -> usize,
    t_stat: impl Fn(&DyckPath) -> usize,
) -> Result<QtPolynomial> {
    let mut p = QtPolynomial::zero();
    for path in enumerate_paths(m, n)? {
        p.add_term(q_stat(&path) as u32, t_stat(&path) as u32, 1)?;
    }
    Ok(p)
}

/// Closed form of `C(3, n)`: `sum_{s=0}^{floor(n/3)} sum_{a=s}^{n-2s-1} q^(n-a-s-1) t^a`.
pub fn catalan3_closed_form(n: usize) -> Result<QtPolynomial> {
    check_residue(n)?;
    let mut p = QtPolynomial::zero();
    for s in 0..=n / 3 {
        // the inner range is empty once 2s + 1 > n
        let Some(top) = n.checked_sub(2 * s + 1) else {
            continue;
        };
        for a in s..=top {
            p.add_term((n - a - s - 1) as u32, a as u32, 1)?;
        }
    }
    Ok(p)
}

pub fn is_qt_symmetric(p: &QtPolynomial) -> bool {
    p.is_qt_symmetric()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, u32, u64)]) -> QtPolynomial {
        let terms: Vec<Term> = terms.iter().map(|&(q, t, c)| Term { q, t, c }).collect();
        QtPolynomial::from_terms(&terms).unwrap()
    }

    #[test]
    fn render() {
        assert_eq!(QtPolynomial::zero().to_string(), "0");
        assert_eq!(QtPolynomial::one().to_string(), "1");
        assert_eq!(
            poly(&[(1, 1, 2), (2, 0, 1), (0, 2, 1), (0, 0, 3)]).to_string(),
            "q^2 + 2 q t + t^2 + 3"
        );
        assert_eq!(
            catalan3_closed_form(5).unwrap().to_string(),
            "q^4 + q^3 t + q^2 t^2 + q t^3 + t^4 + q^2 t + q t^2"
        );
    }

    #[test]
    fn closed_form_expansions() {
        let c4 = poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        assert_eq!(catalan3_closed_form(4).unwrap(), c4);
        assert_eq!(
            catalan3_closed_form(2).unwrap(),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(catalan3_closed_form(1).unwrap(), QtPolynomial::one());
        assert_eq!(catalan3_closed_form(6), Err(Error::BadResidue(6)));
    }

    #[test]
    fn brute_force_small() {
        for n in 1..8 {
            assert_eq!(catalan_bruteforce(1, n).unwrap(), QtPolynomial::one());
        }
        assert_eq!(
            catalan_bruteforce(3, 4).unwrap(),
            poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)])
        );
        assert_eq!(catalan_bruteforce(3, 5).unwrap().evaluate(1, 1), Ok(7));
        assert!(matches!(
            catalan_bruteforce(2, 4),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn symmetry() {
        assert!(is_qt_symmetric(&catalan3_closed_form(5).unwrap()));
        assert!(!is_qt_symmetric(&QtPolynomial::monomial(2, 1, 1)));
        assert!(is_qt_symmetric(&QtPolynomial::zero()));
        assert!(!is_qt_symmetric(&poly(&[(2, 1, 2), (1, 2, 1)])));
    }

    #[test]
    fn evaluation() {
        let c5 = catalan3_closed_form(5).unwrap();
        assert_eq!(c5.evaluate(1, 1), Ok(7));
        assert_eq!(c5.evaluate(0, 0), Ok(0));
        // q^4 - q^3 t + q^2 t^2 - q t^3 + t^4 + q^2 t - q t^2 at q = -1, t = 1
        assert_eq!(c5.evaluate(-1, 1), Ok(1));
        assert_eq!(c5.evaluate(2, 3), Ok(16 + 24 + 36 + 54 + 81 + 12 + 18));
        assert_eq!(QtPolynomial::one().evaluate(5, 9), Ok(1));
        let huge = QtPolynomial::monomial(200, 0, 1);
        assert_eq!(huge.evaluate(2, 1), Err(Error::CoefficientOverflow));
    }

    #[test]
    fn coefficient_overflow() {
        let mut p = QtPolynomial::monomial(0, 0, u64::MAX);
        assert_eq!(p.add_term(0, 0, 1), Err(Error::CoefficientOverflow));
        assert_eq!(p.add_term(1, 0, 0), Ok(()));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn json_form() {
        let c4 = catalan3_closed_form(4).unwrap();
        assert_eq!(
            c4.to_json(),
            r#"[{"q":3,"t":0,"c":1},{"q":2,"t":1,"c":1},{"q":1,"t":2,"c":1},{"q":0,"t":3,"c":1},{"q":1,"t":1,"c":1}]"#
        );
        assert_eq!(QtPolynomial::from_json(&c4.to_json()).unwrap(), c4);
        assert_eq!(QtPolynomial::zero().to_json(), "[]");
        assert!(QtPolynomial::from_json(r#"[{"q":1}]"#).is_err());
        assert!(QtPolynomial::from_json(r#"[{"q":1,"t":0,"c":-1}]"#).is_err());
        assert_eq!(
            QtPolynomial::from_json(r#"[{"q":1,"t":0,"c":0}]"#).unwrap(),
            QtPolynomial::zero()
        );
    }
}
