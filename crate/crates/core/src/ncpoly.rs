//! Degree-truncated noncommutative polynomials over the letters `X`, `Y`.
//!
//! This is the associative envelope used as the independent verification
//! arena: brackets expand to `ab - ba`, exp/log are plain truncated power
//! series, and every coefficient stays an exact rational. Nothing here knows
//! about the Lie-side recursion, which is the point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::lie::{Generator, LieExpr, LieTerm};
use crate::rational::{factorial, Rational};

/// A word over the two letters; the empty word is the constant term.
pub type Word = Vec<Generator>;

/// Truncated noncommutative polynomial with exact rational coefficients.
///
/// Every stored word has length `<= truncation` and no zero coefficient is
/// kept. Products silently discard words longer than the truncation degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    truncation: usize,
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero(truncation: usize) -> Self {
        assert!(truncation >= 1, "truncation degree must be positive");
        NCPoly {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut p = NCPoly::zero(truncation);
        p.insert(Vec::new(), Rational::one());
        p
    }

    pub fn letter(g: Generator, truncation: usize) -> Self {
        let mut p = NCPoly::zero(truncation);
        p.insert(vec![g], Rational::one());
        p
    }

    /// `X + Y` at the given truncation.
    pub fn x_plus_y(truncation: usize) -> Self {
        NCPoly::letter(Generator::X, truncation).add(&NCPoly::letter(Generator::Y, truncation))
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Vec::new() as &Word)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    fn insert(&mut self, word: Word, coef: Rational) {
        if coef.is_zero() || word.len() > self.truncation {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(entry) => {
                *entry += coef;
                if entry.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coef);
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        assert_eq!(
            self.truncation, other.truncation,
            "truncation degrees must agree"
        );
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Rational::from_integer(BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> NCPoly {
        let mut out = NCPoly::zero(self.truncation);
        for (w, c) in self.iter() {
            out.insert(w.clone(), c * factor);
        }
        out
    }

    /// Reinterpret at a higher truncation degree (never drops terms).
    pub fn with_truncation(&self, truncation: usize) -> NCPoly {
        assert!(
            truncation >= self.truncation,
            "cannot lower the truncation degree here"
        );
        NCPoly {
            truncation,
            terms: self.terms.clone(),
        }
    }

    /// The homogeneous part of the given degree.
    pub fn homogeneous_part(&self, degree: usize) -> NCPoly {
        let mut out = NCPoly::zero(self.truncation);
        for (w, c) in self.iter() {
            if w.len() == degree {
                out.insert(w.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: String = w.iter().map(|g| g.label()).collect();
            if word.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} {word}")?;
            }
        }
        Ok(())
    }
}

/// Truncating product; words longer than the shared truncation are discarded.
pub fn nc_mul(p: &NCPoly, q: &NCPoly) -> NCPoly {
    assert_eq!(
        p.truncation, q.truncation,
        "truncation degrees must agree"
    );
    let mut out = NCPoly::zero(p.truncation);
    for (w1, c1) in p.iter() {
        for (w2, c2) in q.iter() {
            if w1.len() + w2.len() > p.truncation {
                continue;
            }
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            out.insert(w, c1 * c2);
        }
    }
    out
}

/// `exp(p) = sum p^k / k!` truncated; requires a zero constant term.
pub fn nc_exp(p: &NCPoly) -> Result<NCPoly> {
    if !p.constant_term().is_zero() {
        return Err(invalid("nc_exp requires a zero constant term"));
    }
    let n = p.truncation;
    let mut out = NCPoly::one(n);
    let mut power = NCPoly::one(n);
    for k in 1..=n {
        power = nc_mul(&power, p);
        if power.is_zero() {
            break;
        }
        out = out.add(&power.scale(&Rational::new(BigInt::one(), factorial(k))));
    }
    Ok(out)
}

/// `log(p) = sum (-1)^{k+1} (p - 1)^k / k` truncated; requires constant term 1.
pub fn nc_log(p: &NCPoly) -> Result<NCPoly> {
    if !p.constant_term().is_one() {
        return Err(invalid("nc_log requires constant term 1"));
    }
    let n = p.truncation;
    let q = p.sub(&NCPoly::one(n));
    let mut out = NCPoly::zero(n);
    let mut power = NCPoly::one(n);
    for k in 1..=n {
        power = nc_mul(&power, &q);
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rational::new(BigInt::from(sign), BigInt::from(k))));
    }
    Ok(out)
}

/// Expands every bracket as `ab - ba` into words; exact coefficients.
pub fn to_ncpoly(e: &LieExpr, truncation: usize) -> Result<NCPoly> {
    let mut out = NCPoly::zero(truncation);
    for (term, coef) in e.iter() {
        if term.degree() > truncation {
            return Err(invalid(format!(
                "truncation {truncation} is below a term of degree {}",
                term.degree()
            )));
        }
        out = out.add(&expand_term(term, truncation).scale(coef));
    }
    Ok(out)
}

fn expand_term(term: &LieTerm, truncation: usize) -> NCPoly {
    match term {
        LieTerm::Gen(g) => NCPoly::letter(*g, truncation),
        LieTerm::Bracket(l, r) => {
            let pl = expand_term(l, truncation);
            let pr = expand_term(r, truncation);
            nc_mul(&pl, &pr).sub(&nc_mul(&pr, &pl))
        }
    }
}

/// The unique degree-`n` exponent forced by the factorization
/// `e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...`, solved order by order in the
/// truncated word algebra. Entirely independent of the `f_{n,k}` recursion.
pub fn oracle_zassenhaus(n: usize) -> Result<NCPoly> {
    if n < 2 {
        return Err(invalid("oracle_zassenhaus requires n >= 2"));
    }
    Ok(oracle_zassenhaus_terms(n)?.pop().expect("nonempty by construction"))
}

/// `[C_2^orc, ..., C_{n_max}^orc]`, each at truncation equal to its degree.
pub fn oracle_zassenhaus_terms(n_max: usize) -> Result<Vec<NCPoly>> {
    if n_max < 2 {
        return Err(invalid("oracle_zassenhaus_terms requires n_max >= 2"));
    }
    let mut known: Vec<NCPoly> = Vec::new();
    for n in 2..=n_max {
        // R_n = log( e^{-C_{n-1}} ... e^{-C_2} e^{-Y} e^{-X} e^{X+Y} ), truncated at n
        let mut prod = NCPoly::one(n);
        for c in known.iter().rev() {
            prod = nc_mul(&prod, &nc_exp(&c.with_truncation(n).neg())?);
        }
        prod = nc_mul(&prod, &nc_exp(&NCPoly::letter(Generator::Y, n).neg())?);
        prod = nc_mul(&prod, &nc_exp(&NCPoly::letter(Generator::X, n).neg())?);
        prod = nc_mul(&prod, &nc_exp(&NCPoly::x_plus_y(n))?);
        let log = nc_log(&prod)?;
        known.push(log.homogeneous_part(n));
    }
    Ok(known)
}
