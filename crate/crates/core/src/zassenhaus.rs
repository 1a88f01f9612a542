//! Symbolic generation of the Zassenhaus exponents.
//!
//! `e^{X+Y} = e^X e^Y e^{C_2} e^{C_3} ...` with each `C_n` a homogeneous Lie
//! polynomial of degree `n`. The exponents are produced by the recursion
//!
//! ```text
//! f_{1,k} = sum_{j=1..k} (-1)^k / (j! (k-j)!) ad_Y^{k-j} ad_X^j Y
//! f_{n,k} = sum_{j=0..[k/n]-1} (-1)^j / j!  ad_{C_n}^j f_{n-1, k-nj}
//! C_n     = (1/n) f_{[(n-1)/2], n-1}
//! ```
//!
//! with `C_2 = (1/2) f_{1,1}` as the base case. Everything is exact rational
//! arithmetic; the independent check against the order-by-order factorization
//! lives in [`crate::ncpoly::oracle_zassenhaus`].

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{invalid, Result};
use crate::lie::{ad_apply, Generator, LieExpr};
use crate::rational::{factorial, rat_int, Rational};

/// `f_{1,k}`, homogeneous of degree `k + 1`. Rejects `k = 0`.
pub fn f1k(k: usize) -> Result<LieExpr> {
    if k == 0 {
        return Err(invalid("f1k requires k >= 1"));
    }
    let x = LieExpr::generator(Generator::X);
    let y = LieExpr::generator(Generator::Y);
    let sign = rat_int(if k % 2 == 0 { 1 } else { -1 });
    let mut out = LieExpr::zero();
    for j in 1..=k {
        let coef = &sign / Rational::from_integer(factorial(j) * factorial(k - j));
        let term = ad_apply(&y, &ad_apply(&x, &y, j), k - j);
        out = out.scaled_add(&term, &coef);
    }
    Ok(out)
}

/// `f_{n,k}` for `n >= 2`, `k >= n`, given `lower_c = [C_2, ..., C_n]`.
pub fn fnk(n: usize, k: usize, lower_c: &[LieExpr]) -> Result<LieExpr> {
    if n < 2 {
        return Err(invalid("fnk requires n >= 2; use f1k for n = 1"));
    }
    if k < n {
        return Err(invalid(format!("fnk requires k >= n, got n={n} k={k}")));
    }
    if lower_c.len() < n - 1 {
        return Err(invalid(format!(
            "fnk(n={n}) needs C_2..C_{n} but only {} lower terms were supplied",
            lower_c.len()
        )));
    }
    let mut memo = HashMap::new();
    f_memoized(n, k, lower_c, &mut memo)
}

fn f_memoized(
    n: usize,
    k: usize,
    c: &[LieExpr],
    memo: &mut HashMap<(usize, usize), LieExpr>,
) -> Result<LieExpr> {
    if let Some(hit) = memo.get(&(n, k)) {
        return Ok(hit.clone());
    }
    let value = if n == 1 {
        f1k(k)?
    } else {
        let cn = &c[n - 2];
        let mut out = LieExpr::zero();
        for j in 0..(k / n) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let coef = Rational::new(BigInt::from(sign), factorial(j));
            let inner = f_memoized(n - 1, k - n * j, c, memo)?;
            out = out.scaled_add(&ad_apply(cn, &inner, j), &coef);
        }
        out
    };
    memo.insert((n, k), value.clone());
    Ok(value)
}

fn pivot_row(n: usize) -> usize {
    // C_2 = (1/2) f_{1,1}; from n = 3 on the row index is [(n-1)/2].
    ((n - 1) / 2).max(1)
}

/// `[C_2, ..., C_{n_max}]`, each homogeneous of its degree.
pub fn zassenhaus_terms(n_max: usize) -> Result<Vec<LieExpr>> {
    if n_max < 2 {
        return Err(invalid("zassenhaus_terms requires n_max >= 2"));
    }
    let mut c: Vec<LieExpr> = Vec::with_capacity(n_max - 1);
    let mut memo = HashMap::new();
    for n in 2..=n_max {
        let f = f_memoized(pivot_row(n), n - 1, &c, &mut memo)?;
        c.push(f.scale(&Rational::new(BigInt::from(1), BigInt::from(n))));
    }
    Ok(c)
}

/// Exponents of the left-oriented factorization
/// `e^{X+Y} = ... e^{Cbar_3} e^{Cbar_2} e^Y e^X`, with `Cbar_i = (-1)^{i+1} C_i`.
pub fn left_zassenhaus_terms(n_max: usize) -> Result<Vec<LieExpr>> {
    let right = zassenhaus_terms(n_max)?;
    Ok(right
        .into_iter()
        .enumerate()
        .map(|(idx, cn)| {
            let n = idx + 2;
            if n % 2 == 0 {
                cn.neg()
            } else {
                cn
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieTerm;
    use crate::rational::rat;

    fn g(ch: char) -> LieTerm {
        LieTerm::gen(if ch == 'X' { Generator::X } else { Generator::Y })
    }

    fn br(l: LieTerm, r: LieTerm) -> LieTerm {
        LieTerm::bracket(l, r)
    }

    #[test]
    fn f11_is_minus_xy() {
        let e = f1k(1).unwrap();
        assert_eq!(e, LieExpr::single(br(g('X'), g('Y')), rat(-1, 1)));
    }

    #[test]
    fn f12_matches_three_c3() {
        let e = f1k(2).unwrap();
        let expected = LieExpr::from_terms([
            (br(g('Y'), br(g('X'), g('Y'))), rat(1, 1)),
            (br(g('X'), br(g('X'), g('Y'))), rat(1, 2)),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn f13_matches_four_c4() {
        let e = f1k(3).unwrap();
        let expected = LieExpr::from_terms([
            (br(g('Y'), br(g('Y'), br(g('X'), g('Y')))), rat(-1, 2)),
            (br(g('Y'), br(g('X'), br(g('X'), g('Y')))), rat(-1, 2)),
            (br(g('X'), br(g('X'), br(g('X'), g('Y')))), rat(-1, 6)),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn f1k_rejects_zero() {
        assert!(f1k(0).is_err());
    }

    #[test]
    fn fnk_single_term_sum_reduces_to_f1k() {
        // [2/2] - 1 = 0, so only the j = 0 term survives
        let c = zassenhaus_terms(2).unwrap();
        assert_eq!(fnk(2, 2, &c).unwrap(), f1k(2).unwrap());
    }

    #[test]
    fn fnk_reports_missing_lower_terms() {
        assert!(fnk(3, 4, &[]).is_err());
    }

    #[test]
    fn first_exponents_match_closed_forms() {
        let c = zassenhaus_terms(4).unwrap();
        let c2 = LieExpr::single(br(g('X'), g('Y')), rat(-1, 2));
        let c3 = LieExpr::from_terms([
            (br(g('Y'), br(g('X'), g('Y'))), rat(1, 3)),
            (br(g('X'), br(g('X'), g('Y'))), rat(1, 6)),
        ]);
        let c4 = LieExpr::from_terms([
            (br(g('X'), br(g('X'), br(g('X'), g('Y')))), rat(-1, 24)),
            (br(g('Y'), br(g('X'), br(g('X'), g('Y')))), rat(-1, 8)),
            (br(g('Y'), br(g('Y'), br(g('X'), g('Y')))), rat(-1, 8)),
        ]);
        assert_eq!(c[0], c2);
        assert_eq!(c[1], c3);
        assert_eq!(c[2], c4);
    }

    #[test]
    fn left_terms_flip_even_orders() {
        let right = zassenhaus_terms(4).unwrap();
        let left = left_zassenhaus_terms(4).unwrap();
        assert_eq!(left[0], right[0].neg(), "Cbar_2 = -C_2");
        assert_eq!(left[1], right[1], "Cbar_3 = C_3");
        assert_eq!(left[2], right[2].neg(), "Cbar_4 = -C_4");
        assert_eq!(left[0].to_string(), "1/2 [X,Y]");
    }

    #[test]
    fn terms_are_homogeneous() {
        let c = zassenhaus_terms(10).unwrap();
        for (idx, cn) in c.iter().enumerate() {
            assert_eq!(cn.grade(), Some(idx + 2));
        }
    }
}
