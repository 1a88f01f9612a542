//! Formal linear combinations of nested commutators in two generators.
//!
//! Terms are uncollapsed binary bracket trees over the generators `X` and
//! `Y`. No Jacobi or Hall-basis reduction is applied: structurally equal
//! trees merge, `[w, w]` vanishes, and everything else is kept verbatim.
//! Equality of the resulting expressions is checked downstream in the
//! associative envelope (see [`crate::ncpoly`]), which is basis independent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{self, Rational};

/// One of the two non-commuting indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    pub fn label(self) -> char {
        match self {
            Generator::X => 'X',
            Generator::Y => 'Y',
        }
    }
}

/// A nested commutator: either a generator leaf or a bracket of two subterms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieTerm {
    Gen(Generator),
    Bracket(Box<LieTerm>, Box<LieTerm>),
}

impl LieTerm {
    pub fn gen(g: Generator) -> Self {
        LieTerm::Gen(g)
    }

    pub fn bracket(left: LieTerm, right: LieTerm) -> Self {
        LieTerm::Bracket(Box::new(left), Box::new(right))
    }

    /// Number of generator leaves.
    pub fn degree(&self) -> usize {
        match self {
            LieTerm::Gen(_) => 1,
            LieTerm::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaf labels read left to right.
    pub fn leaf_word(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Generator>) {
        match self {
            LieTerm::Gen(g) => out.push(*g),
            LieTerm::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// True if any subterm is a bracket of two structurally identical children.
    pub fn contains_degenerate_bracket(&self) -> bool {
        match self {
            LieTerm::Gen(_) => false,
            LieTerm::Bracket(l, r) => {
                l == r || l.contains_degenerate_bracket() || r.contains_degenerate_bracket()
            }
        }
    }

    fn shape_cmp(&self, other: &LieTerm) -> Ordering {
        match (self, other) {
            (LieTerm::Gen(a), LieTerm::Gen(b)) => a.cmp(b),
            (LieTerm::Gen(_), LieTerm::Bracket(..)) => Ordering::Less,
            (LieTerm::Bracket(..), LieTerm::Gen(_)) => Ordering::Greater,
            (LieTerm::Bracket(l1, r1), LieTerm::Bracket(l2, r2)) => {
                l1.shape_cmp(l2).then_with(|| r1.shape_cmp(r2))
            }
        }
    }
}

// Canonical order: degree, then left-to-right leaf labels, then tree shape.
// This is the serialization order promised by the textual interface.
impl Ord for LieTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.leaf_word().cmp(&other.leaf_word()))
            .then_with(|| self.shape_cmp(other))
    }
}

impl PartialOrd for LieTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LieTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTerm::Gen(g) => write!(f, "{}", g.label()),
            LieTerm::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// Exact-rational linear combination of [`LieTerm`]s.
///
/// Zero coefficients are never stored, `[w, w]` is normalized away on
/// insertion, and `grade` records the homogeneous degree when all stored
/// terms share one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieExpr {
    terms: BTreeMap<LieTerm, Rational>,
    grade: Option<usize>,
}

impl LieExpr {
    pub fn zero() -> Self {
        LieExpr {
            terms: BTreeMap::new(),
            grade: None,
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::single(LieTerm::gen(g), rational::rat_int(1))
    }

    pub fn single(term: LieTerm, coef: Rational) -> Self {
        let mut e = LieExpr::zero();
        e.accumulate(term, coef);
        e.refresh_grade();
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LieTerm, Rational)>) -> Self {
        let mut e = LieExpr::zero();
        for (t, c) in terms {
            e.accumulate(t, c);
        }
        e.refresh_grade();
        e
    }

    fn accumulate(&mut self, term: LieTerm, coef: Rational) {
        if coef.is_zero() || term.contains_degenerate_bracket() {
            return;
        }
        match self.terms.get_mut(&term) {
            Some(entry) => {
                *entry += coef;
                if entry.is_zero() {
                    self.terms.remove(&term);
                }
            }
            None => {
                self.terms.insert(term, coef);
            }
        }
    }

    fn refresh_grade(&mut self) {
        let mut degrees = self.terms.keys().map(|t| t.degree());
        self.grade = match degrees.next() {
            None => None,
            Some(d) => {
                if degrees.all(|other| other == d) {
                    Some(d)
                } else {
                    None
                }
            }
        };
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Homogeneous degree shared by all terms, if any (`None` when empty or mixed).
    pub fn grade(&self) -> Option<usize> {
        self.grade
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&LieTerm, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, term: &LieTerm) -> Rational {
        self.terms.get(term).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &LieExpr) -> LieExpr {
        self.scaled_add(other, &rational::rat_int(1))
    }

    pub fn scaled_add(&self, other: &LieExpr, scale: &Rational) -> LieExpr {
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.accumulate(t.clone(), c * scale);
        }
        out.refresh_grade();
        out
    }

    pub fn scale(&self, factor: &Rational) -> LieExpr {
        if factor.is_zero() {
            return LieExpr::zero();
        }
        let mut out = LieExpr::zero();
        for (t, c) in self.iter() {
            out.accumulate(t.clone(), c * factor);
        }
        out.refresh_grade();
        out
    }

    pub fn neg(&self) -> LieExpr {
        self.scale(&rational::rat_int(-1))
    }

    /// Bilinear bracket `[self, other]`, dropping `[w, w]` on the fly.
    pub fn bracket(&self, other: &LieExpr) -> LieExpr {
        let mut out = LieExpr::zero();
        for (t1, c1) in self.iter() {
            for (t2, c2) in other.iter() {
                if t1 == t2 {
                    continue;
                }
                out.accumulate(LieTerm::bracket(t1.clone(), t2.clone()), c1 * c2);
            }
        }
        out.refresh_grade();
        out
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (term, coef)) in self.iter().enumerate() {
            if i == 0 {
                if rational::is_negative(coef) {
                    write!(f, "-")?;
                }
            } else if rational::is_negative(coef) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} {}", rational::render_abs(coef), term)?;
        }
        Ok(())
    }
}

/// `ad_a^power b` expanded by bilinearity; `ad_a^0 b = b`.
pub fn ad_apply(a: &LieExpr, b: &LieExpr, power: usize) -> LieExpr {
    let mut out = b.clone();
    for _ in 0..power {
        out = a.bracket(&out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn x() -> LieExpr {
        LieExpr::generator(Generator::X)
    }

    fn y() -> LieExpr {
        LieExpr::generator(Generator::Y)
    }

    #[test]
    fn ad_zero_power_is_identity() {
        assert_eq!(ad_apply(&x(), &y(), 0), y());
    }

    #[test]
    fn ad_single_power_is_bracket() {
        let expected = LieExpr::single(
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
            rat(1, 1),
        );
        assert_eq!(ad_apply(&x(), &y(), 1), expected);
    }

    #[test]
    fn bracket_of_identical_terms_vanishes() {
        let xy = x().bracket(&y());
        assert_eq!(ad_apply(&xy, &xy, 1), LieExpr::zero());
    }

    #[test]
    fn structurally_equal_trees_merge() {
        let t = LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y));
        let e = LieExpr::from_terms([(t.clone(), rat(1, 3)), (t.clone(), rat(1, 6))]);
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&t), rat(1, 2));
    }

    #[test]
    fn cancelling_coefficients_drop_the_term() {
        let t = LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y));
        let e = LieExpr::from_terms([(t.clone(), rat(1, 2)), (t, rat(-1, 2))]);
        assert!(e.is_zero());
        assert_eq!(e.grade(), None);
    }

    #[test]
    fn grade_on_homogeneous_and_mixed() {
        let xy = x().bracket(&y());
        assert_eq!(xy.grade(), Some(2));
        let mixed = xy.add(&x());
        assert_eq!(mixed.grade(), None);
    }

    #[test]
    fn canonical_order_degree_then_word_then_shape() {
        let xxy = LieTerm::bracket(
            LieTerm::gen(Generator::X),
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
        );
        let yxy = LieTerm::bracket(
            LieTerm::gen(Generator::Y),
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
        );
        let xy = LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y));
        assert!(xy < xxy, "degree comes first");
        assert!(xxy < yxy, "leaf word breaks ties");
        // same leaf word XXY, different shapes
        let left_nested = LieTerm::bracket(
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::X)),
            LieTerm::gen(Generator::Y),
        );
        assert_ne!(left_nested.shape_cmp(&xxy), Ordering::Equal);
    }

    #[test]
    fn display_matches_notation() {
        let c2 = LieExpr::single(
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
            rat(-1, 2),
        );
        assert_eq!(c2.to_string(), "-1/2 [X,Y]");
        let xxy = LieTerm::bracket(
            LieTerm::gen(Generator::X),
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
        );
        let yxy = LieTerm::bracket(
            LieTerm::gen(Generator::Y),
            LieTerm::bracket(LieTerm::gen(Generator::X), LieTerm::gen(Generator::Y)),
        );
        let c3 = LieExpr::from_terms([(xxy, rat(1, 6)), (yxy, rat(1, 3))]);
        assert_eq!(c3.to_string(), "1/6 [X,[X,Y]] + 1/3 [Y,[X,Y]]");
    }
}
