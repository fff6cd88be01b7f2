//! Braid words on three strands, their 2x2 representation on the qubit
//! subspace, and the weave normal form.
//!
//! Words are stored in temporal order: `factors[0]` is the first physical
//! exchange. The corresponding operator is `M_k ... M_2 M_1`, i.e. the
//! reverse of the storage order. Text written in operator order (rightmost
//! factor acts first) can be converted with [`BraidWord::reversed`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::BraidError;
use crate::model::f_matrix;
use crate::unitary::Unitary2;

pub use crate::unitary::{distance, distance_unchecked};

/// Period of the generators: `sigma_i^10 = I`.
pub const PERIOD: i64 = 10;

/// Exponents a weave slot may carry.
pub const WEAVE_EXPONENTS: [i64; 4] = [-4, -2, 2, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// Exchange of the left pair.
    Sigma1,
    /// Exchange of the right pair.
    Sigma2,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::Sigma1 => 1,
            Generator::Sigma2 => 2,
        }
    }

    pub fn from_index(index: i64) -> Result<Generator, BraidError> {
        match index {
            1 => Ok(Generator::Sigma1),
            2 => Ok(Generator::Sigma2),
            other => Err(BraidError::InvalidGenerator(other)),
        }
    }

    pub fn other(self) -> Generator {
        match self {
            Generator::Sigma1 => Generator::Sigma2,
            Generator::Sigma2 => Generator::Sigma1,
        }
    }
}

/// One power of an elementary exchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub generator: Generator,
    pub exponent: i64,
}

impl Factor {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        Self { generator, exponent }
    }
}

struct Generators {
    sigma: [Unitary2; 2],
}

static GENERATORS: LazyLock<Generators> = LazyLock::new(|| {
    let s1 = Unitary2::from_entries_unchecked([
        [Complex64::from_polar(1.0, -4.0 * PI / 5.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, 3.0 * PI / 5.0)],
    ]);
    let f = f_matrix();
    let f = Unitary2::from_entries_unchecked([
        [Complex64::new(f[0][0], 0.0), Complex64::new(f[0][1], 0.0)],
        [Complex64::new(f[1][0], 0.0), Complex64::new(f[1][1], 0.0)],
    ]);
    // F is real orthogonal, so its inverse is its adjoint.
    let s2 = f.adjoint() * s1 * f;
    Generators { sigma: [s1, s2] }
});

/// Elementary braid matrix for generator `index` (1 or 2).
pub fn sigma(index: i64) -> Result<Unitary2, BraidError> {
    Ok(generator_matrix(Generator::from_index(index)?))
}

pub fn generator_matrix(g: Generator) -> Unitary2 {
    GENERATORS.sigma[usize::from(g.index() - 1)]
}

/// `sigma_g^exponent`, computed by repeated squaring on the exact exponent.
pub fn factor_matrix(factor: Factor) -> Unitary2 {
    generator_matrix(factor.generator).pow(factor.exponent)
}

/// A braid word on three strands in temporal order.
///
/// Any sequence of factors is accepted here, including zero exponents and
/// repeated generators; [`BraidWord::normalize`] produces the merged form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    factors: Vec<Factor>,
}

impl BraidWord {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from `(generator index, exponent)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, BraidError> {
        pairs
            .iter()
            .map(|&(g, e)| Ok(Factor::new(Generator::from_index(g)?, e)))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of power slots.
    pub fn slots(&self) -> usize {
        self.factors.len()
    }

    /// Number of elementary crossings, `sum |exponent|`.
    pub fn crossings(&self) -> u64 {
        self.factors.iter().map(|f| f.exponent.unsigned_abs()).sum()
    }

    pub fn push(&mut self, factor: Factor) {
        self.factors.push(factor);
    }

    /// Temporal concatenation: `self` happens first, then `other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        BraidWord { factors }
    }

    /// Reverses the factor order, converting between temporal and operator
    /// order.
    pub fn reversed(&self) -> BraidWord {
        BraidWord { factors: self.factors.iter().rev().copied().collect() }
    }

    /// The word's operator: the temporally first factor acts first.
    pub fn evaluate(&self) -> Unitary2 {
        self.factors
            .iter()
            .fold(Unitary2::IDENTITY, |acc, &f| factor_matrix(f) * acc)
    }

    /// True iff adjacent factors use distinct generators and no exponent is
    /// zero.
    pub fn is_merged(&self) -> bool {
        self.factors.iter().all(|f| f.exponent != 0)
            && self.factors.windows(2).all(|w| w[0].generator != w[1].generator)
    }

    /// Merges runs of the same generator, reduces each exponent modulo 10
    /// to the representative of least magnitude (`+5` for the half period)
    /// and drops identity factors.
    pub fn normalize(&self) -> BraidWord {
        let mut out: Vec<Factor> = Vec::with_capacity(self.factors.len());
        for &f in &self.factors {
            match out.last_mut() {
                Some(last) if last.generator == f.generator => {
                    last.exponent = reduce_exponent(last.exponent + reduce_exponent(f.exponent));
                    if last.exponent == 0 {
                        out.pop();
                    }
                }
                _ => {
                    let e = reduce_exponent(f.exponent);
                    if e != 0 {
                        out.push(Factor::new(f.generator, e));
                    }
                }
            }
        }
        BraidWord { factors: out }
    }

    /// Weave form: strictly alternating generators, every exponent in
    /// `{-4, -2, +2, +4}`.
    pub fn is_weave(&self) -> bool {
        self.factors.iter().all(|f| WEAVE_EXPONENTS.contains(&f.exponent))
            && self.factors.windows(2).all(|w| w[0].generator != w[1].generator)
    }

    pub fn first_generator(&self) -> Option<Generator> {
        self.factors.first().map(|f| f.generator)
    }

    pub fn last_generator(&self) -> Option<Generator> {
        self.factors.last().map(|f| f.generator)
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.factors.iter().map(|f| f.exponent).collect()
    }

    /// Parses the text form, then interprets it in the given order.
    pub fn parse_with_order(text: &str, order: WordOrder) -> Result<BraidWord, BraidError> {
        let w: BraidWord = text.parse()?;
        Ok(match order {
            WordOrder::Temporal => w,
            WordOrder::Operator => w.reversed(),
        })
    }
}

/// Reduces an exponent into `{-4, ..., +5}` using `sigma^10 = I`.
pub fn reduce_exponent(e: i64) -> i64 {
    let r = e.rem_euclid(PERIOD);
    if r > PERIOD / 2 {
        r - PERIOD
    } else {
        r
    }
}

/// Reading order of a textual braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordOrder {
    /// Left to right is the order in which exchanges happen.
    #[default]
    Temporal,
    /// Left to right is the operator product, so the rightmost factor happens
    /// first.
    Operator,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}^{}", factor.generator.index(), factor.exponent)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Whitespace-separated tokens `s<g>^<e>` in temporal order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut factors = Vec::new();
        for (k, token) in s.split_whitespace().enumerate() {
            let err = |reason: &str| BraidError::Parse {
                position: k + 1,
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let body = token.strip_prefix('s').ok_or_else(|| err("expected 's<g>^<e>'"))?;
            let (g, e) = body.split_once('^').ok_or_else(|| err("missing '^'"))?;
            let g: i64 = g.parse().map_err(|_| err("generator is not an integer"))?;
            let generator = Generator::from_index(g)
                .map_err(|_| err("generator out of range for three anyons"))?;
            let exponent: i64 = e.parse().map_err(|_| err("exponent is not an integer"))?;
            factors.push(Factor::new(generator, exponent));
        }
        Ok(BraidWord { factors })
    }
}

/// A braid word in weave form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidWord", into = "BraidWord")]
pub struct WeaveWord(BraidWord);

impl WeaveWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn as_word(&self) -> &BraidWord {
        &self.0
    }

    pub fn into_word(self) -> BraidWord {
        self.0
    }
}

impl TryFrom<BraidWord> for WeaveWord {
    type Error = BraidError;

    fn try_from(w: BraidWord) -> Result<Self, Self::Error> {
        if w.is_weave() {
            Ok(WeaveWord(w))
        } else {
            Err(BraidError::Parse {
                position: 0,
                token: w.to_string(),
                reason: "not a weave".to_string(),
            })
        }
    }
}

impl From<WeaveWord> for BraidWord {
    fn from(w: WeaveWord) -> Self {
        w.0
    }
}

impl std::ops::Deref for WeaveWord {
    type Target = BraidWord;

    fn deref(&self) -> &BraidWord {
        &self.0
    }
}

impl fmt::Display for WeaveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::TAU;

    fn word(pairs: &[(i64, i64)]) -> BraidWord {
        BraidWord::from_pairs(pairs).unwrap()
    }

    #[test]
    fn sigma1_is_diagonal_phases() {
        let s = sigma(1).unwrap();
        assert!((s.get(0, 0) - Complex64::from_polar(1.0, -4.0 * PI / 5.0)).norm() < 1e-15);
        assert!((s.get(1, 1) - Complex64::from_polar(1.0, 3.0 * PI / 5.0)).norm() < 1e-15);
        assert_eq!(s.get(0, 1), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sigma2_entries() {
        let s = sigma(2).unwrap();
        assert!((s.get(1, 1) - Complex64::new(-TAU, 0.0)).norm() < 1e-12);
        let expected = Complex64::from_polar(-TAU, -PI / 5.0);
        assert!((s.get(0, 0) - expected).norm() < 1e-12);
        assert!((s.get(0, 0) - Complex64::new(-0.5, 0.3633)).norm() < 1e-4);
        // symmetric; agrees with the lower-left printed entry sqrt(tau) e^{-3i pi/5}
        assert!((s.get(0, 1) - s.get(1, 0)).norm() < 1e-12);
        let lower = Complex64::from_polar(TAU.sqrt(), -3.0 * PI / 5.0);
        assert!((s.get(1, 0) - lower).norm() < 1e-12);
        assert!(s.is_unitary(1e-12));
    }

    #[test]
    fn invalid_generator() {
        assert_eq!(sigma(3), Err(BraidError::InvalidGenerator(3)));
        assert_eq!(sigma(0), Err(BraidError::InvalidGenerator(0)));
    }

    #[test]
    fn tenth_power_is_identity() {
        for g in [1, 2] {
            let s = sigma(g).unwrap();
            assert!(s.pow(10).max_abs_diff(&Unitary2::IDENTITY) < 1e-12);
        }
    }

    #[test]
    fn braid_relation() {
        let (a, b) = (sigma(1).unwrap(), sigma(2).unwrap());
        assert!((a * b * a).max_abs_diff(&(b * a * b)) < 1e-12);
    }

    #[test]
    fn evaluate_basics() {
        assert_eq!(BraidWord::empty().evaluate(), Unitary2::IDENTITY);
        let w = word(&[(1, 1), (1, -1)]);
        assert!(w.evaluate().max_abs_diff(&Unitary2::IDENTITY) < 1e-15);
    }

    #[test]
    fn evaluate_applies_first_factor_first() {
        let w = word(&[(1, 2), (2, 4)]);
        let expected = sigma(2).unwrap().pow(4) * sigma(1).unwrap().pow(2);
        assert!(w.evaluate().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(word(&[(1, 8)]).normalize(), word(&[(1, -2)]));
        assert_eq!(word(&[(1, 2), (1, 4)]).normalize(), word(&[(1, -4)]));
        assert_eq!(word(&[(1, 2), (2, 0), (1, -2)]).normalize(), BraidWord::empty());
        assert_eq!(word(&[(2, 5)]).normalize(), word(&[(2, 5)]));
        assert_eq!(word(&[(2, -5)]).normalize(), word(&[(2, 5)]));
        // cancellation exposes a new same-generator neighbour
        assert_eq!(word(&[(1, 2), (2, 3), (2, -3), (1, 2)]).normalize(), word(&[(1, 4)]));
    }

    #[test]
    fn reduced_exponent_range() {
        for e in -50..50 {
            let r = reduce_exponent(e);
            assert!((-4..=5).contains(&r));
            assert_eq!((e - r).rem_euclid(10), 0);
        }
    }

    #[test]
    fn weave_predicate() {
        assert!(word(&[(1, 2), (2, 4)]).is_weave());
        assert!(!word(&[(1, 3)]).is_weave());
        assert!(!word(&[(1, 2), (1, 2)]).is_weave());
        assert!(!word(&[(1, 6)]).is_weave());
        assert!(BraidWord::empty().is_weave());
        assert!(WeaveWord::try_from(word(&[(2, -2), (1, 4)])).is_ok());
        assert!(WeaveWord::try_from(word(&[(2, 1)])).is_err());
    }

    #[test]
    fn text_round_trip() {
        let w = word(&[(1, 4), (2, -2)]);
        assert_eq!(w.to_string(), "s1^4 s2^-2");
        assert_eq!("s1^4 s2^-2".parse::<BraidWord>().unwrap(), w);
        assert_eq!("".parse::<BraidWord>().unwrap(), BraidWord::empty());
        assert_eq!("  s1^+2\ts2^0 ".parse::<BraidWord>().unwrap(), word(&[(1, 2), (2, 0)]));
    }

    #[test]
    fn text_errors_carry_position() {
        match "s1^2 s3^2".parse::<BraidWord>() {
            Err(BraidError::Parse { position, token, .. }) => {
                assert_eq!(position, 2);
                assert_eq!(token, "s3^2");
            }
            other => panic!("unexpected {other:?}"),
        }
        for bad in ["x1^2", "s1", "s1^", "s^2", "s1^two", "s-1^2"] {
            assert!(bad.parse::<BraidWord>().is_err(), "{bad}");
        }
    }

    #[test]
    fn operator_order_reverses() {
        let w = BraidWord::parse_with_order("s1^4 s2^-2", WordOrder::Operator).unwrap();
        assert_eq!(w, word(&[(2, -2), (1, 4)]));
    }

    #[test]
    fn crossings_and_slots() {
        let w = word(&[(1, 4), (2, -2), (1, 2)]);
        assert_eq!(w.crossings(), 8);
        assert_eq!(w.slots(), 3);
    }
}
