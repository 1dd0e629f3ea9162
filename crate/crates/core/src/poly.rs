//! Noncommutative polynomials in the two letters `s` and `x` with Gaussian
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S,
    X,
}

impl Letter {
    pub(crate) fn index(self) -> usize {
        match self {
            Letter::S => 0,
            Letter::X => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::S => "s",
            Letter::X => "x",
        })
    }
}

/// A nonempty product of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Domain("words must be nonempty".into()));
        }
        Ok(Self(letters))
    }

    pub fn letter(letter: Letter) -> Self {
        Self(vec![letter])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Self(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                's' | 'S' => Ok(Letter::S),
                'x' | 'X' => Ok(Letter::X),
                other => Err(Error::Domain(format!("unknown letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// `constant + Σ coeff · word`, with zero terms removed and terms ordered by word.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, GaussianRational>,
    constant: GaussianRational,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self {
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn letter(letter: Letter) -> Self {
        Self::monomial(GaussianRational::one(), Word::letter(letter))
    }

    pub fn monomial(coeff: GaussianRational, word: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, word);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (GaussianRational, Word)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (c, w) in terms {
            p.add_term(c, w);
        }
        p
    }

    pub fn add_term(&mut self, coeff: GaussianRational, word: Word) {
        let entry = self.terms.entry(word).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Word, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> &GaussianRational {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    pub fn scale(&self, factor: &GaussianRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
            constant: &self.constant * factor,
        }
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.scale(&GaussianRational::real(factor.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out.constant += &other.constant;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::constant(&self.constant * &other.constant);
        for (w, c) in &self.terms {
            out.add_term(c * &other.constant, w.clone());
            for (v, d) in &other.terms {
                out.add_term(c * d, w.concat(v));
            }
        }
        for (v, d) in &other.terms {
            out.add_term(&self.constant * d, v.clone());
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// The adjoint: words reversed, coefficients conjugated.
    pub fn adjoint(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.conj()))
                .collect(),
            constant: self.constant.conj(),
        }
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }

    /// Largest number of letters in any term.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

/// Writes `c` as a signed coefficient prefix: `(negative, text)`, with an empty
/// text for a unit.
fn coefficient_parts(c: &GaussianRational) -> (bool, String) {
    use num_traits::Signed;
    if c.im.is_zero() {
        let text = if c.re.abs().is_one() {
            String::new()
        } else {
            c.re.abs().to_string()
        };
        (c.re.is_negative(), text)
    } else if c.re.is_zero() {
        let text = if c.im.abs().is_one() {
            "i".to_string()
        } else {
            format!("{}i", c.im.abs())
        };
        (c.im.is_negative(), text)
    } else {
        (false, format!("({c})"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(bool, String)> = Vec::new();
        if !self.constant.is_zero() {
            let (neg, text) = coefficient_parts(&self.constant);
            items.push((
                neg,
                if text.is_empty() {
                    "1".to_string()
                } else {
                    text
                },
            ));
        }
        for (w, c) in &self.terms {
            let (neg, text) = coefficient_parts(c);
            items.push((neg, format!("{text}{w}")));
        }
        if items.is_empty() {
            return write!(f, "0");
        }
        for (i, (neg, text)) in items.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

/// Parses expressions such as `s + i[s,x]`, `x + i[x,s]`, `2sx - 1/3 i xs` or
/// `(s + x)*(s - x)`. Juxtaposition multiplies; `[a,b]` is the commutator.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = ExprParser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.chars.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn error(&self, msg: &str) -> Error {
        Error::Domain(format!(
            "polynomial syntax error at position {}: {msg}",
            self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.product()?;
        let mut acc = if negate {
            first.scale(&-GaussianRational::one())
        } else {
            first
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                Some('-') | Some('\u{2212}') => {
                    self.pos += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if starts_factor(c) => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('s') | Some('S') => {
                self.pos += 1;
                Ok(Polynomial::letter(Letter::S))
            }
            Some('x') | Some('X') => {
                self.pos += 1;
                Ok(Polynomial::letter(Letter::X))
            }
            Some('i') => {
                self.pos += 1;
                Ok(Polynomial::constant(GaussianRational::i()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Polynomial::commutator(&a, &b))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '/')
                {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                let value = parse_rational(&text).ok_or_else(|| self.error("bad number"))?;
                Ok(Polynomial::constant(GaussianRational::real(value)))
            }
            _ => Err(self.error("expected a factor")),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }
}

fn starts_factor(c: char) -> bool {
    matches!(c, 's' | 'S' | 'x' | 'X' | 'i' | '(' | '[') || c.is_ascii_digit()
}
