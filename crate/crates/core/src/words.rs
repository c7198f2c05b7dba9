//! Words over the four generators
//!
//! * `N` = `N_((1,0), sqrt3)`, the basic Heisenberg translation,
//! * `A` = `M_U1`, the coordinate swap,
//! * `B` = `M_U2`, the rotation by `-w` in the first coordinate,
//! * `R`, the inversion.
//!
//! A word acts by left-to-right matrix multiplication. The text form is
//! `WORD := (TOKEN ' '*)*`, `TOKEN := ('N'|'A'|'B'|'R') ('^' SIGNED_INT)?`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::finite_unitary::{lift, FiniteUnitary, UGen, UWord};
use crate::hermitian::{inversion, unit_correction, GroupMatrix, Translation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    N,
    A,
    B,
    R,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::N, Generator::A, Generator::B, Generator::R];

    /// Multiplicative order, `None` for the translation.
    pub fn order(self) -> Option<u32> {
        match self {
            Generator::N => None,
            Generator::A | Generator::R => Some(2),
            Generator::B => Some(6),
        }
    }

    pub fn matrix(self) -> GroupMatrix {
        self.power(&BigInt::one())
    }

    /// `self^e` built directly (no repeated multiplication).
    pub fn power(self, e: &BigInt) -> GroupMatrix {
        match self {
            Generator::N => Translation::new([EisensteinInt::from_int(e.clone()), EisensteinInt::zero()], e.clone())
                .expect("N^e has |tau|^2 = e^2, same parity as e")
                .matrix(),
            Generator::A => {
                if e.is_odd() {
                    lift(&FiniteUnitary::u1())
                } else {
                    GroupMatrix::identity()
                }
            }
            Generator::B => {
                let r = e.mod_floor(&BigInt::from(6)).to_i64().expect("reduced mod 6");
                // U2^r = diag((-w)^r, 1) and -w = z^5
                lift(&FiniteUnitary::diag(Unit::from_exponent(5 * r), Unit::ONE))
            }
            Generator::R => {
                if e.is_odd() {
                    inversion()
                } else {
                    GroupMatrix::identity()
                }
            }
        }
    }

    fn letter(self) -> char {
        match self {
            Generator::N => 'N',
            Generator::A => 'A',
            Generator::B => 'B',
            Generator::R => 'R',
        }
    }

    /// Canonical exponent: A and R in `{0, 1}`, B in `{-2, ..., 3}`.
    fn reduce(self, e: BigInt) -> BigInt {
        match self.order() {
            None => e,
            Some(ord) => {
                let r = e.mod_floor(&BigInt::from(ord));
                if ord == 6 && r > BigInt::from(3) {
                    r - 6
                } else {
                    r
                }
            }
        }
    }
}

impl From<UGen> for Generator {
    fn from(g: UGen) -> Self {
        match g {
            UGen::U1 => Generator::A,
            UGen::U2 => Generator::B,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A sequence of generator powers. May be unnormalised; see [`Word::normalize`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    items: Vec<(Generator, BigInt)>,
}

impl Word {
    pub fn new(items: Vec<(Generator, BigInt)>) -> Self {
        Word { items }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(g: Generator, e: impl Into<BigInt>) -> Self {
        Word::new(vec![(g, e.into())])
    }

    pub fn items(&self) -> &[(Generator, BigInt)] {
        &self.items
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Number of `(generator, exponent)` syllables.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn push(&mut self, g: Generator, e: impl Into<BigInt>) {
        self.items.push((g, e.into()));
    }

    pub fn extend(&mut self, other: &Word) {
        self.items.extend(other.items.iter().cloned());
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word::new(self.items.iter().rev().map(|(g, e)| (*g, -e)).collect())
    }

    /// `self` repeated `n` times.
    pub fn repeat(&self, n: usize) -> Word {
        let mut w = Word::empty();
        for _ in 0..n {
            w.extend(self);
        }
        w
    }

    pub fn from_uword(u: &UWord) -> Word {
        Word::new(
            u.items()
                .iter()
                .map(|&(g, e)| (Generator::from(g), BigInt::from(e)))
                .collect(),
        )
    }

    /// Merge neighbours with equal generators, reduce exponents by generator
    /// order and drop identities. Preserves evaluation.
    pub fn normalize(&self) -> Word {
        let mut out: Vec<(Generator, BigInt)> = Vec::with_capacity(self.items.len());
        for (g, e) in &self.items {
            let mut e = g.reduce(e.clone());
            if let Some((last, f)) = out.last() {
                if last == g {
                    e = g.reduce(e + f);
                    out.pop();
                }
            }
            if !e.is_zero() {
                out.push((*g, e));
            }
        }
        Word { items: out }
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize() == *self
    }

    pub fn evaluate(&self) -> GroupMatrix {
        let mut acc = GroupMatrix::identity();
        for (g, e) in &self.items {
            if !e.is_zero() {
                acc = &acc * &g.power(e);
            }
        }
        acc
    }

    /// Text form of the normalised word.
    pub fn serialize(&self) -> String {
        let n = self.normalize();
        let mut s = String::new();
        for (i, (g, e)) in n.items.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push(g.letter());
            if !e.is_one() {
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Word> {
        let bytes = text.as_bytes();
        let mut items = vec![];
        let mut i = 0;
        let err = |offset: usize, message: &str| Error::Parse {
            offset,
            message: message.to_string(),
        };
        while i < bytes.len() {
            let c = bytes[i];
            if c == b' ' {
                i += 1;
                continue;
            }
            let g = match c {
                b'N' => Generator::N,
                b'A' => Generator::A,
                b'B' => Generator::B,
                b'R' => Generator::R,
                _ => return Err(err(i, "expected one of N, A, B, R")),
            };
            i += 1;
            let mut e = BigInt::one();
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits {
                    return Err(err(i, "expected an integer exponent"));
                }
                e = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "invalid exponent"))?;
            }
            items.push((g, e));
        }
        Ok(Word { items })
    }

    /// Total number of generator letters, counting `g^e` as `|e|`.
    pub fn letter_count(&self) -> BigInt {
        self.items.iter().map(|(_, e)| e.abs()).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

/// `G = C_lambda * evaluate(word)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub lambda: Unit,
    pub word: Word,
}

impl DecompositionResult {
    pub fn evaluate(&self) -> GroupMatrix {
        &unit_correction(self.lambda) * &self.word.evaluate()
    }
}
