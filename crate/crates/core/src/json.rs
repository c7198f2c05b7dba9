//! JSON formats.
//!
//! * `EisensteinInt` is `[a, b]`; `EisensteinFrac` is `{"num": [a, b], "den": d}`.
//! * A matrix file is `{"matrix": [[[a, b], x4], x4]}`, row-major.
//! * A decomposition is `{"unit": [a, b], "word": "<text>"}`.
//!
//! Integers whose magnitude exceeds `2^53 - 1` are written as decimal strings
//! so that consumers using doubles do not lose precision. Both forms are
//! accepted on input.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::decomposer::{Decomposition, ReductionStep};
use crate::eisenstein::{EisensteinFrac, EisensteinInt, Unit};
use crate::error::Result;
use crate::finite_unitary::{FiniteUnitary, UWord};
use crate::hermitian::{GroupMatrix, HeisenbergParam, Matrix4};
use crate::words::{DecompositionResult, Word};

const MAX_SAFE: i64 = (1 << 53) - 1;

/// A big integer in its JSON representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= BigInt::from(MAX_SAFE) {
            s.serialize_i64(i64::try_from(&self.0).expect("within 53 bits"))
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Signed(x) => Ok(JsonInt(x.into())),
            Repr::Unsigned(x) => Ok(JsonInt(x.into())),
            Repr::Text(s) => s
                .trim()
                .parse()
                .map(JsonInt)
                .map_err(|_| D::Error::custom(format!("not an integer: {s:?}"))),
        }
    }
}

impl Serialize for EisensteinInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&JsonInt(self.a.clone()))?;
        seq.serialize_element(&JsonInt(self.b.clone()))?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for EisensteinInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[JsonInt; 2]>::deserialize(d)?;
        Ok(EisensteinInt::new(a.0, b.0))
    }
}

impl Serialize for Unit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Unit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let x = EisensteinInt::deserialize(d)?;
        Unit::from_value(&x).ok_or_else(|| D::Error::custom(format!("{x} is not a unit")))
    }
}

#[derive(Serialize, Deserialize)]
struct FracRepr {
    num: EisensteinInt,
    den: JsonInt,
}

impl Serialize for EisensteinFrac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FracRepr {
            num: self.num().clone(),
            den: JsonInt(self.den().clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EisensteinFrac {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = FracRepr::deserialize(d)?;
        EisensteinFrac::new(r.num, r.den.0).map_err(D::Error::custom)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.serialize())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Word::parse(&text).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    matrix: [[EisensteinInt; 4]; 4],
}

/// Parses the matrix file format without checking membership.
pub fn parse_matrix(text: &str) -> Result<Matrix4> {
    let repr: MatrixRepr = serde_json::from_str(text)?;
    Ok(Matrix4::new(repr.matrix))
}

/// Parses a matrix file and checks `G* J G = J`, naming the first failing
/// entry of the form on rejection.
pub fn parse_group_matrix(text: &str) -> Result<GroupMatrix> {
    GroupMatrix::new(parse_matrix(text)?)
}

pub fn matrix_value(m: &Matrix4) -> Value {
    json!({ "matrix": m.rows() })
}

/// Compact one-line JSON for a matrix.
pub fn matrix_to_json(m: &Matrix4) -> String {
    matrix_value(m).to_string()
}

#[derive(Serialize, Deserialize)]
struct ResultRepr {
    unit: Unit,
    word: Word,
}

impl Serialize for DecompositionResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ResultRepr {
            unit: self.lambda,
            word: self.word.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompositionResult {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ResultRepr::deserialize(d)?;
        Ok(DecompositionResult {
            lambda: r.unit,
            word: r.word,
        })
    }
}

pub fn step_value(step: &ReductionStep) -> Value {
    json!({
        "tau": step.tau,
        "k": JsonInt(step.k.clone()),
        "n_before": JsonInt(step.n_before.clone()),
        "n_after": JsonInt(step.n_after.clone()),
    })
}

fn rotation_value(u: &FiniteUnitary) -> Value {
    json!(u.entries())
}

pub fn stabilizer_value(p: &HeisenbergParam) -> Value {
    json!({
        "unit": p.lambda,
        "tau": p.translation.tau(),
        "k": JsonInt(p.translation.k().clone()),
        "rotation": rotation_value(&p.rotation),
    })
}

/// `{"unit", "word", "steps"}`, plus `"trace"` and `"stabilizer"` when
/// `with_trace` is set.
pub fn decomposition_value(d: &Decomposition, with_trace: bool) -> Value {
    let mut v = json!({
        "unit": d.result.lambda,
        "word": d.result.word,
        "steps": d.trace.steps.len(),
    });
    if with_trace {
        let steps: Vec<Value> = d.trace.steps.iter().map(step_value).collect();
        v["trace"] = Value::Array(steps);
        v["stabilizer"] = stabilizer_value(&d.trace.stabilizer);
    }
    v
}

pub fn u2_row_value(u: &FiniteUnitary, w: &UWord) -> Value {
    json!({ "element": rotation_value(u), "word": w.to_string() })
}

/// Accepts either a decomposition object (`"unit"` optional, extra keys
/// ignored) or bare word text.
pub fn parse_word_input(text: &str) -> Result<DecompositionResult> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        #[derive(Deserialize)]
        struct Loose {
            unit: Option<Unit>,
            word: Word,
        }
        let l: Loose = serde_json::from_str(trimmed)?;
        Ok(DecompositionResult {
            lambda: l.unit.unwrap_or(Unit::ONE),
            word: l.word,
        })
    } else {
        Ok(DecompositionResult {
            lambda: Unit::ONE,
            word: Word::parse(trimmed)?,
        })
    }
}
