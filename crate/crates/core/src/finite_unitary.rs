//! The finite group `U(2; Z[w])` of order 72 and its generation by
//! `U1 = [[0,1],[1,0]]` and `U2 = diag(-w, 1)`.
//!
//! Words are looked up in a breadth-first table over the Cayley graph with
//! generators `{U1, U2, U2^-1}`, built once on first use.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::hermitian::{rotation_matrix, GroupMatrix};

type Entries = [[EisensteinInt; 2]; 2];

fn mul2(x: &Entries, y: &Entries) -> Entries {
    std::array::from_fn(|j| std::array::from_fn(|k| &(&x[j][0] * &y[0][k]) + &(&x[j][1] * &y[1][k])))
}

/// A 2x2 unitary matrix over `Z[w]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteUnitary {
    m: Entries,
}

impl FiniteUnitary {
    pub fn new(m: Entries) -> Result<Self> {
        if u_membership(&m) {
            Ok(FiniteUnitary { m })
        } else {
            Err(Error::NotMember(
                "matrix is not diagonal or antidiagonal with unit entries".into(),
            ))
        }
    }

    pub fn identity() -> Self {
        Self::diag(Unit::ONE, Unit::ONE)
    }

    pub fn u1() -> Self {
        Self::antidiag(Unit::ONE, Unit::ONE)
    }

    /// `diag(-w, 1)`.
    pub fn u2() -> Self {
        Self::diag(Unit::from_exponent(5), Unit::ONE)
    }

    pub fn diag(a: Unit, b: Unit) -> Self {
        FiniteUnitary {
            m: [
                [a.value(), EisensteinInt::zero()],
                [EisensteinInt::zero(), b.value()],
            ],
        }
    }

    /// `[[0, b], [a, 0]]`.
    pub fn antidiag(a: Unit, b: Unit) -> Self {
        FiniteUnitary {
            m: [
                [EisensteinInt::zero(), b.value()],
                [a.value(), EisensteinInt::zero()],
            ],
        }
    }

    pub fn entries(&self) -> &Entries {
        &self.m
    }

    /// `U*`, which is also `U^{-1}`.
    pub fn adjoint(&self) -> Self {
        FiniteUnitary {
            m: std::array::from_fn(|j| std::array::from_fn(|k| self.m[k][j].conj())),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl std::ops::Mul for &FiniteUnitary {
    type Output = FiniteUnitary;
    fn mul(self, rhs: &FiniteUnitary) -> FiniteUnitary {
        FiniteUnitary {
            m: mul2(&self.m, &rhs.m),
        }
    }
}

impl fmt::Display for FiniteUnitary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// `true` iff `m` is diagonal or antidiagonal with both non-zero entries
/// units. Over `Z[w]` this is equivalent to `m* m = I`.
pub fn u_membership(m: &Entries) -> bool {
    let unit = |x: &EisensteinInt| x.is_unit();
    let zero = |x: &EisensteinInt| x.is_zero();
    (unit(&m[0][0]) && unit(&m[1][1]) && zero(&m[0][1]) && zero(&m[1][0]))
        || (zero(&m[0][0]) && zero(&m[1][1]) && unit(&m[0][1]) && unit(&m[1][0]))
}

/// All 72 elements, in sorted order.
pub fn enumerate_group() -> Vec<FiniteUnitary> {
    let mut out = Vec::with_capacity(72);
    for a in Unit::all() {
        for b in Unit::all() {
            out.push(FiniteUnitary::diag(a, b));
            out.push(FiniteUnitary::antidiag(a, b));
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UGen {
    U1,
    U2,
}

impl UGen {
    pub fn matrix(self) -> FiniteUnitary {
        match self {
            UGen::U1 => FiniteUnitary::u1(),
            UGen::U2 => FiniteUnitary::u2(),
        }
    }

    pub fn order(self) -> i64 {
        match self {
            UGen::U1 => 2,
            UGen::U2 => 6,
        }
    }
}

/// A word in `U1, U2` read left to right. Exponents are canonical:
/// `U1` in `{1}`, `U2` in `{-2, ..., 3} \ {0}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UWord(Vec<(UGen, i64)>);

impl UWord {
    pub fn items(&self) -> &[(UGen, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends `g^e`, merging with the last letter and reducing exponents.
    pub fn push(&mut self, g: UGen, e: i64) {
        let e = match self.0.last() {
            Some(&(last, f)) if last == g => {
                self.0.pop();
                e + f
            }
            _ => e,
        };
        let e = canonical_exponent(g, e);
        if e != 0 {
            self.0.push((g, e));
        }
    }

    pub fn evaluate(&self) -> FiniteUnitary {
        let mut acc = FiniteUnitary::identity();
        for &(g, e) in &self.0 {
            let step = if e < 0 { g.matrix().adjoint() } else { g.matrix() };
            for _ in 0..e.unsigned_abs() {
                acc = &acc * &step;
            }
        }
        acc
    }
}

pub(crate) fn canonical_exponent(g: UGen, e: i64) -> i64 {
    let r = e.rem_euclid(g.order());
    if g == UGen::U2 && r > 3 {
        r - 6
    } else {
        r
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g:?}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn word_table() -> &'static HashMap<FiniteUnitary, UWord> {
    static TABLE: OnceLock<HashMap<FiniteUnitary, UWord>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let steps = [(UGen::U1, 1), (UGen::U2, 1), (UGen::U2, -1)];
        let mut table = HashMap::new();
        let mut queue = VecDeque::new();
        table.insert(FiniteUnitary::identity(), UWord::default());
        queue.push_back(FiniteUnitary::identity());
        while let Some(x) = queue.pop_front() {
            let word = table[&x].clone();
            for (g, e) in steps {
                let step = if e < 0 { g.matrix().adjoint() } else { g.matrix() };
                let y = &x * &step;
                if !table.contains_key(&y) {
                    let mut w = word.clone();
                    w.push(g, e);
                    table.insert(y.clone(), w);
                    queue.push_back(y);
                }
            }
        }
        table
    })
}

/// All elements reachable from `{U1, U2}`, i.e. the generated subgroup.
pub fn generated_closure() -> Vec<FiniteUnitary> {
    let mut out: Vec<_> = word_table().keys().cloned().collect();
    out.sort();
    out
}

/// A shortest word (over `U1, U2^{+-1}`) evaluating to `u`.
pub fn u_decompose(u: &FiniteUnitary) -> Result<UWord> {
    word_table()
        .get(u)
        .cloned()
        .ok_or_else(|| Error::NotMember(format!("{u} is not generated by U1, U2")))
}

/// `M_U = diag(1, U, 1)`; a homomorphism into `U(3,1; Z[w])`.
pub fn lift(u: &FiniteUnitary) -> GroupMatrix {
    rotation_matrix(u)
}

/// Checks `m` and lifts it.
pub fn lift_raw(m: Entries) -> Result<GroupMatrix> {
    Ok(lift(&FiniteUnitary::new(m)?))
}

/// One row per group element, in sorted element order.
pub fn word_table_rows() -> Vec<(FiniteUnitary, UWord)> {
    enumerate_group()
        .into_iter()
        .map(|u| {
            let w = u_decompose(&u).expect("table covers the group");
            (u, w)
        })
        .collect()
}
