//! Small-integer reference arithmetic, written independently of the library
//! so the tests do not check the code against itself.

#![allow(dead_code)]

use num_traits::ToPrimitive;
use picard::{EisensteinInt, Matrix4};

/// `a + b w` with `w^2 = -1 - w`.
pub type E = (i64, i64);
pub type M = [[E; 4]; 4];

pub const ZERO: E = (0, 0);
pub const ONE: E = (1, 0);
pub const W: E = (0, 1);

pub fn add(x: E, y: E) -> E {
    (x.0 + y.0, x.1 + y.1)
}

pub fn neg(x: E) -> E {
    (-x.0, -x.1)
}

pub fn mul(x: E, y: E) -> E {
    let (a, b) = x;
    let (c, d) = y;
    (a * c - b * d, a * d + b * c - b * d)
}

/// `conj(w) = w^2 = -1 - w`.
pub fn conj(x: E) -> E {
    (x.0 - x.1, -x.1)
}

pub fn norm(x: E) -> i64 {
    x.0 * x.0 - x.0 * x.1 + x.1 * x.1
}

pub fn mat_mul(p: &M, q: &M) -> M {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                out[i][j] = add(out[i][j], mul(p[i][k], q[k][j]));
            }
        }
    }
    out
}

pub fn adjoint(p: &M) -> M {
    let mut out = [[ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = conj(p[j][i]);
        }
    }
    out
}

pub fn identity() -> M {
    let mut out = [[ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = ONE;
    }
    out
}

pub fn form_j() -> M {
    let mut j = [[ZERO; 4]; 4];
    j[0][3] = ONE;
    j[3][0] = ONE;
    j[1][1] = ONE;
    j[2][2] = ONE;
    j
}

pub fn preserves_form(g: &M) -> bool {
    mat_mul(&mat_mul(&adjoint(g), &form_j()), g) == form_j()
}

pub fn to_small(m: &Matrix4) -> M {
    let mut out = [[ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let x = m.get(i, j);
            *e = (x.a.to_i64().expect("small entry"), x.b.to_i64().expect("small entry"));
        }
    }
    out
}

pub fn to_big(x: E) -> EisensteinInt {
    EisensteinInt::new(x.0, x.1)
}

/// `N_(tau, k sqrt3)` written out from the block formula.
/// Corner `(-|tau|^2 + i k sqrt3)/2` with `i sqrt3 = 1 + 2w`.
pub fn heisenberg(tau: [E; 2], k: i64) -> M {
    let n = norm(tau[0]) + norm(tau[1]);
    assert_eq!((k - n).rem_euclid(2), 0, "parity");
    let corner = ((k - n) / 2, k);
    let mut m = identity();
    m[0][1] = neg(conj(tau[0]));
    m[0][2] = neg(conj(tau[1]));
    m[0][3] = corner;
    m[1][3] = tau[0];
    m[2][3] = tau[1];
    m
}

pub fn rotation(u: [[E; 2]; 2]) -> M {
    let mut m = identity();
    m[1][1] = u[0][0];
    m[1][2] = u[0][1];
    m[2][1] = u[1][0];
    m[2][2] = u[1][1];
    m
}

pub fn n1() -> M {
    heisenberg([ONE, ZERO], 1)
}

pub fn m_u1() -> M {
    rotation([[ZERO, ONE], [ONE, ZERO]])
}

pub fn m_u2() -> M {
    rotation([[neg(W), ZERO], [ZERO, ONE]])
}

pub fn r() -> M {
    let mut m = [[ZERO; 4]; 4];
    m[0][3] = ONE;
    m[3][0] = ONE;
    m[1][1] = (-1, 0);
    m[2][2] = (-1, 0);
    m
}

pub fn pow(g: &M, n: u32) -> M {
    (0..n).fold(identity(), |acc, _| mat_mul(&acc, g))
}
