//! 4x4 Eisenstein matrices preserving the Hermitian form `<w, z> = z* J w`
//! of signature (3, 1), and the special elements of that group: Heisenberg
//! translations, rotations, the inversion `R` and the unit corrections
//! `C_l = diag(l, 1, 1, l)`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::eisenstein::{EisensteinFrac, EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::finite_unitary::FiniteUnitary;

/// A column vector in `C^{3,1}` with Eisenstein entries.
pub type Vector4 = [EisensteinInt; 4];

/// A plain 4x4 matrix over `Z[w]`, not necessarily in the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix4 {
    rows: [[EisensteinInt; 4]; 4],
}

impl Matrix4 {
    pub fn new(rows: [[EisensteinInt; 4]; 4]) -> Self {
        Matrix4 { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> EisensteinInt) -> Self {
        Matrix4 {
            rows: std::array::from_fn(|j| std::array::from_fn(|k| f(j, k))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|j, k| {
            if j == k {
                EisensteinInt::one()
            } else {
                EisensteinInt::zero()
            }
        })
    }

    /// The form `J`: ones at (1,4) and (4,1), `I_2` in the middle.
    pub fn form_j() -> Self {
        Self::from_fn(|j, k| match (j, k) {
            (0, 3) | (3, 0) | (1, 1) | (2, 2) => EisensteinInt::one(),
            _ => EisensteinInt::zero(),
        })
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &EisensteinInt {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[[EisensteinInt; 4]; 4] {
        &self.rows
    }

    pub fn into_rows(self) -> [[EisensteinInt; 4]; 4] {
        self.rows
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(|j, k| self.rows[k][j].conj())
    }

    pub fn apply(&self, v: &Vector4) -> Vector4 {
        std::array::from_fn(|j| {
            let mut acc = EisensteinInt::zero();
            for (k, vk) in v.iter().enumerate() {
                acc += &(&self.rows[j][k] * vk);
            }
            acc
        })
    }

    /// `M* J M`.
    pub fn form_image(&self) -> Matrix4 {
        let jm = &Matrix4::form_j() * self;
        &self.conj_transpose() * &jm
    }

    /// The first entry (1-based `(row, col)`) where `M* J M` differs from `J`,
    /// with the offending value.
    pub fn first_form_violation(&self) -> Option<(usize, usize, EisensteinInt)> {
        let image = self.form_image();
        let j = Matrix4::form_j();
        for r in 0..4 {
            for c in 0..4 {
                if image.rows[r][c] != j.rows[r][c] {
                    return Some((r + 1, c + 1, image.rows[r][c].clone()));
                }
            }
        }
        None
    }

    /// Largest entry norm, a rough size measure.
    pub fn max_entry_norm(&self) -> BigInt {
        self.rows
            .iter()
            .flatten()
            .map(EisensteinInt::norm)
            .max()
            .unwrap_or_default()
    }
}

impl<'a> Mul<&'a Matrix4> for &'a Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: &Matrix4) -> Matrix4 {
        Matrix4::from_fn(|j, k| {
            let mut acc = EisensteinInt::zero();
            for l in 0..4 {
                let x = &self.rows[j][l];
                let y = &rhs.rows[l][k];
                if !x.is_zero() && !y.is_zero() {
                    acc += &(x * y);
                }
            }
            acc
        })
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (k, c) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// `true` iff `M* J M = J` exactly.
pub fn check_membership(m: &Matrix4) -> bool {
    m.first_form_violation().is_none()
}

/// An element of `U(3,1; Z[w])`. The constructor enforces `G* J G = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMatrix(Matrix4);

impl GroupMatrix {
    pub fn new(m: Matrix4) -> Result<Self> {
        match m.first_form_violation() {
            None => Ok(GroupMatrix(m)),
            Some((r, c, v)) => {
                let expected = if matches!((r, c), (1, 4) | (4, 1) | (2, 2) | (3, 3)) {
                    1
                } else {
                    0
                };
                Err(Error::NotMember(format!(
                    "entry ({r},{c}) of G*JG is {v}, expected {expected}"
                )))
            }
        }
    }

    /// Wraps a matrix already known to preserve the form.
    pub(crate) fn new_unchecked(m: Matrix4) -> Self {
        debug_assert!(check_membership(&m));
        GroupMatrix(m)
    }

    pub fn identity() -> Self {
        GroupMatrix(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix4 {
        self.0
    }

    /// Entry at 0-based `(row, col)`; `g41` is `get(3, 0)`.
    pub fn get(&self, row: usize, col: usize) -> &EisensteinInt {
        self.0.get(row, col)
    }

    pub fn g41(&self) -> &EisensteinInt {
        self.0.get(3, 0)
    }

    /// `G^{-1} = J G* J`.
    pub fn inverse(&self) -> Self {
        let j = Matrix4::form_j();
        GroupMatrix(&(&j * &self.0.conj_transpose()) * &j)
    }

    pub fn fixes_infinity(&self) -> bool {
        self.g41().is_zero()
    }

    /// Affine coordinates `(g11/g41, g21/g41, g31/g41)` of `G(inf)`.
    pub fn image_of_infinity(&self) -> Result<BoundaryPoint> {
        let g41 = self.g41();
        if g41.is_zero() {
            return Err(Error::Domain(
                "g41 = 0: the element fixes infinity, which has no affine coordinates".into(),
            ));
        }
        let coords = [0, 1, 2].map(|j| {
            EisensteinFrac::quotient(self.get(j, 0), g41).expect("g41 checked non-zero")
        });
        Ok(BoundaryPoint { coords })
    }

    pub fn pow(&self, e: &BigInt) -> Self {
        let (base, mut n) = if e < &BigInt::zero() {
            (self.inverse(), -e)
        } else {
            (self.clone(), e.clone())
        };
        let mut acc = GroupMatrix::identity();
        let mut sq = base;
        let two = BigInt::from(2);
        while !n.is_zero() {
            if n.is_odd() {
                acc = &acc * &sq;
            }
            n /= &two;
            if !n.is_zero() {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl<'a> Mul<&'a GroupMatrix> for &'a GroupMatrix {
    type Output = GroupMatrix;
    fn mul(self, rhs: &GroupMatrix) -> GroupMatrix {
        GroupMatrix(&self.0 * &rhs.0)
    }
}

impl Mul for GroupMatrix {
    type Output = GroupMatrix;
    fn mul(self, rhs: GroupMatrix) -> GroupMatrix {
        &self * &rhs
    }
}

impl fmt::Display for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Homogeneous coordinates `psi(inf) = (1, 0, 0, 0)`.
pub fn psi_infinity() -> Vector4 {
    [
        EisensteinInt::one(),
        EisensteinInt::zero(),
        EisensteinInt::zero(),
        EisensteinInt::zero(),
    ]
}

/// Homogeneous coordinates `psi(0) = (0, 0, 0, 1)` of the origin.
pub fn psi_origin() -> Vector4 {
    [
        EisensteinInt::zero(),
        EisensteinInt::zero(),
        EisensteinInt::zero(),
        EisensteinInt::one(),
    ]
}

/// A finite boundary point, given by the affine coordinates of `G(inf)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPoint {
    pub coords: [EisensteinFrac; 3],
}

impl BoundaryPoint {
    /// The null-cone condition `2 Re(c1) = -|c2|^2 - |c3|^2`.
    pub fn satisfies_cone(&self) -> bool {
        let (re1, _) = self.coords[0].re_im();
        re1 * BigInt::from(2) == -(self.coords[1].abs_sq() + self.coords[2].abs_sq())
    }
}

/// A Heisenberg translation `N_(tau, t)` with `t = k * sqrt(3)`.
///
/// `k` and `|tau|^2` always have the same parity: that is exactly the
/// condition for the corner entry to lie in `Z[w]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Translation {
    tau: [EisensteinInt; 2],
    k: BigInt,
}

impl Translation {
    pub fn new(tau: [EisensteinInt; 2], k: impl Into<BigInt>) -> Result<Self> {
        let k = k.into();
        let norm = tau[0].norm() + tau[1].norm();
        if (&k - &norm).is_odd() {
            return Err(Error::Parity {
                k: k.to_string(),
                norm: norm.to_string(),
            });
        }
        Ok(Translation { tau, k })
    }

    pub fn identity() -> Self {
        Translation {
            tau: [EisensteinInt::zero(), EisensteinInt::zero()],
            k: BigInt::zero(),
        }
    }

    pub fn tau(&self) -> &[EisensteinInt; 2] {
        &self.tau
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// `|tau|^2`.
    pub fn tau_norm(&self) -> BigInt {
        self.tau[0].norm() + self.tau[1].norm()
    }

    /// The corner entry `(-|tau|^2 + i k sqrt3) / 2`, which is
    /// `((k - |tau|^2)/2) + k w` because `i sqrt3 = 1 + 2w`.
    pub fn corner(&self) -> EisensteinInt {
        let a = (&self.k - self.tau_norm()) / BigInt::from(2);
        EisensteinInt::new(a, self.k.clone())
    }

    pub fn matrix(&self) -> GroupMatrix {
        let z = EisensteinInt::zero;
        let o = EisensteinInt::one;
        let [t1, t2] = &self.tau;
        GroupMatrix::new_unchecked(Matrix4::new([
            [o(), -t1.conj(), -t2.conj(), self.corner()],
            [z(), o(), z(), t1.clone()],
            [z(), z(), o(), t2.clone()],
            [z(), z(), z(), o()],
        ]))
    }

    /// Heisenberg group law
    /// `(x, s)(y, t) = (x + y, s + t + 2 Im <<x, y>>)` with `<<x, y>> = y* x`,
    /// written in units of `sqrt(3)`: `2 Im(.)/sqrt3` is the `w`-coefficient.
    pub fn compose(&self, other: &Translation) -> Translation {
        let mut cross = EisensteinInt::zero();
        for j in 0..2 {
            cross += &(&other.tau[j].conj() * &self.tau[j]);
        }
        let tau = [&self.tau[0] + &other.tau[0], &self.tau[1] + &other.tau[1]];
        let k = &self.k + &other.k + cross.b;
        let out = Translation { tau, k };
        assert!(
            (&out.k - out.tau_norm()).is_even(),
            "Heisenberg composition broke parity"
        );
        out
    }

    pub fn inverse(&self) -> Translation {
        Translation {
            tau: [-&self.tau[0], -&self.tau[1]],
            k: -&self.k,
        }
    }

    /// `N_(tau,t)^n = N_(n tau, n t)`.
    pub fn pow(&self, n: &BigInt) -> Translation {
        Translation {
            tau: [self.tau[0].scale(n), self.tau[1].scale(n)],
            k: &self.k * n,
        }
    }

    /// `C_l^{-1} N_(tau,t) C_l = N_(l tau, t)`.
    pub fn conjugate_by_unit(&self, lambda: Unit) -> Translation {
        let l = lambda.value();
        Translation {
            tau: [&l * &self.tau[0], &l * &self.tau[1]],
            k: self.k.clone(),
        }
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N(({}, {}), {}*sqrt3)",
            self.tau[0], self.tau[1], self.k
        )
    }
}

/// `N_(tau, k sqrt3)` as a matrix.
pub fn translation_matrix(tau: [EisensteinInt; 2], k: impl Into<BigInt>) -> Result<GroupMatrix> {
    Ok(Translation::new(tau, k)?.matrix())
}

pub fn compose_heisenberg(p: &Translation, q: &Translation) -> Translation {
    p.compose(q)
}

/// `M_U = diag(1, U, 1)`.
pub fn rotation_matrix(u: &FiniteUnitary) -> GroupMatrix {
    let z = EisensteinInt::zero;
    let o = EisensteinInt::one;
    let m = u.entries();
    GroupMatrix::new_unchecked(Matrix4::new([
        [o(), z(), z(), z()],
        [z(), m[0][0].clone(), m[0][1].clone(), z()],
        [z(), m[1][0].clone(), m[1][1].clone(), z()],
        [z(), z(), z(), o()],
    ]))
}

/// The involution `R` swapping `0` and `inf`.
pub fn inversion() -> GroupMatrix {
    let z = EisensteinInt::zero;
    let o = EisensteinInt::one;
    let m = || EisensteinInt::from_int(-1);
    GroupMatrix::new_unchecked(Matrix4::new([
        [z(), z(), z(), o()],
        [z(), m(), z(), z()],
        [z(), z(), m(), z()],
        [o(), z(), z(), z()],
    ]))
}

/// `C_l = diag(l, 1, 1, l)`.
pub fn unit_correction(lambda: Unit) -> GroupMatrix {
    let l = lambda.value();
    GroupMatrix::new_unchecked(Matrix4::from_fn(|j, k| match (j, k) {
        (0, 0) | (3, 3) => l.clone(),
        (1, 1) | (2, 2) => EisensteinInt::one(),
        _ => EisensteinInt::zero(),
    }))
}

/// Langlands data `(l, tau, k, U)` of a stabiliser element
/// `P = C_l * N_(tau, k sqrt3) * M_U`. The dilation factor is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergParam {
    pub lambda: Unit,
    pub translation: Translation,
    pub rotation: FiniteUnitary,
}

impl HeisenbergParam {
    pub fn to_matrix(&self) -> GroupMatrix {
        let cn = &unit_correction(self.lambda) * &self.translation.matrix();
        &cn * &rotation_matrix(&self.rotation)
    }
}

/// Reads off `(l, tau, k, U)` from an element fixing infinity, validating
/// every structural constraint along the way.
pub fn langlands_extract(p: &GroupMatrix) -> Result<HeisenbergParam> {
    if !p.fixes_infinity() {
        return Err(Error::Shape(format!("g41 = {} is non-zero", p.g41())));
    }
    if !p.get(1, 0).is_zero() || !p.get(2, 0).is_zero() {
        return Err(Error::Shape("g21 or g31 is non-zero".into()));
    }
    let lambda = Unit::from_value(p.get(0, 0))
        .ok_or_else(|| Error::Shape(format!("g11 = {} is not a unit", p.get(0, 0))))?;

    // Q = C_l^{-1} P: scale rows 1 and 4 by conj(l).
    let lc = lambda.conj().value();
    let q = Matrix4::from_fn(|j, k| {
        if j == 0 || j == 3 {
            &lc * p.get(j, k)
        } else {
            p.get(j, k).clone()
        }
    });
    let bottom_ok = q.get(3, 0).is_zero()
        && q.get(3, 1).is_zero()
        && q.get(3, 2).is_zero()
        && q.get(3, 3).is_one();
    if !q.get(0, 0).is_one() || !bottom_ok {
        return Err(Error::Shape("corner entries are not (l, l)".into()));
    }

    let u_entries = [
        [q.get(1, 1).clone(), q.get(1, 2).clone()],
        [q.get(2, 1).clone(), q.get(2, 2).clone()],
    ];
    let rotation = FiniteUnitary::new(u_entries)
        .map_err(|_| Error::Shape("middle block is not in U(2; Z[w])".into()))?;

    let tau = [q.get(1, 3).clone(), q.get(2, 3).clone()];
    let corner = q.get(0, 3);
    let k = corner.b.clone();
    let m = tau[0].norm() + tau[1].norm();
    if &k - BigInt::from(2) * &corner.a != m {
        return Err(Error::Shape(format!(
            "corner entry {corner} is inconsistent with |tau|^2 = {m}"
        )));
    }
    let translation = Translation::new(tau, k).map_err(|e| Error::Shape(e.to_string()))?;

    // first row middle must be -tau* U
    let u = rotation.entries();
    for c in 0..2 {
        let expected = -(&(&translation.tau[0].conj() * &u[0][c])
            + &(&translation.tau[1].conj() * &u[1][c]));
        if q.get(0, c + 1) != &expected {
            return Err(Error::Shape(format!(
                "first-row entry ({},{}) is not -tau*U",
                1,
                c + 2
            )));
        }
    }
    Ok(HeisenbergParam {
        lambda,
        translation,
        rotation,
    })
}

/// `n` as an exact rational; small helper shared with the decomposer.
pub(crate) fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}
