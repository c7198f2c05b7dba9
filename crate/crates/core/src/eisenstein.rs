//! Exact arithmetic in the Eisenstein integers `Z[w]` and the field `Q(w)`,
//! where `w = (-1 + i*sqrt(3)) / 2` is a primitive cube root of unity.
//!
//! Elements are stored in the basis `{1, w}` with arbitrary-precision
//! coefficients. Nothing in this module touches floating point; real and
//! imaginary parts are returned as a rational and a rational multiple of
//! `sqrt(3)` respectively.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b*w` with `a, b` integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        EisensteinInt::new(a, 0)
    }

    pub fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    /// The cube root of unity `w`.
    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// `i*sqrt(3) = 1 + 2w`.
    pub fn i_sqrt3() -> Self {
        EisensteinInt::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Complex conjugate. Uses `conj(w) = w^2 = -1 - w`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// `|x|^2 = a^2 - ab + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        EisensteinInt {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Exact real part `(2a - b) / 2`.
    pub fn re(&self) -> BigRational {
        BigRational::new(BigInt::from(2) * &self.a - &self.b, BigInt::from(2))
    }

    /// Exact imaginary part as a multiple of `sqrt(3)`: `b/2 * sqrt(3)`.
    pub fn im(&self) -> SqrtThreeRational {
        SqrtThreeRational::new(BigRational::new(self.b.clone(), BigInt::from(2)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = EisensteinInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Embedding into double-precision complex numbers `(re, im)`. For tests
    /// and display only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "w"),
            (true, false) if (-&self.b).is_one() => write!(f, "-w"),
            (true, false) => write!(f, "{}w", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                let mag = self.b.abs();
                if mag.is_one() {
                    write!(f, "{}{}w", self.a, sign)
                } else {
                    write!(f, "{}{}{}w", self.a, sign, mag)
                }
            }
        }
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        EisensteinInt::from_int(a)
    }
}

impl<'a> Add<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: &EisensteinInt) -> EisensteinInt {
        EisensteinInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a EisensteinInt> for &'a EisensteinInt {
    type Output = EisensteinInt;
    /// `(a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w`, from `w^2 = -1 - w`.
    fn mul(self, rhs: &EisensteinInt) -> EisensteinInt {
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(EisensteinInt, Add::add, Sub::sub, Mul::mul);

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        -&self
    }
}

impl AddAssign<&EisensteinInt> for EisensteinInt {
    fn add_assign(&mut self, rhs: &EisensteinInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

/// An element of the unit group `{±1, ±w, ±w^2}`, stored as the exponent of
/// the primitive sixth root `z = 1 + w = e^{i*pi/3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit(u8);

impl Unit {
    pub const ONE: Unit = Unit(0);

    /// All six units in order `z^0, ..., z^5`.
    pub fn all() -> [Unit; 6] {
        [Unit(0), Unit(1), Unit(2), Unit(3), Unit(4), Unit(5)]
    }

    /// `z^e` for `z = 1 + w`.
    pub fn from_exponent(e: i64) -> Unit {
        Unit(e.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn value(self) -> EisensteinInt {
        match self.0 {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(1, 1),
            2 => EisensteinInt::new(0, 1),
            3 => EisensteinInt::new(-1, 0),
            4 => EisensteinInt::new(-1, -1),
            _ => EisensteinInt::new(0, -1),
        }
    }

    pub fn from_value(x: &EisensteinInt) -> Option<Unit> {
        Unit::all().into_iter().find(|u| &u.value() == x)
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// The conjugate, which is also the inverse.
    pub fn conj(self) -> Unit {
        Unit((6 - self.0) % 6)
    }

    pub fn inverse(self) -> Unit {
        self.conj()
    }
}

impl Mul for Unit {
    type Output = Unit;
    fn mul(self, rhs: Unit) -> Unit {
        Unit((self.0 + rhs.0) % 6)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

/// A rational multiple of `sqrt(3)`. Every imaginary part that appears in the
/// reduction is of this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqrtThreeRational {
    coeff: BigRational,
}

impl SqrtThreeRational {
    pub fn new(coeff: BigRational) -> Self {
        SqrtThreeRational { coeff }
    }

    pub fn zero() -> Self {
        SqrtThreeRational::new(BigRational::zero())
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        SqrtThreeRational::new(&self.coeff * r)
    }

    /// Exact square, which is rational.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * BigInt::from(3)
    }
}

impl Add for SqrtThreeRational {
    type Output = SqrtThreeRational;
    fn add(self, rhs: Self) -> Self {
        SqrtThreeRational::new(self.coeff + rhs.coeff)
    }
}

impl Sub for SqrtThreeRational {
    type Output = SqrtThreeRational;
    fn sub(self, rhs: Self) -> Self {
        SqrtThreeRational::new(self.coeff - rhs.coeff)
    }
}

impl Neg for SqrtThreeRational {
    type Output = SqrtThreeRational;
    fn neg(self) -> Self {
        SqrtThreeRational::new(-self.coeff)
    }
}

impl fmt::Display for SqrtThreeRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*sqrt(3)", self.coeff)
    }
}

/// `num / den` in `Q(w)`, kept in lowest terms with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinFrac {
    num: EisensteinInt,
    den: BigInt,
}

impl EisensteinFrac {
    pub fn new(num: EisensteinInt, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(mut num: EisensteinInt, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            num = -num;
        }
        let g = num.a.gcd(&num.b).gcd(&den);
        if !g.is_one() {
            num.a /= &g;
            num.b /= &g;
            den /= &g;
        }
        EisensteinFrac { num, den }
    }

    pub fn from_int(x: EisensteinInt) -> Self {
        EisensteinFrac {
            num: x,
            den: BigInt::one(),
        }
    }

    /// `x / y`, computed as `x * conj(y) / norm(y)`.
    pub fn quotient(x: &EisensteinInt, y: &EisensteinInt) -> Result<Self> {
        if y.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(x * &y.conj(), y.norm()))
    }

    pub fn num(&self) -> &EisensteinInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn conj(&self) -> Self {
        EisensteinFrac {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    /// `|z|^2` as an exact rational.
    pub fn abs_sq(&self) -> BigRational {
        BigRational::new(self.num.norm(), &self.den * &self.den)
    }

    /// `(Re z, Im z)` with `Re = (2a - b)/(2d)` and `Im = b/(2d) * sqrt(3)`.
    pub fn re_im(&self) -> (BigRational, SqrtThreeRational) {
        let two_d = BigInt::from(2) * &self.den;
        let re = BigRational::new(BigInt::from(2) * &self.num.a - &self.num.b, two_d.clone());
        let im = SqrtThreeRational::new(BigRational::new(self.num.b.clone(), two_d));
        (re, im)
    }

    /// Squared distance `|self - u|^2`.
    pub fn dist_sq(&self, u: &EisensteinInt) -> BigRational {
        let diff = &self.num - &u.scale(&self.den);
        BigRational::new(diff.norm(), &self.den * &self.den)
    }

    /// Nearest point of `Z[w]`: the minimiser of `|z - u|^2`, ties broken by
    /// the lexicographically smallest `(a, b)`. The result always lies within
    /// squared distance `1/3`.
    ///
    /// `z` sits in the parallelogram spanned by `1` and `w` at
    /// `(floor(a/d), floor(b/d))`. That cell is the union of two equilateral
    /// triangles of the hexagonal lattice, so every minimiser is a vertex of a
    /// triangle touching it; the 4x4 window around the cell covers all of them.
    pub fn round_nearest(&self) -> EisensteinInt {
        let fa = self.num.a.div_floor(&self.den);
        let fb = self.num.b.div_floor(&self.den);
        // Compare norm(num - d*u) as integers; the common 1/d^2 drops out.
        let mut best: Option<(BigInt, EisensteinInt)> = None;
        for da in -1..=2 {
            for db in -1..=2 {
                let u = EisensteinInt::new(&fa + da, &fb + db);
                let dist = (&self.num - &u.scale(&self.den)).norm();
                let better = match &best {
                    None => true,
                    Some((d0, u0)) => dist < *d0 || (dist == *d0 && u < *u0),
                };
                if better {
                    best = Some((dist, u));
                }
            }
        }
        best.expect("window is non-empty").1
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let (re, im) = self.num.to_f64_pair();
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        (re / d, im / d)
    }
}

impl fmt::Display for EisensteinFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a EisensteinFrac> for &'a EisensteinFrac {
    type Output = EisensteinFrac;
    fn add(self, rhs: &EisensteinFrac) -> EisensteinFrac {
        let num = &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den);
        EisensteinFrac::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a EisensteinFrac> for &'a EisensteinFrac {
    type Output = EisensteinFrac;
    fn sub(self, rhs: &EisensteinFrac) -> EisensteinFrac {
        let num = &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den);
        EisensteinFrac::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a EisensteinFrac> for &'a EisensteinFrac {
    type Output = EisensteinFrac;
    fn mul(self, rhs: &EisensteinFrac) -> EisensteinFrac {
        EisensteinFrac::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &EisensteinFrac {
    type Output = EisensteinFrac;
    fn neg(self) -> EisensteinFrac {
        EisensteinFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(EisensteinFrac, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    fn frac(a: i64, b: i64, d: i64) -> EisensteinFrac {
        EisensteinFrac::new(e(a, b), d).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn omega_squared() {
        assert_eq!(e(0, 1) * e(0, 1), e(-1, -1));
        assert_eq!(e(0, 1).pow(3), e(1, 0));
    }

    #[test]
    fn multiplicative_identity() {
        for x in [e(0, 0), e(3, -7), e(-2, 5)] {
            assert_eq!(&x * &EisensteinInt::one(), x);
        }
    }

    #[test]
    fn one_plus_omega_squared() {
        // (1+w)^2 = w, cross-checked against complex multiplication
        let x = e(1, 1);
        assert_eq!(&x * &x, e(0, 1));
        let (re, im) = x.to_f64_pair();
        let (pr, pi) = (re * re - im * im, 2.0 * re * im);
        let (wr, wi) = e(0, 1).to_f64_pair();
        assert!((pr - wr).abs() < 1e-12 && (pi - wi).abs() < 1e-12);
    }

    #[test]
    fn conjugation() {
        assert_eq!(e(0, 1).conj(), e(-1, -1));
        assert_eq!(e(3, 0).conj(), e(3, 0));
        assert_eq!(e(2, 5).conj(), e(-3, -5));
        let (re, im) = e(2, 5).to_f64_pair();
        let (cr, ci) = e(-3, -5).to_f64_pair();
        assert!((re - cr).abs() < 1e-12 && (im + ci).abs() < 1e-12);
    }

    #[test]
    fn norms() {
        assert_eq!(e(0, 1).norm(), BigInt::one());
        assert_eq!(e(0, 0).norm(), BigInt::zero());
        assert_eq!(e(2, 1).norm(), BigInt::from(3));
        // float oracle: |2+w|^2 = (3/2)^2 + (sqrt3/2)^2
        let (re, im) = e(2, 1).to_f64_pair();
        assert!((re * re + im * im - 3.0).abs() < 1e-12);
    }

    #[test]
    fn real_and_imaginary_parts() {
        let (re, im) = frac(0, 1, 1).re_im();
        assert_eq!(re, q(-1, 2));
        assert_eq!(im.coeff(), &q(1, 2));

        let (re, im) = frac(1, 0, 1).re_im();
        assert_eq!(re, q(1, 1));
        assert!(im.coeff().is_zero());

        // 1 + 2w = i*sqrt(3)
        let (re, im) = frac(1, 2, 1).re_im();
        assert!(re.is_zero());
        assert_eq!(im.coeff(), &q(1, 1));
    }

    #[test]
    fn rounding_examples() {
        assert_eq!(frac(0, 1, 1).round_nearest(), e(0, 1));
        assert_eq!(frac(1, 0, 2).round_nearest(), e(0, 0));
        assert_eq!(frac(1, 1, 2).round_nearest(), e(0, 0));
        // a deep hexagon vertex: (1 + 2w)/3 = i/sqrt(3) is equidistant from 0, 1+w, w
        let z = frac(1, 2, 3);
        assert_eq!(z.dist_sq(&e(0, 0)), q(1, 3));
        assert_eq!(z.dist_sq(&e(1, 1)), q(1, 3));
        assert_eq!(z.dist_sq(&e(0, 1)), q(1, 3));
        assert_eq!(z.round_nearest(), e(0, 0));
    }

    #[test]
    fn fractions_canonicalise() {
        let z = EisensteinFrac::new(e(4, -6), -8).unwrap();
        assert_eq!(z.num(), &e(-2, 3));
        assert_eq!(z.den(), &BigInt::from(4));
        assert!(EisensteinFrac::new(e(1, 0), 0).is_err());
        assert!(EisensteinFrac::quotient(&e(1, 0), &e(0, 0)).is_err());
        // w / w = 1
        let one = EisensteinFrac::quotient(&e(0, 1), &e(0, 1)).unwrap();
        assert_eq!(one, EisensteinFrac::from_int(e(1, 0)));
    }

    #[test]
    fn unit_group_is_mu6() {
        let mut found = vec![];
        for a in -1..=1 {
            for b in -1..=1 {
                if e(a, b).norm().is_one() {
                    found.push(e(a, b));
                }
            }
        }
        assert_eq!(found.len(), 6);
        for x in &found {
            assert!(Unit::from_value(x).is_some());
        }
        for u in Unit::all() {
            for v in Unit::all() {
                assert_eq!((u * v).value(), &u.value() * &v.value());
            }
            assert_eq!(u.conj().value(), u.value().conj());
        }
    }

    #[test]
    fn display() {
        assert_eq!(e(0, 0).to_string(), "0");
        assert_eq!(e(0, -1).to_string(), "-w");
        assert_eq!(e(2, -3).to_string(), "2-3w");
        assert_eq!(e(-1, 1).to_string(), "-1+w");
    }
}
