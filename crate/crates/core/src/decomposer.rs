//! Constructive word problem for `U(3,1; Z[w])`.
//!
//! An element `G` with `g41 != 0` is pushed towards the stabiliser of `inf` by
//! repeatedly replacing it with `R * N_(tau, k sqrt3) * G`, where the
//! translation is picked so that the new `|g41|^2` is at most `31/36` of the
//! old one. Once `g41 = 0` the element is `C_l * N * M_U` and is written out
//! directly: the translation part via the generator identities
//!
//! ```text
//! N_((1,0), sqrt3)  = N
//! N_((w,0), sqrt3)  = B^-2 N B^2
//! N_((0,1), sqrt3)  = A N A
//! N_((0,w), sqrt3)  = A B^-2 N B^2 A
//! N_((0,0), 2sqrt3) = [N, B N B^-1]
//! ```
//!
//! and the rotation part through the `U(2; Z[w])` word table.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eisenstein::{EisensteinFrac, EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::finite_unitary::{enumerate_group, u_decompose};
use crate::hermitian::{
    inversion, langlands_extract, rational, GroupMatrix, HeisenbergParam,
    Translation,
};
use crate::words::{DecompositionResult, Generator, Word};

/// A translation picked by [`choose_translation`], together with the exact
/// quantities that bound the next `|g41|^2`:
/// `|g41'|^2 = |g41|^2 (i1^2 + 3/4 (e + k)^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationChoice {
    pub translation: Translation,
    /// `I1 = (|c2 + tau1|^2 + |c3 + tau2|^2) / 2`, at most `1/3`.
    pub i1: BigRational,
    /// The rational `E` with `I2 = sqrt3/2 (E + k)`.
    pub e: BigRational,
}

impl TranslationChoice {
    pub fn e_plus_k(&self) -> BigRational {
        &self.e + rational(self.translation.k().clone())
    }

    /// `I1^2 + I2^2`, the exact contraction factor of the step.
    pub fn contraction(&self) -> BigRational {
        let ek = self.e_plus_k();
        &self.i1 * &self.i1 + &ek * &ek * BigRational::new(3.into(), 4.into())
    }
}

/// Picks `tau_j = -round(g_{j+1,1} / g41)` and the parity-compatible `k`
/// closest to `-E`. Ties on `|E + k|` go to the smaller `|k|`, then the
/// smaller `k`.
pub fn choose_translation(g: &GroupMatrix) -> Result<TranslationChoice> {
    let g41 = g.g41();
    if g41.is_zero() {
        return Err(Error::Domain("g41 = 0, nothing to reduce".into()));
    }
    let c: [EisensteinFrac; 3] =
        [0, 1, 2].map(|j| EisensteinFrac::quotient(g.get(j, 0), g41).expect("g41 != 0"));
    let r1 = c[1].round_nearest();
    let r2 = c[2].round_nearest();
    let i1 = (c[1].dist_sq(&r1) + c[2].dist_sq(&r2)) / BigInt::from(2);
    let tau = [-r1, -r2];

    // E = 2 (Im c1 - Im(c2 conj tau1) - Im(c3 conj tau2)) / sqrt3
    let im = |z: &EisensteinFrac| z.re_im().1;
    let t1c = EisensteinFrac::from_int(tau[0].conj());
    let t2c = EisensteinFrac::from_int(tau[1].conj());
    let imag = im(&c[0]) - im(&(&c[1] * &t1c)) - im(&(&c[2] * &t2c));
    let e = imag.coeff() * BigInt::from(2);

    let parity = (tau[0].norm() + tau[1].norm()).mod_floor(&BigInt::from(2));
    let base = (-&e).floor().to_integer();
    let k = (-2..=3)
        .map(|d| &base + d)
        .filter(|k: &BigInt| (k - &parity).is_even())
        .min_by(|x, y| {
            let dx = (&e + rational(x.clone())).abs();
            let dy = (&e + rational(y.clone())).abs();
            dx.cmp(&dy)
                .then_with(|| x.abs().cmp(&y.abs()))
                .then_with(|| x.cmp(y))
        })
        .expect("window holds both parities");

    let translation = Translation::new(tau, k).expect("k matches parity by construction");
    Ok(TranslationChoice { translation, i1, e })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub tau: [EisensteinInt; 2],
    pub k: BigInt,
    /// `|g41|^2` before the step.
    pub n_before: BigInt,
    /// `|g41|^2` after the step.
    pub n_after: BigInt,
    pub i1: BigRational,
    pub e_plus_k: BigRational,
}

impl ReductionStep {
    pub fn translation(&self) -> Translation {
        Translation::new(self.tau.clone(), self.k.clone()).expect("steps store valid translations")
    }

    /// `36 n_after <= 31 n_before`.
    pub fn contracts(&self) -> bool {
        BigInt::from(36) * &self.n_after <= BigInt::from(31) * &self.n_before
    }
}

/// One reduction: `G' = R * N_(tau, k sqrt3) * G`.
pub fn reduction_step(g: &GroupMatrix) -> Result<(ReductionStep, GroupMatrix)> {
    let choice = choose_translation(g)?;
    let next = &(&inversion() * &choice.translation.matrix()) * g;
    let n_before = g.g41().norm();
    let n_after = next.g41().norm();

    if rational(n_after.clone()) != rational(n_before.clone()) * choice.contraction() {
        return Err(Error::Internal(format!(
            "|g41'|^2 = {n_after} disagrees with |g41|^2 (I1^2 + I2^2) for\n{g}"
        )));
    }
    let step = ReductionStep {
        tau: choice.translation.tau().clone(),
        k: choice.translation.k().clone(),
        n_before,
        n_after,
        e_plus_k: choice.e_plus_k(),
        i1: choice.i1,
    };
    if !step.contracts() || step.i1 > BigRational::new(1.into(), 3.into()) || step.e_plus_k.abs() > BigRational::one() {
        return Err(Error::Internal(format!(
            "contraction bound violated (n {} -> {}, I1 = {}, E + k = {}) for\n{g}",
            step.n_before, step.n_after, step.i1, step.e_plus_k
        )));
    }
    Ok((step, next))
}

/// Upper bound on the number of reduction steps from `|g41|^2 = n0`:
/// `ceil(log n0 / log(36/31)) + 1`, or 0 when `n0 = 0`. Computed exactly.
pub fn step_bound(n0: &BigInt) -> u64 {
    if n0.is_zero() {
        return 0;
    }
    // smallest s with 36^s >= n0 * 31^s
    let mut s = 0u64;
    let mut lhs = BigInt::one();
    let mut rhs = n0.clone();
    while lhs < rhs {
        lhs *= 36;
        rhs *= 31;
        s += 1;
    }
    s + 1
}

/// Intermediate data of [`split_translation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationSplit {
    /// `T1^a1 T2^b1 T3^a2 T4^b2`.
    pub horizontal: Word,
    /// Vertical coordinate (in units of `sqrt3`) left over after the
    /// horizontal part; always even.
    pub residual_k: BigInt,
    /// Exponent of `N_((0,0), 2sqrt3)`.
    pub central_exponent: BigInt,
    pub word: Word,
}

fn conjugated_n(outer: &Word, e: &BigInt) -> Word {
    let mut w = outer.inverse();
    w.push(Generator::N, e.clone());
    w.extend(outer);
    w
}

/// `[N^a, B N^b B^-1] = N_((0,0), 2ab sqrt3)`.
fn commutator_word(a: &BigInt, b: &BigInt) -> Word {
    let mut w = Word::empty();
    w.push(Generator::N, a.clone());
    w.push(Generator::B, 1);
    w.push(Generator::N, b.clone());
    w.push(Generator::B, -1);
    w.push(Generator::N, -a);
    w.push(Generator::B, 1);
    w.push(Generator::N, -b);
    w.push(Generator::B, -1);
    w
}

/// A word for `N_((0,0), 2 t sqrt3)`. Uses the bilinearity of the commutator
/// so the word length stays bounded: `t = s(pq + r)` with `q = isqrt|t|`.
pub fn central_word(t: &BigInt) -> Word {
    if t.is_zero() {
        return Word::empty();
    }
    let sign = if t.is_negative() { -BigInt::one() } else { BigInt::one() };
    let n = t.abs();
    let q = n.sqrt();
    let (p, r) = n.div_rem(&q);
    let mut w = commutator_word(&(&sign * p), &q);
    if !r.is_zero() {
        w.extend(&commutator_word(&(&sign * r), &BigInt::one()));
    }
    w
}

/// Splits `N_(tau, k sqrt3)` into the four horizontal generator translations
/// and a central remainder, determined from the exact residual.
pub fn split_translation(t: &Translation) -> Result<TranslationSplit> {
    let [x, y] = t.tau();
    let b2 = Word::letter(Generator::B, 2);
    let mut ab2 = Word::letter(Generator::B, 2);
    ab2.push(Generator::A, 1);

    let mut horizontal = Word::empty();
    horizontal.push(Generator::N, x.a.clone());
    horizontal.extend(&conjugated_n(&b2, &x.b));
    horizontal.extend(&conjugated_n(&Word::letter(Generator::A, 1), &y.a));
    horizontal.extend(&conjugated_n(&ab2, &y.b));
    let horizontal = horizontal.normalize();

    let residual = &horizontal.evaluate().inverse() * &t.matrix();
    let residual_k = residual.get(0, 3).b.clone();
    if residual_k.is_odd() {
        return Err(Error::Internal(format!(
            "residual vertical coordinate {residual_k} of {t} is odd"
        )));
    }
    let expected = Translation::new([EisensteinInt::zero(), EisensteinInt::zero()], residual_k.clone())?;
    if residual != expected.matrix() {
        return Err(Error::Internal(format!(
            "residual of {t} is not a vertical translation:\n{residual}"
        )));
    }
    let central_exponent = &residual_k / BigInt::from(2);
    let word = horizontal.concat(&central_word(&central_exponent)).normalize();
    Ok(TranslationSplit {
        horizontal,
        residual_k,
        central_exponent,
        word,
    })
}

/// A word over `{N, A, B}` evaluating to `N_(tau, k sqrt3)`.
pub fn decompose_translation(tau: [EisensteinInt; 2], k: impl Into<BigInt>) -> Result<Word> {
    let t = Translation::new(tau, k)?;
    Ok(split_translation(&t)?.word)
}

/// Decomposes an element fixing `inf` as `C_l * w` with `w` over `{N, A, B}`.
pub fn decompose_stabilizer(p: &GroupMatrix) -> Result<DecompositionResult> {
    let param = langlands_extract(p)?;
    stabilizer_word(&param)
}

fn stabilizer_word(param: &HeisenbergParam) -> Result<DecompositionResult> {
    let mut word = split_translation(&param.translation)?.word;
    word.extend(&Word::from_uword(&u_decompose(&param.rotation)?));
    Ok(DecompositionResult {
        lambda: param.lambda,
        word: word.normalize(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub stabilizer: HeisenbergParam,
}

impl ReductionTrace {
    /// `|g41|^2` of the input.
    pub fn initial_norm(&self) -> BigInt {
        self.steps
            .first()
            .map(|s| s.n_before.clone())
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub result: DecompositionResult,
    pub trace: ReductionTrace,
}

/// Writes `G` as `C_l * w` with `w` a word in `N, A, B, R`.
///
/// With `G_{i+1} = R N_i G_i` and `G_n = C_l S` in the stabiliser,
/// `G = N_0^-1 R N_1^-1 R ... N_{n-1}^-1 R C_l S`; the unit is moved to the
/// front using `C_l^-1 N_(tau,t) C_l = N_(l tau, t)` and `C_l R = R C_l`.
pub fn decompose(g: &GroupMatrix) -> Result<Decomposition> {
    let bound = step_bound(&g.g41().norm());
    let mut steps = vec![];
    let mut cur = g.clone();
    while !cur.fixes_infinity() {
        let (step, next) = reduction_step(&cur)?;
        steps.push(step);
        cur = next;
        if steps.len() as u64 > bound {
            return Err(Error::Internal(format!(
                "reduction exceeded {bound} steps"
            )));
        }
    }
    let stabilizer = langlands_extract(&cur)?;
    let tail = stabilizer_word(&stabilizer)?;
    let lambda = tail.lambda;

    let mut word = Word::empty();
    for step in &steps {
        let t = step.translation().inverse().conjugate_by_unit(lambda);
        word.extend(&split_translation(&t)?.word);
        word.push(Generator::R, 1);
    }
    word.extend(&tail.word);
    let result = DecompositionResult {
        lambda,
        word: word.normalize(),
    };
    if !verify(g, &result) {
        return Err(Error::Internal(format!(
            "decomposition {} (unit {lambda}) does not reproduce\n{g}",
            result.word
        )));
    }
    Ok(Decomposition {
        result,
        trace: ReductionTrace { steps, stabilizer },
    })
}

/// `C_l * evaluate(word) == G` exactly.
pub fn verify(g: &GroupMatrix, result: &DecompositionResult) -> bool {
    result.evaluate() == *g
}

/// Uniform word of length `1..=max_len`: generators uniform, exponents
/// uniform in `[-3, 3] \ {0}`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut w = Word::empty();
    for _ in 0..len {
        let g = Generator::ALL[rng.gen_range(0..4)];
        let mut e: i64 = rng.gen_range(-3..=2);
        if e >= 0 {
            e += 1;
        }
        w.push(g, e);
    }
    w
}

pub fn random_element_with_word(seed: u64, max_len: usize) -> Result<(Word, GroupMatrix)> {
    if max_len == 0 {
        return Err(Error::Domain("max_len must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_word(&mut rng, max_len);
    let g = w.evaluate();
    Ok((w, g))
}

/// Evaluation of a random word; deterministic in `seed`.
pub fn random_element(seed: u64, max_len: usize) -> Result<GroupMatrix> {
    Ok(random_element_with_word(seed, max_len)?.1)
}

/// `C_l * N_(tau, k sqrt3) * M_U` with uniform unit, `tau` coefficients in
/// `[-5, 5]`, parity-matched `k` in `[-10, 10]` and uniform `U`.
pub fn random_stabilizer_param<R: Rng + ?Sized>(rng: &mut R) -> HeisenbergParam {
    let lambda = Unit::from_exponent(rng.gen_range(0..6));
    let mut coeff = || rng.gen_range(-5i64..=5);
    let tau = [
        EisensteinInt::new(coeff(), coeff()),
        EisensteinInt::new(coeff(), coeff()),
    ];
    let parity = (tau[0].norm() + tau[1].norm()).is_odd() as i64;
    let ks: Vec<i64> = (-10..=10).filter(|k: &i64| k.rem_euclid(2) == parity).collect();
    let k = ks[rng.gen_range(0..ks.len())];
    let group = enumerate_group();
    let rotation = group[rng.gen_range(0..group.len())].clone();
    HeisenbergParam {
        lambda,
        translation: Translation::new(tau, k).expect("parity matched"),
        rotation,
    }
}

pub fn random_stabilizer(seed: u64) -> GroupMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_stabilizer_param(&mut rng).to_matrix()
}
