//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line:
//!
//! ```text
//! cargo test -p picard --test acceptance
//! ```

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use picard::decomposer::{random_word, split_translation};
use picard::finite_unitary::generated_closure;
use picard::words::Generator;
use picard::{
    compose_heisenberg, decompose, enumerate_group, inversion, random_element, step_bound,
    translation_matrix, u_decompose, verify, EisensteinFrac, EisensteinInt, GroupMatrix,
    Translation, Word,
};

use common::E;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn generator_validity() -> Outcome {
    let cases = [
        (Generator::N, common::n1()),
        (Generator::A, common::m_u1()),
        (Generator::B, common::m_u2()),
        (Generator::R, common::r()),
    ];
    for (g, reference) in &cases {
        let m = g.matrix();
        ensure(common::to_small(m.matrix()) == *reference, || {
            format!("{g:?} differs from its block-form matrix:\n{m}")
        })?;
        ensure(common::preserves_form(reference), || format!("{g:?} does not preserve J"))?;
        ensure(GroupMatrix::new(m.into_matrix()).is_ok(), || {
            format!("{g:?} rejected by the membership check")
        })?;
    }
    let id = common::identity();
    let order = |m: &common::M| (1..=12).find(|&n| common::pow(m, n) == id);
    ensure(order(&common::r()) == Some(2), || "R^2 != I or R = I".into())?;
    ensure(order(&common::m_u1()) == Some(2), || "A has order != 2".into())?;
    ensure(order(&common::m_u2()) == Some(6), || "B has order != 6".into())?;
    ensure(order(&common::n1()).is_none(), || "N has finite order".into())?;
    for g in Generator::ALL {
        if let Some(n) = g.order() {
            let p = g.power(&BigInt::from(n));
            ensure(p == GroupMatrix::identity(), || format!("{g:?}^{n} != I"))?;
        }
    }
    Ok("N, A, B, R preserve J; orders of R, A, B are 2, 2, 6".into())
}

/// All 2x2 matrices over {0} and the six units with `U* U = I`.
fn brute_force_u2() -> BTreeSet<[[E; 2]; 2]> {
    let mut pool = vec![common::ZERO];
    let mut u = common::ONE;
    for _ in 0..6 {
        pool.push(u);
        u = common::mul(u, (1, 1));
    }
    let mut out = BTreeSet::new();
    for &a in &pool {
        for &b in &pool {
            for &c in &pool {
                for &d in &pool {
                    let col = |x: E, y: E, z: E, w: E| {
                        common::add(common::mul(common::conj(x), y), common::mul(common::conj(z), w))
                    };
                    if col(a, a, c, c) == common::ONE
                        && col(b, b, d, d) == common::ONE
                        && col(a, b, c, d) == common::ZERO
                    {
                        out.insert([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

fn u2_closure() -> Outcome {
    let small = |u: &picard::FiniteUnitary| -> [[E; 2]; 2] {
        let e = u.entries();
        let s = |x: &EisensteinInt| (x.a.to_i64().unwrap(), x.b.to_i64().unwrap());
        [[s(&e[0][0]), s(&e[0][1])], [s(&e[1][0]), s(&e[1][1])]]
    };
    let reference = brute_force_u2();
    ensure(reference.len() == 72, || format!("brute force found {}", reference.len()))?;
    let enumerated: BTreeSet<_> = enumerate_group().iter().map(small).collect();
    ensure(enumerated == reference, || "enumeration differs from brute force".into())?;
    let closure: BTreeSet<_> = generated_closure().iter().map(small).collect();
    ensure(closure == reference, || format!("closure has {} elements", closure.len()))?;
    for u in enumerate_group() {
        let w = u_decompose(&u).map_err(|e| e.to_string())?;
        ensure(w.evaluate() == u, || format!("word {w} does not evaluate to {u}"))?;
    }
    Ok("closure of {U1, U2} = all 72 elements; 72/72 words re-evaluate".into())
}

/// Decomposes every word, replaying the trace against the running matrix.
struct CaseReport {
    verified: bool,
    steps: usize,
    n0: BigInt,
    problems: Vec<String>,
}

fn run_case(word: &Word) -> CaseReport {
    let g = word.evaluate();
    let n0 = g.g41().norm();
    let mut report = CaseReport {
        verified: false,
        steps: 0,
        n0: n0.clone(),
        problems: Vec::new(),
    };
    let d = match decompose(&g) {
        Ok(d) => d,
        Err(e) => {
            report.problems.push(format!("{word}: {e}"));
            return report;
        }
    };
    report.steps = d.trace.steps.len();
    report.verified = verify(&g, &d.result);
    let mut cur = g;
    let r = inversion();
    for s in &d.trace.steps {
        let n = translation_matrix(s.tau.clone(), s.k.clone()).expect("trace translations are valid");
        let next = &(&r * &n) * &cur;
        let before = cur.g41().norm();
        let after = next.g41().norm();
        let quarter3 = rat(3, 4);
        let mut bad = |what: String| report.problems.push(format!("{word}: {what}"));
        if before != s.n_before || after != s.n_after {
            bad(format!("trace norms {} -> {} but replay gives {before} -> {after}", s.n_before, s.n_after));
        }
        if BigInt::from(36) * &after > BigInt::from(31) * &before {
            bad(format!("36 * {after} > 31 * {before}"));
        }
        if s.i1 > rat(1, 3) {
            bad(format!("I1 = {} > 1/3", s.i1));
        }
        if s.e_plus_k.abs() > rat(1, 1) {
            bad(format!("|E + k| = {} > 1", s.e_plus_k.abs()));
        }
        let predicted = BigRational::from(before.clone())
            * (&s.i1 * &s.i1 + quarter3 * &s.e_plus_k * &s.e_plus_k);
        if predicted != BigRational::from(after.clone()) {
            bad(format!("n_after = {after} but I1, E + k predict {predicted}"));
        }
        cur = next;
    }
    if !cur.fixes_infinity() {
        report.problems.push(format!("{word}: reduction ended with g41 = {}", cur.g41()));
    }
    report
}

fn words(seed: u64, count: usize, max_len: usize) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_word(&mut rng, max_len)).collect()
}

fn run_batch(seed: u64) -> Vec<(Word, CaseReport)> {
    words(seed, 1000, 40)
        .into_par_iter()
        .map(|w| {
            let r = run_case(&w);
            (w, r)
        })
        .collect()
}

struct FuzzData {
    batches: Vec<Vec<(Word, CaseReport)>>,
}

impl FuzzData {
    /// Seed 7 first, then further seeds until at least 10,000 steps.
    fn collect() -> Self {
        let mut batches = Vec::new();
        let mut total = 0;
        let mut seed = 7;
        while total < 10_000 {
            let b = run_batch(seed);
            total += b.iter().map(|(_, r)| r.steps).sum::<usize>();
            batches.push(b);
            seed += 1;
        }
        FuzzData { batches }
    }

    fn all(&self) -> impl Iterator<Item = &(Word, CaseReport)> {
        self.batches.iter().flatten()
    }
}

fn contraction(data: &FuzzData) -> Outcome {
    let steps: usize = data.all().map(|(_, r)| r.steps).sum();
    let problems: Vec<&String> = data.all().flat_map(|(_, r)| &r.problems).collect();
    ensure(steps >= 10_000, || format!("only {steps} steps"))?;
    ensure(problems.is_empty(), || {
        format!("{} violations, first: {}", problems.len(), problems[0])
    })?;
    Ok(format!(
        "{steps} steps from {} words: 36 n' <= 31 n, I1 <= 1/3, |E + k| <= 1 all exact",
        data.all().count()
    ))
}

fn round_trip(data: &FuzzData) -> Outcome {
    let seed7 = &data.batches[0];
    let ok = seed7.iter().filter(|(_, r)| r.verified).count();
    ensure(seed7.len() == 1000, || format!("{} words", seed7.len()))?;
    ensure(ok == 1000, || {
        let (w, _) = seed7.iter().find(|(_, r)| !r.verified).unwrap();
        format!("{ok}/1000 verified; first failure: {w}")
    })?;
    Ok("1000/1000 words (seed 7, length <= 40) decompose and re-evaluate exactly".into())
}

/// `ceil(ln n0 / ln(36/31)) + 1`, in floating point as a reference.
fn float_bound(n0: &BigInt) -> u64 {
    if n0.is_zero() {
        return 0;
    }
    let x = n0.to_f64().unwrap().ln() / (36f64 / 31f64).ln();
    x.ceil() as u64 + 1
}

fn step_count(data: &FuzzData) -> Outcome {
    let mut worst = i64::MIN;
    for (w, r) in data.all() {
        let bound = float_bound(&r.n0);
        ensure(step_bound(&r.n0) == bound, || {
            format!("step_bound({}) = {} but reference gives {bound}", r.n0, step_bound(&r.n0))
        })?;
        ensure(r.steps as u64 <= bound, || {
            format!("{w}: {} steps, bound {bound} for n0 = {}", r.steps, r.n0)
        })?;
        worst = worst.max(r.steps as i64 - bound as i64);
    }
    Ok(format!(
        "{} cases within bound; tightest margin {} steps",
        data.all().count(),
        -worst
    ))
}

fn hexagon_rounding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = BigRational::zero();
    for _ in 0..10_000 {
        let d: i64 = rng.gen_range(1..=1000);
        let (x, y) = (rng.gen_range(-10 * d..=10 * d), rng.gen_range(-10 * d..=10 * d));
        let z = EisensteinFrac::new(EisensteinInt::new(x, y), d).map_err(|e| e.to_string())?;
        // d^2 |z - u|^2 = N(num - d u), scanned over a window containing
        // {|a|, |b| <= ceil|z| + 2}.
        let nz = common::norm((x, y));
        let mut c = 0i64;
        while c * c * d * d < nz {
            c += 1;
        }
        let r = 2 * c + 2;
        let mut best = (i64::MAX, (0, 0));
        for a in -r..=r {
            for b in -r..=r {
                let v = common::norm((x - d * a, y - d * b));
                if v < best.0 {
                    best = (v, (a, b));
                }
            }
        }
        let u = z.round_nearest();
        let got = z.dist_sq(&u);
        let expected = rat(best.0, d * d);
        ensure(got == expected, || format!("{x}+{y}w / {d}: got {u} at {got}, oracle {expected}"))?;
        ensure(u == common::to_big(best.1), || {
            format!("{x}+{y}w / {d}: tie broken to {u}, expected {:?}", best.1)
        })?;
        ensure(got <= rat(1, 3), || format!("distance^2 {got} > 1/3"))?;
        worst = worst.max(got);
    }
    Ok(format!("10000/10000 match the window oracle; max distance^2 = {worst}"))
}

fn identity_suite() -> Outcome {
    let p = |s: &str| Word::parse(s).unwrap().evaluate();
    let zero = common::ZERO;
    let checks = [
        ("A N A", common::heisenberg([zero, common::ONE], 1)),
        ("B^-2 N B^2", common::heisenberg([common::W, zero], 1)),
        ("N B N B^-1 N^-1 B N^-1 B^-1", common::heisenberg([zero, zero], 2)),
        ("A B^-2 N B^2 A", common::heisenberg([zero, common::W], 1)),
    ];
    for (w, reference) in &checks {
        ensure(common::to_small(p(w).matrix()) == *reference, || {
            format!("{w} is\n{}", p(w))
        })?;
    }
    let t = |tau: [E; 2], k: i64| {
        translation_matrix([common::to_big(tau[0]), common::to_big(tau[1])], k).unwrap()
    };
    ensure(p("A N A") == t([zero, common::ONE], 1), || "A N A".into())?;
    ensure(p("B^-2 N B^2") == t([common::W, zero], 1), || "B^-2 N B^2".into())?;
    ensure(p("N B N B^-1 N^-1 B N^-1 B^-1") == t([zero, zero], 2), || "[N, B N B^-1]".into())?;
    Ok("A N A, B^-2 N B^2 and [N, B N B^-1] match their Heisenberg translations".into())
}

fn random_translation(rng: &mut ChaCha8Rng, range: i64) -> ([E; 2], i64) {
    let mut c = || rng.gen_range(-range..=range);
    let tau = [(c(), c()), (c(), c())];
    let n = common::norm(tau[0]) + common::norm(tau[1]);
    let mut k = rng.gen_range(-3 * range..=3 * range);
    if (k - n).rem_euclid(2) != 0 {
        k += 1;
    }
    (tau, k)
}

fn big_translation(tau: [E; 2], k: i64) -> Translation {
    Translation::new([common::to_big(tau[0]), common::to_big(tau[1])], k).unwrap()
}

fn heisenberg_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let (tp, kp) = random_translation(&mut rng, 20);
        let (tq, kq) = random_translation(&mut rng, 20);
        let (p, q) = (big_translation(tp, kp), big_translation(tq, kq));
        let c = compose_heisenberg(&p, &q);
        let product = &p.matrix() * &q.matrix();
        ensure(c.matrix() == product, || format!("{p} * {q}: law gives {c}"))?;
        let reference = common::mat_mul(&common::heisenberg(tp, kp), &common::heisenberg(tq, kq));
        ensure(common::to_small(c.matrix().matrix()) == reference, || {
            format!("{p} * {q}: {c} differs from the block-form product")
        })?;
    }
    Ok("1000/1000 compositions agree with matrix multiplication".into())
}

fn translation_parity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let (tau, k) = random_translation(&mut rng, 30);
        let t = big_translation(tau, k);
        let split = split_translation(&t).map_err(|e| e.to_string())?;
        ensure(split.residual_k.is_even(), || {
            format!("{t}: residual {} is odd", split.residual_k)
        })?;
        ensure(split.word.items().iter().all(|(g, _)| *g != Generator::R), || {
            format!("{t}: word uses R")
        })?;
        let m = split.word.evaluate();
        ensure(common::to_small(m.matrix()) == common::heisenberg(tau, k), || {
            format!("{t}: word {} evaluates to\n{m}", split.word)
        })?;
    }
    Ok("1000/1000 residuals even; every translation word re-evaluates exactly".into())
}

fn cone_condition() -> Outcome {
    let mut count = 0;
    let mut seed = 0u64;
    while count < 1000 {
        let g = random_element(seed, 12).map_err(|e| e.to_string())?;
        seed += 1;
        if g.fixes_infinity() {
            continue;
        }
        let p = g.image_of_infinity().map_err(|e| e.to_string())?;
        ensure(p.satisfies_cone(), || format!("seed {seed}: {p:?} off the cone"))?;
        // Integer form: 2 Re(g11 conj g41) + |g21|^2 + |g31|^2 = 0.
        let x = g.get(0, 0) * &g.g41().conj();
        let lhs = BigInt::from(2) * &x.a - &x.b + g.get(1, 0).norm() + g.get(2, 0).norm();
        ensure(lhs.is_zero(), || format!("seed {seed}: first column not null"))?;
        count += 1;
    }
    Ok(format!("1000/1000 non-stabiliser images lie on the cone ({seed} draws)"))
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let t = Instant::now();
    let fuzz = panic::catch_unwind(FuzzData::collect);
    let fuzz_secs = t.elapsed().as_secs_f64();

    let with_fuzz = |f: fn(&FuzzData) -> Outcome| -> Outcome {
        match &fuzz {
            Ok(data) => f(data),
            Err(_) => Err("fuzz data collection panicked".into()),
        }
    };
    let criteria: Vec<Criterion> = vec![
        ("generator validity", Box::new(generator_validity)),
        ("U(2) closure and word table", Box::new(u2_closure)),
        ("contraction constant", Box::new(move || with_fuzz(contraction))),
        ("round-trip soundness", Box::new(move || with_fuzz(round_trip))),
        ("step-count bound", Box::new(move || with_fuzz(step_count))),
        ("hexagon rounding", Box::new(hexagon_rounding)),
        ("identity suite", Box::new(identity_suite)),
        ("Heisenberg group law", Box::new(heisenberg_law)),
        ("translation parity", Box::new(translation_parity)),
        ("cone condition", Box::new(cone_condition)),
    ];

    let mut failed = 0;
    println!("fuzz corpus built in {fuzz_secs:.1}s");
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1)
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
