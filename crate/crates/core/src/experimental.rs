//! Searches for words in `N, A, B, R` that evaluate to a unit correction
//! `C_l = diag(l, 1, 1, l)`.
//!
//! Words over `N, A, B` alone always have `g11 = 1`, so any such word must
//! use `R`. Nothing else in the crate depends on these results; the
//! decomposition contract keeps reporting `l` explicitly.

use std::collections::{HashMap, VecDeque};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposer::{decompose, random_word};
use crate::eisenstein::Unit;
use crate::hermitian::{unit_correction, GroupMatrix};
use crate::words::{Generator, Word};

const STEPS: [(Generator, i64); 6] = [
    (Generator::N, 1),
    (Generator::N, -1),
    (Generator::A, 1),
    (Generator::B, 1),
    (Generator::B, -1),
    (Generator::R, 1),
];

/// Depth-limited meet-in-the-middle search. Explores the ball of radius
/// `depth` in the Cayley graph (at most `max_nodes` elements) and looks for
/// `x, y` in the ball with `x = C_l y`, giving a word of length at most
/// `2 * depth`.
pub fn bfs_unit_correction(lambda: Unit, depth: usize, max_nodes: usize) -> Option<Word> {
    let target = unit_correction(lambda);
    if lambda.is_one() {
        return Some(Word::empty());
    }
    let target_inv = target.inverse();
    let mut ball: HashMap<GroupMatrix, Word> = HashMap::new();
    let mut queue = VecDeque::new();
    ball.insert(GroupMatrix::identity(), Word::empty());
    queue.push_back((GroupMatrix::identity(), 0usize));

    while let Some((x, d)) = queue.pop_front() {
        // x = C_l y  =>  C_l = x y^-1
        let y = &target_inv * &x;
        if let Some(wy) = ball.get(&y) {
            let w = ball[&x].concat(&wy.inverse()).normalize();
            debug_assert_eq!(w.evaluate(), target);
            return Some(w);
        }
        if d == depth || ball.len() >= max_nodes {
            continue;
        }
        for (g, e) in STEPS {
            let next = &x * &g.power(&e.into());
            if !ball.contains_key(&next) {
                let mut w = ball[&x].clone();
                w.push(g, e);
                ball.insert(next.clone(), w);
                queue.push_back((next, d + 1));
            }
        }
    }
    None
}

/// Decomposes random words `v` and, whenever the reported unit `l` is not
/// 1, records `C_l = v w^-1`. The found units are then closed under
/// multiplication. Returns one verified word per reachable unit.
pub fn harvest_unit_corrections(seed: u64, attempts: usize, max_len: usize) -> HashMap<Unit, Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: HashMap<Unit, Word> = HashMap::new();
    found.insert(Unit::ONE, Word::empty());
    for _ in 0..attempts {
        let v = random_word(&mut rng, max_len);
        let g = v.evaluate();
        let Ok(d) = decompose(&g) else { continue };
        let lambda = d.result.lambda;
        if found.contains_key(&lambda) {
            continue;
        }
        let w = v.concat(&d.result.word.inverse()).normalize();
        found.insert(lambda, w);
        if found.len() == 6 {
            break;
        }
    }
    // close under products
    loop {
        let mut added = false;
        let snapshot: Vec<(Unit, Word)> = found.iter().map(|(u, w)| (*u, w.clone())).collect();
        for (u, wu) in &snapshot {
            for (v, wv) in &snapshot {
                let uv = *u * *v;
                if let std::collections::hash_map::Entry::Vacant(e) = found.entry(uv) {
                    e.insert(wu.concat(wv).normalize());
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    found.retain(|u, w| w.evaluate() == unit_correction(*u));
    found
}

/// Words for each `C_l`, found by [`bfs_unit_correction`] at depth 9.
pub fn unit_correction_word(lambda: Unit) -> Word {
    let text = match lambda.exponent() {
        0 => "",
        1 => "B^-1 R N^-1 A N R N^-1 A B N R N^-1 R A N B N^-1",
        2 => "A B^3 A R N R B^-2 N R B^-2 N",
        3 => "N A N^-1 B^3 R N^-1 A B^3 N R N^-1 A N R",
        4 => "A B^3 A R N^-1 R B^2 N^-1 R B^2 N^-1",
        _ => "B R N A N^-1 R N A B^-1 N^-1 R N R A N^-1 B^-1 N",
    };
    Word::parse(text).expect("static words parse")
}

/// Folds the unit into the word: `C_l * w` as a single word.
pub fn absorb_unit(lambda: Unit, word: &Word) -> Word {
    unit_correction_word(lambda).concat(word).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposer::random_element;

    #[test]
    fn frozen_unit_words_are_exact() {
        for u in Unit::all() {
            assert_eq!(unit_correction_word(u).evaluate(), unit_correction(u), "{u}");
        }
    }

    #[test]
    fn absorbed_words_reproduce_elements() {
        for seed in 0..20 {
            let g = random_element(seed, 10).unwrap();
            let d = decompose(&g).unwrap();
            assert_eq!(absorb_unit(d.result.lambda, &d.result.word).evaluate(), g);
        }
    }

    #[test]
    fn shallow_search_finds_nothing() {
        assert_eq!(bfs_unit_correction(Unit::from_exponent(3), 3, 100_000), None);
    }

    #[test]
    fn harvested_words_are_exact() {
        let found = harvest_unit_corrections(1, 200, 12);
        for (u, w) in &found {
            assert_eq!(w.evaluate(), unit_correction(*u));
        }
        println!("units reached: {}", found.len());
        for (u, w) in &found {
            println!("{u}: {} syllables", w.len());
        }
    }

    #[test]
    fn trivial_unit_needs_no_search() {
        assert_eq!(bfs_unit_correction(Unit::ONE, 0, 1), Some(Word::empty()));
    }
}
