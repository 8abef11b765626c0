//! Seeded random generation of words, injections and automorphisms for the
//! property checks. No wall-clock entropy anywhere: every caller passes a
//! seed, and batches are reproducible byte for byte.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::freelie::FIInjection;
use crate::words::{AutPair, FreeEndo, Word};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random freely reduced word with geometrically distributed length,
/// capped at `max_len`.
pub fn random_word(rng: &mut SeededRng, rank: usize, max_len: usize) -> Word {
    let mut letters = Vec::new();
    let mut len = 0usize;
    while len < max_len && rng.gen_range(0..4) != 0 {
        let idx = rng.gen_range(1..=rank) as i32;
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        letters.push(sign * idx);
        len += 1;
    }
    Word::reduce(&letters, rank).expect("letters are in range")
}

/// A uniformly random injection between the standard finite sets.
pub fn random_injection(rng: &mut SeededRng, n: usize, m: usize) -> FIInjection {
    assert!(n <= m);
    let mut available: Vec<usize> = (1..=m).collect();
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let i = rng.gen_range(0..available.len());
        values.push(available.remove(i));
    }
    FIInjection::new(m, values).expect("distinct values")
}

/// The conjugation generator: `x_i -> x_j x_i x_j^-1`, all else fixed.
pub fn conjugation_aut(rank: usize, i: usize, j: usize) -> AutPair {
    assert!(i != j && i >= 1 && j >= 1 && i <= rank && j <= rank);
    let make = |sign: i64| {
        let mut images: Vec<Word> = (1..=rank).map(|k| Word::generator(rank, k)).collect();
        let xj = Word::generator(rank, j).pow(sign);
        images[i - 1] = xj
            .mul(&Word::generator(rank, i))
            .unwrap()
            .mul(&xj.inv())
            .unwrap();
        FreeEndo::new(rank, images).unwrap()
    };
    AutPair::new(make(1), make(-1)).expect("conjugations invert")
}

/// The commutator-insertion generator: `x_i -> x_i [x_j, x_k]`, all else
/// fixed; requires `i`, `j`, `k` distinct.
pub fn commutator_aut(rank: usize, i: usize, j: usize, k: usize) -> AutPair {
    assert!(i != j && i != k && j != k);
    let make = |jj: usize, kk: usize| {
        let mut images: Vec<Word> = (1..=rank).map(|t| Word::generator(rank, t)).collect();
        let c = Word::generator(rank, jj)
            .commutator(&Word::generator(rank, kk))
            .unwrap();
        images[i - 1] = Word::generator(rank, i).mul(&c).unwrap();
        FreeEndo::new(rank, images).unwrap()
    };
    AutPair::new(make(j, k), make(k, j)).expect("commutator insertions invert")
}

/// A random product of the standard generators of the group of
/// homology-trivial automorphisms (conjugations and, when the rank allows,
/// commutator insertions).
pub fn random_ia1(rng: &mut SeededRng, rank: usize, factors: usize) -> AutPair {
    assert!(rank >= 2);
    let mut out = AutPair::identity(rank);
    for _ in 0..factors {
        let use_comm = rank >= 3 && rng.gen_bool(0.5);
        let gen = if use_comm {
            let mut picks: Vec<usize> = (1..=rank).collect();
            let i = picks.remove(rng.gen_range(0..picks.len()));
            let j = picks.remove(rng.gen_range(0..picks.len()));
            let k = picks.remove(rng.gen_range(0..picks.len()));
            commutator_aut(rank, i, j, k)
        } else {
            let mut picks: Vec<usize> = (1..=rank).collect();
            let i = picks.remove(rng.gen_range(0..picks.len()));
            let j = picks.remove(rng.gen_range(0..picks.len()));
            conjugation_aut(rank, i, j)
        };
        let gen = if rng.gen_bool(0.5) { gen.inverse() } else { gen };
        out = out.compose(&gen).expect("equal ranks");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::ia_level;

    #[test]
    fn words_are_reduced_and_bounded() {
        let mut rng = rng_from_seed(11);
        for _ in 0..200 {
            let w = random_word(&mut rng, 3, 12);
            assert!(w.len() <= 12);
            assert_eq!(Word::reduce(w.letters(), 3).unwrap(), w);
        }
    }

    #[test]
    fn injections_are_valid() {
        let mut rng = rng_from_seed(5);
        for _ in 0..50 {
            let f = random_injection(&mut rng, 2, 4);
            assert_eq!(f.source(), 2);
            assert_eq!(f.target(), 4);
        }
    }

    #[test]
    fn ia1_generators_have_level_one() {
        assert!(ia_level(&conjugation_aut(2, 1, 2).fwd, 3) >= 1);
        assert!(ia_level(&commutator_aut(3, 1, 2, 3).fwd, 3) >= 1);
        let mut rng = rng_from_seed(7);
        for _ in 0..20 {
            let a = random_ia1(&mut rng, 3, 4);
            assert!(ia_level(&a.fwd, 3) >= 1);
        }
    }

    #[test]
    fn seeding_is_reproducible() {
        let w1 = random_word(&mut rng_from_seed(42), 3, 10);
        let w2 = random_word(&mut rng_from_seed(42), 3, 10);
        assert_eq!(w1, w2);
    }
}
