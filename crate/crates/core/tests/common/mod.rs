#![allow(dead_code)]

use freecommutant_core::commutator::DistributionPair;
use freecommutant_core::cumulant::{cumulants_from_moments, CumulantSequence, MomentSequence};
use freecommutant_core::fock::RhoMoments;
use freecommutant_core::poly::{Letter, Word};
use freecommutant_core::rational::{int, rat, Rational};

pub const ORDER: usize = 10;

fn atomic(atoms: &[(Rational, Rational)]) -> CumulantSequence {
    cumulants_from_moments(&MomentSequence::of_atoms(atoms, ORDER), ORDER).unwrap()
}

/// The four test laws for `x`, by name.
pub fn suite_x() -> Vec<(&'static str, CumulantSequence)> {
    vec![
        (
            "bernoulli(1/2:0, 1/2:1)",
            atomic(&[(rat(1, 2), int(0)), (rat(1, 2), int(1))]),
        ),
        (
            "free-poisson(1)",
            CumulantSequence::free_poisson(int(1), ORDER),
        ),
        ("semicircle(1)", CumulantSequence::semicircle(int(1))),
        (
            "atomic(1/3:-1, 2/3:2)",
            atomic(&[(rat(1, 3), int(-1)), (rat(2, 3), int(2))]),
        ),
    ]
}

/// Every suite law for `x` paired with a semicircular `s` of variance 1 and 2.
pub fn suite_pairs() -> Vec<(String, DistributionPair)> {
    let mut out = Vec::new();
    for (name, x) in suite_x() {
        for var in [1, 2] {
            let pair = DistributionPair::new(CumulantSequence::semicircle(int(var)), x.clone());
            out.push((format!("x = {name}, var(s) = {var}"), pair));
        }
    }
    out
}

pub fn suite_rho() -> Vec<(&'static str, RhoMoments)> {
    vec![
        ("delta(1)", RhoMoments::of_atoms(&[(int(1), int(1))], ORDER)),
        ("delta(2)", RhoMoments::of_atoms(&[(int(1), int(2))], ORDER)),
        (
            "1/2 delta(-1) + 1/2 delta(1)",
            RhoMoments::of_atoms(&[(rat(1, 2), int(-1)), (rat(1, 2), int(1))], ORDER),
        ),
        (
            "1/2 delta(0) + 1/2 delta(3)",
            RhoMoments::of_atoms(&[(rat(1, 2), int(0)), (rat(1, 2), int(3))], ORDER),
        ),
    ]
}

/// All argument lists of words in `s, x` with exactly `letters` letters in total.
pub fn word_tuples(letters: usize) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    for pattern in 0u32..1 << letters {
        for cuts in 0u32..1 << (letters - 1) {
            let mut words = Vec::new();
            let mut cur = Vec::new();
            for i in 0..letters {
                cur.push(if pattern >> i & 1 == 1 {
                    Letter::X
                } else {
                    Letter::S
                });
                if i == letters - 1 || cuts >> i & 1 == 1 {
                    words.push(Word::new(std::mem::take(&mut cur)).unwrap());
                }
            }
            out.push(words);
        }
    }
    out
}

pub fn least_rotation(words: &[Word]) -> Vec<Word> {
    (0..words.len())
        .map(|r| {
            let mut v = words[r..].to_vec();
            v.extend_from_slice(&words[..r]);
            v
        })
        .min()
        .unwrap()
}

/// A pair with every cumulant of both variables nonzero, so nothing is pruned
/// by vanishing cumulants.
pub fn generic_pair() -> DistributionPair {
    DistributionPair::new(
        CumulantSequence::new((1..=ORDER as i64).map(|k| rat(k + 1, 2)).collect()),
        CumulantSequence::new((1..=ORDER as i64).map(|k| rat(2 * k - 7, 5)).collect()),
    )
}
