//! Seeded random list generators for tests and benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{Coefficient, Domain};
use crate::lists::{EncodedList, Pair};
use crate::oracle::random_word;
use crate::words::{Alphabet, Word};

/// Benchmark input families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Workload {
    /// Words drawn uniformly at a fixed depth.
    Uniform,
    /// Random extension trees that collapse through every level.
    Collapse,
}

impl std::str::FromStr for Workload {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Workload::Uniform),
            "collapse" => Ok(Workload::Collapse),
            _ => Err(format!("unknown workload {s:?} (expected uniform or collapse)")),
        }
    }
}

/// A random nonzero coefficient whose numerators and denominators are at
/// most `max`.
pub fn small_coeff<C: Coefficient>(rng: &mut impl Rng, max: u64) -> C {
    let neg = rng.gen_bool(0.5);
    match C::DOMAIN {
        Domain::Int => {
            let v = rng.gen_range(1..=max) as i64;
            C::from_i64(if neg { -v } else { v })
        }
        Domain::Rat => {
            let n = rng.gen_range(1..=max);
            let m = rng.gen_range(0..n);
            let k = if m == 0 { rng.gen_range(1..=max) } else { rng.gen_range(0..=max) };
            C::parse(&format!("{}{k}/{m}/{n}", if neg { "-" } else { "+" })).unwrap()
        }
    }
}

/// A coefficient whose bit length is geometrically distributed.
pub fn geometric_coeff<C: Coefficient>(rng: &mut impl Rng) -> C {
    let mut bits = 1;
    while bits < 62 && rng.gen_bool(0.5) {
        bits += 1;
    }
    let max = (1u64 << bits) - 1;
    match C::DOMAIN {
        Domain::Int => small_coeff(rng, max),
        Domain::Rat => small_coeff(rng, max.min(1 << 12)),
    }
}

/// `entries` random pairs with words of length at most `max_depth`.
pub fn random_list<C: Coefficient>(
    alphabet: Alphabet,
    max_depth: usize,
    entries: usize,
    max: u64,
    rng: &mut impl Rng,
) -> EncodedList<C> {
    let mut l = EncodedList::new(alphabet);
    for _ in 0..entries {
        let len = rng.gen_range(0..=max_depth);
        l.push(Word::from(random_word(alphabet, len, rng)), small_coeff(rng, max));
    }
    l
}

/// Replaces `(w, c)` by a random extension tree: each node is, with
/// probability `p` and while shorter than `depth`, replaced by all of its
/// left or all of its right extensions.
pub fn expand<C: Coefficient>(
    alphabet: Alphabet,
    w: Word,
    c: C,
    depth: usize,
    p: f64,
    rng: &mut impl Rng,
    out: &mut Vec<Pair<C>>,
) {
    let mut stack = vec![w];
    while let Some(w) = stack.pop() {
        if w.len() >= depth || !rng.gen_bool(p) {
            out.push(Pair::new(w, c.clone()));
            continue;
        }
        let left = rng.gen_bool(0.5);
        for a in alphabet.letters() {
            let ok = match (left, w.first(), w.last()) {
                (true, Some(f), _) => alphabet.may_follow(a, f),
                (false, _, Some(l)) => alphabet.may_follow(l, a),
                _ => true,
            };
            if ok {
                stack.push(if left { w.prepend(a) } else { w.append(a) });
            }
        }
    }
}

/// A list equivalent to a random list of depth `≤ base_depth`, spread out
/// by random extension trees down to `depth`.
pub fn collapsible_list<C: Coefficient>(
    alphabet: Alphabet,
    base_depth: usize,
    depth: usize,
    blocks: usize,
    max: u64,
    rng: &mut impl Rng,
) -> EncodedList<C> {
    let mut pairs = Vec::new();
    for _ in 0..blocks {
        let len = rng.gen_range(0..=base_depth);
        let w = Word::from(random_word(alphabet, len, rng));
        expand(alphabet, w, small_coeff(rng, max), depth, 0.75, rng, &mut pairs);
    }
    EncodedList::from_pairs(alphabet, pairs)
}

/// Number of words of each length `< depth`.
fn level_counts(alphabet: Alphabet, depth: usize) -> Vec<f64> {
    let k = alphabet.letter_count() as f64;
    (0..depth)
        .map(|l| match (alphabet.is_group(), l) {
            (_, 0) => 1.0,
            (false, _) => k.powi(l as i32),
            (true, _) => k * (k - 1.0).powi(l as i32 - 1),
        })
        .collect()
}

/// A random sum of extension relations `c·(ρ_w − Σ_a ρ_{wa})` and
/// `c·(ρ_w − Σ_a ρ_{aw})` with `w` uniform among all words shorter than the
/// depth, plus a few pairs of depth `≤ 1`. The depth is chosen so that
/// distinct relations rarely overlap, hence the list is dense at every
/// level and collapses to depth `≤ 1`.
fn collapse_pairs<C: Coefficient>(alphabet: Alphabet, target: u64, rng: &mut impl Rng) -> Vec<Pair<C>> {
    let k = alphabet.letter_count() as f64;
    let mut depth = 2;
    loop {
        let terms = target as f64 / ((k + 1.0) * (depth as f64 + 8.0));
        if level_counts(alphabet, depth + 1).iter().sum::<f64>() >= 8.0 * terms {
            break;
        }
        depth += 1;
    }
    let counts = level_counts(alphabet, depth);
    let all: f64 = counts.iter().sum();
    let mut pairs = Vec::new();
    let mut total = 0;
    for _ in 0..alphabet.letter_count() {
        let w = Word::from(random_word(alphabet, rng.gen_range(0..=1), rng));
        let c: C = geometric_coeff(rng);
        total += w.len() as u64 + c.size();
        pairs.push(Pair::new(w, c));
    }
    while total < target {
        let mut x = rng.gen_range(0.0..all);
        let len = counts.iter().position(|&c| {
            x -= c;
            x < 0.0
        });
        let w = Word::from(random_word(alphabet, len.unwrap_or(depth - 1), rng));
        let c: C = geometric_coeff(rng);
        let minus = c.neg();
        let left = rng.gen_bool(0.5);
        let start = pairs.len();
        pairs.push(Pair::new(w.clone(), c));
        for a in alphabet.letters() {
            let ok = match (left, w.first(), w.last()) {
                (true, Some(f), _) => alphabet.may_follow(a, f),
                (false, _, Some(l)) => alphabet.may_follow(l, a),
                _ => true,
            };
            if ok {
                let x = if left { w.prepend(a) } else { w.append(a) };
                pairs.push(Pair::new(x, minus.clone()));
            }
        }
        total += pairs[start..].iter().map(Pair::total_size).sum::<u64>();
    }
    pairs
}

/// A benchmark input of total size at least `target`, deterministic in
/// `seed`.
pub fn bench_list<C: Coefficient>(alphabet: Alphabet, workload: Workload, target: u64, seed: u64) -> EncodedList<C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = alphabet.letter_count() as f64;
    let mut l = EncodedList::new(alphabet);
    let mut total = 0;
    match workload {
        Workload::Uniform => {
            let depth = ((target as f64).ln() / k.ln()).ceil().max(1.0) as usize;
            while total < target {
                let w = Word::from(random_word(alphabet, depth, &mut rng));
                let c: C = geometric_coeff(&mut rng);
                total += depth as u64 + c.size();
                l.push(w, c);
            }
        }
        Workload::Collapse => {
            l.pairs = collapse_pairs(alphabet, target, &mut rng);
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{IntCode, RatCode};
    use crate::monoid_min::find_minimal_list;

    #[test]
    fn deterministic_and_large_enough() {
        let a = Alphabet::monoid(3).unwrap();
        for w in [Workload::Uniform, Workload::Collapse] {
            let l1: EncodedList<IntCode> = bench_list(a, w, 5000, 9);
            let l2: EncodedList<IntCode> = bench_list(a, w, 5000, 9);
            assert_eq!(l1, l2);
            assert!(l1.total_size() >= 5000);
        }
    }

    #[test]
    fn collapse_minimizes_to_depth_one() {
        for a in [Alphabet::monoid(3).unwrap(), Alphabet::group(2).unwrap()] {
            let l: EncodedList<IntCode> = bench_list(a, Workload::Collapse, 40_000, 1);
            assert!(l.max_depth() >= 3);
            assert!(find_minimal_list(&l).max_depth() <= 1);
            let r: EncodedList<RatCode> = bench_list(a, Workload::Collapse, 40_000, 1);
            assert!(find_minimal_list(&r).max_depth() <= 1);
        }
    }

    #[test]
    fn small_coefficients_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let x: RatCode = small_coeff(&mut rng, 16);
            let (_, _, _, n) = x.parts().unwrap();
            assert!(*n <= 16u32.into());
            assert!(!small_coeff::<IntCode>(&mut rng, 16).is_zero());
        }
    }
}
