//! A brute-force decision procedure for small instances: exact Gaussian
//! elimination over the span of the left and right extension relations.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coeff::Coefficient;
use crate::lists::{EncodedList, ListError};
use crate::words::{inverse_letter, Alphabet, Letter, Word};

/// Largest ambient dimension the oracle accepts.
pub const MAX_DIMENSION: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large: {dimension} words of length at most {depth} (limit {MAX_DIMENSION})")]
    TooLarge { depth: usize, dimension: usize },
    #[error(transparent)]
    List(#[from] ListError),
}

/// A sparse vector over the words of length `≤ ℓ`.
pub type SparseVector = BTreeMap<Word, BigRational>;

/// All words of length at most `depth` (reduced words in group mode),
/// grouped by length.
fn words_up_to(alphabet: Alphabet, depth: usize) -> Vec<Vec<Word>> {
    let mut levels = vec![vec![Word::empty()]];
    for _ in 0..depth {
        let next = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|w| {
                alphabet.letters().filter(|&a| w.last().is_none_or(|l| alphabet.may_follow(l, a))).map(|a| w.append(a))
            })
            .collect();
        levels.push(next);
    }
    levels
}

/// Number of words of length at most `depth`, saturating.
pub fn dimension(alphabet: Alphabet, depth: usize) -> usize {
    let k = alphabet.letter_count();
    let mut level = 1usize;
    let mut total = 1usize;
    for d in 1..=depth {
        level = level.saturating_mul(if alphabet.is_group() && d > 1 { k - 1 } else { k });
        total = total.saturating_add(level);
    }
    total
}

/// The extension relations `ρ_w − Σ_a ρ_{wa}` and `ρ_w − Σ_a ρ_{aw}` for
/// every word `w` of length `≤ depth − 1`, without duplicates.
pub fn relation_vectors(alphabet: Alphabet, depth: usize) -> Vec<SparseVector> {
    let one = BigRational::from_integer(BigInt::from(1));
    let mut out: Vec<SparseVector> = Vec::new();
    if depth == 0 {
        return out;
    }
    for level in words_up_to(alphabet, depth - 1) {
        for w in level {
            let extend = |left: bool| {
                let mut v = SparseVector::new();
                v.insert(w.clone(), one.clone());
                for a in alphabet.letters() {
                    let ok = match (left, w.first(), w.last()) {
                        (true, Some(f), _) => alphabet.may_follow(a, f),
                        (false, _, Some(l)) => alphabet.may_follow(l, a),
                        _ => true,
                    };
                    if ok {
                        let x = if left { w.prepend(a) } else { w.append(a) };
                        v.insert(x, -one.clone());
                    }
                }
                v
            };
            let (l, r) = (extend(true), extend(false));
            let same = l == r;
            out.push(l);
            if !same {
                out.push(r);
            }
        }
    }
    out
}

/// Column order used for elimination: longer words first, then shortlex.
fn column_key(w: &Word) -> (std::cmp::Reverse<usize>, Word) {
    (std::cmp::Reverse(w.len()), w.clone())
}

type Row = BTreeMap<(std::cmp::Reverse<usize>, Word), BigRational>;

/// An echelon basis of the relation span with respect to [`column_key`].
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<(std::cmp::Reverse<usize>, Word), Row>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn to_row(v: &SparseVector) -> Row {
        v.iter().filter(|(_, x)| !x.is_zero()).map(|(w, x)| (column_key(w), x.clone())).collect()
    }

    /// Reduces `v` against the basis. Returns the residual and the
    /// coefficients used, keyed by pivot.
    fn reduce(&self, mut v: Row) -> (Row, Vec<(Word, BigRational)>) {
        let mut residual = Row::new();
        let mut used = Vec::new();
        while let Some((col, x)) = v.pop_first() {
            match self.rows.get(&col) {
                Some(row) => {
                    for (c, y) in row.iter().skip(1) {
                        let e = v.entry(c.clone()).or_insert_with(BigRational::zero);
                        *e -= &x * y;
                        if e.is_zero() {
                            v.remove(c);
                        }
                    }
                    used.push((col.1.clone(), x));
                }
                None => {
                    residual.insert(col, x);
                }
            }
        }
        (residual, used)
    }

    /// Adds `v` to the span, keeping rows monic.
    pub fn insert(&mut self, v: &SparseVector) {
        let (mut residual, _) = self.reduce(Self::to_row(v));
        let Some((_, lead)) = residual.first_key_value() else {
            return;
        };
        let lead = lead.clone();
        for x in residual.values_mut() {
            *x /= &lead;
        }
        let pivot = residual.keys().next().unwrap().clone();
        self.rows.insert(pivot, residual);
    }

    pub fn build(vectors: &[SparseVector]) -> Self {
        let mut e = Echelon::default();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    /// The unique residual of `v` modulo the span, as a sparse vector.
    pub fn residual(&self, v: &SparseVector) -> SparseVector {
        self.reduce(Self::to_row(v)).0.into_iter().map(|((_, w), x)| (w, x)).collect()
    }

    /// Whether `v` lies in the span; on success the combination of basis
    /// rows (each keyed by its pivot word) reproduces `v` exactly.
    pub fn combination(&self, v: &SparseVector) -> Option<Vec<(Word, BigRational)>> {
        let (residual, used) = self.reduce(Self::to_row(v));
        residual.is_empty().then_some(used)
    }

    /// The basis row with the given pivot word.
    pub fn row(&self, pivot: &Word) -> Option<SparseVector> {
        self.rows.get(&column_key(pivot)).map(|r| r.iter().map(|((_, w), x)| (w.clone(), x.clone())).collect())
    }
}

/// Caches echelon bases by alphabet and depth.
#[derive(Debug, Default)]
pub struct OracleCache {
    bases: HashMap<(Alphabet, usize), Echelon>,
}

impl OracleCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(&mut self, alphabet: Alphabet, depth: usize) -> Result<&Echelon, OracleError> {
        let dim = dimension(alphabet, depth);
        if dim > MAX_DIMENSION {
            return Err(OracleError::TooLarge { depth, dimension: dim });
        }
        Ok(self.bases.entry((alphabet, depth)).or_insert_with(|| Echelon::build(&relation_vectors(alphabet, depth))))
    }

    pub fn minimal_depth<C: Coefficient>(&mut self, list: &EncodedList<C>) -> Result<i64, OracleError> {
        let v = coefficient_vector(list);
        let Some(depth) = v.keys().map(Word::len).max() else {
            return Ok(-1);
        };
        let residual = self.basis(list.alphabet, depth)?.residual(&v);
        Ok(residual.keys().map(|w| w.len() as i64).max().unwrap_or(-1))
    }

    pub fn equivalent<C: Coefficient>(
        &mut self,
        l1: &EncodedList<C>,
        l2: &EncodedList<C>,
    ) -> Result<bool, OracleError> {
        Ok(self.minimal_depth(&l1.difference(l2)?)? == -1)
    }
}

/// The exact rational coefficient vector of the normalized list.
pub fn coefficient_vector<C: Coefficient>(list: &EncodedList<C>) -> SparseVector {
    let mut v = SparseVector::new();
    for p in &list.pairs {
        let e = v.entry(p.word.clone()).or_insert_with(BigRational::zero);
        *e += p.coeff.to_rational();
    }
    v.retain(|_, x| !x.is_zero());
    v
}

/// The least `d ≥ −1` such that `list` is equivalent to a list of depth
/// `≤ d`, using relations up to the list's own depth.
pub fn oracle_minimal_depth<C: Coefficient>(list: &EncodedList<C>) -> Result<i64, OracleError> {
    OracleCache::new().minimal_depth(list)
}

pub fn oracle_equivalent<C: Coefficient>(l1: &EncodedList<C>, l2: &EncodedList<C>) -> Result<bool, OracleError> {
    OracleCache::new().equivalent(l1, l2)
}

/// A uniformly random word of the given length (reduced in group mode).
pub fn random_word(alphabet: Alphabet, len: usize, rng: &mut impl Rng) -> Vec<Letter> {
    let k = alphabet.letter_count() as Letter;
    let mut w: Vec<Letter> = Vec::with_capacity(len);
    while w.len() < len {
        let a = match w.last() {
            Some(&l) if alphabet.is_group() => {
                let a = rng.gen_range(0..k - 1);
                if a >= inverse_letter(l) {
                    a + 1
                } else {
                    a
                }
            }
            _ => rng.gen_range(0..k),
        };
        w.push(a);
    }
    w
}

/// The largest `|f_L(w)|` over `samples` random words of length
/// `≤ max_len`. The first sample has length exactly `max_len`.
pub fn empirical_sup<C: Coefficient>(list: &EncodedList<C>, samples: usize, max_len: usize, seed: u64) -> BigRational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = BigRational::zero();
    for s in 0..samples {
        let len = if s == 0 { max_len } else { rng.gen_range(0..=max_len) };
        let w = random_word(list.alphabet, len, &mut rng);
        let x = list.evaluate(&w).abs();
        if x > best {
            best = x;
        }
    }
    best
}
