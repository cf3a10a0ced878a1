//! Encoded lists of word-coefficient pairs and the basic list procedures.

mod dot;
mod qmlist;

pub use dot::render_dot;
pub use qmlist::{parse_list, serialize_list, AnyList, ListParseError};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::coeff::Coefficient;
use crate::words::{count_occurrences, Alphabet, Letter, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Alphabet, Alphabet),
    #[error("coefficient domains differ")]
    DomainMismatch,
    #[error("list is empty")]
    EmptyList,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A word-coefficient pair. `|pair|_tot = |word| + ‖coeff‖`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pair<C> {
    pub word: Word,
    pub coeff: C,
}

impl<C: Coefficient> Pair<C> {
    pub fn new(word: Word, coeff: C) -> Self {
        Pair { word, coeff }
    }

    pub fn total_size(&self) -> u64 {
        self.word.len() as u64 + self.coeff.size()
    }
}

/// An encoded list over a fixed alphabet. The coefficient domain is the
/// type parameter.
#[derive(Clone, PartialEq)]
pub struct EncodedList<C> {
    pub alphabet: Alphabet,
    pub pairs: Vec<Pair<C>>,
}

impl<C: Coefficient> EncodedList<C> {
    pub fn new(alphabet: Alphabet) -> Self {
        EncodedList { alphabet, pairs: Vec::new() }
    }

    pub fn from_pairs(alphabet: Alphabet, pairs: Vec<Pair<C>>) -> Self {
        EncodedList { alphabet, pairs }
    }

    /// Builds a list from `(word, coefficient)` text pairs. Panics on bad
    /// input; meant for tests and examples.
    pub fn from_text(alphabet: Alphabet, entries: &[(&str, &str)]) -> Self {
        let pairs =
            entries.iter().map(|(w, c)| Pair::new(alphabet.parse_word(w).unwrap(), C::parse(c).unwrap())).collect();
        EncodedList { alphabet, pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn push(&mut self, word: Word, coeff: C) {
        self.pairs.push(Pair::new(word, coeff));
    }

    /// `|L| = Σ|w_i|`
    pub fn word_size(&self) -> u64 {
        self.pairs.iter().map(|p| p.word.len() as u64).sum()
    }

    /// `‖L‖ = Σ‖x_i‖`
    pub fn coeff_size(&self) -> u64 {
        self.pairs.iter().map(|p| p.coeff.size()).sum()
    }

    /// `|L|_tot = |L| + ‖L‖`
    pub fn total_size(&self) -> u64 {
        total_size(&self.pairs)
    }

    /// Maximal length of a word with nonzero coefficient, `-1` if there is
    /// none.
    pub fn max_depth(&self) -> i64 {
        max_depth(&self.pairs)
    }

    pub fn is_normalized(&self) -> bool {
        is_normalized(&self.pairs)
    }

    pub fn normalize(self) -> Self {
        let alphabet = self.alphabet;
        EncodedList { alphabet, pairs: normalize_pairs(alphabet, self.pairs) }
    }

    pub fn normalized(&self) -> Self {
        self.clone().normalize()
    }

    pub fn check(&self) -> Result<(), ListError> {
        for p in &self.pairs {
            self.alphabet.check_word(p.word.letters())?;
        }
        Ok(())
    }

    /// `Σ ⟨x_i⟩·ρ_{w_i}(w)`, computed exactly over the rationals.
    pub fn evaluate(&self, w: &[Letter]) -> BigRational {
        let mut acc = BigRational::zero();
        for p in &self.pairs {
            let k = count_occurrences(p.word.letters(), w);
            if k != 0 {
                acc += p.coeff.to_rational() * BigRational::from_integer(BigInt::from(k));
            }
        }
        acc
    }

    /// The normalized list of `f_{L1} − f_{L2}`.
    pub fn difference(&self, other: &Self) -> Result<Self, ListError> {
        if self.alphabet != other.alphabet {
            return Err(ListError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().map(|p| Pair::new(p.word.clone(), p.coeff.neg())));
        Ok(EncodedList { alphabet: self.alphabet, pairs }.normalize())
    }

    /// Splits off the leading run of pairs sharing the first pair's father.
    pub fn detach_brotherhood(&self) -> Result<(Self, Self), ListError> {
        if self.pairs.is_empty() {
            return Err(ListError::EmptyList);
        }
        let end = brotherhood_end(&self.pairs, 0);
        Ok((
            EncodedList::from_pairs(self.alphabet, self.pairs[..end].to_vec()),
            EncodedList::from_pairs(self.alphabet, self.pairs[end..].to_vec()),
        ))
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format_word(w.letters())
    }
}

impl<C: Coefficient> fmt::Debug for EncodedList<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", self.alphabet.format_word(p.word.letters()), p.coeff)?;
        }
        f.write_str(")")
    }
}

impl<C: Coefficient> fmt::Display for EncodedList<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn total_size<C: Coefficient>(pairs: &[Pair<C>]) -> u64 {
    pairs.iter().map(Pair::total_size).sum()
}

pub fn max_depth<C: Coefficient>(pairs: &[Pair<C>]) -> i64 {
    pairs.iter().filter(|p| !p.coeff.is_zero()).map(|p| p.word.len() as i64).max().unwrap_or(-1)
}

/// Words strictly increasing in shortlex order and no zero coefficients.
pub fn is_normalized<C: Coefficient>(pairs: &[Pair<C>]) -> bool {
    pairs.windows(2).all(|w| w[0].word < w[1].word) && pairs.iter().all(|p| !p.coeff.is_zero())
}

/// End index (exclusive) of the brotherhood starting at `start`: the
/// maximal run of equal-length words sharing the father of `pairs[start]`.
pub fn brotherhood_end<C>(pairs: &[Pair<C>], start: usize) -> usize {
    let first = &pairs[start].word;
    let father = first.father();
    let len = first.len();
    let mut end = start + 1;
    while end < pairs.len() {
        let w = &pairs[end].word;
        if w.len() != len || w.father() != father {
            break;
        }
        end += 1;
    }
    end
}

/// Sorts the pairs shortlex with a radix sort, merges equal words with
/// `⊕` in input order and drops zero coefficients.
pub fn normalize_pairs<C: Coefficient>(alphabet: Alphabet, pairs: Vec<Pair<C>>) -> Vec<Pair<C>> {
    let (group, count) = shortlex_groups(alphabet.letter_count(), &pairs);
    let mut out: Vec<Option<Pair<C>>> = (0..count).map(|_| None).collect();
    for (p, g) in pairs.into_iter().zip(group) {
        match &mut out[g] {
            Some(q) => q.coeff = q.coeff.add(&p.coeff),
            slot => *slot = Some(p),
        }
    }
    out.into_iter().flatten().filter(|p| !p.coeff.is_zero()).collect()
}

/// Rank of each pair's word among the distinct words, in shortlex order,
/// and the number of distinct words. Counting sort by length, then an LSD
/// radix pass per letter position within each length class.
fn shortlex_groups<C>(letters: usize, pairs: &[Pair<C>]) -> (Vec<usize>, usize) {
    let max_len = pairs.iter().map(|p| p.word.len()).max().unwrap_or(0);
    let mut by_len = vec![Vec::new(); max_len + 1];
    for (i, p) in pairs.iter().enumerate() {
        by_len[p.word.len()].push(i);
    }
    let mut group = vec![0usize; pairs.len()];
    let mut next = 0;
    let mut counts = vec![0usize; letters + 1];
    for (len, class) in by_len.iter().enumerate() {
        if class.is_empty() {
            continue;
        }
        let mut keys = Vec::with_capacity(class.len() * len);
        for &i in class {
            keys.extend_from_slice(pairs[i].word.letters());
        }
        let mut local: Vec<usize> = (0..class.len()).collect();
        let mut scratch = vec![0usize; class.len()];
        for pos in (0..len).rev() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &j in &local {
                counts[keys[j * len + pos] as usize + 1] += 1;
            }
            for k in 1..counts.len() {
                counts[k] += counts[k - 1];
            }
            for &j in &local {
                let l = keys[j * len + pos] as usize;
                scratch[counts[l]] = j;
                counts[l] += 1;
            }
            std::mem::swap(&mut local, &mut scratch);
        }
        let key = |j: usize| &keys[j * len..(j + 1) * len];
        for (k, &j) in local.iter().enumerate() {
            if k > 0 && key(j) != key(local[k - 1]) {
                next += 1;
            }
            group[class[j]] = next;
        }
        next += 1;
    }
    (group, next)
}
