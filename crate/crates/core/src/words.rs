//! Words over a monoid alphabet and reduced words over the doubled group
//! alphabet.
//!
//! Letters are small integers. In monoid mode generator `g` is letter `g`.
//! In group mode generator `g` is letter `2g` and its inverse is `2g+1`, so
//! the numeric order of letters is `a < A < b < B < …` and inverting a letter
//! flips its lowest bit.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

pub type Letter = u8;

pub const MAX_RANK: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Monoid,
    Group,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Monoid => "monoid",
            Mode::Group => "group",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monoid" => Ok(Mode::Monoid),
            "group" => Ok(Mode::Group),
            other => Err(WordError::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet rank {0} out of range 2..=26")]
    Rank(usize),
    #[error("unknown mode {0:?}")]
    UnknownMode(String),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("letter code {0} is not in the alphabet")]
    LetterCode(Letter),
    #[error("word {0:?} is not reduced")]
    NotReduced(String),
    #[error("empty word text (use \"1\" for the empty word)")]
    EmptyText,
    #[error("word has length {0}, a stem needs at least 2 letters")]
    NoStem(usize),
}

/// The alphabet `A = {a_1, …, a_n}` together with the mode. In group mode
/// the letter set is the extended alphabet `A±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    rank: usize,
    mode: Mode,
}

impl Alphabet {
    pub fn new(rank: usize, mode: Mode) -> Result<Self, WordError> {
        if !(2..=MAX_RANK).contains(&rank) {
            return Err(WordError::Rank(rank));
        }
        Ok(Alphabet { rank, mode })
    }

    pub fn monoid(rank: usize) -> Result<Self, WordError> {
        Self::new(rank, Mode::Monoid)
    }

    pub fn group(rank: usize) -> Result<Self, WordError> {
        Self::new(rank, Mode::Group)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_group(&self) -> bool {
        self.mode == Mode::Group
    }

    /// Number of letters: `n` for the monoid, `2n` for the group.
    pub fn letter_count(&self) -> usize {
        match self.mode {
            Mode::Monoid => self.rank,
            Mode::Group => 2 * self.rank,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        0..self.letter_count() as Letter
    }

    /// Number of children of a vertex at the given depth in the Cayley
    /// tree, i.e. the size of a full brotherhood below a word of length
    /// `depth - 1`.
    pub fn fullness(&self, depth: usize) -> usize {
        match (self.mode, depth) {
            (Mode::Monoid, _) => self.rank,
            (Mode::Group, 0 | 1) => 2 * self.rank,
            (Mode::Group, _) => 2 * self.rank - 1,
        }
    }

    pub fn letter_name(&self, l: Letter) -> char {
        match self.mode {
            Mode::Monoid => (b'a' + l) as char,
            Mode::Group if l & 1 == 0 => (b'a' + l / 2) as char,
            Mode::Group => (b'A' + l / 2) as char,
        }
    }

    pub fn parse_letter(&self, c: char) -> Result<Letter, WordError> {
        let r = self.rank as u8;
        let code = match (self.mode, c) {
            (_, 'a'..='z') if (c as u8 - b'a') < r => {
                let g = c as u8 - b'a';
                if self.is_group() {
                    2 * g
                } else {
                    g
                }
            }
            (Mode::Group, 'A'..='Z') if (c as u8 - b'A') < r => 2 * (c as u8 - b'A') + 1,
            _ => return Err(WordError::UnknownLetter(c)),
        };
        Ok(code)
    }

    /// Parses a word: `"1"` is the empty word, group words must be reduced.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        match text {
            "" => Err(WordError::EmptyText),
            "1" => Ok(Word::empty()),
            _ => {
                let letters = text.chars().map(|c| self.parse_letter(c)).collect::<Result<WordBuf, _>>()?;
                if self.is_group() && !is_reduced(&letters) {
                    return Err(WordError::NotReduced(text.to_string()));
                }
                Ok(Word(letters))
            }
        }
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| self.letter_name(l)).collect()
        }
    }

    /// Checks that every letter belongs to the alphabet and, in group mode,
    /// that the word is reduced.
    pub fn check_word(&self, w: &[Letter]) -> Result<(), WordError> {
        if let Some(&l) = w.iter().find(|&&l| l as usize >= self.letter_count()) {
            return Err(WordError::LetterCode(l));
        }
        if self.is_group() && !is_reduced(w) {
            return Err(WordError::NotReduced(self.format_word(w)));
        }
        Ok(())
    }

    /// Whether `b` may follow `a` in a word of this mode.
    #[inline]
    pub fn may_follow(&self, a: Letter, b: Letter) -> bool {
        !self.is_group() || a != inverse_letter(b)
    }
}

#[inline]
pub fn inverse_letter(l: Letter) -> Letter {
    l ^ 1
}

/// A word, ordered shortlex: shorter words first, then lexicographically
/// by letter code.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub WordBuf);

/// Letter storage; words of up to 16 letters live inline.
pub type WordBuf = SmallVec<[Letter; 16]>;

impl Word {
    pub fn empty() -> Self {
        Word(WordBuf::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(WordBuf::from_slice(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The word with its last letter removed (the father vertex).
    pub fn father(&self) -> &[Letter] {
        &self.0[..self.0.len().saturating_sub(1)]
    }

    /// The word with first and last letter removed.
    pub fn stem(&self) -> Result<&[Letter], WordError> {
        stem_of(&self.0)
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = WordBuf::with_capacity(self.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, l: Letter) -> Word {
        let mut v = WordBuf::with_capacity(self.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(l);
        Word(v)
    }

    /// The inverse of a group word: reversed with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| inverse_letter(l)).collect())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(WordBuf::from_vec(v))
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word::from_letters(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_compare(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

pub fn shortlex_compare(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn stem_of(w: &[Letter]) -> Result<&[Letter], WordError> {
    if w.len() < 2 {
        return Err(WordError::NoStem(w.len()));
    }
    Ok(&w[1..w.len() - 1])
}

pub fn is_reduced(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] != inverse_letter(p[1]))
}

pub fn invert(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&l| inverse_letter(l)).collect()
}

/// `ρ_v(w)`: the number of possibly overlapping occurrences of `v` in `w`.
/// `ρ_ε(w) = |w|`.
pub fn count_occurrences(v: &[Letter], w: &[Letter]) -> u64 {
    if v.is_empty() {
        return w.len() as u64;
    }
    if v.len() > w.len() {
        return 0;
    }
    w.windows(v.len()).filter(|win| *win == v).count() as u64
}

/// `φ_v(w) = ρ_v(w) − ρ_v(w⁻¹)` for reduced group words.
pub fn quasimorphism_value(v: &[Letter], w: &[Letter]) -> i64 {
    let inv = invert(w);
    count_occurrences(v, w) as i64 - count_occurrences(v, &inv) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> Alphabet {
        Alphabet::monoid(3).unwrap()
    }

    fn g2() -> Alphabet {
        Alphabet::group(2).unwrap()
    }

    #[test]
    fn counting_examples() {
        let a = m3();
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(count_occurrences(&[], w("aba").letters()), 3);
        assert_eq!(count_occurrences(w("aa").letters(), w("aaaa").letters()), 3);
        assert_eq!(count_occurrences(w("ab").letters(), w("ba").letters()), 0);
        let g = g2();
        let v = g.parse_word("aB").unwrap();
        assert_eq!(count_occurrences(v.letters(), g.parse_word("aBaB").unwrap().letters()), 2);
    }

    #[test]
    fn inversion_examples() {
        let g = Alphabet::group(3).unwrap();
        let w = g.parse_word("abA").unwrap();
        assert_eq!(g.format_word(w.inverse().letters()), "aBA");
        assert_eq!(Word::empty().inverse(), Word::empty());
        assert_eq!(g.format_word(g.parse_word("a").unwrap().inverse().letters()), "A");
    }

    #[test]
    fn reducedness() {
        let g = g2();
        assert!(!is_reduced(&[g.parse_letter('a').unwrap(), g.parse_letter('A').unwrap()]));
        assert!(g.parse_word("aA").is_err());
        assert!(g.parse_word("aBa").is_ok());
        assert!(is_reduced(&[]));
    }

    #[test]
    fn shortlex_examples() {
        let a = m3();
        let w = |s| a.parse_word(s).unwrap();
        assert!(w("b") < w("aa"));
        assert!(w("ab") < w("ac"));
        let g = g2();
        assert!(g.parse_word("a").unwrap() < g.parse_word("A").unwrap());
        assert!(g.parse_word("A").unwrap() < g.parse_word("b").unwrap());
        assert!(Word::empty() < w("a"));
    }

    #[test]
    fn stems() {
        let a = m3();
        assert_eq!(a.format_word(a.parse_word("abc").unwrap().stem().unwrap()), "b");
        assert!(a.parse_word("ab").unwrap().stem().unwrap().is_empty());
        assert_eq!(a.parse_word("a").unwrap().stem(), Err(WordError::NoStem(1)));
        let g = g2();
        assert_eq!(g.format_word(g.parse_word("aBa").unwrap().stem().unwrap()), "B");
    }

    #[test]
    fn quasimorphism_examples() {
        let g = g2();
        let w = |s| g.parse_word(s).unwrap();
        assert_eq!(quasimorphism_value(w("a").letters(), w("aa").letters()), 2);
        assert_eq!(quasimorphism_value(w("ab").letters(), &[]), 0);
        assert_eq!(quasimorphism_value(w("ab").letters(), w("ab").letters()), 1);
    }

    #[test]
    fn parsing_and_names() {
        let a = m3();
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert_eq!(a.parse_word("d"), Err(WordError::UnknownLetter('d')));
        assert_eq!(a.parse_word("A"), Err(WordError::UnknownLetter('A')));
        assert_eq!(a.parse_word(""), Err(WordError::EmptyText));
        assert_eq!(a.format_word(&[]), "1");
        let g = g2();
        assert_eq!(g.parse_word("aAbB").unwrap_err(), WordError::NotReduced("aAbB".into()));
        assert_eq!(g.letters().map(|l| g.letter_name(l)).collect::<String>(), "aAbB");
        assert!(Alphabet::monoid(1).is_err());
        assert!(Alphabet::monoid(27).is_err());
    }

    #[test]
    fn fullness() {
        assert_eq!(m3().fullness(4), 3);
        assert_eq!(g2().fullness(1), 4);
        assert_eq!(g2().fullness(2), 3);
    }
}
