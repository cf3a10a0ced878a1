//! The line-oriented `qmlist v1` text format.
//!
//! ```text
//! qmlist v1
//! mode=monoid
//! n=3
//! coeff=int
//! ab -6      # one entry per line
//! 1 -1
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{EncodedList, Pair};
use crate::coeff::{Coefficient, Domain, IntCode, RatCode};
use crate::words::{Alphabet, Mode};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ListParseError {
    pub line: usize,
    pub message: String,
}

impl ListParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ListParseError { line, message: message.into() }
    }
}

/// A list whose coefficient domain is only known at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyList {
    Int(EncodedList<IntCode>),
    Rat(EncodedList<RatCode>),
}

impl AnyList {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            AnyList::Int(l) => l.alphabet,
            AnyList::Rat(l) => l.alphabet,
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            AnyList::Int(_) => Domain::Int,
            AnyList::Rat(_) => Domain::Rat,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyList::Int(l) => serialize_list(l),
            AnyList::Rat(l) => serialize_list(l),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_list(text: &str) -> Result<AnyList, ListParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l)));
    let mut last_line = 0;

    let mut magic_seen = false;
    for (no, line) in lines.by_ref() {
        last_line = no;
        if line.is_empty() {
            continue;
        }
        if line.split_whitespace().collect::<Vec<_>>() != ["qmlist", "v1"] {
            return Err(ListParseError::new(no, format!("expected \"qmlist v1\", found {line:?}")));
        }
        magic_seen = true;
        break;
    }
    if !magic_seen {
        return Err(ListParseError::new(last_line.max(1), "missing \"qmlist v1\" header"));
    }

    let (mut mode, mut rank, mut domain) = (None, None, None);
    let mut header_end = last_line;
    while mode.is_none() || rank.is_none() || domain.is_none() {
        let Some((no, line)) = lines.next() else {
            return Err(ListParseError::new(header_end.max(1), "incomplete header: mode, n and coeff are required"));
        };
        header_end = no;
        for token in line.split_whitespace() {
            let Some((key, value)) = token.split_once('=') else {
                return Err(ListParseError::new(no, format!("expected key=value, found {token:?}")));
            };
            let dup = || ListParseError::new(no, format!("duplicate header key {key:?}"));
            match key {
                "mode" => {
                    let m: Mode = value.parse().map_err(|e| ListParseError::new(no, format!("{e}")))?;
                    if mode.replace(m).is_some() {
                        return Err(dup());
                    }
                }
                "n" => {
                    let r: usize = value.parse().map_err(|_| ListParseError::new(no, format!("bad rank {value:?}")))?;
                    if rank.replace(r).is_some() {
                        return Err(dup());
                    }
                }
                "coeff" => {
                    let d: Domain = value.parse().map_err(|e| ListParseError::new(no, format!("{e}")))?;
                    if domain.replace(d).is_some() {
                        return Err(dup());
                    }
                }
                _ => return Err(ListParseError::new(no, format!("unknown header key {key:?}"))),
            }
        }
    }
    let alphabet =
        Alphabet::new(rank.unwrap(), mode.unwrap()).map_err(|e| ListParseError::new(header_end, format!("{e}")))?;

    match domain.unwrap() {
        Domain::Int => parse_entries(alphabet, lines).map(AnyList::Int),
        Domain::Rat => parse_entries(alphabet, lines).map(AnyList::Rat),
    }
}

fn parse_entries<'a, C: Coefficient>(
    alphabet: Alphabet,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<EncodedList<C>, ListParseError> {
    let mut list = EncodedList::new(alphabet);
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            if fields[0].contains('=') {
                return Err(ListParseError::new(no, "header key after the first entry"));
            }
            return Err(ListParseError::new(no, format!("expected \"<word> <coeff>\", found {line:?}")));
        }
        let word = alphabet.parse_word(fields[0]).map_err(|e| ListParseError::new(no, format!("bad word: {e}")))?;
        let coeff = C::parse(fields[1]).map_err(|e| ListParseError::new(no, format!("bad coefficient: {e}")))?;
        list.pairs.push(Pair::new(word, coeff));
    }
    Ok(list)
}

pub fn serialize_list<C: Coefficient>(list: &EncodedList<C>) -> String {
    let a = list.alphabet;
    let mut out = format!("qmlist v1\nmode={}\nn={}\ncoeff={}\n", a.mode(), a.rank(), C::DOMAIN);
    for p in &list.pairs {
        let _ = writeln!(out, "{} {}", a.format_word(p.word.letters()), p.coeff);
    }
    out
}
