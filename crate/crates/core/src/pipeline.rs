//! The minimization pipeline shared by the monoid and group cases.

use crate::coeff::Coefficient;
use std::ops::Range;

use crate::lists::{brotherhood_end, normalize_pairs, total_size, EncodedList, ListError, Pair};
use crate::trace::{Observer, StepEvent, StepKind};
use crate::transfer::{SpecialMatrix, TransferMatrix};
use crate::words::{inverse_letter, Alphabet, Letter, Word};

fn event<'a, C: Coefficient>(
    alphabet: Alphabet,
    kind: StepKind,
    depth: usize,
    input: impl Iterator<Item = &'a Pair<C>>,
    output: Option<&[Pair<C>]>,
) -> StepEvent {
    let (input_total, input_coeff_size) = input.fold((0, 0), |(t, c), p| (t + p.total_size(), c + p.coeff.size()));
    StepEvent {
        kind,
        mode: alphabet.mode(),
        rank: alphabet.rank(),
        depth,
        input_total,
        input_coeff_size,
        output_total: output.map_or(input_total, total_size),
        minimal: output.is_none(),
    }
}

/// Checks that `pairs` is normalized with all words of length `depth`.
pub(crate) fn check_constant_depth<C: Coefficient>(
    alphabet: Alphabet,
    pairs: &[Pair<C>],
    depth: usize,
) -> Result<(), ListError> {
    if !crate::lists::is_normalized(pairs) {
        return Err(ListError::Precondition("list is not normalized".into()));
    }
    for p in pairs {
        alphabet.check_word(p.word.letters())?;
        if p.word.len() != depth {
            return Err(ListError::Precondition(format!(
                "word {} does not have length {depth}",
                alphabet.format_word(p.word.letters())
            )));
        }
    }
    Ok(())
}

/// Splits a constant-depth list into brotherhoods. Returns the index
/// ranges of the brotherhoods that are not full with all coefficients equal,
/// and one `(father, coefficient)` pair per pruned brotherhood, the
/// coefficient being the first of smallest size.
fn prune_ranges<C: Coefficient>(
    alphabet: Alphabet,
    pairs: &[Pair<C>],
    depth: usize,
) -> (Vec<Range<usize>>, Vec<Pair<C>>) {
    let h = alphabet.fullness(depth);
    let mut kept = Vec::new();
    let mut lnew = Vec::new();
    let mut start = 0;
    while start < pairs.len() {
        let end = brotherhood_end(pairs, start);
        let b = &pairs[start..end];
        if b.len() == h && b.iter().all(|p| p.coeff == b[0].coeff) {
            let rep = b.iter().min_by_key(|p| p.coeff.size()).unwrap();
            lnew.push(Pair::new(Word::from_letters(rep.word.father()), rep.coeff.clone()));
        } else {
            kept.push(start..end);
        }
        start = end;
    }
    (kept, lnew)
}

/// Removes every full brotherhood whose coefficients are all equal. Returns
/// the remaining pairs and the pairs replacing the removed brotherhoods.
pub(crate) fn prune<C: Coefficient>(
    alphabet: Alphabet,
    pairs: &[Pair<C>],
    depth: usize,
) -> (Vec<Pair<C>>, Vec<Pair<C>>) {
    let (kept, lnew) = prune_ranges(alphabet, pairs, depth);
    (kept.into_iter().flat_map(|r| pairs[r].iter().cloned()).collect(), lnew)
}

/// Runs the generic move on one family of related brotherhoods.
pub(crate) fn generic_move<C: Coefficient, O: Observer<C>>(
    alphabet: Alphabet,
    u: &[Letter],
    family: &[&Pair<C>],
    obs: &mut O,
) -> Result<Option<Vec<Pair<C>>>, ListError> {
    let t = TransferMatrix::build(alphabet, u, family.iter().copied()).map_err(ListError::Precondition)?;
    let out = t.transfer_and_prune();
    if obs.wants_events() {
        obs.event(&event(alphabet, StepKind::GenericMove, u.len() + 2, family.iter().copied(), out.as_deref()));
    }
    Ok(out)
}

/// Runs the special depth-2 group move on all kept depth-2 pairs.
pub(crate) fn special_move<C: Coefficient, O: Observer<C>>(
    alphabet: Alphabet,
    pairs: &[&Pair<C>],
    obs: &mut O,
) -> Result<Option<Vec<Pair<C>>>, ListError> {
    let t = SpecialMatrix::build(alphabet, pairs.iter().copied()).map_err(ListError::Precondition)?;
    let out = t.transfer_and_prune();
    if obs.wants_events() {
        obs.event(&event(alphabet, StepKind::SpecialMove, 2, pairs.iter().copied(), out.as_deref()));
    }
    Ok(out)
}

/// Applies the generic move to a normalized family of related brotherhoods
/// of depth `depth`, returning `(minimal, output)`.
pub(crate) fn family_move<C: Coefficient, O: Observer<C>>(
    family: &EncodedList<C>,
    depth: usize,
    obs: &mut O,
) -> Result<(bool, EncodedList<C>), ListError> {
    let alphabet = family.alphabet;
    check_constant_depth(alphabet, &family.pairs, depth)?;
    let Some(first) = family.pairs.first() else {
        return Err(ListError::EmptyList);
    };
    let u = first.word.stem()?.to_vec();
    let refs: Vec<&Pair<C>> = family.pairs.iter().collect();
    Ok(match generic_move(alphabet, &u, &refs, obs)? {
        None => (true, family.clone()),
        Some(out) => (false, EncodedList::from_pairs(alphabet, normalize_pairs(alphabet, out))),
    })
}

/// Checked wrapper around [`main_step`] returning `(minimal, output)`.
pub(crate) fn checked_main_step<C: Coefficient, O: Observer<C>>(
    list: &EncodedList<C>,
    depth: usize,
    obs: &mut O,
) -> Result<(bool, EncodedList<C>), ListError> {
    let alphabet = list.alphabet;
    check_constant_depth(alphabet, &list.pairs, depth)?;
    Ok(match main_step(alphabet, &list.pairs, depth, obs)? {
        None => (true, list.clone()),
        Some(out) => (false, EncodedList::from_pairs(alphabet, out)),
    })
}

/// Checked wrapper around [`prune`] returning `(N′, Lnew)`.
pub(crate) fn checked_prune<C: Coefficient>(
    list: &EncodedList<C>,
    depth: usize,
) -> Result<(EncodedList<C>, EncodedList<C>), ListError> {
    let alphabet = list.alphabet;
    if depth < 1 {
        return Err(ListError::Precondition("pruning needs depth at least 1".into()));
    }
    check_constant_depth(alphabet, &list.pairs, depth)?;
    let (kept, lnew) = prune(alphabet, &list.pairs, depth);
    Ok((EncodedList::from_pairs(alphabet, kept), EncodedList::from_pairs(alphabet, lnew)))
}

pub(crate) fn require_mode(alphabet: Alphabet, group: bool) -> Result<(), ListError> {
    if alphabet.is_group() == group {
        Ok(())
    } else {
        Err(ListError::Precondition(format!("expected a {} list", if group { "group" } else { "monoid" })))
    }
}

/// One main processing step on a normalized list of constant depth
/// `depth ≥ 2`. `None` means the input is minimal; otherwise the
/// normalized equivalent list of constant depth `depth − 1`.
pub(crate) fn main_step<C: Coefficient, O: Observer<C>>(
    alphabet: Alphabet,
    input: &[Pair<C>],
    depth: usize,
    obs: &mut O,
) -> Result<Option<Vec<Pair<C>>>, ListError> {
    if depth < 2 {
        return Err(ListError::Precondition(format!("depth {depth} < 2")));
    }
    let out = main_step_inner(alphabet, input, depth, obs)?;
    if obs.wants_events() {
        obs.event(&event(alphabet, StepKind::MainStep, depth, input.iter(), out.as_deref()));
    }
    Ok(out)
}

fn main_step_inner<C: Coefficient, O: Observer<C>>(
    alphabet: Alphabet,
    input: &[Pair<C>],
    depth: usize,
    obs: &mut O,
) -> Result<Option<Vec<Pair<C>>>, ListError> {
    let (kept, mut lnew) = prune_ranges(alphabet, input, depth);

    if alphabet.is_group() && depth == 2 {
        if !kept.is_empty() {
            let pairs: Vec<&Pair<C>> = kept.iter().flat_map(|r| &input[r.clone()]).collect();
            match special_move(alphabet, &pairs, obs)? {
                None => return Ok(None),
                Some(out) => lnew.extend(out),
            }
        }
        return Ok(Some(normalize_pairs(alphabet, lnew)));
    }

    // Brotherhoods are grouped by first letter; bucket `a` is the index
    // range cursor[a]..end[a] into `kept`.
    let k = alphabet.letter_count();
    let mut cursor = vec![0; k];
    let mut end = vec![0; k];
    for (i, r) in kept.iter().enumerate() {
        let a = input[r.start].word.letters()[0] as usize;
        if end[a] == 0 {
            cursor[a] = i;
        }
        end[a] = i + 1;
    }

    let stem = |i: usize| &input[kept[i].start].word.letters()[1..depth - 1];
    let mut family: Vec<&Pair<C>> = Vec::new();
    while let Some(u) = (0..k).filter(|&a| cursor[a] < end[a]).map(|a| stem(cursor[a])).min() {
        let excluded = alphabet.is_group().then(|| inverse_letter(u[0]));
        family.clear();
        for a in (0..k).filter(|&a| Some(a as Letter) != excluded) {
            if cursor[a] == end[a] {
                continue;
            }
            if stem(cursor[a]) != u {
                return Ok(None);
            }
            family.extend(&input[kept[cursor[a]].clone()]);
            cursor[a] += 1;
        }
        match generic_move(alphabet, u, &family, obs)? {
            None => return Ok(None),
            Some(out) => lnew.extend(out),
        }
    }
    Ok(Some(normalize_pairs(alphabet, lnew)))
}

/// Computes a normalized minimal list equivalent to `list`.
pub(crate) fn find_minimal<C: Coefficient, O: Observer<C>>(list: &EncodedList<C>, obs: &mut O) -> EncodedList<C> {
    let alphabet = list.alphabet;
    let l = list.normalized();
    let d = l.max_depth();
    if d <= 0 {
        return l;
    }
    let d = d as usize;
    let mut levels: Vec<Vec<Pair<C>>> = vec![Vec::new(); d + 1];
    for p in l.pairs {
        let len = p.word.len();
        levels[len].push(p);
    }
    let assemble = |levels: &mut Vec<Vec<Pair<C>>>, i: usize, m: Vec<Pair<C>>| {
        let mut pairs: Vec<Pair<C>> = levels.drain(..i).flatten().collect();
        pairs.extend(m);
        EncodedList::from_pairs(alphabet, pairs)
    };

    let mut m = std::mem::take(&mut levels[d]);
    let mut i = d;
    while i >= 2 {
        if obs.wants_frames() {
            let mut pairs: Vec<Pair<C>> = levels[..i].iter().flatten().cloned().collect();
            pairs.extend(m.iter().cloned());
            obs.frame(&format!("depth {i}"), &EncodedList::from_pairs(alphabet, pairs));
        }
        if m.is_empty() {
            i -= 1;
            m = std::mem::take(&mut levels[i]);
            continue;
        }
        let step = main_step(alphabet, &m, i, obs).expect("main step input is normalized with constant depth");
        match step {
            None => return assemble(&mut levels, i, m),
            Some(out) => {
                i -= 1;
                let mut next = out;
                next.append(&mut levels[i]);
                m = normalize_pairs(alphabet, next);
            }
        }
    }

    if obs.wants_frames() {
        let mut pairs: Vec<Pair<C>> = levels[0].clone();
        pairs.extend(m.iter().cloned());
        obs.frame("depth 1", &EncodedList::from_pairs(alphabet, pairs));
    }
    let (rest, k) = prune_ranges(alphabet, &m, 1);
    if rest.is_empty() {
        let mut pairs = k;
        pairs.append(&mut levels[0]);
        EncodedList::from_pairs(alphabet, normalize_pairs(alphabet, pairs))
    } else {
        assemble(&mut levels, 1, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntCode;
    use crate::trace::EventLog;

    fn list(a: Alphabet, entries: &[(&str, &str)]) -> EncodedList<IntCode> {
        EncodedList::from_text(a, entries).normalize()
    }

    #[test]
    fn prune_figure() {
        let a = Alphabet::monoid(3).unwrap();
        let l = list(a, &[("aa", "4"), ("ab", "4"), ("ac", "4"), ("ca", "1"), ("cb", "1"), ("cc", "1")]);
        let (kept, lnew) = prune(a, &l.pairs, 2);
        assert!(kept.is_empty());
        assert_eq!(format!("{}", EncodedList::from_pairs(a, lnew)), "((a,4),(c,1))");
    }

    #[test]
    fn prune_keeps_incomplete_and_non_constant() {
        let a = Alphabet::monoid(3).unwrap();
        for entries in [&[("aa", "1"), ("ab", "2"), ("ac", "3")][..], &[("aa", "1"), ("ab", "1")]] {
            let l = list(a, entries);
            let (kept, lnew) = prune(a, &l.pairs, 2);
            assert_eq!(kept, l.pairs);
            assert!(lnew.is_empty());
        }
    }

    #[test]
    fn figure_list_minimizes() {
        let a = Alphabet::monoid(3).unwrap();
        let l = list(
            a,
            &[
                ("1", "-1"),
                ("b", "-6"),
                ("c", "-1"),
                ("aa", "4"),
                ("ab", "4"),
                ("ac", "4"),
                ("ca", "1"),
                ("cb", "1"),
                ("cc", "1"),
            ],
        );
        let mut log = EventLog::default();
        let m = find_minimal(&l, &mut log);
        assert_eq!(format!("{m}"), "((1,-1),(a,4),(b,-6))");
        assert_eq!(log.violations().count(), 0);
    }

    #[test]
    fn unbalanced_list_is_returned_verbatim() {
        let a = Alphabet::monoid(3).unwrap();
        let l = list(a, &[("1", "-1"), ("aa", "4"), ("ab", "2"), ("ac", "1"), ("b", "-6")]);
        let m = find_minimal(&l, &mut ());
        assert_eq!(m, l);
    }
}
