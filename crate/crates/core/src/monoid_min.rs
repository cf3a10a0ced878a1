//! Minimization and equivalence for counting functions on the free monoid.

use crate::coeff::Coefficient;
use crate::lists::{EncodedList, ListError};
use crate::pipeline::{self, require_mode};
use crate::trace::Observer;
use crate::transfer::TransferMatrix;
use crate::words::Word;

/// Splits a normalized list of constant depth into the unpruned pairs and
/// the fathers of the pruned brotherhoods.
pub fn prune_list<C: Coefficient>(
    list: &EncodedList<C>,
    depth: usize,
) -> Result<(EncodedList<C>, EncodedList<C>), ListError> {
    require_mode(list.alphabet, false)?;
    pipeline::checked_prune(list, depth)
}

pub fn build_transfer_matrix<C: Coefficient>(
    family: &EncodedList<C>,
    u: &Word,
) -> Result<TransferMatrix<C>, ListError> {
    require_mode(family.alphabet, false)?;
    TransferMatrix::build(family.alphabet, u.letters(), &family.pairs).map_err(ListError::Precondition)
}

/// `(true, family)` if the family's transfer matrix is not a
/// column-row-sum, `(false, output)` otherwise.
pub fn transfer_and_prune<C: Coefficient>(
    family: &EncodedList<C>,
    depth: usize,
) -> Result<(bool, EncodedList<C>), ListError> {
    require_mode(family.alphabet, false)?;
    if depth < 2 {
        return Err(ListError::Precondition(format!("depth {depth} < 2")));
    }
    pipeline::family_move(family, depth, &mut ())
}

pub fn main_processing_step<C: Coefficient>(
    list: &EncodedList<C>,
    depth: usize,
) -> Result<(bool, EncodedList<C>), ListError> {
    main_processing_step_with(list, depth, &mut ())
}

pub fn main_processing_step_with<C: Coefficient, O: Observer<C>>(
    list: &EncodedList<C>,
    depth: usize,
    obs: &mut O,
) -> Result<(bool, EncodedList<C>), ListError> {
    require_mode(list.alphabet, false)?;
    pipeline::checked_main_step(list, depth, obs)
}

/// A normalized minimal list equivalent to `list`.
pub fn find_minimal_list<C: Coefficient>(list: &EncodedList<C>) -> EncodedList<C> {
    pipeline::find_minimal(list, &mut ())
}

pub fn find_minimal_list_with<C: Coefficient, O: Observer<C>>(list: &EncodedList<C>, obs: &mut O) -> EncodedList<C> {
    pipeline::find_minimal(list, obs)
}

pub fn decide_equivalent<C: Coefficient>(l1: &EncodedList<C>, l2: &EncodedList<C>) -> Result<bool, ListError> {
    Ok(find_minimal_list(&l1.difference(l2)?).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{IntCode, RatCode};
    use crate::trace::EventLog;
    use crate::words::Alphabet;

    fn m3() -> Alphabet {
        Alphabet::monoid(3).unwrap()
    }

    fn list(entries: &[(&str, &str)]) -> EncodedList<IntCode> {
        EncodedList::from_text(m3(), entries).normalize()
    }

    fn all_ones() -> EncodedList<IntCode> {
        let words = ["aa", "ab", "ac", "ba", "bb", "bc", "ca", "cb", "cc"];
        list(&words.map(|w| (w, "1")))
    }

    #[test]
    fn prune_examples() {
        let (kept, lnew) =
            prune_list(&list(&[("aa", "4"), ("ab", "4"), ("ac", "4"), ("ca", "1"), ("cb", "1"), ("cc", "1")]), 2)
                .unwrap();
        assert!(kept.is_empty());
        assert_eq!(format!("{lnew}"), "((a,4),(c,1))");
        assert!(prune_list(&list(&[("a", "1"), ("ab", "1")]), 2).is_err());
    }

    #[test]
    fn transfer_examples() {
        let fig = list(&[
            ("aa", "1"),
            ("ab", "2"),
            ("ac", "3"),
            ("ba", "4"),
            ("bb", "5"),
            ("bc", "4"),
            ("ca", "5"),
            ("cb", "4"),
            ("cc", "5"),
        ]);
        let t = build_transfer_matrix(&fig, &Word::empty()).unwrap();
        assert_eq!(t.row(2), [5, 4, 5].map(IntCode::from_i64));
        assert_eq!(transfer_and_prune(&fig, 2).unwrap(), (true, fig.clone()));

        let derived = list(&[
            ("aaa", "1"),
            ("aab", "2"),
            ("aac", "3"),
            ("baa", "2"),
            ("bab", "3"),
            ("bac", "4"),
            ("cab", "1"),
            ("cac", "2"),
        ]);
        let (minimal, out) = transfer_and_prune(&derived, 3).unwrap();
        assert!(!minimal);
        assert_eq!(format!("{out}"), "((aa,1),(ab,1),(ac,2),(ba,2))");

        let equal_rows = list(&[
            ("aba", "1"),
            ("abb", "2"),
            ("abc", "3"),
            ("bba", "1"),
            ("bbb", "2"),
            ("bbc", "3"),
            ("cba", "1"),
            ("cbb", "2"),
            ("cbc", "3"),
        ]);
        assert_eq!(format!("{}", transfer_and_prune(&equal_rows, 3).unwrap().1), "((ba,1),(bb,2),(bc,3))");
    }

    #[test]
    fn main_step_examples() {
        let (minimal, out) = main_processing_step(&all_ones(), 2).unwrap();
        assert!(!minimal);
        assert_eq!(format!("{out}"), "((a,1),(b,1),(c,1))");

        let unbalanced = list(&[("aa", "4"), ("ab", "2"), ("ac", "1")]);
        assert_eq!(main_processing_step(&unbalanced, 2).unwrap(), (true, unbalanced.clone()));
    }

    #[test]
    fn find_minimal_examples() {
        assert_eq!(format!("{}", find_minimal_list(&all_ones())), "((1,1))");
        assert!(find_minimal_list(&list(&[])).is_empty());
        let unbalanced = list(&[("1", "-1"), ("b", "-6"), ("aa", "4"), ("ab", "2"), ("ac", "1")]);
        assert_eq!(find_minimal_list(&unbalanced), unbalanced);
    }

    #[test]
    fn equivalence_examples() {
        let l = all_ones();
        assert!(decide_equivalent(&l, &l).unwrap());
        assert!(decide_equivalent(&list(&[("1", "1")]), &list(&[("a", "1"), ("b", "1"), ("c", "1")])).unwrap());
        assert!(!decide_equivalent(&list(&[("a", "1")]), &list(&[("b", "1")])).unwrap());
        let other = EncodedList::<IntCode>::new(Alphabet::monoid(2).unwrap());
        assert!(decide_equivalent(&l, &other).is_err());
    }

    #[test]
    fn rational_codes_pick_smallest_representative() {
        let r: EncodedList<RatCode> =
            EncodedList::from_text(m3(), &[("a", "+0/2/4"), ("b", "+0/1/2"), ("c", "+0/4/8")]).normalize();
        let m = find_minimal_list(&r);
        assert_eq!(format!("{m}"), "((1,+0/1/2))");
    }

    #[test]
    fn deep_collapse_contracts() {
        let a = m3();
        let mut l = EncodedList::<IntCode>::new(a);
        for i in 0..27u32 {
            let w = Word::from_letters(&[(i / 9) as u8, (i / 3 % 3) as u8, (i % 3) as u8]);
            l.push(w, IntCode::from_i64(5));
        }
        let mut log = EventLog::default();
        let m = find_minimal_list_with(&l.normalize(), &mut log);
        assert_eq!(format!("{m}"), "((1,5))");
        assert!(!log.events.is_empty());
        assert_eq!(log.violations().count(), 0);
    }
}
