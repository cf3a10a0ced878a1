//! Minimization, equivalence and cohomology for counting functions on the
//! free group.

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::lists::{EncodedList, ListError};
use crate::pipeline::{self, check_constant_depth, require_mode};
use crate::trace::Observer;
use crate::transfer::{SpecialMatrix, TransferMatrix};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("the {0} list is not antisymmetric")]
    NotAntisymmetric(&'static str),
    #[error(transparent)]
    List(#[from] ListError),
}

pub fn prune_list_group<C: Coefficient>(
    list: &EncodedList<C>,
    depth: usize,
) -> Result<(EncodedList<C>, EncodedList<C>), ListError> {
    require_mode(list.alphabet, true)?;
    pipeline::checked_prune(list, depth)
}

/// The `(2n−1)×(2n−1)` transfer matrix of a family with stem `u ≠ ε`.
pub fn build_transfer_matrix_group<C: Coefficient>(
    family: &EncodedList<C>,
    u: &Word,
) -> Result<TransferMatrix<C>, ListError> {
    require_mode(family.alphabet, true)?;
    if u.is_empty() {
        return Err(ListError::Precondition("the generic group move needs a non-empty stem".into()));
    }
    TransferMatrix::build(family.alphabet, u.letters(), &family.pairs).map_err(ListError::Precondition)
}

pub fn build_special_matrix<C: Coefficient>(list: &EncodedList<C>) -> Result<SpecialMatrix<C>, ListError> {
    require_mode(list.alphabet, true)?;
    SpecialMatrix::build(list.alphabet, &list.pairs).map_err(ListError::Precondition)
}

/// The generic move for a family of related brotherhoods of depth `≥ 3`.
pub fn transfer_and_prune_group<C: Coefficient>(
    family: &EncodedList<C>,
    depth: usize,
) -> Result<(bool, EncodedList<C>), ListError> {
    require_mode(family.alphabet, true)?;
    if depth < 3 {
        return Err(ListError::Precondition(format!("depth {depth} < 3")));
    }
    pipeline::family_move(family, depth, &mut ())
}

/// The special move on a normalized list of constant depth 2.
pub fn special_transfer_and_prune<C: Coefficient>(list: &EncodedList<C>) -> Result<(bool, EncodedList<C>), ListError> {
    require_mode(list.alphabet, true)?;
    check_constant_depth(list.alphabet, &list.pairs, 2)?;
    Ok(match pipeline::special_move(list.alphabet, &list.pairs.iter().collect::<Vec<_>>(), &mut ())? {
        None => (true, list.clone()),
        Some(out) => (false, EncodedList::from_pairs(list.alphabet, out).normalize()),
    })
}

pub fn main_processing_step_group<C: Coefficient>(
    list: &EncodedList<C>,
    depth: usize,
) -> Result<(bool, EncodedList<C>), ListError> {
    main_processing_step_group_with(list, depth, &mut ())
}

pub fn main_processing_step_group_with<C: Coefficient, O: Observer<C>>(
    list: &EncodedList<C>,
    depth: usize,
    obs: &mut O,
) -> Result<(bool, EncodedList<C>), ListError> {
    require_mode(list.alphabet, true)?;
    pipeline::checked_main_step(list, depth, obs)
}

pub fn find_minimal_list_group<C: Coefficient>(list: &EncodedList<C>) -> EncodedList<C> {
    pipeline::find_minimal(list, &mut ())
}

pub fn find_minimal_list_group_with<C: Coefficient, O: Observer<C>>(
    list: &EncodedList<C>,
    obs: &mut O,
) -> EncodedList<C> {
    pipeline::find_minimal(list, obs)
}

/// Whether the coefficient of `w⁻¹` is `−x` for every pair `(w, x)` of the
/// normalized list.
pub fn is_antisymmetric<C: Coefficient>(list: &EncodedList<C>) -> bool {
    let l = list.normalized();
    l.pairs.iter().all(|p| {
        let inv = p.word.inverse();
        match l.pairs.binary_search_by(|q| q.word.cmp(&inv)) {
            Ok(k) => l.pairs[k].coeff == p.coeff.neg(),
            Err(_) => false,
        }
    })
}

pub fn decide_equivalent_group<C: Coefficient>(l1: &EncodedList<C>, l2: &EncodedList<C>) -> Result<bool, ListError> {
    Ok(find_minimal_list_group(&l1.difference(l2)?).is_empty())
}

/// Whether the two antisymmetric lists differ by a list equivalent to one
/// of depth at most 1.
pub fn decide_cohomologous<C: Coefficient>(l1: &EncodedList<C>, l2: &EncodedList<C>) -> Result<bool, CohomologyError> {
    require_mode(l1.alphabet, true)?;
    if !is_antisymmetric(l1) {
        return Err(CohomologyError::NotAntisymmetric("first"));
    }
    if !is_antisymmetric(l2) {
        return Err(CohomologyError::NotAntisymmetric("second"));
    }
    Ok(find_minimal_list_group(&l1.difference(l2)?).max_depth() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntCode;
    use crate::trace::EventLog;
    use crate::words::Alphabet;

    fn g2() -> Alphabet {
        Alphabet::group(2).unwrap()
    }

    fn list(entries: &[(&str, &str)]) -> EncodedList<IntCode> {
        EncodedList::from_text(g2(), entries).normalize()
    }

    fn special_example() -> EncodedList<IntCode> {
        list(&[
            ("aa", "1"),
            ("ab", "2"),
            ("aB", "3"),
            ("ba", "2"),
            ("bb", "3"),
            ("bA", "1"),
            ("Ab", "2"),
            ("AB", "3"),
            ("BA", "2"),
            ("Ba", "3"),
            ("BB", "5"),
        ])
    }

    #[test]
    fn prune_examples() {
        let (kept, lnew) = prune_list_group(&list(&[("aa", "1"), ("ab", "1"), ("aB", "1")]), 2).unwrap();
        assert!(kept.is_empty());
        assert_eq!(format!("{lnew}"), "((a,1))");
        let (_, lnew) = prune_list_group(&list(&[("a", "1"), ("b", "1"), ("A", "1"), ("B", "1")]), 1).unwrap();
        assert_eq!(format!("{lnew}"), "((1,1))");
        let l = list(&[("aa", "1"), ("ab", "2")]);
        assert_eq!(prune_list_group(&l, 2).unwrap().0, l);
    }

    #[test]
    fn generic_examples() {
        let derived = list(&[
            ("aaa", "1"),
            ("aab", "2"),
            ("aaB", "3"),
            ("baa", "2"),
            ("bab", "3"),
            ("baB", "4"),
            ("Bab", "1"),
            ("BaB", "2"),
        ]);
        let (minimal, out) = transfer_and_prune_group(&derived, 3).unwrap();
        assert!(!minimal);
        assert_eq!(format!("{out}"), "((aa,1),(ab,1),(aB,2),(ba,2))");

        let fig = list(&[
            ("aaa", "1"),
            ("aab", "2"),
            ("aaB", "3"),
            ("baa", "4"),
            ("bab", "5"),
            ("baB", "4"),
            ("Baa", "5"),
            ("Bab", "4"),
            ("BaB", "5"),
        ]);
        assert!(transfer_and_prune_group(&fig, 3).unwrap().0);
        assert!(build_transfer_matrix_group(&fig, &Word::empty()).is_err());
    }

    #[test]
    fn special_examples() {
        let (minimal, out) = special_transfer_and_prune(&special_example()).unwrap();
        assert!(!minimal);
        assert_eq!(format!("{out}"), "((a,1),(b,3),(B,5))");
        let brooks = list(&[("ab", "1"), ("BA", "-1")]);
        assert_eq!(special_transfer_and_prune(&brooks).unwrap(), (true, brooks));
    }

    #[test]
    fn main_step_examples() {
        let mut log = EventLog::default();
        let (minimal, out) = main_processing_step_group_with(&special_example(), 2, &mut log).unwrap();
        assert!(!minimal);
        assert_eq!(format!("{out}"), "((a,1),(b,3),(B,5))");
        assert_eq!(log.violations().count(), 0);

        let unbalanced = list(&[("aba", "1"), ("abb", "2"), ("bab", "1")]);
        assert!(main_processing_step_group(&unbalanced, 3).unwrap().0);
    }

    #[test]
    fn find_minimal_examples() {
        assert_eq!(
            format!("{}", find_minimal_list_group(&list(&[("a", "1"), ("b", "1"), ("A", "1"), ("B", "1")]))),
            "((1,1))"
        );
        assert!(find_minimal_list_group(&list(&[])).is_empty());
        let brooks = list(&[("ab", "1"), ("BA", "-1")]);
        assert_eq!(find_minimal_list_group(&brooks), brooks);
    }

    #[test]
    fn antisymmetry() {
        assert!(is_antisymmetric(&list(&[("ab", "1"), ("BA", "-1")])));
        assert!(!is_antisymmetric(&list(&[("a", "1")])));
        assert!(is_antisymmetric(&list(&[])));
        assert!(!is_antisymmetric(&list(&[("1", "1")])));
    }

    #[test]
    fn decisions() {
        let brooks = list(&[("ab", "1"), ("BA", "-1")]);
        assert!(decide_equivalent_group(&brooks, &brooks).unwrap());
        assert!(decide_equivalent_group(
            &list(&[("1", "1")]),
            &list(&[("a", "1"), ("b", "1"), ("A", "1"), ("B", "1")])
        )
        .unwrap());
        assert!(!decide_equivalent_group(&list(&[("a", "1")]), &list(&[("b", "1")])).unwrap());

        let empty = list(&[]);
        assert!(decide_cohomologous(&brooks, &brooks).unwrap());
        assert!(decide_cohomologous(&list(&[("a", "1"), ("A", "-1")]), &empty).unwrap());
        assert!(!decide_cohomologous(&brooks, &empty).unwrap());
        assert_eq!(decide_cohomologous(&list(&[("a", "1")]), &empty), Err(CohomologyError::NotAntisymmetric("first")));
    }
}
