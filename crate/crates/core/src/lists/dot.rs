use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::EncodedList;
use crate::coeff::Coefficient;
use crate::words::Word;

/// Renders the weighted tree of a list as a DOT digraph: one node per
/// vertex of the convex hull of the list's words and the root, labelled
/// with its weight, and one edge per father-child pair labelled with the
/// letter.
pub fn render_dot<C: Coefficient>(list: &EncodedList<C>) -> String {
    let a = list.alphabet;
    let mut weights: BTreeMap<Word, C> = BTreeMap::new();
    weights.insert(Word::empty(), C::zero());
    for p in &list.pairs {
        let letters = p.word.letters();
        for k in 0..letters.len() {
            weights.entry(Word::from_letters(&letters[..k])).or_insert_with(C::zero);
        }
        let w = weights.entry(p.word.clone()).or_insert_with(C::zero);
        *w = w.add(&p.coeff);
    }
    let ids: BTreeMap<&Word, usize> = weights.keys().enumerate().map(|(i, w)| (w, i)).collect();

    let mut out = String::from("digraph T {\n  node [shape=circle];\n");
    for (w, x) in &weights {
        let _ = writeln!(out, "  n{} [label=\"{}\", tooltip=\"{}\"];", ids[w], x, a.format_word(w.letters()));
    }
    for w in weights.keys().filter(|w| !w.is_empty()) {
        let father = Word::from_letters(w.father());
        let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", ids[&father], ids[w], a.letter_name(w.last().unwrap()));
    }
    out.push_str("}\n");
    out
}
