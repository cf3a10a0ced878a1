//! Transfer matrices and the generic transfer-and-prune move.
//!
//! The monoid case uses an `n×n` matrix indexed by all letters. The generic
//! group case uses a `(2n−1)×(2n−1)` matrix whose rows omit `u_in⁻¹` and whose
//! columns omit `u_fin⁻¹`. Everything after the matrix is built is shared.

use crate::coeff::Coefficient;
use crate::lists::Pair;
use crate::words::{inverse_letter, Alphabet, Letter, Word};

/// The transfer matrix `T(L, u)`: `t_ij` is the coefficient of
/// `rows[i]·u·cols[j]`, or `ε` if that word does not occur.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix<C> {
    pub stem: Word,
    pub rows: Vec<Letter>,
    pub cols: Vec<Letter>,
    entries: Vec<C>,
}

impl<C: Coefficient> TransferMatrix<C> {
    /// Row and column letters for the stem `u`.
    pub fn indices(alphabet: Alphabet, u: &[Letter]) -> (Vec<Letter>, Vec<Letter>) {
        match (alphabet.is_group(), u.first(), u.last()) {
            (true, Some(&first), Some(&last)) => (
                alphabet.letters().filter(|&a| a != inverse_letter(first)).collect(),
                alphabet.letters().filter(|&a| a != inverse_letter(last)).collect(),
            ),
            _ => (alphabet.letters().collect(), alphabet.letters().collect()),
        }
    }

    /// Builds the matrix from pairs whose words all have the form `a·u·a′`.
    /// Returns a description of the first offending word otherwise.
    pub fn build<'a>(
        alphabet: Alphabet,
        u: &[Letter],
        pairs: impl IntoIterator<Item = &'a Pair<C>>,
    ) -> Result<Self, String> {
        let (rows, cols) = Self::indices(alphabet, u);
        let m = rows.len();
        let mut row_of = vec![usize::MAX; alphabet.letter_count()];
        let mut col_of = vec![usize::MAX; alphabet.letter_count()];
        rows.iter().enumerate().for_each(|(i, &a)| row_of[a as usize] = i);
        cols.iter().enumerate().for_each(|(j, &a)| col_of[a as usize] = j);
        let mut entries = vec![C::zero(); m * cols.len()];
        for p in pairs {
            let w = p.word.letters();
            let bad = || format!("word {} does not have stem {}", alphabet.format_word(w), alphabet.format_word(u));
            if w.len() != u.len() + 2 || &w[1..w.len() - 1] != u {
                return Err(bad());
            }
            let (i, j) = (row_of[w[0] as usize], col_of[w[w.len() - 1] as usize]);
            if i == usize::MAX || j == usize::MAX {
                return Err(bad());
            }
            entries[i * cols.len() + j] = p.coeff.clone();
        }
        Ok(TransferMatrix { stem: Word::from_letters(u), rows, cols, entries })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn row(&self, i: usize) -> &[C] {
        let k = self.cols.len();
        &self.entries[i * k..(i + 1) * k]
    }

    fn size(&self, i: usize, j: usize) -> u64 {
        self.get(i, j).size()
    }

    pub fn nontrivial(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    /// The first row of minimal total coefficient size.
    pub fn min_size_row(&self) -> usize {
        (0..self.dim()).min_by_key(|&i| (0..self.dim()).map(|j| self.size(i, j)).sum::<u64>()).unwrap()
    }

    /// Whether every row differs from row `i0` by a constant.
    pub fn is_column_row_sum(&self, i0: usize) -> bool {
        let m = self.dim();
        (0..m).filter(|&i| i != i0).all(|i| {
            let first = self.get(i, 0).sub(self.get(i0, 0));
            (1..m).all(|j| self.get(i, j).sub(self.get(i0, j)) == first)
        })
    }

    /// Sparse if fewer than `3m` non-trivial entries for `m ≥ 4`, fewer than
    /// `2m` for `m = 3`. A `2×2` matrix is never sparse.
    pub fn is_sparse(&self) -> bool {
        let (m, k) = (self.dim(), self.nontrivial());
        (m >= 4 && k < 3 * m) || (m == 3 && k < 2 * m)
    }

    fn left_word(&self, i: usize) -> Word {
        self.stem.prepend(self.rows[i])
    }

    fn right_word(&self, j: usize) -> Word {
        self.stem.append(self.cols[j])
    }

    /// The transfer-and-prune move. `None` means the matrix is not a
    /// column-row-sum, so the family is minimal. Otherwise the pairs
    /// `(a_i u, y_i)` and `(u a_j, z_j)` with nonzero coefficients, not yet
    /// normalized.
    pub fn transfer_and_prune(&self) -> Option<Vec<Pair<C>>> {
        let m = self.dim();
        let i0 = self.min_size_row();
        if !self.is_column_row_sum(i0) {
            return None;
        }
        let mut out = Vec::new();
        if !self.is_sparse() {
            for j in 0..m {
                let z = self.get(i0, j);
                if !z.is_zero() {
                    out.push(Pair::new(self.right_word(j), z.clone()));
                }
            }
            let weight = |j: usize| (m as u64 - 2) * self.size(i0, j) + (0..m).map(|i| self.size(i, j)).sum::<u64>();
            let j0 = (0..m).min_by_key(|&j| weight(j)).unwrap();
            for i in (0..m).filter(|&i| i != i0) {
                let y = self.get(i, j0).sub(self.get(i0, j0));
                if !y.is_zero() {
                    out.push(Pair::new(self.left_word(i), y));
                }
            }
        } else {
            let support = |i: usize| (0..m).filter(|&j| !self.get(i, j).is_zero()).count();
            let i1 = (0..m).min_by_key(|&i| support(i)).unwrap();
            let (zero_set, supp): (Vec<usize>, Vec<usize>) = (0..m).partition(|&j| self.get(i1, j).is_zero());
            let smallest_in_zero_set = |i: usize| *zero_set.iter().min_by_key(|&&j| self.size(i, j)).unwrap();
            for i in (0..m).filter(|&i| i != i1) {
                let y = self.get(i, smallest_in_zero_set(i));
                if !y.is_zero() {
                    out.push(Pair::new(self.left_word(i), y.clone()));
                }
            }
            if i0 == i1 {
                for &j in &supp {
                    out.push(Pair::new(self.right_word(j), self.get(i1, j).clone()));
                }
            } else {
                let j0 = smallest_in_zero_set(i0);
                for &j in &supp {
                    let z = self.get(i0, j).sub(self.get(i0, j0));
                    if !z.is_zero() {
                        out.push(Pair::new(self.right_word(j), z));
                    }
                }
            }
        }
        Some(out)
    }
}

/// The `2n×2n` matrix of a constant-depth-2 group list, `t_{aa′}` being the
/// coefficient of `aa′`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialMatrix<C> {
    letters: usize,
    entries: Vec<C>,
}

impl<C: Coefficient> SpecialMatrix<C> {
    pub fn build<'a>(alphabet: Alphabet, pairs: impl IntoIterator<Item = &'a Pair<C>>) -> Result<Self, String> {
        let k = alphabet.letter_count();
        let mut entries = vec![C::zero(); k * k];
        for p in pairs {
            let w = p.word.letters();
            if w.len() != 2 || !alphabet.may_follow(w[0], w[1]) {
                return Err(format!("word {} is not a reduced word of length 2", alphabet.format_word(w)));
            }
            entries[w[0] as usize * k + w[1] as usize] = p.coeff.clone();
        }
        Ok(SpecialMatrix { letters: k, entries })
    }

    pub fn get(&self, a: Letter, b: Letter) -> &C {
        &self.entries[a as usize * self.letters + b as usize]
    }

    /// The special move with `b = a₁`. `None` unless `t_{xy} ≡ r_x ⊕ c_y`
    /// on every reduced entry for some vectors `r`, `c`; otherwise the
    /// pairs `(x, t_{xx})`, equivalent to the input since
    /// `Σ t_{xy}ρ_{xy} ~ Σ_x (r_x + c_x)ρ_x`.
    pub fn transfer_and_prune(&self) -> Option<Vec<Pair<C>>> {
        let b: Letter = 0;
        let b_inv = inverse_letter(b);
        let all = 0..self.letters as Letter;

        // Gauge r_b = 0: the row of b fixes c away from b⁻¹, and any third
        // letter x fixes c_{b⁻¹} through t_{xb⁻¹} and t_{xx}.
        let mut c: Vec<C> = all.clone().map(|y| self.get(b, y).clone()).collect();
        c[b_inv as usize] = match all.clone().find(|&x| x != b && x != b_inv) {
            Some(x) => self.get(x, b_inv).sub(&self.get(x, x).sub(self.get(b, x))),
            None => unreachable!("rank is at least 2"),
        };
        for a in all.clone().filter(|&a| a != b) {
            let r = self.get(a, a).sub(&c[a as usize]);
            for y in all.clone().filter(|&y| y != inverse_letter(a)) {
                if *self.get(a, y) != r.add(&c[y as usize]) {
                    return None;
                }
            }
        }
        Some(
            all.map(|x| (x, self.get(x, x)))
                .filter(|(_, t)| !t.is_zero())
                .map(|(x, t)| Pair::new(Word::from_letters(&[x]), t.clone()))
                .collect(),
        )
    }
}
