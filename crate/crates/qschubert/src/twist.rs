//! Index-level shadow of the quantum twist: word reversal, inversion, and
//! the correspondences it induces between positive subexpressions and
//! between the two triangular exponent matrices.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cartan::{CartanData, Weight};
use crate::exponents::{a_matrix, b_matrix, ExponentMatrix};
use crate::subexpr::{lp, rp, IndexSet};
use crate::weyl::WeylElement;
use crate::Result;

/// The combinatorial data exchanged by the twist: a word and its reversal,
/// an element and its inverse, and the four positive-subexpression index
/// sets, which must match under position reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistCorrespondence {
    pub word: Vec<usize>,
    pub reversed_word: Vec<usize>,
    pub u_word: Vec<usize>,
    pub u_inverse_word: Vec<usize>,
    pub rp_set: IndexSet,
    pub lp_set: IndexSet,
    pub rp_of_reversed: IndexSet,
    pub lp_of_reversed: IndexSet,
}

impl TwistCorrespondence {
    /// The position involution k ↦ N−1−k (zero-based).
    pub fn index_reversal(&self, k: usize) -> usize {
        self.word.len() - 1 - k
    }
}

/// Computes all four positive-subexpression sets for (word, u) and the
/// reversed word with the inverse element, checking that reversal maps each
/// right set onto the opposite left set.
pub fn twist_indices(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
) -> Result<TwistCorrespondence> {
    let n = word.len();
    let reversed: Vec<usize> = word.iter().rev().copied().collect();
    let u_inv = u.inverse();
    let rp_set = rp(cartan, word, u)?;
    let lp_set = lp(cartan, word, u)?;
    let rp_of_reversed = rp(cartan, &reversed, &u_inv)?;
    let lp_of_reversed = lp(cartan, &reversed, &u_inv)?;
    let reflect = |s: &IndexSet| -> IndexSet { s.iter().map(|&p| n - 1 - p).collect() };
    assert_eq!(reflect(&rp_set), lp_of_reversed, "reversal must swap the two sides");
    assert_eq!(reflect(&lp_set), rp_of_reversed, "reversal must swap the two sides");
    Ok(TwistCorrespondence {
        word: word.to_vec(),
        reversed_word: reversed,
        u_word: u.word().to_vec(),
        u_inverse_word: u.inverse().word().to_vec(),
        rp_set,
        lp_set,
        rp_of_reversed,
        lp_of_reversed,
    })
}

/// True when one matrix is the other with rows and columns reversed; used
/// to compare the lower-triangular matrix of (word, u) with the
/// upper-triangular matrix of (reversed word, u^{-1}).
pub fn exponent_matrices_correspond(b: &ExponentMatrix, a: &ExponentMatrix) -> bool {
    let n = b.word.len();
    if a.word.len() != n {
        return false;
    }
    let mapped: IndexSet = a.rows.iter().map(|&j| n - 1 - j).collect();
    if b.rows != mapped {
        return false;
    }
    b.rows.iter().all(|&l| (0..n).all(|k| b.entry(l, k) == a.entry(n - 1 - l, n - 1 - k)))
}

/// Builds both exponent matrices across the twist and reports whether they
/// correspond entrywise under index reversal.
pub fn matrix_correspondence_check(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
) -> Result<bool> {
    let b = b_matrix(cartan, word, u)?;
    let reversed: Vec<usize> = word.iter().rev().copied().collect();
    let a = a_matrix(cartan, &reversed, &u.inverse())?;
    Ok(exponent_matrices_correspond(&b, &a))
}

/// The minor label on the image side of the twist: the pair of weights
/// (u(u^{-1}λ), w(u^{-1}λ)), each computed through the group action.
pub fn twist_weight_label(
    u: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
) -> Result<(Weight, Weight)> {
    let relabeled = u.inverse().apply_to_weight(lambda)?;
    Ok((u.apply_to_weight(&relabeled)?, w.apply_to_weight(&relabeled)?))
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::RootVec;
    use crate::error::Error;
    use crate::exponents::{apply_subword_inverse_to_weight, apply_subword_to_weight};
    use crate::weyl::enumerate_up_to_length;

    fn a2() -> Arc<CartanData> {
        Arc::new(CartanData::builtin('A', 2).unwrap())
    }

    fn elt(cd: &Arc<CartanData>, word: &[usize]) -> WeylElement {
        WeylElement::from_word(cd, word).unwrap()
    }

    #[test]
    fn twist_indices_examples() {
        let cd = a2();
        let word = [0usize, 1, 0];
        // Identity: all four sets empty.
        let t = twist_indices(&cd, &word, &elt(&cd, &[])).unwrap();
        assert!(t.rp_set.is_empty() && t.lp_set.is_empty());
        assert!(t.rp_of_reversed.is_empty() && t.lp_of_reversed.is_empty());
        assert_eq!(t.index_reversal(0), 2);
        assert_eq!(t.index_reversal(t.index_reversal(1)), 1);
        // u equal to the first reflection: right set {2} reverses onto the
        // left set {0} of the reversed word.
        let t1 = twist_indices(&cd, &word, &elt(&cd, &[0])).unwrap();
        assert_eq!(t1.rp_set, [2usize].into_iter().collect());
        assert_eq!(t1.lp_of_reversed, [0usize].into_iter().collect());
        // u = w: full sets everywhere.
        let tw = twist_indices(&cd, &word, &elt(&cd, &word)).unwrap();
        assert_eq!(tw.rp_set.len(), 3);
        assert_eq!(tw.lp_of_reversed.len(), 3);
        // An element not below the word is rejected.
        let cd_a3 = Arc::new(CartanData::builtin('A', 3).unwrap());
        assert_eq!(
            twist_indices(&cd_a3, &[0, 1], &elt(&cd_a3, &[2])),
            Err(Error::NotBelow)
        );
    }

    #[test]
    fn matrix_correspondence_sweep() {
        for (letter, rank, word) in [
            ('A', 2usize, alloc::vec![0usize, 1, 0]),
            ('B', 2, alloc::vec![0, 1, 0, 1]),
            ('A', 3, alloc::vec![0, 1, 2, 0, 1, 0]),
        ] {
            let cd = Arc::new(CartanData::builtin(letter, rank).unwrap());
            for u in enumerate_up_to_length(&cd, word.len()).unwrap() {
                match matrix_correspondence_check(&cd, &word, &u) {
                    Ok(ok) => assert!(ok),
                    Err(Error::NotBelow) => continue,
                    Err(e) => panic!("unexpected error {e:?}"),
                }
            }
        }
    }

    #[test]
    fn matrix_correspondence_negative_control() {
        let cd = a2();
        let word = [0usize, 1, 0];
        let rev: Vec<usize> = word.iter().rev().copied().collect();
        // Pair the matrices of two different elements: must not correspond.
        let b = b_matrix(&cd, &word, &elt(&cd, &[0])).unwrap();
        let a = a_matrix(&cd, &rev, &elt(&cd, &[])).unwrap();
        assert!(!exponent_matrices_correspond(&b, &a));
    }

    #[test]
    fn weight_label_examples() {
        let cd = a2();
        let w = elt(&cd, &[0, 1, 0]);
        let u = elt(&cd, &[0]);
        // u = e: identity relabeling.
        let e = elt(&cd, &[]);
        let lam = Weight::fundamental(2, 0);
        assert_eq!(
            twist_weight_label(&e, &w, &lam).unwrap(),
            (lam.clone(), w.apply_to_weight(&lam).unwrap())
        );
        // λ = 0 stays zero.
        let (z1, z2) = twist_weight_label(&u, &w, &Weight::zero(2)).unwrap();
        assert!(z1.is_zero() && z2.is_zero());
        // The relabeled weight is the first fundamental weight minus the
        // first simple root; the first label returns to λ.
        let relabeled = u.inverse().apply_to_weight(&lam).unwrap();
        let minus_alpha = &lam - &cd.root_to_weight_coords(&RootVec::simple(2, 0)).unwrap();
        assert_eq!(relabeled, minus_alpha);
        let (first, second) = twist_weight_label(&u, &w, &lam).unwrap();
        assert_eq!(first, lam);
        assert_eq!(second, w.apply_to_weight(&relabeled).unwrap());
    }

    #[test]
    fn reverse_labels_match_twisted_direct_labels() {
        // For every position outside the left positive subexpression, the
        // reverse-sequence minor label of (word, u) must equal the twisted
        // direct label of (reversed word, u^{-1}) at the mirrored position.
        for (letter, rank, word) in [
            ('A', 2usize, alloc::vec![0usize, 1, 0]),
            ('B', 2, alloc::vec![0, 1, 0, 1]),
        ] {
            let cd = Arc::new(CartanData::builtin(letter, rank).unwrap());
            let n = word.len();
            let rev: Vec<usize> = word.iter().rev().copied().collect();
            for u in enumerate_up_to_length(&cd, n).unwrap() {
                let s = match lp(&cd, &word, &u) {
                    Ok(s) => s,
                    Err(Error::NotBelow) => continue,
                    Err(e) => panic!("unexpected error {e:?}"),
                };
                let rp_rev = rp(&cd, &rev, &u.inverse()).unwrap();
                for k in 0..n {
                    if s.contains(&k) {
                        continue;
                    }
                    let lam = Weight::fundamental(rank, word[k]);
                    // Reverse-side label, computed by suffix actions.
                    let mu = apply_subword_inverse_to_weight(&cd, &word, &s, k, n, &lam).unwrap();
                    let first = apply_subword_to_weight(&cd, &word, &s, k, n, &mu).unwrap();
                    let second = {
                        let mut v = mu.clone();
                        for p in (k..n).rev() {
                            v = crate::weyl::simple_reflect_weight(&cd, word[p], &v).unwrap();
                        }
                        v
                    };
                    // Twisted direct label of the mirrored data.
                    let kp = n - 1 - k;
                    let u_target = {
                        // Inverse of the prefix product over the reversed
                        // word's right positive subexpression.
                        let subword: Vec<usize> = rp_rev
                            .iter()
                            .filter(|&&p| p <= kp)
                            .map(|&p| rev[p])
                            .collect();
                        elt(&cd, &subword).inverse()
                    };
                    let w_target = elt(&cd, &rev[..=kp]).inverse();
                    let (t1, t2) = twist_weight_label(&u_target, &w_target, &lam).unwrap();
                    assert_eq!((first, second), (t1, t2));
                }
            }
        }
    }
}
