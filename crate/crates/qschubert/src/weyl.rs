//! Weyl group elements over arbitrary symmetrizable Cartan data.
//!
//! Elements carry a reduced word plus two integer matrices: the action on
//! the root lattice (simple-root coordinates) and the dual action on
//! fundamental-weight coordinates. Equality is equality of the matrix
//! pair, which is faithful for every matrix in scope and avoids word
//! normal forms in infinite groups. Words are re-reduced eagerly on every
//! multiplication via the exchange condition.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanData, RootVec, Weight};
use crate::error::Error;
use crate::Result;

type Matrix = Vec<Vec<i64>>;

// ---- Matrix helpers ----

fn mat_identity(r: usize) -> Matrix {
    let mut m = vec![vec![0i64; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    let mut out = vec![vec![0i64; r]; r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(&m, &x)| m * x).sum())
        .collect()
}

/// Reflection matrix on root coordinates: row i becomes e_i - (row i of A).
fn reflection_on_roots(cd: &CartanData, i: usize) -> Matrix {
    let mut m = mat_identity(cd.rank());
    for j in 0..cd.rank() {
        m[i][j] -= cd.a(i, j);
    }
    m
}

/// Reflection matrix on weight coordinates: column i becomes e_i - (col i of A).
fn reflection_on_weights(cd: &CartanData, i: usize) -> Matrix {
    let mut m = mat_identity(cd.rank());
    for j in 0..cd.rank() {
        m[j][i] -= cd.a(j, i);
    }
    m
}

// ---- Simple reflections on vectors ----

/// Apply the i-th simple reflection to a root-lattice vector.
pub fn simple_reflect_root(cd: &CartanData, i: usize, beta: &RootVec) -> Result<RootVec> {
    if i >= cd.rank() {
        return Err(Error::IndexOutOfRange);
    }
    if beta.0.len() != cd.rank() {
        return Err(Error::RankMismatch);
    }
    let pairing: i64 = (0..cd.rank()).map(|j| cd.a(i, j) * beta.0[j]).sum();
    let mut out = beta.clone();
    out.0[i] -= pairing;
    Ok(out)
}

/// Apply the i-th simple reflection to a weight in fundamental-weight
/// coordinates: the weight drops by its i-th coordinate times alpha_i.
pub fn simple_reflect_weight(cd: &CartanData, i: usize, lambda: &Weight) -> Result<Weight> {
    if i >= cd.rank() {
        return Err(Error::IndexOutOfRange);
    }
    if lambda.0.len() != cd.rank() {
        return Err(Error::RankMismatch);
    }
    let li = lambda.0[i];
    let mut out = lambda.clone();
    for j in 0..cd.rank() {
        out.0[j] -= li * cd.a(j, i);
    }
    Ok(out)
}

/// Apply a raw letter sequence to a root-lattice vector, rightmost letter
/// first. The word need not be reduced.
pub fn act_word_root(cd: &CartanData, letters: &[usize], beta: &RootVec) -> Result<RootVec> {
    let mut v = beta.clone();
    for &i in letters.iter().rev() {
        v = simple_reflect_root(cd, i, &v)?;
    }
    Ok(v)
}

/// Apply a raw letter sequence to a weight, rightmost letter first.
pub fn act_word_weight(cd: &CartanData, letters: &[usize], lambda: &Weight) -> Result<Weight> {
    let mut v = lambda.clone();
    for &i in letters.iter().rev() {
        v = simple_reflect_weight(cd, i, &v)?;
    }
    Ok(v)
}

// ---- Weyl elements ----

/// A Weyl group element: reduced word plus faithful matrix actions.
#[derive(Debug, Clone)]
pub struct WeylElement {
    cartan: Arc<CartanData>,
    word: Vec<usize>,
    root_action: Matrix,
    weight_action: Matrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
            && self.root_action == other.root_action
            && self.weight_action == other.weight_action
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    /// The identity element.
    pub fn identity(cartan: &Arc<CartanData>) -> Self {
        let r = cartan.rank();
        WeylElement {
            cartan: Arc::clone(cartan),
            word: Vec::new(),
            root_action: mat_identity(r),
            weight_action: mat_identity(r),
        }
    }

    /// The i-th simple reflection (0-based).
    pub fn simple(cartan: &Arc<CartanData>, i: usize) -> Result<Self> {
        WeylElement::identity(cartan).multiply_by_simple(i)
    }

    /// Product of the letters of `word`, reduced eagerly. Non-reduced input
    /// yields the element it represents, with a reduced word.
    pub fn from_word(cartan: &Arc<CartanData>, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(cartan);
        for &i in word {
            w = w.multiply_by_simple(i)?;
        }
        Ok(w)
    }

    pub fn cartan(&self) -> &Arc<CartanData> {
        &self.cartan
    }

    /// The stored reduced word (0-based letters).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Action on a root-lattice vector.
    pub fn apply_to_root(&self, beta: &RootVec) -> Result<RootVec> {
        if beta.0.len() != self.cartan.rank() {
            return Err(Error::RankMismatch);
        }
        Ok(RootVec(mat_vec(&self.root_action, &beta.0)))
    }

    /// Action on a weight in fundamental-weight coordinates.
    pub fn apply_to_weight(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.0.len() != self.cartan.rank() {
            return Err(Error::RankMismatch);
        }
        Ok(Weight(mat_vec(&self.weight_action, &lambda.0)))
    }

    /// True when right multiplication by s_i shortens the element, i.e.
    /// the element maps alpha_i into the negative cone.
    pub fn has_right_descent(&self, i: usize) -> Result<bool> {
        if i >= self.cartan.rank() {
            return Err(Error::IndexOutOfRange);
        }
        // Column i of the root action is the image of alpha_i; for a real
        // root image the coordinates are all of one sign.
        Ok((0..self.cartan.rank()).all(|j| self.root_action[j][i] <= 0))
    }

    /// Right multiplication by a simple reflection, with eager reduction by
    /// the exchange condition when the length drops.
    pub fn multiply_by_simple(&self, i: usize) -> Result<Self> {
        if i >= self.cartan.rank() {
            return Err(Error::IndexOutOfRange);
        }
        let cd = self.cartan.as_ref();
        let root_action = mat_mul(&self.root_action, &reflection_on_roots(cd, i));
        let weight_action = mat_mul(&self.weight_action, &reflection_on_weights(cd, i));
        let word = if self.has_right_descent(i)? {
            // Exchange condition: delete the unique position p with
            // s_{w[p+1]} ... s_{w[last]} (alpha_i) = alpha_{w[p]}.
            let n = self.word.len();
            let mut t = RootVec::simple(cd.rank(), i);
            let mut matches = Vec::new();
            for p in (0..n).rev() {
                if t.0.iter().enumerate().all(|(j, &c)| c == i64::from(j == self.word[p])) {
                    matches.push(p);
                }
                t = simple_reflect_root(cd, self.word[p], &t)?;
            }
            assert_eq!(
                matches.len(),
                1,
                "exchange condition must match exactly one position"
            );
            let mut word = self.word.clone();
            word.remove(matches[0]);
            word
        } else {
            let mut word = self.word.clone();
            word.push(i);
            word
        };
        Ok(WeylElement {
            cartan: Arc::clone(&self.cartan),
            word,
            root_action,
            weight_action,
        })
    }

    /// Left multiplication by a simple reflection.
    pub fn multiply_simple_left(&self, i: usize) -> Result<Self> {
        Ok(self.inverse().multiply_by_simple(i)?.inverse())
    }

    /// Group multiplication, reducing eagerly letter by letter.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.cartan != other.cartan {
            return Err(Error::RankMismatch);
        }
        let mut w = self.clone();
        for &i in &other.word {
            w = w.multiply_by_simple(i)?;
        }
        Ok(w)
    }

    /// The inverse element; its reduced word is the reversal.
    pub fn inverse(&self) -> Self {
        let reversed: Vec<usize> = self.word.iter().rev().copied().collect();
        let cd = self.cartan.as_ref();
        let mut root_action = mat_identity(cd.rank());
        let mut weight_action = mat_identity(cd.rank());
        for &i in &reversed {
            root_action = mat_mul(&root_action, &reflection_on_roots(cd, i));
            weight_action = mat_mul(&weight_action, &reflection_on_weights(cd, i));
        }
        WeylElement {
            cartan: Arc::clone(&self.cartan),
            word: reversed,
            root_action,
            weight_action,
        }
    }
}

/// The root vectors of a reduced word: entry k is the image of the k-th
/// letter's simple root under the prefix before it. Errors with
/// `NotReduced` at the first letter whose root vector leaves the positive
/// cone, which happens exactly when the word is not reduced.
pub fn roots_of_word(cd: &CartanData, word: &[usize]) -> Result<Vec<RootVec>> {
    let r = cd.rank();
    let mut prefix = mat_identity(r);
    let mut betas = Vec::with_capacity(word.len());
    for &i in word {
        if i >= r {
            return Err(Error::IndexOutOfRange);
        }
        let beta = RootVec(mat_vec(&prefix, &RootVec::simple(r, i).0));
        if !beta.is_nonnegative() {
            return Err(Error::NotReduced);
        }
        betas.push(beta);
        prefix = mat_mul(&prefix, &reflection_on_roots(cd, i));
    }
    debug_assert_eq!(
        betas.iter().collect::<BTreeSet<_>>().len(),
        betas.len(),
        "roots of a reduced word are pairwise distinct"
    );
    Ok(betas)
}

/// True when the given letter sequence is a reduced word.
pub fn is_reduced(cd: &CartanData, word: &[usize]) -> Result<bool> {
    match roots_of_word(cd, word) {
        Ok(_) => Ok(true),
        Err(Error::NotReduced) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Bruhat order on elements over the same Cartan data, computed by the
/// letter-by-letter recursion: peel the first letter i off the longer
/// word, replace the candidate u by the shorter of u and s_i u, and accept
/// when the candidate reaches the identity as the word empties.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool> {
    if u.cartan() != w.cartan() {
        return Err(Error::RankMismatch);
    }
    let mut v = u.clone();
    for &i in w.word() {
        if v.is_identity() {
            return Ok(true);
        }
        let sv = v.multiply_simple_left(i)?;
        if sv.length() < v.length() {
            v = sv;
        }
    }
    Ok(v.is_identity())
}

/// All elements of length at most `max_len`, by breadth-first closure under
/// right multiplication. Deterministic order: by length, then by the
/// lexicographically smallest reduced word discovered first.
pub fn enumerate_up_to_length(cartan: &Arc<CartanData>, max_len: usize) -> Result<Vec<WeylElement>> {
    let mut seen: BTreeSet<Matrix> = BTreeSet::new();
    let mut out = vec![WeylElement::identity(cartan)];
    seen.insert(out[0].root_action.clone());
    let mut frontier_start = 0;
    for _ in 0..max_len {
        let frontier_end = out.len();
        for idx in frontier_start..frontier_end {
            let w = out[idx].clone();
            for i in 0..cartan.rank() {
                let next = w.multiply_by_simple(i)?;
                if next.length() > w.length() && seen.insert(next.root_action.clone()) {
                    out.push(next);
                }
            }
        }
        if out.len() == frontier_end {
            break;
        }
        frontier_start = frontier_end;
    }
    Ok(out)
}

// ---- Tests ----
