//! Integer exponent matrices attached to a reduced word and an element
//! below it, plus the quasi-commutation exponents of the associated normal
//! sequences of minors.
//!
//! All pairings here put a weight against a root-lattice vector, never two
//! general weights, so every value is exact for any symmetrizable Cartan
//! matrix, including singular ones.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanData, RootVec, Weight};
use crate::error::Error;
use crate::scalar::ScalarQ;
use crate::subexpr::{lp, rp, IndexSet};
use crate::weyl::{act_word_root, act_word_weight, simple_reflect_root, simple_reflect_weight, WeylElement};
use crate::Result;

// ---- Subword actions ----

/// Action of the subword product over positions in `s ∩ [from, to)` (taken
/// in increasing position order) on a weight. The rightmost factor acts
/// first, so positions are applied in decreasing order.
pub fn apply_subword_to_weight(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    from: usize,
    to: usize,
    lambda: &Weight,
) -> Result<Weight> {
    if to > word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut v = lambda.clone();
    for &p in s.range(from..to).rev() {
        v = simple_reflect_weight(cd, word[p], &v)?;
    }
    Ok(v)
}

/// Inverse of the subword product acting on a weight: positions are applied
/// in increasing order.
pub fn apply_subword_inverse_to_weight(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    from: usize,
    to: usize,
    lambda: &Weight,
) -> Result<Weight> {
    if to > word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut v = lambda.clone();
    for &p in s.range(from..to) {
        v = simple_reflect_weight(cd, word[p], &v)?;
    }
    Ok(v)
}

/// Subword product action on a root-lattice vector; rightmost factor first.
pub fn apply_subword_to_root(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    from: usize,
    to: usize,
    gamma: &RootVec,
) -> Result<RootVec> {
    if to > word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut v = gamma.clone();
    for &p in s.range(from..to).rev() {
        v = simple_reflect_root(cd, word[p], &v)?;
    }
    Ok(v)
}

/// Inverse subword product acting on a root-lattice vector.
pub fn apply_subword_inverse_to_root(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    from: usize,
    to: usize,
    gamma: &RootVec,
) -> Result<RootVec> {
    if to > word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut v = gamma.clone();
    for &p in s.range(from..to) {
        v = simple_reflect_root(cd, word[p], &v)?;
    }
    Ok(v)
}

/// The root-lattice vector attached to position j of a (not necessarily
/// reduced) word: the prefix before j applied to the j-th simple root.
pub fn beta_at(cd: &CartanData, word: &[usize], j: usize) -> Result<RootVec> {
    if j >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    act_word_root(cd, &word[..j], &RootVec::simple(cd.rank(), word[j]))
}

// ---- The entry function a_jk(λ) ----

/// Pairing of the j-th coroot of the word against the subword action on λ
/// over positions in `s` strictly between j and k inclusive of k. The word
/// need not be reduced. Zero-based positions, 0 ≤ j ≤ k < N.
pub fn a_lambda(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    j: usize,
    k: usize,
    lambda: &Weight,
) -> Result<i64> {
    if j > k || k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let v = apply_subword_to_weight(cd, word, s, j + 1, k + 1, lambda)?;
    Ok(v.0[word[j]])
}

/// Closed form of a_jk at a fundamental weight: the Kronecker term minus a
/// sum of coroot pairings against partial subword images of the simple root.
fn a_fundamental_closed_form(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    j: usize,
    k: usize,
    i: usize,
) -> Result<i64> {
    let mut total = i64::from(word[j] == i);
    for &l in s.range(j + 1..k + 1) {
        if word[l] != i {
            continue;
        }
        let img = apply_subword_to_root(cd, word, s, j + 1, l, &RootVec::simple(cd.rank(), i))?;
        total -= cd.root_to_weight_coords(&img)?.0[word[j]];
    }
    Ok(total)
}

/// The coefficients of the root-coordinate expansion of (w_{≤k} − u_{≤k})λ:
/// maps each position j ≤ k outside `s` to −a_jk(λ), so that the difference
/// equals the sum of coeff_j · β_j.
pub fn deg2_decomposition(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    k: usize,
    lambda: &Weight,
) -> Result<BTreeMap<usize, i64>> {
    if k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut out = BTreeMap::new();
    for j in 0..=k {
        if !s.contains(&j) {
            out.insert(j, -a_lambda(cd, word, s, j, k, lambda)?);
        }
    }
    Ok(out)
}

/// The vector (prefix product up to `upto` of the word, minus the same
/// prefix of the subword over `s`) applied to λ, written in root
/// coordinates. Half-open prefix [0, upto).
pub fn weight_difference_in_roots(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    upto: usize,
    lambda: &Weight,
) -> Result<RootVec> {
    if upto > word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let mut out = RootVec::zero(cd.rank());
    if upto == 0 {
        return Ok(out);
    }
    let k = upto - 1;
    for (j, coeff) in deg2_decomposition(cd, word, s, k, lambda)? {
        let beta = beta_at(cd, word, j)?;
        out = &out + &beta.scaled(coeff);
    }
    Ok(out)
}

/// Both sides of the inner-product identity relating weighted sums of root
/// pairings to a single weight-against-root pairing; callers assert the two
/// returned integers are equal.
pub fn inner_prod_identity_check(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    l: usize,
    k: usize,
    lambda: &Weight,
) -> Result<(i64, i64)> {
    if l > k || k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    if s.contains(&l) {
        return Err(Error::PreconditionViolated);
    }
    let beta_l = beta_at(cd, word, l)?;
    let mut lhs = 0;
    for j in 0..=k {
        if s.contains(&j) || j == l {
            continue;
        }
        let pairing = cd.form_root_root(&beta_at(cd, word, j)?, &beta_l)?;
        let a = a_lambda(cd, word, s, j, k, lambda)?;
        if j < l {
            lhs += pairing * a;
        } else {
            lhs -= pairing * a;
        }
    }
    // (w+u)λ = 2wλ − (w−u)λ keeps the second pairing inside the root
    // lattice.
    let w_lambda = act_word_weight(cd, &word[..=k], lambda)?;
    let diff = weight_difference_in_roots(cd, word, s, k + 1, lambda)?;
    let rhs = 2 * cd.form_weight_root(&w_lambda, &beta_l)? - cd.form_root_root(&diff, &beta_l)?;
    Ok((lhs, rhs))
}

// ---- Exponent matrices ----

/// Which of the two triangular exponent matrices is stored: the direct
/// normal sequence has an upper-triangular matrix over the right positive
/// complement, the reverse sequence a lower-triangular one over the left
/// positive complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    Direct,
    Reverse,
}

/// A triangular integer exponent matrix with rows indexed by the positions
/// outside a positive subexpression and columns by all word positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    pub word: Vec<usize>,
    pub u_word: Vec<usize>,
    pub side: Presentation,
    pub rows: IndexSet,
    entries: BTreeMap<usize, Vec<i64>>,
}

impl ExponentMatrix {
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[&row][col]
    }

    pub fn entries(&self) -> &BTreeMap<usize, Vec<i64>> {
        &self.entries
    }

    /// The square submatrix with columns restricted to the row index set,
    /// returned together with the ascending index list.
    pub fn principal(&self) -> (Vec<usize>, Vec<Vec<i64>>) {
        let idx: Vec<usize> = self.rows.iter().copied().collect();
        let square = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| self.entry(r, c)).collect())
            .collect();
        (idx, square)
    }
}

/// Upper-triangular exponent matrix of the direct normal sequence: rows are
/// the positions outside the right positive subexpression for u, and entry
/// (j,k) pairs the j-th coroot against the subword action on the k-th
/// fundamental weight. Two closed forms are computed and must agree.
pub fn a_matrix(cartan: &Arc<CartanData>, word: &[usize], u: &WeylElement) -> Result<ExponentMatrix> {
    let s = rp(cartan, word, u)?;
    let n = word.len();
    let rows: IndexSet = (0..n).filter(|p| !s.contains(p)).collect();
    let mut entries = BTreeMap::new();
    for &j in &rows {
        let mut row = vec![0i64; n];
        for (k, slot) in row.iter_mut().enumerate().skip(j) {
            let direct = a_lambda(cartan, word, &s, j, k, &Weight::fundamental(cartan.rank(), word[k]))?;
            let closed = a_fundamental_closed_form(cartan, word, &s, j, k, word[k])?;
            assert_eq!(direct, closed, "the two entry formulas disagree");
            *slot = direct;
        }
        entries.insert(j, row);
    }
    Ok(ExponentMatrix {
        word: word.to_vec(),
        u_word: u.word().to_vec(),
        side: Presentation::Direct,
        rows,
        entries,
    })
}

/// Inverse of the principal square submatrix of the direct exponent matrix
/// by back substitution; exact over the integers because the submatrix is
/// unit upper-triangular.
pub fn a_inverse(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
) -> Result<(Vec<usize>, Vec<Vec<i64>>)> {
    let m = a_matrix(cartan, word, u)?;
    let (idx, square) = m.principal();
    let n = idx.len();
    let mut inv = vec![vec![0i64; n]; n];
    for c in 0..n {
        inv[c][c] = 1;
        for r in (0..c).rev() {
            let mut total = 0;
            for t in r + 1..=c {
                total += square[r][t] * inv[t][c];
            }
            inv[r][c] = -total;
        }
    }
    Ok((idx, inv))
}

/// The entry of the reverse-sequence coefficient at row l for a general
/// weight: pairing of the l-th coroot against the left-positive subword
/// action on λ over positions from l to the end.
pub fn b_l_lambda(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    l: usize,
    lambda: &Weight,
) -> Result<i64> {
    let s = lp(cartan, word, u)?;
    b_row_entry(cartan, word, &s, l, lambda)
}

fn b_row_entry(cd: &CartanData, word: &[usize], s: &IndexSet, l: usize, lambda: &Weight) -> Result<i64> {
    if l >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let v = apply_subword_to_weight(cd, word, s, l, word.len(), lambda)?;
    Ok(v.0[word[l]])
}

/// Lower-triangular exponent matrix of the reverse normal sequence: rows
/// are the positions outside the left positive subexpression for u. Three
/// evaluation routes are computed per entry and must agree.
pub fn b_matrix(cartan: &Arc<CartanData>, word: &[usize], u: &WeylElement) -> Result<ExponentMatrix> {
    let s = lp(cartan, word, u)?;
    let n = word.len();
    let rank = cartan.rank();
    let rows: IndexSet = (0..n).filter(|p| !s.contains(p)).collect();
    let mut entries = BTreeMap::new();
    for &l in &rows {
        let mut row = vec![0i64; n];
        for (k, slot) in row.iter_mut().enumerate().take(l + 1) {
            // Interval route: inverse subword action over [k, l).
            let v = apply_subword_inverse_to_weight(cartan, word, &s, k, l, &Weight::fundamental(rank, word[k]))?;
            let interval = v.0[word[l]];
            // Tail route: the general-weight entry at the transported
            // fundamental weight.
            let tail_weight =
                apply_subword_inverse_to_weight(cartan, word, &s, k, n, &Weight::fundamental(rank, word[k]))?;
            let tail = b_row_entry(cartan, word, &s, l, &tail_weight)?;
            assert_eq!(interval, tail, "entry routes disagree");
            if l == k {
                assert_eq!(interval, 1, "diagonal entry must be one");
            } else {
                // Kronecker-minus-sum route.
                let mut closed = i64::from(word[k] == word[l]);
                for &j in s.range(k..l) {
                    if word[j] != word[k] {
                        continue;
                    }
                    let img = apply_subword_inverse_to_root(
                        cartan,
                        word,
                        &s,
                        j + 1,
                        l,
                        &RootVec::simple(rank, word[j]),
                    )?;
                    closed -= cartan.root_to_weight_coords(&img)?.0[word[l]];
                }
                assert_eq!(interval, closed, "closed form disagrees");
            }
            *slot = interval;
        }
        entries.insert(l, row);
    }
    Ok(ExponentMatrix {
        word: word.to_vec(),
        u_word: u.word().to_vec(),
        side: Presentation::Reverse,
        rows,
        entries,
    })
}

// ---- Scalar coefficients ----

/// The exact coefficient (q_d^{-1} − q_d)^a / q_d^{a(a−1)/2} with
/// q_d = s^{2d}; defined for every integer a, and equal to one at a = 0.
pub fn scalar_coeff(d: i64, a: i64) -> ScalarQ {
    let base = ScalarQ::from_terms(&[(-2 * d, 1), (2 * d, -1)]);
    let power = base.pow(a).expect("base is nonzero");
    &power * &ScalarQ::s_power(-d * a * (a - 1))
}

// ---- Quasi-commutation exponents ----

fn prefix_difference(
    cd: &CartanData,
    word: &[usize],
    s: &IndexSet,
    upto: usize,
) -> Result<RootVec> {
    let lambda = Weight::fundamental(cd.rank(), word[upto - 1]);
    weight_difference_in_roots(cd, word, s, upto, &lambda)
}

fn m_direct_with_set(cd: &CartanData, word: &[usize], s: &IndexSet, j: usize, k: usize) -> Result<i64> {
    if j >= k || k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let lambda_k = Weight::fundamental(cd.rank(), word[k]);
    let w_lambda_k = act_word_weight(cd, &word[..=k], &lambda_k)?;
    let diff_k = prefix_difference(cd, word, s, k + 1)?;
    let diff_j = prefix_difference(cd, word, s, j + 1)?;
    // ⟨(w+u)λ_k, (w−u)λ_j⟩ with the first factor split as 2wλ − (w−u)λ.
    let value = 2 * cd.form_weight_root(&w_lambda_k, &diff_j)? - cd.form_root_root(&diff_k, &diff_j)?;
    Ok(-value)
}

/// q-exponent by which the k-th member of the direct normal sequence moves
/// past the j-th (j < k): minus the pairing of the summed prefix weights at
/// k against the prefix difference at j.
pub fn quasi_comm_exponent_direct(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    j: usize,
    k: usize,
) -> Result<i64> {
    let s = rp(cartan, word, u)?;
    m_direct_with_set(cartan, word, &s, j, k)
}

/// q-exponent by which the l-th member of the reverse normal sequence moves
/// past the k-th (k < l), computed through the reversed word: suffix data
/// of the word are prefix data of its reversal for the inverse element.
pub fn quasi_comm_exponent_reverse(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    k: usize,
    l: usize,
) -> Result<i64> {
    let n = word.len();
    if k >= l || l >= n {
        return Err(Error::IndexOutOfRange);
    }
    let rev_word: Vec<usize> = word.iter().rev().copied().collect();
    let u_inv = u.inverse();
    Ok(-quasi_comm_exponent_direct(cartan, &rev_word, &u_inv, n - 1 - l, n - 1 - k)?)
}

/// q-exponent by which the k-th member of the direct normal sequence moves
/// past a homogeneous element of root degree γ.
pub fn normal_comm_exponent(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    k: usize,
    gamma: &RootVec,
) -> Result<i64> {
    if k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let s = rp(cartan, word, u)?;
    let lambda = Weight::fundamental(cartan.rank(), word[k]);
    let w_lambda = act_word_weight(cartan, &word[..=k], &lambda)?;
    let diff = weight_difference_in_roots(cartan, word, &s, k + 1, &lambda)?;
    Ok(-(2 * cartan.form_weight_root(&w_lambda, gamma)? - cartan.form_root_root(&diff, gamma)?))
}

/// q-exponent in the product rule for localized minors at weights λ1, λ2:
/// the pairing of (w−u)λ1, taken in root coordinates, against uλ2.
pub fn localized_minor_exponent(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    lambda1: &Weight,
    lambda2: &Weight,
) -> Result<i64> {
    let s = rp(cartan, word, u)?;
    let diff = weight_difference_in_roots(cartan, word, &s, word.len(), lambda1)?;
    let u_lambda2 = u.apply_to_weight(lambda2)?;
    cartan.form_weight_root(&u_lambda2, &diff)
}

// ---- Tests ----
