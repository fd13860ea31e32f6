//! Interval-prefix permutations, their chains of interval subwords, and the
//! toric frames those chains induce on each prime quotient.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanData, RootVec, Weight};
use crate::error::Error;
use crate::exponents::weight_difference_in_roots;
use crate::Result;
use crate::qtorus::CommutationMatrix;
use crate::subexpr::{lp, product_over, rp, IndexSet};
use crate::weyl::{act_word_root, act_word_weight, WeylElement};

// ---- Interval-prefix permutations ----

/// A permutation of the stages 0..n whose prefixes are intervals: at every
/// stage the new position extends the already-covered interval by one slot
/// on the left or on the right. Stored with the derived interval endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiElement {
    perm: Vec<usize>,
    c: Vec<usize>,
    d: Vec<usize>,
}

fn endpoints(perm: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = perm.len();
    let mut c = vec![0; n];
    let mut d = vec![0; n];
    for k in 0..n {
        if k == 0 {
            c[0] = perm[0];
            d[0] = perm[0];
        } else {
            c[k] = c[k - 1].min(perm[k]);
            d[k] = d[k - 1].max(perm[k]);
        }
        if d[k] - c[k] != k {
            return None;
        }
    }
    Some((c, d))
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::NotAPermutation);
        }
        seen[p] = true;
    }
    Ok(())
}

impl PiElement {
    /// Wrap a zero-based permutation, rejecting sequences that are not
    /// permutations and permutations whose prefixes are not all intervals.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm)?;
        match endpoints(&perm) {
            Some((c, d)) => Ok(PiElement { perm, c, d }),
            None => Err(Error::PreconditionViolated),
        }
    }

    /// The identity permutation: intervals grow to the right from slot 0.
    pub fn identity(n: usize) -> Self {
        PiElement::new((0..n).collect()).expect("the identity has interval prefixes")
    }

    /// The order-reversing permutation: intervals grow to the left from the
    /// last slot.
    pub fn reversal(n: usize) -> Self {
        PiElement::new((0..n).rev().collect()).expect("the reversal has interval prefixes")
    }

    /// Number of stages.
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// The underlying zero-based permutation.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Left endpoint of the interval covered after stage k.
    pub fn c(&self, k: usize) -> usize {
        self.c[k]
    }

    /// Right endpoint of the interval covered after stage k.
    pub fn d(&self, k: usize) -> usize {
        self.d[k]
    }

    /// The covered interval after stage k as an inclusive pair.
    pub fn interval(&self, k: usize) -> (usize, usize) {
        (self.c[k], self.d[k])
    }

    /// True when stage k extended the interval on the right; stage 0 counts
    /// as a right extension of the empty interval.
    pub fn extends_right(&self, k: usize) -> bool {
        self.perm[k] == self.d[k]
    }
}

/// Membership test for the interval-prefix family inside the full symmetric
/// group, on a zero-based candidate permutation.
pub fn xi_contains(perm: &[usize]) -> Result<bool> {
    check_permutation(perm)?;
    Ok(endpoints(perm).is_some())
}

/// All interval-prefix permutations of n stages, enumerated deterministically
/// by the set of stages that extend on the right; there are 2^{n-1} of them
/// for n ≥ 1 because stage 0 has no direction.
pub fn xi_enumerate(n: usize) -> Vec<PiElement> {
    if n == 0 {
        return vec![PiElement {
            perm: Vec::new(),
            c: Vec::new(),
            d: Vec::new(),
        }];
    }
    let mut out = Vec::with_capacity(1usize << (n - 1));
    for mask in 0u64..(1u64 << (n - 1)) {
        let rights = mask.count_ones() as usize;
        let start = n - 1 - rights;
        let mut perm = Vec::with_capacity(n);
        perm.push(start);
        let (mut lo, mut hi) = (start, start);
        for bit in 0..n - 1 {
            if mask >> bit & 1 == 1 {
                hi += 1;
                perm.push(hi);
            } else {
                lo -= 1;
                perm.push(lo);
            }
        }
        out.push(PiElement::new(perm).expect("constructed prefixes are intervals"));
    }
    out
}

// ---- The stage elements and the distinguished position set ----

fn check_stage_shape(word: &[usize], pi: &PiElement) -> Result<()> {
    if pi.n() != word.len() {
        return Err(Error::LengthMismatch);
    }
    Ok(())
}

/// The per-stage Weyl group elements of the chain: entry k is the element
/// attached to the interval subword covered after stage k, with the last
/// entry equal to u. Two descent rules are evaluated at every stage, the
/// shorter-of-the-two-products rule and the positivity-membership rule, and
/// are asserted to agree.
pub fn u_sequence(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    pi: &PiElement,
) -> Result<Vec<WeylElement>> {
    check_stage_shape(word, pi)?;
    let n = word.len();
    // Validates that the word is reduced and that u lies below it.
    rp(cartan, word, u)?;
    let mut useq = vec![WeylElement::identity(cartan); n];
    useq[n - 1] = u.clone();
    for k in (0..n - 1).rev() {
        let next = useq[k + 1].clone();
        let (cc, dd) = pi.interval(k + 1);
        let interval = &word[cc..=dd];
        let (moved, chosen) = if pi.extends_right(k + 1) {
            let moved = next.multiply_by_simple(word[dd])?;
            let member = rp(cartan, interval, &next)?.contains(&(dd - cc));
            (moved, member)
        } else {
            let moved = next.multiply_simple_left(word[cc])?;
            let member = lp(cartan, interval, &next)?.contains(&0);
            (moved, member)
        };
        let shorter = moved.length() < next.length();
        assert_eq!(shorter, chosen, "the two stage descent rules disagree");
        useq[k] = if shorter { moved } else { next };
    }
    Ok(useq)
}

/// The distinguished position set of the chain: a stage contributes its new
/// position when that position is positivity-chosen for the stage element
/// inside the stage's interval subword. The per-stage product identity (the
/// stage element is the ascending product over the set within the stage
/// interval) is asserted before returning.
pub fn d_pi(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    pi: &PiElement,
) -> Result<IndexSet> {
    let useq = u_sequence(cartan, word, u, pi)?;
    d_pi_from(cartan, word, pi, &useq)
}

fn d_pi_from(
    cartan: &Arc<CartanData>,
    word: &[usize],
    pi: &PiElement,
    useq: &[WeylElement],
) -> Result<IndexSet> {
    let mut dset = IndexSet::new();
    for k in 0..word.len() {
        let (cc, dd) = pi.interval(k);
        let interval = &word[cc..=dd];
        if pi.extends_right(k) {
            if rp(cartan, interval, &useq[k])?.contains(&(dd - cc)) {
                dset.insert(dd);
            }
        } else if lp(cartan, interval, &useq[k])?.contains(&0) {
            dset.insert(cc);
        }
    }
    for (k, uk) in useq.iter().enumerate() {
        let prod = product_over(cartan, word, &dset, pi.c(k), pi.d(k))?;
        assert_eq!(&prod, uk, "stage element is not the product over the set");
    }
    Ok(dset)
}

// ---- Stage weights ----

fn stage_weight(word: &[usize], pi: &PiElement, uk: &WeylElement, k: usize) -> Result<Weight> {
    let rank = uk.cartan().rank();
    let (cc, dd) = pi.interval(k);
    if pi.extends_right(k) {
        Ok(Weight::fundamental(rank, word[dd]))
    } else {
        uk.inverse()
            .apply_to_weight(&Weight::fundamental(rank, word[cc]))
    }
}

fn lambda_pm_from(
    cd: &CartanData,
    word: &[usize],
    pi: &PiElement,
    uk: &WeylElement,
    dset: &IndexSet,
    k: usize,
) -> Result<(Weight, RootVec)> {
    let (cc, dd) = pi.interval(k);
    let mu = stage_weight(word, pi, uk, k)?;
    let interval = &word[cc..=dd];
    let local: IndexSet = dset.range(cc..=dd).map(|&p| p - cc).collect();
    // Difference of the interval orbit points, in root coordinates, then
    // transported by the prefix before the interval.
    let diff = weight_difference_in_roots(cd, interval, &local, interval.len(), &mu)?;
    let minus = act_word_root(cd, &word[..cc], &diff)?;
    // Sum of the orbit points as twice the top point minus the difference.
    let top = act_word_weight(cd, &word[..=dd], &mu)?;
    let plus = &top.scaled(2) - &cd.root_to_weight_coords(&minus)?;
    Ok((plus, minus))
}

/// The pair of stage weights at stage k: the orbit-point sum in
/// fundamental-weight coordinates and the orbit-point difference in root
/// coordinates. The normal element of stage k has degree equal to the
/// difference and commutes past degree γ by the q-power −⟨sum, γ⟩.
pub fn lambda_pm(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    pi: &PiElement,
    k: usize,
) -> Result<(Weight, RootVec)> {
    if k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    let useq = u_sequence(cartan, word, u, pi)?;
    let dset = d_pi_from(cartan, word, pi, &useq)?;
    lambda_pm_from(cartan, word, pi, &useq[k], &dset, k)
}

// ---- Toric frames ----

/// Symbolic descriptor of one stage's normal element: the length of the
/// twisting prefix in front of the interval subword, the stage element, and
/// the weight whose orbit points label the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameLabel {
    /// Number of word letters in front of the stage interval.
    pub prefix_len: usize,
    /// The stage element.
    pub element: WeylElement,
    /// The labeling weight of the stage.
    pub weight: Weight,
}

/// A toric frame on a prime quotient: per-stage labels and weight pairs, the
/// distinguished position set, the surviving generator stages, and the
/// integer matrix of half-power exponents of the frame bicharacter.
#[derive(Debug, Clone)]
pub struct ToricFrame {
    word: Vec<usize>,
    u: WeylElement,
    pi: PiElement,
    d_set: IndexSet,
    generators: Vec<usize>,
    labels: Vec<FrameLabel>,
    lambda_plus: Vec<Weight>,
    lambda_minus: Vec<RootVec>,
    bichar: Vec<Vec<i64>>,
}

impl ToricFrame {
    /// The underlying reduced word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The quotient-defining element.
    pub fn u(&self) -> &WeylElement {
        &self.u
    }

    /// The chain permutation.
    pub fn pi(&self) -> &PiElement {
        &self.pi
    }

    /// The distinguished position set.
    pub fn d_set(&self) -> &IndexSet {
        &self.d_set
    }

    /// Stages whose normal elements generate the frame torus, in increasing
    /// order: the complement of the distinguished set.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Per-stage symbolic labels.
    pub fn labels(&self) -> &[FrameLabel] {
        &self.labels
    }

    /// Per-stage orbit-point sums in weight coordinates.
    pub fn lambda_plus(&self) -> &[Weight] {
        &self.lambda_plus
    }

    /// Per-stage orbit-point differences in root coordinates.
    pub fn lambda_minus(&self) -> &[RootVec] {
        &self.lambda_minus
    }

    /// The full stage-indexed matrix of bicharacter exponents: entry (a, b)
    /// for a > b is the half-power exponent by which stage a's normal
    /// element moves past stage b's, extended skew-symmetrically.
    pub fn bichar(&self) -> &Vec<Vec<i64>> {
        &self.bichar
    }

    /// One bicharacter exponent.
    pub fn entry(&self, a: usize, b: usize) -> i64 {
        self.bichar[a][b]
    }

    /// The bicharacter restricted to the generator stages, in their
    /// increasing order.
    pub fn generator_bichar(&self) -> Vec<Vec<i64>> {
        self.generators
            .iter()
            .map(|&a| self.generators.iter().map(|&b| self.bichar[a][b]).collect())
            .collect()
    }

    /// The commutation matrix of the generator monomials themselves: the
    /// frame relation squares the bicharacter, so the exponents double.
    pub fn commutation_matrix(&self) -> Result<CommutationMatrix> {
        let doubled = self
            .generator_bichar()
            .into_iter()
            .map(|row| row.into_iter().map(|v| 2 * v).collect())
            .collect();
        CommutationMatrix::new(doubled)
    }
}

/// Build the complete toric frame of a chain permutation on the quotient
/// attached to u: stage elements, distinguished set, labels, stage weight
/// pairs, and the skew integer matrix of bicharacter exponents
/// −⟨sum at the later stage, difference at the earlier stage⟩.
pub fn frame_bicharacter(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    pi: &PiElement,
) -> Result<ToricFrame> {
    check_stage_shape(word, pi)?;
    let n = word.len();
    let useq = u_sequence(cartan, word, u, pi)?;
    let dset = d_pi_from(cartan, word, pi, &useq)?;
    let mut labels = Vec::with_capacity(n);
    let mut lambda_plus = Vec::with_capacity(n);
    let mut lambda_minus = Vec::with_capacity(n);
    for k in 0..n {
        let (plus, minus) = lambda_pm_from(cartan, word, pi, &useq[k], &dset, k)?;
        labels.push(FrameLabel {
            prefix_len: pi.c(k),
            element: useq[k].clone(),
            weight: stage_weight(word, pi, &useq[k], k)?,
        });
        lambda_plus.push(plus);
        lambda_minus.push(minus);
    }
    let mut bichar = vec![vec![0i64; n]; n];
    for a in 0..n {
        for b in 0..a {
            let v = -cartan.form_weight_root(&lambda_plus[a], &lambda_minus[b])?;
            bichar[a][b] = v;
            bichar[b][a] = -v;
        }
    }
    Ok(ToricFrame {
        word: word.to_vec(),
        u: u.clone(),
        pi: pi.clone(),
        generators: (0..n).filter(|k| !dset.contains(k)).collect(),
        d_set: dset,
        labels,
        lambda_plus,
        lambda_minus,
        bichar,
    })
}

// ---- Tests ----
