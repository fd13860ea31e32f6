//! Subexpressions of a reduced word and the unique positive ones.
//!
//! A subexpression is an index subset D of the word positions; its partial
//! products multiply the chosen letters in increasing position order. For
//! every u below the word's element in Bruhat order there is exactly one
//! right positive and one left positive subexpression with total product
//! u. The greedy scans below compute them; the exhaustive oracle checks
//! uniqueness by enumerating all subsets.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cartan::CartanData;
use crate::error::Error;
use crate::weyl::{is_reduced, WeylElement};
use crate::Result;

/// Which side the positivity condition guards: `Right` walks prefixes and
/// multiplies on the right, `Left` walks suffixes and multiplies on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Index subsets of word positions, 0-based, kept sorted.
pub type IndexSet = BTreeSet<usize>;

/// Default cap for the exhaustive oracle enumeration.
pub const ORACLE_BOUND: usize = 20;

/// Partial product of the letters at positions in `d` within the inclusive
/// range `[j, k]`, in increasing position order. An empty range or empty
/// intersection gives the identity.
pub fn product_over(
    cartan: &Arc<CartanData>,
    word: &[usize],
    d: &IndexSet,
    j: usize,
    k: usize,
) -> Result<WeylElement> {
    let mut w = WeylElement::identity(cartan);
    if j > k {
        return Ok(w);
    }
    if k >= word.len() {
        return Err(Error::IndexOutOfRange);
    }
    for &p in d.range(j..=k) {
        w = w.multiply_by_simple(word[p])?;
    }
    Ok(w)
}

fn ensure_reduced(cartan: &CartanData, word: &[usize]) -> Result<()> {
    if is_reduced(cartan, word)? {
        Ok(())
    } else {
        Err(Error::NotReduced)
    }
}

/// The right positive subexpression of `word` with total product `u`:
/// scan positions from the right, multiplying into a running copy of u
/// whenever that shortens it. Fails with `NotBelow` when the scan cannot
/// reach the identity, which happens exactly when u is not below the word.
pub fn rp(cartan: &Arc<CartanData>, word: &[usize], u: &WeylElement) -> Result<IndexSet> {
    ensure_reduced(cartan, word)?;
    let mut v = u.clone();
    let mut d = IndexSet::new();
    for p in (0..word.len()).rev() {
        let vs = v.multiply_by_simple(word[p])?;
        if vs.length() < v.length() {
            v = vs;
            d.insert(p);
        }
    }
    if v.is_identity() {
        Ok(d)
    } else {
        Err(Error::NotBelow)
    }
}

/// The left positive subexpression: the mirror greedy scan from the left
/// with left multiplication. Equals the index reversal of `rp` on the
/// reversed word applied to the inverse element.
pub fn lp(cartan: &Arc<CartanData>, word: &[usize], u: &WeylElement) -> Result<IndexSet> {
    ensure_reduced(cartan, word)?;
    let mut v = u.clone();
    let mut d = IndexSet::new();
    for (p, &letter) in word.iter().enumerate() {
        let sv = v.multiply_simple_left(letter)?;
        if sv.length() < v.length() {
            v = sv;
            d.insert(p);
        }
    }
    if v.is_identity() {
        Ok(d)
    } else {
        Err(Error::NotBelow)
    }
}

/// The Marsh-Rietsch positivity test. For the right side: every prefix
/// product of the subexpression must ascend when the next letter of the
/// word is multiplied on the right, whether or not that position is
/// chosen. The left side is the mirror condition on suffix products.
pub fn is_positive(
    cartan: &Arc<CartanData>,
    word: &[usize],
    d: &IndexSet,
    side: Side,
) -> Result<bool> {
    let mut v = WeylElement::identity(cartan);
    match side {
        Side::Right => {
            for (p, &letter) in word.iter().enumerate() {
                let vs = v.multiply_by_simple(letter)?;
                if vs.length() < v.length() {
                    return Ok(false);
                }
                if d.contains(&p) {
                    v = vs;
                }
            }
        }
        Side::Left => {
            for p in (0..word.len()).rev() {
                let sv = v.multiply_simple_left(word[p])?;
                if sv.length() < v.length() {
                    return Ok(false);
                }
                if d.contains(&p) {
                    v = sv;
                }
            }
        }
    }
    Ok(true)
}

/// Brute-force realization: enumerate all 2^N subsets, keep those with the
/// prescribed product that pass the positivity test, and demand exactly
/// one survivor. Zero survivors means u is not below the word; more than
/// one would contradict uniqueness and is flagged as an internal failure.
pub fn oracle_positive_subexpr(
    cartan: &Arc<CartanData>,
    word: &[usize],
    u: &WeylElement,
    side: Side,
) -> Result<IndexSet> {
    let n = word.len();
    if n > ORACLE_BOUND {
        return Err(Error::BoundExceeded);
    }
    let mut survivors: Vec<IndexSet> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let d: IndexSet = (0..n).filter(|p| mask >> p & 1 == 1).collect();
        let mut prod = WeylElement::identity(cartan);
        for &p in &d {
            prod = prod.multiply_by_simple(word[p])?;
        }
        if &prod == u && is_positive(cartan, word, &d, side)? {
            survivors.push(d);
        }
    }
    match survivors.len() {
        0 => Err(Error::NotBelow),
        1 => Ok(survivors.pop().unwrap()),
        _ => Err(Error::UniquenessViolated),
    }
}

// ---- Tests ----
