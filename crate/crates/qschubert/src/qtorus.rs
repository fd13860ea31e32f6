//! Exact quantum-torus arithmetic.
//!
//! Elements are finite sums of Laurent monomials Y^e in n generators with
//! `ScalarQ` coefficients. The monomial symbol Y^e always denotes the
//! normally ordered product Y_1^{e_1} ... Y_n^{e_n}; products of two such
//! symbols pick up an s-power given by the cocycle of the commutation
//! matrix, so all identities here are exact.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::scalar::ScalarQ;
use crate::Result;

// ---- Commutation data ----

/// Skew-symmetric integer matrix of s-exponents:
/// Y_k Y_l = s^(skew[k][l]) Y_l Y_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationMatrix {
    skew: Vec<Vec<i64>>,
}

impl CommutationMatrix {
    pub fn new(skew: Vec<Vec<i64>>) -> Result<Self> {
        let n = skew.len();
        for row in &skew {
            if row.len() != n {
                return Err(Error::BadShape);
            }
        }
        for k in 0..n {
            for l in 0..n {
                if skew[k][l] != -skew[l][k] {
                    return Err(Error::BadShape);
                }
            }
        }
        Ok(CommutationMatrix { skew })
    }

    /// The zero matrix: a commutative Laurent ring.
    pub fn commutative(n: usize) -> Self {
        CommutationMatrix {
            skew: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.skew.len()
    }

    pub fn entry(&self, k: usize, l: usize) -> i64 {
        self.skew[k][l]
    }

    pub fn skew(&self) -> &Vec<Vec<i64>> {
        &self.skew
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch)
        }
    }

    /// Normal-ordering cocycle: Y^e Y^f = s^(cocycle(e,f)) Y^(e+f).
    pub fn cocycle(&self, e: &[i64], f: &[i64]) -> Result<i64> {
        self.check_len(e.len())?;
        self.check_len(f.len())?;
        let mut total = 0;
        for (k, &ek) in e.iter().enumerate() {
            if ek == 0 {
                continue;
            }
            for (l, &fl) in f.iter().enumerate().take(k) {
                total += ek * fl * self.skew[k][l];
            }
        }
        Ok(total)
    }

    /// Full commutator exponent e^T skew f = cocycle(e,f) - cocycle(f,e).
    pub fn commutator_exponent(&self, e: &[i64], f: &[i64]) -> Result<i64> {
        self.check_len(e.len())?;
        self.check_len(f.len())?;
        let mut total = 0;
        for (k, &ek) in e.iter().enumerate() {
            if ek == 0 {
                continue;
            }
            for (l, &fl) in f.iter().enumerate() {
                total += ek * fl * self.skew[k][l];
            }
        }
        Ok(total)
    }

    /// Commutation matrix of new generators given as ordered monomials in
    /// the old ones; `columns[a]` is the exponent vector of the a-th new
    /// generator. The new entry (a,b) is columns[a]^T skew columns[b].
    pub fn transport(&self, columns: &[Vec<i64>]) -> Result<CommutationMatrix> {
        let m = columns.len();
        let mut skew = vec![vec![0i64; m]; m];
        for (a, ca) in columns.iter().enumerate() {
            for (b, cb) in columns.iter().enumerate() {
                skew[a][b] = self.commutator_exponent(ca, cb)?;
            }
        }
        Ok(CommutationMatrix { skew })
    }
}

// ---- Torus elements ----

/// A finite sum of monomials c * Y^e; no zero coefficients are stored, so
/// equality of the term maps is equality of elements.
#[derive(Debug, Clone)]
pub struct TorusElement {
    matrix: Arc<CommutationMatrix>,
    terms: BTreeMap<Vec<i64>, ScalarQ>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.terms == other.terms
    }
}

impl Eq for TorusElement {}

impl TorusElement {
    pub fn zero(matrix: &Arc<CommutationMatrix>) -> Self {
        TorusElement {
            matrix: Arc::clone(matrix),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(matrix: &Arc<CommutationMatrix>, c: ScalarQ) -> Self {
        let mut out = TorusElement::zero(matrix);
        if !c.is_zero() {
            out.terms.insert(vec![0; matrix.n()], c);
        }
        out
    }

    pub fn one(matrix: &Arc<CommutationMatrix>) -> Self {
        TorusElement::scalar(matrix, ScalarQ::one())
    }

    /// A single monomial c * Y^e.
    pub fn monomial(matrix: &Arc<CommutationMatrix>, c: ScalarQ, e: Vec<i64>) -> Result<Self> {
        matrix.check_len(e.len())?;
        let mut out = TorusElement::zero(matrix);
        if !c.is_zero() {
            out.terms.insert(e, c);
        }
        Ok(out)
    }

    /// The k-th generator Y_k.
    pub fn generator(matrix: &Arc<CommutationMatrix>, k: usize) -> Result<Self> {
        if k >= matrix.n() {
            return Err(Error::IndexOutOfRange);
        }
        let mut e = vec![0; matrix.n()];
        e[k] = 1;
        TorusElement::monomial(matrix, ScalarQ::one(), e)
    }

    pub fn matrix(&self) -> &Arc<CommutationMatrix> {
        &self.matrix
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, ScalarQ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The (exponent, coefficient) pair of a single-term element.
    pub fn as_monomial(&self) -> Option<(&Vec<i64>, &ScalarQ)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn same_torus(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.matrix, &other.matrix) || self.matrix == other.matrix {
            Ok(())
        } else {
            Err(Error::MixedTori)
        }
    }

    fn insert_term(&mut self, e: Vec<i64>, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_torus(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TorusElement {
            matrix: Arc::clone(&self.matrix),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return TorusElement::zero(&self.matrix);
        }
        TorusElement {
            matrix: Arc::clone(&self.matrix),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_torus(other)?;
        let mut out = TorusElement::zero(&self.matrix);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                let twist = ScalarQ::s_power(self.matrix.cocycle(e, f)?);
                let exp: Vec<i64> = e.iter().zip(f).map(|(x, y)| x + y).collect();
                out.insert_term(exp, &(a * b) * &twist);
            }
        }
        Ok(out)
    }

    /// Inverse of a single monomial; multi-term input is rejected because
    /// only monomials are units here.
    pub fn invert_monomial(&self) -> Result<Self> {
        let (e, c) = self.as_monomial().ok_or(Error::NotMonomial)?;
        let inv_c = c.inverse().ok_or(Error::NotMonomial)?;
        let twist = ScalarQ::s_power(self.matrix.cocycle(e, e)?);
        let neg_e: Vec<i64> = e.iter().map(|x| -x).collect();
        TorusElement::monomial(&self.matrix, &inv_c * &twist, neg_e)
    }

    /// Nonnegative power by repeated multiplication; negative powers are
    /// available for monomials.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 {
            self.invert_monomial()?
        } else {
            self.clone()
        };
        let mut out = TorusElement::one(&self.matrix);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Product of generator powers taken in DESCENDING index order:
    /// Y_{j_r}^{m_r} ... Y_{j_1}^{m_1} with j_r > ... > j_1, returned as a
    /// single normalized term.
    pub fn ordered_monomial(
        matrix: &Arc<CommutationMatrix>,
        exponents: &[(usize, i64)],
    ) -> Result<Self> {
        let mut sorted: Vec<(usize, i64)> = exponents.to_vec();
        sorted.sort();
        sorted.reverse();
        let mut out = TorusElement::one(matrix);
        for &(j, m) in &sorted {
            if j >= matrix.n() {
                return Err(Error::IndexOutOfRange);
            }
            let mut e = vec![0; matrix.n()];
            e[j] = m;
            out = out.mul(&TorusElement::monomial(matrix, ScalarQ::one(), e)?)?;
        }
        Ok(out)
    }

    /// True when the element commutes with every generator: each term's
    /// exponent vector must pair to zero against the whole skew matrix.
    pub fn is_central(&self) -> bool {
        let n = self.matrix.n();
        self.terms.keys().all(|e| {
            (0..n).all(|k| {
                let row: i64 = (0..n).map(|l| self.matrix.entry(k, l) * e[l]).sum();
                row == 0
            })
        })
    }
}

// ---- Tests ----
