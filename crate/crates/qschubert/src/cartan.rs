//! Generalized Cartan matrices, symmetrizers, and exact lattice pairings.
//!
//! Index convention throughout the crate: `a[i][j]` is the pairing of the
//! j-th simple root against the i-th simple coroot. Weights are stored in
//! fundamental-weight coordinates, root-lattice vectors in simple-root
//! coordinates, and the invariant form is only ever evaluated with at
//! least one argument in the root lattice. That keeps every computation
//! exact for singular (affine) matrices, where fundamental-weight
//! coordinates alone do not determine a weight-weight pairing.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::Result;

// ---- Lattice vectors ----

/// An integral weight in fundamental-weight coordinates:
/// `coords[j]` is the pairing of the weight against the j-th simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// A root-lattice vector in simple-root coordinates:
/// the vector is the sum of `coords[j]` copies of the j-th simple root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

macro_rules! lattice_vector_impls {
    ($t:ident) => {
        impl $t {
            /// The zero vector of the given rank.
            pub fn zero(rank: usize) -> Self {
                $t(vec![0; rank])
            }

            /// The i-th standard basis vector (0-based).
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut c = vec![0; rank];
                c[i] = 1;
                $t(c)
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// Scale every coordinate by `k`.
            pub fn scaled(&self, k: i64) -> Self {
                $t(self.0.iter().map(|&c| c * k).collect())
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|&c| -c).collect())
            }
        }
    };
}

lattice_vector_impls!(Weight);
lattice_vector_impls!(RootVec);

impl Weight {
    /// The i-th fundamental weight (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        Weight::basis(rank, i)
    }
}

impl RootVec {
    /// The i-th simple root (0-based index).
    pub fn simple(rank: usize, i: usize) -> Self {
        RootVec::basis(rank, i)
    }

    /// True when every coordinate is nonnegative (the vector lies in Q+).
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

// ---- Cartan data ----

/// A symmetrizable generalized Cartan matrix together with its minimal
/// positive symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
    gcm: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanData {
    /// Validates the matrix shape, computes the minimal symmetrizer, and
    /// packages the result.
    pub fn new(gcm: Vec<Vec<i64>>) -> Result<Self> {
        let d = symmetrizer(&gcm)?;
        Ok(CartanData {
            rank: gcm.len(),
            gcm,
            d,
        })
    }

    /// Standard finite-type matrix for a letter A..G and a rank, with the
    /// short-root normalization (short roots get symmetrizer 1).
    pub fn builtin(letter: char, rank: usize) -> Result<Self> {
        let r = rank;
        let chain = |r: usize| -> Vec<Vec<i64>> {
            let mut a = vec![vec![0i64; r]; r];
            for i in 0..r {
                a[i][i] = 2;
                if i + 1 < r {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
            }
            a
        };
        let gcm = match (letter, r) {
            ('A', _) if r >= 1 => chain(r),
            ('B', _) if r >= 2 => {
                // Last simple root is short: the arrow doubles toward it.
                let mut a = chain(r);
                a[r - 1][r - 2] = -2;
                a
            }
            ('C', _) if r >= 2 => {
                let mut a = chain(r);
                a[r - 2][r - 1] = -2;
                a
            }
            ('D', _) if r >= 3 => {
                let mut a = chain(r - 1);
                for row in a.iter_mut() {
                    row.push(0);
                }
                a.push(vec![0; r]);
                a[r - 1][r - 1] = 2;
                a[r - 1][r - 3] = -1;
                a[r - 3][r - 1] = -1;
                a
            }
            ('E', 6..=8) => {
                // Nodes 1-3-4-5-... form a chain; node 2 hangs off node 4.
                let mut a = vec![vec![0i64; r]; r];
                for i in 0..r {
                    a[i][i] = 2;
                }
                let mut link = |i: usize, j: usize| {
                    a[i][j] = -1;
                    a[j][i] = -1;
                };
                link(0, 2);
                link(1, 3);
                for i in 2..r - 1 {
                    link(i, i + 1);
                }
                a
            }
            ('F', 4) => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ],
            ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
            _ => return Err(Error::UnknownType),
        };
        CartanData::new(gcm)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gcm(&self) -> &Vec<Vec<i64>> {
        &self.gcm
    }

    /// Symmetrizer vector d, minimal positive per connected component.
    pub fn symmetrizers(&self) -> &Vec<i64> {
        &self.d
    }

    /// Matrix entry: pairing of the j-th simple root with the i-th coroot.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch)
        }
    }

    /// Invariant form of a weight against a root-lattice vector.
    pub fn form_weight_root(&self, lambda: &Weight, beta: &RootVec) -> Result<i64> {
        self.check_rank(lambda.0.len())?;
        self.check_rank(beta.0.len())?;
        Ok(beta
            .0
            .iter()
            .zip(&lambda.0)
            .zip(&self.d)
            .map(|((&c, &l), &d)| c * d * l)
            .sum())
    }

    /// Invariant form of two root-lattice vectors.
    pub fn form_root_root(&self, beta: &RootVec, gamma: &RootVec) -> Result<i64> {
        self.check_rank(beta.0.len())?;
        self.check_rank(gamma.0.len())?;
        let mut total = 0;
        for (i, &bi) in beta.0.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            for (j, &gj) in gamma.0.iter().enumerate() {
                total += bi * gj * self.d[i] * self.gcm[i][j];
            }
        }
        Ok(total)
    }

    /// Fundamental-weight coordinates of a root-lattice vector: coordinate
    /// j is the pairing of the vector against the j-th simple coroot.
    pub fn root_to_weight_coords(&self, beta: &RootVec) -> Result<Weight> {
        self.check_rank(beta.0.len())?;
        let coords = (0..self.rank)
            .map(|j| beta.0.iter().enumerate().map(|(i, &c)| self.gcm[j][i] * c).sum())
            .collect();
        Ok(Weight(coords))
    }
}

// ---- Symmetrizer ----

/// Minimal positive integer vector d with `d[i] * a[i][j] == d[j] * a[j][i]`,
/// found by propagating the forced ratios along the Dynkin graph.
pub fn symmetrizer(gcm: &[Vec<i64>]) -> Result<Vec<i64>> {
    let r = gcm.len();
    if r == 0 {
        return Err(Error::BadShape);
    }
    for (i, row) in gcm.iter().enumerate() {
        if row.len() != r || row[i] != 2 {
            return Err(Error::BadShape);
        }
        for (j, &a) in row.iter().enumerate() {
            if j != i && (a > 0 || (a == 0) != (gcm[j][i] == 0)) {
                return Err(Error::BadShape);
            }
        }
    }

    let gcd = |mut a: i64, mut b: i64| -> i64 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };

    // Each node gets a positive rational d[i] = num[i] / den[i]; edges force
    // d[j] / d[i] = a[i][j] / a[j][i]. A breadth-first pass per component
    // seeds the first node at 1 and checks consistency on back edges.
    let mut num = vec![0i64; r];
    let mut den = vec![0i64; r];
    let mut component = vec![usize::MAX; r];
    let mut next_component = 0;
    for seed in 0..r {
        if component[seed] != usize::MAX {
            continue;
        }
        component[seed] = next_component;
        num[seed] = 1;
        den[seed] = 1;
        let mut queue = vec![seed];
        while let Some(i) = queue.pop() {
            for j in 0..r {
                if j == i || gcm[i][j] == 0 {
                    continue;
                }
                let mut n = num[i] * gcm[i][j];
                let mut d = den[i] * gcm[j][i];
                if n < 0 && d < 0 {
                    n = -n;
                    d = -d;
                }
                let g = gcd(n, d);
                n /= g;
                d /= g;
                if component[j] == usize::MAX {
                    component[j] = next_component;
                    num[j] = n;
                    den[j] = d;
                    queue.push(j);
                } else if num[j] * d != n * den[j] {
                    return Err(Error::NotSymmetrizable);
                }
            }
        }
        next_component += 1;
    }

    // Clear denominators and divide by the common factor, per component.
    let mut d = vec![0i64; r];
    for c in 0..next_component {
        let nodes: Vec<usize> = (0..r).filter(|&i| component[i] == c).collect();
        let mut lcm = 1i64;
        for &i in &nodes {
            lcm = lcm / gcd(lcm, den[i]) * den[i];
        }
        let mut g = 0i64;
        for &i in &nodes {
            d[i] = num[i] * (lcm / den[i]);
            g = gcd(g, d[i]);
        }
        for &i in &nodes {
            d[i] /= g;
        }
    }
    Ok(d)
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanData {
        CartanData::builtin('A', 2).unwrap()
    }

    #[test]
    fn symmetrizer_symmetric_matrix_is_all_ones() {
        // A2: [[2,-1],[-1,2]] is already symmetric, so d = (1,1).
        assert_eq!(a2().symmetrizers(), &vec![1, 1]);
    }

    #[test]
    fn symmetrizer_b2_short_root_gets_one() {
        // [[2,-1],[-2,2]]: d_1*(-1) = d_2*(-2) forces d = (2,1).
        let cd = CartanData::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        assert_eq!(cd.symmetrizers(), &vec![2, 1]);
    }

    #[test]
    fn symmetrizer_g2_orientation() {
        // [[2,-1],[-3,2]]: d_1*(-1) = d_2*(-3) forces d = (3,1).
        let cd = CartanData::new(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        assert_eq!(cd.symmetrizers(), &vec![3, 1]);
        // Builtin G2 uses the mirror orientation, so d = (1,3).
        let g2 = CartanData::builtin('G', 2).unwrap();
        assert_eq!(g2.symmetrizers(), &vec![1, 3]);
    }

    #[test]
    fn symmetrizer_rejects_inconsistent_cycle() {
        // Triangle with ratio product around the cycle != 1.
        let gcm = vec![vec![2, -1, -2], vec![-2, 2, -1], vec![-1, -2, 2]];
        assert_eq!(symmetrizer(&gcm), Err(Error::NotSymmetrizable));
    }

    #[test]
    fn symmetrizer_rejects_bad_shapes() {
        // Positive off-diagonal entry.
        assert_eq!(
            symmetrizer(&[vec![2, 1], vec![-1, 2]]),
            Err(Error::BadShape)
        );
        // Asymmetric zero pattern.
        assert_eq!(
            symmetrizer(&[vec![2, 0], vec![-1, 2]]),
            Err(Error::BadShape)
        );
        // Wrong diagonal.
        assert_eq!(
            symmetrizer(&[vec![1, -1], vec![-1, 2]]),
            Err(Error::BadShape)
        );
    }

    #[test]
    fn symmetrizer_affine_matrix_accepted() {
        // Affine A1: [[2,-2],[-2,2]] is singular but symmetrizable, d = (1,1).
        let cd = CartanData::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(cd.symmetrizers(), &vec![1, 1]);
    }

    #[test]
    fn form_weight_root_basics() {
        let cd = a2();
        let w1 = Weight::fundamental(2, 0);
        let w2 = Weight::fundamental(2, 1);
        let a1 = RootVec::simple(2, 0);
        let a2v = RootVec::simple(2, 1);
        // <pi_i, alpha_j> = d_j delta_ij.
        assert_eq!(cd.form_weight_root(&w1, &a1).unwrap(), 1);
        assert_eq!(cd.form_weight_root(&w2, &a1).unwrap(), 0);
        assert_eq!(cd.form_weight_root(&w2, &a2v).unwrap(), 1);

        let b2 = CartanData::builtin('B', 2).unwrap();
        // d = (2,1) for builtin B2, so <pi_2, alpha_2> = 1, <pi_1, alpha_1> = 2.
        assert_eq!(
            b2.form_weight_root(&Weight::fundamental(2, 1), &RootVec::simple(2, 1))
                .unwrap(),
            1
        );
        assert_eq!(
            b2.form_weight_root(&Weight::fundamental(2, 0), &RootVec::simple(2, 0))
                .unwrap(),
            2
        );
    }

    #[test]
    fn form_root_root_basics() {
        let cd = a2();
        let a1 = RootVec::simple(2, 0);
        let a2v = RootVec::simple(2, 1);
        // <alpha_1, alpha_1> = 2d_1 = 2, <alpha_1, alpha_2> = d_1 a_12 = -1.
        assert_eq!(cd.form_root_root(&a1, &a1).unwrap(), 2);
        assert_eq!(cd.form_root_root(&a1, &a2v).unwrap(), -1);
        assert_eq!(cd.form_root_root(&a2v, &a1).unwrap(), -1);

        let g2 = CartanData::builtin('G', 2).unwrap();
        let b1 = RootVec::simple(2, 0);
        let b2v = RootVec::simple(2, 1);
        assert_eq!(
            g2.form_root_root(&b1, &b2v).unwrap(),
            g2.form_root_root(&b2v, &b1).unwrap()
        );
    }

    #[test]
    fn root_to_weight_coords_is_gcm_column() {
        let cd = a2();
        // alpha_1 -> (2, -1), the first column of the matrix.
        assert_eq!(
            cd.root_to_weight_coords(&RootVec::simple(2, 0)).unwrap(),
            Weight(vec![2, -1])
        );
        // alpha_1 + alpha_2 -> (1, 1).
        let sum = &RootVec::simple(2, 0) + &RootVec::simple(2, 1);
        assert_eq!(cd.root_to_weight_coords(&sum).unwrap(), Weight(vec![1, 1]));
    }

    #[test]
    fn forms_are_compatible_on_random_vectors() {
        // <coords(beta), gamma> computed weight-against-root must equal the
        // root-against-root form, for a mix of types.
        for cd in [
            a2(),
            CartanData::builtin('B', 2).unwrap(),
            CartanData::builtin('G', 2).unwrap(),
            CartanData::builtin('F', 4).unwrap(),
        ] {
            let r = cd.rank();
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % 7) as i64 - 3
            };
            for _ in 0..50 {
                let beta = RootVec((0..r).map(|_| next()).collect());
                let gamma = RootVec((0..r).map(|_| next()).collect());
                let lhs = cd
                    .form_weight_root(&cd.root_to_weight_coords(&beta).unwrap(), &gamma)
                    .unwrap();
                let rhs = cd.form_root_root(&beta, &gamma).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn builtin_tables() {
        assert_eq!(CartanData::builtin('A', 1).unwrap().gcm(), &vec![vec![2]]);
        assert_eq!(
            CartanData::builtin('A', 2).unwrap().gcm(),
            &vec![vec![2, -1], vec![-1, 2]]
        );
        let b2 = CartanData::builtin('B', 2).unwrap();
        let c2 = CartanData::builtin('C', 2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(b2.a(i, j), c2.a(j, i));
            }
        }
        assert_eq!(CartanData::builtin('H', 2), Err(Error::UnknownType));
        assert_eq!(CartanData::builtin('G', 3), Err(Error::UnknownType));
        assert_eq!(CartanData::builtin('E', 9), Err(Error::UnknownType));
        // All builtin tables pass their own validation.
        for (l, lo, hi) in [
            ('A', 1, 8),
            ('B', 2, 8),
            ('C', 2, 8),
            ('D', 3, 8),
            ('E', 6, 8),
            ('F', 4, 4),
            ('G', 2, 2),
        ] {
            for r in lo..=hi {
                let cd = CartanData::builtin(l, r).unwrap();
                assert_eq!(cd.rank(), r);
                // d_i a_ij = d_j a_ji.
                for i in 0..r {
                    for j in 0..r {
                        assert_eq!(
                            cd.symmetrizers()[i] * cd.a(i, j),
                            cd.symmetrizers()[j] * cd.a(j, i)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let cd = a2();
        let w = Weight::zero(3);
        let b = RootVec::zero((2) as usize);
        assert_eq!(cd.form_weight_root(&w, &b), Err(Error::RankMismatch));
    }
}
