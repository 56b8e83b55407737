//! Exact combinatorial data of irreducible root systems: Cartan matrix,
//! positive roots in simple-root coordinates, exponents, adjoint dimension
//! and Cartan determinant.
//!
//! Only the Cartan matrices are hardcoded. Positive roots are generated by
//! the closure algorithm over simple-root coordinates, so the classical
//! identities (root count = sum of exponents, dimension identities, the
//! height-distribution description of the exponents) stay genuine
//! cross-checks rather than restatements of hardcoded tables.

use std::collections::HashSet;

use crate::dynkin::{DynkinType, Family};

/// Full combinatorial data for one irreducible root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    exponents: Vec<u64>,
    dimension: u64,
    cartan_det: u64,
}

impl RootSystem {
    /// Build the root system for an admissible type. Positive roots are
    /// produced by closure under simple-root addition using the root-string
    /// condition; exponents come from the closed forms.
    pub fn build(dynkin: DynkinType) -> RootSystem {
        let cartan = cartan_matrix(dynkin);
        let positive_roots = positive_roots(&cartan);
        let exponents = exponents(dynkin);
        let dimension = dynkin.rank() as u64 + 2 * positive_roots.len() as u64;
        let cartan_det = det_bareiss(&cartan);
        assert!(cartan_det > 0, "Cartan determinant must be positive");
        RootSystem {
            dynkin,
            cartan,
            positive_roots,
            exponents,
            dimension,
            cartan_det: cartan_det as u64,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> u32 {
        self.dynkin.rank()
    }

    /// `cartan()[i][j]` is the pairing of the i-th simple root with the
    /// j-th simple coroot.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height then
    /// lexicographically. All coordinates are nonnegative and the simple
    /// roots (unit vectors) appear first.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Sorted exponents; their multiset determines everything this crate
    /// computes downstream.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Dimension of the adjoint group: rank + number of roots.
    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    pub fn cartan_det(&self) -> u64 {
        self.cartan_det
    }

    pub fn max_exponent(&self) -> u64 {
        *self.exponents.last().expect("rank >= 1")
    }

    /// Exponents recovered from the height distribution of the positive
    /// roots: the j-th largest exponent is the number of heights at which
    /// at least j roots live (the conjugate partition of the height
    /// histogram). Independent of the closed forms, used as a cross-check.
    pub fn exponents_from_heights(&self) -> Vec<u64> {
        let mut by_height: Vec<u64> = Vec::new();
        for root in &self.positive_roots {
            let h: i64 = root.iter().sum();
            let h = h as usize;
            if by_height.len() < h {
                by_height.resize(h, 0);
            }
            by_height[h - 1] += 1;
        }
        let rank = self.rank() as u64;
        let mut exps: Vec<u64> = (1..=rank)
            .map(|j| by_height.iter().filter(|&&n| n >= j).count() as u64)
            .collect();
        exps.sort_unstable();
        exps
    }
}

/// Sorted exponent list from the classical closed forms.
pub fn exponents(dynkin: DynkinType) -> Vec<u64> {
    let r = dynkin.rank() as u64;
    let mut exps: Vec<u64> = match dynkin.family() {
        Family::A => (1..=r).collect(),
        Family::B | Family::C => (0..r).map(|j| 2 * j + 1).collect(),
        Family::D => {
            let mut v: Vec<u64> = (0..r - 1).map(|j| 2 * j + 1).collect();
            v.push(r - 1);
            v
        }
        Family::E => match r {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            _ => unreachable!("admissibility"),
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    exps.sort_unstable();
    exps
}

/// Largest exponent without building root data; cheap enough for the
/// stabilization bounds used all over the table generators.
pub fn max_exponent(dynkin: DynkinType) -> u64 {
    let r = dynkin.rank() as u64;
    match dynkin.family() {
        Family::A => r,
        Family::B | Family::C => 2 * r - 1,
        Family::D => 2 * r - 3,
        Family::E => match r {
            6 => 11,
            7 => 17,
            _ => 29,
        },
        Family::F => 11,
        Family::G => 5,
    }
}

/// Adjoint dimension via the exponent identity.
pub fn dimension(dynkin: DynkinType) -> u64 {
    exponents(dynkin).iter().map(|e| 1 + 2 * e).sum()
}

/// Determinant of the Cartan matrix, always a positive integer.
pub fn cartan_det(dynkin: DynkinType) -> u64 {
    let det = det_bareiss(&cartan_matrix(dynkin));
    assert!(det > 0);
    det as u64
}

/// Cartan matrix in Bourbaki numbering: entry (i, j) is the pairing of the
/// i-th simple root against the j-th simple coroot.
pub fn cartan_matrix(dynkin: DynkinType) -> Vec<Vec<i64>> {
    let r = dynkin.rank() as usize;
    let mut m = vec![vec![0i64; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match dynkin.family() {
        Family::A => {
            for i in 0..r - 1 {
                bond(&mut m, i, i + 1);
            }
        }
        Family::B => {
            // last simple root short: <alpha_{r-2}, alpha_{r-1}^v> = -2
            for i in 0..r - 1 {
                bond(&mut m, i, i + 1);
            }
            m[r - 2][r - 1] = -2;
        }
        Family::C => {
            // last simple root long: transpose of B_r
            for i in 0..r - 1 {
                bond(&mut m, i, i + 1);
            }
            m[r - 1][r - 2] = -2;
        }
        Family::D => {
            for i in 0..r - 2 {
                bond(&mut m, i, i + 1);
            }
            bond(&mut m, r - 3, r - 1);
            m[r - 2][r - 1] = 0;
            m[r - 1][r - 2] = 0;
        }
        Family::E => {
            // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...-r.
            bond(&mut m, 0, 2);
            bond(&mut m, 1, 3);
            for i in 2..r - 1 {
                bond(&mut m, i, i + 1);
            }
        }
        Family::F => {
            bond(&mut m, 0, 1);
            bond(&mut m, 2, 3);
            m[1][2] = -2;
            m[2][1] = -1;
        }
        Family::G => {
            m[0][1] = -1;
            m[1][0] = -3;
        }
    }
    m
}

/// Positive roots generated by closure: starting from the simple roots,
/// `beta + alpha_i` is adjoined whenever the alpha_i-string through `beta`
/// has not yet run out (`q = p - <beta, alpha_i^v> >= 1` with `p` the depth
/// of the string below `beta`).
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        found.insert(e.clone());
        frontier.push(e);
    }

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0i64;
                loop {
                    let mut lower = beta.clone();
                    lower[i] -= p + 1;
                    if lower[i] < 0 || !found.contains(&lower) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    let mut upper = beta.clone();
                    upper[i] += 1;
                    if found.insert(upper.clone()) {
                        next.push(upper);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut roots: Vec<Vec<i64>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

/// Fraction-free (Bareiss) determinant over the integers.
fn det_bareiss(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&p| a[p][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}
