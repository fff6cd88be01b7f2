//! Fibonacci anyon algebra: charges, fusion rules, fusion trees, and the
//! F and R symbols together with residual checks of the pentagon and
//! hexagon consistency identities.
//!
//! Every symbol lookup is total: index combinations that are not allowed by
//! the fusion rules return zero, so the consistency sums can run over all
//! `2^k` charge assignments without special cases.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

/// Inverse golden ratio, `(sqrt(5) - 1) / 2`.
pub const TAU: f64 = 0.618_033_988_749_894_9;

/// Topological charge of the Fibonacci model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Charge {
    Vacuum,
    Tau,
}

impl Charge {
    pub const ALL: [Charge; 2] = [Charge::Vacuum, Charge::Tau];

    /// Numeric label, `0` for the vacuum and `1` for the anyon.
    pub fn label(self) -> usize {
        match self {
            Charge::Vacuum => 0,
            Charge::Tau => 1,
        }
    }

    pub fn from_label(label: usize) -> Option<Charge> {
        match label {
            0 => Some(Charge::Vacuum),
            1 => Some(Charge::Tau),
            _ => None,
        }
    }

    /// Both charges are self-dual.
    pub fn dual(self) -> Charge {
        self
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Admissible outcomes of fusing `a` with `b`, ordered vacuum first.
pub fn fuse(a: Charge, b: Charge) -> &'static [Charge] {
    match (a, b) {
        (Charge::Vacuum, Charge::Vacuum) => &[Charge::Vacuum],
        (Charge::Vacuum, Charge::Tau) | (Charge::Tau, Charge::Vacuum) => &[Charge::Tau],
        (Charge::Tau, Charge::Tau) => &[Charge::Vacuum, Charge::Tau],
    }
}

/// Fusion multiplicity `N^c_{ab}`, always 0 or 1 in this model.
pub fn multiplicity(a: Charge, b: Charge, c: Charge) -> u8 {
    u8::from(fuse(a, b).contains(&c))
}

fn admissible(a: Charge, b: Charge, c: Charge) -> bool {
    multiplicity(a, b, c) == 1
}

/// Left-to-right fusion tree over a row of leaves.
///
/// `intermediates[k]` is the cumulative charge after fusing leaves
/// `0..=k+1`; the last intermediate equals `total`. A single-leaf tree has
/// no intermediates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionTree {
    pub leaves: Vec<Charge>,
    pub intermediates: Vec<Charge>,
    pub total: Charge,
}

impl FusionTree {
    /// Checks that every fusion vertex of the tree is admissible.
    pub fn is_admissible(&self) -> bool {
        if self.leaves.is_empty() {
            return self.intermediates.is_empty() && self.total == Charge::Vacuum;
        }
        if self.intermediates.len() + 1 != self.leaves.len() {
            return false;
        }
        let mut acc = self.leaves[0];
        for (leaf, &next) in self.leaves[1..].iter().zip(&self.intermediates) {
            if !admissible(acc, *leaf, next) {
                return false;
            }
            acc = next;
        }
        acc == self.total
    }
}

/// Number of fusion trees over `n` Tau leaves with the given total charge,
/// or summed over both totals when `total` is `None`.
pub fn fusion_space_dim(n: usize, total: Option<Charge>) -> u64 {
    // counts[c] = number of partial trees whose running charge is c
    let mut counts = [1u64, 0u64];
    for _ in 0..n {
        let mut next = [0u64; 2];
        for acc in Charge::ALL {
            for &out in fuse(acc, Charge::Tau) {
                next[out.label()] += counts[acc.label()];
            }
        }
        counts = next;
    }
    match total {
        Some(c) => counts[c.label()],
        None => counts.iter().sum(),
    }
}

/// All fusion trees over `n` Tau leaves with the given total, ordered
/// lexicographically by intermediates with `Vacuum < Tau`.
///
/// For `n = 3` and total Tau, index 0 is the qubit state `|0>` (first pair
/// fuses to the vacuum) and index 1 is `|1>`.
pub fn enumerate_basis(n: usize, total: Charge) -> Vec<FusionTree> {
    if n == 0 {
        return Vec::new();
    }
    let leaves = vec![Charge::Tau; n];
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n - 1);
    extend_trees(&leaves, Charge::Tau, &mut path, total, &mut out);
    out
}

fn extend_trees(
    leaves: &[Charge],
    acc: Charge,
    path: &mut Vec<Charge>,
    total: Charge,
    out: &mut Vec<FusionTree>,
) {
    let depth = path.len() + 1;
    if depth == leaves.len() {
        if acc == total {
            out.push(FusionTree {
                leaves: leaves.to_vec(),
                intermediates: path.clone(),
                total,
            });
        }
        return;
    }
    for &next in fuse(acc, leaves[depth]) {
        path.push(next);
        extend_trees(leaves, next, path, total, out);
        path.pop();
    }
}

fn symbol_index(charges: &[Charge]) -> usize {
    charges.iter().fold(0, |idx, c| (idx << 1) | c.label())
}

/// Table of `(F^d_{abc})^i_j`, the change of basis between the fusion trees
/// `((a b)_i c)_d` and `(a (b c)_j)_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct FSymbolTable {
    entries: [Complex64; 64],
}

impl FSymbolTable {
    /// The Fibonacci solution. Only `F^1_{111}` is non-trivial; every other
    /// admissible entry is 1.
    pub fn fibonacci() -> Self {
        let sqrt_tau = TAU.sqrt();
        let nontrivial = [[TAU, sqrt_tau], [sqrt_tau, -TAU]];
        let mut entries = [Complex64::new(0.0, 0.0); 64];
        for a in Charge::ALL {
            for b in Charge::ALL {
                for c in Charge::ALL {
                    for d in Charge::ALL {
                        for i in Charge::ALL {
                            for j in Charge::ALL {
                                let ok = admissible(a, b, i)
                                    && admissible(i, c, d)
                                    && admissible(b, c, j)
                                    && admissible(a, j, d);
                                if !ok {
                                    continue;
                                }
                                let all_tau = [a, b, c, d].iter().all(|&x| x == Charge::Tau);
                                let value = if all_tau {
                                    nontrivial[i.label()][j.label()]
                                } else {
                                    1.0
                                };
                                entries[symbol_index(&[a, b, c, d, i, j])] =
                                    Complex64::new(value, 0.0);
                            }
                        }
                    }
                }
            }
        }
        Self { entries }
    }

    pub fn get(&self, a: Charge, b: Charge, c: Charge, d: Charge, i: Charge, j: Charge) -> Complex64 {
        self.entries[symbol_index(&[a, b, c, d, i, j])]
    }

    /// Overwrites one entry. Intended for building deliberately inconsistent
    /// tables when exercising the verifiers.
    pub fn set(&mut self, index: [Charge; 6], value: Complex64) {
        self.entries[symbol_index(&index)] = value;
    }

    /// The 2x2 block `(F^d_{abc})^i_j` indexed by `[i][j]`.
    pub fn matrix(&self, a: Charge, b: Charge, c: Charge, d: Charge) -> [[Complex64; 2]; 2] {
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in Charge::ALL {
            for j in Charge::ALL {
                m[i.label()][j.label()] = self.get(a, b, c, d, i, j);
            }
        }
        m
    }
}

impl Default for FSymbolTable {
    fn default() -> Self {
        Self::fibonacci()
    }
}

/// Table of `R^c_{ab}`, the phase from a clockwise exchange of `a` and `b`
/// fused to `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct RSymbolTable {
    entries: [Complex64; 8],
}

impl RSymbolTable {
    pub fn fibonacci() -> Self {
        let mut entries = [Complex64::new(0.0, 0.0); 8];
        for a in Charge::ALL {
            for b in Charge::ALL {
                for c in Charge::ALL {
                    if !admissible(a, b, c) {
                        continue;
                    }
                    let value = match (a, b, c) {
                        (Charge::Tau, Charge::Tau, Charge::Vacuum) => {
                            Complex64::from_polar(1.0, -4.0 * PI / 5.0)
                        }
                        (Charge::Tau, Charge::Tau, Charge::Tau) => {
                            Complex64::from_polar(1.0, 3.0 * PI / 5.0)
                        }
                        _ => Complex64::new(1.0, 0.0),
                    };
                    entries[symbol_index(&[a, b, c])] = value;
                }
            }
        }
        Self { entries }
    }

    pub fn get(&self, a: Charge, b: Charge, c: Charge) -> Complex64 {
        self.entries[symbol_index(&[a, b, c])]
    }

    pub fn set(&mut self, index: [Charge; 3], value: Complex64) {
        self.entries[symbol_index(&index)] = value;
    }
}

impl Default for RSymbolTable {
    fn default() -> Self {
        Self::fibonacci()
    }
}

/// `(F^d_{abc})^i_j` from the Fibonacci table.
pub fn f_symbol(a: Charge, b: Charge, c: Charge, d: Charge, i: Charge, j: Charge) -> Complex64 {
    FSymbolTable::fibonacci().get(a, b, c, d, i, j)
}

/// `R^c_{ab}` from the Fibonacci table.
pub fn r_symbol(a: Charge, b: Charge, c: Charge) -> Complex64 {
    RSymbolTable::fibonacci().get(a, b, c)
}

/// The non-trivial block `F^1_{111}` as a real 2x2 matrix.
pub fn f_matrix() -> [[f64; 2]; 2] {
    let m = FSymbolTable::fibonacci().matrix(Charge::Tau, Charge::Tau, Charge::Tau, Charge::Tau);
    [[m[0][0].re, m[0][1].re], [m[1][0].re, m[1][1].re]]
}

/// Maximum absolute residual of
/// `(F^e_{jcd})^i_k (F^e_{abk})^j_m = sum_l (F^i_{abc})^j_l (F^e_{ald})^i_m (F^m_{bcd})^l_k`
/// over all charge assignments of `a, b, c, d, e, i, j, k, m`.
pub fn verify_pentagon(f: &FSymbolTable) -> f64 {
    let mut worst = 0.0f64;
    for idx in 0..(1usize << 9) {
        let q: Vec<Charge> = (0..9)
            .map(|bit| Charge::from_label((idx >> (8 - bit)) & 1).expect("bit"))
            .collect();
        let (a, b, c, d, e, i, j, k, m) = (q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7], q[8]);
        let lhs = f.get(j, c, d, e, i, k) * f.get(a, b, k, e, j, m);
        let rhs: Complex64 = Charge::ALL
            .iter()
            .map(|&l| f.get(a, b, c, i, j, l) * f.get(a, l, d, e, i, m) * f.get(b, c, d, m, l, k))
            .sum();
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

/// Maximum absolute residual of
/// `sum_k (F^d_{cab})^i_k R^d_{kc} (F^d_{abc})^k_j = R^i_{ac} (F^d_{acb})^i_j R^j_{bc}`
/// over all charge assignments of `a, b, c, d, i, j`.
pub fn verify_hexagon(f: &FSymbolTable, r: &RSymbolTable) -> f64 {
    let mut worst = 0.0f64;
    for idx in 0..(1usize << 6) {
        let q: Vec<Charge> = (0..6)
            .map(|bit| Charge::from_label((idx >> (5 - bit)) & 1).expect("bit"))
            .collect();
        let (a, b, c, d, i, j) = (q[0], q[1], q[2], q[3], q[4], q[5]);
        let lhs: Complex64 = Charge::ALL
            .iter()
            .map(|&k| f.get(c, a, b, d, i, k) * r.get(k, c, d) * f.get(a, b, c, d, k, j))
            .sum();
        let rhs = r.get(a, c, i) * f.get(a, c, b, d, i, j) * r.get(b, c, j);
        worst = worst.max((lhs - rhs).norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use Charge::{Tau, Vacuum};

    #[test]
    fn fusion_rules() {
        assert_eq!(fuse(Vacuum, Vacuum), &[Vacuum]);
        assert_eq!(fuse(Tau, Vacuum), &[Tau]);
        assert_eq!(fuse(Vacuum, Tau), &[Tau]);
        assert_eq!(fuse(Tau, Tau), &[Vacuum, Tau]);
        for a in Charge::ALL {
            assert_eq!(a.dual(), a);
            for b in Charge::ALL {
                assert_eq!(fuse(a, b), fuse(b, a));
                for c in Charge::ALL {
                    assert!(multiplicity(a, b, c) <= 1);
                }
            }
        }
    }

    #[test]
    fn tau_is_inverse_golden_ratio() {
        assert!((TAU - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-16);
        assert!((TAU * TAU + TAU - 1.0).abs() < 1e-15);
    }

    #[test]
    fn three_anyon_dimensions() {
        assert_eq!(fusion_space_dim(3, Some(Tau)), 2);
        assert_eq!(fusion_space_dim(3, Some(Vacuum)), 1);
        assert_eq!(fusion_space_dim(0, Some(Vacuum)), 1);
        assert_eq!(fusion_space_dim(0, Some(Tau)), 0);
    }

    #[test]
    fn tau_total_dimensions_follow_fibonacci() {
        let dims: Vec<u64> = (1..=7).map(|n| fusion_space_dim(n, Some(Tau))).collect();
        assert_eq!(dims, [1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn summed_dimensions_obey_recurrence() {
        for n in 3..40 {
            assert_eq!(
                fusion_space_dim(n, None),
                fusion_space_dim(n - 1, None) + fusion_space_dim(n - 2, None)
            );
        }
    }

    #[test]
    fn dimension_matches_enumeration() {
        for n in 1..10 {
            for total in Charge::ALL {
                let trees = enumerate_basis(n, total);
                assert_eq!(trees.len() as u64, fusion_space_dim(n, Some(total)));
                assert!(trees.iter().all(FusionTree::is_admissible));
            }
        }
    }

    #[test]
    fn qubit_basis_ordering() {
        let qubit = enumerate_basis(3, Tau);
        assert_eq!(qubit.len(), 2);
        assert_eq!(qubit[0].intermediates, [Vacuum, Tau]);
        assert_eq!(qubit[1].intermediates, [Tau, Tau]);

        let nc = enumerate_basis(3, Vacuum);
        assert_eq!(nc.len(), 1);
        assert_eq!(nc[0].intermediates, [Tau, Vacuum]);

        let single = enumerate_basis(1, Tau);
        assert_eq!(single.len(), 1);
        assert!(single[0].intermediates.is_empty());
        assert!(enumerate_basis(1, Vacuum).is_empty());
    }

    #[test]
    fn inadmissible_tree_is_rejected() {
        let tree = FusionTree {
            leaves: vec![Tau, Tau, Tau],
            intermediates: vec![Vacuum, Vacuum],
            total: Vacuum,
        };
        assert!(!tree.is_admissible());
    }

    #[test]
    fn f_symbol_values() {
        assert!((f_symbol(Tau, Tau, Tau, Tau, Vacuum, Vacuum).re - 0.618_034).abs() < 1e-6);
        assert!((f_symbol(Tau, Tau, Tau, Tau, Tau, Tau).re + TAU).abs() < 1e-15);
        // ((0 1)_1 1)_0 = (0 (1 1)_0)_0 is the only admissible pair for these leaves
        assert_eq!(f_symbol(Vacuum, Tau, Tau, Vacuum, Tau, Vacuum), Complex64::new(1.0, 0.0));
        // 0 x 1 cannot give 0
        assert_eq!(f_symbol(Vacuum, Tau, Tau, Vacuum, Tau, Tau), Complex64::new(0.0, 0.0));
        assert_eq!(f_symbol(Vacuum, Tau, Tau, Vacuum, Vacuum, Vacuum), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn vacuum_entries_are_trivial() {
        let f = FSymbolTable::fibonacci();
        for a in Charge::ALL {
            for b in Charge::ALL {
                for c in Charge::ALL {
                    if [a, b, c].iter().all(|&x| x == Tau) {
                        continue;
                    }
                    for d in Charge::ALL {
                        for i in Charge::ALL {
                            for j in Charge::ALL {
                                let v = f.get(a, b, c, d, i, j);
                                assert!(v == Complex64::new(1.0, 0.0) || v == Complex64::new(0.0, 0.0));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn f_matrix_is_real_symmetric_involution() {
        let m = f_matrix();
        assert_eq!(m[0][1], m[1][0]);
        for r in 0..2 {
            for c in 0..2 {
                let sq: f64 = (0..2).map(|k| m[r][k] * m[k][c]).sum();
                let id = if r == c { 1.0 } else { 0.0 };
                assert!((sq - id).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn r_symbol_values() {
        let r0 = r_symbol(Tau, Tau, Vacuum);
        let r1 = r_symbol(Tau, Tau, Tau);
        assert!((r0 - Complex64::from_polar(1.0, -4.0 * PI / 5.0)).norm() < 1e-15);
        assert!((r1 - Complex64::from_polar(1.0, 3.0 * PI / 5.0)).norm() < 1e-15);
        assert_eq!(r_symbol(Tau, Vacuum, Tau), Complex64::new(1.0, 0.0));
        assert_eq!(r_symbol(Tau, Vacuum, Vacuum), Complex64::new(0.0, 0.0));
        for a in Charge::ALL {
            for b in Charge::ALL {
                for c in Charge::ALL {
                    let n = r_symbol(a, b, c).norm();
                    assert!(n == 0.0 || (n - 1.0).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn pentagon_holds() {
        assert!(verify_pentagon(&FSymbolTable::fibonacci()) < 1e-12);
    }

    #[test]
    fn pentagon_detects_perturbation() {
        let mut f = FSymbolTable::fibonacci();
        let idx = [Tau, Tau, Tau, Tau, Vacuum, Vacuum];
        f.set(idx, Complex64::new(TAU + 0.1, 0.0));
        assert!(verify_pentagon(&f) > 1e-3);
    }

    #[test]
    fn hexagon_holds() {
        let r = verify_hexagon(&FSymbolTable::fibonacci(), &RSymbolTable::fibonacci());
        assert!(r < 1e-12);
    }

    #[test]
    fn hexagon_detects_negated_phases() {
        let mut r = RSymbolTable::fibonacci();
        for c in Charge::ALL {
            let v = r.get(Tau, Tau, c);
            r.set([Tau, Tau, c], -v);
        }
        assert!(verify_hexagon(&FSymbolTable::fibonacci(), &r) > 1e-3);
    }

    #[test]
    fn all_vacuum_assignment_is_exact() {
        let f = FSymbolTable::fibonacci();
        let v = Vacuum;
        let lhs = f.get(v, v, v, v, v, v) * f.get(v, v, v, v, v, v);
        let rhs = f.get(v, v, v, v, v, v) * f.get(v, v, v, v, v, v) * f.get(v, v, v, v, v, v);
        assert_eq!(lhs - rhs, Complex64::new(0.0, 0.0));
    }
}
