//! Roots of `gl_2k(C)` with respect to the theta-stable Cartan of `gl_k(H)`
//! or `gl_2k(R)`, and the nilradical `u` cut out by a partition.
//!
//! Both real forms share the root system
//! `{±e_i ± e_j ± (f_i − f_j)} ∪ {±2e_i}`; they differ only in which root
//! spaces are non-compact.

use alloc::vec::Vec;

use crate::partitions::{block_assignment, OrderedPartition};
use crate::{Error, Result};

/// Real form at a non-split (or split) real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// `GL_n(R)`; partitions are partitions of `n` with even parts.
    SplitReal(u32),
    /// `GL_k(H)`; partitions are partitions of `k`.
    Quaternionic(u32),
}

impl GroupKind {
    /// The quaternionic rank `k` (`n = 2k` on the split side).
    pub fn rank(self) -> Result<u32> {
        match self {
            GroupKind::Quaternionic(k) => Ok(k),
            GroupKind::SplitReal(n) if n % 2 == 0 => Ok(n / 2),
            GroupKind::SplitReal(n) => {
                Err(Error::OutOfDomain(alloc::format!("GL_{n}(R) with n odd has no quaternionic form")))
            }
        }
    }

    /// Matrix size `n = 2k` of the split form.
    pub fn n(self) -> u32 {
        match self {
            GroupKind::Quaternionic(k) => 2 * k,
            GroupKind::SplitReal(n) => n,
        }
    }

    pub fn is_split(self) -> bool {
        matches!(self, GroupKind::SplitReal(_))
    }

    /// The partition of `k` governing roots for a partition attached to this
    /// group: the partition itself on the quaternionic side, halved on the
    /// split side.
    pub fn k_partition(self, p: &OrderedPartition) -> Result<OrderedPartition> {
        let (expected, k_part) = match self {
            GroupKind::Quaternionic(k) => (k, p.clone()),
            GroupKind::SplitReal(n) => (n, p.halved()?),
        };
        if p.total() != expected {
            return Err(Error::RankMismatch { expected, found: p.total() });
        }
        Ok(k_part)
    }
}

/// A root `Σ c_i e_i + f (f_i − f_j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub e_coeffs: Vec<i8>,
    /// Sign of the `(f_i − f_j)` component; 0 for the roots `±2e_i`.
    pub f_part: i8,
}

impl Root {
    fn pair(k: usize, i: usize, si: i8, j: usize, sj: i8, f: i8) -> Self {
        let mut e_coeffs = alloc::vec![0i8; k];
        e_coeffs[i] = si;
        e_coeffs[j] = sj;
        Root { e_coeffs, f_part: f }
    }

    fn long(k: usize, i: usize, s: i8) -> Self {
        let mut e_coeffs = alloc::vec![0i8; k];
        e_coeffs[i] = 2 * s;
        Root { e_coeffs, f_part: 0 }
    }

    pub fn is_long(&self) -> bool {
        self.f_part == 0
    }

    fn pairing(&self, labels: &[u32]) -> i64 {
        self.e_coeffs.iter().zip(labels).map(|(&c, &b)| c as i64 * b as i64).sum()
    }
}

/// All `4k² − 2k` roots for rank `k`.
pub fn all_roots(k: u32) -> Vec<Root> {
    let k = k as usize;
    let mut out = Vec::with_capacity(4 * k * k);
    for i in 0..k {
        for j in (i + 1)..k {
            for si in [1i8, -1] {
                for sj in [1i8, -1] {
                    for f in [1i8, -1] {
                        out.push(Root::pair(k, i, si, j, sj, f));
                    }
                }
            }
        }
        out.push(Root::long(k, i, 1));
        out.push(Root::long(k, i, -1));
    }
    out
}

/// Roots `α` with `α(x) > 0` for the point `x` attached to the partition.
pub fn u_roots(p: &OrderedPartition, kind: GroupKind) -> Result<Vec<Root>> {
    let kp = kind.k_partition(p)?;
    let labels = block_assignment(&kp);
    Ok(all_roots(kp.total())
        .into_iter()
        .filter(|root| root.pairing(labels.values()) > 0)
        .collect())
}

/// Whether the root space of `root` contributes a non-compact weight.
///
/// Each weight `±e_i ± e_j` carries two root spaces (the `f`-variants); one
/// is compact and one is not, for both real forms. The weights `±2e_i` are
/// compact for `GL_k(H)` and non-compact for `GL_n(R)`.
fn counts_in_p(root: &Root, split: bool) -> bool {
    if root.is_long() {
        split
    } else {
        root.f_part == 1
    }
}

/// `dim(u ∩ p_C)`, counted with multiplicity.
pub fn dim_u_cap_p(p: &OrderedPartition, kind: GroupKind) -> Result<u32> {
    let split = kind.is_split();
    Ok(u_roots(p, kind)?.iter().filter(|r| counts_in_p(r, split)).count() as u32)
}

/// The set `Δ(u ∩ p_C, t_C)` of `e`-parts, sorted and deduplicated.
pub fn u_cap_p_weights(p: &OrderedPartition, kind: GroupKind) -> Result<Vec<Vec<i8>>> {
    let split = kind.is_split();
    let mut out: Vec<Vec<i8>> = u_roots(p, kind)?
        .into_iter()
        .filter(|r| counts_in_p(r, split))
        .map(|r| r.e_coeffs)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `ρ(u)` in `e`-coordinates: half the sum of the roots of `u` with
/// multiplicity. The `f`-components cancel in pairs.
pub fn rho_u(p: &OrderedPartition, kind: GroupKind) -> Result<Vec<i64>> {
    let kp = kind.k_partition(p)?;
    let k = kp.total() as usize;
    let mut twice = alloc::vec![0i64; k];
    for root in u_roots(p, kind)? {
        for (acc, c) in twice.iter_mut().zip(&root.e_coeffs) {
            *acc += *c as i64;
        }
    }
    debug_assert!(twice.iter().all(|v| v % 2 == 0));
    Ok(twice.into_iter().map(|v| v / 2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> OrderedPartition {
        OrderedPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn u_root_examples() {
        let h2 = GroupKind::Quaternionic(2);
        let roots = u_roots(&p(&[0, 1, 1]), h2).unwrap();
        assert_eq!(roots.len(), 6);
        assert!(roots.contains(&Root { e_coeffs: vec![1, -1], f_part: 1 }));
        assert!(roots.contains(&Root { e_coeffs: vec![1, -1], f_part: -1 }));
        assert!(roots.contains(&Root { e_coeffs: vec![0, 2], f_part: 0 }));
        assert!(u_roots(&p(&[2]), h2).unwrap().is_empty());
        let roots = u_roots(&p(&[0, 2]), h2).unwrap();
        assert_eq!(roots.len(), 4);
        assert!(!roots.iter().any(|r| r.e_coeffs == vec![1, -1]));
    }

    #[test]
    fn root_count() {
        for k in 1..6 {
            assert_eq!(all_roots(k).len() as u32, 4 * k * k - 2 * k);
        }
    }

    #[test]
    fn dims() {
        for k in 1..6 {
            let temp = OrderedPartition::tempered(k).unwrap();
            assert_eq!(dim_u_cap_p(&temp, GroupKind::Quaternionic(k)).unwrap(), k * (k - 1));
            assert_eq!(dim_u_cap_p(&temp.doubled(), GroupKind::SplitReal(2 * k)).unwrap(), k * k);
        }
        assert_eq!(dim_u_cap_p(&p(&[0, 4]), GroupKind::SplitReal(4)).unwrap(), 3);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_u(&p(&[0, 2]), GroupKind::Quaternionic(2)).unwrap(), vec![2, 2]);
        assert_eq!(rho_u(&p(&[3]), GroupKind::Quaternionic(3)).unwrap(), vec![0, 0, 0]);
        for k in 1..7u32 {
            let rho = rho_u(&OrderedPartition::tempered(k).unwrap(), GroupKind::Quaternionic(k)).unwrap();
            let expected: Vec<i64> = (1..=k as i64).map(|j| 2 * (k as i64 - j) + 1).collect();
            assert_eq!(rho, expected);
        }
    }

    #[test]
    fn split_kind_checks_parts() {
        assert_eq!(
            dim_u_cap_p(&p(&[1, 3]), GroupKind::SplitReal(4)),
            Err(Error::OddPart { part: 1 })
        );
        assert_eq!(
            dim_u_cap_p(&p(&[0, 2]), GroupKind::SplitReal(6)),
            Err(Error::RankMismatch { expected: 6, found: 2 })
        );
    }
}
