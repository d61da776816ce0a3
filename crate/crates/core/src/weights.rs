//! Highest weights, essential self-duality, the block weight `λ` and the
//! place permutations used by `σ`-twists.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{block_assignment, OrderedPartition};
use crate::{Error, Result};

/// A dominant integral weight `μ_1 ≥ … ≥ μ_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::OutOfDomain("empty highest weight".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant);
        }
        Ok(Self(entries))
    }

    pub fn zero(n: usize) -> Self {
        Self(alloc::vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Weight at an archimedean place: one tuple at a real place, a pair of
/// tuples (for `ι` and `ῑ`) at a complex place.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArchWeight {
    Real(HighestWeight),
    Complex(HighestWeight, HighestWeight),
}

/// `(w, λ)` with `λ_j = μ_j − μ_{n+1−j}` and `μ_j + μ_{n+1−j} = w`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SelfDualData {
    pub w: i64,
    pub lambda: Vec<i64>,
}

impl SelfDualData {
    /// Builds the data directly; `λ` must be non-increasing with `λ_k ≥ 0`.
    pub fn new(w: i64, lambda: Vec<i64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::OutOfDomain("empty λ".into()));
        }
        if lambda.windows(2).any(|p| p[0] < p[1]) || *lambda.last().unwrap() < 0 {
            return Err(Error::NotDominant);
        }
        Ok(Self { w, lambda })
    }

    pub fn k(&self) -> usize {
        self.lambda.len()
    }

    /// Recovers `μ` from `(w, λ)` when `λ_j + w` is even for every `j`.
    pub fn highest_weight(&self) -> Option<HighestWeight> {
        let k = self.lambda.len();
        let mut mu = alloc::vec![0i64; 2 * k];
        for (j, &l) in self.lambda.iter().enumerate() {
            if (l + self.w).rem_euclid(2) != 0 {
                return None;
            }
            mu[j] = (l + self.w) / 2;
            mu[2 * k - 1 - j] = (self.w - l) / 2;
        }
        HighestWeight::new(mu).ok()
    }
}

/// The common value `w` of `μ_i + μ_{n−i+1}`, if there is one.
pub fn essentially_selfdual(mu: &HighestWeight) -> Option<i64> {
    let e = mu.entries();
    let n = e.len();
    let w = e[0] + e[n - 1];
    (0..n).all(|i| e[i] + e[n - 1 - i] == w).then_some(w)
}

/// Strictly decreasing entries.
pub fn is_regular(mu: &HighestWeight) -> bool {
    mu.entries().windows(2).all(|w| w[0] > w[1])
}

pub fn selfdual_data(mu: &HighestWeight) -> Result<SelfDualData> {
    let n = mu.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OutOfDomain("self-dual data needs n = 2k".into()));
    }
    let w = essentially_selfdual(mu).ok_or(Error::NotSelfDual)?;
    let e = mu.entries();
    let lambda = (0..n / 2).map(|j| e[j] - e[n - 1 - j]).collect();
    Ok(SelfDualData { w, lambda })
}

/// `λ` is constant on every block of the partition and vanishes on the zero
/// block.
pub fn is_admissible(data: &SelfDualData, p: &OrderedPartition) -> bool {
    if p.total() as usize != data.lambda.len() {
        return false;
    }
    let labels = block_assignment(p);
    let lambda = &data.lambda;
    let mut block_value: BTreeMap<u32, i64> = BTreeMap::new();
    for (i, &b) in labels.values().iter().enumerate() {
        if b == 0 && lambda[i] != 0 {
            return false;
        }
        if *block_value.entry(b).or_insert(lambda[i]) != lambda[i] {
            return false;
        }
    }
    true
}

/// `⟨λ, α⟩ ≥ 0` for every root of `u`. Holds automatically for dominant,
/// block-constant `λ`; kept as an executable check.
pub fn pairs_nonnegatively_with_u(data: &SelfDualData, p: &OrderedPartition) -> bool {
    let Ok(roots) = crate::roots::u_roots(p, crate::roots::GroupKind::Quaternionic(p.total())) else {
        return false;
    };
    roots.iter().all(|root| {
        root.e_coeffs.iter().zip(&data.lambda).map(|(&c, &l)| c as i64 * l).sum::<i64>() >= 0
    })
}

/// `(w, ℓ)` with `ℓ_i = μ_i − μ_{n−i+1} + (n − 2i + 1)`.
pub fn ell_vector(mu: &HighestWeight) -> Result<(i64, Vec<i64>)> {
    let data = selfdual_data(mu)?;
    let n = mu.n() as i64;
    let ell: Vec<i64> = data
        .lambda
        .iter()
        .enumerate()
        .map(|(idx, &l)| l + (n - 2 * (idx as i64 + 1) + 1))
        .collect();
    assert!(
        ell.windows(2).all(|w| w[0] > w[1]) && *ell.last().unwrap() >= 1,
        "dominance forces ℓ_1 > … > ℓ_k ≥ 1"
    );
    Ok((data.w, ell))
}

/// `(^σ ν)_v = ν_{σ⁻¹ v}`. `sigma` maps each place `v` to `σ(v)`.
pub fn sigma_twist<T: Clone>(
    tuple: &BTreeMap<String, T>,
    sigma: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, T>> {
    check_permutation(tuple.keys(), sigma)?;
    Ok(tuple
        .iter()
        .map(|(v, value)| (sigma[v].clone(), value.clone()))
        .collect())
}

pub fn sigma_twist_weight(
    mu: &BTreeMap<String, ArchWeight>,
    sigma: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, ArchWeight>> {
    sigma_twist(mu, sigma)
}

fn check_permutation<'a>(
    places: impl Iterator<Item = &'a String>,
    sigma: &BTreeMap<String, String>,
) -> Result<()> {
    let domain: BTreeSet<&String> = places.collect();
    let keys: BTreeSet<&String> = sigma.keys().collect();
    let image: BTreeSet<&String> = sigma.values().collect();
    if keys != domain {
        return Err(Error::InvalidPermutation("domain differs from the place set".into()));
    }
    if image != domain {
        return Err(Error::InvalidPermutation("not a bijection of the place set".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn mu(v: &[i64]) -> HighestWeight {
        HighestWeight::new(v.to_vec()).unwrap()
    }

    fn p(parts: &[u32]) -> OrderedPartition {
        OrderedPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn self_duality() {
        assert_eq!(essentially_selfdual(&mu(&[3, 1, -1, -3])), Some(0));
        for k in (0..12).step_by(2) {
            let h = k / 2;
            assert_eq!(essentially_selfdual(&mu(&[h, h, -h, -h])), Some(0));
            assert!(!is_regular(&mu(&[h, h, -h, -h])));
        }
        assert_eq!(essentially_selfdual(&mu(&[2, 1, 0, 0])), None);
        assert!(is_regular(&mu(&[3, 1, -1, -3])));
        assert!(!is_regular(&mu(&[0, 0, 0, 0])));
        assert_eq!(HighestWeight::new(vec![0, 1]), Err(Error::NotDominant));
    }

    #[test]
    fn data_and_ell() {
        assert_eq!(selfdual_data(&mu(&[0, 0, 0, 0])).unwrap(), SelfDualData { w: 0, lambda: vec![0, 0] });
        assert_eq!(selfdual_data(&mu(&[3, 1, -1, -3])).unwrap(), SelfDualData { w: 0, lambda: vec![6, 2] });
        assert_eq!(selfdual_data(&mu(&[2, 1, 1, 0])).unwrap(), SelfDualData { w: 2, lambda: vec![2, 0] });
        assert_eq!(selfdual_data(&mu(&[2, 1, 0, 0])), Err(Error::NotSelfDual));
        assert_eq!(ell_vector(&mu(&[0, 0, 0, 0])).unwrap(), (0, vec![3, 1]));
        assert_eq!(ell_vector(&mu(&[0; 8])).unwrap(), (0, vec![7, 5, 3, 1]));
        assert_eq!(ell_vector(&mu(&[2, 1, 1, 0])).unwrap(), (2, vec![5, 1]));
        let data = selfdual_data(&mu(&[2, 1, 1, 0])).unwrap();
        assert_eq!(data.highest_weight().unwrap(), mu(&[2, 1, 1, 0]));
    }

    #[test]
    fn admissibility() {
        let zero = SelfDualData { w: 0, lambda: vec![0, 0] };
        for part in crate::partitions::enumerate_partitions(2).unwrap() {
            assert!(is_admissible(&zero, &part));
        }
        let l = SelfDualData { w: 0, lambda: vec![6, 2] };
        assert!(is_admissible(&l, &p(&[0, 1, 1])));
        assert!(!is_admissible(&l, &p(&[0, 2])));
        assert!(!is_admissible(&l, &p(&[2])));
        assert!(!is_admissible(&l, &p(&[1, 1])));
        assert!(pairs_nonnegatively_with_u(&l, &p(&[0, 1, 1])));
    }

    #[test]
    fn twist_places() {
        let mut tuple = BTreeMap::new();
        tuple.insert("v1".to_string(), ArchWeight::Real(mu(&[1, 0])));
        tuple.insert("v2".to_string(), ArchWeight::Real(mu(&[2, 0])));
        let mut id = BTreeMap::new();
        id.insert("v1".to_string(), "v1".to_string());
        id.insert("v2".to_string(), "v2".to_string());
        assert_eq!(sigma_twist_weight(&tuple, &id).unwrap(), tuple);
        let mut swap = BTreeMap::new();
        swap.insert("v1".to_string(), "v2".to_string());
        swap.insert("v2".to_string(), "v1".to_string());
        let twisted = sigma_twist_weight(&tuple, &swap).unwrap();
        assert_eq!(twisted["v1"], tuple["v2"]);
        assert_eq!(twisted["v2"], tuple["v1"]);
        let mut bad = BTreeMap::new();
        bad.insert("v1".to_string(), "v1".to_string());
        bad.insert("v2".to_string(), "v1".to_string());
        assert!(matches!(sigma_twist_weight(&tuple, &bad), Err(Error::InvalidPermutation(_))));
    }
}
