//! Satake parameters at unramified places, Hecke eigenvalues and local
//! rationality fields.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::cyclotomic::{units, CyclotomicNumber, CyclotomicSubfield};
use crate::{Error, Result};

/// Normalized Satake parameters `α_1, …, α_n`, all lifted to one conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeParams {
    alphas: Vec<CyclotomicNumber>,
}

impl SatakeParams {
    pub fn new(alphas: Vec<CyclotomicNumber>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::OutOfDomain("no Satake parameters".into()));
        }
        let m = alphas.iter().fold(1u32, |acc, a| acc.lcm(&a.conductor()));
        let alphas = alphas.iter().map(|a| a.lift(m)).collect::<Result<_>>()?;
        Ok(Self { alphas })
    }

    pub fn alphas(&self) -> &[CyclotomicNumber] {
        &self.alphas
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn conductor(&self) -> u32 {
        self.alphas[0].conductor()
    }

    /// Equality of the `α` as multisets.
    pub fn same_multiset(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let mut used = alloc::vec![false; other.n()];
        self.alphas.iter().all(|a| {
            let hit = other.alphas.iter().enumerate().find(|(i, b)| !used[*i] && *b == a);
            match hit {
                Some((i, _)) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }
}

/// `(f_1(α), …, f_n(α))`, the eigenvalues of `T_{v,1}, …, T_{v,n}`.
pub fn hecke_eigenvalues(s: &SatakeParams) -> Vec<CyclotomicNumber> {
    let n = s.n();
    let m = s.conductor();
    let mut e = alloc::vec![CyclotomicNumber::zero(m); n + 1];
    e[0] = CyclotomicNumber::one(m);
    for (count, alpha) in s.alphas.iter().enumerate() {
        for j in (1..=count + 1).rev() {
            e[j] = &e[j] + &(&e[j - 1] * alpha);
        }
    }
    e.remove(0);
    e
}

/// `Q(f_1(α), …, f_n(α))`, the fixed field of the common stabilizer.
pub fn local_rationality_field(s: &SatakeParams) -> CyclotomicSubfield {
    let m = s.conductor();
    let f = hecke_eigenvalues(s);
    let stabilizer: BTreeSet<u32> = units(m)
        .into_iter()
        .filter(|&a| f.iter().all(|x| x.galois(a).expect("unit") == *x))
        .collect();
    CyclotomicSubfield::from_subgroup(m, stabilizer)
}

/// `σ_a` applied to every `α_j`; `a` is read modulo the common conductor.
pub fn sigma_twist_satake(s: &SatakeParams, a: u32) -> Result<SatakeParams> {
    let alphas = s.alphas.iter().map(|x| x.galois(a)).collect::<Result<_>>()?;
    Ok(SatakeParams { alphas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z(n: u32, i: i64) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(n, i)
    }

    #[test]
    fn eigenvalue_examples() {
        let s = SatakeParams::new(vec![z(3, 1), z(3, 2), CyclotomicNumber::one(1)]).unwrap();
        let f = hecke_eigenvalues(&s);
        assert!(f[0].is_zero() && f[1].is_zero());
        assert_eq!(f[2], CyclotomicNumber::one(3));
        assert!(local_rationality_field(&s).is_rationals());

        let ones = SatakeParams::new(vec![CyclotomicNumber::one(1); 4]).unwrap();
        let f: Vec<_> = hecke_eigenvalues(&ones).iter().map(|x| x.as_rational().unwrap()).collect();
        let expected: Vec<_> = [4, 6, 4, 1].iter().map(|&v| num_rational::BigRational::from_integer(v.into())).collect();
        assert_eq!(f, expected);

        let s = SatakeParams::new(vec![z(5, 1), CyclotomicNumber::one(5)]).unwrap();
        let f = hecke_eigenvalues(&s);
        assert_eq!(f, vec![&z(5, 1) + &CyclotomicNumber::one(5), z(5, 1)]);
        assert_eq!(local_rationality_field(&s), CyclotomicSubfield::full(5));
    }

    #[test]
    fn twists() {
        let s = SatakeParams::new(vec![z(3, 1), z(3, 2), CyclotomicNumber::one(3)]).unwrap();
        assert_eq!(sigma_twist_satake(&s, 1).unwrap(), s);
        let t = sigma_twist_satake(&s, 2).unwrap();
        assert_ne!(t, s);
        assert!(t.same_multiset(&s));
        let s = SatakeParams::new(vec![z(5, 1), CyclotomicNumber::one(5)]).unwrap();
        let t = sigma_twist_satake(&s, 2).unwrap();
        assert_eq!(t.alphas()[0], z(5, 2));
        assert!(!t.same_multiset(&s));
    }
}
