//! Exact arithmetic in `Q(ζ_N)` and its subfields.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)−1}` after
//! reduction modulo the cyclotomic polynomial `Φ_N`. Subfields are fixed
//! fields `Q(ζ_N)^H` of subgroups `H ⊂ (Z/N)*`, with `σ_a: ζ ↦ ζ^a`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `Φ_N` as integer coefficients, lowest degree first, from
/// `Φ_N = ∏_{d | N} (x^d − 1)^{μ(N/d)}`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0, "conductor must be positive");
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    // all multiplications first, so every division is exact
    let mut num = alloc::vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            num = times_binomial(&num, d as usize);
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            num = over_binomial(&num, d as usize);
        }
    }
    num
}

fn mobius(mut m: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `p · (x^d − 1)`.
fn times_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// `p / (x^d − 1)` when the division is exact; `p_i = q_{i−d} − q_i`.
fn over_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut q: Vec<BigInt> = Vec::with_capacity(p.len() - d);
    for i in 0..p.len() - d {
        let prev = if i >= d { q[i - d].clone() } else { BigInt::zero() };
        q.push(prev - &p[i]);
    }
    debug_assert!((0..p.len()).all(|i| {
        let lower = if i >= d && i - d < q.len() { q[i - d].clone() } else { BigInt::zero() };
        let upper = q.get(i).cloned().unwrap_or_default();
        lower - upper == p[i]
    }));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    units(n).len() as u32
}

/// `(Z/N)*` as sorted residues; `{0}` for `N = 1`.
pub fn units(n: u32) -> Vec<u32> {
    if n == 1 {
        return alloc::vec![0];
    }
    (1..n).filter(|a| a.gcd(&n) == 1).collect()
}

#[derive(Clone)]
pub struct CyclotomicNumber {
    n: u32,
    coeffs: Vec<BigRational>,
    /// `Φ_N`, shared by every value built from this one.
    modulus: Arc<Vec<BigInt>>,
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CyclotomicNumber").field("n", &self.n).field("coeffs", &self.coeffs).finish()
    }
}

impl CyclotomicNumber {
    pub fn zero(n: u32) -> Self {
        Self { n, coeffs: Vec::new(), modulus: Arc::new(cyclotomic_polynomial(n)) }
    }

    pub fn one(n: u32) -> Self {
        Self::rational(n, BigRational::one())
    }

    pub fn rational(n: u32, q: BigRational) -> Self {
        Self::from_dense(n, alloc::vec![q])
    }

    pub fn from_integer(n: u32, v: i64) -> Self {
        Self::rational(n, BigRational::from_integer(v.into()))
    }

    /// `ζ_N^i`.
    pub fn zeta_pow(n: u32, i: i64) -> Self {
        let e = i.rem_euclid(n as i64) as usize;
        let mut dense = alloc::vec![BigRational::zero(); e + 1];
        dense[e] = BigRational::one();
        Self::from_dense(n, dense)
    }

    /// `Σ c_i ζ_N^i` for arbitrary exponents `i`.
    pub fn from_coords(n: u32, coords: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        Self::zero(n).with_coords(coords)
    }

    fn from_dense(n: u32, dense: Vec<BigRational>) -> Self {
        Self::zero(n).with_dense(dense)
    }

    /// A value of the same conductor, reusing `Φ_N`.
    fn with_coords(&self, coords: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut dense = alloc::vec![BigRational::zero(); self.n as usize];
        for (i, c) in coords {
            dense[i.rem_euclid(self.n as i64) as usize] += c;
        }
        self.with_dense(dense)
    }

    fn with_dense(&self, mut dense: Vec<BigRational>) -> Self {
        let n = self.n as usize;
        // reduce x^i for i ≥ N first, then modulo Φ_N
        if dense.len() > n {
            let extra = dense.split_off(n);
            for (i, c) in extra.into_iter().enumerate() {
                dense[i % n] += c;
            }
        }
        let phi = &self.modulus;
        let deg = phi.len() - 1;
        for i in (deg..dense.len()).rev() {
            let c = core::mem::replace(&mut dense[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pc) in phi.iter().enumerate().take(deg) {
                if pc.is_zero() {
                    continue;
                }
                let target = &mut dense[i - deg + j];
                if pc.is_one() {
                    *target -= &c;
                } else if (-pc).is_one() {
                    *target += &c;
                } else {
                    *target -= c.clone() * pc.clone();
                }
            }
        }
        while dense.last().is_some_and(Zero::is_zero) {
            dense.pop();
        }
        Self { n: self.n, coeffs: dense, modulus: self.modulus.clone() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Non-zero coordinates keyed by power of `ζ_N`.
    pub fn coords(&self) -> BTreeMap<u32, BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.clone()))
            .collect()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Image in `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.n) {
            return Err(Error::OutOfDomain(format!("{m} is not a multiple of {}", self.n)));
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let step = (m / self.n) as i64;
        Ok(Self::from_coords(m, self.coords().into_iter().map(|(i, c)| (i as i64 * step, c))))
    }

    /// `σ_a: ζ_N ↦ ζ_N^a`.
    pub fn galois(&self, a: u32) -> Result<Self> {
        let a = a % self.n;
        if self.n > 1 && a.gcd(&self.n) != 1 {
            return Err(Error::OutOfDomain(format!("{a} is not a unit modulo {}", self.n)));
        }
        Ok(self.with_coords(self.coords().into_iter().map(|(i, c)| (i as i64 * a as i64, c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.with_dense(alloc::vec![BigRational::one()]);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m).expect("lcm"), b.lift(m).expect("lcm"))
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common(self, rhs);
        let len = a.coeffs.len().max(b.coeffs.len());
        let mut dense = alloc::vec![BigRational::zero(); len];
        for (i, c) in a.coeffs.iter().enumerate() {
            dense[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            dense[i] += c;
        }
        a.with_dense(dense)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect(), modulus: self.modulus.clone() }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common(self, rhs);
        if a.is_zero() || b.is_zero() {
            return a.with_dense(Vec::new());
        }
        let mut dense = alloc::vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                dense[i + j] += x * y;
            }
        }
        a.with_dense(dense)
    }
}

/// `1/2 + ζ15^2 - 1/3ζ15^4`.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coords() {
            let neg = c < BigRational::zero();
            let abs = if neg { -c } else { c };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "ζ{}^{i}", self.n)?,
                (_, false) => write!(f, "{abs}ζ{}^{i}", self.n)?,
            }
        }
        Ok(())
    }
}

/// `Q(ζ_N)^H` for a subgroup `H ⊂ (Z/N)*`.
///
/// Stored in the smallest conductor that contains the field, so derived
/// equality is equality of fields.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclotomicSubfield {
    n: u32,
    subgroup: BTreeSet<u32>,
}

impl CyclotomicSubfield {
    /// The fixed field of the subgroup generated by `gens`.
    pub fn new(n: u32, gens: &[u32]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubgroup("conductor 0".into()));
        }
        for &g in gens {
            if n > 1 && (g % n).gcd(&n) != 1 {
                return Err(Error::InvalidSubgroup(format!("{g} is not a unit modulo {n}")));
            }
        }
        let gens: Vec<u32> = gens.iter().map(|g| g % n).collect();
        Ok(Self::from_subgroup(n, generate(n, &gens)))
    }

    /// `Q`.
    pub fn rationals() -> Self {
        Self { n: 1, subgroup: BTreeSet::from([0]) }
    }

    /// `Q(ζ_N)` itself.
    pub fn full(n: u32) -> Self {
        Self::from_subgroup(n, BTreeSet::from([1 % n]))
    }

    /// Takes a subgroup that is already closed.
    pub fn from_subgroup(n: u32, subgroup: BTreeSet<u32>) -> Self {
        Self { n, subgroup }.minimized()
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn subgroup(&self) -> &BTreeSet<u32> {
        &self.subgroup
    }

    /// A small generating set of `H`, greedily chosen.
    pub fn generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = BTreeSet::from([1 % self.n]);
        for &h in &self.subgroup {
            if !span.contains(&h) {
                gens.push(h);
                span = generate(self.n, &gens);
            }
        }
        gens
    }

    pub fn degree(&self) -> u32 {
        euler_phi(self.n) / self.subgroup.len() as u32
    }

    pub fn is_rationals(&self) -> bool {
        self.n == 1
    }

    /// `H` pulled back along `(Z/M)* → (Z/N)*`.
    pub fn lifted_subgroup(&self, m: u32) -> Result<BTreeSet<u32>> {
        if m == 0 || !m.is_multiple_of(self.n) {
            return Err(Error::OutOfDomain(format!("{m} is not a multiple of {}", self.n)));
        }
        Ok(units(m).into_iter().filter(|a| self.subgroup.contains(&(a % self.n))).collect())
    }

    pub fn contains(&self, x: &CyclotomicNumber) -> bool {
        let m = self.n.lcm(&x.conductor());
        let Ok(x) = x.lift(m) else { return false };
        let h = self.lifted_subgroup(m).expect("lcm");
        h.iter().all(|&a| x.galois(a).expect("unit") == x)
    }

    fn minimized(self) -> Self {
        let mut divisors: Vec<u32> = (1..=self.n).filter(|d| self.n.is_multiple_of(*d)).collect();
        divisors.sort();
        for m in divisors {
            // the field lives in Q(ζ_m) iff ker((Z/N)* → (Z/m)*) ⊂ H
            let kernel_inside = units(self.n)
                .into_iter()
                .filter(|a| a % m == 1 % m)
                .all(|a| self.subgroup.contains(&a));
            if kernel_inside {
                let image = self.subgroup.iter().map(|a| a % m).collect();
                return Self { n: m, subgroup: image };
            }
        }
        unreachable!("m = N always qualifies")
    }
}

impl fmt::Display for CyclotomicSubfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            return f.write_str("Q");
        }
        if self.subgroup.len() == 1 {
            return write!(f, "Q(ζ{})", self.n);
        }
        write!(f, "Q(ζ{})^<", self.n)?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// Subgroup of `(Z/N)*` generated by `gens`.
pub fn generate(n: u32, gens: &[u32]) -> BTreeSet<u32> {
    let mut group = BTreeSet::from([1 % n]);
    let mut frontier: Vec<u32> = alloc::vec![1 % n];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ((x as u64 * g as u64) % n as u64) as u32;
            if group.insert(y) {
                frontier.push(y);
            }
        }
    }
    group
}

/// Smallest subfield containing all of `fields`.
pub fn compositum(fields: &[CyclotomicSubfield]) -> CyclotomicSubfield {
    let m = fields.iter().fold(1u32, |acc, f| acc.lcm(&f.n));
    let mut h: BTreeSet<u32> = units(m).into_iter().collect();
    for f in fields {
        let lifted = f.lifted_subgroup(m).expect("lcm");
        h = h.intersection(&lifted).copied().collect();
    }
    CyclotomicSubfield::from_subgroup(m, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n).iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(1), [-1, 1]);
        assert_eq!(as_i64(3), [1, 1, 1]);
        assert_eq!(as_i64(8), [1, 0, 0, 0, 1]);
        assert_eq!(as_i64(12), [1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len() - 1, 8);
    }

    #[test]
    fn arithmetic() {
        let z3 = CyclotomicNumber::zeta_pow(3, 1);
        let sum = &(&z3 + &z3.pow(2)) + &CyclotomicNumber::one(3);
        assert!(sum.is_zero());
        assert_eq!(z3.pow(3), CyclotomicNumber::one(3));
        let z4 = CyclotomicNumber::zeta_pow(4, 1);
        assert_eq!(z4.pow(2), CyclotomicNumber::from_integer(4, -1));
        // ζ_3 lifted to conductor 15 is ζ_15^5
        assert_eq!(z3.lift(15).unwrap(), CyclotomicNumber::zeta_pow(15, 5));
        assert_eq!(z3, CyclotomicNumber::zeta_pow(15, 5));
        let x = CyclotomicNumber::from_coords(15, [(1, q(1, 2)), (2, q(-1, 3))]);
        assert_eq!(x.coords().get(&1), Some(&q(1, 2)));
    }

    #[test]
    fn galois_action() {
        let z5 = CyclotomicNumber::zeta_pow(5, 1);
        let x = &CyclotomicNumber::one(5) + &z5;
        for a in 2..5 {
            assert_ne!(x.galois(a).unwrap(), x);
        }
        assert_eq!(x.galois(1).unwrap(), x);
        assert!(z5.galois(5).is_err());
    }

    #[test]
    fn subfields() {
        assert_eq!(CyclotomicSubfield::new(8, &[1, 3, 5, 7]).unwrap(), CyclotomicSubfield::rationals());
        // Q(ζ_8)^<7> = Q(√2) has conductor 8, Q(ζ_8)^<5> = Q(i) has conductor 4
        assert_eq!(CyclotomicSubfield::new(8, &[5]).unwrap(), CyclotomicSubfield::full(4));
        assert_eq!(CyclotomicSubfield::new(8, &[7]).unwrap().conductor(), 8);
        let c = compositum(&[CyclotomicSubfield::full(3), CyclotomicSubfield::full(5)]);
        assert_eq!(c, CyclotomicSubfield::full(15));
        let a = CyclotomicSubfield::new(8, &[3]).unwrap();
        let b = CyclotomicSubfield::new(8, &[5]).unwrap();
        assert_eq!(compositum(&[a.clone(), b]), CyclotomicSubfield::full(8));
        assert_eq!(compositum(&[a.clone(), CyclotomicSubfield::rationals()]), a);
        assert_eq!(CyclotomicSubfield::full(6), CyclotomicSubfield::full(3));
        assert!(CyclotomicSubfield::new(8, &[2]).is_err());
    }
}
