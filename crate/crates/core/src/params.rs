//! Langlands parameters restricted to `C*` and the algebraicity, regularity
//! and purity predicates on them.

use alloc::vec::Vec;

use crate::catalog::AqModule;
use crate::roots::GroupKind;
use crate::{Error, Rational, Result};

/// `z ↦ ⊕ z^{p_i} z̄^{q_i}`, stored without the `|·|^{(1−n)/2}` shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeilParameter {
    n: u32,
    exponents: Vec<(Rational, Rational)>,
}

impl WeilParameter {
    pub fn new(exponents: Vec<(Rational, Rational)>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::OutOfDomain("empty parameter".into()));
        }
        let half_integral = |x: &Rational| 2 % *x.denom() == 0;
        if !exponents.iter().all(|(p, q)| half_integral(p) && half_integral(q)) {
            return Err(Error::NotHalfIntegral);
        }
        Ok(Self { n: exponents.len() as u32, exponents })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &[(Rational, Rational)] {
        &self.exponents
    }

    pub fn p_values(&self) -> Vec<Rational> {
        self.exponents.iter().map(|e| e.0).collect()
    }

    /// `(p, q) ↦ (q, p)` in every pair.
    pub fn conjugate(&self) -> Self {
        Self { n: self.n, exponents: self.exponents.iter().map(|&(p, q)| (q, p)).collect() }
    }

    /// Multiplies by `|·|_C^s`, shifting every exponent by `s`.
    pub fn twist(&self, s: Rational) -> Result<Self> {
        Self::new(self.exponents.iter().map(|&(p, q)| (p + s, q + s)).collect())
    }
}

/// Which character `z^p z̄^q` the purity weight is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    /// The stored exponents: `w = p + q`. A tempered `J(w, ℓ)` has weight `−w`.
    #[default]
    Unitary,
    /// After multiplying by `|·|_C^{(1−n)/2}`: `w = p + q + 1 − n`.
    Arithmetic,
}

/// Parameter of a split-side module, read off its Langlands data.
///
/// `D(u, l)` gives `((l−u)/2, (−l−u)/2)` and its swap; a `GL_1(R)` character
/// `sgn^ε|·|^t` gives `(t, t)`. Every exponent is then shifted by
/// `extra_twist`.
pub fn parameter_of(m: &AqModule, extra_twist: Rational) -> Result<WeilParameter> {
    if !matches!(m.kind(), GroupKind::SplitReal(_)) {
        return Err(Error::WrongGroupKind("parameters are read off split-side modules"));
    }
    let datum = m.langlands_data();
    let mut exponents = Vec::with_capacity(m.kind().n() as usize);
    for block in &datum.complex_blocks {
        let l = Rational::from(block.l as i64);
        let u = Rational::from(block.u);
        let two = Rational::from(2);
        let a = (l - u) / two;
        let b = (-l - u) / two;
        exponents.push((a + extra_twist, b + extra_twist));
        exponents.push((b + extra_twist, a + extra_twist));
    }
    for &t in &datum.anisotropic.exponents {
        exponents.push((t + extra_twist, t + extra_twist));
    }
    WeilParameter::new(exponents)
}

/// Every `p` and `q` lies in `(n−1)/2 + Z`.
pub fn is_algebraic(t: &WeilParameter) -> bool {
    let shift = Rational::new(t.n as i64 - 1, 2);
    t.exponents.iter().all(|(p, q)| (p - shift).is_integer() && (q - shift).is_integer())
}

/// Pairwise distinct `p`-values; only defined for algebraic parameters.
pub fn is_regular(t: &WeilParameter) -> Result<bool> {
    if !is_algebraic(t) {
        return Err(Error::NotAlgebraic);
    }
    let mut ps = t.p_values();
    ps.sort();
    Ok(ps.windows(2).all(|w| w[0] != w[1]))
}

/// The common integer `p + q` over all characters of all parameters, if any.
pub fn purity_weight(params: &[WeilParameter], norm: Normalization) -> Result<Option<i64>> {
    let mut common: Option<Rational> = None;
    for t in params {
        if !is_algebraic(t) {
            return Err(Error::NotAlgebraic);
        }
        let shift = match norm {
            Normalization::Unitary => Rational::from(0),
            Normalization::Arithmetic => Rational::from(1 - t.n as i64),
        };
        for &(p, q) in &t.exponents {
            let w = p + q + shift;
            match common {
                None => common = Some(w),
                Some(c) if c != w => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(common.filter(|w| w.is_integer()).map(|w| w.to_integer()))
}
