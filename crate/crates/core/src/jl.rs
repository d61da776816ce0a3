//! The archimedean Jacquet–Langlands map `|LJ|` from `Coh_μ(GL_2k(R))` onto
//! `Coh_μ(GL_k(H))`.

use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{enumerate_coh, AqModule};
use crate::roots::GroupKind;
use crate::weights::HighestWeight;
use crate::{Error, Rational, Result};

/// Rank-one building blocks: `GL_2(R)` on the split side, `GL_1(H)` on the
/// quaternionic side.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicRep {
    /// `D(l) ⊗ |det|^{-u/2}`.
    D { u: Rational, l: u32 },
    /// `Sym^{l-1} C^2 ⊗ det'^{-u/2}`.
    F { u: Rational, l: u32 },
    /// `sgn^ε(det) |det|^s`.
    SgnDet { eps: u8, s: Rational },
    /// `det'^s`.
    DetPrime { s: Rational },
}

impl BasicRep {
    pub fn is_split_side(&self) -> bool {
        matches!(self, BasicRep::D { .. } | BasicRep::SgnDet { .. })
    }

    /// Rewrites `F(u, 1) = det'^{-u/2}` so that equal representations
    /// compare equal.
    pub fn normalized(&self) -> BasicRep {
        match *self {
            BasicRep::F { u, l: 1 } => BasicRep::DetPrime { s: -u / Rational::from(2) },
            ref other => other.clone(),
        }
    }
}

impl fmt::Display for BasicRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicRep::D { u, l } => write!(f, "D({u},{l})"),
            BasicRep::F { u, l } => write!(f, "F({u},{l})"),
            BasicRep::SgnDet { eps, s } => write!(f, "sgn^{eps}|det|^{s}"),
            BasicRep::DetPrime { s } => write!(f, "det'^{s}"),
        }
    }
}

pub fn lj_basic(r: &BasicRep) -> Result<BasicRep> {
    match *r {
        BasicRep::D { u, l } => Ok(BasicRep::F { u, l }),
        BasicRep::SgnDet { s, .. } => Ok(BasicRep::DetPrime { s }),
        BasicRep::F { .. } | BasicRep::DetPrime { .. } => Err(Error::InvalidDirection),
    }
}

/// `A_q(λ) ⊗ sgn^ε ↦ A_q'(λ)` with the partition halved and canonicalized.
pub fn transfer(m: &AqModule) -> Result<AqModule> {
    let GroupKind::SplitReal(n) = m.kind() else {
        return Err(Error::WrongGroupKind("transfer expects a split-side module"));
    };
    let k_part = m.partition().halved()?;
    AqModule::new(GroupKind::Quaternionic(n / 2), k_part, m.lambda().clone(), 0)
}

/// Every split module in `Coh_μ(GL_2k(R))` mapping to `m`.
pub fn fiber(m: &AqModule, mu: &HighestWeight) -> Result<Vec<AqModule>> {
    let GroupKind::Quaternionic(k) = m.kind() else {
        return Err(Error::WrongGroupKind("fiber expects a quaternionic module"));
    };
    let split = enumerate_coh(GroupKind::SplitReal(2 * k), mu)?;
    let mut out = Vec::new();
    for candidate in split.modules() {
        if transfer(&candidate)? == *m {
            out.push(candidate);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::OrderedPartition;
    use crate::weights::SelfDualData;
    use alloc::vec;

    fn split(parts: &[u32], eps: u8) -> AqModule {
        AqModule::new(
            GroupKind::SplitReal(4),
            OrderedPartition::new(parts.to_vec()).unwrap(),
            SelfDualData { w: 0, lambda: vec![0, 0] },
            eps,
        )
        .unwrap()
    }

    fn quat(parts: &[u32]) -> AqModule {
        AqModule::new(
            GroupKind::Quaternionic(2),
            OrderedPartition::new(parts.to_vec()).unwrap(),
            SelfDualData { w: 0, lambda: vec![0, 0] },
            0,
        )
        .unwrap()
    }

    #[test]
    fn basic_blocks() {
        let half = Rational::new(1, 2);
        assert_eq!(
            lj_basic(&BasicRep::D { u: 0.into(), l: 3 }).unwrap(),
            BasicRep::F { u: 0.into(), l: 3 }
        );
        assert_eq!(
            lj_basic(&BasicRep::SgnDet { eps: 1, s: half }).unwrap(),
            BasicRep::DetPrime { s: half }
        );
        assert_eq!(lj_basic(&BasicRep::F { u: 0.into(), l: 1 }), Err(Error::InvalidDirection));
    }

    #[test]
    fn transfers() {
        assert_eq!(transfer(&split(&[0, 2, 2], 0)).unwrap(), quat(&[0, 1, 1]));
        assert_eq!(transfer(&split(&[2, 2], 1)).unwrap(), quat(&[1, 1]));
        assert_eq!(transfer(&split(&[4], 1)).unwrap(), quat(&[2]));
    }

    #[test]
    fn fibers() {
        let mu = HighestWeight::zero(4);
        assert_eq!(
            fiber(&quat(&[0, 1, 1]), &mu).unwrap(),
            vec![split(&[0, 2, 2], 0), split(&[2, 2], 0), split(&[2, 2], 1)]
        );
        assert_eq!(fiber(&quat(&[2]), &mu).unwrap(), vec![split(&[4], 0), split(&[4], 1)]);
        assert_eq!(fiber(&quat(&[0, 2]), &mu).unwrap(), vec![split(&[0, 4], 0)]);
    }
}
