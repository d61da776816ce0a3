//! The cohomological unitary duals `Coh_μ(GL_k(H))` and `Coh_μ(GL_n(R))` as
//! lists of `A_q(λ)` modules, with their Poincaré polynomials and Langlands
//! induction data.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::jl::BasicRep;
use crate::partitions::{canonical_representative, table_order, OrderedPartition};
use crate::poly::IntPolynomial;
use crate::roots::{dim_u_cap_p, rho_u};
pub use crate::roots::GroupKind;
use crate::weights::{is_admissible, selfdual_data, HighestWeight, SelfDualData};
use crate::{Error, Rational, Result};

/// `A_q(λ) ⊗ sgn^ε ⊗ |det|^{-w/2}` (split side) or `A_q'(λ) ⊗ det'^{-w/2}`
/// (quaternionic side).
///
/// Quaternionic partitions are stored as canonical representatives of the
/// `[0,1,…] ∼ [1,…]` relation. Split partitions are partitions of `n` with
/// even parts. When the split partition has no zero block the sign twist is
/// absorbed (`A_q(λ) ⊗ sgn ≅ A_q(λ)`) and `ε` is stored as 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AqModule {
    kind: GroupKind,
    partition: OrderedPartition,
    lambda: SelfDualData,
    epsilon: u8,
}

impl AqModule {
    pub fn new(
        kind: GroupKind,
        partition: OrderedPartition,
        lambda: SelfDualData,
        epsilon: u8,
    ) -> Result<Self> {
        let k = kind.rank()?;
        let k_part = kind.k_partition(&partition)?;
        if lambda.k() != k as usize {
            return Err(Error::RankMismatch { expected: k, found: lambda.k() as u32 });
        }
        if epsilon > 1 {
            return Err(Error::OutOfDomain(format!("sign exponent {epsilon}")));
        }
        if !is_admissible(&lambda, &k_part) {
            return Err(Error::NotAdmissible);
        }
        let (partition, epsilon) = match kind {
            GroupKind::Quaternionic(_) => {
                if epsilon != 0 {
                    return Err(Error::WrongGroupKind("sign twist on the quaternionic side"));
                }
                (canonical_representative(&partition), 0)
            }
            GroupKind::SplitReal(_) => {
                let eps = if partition.zero_block() == 0 { 0 } else { epsilon };
                (partition, eps)
            }
        };
        Ok(Self { kind, partition, lambda, epsilon })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn lambda(&self) -> &SelfDualData {
        &self.lambda
    }

    pub fn w(&self) -> i64 {
        self.lambda.w
    }

    pub fn epsilon(&self) -> u8 {
        self.epsilon
    }

    pub fn is_tempered(&self) -> bool {
        is_tempered(self)
    }

    pub fn poincare(&self) -> Result<IntPolynomial> {
        poincare(self)
    }

    pub fn langlands_data(&self) -> InductionDatum {
        induction_datum(self.kind, &self.partition, &self.lambda, self.epsilon)
            .expect("validated module")
    }
}

/// One row of a classification table: the partition as listed, and the
/// module it produces (which may coincide with the module of another row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRow {
    pub label: OrderedPartition,
    pub module: AqModule,
}

impl CatalogRow {
    /// Induction datum read off the listed partition rather than the
    /// canonical one.
    pub fn datum(&self) -> InductionDatum {
        induction_datum(self.module.kind, &self.label, &self.module.lambda, self.module.epsilon)
            .expect("catalog rows are admissible")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub kind: GroupKind,
    pub mu: HighestWeight,
    /// Rows in table order; aliased quaternionic rows are kept.
    pub rows: Vec<CatalogRow>,
    /// Set when the catalog is empty because `μ` is not essentially self-dual.
    pub diagnostic: Option<Error>,
}

impl Catalog {
    /// Pairwise non-isomorphic modules, in first-appearance order.
    pub fn modules(&self) -> Vec<AqModule> {
        let mut out: Vec<AqModule> = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            if !out.contains(&row.module) {
                out.push(row.module.clone());
            }
        }
        out
    }

    pub fn tempered(&self) -> Option<&AqModule> {
        self.rows.iter().map(|r| &r.module).find(|m| m.is_tempered())
    }
}

/// Enumerates `Coh_μ` for the given real form.
///
/// A weight that is not essentially self-dual yields an empty catalog with
/// a diagnostic.
pub fn enumerate_coh(kind: GroupKind, mu: &HighestWeight) -> Result<Catalog> {
    let k = kind.rank()?;
    if k == 0 {
        return Err(Error::OutOfDomain("rank 0".into()));
    }
    if mu.n() != 2 * k as usize {
        return Err(Error::RankMismatch { expected: 2 * k, found: mu.n() as u32 });
    }
    let lambda = match selfdual_data(mu) {
        Ok(l) => l,
        Err(Error::NotSelfDual) => {
            return Ok(Catalog {
                kind,
                mu: mu.clone(),
                rows: Vec::new(),
                diagnostic: Some(Error::NotSelfDual),
            })
        }
        Err(e) => return Err(e),
    };
    let mut rows = Vec::new();
    for k_part in table_order(k)? {
        if !is_admissible(&lambda, &k_part) {
            continue;
        }
        match kind {
            GroupKind::Quaternionic(_) => {
                let module = AqModule::new(kind, k_part.clone(), lambda.clone(), 0)?;
                rows.push(CatalogRow { label: k_part, module });
            }
            GroupKind::SplitReal(_) => {
                let n_part = k_part.doubled();
                let signs: &[u8] = if n_part.zero_block() == 0 { &[0] } else { &[0, 1] };
                for &eps in signs {
                    let module = AqModule::new(kind, n_part.clone(), lambda.clone(), eps)?;
                    rows.push(CatalogRow { label: n_part.clone(), module });
                }
            }
        }
    }
    Ok(Catalog { kind, mu: mu.clone(), rows, diagnostic: None })
}

/// `[0,1,…,1]` on the quaternionic side, `[0,2,…,2]` on the split side.
pub fn is_tempered(m: &AqModule) -> bool {
    match m.kind {
        GroupKind::Quaternionic(_) => m.partition.is_tempered_shape(),
        GroupKind::SplitReal(_) => m
            .partition
            .halved()
            .map(|p| p.is_tempered_shape())
            .unwrap_or(false),
    }
}

fn levi_product(k_part: &OrderedPartition, include_zero_block: bool) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for &size in k_part.complex_blocks() {
        for j in 1..=size {
            acc = acc * IntPolynomial::one_plus_x_pow(2 * j - 1);
        }
    }
    if include_zero_block {
        for j in 1..=k_part.zero_block() {
            acc = acc * IntPolynomial::one_plus_x_pow(4 * j - 3);
        }
    }
    acc
}

/// Poincaré polynomial of `H^*(g, K°; A_q(λ) ⊗ E)`.
///
/// Quaternionic side:
/// `X^{dim(u∩p)}/(1+X) · ∏_{i≥1}∏_{j≤k_i}(1+X^{2j−1}) · ∏_{j≤k_0}(1+X^{4j−3})`.
/// Split side, only for partitions without a zero block: the same shape
/// without the `GL(H)` factor, doubled on the tempered module. Split
/// partitions with `n_0 > 0` are rejected.
pub fn poincare(m: &AqModule) -> Result<IntPolynomial> {
    let k_part = m.kind.k_partition(&m.partition)?;
    let shift = dim_u_cap_p(&m.partition, m.kind)?;
    let numerator = match m.kind {
        GroupKind::Quaternionic(_) => levi_product(&k_part, true),
        GroupKind::SplitReal(_) => {
            if k_part.zero_block() > 0 {
                return Err(Error::UnsupportedSplitPartition);
            }
            levi_product(&k_part, false)
        }
    };
    let reduced = numerator.div_exact(&IntPolynomial::one_plus_x_pow(1))?;
    let mut poly = &IntPolynomial::monomial(1, shift) * &reduced;
    if m.kind.is_split() && is_tempered(m) {
        poly = poly.scale(2);
    }
    Ok(poly)
}

/// Per-degree cohomology dimensions; independent of `λ`, but `μ` must be the
/// weight the module was built from.
pub fn cohomology_dims(m: &AqModule, mu: &HighestWeight) -> Result<BTreeMap<u32, u64>> {
    if selfdual_data(mu)? != m.lambda {
        return Err(Error::OutOfDomain(format!("weight {mu} does not match the module")));
    }
    Ok(poincare(m)?
        .terms()
        .map(|(d, c)| (d, u64::try_from(c).expect("dimensions are non-negative")))
        .collect())
}

/// `F(u, l)` or `D(u, l)` on one coordinate of a complex block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComplexBlock {
    pub l: u32,
    pub u: i64,
}

/// The `GL_{k_0}(H)` or `GL_{n_0}(R)` factor of the Levi, realized as a
/// Langlands quotient from one-dimensional characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnisotropicBlock {
    /// `k_0` (quaternionic) or `n_0` (split).
    pub size: u32,
    /// Exponents of `det'` on each `GL_1(H)` factor, or of `|·|` on each
    /// `GL_1(R)` factor; the determinant twist is included.
    pub exponents: Vec<Rational>,
    /// `e(λ)` on the split side: the sign character on the zero block.
    pub sign: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InductionDatum {
    pub kind: GroupKind,
    /// One entry per coordinate outside the zero block, in coordinate order.
    pub complex_blocks: Vec<ComplexBlock>,
    /// Sizes of the complex blocks in coordinate order (largest label first).
    pub block_sizes: Vec<u32>,
    pub anisotropic: AnisotropicBlock,
    /// Global determinant twist exponent `−w/2`.
    pub twist: Rational,
}

impl InductionDatum {
    /// The datum as a tensor product of rank-one building blocks: complex
    /// coordinates first, then the zero block (split `GL_1(R)` characters
    /// paired into `GL_2(R)` characters).
    pub fn basic_reps(&self) -> Vec<BasicRep> {
        let mut out: Vec<BasicRep> = self
            .complex_blocks
            .iter()
            .map(|b| match self.kind {
                GroupKind::SplitReal(_) => BasicRep::D { u: Rational::from(b.u), l: b.l },
                GroupKind::Quaternionic(_) => BasicRep::F { u: Rational::from(b.u), l: b.l },
            })
            .collect();
        match self.kind {
            GroupKind::Quaternionic(_) => {
                out.extend(self.anisotropic.exponents.iter().map(|&s| BasicRep::DetPrime { s }));
            }
            GroupKind::SplitReal(_) => {
                let eps = self.anisotropic.sign.unwrap_or(0);
                out.extend(self.anisotropic.exponents.chunks(2).map(|pair| BasicRep::SgnDet {
                    eps,
                    s: (pair[0] + pair[1]) / Rational::from(2),
                }));
            }
        }
        out
    }

    /// Label in the style `Ind[D(0,3)⊗D(0,1)]`, `J(F(-1,2)⊗F(1,2))`,
    /// `1_GL4(R)`.
    pub fn label(&self) -> String {
        let mut factors: Vec<String> = self
            .complex_blocks
            .iter()
            .map(|b| match self.kind {
                GroupKind::SplitReal(_) => format!("D({},{})", b.u, b.l),
                GroupKind::Quaternionic(_) => format!("F({},{})", b.u, b.l),
            })
            .collect();
        if self.anisotropic.size > 0 {
            factors.push(self.character_label());
        }
        if self.complex_blocks.is_empty() {
            return factors.pop().unwrap_or_default();
        }
        let body = factors.join("⊗");
        if self.block_sizes.iter().all(|&s| s == 1) {
            format!("Ind[{body}]")
        } else {
            format!("J({body})")
        }
    }

    fn character_label(&self) -> String {
        let size = self.anisotropic.size;
        let zero = Rational::from(0);
        match self.kind {
            GroupKind::SplitReal(_) => {
                let base = if self.anisotropic.sign == Some(1) {
                    String::from("sgn")
                } else {
                    format!("1_GL{size}(R)")
                };
                if self.twist == zero {
                    base
                } else {
                    format!("{base}|det|^{}", self.twist)
                }
            }
            GroupKind::Quaternionic(_) => {
                let base = format!("1_GL{size}(H)");
                if self.twist == zero {
                    base
                } else {
                    format!("{base}det'^{}", self.twist)
                }
            }
        }
    }
}

/// Langlands data of the module attached to an arbitrary (not necessarily
/// canonical) partition.
///
/// Coordinate `j` outside the zero block carries `l_j = λ_j + ρ(u)_j`; a
/// block of size `m` spreads `u` over `−(m−1), −(m−3), …, m−1`; every `u`
/// is shifted by `w`.
pub fn induction_datum(
    kind: GroupKind,
    partition: &OrderedPartition,
    lambda: &SelfDualData,
    epsilon: u8,
) -> Result<InductionDatum> {
    let k_part = kind.k_partition(partition)?;
    if !is_admissible(lambda, &k_part) {
        return Err(Error::NotAdmissible);
    }
    let rho = rho_u(partition, kind)?;
    let w = lambda.w;
    let twist = Rational::new(-w, 2);

    let block_sizes: Vec<u32> = k_part.complex_blocks().iter().rev().copied().collect();
    let mut complex_blocks = Vec::new();
    let mut coord = 0usize;
    for &size in &block_sizes {
        for t in 0..size as i64 {
            let l = lambda.lambda[coord] + rho[coord];
            let u = -(size as i64 - 1) + 2 * t + w;
            complex_blocks.push(ComplexBlock { l: l as u32, u });
            coord += 1;
        }
    }

    let anisotropic = match kind {
        GroupKind::Quaternionic(_) => {
            let k0 = k_part.zero_block() as i64;
            AnisotropicBlock {
                size: k0 as u32,
                exponents: (1..=k0).map(|i| Rational::from(k0 + 1 - 2 * i) + twist).collect(),
                sign: None,
            }
        }
        GroupKind::SplitReal(_) => {
            let n0 = partition.zero_block() as i64;
            AnisotropicBlock {
                size: n0 as u32,
                exponents: (1..=n0).map(|j| Rational::new(n0 + 1 - 2 * j, 2) + twist).collect(),
                sign: (n0 > 0).then_some(epsilon),
            }
        }
    };
    Ok(InductionDatum { kind, complex_blocks, block_sizes, anisotropic, twist })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> OrderedPartition {
        OrderedPartition::new(parts.to_vec()).unwrap()
    }

    fn zero(k: usize) -> SelfDualData {
        SelfDualData { w: 0, lambda: vec![0; k] }
    }

    fn h(parts: &[u32]) -> AqModule {
        let part = p(parts);
        let k = part.total();
        AqModule::new(GroupKind::Quaternionic(k), part, zero(k as usize), 0).unwrap()
    }

    fn r(parts: &[u32], eps: u8) -> AqModule {
        let part = p(parts);
        let n = part.total();
        AqModule::new(GroupKind::SplitReal(n), part, zero(n as usize / 2), eps).unwrap()
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(poincare(&h(&[0, 1, 1])).unwrap(), IntPolynomial::from_terms([(2, 1), (3, 1)]));
        assert_eq!(poincare(&h(&[2])).unwrap(), IntPolynomial::one_plus_x_pow(5));
        assert_eq!(poincare(&r(&[0, 4], 0)).unwrap(), IntPolynomial::from_terms([(3, 1), (6, 1)]));
        assert_eq!(poincare(&r(&[0, 2, 2], 0)).unwrap(), IntPolynomial::from_terms([(4, 2), (5, 2)]));
        assert_eq!(poincare(&r(&[4], 1)), Err(Error::UnsupportedSplitPartition));
    }

    #[test]
    fn langlands_examples() {
        let d = h(&[0, 2]).langlands_data();
        assert_eq!(d.complex_blocks, vec![ComplexBlock { l: 2, u: -1 }, ComplexBlock { l: 2, u: 1 }]);
        assert_eq!(d.label(), "J(F(-1,2)⊗F(1,2))");
        let d = r(&[0, 4], 0).langlands_data();
        assert_eq!(d.label(), "J(D(-1,2)⊗D(1,2))");
        assert_eq!(h(&[0, 1, 1]).langlands_data().label(), "Ind[F(0,3)⊗F(0,1)]");
        assert_eq!(r(&[2, 2], 0).langlands_data().label(), "Ind[D(0,3)⊗1_GL2(R)]");
        assert_eq!(r(&[2, 2], 1).langlands_data().label(), "Ind[D(0,3)⊗sgn]");
        assert_eq!(r(&[4], 0).langlands_data().label(), "1_GL4(R)");
        assert_eq!(r(&[4], 1).langlands_data().label(), "sgn");
        assert_eq!(h(&[2]).langlands_data().label(), "1_GL2(H)");
    }

    #[test]
    fn table_sizes_k2() {
        let mu = HighestWeight::zero(4);
        let h = enumerate_coh(GroupKind::Quaternionic(2), &mu).unwrap();
        assert_eq!(h.rows.len(), 4);
        assert_eq!(h.modules().len(), 3);
        assert_eq!(h.rows[0].module, h.rows[1].module);
        let r = enumerate_coh(GroupKind::SplitReal(4), &mu).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.modules().len(), 6);
    }

    #[test]
    fn non_selfdual_gives_empty_catalog() {
        let mu = HighestWeight::new(vec![2, 1, 0, 0]).unwrap();
        let c = enumerate_coh(GroupKind::Quaternionic(2), &mu).unwrap();
        assert!(c.rows.is_empty());
        assert_eq!(c.diagnostic, Some(Error::NotSelfDual));
    }

    #[test]
    fn sign_collapses_without_zero_block() {
        assert_eq!(r(&[0, 2, 2], 1), r(&[0, 2, 2], 0));
        assert_ne!(r(&[2, 2], 1), r(&[2, 2], 0));
    }
}
