//! Bookkeeping model of a global representation of `GL_m(D)` and of its
//! Jacquet–Langlands transfer to `GL_n`, `n = dm`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::AqModule;
use crate::cyclotomic::{compositum, CyclotomicSubfield};
use crate::hecke::{local_rationality_field, SatakeParams};
use crate::params::{is_algebraic, is_regular, parameter_of, purity_weight, Normalization, WeilParameter};
use crate::partitions::OrderedPartition;
use crate::poly::IntPolynomial;
use crate::roots::GroupKind;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArchKind {
    RealSplit,
    /// `D_v` is the quaternions; needs `d` even.
    RealNonsplit,
    Complex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArchPlace {
    pub label: String,
    pub kind: ArchKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePlace {
    pub label: String,
    pub split: bool,
    pub ramified: bool,
}

impl FinitePlace {
    /// Places where Satake parameters make sense.
    pub fn is_unramified_split(&self) -> bool {
        self.split && !self.ramified
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlacesModel {
    d: u32,
    m: u32,
    archimedean: Vec<ArchPlace>,
    finite: Vec<FinitePlace>,
}

impl PlacesModel {
    pub fn new(d: u32, m: u32, archimedean: Vec<ArchPlace>, finite: Vec<FinitePlace>) -> Result<Self> {
        if d == 0 || m == 0 {
            return Err(Error::InvalidDescriptor("d and m must be positive".into()));
        }
        let mut labels = BTreeSet::new();
        for label in archimedean.iter().map(|p| &p.label).chain(finite.iter().map(|p| &p.label)) {
            if !labels.insert(label) {
                return Err(Error::InvalidDescriptor(format!("duplicate place {label}")));
            }
        }
        if !d.is_multiple_of(2) {
            if let Some(p) = archimedean.iter().find(|p| p.kind == ArchKind::RealNonsplit) {
                return Err(Error::InvalidDescriptor(format!(
                    "real place {} cannot be non-split for odd d = {d}",
                    p.label
                )));
            }
        }
        Ok(Self { d, m, archimedean, finite })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.d * self.m
    }

    pub fn archimedean(&self) -> &[ArchPlace] {
        &self.archimedean
    }

    pub fn finite(&self) -> &[FinitePlace] {
        &self.finite
    }

    pub fn has_nonsplit_place(&self) -> bool {
        self.archimedean.iter().any(|p| p.kind == ArchKind::RealNonsplit)
            || self.finite.iter().any(|p| !p.split)
    }

    /// Group at a real place on the given side.
    pub fn real_group(&self, kind: ArchKind, side: Side) -> Option<GroupKind> {
        match (kind, side) {
            (ArchKind::Complex, _) => None,
            (ArchKind::RealNonsplit, Side::Inner) => Some(GroupKind::Quaternionic(self.n() / 2)),
            _ => Some(GroupKind::SplitReal(self.n())),
        }
    }
}

/// `GL_m(D)` (inner) or `GL_n` (split).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inner,
    Split,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArchComponent {
    Module(AqModule),
    /// Complex places carry their parameter only.
    Parameter(WeilParameter),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteComponent {
    Satake(SatakeParams),
    Opaque(String),
}

/// Local components of a global representation, one per place of the model,
/// in the model's place order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalRepDescriptor {
    places: PlacesModel,
    side: Side,
    /// User assertion that the transfer to `GL_n` is cuspidal.
    cuspidal_transfer: bool,
    archimedean: Vec<ArchComponent>,
    finite: Vec<FiniteComponent>,
}

impl GlobalRepDescriptor {
    pub fn new(
        places: PlacesModel,
        side: Side,
        cuspidal_transfer: bool,
        archimedean: Vec<ArchComponent>,
        finite: Vec<FiniteComponent>,
    ) -> Result<Self> {
        if archimedean.len() != places.archimedean.len() || finite.len() != places.finite.len() {
            return Err(Error::InvalidDescriptor("one component per place is required".into()));
        }
        let n = places.n();
        for (place, comp) in places.archimedean.iter().zip(&archimedean) {
            match (places.real_group(place.kind, side), comp) {
                (Some(kind), ArchComponent::Module(m)) if m.kind() == kind => {}
                (None, ArchComponent::Parameter(t)) if t.n() == n => {}
                _ => {
                    return Err(Error::InvalidDescriptor(format!(
                        "component at {} does not match the place",
                        place.label
                    )))
                }
            }
        }
        for (place, comp) in places.finite.iter().zip(&finite) {
            if let FiniteComponent::Satake(s) = comp {
                if !place.is_unramified_split() {
                    return Err(Error::InvalidDescriptor(format!(
                        "Satake parameters at ramified or non-split place {}",
                        place.label
                    )));
                }
                if s.n() != n as usize {
                    return Err(Error::InvalidDescriptor(format!(
                        "{} Satake parameters at {}, expected {n}",
                        s.n(),
                        place.label
                    )));
                }
            }
        }
        Ok(Self { places, side, cuspidal_transfer, archimedean, finite })
    }

    pub fn places(&self) -> &PlacesModel {
        &self.places
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn cuspidal_transfer(&self) -> bool {
        self.cuspidal_transfer
    }

    pub fn archimedean(&self) -> &[ArchComponent] {
        &self.archimedean
    }

    pub fn finite(&self) -> &[FiniteComponent] {
        &self.finite
    }

    /// Adds a ramified finite place with an opaque component.
    pub fn with_ramified_place(&self, label: &str, tag: &str) -> Result<Self> {
        let mut finite_places = self.places.finite.clone();
        finite_places.push(FinitePlace { label: label.into(), split: true, ramified: true });
        let places = PlacesModel::new(self.places.d, self.places.m, self.places.archimedean.clone(), finite_places)?;
        let mut finite = self.finite.clone();
        finite.push(FiniteComponent::Opaque(tag.into()));
        Self::new(places, self.side, self.cuspidal_transfer, self.archimedean.clone(), finite)
    }

    /// Drops every finite place whose component is opaque.
    pub fn without_opaque_places(&self) -> Result<Self> {
        let keep: Vec<bool> = self.finite.iter().map(|c| matches!(c, FiniteComponent::Satake(_))).collect();
        let finite_places = self.places.finite.iter().zip(&keep).filter(|(_, k)| **k).map(|(p, _)| p.clone()).collect();
        let places = PlacesModel::new(self.places.d, self.places.m, self.places.archimedean.clone(), finite_places)?;
        let finite = self.finite.iter().zip(&keep).filter(|(_, k)| **k).map(|(c, _)| c.clone()).collect();
        Self::new(places, self.side, self.cuspidal_transfer, self.archimedean.clone(), finite)
    }
}

/// Product of local Poincaré polynomials.
pub fn kunneth_poincare(locals: &[IntPolynomial]) -> IntPolynomial {
    locals.iter().cloned().product()
}

/// Künneth product over the archimedean places of a descriptor.
pub fn global_poincare(desc: &GlobalRepDescriptor) -> Result<IntPolynomial> {
    let mut locals = Vec::with_capacity(desc.archimedean.len());
    for (place, comp) in desc.places.archimedean.iter().zip(&desc.archimedean) {
        match comp {
            ArchComponent::Module(m) => locals.push(m.poincare()?),
            ArchComponent::Parameter(_) => return Err(Error::ComplexPlaceUnsupported(place.label.clone())),
        }
    }
    Ok(kunneth_poincare(&locals))
}

/// Transfer to `GL_n`: a tempered `J'(w, ℓ)` at a non-split real place
/// becomes `J(w, ℓ)`; every other component is kept.
pub fn global_jl(desc: &GlobalRepDescriptor) -> Result<GlobalRepDescriptor> {
    if desc.side == Side::Split {
        return Err(Error::WrongGroupKind("descriptor is already on the split side"));
    }
    if desc.places.has_nonsplit_place() && !desc.cuspidal_transfer {
        return Err(Error::CuspidalityNotAsserted);
    }
    let n = desc.places.n();
    let mut archimedean = Vec::with_capacity(desc.archimedean.len());
    for (place, comp) in desc.places.archimedean.iter().zip(&desc.archimedean) {
        let out = match (place.kind, comp) {
            (ArchKind::RealNonsplit, ArchComponent::Module(m)) => {
                if !m.is_tempered() {
                    return Err(Error::NonTemperedNonsplitComponent(place.label.clone()));
                }
                let tempered = OrderedPartition::tempered(n / 2)?.doubled();
                ArchComponent::Module(AqModule::new(GroupKind::SplitReal(n), tempered, m.lambda().clone(), 0)?)
            }
            _ => comp.clone(),
        };
        archimedean.push(out);
    }
    GlobalRepDescriptor::new(desc.places.clone(), Side::Split, desc.cuspidal_transfer, archimedean, desc.finite.clone())
}

fn split_side(desc: &GlobalRepDescriptor) -> Result<GlobalRepDescriptor> {
    match desc.side {
        Side::Split => Ok(desc.clone()),
        Side::Inner => global_jl(desc),
    }
}

/// Parameters at the archimedean places, read on the split side.
pub fn archimedean_parameters(desc: &GlobalRepDescriptor) -> Result<Vec<WeilParameter>> {
    split_side(desc)?
        .archimedean
        .iter()
        .map(|comp| match comp {
            ArchComponent::Module(m) => parameter_of(m, Rational::from(0)),
            ArchComponent::Parameter(t) => Ok(t.clone()),
        })
        .collect()
}

/// Common purity weight over all archimedean places.
pub fn global_purity(desc: &GlobalRepDescriptor, norm: Normalization) -> Result<Option<i64>> {
    purity_weight(&archimedean_parameters(desc)?, norm)
}

/// Every archimedean parameter is algebraic with distinct `p`-values.
pub fn is_regular_algebraic(desc: &GlobalRepDescriptor) -> Result<bool> {
    for t in archimedean_parameters(desc)? {
        if !is_algebraic(&t) || !is_regular(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compositum of the local rationality fields over the unramified split
/// finite places with known Satake parameters.
pub fn global_rationality_field(desc: &GlobalRepDescriptor) -> Result<CyclotomicSubfield> {
    let fields: Vec<CyclotomicSubfield> = desc
        .finite
        .iter()
        .filter_map(|c| match c {
            FiniteComponent::Satake(s) => Some(local_rationality_field(s)),
            FiniteComponent::Opaque(_) => None,
        })
        .collect();
    if fields.is_empty() {
        return Err(Error::NoUnramifiedPlaces);
    }
    Ok(compositum(&fields))
}

/// Compares the rationality field of the descriptor with that of its
/// transfer.
pub fn jl_field_equality_check(desc: &GlobalRepDescriptor) -> Result<bool> {
    let before = global_rationality_field(desc)?;
    let after = global_rationality_field(&split_side(desc)?)?;
    Ok(before == after)
}
