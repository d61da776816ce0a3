//! Descriptor files: a JSON document with `places`, `archimedean` and
//! `finite` sections.
//!
//! ```json
//! {
//!   "places": {"d": 2, "m": 2,
//!              "archimedean": [{"label": "inf", "kind": "real-nonsplit"}],
//!              "finite": [{"label": "p2", "split": true, "ramified": false}]},
//!   "side": "inner",
//!   "cuspidal_transfer": true,
//!   "archimedean": {"inf": {"partition": [0,1,1], "mu": [0,0,0,0]}},
//!   "finite": {"p2": {"satake": [{"N": 5, "coords": {"1": "1"}}, …]}}
//! }
//! ```

use aqjl_core::catalog::AqModule;
use aqjl_core::global::{
    ArchComponent, ArchKind, ArchPlace, FiniteComponent, FinitePlace, GlobalRepDescriptor, PlacesModel, Side,
};
use aqjl_core::hecke::SatakeParams;
use aqjl_core::partitions::OrderedPartition;
use aqjl_core::weights::{selfdual_data, HighestWeight, SelfDualData};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::format::{cyclotomic_from_json, cyclotomic_json, parameter_from_json, parameter_json};
use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ArchPlaceDto {
    label: String,
    kind: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FinitePlaceDto {
    label: String,
    #[serde(default = "yes")]
    split: bool,
    #[serde(default)]
    ramified: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PlacesDto {
    d: u32,
    m: u32,
    #[serde(default)]
    archimedean: Vec<ArchPlaceDto>,
    #[serde(default)]
    finite: Vec<FinitePlaceDto>,
}

#[derive(Debug, Deserialize)]
struct DescriptorDto {
    places: PlacesDto,
    #[serde(default = "inner")]
    side: String,
    #[serde(default)]
    cuspidal_transfer: bool,
    #[serde(default)]
    archimedean: Map<String, Value>,
    #[serde(default)]
    finite: Map<String, Value>,
}

fn inner() -> String {
    "inner".into()
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(format!("descriptor: {}", msg.into()))
}

fn arch_kind(s: &str) -> Result<ArchKind, CliError> {
    match s {
        "real-split" => Ok(ArchKind::RealSplit),
        "real-nonsplit" => Ok(ArchKind::RealNonsplit),
        "complex" => Ok(ArchKind::Complex),
        other => Err(bad(format!("unknown place kind {other:?}"))),
    }
}

fn arch_kind_str(k: ArchKind) -> &'static str {
    match k {
        ArchKind::RealSplit => "real-split",
        ArchKind::RealNonsplit => "real-nonsplit",
        ArchKind::Complex => "complex",
    }
}

#[derive(Debug, Deserialize)]
struct ModuleDto {
    partition: Vec<u32>,
    mu: Option<Vec<i64>>,
    lambda: Option<Vec<i64>>,
    #[serde(default)]
    w: i64,
    #[serde(default)]
    eps: u8,
}

fn arch_component(
    places: &PlacesModel,
    place: &ArchPlace,
    side: Side,
    v: &Value,
) -> Result<ArchComponent, CliError> {
    let Some(kind) = places.real_group(place.kind, side) else {
        let t = v.get("parameter").ok_or_else(|| bad(format!("complex place {} needs a parameter", place.label)))?;
        return Ok(ArchComponent::Parameter(parameter_from_json(t)?));
    };
    let dto: ModuleDto = serde_json::from_value(v.clone()).map_err(|e| bad(format!("{}: {e}", place.label)))?;
    let lambda = match (dto.mu, dto.lambda) {
        (Some(mu), None) => {
            let mu = HighestWeight::new(mu).map_err(|e| bad(format!("{}: {e}", place.label)))?;
            selfdual_data(&mu).map_err(|e| bad(format!("{}: {e}", place.label)))?
        }
        (None, Some(lambda)) => SelfDualData::new(dto.w, lambda).map_err(|e| bad(format!("{}: {e}", place.label)))?,
        _ => return Err(bad(format!("{}: give exactly one of mu and lambda", place.label))),
    };
    let partition = OrderedPartition::new(dto.partition).map_err(|e| bad(format!("{}: {e}", place.label)))?;
    let m = AqModule::new(kind, partition, lambda, dto.eps).map_err(|e| bad(format!("{}: {e}", place.label)))?;
    Ok(ArchComponent::Module(m))
}

fn finite_component(label: &str, v: &Value) -> Result<FiniteComponent, CliError> {
    if let Some(tag) = v.get("opaque") {
        let tag = tag.as_str().ok_or_else(|| bad(format!("{label}: opaque tag must be a string")))?;
        return Ok(FiniteComponent::Opaque(tag.into()));
    }
    let alphas = v
        .get("satake")
        .and_then(Value::as_array)
        .ok_or_else(|| bad(format!("{label}: expected \"satake\" or \"opaque\"")))?;
    let alphas = alphas.iter().map(cyclotomic_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteComponent::Satake(SatakeParams::new(alphas).map_err(|e| bad(format!("{label}: {e}")))?))
}

pub fn parse_descriptor(text: &str) -> Result<GlobalRepDescriptor, CliError> {
    let dto: DescriptorDto = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let side = match dto.side.as_str() {
        "inner" => Side::Inner,
        "split" => Side::Split,
        other => return Err(bad(format!("side must be \"inner\" or \"split\", got {other:?}"))),
    };
    let arch_places = dto
        .places
        .archimedean
        .iter()
        .map(|p| Ok(ArchPlace { label: p.label.clone(), kind: arch_kind(&p.kind)? }))
        .collect::<Result<Vec<_>, CliError>>()?;
    let finite_places = dto
        .places
        .finite
        .iter()
        .map(|p| FinitePlace { label: p.label.clone(), split: p.split, ramified: p.ramified })
        .collect();
    let places = PlacesModel::new(dto.places.d, dto.places.m, arch_places, finite_places)
        .map_err(|e| bad(e.to_string()))?;

    for label in dto.archimedean.keys().chain(dto.finite.keys()) {
        let known = places.archimedean().iter().any(|p| &p.label == label)
            || places.finite().iter().any(|p| &p.label == label);
        if !known {
            return Err(bad(format!("component for unknown place {label}")));
        }
    }
    let archimedean = places
        .archimedean()
        .iter()
        .map(|p| {
            let v = dto.archimedean.get(&p.label).ok_or_else(|| bad(format!("no component at {}", p.label)))?;
            arch_component(&places, p, side, v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let finite = places
        .finite()
        .iter()
        .map(|p| {
            let v = dto.finite.get(&p.label).ok_or_else(|| bad(format!("no component at {}", p.label)))?;
            finite_component(&p.label, v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    GlobalRepDescriptor::new(places, side, dto.cuspidal_transfer, archimedean, finite).map_err(|e| bad(e.to_string()))
}

pub fn descriptor_json(desc: &GlobalRepDescriptor) -> Value {
    let places = desc.places();
    let places_json = json!({
        "d": places.d(),
        "m": places.m(),
        "archimedean": places.archimedean().iter()
            .map(|p| json!({"label": p.label, "kind": arch_kind_str(p.kind)}))
            .collect::<Vec<_>>(),
        "finite": places.finite().iter()
            .map(|p| json!({"label": p.label, "split": p.split, "ramified": p.ramified}))
            .collect::<Vec<_>>(),
    });
    let mut arch = Map::new();
    for (p, c) in places.archimedean().iter().zip(desc.archimedean()) {
        let v = match c {
            ArchComponent::Module(m) => json!({
                "partition": m.partition().parts(),
                "lambda": m.lambda().lambda,
                "w": m.w(),
                "eps": m.epsilon(),
            }),
            ArchComponent::Parameter(t) => json!({"parameter": parameter_json(t)}),
        };
        arch.insert(p.label.clone(), v);
    }
    let mut fin = Map::new();
    for (p, c) in places.finite().iter().zip(desc.finite()) {
        let v = match c {
            FiniteComponent::Satake(s) => json!({"satake": s.alphas().iter().map(cyclotomic_json).collect::<Vec<_>>()}),
            FiniteComponent::Opaque(tag) => json!({"opaque": tag}),
        };
        fin.insert(p.label.clone(), v);
    }
    json!({
        "places": places_json,
        "side": match desc.side() { Side::Inner => "inner", Side::Split => "split" },
        "cuspidal_transfer": desc.cuspidal_transfer(),
        "archimedean": arch,
        "finite": fin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
      "places": {"d": 2, "m": 2,
                 "archimedean": [{"label": "inf", "kind": "real-nonsplit"}],
                 "finite": [{"label": "p2"}, {"label": "p3", "ramified": true}]},
      "cuspidal_transfer": true,
      "archimedean": {"inf": {"partition": [0,1,1], "mu": [0,0,0,0]}},
      "finite": {"p2": {"satake": [{"N":5,"coords":{"1":"1"}}, {"N":1,"coords":{"0":1}},
                                   {"N":1,"coords":{"0":1}}, {"N":1,"coords":{"0":1}}]},
                 "p3": {"opaque": "ramified"}}
    }"#;

    #[test]
    fn round_trip() {
        let desc = parse_descriptor(SAMPLE).unwrap();
        let again = parse_descriptor(&descriptor_json(&desc).to_string()).unwrap();
        assert_eq!(desc, again);
    }

    #[test]
    fn rejects_unknown_place() {
        let text = SAMPLE.replace("\"p3\": {\"opaque\"", "\"p4\": {\"opaque\"");
        assert!(parse_descriptor(&text).is_err());
    }
}
