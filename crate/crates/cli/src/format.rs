//! JSON encodings and command-line value parsing.

use std::collections::BTreeMap;

use aqjl_core::catalog::{AqModule, CatalogRow, InductionDatum};
use aqjl_core::cyclotomic::{CyclotomicNumber, CyclotomicSubfield};
use aqjl_core::params::WeilParameter;
use aqjl_core::partitions::OrderedPartition;
use aqjl_core::poly::IntPolynomial;
use aqjl_core::roots::GroupKind;
use aqjl_core::weights::{HighestWeight, SelfDualData};
use aqjl_core::Rational;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::CliError;

/// `"0,1,1"` → `[0,1,1]`.
pub fn parse_partition(s: &str) -> Result<OrderedPartition, CliError> {
    let parts = parse_list::<u32>(s, "--partition")?;
    OrderedPartition::new(parts).map_err(|e| CliError::input("--partition", e))
}

/// `"3,1,-1,-3"`; a lone `"0"` stands for the zero weight of length `n`.
pub fn parse_weight(s: &str, n: usize) -> Result<HighestWeight, CliError> {
    let entries = parse_list::<i64>(s, "--mu")?;
    let entries = if entries == [0] { vec![0; n] } else { entries };
    if entries.len() != n {
        return Err(CliError::Input(format!("--mu: expected {n} entries, got {}", entries.len())));
    }
    HighestWeight::new(entries).map_err(|e| CliError::input("--mu", e))
}

pub fn parse_list<T: std::str::FromStr>(s: &str, flag: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| CliError::Input(format!("{flag}: cannot parse {t:?}"))))
        .collect()
}

pub fn parse_rational(s: &str, flag: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|_| CliError::Input(format!("{flag}: cannot parse {s:?} as a rational")))
}

pub fn kind_tag(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::SplitReal(_) => "R",
        GroupKind::Quaternionic(_) => "H",
    }
}

pub fn poincare_json(p: &IntPolynomial) -> Value {
    let map: Map<String, Value> = p.terms().map(|(d, c)| (d.to_string(), json!(c))).collect();
    Value::Object(map)
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn datum_json(datum: &InductionDatum) -> (Value, Option<Value>) {
    let blocks: Vec<Value> = datum.complex_blocks.iter().map(|b| json!({"l": b.l, "u": b.u})).collect();
    let aniso = (datum.anisotropic.size > 0).then(|| {
        let mut obj = json!({
            "size": datum.anisotropic.size,
            "exponents": datum.anisotropic.exponents.iter().map(rational_str).collect::<Vec<_>>(),
        });
        if let Some(sign) = datum.anisotropic.sign {
            obj["sign"] = json!(sign);
        }
        obj
    });
    (Value::Array(blocks), aniso)
}

fn module_fields(label: &OrderedPartition, m: &AqModule, datum: &InductionDatum) -> Value {
    let (langlands, aniso) = datum_json(datum);
    let mut obj = json!({
        "kind": kind_tag(m.kind()),
        "partition": label.parts(),
        "lambda": m.lambda().lambda,
        "w": m.w(),
        "eps": m.epsilon(),
        "tempered": m.is_tempered(),
        "poincare": m.poincare().ok().as_ref().map(poincare_json),
        "langlands": langlands,
    });
    if let Some(a) = aniso {
        obj["aniso"] = a;
    }
    obj["label"] = json!(datum.label());
    if label != m.partition() {
        obj["canonical"] = json!(m.partition().parts());
    }
    obj
}

/// A catalog row; `canonical` appears on rows aliased to another partition.
pub fn row_json(row: &CatalogRow) -> Value {
    module_fields(&row.label, &row.module, &row.datum())
}

pub fn module_json(m: &AqModule) -> Value {
    module_fields(m.partition(), m, &m.langlands_data())
}

/// Input form of a module: the fields of a catalog row that determine it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub kind: String,
    pub partition: Vec<u32>,
    pub lambda: Vec<i64>,
    #[serde(default)]
    pub w: i64,
    #[serde(default)]
    pub eps: u8,
}

pub fn module_from_json(v: &Value) -> Result<AqModule, CliError> {
    let spec: ModuleSpec =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("module row: {e}")))?;
    let partition = OrderedPartition::new(spec.partition).map_err(|e| CliError::input("partition", e))?;
    let kind = match spec.kind.as_str() {
        "H" => GroupKind::Quaternionic(partition.total()),
        "R" => GroupKind::SplitReal(partition.total()),
        other => return Err(CliError::Input(format!("kind: expected \"H\" or \"R\", got {other:?}"))),
    };
    let lambda = SelfDualData::new(spec.w, spec.lambda).map_err(|e| CliError::input("lambda", e))?;
    AqModule::new(kind, partition, lambda, spec.eps).map_err(|e| CliError::input("module row", e))
}

/// `[p_num, p_den, q_num, q_den]` per character.
pub fn parameter_json(t: &WeilParameter) -> Value {
    Value::Array(
        t.exponents()
            .iter()
            .map(|(p, q)| json!([p.numer(), p.denom(), q.numer(), q.denom()]))
            .collect(),
    )
}

pub fn parameter_from_json(v: &Value) -> Result<WeilParameter, CliError> {
    let quads: Vec<[i64; 4]> =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("parameter: {e}")))?;
    let mut exps = Vec::with_capacity(quads.len());
    for [pn, pd, qn, qd] in quads {
        if pd == 0 || qd == 0 {
            return Err(CliError::Input("parameter: zero denominator".into()));
        }
        exps.push((Rational::new(pn, pd), Rational::new(qn, qd)));
    }
    WeilParameter::new(exps).map_err(|e| CliError::input("parameter", e))
}

/// `{"N":15,"coords":{"1":"1/2","2":"-1/3"}}`.
pub fn cyclotomic_json(x: &CyclotomicNumber) -> Value {
    let coords: Map<String, Value> = x.coords().into_iter().map(|(i, c)| (i.to_string(), json!(c.to_string()))).collect();
    json!({"N": x.conductor(), "coords": coords})
}

#[derive(Deserialize)]
struct CyclotomicDto {
    #[serde(rename = "N")]
    n: u32,
    coords: BTreeMap<String, Value>,
}

pub fn cyclotomic_from_json(v: &Value) -> Result<CyclotomicNumber, CliError> {
    let dto: CyclotomicDto =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("cyclotomic number: {e}")))?;
    if dto.n == 0 {
        return Err(CliError::Input("cyclotomic number: N must be positive".into()));
    }
    let mut coords = Vec::with_capacity(dto.coords.len());
    for (i, c) in dto.coords {
        let i: i64 = i.parse().map_err(|_| CliError::Input(format!("cyclotomic number: bad exponent {i:?}")))?;
        let c = match c {
            Value::String(s) => s.parse::<BigRational>().ok(),
            Value::Number(n) => n.to_string().parse::<BigInt>().ok().map(BigRational::from_integer),
            _ => return Err(CliError::Input("cyclotomic number: coefficients are strings or integers".into())),
        }
        .ok_or_else(|| CliError::Input(format!("cyclotomic number: bad coefficient at {i}")))?;
        coords.push((i, c));
    }
    Ok(CyclotomicNumber::from_coords(dto.n, coords))
}

/// `{"N":8,"gens":[3]}`, plus the degree and a readable name.
pub fn subfield_json(f: &CyclotomicSubfield) -> Value {
    json!({"N": f.conductor(), "gens": f.generators(), "degree": f.degree(), "name": f.to_string()})
}

#[derive(Deserialize)]
struct SubfieldDto {
    #[serde(rename = "N")]
    n: u32,
    gens: Vec<u32>,
}

pub fn subfield_from_json(v: &Value) -> Result<CyclotomicSubfield, CliError> {
    let dto: SubfieldDto =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("subfield: {e}")))?;
    CyclotomicSubfield::new(dto.n, &dto.gens).map_err(|e| CliError::input("subfield", e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_round_trip() {
        let v: Value = serde_json::from_str(r#"{"N":15,"coords":{"1":"1/2","2":"-1/3"}}"#).unwrap();
        let x = cyclotomic_from_json(&v).unwrap();
        assert_eq!(cyclotomic_json(&x), v);
    }

    #[test]
    fn parameter_round_trip() {
        let v: Value = serde_json::from_str("[[3,2,-1,2],[-1,2,3,2]]").unwrap();
        assert_eq!(parameter_json(&parameter_from_json(&v).unwrap()), v);
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("0", 4).unwrap(), HighestWeight::zero(4));
        assert!(parse_weight("1,2", 2).is_err());
        assert!(parse_weight("1,x", 2).is_err());
    }
}
