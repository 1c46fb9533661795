//! Structured (JSON) form of shapes and tilings.
//!
//! A shape is a list of `{shift, class, mult}` records sorted by shift then
//! class (`F` before `A`) with no zero multiplicities, so two shapes are equal
//! exactly when their serializations are. Multiplicities that fit in a `u64`
//! are written as JSON numbers, larger ones as decimal strings. A tiling is a
//! list of `{tile, shift}` records sorted by shift then tile name.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::solver::{Placement, Tiling};
use crate::{ArtinClass, Error, GradedShape, Multiplicity, Result, Shift};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultValue {
    Number(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeRecord {
    pub shift: Shift,
    pub class: ArtinClass,
    pub mult: MultValue,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMult {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawShapeRecord {
    shift: i64,
    class: ArtinClass,
    mult: RawMult,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlacement {
    tile: String,
    shift: i64,
}

pub fn shape_records<M: Multiplicity>(shape: &GradedShape<M>) -> Vec<ShapeRecord> {
    shape
        .records()
        .map(|(shift, class, mult)| ShapeRecord {
            shift,
            class,
            mult: match mult.to_u64() {
                Some(m) => MultValue::Number(m),
                None => MultValue::Text(mult.to_string()),
            },
        })
        .collect()
}

pub fn shape_to_json<M: Multiplicity>(shape: &GradedShape<M>) -> Value {
    serde_json::to_value(shape_records(shape)).expect("records serialize")
}

/// Compact JSON text of the canonical record list.
pub fn shape_to_string<M: Multiplicity>(shape: &GradedShape<M>) -> String {
    serde_json::to_string(&shape_records(shape)).expect("records serialize")
}

fn parse_mult<M: Multiplicity>(raw: RawMult) -> Result<M> {
    match raw {
        RawMult::Signed(m) if m < 0 => Err(Error::NegativeMultiplicity(m)),
        RawMult::Signed(m) => Ok(M::from_u64_exact(m as u64)),
        RawMult::Unsigned(m) => {
            M::from_u64(m).ok_or_else(|| Error::Parse(format!("multiplicity {m} does not fit")))
        }
        RawMult::Text(s) => {
            if let Some(rest) = s.strip_prefix('-') {
                if rest.chars().all(|c| c.is_ascii_digit()) && !rest.is_empty() {
                    return Err(Error::Parse(format!("negative multiplicity {s}")));
                }
            }
            s.parse::<M>()
                .map_err(|_| Error::Parse(format!("invalid multiplicity {s:?}")))
        }
    }
}

/// Reads a record list. Duplicate records are aggregated and zero
/// multiplicities dropped, so any valid input yields the canonical shape.
pub fn shape_from_json<M: Multiplicity>(value: &Value) -> Result<GradedShape<M>> {
    let raw: Vec<RawShapeRecord> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut shape = GradedShape::empty();
    for r in raw {
        let shift = Shift::try_from(r.shift).map_err(|_| Error::NegativeShift(r.shift))?;
        shape.insert(shift, r.class, parse_mult(r.mult)?);
    }
    Ok(shape)
}

pub fn shape_from_str<M: Multiplicity>(text: &str) -> Result<GradedShape<M>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    shape_from_document(&value)
}

/// Accepts either a bare record list or an object carrying it under `shape`.
pub fn shape_from_document<M: Multiplicity>(value: &Value) -> Result<GradedShape<M>> {
    match value {
        Value::Array(_) => shape_from_json(value),
        Value::Object(map) => match map.get("shape") {
            Some(inner) => shape_from_json(inner),
            None => Err(Error::Parse("object has no \"shape\" field".into())),
        },
        _ => Err(Error::Parse("expected a record list or an object".into())),
    }
}

pub fn tiling_to_json(tiling: &Tiling) -> Value {
    serde_json::to_value(tiling).expect("tiling serializes")
}

pub fn tiling_from_json(value: &Value) -> Result<Tiling> {
    let raw: Vec<RawPlacement> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let placements = raw
        .into_iter()
        .map(|p| {
            Ok(Placement {
                tile: p.tile,
                shift: Shift::try_from(p.shift).map_err(|_| Error::NegativeShift(p.shift))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Tiling::new(placements))
}
