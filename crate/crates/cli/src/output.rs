use motive_shapes::serial::shape_to_json;
use motive_shapes::{Multiplicity, Shape};
use serde_json::{json, Value};

/// Multiplicities that fit `u64` are numbers, larger ones decimal strings.
fn mult_json<M: Multiplicity>(m: &M) -> Value {
    match m.to_u64() {
        Some(v) => json!(v),
        None => json!(m.to_string()),
    }
}

pub fn shape_json(shape: &Shape) -> Value {
    shape_to_json(shape)
}

pub fn stats_json(shape: &Shape) -> Value {
    let stats = shape.stats();
    json!({
        "rank": mult_json(&stats.rank),
        "countF": mult_json(&stats.count_f),
        "countA": mult_json(&stats.count_a),
        "ratio": stats.ratio.to_string(),
    })
}

pub fn emit(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}
