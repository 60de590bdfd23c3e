//! JSON Schema documents for every command's input and output.

use serde_json::{json, Value};

pub const SCHEMA_NAMES: &[&str] = &[
    "pebbles.solve",
    "pebbles.verify",
    "pebbles.oracle",
    "pebbles.gen",
    "cablecar.validate",
    "cablecar.construct",
    "cablecar.linked",
    "cablecar.common",
    "cablecar.oracle",
    "cablecar.gen",
    "sepline.solve",
    "sepline.verify",
    "sepline.lemma",
    "sepline.gen",
    "deck.check",
    "deck.witness",
    "deck.search",
    "geometry.verify",
    "geometry.sweep",
    "ineq.expand",
    "ineq.dominate",
    "ineq.sample",
    "selftest",
];

fn object(required: &[&str], properties: Value) -> Value {
    json!({ "type": "object", "required": required, "properties": properties })
}

fn int_array() -> Value {
    json!({ "type": "array", "items": { "type": "integer", "minimum": 0 } })
}

fn point() -> Value {
    json!({ "type": "array", "items": { "type": "number" }, "minItems": 2, "maxItems": 2 })
}

fn points() -> Value {
    json!({ "type": "array", "items": point(), "minItems": 2 })
}

fn coloring() -> Value {
    object(
        &["n", "color_of"],
        json!({
            "n": { "type": "integer", "minimum": 1 },
            "color_of": {
                "type": "array",
                "description": "color of the pebble of weight w at index w - 1; each color used exactly 4 times",
                "items": { "type": "integer", "minimum": 0 }
            }
        }),
    )
}

fn solved_coloring() -> Value {
    object(
        &["n", "color_of", "pile_a", "pile_b"],
        json!({
            "n": { "type": "integer", "minimum": 1 },
            "color_of": int_array(),
            "pile_a": int_array(),
            "pile_b": int_array()
        }),
    )
}

fn config() -> Value {
    object(
        &["n", "cars"],
        json!({
            "n": { "type": "integer", "minimum": 2 },
            "cars": {
                "type": "array",
                "description": "[start, finish] pairs over stations 0..n^2-1, start < finish",
                "items": { "type": "array", "items": { "type": "integer" }, "minItems": 2, "maxItems": 2 }
            }
        }),
    )
}

fn point_set() -> Value {
    object(&["points"], json!({ "points": points() }))
}

fn line_claim() -> Value {
    object(
        &["points", "anchor", "normal"],
        json!({ "points": points(), "anchor": point(), "normal": point(), "margin": { "type": "number" } }),
    )
}

fn deck() -> Value {
    object(
        &["values"],
        json!({
            "values": {
                "type": "array",
                "minItems": 2,
                "items": {
                    "description": "positive integer, as a JSON number or a decimal string",
                    "oneOf": [
                        { "type": "integer", "minimum": 1 },
                        { "type": "string", "pattern": "^[0-9]+$" }
                    ]
                }
            }
        }),
    )
}

fn term_table() -> Value {
    json!({
        "type": "array",
        "items": object(
            &["monomial", "exponents", "coefficient"],
            json!({
                "monomial": { "type": "string" },
                "exponents": { "type": "array", "items": { "type": "integer" }, "minItems": 4, "maxItems": 4 },
                "coefficient": { "type": "string", "pattern": "^-?[0-9]+$" }
            }),
        )
    })
}

fn violations() -> Value {
    json!({ "type": "array", "items": { "type": "object", "required": ["kind"] } })
}

fn flag(name: &str, kind: &str, default: Option<Value>) -> Value {
    match default {
        Some(d) => json!({ "flag": name, "type": kind, "default": d }),
        None => json!({ "flag": name, "type": kind, "required": true }),
    }
}

/// Schema for `name` (`group.command`), or `None` if unknown.
pub fn schema(name: &str) -> Option<Value> {
    let (flags, input, output) = match name {
        "pebbles.solve" | "pebbles.oracle" => (vec![], coloring(), solved_coloring()),
        "pebbles.verify" => (
            vec![],
            solved_coloring(),
            object(
                &["ok", "violations"],
                json!({ "ok": { "type": "boolean" }, "violations": violations(), "messages": { "type": "array" } }),
            ),
        ),
        "pebbles.gen" => (
            vec![
                flag("--n", "integer", None),
                flag("--seed", "integer", Some(json!(0))),
            ],
            Value::Null,
            coloring(),
        ),
        "cablecar.validate" => (
            vec![],
            config(),
            object(
                &["valid", "violations"],
                json!({ "valid": { "type": "boolean" }, "violations": violations() }),
            ),
        ),
        "cablecar.construct" => (
            vec![flag("--n", "integer", None)],
            Value::Null,
            object(&["a", "b"], json!({ "a": config(), "b": config() })),
        ),
        "cablecar.linked" => (
            vec![],
            config(),
            object(
                &["n", "pairs", "component_count", "components"],
                json!({
                    "n": { "type": "integer" },
                    "pairs": { "type": "array", "items": { "type": "array", "items": { "type": "integer" } } },
                    "component_count": { "type": "integer" },
                    "components": { "type": "array", "items": int_array() }
                }),
            ),
        ),
        "cablecar.common" => (
            vec![],
            object(&["a", "b"], json!({ "a": config(), "b": config() })),
            object(
                &["common", "guaranteed"],
                json!({
                    "common": { "type": ["array", "null"], "items": { "type": "integer" } },
                    "guaranteed": { "type": "boolean" }
                }),
            ),
        ),
        "cablecar.oracle" => (
            vec![flag("--n", "integer", None)],
            Value::Null,
            object(
                &["n", "min_k"],
                json!({ "n": { "type": "integer" }, "min_k": { "type": "integer" } }),
            ),
        ),
        "cablecar.gen" => (
            vec![
                flag("--n", "integer", None),
                flag("--k", "integer", None),
                flag("--seed", "integer", Some(json!(0))),
            ],
            Value::Null,
            config(),
        ),
        "sepline.solve" => (
            vec![],
            point_set(),
            object(
                &["points", "anchor", "normal", "margin", "branch", "bound"],
                json!({
                    "points": points(),
                    "anchor": point(),
                    "normal": point(),
                    "margin": { "type": "number" },
                    "branch": { "type": "object", "required": ["case"] },
                    "diameter": { "type": "array" },
                    "near_count": { "type": ["integer", "null"] },
                    "bound": { "type": "number" }
                }),
            ),
        ),
        "sepline.verify" => (
            vec![],
            line_claim(),
            object(
                &["margin", "count_left", "count_right", "bound", "valid"],
                json!({
                    "margin": { "type": "number" },
                    "count_left": { "type": "integer" },
                    "count_right": { "type": "integer" },
                    "bound": { "type": "number" },
                    "valid": { "type": "boolean" }
                }),
            ),
        ),
        "sepline.lemma" => (
            vec![],
            object(
                &["points", "rect"],
                json!({
                    "points": points(),
                    "rect": object(
                        &["x", "y", "width", "height"],
                        json!({
                            "x": { "type": "number" },
                            "y": { "type": "number" },
                            "width": { "type": "number", "minimum": 0.5 },
                            "height": { "type": "number", "minimum": 0.5 }
                        }),
                    )
                }),
            ),
            object(
                &["count", "bound", "disk_bound", "holds"],
                json!({
                    "count": { "type": "integer" },
                    "bound": { "type": "number" },
                    "disk_bound": { "type": "number" },
                    "holds": { "type": "boolean" }
                }),
            ),
        ),
        "sepline.gen" => (
            vec![
                flag("--n", "integer", None),
                flag("--seed", "integer", Some(json!(0))),
                json!({ "flag": "--mode", "enum": ["grid", "rejection"], "default": "grid" }),
            ],
            Value::Null,
            point_set(),
        ),
        "deck.check" => (
            vec![],
            deck(),
            object(
                &["satisfies", "witnesses", "failing_pair", "values"],
                json!({
                    "satisfies": { "type": "boolean" },
                    "witnesses": { "type": "array" },
                    "failing_pair": { "type": ["array", "null"] },
                    "values": { "type": "array", "items": { "type": "string" } }
                }),
            ),
        ),
        "deck.witness" => (
            vec![flag("--i", "integer", None), flag("--j", "integer", None)],
            deck(),
            object(
                &["pair", "witness"],
                json!({ "pair": int_array(), "witness": { "type": ["array", "null"], "items": { "type": "integer" } } }),
            ),
        ),
        "deck.search" => (
            vec![flag("--n", "integer", None), flag("--max", "integer", None)],
            Value::Null,
            object(
                &["n", "max_value", "candidates"],
                json!({
                    "n": { "type": "integer" },
                    "max_value": { "type": "integer" },
                    "candidates": { "type": "array", "items": deck() }
                }),
            ),
        ),
        "geometry.verify" => (
            vec![
                flag("--alpha", "number (degrees)", None),
                flag("--beta", "number (degrees)", None),
                flag("--tol", "number", Some(json!(1e-9))),
            ],
            Value::Null,
            object(
                &["check", "configuration"],
                json!({
                    "check": object(
                        &["residual", "cyclic_residual", "inscribed_residual", "holds"],
                        json!({
                            "alpha": { "type": "number" },
                            "beta": { "type": "number" },
                            "circumcenter": point(),
                            "residual": { "type": "number" },
                            "cyclic_residual": { "type": "number" },
                            "inscribed_residual": { "type": "number" },
                            "holds": { "type": "boolean" }
                        }),
                    ),
                    "configuration": object(
                        &["a", "b", "c", "d", "p"],
                        json!({ "a": point(), "b": point(), "c": point(), "d": point(), "p": point() }),
                    )
                }),
            ),
        ),
        "geometry.sweep" => (
            vec![
                flag("--samples", "integer", Some(json!(100))),
                flag("--seed", "integer", Some(json!(0))),
                flag("--tol", "number", Some(json!(1e-9))),
            ],
            Value::Null,
            json!({
                "type": "array",
                "items": object(
                    &["alpha", "beta", "residual"],
                    json!({ "alpha": { "type": "number" }, "beta": { "type": "number" }, "residual": { "type": "number" } }),
                )
            }),
        ),
        "ineq.expand" => (
            vec![json!({ "flag": "--side", "enum": ["lhs", "rhs"], "required": true })],
            Value::Null,
            term_table(),
        ),
        "ineq.dominate" => (
            vec![],
            Value::Null,
            object(
                &[
                    "dominated",
                    "strict_terms",
                    "equal_terms",
                    "violating_terms",
                ],
                json!({
                    "dominated": { "type": "boolean" },
                    "strict_terms": term_table(),
                    "equal_terms": term_table(),
                    "violating_terms": term_table()
                }),
            ),
        ),
        "ineq.sample" => (
            vec![
                flag("--count", "integer", Some(json!(10_000))),
                flag("--seed", "integer", Some(json!(0))),
            ],
            Value::Null,
            object(
                &["count", "below_one", "max_lhs", "min_amgm_gap"],
                json!({
                    "count": { "type": "integer" },
                    "below_one": { "type": "integer" },
                    "max_lhs": { "type": ["number", "null"] },
                    "min_amgm_gap": { "type": ["number", "null"] }
                }),
            ),
        ),
        "selftest" => (
            vec![
                flag("--seed", "integer", Some(json!(42))),
                json!({ "flag": "--quick", "type": "boolean" }),
            ],
            Value::Null,
            object(
                &["seed", "budget", "passed", "suites"],
                json!({
                    "seed": { "type": "integer" },
                    "budget": { "type": "object" },
                    "passed": { "type": "boolean" },
                    "suites": {
                        "type": "array",
                        "items": object(&["suite", "passed", "checks"], json!({
                            "suite": { "type": "string" },
                            "passed": { "type": "boolean" },
                            "checks": { "type": "array" }
                        }))
                    }
                }),
            ),
        ),
        _ => return None,
    };
    let mut input = input;
    if input.is_object() {
        input["$schema"] = json!("https://json-schema.org/draft/2020-12/schema");
    }
    Some(json!({
        "command": name,
        "flags": flags,
        "input": input,
        "output": output,
        "exit_codes": { "0": "claim holds", "1": "claim violated", "2": "invalid input or usage" }
    }))
}
