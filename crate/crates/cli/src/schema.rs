//! JSON schemas for every command's output and a validator for the subset
//! of JSON Schema they use: `type`, `properties`, `required`,
//! `additionalProperties: false`, `items`, `enum`, `minimum` and `const`.

use serde_json::Value;

pub const SOLVE: &str = include_str!("../schemas/solve.schema.json");
pub const CLOSED_FORM: &str = include_str!("../schemas/closed_form.schema.json");
pub const BRUTE: &str = include_str!("../schemas/brute.schema.json");
pub const VERIFY: &str = include_str!("../schemas/verify.schema.json");
pub const LR: &str = include_str!("../schemas/lr.schema.json");
pub const ETA: &str = include_str!("../schemas/eta.schema.json");
pub const SWEEP: &str = include_str!("../schemas/sweep.schema.json");
pub const SPECTRUM: &str = include_str!("../schemas/spectrum.schema.json");

/// The schema text for a subcommand name as used on the command line.
pub fn schema_text(command: &str) -> Option<&'static str> {
    Some(match command {
        "solve" => SOLVE,
        "closed-form" => CLOSED_FORM,
        "brute" => BRUTE,
        "verify" => VERIFY,
        "lr" => LR,
        "eta" => ETA,
        "sweep" => SWEEP,
        "spectrum" => SPECTRUM,
        _ => return None,
    })
}

pub fn schema_for(command: &str) -> Option<Value> {
    schema_text(command).map(|s| serde_json::from_str(s).expect("bundled schema is valid JSON"))
}

/// Collects every violation of `schema` by `value`, with JSON-pointer paths.
pub fn validate(value: &Value, schema: &Value) -> Result<(), Vec<String>> {
    let mut errors = Vec::new();
    check(value, schema, "", &mut errors);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

fn type_matches(value: &Value, ty: &str) -> bool {
    match ty {
        "null" => value.is_null(),
        "boolean" => value.is_boolean(),
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "number" => value.is_number(),
        "integer" => value.is_i64() || value.is_u64(),
        _ => false,
    }
}

fn check(value: &Value, schema: &Value, path: &str, errors: &mut Vec<String>) {
    let Some(schema) = schema.as_object() else {
        return;
    };
    if let Some(ty) = schema.get("type") {
        let ok = match ty {
            Value::String(t) => type_matches(value, t),
            Value::Array(ts) => ts.iter().filter_map(Value::as_str).any(|t| type_matches(value, t)),
            _ => true,
        };
        if !ok {
            errors.push(format!("{path}: expected type {ty}, found {value}"));
            return;
        }
    }
    if let Some(expected) = schema.get("const") {
        if value != expected {
            errors.push(format!("{path}: expected {expected}, found {value}"));
        }
    }
    if let Some(Value::Array(options)) = schema.get("enum") {
        if !options.contains(value) {
            errors.push(format!("{path}: {value} is not one of {options:?}"));
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), value.as_f64()) {
        if x < min {
            errors.push(format!("{path}: {x} is below the minimum {min}"));
        }
    }
    if let Value::Object(map) = value {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(Value::Array(required)) = schema.get("required") {
            for key in required.iter().filter_map(Value::as_str) {
                if !map.contains_key(key) {
                    errors.push(format!("{path}: missing required property {key:?}"));
                }
            }
        }
        for (key, child) in map {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => check(child, sub, &format!("{path}/{key}"), errors),
                None => {
                    if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                        errors.push(format!("{path}: unexpected property {key:?}"));
                    }
                }
            }
        }
    }
    if let (Value::Array(items), Some(item_schema)) = (value, schema.get("items")) {
        for (i, item) in items.iter().enumerate() {
            check(item, item_schema, &format!("{path}/{i}"), errors);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn bundled_schemas_parse() {
        for cmd in ["solve", "closed-form", "brute", "verify", "lr", "eta", "sweep", "spectrum"] {
            assert!(schema_for(cmd).unwrap().is_object(), "{cmd}");
        }
        assert!(schema_for("nope").is_none());
    }

    #[test]
    fn validator_reports_violations() {
        let schema = json!({
            "type": "object",
            "required": ["a", "b"],
            "additionalProperties": false,
            "properties": {
                "a": {"type": "integer", "minimum": 0},
                "b": {"type": "array", "items": {"enum": ["x", "y"]}},
                "c": {"type": ["number", "null"]}
            }
        });
        assert!(validate(&json!({"a": 1, "b": ["x"], "c": null}), &schema).is_ok());
        assert!(validate(&json!({"a": 1, "b": [], "c": 2.5}), &schema).is_ok());
        let errors = validate(&json!({"a": -1, "b": ["z"], "d": 0}), &schema).unwrap_err();
        assert_eq!(errors.len(), 3, "{errors:?}");
        let errors = validate(&json!({"a": 1.5}), &schema).unwrap_err();
        assert_eq!(errors.len(), 2, "{errors:?}");
    }
}
