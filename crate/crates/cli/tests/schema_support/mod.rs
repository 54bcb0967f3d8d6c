//! Minimal JSON Schema interpreter covering exactly the keywords the
//! shipped report schema uses: type, required, properties,
//! additionalProperties, items, enum, minimum, exclusiveMinimum,
//! minLength. Unknown keywords are rejected so the schema cannot
//! silently outgrow the validator.

use serde_json::Value;

const HANDLED: &[&str] = &[
    "$schema",
    "title",
    "description",
    "type",
    "required",
    "properties",
    "additionalProperties",
    "items",
    "enum",
    "minimum",
    "exclusiveMinimum",
    "minLength",
];

pub fn validate(schema: &Value, instance: &Value) -> Vec<String> {
    let mut violations = Vec::new();
    walk(schema, instance, "$", &mut violations);
    violations
}

fn type_matches(expected: &str, instance: &Value) -> bool {
    match expected {
        "object" => instance.is_object(),
        "array" => instance.is_array(),
        "string" => instance.is_string(),
        "boolean" => instance.is_boolean(),
        "number" => instance.is_number(),
        "integer" => instance.is_i64() || instance.is_u64(),
        _ => false,
    }
}

fn walk(schema: &Value, instance: &Value, path: &str, out: &mut Vec<String>) {
    let obj = schema.as_object().expect("schema nodes are objects");
    for key in obj.keys() {
        if !HANDLED.contains(&key.as_str()) {
            out.push(format!("{path}: unhandled schema keyword '{key}'"));
        }
    }

    if let Some(t) = obj.get("type").and_then(Value::as_str) {
        if !type_matches(t, instance) {
            out.push(format!("{path}: expected type {t}, got {instance}"));
            return;
        }
    }

    if let Some(allowed) = obj.get("enum").and_then(Value::as_array) {
        if !allowed.contains(instance) {
            out.push(format!("{path}: {instance} not in enum {allowed:?}"));
        }
    }

    if let Some(min) = obj.get("minimum").and_then(Value::as_f64) {
        if instance.as_f64().is_some_and(|v| v < min) {
            out.push(format!("{path}: {instance} below minimum {min}"));
        }
    }
    if let Some(min) = obj.get("exclusiveMinimum").and_then(Value::as_f64) {
        if instance.as_f64().is_some_and(|v| v <= min) {
            out.push(format!("{path}: {instance} not above {min}"));
        }
    }
    if let Some(min_len) = obj.get("minLength").and_then(Value::as_u64) {
        if instance
            .as_str()
            .is_some_and(|s| (s.chars().count() as u64) < min_len)
        {
            out.push(format!("{path}: string shorter than {min_len}"));
        }
    }

    if let Some(required) = obj.get("required").and_then(Value::as_array) {
        for field in required {
            let name = field.as_str().unwrap();
            if instance.get(name).is_none() {
                out.push(format!("{path}: missing required field '{name}'"));
            }
        }
    }

    if let Some(props) = obj.get("properties").and_then(Value::as_object) {
        if let Some(map) = instance.as_object() {
            for (name, sub) in props {
                if let Some(value) = map.get(name) {
                    walk(sub, value, &format!("{path}.{name}"), out);
                }
            }
            if obj.get("additionalProperties") == Some(&Value::Bool(false)) {
                for name in map.keys() {
                    if !props.contains_key(name) {
                        out.push(format!("{path}: unexpected field '{name}'"));
                    }
                }
            }
        }
    }

    if let Some(items) = obj.get("items") {
        if let Some(arr) = instance.as_array() {
            for (i, value) in arr.iter().enumerate() {
                walk(items, value, &format!("{path}[{i}]"), out);
            }
        }
    }
}
