//! Helpers for deterministic machine-readable output.

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

/// JSON number for a float rounded to 12 significant digits, `null` when
/// not finite.
pub fn json_f64(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(round_sig(x))
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

/// Recursively rounds every float in a JSON value to 12 significant digits.
pub fn normalize_floats(v: &mut serde_json::Value) {
    use serde_json::Value;
    match v {
        Value::Number(n) if n.is_f64() => *v = json_f64(n.as_f64().unwrap()),
        Value::Array(xs) => xs.iter_mut().for_each(normalize_floats),
        Value::Object(m) => m.values_mut().for_each(normalize_floats),
        _ => {}
    }
}

/// Serializes with floats normalized; object keys come out sorted.
pub fn to_json<T: serde::Serialize>(value: &T) -> serde_json::Value {
    let mut v = serde_json::to_value(value).expect("report types serialize");
    normalize_floats(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(0.1 + 0.2), 0.3);
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(f64::NEG_INFINITY), f64::NEG_INFINITY);
        assert_eq!(json_f64(f64::NAN), serde_json::Value::Null);
    }

    #[test]
    fn keys_sorted() {
        let v = serde_json::json!({"b": 1, "a": 2.000000000000001});
        let mut v = v;
        normalize_floats(&mut v);
        assert_eq!(v.to_string(), r#"{"a":2.0,"b":1}"#);
    }
}

/// `serialize_with` helpers for exact rationals, written as `"p/q"`.
pub mod rational {
    use num_rational::BigRational;
    use serde::Serializer;

    use crate::bounds::rational_string;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(r))
    }

    pub fn serialize_opt<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&rational_string(r)),
            None => s.serialize_none(),
        }
    }
}
