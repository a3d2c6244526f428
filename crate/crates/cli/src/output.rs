use serde::Serialize;
use serde_json::Value;

/// 17 significant digits: enough to round-trip any `f64`.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Optional CSV field; missing values are left empty.
pub fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

/// Short human form of an eigenvalue: at most nine decimals, no trailing
/// zeros, no negative zero.
pub fn eigenvalue_label(x: f64) -> String {
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Top-level JSON document: `{config, data, provenance}` plus any extras.
pub fn json_document<C: Serialize>(
    config: &C,
    data: Vec<Value>,
    provenance: Value,
) -> serde_json::Result<String> {
    let doc = serde_json::json!({
        "config": config,
        "data": data,
        "provenance": provenance,
    });
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 0.9802, 1e-300, -2.5e17, std::f64::consts::PI] {
            let s = float(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn eigenvalue_labels() {
        assert_eq!(eigenvalue_label(-1.3e-15), "0");
        assert_eq!(eigenvalue_label(1.0000000000000002), "1");
        assert_eq!(eigenvalue_label(5.0), "5");
        assert_eq!(eigenvalue_label(0.5857864376), "0.585786438");
    }
}
