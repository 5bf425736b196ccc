//! Machine-readable verification records.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::linalg::{rat_to_int, IntMatrix, Rat, RatMatrix};

/// One checked identity. `pass` holds exactly when `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub algebra: String,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl Report {
    pub fn compare(
        claim: impl Into<String>,
        algebra: impl Into<String>,
        inputs: Value,
        lhs: Value,
        rhs: Value,
    ) -> Self {
        let pass = lhs == rhs;
        Report {
            claim: claim.into(),
            algebra: algebra.into(),
            inputs,
            lhs,
            rhs,
            pass,
            note: None,
            elapsed: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub fn int_json(m: &IntMatrix) -> Value {
    json!(m.to_i64_rows())
}

/// A rational as a JSON integer when integral, otherwise as `"p/q"`.
pub fn rat_value(r: &Rat) -> Value {
    match rat_to_int(r).and_then(|i| i64::try_from(&i).ok()) {
        Some(i) => json!(i),
        None => json!(r.to_string()),
    }
}

pub fn rat_json(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rat_value).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_equality_and_round_trips() {
        let r = Report::compare("x", "a", json!({}), json!([1, 2]), json!([1, 2]));
        assert!(r.pass);
        let s = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let m = RatMatrix::from_rows(&[vec![Rat::from(1), Rat::from_signeds(1i64, 2i64)]]);
        assert_eq!(rat_json(&m), json!([[1, "1/2"]]));
    }
}
