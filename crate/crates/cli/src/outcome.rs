use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The check holds; the printed source value it corrects is recorded in
    /// `expected`.
    Discrepancy,
}

impl Status {
    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Discrepancy => "discrepancy",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutcome {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub reference: String,
}

impl VerifyOutcome {
    pub fn new(name: &str, reference: &str, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        VerifyOutcome { name: name.into(), status, expected, actual, reference: reference.into() }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

fn tsv_field(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

pub fn emit_report(outcomes: &[VerifyOutcome], format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(outcomes).expect("outcomes serialize");
            out.push(b'\n');
            out
        }
        Format::Tsv => {
            let mut out = String::from("name\tstatus\texpected\tactual\treference\n");
            for o in outcomes {
                let row = [o.name.as_str(), o.status.as_str(), &o.expected, &o.actual, &o.reference];
                out.push_str(&row.iter().map(|f| tsv_field(f)).collect::<Vec<_>>().join("\t"));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite() {
        assert_eq!(emit_report(&[], Format::Json), b"[]\n");
        assert_eq!(emit_report(&[], Format::Tsv), b"name\tstatus\texpected\tactual\treference\n");
    }

    #[test]
    fn single_outcome_keys() {
        let o = VerifyOutcome::new("x", "r", "1", "1");
        let text = String::from_utf8(emit_report(&[o], Format::Json)).unwrap();
        let pos: Vec<usize> = ["\"name\"", "\"status\"", "\"expected\"", "\"actual\"", "\"reference\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
        assert_eq!(v[0]["status"], "pass");
    }

    #[test]
    fn tsv_has_no_embedded_tabs() {
        let o = VerifyOutcome::new("a\tb", "r", "x\ny", "z");
        let s = String::from_utf8(emit_report(&[o], Format::Tsv)).unwrap();
        assert_eq!(s.lines().nth(1).unwrap().split('\t').count(), 5);
        assert!(s.contains("fail"));
    }
}
