//! Report rows and their CSV / JSON-lines serialization.

use std::io::Write;

use serde_json::{Map, Number, Value};

/// Formats like C's `%.12g`; infinities become `inf` / `-inf`.
pub fn fmt_sig(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { "-" } else { "+" };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (11 - exp) as usize, v)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn json_number(v: f64) -> Value {
    if v.is_finite() {
        let rounded: f64 = fmt_sig(v).parse().expect("formatted float parses");
        Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
    } else {
        Value::String(fmt_sig(v))
    }
}

/// One output record. Keys keep insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportRow {
    pub scenario: String,
    pub parameters: Vec<(String, f64)>,
    pub quantities: Vec<(String, f64)>,
    pub verdicts: Vec<(String, String)>,
}

impl ReportRow {
    pub fn new(scenario: impl Into<String>) -> Self {
        Self {
            scenario: scenario.into(),
            ..Default::default()
        }
    }

    pub fn param(&mut self, name: impl Into<String>, v: f64) -> &mut Self {
        self.parameters.push((name.into(), v));
        self
    }

    pub fn quantity(&mut self, name: impl Into<String>, v: f64) -> &mut Self {
        self.quantities.push((name.into(), v));
        self
    }

    pub fn verdict(&mut self, name: impl Into<String>, v: impl Into<String>) -> &mut Self {
        self.verdicts.push((name.into(), v.into()));
        self
    }

    pub fn to_json(&self) -> Value {
        let section = |items: &[(String, f64)]| {
            Value::Object(
                items
                    .iter()
                    .map(|(k, v)| (k.clone(), json_number(*v)))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut obj = Map::new();
        obj.insert("scenario".into(), Value::String(self.scenario.clone()));
        obj.insert("parameters".into(), section(&self.parameters));
        obj.insert("quantities".into(), section(&self.quantities));
        obj.insert(
            "verdicts".into(),
            Value::Object(
                self.verdicts
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect(),
            ),
        );
        Value::Object(obj)
    }

    fn cells(&self) -> Vec<(String, String)> {
        let mut out = vec![("scenario".to_string(), self.scenario.clone())];
        out.extend(self.parameters.iter().map(|(k, v)| (k.clone(), fmt_sig(*v))));
        out.extend(self.quantities.iter().map(|(k, v)| (k.clone(), fmt_sig(*v))));
        out.extend(self.verdicts.iter().cloned());
        debug_assert!(
            out.iter()
                .enumerate()
                .all(|(i, (k, _))| out[..i].iter().all(|(j, _)| j != k)),
            "duplicate column in {}",
            self.scenario
        );
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// CSV with a header naming every column (union over rows, first-seen
/// order), or one JSON object per line.
pub fn write_rows(rows: &[ReportRow], format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            for row in rows {
                writeln!(out, "{}", serde_json::to_string(&row.to_json())?)?;
            }
        }
        Format::Csv => {
            let mut header: Vec<String> = Vec::new();
            let cells: Vec<Vec<(String, String)>> = rows.iter().map(ReportRow::cells).collect();
            for row in &cells {
                for (k, _) in row {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            if header.is_empty() {
                return Ok(());
            }
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in &cells {
                let record: Vec<&str> = header
                    .iter()
                    .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| v.as_str()).unwrap_or(""))
                    .collect();
                w.write_record(&record)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
