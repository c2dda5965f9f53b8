use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use tkc_core::knot::{InvariantReport, Knot};

pub const CSV_HEADER: [&str; 10] = [
    "p",
    "q",
    "parity",
    "type",
    "witness_x",
    "crosscap",
    "boundary_slope",
    "genus",
    "gamma",
    "upper_bound",
];

/// One knot, flattened for output. Integers are kept as decimal strings so
/// no consumer has to fit them in a fixed-width type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub p: String,
    pub q: String,
    pub parity: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub witness_x: String,
    pub crosscap: String,
    pub boundary_slope: String,
    pub genus: String,
    pub gamma: String,
    pub upper_bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip)]
    pub upper_bound_floored: bool,
}

impl OutputRecord {
    pub fn from_report(report: &InvariantReport) -> Self {
        let class = &report.classification;
        OutputRecord {
            p: report.knot.p().to_string(),
            q: report.knot.q().to_string(),
            parity: class.parity_label().to_owned(),
            kind: class.type_label().to_owned(),
            witness_x: class
                .witness()
                .map_or_else(|| "-".to_owned(), ToString::to_string),
            crosscap: report.crosscap.to_string(),
            boundary_slope: report.boundary_slope.to_string(),
            genus: report.genus.to_string(),
            gamma: report.gamma.to_string(),
            upper_bound: report.upper_bound.value.to_string(),
            input: None,
            upper_bound_floored: report.upper_bound.floored,
        }
    }

    /// Record for `T(p, q)` given raw (possibly unnormalized) parameters.
    /// The unknot reports `|p|, |q|` with every invariant zero.
    pub fn for_knot(knot: &Knot, p_raw: &BigInt, q_raw: &BigInt) -> Self {
        match knot {
            Knot::Torus(k) => OutputRecord::from_report(&k.report()),
            Knot::Unknot => {
                let zero = "0".to_owned();
                let (a, b) = (p_raw.magnitude(), q_raw.magnitude());
                let (p, q) = if a >= b { (a, b) } else { (b, a) };
                OutputRecord {
                    p: p.to_string(),
                    q: q.to_string(),
                    parity: "-".to_owned(),
                    kind: "-".to_owned(),
                    witness_x: "-".to_owned(),
                    crosscap: zero.clone(),
                    boundary_slope: zero.clone(),
                    genus: zero.clone(),
                    gamma: zero.clone(),
                    upper_bound: zero,
                    input: None,
                    upper_bound_floored: false,
                }
            }
        }
        .with_input(p_raw, q_raw)
    }

    pub fn with_input(mut self, p_raw: &BigInt, q_raw: &BigInt) -> Self {
        self.input = Some(format!("{p_raw}:{q_raw}"));
        self
    }

    fn csv_fields(&self) -> [&str; 10] {
        [
            &self.p,
            &self.q,
            &self.parity,
            &self.kind,
            &self.witness_x,
            &self.crosscap,
            &self.boundary_slope,
            &self.genus,
            &self.gamma,
            &self.upper_bound,
        ]
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let knot = if self.parity == "-" {
            "unknot".to_owned()
        } else {
            format!("T({},{})", self.p, self.q)
        };
        let mut line = |k: &str, v: &str| out.push_str(&format!("{k:<15}{v}\n"));
        line("knot", &knot);
        if let Some(input) = &self.input {
            line("input", input);
        }
        line("parity", &self.parity);
        line("type", &self.kind);
        line("witness_x", &self.witness_x);
        line("crosscap", &self.crosscap);
        line("boundary_slope", &self.boundary_slope);
        line("genus", &self.genus);
        line("gamma", &self.gamma);
        let bound = if self.upper_bound_floored {
            format!("{} (rounded down from a half-integer)", self.upper_bound)
        } else {
            self.upper_bound.clone()
        };
        line("upper_bound", &bound);
        out
    }
}

pub fn write_csv<W: Write>(out: W, records: &[OutputRecord]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, records: &[OutputRecord]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    out.write_all(b"\n")
}
