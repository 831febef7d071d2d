//! Serialization of results as JSON, CSV, or plain text.
//!
//! JSON is pretty-printed with a trailing newline. All maps are ordered, so
//! output is byte-identical for identical input.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::json;

use crate::bounds::BoundsReport;
use crate::error::Error;
use crate::generators::GeneratorCertificate;
use crate::homology::{Barcode, BettiReport};
use crate::verify::VerifyOutcome;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

pub fn write_json<T: Serialize, W: Write>(value: &T, mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

/// Betti numbers of `Ind(KG(n, k))` (or any complex, with `label` naming it).
pub fn write_betti<W: Write>(label: serde_json::Value, r: &BettiReport, fmt: OutputFormat, mut out: W) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => write_json(
            &json!({
                "complex": label,
                "field": r.field,
                "betti": r.records(),
                "face_counts": r.face_counts,
            }),
            out,
        ),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["dim", "betti"])?;
            for rec in r.records() {
                w.write_record([rec.dim.to_string(), rec.betti.to_string()])?;
            }
            w.flush()
        }
        OutputFormat::Text => {
            writeln!(out, "{label} over GF({})", r.field)?;
            for rec in r.records() {
                writeln!(out, "b_{} = {}", rec.dim, rec.betti)?;
            }
            Ok(())
        }
    }
}

pub fn write_barcode<W: Write>(bc: &Barcode, fmt: OutputFormat, mut out: W) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => write_json(bc, out),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["dim", "birth", "death"])?;
            for (d, bars) in &bc.intervals {
                for b in bars {
                    w.write_record([
                        d.to_string(),
                        b.birth.to_string(),
                        b.death.map_or_else(String::new, |x| x.to_string()),
                    ])?;
                }
            }
            w.flush()
        }
        OutputFormat::Text => {
            writeln!(out, "barcode over GF({}), scales {:?}", bc.field, bc.scales)?;
            for (d, bars) in &bc.intervals {
                let shown: Vec<String> = bars
                    .iter()
                    .map(|b| match b.death {
                        Some(x) => format!("[{}, {x})", b.birth),
                        None => format!("[{}, inf)", b.birth),
                    })
                    .collect();
                writeln!(out, "dim {d}: {}", shown.join(" "))?;
            }
            Ok(())
        }
    }
}

pub fn write_bounds<W: Write>(t: &BoundsReport, fmt: OutputFormat, mut out: W) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => write_json(t, out),
        OutputFormat::Csv => t.write_csv(out),
        OutputFormat::Text => {
            let cell = |v: &serde_json::Value| match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Null => "-".into(),
                other => other.to_string(),
            };
            let grid: Vec<Vec<String>> = std::iter::once(t.columns.clone())
                .chain(t.rows.iter().map(|r| r.iter().map(cell).collect()))
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|c| grid.iter().map(|r| r.get(c).map_or(0, String::len)).max().unwrap_or(0))
                .collect();
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:>w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  "))?;
            }
            Ok(())
        }
    }
}

pub fn write_certificate<W: Write>(c: &GeneratorCertificate, fmt: OutputFormat, mut out: W) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => write_json(c, out),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "i",
                "subset",
                "facet_maximal",
                "antipode_free",
                "hull_matches",
                "cycle_evidence",
                "cycle_ok",
                "pairing_identity",
            ])?;
            for (i, e) in c.entries.iter().enumerate() {
                let identity = e.pairing_row.iter().enumerate().all(|(j, &x)| x == u32::from(i == j));
                w.write_record([
                    i.to_string(),
                    e.subset.to_string(),
                    e.facet_maximal.to_string(),
                    e.antipode_free.to_string(),
                    e.hull_matches.to_string(),
                    e.cycle_evidence.to_string(),
                    e.cycle_ok.to_string(),
                    identity.to_string(),
                ])?;
            }
            w.flush()
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "n = {}, m = {}, GF({}): {} classes in degree {}, pairing {}x{} {}",
                c.n,
                c.m,
                c.field,
                c.rank_lower_bound,
                c.degree,
                c.entries.len(),
                c.entries.len(),
                if c.valid { "is the identity" } else { "FAILED" }
            )
        }
    }
}

pub fn write_verify<W: Write>(v: &VerifyOutcome, fmt: OutputFormat, mut out: W) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => write_json(v, out),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["lemma", "params", "pass", "counterexample"])?;
            w.write_record([
                v.lemma.id().to_string(),
                v.params.to_string(),
                v.pass.to_string(),
                v.counterexample.as_ref().map_or_else(String::new, |c| c.to_string()),
            ])?;
            w.flush()
        }
        OutputFormat::Text => {
            writeln!(out, "{} {} {}", v.lemma.id(), v.params, if v.pass { "PASS" } else { "FAIL" })?;
            if let Some(c) = &v.counterexample {
                writeln!(out, "counterexample: {c}")?;
            }
            Ok(())
        }
    }
}
