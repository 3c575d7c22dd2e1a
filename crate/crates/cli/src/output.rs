use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Value,
    Table,
    Spectrum,
    Verification,
}

/// What every subcommand produces. `provenance` names the formulas that were
/// evaluated to obtain the payload.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub payload: Value,
    pub provenance: Vec<&'static str>,
}

/// An [`OutputRecord`] plus its plain-text and tabular renderings.
pub struct Report {
    pub record: OutputRecord,
    pub text: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Text => writeln!(out, "{}", self.text.trim_end()),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut text = line(header.to_vec());
    text.push('\n');
    for row in rows {
        text.push_str(&line(row.iter().map(String::as_str).collect()));
        text.push('\n');
    }
    text
}
