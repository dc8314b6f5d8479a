use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A document every format can render.
pub trait Emit: Serialize {
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;
}

pub fn emit<T: Emit>(format: Format, doc: &T) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(doc).map_err(io::Error::other)?;
            writeln!(out, "{s}")
        }
        Format::Text => write!(out, "{}", doc.text()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(doc.csv_header()).map_err(io::Error::other)?;
            for row in doc.csv_rows() {
                w.write_record(&row).map_err(io::Error::other)?;
            }
            w.flush()
        }
    }
}
