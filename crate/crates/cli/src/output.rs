use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use spectral_moments::matrix::format_f64;
use spectral_moments::Rational;

/// Opens `path`, or standard output when absent.
pub fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json<T: Serialize>(mut w: impl Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, doc)?;
    writeln!(w)?;
    w.flush()
}

/// CSV field for an optional float; empty when absent.
pub fn opt_f64(x: Option<f64>) -> String {
    x.map(format_f64).unwrap_or_default()
}

pub fn f64_field(x: f64) -> String {
    format_f64(x)
}

/// Exact rational as numerator and denominator strings.
#[derive(Serialize, Debug, Clone)]
pub struct ExactValue {
    pub numerator: String,
    pub denominator: String,
}

impl ExactValue {
    pub fn of(q: &Rational) -> Self {
        Self { numerator: q.numer().to_string(), denominator: q.denom().to_string() }
    }

    pub fn fraction(&self) -> String {
        if self.denominator == "1" {
            self.numerator.clone()
        } else {
            format!("{}/{}", self.numerator, self.denominator)
        }
    }
}

pub fn csv_line(mut w: impl Write, fields: &[String]) -> io::Result<()> {
    writeln!(w, "{}", fields.join(","))
}
