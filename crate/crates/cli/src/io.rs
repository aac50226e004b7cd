use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Stdout, Write};

use serde::Serialize;

use crate::{Failure, Format};

/// Lines of the named file, or of standard input for `-`. Read errors end
/// the stream and are reported through `error`.
pub fn input_lines(path: &str) -> Result<Box<dyn Iterator<Item = io::Result<String>>>, Failure> {
    if path == "-" {
        return Ok(Box::new(io::stdin().lock().lines()));
    }
    let file = File::open(path).map_err(|e| Failure::input(format!("{path}: {e}")))?;
    Ok(Box::new(BufReader::new(file).lines()))
}

/// Writes records in the chosen format to standard output.
pub enum Sink {
    Text(BufWriter<Stdout>),
    JsonLines(BufWriter<Stdout>),
    Csv(Box<csv::Writer<BufWriter<Stdout>>>),
}

impl Sink {
    pub fn new(format: Format) -> Self {
        let out = BufWriter::new(io::stdout());
        match format {
            Format::Text => Sink::Text(out),
            Format::JsonLines => Sink::JsonLines(out),
            Format::Csv => Sink::Csv(Box::new(csv::Writer::from_writer(out))),
        }
    }

    /// `text` is used for the text format, `record` for json-lines and
    /// `row` for CSV.
    pub fn emit<R: Serialize, C: Serialize>(
        &mut self,
        text: &str,
        record: &R,
        row: &C,
    ) -> Result<(), Failure> {
        match self {
            Sink::Text(w) => writeln!(w, "{text}")?,
            Sink::JsonLines(w) => {
                serde_json::to_writer(&mut *w, record)?;
                writeln!(w)?;
            }
            Sink::Csv(w) => w.serialize(row)?,
        }
        Ok(())
    }

    pub fn is_text(&self) -> bool {
        matches!(self, Sink::Text(_))
    }

    /// Raw text on the output stream (text format only).
    pub fn write_raw(&mut self, text: &str) -> Result<(), Failure> {
        if let Sink::Text(w) = self {
            w.write_all(text.as_bytes())?;
        }
        Ok(())
    }

    pub fn finish(self) -> Result<(), Failure> {
        match self {
            Sink::Text(mut w) | Sink::JsonLines(mut w) => w.flush()?,
            Sink::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}
