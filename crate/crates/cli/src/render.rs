use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// An ordered record of named string fields.
#[derive(Debug, Clone, Default)]
pub struct Record(pub Vec<(&'static str, String)>);

impl Record {
    pub fn push(&mut self, key: &'static str, value: impl ToString) -> &mut Self {
        self.0.push((key, value.to_string()));
        self
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .0
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
            .collect();
        Value::Object(map)
    }
}

/// How a record looks in text mode.
#[derive(Debug, Clone, Copy)]
pub enum Text {
    /// One `key value` line per field.
    Labelled,
    /// The named field alone on one line.
    Only(&'static str),
}

/// Writes records in a fixed column order, one per line.
pub struct Table<W: Write> {
    format: Format,
    columns: &'static [&'static str],
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
    count: usize,
    text: Text,
}

impl<W: Write> Table<W> {
    pub fn new(out: W, format: Format, columns: &'static [&'static str], text: Text) -> io::Result<Self> {
        let (csv, out) = if format == Format::Csv {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(columns)?;
            (Some(writer), None)
        } else {
            (None, Some(out))
        };
        Ok(Table {
            format,
            columns,
            csv,
            out,
            count: 0,
            text,
        })
    }

    pub fn row(&mut self, record: &Record) -> io::Result<()> {
        debug_assert_eq!(
            record.0.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
            self.columns,
            "record columns"
        );
        self.count += 1;
        match self.format {
            Format::Csv => {
                let writer = self.csv.as_mut().expect("csv writer");
                writer.write_record(record.0.iter().map(|(_, v)| v.as_str()))?;
            }
            Format::Json => {
                let out = self.out.as_mut().expect("writer");
                writeln!(out, "{}", record.to_json())?;
            }
            Format::Text => {
                let out = self.out.as_mut().expect("writer");
                match self.text {
                    Text::Labelled => {
                        let width = self.columns.iter().map(|c| c.len()).max().unwrap_or(0);
                        for (k, v) in &record.0 {
                            writeln!(out, "{k:<width$} {v}")?;
                        }
                    }
                    Text::Only(key) => {
                        let value = record.0.iter().find(|(k, _)| *k == key).map_or("", |(_, v)| v);
                        writeln!(out, "{value}")?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Flushes, optionally followed by a count line.
    pub fn finish(self, with_count: bool) -> io::Result<()> {
        let count = self.count;
        let mut out = match self.csv {
            Some(writer) => writer.into_inner().map_err(|e| e.into_error())?,
            None => self.out.expect("writer"),
        };
        if with_count {
            match self.format {
                Format::Text => writeln!(out, "count {count}")?,
                Format::Json => writeln!(out, "{}", serde_json::json!({ "count": count.to_string() }))?,
                Format::Csv => writeln!(out, "# count {count}")?,
            }
        }
        out.flush()
    }
}
