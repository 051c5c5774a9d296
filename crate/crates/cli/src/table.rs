use serde_json::{Map, Value};

use crate::args::Format;

/// Rows of named values, rendered in one of the output formats.
#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    plain_line: fn(&[Value]) -> String,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
            plain_line: space_separated,
        }
    }

    pub fn with_plain_line(mut self, line: fn(&[Value]) -> String) -> Self {
        self.plain_line = line;
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        match format {
            Format::Plain => Ok(self.render_plain()),
            Format::Json => Ok(self.render_json()),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_plain(&self) -> String {
        self.rows
            .iter()
            .map(|row| (self.plain_line)(row) + "\n")
            .collect()
    }

    fn render_json(&self) -> String {
        let objects: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: Map<String, Value> = self
                    .columns
                    .iter()
                    .map(|c| c.to_string())
                    .zip(row.iter().cloned())
                    .collect();
                Value::Object(map)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&Value::Array(objects)).expect("serializable");
        out.push('\n');
        out
    }

    fn render_csv(&self) -> Result<String, csv::Error> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(|v| cell(v, "")))?;
        }
        let bytes = writer.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("utf-8 input"))
    }
}

/// Text form of a value outside JSON: strings unquoted, nested values as
/// compact JSON, `null` as `missing`.
pub fn cell(value: &Value, missing: &str) -> String {
    match value {
        Value::Null => missing.to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn space_separated(row: &[Value]) -> String {
    row.iter()
        .map(|v| cell(v, "-"))
        .collect::<Vec<_>>()
        .join(" ")
}
