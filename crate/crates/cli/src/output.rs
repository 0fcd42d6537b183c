use serde::Serialize;

use misbound::report::to_json;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// JSON with sorted keys and floats at 12 significant digits.
pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(value)).expect("JSON values serialize");
    s.push('\n');
    s
}

/// One or many: a single report prints as an object, several as an array.
pub fn json_list<T: Serialize>(items: &[T]) -> String {
    match items {
        [one] => json(one),
        many => json(&many),
    }
}

pub fn csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| CliError::Io(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Floats for CSV cells, rounded like the JSON output.
pub fn num(x: f64) -> f64 {
    misbound::report::round_sig(x)
}

/// `a;b;c` for list-valued CSV cells.
pub fn joined<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}
