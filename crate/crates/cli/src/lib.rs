//! Library side of the `croof` command-line tool. Each subcommand is a plain
//! function from validated inputs to a serializable document; the binary only
//! handles flags, files and exit codes.

pub mod analyze;
pub mod decompose;
pub mod ensemble;
mod error;
pub mod state;

pub use error::{CliError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Pretty JSON with a trailing newline. Non-finite numbers would come out as
/// `null`, so any `null` left after skipping absent fields is an error.
pub fn to_json<T: serde::Serialize>(doc: &T) -> Result<String> {
    let value = serde_json::to_value(doc).map_err(|e| CliError::Invariant(e.to_string()))?;
    if has_null(&value) {
        return Err(CliError::Invariant("report contains a non-finite number".into()));
    }
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    Ok(text)
}

fn has_null(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Null => true,
        serde_json::Value::Array(a) => a.iter().any(has_null),
        serde_json::Value::Object(o) => o.values().any(has_null),
        _ => false,
    }
}
