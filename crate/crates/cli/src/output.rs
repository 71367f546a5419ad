//! Single-writer output layer. All command output funnels through one
//! `Emitter`, so ordering is deterministic regardless of how the compute
//! side parallelizes. JSON records follow the stable schema
//! `{"schema":1,"kind":...,"params":{...},"payload":...}` with big-integer
//! coefficients as decimal strings; the timestamp field (seconds since
//! the epoch) can be suppressed for byte-identical reruns.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};
use stirlab_core::exactmath::IntPolynomial;

use crate::Format;

pub const SCHEMA_VERSION: u64 = 1;

pub struct Emitter {
    writer: Box<dyn Write + Send>,
    pub format: Format,
    timestamp: Option<u64>,
}

impl Emitter {
    pub fn new(writer: Box<dyn Write + Send>, format: Format, with_timestamp: bool) -> Self {
        let timestamp = with_timestamp.then(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        });
        Emitter {
            writer,
            format,
            timestamp,
        }
    }

    pub fn line(&mut self, text: &str) -> std::io::Result<()> {
        writeln!(self.writer, "{text}")
    }

    pub fn record(&mut self, kind: &str, params: Value, payload: Value) -> std::io::Result<()> {
        let mut record = json!({
            "schema": SCHEMA_VERSION,
            "kind": kind,
            "params": params,
            "payload": payload,
        });
        if let Some(ts) = self.timestamp {
            record["timestamp"] = json!(ts);
        }
        writeln!(self.writer, "{record}")
    }

    pub fn flush(&mut self) -> std::io::Result<()> {
        self.writer.flush()
    }
}

/// Coefficients as decimal strings, ascending degree. Values exceed 64
/// bits well inside desk scale, and native JSON numbers would be mangled
/// by common consumers.
pub fn coeff_strings(poly: &IntPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(|c| c.to_string()).collect()
}
