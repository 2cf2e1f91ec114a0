//! The report document shared by every subcommand.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

pub const TOOL: &str = "epl";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One run: the configuration echo, a result block per module, and warnings.
/// Keys are kept sorted so equal runs serialize to equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: Value,
    pub blocks: BTreeMap<String, Value>,
    pub warnings: Vec<String>,
}

fn to_value(v: &impl Serialize) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Format(e.to_string()))
}

impl ReportDocument {
    pub fn new(command: &str, config: &impl Serialize) -> Result<Self> {
        Ok(Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            config: to_value(config)?,
            blocks: BTreeMap::new(),
            warnings: Vec::new(),
        })
    }

    pub fn block(&mut self, name: &str, body: &impl Serialize) -> Result<()> {
        self.blocks.insert(name.into(), to_value(body)?);
        Ok(())
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}
