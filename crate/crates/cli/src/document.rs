use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// The machine-readable result of one command. Keys keep insertion order,
/// so equal inputs give byte-identical output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub field: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub version: String,
}

impl ResultDocument {
    pub fn new(command: &str, field: &str) -> Self {
        ResultDocument {
            command: command.to_string(),
            field: field.to_string(),
            inputs: Map::new(),
            outputs: Map::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents hold plain JSON values")
    }
}
