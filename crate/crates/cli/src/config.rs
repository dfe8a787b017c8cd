//! Flat JSON config files. Every key mirrors a long flag name (dashes and
//! underscores are interchangeable); command-line flags always win.

use serde_json::{Map, Value};
use std::path::Path;

#[derive(Debug, Default)]
pub struct Config {
    values: Map<String, Value>,
}

fn normalize(key: &str) -> String {
    key.replace('-', "_")
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| format!("config {} is not valid JSON: {e}", path.display()))?;
        match value {
            Value::Object(map) => {
                let mut values = Map::new();
                for (k, v) in map {
                    values.insert(normalize(&k), v);
                }
                Ok(Config { values })
            }
            _ => Err(format!(
                "config {} must be a flat JSON object",
                path.display()
            )),
        }
    }

    fn get(&self, key: &str) -> Option<&Value> {
        self.values.get(&normalize(key))
    }

    pub fn f64(&self, key: &str) -> Option<f64> {
        self.get(key).and_then(Value::as_f64)
    }

    pub fn u32(&self, key: &str) -> Option<u32> {
        self.get(key).and_then(Value::as_u64).map(|v| v as u32)
    }

    pub fn i64(&self, key: &str) -> Option<i64> {
        self.get(key).and_then(Value::as_i64)
    }

    pub fn usize(&self, key: &str) -> Option<usize> {
        self.get(key).and_then(Value::as_u64).map(|v| v as usize)
    }

    pub fn string(&self, key: &str) -> Option<String> {
        self.get(key).map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
    }

    pub fn u32_list(&self, key: &str) -> Option<Vec<u32>> {
        match self.get(key)? {
            Value::Array(items) => items
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32))
                .collect(),
            Value::Number(n) => n.as_u64().map(|x| vec![x as u32]),
            _ => None,
        }
    }
}
