//! Parsing of inline descriptor flags and comma lists.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use charnum_core::{AmbientSpace, VarietyDescriptor};

pub fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<T>().map_err(|_| format!("bad {what} entry {x:?}")))
        .collect()
}

/// `"1,1;2,0"` → `[[1,1],[2,0]]`; empty text means no equations.
pub fn parse_multidegrees(s: &str) -> Result<Vec<Vec<u32>>, String> {
    s.split(';')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| parse_list(x, "degree"))
        .collect()
}

pub fn descriptor_from_flags(ambient: &str, degrees: Option<&str>) -> Result<VarietyDescriptor, String> {
    let factors = parse_list::<u32>(ambient, "ambient")?;
    let ambient = AmbientSpace::new(factors).map_err(|e| e.to_string())?;
    let multidegrees = parse_multidegrees(degrees.unwrap_or(""))?;
    VarietyDescriptor::new(ambient, multidegrees).map_err(|e| e.to_string())
}

/// Reads a descriptor document, or any report that carries one under
/// `"descriptor"`, so emitted JSON can be fed straight back in.
pub fn descriptor_from_file(path: &Path) -> Result<VarietyDescriptor, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let body = value.get("descriptor").cloned().unwrap_or(value);
    serde_json::from_value(body).map_err(|e| format!("{}: {e}", path.display()))
}
