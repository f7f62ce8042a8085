//! The shipped Coxeter degree tables. The data lives in a versioned JSON
//! file with provenance notes; group order is recorded alongside the degrees
//! and validated against their product at load time.

use crate::CliError;

pub const DEGREE_TABLE_JSON: &str = include_str!("../data/coxeter_degrees.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDegrees {
    pub name: String,
    pub degrees: Vec<usize>,
    pub order: u64,
}

/// Load and validate the degree table; groups come back sorted by name.
pub fn degree_table() -> Vec<GroupDegrees> {
    let value: serde_json::Value =
        serde_json::from_str(DEGREE_TABLE_JSON).expect("embedded degree table parses");
    let groups = value
        .get("groups")
        .and_then(|g| g.as_object())
        .expect("degree table has a groups object");
    groups
        .iter()
        .map(|(name, entry)| {
            let degrees: Vec<usize> = entry
                .get("degrees")
                .and_then(|d| d.as_array())
                .expect("degrees array")
                .iter()
                .map(|v| v.as_u64().expect("positive degree") as usize)
                .collect();
            let order = entry.get("order").and_then(|o| o.as_u64()).expect("order");
            let product: u64 = degrees.iter().map(|&d| d as u64).product();
            assert_eq!(product, order, "degree table is inconsistent for {name}");
            GroupDegrees {
                name: name.clone(),
                degrees,
                order,
            }
        })
        .collect()
}

/// Look a group up by name (exact match).
pub fn group_by_name(name: &str) -> Result<GroupDegrees, CliError> {
    let table = degree_table();
    table.iter().find(|g| g.name == name).cloned().ok_or_else(|| {
        let names: Vec<&str> = table.iter().map(|g| g.name.as_str()).collect();
        CliError::Domain(format!(
            "unknown group `{name}`; available: {}",
            names.join(", ")
        ))
    })
}
