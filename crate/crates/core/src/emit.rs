//! Deterministic serialization of [`StarTable`]s as JSON, CSV or Markdown.
//!
//! Entries are written in `(J1 bits, J2 bits)` order. JSON subsets are label
//! arrays; CSV and Markdown use the text form (`"1,2"`, `"-"` for empty).

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::CoxeterDiagram;
use crate::error::{Error, Result};
use crate::facemonoid::table::{EntryStatus, StarTable, TableFlags};
use crate::subset::SubsetJ;

/// Tables up to this rank are drawn as a matrix in Markdown.
pub const MD_MATRIX_MAX_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" | "markdown" => Ok(OutputFormat::Md),
            other => Err(Error::Syntax {
                what: "output format",
                input: other.to_string(),
                reason: "expected json, csv or md".into(),
            }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    j1: SubsetJ,
    j2: SubsetJ,
    star: SubsetJ,
}

#[derive(Deserialize)]
struct TableJson {
    #[serde(rename = "type")]
    kind: String,
    rank: usize,
    entries: Vec<EntryJson>,
    verified: TableFlags,
}

pub fn emit_table(t: &StarTable, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(t),
        OutputFormat::Csv => to_csv(t),
        OutputFormat::Md => to_markdown(t),
    }
}

/// One entry per line inside an otherwise compact document.
pub fn to_json(t: &StarTable) -> String {
    let kind = serde_json::to_string(&t.diagram().to_string()).expect("serializable");
    let mut out = String::new();
    write!(out, "{{\"type\":{kind},\"rank\":{},\"entries\":[", t.rank()).unwrap();
    for (k, (j1, j2, star)) in t.entries().enumerate() {
        out.push_str(if k == 0 { "\n" } else { ",\n" });
        out.push_str(&serde_json::to_string(&EntryJson { j1, j2, star }).expect("serializable"));
    }
    let flags = serde_json::to_string(&t.flags()).expect("serializable");
    write!(out, "\n],\"verified\":{flags}}}\n").unwrap();
    out
}

pub fn to_csv(t: &StarTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["j1", "j2", "star"]).expect("in-memory write");
    for (j1, j2, star) in t.entries() {
        w.write_record([j1.to_string(), j2.to_string(), star.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("ascii")
}

pub fn to_markdown(t: &StarTable) -> String {
    let mut out = String::new();
    let flags = t.flags();
    writeln!(out, "# {} ⋆ table\n", t.diagram()).unwrap();
    writeln!(
        out,
        "closure: {}, commutative: {}, containment: {}, closed form: {}\n",
        flags.closure, flags.commutative, flags.containment, flags.closed_form_match
    )
    .unwrap();
    let subsets: Vec<SubsetJ> = SubsetJ::all(t.rank()).collect();
    if t.rank() <= MD_MATRIX_MAX_RANK {
        out.push_str("| J1 \\ J2 |");
        for j2 in &subsets {
            write!(out, " {j2} |").unwrap();
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(subsets.len()));
        out.push('\n');
        for &j1 in &subsets {
            write!(out, "| **{j1}** |").unwrap();
            for &j2 in &subsets {
                write!(out, " {} |", t.entry(j1, j2)).unwrap();
            }
            out.push('\n');
        }
    } else {
        out.push_str("| J1 | J2 | J1 ⋆ J2 |\n|---|---|---|\n");
        for (j1, j2, star) in t.entries() {
            writeln!(out, "| {j1} | {j2} | {star} |").unwrap();
        }
    }
    out
}

/// Reads a table written by [`to_json`]. Per-entry flags are taken from the
/// document-level `verified` block.
pub fn parse_json(text: &str) -> Result<StarTable> {
    let syntax = |reason: String| Error::Syntax { what: "table JSON", input: String::new(), reason };
    let doc: TableJson = serde_json::from_str(text).map_err(|e| syntax(e.to_string()))?;
    let diagram = CoxeterDiagram::parse(&doc.kind)?;
    let rank = diagram.rank();
    if doc.rank != rank {
        return Err(syntax(format!("rank {} does not match type {}", doc.rank, doc.kind)));
    }
    let size = 1usize << (2 * rank);
    if doc.entries.len() != size {
        return Err(syntax(format!("expected {size} entries, found {}", doc.entries.len())));
    }
    let v = doc.verified;
    let status = EntryStatus {
        closure: v.closure,
        commutative: v.commutative,
        containment: v.containment,
        star_form: v.closure,
        closed_form: Some(v.closed_form_match),
    };
    let mut entries = vec![None; size];
    for e in doc.entries {
        for j in [e.j1, e.j2, e.star] {
            diagram.check_subset(j)?;
        }
        let slot = ((e.j1.bits() << rank) | e.j2.bits()) as usize;
        if entries[slot].replace(e.star).is_some() {
            return Err(syntax(format!("duplicate entry for [{}] [{}]", e.j1, e.j2)));
        }
    }
    let entries = entries.into_iter().map(|e| e.expect("all slots filled")).collect();
    Ok(StarTable::from_parts(diagram, entries, vec![status; size]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facemonoid::{full_table, DEFAULT_RANK_BOUND};
    use crate::CoxeterGroup;

    fn table(t: &str) -> StarTable {
        full_table(&CoxeterGroup::parse(t).unwrap(), DEFAULT_RANK_BOUND).unwrap()
    }

    #[test]
    fn a1_json() {
        let text = to_json(&table("A1"));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["type"], "A1");
        assert_eq!(v["rank"], 1);
        assert_eq!(v["entries"].as_array().unwrap().len(), 4);
        assert_eq!(v["entries"][3], serde_json::json!({"j1": [1], "j2": [1], "star": [1]}));
        for flag in ["closure", "commutative", "containment", "closed_form_match"] {
            assert_eq!(v["verified"][flag], true, "{flag}");
        }
    }

    #[test]
    fn csv_uses_dash_for_empty() {
        let text = to_csv(&table("A2"));
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("j1,j2,star"));
        assert_eq!(lines.next(), Some("-,-,-"));
        assert!(text.contains("\"1,2\",\"1,2\",\"1,2\""));
    }

    #[test]
    fn e6_cross_case_in_json() {
        let text = to_json(&table("E6"));
        assert!(text.contains(r#"{"j1":[2,3,4,5,6],"j2":[1,3,4,5,6],"star":[4,6]}"#));
    }

    #[test]
    fn json_round_trip_is_exact() {
        for t in ["A1", "B3", "D4", "I2(7)", "A2xA1"] {
            let original = table(t);
            let text = to_json(&original);
            let parsed = parse_json(&text).unwrap();
            assert_eq!(parsed.diagram(), original.diagram());
            assert!(parsed.entries().eq(original.entries()), "{t}");
            assert_eq!(parsed.flags(), original.flags());
            assert_eq!(to_json(&parsed), text);
        }
    }

    #[test]
    fn output_is_deterministic() {
        for f in [OutputFormat::Json, OutputFormat::Csv, OutputFormat::Md] {
            assert_eq!(emit_table(&table("B3"), f), emit_table(&table("B3"), f));
        }
    }

    #[test]
    fn markdown_shapes() {
        let small = to_markdown(&table("A2"));
        assert!(small.contains("| J1 \\ J2 | - | 1 | 2 | 1,2 |"));
        let large = to_markdown(&table("A5"));
        assert!(large.contains("| J1 | J2 | J1 ⋆ J2 |"));
        assert_eq!(large.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| J1")).count(), 1 << 10);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_json("{}").is_err());
        let text = to_json(&table("A1")).replace("\"rank\":1", "\"rank\":2");
        assert!(parse_json(&text).is_err());
    }
}
