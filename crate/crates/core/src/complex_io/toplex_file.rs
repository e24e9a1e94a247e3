//! One toplex per line, vertices as whitespace-separated names. `#` starts a
//! comment line.

use std::collections::HashSet;

use super::ToplexList;
use crate::error::{Error, Result};

pub fn parse_toplex_file(text: &str) -> Result<ToplexList> {
    let mut toplexes: Vec<Vec<&str>> = Vec::new();
    let mut pending_blank: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !toplexes.is_empty() && pending_blank.is_none() {
                pending_blank = Some(ln);
            }
            continue;
        }
        if let Some(blank) = pending_blank {
            return Err(Error::parse(blank, "empty line inside toplex list"));
        }
        let names: Vec<&str> = line.split_whitespace().collect();
        let mut seen = HashSet::with_capacity(names.len());
        for n in &names {
            if !seen.insert(*n) {
                return Err(Error::parse(ln, format!("vertex `{n}` repeated in toplex")));
            }
        }
        toplexes.push(names);
    }
    ToplexList::from_names(toplexes)
}

pub fn write_toplex_file(tl: &ToplexList) -> String {
    let mut out = String::new();
    for t in tl.toplexes() {
        let names: Vec<&str> = t.iter().map(|&v| tl.vertex_names()[v].as_str()).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
