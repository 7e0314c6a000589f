//! Group sources and coset-digraph spec files.

use std::fs;
use std::path::Path;

use dgsym::catalog::{find, load_groups, GroupFile, NamedGroup};
use dgsym::{CosetDigraphSpec, Digraph, Permutation, SubgroupHandle};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Engine(#[from] dgsym::Error),
    #[error("{0}")]
    Invalid(String),
}

fn read(path: &str) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.to_string(),
        source,
    })
}

/// `catalog:NAME` for a bundled group, otherwise a group file path. A file
/// holding several groups must be narrowed with `#NAME`.
pub fn load_group(source: &str) -> Result<NamedGroup, InputError> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return Ok(find(name)?);
    }
    let (path, name) = match source.split_once('#') {
        Some((p, n)) => (p, Some(n)),
        None => (source, None),
    };
    let mut groups = load_groups(&read(path)?)?;
    match name {
        Some(n) => groups
            .into_iter()
            .find(|g| g.name == n)
            .ok_or_else(|| InputError::Invalid(format!("{path} has no group named {n:?}"))),
        None if groups.len() == 1 => Ok(groups.remove(0)),
        None => Err(InputError::Invalid(format!(
            "{path} holds {} groups; select one with {path}#NAME",
            groups.len()
        ))),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupRef {
    Source(String),
    Inline(GroupFile),
}

#[derive(Deserialize)]
struct SpecFile {
    group: GroupRef,
    subgroup_gens: Vec<String>,
    g: String,
}

/// Parses `{ "group": …, "subgroup_gens": [...], "g": "…" }`; relative
/// group paths are resolved against the spec file's directory.
pub fn parse_spec(text: &str, base: Option<&Path>) -> Result<CosetDigraphSpec, InputError> {
    let file: SpecFile = serde_json::from_str(text).map_err(|e| InputError::Invalid(e.to_string()))?;
    let group = match file.group {
        GroupRef::Inline(g) => g.build()?,
        GroupRef::Source(s) if s.starts_with("catalog:") => load_group(&s)?,
        GroupRef::Source(s) => {
            let resolved = match base {
                Some(dir) if Path::new(&s).is_relative() => dir.join(&s).to_string_lossy().into_owned(),
                _ => s,
            };
            load_group(&resolved)?
        }
    };
    let n = group.group.degree();
    let gens = file
        .subgroup_gens
        .iter()
        .map(|c| Permutation::parse(c, n))
        .collect::<dgsym::Result<Vec<_>>>()?;
    let h = SubgroupHandle::new(&group.group, gens)?;
    let g = Permutation::parse(&file.g, n)?;
    Ok(CosetDigraphSpec::new(&group.group, &h, &g)?)
}

pub fn load_spec(path: &str) -> Result<CosetDigraphSpec, InputError> {
    parse_spec(&read(path)?, Path::new(path).parent())
}

pub fn load_digraph(path: &str) -> Result<Digraph, InputError> {
    Ok(Digraph::parse_edge_list(&read(path)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_catalog_specs() {
        let inline = r#"{"group": {"name": "Z5", "degree": 5, "generators": ["(1 2 3 4 5)"]},
                         "subgroup_gens": [], "g": "(1 2 3 4 5)"}"#;
        let spec = parse_spec(inline, None).unwrap();
        assert_eq!(spec.valency(), 1);
        let cat = r#"{"group": "catalog:F21", "subgroup_gens": ["(2 3 5)(4 7 6)"], "g": "(1 2 3 4 5 6 7)"}"#;
        assert!(parse_spec(cat, None).is_ok());
        let bad = r#"{"group": "catalog:S3", "subgroup_gens": [], "g": "(1 2)"}"#;
        assert!(matches!(parse_spec(bad, None), Err(InputError::Engine(dgsym::Error::InvalidSpec(_)))));
    }
}
