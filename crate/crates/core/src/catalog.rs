//! Group files and the bundled catalogs.
//!
//! A group file is a JSON object
//! `{ "name": …, "degree": …, "generators": ["(1 2 3)", …] }` with 1-based
//! cycle notation; a catalog is an array of such objects.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermutationGroup;

const SMALL_GROUPS: &str = include_str!("../catalog/small_groups.json");
const PRIMITIVE_GROUPS: &str = include_str!("../catalog/primitive_groups.json");
const SP6_2: &str = include_str!("../catalog/sp6_2.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupFile {
    pub fn build(&self) -> Result<NamedGroup> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        if self.degree == 0 {
            return Err(Error::Zero);
        }
        Ok(NamedGroup {
            name: self.name.clone(),
            group: PermutationGroup::from_cycles(self.degree, &gens)?,
        })
    }
}

/// A group with its catalog name.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: PermutationGroup,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(GroupFile),
    Many(Vec<GroupFile>),
}

/// Parses a single group file or an array of them.
pub fn parse_group_files(text: &str) -> Result<Vec<GroupFile>> {
    let parsed: OneOrMany = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Ok(match parsed {
        OneOrMany::One(f) => vec![f],
        OneOrMany::Many(v) => v,
    })
}

pub fn load_groups(text: &str) -> Result<Vec<NamedGroup>> {
    parse_group_files(text)?.iter().map(GroupFile::build).collect()
}

pub fn small_groups() -> Result<Vec<NamedGroup>> {
    load_groups(SMALL_GROUPS)
}

/// Primitive groups of degree at most 12; transitivity and primitivity are
/// re-checked for every entry.
pub fn primitive_groups() -> Result<Vec<NamedGroup>> {
    let groups = load_groups(PRIMITIVE_GROUPS)?;
    for g in &groups {
        if !g.group.is_transitive() || !g.group.is_primitive()? {
            return Err(Error::Format(format!("catalog entry {} is not primitive", g.name)));
        }
    }
    Ok(groups)
}

/// `Sp(6,2)` on the 63 nonzero vectors of `F_2^6`.
pub fn sp6_2() -> Result<NamedGroup> {
    load_groups(SP6_2)?
        .pop()
        .ok_or_else(|| Error::Format("empty Sp(6,2) file".into()))
}

/// Every bundled small and primitive group, small groups first.
pub fn bundled_groups() -> Result<Vec<NamedGroup>> {
    let mut all = small_groups()?;
    all.extend(primitive_groups()?);
    Ok(all)
}

/// Looks a group up by name among the bundled catalogs.
pub fn find(name: &str) -> Result<NamedGroup> {
    if name == "Sp(6,2)" {
        return sp6_2();
    }
    bundled_groups()?
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::Format(format!("no bundled group named {name:?}")))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;

    #[test]
    fn single_or_array() {
        let one = r#"{"name":"C3","degree":3,"generators":["(1 2 3)"]}"#;
        assert_eq!(load_groups(one).unwrap().len(), 1);
        let many = format!("[{one},{one}]");
        assert_eq!(load_groups(&many).unwrap().len(), 2);
        assert!(load_groups("{").is_err());
        let bad = r#"{"name":"x","degree":3,"generators":["(1 4)"]}"#;
        assert!(matches!(load_groups(bad), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn bundled_catalogs_load() {
        assert_eq!(small_groups().unwrap().len(), 33);
        let prim = primitive_groups().unwrap();
        assert_eq!(prim.len(), 62);
        let a5 = find("A5").unwrap();
        assert_eq!(a5.group.order(), &BigUint::from(60u32));
    }
}
