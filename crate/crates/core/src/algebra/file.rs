use super::{FiniteSemimodule, FiniteSemiring, Side};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// On-disk form of a tabulated structure:
/// `{"kind":"semiring","size":m,"add":[[..]],"mul":[[..]],"zero":i,"unit":j}`
/// or `{"kind":"semimodule","size":g,"add":[[..]],"action":[[..]],"zero":i,"ring":{..}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StructureFile {
    Semiring(SemiringFile),
    Semimodule(SemimoduleFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemiringFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SemimoduleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
    pub zero: usize,
    #[serde(default)]
    pub side: Side,
    pub ring: SemiringFile,
}

#[derive(Clone, Debug)]
pub enum Structure {
    Semiring(FiniteSemiring),
    Semimodule(FiniteSemimodule),
}

fn check_size(declared: Option<usize>, actual: usize) -> Result<()> {
    match declared {
        Some(n) if n != actual => Err(Error::MalformedTable(format!("size {n} does not match a table with {actual} rows"))),
        _ => Ok(()),
    }
}

impl SemiringFile {
    pub fn load(self) -> Result<FiniteSemiring> {
        check_size(self.size, self.add.len())?;
        FiniteSemiring::from_tables(self.add, self.mul, self.zero, self.unit)
    }
}

impl From<&FiniteSemiring> for SemiringFile {
    fn from(r: &FiniteSemiring) -> Self {
        SemiringFile {
            size: Some(r.size()),
            add: r.add_table().to_vec(),
            mul: r.mul_table().to_vec(),
            zero: Some(r.zero_index()),
            unit: Some(r.unit_index()),
        }
    }
}

impl SemimoduleFile {
    pub fn load(self) -> Result<FiniteSemimodule> {
        check_size(self.size, self.add.len())?;
        FiniteSemimodule::from_tables(self.ring.load()?, self.add, self.zero, self.action, self.side)
    }
}

impl StructureFile {
    pub fn load(self) -> Result<Structure> {
        Ok(match self {
            StructureFile::Semiring(f) => Structure::Semiring(f.load()?),
            StructureFile::Semimodule(f) => Structure::Semimodule(f.load()?),
        })
    }

    pub fn parse(json: &str) -> Result<Structure> {
        serde_json::from_str::<StructureFile>(json)?.load()
    }
}
