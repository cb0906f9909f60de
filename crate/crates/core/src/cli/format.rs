//! Versioned JSON documents for designs, difference matrices and orthogonal
//! arrays.
//!
//! Every document carries a `digest` of its mathematical content (not of the
//! provenance or certificates), written as `sha256:<hex>`. Loading rejects a
//! document whose digest does not match. Cached certificates are carried
//! through unchanged and never consulted as evidence.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::construct::{DifferenceMatrix, OrthogonalArray};
use crate::design::{Block, CyclicDesign, Kind, OrbitKind};
use crate::{Error, Result};

pub const DESIGN_FORMAT: &str = "cyclic-design/1";
pub const DM_FORMAT: &str = "difference-matrix/1";
pub const OA_FORMAT: &str = "orthogonal-array/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngredientRef {
    pub role: String,
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub constructor: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ingredients: Vec<IngredientRef>,
}

impl Provenance {
    pub fn new(constructor: &str) -> Self {
        Self { constructor: constructor.into(), ..Self::default() }
    }

    pub fn param(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.params.insert(name.into(), value.into());
        self
    }

    pub fn ingredient(mut self, role: &str, digest: &str) -> Self {
        self.ingredients.push(IngredientRef { role: role.into(), digest: digest.into() });
        self
    }
}

/// A previously computed verdict. Advisory only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    pub verdict: bool,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseBlockEntry {
    pub orbit: OrbitKind,
    pub points: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignDocument {
    pub format: String,
    pub v: u32,
    pub k: usize,
    pub kind: Kind,
    pub base_blocks: Vec<BaseBlockEntry>,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
    pub digest: String,
}

fn sha256_tag(content: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(content.as_bytes())))
}

fn rows_text(rows: &[Vec<u32>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Digest of the base-block form: a header line `v k kind` followed by one
/// line per base block.
pub fn design_digest(d: &CyclicDesign) -> String {
    let kind = match d.kind() {
        Kind::Design => "design",
        Kind::Packing => "packing",
    };
    let rows: Vec<Vec<u32>> = d.base_blocks().iter().map(|b| b.block.points().to_vec()).collect();
    sha256_tag(&format!("{DESIGN_FORMAT}\n{} {} {kind}\n{}", d.order(), d.block_size(), rows_text(&rows)))
}

pub fn dm_digest(m: &DifferenceMatrix) -> String {
    sha256_tag(&format!("{DM_FORMAT}\n{}\n{}", m.modulus(), rows_text(m.rows())))
}

pub fn oa_digest(a: &OrthogonalArray) -> String {
    let class = a
        .parallel_class()
        .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .unwrap_or_else(|| "-".into());
    sha256_tag(&format!("{OA_FORMAT}\n{}\n{class}\n{}", a.symbols(), rows_text(a.rows())))
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Format(format!("expected format {expected:?}, found {found:?}")));
    }
    Ok(())
}

fn check_digest(stored: &str, computed: &str) -> Result<()> {
    if stored != computed {
        return Err(Error::Format(format!(
            "content digest mismatch: document says {stored}, content hashes to {computed}"
        )));
    }
    Ok(())
}

impl DesignDocument {
    pub fn new(d: &CyclicDesign, provenance: Provenance) -> Self {
        Self {
            format: DESIGN_FORMAT.into(),
            v: d.order(),
            k: d.block_size(),
            kind: d.kind(),
            base_blocks: d
                .base_blocks()
                .iter()
                .map(|b| BaseBlockEntry { orbit: b.orbit, points: b.block.points().to_vec() })
                .collect(),
            provenance,
            certificates: Vec::new(),
            digest: design_digest(d),
        }
    }

    /// Rebuilds the design, checking the format tag, the orbit tags and the
    /// content digest.
    pub fn to_design(&self) -> Result<CyclicDesign> {
        check_format(&self.format, DESIGN_FORMAT)?;
        let blocks = self.base_blocks.iter().map(|b| Block::new(b.points.clone())).collect::<Result<Vec<_>>>()?;
        let d = CyclicDesign::new(self.v, self.k, self.kind, blocks)?;
        for entry in &self.base_blocks {
            let canon = Block::new(entry.points.clone())?.canonical_translate(self.v);
            let actual = d.base_blocks().iter().find(|b| b.block == canon).map(|b| b.orbit);
            if actual != Some(entry.orbit) {
                return Err(Error::Format(format!("base block {canon} has the wrong orbit tag")));
            }
        }
        check_digest(&self.digest, &design_digest(&d))?;
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmDocument {
    pub format: String,
    pub v: u32,
    pub rows: Vec<Vec<u32>>,
    pub provenance: Provenance,
    pub digest: String,
}

impl DmDocument {
    pub fn new(m: &DifferenceMatrix, provenance: Provenance) -> Self {
        Self {
            format: DM_FORMAT.into(),
            v: m.modulus(),
            rows: m.rows().to_vec(),
            provenance,
            digest: dm_digest(m),
        }
    }

    pub fn to_matrix(&self) -> Result<DifferenceMatrix> {
        check_format(&self.format, DM_FORMAT)?;
        let m = DifferenceMatrix::new(self.v, self.rows.clone())?;
        check_digest(&self.digest, &dm_digest(&m))?;
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OaDocument {
    pub format: String,
    pub s: u32,
    pub rows: Vec<Vec<u32>>,
    #[serde(default)]
    pub parallel_class: Option<Vec<usize>>,
    pub provenance: Provenance,
    pub digest: String,
}

impl OaDocument {
    pub fn new(a: &OrthogonalArray, provenance: Provenance) -> Self {
        Self {
            format: OA_FORMAT.into(),
            s: a.symbols(),
            rows: a.rows().to_vec(),
            parallel_class: a.parallel_class().map(<[usize]>::to_vec),
            provenance,
            digest: oa_digest(a),
        }
    }

    pub fn to_array(&self) -> Result<OrthogonalArray> {
        check_format(&self.format, OA_FORMAT)?;
        let a = OrthogonalArray::new(self.s, self.rows.clone(), self.parallel_class.clone())?;
        check_digest(&self.digest, &oa_digest(&a))?;
        Ok(a)
    }
}

/// Any of the three document kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Design(DesignDocument),
    Dm(DmDocument),
    Oa(OaDocument),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let tag = value
            .get("format")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("missing format tag".into()))?
            .to_string();
        let de = |e: serde_json::Error| Error::Format(e.to_string());
        match tag.as_str() {
            DESIGN_FORMAT => serde_json::from_value(value).map(Document::Design).map_err(de),
            DM_FORMAT => serde_json::from_value(value).map(Document::Dm).map_err(de),
            OA_FORMAT => serde_json::from_value(value).map(Document::Oa).map_err(de),
            other => Err(Error::Format(format!("unknown format {other:?}"))),
        }
    }

    pub fn to_json(&self) -> String {
        let out = match self {
            Document::Design(d) => serde_json::to_string_pretty(d),
            Document::Dm(d) => serde_json::to_string_pretty(d),
            Document::Oa(d) => serde_json::to_string_pretty(d),
        };
        out.expect("documents serialize") + "\n"
    }

    pub fn digest(&self) -> &str {
        match self {
            Document::Design(d) => &d.digest,
            Document::Dm(d) => &d.digest,
            Document::Oa(d) => &d.digest,
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()).map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
    }

    pub fn into_design(self) -> Result<(CyclicDesign, DesignDocument)> {
        match self {
            Document::Design(doc) => Ok((doc.to_design()?, doc)),
            _ => Err(Error::Format(format!("expected a {DESIGN_FORMAT} document"))),
        }
    }

    pub fn into_dm(self) -> Result<(DifferenceMatrix, DmDocument)> {
        match self {
            Document::Dm(doc) => Ok((doc.to_matrix()?, doc)),
            _ => Err(Error::Format(format!("expected a {DM_FORMAT} document"))),
        }
    }

    pub fn into_oa(self) -> Result<(OrthogonalArray, OaDocument)> {
        match self {
            Document::Oa(doc) => Ok((doc.to_array()?, doc)),
            _ => Err(Error::Format(format!("expected a {OA_FORMAT} document"))),
        }
    }
}
