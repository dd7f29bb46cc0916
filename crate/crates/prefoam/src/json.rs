//! JSON foam files. Facet ids may be strings or integers; seams refer to
//! facets by id. Omitted boundary counts are derived from the seams.

use crate::error::{FoamError, Result};
use crate::gl2::{DoubleFacet, Gl2Prefoam, Seam, ThinFacet};
use crate::gln::{GlNFacet, GlNPrefoam, GlNSeam};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq, PartialOrd, Ord)]
#[serde(untagged)]
enum Id {
    Num(u64),
    Str(String),
}

impl Id {
    fn key(&self) -> String {
        match self {
            Id::Num(n) => n.to_string(),
            Id::Str(s) => s.clone(),
        }
    }
}

#[derive(Deserialize)]
struct ThinIn {
    id: Id,
    #[serde(default)]
    genus: u32,
    boundary: Option<u32>,
    #[serde(default)]
    dots: u32,
}

#[derive(Deserialize)]
struct DoubleIn {
    id: Id,
    #[serde(default)]
    genus: u32,
    boundary: Option<u32>,
}

#[derive(Deserialize)]
struct FacetIn {
    id: Id,
    thickness: u32,
    #[serde(default)]
    genus: u32,
    boundary: Option<u32>,
    #[serde(default)]
    decoration: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeamIn {
    Gl2 { preferred: Id, other: Id, double: Id },
    GlN { a: Id, b: Id, ab: Id, #[serde(default = "yes")] flag: bool },
}

fn yes() -> bool {
    true
}

#[derive(Deserialize)]
struct FoamIn {
    #[serde(rename = "type")]
    kind: String,
    #[serde(rename = "N")]
    n: Option<usize>,
    #[serde(default)]
    thin_facets: Vec<ThinIn>,
    #[serde(default)]
    double_facets: Vec<DoubleIn>,
    #[serde(default)]
    facets: Vec<FacetIn>,
    #[serde(default)]
    seams: Vec<SeamIn>,
}

/// A parsed foam file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoamFile {
    Gl2(Gl2Prefoam),
    GlN(GlNPrefoam),
}

fn lookup(index: &BTreeMap<String, usize>, id: &Id, what: &str) -> Result<usize> {
    index.get(&id.key()).copied().ok_or_else(|| FoamError::invalid(&id.key(), format!("unknown {what} facet")))
}

pub fn parse_foam(text: &str) -> Result<FoamFile> {
    let raw: FoamIn = serde_json::from_str(text)?;
    match raw.kind.as_str() {
        "gl2_prefoam" => {
            let mut f = Gl2Prefoam::new();
            let mut explicit = Vec::new();
            let thin_ix: BTreeMap<String, usize> = raw.thin_facets.iter().enumerate().map(|(k, t)| (t.id.key(), k)).collect();
            let double_ix: BTreeMap<String, usize> = raw.double_facets.iter().enumerate().map(|(k, t)| (t.id.key(), k)).collect();
            for t in &raw.thin_facets {
                f.thin.push(ThinFacet { id: t.id.key(), genus: t.genus, boundary: 0, dots: t.dots });
                explicit.push(t.boundary);
            }
            let mut explicit_d = Vec::new();
            for t in &raw.double_facets {
                f.double.push(DoubleFacet { id: t.id.key(), genus: t.genus, boundary: 0 });
                explicit_d.push(t.boundary);
            }
            for s in &raw.seams {
                let SeamIn::Gl2 { preferred, other, double } = s else {
                    return Err(FoamError::Json("gl2 seams need preferred, other and double".into()));
                };
                let seam = Seam {
                    preferred: lookup(&thin_ix, preferred, "thin")?,
                    other: lookup(&thin_ix, other, "thin")?,
                    double: lookup(&double_ix, double, "double")?,
                };
                f.thin[seam.preferred].boundary += 1;
                f.thin[seam.other].boundary += 1;
                f.double[seam.double].boundary += 1;
                f.seams.push(seam);
            }
            for (t, b) in f.thin.iter_mut().zip(explicit) {
                if let Some(b) = b {
                    t.boundary = b;
                }
            }
            for (t, b) in f.double.iter_mut().zip(explicit_d) {
                if let Some(b) = b {
                    t.boundary = b;
                }
            }
            f.validate()?;
            Ok(FoamFile::Gl2(f))
        }
        "gln_prefoam" => {
            let n = raw.n.ok_or_else(|| FoamError::Json("gln_prefoam needs N".into()))?;
            let mut f = GlNPrefoam::new(n);
            let ix: BTreeMap<String, usize> = raw.facets.iter().enumerate().map(|(k, t)| (t.id.key(), k)).collect();
            for t in &raw.facets {
                f.facets.push(GlNFacet { id: t.id.key(), thickness: t.thickness, genus: t.genus, boundary: 0, decoration: t.decoration.clone() });
            }
            for s in &raw.seams {
                let SeamIn::GlN { a, b, ab, flag } = s else {
                    return Err(FoamError::Json("gln seams need a, b and ab".into()));
                };
                let seam = GlNSeam { a: lookup(&ix, a, "")?, b: lookup(&ix, b, "")?, ab: lookup(&ix, ab, "")?, flag: *flag };
                for v in [seam.a, seam.b, seam.ab] {
                    f.facets[v].boundary += 1;
                }
                f.seams.push(seam);
            }
            for (t, r) in f.facets.iter_mut().zip(&raw.facets) {
                if let Some(b) = r.boundary {
                    t.boundary = b;
                }
            }
            f.validate()?;
            Ok(FoamFile::GlN(f))
        }
        other => Err(FoamError::Json(format!("unknown foam type '{other}'"))),
    }
}

impl Gl2Prefoam {
    pub fn to_json(&self) -> Value {
        let thin: Vec<Value> =
            self.thin.iter().map(|f| json!({"id": f.id, "genus": f.genus, "boundary": f.boundary, "dots": f.dots})).collect();
        let double: Vec<Value> = self.double.iter().map(|f| json!({"id": f.id, "genus": f.genus, "boundary": f.boundary})).collect();
        let seams: Vec<Value> = self
            .seams
            .iter()
            .map(|s| json!({"preferred": self.thin[s.preferred].id, "other": self.thin[s.other].id, "double": self.double[s.double].id}))
            .collect();
        json!({"type": "gl2_prefoam", "thin_facets": thin, "double_facets": double, "seams": seams})
    }
}

impl GlNPrefoam {
    pub fn to_json(&self) -> Value {
        let facets: Vec<Value> = self
            .facets
            .iter()
            .map(|f| json!({"id": f.id, "thickness": f.thickness, "genus": f.genus, "boundary": f.boundary, "decoration": f.decoration}))
            .collect();
        let seams: Vec<Value> = self
            .seams
            .iter()
            .map(|s| json!({"a": self.facets[s.a].id, "b": self.facets[s.b].id, "ab": self.facets[s.ab].id, "flag": s.flag}))
            .collect();
        json!({"type": "gln_prefoam", "N": self.n, "facets": facets, "seams": seams})
    }
}
