//! JSON input documents and polytope output documents.
//!
//! Every input is a single object with a `kind` discriminator. Numbers are
//! exact rationals written either as JSON integers or as strings such as
//! `"-3/2"`.

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{GeomError, Result};
use crate::exact::{format_rat, parse_rat, Rat, Vec2, Vec3, VecN};
use crate::lattice::{DVCell, Lattice3};
use crate::planar::{Lattice2, PlanarMultiset, Polygon2m};
use crate::polytope::Polytope3;
use crate::tiling::TranslateMultiset;
use crate::zonotope::zonotope_from_generators;

/// A rational read from a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInput(pub Rat);

impl<'de> Deserialize<'de> for RatInput {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        let raw = Raw::deserialize(d).map_err(|_| {
            de::Error::custom("expected a rational as an integer or a \"p/q\" string")
        })?;
        match raw {
            Raw::Int(n) => Ok(RatInput(Rat::from_integer(n.into()))),
            Raw::Str(s) => parse_rat(&s).map(RatInput).map_err(de::Error::custom),
        }
    }
}

impl Serialize for RatInput {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

pub type Coords3 = [RatInput; 3];
pub type Coords2 = [RatInput; 2];

pub fn vec3(c: &Coords3) -> Vec3 {
    VecN(std::array::from_fn(|i| c[i].0.clone()))
}

pub fn vec2(c: &Coords2) -> Vec2 {
    VecN(std::array::from_fn(|i| c[i].0.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Zonotope {
        generators: Vec<Coords3>,
    },
    RawPolytope {
        vertices: Vec<Coords3>,
        facets: Vec<Vec<usize>>,
    },
    Lattice {
        basis: [Coords3; 3],
    },
    Tiling3d {
        polytope: Box<InputDocument>,
        base_translates: Vec<Coords3>,
        period_basis: Option<[Coords3; 3]>,
        k: u64,
    },
    Polygon {
        vertices: Vec<Coords2>,
    },
    Tiling2d {
        polygon: Box<InputDocument>,
        base_translates: Vec<Coords2>,
        period_basis: Option<[Coords2; 2]>,
        k: u64,
    },
}

// Wire formats. Each is read in one streaming pass after the `kind` has been
// peeked, so error paths and positions survive.

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ZonotopeWire {
    #[allow(dead_code)]
    kind: String,
    generators: Vec<Coords3>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolytopeWire {
    #[allow(dead_code)]
    kind: String,
    vertices: Vec<Coords3>,
    facets: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeWire {
    #[allow(dead_code)]
    kind: String,
    basis: [Coords3; 3],
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum SolidKind {
    Zonotope,
    RawPolytope,
}

/// A zonotope or raw polytope nested inside a tiling.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SolidWire {
    kind: SolidKind,
    generators: Option<Vec<Coords3>>,
    vertices: Option<Vec<Coords3>>,
    facets: Option<Vec<Vec<usize>>>,
}

impl SolidWire {
    fn into_document(self) -> Result<InputDocument> {
        let missing = |f: &str| GeomError::Document(format!("at `polytope`: missing field `{f}`"));
        match self.kind {
            SolidKind::Zonotope => Ok(InputDocument::Zonotope {
                generators: self.generators.ok_or_else(|| missing("generators"))?,
            }),
            SolidKind::RawPolytope => Ok(InputDocument::RawPolytope {
                vertices: self.vertices.ok_or_else(|| missing("vertices"))?,
                facets: self.facets.ok_or_else(|| missing("facets"))?,
            }),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Tiling3dWire {
    #[allow(dead_code)]
    kind: String,
    polytope: SolidWire,
    base_translates: Vec<Coords3>,
    #[serde(default)]
    period_basis: Option<[Coords3; 3]>,
    k: u64,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum PolygonKind {
    Polygon,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonWire {
    #[allow(dead_code)]
    kind: String,
    vertices: Vec<Coords2>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NestedPolygonWire {
    #[allow(dead_code)]
    kind: PolygonKind,
    vertices: Vec<Coords2>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Tiling2dWire {
    #[allow(dead_code)]
    kind: String,
    #[serde(alias = "polytope")]
    polygon: NestedPolygonWire,
    base_translates: Vec<Coords2>,
    #[serde(default)]
    period_basis: Option<[Coords2; 2]>,
    k: u64,
}

/// Parses a document, reporting the JSON path, line and column on failure.
pub fn parse_document(text: &str) -> Result<InputDocument> {
    let kind = from_json::<KindOnly>(text)?.kind;
    Ok(match kind.as_str() {
        "zonotope" => {
            let w: ZonotopeWire = from_json(text)?;
            InputDocument::Zonotope { generators: w.generators }
        }
        "raw_polytope" => {
            let w: RawPolytopeWire = from_json(text)?;
            InputDocument::RawPolytope {
                vertices: w.vertices,
                facets: w.facets,
            }
        }
        "lattice" => InputDocument::Lattice {
            basis: from_json::<LatticeWire>(text)?.basis,
        },
        "tiling3d" => {
            let w: Tiling3dWire = from_json(text)?;
            InputDocument::Tiling3d {
                polytope: Box::new(w.polytope.into_document()?),
                base_translates: w.base_translates,
                period_basis: w.period_basis,
                k: w.k,
            }
        }
        "polygon" => InputDocument::Polygon {
            vertices: from_json::<PolygonWire>(text)?.vertices,
        },
        "tiling2d" => {
            let w: Tiling2dWire = from_json(text)?;
            InputDocument::Tiling2d {
                polygon: Box::new(InputDocument::Polygon {
                    vertices: w.polygon.vertices,
                }),
                base_translates: w.base_translates,
                period_basis: w.period_basis,
                k: w.k,
            }
        }
        other => {
            return Err(GeomError::Document(format!(
                "at `kind`: unknown kind `{other}`, expected one of zonotope, raw_polytope, \
                 lattice, tiling3d, polygon, tiling2d"
            )))
        }
    })
}

/// Deserializes any JSON value with path-annotated errors.
pub fn from_json<T: de::DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let (line, column) = (inner.line(), inner.column());
        // serde_json appends the position itself; it is already in front.
        let msg = inner.to_string();
        let msg = msg
            .strip_suffix(&format!(" at line {line} column {column}"))
            .unwrap_or(&msg);
        GeomError::Document(format!("line {line} column {column}: at `{path}`: {msg}"))
    })
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Zonotope { .. } => "zonotope",
            InputDocument::RawPolytope { .. } => "raw_polytope",
            InputDocument::Lattice { .. } => "lattice",
            InputDocument::Tiling3d { .. } => "tiling3d",
            InputDocument::Polygon { .. } => "polygon",
            InputDocument::Tiling2d { .. } => "tiling2d",
        }
    }

    fn wrong_kind(&self, wanted: &str) -> GeomError {
        GeomError::Document(format!("expected a {wanted} document, found kind `{}`", self.kind()))
    }

    /// A zonotope or raw polytope; for a tiling, its tile.
    pub fn to_polytope(&self) -> Result<Polytope3> {
        match self {
            InputDocument::Zonotope { generators } => {
                zonotope_from_generators(&generators.iter().map(vec3).collect::<Vec<_>>())
            }
            InputDocument::RawPolytope { vertices, facets } => {
                Polytope3::from_raw(&vertices.iter().map(vec3).collect::<Vec<_>>(), facets)
            }
            InputDocument::Tiling3d { polytope, .. } => polytope.to_polytope(),
            other => Err(other.wrong_kind("zonotope or raw_polytope")),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice3> {
        match self {
            InputDocument::Lattice { basis } => Lattice3::new(std::array::from_fn(|i| vec3(&basis[i]))),
            other => Err(other.wrong_kind("lattice")),
        }
    }

    pub fn to_polygon(&self) -> Result<Polygon2m> {
        match self {
            InputDocument::Polygon { vertices } => Polygon2m::new(vertices.iter().map(vec2).collect()),
            InputDocument::Tiling2d { polygon, .. } => polygon.to_polygon(),
            other => Err(other.wrong_kind("polygon")),
        }
    }

    pub fn to_tiling3d(&self) -> Result<(Polytope3, TranslateMultiset, u64)> {
        match self {
            InputDocument::Tiling3d {
                polytope,
                base_translates,
                period_basis,
                k,
            } => {
                let p = polytope.to_polytope()?;
                let period = period_basis
                    .as_ref()
                    .map(|b| Lattice3::new(std::array::from_fn(|i| vec3(&b[i]))))
                    .transpose()?;
                let x = TranslateMultiset::new(base_translates.iter().map(vec3).collect(), period);
                Ok((p, x, *k))
            }
            other => Err(other.wrong_kind("tiling3d")),
        }
    }

    pub fn to_tiling2d(&self) -> Result<(Polygon2m, PlanarMultiset, u64)> {
        match self {
            InputDocument::Tiling2d {
                polygon,
                base_translates,
                period_basis,
                k,
            } => {
                let p = polygon.to_polygon()?;
                let period = period_basis
                    .as_ref()
                    .map(|b| Lattice2::new([vec2(&b[0]), vec2(&b[1])]))
                    .transpose()?;
                let x = PlanarMultiset::new(base_translates.iter().map(vec2).collect(), period);
                Ok((p, x, *k))
            }
            other => Err(other.wrong_kind("tiling2d")),
        }
    }
}

fn coords<const N: usize>(v: &VecN<N>) -> Value {
    Value::Array(v.0.iter().map(|c| Value::String(format_rat(c))).collect())
}

/// A polytope as a `raw_polytope` document, with facet planes attached.
/// The document reads back as an equal polytope.
pub fn polytope_document(p: &Polytope3) -> Value {
    let planes: Vec<Value> = p
        .facets()
        .iter()
        .map(|f| {
            json!({
                "normal": coords(&f.halfspace.normal),
                "offset": format_rat(&f.halfspace.offset),
            })
        })
        .collect();
    json!({
        "kind": "raw_polytope",
        "vertices": p.vertices().iter().map(coords).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(|f| f.cycle.clone()).collect::<Vec<_>>(),
        "facet_planes": planes,
    })
}

#[derive(Serialize)]
struct DvCellDocument {
    kind: &'static str,
    cell: Value,
    relevant_vectors: Vec<Vec3>,
    #[serde(serialize_with = "crate::exact::serialize_rat")]
    volume: Rat,
}

pub fn dv_cell_document(d: &DVCell) -> Result<Value> {
    let doc = DvCellDocument {
        kind: "dv_cell",
        cell: polytope_document(&d.cell),
        relevant_vectors: d.relevant_vectors.clone(),
        volume: d.cell.volume()?,
    };
    Ok(serde_json::to_value(doc).expect("serializable"))
}
