//! JSON scene documents exchanged by the command-line tool.
//!
//! A scene is a flat list of entities, each tagged by `kind`:
//!
//! ```json
//! {"schema_version": "1", "entities": [
//!   {"id": "S", "kind": "point", "at": [0.0, 1.0], "label": "S"},
//!   {"id": "L", "kind": "line", "line": "y=0"},
//!   {"id": "P", "kind": "polygon", "vertices": [[0,0],[4,0],[1,3]]}
//! ]}
//! ```
//!
//! Lines are written as normalized coefficients `[a, b, c]` and read from
//! either that form or an equation string. Numbers are written in their
//! shortest round-trip form, so a scene read back is bit-identical.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Deserializer, Serialize};

use crate::equidistant::Parabola;
use crate::error::{Error, Result};
use crate::geom::{parse_line, Circle, Line, Point};
use crate::simson::{Polygon, SimsonPolygon};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneDocument {
    pub schema_version: String,
    pub entities: Vec<Entity>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entity {
    pub id: String,
    #[serde(flatten)]
    pub shape: Shape,
    /// Free-form drawing hints such as `stroke` or `fill`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub style: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Point {
        at: Point,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Line {
        #[serde(deserialize_with = "line_from_json")]
        line: Line,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Circle {
        center: Point,
        radius: f64,
    },
    Polygon {
        vertices: Vec<Point>,
        /// An open polygon is drawn as a polyline and may have 2 vertices.
        #[serde(default = "yes", skip_serializing_if = "is_true")]
        closed: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        simson: Option<SimsonData>,
    },
    /// `y = (x² - c)/(4s)` for `x` in `range`.
    Parabola {
        s: f64,
        c: f64,
        range: [f64; 2],
    },
    Annotation {
        at: Point,
        text: String,
    },
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

/// Simson point, line and feet recorded alongside a polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimsonData {
    pub point: Point,
    #[serde(deserialize_with = "line_from_json")]
    pub line: Line,
    pub projections: Vec<Point>,
}

fn line_from_json<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Line, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Coefficients([f64; 3]),
        Equation(String),
    }
    let line = match Repr::deserialize(d)? {
        Repr::Coefficients([a, b, c]) => Line::new(a, b, c),
        Repr::Equation(s) => parse_line(&s),
    };
    line.map_err(serde::de::Error::custom)
}

impl Entity {
    pub fn new(id: impl Into<String>, shape: Shape) -> Self {
        Entity {
            id: id.into(),
            shape,
            style: BTreeMap::new(),
        }
    }

    pub fn with_style(mut self, key: &str, value: &str) -> Self {
        self.style.insert(key.to_owned(), value.to_owned());
        self
    }

    pub fn point(id: &str, at: Point) -> Self {
        Entity::new(
            id,
            Shape::Point {
                at,
                label: Some(id.to_owned()),
            },
        )
    }
}

impl Default for SceneDocument {
    fn default() -> Self {
        SceneDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            entities: Vec::new(),
        }
    }
}

impl SceneDocument {
    pub fn push(&mut self, entity: Entity) {
        self.entities.push(entity);
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SceneDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serialization cannot fail")
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {:?}",
                self.schema_version
            )));
        }
        let mut seen = HashSet::new();
        for e in &self.entities {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::Parse(format!("duplicate entity id {:?}", e.id)));
            }
            match &e.shape {
                Shape::Polygon {
                    vertices, closed, ..
                } => {
                    let min = if *closed { 3 } else { 2 };
                    if vertices.len() < min {
                        return Err(Error::Parse(format!(
                            "polygon {:?} has {} vertices, needs {min}",
                            e.id,
                            vertices.len()
                        )));
                    }
                }
                Shape::Circle { radius, .. } if !(*radius > 0.0) => {
                    return Err(Error::Parse(format!("circle {:?} has radius {radius}", e.id)));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Entity> {
        self.entities.iter().find(|e| e.id == id)
    }

    /// The first closed polygon, or the one named `id`.
    pub fn polygon_entity(&self, id: Option<&str>) -> Option<&Entity> {
        self.entities.iter().find(|e| {
            matches!(e.shape, Shape::Polygon { closed: true, .. })
                && id.is_none_or(|id| e.id == id)
        })
    }

    /// Adds `S`, `L`, the feet `X_i` and the polygon `P` with its Simson data.
    pub fn add_simson_polygon(&mut self, sp: &SimsonPolygon) {
        self.push(Entity::point("S", sp.simson_point));
        self.push(Entity::new(
            "L",
            Shape::Line {
                line: sp.simson_line,
                label: Some("L".into()),
            },
        ));
        for (i, x) in sp.projections.iter().enumerate() {
            self.push(Entity::point(&format!("X_{}", i + 1), *x));
        }
        self.push(Entity::new(
            "P",
            Shape::Polygon {
                vertices: sp.vertices().to_vec(),
                closed: true,
                simson: Some(SimsonData {
                    point: sp.simson_point,
                    line: sp.simson_line,
                    projections: sp.projections.clone(),
                }),
            },
        ));
    }

    pub fn add_parabola(&mut self, id: &str, p: &Parabola, range: [f64; 2]) {
        self.push(Entity::new(
            id,
            Shape::Parabola {
                s: p.s,
                c: p.c,
                range,
            },
        ));
    }

    pub fn add_circle(&mut self, id: &str, c: &Circle) {
        self.push(Entity::new(
            id,
            Shape::Circle {
                center: c.center,
                radius: c.radius,
            },
        ));
    }
}

/// A polygon entity as a polygon, plus its Simson data when present.
pub fn polygon_of(entity: &Entity) -> Result<(Polygon, Option<SimsonPolygon>)> {
    let Shape::Polygon {
        vertices, simson, ..
    } = &entity.shape
    else {
        return Err(Error::Parse(format!("entity {:?} is not a polygon", entity.id)));
    };
    let polygon = Polygon::new(vertices.clone())?;
    let sp = match simson {
        Some(data) => {
            if data.projections.len() != vertices.len() {
                return Err(Error::Parse(format!(
                    "polygon {:?} has {} vertices but {} projections",
                    entity.id,
                    vertices.len(),
                    data.projections.len()
                )));
            }
            Some(SimsonPolygon {
                polygon: polygon.clone(),
                simson_point: data.point,
                simson_line: data.line,
                projections: data.projections.clone(),
            })
        }
        None => None,
    };
    Ok((polygon, sp))
}
