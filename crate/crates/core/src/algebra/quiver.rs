//! Quivers and their paths.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {} has a missing endpoint", a.name)));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {}", a.name)));
            }
        }
        Ok(Self { vertices, arrows })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Disjoint union; vertices and arrows of `other` are appended.
    pub fn disjoint_union(&self, other: &Quiver) -> Result<Quiver> {
        let shift = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|a| Arrow {
            name: a.name.clone(),
            source: a.source + shift,
            target: a.target + shift,
        }));
        Quiver::new(vertices, arrows)
    }

    /// Path from its arrows in the order they are traversed.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver("a path needs a start vertex".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::InvalidQuiver(format!(
                    "arrows {} and {} are not composable",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        Ok(Path { source: self.arrows[first].source, arrows: arrows.to_vec() })
    }

    pub fn target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.source, |&a| self.arrows[a].target)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            // Written as a product, last traversed arrow on the left.
            p.arrows.iter().rev().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("·")
        }
    }

    /// Ordering by length, then by arrow names in traversal order, then by start vertex.
    pub fn path_cmp(&self, a: &Path, b: &Path) -> Ordering {
        a.len()
            .cmp(&b.len())
            .then_with(|| {
                let na = a.arrows.iter().map(|&x| &self.arrows[x].name);
                let nb = b.arrows.iter().map(|&x| &self.arrows[x].name);
                na.cmp(nb)
            })
            .then_with(|| a.source.cmp(&b.source))
    }
}

/// A path, stored as its start vertex and the arrows in traversal order.
///
/// As an algebra element, a path traversing `α₁` then `α₂` is the product
/// `α₂·α₁`: composition is written right to left, like maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Self { source: vertex, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}
