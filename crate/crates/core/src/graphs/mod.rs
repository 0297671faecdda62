//! Undirected multigraphs with Eulerian trail analysis.
//!
//! Vertices stand for land masses or rooms, edges for bridges, doorways and
//! windows. Parallel edges and self-loops are allowed; a self-loop adds two
//! to the degree of its vertex.

mod euler;
mod impossibility;
mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

pub use euler::{eulerian_status, find_trail, guarantees_trail, parity_rules_out_trail, EulerianStatus, Trail, TrailSearch, TrailStep};
pub use impossibility::{impossibility_proof, Vocabulary};
pub use parse::{parse_graph, IMPLICIT_VERTEX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge refers to undeclared vertex {name:?}")]
    UndeclaredVertex { line: usize, name: String },
    #[error("vertex {0:?} is declared twice")]
    DuplicateVertex(String),
    #[error("invalid vertex name {0:?} (use letters, digits and underscores)")]
    InvalidName(String),
    #[error("no vertex named {0:?}")]
    UnknownVertex(String),
    #[error("the graph has no edges, so it has no Eulerian trail to find or refute")]
    Edgeless,
    #[error("no impossibility proof exists: {0}")]
    NotImpossible(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
    pub label: Option<String>,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multigraph {
    names: Vec<String>,
    lookup: HashMap<String, VertexId>,
    edges: Vec<Edge>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.lookup.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.names.len());
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId, label: Option<String>) -> EdgeId {
        assert!(a.0 < self.names.len() && b.0 < self.names.len(), "edge endpoint out of range");
        self.edges.push(Edge { a, b, label });
        EdgeId(self.edges.len() - 1)
    }

    /// Adds an edge between two named vertices.
    pub fn connect(&mut self, a: &str, b: &str, label: Option<&str>) -> Result<EdgeId, GraphError> {
        let a = self.vertex(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
        let b = self.vertex(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
        Ok(self.add_edge(a, b, label.map(str::to_string)))
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.names.len()).map(VertexId)
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, &Edge)> {
        self.edges.iter().enumerate().map(|(i, e)| (EdgeId(i), e))
    }

    /// Degrees indexed by vertex id; a self-loop counts twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.names.len()];
        for e in &self.edges {
            deg[e.a.0] += 1;
            deg[e.b.0] += 1;
        }
        deg
    }

    /// Vertices of odd degree, in declaration order.
    pub fn odd_vertices(&self) -> Vec<VertexId> {
        self.degrees().iter().enumerate().filter(|(_, d)| *d % 2 == 1).map(|(i, _)| VertexId(i)).collect()
    }

    /// Human-readable name of an edge: its label, or `a-b`.
    pub fn edge_name(&self, e: EdgeId) -> String {
        let edge = self.edge(e);
        match &edge.label {
            Some(label) => label.clone(),
            None => format!("{}-{}", self.name(edge.a), self.name(edge.b)),
        }
    }
}

/// Degree of every vertex, keyed by name.
pub fn degree_map(g: &Multigraph) -> BTreeMap<String, usize> {
    g.degrees().into_iter().enumerate().map(|(i, d)| (g.names[i].clone(), d)).collect()
}

impl fmt::Display for Multigraph {
    /// Writes the graph in the line format read by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in &self.names {
            writeln!(f, "vertex {name}")?;
        }
        for e in &self.edges {
            write!(f, "edge {} {}", self.name(e.a), self.name(e.b))?;
            if let Some(label) = &e.label {
                write!(f, " {label}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
