//! Euler's criterion and Hierholzer trail construction.

use std::fmt;

use super::{EdgeId, GraphError, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerianStatus {
    /// Every vertex has even degree.
    Circuit,
    /// Exactly two odd vertices; every Eulerian trail runs between them.
    OpenTrail { ends: (VertexId, VertexId) },
    /// More than two odd vertices, listed in declaration order.
    NoTrail { odd: Vec<VertexId> },
    /// The edges fall into more than one connected piece.
    Disconnected { components: usize },
}

impl EulerianStatus {
    pub fn has_trail(&self) -> bool {
        matches!(self, EulerianStatus::Circuit | EulerianStatus::OpenTrail { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            EulerianStatus::Circuit => "Circuit",
            EulerianStatus::OpenTrail { .. } => "OpenTrail",
            EulerianStatus::NoTrail { .. } => "NoTrail",
            EulerianStatus::Disconnected { .. } => "Disconnected",
        }
    }

    /// One-line description, e.g. `NoTrail: 4 vertices of odd degree`.
    pub fn describe(&self, g: &Multigraph) -> String {
        match self {
            EulerianStatus::Circuit => "Circuit: every vertex has even degree".to_string(),
            EulerianStatus::OpenTrail { ends: (a, b) } => {
                format!("OpenTrail: every Eulerian trail runs between {} and {}", g.name(*a), g.name(*b))
            }
            EulerianStatus::NoTrail { odd } => format!("NoTrail: {} vertices of odd degree", odd.len()),
            EulerianStatus::Disconnected { components } => {
                format!("Disconnected: the edges lie in {components} separate components")
            }
        }
    }
}

impl fmt::Display for EulerianStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())
    }
}

/// Number of connected components among vertices that touch an edge.
fn edge_components(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; n];
    for (_, e) in g.edges() {
        touched[e.a.0] = true;
        touched[e.b.0] = true;
        let (ra, rb) = (find(&mut parent, e.a.0), find(&mut parent, e.b.0));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    (0..n).filter(|&v| touched[v] && find(&mut parent, v) == v).count()
}

/// Classifies the graph by connectivity of its edges and the number of odd vertices.
///
/// Isolated vertices are ignored. Graphs without edges are rejected.
pub fn eulerian_status(g: &Multigraph) -> Result<EulerianStatus, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::Edgeless);
    }
    let components = edge_components(g);
    if components > 1 {
        return Ok(EulerianStatus::Disconnected { components });
    }
    let odd = g.odd_vertices();
    Ok(match odd.as_slice() {
        [] => EulerianStatus::Circuit,
        [a, b] => EulerianStatus::OpenTrail { ends: (*a, *b) },
        _ => {
            debug_assert!(odd.len().is_multiple_of(2) && odd.len() > 2);
            EulerianStatus::NoTrail { odd }
        }
    })
}

/// More than two vertices of odd degree: no trail can use every edge.
pub fn parity_rules_out_trail(g: &Multigraph) -> bool {
    g.odd_vertices().len() > 2
}

/// Edges connected and at most two odd vertices: a trail using every edge exists.
pub fn guarantees_trail(g: &Multigraph) -> bool {
    g.edge_count() > 0 && edge_components(g) == 1 && g.odd_vertices().len() <= 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrailStep {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
}

/// A walk that uses no edge twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub start: VertexId,
    pub end: VertexId,
    pub steps: Vec<TrailStep>,
}

impl Trail {
    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        std::iter::once(self.start).chain(self.steps.iter().map(|s| s.to)).collect()
    }

    /// Checks the trail against `g`: consecutive steps share a vertex, each
    /// step follows a real edge, and every edge of `g` is used exactly once.
    pub fn check_eulerian(&self, g: &Multigraph) -> Result<(), String> {
        let mut used = vec![false; g.edge_count()];
        let mut at = self.start;
        for (i, step) in self.steps.iter().enumerate() {
            if step.from != at {
                return Err(format!("step {i} starts at {} but the trail is at {}", g.name(step.from), g.name(at)));
            }
            let edge = g.edge(step.edge);
            let joins = (edge.a == step.from && edge.b == step.to) || (edge.b == step.from && edge.a == step.to);
            if !joins {
                return Err(format!("step {i} does not follow edge {}", step.edge.0));
            }
            if std::mem::replace(&mut used[step.edge.0], true) {
                return Err(format!("edge {} is used twice", step.edge.0));
            }
            at = step.to;
        }
        if at != self.end {
            return Err("trail does not finish at its end vertex".to_string());
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(format!("edge {missing} is never used"));
        }
        Ok(())
    }

    /// `A -[e1]- B -[e2]- C`
    pub fn render(&self, g: &Multigraph) -> String {
        let mut out = g.name(self.start).to_string();
        for step in &self.steps {
            out.push_str(&format!(" -[{}]- {}", g.edge_name(step.edge), g.name(step.to)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrailSearch {
    Found(Trail),
    /// No Eulerian trail; carries the reason.
    Impossible(EulerianStatus),
}

/// Builds an Eulerian trail when one exists.
///
/// Starts at the first odd vertex if there are two, otherwise at the first
/// vertex with an edge. Sub-circuits are spliced in Hierholzer fashion, always
/// taking the lowest unused edge id, so output is deterministic.
pub fn find_trail(g: &Multigraph) -> Result<TrailSearch, GraphError> {
    let status = eulerian_status(g)?;
    let start = match &status {
        EulerianStatus::OpenTrail { ends: (a, _) } => *a,
        EulerianStatus::Circuit => {
            let degrees = g.degrees();
            g.vertices().find(|v| degrees[v.0] > 0).expect("status requires an edge")
        }
        _ => return Ok(TrailSearch::Impossible(status)),
    };

    let mut adjacency: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); g.vertex_count()];
    for (id, e) in g.edges() {
        adjacency[e.a.0].push((id, e.b));
        if !e.is_loop() {
            adjacency[e.b.0].push((id, e.a));
        }
    }
    let mut next = vec![0usize; g.vertex_count()];
    let mut used = vec![false; g.edge_count()];

    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
    let mut reversed: Vec<(VertexId, Option<EdgeId>)> = Vec::with_capacity(g.edge_count() + 1);
    while let Some(&(v, _)) = stack.last() {
        let adj = &adjacency[v.0];
        while next[v.0] < adj.len() && used[adj[next[v.0]].0 .0] {
            next[v.0] += 1;
        }
        if let Some(&(edge, to)) = adj.get(next[v.0]) {
            used[edge.0] = true;
            stack.push((to, Some(edge)));
        } else {
            reversed.push(stack.pop().expect("stack is non-empty"));
        }
    }

    reversed.reverse();
    let mut steps = Vec::with_capacity(g.edge_count());
    for pair in reversed.windows(2) {
        let (from, _) = pair[0];
        let (to, edge) = pair[1];
        steps.push(TrailStep { edge: edge.expect("only the start has no edge"), from, to });
    }
    let end = steps.last().map_or(start, |s| s.to);
    debug_assert_eq!(steps.len(), g.edge_count());
    Ok(TrailSearch::Found(Trail { start, end, steps }))
}
