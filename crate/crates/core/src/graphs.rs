//! Oriented graphs on the antispecial members of a family and the
//! unitriangular system counting left cells.
//!
//! An arrow `E' → E` records that `E` occurs with multiplicity one in the
//! new-basis element attached to `E'`; in particular `E ≤ E'`. The left-cell
//! counts `N` satisfy, for every vertex `E`,
//!
//! ```text
//! N(E) + Σ_{E' → E} N(E') = dim(E)
//! ```
//!
//! which is solved by substitution along a topological order.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write;

use num_traits::{FromPrimitive, Num};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
}

impl Vertex {
    pub fn new(id: impl Into<String>, label: impl Into<String>, dim: Option<u64>) -> Self {
        Vertex {
            id: id.into(),
            label: label.into(),
            dim,
        }
    }
}

/// Vertices plus arrows `(from, to)`. Arrows implicitly have multiplicity 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGraph {
    pub vertices: Vec<Vertex>,
    #[serde(default)]
    pub arrows: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertices without a dimension: {0:?}")]
    MissingDims(Vec<String>),
    #[error("graph has a cycle through {0:?}")]
    CyclicInput(Vec<String>),
    #[error("graph is malformed: {0}")]
    Invalid(String),
    #[error("dimension {0} does not fit the scalar type")]
    ScalarRange(u64),
    #[error("cannot parse graph JSON: {0}")]
    Parse(String),
}

/// A single problem found by [`validate_graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation")]
pub enum Violation {
    DuplicateId { id: String },
    UnknownVertex { id: String },
    SelfArrow { id: String },
    DuplicateArrow { from: String, to: String },
    ZeroDim { id: String },
    CycleDetected { cycle: Vec<String> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl CellGraph {
    pub fn new(vertices: Vec<Vertex>, arrows: Vec<(String, String)>) -> Self {
        CellGraph { vertices, arrows }
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    /// Ids with no arrow in or out.
    pub fn isolated(&self) -> Vec<&str> {
        let touched: HashSet<&str> = self
            .arrows
            .iter()
            .flat_map(|(a, b)| [a.as_str(), b.as_str()])
            .collect();
        self.vertices
            .iter()
            .map(|v| v.id.as_str())
            .filter(|id| !touched.contains(id))
            .collect()
    }

    fn index(&self) -> HashMap<&str, usize> {
        let mut idx = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            idx.entry(v.id.as_str()).or_insert(i);
        }
        idx
    }
}

/// Finds one directed cycle among `succ`, returned as vertex indices.
fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    let mut stack: Vec<usize> = Vec::new();
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // iterative DFS: (vertex, next child index)
        let mut work = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        stack.push(root);
        while let Some(&mut (v, ref mut child)) = work.last_mut() {
            if let Some(&w) = succ[v].get(*child) {
                *child += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push(w);
                        work.push((w, 0));
                    }
                    Mark::Active => {
                        let start = stack.iter().position(|&x| x == w).unwrap();
                        return Some(stack[start..].to_vec());
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
                work.pop();
            }
        }
    }
    None
}

pub fn validate_graph(g: &CellGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    for v in &g.vertices {
        if !seen.insert(v.id.as_str()) {
            violations.push(Violation::DuplicateId { id: v.id.clone() });
        }
        if v.dim == Some(0) {
            violations.push(Violation::ZeroDim { id: v.id.clone() });
        }
    }
    let idx = g.index();
    let mut seen_arrows = HashSet::new();
    let mut succ = vec![Vec::new(); g.vertices.len()];
    for (from, to) in &g.arrows {
        let mut known = true;
        for id in [from, to] {
            if !idx.contains_key(id.as_str()) {
                violations.push(Violation::UnknownVertex { id: id.clone() });
                known = false;
            }
        }
        if from == to {
            violations.push(Violation::SelfArrow { id: from.clone() });
            continue;
        }
        if !seen_arrows.insert((from, to)) {
            violations.push(Violation::DuplicateArrow {
                from: from.clone(),
                to: to.clone(),
            });
            continue;
        }
        if known {
            succ[idx[from.as_str()]].push(idx[to.as_str()]);
        }
    }
    if let Some(cycle) = find_cycle(&succ) {
        violations.push(Violation::CycleDetected {
            cycle: cycle
                .into_iter()
                .map(|i| g.vertices[i].id.clone())
                .collect(),
        });
    }
    ValidationReport { violations }
}

/// Vertex ids ordered so that `E'` precedes `E` whenever `E' → E`; ties go
/// to the earlier input position.
pub fn topological_order(g: &CellGraph) -> Result<Vec<String>, GraphError> {
    let report = validate_graph(g);
    if let Some(v) = report.violations.iter().find_map(|v| match v {
        Violation::CycleDetected { cycle } => Some(cycle.clone()),
        _ => None,
    }) {
        return Err(GraphError::CyclicInput(v));
    }
    if !report.is_ok() {
        return Err(GraphError::Invalid(format!("{:?}", report.violations)));
    }
    let idx = g.index();
    let n = g.vertices.len();
    let mut indegree = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for (from, to) in &g.arrows {
        let (a, b) = (idx[from.as_str()], idx[to.as_str()]);
        succ[a].push(b);
        indegree[b] += 1;
    }
    // Kahn's algorithm with the smallest ready index first
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        out.push(g.vertices[v].id.clone());
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.insert(w);
            }
        }
    }
    Ok(out)
}

/// Left-cell counts keyed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySolution<S> {
    pub counts: BTreeMap<String, S>,
    /// Set when some count is not positive, which no consistent cell data
    /// can produce.
    pub nonpositive_warning: bool,
}

impl<S: Clone> MultiplicitySolution<S> {
    /// Counts in the order of `g`'s vertices.
    pub fn in_vertex_order(&self, g: &CellGraph) -> Vec<S> {
        g.vertices
            .iter()
            .map(|v| self.counts[&v.id].clone())
            .collect()
    }
}

/// Solves `N(E) + Σ_{E' → E} N(E') = dim(E)` exactly.
pub fn solve_left_cell_counts<S>(g: &CellGraph) -> Result<MultiplicitySolution<S>, GraphError>
where
    S: Num + Clone + PartialOrd + FromPrimitive,
{
    let missing: Vec<String> = g
        .vertices
        .iter()
        .filter(|v| v.dim.is_none())
        .map(|v| v.id.clone())
        .collect();
    if !missing.is_empty() {
        return Err(GraphError::MissingDims(missing));
    }
    let order = topological_order(g)?;
    let mut incoming: HashMap<&str, Vec<&str>> = HashMap::new();
    for (from, to) in &g.arrows {
        incoming.entry(to.as_str()).or_default().push(from.as_str());
    }
    let mut counts: BTreeMap<String, S> = BTreeMap::new();
    for id in &order {
        let dim = g.vertex(id).and_then(|v| v.dim).unwrap();
        let mut value = S::from_u64(dim).ok_or(GraphError::ScalarRange(dim))?;
        for src in incoming.get(id.as_str()).into_iter().flatten() {
            value = value - counts[*src].clone();
        }
        counts.insert(id.clone(), value);
    }
    let nonpositive_warning = counts.values().any(|c| *c <= S::zero());
    Ok(MultiplicitySolution {
        counts,
        nonpositive_warning,
    })
}

/// Checks every equation of the system holds for `sol` exactly.
pub fn check_solution<S>(g: &CellGraph, sol: &MultiplicitySolution<S>) -> bool
where
    S: Num + Clone + PartialEq + FromPrimitive,
{
    g.vertices.iter().all(|v| {
        let Some(dim) = v.dim.and_then(S::from_u64) else {
            return false;
        };
        let Some(own) = sol.counts.get(&v.id) else {
            return false;
        };
        let lhs = g
            .arrows
            .iter()
            .filter(|(_, to)| *to == v.id)
            .fold(own.clone(), |acc, (from, _)| {
                acc + sol.counts.get(from).cloned().unwrap_or_else(S::zero)
            });
        lhs == dim
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT rendering: vertices in input order, then arrows.
pub fn export_dot(g: &CellGraph) -> String {
    let mut out = String::from("digraph cell {\n");
    for v in &g.vertices {
        write!(
            out,
            "  \"{}\" [label=\"{}\"",
            dot_escape(&v.id),
            dot_escape(&v.label)
        )
        .unwrap();
        if let Some(d) = v.dim {
            write!(out, ", dim={d}").unwrap();
        }
        out.push_str("];\n");
    }
    for (from, to) in &g.arrows {
        writeln!(out, "  \"{}\" -> \"{}\";", dot_escape(from), dot_escape(to)).unwrap();
    }
    out.push_str("}\n");
    out
}
