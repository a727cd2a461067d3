//! Directed dot graph and Eulerian verification.
//!
//! Every consecutive pair of path points becomes a directed edge. A kolam
//! can be drawn in one stroke iff every dot has equal in- and out-degree and
//! all dots lie in one strongly connected component; [`verify_eulerian`]
//! checks both and recovers an explicit circuit with Hierholzer's algorithm.

use std::collections::HashMap;

use serde_json::json;

use crate::layout::ClosedPath;

/// A dot identified exactly by its layer radius and arm index.
pub type Dot = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KolamGraph {
    vertices: Vec<Dot>,
    edges: Vec<(usize, usize)>,
}

pub fn build_graph(path: &ClosedPath) -> KolamGraph {
    let mut index: HashMap<Dot, usize> = HashMap::new();
    let mut vertices = Vec::new();
    let ids: Vec<usize> = path
        .points()
        .iter()
        .map(|p| {
            *index.entry((p.radius, p.arm)).or_insert_with(|| {
                vertices.push((p.radius, p.arm));
                vertices.len() - 1
            })
        })
        .collect();
    let edges = ids.windows(2).map(|w| (w[0], w[1])).collect();
    KolamGraph { vertices, edges }
}

impl KolamGraph {
    /// Builds a graph from explicit parts. Returns `None` if an edge refers
    /// to a missing vertex.
    pub fn from_parts(vertices: Vec<Dot>, edges: Vec<(usize, usize)>) -> Option<Self> {
        let n = vertices.len();
        edges
            .iter()
            .all(|&(a, b)| a < n && b < n)
            .then_some(Self { vertices, edges })
    }

    pub fn vertices(&self) -> &[Dot] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for &(_, b) in &self.edges {
            d[b] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for &(a, _) in &self.edges {
            d[a] += 1;
        }
        d
    }

    /// Edges as `(from, to)` dot pairs.
    pub fn dot_edges(&self) -> impl Iterator<Item = (Dot, Dot)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }

    /// `{"vertices":[[r,a],…],"edges":[[i,j],…]}`
    pub fn to_json(&self) -> String {
        let vertices: Vec<[u32; 2]> = self.vertices.iter().map(|&(r, a)| [r, a]).collect();
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a, b]).collect();
        json!({ "vertices": vertices, "edges": edges }).to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    /// Every vertex has in-degree equal to out-degree.
    pub degree_balanced: bool,
    /// All vertices belong to a single strongly connected component with at
    /// least one edge.
    pub connected: bool,
    /// Edge indices in circuit order, starting with edge 0, when a circuit
    /// covering every edge exists.
    pub circuit: Option<Vec<usize>>,
    pub is_single_stroke: bool,
}

impl EulerReport {
    /// Vertex sequence of the circuit, closed (first vertex repeated).
    pub fn circuit_vertices(&self, graph: &KolamGraph) -> Option<Vec<usize>> {
        let circuit = self.circuit.as_ref()?;
        let first = graph.edges[*circuit.first()?].0;
        Some(
            std::iter::once(first)
                .chain(circuit.iter().map(|&e| graph.edges[e].1))
                .collect(),
        )
    }
}

pub fn verify_eulerian(graph: &KolamGraph) -> EulerReport {
    let degree_balanced = graph.in_degrees() == graph.out_degrees();
    let connected = strongly_connected(graph);
    let circuit = if degree_balanced && connected {
        hierholzer(graph)
    } else {
        None
    };
    EulerReport {
        degree_balanced,
        connected,
        circuit,
        is_single_stroke: degree_balanced && connected,
    }
}

fn reachable_from(start: usize, adjacency: &[Vec<usize>]) -> Vec<bool> {
    let mut seen = vec![false; adjacency.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

fn strongly_connected(graph: &KolamGraph) -> bool {
    let n = graph.vertices.len();
    if n == 0 || graph.edges.is_empty() {
        return false;
    }
    let mut forward = vec![Vec::new(); n];
    let mut backward = vec![Vec::new(); n];
    for &(a, b) in &graph.edges {
        forward[a].push(b);
        backward[b].push(a);
    }
    let root = graph.edges[0].0;
    reachable_from(root, &forward).into_iter().all(|x| x)
        && reachable_from(root, &backward).into_iter().all(|x| x)
}

/// Iterative Hierholzer over edge indices, starting from the tail of edge 0.
/// Returns `None` if the walk does not use every edge.
fn hierholzer(graph: &KolamGraph) -> Option<Vec<usize>> {
    let n = graph.vertices.len();
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(a, _)) in graph.edges.iter().enumerate() {
        outgoing[a].push(e);
    }
    // Consume each list front to back so edge order is respected.
    for list in &mut outgoing {
        list.reverse();
    }
    let start = graph.edges.first()?.0;
    let mut circuit = Vec::with_capacity(graph.edges.len());
    // Stack of (vertex, edge used to reach it).
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    while let Some(&(v, via)) = stack.last() {
        if let Some(e) = outgoing[v].pop() {
            stack.push((graph.edges[e].1, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                circuit.push(e);
            }
        }
    }
    circuit.reverse();
    (circuit.len() == graph.edges.len()).then_some(circuit)
}
