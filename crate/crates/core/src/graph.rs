//! Undirected simple graphs over dense vertex ids.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Index of a vertex, valid in `0..n` for the graph it came from.
pub type VertexId = usize;

/// Undirected simple graph stored as sorted adjacency lists.
///
/// Self-loops are rejected and parallel edges collapse to one at
/// construction, so `v ∈ neighbors(u)` iff `u ∈ neighbors(v)` and every
/// neighbor list is strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

/// Connected-component label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

impl ComponentLabeling {
    /// Vertex count of each component, indexed by label.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.component_count];
        for &c in &self.component_of {
            sizes[c] += 1;
        }
        sizes
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs are merged; `(u, v)`
    /// and `(v, u)` name the same edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_unsorted(adjacency))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Sorts and deduplicates symmetric adjacency lists. Callers guarantee
    /// symmetry and the absence of self-loops.
    pub(crate) fn from_unsorted(mut adjacency: Vec<Vec<VertexId>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Self {
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Sorted neighbor set of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    /// Degrees of all vertices in id order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adjacency
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: VertexId) -> Result<Vec<Option<usize>>> {
        self.check(source)?;
        let mut dist = vec![None; self.n()];
        self.bfs_into(source, &mut dist, &mut VecDeque::new());
        Ok(dist)
    }

    /// BFS reusing caller-owned buffers; `dist` must be all `None`.
    pub(crate) fn bfs_into(
        &self,
        source: VertexId,
        dist: &mut [Option<usize>],
        queue: &mut VecDeque<VertexId>,
    ) {
        queue.clear();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Labels components in order of their smallest vertex.
    pub fn components(&self) -> ComponentLabeling {
        let n = self.n();
        let mut component_of = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            component_of[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if component_of[w] == usize::MAX {
                        component_of[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling {
            component_of,
            component_count: count,
        }
    }

    /// True for the empty graph and any single-vertex graph.
    pub fn is_connected(&self) -> bool {
        self.components().component_count <= 1
    }

    /// BFS 2-coloring of every component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u] == Some(true);
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Repeated or out-of-range ids are rejected.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Graph> {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check(v)?;
            if new_id[v] != usize::MAX {
                return Err(Error::InvalidParameter(alloc::format!(
                    "vertex {v} listed twice in subgraph selection"
                )));
            }
            new_id[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        Ok(Self::from_unsorted(adjacency))
    }

    /// Largest connected component (lowest label wins ties) together with
    /// the original id of each of its vertices.
    pub fn largest_component(&self) -> (Graph, Vec<VertexId>) {
        let labels = self.components();
        if labels.component_count == 0 {
            return (Graph::empty(0), Vec::new());
        }
        let sizes = labels.sizes();
        let mut best = 0;
        for (c, &s) in sizes.iter().enumerate() {
            if s > sizes[best] {
                best = c;
            }
        }
        let keep: Vec<VertexId> = (0..self.n())
            .filter(|&v| labels.component_of[v] == best)
            .collect();
        let sub = self
            .induced_subgraph(&keep)
            .expect("component vertices are distinct and in range");
        (sub, keep)
    }
}
