//! Small labeled graphs as adjacency bitmasks.

use std::fmt;

use super::Permutation;

/// Largest vertex count the bitmask representation supports.
pub const MAX_VERTICES: usize = 7;

/// Simple graph on vertices `0..n`, `n ≤ 7`, with `adj[v]` the neighbor mask of `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u8; MAX_VERTICES],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        }
    }

    /// Panics on loops or out-of-range vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v})");
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges)
    }

    /// All `2^{C(n,2)}` graphs on `n` labeled vertices.
    pub fn all(n: usize) -> impl Iterator<Item = SmallGraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len()).map(move |mask| {
            let mut g = SmallGraph::empty(n);
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
            }
            g
        })
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn neighbors(&self, v: usize) -> u8 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Transport along `sigma`: vertex `v` becomes `sigma(v)`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        let mut out = Self::empty(self.order());
        for v in 0..self.order() {
            out.adj[sigma.apply(v)] = sigma.apply_mask(self.adj[v]);
        }
        out
    }

    /// Connected-component label for each vertex, numbered from 0.
    fn component_labels(&self) -> Vec<usize> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(v) = stack.pop() {
                for (w, slot) in label.iter_mut().enumerate() {
                    if self.has_edge(v, w) && *slot == usize::MAX {
                        *slot = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.component_labels()
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    /// The graph on zero vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.component_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_acyclic()
    }

    /// Proper 2-colorings by exhaustion: `blue` is the mask of blue vertices.
    pub fn bicolorings(&self) -> impl Iterator<Item = u8> + '_ {
        (0u16..1 << self.order())
            .map(|m| m as u8)
            .filter(move |&blue| self.is_proper_coloring(blue))
    }

    pub fn is_proper_coloring(&self, blue: u8) -> bool {
        (0..self.order()).all(|v| {
            let same = if blue >> v & 1 == 1 { blue } else { !blue };
            self.adj[v] & same == 0
        })
    }

    pub fn count_bicolorings(&self) -> usize {
        self.bicolorings().count()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bicolorings().next().is_some()
    }

    /// No two distinct vertices have the same neighborhood.
    pub fn is_point_determining(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| (u + 1..n).all(|v| self.adj[u] != self.adj[v]))
    }

    /// No vertex of degree exactly one.
    pub fn is_endpoint_free(&self) -> bool {
        (0..self.order()).all(|v| self.degree(v) != 1)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.order())
            .flat_map(|u| (u + 1..self.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
        write!(f, "SmallGraph(n={}, {:?})", self.n, edges)
    }
}

/// A graph together with a proper red/blue coloring of its vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ColoredGraph {
    pub graph: SmallGraph,
    /// Mask of blue vertices; the rest are red.
    pub blue: u8,
}

impl ColoredGraph {
    /// `None` unless the coloring is proper.
    pub fn new(graph: SmallGraph, blue: u8) -> Option<Self> {
        let blue = blue & full_mask(graph.order());
        graph
            .is_proper_coloring(blue)
            .then_some(Self { graph, blue })
    }

    pub fn relabel(&self, sigma: &Permutation) -> Self {
        Self {
            graph: self.graph.relabel(sigma),
            blue: sigma.apply_mask(self.blue),
        }
    }

    /// Swaps the two colors.
    pub fn flip(&self) -> Self {
        Self {
            graph: self.graph,
            blue: !self.blue & full_mask(self.graph.order()),
        }
    }
}

fn full_mask(n: usize) -> u8 {
    ((1u16 << n) - 1) as u8
}
