//! Network-flow computations: the t-term rank as a max flow, and
//! feasibility of margins under entrywise upper bounds.
//!
//! All capacities and flows are exact integers. Augmenting paths are found by
//! breadth-first search over the residual graph, scanning arcs in insertion
//! order, so every run is deterministic.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{BinaryMatrix, CoverSpec, Error, Result};

/// A vertex of the bipartite source/sink network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    Source,
    Row(usize),
    Col(usize),
    Sink,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: Node,
    pub to: Node,
    pub capacity: usize,
    pub flow: usize,
}

/// A source -> rows -> columns -> sink network with integer capacities and
/// a current integral flow.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    m: usize,
    n: usize,
    edges: Vec<Edge>,
    // (edge index, forward?) per node
    adj: Vec<Vec<(usize, bool)>>,
}

impl FlowNetwork {
    pub fn new(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); m + n + 2],
        }
    }

    fn index(&self, node: Node) -> usize {
        match node {
            Node::Source => 0,
            Node::Row(i) => {
                assert!(i < self.m, "row node {i} out of range");
                1 + i
            }
            Node::Col(j) => {
                assert!(j < self.n, "column node {j} out of range");
                1 + self.m + j
            }
            Node::Sink => 1 + self.m + self.n,
        }
    }

    pub fn add_edge(&mut self, from: Node, to: Node, capacity: usize) -> usize {
        let id = self.edges.len();
        let (u, v) = (self.index(from), self.index(to));
        self.edges.push(Edge {
            from,
            to,
            capacity,
            flow: 0,
        });
        self.adj[u].push((id, true));
        self.adj[v].push((id, false));
        id
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Total flow currently leaving the source.
    pub fn value(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.from == Node::Source)
            .map(|e| e.flow)
            .sum()
    }

    fn residual(&self, edge: usize, forward: bool) -> usize {
        let e = &self.edges[edge];
        if forward {
            e.capacity - e.flow
        } else {
            e.flow
        }
    }

    /// Finds one shortest augmenting path and pushes its bottleneck along it.
    /// Returns the amount pushed, or `None` when the flow is maximum.
    pub fn augment(&mut self) -> Option<usize> {
        let source = self.index(Node::Source);
        let sink = self.index(Node::Sink);
        let mut parent: Vec<Option<(usize, bool)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &(edge, forward) in &self.adj[u] {
                if self.residual(edge, forward) == 0 {
                    continue;
                }
                let e = &self.edges[edge];
                let v = self.index(if forward { e.to } else { e.from });
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some((edge, forward));
                    queue.push_back(v);
                }
            }
        }
        if !seen[sink] {
            return None;
        }
        let mut path = Vec::new();
        let mut v = sink;
        while v != source {
            let (edge, forward) = parent[v].expect("BFS tree reaches the sink");
            path.push((edge, forward));
            let e = &self.edges[edge];
            v = self.index(if forward { e.from } else { e.to });
        }
        let push = path
            .iter()
            .map(|&(edge, fwd)| self.residual(edge, fwd))
            .min()
            .unwrap_or(0);
        for (edge, forward) in path {
            if forward {
                self.edges[edge].flow += push;
            } else {
                self.edges[edge].flow -= push;
            }
        }
        Some(push)
    }

    /// Augments until no path remains and returns the flow value.
    pub fn max_flow(&mut self) -> usize {
        while self.augment().is_some() {}
        self.value()
    }
}

/// Source -> row `i` with capacity `t`, row `i` -> column `j` with capacity 1
/// whenever `a[i][j] = 1`, column `j` -> sink with capacity 1.
pub fn build_t_rank_network(a: &BinaryMatrix, t: usize) -> FlowNetwork {
    let (m, n) = (a.nrows(), a.ncols());
    let mut net = FlowNetwork::new(m, n);
    for i in 0..m {
        net.add_edge(Node::Source, Node::Row(i), t);
    }
    for i in 0..m {
        for j in 0..n {
            if a.get(i, j) {
                net.add_edge(Node::Row(i), Node::Col(j), 1);
            }
        }
    }
    for j in 0..n {
        net.add_edge(Node::Col(j), Node::Sink, 1);
    }
    net
}

/// The t-term rank: the most 1s selectable with at most one per column and
/// at most `t` per row.
pub fn t_term_rank(a: &BinaryMatrix, t: usize) -> usize {
    build_t_rank_network(a, t).max_flow()
}

/// A dense nonnegative integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<usize>,
}

impl IntMatrix {
    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Self { nrows, ncols, data }
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != ncols) {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self::from_fn(rows.len(), ncols, |i, j| rows[i].as_ref()[j]))
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.ncols + j]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.ncols)
            .map(|j| (0..self.nrows).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// `Some` when every entry is 0 or 1.
    pub fn to_binary(&self) -> Option<BinaryMatrix> {
        if self.data.iter().any(|&x| x > 1) {
            return None;
        }
        Some(BinaryMatrix::from_fn(self.nrows, self.ncols, |i, j| {
            self.get(i, j) == 1
        }))
    }
}

impl From<&BinaryMatrix> for IntMatrix {
    fn from(a: &BinaryMatrix) -> Self {
        IntMatrix::from_fn(a.nrows(), a.ncols(), |i, j| usize::from(a.get(i, j)))
    }
}

/// A nonnegative integral matrix with row sums `r`, column sums `s` and
/// `a[i][j] <= bounds[i][j]`, if one exists. Solved as a transportation
/// network: feasible iff the max flow saturates every source edge.
pub fn feasible_bounded(
    r: impl AsRef<[usize]>,
    s: impl AsRef<[usize]>,
    bounds: &IntMatrix,
) -> Result<Option<IntMatrix>> {
    let (r, s) = (r.as_ref(), s.as_ref());
    let (m, n) = (r.len(), s.len());
    if bounds.nrows() != m || bounds.ncols() != n {
        return Err(Error::DimensionMismatch);
    }
    let weight: usize = r.iter().sum();
    if weight != s.iter().sum::<usize>() {
        return Ok(None);
    }
    let mut net = FlowNetwork::new(m, n);
    for (i, &x) in r.iter().enumerate() {
        net.add_edge(Node::Source, Node::Row(i), x);
    }
    let mut cells = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if bounds.get(i, j) > 0 {
                cells.push((
                    i,
                    j,
                    net.add_edge(Node::Row(i), Node::Col(j), bounds.get(i, j)),
                ));
            }
        }
    }
    for (j, &x) in s.iter().enumerate() {
        net.add_edge(Node::Col(j), Node::Sink, x);
    }
    if net.max_flow() != weight {
        return Ok(None);
    }
    let mut out = vec![0usize; m * n];
    for (i, j, id) in cells {
        out[i * n + j] = net.edges()[id].flow;
    }
    Ok(Some(IntMatrix {
        nrows: m,
        ncols: n,
        data: out,
    }))
}

/// A member of the class whose 1s satisfy every cover in `covers`
/// simultaneously, if one exists.
///
/// Only the given index sets are tried: `None` says nothing about matrices
/// covered by other rows and columns of the same counts.
pub fn multi_cover_feasible(
    r: impl AsRef<[usize]>,
    s: impl AsRef<[usize]>,
    covers: &[CoverSpec],
) -> Result<Option<BinaryMatrix>> {
    let (r, s) = (r.as_ref(), s.as_ref());
    let (m, n) = (r.len(), s.len());
    for c in covers {
        if let CoverSpec::Prefix { e, f } = *c {
            if e > m || f > n {
                return Err(Error::DimensionMismatch);
            }
        }
    }
    let allowed: Vec<BinaryMatrix> = covers.iter().map(|c| allowed_cells(c, m, n)).collect();
    let bounds = IntMatrix::from_fn(m, n, |i, j| {
        usize::from(allowed.iter().all(|a| a.get(i, j)))
    });
    Ok(feasible_bounded(r, s, &bounds)?.map(|a| a.to_binary().expect("bounds are 0/1")))
}

/// Mask of cells lying in a covered row or a covered column.
fn allowed_cells(cover: &CoverSpec, m: usize, n: usize) -> BinaryMatrix {
    match cover {
        CoverSpec::Prefix { e, f } => BinaryMatrix::from_fn(m, n, |i, j| i < *e || j < *f),
        CoverSpec::Explicit { rows, cols } => {
            BinaryMatrix::from_fn(m, n, |i, j| rows.contains(&i) || cols.contains(&j))
        }
    }
}
