//! The bipartite network of the reconstruction problem and its maximum flow.
//!
//! Vertices are the source `s`, the sink `t`, one vertex `v_i` per row and one
//! `w_j` per column. Edges `s → v_i` carry capacity `r_i`, `v_i → w_j`
//! capacity 1 and `w_j → t` capacity `s_j`. Integer flows correspond one to
//! one with binary matrices via `a_ij = Y(v_i → w_j)`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

use super::matrix::{BinaryMatrix, SumVectors};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
    pub flow: u64,
}

/// An edge of an undirected augmenting path, used forward or backward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStep {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    m: usize,
    n: usize,
    edges: Vec<Edge>,
    /// Incident edge indices per vertex, in edge order.
    incident: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    pub fn row_vertex(&self, i: usize) -> usize {
        2 + i
    }

    pub fn col_vertex(&self, j: usize) -> usize {
        2 + self.m + j
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.m + self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Index of `s → v_i`.
    pub fn source_edge(&self, i: usize) -> usize {
        i
    }

    /// Index of `v_i → w_j`.
    pub fn cell_edge(&self, i: usize, j: usize) -> usize {
        self.m + i * self.n + j
    }

    /// Index of `w_j → t`.
    pub fn sink_edge(&self, j: usize) -> usize {
        self.m + self.m * self.n + j
    }

    /// Sum of the flow leaving the source.
    pub fn size(&self) -> u64 {
        (0..self.m).map(|i| self.edges[self.source_edge(i)].flow).sum()
    }

    pub fn sink_inflow(&self) -> u64 {
        (0..self.n).map(|j| self.edges[self.sink_edge(j)].flow).sum()
    }

    /// Upper bound on any flow: `Σ r_i`.
    pub fn source_capacity(&self) -> u64 {
        (0..self.m).map(|i| self.edges[self.source_edge(i)].capacity).sum()
    }

    /// Replaces the current flow with the one corresponding to `a`, whose
    /// marginals must not exceed the capacities.
    pub fn seed_from_matrix(&mut self, a: &BinaryMatrix) -> Result<()> {
        if a.rows() != self.m || a.cols() != self.n {
            return Err(Error::invalid(format!(
                "matrix is {}x{}, network expects {}x{}",
                a.rows(),
                a.cols(),
                self.m,
                self.n
            )));
        }
        for i in 0..self.m {
            let e = self.source_edge(i);
            if a.row_sums()[i] as u64 > self.edges[e].capacity {
                return Err(Error::invalid(format!("row {} exceeds its prescribed sum", i + 1)));
            }
        }
        for j in 0..self.n {
            let e = self.sink_edge(j);
            if a.col_sums()[j] as u64 > self.edges[e].capacity {
                return Err(Error::invalid(format!("column {} exceeds its prescribed sum", j + 1)));
            }
        }
        for i in 0..self.m {
            let e = self.source_edge(i);
            self.edges[e].flow = a.row_sums()[i] as u64;
            for j in 0..self.n {
                let e = self.cell_edge(i, j);
                self.edges[e].flow = a.get(i, j) as u64;
            }
        }
        for j in 0..self.n {
            let e = self.sink_edge(j);
            self.edges[e].flow = a.col_sums()[j] as u64;
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> BinaryMatrix {
        let mut a = BinaryMatrix::zeros(self.m, self.n);
        for i in 0..self.m {
            for j in 0..self.n {
                if self.edges[self.cell_edge(i, j)].flow > 0 {
                    a.set(i, j, true);
                }
            }
        }
        a
    }

    /// Capacity bounds on every edge and conservation at every inner vertex.
    pub fn is_valid_flow(&self) -> bool {
        if self.edges.iter().any(|e| e.flow > e.capacity) {
            return false;
        }
        let mut balance = vec![0i64; self.vertex_count()];
        for e in &self.edges {
            balance[e.from] -= e.flow as i64;
            balance[e.to] += e.flow as i64;
        }
        balance[2..].iter().all(|&b| b == 0)
    }

    /// Shortest undirected `s`-`t` path whose forward edges are unsaturated
    /// and whose backward edges carry positive flow (breadth-first search).
    pub fn shortest_augmenting_path(&self) -> Option<Vec<PathStep>> {
        let mut parent: Vec<Option<PathStep>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::new();
        seen[Self::SOURCE] = true;
        queue.push_back(Self::SOURCE);
        while let Some(v) = queue.pop_front() {
            for &ei in &self.incident[v] {
                let e = self.edges[ei];
                let (next, usable, forward) = if e.from == v {
                    (e.to, e.flow < e.capacity, true)
                } else {
                    (e.from, e.flow > 0, false)
                };
                if !usable || seen[next] {
                    continue;
                }
                seen[next] = true;
                parent[next] = Some(PathStep { edge: ei, forward });
                if next == Self::SINK {
                    let mut path = Vec::new();
                    let mut at = Self::SINK;
                    while at != Self::SOURCE {
                        let step = parent[at].expect("BFS parent");
                        path.push(step);
                        let e = self.edges[step.edge];
                        at = if step.forward { e.from } else { e.to };
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(next);
            }
        }
        None
    }

    /// Pushes the bottleneck amount along `path`; returns that amount.
    pub fn augment(&mut self, path: &[PathStep]) -> u64 {
        let bottleneck = path
            .iter()
            .map(|s| {
                let e = self.edges[s.edge];
                if s.forward {
                    e.capacity - e.flow
                } else {
                    e.flow
                }
            })
            .min()
            .unwrap_or(0);
        for s in path {
            let e = &mut self.edges[s.edge];
            if s.forward {
                e.flow += bottleneck;
            } else {
                e.flow -= bottleneck;
            }
        }
        bottleneck
    }

    /// Augments along shortest paths until none is left. Returns the
    /// deficiency `Σ r_i - size` after each augmentation.
    pub fn augment_to_max(&mut self) -> Vec<u64> {
        let mut history = Vec::new();
        while let Some(path) = self.shortest_augmenting_path() {
            self.augment(&path);
            history.push(self.source_capacity() - self.size());
        }
        history
    }
}

/// Network for `sums`, carrying the zero flow.
pub fn build_network(sums: &SumVectors) -> FlowNetwork {
    let (m, n) = (sums.m(), sums.n());
    let mut edges = Vec::with_capacity(m * n + m + n);
    for (i, &r) in sums.rows().iter().enumerate() {
        edges.push(Edge {
            from: FlowNetwork::SOURCE,
            to: 2 + i,
            capacity: r as u64,
            flow: 0,
        });
    }
    for i in 0..m {
        for j in 0..n {
            edges.push(Edge {
                from: 2 + i,
                to: 2 + m + j,
                capacity: 1,
                flow: 0,
            });
        }
    }
    for (j, &s) in sums.cols().iter().enumerate() {
        edges.push(Edge {
            from: 2 + m + j,
            to: FlowNetwork::SINK,
            capacity: s as u64,
            flow: 0,
        });
    }
    let mut incident = vec![Vec::new(); 2 + m + n];
    for (k, e) in edges.iter().enumerate() {
        incident[e.from].push(k);
        incident[e.to].push(k);
    }
    FlowNetwork {
        m,
        n,
        edges,
        incident,
    }
}

/// Maximum flow from the network's current flow.
pub fn max_flow(mut net: FlowNetwork) -> FlowNetwork {
    net.augment_to_max();
    net
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sums(r: &[usize], s: &[usize]) -> SumVectors {
        SumVectors::new(r.to_vec(), s.to_vec()).unwrap()
    }

    #[test]
    fn edge_counts_and_capacities() {
        let net = build_network(&sums(&[1], &[1]));
        assert_eq!(net.edges().len(), 3);
        assert!(net.edges().iter().all(|e| e.capacity == 1));
        let net = build_network(&sums(&[1, 2], &[1, 1, 1]));
        assert_eq!(net.edges().len(), 11);
        assert_eq!(net.size(), 0);
        assert!(net.is_valid_flow());
    }

    #[test]
    fn single_cell() {
        let net = max_flow(build_network(&sums(&[1], &[1])));
        assert_eq!(net.size(), 1);
        assert!(net.to_matrix().get(0, 0));
    }

    #[test]
    fn feasible_two_by_two() {
        let net = max_flow(build_network(&sums(&[2, 0], &[1, 1])));
        assert_eq!(net.size(), 2);
        assert_eq!(net.to_matrix(), BinaryMatrix::from_rows(&[[1, 1], [0, 0]]).unwrap());
        assert!(net.is_valid_flow());
    }

    #[test]
    fn infeasible_two_by_two() {
        let net = max_flow(build_network(&sums(&[2, 0], &[2, 0])));
        assert_eq!(net.size(), 1);
        assert!(net.size() < net.source_capacity());
        assert!(net.shortest_augmenting_path().is_none());
    }

    #[test]
    fn seeding_reproduces_matrix() {
        let s = sums(&[3, 1, 4, 4, 2], &[4, 3, 1, 4, 2]);
        let a = BinaryMatrix::from_rows(&[
            [1, 0, 0, 1, 1],
            [0, 1, 0, 0, 0],
            [1, 1, 1, 1, 0],
            [1, 1, 0, 1, 1],
            [1, 0, 0, 1, 0],
        ])
        .unwrap();
        let mut net = build_network(&s);
        net.seed_from_matrix(&a).unwrap();
        assert_eq!(net.size(), 14);
        assert_eq!(net.sink_inflow(), 14);
        assert!(net.is_valid_flow());
        assert_eq!(net.to_matrix(), a);
        assert!(net.augment_to_max().is_empty());
    }

    #[test]
    fn seeding_rejects_overfull_matrix() {
        let mut net = build_network(&sums(&[1, 1], &[1, 1]));
        let a = BinaryMatrix::from_rows(&[[1, 1], [0, 0]]).unwrap();
        assert!(net.seed_from_matrix(&a).is_err());
    }

    #[test]
    fn augmentation_through_backward_edge() {
        // Identity seed: row 1 and column 1 are short, but a_11 is already 1,
        // so the only augmenting path undoes a_22.
        let s = sums(&[2, 1], &[2, 1]);
        let mut net = build_network(&s);
        net.seed_from_matrix(&BinaryMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap())
            .unwrap();
        let path = net.shortest_augmenting_path().unwrap();
        assert_eq!(path.len(), 5);
        assert_eq!(path.iter().filter(|p| !p.forward).count(), 1);
        assert_eq!(net.augment(&path), 1);
        assert_eq!(net.to_matrix(), BinaryMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap());
        assert!(net.is_valid_flow());
    }
}
