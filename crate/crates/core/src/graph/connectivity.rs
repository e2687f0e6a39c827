//! Vertex connectivity via unit-capacity max flow on the vertex-split network.

use std::collections::VecDeque;

use super::structure::is_connected;
use super::Graph;

/// Residual network where vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`
/// joined by a unit arc; each graph edge gives arcs `u_out → v_in` and `v_out → u_in`.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    base_cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
    /// `edge_arc[u * n + v]` is the arc `u_out → v_in`.
    edge_arc: Vec<usize>,
    n: usize,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
            edge_arc: vec![usize::MAX; n * n],
            n,
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.edge_arc[u * n + v] = net.head.len();
            net.arc(2 * u + 1, 2 * v, n as i32);
            net.edge_arc[v * n + u] = net.head.len();
            net.arc(2 * v + 1, 2 * u, n as i32);
        }
        net.base_cap = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping at `limit`.
    fn local_connectivity(&mut self, g: &Graph, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base_cap);
        let source = 2 * s + 1;
        let sink = 2 * t;
        let n = self.n;
        // paths s - c - t through common neighbours are disjoint; route them first
        let mut flow = 0;
        for c in 0..n {
            if flow >= limit {
                return flow;
            }
            if g.has_edge(s, c) && g.has_edge(c, t) {
                for e in [self.edge_arc[s * n + c], 2 * c, self.edge_arc[c * n + t]] {
                    self.cap[e] -= 1;
                    self.cap[e ^ 1] += 1;
                }
                flow += 1;
            }
        }
        let nodes = self.adj.len();
        while flow < limit {
            let mut via = vec![usize::MAX; nodes];
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; nodes];
            seen[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &e in &self.adj[u] {
                    let w = self.head[e];
                    if !seen[w] && self.cap[e] > 0 {
                        seen[w] = true;
                        via[w] = e;
                        queue.push_back(w);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut w = sink;
            while w != source {
                let e = via[w];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                w = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// κ(G): the smallest number of vertices whose removal disconnects `g`,
/// `order - 1` for complete graphs and 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !is_connected(g) {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut net = SplitNetwork::new(g);
    let mut best = g.min_degree();
    // A minimum separator misses one of any best + 1 vertices, and that
    // vertex is separated from some non-neighbour.
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j != i && !g.has_edge(i, j) {
                best = best.min(net.local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Removes every subset of increasing size until the rest disconnects.
    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        if g.is_complete() {
            return n - 1;
        }
        (0..n)
            .find(|&k| {
                (0u32..1 << n)
                    .filter(|m| m.count_ones() as usize == k)
                    .any(|mask| {
                        let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
                        let mut idx = vec![usize::MAX; n];
                        for (a, &v) in keep.iter().enumerate() {
                            idx[v] = a;
                        }
                        let mut h = Graph::empty(keep.len());
                        for (u, v) in g.edges() {
                            if idx[u] != usize::MAX && idx[v] != usize::MAX {
                                h.add_edge(idx[u], idx[v]);
                            }
                        }
                        !is_connected(&h)
                    })
            })
            .unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(vertex_connectivity(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Graph::path(3)), 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), 2);
        assert_eq!(vertex_connectivity(&Graph::empty(3)), 0);
    }

    #[test]
    fn matches_brute_force() {
        let mut state = 0x1234_5678_9ABC_DEF1u64;
        for _ in 0..40 {
            let n = 4 + (state % 6) as usize;
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 60 {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(vertex_connectivity(&g), brute_force(&g), "{:?}", g.edges());
        }
    }
}
