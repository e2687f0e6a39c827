//! Exact planarity testing.
//!
//! Graphs over the Euler edge bound are rejected immediately. Otherwise the
//! graph is split into biconnected blocks and each block is embedded
//! incrementally by the path-addition method of Demoucron, Malgrange and
//! Pertuiset: start from a cycle, and repeatedly route a path of some
//! fragment through a face that contains all of its attachment vertices,
//! preferring fragments with a single admissible face. A fragment with no
//! admissible face proves the block non-planar.

use std::collections::{BTreeSet, VecDeque};

use super::Graph;

/// Planarity decision.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.edge_count();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g)
        .into_iter()
        .all(|block| block_is_planar(&block))
}

/// A block as a standalone graph on relabelled vertices.
struct Block {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn biconnected_blocks(g: &Graph) -> Vec<Block> {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut component = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            component.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(make_block(&component));
                    }
                }
            }
        }
    }
    blocks
}

fn make_block(edges: &[(usize, usize)]) -> Block {
    let mut labels: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let index = |v: usize| labels.binary_search(&v).unwrap();
    let n = labels.len();
    let mut adj = vec![Vec::new(); n];
    let mut local = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let (a, b) = (index(a), index(b));
        adj[a].push(b);
        adj[b].push(a);
        local.push((a.min(b), a.max(b)));
    }
    Block {
        n,
        adj,
        edges: local,
    }
}

/// A fragment of the block relative to the embedded part `H`.
struct Fragment {
    attachments: Vec<usize>,
    /// Unembedded vertices of the fragment (empty for a single chord).
    interior: Vec<usize>,
}

fn block_is_planar(b: &Block) -> bool {
    if b.n <= 4 || b.edges.len() <= b.n + 2 {
        // cyclomatic number at most 3: too few independent cycles for a
        // subdivision of K5 (6) or K3,3 (4)
        return true;
    }
    if b.edges.len() > 3 * b.n - 6 {
        return false;
    }

    let cycle = find_cycle(b);
    let mut in_h = vec![false; b.n];
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[x] = true;
        h_edges.insert((x.min(y), x.max(y)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while h_edges.len() < b.edges.len() {
        let fragments = fragments(b, &in_h, &h_edges);
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; b.n];
                for &v in f {
                    s[v] = true;
                }
                s
            })
            .collect();
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|&a| face_sets[k][a]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("an unembedded edge leaves a fragment");
        let path = fragment_path(b, &fragments[fi], &in_h);

        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

/// Any cycle of the block (a block with at least three vertices has one).
fn find_cycle(b: &Block) -> Vec<usize> {
    let mut parent = vec![usize::MAX; b.n];
    let mut depth = vec![usize::MAX; b.n];
    depth[0] = 0;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for &w in &b.adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push(w);
            } else if w != parent[v] && parent[w] != v {
                // non-tree edge: walk both ends up to their meeting point
                let (mut x, mut y) = (v, w);
                let mut left = vec![x];
                let mut right = vec![y];
                while x != y {
                    if depth[x] >= depth[y] {
                        x = parent[x];
                        left.push(x);
                    } else {
                        y = parent[y];
                        right.push(y);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("blocks with three or more vertices contain a cycle")
}

fn fragments(b: &Block, in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &(x, y) in &b.edges {
        if in_h[x] && in_h[y] && !h_edges.contains(&(x, y)) {
            out.push(Fragment {
                attachments: vec![x, y],
                interior: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; b.n];
    for start in 0..b.n {
        if in_h[start] || seen[start] {
            continue;
        }
        let mut interior = vec![start];
        let mut attachments = BTreeSet::new();
        seen[start] = true;
        let mut i = 0;
        while i < interior.len() {
            let v = interior[i];
            for &w in &b.adj[v] {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
            i += 1;
        }
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(b: &Block, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let mut inside = vec![false; b.n];
    for &v in &frag.interior {
        inside[v] = true;
    }
    let mut via = vec![usize::MAX; b.n];
    let mut queue = VecDeque::new();
    for &w in &b.adj[start] {
        if inside[w] && via[w] == usize::MAX {
            via[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if let Some(&end) = b.adj[v].iter().find(|&&w| in_h[w] && w != start) {
            let mut path = vec![end, v];
            let mut x = v;
            while via[x] != start {
                x = via[x];
                path.push(x);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &w in &b.adj[v] {
            if inside[w] && via[w] == usize::MAX {
                via[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a block have at least two attachments")
}

/// Splits a face cycle along a path whose ends lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let z = *path.last().unwrap();
    let len = face.len();
    let ia = face
        .iter()
        .position(|&v| v == a)
        .expect("path starts on the face");
    let iz = face
        .iter()
        .position(|&v| v == z)
        .expect("path ends on the face");
    let interior = &path[1..path.len() - 1];

    let walk = |from: usize, to: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % len;
        }
        out
    };
    let mut first = walk(ia, iz);
    first.extend(interior.iter().rev());
    let mut second = walk(iz, ia);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        let mut g = Graph::empty(6);
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, b);
            }
        }
        g
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&k33()));
        let mut k33_minus = k33();
        k33_minus.remove_edge(0, 3);
        assert!(is_planar(&k33_minus));
    }

    #[test]
    fn euler_bound_rejects_seven_vertices_eighteen_edges() {
        let mut g = Graph::complete(7);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v);
        }
        assert_eq!(g.edge_count(), 18);
        assert!(!is_planar(&g));
    }

    #[test]
    fn subdivided_k5_is_not_planar() {
        // K5 with every edge subdivided once: 15 vertices, 20 edges
        let mut g = Graph::empty(15);
        let mut next = 5;
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, next);
                g.add_edge(next, v);
                next += 1;
            }
        }
        assert!(!is_planar(&g));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert!(!is_planar(&g));
    }

    #[test]
    fn grids_and_wheels_are_planar() {
        let mut grid = Graph::empty(16);
        for r in 0..4 {
            for c in 0..4 {
                let v = 4 * r + c;
                if c < 3 {
                    grid.add_edge(v, v + 1);
                }
                if r < 3 {
                    grid.add_edge(v, v + 4);
                }
            }
        }
        assert!(is_planar(&grid));
        let mut wheel = Graph::cycle(8);
        let mut w = Graph::empty(9);
        for (u, v) in wheel.edges() {
            w.add_edge(u, v);
        }
        for i in 0..8 {
            w.add_edge(i, 8);
        }
        assert!(is_planar(&w));
        wheel.add_edge(0, 4);
        assert!(is_planar(&wheel));
    }

    #[test]
    fn two_k5_joined_at_a_vertex() {
        let mut g = Graph::empty(9);
        for block in [[0, 1, 2, 3, 4], [4, 5, 6, 7, 8]] {
            for i in 0..5 {
                for j in i + 1..5 {
                    g.add_edge(block[i], block[j]);
                }
            }
        }
        assert!(!is_planar(&g));
        assert_eq!(biconnected_blocks(&g).len(), 2);
    }
}
