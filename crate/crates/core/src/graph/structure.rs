//! Distances, cycles, degree parity and complete multipartite structure.

use std::collections::VecDeque;

use super::Graph;

/// BFS distances from `src`; `None` for unreachable vertices.
pub fn distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in g.neighbors(u).iter() {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Connected; the empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || distances(g, 0).iter().all(Option::is_some)
}

/// Largest eccentricity; `None` if disconnected. A single vertex has diameter 0.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.order() {
        for d in distances(g, v) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for src in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for v in g.neighbors(u).iter() {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Euler's criterion: connected and every degree even.
///
/// Isolated vertices are not ignored, so a graph with an isolated vertex and
/// some edges is not Eulerian.
pub fn is_eulerian(g: &Graph) -> bool {
    g.order() > 0 && is_connected(g) && g.degrees().iter().all(|d| d % 2 == 0)
}

/// Partite sets when `g` is complete multipartite, each sorted, ordered by
/// smallest member.
///
/// The candidate classes are the connected components of the complement;
/// `g` is complete multipartite exactly when each of them is independent in `g`.
pub fn multipartite_decomposition(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let comp = g.complement();
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class_of[start] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for v in comp.neighbors(u).iter() {
                if class_of[v] == usize::MAX {
                    class_of[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }
    let independent = classes
        .iter()
        .all(|c| c.iter().all(|&u| c.iter().all(|&v| !g.has_edge(u, v))));
    independent.then_some(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_distances() {
        let k4 = Graph::complete(4);
        assert_eq!(diameter(&k4), Some(1));
        assert_eq!(girth(&k4), Some(3));
        assert!(is_connected(&k4));
    }

    #[test]
    fn path_and_single_vertex() {
        let p3 = Graph::path(3);
        assert_eq!(diameter(&p3), Some(2));
        assert_eq!(girth(&p3), None);
        let k1 = Graph::empty(1);
        assert_eq!(diameter(&k1), Some(0));
        assert_eq!(girth(&k1), None);
        assert_eq!(diameter(&Graph::empty(2)), None);
    }

    #[test]
    fn girth_of_cycles() {
        for n in 3..9 {
            assert_eq!(girth(&Graph::cycle(n)), Some(n));
        }
        // C6 with a chord making two 4-cycles
        let mut g = Graph::cycle(6);
        g.add_edge(0, 3);
        assert_eq!(girth(&g), Some(4));
    }

    #[test]
    fn euler_criterion() {
        assert!(is_eulerian(&Graph::complete(3)));
        assert!(!is_eulerian(&Graph::complete(4)));
        assert!(is_eulerian(&Graph::cycle(6)));
        let mut two_triangles = Graph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            two_triangles.add_edge(u, v);
        }
        assert!(!is_eulerian(&two_triangles));
    }

    #[test]
    fn multipartite() {
        assert_eq!(
            multipartite_decomposition(&Graph::complete(3)),
            Some(vec![vec![0], vec![1], vec![2]])
        );
        assert_eq!(multipartite_decomposition(&Graph::cycle(5)), None);
        // K_{2,2} = C4
        assert_eq!(
            multipartite_decomposition(&Graph::cycle(4)),
            Some(vec![vec![0, 2], vec![1, 3]])
        );
        assert_eq!(
            multipartite_decomposition(&Graph::path(3)),
            Some(vec![vec![0, 2], vec![1]])
        );
        assert_eq!(multipartite_decomposition(&Graph::path(4)), None);
    }
}
