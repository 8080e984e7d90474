use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Vertex indices are dense in `[0, n)`; removals re-index.
pub type VertexId = usize;

/// Simple undirected graph: per-vertex sorted adjacency sets.
///
/// Graphs are immutable values; every mutation returns a new graph, so the
/// same input can be fed to several methods and cross-checked safely.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Edges as (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn degree_sequence_sorted(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        ds.sort_unstable();
        ds
    }

    /// Open neighborhood N(v) as a set.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        let mut s = VertexSet::empty(self.n());
        for &u in &self.adj[v] {
            s.insert(u);
        }
        Ok(s)
    }

    /// Common neighborhood of a vertex set: the intersection of its members'
    /// open neighborhoods. The empty set yields the full vertex set (the
    /// empty-intersection convention the vertex-cut formula relies on).
    pub fn common_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut it = s.iter();
        let Some(first) = it.next() else {
            return VertexSet::full(self.n());
        };
        let mut acc = self.neighborhood(first).expect("member within range");
        for v in it {
            let nb = self.neighborhood(v).expect("member within range");
            acc.intersect_with(&nb);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![BTreeSet::new(); n];
        let mut m = 0;
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(&v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                    m += 1;
                }
            }
        }
        Graph { adj, m }
    }

    /// Disjoint union; the second operand's vertices are shifted by n1.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + n1).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let n2 = other.n();
        let mut g = self.disjoint_union(other);
        for u in 0..n1 {
            for v in 0..n2 {
                g.adj[u].insert(n1 + v);
                g.adj[n1 + v].insert(u);
            }
        }
        g.m += n1 * n2;
        g
    }

    /// Cartesian product; vertex (u, v) maps to index u * n2 + v.
    /// (u1,v1) ~ (u2,v2) iff equal in one coordinate and adjacent in the other.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let n2 = other.n();
        let mut g = Graph::empty(n1 * n2);
        for u in 0..n1 {
            for (v1, v2) in other.edges() {
                g.insert_edge(u * n2 + v1, u * n2 + v2).unwrap();
            }
        }
        for v in 0..n2 {
            for (u1, u2) in self.edges() {
                g.insert_edge(u1 * n2 + v, u2 * n2 + v).unwrap();
            }
        }
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g.m += 1;
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g.m -= 1;
        Ok(g)
    }

    /// Induced subgraph on V minus v, densely re-indexed. Returns the
    /// old-to-new index map (None at the removed vertex).
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
        let map: Vec<Option<usize>> = (0..n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let mut adj = Vec::with_capacity(n - 1);
        let mut m = 0;
        for (u, nbrs) in self.adj.iter().enumerate() {
            if u == v {
                continue;
            }
            let row: BTreeSet<usize> = nbrs
                .iter()
                .filter_map(|&w| map[w])
                .collect();
            m += row.len();
            adj.push(row);
        }
        Ok((Graph { adj, m: m / 2 }, map))
    }

    /// Induced subgraph on the given vertices. Returns the graph and the
    /// new-to-old index map (new index i corresponds to `keep[i]` sorted).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let verts = keep.to_vec();
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in verts.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut adj = Vec::with_capacity(verts.len());
        let mut m = 0;
        for &old in &verts {
            let row: BTreeSet<usize> = self.adj[old]
                .iter()
                .filter(|&&w| keep.contains(w))
                .map(|&w| old_to_new[w])
                .collect();
            m += row.len();
            adj.push(row);
        }
        (Graph { adj, m: m / 2 }, verts)
    }

    /// G with a new vertex (index n) adjacent to exactly `attach_to`.
    pub fn attach_vertex(&self, attach_to: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut g = self.clone();
        g.adj.push(BTreeSet::new());
        let mut seen = BTreeSet::new();
        for &u in attach_to {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if !seen.insert(u) {
                return Err(Error::DuplicateVertex(u));
            }
            g.adj[u].insert(n);
            g.adj[n].insert(u);
            g.m += 1;
        }
        Ok(g)
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(u) = queue.pop() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Peeling order: repeatedly extract a minimum-degree vertex of the
    /// remaining graph (ties broken toward the lowest index). Returns the
    /// order, each vertex's residual degree at extraction, and the
    /// degeneracy (the maximum residual degree seen).
    pub fn degeneracy_ordering_with_degrees(&self) -> (Vec<usize>, Vec<usize>, usize) {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
        let mut alive = vec![true; n];
        let mut order = Vec::with_capacity(n);
        let mut residual = Vec::with_capacity(n);
        let mut degeneracy = 0;
        while let Some(&(d, v)) = queue.iter().next() {
            queue.remove(&(d, v));
            alive[v] = false;
            degeneracy = degeneracy.max(d);
            order.push(v);
            residual.push(d);
            for &u in &self.adj[v] {
                if alive[u] {
                    queue.remove(&(deg[u], u));
                    deg[u] -= 1;
                    queue.insert((deg[u], u));
                }
            }
        }
        (order, residual, degeneracy)
    }

    pub fn degeneracy_ordering(&self) -> (Vec<usize>, usize) {
        let (order, _, k) = self.degeneracy_ordering_with_degrees();
        (order, k)
    }

    /// Adjacency symmetry, irreflexivity, and the edge-count identity.
    /// Cheap enough to assert in tests after every construction path.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for (v, nbrs) in self.adj.iter().enumerate() {
            for &u in nbrs {
                if u >= n || u == v || !self.adj[u].contains(&v) {
                    return false;
                }
            }
            total += nbrs.len();
        }
        total == 2 * self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn path(k: usize) -> Graph {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(k, &edges).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edge_list(k, &edges).unwrap()
    }

    fn complete(k: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(k, &edges).unwrap()
    }

    #[test]
    fn from_edge_list_examples() {
        let p3 = path(3);
        assert_eq!(p3.degree_sequence_sorted(), vec![1, 1, 2]);
        assert_eq!(p3.degree(1), 2);

        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { v: 5, n: 2 })
        );

        let c4 = cycle(4);
        assert_eq!(c4.degree_sequence_sorted(), vec![2, 2, 2, 2]);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.check_invariants());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement().edge_count(), 0);
        // complement(C4) = two disjoint edges
        let cc = cycle(4).complement();
        assert_eq!(cc.edge_count(), 2);
        assert_eq!(cc.degree_sequence_sorted(), vec![1, 1, 1, 1]);
        assert_eq!(cc.connected_components().len(), 2);
        // involution, vertex for vertex
        let p3 = path(3);
        assert_eq!(p3.complement().complement(), p3);
    }

    #[test]
    fn products() {
        let k1 = complete(1);
        assert_eq!(k1.join(&k1), complete(2));

        let p2 = path(2);
        let c = p2.cartesian_product(&p2);
        assert_eq!(c.n(), 4);
        assert_eq!(c.edge_count(), 4);
        assert_eq!(c.degree_sequence_sorted(), vec![2, 2, 2, 2]);

        let u = p2.disjoint_union(&path(3));
        assert_eq!(u.n(), 5);
        assert_eq!(u.edge_count(), 3);
        assert_eq!(u.connected_components().len(), 2);
    }

    #[test]
    fn neighborhood_queries() {
        let c4 = cycle(4);
        assert_eq!(c4.neighborhood(0).unwrap().to_vec(), vec![1, 3]);
        assert!(c4.neighborhood(7).is_err());

        let s = VertexSet::from_indices(4, &[0, 2]).unwrap();
        assert_eq!(c4.common_neighborhood(&s).to_vec(), vec![1, 3]);
        let single = VertexSet::from_indices(4, &[1]).unwrap();
        assert_eq!(
            c4.common_neighborhood(&single),
            c4.neighborhood(1).unwrap()
        );
        assert_eq!(c4.common_neighborhood(&VertexSet::empty(4)).len(), 4);

        // star center sees every leaf; an isolated vertex sees nothing
        let star3 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star3.neighborhood(0).unwrap().len(), 3);
        let lonely = Graph::empty(2);
        assert!(lonely.neighborhood(0).unwrap().is_empty());
    }

    #[test]
    fn degeneracy_examples() {
        // forests peel to 1
        let tree = Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree.degeneracy_ordering().1, 1);
        assert_eq!(complete(4).degeneracy_ordering().1, 3);
        assert_eq!(Graph::empty(0).degeneracy_ordering(), (vec![], 0));
        assert_eq!(Graph::empty(3).degeneracy_ordering().1, 0);

        // ladders peel from the corners at degree 2
        let ladder4 = path(2).cartesian_product(&path(4));
        assert_eq!(ladder4.degeneracy_ordering().1, 2);
    }

    #[test]
    fn removal_and_addition() {
        let c4 = cycle(4);
        let (p3, map) = c4.remove_vertex(0).unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree_sequence_sorted(), vec![1, 1, 2]);
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);
        assert_eq!(p3.connected_components().len(), 1);

        let p3 = path(3);
        let c3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(c3.degree_sequence_sorted(), vec![2, 2, 2]);
        assert_eq!(p3.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(p3.add_edge(1, 1), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn attach_vertex_builds_wheel_spokes() {
        let c4 = cycle(4);
        let g = c4.attach_vertex(&[0, 2]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 2);
        assert!(g.has_edge(4, 0) && g.has_edge(4, 2));
        assert!(c4.attach_vertex(&[1, 1]).is_err());
        assert!(c4.attach_vertex(&[9]).is_err());
        // empty attachment = disjoint union with K1
        assert_eq!(c4.attach_vertex(&[]).unwrap().edge_count(), 4);
    }

    #[test]
    fn components_partition() {
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3, 4]);
        assert_eq!(comps[2].to_vec(), vec![5]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = cycle(5);
        let keep = VertexSet::from_indices(5, &[0, 1, 2, 4]).unwrap();
        let (h, back) = c5.induced(&keep);
        assert_eq!(back, vec![0, 1, 2, 4]);
        assert_eq!(h.edge_count(), 3); // 0-1, 1-2, 4-0
        assert!(h.has_edge(0, 3)); // old 0 - old 4
    }

    #[test]
    fn cartesian_ladder_counts() {
        for n in 2..=50 {
            let g = path(2).cartesian_product(&path(n));
            assert_eq!(g.n(), 2 * n);
            assert_eq!(g.edge_count(), 3 * n - 2);
        }
    }

    prop_compose! {
        fn arb_graph()(n in 0usize..9)(n in Just(n), bits in prop::bits::u64::between(0, 36)) -> Graph {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> idx & 1 == 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn invariants_survive_mutation(g in arb_graph(), v in 0usize..9, w in 0usize..9) {
            prop_assert!(g.check_invariants());
            prop_assert!(g.complement().check_invariants());
            prop_assert_eq!(g.complement().complement(), g.clone());
            if v < g.n() {
                let (h, _) = g.remove_vertex(v).unwrap();
                prop_assert!(h.check_invariants());
            }
            if v < g.n() && w < g.n() && v != w && !g.has_edge(v, w) {
                prop_assert!(g.add_edge(v, w).unwrap().check_invariants());
            }
        }

        #[test]
        fn components_are_a_partition(g in arb_graph()) {
            let comps = g.connected_components();
            let mut seen = vec![false; g.n()];
            for c in &comps {
                for v in c.iter() {
                    prop_assert!(!seen[v]);
                    seen[v] = true;
                }
                // no edges leave a component
                for v in c.iter() {
                    for &u in g.neighbors(v) {
                        prop_assert!(c.contains(u));
                    }
                }
                // internally connected: BFS from the first member covers it
                let first = c.iter().next().unwrap();
                let (sub, _) = g.induced(c);
                prop_assert!(sub.is_connected());
                let _ = first;
            }
            prop_assert!(seen.into_iter().all(|s| s));
        }

        #[test]
        fn degeneracy_bounded_by_max_degree(g in arb_graph()) {
            let (order, residuals, k) = g.degeneracy_ordering_with_degrees();
            prop_assert!(k <= g.max_degree());
            prop_assert_eq!(order.len(), g.n());
            prop_assert!(residuals.iter().all(|&d| d <= k));
        }
    }
}
