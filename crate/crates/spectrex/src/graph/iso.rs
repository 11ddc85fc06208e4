//! Canonical labeling by partition refinement with individualization, plus
//! induced-subgraph search.
//!
//! The canonical code is the lexicographically least upper-triangle bit
//! string over all orderings reachable from the refinement tree. Cells of
//! pairwise-interchangeable vertices (twins: equal rows off the pair) are
//! branched once, which collapses the search on the blow-up-heavy graphs
//! this toolkit lives on.

use super::Graph;

/// Order-invariant certificate: equal codes iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalCode {
    /// Compact hex rendering for report keys.
    pub fn hex(&self) -> String {
        use std::fmt::Write;
        let mut s = format!("{:02x}:", self.n);
        for w in &self.bits {
            write!(s, "{w:016x}").unwrap();
        }
        s
    }
}

/// Canonical code of `g`; invariant under relabeling.
pub fn canonical(g: &Graph) -> CanonicalCode {
    let cells: Vec<Vec<usize>> = vec![(0..g.n()).collect()];
    let cells = refine(g, cells);
    let mut best: Option<Vec<u64>> = None;
    search(g, cells, &mut best);
    CanonicalCode { n: g.n(), bits: best.expect("at least one leaf") }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical(a) == canonical(b)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    if let Some(target) = cells.iter().position(|c| c.len() > 1) {
        for &v in twin_representatives(g, &cells[target]) {
            let mut next = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    next.push(vec![v]);
                    next.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    next.push(c.clone());
                }
            }
            search(g, refine(g, next), best);
        }
    } else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_for_order(g, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
    }
}

/// 1-D Weisfeiler-Leman refinement to a stable ordered partition. Cell order
/// is determined only by the signatures, so it is isomorphism-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0usize; g.n()];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let sig = |v: usize| -> Vec<u32> {
            let mut s = vec![0u32; k];
            for u in g.neighbors(v) {
                s[cell_of[u]] += 1;
            }
            s
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        let mut split = false;
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<usize>> = std::collections::BTreeMap::new();
            for &v in c {
                groups.entry(sig(v)).or_default().push(v);
            }
            if groups.len() > 1 {
                split = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

/// One representative per twin class of the cell, in first-occurrence order.
/// u and v are twins when their rows agree outside {u, v}; the transposition
/// is then an automorphism, so sibling branches produce identical leaf sets.
fn twin_representatives<'a>(g: &Graph, cell: &'a [usize]) -> Vec<&'a usize> {
    let words = g.row(0).len();
    let mut reps: Vec<&usize> = Vec::new();
    'outer: for v in cell {
        for r in &reps {
            if twin(g, **r, *v, words) {
                continue 'outer;
            }
        }
        reps.push(v);
    }
    reps
}

fn twin(g: &Graph, u: usize, v: usize, words: usize) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    for w in 0..words {
        let mut mask = !0u64;
        if u >> 6 == w {
            mask &= !(1u64 << (u & 63));
        }
        if v >> 6 == w {
            mask &= !(1u64 << (v & 63));
        }
        if (ru[w] ^ rv[w]) & mask != 0 {
            return false;
        }
    }
    true
}

fn code_for_order(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * (n - 1) / 2;
    let mut bits = vec![0u64; nbits.div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[idx >> 6] |= 1u64 << (idx & 63);
            }
            idx += 1;
        }
    }
    bits
}

/// First induced embedding of `h` into `g` in lexicographic order of the
/// vertex map, or None. The image must induce exactly h's edges.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    if extend(g, h, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = map.len();
    if k == h.n() {
        return true;
    }
    let need = h.degree(k);
    for c in 0..g.n() {
        if used[c] || g.degree(c) < need {
            continue;
        }
        if (0..k).all(|p| h.has_edge(p, k) == g.has_edge(map[p], c)) {
            map.push(c);
            used[c] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[c] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.n(), &edges).unwrap()
    }

    #[test]
    fn c5_relabelings_share_code() {
        let c5 = Graph::cycle(5).unwrap();
        let relabeled = relabel(&c5, &[1, 3, 0, 2, 4]);
        assert_eq!(canonical(&c5), canonical(&relabeled));
        assert!(is_isomorphic(&c5, &relabeled));
    }

    #[test]
    fn k23_not_c5() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_isomorphic(&k23, &c5));
    }

    #[test]
    fn self_embedding_is_identity() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        assert_eq!(contains_induced(&g, &g), Some((0..6).collect()));
    }

    #[test]
    fn bipartite_hosts_no_odd_cycle() {
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(contains_induced(&k23, &c5), None);
    }

    #[test]
    fn induced_beats_subgraph() {
        // C4 is a subgraph of K4 but never induced.
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(contains_induced(&k4, &c4), None);
        assert!(contains_induced(&k4, &Graph::path(3).unwrap()).is_none());
        assert!(contains_induced(&k4, &Graph::path(2).unwrap()).is_some());
    }

    #[test]
    fn unique_5v_5e_connected_nonbip_triangle_free_class() {
        // Brute force over all labeled graphs on 5 vertices with 5 edges.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let mut codes = std::collections::HashSet::new();
        for mask in 0u32..1 << 10 {
            if mask.count_ones() != 5 {
                continue;
            }
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let c = crate::graph::classify(&g);
            if c.triangle_free && !c.bipartite && c.connected {
                codes.insert(canonical(&g));
            }
        }
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn blow_up_canonical_stability() {
        // Twin-heavy graphs: K_{2,9} subdivided, pendant added; relabeling
        // must not change the code.
        let base = Graph::complete_bipartite(2, 9).unwrap().subdivide_edge(0, 2).unwrap().add_pendant(0).unwrap();
        let mut perm: Vec<usize> = (0..base.n()).collect();
        perm.reverse();
        assert_eq!(canonical(&base), canonical(&relabel(&base, &perm)));
    }

    #[test]
    fn induced_c5_in_blow_up() {
        let y = Graph::cycle(5).unwrap().blow_up(1, 4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let map = contains_induced(&y, &c5).unwrap();
        let s = VertexSet::from_iter(y.n(), map.iter().copied());
        assert_eq!(s.len(), 5);
    }
}
