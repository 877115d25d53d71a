//! Graph-side machinery: constructive realizations of trees, cycles,
//! complete and complete-bipartite graphs, the independent-triple
//! obstruction, and a brute-force realization oracle.

use crate::chord::{ChordDiagram, SimpleGraph};
use crate::error::Error;
use crate::Result;

/// Witness that a graph is not realizable: an independent triple lying
/// on an induced cycle, all three adjacent to a common apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub triple: [usize; 3],
    pub apex: usize,
    pub cycle: Vec<usize>,
}

/// Result of the brute-force realization search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeOutcome {
    Found(ChordDiagram),
    /// Exhaustively verified: no matching realizes the graph.
    NotRealizable,
    /// Search budget exhausted before the space was covered.
    Inconclusive,
}

/// Joins two diagrams at one chord each: the incidence graph of the
/// result is the one-vertex join of the two incidence graphs. The shared
/// chord runs through the center; the remaining endpoints of `d1` end up
/// on the left half-boundary and those of `d2` on the right.
pub fn join(d1: &ChordDiagram, k1: usize, d2: &ChordDiagram, k2: usize) -> Result<ChordDiagram> {
    join_with_maps(d1, k1, d2, k2).map(|(d, _, _)| d)
}

/// As [`join`], also returning the new index of every input chord
/// (`k1` and `k2` map to the same shared chord).
pub fn join_with_maps(
    d1: &ChordDiagram,
    k1: usize,
    d2: &ChordDiagram,
    k2: usize,
) -> Result<(ChordDiagram, Vec<usize>, Vec<usize>)> {
    let (a1, b1) = d1.chord(k1)?;
    let (a2, b2) = d2.chord(k2)?;
    let arcs = |d: &ChordDiagram, a: usize, b: usize| {
        let m = d.points();
        let walk = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut p = (from + 1) % m;
            while p != to {
                out.push(p);
                p = (p + 1) % m;
            }
            out
        };
        (walk(a, b), walk(b, a))
    };
    let (alpha1, beta1) = arcs(d1, a1, b1);
    let (alpha2, beta2) = arcs(d2, a2, b2);
    // new circle counterclockwise: Q, alpha2, alpha1, P, beta1, beta2
    // with the shared chord P--Q identifying a1 = a2 = Q and b1 = b2 = P
    let mut pos1 = vec![usize::MAX; d1.points()];
    let mut pos2 = vec![usize::MAX; d2.points()];
    let mut idx = 0;
    pos1[a1] = idx;
    pos2[a2] = idx;
    idx += 1;
    for &p in &alpha2 {
        pos2[p] = idx;
        idx += 1;
    }
    for &p in &alpha1 {
        pos1[p] = idx;
        idx += 1;
    }
    pos1[b1] = idx;
    pos2[b2] = idx;
    idx += 1;
    for &p in &beta1 {
        pos1[p] = idx;
        idx += 1;
    }
    for &p in &beta2 {
        pos2[p] = idx;
        idx += 1;
    }
    let mut chords = Vec::new();
    let mut map1 = Vec::with_capacity(d1.n());
    for &(a, b) in d1.chords() {
        map1.push(chords.len());
        chords.push((pos1[a], pos1[b]));
    }
    let mut map2 = vec![usize::MAX; d2.n()];
    for (i, &(a, b)) in d2.chords().iter().enumerate() {
        if i == k2 {
            map2[i] = map1[k1];
        } else {
            map2[i] = chords.len();
            chords.push((pos2[a], pos2[b]));
        }
    }
    Ok((ChordDiagram::new(chords)?, map1, map2))
}

/// Realizes a tree by iterated joins with two-chord crossing diagrams.
/// Returns the diagram together with the isomorphism `vertex -> chord`.
pub fn realize_tree(t: &SimpleGraph) -> Result<(ChordDiagram, Vec<usize>)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.vertex_count();
    // BFS order so every new vertex attaches to one already-placed vertex
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut diagram = ChordDiagram::new(vec![(0, 1)])?;
    let mut chord_of = vec![usize::MAX; n];
    chord_of[order[0]] = 0;
    for &v in &order[1..] {
        let pair = ChordDiagram::new(vec![(0, 2), (1, 3)])?;
        let (joined, map1, map2) = join_with_maps(&diagram, chord_of[parent[v]], &pair, 0)?;
        for c in chord_of.iter_mut().filter(|c| **c != usize::MAX) {
            *c = map1[*c];
        }
        chord_of[v] = map2[1];
        diagram = joined;
    }
    Ok((diagram, chord_of))
}

/// The standard cyclic realization: chord `k` joins endpoints
/// `(2k, 2k+3 mod 2n)`, giving incidence graph `C_n`.
pub fn realize_cycle(n: usize) -> Result<ChordDiagram> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycles need n >= 3".into()));
    }
    ChordDiagram::new((0..n).map(|k| (2 * k, (2 * k + 3) % (2 * n))).collect())
}

/// All chords are diameters `(k, k + n)`, so every pair interleaves and
/// the incidence graph is `K_n`.
pub fn realize_complete(n: usize) -> Result<ChordDiagram> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graphs need n >= 1".into()));
    }
    ChordDiagram::new((0..n).map(|k| (k, k + n)).collect())
}

/// `p` mutually nested chords all crossed by `q` mutually nested chords;
/// the incidence graph is `K_{p,q}`.
pub fn realize_complete_bipartite(p: usize, q: usize) -> Result<ChordDiagram> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("bipartite classes need p, q >= 1".into()));
    }
    let mut chords = Vec::with_capacity(p + q);
    for a in 0..p {
        chords.push((a, 2 * p + q - 1 - a));
    }
    for b in 0..q {
        chords.push((p + b, 2 * p + 2 * q - 1 - b));
    }
    ChordDiagram::new(chords)
}

/// The star of paths `A_{p_1}, .., A_{p_k}` attached at one end vertex.
/// Arm vertices are numbered from the free end toward the hub and the
/// hub comes last, so every edge points to the multiple vertex.
pub fn star_graph(arms: &[usize]) -> Result<SimpleGraph> {
    if arms.is_empty() || arms.iter().any(|&p| p == 0) {
        return Err(Error::InvalidArgument("star arms must all have length >= 1".into()));
    }
    let n: usize = arms.iter().sum::<usize>() - (arms.len() - 1);
    let hub = n - 1;
    let mut edges = Vec::new();
    let mut next = 0usize;
    for &p in arms {
        // p - 1 vertices beyond the hub on this arm
        let arm: Vec<usize> = (next..next + p - 1).collect();
        next += p - 1;
        for w in arm.windows(2) {
            edges.push((w[0], w[1]));
        }
        if let Some(&last) = arm.last() {
            edges.push((last, hub));
        }
    }
    SimpleGraph::new(n, &edges)
}

/// Depth-first enumeration of induced cycles with at most `max_len`
/// vertices. The callback may stop the search by returning `false`.
fn for_each_induced_cycle(g: &SimpleGraph, max_len: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    let n = g.vertex_count();
    let mut path: Vec<usize> = Vec::new();
    fn dfs(
        g: &SimpleGraph,
        start: usize,
        path: &mut Vec<usize>,
        max_len: usize,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3
            && g.is_adjacent(last, start)
            && path[1] < last
            && path[2..path.len() - 1].iter().all(|&u| !g.is_adjacent(u, start))
        {
            if !f(path) {
                return false;
            }
        }
        if path.len() == max_len {
            return true;
        }
        for v in g.neighbors(last) {
            if v <= start || path.contains(&v) {
                continue;
            }
            // keep the path induced: v may touch only the path tip
            // (and the start vertex, which closes a cycle later)
            if path.len() >= 2
                && path[1..path.len() - 1].iter().any(|&u| g.is_adjacent(v, u))
            {
                continue;
            }
            path.push(v);
            if !dfs(g, start, path, max_len, f) {
                return false;
            }
            path.pop();
        }
        true
    }
    for start in 0..n {
        path.clear();
        path.push(start);
        if !dfs(g, start, &mut path, max_len, f) {
            return;
        }
    }
}

/// Searches for an independent triple with a common neighbor, lying on
/// an induced cycle. A witness proves non-realizability; absence of a
/// witness proves nothing. Induced cycles are searched up to
/// `max_cycle_len` vertices (12 by default via [`obstruction_check`]).
pub fn obstruction_check_with_cap(
    g: &SimpleGraph,
    max_cycle_len: usize,
) -> Option<ObstructionWitness> {
    let n = g.vertex_count();
    let mut witness = None;
    for_each_induced_cycle(g, max_cycle_len, &mut |cycle| {
        for apex in 0..n {
            if cycle.contains(&apex) {
                continue;
            }
            let on_cycle: Vec<usize> = cycle
                .iter()
                .copied()
                .filter(|&v| g.is_adjacent(apex, v))
                .collect();
            if on_cycle.len() < 3 {
                continue;
            }
            for i in 0..on_cycle.len() {
                for j in i + 1..on_cycle.len() {
                    for k in j + 1..on_cycle.len() {
                        let (a, b, c) = (on_cycle[i], on_cycle[j], on_cycle[k]);
                        if !g.is_adjacent(a, b) && !g.is_adjacent(a, c) && !g.is_adjacent(b, c) {
                            witness = Some(ObstructionWitness {
                                triple: [a, b, c],
                                apex,
                                cycle: cycle.to_vec(),
                            });
                            return false;
                        }
                    }
                }
            }
        }
        true
    });
    witness
}

pub fn obstruction_check(g: &SimpleGraph) -> Option<ObstructionWitness> {
    obstruction_check_with_cap(g, 12)
}

/// Visits every perfect matching of `points` circle points; the callback
/// returns `false` to abort. Returns `true` iff the enumeration ran to
/// completion.
pub fn for_each_matching(points: usize, f: &mut impl FnMut(&[(usize, usize)]) -> bool) -> bool {
    assert!(points % 2 == 0);
    let mut used = vec![false; points];
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(points / 2);
    fn rec(
        used: &mut Vec<bool>,
        stack: &mut Vec<(usize, usize)>,
        f: &mut impl FnMut(&[(usize, usize)]) -> bool,
    ) -> bool {
        let a = match used.iter().position(|&u| !u) {
            None => return f(stack),
            Some(a) => a,
        };
        used[a] = true;
        for b in a + 1..used.len() {
            if used[b] {
                continue;
            }
            used[b] = true;
            stack.push((a, b));
            if !rec(used, stack, f) {
                return false;
            }
            stack.pop();
            used[b] = false;
        }
        used[a] = false;
        true
    }
    rec(&mut used, &mut stack, f)
}

/// All diagrams on `n` chords up to rotation and reflection of the
/// endpoint circle, in a deterministic order.
pub fn enumerate_diagrams(n: usize) -> Vec<ChordDiagram> {
    let mut out = Vec::new();
    for_each_matching(2 * n, &mut |matching| {
        let d = ChordDiagram::new(matching.to_vec()).expect("matching is valid");
        let mut sorted = matching.to_vec();
        sorted.sort_unstable();
        if d.canonical_matching() == sorted {
            out.push(d);
        }
        true
    });
    out
}

/// Exhaustive realization oracle: enumerates perfect matchings and tests
/// incidence-graph isomorphism. `budget` caps the number of matchings
/// examined; exceeding it yields `Inconclusive`, distinguished from a
/// verified `NotRealizable`.
pub fn brute_force_realize(g: &SimpleGraph, budget: Option<u64>) -> RealizeOutcome {
    let all = enumerate_realizations(g, budget, true);
    match all {
        Ok(mut found) => match found.pop() {
            Some(d) => RealizeOutcome::Found(d),
            None => RealizeOutcome::NotRealizable,
        },
        Err(_) => RealizeOutcome::Inconclusive,
    }
}

/// All realizations of `g` up to dihedral equivalence (each returned
/// diagram is in canonical form). With `stop_at_first` the search halts
/// at the first hit. The lexicographically least witness is returned
/// first.
pub fn enumerate_realizations(
    g: &SimpleGraph,
    budget: Option<u64>,
    stop_at_first: bool,
) -> Result<Vec<ChordDiagram>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidArgument("empty graph".into()));
    }
    let mut target_degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    target_degrees.sort_unstable();
    let mut found: Vec<ChordDiagram> = Vec::new();
    let mut examined: u64 = 0;
    let mut exhausted = true;
    let complete = for_each_matching(2 * n, &mut |matching| {
        examined += 1;
        if let Some(cap) = budget {
            if examined > cap {
                exhausted = false;
                return false;
            }
        }
        let d = ChordDiagram::new(matching.to_vec()).expect("matching is valid");
        let inc = d.incidence_graph();
        let mut degrees: Vec<usize> = (0..n).map(|v| inc.degree(v)).collect();
        degrees.sort_unstable();
        if degrees != target_degrees {
            return true;
        }
        if find_isomorphism(&inc, g).is_some() {
            let canon = ChordDiagram::new(d.canonical_matching()).unwrap();
            if !found.iter().any(|f| f == &canon) {
                found.push(canon);
            }
            if stop_at_first {
                exhausted = true;
                return false;
            }
        }
        true
    });
    if !complete && !exhausted {
        return Err(Error::BudgetExceeded(format!("{examined} matchings examined")));
    }
    found.sort_by(|a, b| a.chords().cmp(b.chords()));
    Ok(found)
}

/// Vertex bijection `g1 -> g2` preserving adjacency, by backtracking
/// with degree pruning. Adequate for the small graphs handled here.
pub fn find_isomorphism(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    // map most-constrained (highest degree) vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        g1: &SimpleGraph,
        g2: &SimpleGraph,
        order: &[usize],
        depth: usize,
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..g2.vertex_count() {
            if used[w] || g1.degree(v) != g2.degree(w) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                g1.is_adjacent(v, u) == g2.is_adjacent(w, mapping[u])
            });
            if !consistent {
                continue;
            }
            mapping[v] = w;
            used[w] = true;
            if extend(g1, g2, order, depth + 1, mapping, used) {
                return true;
            }
            used[w] = false;
            mapping[v] = usize::MAX;
        }
        false
    }
    extend(g1, g2, &order, 0, &mut mapping, &mut used).then_some(mapping)
}

pub fn are_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// The 3-cube graph, the paper's standard non-realizable example.
pub fn cube_graph() -> SimpleGraph {
    let mut edges = Vec::new();
    for a in 0..8usize {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new(8, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle_graph(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn join_of_crossing_pairs_gives_path() {
        let pair = ChordDiagram::new(vec![(0, 2), (1, 3)]).unwrap();
        let joined = join(&pair, 0, &pair, 0).unwrap();
        assert_eq!(joined.n(), 3);
        assert!(are_isomorphic(&joined.incidence_graph(), &path_graph(3)));
    }

    #[test]
    fn join_of_single_chords_is_a_chord() {
        let single = ChordDiagram::new(vec![(0, 1)]).unwrap();
        let joined = join(&single, 0, &single, 0).unwrap();
        assert_eq!(joined.n(), 1);
        assert!(join(&single, 3, &single, 0).is_err());
    }

    #[test]
    fn tree_realizations_verify() {
        use rand::Rng;
        use rand::SeedableRng;
        // single vertex
        let (d, _) = realize_tree(&SimpleGraph::new(1, &[]).unwrap()).unwrap();
        assert_eq!(d.n(), 1);
        // paths
        for n in 2..=6 {
            let (d, iso) = realize_tree(&path_graph(n)).unwrap();
            let inc = d.incidence_graph();
            for (a, b) in path_graph(n).edges() {
                assert!(inc.is_adjacent(iso[a], iso[b]));
            }
            assert_eq!(inc.edge_count(), n - 1);
        }
        // random trees up to 10 vertices via random Prufer-like attachment
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.gen_range(2..=10);
            let edges: Vec<(usize, usize)> =
                (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let t = SimpleGraph::new(n, &edges).unwrap();
            let (d, _) = realize_tree(&t).unwrap();
            assert!(are_isomorphic(&d.incidence_graph(), &t));
        }
        // non-trees rejected
        assert!(realize_tree(&cycle_graph(4)).is_err());
        assert!(realize_tree(&SimpleGraph::new(2, &[]).unwrap()).is_err());
    }

    #[test]
    fn cycle_realizations_verify() {
        for n in 3..=8 {
            let d = realize_cycle(n).unwrap();
            assert!(are_isomorphic(&d.incidence_graph(), &cycle_graph(n)));
        }
        assert!(realize_cycle(2).is_err());
    }

    #[test]
    fn complete_realizations_verify() {
        for n in 1..=6 {
            let d = realize_complete(n).unwrap();
            assert_eq!(d.incidence_graph().edge_count(), n * (n - 1) / 2);
        }
        // K3 = C3 crossing pattern
        assert!(realize_complete(3)
            .unwrap()
            .equivalent(&realize_cycle(3).unwrap()));
    }

    #[test]
    fn bipartite_realizations_verify() {
        for p in 1..=3 {
            for q in 1..=4 {
                let d = realize_complete_bipartite(p, q).unwrap();
                let inc = d.incidence_graph();
                assert_eq!(inc.edge_count(), p * q, "K({p},{q})");
                // left class 0..p nested, right class p..p+q nested
                for i in 0..p {
                    for j in 0..p {
                        assert!(i == j || !inc.is_adjacent(i, j));
                    }
                    for j in p..p + q {
                        assert!(inc.is_adjacent(i, j));
                    }
                }
            }
        }
        // regression: the frozen K(2,3) matching
        let d = realize_complete_bipartite(2, 3).unwrap();
        assert_eq!(d.chords(), &[(0, 6), (1, 5), (2, 9), (3, 8), (4, 7)]);
    }

    #[test]
    fn star_graphs() {
        let e8 = star_graph(&[2, 3, 5]).unwrap();
        assert_eq!(e8.vertex_count(), 8);
        let e10 = star_graph(&[2, 3, 7]).unwrap();
        assert_eq!(e10.vertex_count(), 10);
        assert_eq!(e10.degree(9), 3); // hub
        // one arm degenerates to a path
        let a4 = star_graph(&[4]).unwrap();
        assert!(are_isomorphic(&a4, &path_graph(4)));
        assert!(star_graph(&[]).is_err());
        assert!(star_graph(&[2, 0]).is_err());
    }

    #[test]
    fn obstruction_on_cube_and_absence_on_trees() {
        let w = obstruction_check(&cube_graph()).expect("cube is obstructed");
        let g = cube_graph();
        let [a, b, c] = w.triple;
        assert!(!g.is_adjacent(a, b) && !g.is_adjacent(a, c) && !g.is_adjacent(b, c));
        for v in w.triple {
            assert!(g.is_adjacent(w.apex, v));
            assert!(w.cycle.contains(&v));
        }
        // the cycle is induced
        for (i, &u) in w.cycle.iter().enumerate() {
            for (j, &v) in w.cycle.iter().enumerate() {
                if i < j {
                    let consecutive = j == i + 1 || (i == 0 && j == w.cycle.len() - 1);
                    assert_eq!(g.is_adjacent(u, v), consecutive);
                }
            }
        }
        assert!(obstruction_check(&path_graph(6)).is_none());
        assert!(obstruction_check(&cycle_graph(5)).is_none());
    }

    #[test]
    fn brute_force_small_graphs() {
        match brute_force_realize(&cycle_graph(5), None) {
            RealizeOutcome::Found(d) => {
                assert!(are_isomorphic(&d.incidence_graph(), &cycle_graph(5)))
            }
            other => panic!("expected realization, got {other:?}"),
        }
        assert!(matches!(
            brute_force_realize(&SimpleGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap(), None),
            RealizeOutcome::Found(_)
        ));
        // tiny budget yields Inconclusive on a non-realizable graph
        assert_eq!(
            brute_force_realize(&cube_graph(), Some(10)),
            RealizeOutcome::Inconclusive
        );
    }

    #[test]
    fn cycle_realizations_are_unique() {
        for n in 3..=5 {
            let reps = enumerate_realizations(&cycle_graph(n), None, false).unwrap();
            assert_eq!(reps.len(), 1, "C{n} should be unique up to dihedral moves");
        }
    }

    #[test]
    fn diagram_enumeration_counts() {
        // matchings of 2n points up to nothing: (2n-1)!! = 1, 3, 15, 105;
        // up to rotation and reflection: 1, 2, 5, 17
        assert_eq!(enumerate_diagrams(1).len(), 1);
        assert_eq!(enumerate_diagrams(2).len(), 2);
        assert_eq!(enumerate_diagrams(3).len(), 5);
        assert_eq!(enumerate_diagrams(4).len(), 17);
    }
}
