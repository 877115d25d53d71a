//! Chord diagrams, chord systems and directed diagrams.
//!
//! Endpoints live at the `2n`-th roots of unity, numbered counterclockwise
//! `0..2n`. Only the cyclic order of the endpoints matters for crossing and
//! linking; the geometry is used solely by [`coxeter_order`].

use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::PI;

use crate::error::Error;
use crate::Result;

/// A perfect matching of `2n` circle points, each pair joined by a chord.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    chords: Vec<(usize, usize)>,
}

impl ChordDiagram {
    /// Builds a diagram from a list of endpoint pairs. The pairs must form
    /// a perfect matching of `{0, .., 2n-1}` with `n >= 1`.
    pub fn new(chords: Vec<(usize, usize)>) -> Result<Self> {
        let n = chords.len();
        if n == 0 {
            return Err(Error::InvalidDiagram("diagram needs at least one chord".into()));
        }
        let mut seen = vec![false; 2 * n];
        for &(a, b) in &chords {
            for p in [a, b] {
                if p >= 2 * n {
                    return Err(Error::InvalidDiagram(format!(
                        "endpoint {p} out of range for {} points",
                        2 * n
                    )));
                }
                if seen[p] {
                    return Err(Error::InvalidDiagram(format!("endpoint {p} used twice")));
                }
                seen[p] = true;
            }
        }
        let chords = chords
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Ok(Self { chords })
    }

    pub fn n(&self) -> usize {
        self.chords.len()
    }

    pub fn points(&self) -> usize {
        2 * self.chords.len()
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn chord(&self, i: usize) -> Result<(usize, usize)> {
        self.chords
            .get(i)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: i, count: self.n() })
    }

    /// True iff chords `i` and `j` meet in the interior of the disk, i.e.
    /// their endpoint pairs interleave in cyclic order.
    pub fn crosses(&self, i: usize, j: usize) -> Result<bool> {
        if i == j {
            return Err(Error::InvalidArgument("crosses requires distinct chords".into()));
        }
        let (a, b) = self.chord(i)?;
        let (c, d) = self.chord(j)?;
        Ok(interleaves(a, b, c, d))
    }

    fn crosses_unchecked(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.chords[i];
        let (c, d) = self.chords[j];
        interleaves(a, b, c, d)
    }

    /// Graph on the chords with an edge between every crossing pair.
    pub fn incidence_graph(&self) -> SimpleGraph {
        let n = self.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.crosses_unchecked(i, j) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::new(n, &edges).expect("incidence edges are simple")
    }

    /// Lexicographically least matching over the dihedral group of the
    /// `2n` endpoints. Two diagrams are equivalent as pairs `(D, L)` iff
    /// their canonical matchings agree.
    pub fn canonical_matching(&self) -> Vec<(usize, usize)> {
        let m = self.points();
        let mut best: Option<Vec<(usize, usize)>> = None;
        for r in 0..m {
            for refl in [false, true] {
                let mut image: Vec<(usize, usize)> = self
                    .chords
                    .iter()
                    .map(|&(a, b)| {
                        let fa = if refl { (m + r - a) % m } else { (a + r) % m };
                        let fb = if refl { (m + r - b) % m } else { (b + r) % m };
                        (fa.min(fb), fa.max(fb))
                    })
                    .collect();
                image.sort_unstable();
                if best.as_ref().map_or(true, |b| image < *b) {
                    best = Some(image);
                }
            }
        }
        best.unwrap()
    }

    /// Equivalence up to rotation and reflection of the endpoint circle.
    pub fn equivalent(&self, other: &ChordDiagram) -> bool {
        self.n() == other.n() && self.canonical_matching() == other.canonical_matching()
    }
}

/// Cyclic interleaving test for unordered pairs `{a,b}` and `{c,d}`
/// with `a < b`, `c < d`.
fn interleaves(a: usize, b: usize, c: usize, d: usize) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A chord diagram whose chords are ordered and oriented. The list
/// position of a chord is its index in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSystem {
    diagram: ChordDiagram,
    /// `(tail, head)` per chord, parallel to `diagram.chords()`.
    orient: Vec<(usize, usize)>,
}

impl ChordSystem {
    /// Diagram plus orientations, order given by the chord list.
    pub fn new(diagram: ChordDiagram, orient: Vec<(usize, usize)>) -> Result<Self> {
        if orient.len() != diagram.n() {
            return Err(Error::InvalidArgument(format!(
                "{} orientations for {} chords",
                orient.len(),
                diagram.n()
            )));
        }
        for (i, &(t, h)) in orient.iter().enumerate() {
            let (a, b) = diagram.chords()[i];
            if t == h || (t.min(h), t.max(h)) != (a, b) {
                return Err(Error::InvalidArgument(format!(
                    "orientation ({t}, {h}) does not match chord {i} = ({a}, {b})"
                )));
            }
        }
        Ok(Self { diagram, orient })
    }

    /// Reorders the chords so that chord `i` ends up at position
    /// `ranks[i]`; `ranks` must be a permutation of `0..n`.
    pub fn with_order(
        diagram: ChordDiagram,
        orient: Vec<(usize, usize)>,
        ranks: &[usize],
    ) -> Result<Self> {
        let n = diagram.n();
        if ranks.len() != n {
            return Err(Error::InvalidArgument("rank list has wrong length".into()));
        }
        let mut slots: Vec<Option<usize>> = vec![None; n];
        for (chord, &r) in ranks.iter().enumerate() {
            if r >= n || slots[r].is_some() {
                return Err(Error::InvalidArgument("ranks are not a permutation".into()));
            }
            slots[r] = Some(chord);
        }
        let perm: Vec<usize> = slots.into_iter().map(|s| s.unwrap()).collect();
        let chords = perm.iter().map(|&c| diagram.chords()[c]).collect();
        let orient = perm.iter().map(|&c| orient[c]).collect();
        Self::new(ChordDiagram::new(chords)?, orient)
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn orientations(&self) -> &[(usize, usize)] {
        &self.orient
    }

    /// Linking number of chords `i` and `j` as oriented 0-spheres, read
    /// per the inner-product table: the lower index goes first, so the
    /// value is symmetric in `i` and `j`.
    ///
    /// The sign convention is `-1` when the counterclockwise cyclic order
    /// of endpoints is (tail_i, tail_j, head_i, head_j) for `i < j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        if i == j {
            return Err(Error::InvalidArgument("linking number requires distinct chords".into()));
        }
        let n = self.n();
        for k in [i, j] {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, count: n });
            }
        }
        Ok(self.directed_link(i.min(j), i.max(j)))
    }

    /// Sign of the crossing with chord `i` taken first (antisymmetric in
    /// the argument order); 0 if the chords do not cross.
    pub(crate) fn directed_link(&self, i: usize, j: usize) -> i64 {
        if !self.diagram.crosses_unchecked(i, j) {
            return 0;
        }
        let m = self.diagram.points();
        let (ti, hi) = self.orient[i];
        let (tj, hj) = self.orient[j];
        // positions of tail_j, head_i, head_j counterclockwise from tail_i
        let pt = (m + tj - ti) % m;
        let ph = (m + hi - ti) % m;
        let pj = (m + hj - ti) % m;
        if pt < ph && ph < pj {
            -1 // pattern (tail_i, tail_j, head_i, head_j)
        } else {
            debug_assert!(pj < ph && ph < pt);
            1
        }
    }

    /// True iff every crossing pair `i < j` has linking number `-1`,
    /// equivalently all off-diagonal entries of the bilinear form are
    /// non-positive.
    pub fn is_coxeter_type(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (i + 1..n).all(|j| self.directed_link(i, j) <= 0))
    }

    /// Forgets the order down to the relative order of crossing pairs.
    pub fn to_directed(&self) -> DirectedDiagram {
        let n = self.n();
        let mut over = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.diagram.crosses_unchecked(i, j) {
                    over.insert((i, j));
                }
            }
        }
        DirectedDiagram { diagram: self.diagram.clone(), over }
    }
}

/// A chord diagram recording, for each crossing pair, which chord is
/// later in the order (its band lies over). `(a, b)` in `over` means
/// chord `b` lies over chord `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedDiagram {
    diagram: ChordDiagram,
    over: BTreeSet<(usize, usize)>,
}

impl DirectedDiagram {
    /// The relation must contain exactly one of `(i, j)`, `(j, i)` for
    /// each crossing pair and nothing else.
    pub fn new(diagram: ChordDiagram, over: BTreeSet<(usize, usize)>) -> Result<Self> {
        let n = diagram.n();
        for i in 0..n {
            for j in i + 1..n {
                let fwd = over.contains(&(i, j));
                let bwd = over.contains(&(j, i));
                if diagram.crosses_unchecked(i, j) {
                    if fwd == bwd {
                        return Err(Error::InvalidArgument(format!(
                            "crossing pair ({i}, {j}) needs exactly one over-relation"
                        )));
                    }
                } else if fwd || bwd {
                    return Err(Error::InvalidArgument(format!(
                        "over-relation on non-crossing pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { diagram, over })
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    /// Pairs `(a, b)` with chord `b` over chord `a`.
    pub fn over_relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.over
    }

    /// All over-relations at `k` point toward `k`.
    pub fn is_sink(&self, k: usize) -> bool {
        self.incident(k).iter().all(|&(_, b)| b == k)
    }

    /// All over-relations at `k` point away from `k`.
    pub fn is_source(&self, k: usize) -> bool {
        self.incident(k).iter().all(|&(a, _)| a == k)
    }

    fn incident(&self, k: usize) -> Vec<(usize, usize)> {
        self.over
            .iter()
            .copied()
            .filter(|&(a, b)| a == k || b == k)
            .collect()
    }

    /// Reverses every over-relation incident to `k`. `k` must currently
    /// be a source or a sink; an isolated chord counts as both.
    pub fn sink_source_move(&self, k: usize) -> Result<DirectedDiagram> {
        if k >= self.diagram.n() {
            return Err(Error::IndexOutOfRange { index: k, count: self.diagram.n() });
        }
        let inc = self.incident(k);
        let source = inc.iter().all(|&(a, _)| a == k);
        let sink = inc.iter().all(|&(_, b)| b == k);
        if !source && !sink {
            return Err(Error::NotSinkOrSource(k));
        }
        let over = self
            .over
            .iter()
            .map(|&(a, b)| if a == k || b == k { (b, a) } else { (a, b) })
            .collect();
        Ok(DirectedDiagram { diagram: self.diagram.clone(), over })
    }

    /// Recovers a chord system compatible with the over-relation, or
    /// fails if the relation is cyclic. Ties in the topological sort are
    /// broken by smallest original chord index. When the relation admits
    /// orientations making every crossing link `-1` those are used, so
    /// Coxeter-admissible relations yield Coxeter-type systems.
    pub fn to_system(&self) -> Result<ChordSystem> {
        let n = self.diagram.n();
        let order = toposort_min(n, &self.over).ok_or(Error::CyclicRelation)?;
        let mut ranks = vec![0usize; n];
        for (pos, &c) in order.iter().enumerate() {
            ranks[c] = pos;
        }
        let orient = self.coxeter_orientations().unwrap_or_else(|| {
            self.diagram.chords().to_vec()
        });
        ChordSystem::with_order(self.diagram.clone(), orient, &ranks)
    }

    /// Searches for orientations under which every over-pair links `-1`.
    /// Flipping one chord of a crossing pair flips the sign, so this is
    /// an XOR constraint system solved by propagation over the crossing
    /// graph; `None` if inconsistent.
    fn coxeter_orientations(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.diagram.n();
        let forward = ChordSystem::new(self.diagram.clone(), self.diagram.chords().to_vec())
            .expect("forward orientations are valid");
        // flip[c]: whether chord c is reversed relative to forward
        let mut flip: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    if w == v || !self.diagram.crosses_unchecked(v.min(w), v.max(w)) {
                        continue;
                    }
                    let (earlier, later) = if self.over.contains(&(v.min(w), v.max(w))) {
                        (v.min(w), v.max(w))
                    } else {
                        (v.max(w), v.min(w))
                    };
                    let base = forward.directed_link(earlier, later);
                    // want sign -1 reading the earlier chord first
                    let need_flip = base == 1;
                    let want = flip[v].unwrap() != need_flip;
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(f) if f != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            self.diagram
                .chords()
                .iter()
                .zip(flip)
                .map(|(&(a, b), f)| if f.unwrap() { (b, a) } else { (a, b) })
                .collect(),
        )
    }
}

/// Kahn topological sort with smallest-index tie-breaking.
fn toposort_min(n: usize, rel: &BTreeSet<(usize, usize)>) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in rel {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        out.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (out.len() == n).then_some(out)
}

/// Undirected simple graph with implicitly ordered vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidArgument("graphs are limited to 64 vertices".into()));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {a}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adj[v] >> w & 1 == 1)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.is_adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            for w in 0..self.n {
                if fresh >> w & 1 == 1 {
                    stack.push(w);
                }
            }
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }
}

/// Orders and orients any diagram into a Coxeter-type system.
///
/// Chords are oriented so the head has the larger second coordinate and
/// sorted by the direction angle of the oriented segment, measured in
/// `[0, pi)`. Endpoint angles are rotated by a fixed small offset first
/// so no chord is horizontal or vertical.
pub fn coxeter_order(d: &ChordDiagram) -> ChordSystem {
    let n = d.n();
    let m = d.points() as f64;
    let eps = 1.0 / (100.0 * n as f64);
    let point = |k: usize| {
        let a = 2.0 * PI * k as f64 / m + eps;
        (a.cos(), a.sin())
    };
    let mut orient = Vec::with_capacity(n);
    let mut keys = Vec::with_capacity(n);
    for &(a, b) in d.chords() {
        let (pa, pb) = (point(a), point(b));
        let (tail, head, vt, vh) = if pa.1 > pb.1 { (b, a, pb, pa) } else { (a, b, pa, pb) };
        orient.push((tail, head));
        keys.push(f64::atan2(vh.1 - vt.1, vh.0 - vt.0));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| keys[i].partial_cmp(&keys[j]).unwrap().then(i.cmp(&j)));
    let mut ranks = vec![0usize; n];
    for (pos, &c) in order.iter().enumerate() {
        ranks[c] = pos;
    }
    ChordSystem::with_order(d.clone(), orient, &ranks).expect("permutation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(chords: &[(usize, usize)]) -> ChordDiagram {
        ChordDiagram::new(chords.to_vec()).unwrap()
    }

    #[test]
    fn matching_invariant_rejected() {
        assert!(ChordDiagram::new(vec![]).is_err());
        assert!(ChordDiagram::new(vec![(0, 0)]).is_err());
        assert!(ChordDiagram::new(vec![(0, 1), (1, 2)]).is_err());
        assert!(ChordDiagram::new(vec![(0, 5)]).is_err());
    }

    #[test]
    fn crossing_basics() {
        let d = diagram(&[(0, 2), (1, 3)]);
        assert!(d.crosses(0, 1).unwrap());
        assert!(d.crosses(1, 0).unwrap());
        let d = diagram(&[(0, 1), (2, 3)]);
        assert!(!d.crosses(0, 1).unwrap());
        assert!(d.crosses(0, 0).is_err());
        assert!(d.crosses(0, 7).is_err());
    }

    #[test]
    fn pentagon_crossing_pattern_is_c5() {
        let d = diagram(&[(0, 3), (2, 5), (4, 7), (6, 9), (8, 1)]);
        let g = d.incidence_graph();
        for v in 0..5 {
            assert_eq!(g.degree(v), 2, "vertex {v}");
            assert!(g.is_adjacent(v, (v + 1) % 5));
        }
    }

    #[test]
    fn nested_chords_have_edgeless_incidence() {
        let d = diagram(&[(0, 5), (1, 4), (2, 3)]);
        assert_eq!(d.incidence_graph().edge_count(), 0);
    }

    #[test]
    fn linking_number_convention() {
        // chords (tail 0 -> head 3), (tail 1 -> head 4) on 6 points
        let d = diagram(&[(0, 3), (1, 4), (2, 5)]);
        let s = ChordSystem::new(d.clone(), vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), -1);
        assert_eq!(s.linking_number(1, 0).unwrap(), -1);
        // reversing chord 1 flips the sign
        let s = ChordSystem::new(d.clone(), vec![(0, 3), (4, 1), (2, 5)]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), 1);
        // non-crossing chords link 0 regardless of orientation
        let d = diagram(&[(0, 1), (2, 3)]);
        let s = ChordSystem::new(d, vec![(1, 0), (2, 3)]).unwrap();
        assert_eq!(s.linking_number(0, 1).unwrap(), 0);
        assert!(s.linking_number(0, 0).is_err());
    }

    #[test]
    fn coxeter_type_detection() {
        let d = diagram(&[(0, 3), (1, 4), (2, 5)]);
        let s = ChordSystem::new(d.clone(), vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(s.is_coxeter_type());
        // single chord has no off-diagonal entries
        let s1 = ChordSystem::new(diagram(&[(0, 1)]), vec![(0, 1)]).unwrap();
        assert!(s1.is_coxeter_type());
    }

    #[test]
    fn coxeter_order_single_chord_points_up() {
        // point 1 sits just below the x-axis after the eps rotation, so
        // the chord is oriented 1 -> 0
        let s = coxeter_order(&diagram(&[(0, 1)]));
        assert_eq!(s.orientations(), &[(1, 0)]);
        assert!(s.is_coxeter_type());
    }

    #[test]
    fn coxeter_order_randomized() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let n = 1 + trial % 12;
            let mut pts: Vec<usize> = (0..2 * n).collect();
            pts.shuffle(&mut rng);
            let chords: Vec<_> = pts.chunks(2).map(|c| (c[0], c[1])).collect();
            let s = coxeter_order(&ChordDiagram::new(chords).unwrap());
            assert!(s.is_coxeter_type(), "trial {trial}");
        }
    }

    #[test]
    fn directed_round_trip() {
        let d = diagram(&[(0, 3), (1, 4), (2, 5)]);
        let s = ChordSystem::new(d, vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        let dd = s.to_directed();
        let expected: BTreeSet<_> = [(0, 1), (0, 2), (1, 2)].into();
        assert_eq!(*dd.over_relation(), expected);
        let s2 = dd.to_system().unwrap();
        assert_eq!(*s2.to_directed().over_relation(), expected);
    }

    #[test]
    fn to_directed_edgeless_is_empty() {
        let d = diagram(&[(0, 1), (2, 3)]);
        let s = ChordSystem::new(d, vec![(0, 1), (2, 3)]).unwrap();
        assert!(s.to_directed().over_relation().is_empty());
    }

    #[test]
    fn cyclic_relation_rejected() {
        let d = diagram(&[(0, 3), (1, 4), (2, 5)]);
        let over: BTreeSet<_> = [(0, 1), (1, 2), (2, 0)].into();
        let dd = DirectedDiagram::new(d, over).unwrap();
        assert!(matches!(dd.to_system(), Err(Error::CyclicRelation)));
    }

    #[test]
    fn sink_source_move_on_triangle() {
        let d = diagram(&[(0, 3), (1, 4), (2, 5)]);
        let s = ChordSystem::new(d, vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        let dd = s.to_directed();
        // chord 2 is a sink; chord 1 is neither
        let flipped = dd.sink_source_move(2).unwrap();
        let expected: BTreeSet<_> = [(0, 1), (2, 0), (2, 1)].into();
        assert_eq!(*flipped.over_relation(), expected);
        assert!(matches!(dd.sink_source_move(1), Err(Error::NotSinkOrSource(1))));
    }

    #[test]
    fn isolated_chord_move_is_identity() {
        let d = diagram(&[(0, 1), (2, 5), (3, 6), (4, 7)]);
        let s = coxeter_order(&d);
        let dd = s.to_directed();
        // the isolated chord of the original diagram may be anywhere after
        // reordering; find it as the chord with no incident relation
        let k = (0..4)
            .find(|&k| dd.over_relation().iter().all(|&(a, b)| a != k && b != k))
            .unwrap();
        assert_eq!(dd.sink_source_move(k).unwrap(), dd);
    }

    #[test]
    fn dihedral_equivalence() {
        let d1 = diagram(&[(0, 3), (2, 5), (4, 1)]);
        let d2 = diagram(&[(1, 4), (3, 0), (5, 2)]); // rotated by one
        assert!(d1.equivalent(&d2));
        let nested = diagram(&[(0, 5), (1, 4), (2, 3)]);
        assert!(!d1.equivalent(&nested));
    }
}
