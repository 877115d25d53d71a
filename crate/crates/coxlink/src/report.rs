//! End-to-end pipelines: the bundled analysis report for one chord
//! system, enumeration of Coxeter-type orderings up to sink/source
//! orbits, and the Lehmer-gate scan over all small diagrams.

use std::collections::{BTreeMap, BTreeSet};

use crate::chord::{ChordDiagram, ChordSystem, DirectedDiagram};
use crate::error::Error;
use crate::forms::{adjacency, bilinear_form, coxeter_element, monodromy, seifert_matrix};
use crate::poly::IntPolynomial;
use crate::realize::enumerate_diagrams;
use crate::spectra::{classify, lehmer_gate, mahler_measure, Classification, GateVerdict};
use crate::Result;

/// Everything the pipeline derives from one chord system. Matrices are
/// stored as row-major `i64` for serialization; polynomial coefficients
/// are constant-term first.
#[derive(Debug, Clone, serde::Serialize)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub n: usize,
    pub chords: Vec<(usize, usize)>,
    pub orientations: Vec<(usize, usize)>,
    pub coxeter_type: bool,
    pub adjacency: Vec<Vec<i64>>,
    pub bilinear_form: Vec<Vec<i64>>,
    pub seifert: Vec<Vec<i64>>,
    pub monodromy: Vec<Vec<i64>>,
    pub coxeter_element: Vec<Vec<i64>>,
    /// Monic `det(tI - h*)`.
    pub char_poly: Vec<i64>,
    /// Canonical representative of `char_poly` under `p(t) ~ ±p(±t)`.
    pub char_poly_canonical: Vec<i64>,
    pub char_poly_display: String,
    pub classification: Classification,
    pub mahler_measure: f64,
    pub spectral_radius: f64,
    pub lehmer_gate: GateVerdict,
    /// `Some(true)` when the `h* = -c` theorem was checked (Coxeter-type
    /// input); `None` when the comparison is skipped.
    pub monodromy_equals_minus_coxeter: Option<bool>,
    pub tol: f64,
}

/// Runs the full pipeline on one chord system. For Coxeter-type input
/// the `h* = -c` identity is verified and a disagreement is escalated as
/// a theorem violation; otherwise the comparison is skipped and flagged.
pub fn analyze(s: &ChordSystem, tol: f64) -> Result<AnalysisReport> {
    let coxeter_type = s.is_coxeter_type();
    let a = adjacency(&s.diagram().incidence_graph());
    let b = bilinear_form(s);
    let m = seifert_matrix(s);
    let h = monodromy(&m)?;
    let c = coxeter_element(&b)?;
    let matches = if coxeter_type {
        if h != c.neg() {
            return Err(Error::TheoremViolation(
                "monodromy differs from -(Coxeter element) on Coxeter-type input".into(),
            ));
        }
        Some(true)
    } else {
        None
    };
    let p = h.char_poly();
    let canonical = p.canonical();
    // spherical/affine hinges on eigenvalue 1 of c, so classify q_c,
    // not det(tI - h*): they differ by t -> -t
    let classification = classify(&c.char_poly())?;
    let mu = mahler_measure(&p, tol)?;
    let lambda = crate::spectra::spectral_radius(&h, tol)?;
    let gate = lehmer_gate(&p, tol)?;
    Ok(AnalysisReport {
        name: None,
        n: s.n(),
        chords: s.diagram().chords().to_vec(),
        orientations: s.orientations().to_vec(),
        coxeter_type,
        adjacency: a.to_i64_rows()?,
        bilinear_form: b.to_i64_rows()?,
        seifert: m.to_i64_rows()?,
        monodromy: h.to_i64_rows()?,
        coxeter_element: c.to_i64_rows()?,
        char_poly: p.coeffs_i64(),
        char_poly_canonical: canonical.coeffs_i64(),
        char_poly_display: p.to_string(),
        classification,
        mahler_measure: mu,
        spectral_radius: lambda,
        lehmer_gate: gate,
        monodromy_equals_minus_coxeter: matches,
        tol,
    })
}

/// One sink/source orbit of Coxeter-type directed diagrams on a fixed
/// chord diagram.
#[derive(Debug, Clone)]
pub struct OrderingOrbit {
    /// Lexicographically least over-relation in the orbit.
    pub representative: DirectedDiagram,
    /// A concrete Coxeter-type system realizing the representative.
    pub system: ChordSystem,
    /// Monic char poly of `h*`, shared by the whole orbit.
    pub char_poly: IntPolynomial,
    /// Number of directed diagrams in the orbit.
    pub members: usize,
}

/// Enumerates the Coxeter-type orderings of a diagram up to sink/source
/// equivalence, in a deterministic order.
///
/// For a fixed orientation of the chords, the order of each crossing
/// pair is forced (the earlier chord must link `-1`), so the 2^n
/// orientation assignments induce at most 2^n tournaments; the acyclic
/// ones are the Coxeter-type directed diagrams. Orbits are closed under
/// flipping all relations at a sink or source.
pub fn coxeter_orbits(d: &ChordDiagram) -> Result<Vec<OrderingOrbit>> {
    let n = d.n();
    if n > 16 {
        return Err(Error::BudgetExceeded(format!(
            "ordering enumeration is capped at 16 chords, got {n}"
        )));
    }
    let crossing: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if d.crosses(i, j)? {
                    v.push((i, j));
                }
            }
        }
        v
    };
    // sign of the link for each crossing pair under forward orientation;
    // flipping either chord flips the sign
    let forward = ChordSystem::new(d.clone(), d.chords().to_vec())?;
    let base: Vec<i64> = crossing.iter().map(|&(i, j)| forward.directed_link(i, j)).collect();
    let mut relations: BTreeSet<BTreeSet<(usize, usize)>> = BTreeSet::new();
    for mask in 0u32..1 << n {
        let mut over = BTreeSet::new();
        for (&(i, j), &s) in crossing.iter().zip(&base) {
            let flips = (mask >> i & 1) ^ (mask >> j & 1);
            let sign = if flips == 1 { -s } else { s };
            // the earlier chord must read the crossing as -1
            over.insert(if sign == -1 { (i, j) } else { (j, i) });
        }
        relations.insert(over);
    }
    let mut diagrams: Vec<DirectedDiagram> = Vec::new();
    for over in relations {
        let dd = DirectedDiagram::new(d.clone(), over)?;
        if dd.to_system().is_ok() {
            diagrams.push(dd);
        }
    }
    // union-find over sink/source moves
    let index: BTreeMap<&BTreeSet<(usize, usize)>, usize> = diagrams
        .iter()
        .enumerate()
        .map(|(i, dd)| (dd.over_relation(), i))
        .collect();
    let mut parent: Vec<usize> = (0..diagrams.len()).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (i, dd) in diagrams.iter().enumerate() {
        for k in 0..n {
            if !dd.is_sink(k) && !dd.is_source(k) {
                continue;
            }
            let moved = dd.sink_source_move(k)?;
            let j = *index
                .get(moved.over_relation())
                .expect("sink/source moves stay within the enumeration");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..diagrams.len() {
        let r = find(&mut parent, i);
        orbits.entry(r).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in orbits.into_values() {
        // the representative is the least relation: diagrams is sorted
        let rep = diagrams[members[0]].clone();
        let system = rep.to_system()?;
        let char_poly = monodromy(&seifert_matrix(&system))?.char_poly();
        out.push(OrderingOrbit { representative: rep, system, char_poly, members: members.len() });
    }
    out.sort_by(|a, b| {
        a.representative
            .over_relation()
            .cmp(b.representative.over_relation())
    });
    Ok(out)
}

/// One line of the Lehmer-scan table: a characteristic polynomial seen
/// during the scan, with its measure and a witnessing system.
#[derive(Debug, Clone)]
pub struct ScanEntry {
    /// Canonical form under `p(t) ~ ±p(±t)`.
    pub char_poly: IntPolynomial,
    pub mahler_measure: f64,
    pub gate: GateVerdict,
    /// Number of (diagram, orbit) pairs producing this polynomial.
    pub orbit_count: usize,
    /// First system encountered with this polynomial.
    pub witness: ChordSystem,
}

#[derive(Debug, Clone)]
pub struct ScanSummary {
    pub max_chords: usize,
    pub diagrams_scanned: usize,
    pub orbits_scanned: usize,
    /// Sorted by Mahler measure, then by coefficients.
    pub entries: Vec<ScanEntry>,
    /// Index into `entries` of the smallest measure exceeding 1.
    pub minimal_nontrivial: Option<usize>,
}

/// Scans every chord diagram with up to `max_chords` chords (up to
/// dihedral equivalence) and every Coxeter-type ordering orbit,
/// recording Mahler measures and asserting the Lehmer gate. A gate
/// failure aborts: on genuine Coxeter-link polynomials it would signal
/// an implementation bug.
pub fn lehmer_scan(max_chords: usize, tol: f64) -> Result<ScanSummary> {
    if max_chords == 0 || max_chords > 8 {
        return Err(Error::InvalidArgument(
            "lehmer scan supports 1..=8 chords".into(),
        ));
    }
    let mut diagrams_scanned = 0;
    let mut orbits_scanned = 0;
    let mut seen: BTreeMap<Vec<i64>, ScanEntry> = BTreeMap::new();
    let mut measure_memo: BTreeMap<Vec<i64>, (f64, GateVerdict)> = BTreeMap::new();
    for n in 1..=max_chords {
        for d in enumerate_diagrams(n) {
            diagrams_scanned += 1;
            for orbit in coxeter_orbits(&d)? {
                orbits_scanned += 1;
                let canonical = orbit.char_poly.canonical();
                let key = canonical.coeffs_i64();
                let (mu, gate) = match measure_memo.get(&key) {
                    Some(&v) => v,
                    None => {
                        let mu = mahler_measure(&canonical, tol)?;
                        let gate = lehmer_gate(&canonical, tol)?;
                        measure_memo.insert(key.clone(), (mu, gate));
                        (mu, gate)
                    }
                };
                if gate == GateVerdict::Fail {
                    return Err(Error::TheoremViolation(format!(
                        "Lehmer gate failed at {} (mu = {mu:.6}) on diagram {:?}",
                        canonical,
                        d.chords()
                    )));
                }
                match seen.get_mut(&key) {
                    Some(entry) => entry.orbit_count += 1,
                    None => {
                        seen.insert(
                            key,
                            ScanEntry {
                                char_poly: canonical,
                                mahler_measure: mu,
                                gate,
                                orbit_count: 1,
                                witness: orbit.system.clone(),
                            },
                        );
                    }
                }
            }
        }
    }
    let mut entries: Vec<ScanEntry> = seen.into_values().collect();
    entries.sort_by(|a, b| {
        a.mahler_measure
            .partial_cmp(&b.mahler_measure)
            .unwrap()
            .then_with(|| a.char_poly.coeffs_i64().cmp(&b.char_poly.coeffs_i64()))
    });
    let minimal_nontrivial = entries
        .iter()
        .position(|e| e.gate == GateVerdict::Pass && e.mahler_measure > 1.0 + tol);
    Ok(ScanSummary {
        max_chords,
        diagrams_scanned,
        orbits_scanned,
        entries,
        minimal_nontrivial,
    })
}

/// Convenience: the canonical char poly of `h*` for one system.
pub fn system_char_poly(s: &ChordSystem) -> Result<IntPolynomial> {
    Ok(monodromy(&seifert_matrix(s))?.char_poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::coxeter_order;
    use crate::spectra::DEFAULT_TOL;

    fn triangle() -> ChordSystem {
        let d = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        ChordSystem::new(d, vec![(0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn analyze_triangle() {
        let r = analyze(&triangle(), DEFAULT_TOL).unwrap();
        assert!(r.coxeter_type);
        assert_eq!(r.monodromy_equals_minus_coxeter, Some(true));
        let p = IntPolynomial::from_i64(&r.char_poly);
        assert!(p.equivalent(&IntPolynomial::from_i64(&[1, 1, -1, -1])));
        assert_eq!(r.classification, Classification::Affine);
        assert!((r.mahler_measure - 1.0).abs() < 1e-9);
        assert_eq!(r.lehmer_gate, GateVerdict::Trivial);
    }

    #[test]
    fn analyze_single_chord() {
        let d = ChordDiagram::new(vec![(0, 1)]).unwrap();
        let s = ChordSystem::new(d, vec![(0, 1)]).unwrap();
        let r = analyze(&s, DEFAULT_TOL).unwrap();
        assert_eq!(r.char_poly, vec![-1, 1]); // t - 1
        assert!((r.mahler_measure - 1.0).abs() < 1e-9);
        // a single chord is the A1 system: q_c = t + 1
        assert_eq!(r.classification, Classification::Spherical);
    }

    #[test]
    fn analyze_non_coxeter_skips_comparison() {
        let d = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        let s = ChordSystem::new(d, vec![(0, 3), (1, 4), (5, 2)]).unwrap();
        let r = analyze(&s, DEFAULT_TOL).unwrap();
        assert!(!r.coxeter_type);
        assert_eq!(r.monodromy_equals_minus_coxeter, None);
        let p = IntPolynomial::from_i64(&r.char_poly);
        // reversing a chord conjugates M by a sign matrix, so the char
        // poly still agrees with the Coxeter triangle up to equivalence
        assert!(p.equivalent(&IntPolynomial::from_i64(&[1, 1, -1, -1])));
    }

    #[test]
    fn orbits_of_single_chord_and_triangle() {
        let single = ChordDiagram::new(vec![(0, 1)]).unwrap();
        let orbits = coxeter_orbits(&single).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].char_poly.coeffs_i64(), vec![-1, 1]);

        let tri = ChordDiagram::new(vec![(0, 3), (1, 4), (2, 5)]).unwrap();
        let orbits = coxeter_orbits(&tri).unwrap();
        assert_eq!(orbits.len(), 1);
        assert!(orbits[0]
            .char_poly
            .equivalent(&IntPolynomial::from_i64(&[1, 1, -1, -1])));
    }

    #[test]
    fn square_diagram_has_one_orbit() {
        let sq = crate::realize::realize_cycle(4).unwrap();
        let orbits = coxeter_orbits(&sq).unwrap();
        assert_eq!(orbits.len(), 1);
        assert!(orbits[0]
            .char_poly
            .equivalent(&IntPolynomial::from_i64(&[1, 0, -2, 0, 1])));
    }

    #[test]
    fn pentagon_has_two_orbits() {
        let p = crate::realize::realize_cycle(5).unwrap();
        let orbits = coxeter_orbits(&p).unwrap();
        assert_eq!(orbits.len(), 2);
        let mut polys: Vec<IntPolynomial> =
            orbits.iter().map(|o| o.char_poly.canonical()).collect();
        polys.sort_by_key(|p| p.coeffs_i64());
        polys.dedup_by(|a, b| a == b);
        assert_eq!(polys.len(), 2);
        let d1 = IntPolynomial::from_i64(&[1, -1, 0, 0, -1, 1]);
        let d2 = IntPolynomial::from_i64(&[1, 0, -1, -1, 0, 1]);
        for target in [d1, d2] {
            assert!(
                polys.iter().any(|p| p.equivalent(&target)),
                "missing {target}"
            );
        }
    }

    #[test]
    fn orbit_char_poly_is_move_invariant() {
        // every member of every pentagon orbit yields the orbit poly
        let p = crate::realize::realize_cycle(5).unwrap();
        for orbit in coxeter_orbits(&p).unwrap() {
            let mut frontier = vec![orbit.representative.clone()];
            let mut seen = vec![orbit.representative.over_relation().clone()];
            while let Some(dd) = frontier.pop() {
                let poly = system_char_poly(&dd.to_system().unwrap()).unwrap();
                assert!(poly.equivalent(&orbit.char_poly));
                for k in 0..5 {
                    if dd.is_sink(k) || dd.is_source(k) {
                        let moved = dd.sink_source_move(k).unwrap();
                        if !seen.contains(moved.over_relation()) {
                            seen.push(moved.over_relation().clone());
                            frontier.push(moved);
                        }
                    }
                }
            }
            assert_eq!(seen.len(), orbit.members);
        }
    }

    #[test]
    fn coxeter_order_lands_in_some_orbit() {
        // the geometric ordering of the pentagon matches one of the two
        // enumerated orbit polynomials
        let p = crate::realize::realize_cycle(5).unwrap();
        let s = coxeter_order(&p);
        assert!(s.is_coxeter_type());
        let poly = system_char_poly(&s).unwrap();
        let orbits = coxeter_orbits(&p).unwrap();
        assert!(orbits.iter().any(|o| o.char_poly.equivalent(&poly)));
    }

    #[test]
    fn scan_small() {
        let s = lehmer_scan(3, DEFAULT_TOL).unwrap();
        assert_eq!(s.diagrams_scanned, 1 + 2 + 5);
        assert!(s.orbits_scanned >= s.diagrams_scanned);
        // all <= 3-chord Coxeter systems are spherical or affine
        assert!(s.minimal_nontrivial.is_none());
        for e in &s.entries {
            assert!((e.mahler_measure - 1.0).abs() < 1e-8);
            assert_eq!(e.gate, GateVerdict::Trivial);
        }
        // determinism
        let polys: Vec<Vec<i64>> = s.entries.iter().map(|e| e.char_poly.coeffs_i64()).collect();
        let again = lehmer_scan(3, DEFAULT_TOL).unwrap();
        let polys2: Vec<Vec<i64>> =
            again.entries.iter().map(|e| e.char_poly.coeffs_i64()).collect();
        assert_eq!(polys, polys2);
    }

    #[test]
    fn scan_four_chords_finds_nontrivial_measure() {
        let s = lehmer_scan(4, DEFAULT_TOL).unwrap();
        let idx = s.minimal_nontrivial.expect("triangle-with-tail appears at n = 4");
        let e = &s.entries[idx];
        assert!(e.mahler_measure > 1.0);
        assert!(e.mahler_measure >= crate::spectra::lehmer_measure() - 1e-6);
    }
}
