//! Combinatorial link diagrams and their checkerboard structure.
//!
//! A diagram is a list of crossings, each carrying four arc identifiers in
//! counterclockwise cyclic order. Slots {0, 2} hold the under-strand pair and
//! slots {1, 3} the over-strand pair; every arc identifier appears exactly
//! twice across the diagram. Faces are traced from this rotation data, so the
//! crossing list is the single source of planarity. The empty crossing list
//! stands for the 0-crossing unknot diagram.

mod assembly;
mod compile;
mod det;

pub use compile::{compile_dsquare_three, compile_dsquare_two, compile_rational, compile_tsum,
                  torus_two_bridge};
pub use det::{det_transcript, goeritz_det, monocyclic_state_count, monocyclic_state_count_seq,
              state_tree_bijection_check, DetMethod, STATE_BUDGET};

use crate::plangraph::PlanarMultigraph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

pub type ArcId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arc {arc} does not appear exactly twice (seen at crossing {crossing})")]
    ArcOccurrence { arc: ArcId, crossing: usize },
    #[error("diagram is split: crossing {0} is disconnected from crossing 0")]
    Split(usize),
    #[error("rotation data is not planar: V - E + F = {0}, expected 2")]
    NotPlanar(i64),
    #[error("faces admit no checkerboard coloring")]
    NotColorable,
    #[error("crossing ids are not unique: {0}")]
    DuplicateCrossingId(u32),
    #[error("state enumeration budget exceeded: {crossings} crossings > {budget}")]
    StateBudget { crossings: usize, budget: usize },
    #[error("method {method} requires an alternating diagram")]
    NotAlternating { method: &'static str },
    #[error("determinant methods disagree: {0:?}")]
    MethodDisagreement(Vec<(&'static str, u64)>),
    #[error("alternation cannot be preserved while assembling")]
    AlternationBreak,
    #[error("assembling would close a crossing-free circle")]
    FreeCircle,
    #[error("notation entries must be nonzero and of one sign")]
    BadNotation,
    #[error("closure is a {components}-component link, not a knot")]
    NotAKnot { components: usize },
    #[error("coefficient pair ({0}, {1}) is not realizable as an alternating rational tangle")]
    NonRealizablePair(i64, i64),
    #[error("arc {0} not present in diagram")]
    NoSuchArc(ArcId),
}

/// One crossing: four arc ids, counterclockwise, slots {0,2} under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
}

/// Dart d = 4·crossing + slot.
pub type Dart = u32;

/// Face-traced structure of a diagram: face per dart and dart cycles per face.
#[derive(Debug, Clone)]
pub struct Faces {
    pub face_of_dart: Vec<u32>,
    pub cycles: Vec<Vec<Dart>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

impl LinkDiagram {
    /// Validates the two-occurrence, connectivity and planarity invariants.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let mut occ: HashMap<ArcId, Vec<(usize, usize)>> = HashMap::new();
        for (c, cr) in crossings.iter().enumerate() {
            for (s, &a) in cr.arcs.iter().enumerate() {
                occ.entry(a).or_default().push((c, s));
            }
        }
        for (&arc, places) in &occ {
            if places.len() != 2 {
                return Err(DiagramError::ArcOccurrence {
                    arc,
                    crossing: places[0].0,
                });
            }
        }
        let d = LinkDiagram { crossings };
        if d.crossing_number() > 0 {
            // connectivity of the 4-valent graph
            let n = d.crossing_number();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for places in occ.values() {
                let a = find(&mut parent, places[0].0);
                let b = find(&mut parent, places[1].0);
                parent[a] = b;
            }
            let root = find(&mut parent, 0);
            for c in 1..n {
                if find(&mut parent, c) != root {
                    return Err(DiagramError::Split(c));
                }
            }
            let f = d.faces().cycles.len() as i64;
            let euler = n as i64 - d.arc_count() as i64 + f;
            if euler != 2 {
                return Err(DiagramError::NotPlanar(euler));
            }
        }
        Ok(d)
    }

    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        LinkDiagram { crossings: vec![] }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_number(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    fn dart_count(&self) -> usize {
        4 * self.crossings.len()
    }

    /// Edge involution pairing the two occurrences of each arc.
    pub fn alpha(&self) -> Vec<Dart> {
        let mut first: HashMap<ArcId, Dart> = HashMap::new();
        let mut alpha = vec![0u32; self.dart_count()];
        for (c, cr) in self.crossings.iter().enumerate() {
            for (s, &a) in cr.arcs.iter().enumerate() {
                let d = (4 * c + s) as Dart;
                match first.entry(a) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(d);
                    }
                    std::collections::hash_map::Entry::Occupied(e) => {
                        let d0 = *e.get();
                        alpha[d0 as usize] = d;
                        alpha[d as usize] = d0;
                    }
                }
            }
        }
        alpha
    }

    fn sigma(d: Dart) -> Dart {
        (d & !3) | ((d + 1) & 3)
    }

    fn through(d: Dart) -> Dart {
        (d & !3) | ((d + 2) & 3)
    }

    /// Faces as orbits of σ∘α over darts.
    pub fn faces(&self) -> Faces {
        let alpha = self.alpha();
        let n = self.dart_count();
        let mut face_of_dart = vec![u32::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if face_of_dart[start as usize] != u32::MAX {
                continue;
            }
            let id = cycles.len() as u32;
            let mut cyc = Vec::new();
            let mut d = start;
            loop {
                face_of_dart[d as usize] = id;
                cyc.push(d);
                d = Self::sigma(alpha[d as usize]);
                if d == start {
                    break;
                }
            }
            cycles.push(cyc);
        }
        Faces { face_of_dart, cycles }
    }

    /// Face holding the quadrant between slots `q` and `q+1` of crossing `c`.
    pub fn quadrant_face(faces: &Faces, c: usize, q: usize) -> u32 {
        faces.face_of_dart[4 * c + (q + 1) % 4]
    }

    /// Checkerboard two-coloring of the traced faces; the face traced first
    /// (the orbit of dart 0) is white.
    pub fn coloring(&self, faces: &Faces) -> Result<Vec<Color>, DiagramError> {
        let nf = faces.cycles.len();
        if self.crossing_number() == 0 {
            return Ok(vec![]);
        }
        let mut color: Vec<Option<Color>> = vec![None; nf];
        color[0] = Some(Color::White);
        let mut queue = std::collections::VecDeque::from([0usize]);
        // faces adjacent across an arc: face(d) and face(σ(d)) for either dart
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for d in 0..self.dart_count() as u32 {
            let f1 = faces.face_of_dart[d as usize] as usize;
            let f2 = faces.face_of_dart[Self::sigma(d) as usize] as usize;
            adj[f1].push(f2);
        }
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(c.other());
                        queue.push_back(g);
                    }
                    Some(cg) if cg == c => return Err(DiagramError::NotColorable),
                    _ => {}
                }
            }
        }
        Ok(color.into_iter().map(|c| c.expect("connected faces")).collect())
    }

    /// Number of link components by strand tracing.
    pub fn component_count(&self) -> usize {
        if self.crossing_number() == 0 {
            return 1;
        }
        let alpha = self.alpha();
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut orbits = 0usize;
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            orbits += 1;
            let mut d = start;
            loop {
                seen[d as usize] = true;
                d = alpha[Self::through(d) as usize];
                if d == start {
                    break;
                }
            }
        }
        // forward and backward traversals are distinct orbits
        orbits / 2
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// True when consecutive passes along every strand alternate over/under.
    pub fn is_alternating(&self) -> bool {
        if self.crossing_number() == 0 {
            return true;
        }
        let alpha = self.alpha();
        (0..self.dart_count() as u32).all(|d| {
            let next = alpha[Self::through(d) as usize];
            (d & 1) != (next & 1)
        })
    }

    /// True when no crossing is nugatory (opposite quadrants in one face).
    pub fn is_reduced(&self) -> bool {
        let faces = self.faces();
        (0..self.crossing_number()).all(|c| {
            Self::quadrant_face(&faces, c, 0) != Self::quadrant_face(&faces, c, 2)
                && Self::quadrant_face(&faces, c, 1) != Self::quadrant_face(&faces, c, 3)
        })
    }

    /// Mirror image: the over-strand pair becomes the under-strand pair.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|cr| Crossing {
                arcs: [cr.arcs[1], cr.arcs[2], cr.arcs[3], cr.arcs[0]],
            })
            .collect();
        LinkDiagram { crossings }
    }

    fn max_arc_id(&self) -> ArcId {
        self.crossings
            .iter()
            .flat_map(|c| c.arcs)
            .max()
            .map_or(0, |m| m + 1)
    }

    /// Connected sum spliced into `arc_self` and `arc_other`. When both
    /// diagrams are alternating the gluing joins ends of opposite pass
    /// parity, so the result is alternating again.
    pub fn connected_sum(
        &self,
        other: &LinkDiagram,
        arc_self: ArcId,
        arc_other: ArcId,
    ) -> Result<LinkDiagram, DiagramError> {
        if self.crossing_number() == 0 {
            return Ok(other.clone());
        }
        if other.crossing_number() == 0 {
            return Ok(self.clone());
        }
        let offset = self.max_arc_id();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|cr| Crossing {
            arcs: cr.arcs.map(|a| a + offset),
        }));
        let occ = |cs: &[Crossing], arc: ArcId| -> Vec<(usize, usize)> {
            let mut v = Vec::new();
            for (c, cr) in cs.iter().enumerate() {
                for (s, &a) in cr.arcs.iter().enumerate() {
                    if a == arc {
                        v.push((c, s));
                    }
                }
            }
            v
        };
        let ends_a = occ(&crossings, arc_self);
        let ends_b = occ(&crossings, arc_other + offset);
        if ends_a.len() != 2 {
            return Err(DiagramError::NoSuchArc(arc_self));
        }
        if ends_b.len() != 2 {
            return Err(DiagramError::NoSuchArc(arc_other));
        }
        // parity of a pass is the slot parity; join over-end to under-end
        let parity = |(_, s): &(usize, usize)| s % 2;
        let (b_for_a0, b_for_a1) = if parity(&ends_a[0]) != parity(&ends_b[0]) {
            (ends_b[0], ends_b[1])
        } else {
            (ends_b[1], ends_b[0])
        };
        let fresh = offset + other.max_arc_id();
        // arc_self keeps end a0 and reaches into the other diagram
        crossings[b_for_a0.0].arcs[b_for_a0.1] = arc_self;
        crossings[ends_a[1].0].arcs[ends_a[1].1] = fresh;
        crossings[b_for_a1.0].arcs[b_for_a1.1] = fresh;
        LinkDiagram::new(crossings)
    }

    /// The checkerboard graph on the faces of one color, one edge per
    /// crossing, as an embedded combinatorial map.
    pub fn checkerboard_graph(&self, chosen: Color) -> PlanarMultigraph {
        if self.crossing_number() == 0 {
            return PlanarMultigraph::trivial();
        }
        let faces = self.faces();
        let colors = self.coloring(&faces).expect("valid diagrams are colorable");
        let mut vertex_of_face: HashMap<u32, usize> = HashMap::new();
        for f in 0..faces.cycles.len() as u32 {
            if colors[f as usize] == chosen {
                let v = vertex_of_face.len();
                vertex_of_face.insert(f, v);
            }
        }
        // map dart 2c is the anchor quadrant of crossing c, 2c+1 the opposite
        let mut anchor = vec![0usize; self.crossing_number()];
        for (c, a) in anchor.iter_mut().enumerate() {
            let q0 = Self::quadrant_face(&faces, c, 0);
            *a = if colors[q0 as usize] == chosen { 0 } else { 1 };
        }
        let mut rotations: Vec<Vec<u32>> = vec![Vec::new(); vertex_of_face.len()];
        for (f, cycle) in faces.cycles.iter().enumerate() {
            let Some(&v) = vertex_of_face.get(&(f as u32)) else {
                continue;
            };
            for &d in cycle {
                let c = (d / 4) as usize;
                let q = (d as usize + 3) % 4; // quadrant hugged by this dart
                debug_assert_eq!(Self::quadrant_face(&faces, c, q) as usize, f);
                let dart = if q == anchor[c] {
                    2 * c as u32
                } else {
                    debug_assert_eq!(q, anchor[c] + 2);
                    2 * c as u32 + 1
                };
                rotations[v].push(dart);
            }
        }
        let involution: Vec<u32> = (0..2 * self.crossing_number() as u32)
            .map(|d| d ^ 1)
            .collect();
        PlanarMultigraph::from_parts(rotations, involution).expect("checkerboard map is valid")
    }

    /// Searches for an automorphism of the underlying 4-valent map that swaps
    /// the two checkerboard color classes, returning its dart images. Such a
    /// symmetry carries each checkerboard graph onto the other, so its
    /// existence certifies that both are self-dual. Orientation-preserving
    /// and orientation-reversing automorphisms are both admitted.
    pub fn color_swap_automorphism(&self) -> Option<Vec<Dart>> {
        let n = self.dart_count();
        if n == 0 {
            return None;
        }
        let alpha = self.alpha();
        let faces = self.faces();
        let colors = self.coloring(&faces).ok()?;
        for reversed in [false, true] {
            'anchor: for anchor in 0..n as u32 {
                let mut image = vec![u32::MAX; n];
                image[0] = anchor;
                let mut stack = vec![0u32];
                while let Some(d) = stack.pop() {
                    let e = image[d as usize];
                    let sig_e = if reversed {
                        // counterclockwise successor maps to clockwise
                        (e & !3) | ((e + 3) & 3)
                    } else {
                        Self::sigma(e)
                    };
                    for (nd, ne) in [
                        (Self::sigma(d), sig_e),
                        (alpha[d as usize], alpha[e as usize]),
                    ] {
                        if image[nd as usize] == u32::MAX {
                            image[nd as usize] = ne;
                            stack.push(nd);
                        } else if image[nd as usize] != ne {
                            continue 'anchor;
                        }
                    }
                }
                let mut hit = vec![false; n];
                for &e in &image {
                    if e == u32::MAX || hit[e as usize] {
                        continue 'anchor;
                    }
                    hit[e as usize] = true;
                }
                let swaps = (0..n).all(|d| {
                    let f1 = faces.face_of_dart[d] as usize;
                    let f2 = faces.face_of_dart[image[d] as usize] as usize;
                    colors[f1] == colors[f2].other()
                });
                if swaps {
                    return Some(image);
                }
            }
        }
        None
    }

    /// Detects the closed two-strand torus pattern (checkerboard graph with
    /// two vertices on one side); the exemption case of Crowell's bound.
    pub fn is_torus_two_pattern(&self) -> bool {
        if self.crossing_number() == 0 {
            return false;
        }
        [Color::White, Color::Black]
            .iter()
            .any(|&col| self.checkerboard_graph(col).vertex_count() == 2)
    }

    /// Determinant by the requested method; `All` runs every applicable
    /// method and errors when they disagree.
    pub fn det(&self, method: DetMethod) -> Result<u64, DiagramError> {
        det::det(self, method)
    }
}

// ---- JSON interface -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CrossingJson {
    id: u32,
    arcs: [ArcId; 4],
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    crossings: Vec<CrossingJson>,
}

/// Serializes with crossing ids equal to their index.
pub fn diagram_to_json(d: &LinkDiagram) -> String {
    let doc = DiagramJson {
        crossings: d
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| CrossingJson {
                id: i as u32,
                arcs: c.arcs,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("diagram serialization cannot fail")
}

/// Reads the `{"crossings":[{"id":..,"arcs":[..]}]}` format and validates the
/// two-occurrence and planarity invariants, naming the failing crossing.
pub fn diagram_from_json(text: &str) -> Result<LinkDiagram, String> {
    let doc: DiagramJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let mut seen = std::collections::BTreeSet::new();
    for c in &doc.crossings {
        if !seen.insert(c.id) {
            return Err(DiagramError::DuplicateCrossingId(c.id).to_string());
        }
    }
    let mut ordered = doc.crossings;
    ordered.sort_by_key(|c| c.id);
    let ids: Vec<u32> = ordered.iter().map(|c| c.id).collect();
    let crossings = ordered.into_iter().map(|c| Crossing { arcs: c.arcs }).collect();
    LinkDiagram::new(crossings).map_err(|e| match e {
        DiagramError::ArcOccurrence { arc, crossing } => DiagramError::ArcOccurrence {
            arc,
            crossing: ids[crossing] as usize,
        }
        .to_string(),
        DiagramError::Split(c) => DiagramError::Split(ids[c] as usize).to_string(),
        other => other.to_string(),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn trefoil() -> LinkDiagram {
        compile_rational(&[3]).unwrap()
    }

    pub(crate) fn figure_eight() -> LinkDiagram {
        compile_rational(&[2, 2]).unwrap()
    }

    #[test]
    fn unknot_diagram() {
        let u = LinkDiagram::unknot();
        assert_eq!(u.crossing_number(), 0);
        assert_eq!(u.component_count(), 1);
        assert!(u.is_knot());
        assert!(u.is_alternating());
    }

    #[test]
    fn trefoil_structure() {
        let t = trefoil();
        assert_eq!(t.crossing_number(), 3);
        assert_eq!(t.faces().cycles.len(), 5);
        assert_eq!(t.component_count(), 1);
        assert!(t.is_alternating());
        assert!(t.is_reduced());
    }

    #[test]
    fn figure_eight_structure() {
        let f = figure_eight();
        assert_eq!(f.crossing_number(), 4);
        assert_eq!(f.faces().cycles.len(), 6);
        assert!(f.is_knot());
        assert!(f.is_alternating());
    }

    #[test]
    fn kink_is_planar_but_not_reduced() {
        let d = LinkDiagram::new(vec![Crossing { arcs: [0, 0, 1, 1] }]).unwrap();
        assert_eq!(d.component_count(), 1);
        assert!(!d.is_reduced());
        assert_eq!(d.det(DetMethod::Goeritz).unwrap(), 1);
    }

    #[test]
    fn two_occurrence_rejected() {
        let err = LinkDiagram::new(vec![Crossing { arcs: [0, 1, 2, 3] }]).unwrap_err();
        assert!(matches!(err, DiagramError::ArcOccurrence { .. }));
    }

    #[test]
    fn split_rejected() {
        // two disjoint kinks
        let err = LinkDiagram::new(vec![
            Crossing { arcs: [0, 0, 1, 1] },
            Crossing { arcs: [2, 2, 3, 3] },
        ])
        .unwrap_err();
        assert!(matches!(err, DiagramError::Split(1)));
    }

    #[test]
    fn mirror_swaps_strand_roles() {
        let t = trefoil();
        let m = t.mirror();
        assert!(m.is_alternating());
        assert_eq!(m.component_count(), 1);
        // double mirror returns the same diagram, with slot labels rotated
        // two steps (the under-strand pair is a set, not an ordered pair)
        let [a0, a1, a2, a3] = t.crossings()[0].arcs;
        assert_eq!(m.mirror().crossings()[0].arcs, [a2, a3, a0, a1]);
    }

    #[test]
    fn checkerboard_counts_for_figure_eight() {
        let f = figure_eight();
        let g1 = f.checkerboard_graph(Color::White);
        let g2 = f.checkerboard_graph(Color::Black);
        assert_eq!(g1.vertex_count() + g2.vertex_count(), 6);
        assert_eq!(g1.edge_count(), 4);
        assert_eq!(g2.edge_count(), 4);
        assert!(g1.vertex_count() == 3 && g2.vertex_count() == 3);
    }

    #[test]
    fn torus_checkerboard_is_two_vertex_or_cycle() {
        let t = compile_rational(&[5]).unwrap();
        let (w, b) = (
            t.checkerboard_graph(Color::White),
            t.checkerboard_graph(Color::Black),
        );
        let counts = [w.vertex_count(), b.vertex_count()];
        assert!(counts.contains(&2) && counts.contains(&5));
        assert!(t.is_torus_two_pattern());
        assert!(!figure_eight().is_torus_two_pattern());
    }

    #[test]
    fn unknot_checkerboard_is_trivial() {
        let g = LinkDiagram::unknot().checkerboard_graph(Color::Black);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = figure_eight();
        let text = diagram_to_json(&f);
        let back = diagram_from_json(&text).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"crossings":[{"id":7,"arcs":[0,1,2,3]}]}"#;
        let err = diagram_from_json(bad).unwrap_err();
        assert!(err.contains("crossing 7"), "error was: {err}");
    }

    #[test]
    fn connected_sum_multiplicative_and_alternating() {
        let t = trefoil();
        let sum = t.connected_sum(&t.mirror(), 0, 0).unwrap();
        assert_eq!(sum.crossing_number(), 6);
        assert!(sum.is_alternating());
        assert!(sum.is_knot());
        assert_eq!(sum.det(DetMethod::Goeritz).unwrap(), 9);
    }
}
