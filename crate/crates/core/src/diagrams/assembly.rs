//! Incremental construction of alternating diagrams.
//!
//! The assembly tracks, for every open arc, the pass parity at its already
//! attached ends. Attaching a loose end to a new crossing must continue the
//! strand with the opposite parity, which resolves each crossing's handedness
//! and rejects any wiring that would break alternation.

use super::{ArcId, Crossing, DiagramError, LinkDiagram};

/// Over/under role of a crossing slot: slots 0 and 2 are under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pass {
    Under,
    Over,
}

fn slot_pass(slot: usize) -> Pass {
    if slot % 2 == 0 {
        Pass::Under
    } else {
        Pass::Over
    }
}

/// Compass position of a crossing end as the assembly wires it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pos {
    Nw,
    Ne,
    Se,
    Sw,
}

// Slot layout for the two handedness choices, counterclockwise in both.
// Hand A: under-strand on the SW-NE diagonal; hand B on the SE-NW diagonal.
fn slot_of(pos: Pos, hand_a: bool) -> usize {
    match (pos, hand_a) {
        (Pos::Sw, true) => 0,
        (Pos::Se, true) => 1,
        (Pos::Ne, true) => 2,
        (Pos::Nw, true) => 3,
        (Pos::Se, false) => 0,
        (Pos::Ne, false) => 1,
        (Pos::Nw, false) => 2,
        (Pos::Sw, false) => 3,
    }
}

/// How a crossing end is wired: onto an existing loose arc or a fresh one.
#[derive(Debug, Clone, Copy)]
pub enum End {
    Attach(ArcId),
    Fresh,
}

#[derive(Debug, Clone)]
struct ArcState {
    /// Slots already holding this arc (at most two).
    slots: Vec<(u32, usize)>,
    loose: u8,
    parent: ArcId,
}

#[derive(Debug, Clone)]
pub struct Assembly {
    crossings: Vec<Crossing>,
    arcs: Vec<ArcState>,
    default_hand: bool,
}

impl Default for Assembly {
    fn default() -> Self {
        Assembly {
            crossings: Vec::new(),
            arcs: Vec::new(),
            default_hand: true,
        }
    }
}

impl Assembly {
    pub fn new() -> Self {
        Assembly::default()
    }

    /// Handedness taken by the next parity-unconstrained crossing; this is
    /// the global mirror switch for an otherwise forced alternating build.
    pub fn set_default_hand(&mut self, hand_a: bool) {
        self.default_hand = hand_a;
    }

    /// A pristine strand with two loose ends.
    pub fn new_strand(&mut self) -> ArcId {
        let id = self.arcs.len() as ArcId;
        self.arcs.push(ArcState {
            slots: Vec::new(),
            loose: 2,
            parent: id,
        });
        id
    }

    fn fresh_from_crossing(&mut self, c: u32, slot: usize) -> ArcId {
        let id = self.arcs.len() as ArcId;
        self.arcs.push(ArcState {
            slots: vec![(c, slot)],
            loose: 1,
            parent: id,
        });
        id
    }

    pub fn find(&mut self, a: ArcId) -> ArcId {
        let p = self.arcs[a as usize].parent;
        if p == a {
            return a;
        }
        let r = self.find(p);
        self.arcs[a as usize].parent = r;
        r
    }

    /// Parity the next attachment of this arc must take, if constrained.
    fn required_pass(&mut self, a: ArcId) -> Option<Pass> {
        let a = self.find(a);
        match self.arcs[a as usize].slots.as_slice() {
            [] => None,
            [(_, s)] => Some(match slot_pass(*s) {
                Pass::Under => Pass::Over,
                Pass::Over => Pass::Under,
            }),
            _ => unreachable!("closed arcs have no loose ends"),
        }
    }

    /// Adds a crossing wired to the four compass ends; handedness is chosen
    /// to keep the diagram alternating. Returns the arcs at the four ends.
    pub fn add_crossing(
        &mut self,
        nw: End,
        ne: End,
        se: End,
        sw: End,
    ) -> Result<[ArcId; 4], DiagramError> {
        let ends = [(Pos::Nw, nw), (Pos::Ne, ne), (Pos::Se, se), (Pos::Sw, sw)];
        let mut hand: Option<bool> = None;
        for (pos, end) in ends {
            let End::Attach(a) = end else { continue };
            let a = self.find(a);
            if self.arcs[a as usize].loose == 0 {
                return Err(DiagramError::NoSuchArc(a));
            }
            if let Some(req) = self.required_pass(a) {
                let wants_a = slot_pass(slot_of(pos, true)) == req;
                match hand {
                    None => hand = Some(wants_a),
                    Some(h) if h != wants_a => return Err(DiagramError::AlternationBreak),
                    _ => {}
                }
            }
        }
        let hand_a = hand.unwrap_or(self.default_hand);
        let c = self.crossings.len() as u32;
        self.crossings.push(Crossing { arcs: [0; 4] });
        let mut out = [0; 4];
        for (i, (pos, end)) in ends.into_iter().enumerate() {
            let slot = slot_of(pos, hand_a);
            let arc = match end {
                End::Attach(a) => {
                    let a = self.find(a);
                    self.arcs[a as usize].slots.push((c, slot));
                    self.arcs[a as usize].loose -= 1;
                    a
                }
                End::Fresh => self.fresh_from_crossing(c, slot),
            };
            self.crossings[c as usize].arcs[slot] = arc;
            out[i] = arc;
        }
        Ok(out)
    }

    /// Joins two loose ends, merging the arcs. Rejects parity conflicts and
    /// crossing-free circles.
    pub fn join(&mut self, x: ArcId, y: ArcId) -> Result<ArcId, DiagramError> {
        let a = self.find(x);
        let b = self.find(y);
        if a == b {
            let st = &self.arcs[a as usize];
            if st.slots.is_empty() {
                return Err(DiagramError::FreeCircle);
            }
            // the arc's two ends meet: it becomes an ordinary closed arc
            if st.loose != 2 {
                return Err(DiagramError::NoSuchArc(a));
            }
            self.arcs[a as usize].loose = 0;
            return Ok(a);
        }
        let (sa, sb) = (
            self.arcs[a as usize].slots.clone(),
            self.arcs[b as usize].slots.clone(),
        );
        if self.arcs[a as usize].loose == 0 || self.arcs[b as usize].loose == 0 {
            return Err(DiagramError::NoSuchArc(if self.arcs[a as usize].loose == 0 {
                a
            } else {
                b
            }));
        }
        if sa.len() + sb.len() > 2 {
            return Err(DiagramError::NoSuchArc(b));
        }
        if let ([(_, s1)], [(_, s2)]) = (sa.as_slice(), sb.as_slice()) {
            if slot_pass(*s1) == slot_pass(*s2) {
                return Err(DiagramError::AlternationBreak);
            }
        }
        for &(c, s) in &sb {
            self.crossings[c as usize].arcs[s] = a;
            self.arcs[a as usize].slots.push((c, s));
        }
        let loose_b = self.arcs[b as usize].loose;
        self.arcs[b as usize].parent = a;
        self.arcs[b as usize].slots.clear();
        let st = &mut self.arcs[a as usize];
        st.loose = st.loose + loose_b - 2;
        Ok(a)
    }

    /// Duplicates a set of crossings as their mirror image (reflection that
    /// keeps over-passes over), returning the arc translation table.
    pub fn mirror_copy(&mut self, crossing_range: std::ops::Range<usize>) -> Vec<(ArcId, ArcId)> {
        let mut map: std::collections::HashMap<ArcId, ArcId> = std::collections::HashMap::new();
        let src: Vec<Crossing> = self.crossings[crossing_range].to_vec();
        for cr in src {
            let c = self.crossings.len() as u32;
            self.crossings.push(Crossing { arcs: [0; 4] });
            for (s, &a) in cr.arcs.iter().enumerate() {
                let a = self.find(a);
                // reflected slot order: reversal of the cyclic order
                let slot = (4 - s) % 4;
                let img = *map.entry(a).or_insert_with(|| {
                    let id = self.arcs.len() as ArcId;
                    self.arcs.push(ArcState {
                        slots: Vec::new(),
                        loose: self.arcs[a as usize].loose,
                        parent: id,
                    });
                    id
                });
                self.arcs[img as usize].slots.push((c, slot));
                self.crossings[c as usize].arcs[slot] = img;
            }
        }
        let mut table: Vec<(ArcId, ArcId)> = map.into_iter().collect();
        table.sort_unstable();
        table
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Resolves aliases and validates the finished diagram.
    pub fn finish(mut self) -> Result<LinkDiagram, DiagramError> {
        for i in 0..self.arcs.len() as ArcId {
            if self.arcs[i as usize].parent == i && self.arcs[i as usize].loose != 0 {
                return Err(DiagramError::NoSuchArc(i));
            }
        }
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                let a = self.crossings[c].arcs[s];
                self.crossings[c].arcs[s] = self.find(a);
            }
        }
        LinkDiagram::new(self.crossings)
    }
}

/// A two-string tangle under construction: the four boundary arcs.
#[derive(Debug, Clone, Copy)]
pub struct Tangle2 {
    pub nw: ArcId,
    pub ne: ArcId,
    pub se: ArcId,
    pub sw: ArcId,
}

impl Tangle2 {
    /// Quarter-turn counterclockwise (transposition: swaps the closures).
    pub fn rotate_ccw(self) -> Tangle2 {
        Tangle2 {
            nw: self.ne,
            ne: self.se,
            se: self.sw,
            sw: self.nw,
        }
    }

}

/// Builds the rational tangle `(a₁ … aₙ)` with all-positive (or all-negative)
/// entries: twist regions alternate between the right side and the bottom so
/// that the last entry is a horizontal region. The two global mirror variants
/// are identical for every determinant-level computation; the assembly picks
/// the handedness that alternates.
pub fn rational_tangle(asm: &mut Assembly, notation: &[i64]) -> Result<Tangle2, DiagramError> {
    if notation.is_empty()
        || notation.iter().any(|&a| a == 0)
        || !(notation.iter().all(|&a| a > 0) || notation.iter().all(|&a| a < 0))
    {
        return Err(DiagramError::BadNotation);
    }
    let n = notation.len();
    let first_horizontal = n % 2 == 1;
    let (mut nw, mut ne, mut se, mut sw);
    if first_horizontal {
        // 0-tangle seed
        let top = asm.new_strand();
        let bot = asm.new_strand();
        (nw, ne, se, sw) = (top, top, bot, bot);
    } else {
        // infinity-tangle seed
        let left = asm.new_strand();
        let right = asm.new_strand();
        (nw, ne, se, sw) = (left, right, right, left);
    }
    for (i, &entry) in notation.iter().enumerate() {
        let horizontal = (i + 1) % 2 == n % 2;
        for _ in 0..entry.unsigned_abs() {
            if horizontal {
                let [_, new_ne, new_se, _] =
                    asm.add_crossing(End::Attach(ne), End::Fresh, End::Fresh, End::Attach(se))?;
                ne = new_ne;
                se = new_se;
            } else {
                let [_, _, new_se, new_sw] =
                    asm.add_crossing(End::Attach(sw), End::Attach(se), End::Fresh, End::Fresh)?;
                sw = new_sw;
                se = new_se;
            }
        }
    }
    // resolve aliases picked up while attaching
    nw = asm.find(nw);
    ne = asm.find(ne);
    se = asm.find(se);
    sw = asm.find(sw);
    Ok(Tangle2 { nw, ne, se, sw })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_region_alternates() {
        let mut asm = Assembly::new();
        let t = rational_tangle(&mut asm, &[3]).unwrap();
        asm.join(t.nw, t.ne).unwrap();
        asm.join(t.sw, t.se).unwrap();
        let d = asm.finish().unwrap();
        assert_eq!(d.crossing_number(), 3);
        assert!(d.is_alternating());
    }

    #[test]
    fn mixed_sign_rejected() {
        let mut asm = Assembly::new();
        assert_eq!(
            rational_tangle(&mut asm, &[2, -2]).unwrap_err(),
            DiagramError::BadNotation
        );
        assert_eq!(
            rational_tangle(&mut asm, &[2, 0]).unwrap_err(),
            DiagramError::BadNotation
        );
    }

    #[test]
    fn free_circle_rejected() {
        let mut asm = Assembly::new();
        let s = asm.new_strand();
        assert_eq!(asm.join(s, s).unwrap_err(), DiagramError::FreeCircle);
    }

    #[test]
    fn loose_ends_rejected_at_finish() {
        let mut asm = Assembly::new();
        let t = rational_tangle(&mut asm, &[2]).unwrap();
        asm.join(t.nw, t.ne).unwrap();
        assert!(asm.finish().is_err());
    }
}
