//! Compilers from Conway notation and the achiral closure templates to
//! alternating diagrams.
//!
//! All constructors go through the parity-enforced [`assembly`] builder, so a
//! successful compile is alternating by construction. Template wiring that
//! admits two mirror-symmetric layouts (which half is reflected, which
//! chirality an inserted tangle takes) is resolved by trying the small fixed
//! set of variants in order; every variant realizes the same closure, so the
//! determinant does not depend on the choice.

use super::assembly::{rational_tangle, Assembly, End};
use super::{ArcId, DiagramError, LinkDiagram};
use crate::tangles::{conway_for_fraction, kr_connected_sum, tangle_fraction};

/// Alternating 4-plat diagram of the rational knot/link `(a₁ … aₙ)` as the
/// numerator closure of the rational tangle. Entries must be nonzero and all
/// of one sign; crossing count is Σ|aᵢ|.
pub fn compile_rational(notation: &[i64]) -> Result<LinkDiagram, DiagramError> {
    let mut asm = Assembly::new();
    let t = rational_tangle(&mut asm, notation)?;
    asm.join(t.nw, t.ne)?;
    asm.join(t.sw, t.se)?;
    asm.finish()
}

/// The (2, p) torus closure: numerator closure of a single twist region.
pub fn torus_two_bridge(p: i64) -> Result<LinkDiagram, DiagramError> {
    compile_rational(&[p])
}

fn lookup(table: &[(ArcId, ArcId)], a: ArcId) -> ArcId {
    table[table.binary_search_by_key(&a, |e| e.0).expect("copied arc")].1
}

/// Numerator closure of T + T̄ᵀ for the rational tangle T given by `notation`:
/// the palindromic 4-plat, whose universe carries a color-swapping symmetry.
/// An optional (2, d) torus factor and its mirror are tied into an arc pair
/// exchanged by that symmetry, so the symmetry survives the connected sums.
/// Rejects closures that are not knots.
pub fn compile_tsum(notation: &[i64], factor: i64) -> Result<LinkDiagram, DiagramError> {
    if factor == 0 {
        return Err(DiagramError::BadNotation);
    }
    // parity of the closure's component count is visible in the scaled pair
    let kr = kr_connected_sum(tangle_fraction(notation), factor)
        .map_err(|_| DiagramError::BadNotation)?;
    if (kr.p() + kr.q()) % 2 == 0 {
        return Err(DiagramError::NotAKnot { components: 2 });
    }
    let full: Vec<i64> = notation
        .iter()
        .chain(notation.iter().rev())
        .copied()
        .collect();
    let mut diagram = compile_rational(&full)?;
    if factor.abs() > 1 {
        let torus = torus_two_bridge(factor.abs())?;
        let (arc_a, arc_b) = symmetric_arc_pair(&diagram).ok_or(DiagramError::BadNotation)?;
        diagram = diagram.connected_sum(&torus, arc_a, 0)?;
        diagram = diagram.connected_sum(&torus.mirror(), arc_b, 0)?;
    }
    let components = diagram.component_count();
    if components != 1 {
        return Err(DiagramError::NotAKnot { components });
    }
    Ok(diagram)
}

/// A pair of distinct arcs exchanged by the diagram's color-swapping
/// symmetry, lowest dart first for determinism.
fn symmetric_arc_pair(d: &LinkDiagram) -> Option<(ArcId, ArcId)> {
    let image = d.color_swap_automorphism()?;
    let arc_of = |dart: u32| d.crossings()[(dart / 4) as usize].arcs[(dart % 4) as usize];
    (0..image.len() as u32)
        .map(|dart| (arc_of(dart), arc_of(image[dart as usize])))
        .find(|(a, b)| a != b)
}

/// Three parallel strands under construction, bottom ends fixed.
struct Strands {
    top: [ArcId; 3],
    bot: [ArcId; 3],
}

/// Inserts a two-string tangle with closure pair (p, q) onto adjacent strands
/// `s` and `s+1`, counting from the left.
fn insert_pair(
    asm: &mut Assembly,
    strands: &mut Strands,
    s: usize,
    p: i64,
    q: i64,
    mirrored: bool,
) -> Result<(), DiagramError> {
    if p < 0 || q < 0 || (p == 0 && q == 0) || crate::numtheory::gcd(p as u64, q as u64) > 1 {
        return Err(DiagramError::NonRealizablePair(p, q));
    }
    let (h1, h2) = (strands.top[s], strands.top[s + 1]);
    if (p, q) == (1, 0) {
        return Ok(()); // vertical pass-through
    }
    if (p, q) == (0, 1) {
        // cup-cap: the strands turn back
        asm.join(h1, h2)?;
        let cap = asm.new_strand();
        strands.top[s] = cap;
        strands.top[s + 1] = cap;
        return Ok(());
    }
    asm.set_default_hand(!mirrored);
    let tangle = if p >= q {
        rational_tangle(asm, &conway_for_fraction(p, q))?
    } else {
        // transposed build realizes the reciprocal fraction
        rational_tangle(asm, &conway_for_fraction(q, p))?.rotate_ccw()
    };
    asm.join(tangle.sw, h1)?;
    asm.join(tangle.se, h2)?;
    strands.top[s] = asm.find(tangle.nw);
    strands.top[s + 1] = asm.find(tangle.ne);
    for b in &mut strands.bot {
        *b = asm.find(*b);
    }
    Ok(())
}

/// Closes the three-strand tangle against its own reflection: the reflected
/// copy is stacked on top and each bottom end is traced around to the top end
/// in the same position.
fn close_against_reflection(mut asm: Assembly, strands: Strands) -> Result<LinkDiagram, DiagramError> {
    let table = asm.mirror_copy(0..asm.crossing_count());
    let copy_top: Vec<ArcId> = (0..3).map(|i| lookup(&table, strands.top[2 - i])).collect();
    let copy_bot: Vec<ArcId> = (0..3).map(|i| lookup(&table, strands.bot[2 - i])).collect();
    for i in 0..3 {
        asm.join(copy_bot[i], strands.top[i])?;
    }
    for j in 0..3 {
        asm.join(strands.bot[j], copy_top[j])?;
    }
    asm.finish()
}

fn fresh_strands(asm: &mut Assembly) -> Strands {
    let s: Vec<ArcId> = (0..3).map(|_| asm.new_strand()).collect();
    Strands {
        top: [s[0], s[1], s[2]],
        bot: [s[0], s[1], s[2]],
    }
}

/// Strongly +achiral two-box template: a crossing over tangles with closure
/// pairs (A, B) and (X, Y), stacked against its reflection. The determinant
/// of the closure is ((X+Y)(A+B))².
pub fn compile_dsquare_two(x: i64, y: i64, a: i64, b: i64) -> Result<LinkDiagram, DiagramError> {
    let mut last = DiagramError::AlternationBreak;
    for mask in 0u32..4 {
        let build = || -> Result<LinkDiagram, DiagramError> {
            let mut asm = Assembly::new();
            let mut st = fresh_strands(&mut asm);
            insert_pair(&mut asm, &mut st, 0, x, y, mask & 1 != 0)?;
            insert_pair(&mut asm, &mut st, 1, a, b, mask & 2 != 0)?;
            let [nw, ne, _, _] = asm.add_crossing(
                End::Fresh,
                End::Fresh,
                End::Attach(st.top[1]),
                End::Attach(st.top[0]),
            )?;
            st.top[0] = nw;
            st.top[1] = ne;
            close_against_reflection(asm, st)
        };
        match build() {
            Ok(d) => return Ok(d),
            Err(e @ DiagramError::NonRealizablePair(..)) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Strongly +achiral three-box template with closure pairs (X, Y), (A, B),
/// (C, D); the closure determinant is (X(DA+BC) + Y(BD+AC))².
pub fn compile_dsquare_three(
    x: i64,
    y: i64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
) -> Result<LinkDiagram, DiagramError> {
    let mut last = DiagramError::AlternationBreak;
    for mask in 0u32..8 {
        let build = || -> Result<LinkDiagram, DiagramError> {
            let mut asm = Assembly::new();
            let mut st = fresh_strands(&mut asm);
            insert_pair(&mut asm, &mut st, 0, x, y, mask & 1 != 0)?;
            insert_pair(&mut asm, &mut st, 1, a, b, mask & 2 != 0)?;
            insert_pair(&mut asm, &mut st, 0, c, d, mask & 4 != 0)?;
            close_against_reflection(asm, st)
        };
        match build() {
            Ok(d) => return Ok(d),
            Err(e @ DiagramError::NonRealizablePair(..)) => return Err(e),
            Err(e) => last = e,
        }
    }
    Err(last)
}
