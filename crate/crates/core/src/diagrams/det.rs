//! Three independent determinant computations: Goeritz matrix, monocyclic
//! state enumeration, and spanning trees of the checkerboard graph.
//!
//! The Goeritz route works for any diagram. State counting and tree counting
//! compute the determinant only for alternating diagrams (for others the
//! bracket state sum cancels), so the dispatcher applies them exactly there.

use super::{Color, DiagramError, LinkDiagram};
use crate::exact::bareiss_det_abs;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    Goeritz,
    States,
    Trees,
    All,
}

/// Exhaustive state enumeration is capped at 2^24 splice states.
pub const STATE_BUDGET: usize = 24;

/// |det| of the reduced Goeritz matrix on the white faces. The crossing type
/// sign is +1 when the white quadrants are the pair swept by rotating the
/// under-strand counterclockwise onto the over-strand.
pub fn goeritz_det(d: &LinkDiagram) -> u64 {
    if d.crossing_number() == 0 {
        return 1;
    }
    let faces = d.faces();
    let colors = d.coloring(&faces).expect("valid diagrams are colorable");
    let mut white_index = vec![usize::MAX; faces.cycles.len()];
    let mut whites = 0usize;
    for (f, &col) in colors.iter().enumerate() {
        if col == Color::White {
            white_index[f] = whites;
            whites += 1;
        }
    }
    let mut g = vec![vec![BigInt::zero(); whites]; whites];
    for c in 0..d.crossing_number() {
        let q0 = LinkDiagram::quadrant_face(&faces, c, 0) as usize;
        let (eta, wa, wb) = if colors[q0] == Color::White {
            let q2 = LinkDiagram::quadrant_face(&faces, c, 2) as usize;
            (1, q0, q2)
        } else {
            let q1 = LinkDiagram::quadrant_face(&faces, c, 1) as usize;
            let q3 = LinkDiagram::quadrant_face(&faces, c, 3) as usize;
            (-1, q1, q3)
        };
        let (i, j) = (white_index[wa], white_index[wb]);
        if i == j {
            continue;
        }
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    // any principal minor of the zero-row-sum matrix gives ±det
    let n = whites - 1;
    let minor: Vec<Vec<BigInt>> = (0..n).map(|i| g[i][..n].to_vec()).collect();
    let det = bareiss_det_abs(&minor);
    u64::try_from(&det).expect("determinant exceeds u64")
}

/// Splice connections per crossing and choice: choice 0 joins slot pairs
/// (0,1) and (2,3), choice 1 joins (1,2) and (3,0).
fn splice_tables(d: &LinkDiagram) -> (Vec<[u32; 4]>, Vec<[u32; 4]>, usize) {
    let mut dense = std::collections::HashMap::new();
    for cr in d.crossings() {
        for &a in &cr.arcs {
            let next = dense.len() as u32;
            dense.entry(a).or_insert(next);
        }
    }
    let mut t0 = Vec::with_capacity(d.crossing_number());
    let mut t1 = Vec::with_capacity(d.crossing_number());
    for cr in d.crossings() {
        let a: Vec<u32> = cr.arcs.iter().map(|x| dense[x]).collect();
        t0.push([a[0], a[1], a[2], a[3]]);
        t1.push([a[1], a[2], a[3], a[0]]);
    }
    (t0, t1, dense.len())
}

struct UnionScratch {
    parent: Vec<u32>,
}

impl UnionScratch {
    fn new(n: usize) -> Self {
        UnionScratch {
            parent: vec![0; n],
        }
    }

    #[inline]
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }
}

/// Counts monocyclic states in `states` (a sub-range of the 2^c state space).
fn count_range(
    t0: &[[u32; 4]],
    t1: &[[u32; 4]],
    arcs: usize,
    states: std::ops::Range<u64>,
    scratch: &mut UnionScratch,
) -> u64 {
    let c = t0.len();
    let target = (arcs - 1) as u32;
    let mut hits = 0u64;
    for state in states {
        for (i, p) in scratch.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        let mut merges = 0u32;
        for k in 0..c {
            let tab = if state >> k & 1 == 0 { &t0[k] } else { &t1[k] };
            for half in [(tab[0], tab[1]), (tab[2], tab[3])] {
                let a = scratch.find(half.0);
                let b = scratch.find(half.1);
                if a != b {
                    scratch.parent[a as usize] = b;
                    merges += 1;
                }
            }
        }
        if merges == target {
            hits += 1;
        }
    }
    hits
}

fn states_total(c: usize) -> u64 {
    1u64 << c
}

#[cfg(feature = "parallel")]
fn count_all_states(t0: &[[u32; 4]], t1: &[[u32; 4]], arcs: usize) -> u64 {
    use rayon::prelude::*;
    let total = states_total(t0.len());
    let chunks = 256u64.min(total);
    let per = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|i| {
            let lo = i * per;
            let hi = if i + 1 == chunks { total } else { lo + per };
            let mut scratch = UnionScratch::new(arcs);
            count_range(t0, t1, arcs, lo..hi, &mut scratch)
        })
        .sum()
}

#[cfg(not(feature = "parallel"))]
fn count_all_states(t0: &[[u32; 4]], t1: &[[u32; 4]], arcs: usize) -> u64 {
    let mut scratch = UnionScratch::new(arcs);
    count_range(t0, t1, arcs, 0..states_total(t0.len()), &mut scratch)
}

/// Number of splice states whose resolved curves form a single circle. For a
/// connected alternating diagram this equals the determinant.
pub fn monocyclic_state_count(d: &LinkDiagram) -> Result<u64, DiagramError> {
    let c = d.crossing_number();
    if c == 0 {
        return Ok(1);
    }
    if c > STATE_BUDGET {
        return Err(DiagramError::StateBudget {
            crossings: c,
            budget: STATE_BUDGET,
        });
    }
    let (t0, t1, arcs) = splice_tables(d);
    Ok(count_all_states(&t0, &t1, arcs))
}

/// Sequential kernel, exposed for the benchmark comparison.
pub fn monocyclic_state_count_seq(d: &LinkDiagram) -> Result<u64, DiagramError> {
    let c = d.crossing_number();
    if c == 0 {
        return Ok(1);
    }
    if c > STATE_BUDGET {
        return Err(DiagramError::StateBudget {
            crossings: c,
            budget: STATE_BUDGET,
        });
    }
    let (t0, t1, arcs) = splice_tables(d);
    let mut scratch = UnionScratch::new(arcs);
    Ok(count_range(&t0, &t1, arcs, 0..states_total(c), &mut scratch))
}

/// Verifies the bijection between monocyclic states and spanning trees of the
/// black checkerboard graph: every monocyclic state must pick, at the
/// crossings where its splice joins the two black quadrants, the edge set of
/// a spanning tree, and the number of such states must equal the tree count.
pub fn state_tree_bijection_check(d: &LinkDiagram) -> Result<bool, DiagramError> {
    let c = d.crossing_number();
    if c == 0 {
        return Ok(true);
    }
    if c > STATE_BUDGET {
        return Err(DiagramError::StateBudget {
            crossings: c,
            budget: STATE_BUDGET,
        });
    }
    let faces = d.faces();
    let colors = d.coloring(&faces)?;
    // choice 0 joins the quadrants between slots (1,2) and (3,0)
    let black_choice: Vec<u8> = (0..c)
        .map(|k| {
            let q1 = LinkDiagram::quadrant_face(&faces, k, 1) as usize;
            u8::from(colors[q1] != Color::Black)
        })
        .collect();
    let graph = d.checkerboard_graph(Color::Black).to_multigraph();
    let expected = graph.spanning_tree_count();
    let (t0, t1, arcs) = splice_tables(d);
    let mut scratch = UnionScratch::new(arcs);
    let mut monocyclic = 0u64;
    for state in 0..states_total(c) {
        if count_range(&t0, &t1, arcs, state..state + 1, &mut scratch) == 0 {
            continue;
        }
        monocyclic += 1;
        let edges: Vec<usize> = (0..c)
            .filter(|&k| (state >> k & 1) as u8 == black_choice[k])
            .collect();
        if !graph.is_spanning_tree(&edges) {
            return Ok(false);
        }
    }
    Ok(BigInt::from(monocyclic) == expected)
}

fn tree_det(d: &LinkDiagram) -> Result<u64, DiagramError> {
    let count = d
        .checkerboard_graph(Color::Black)
        .to_multigraph()
        .spanning_tree_count();
    u64::try_from(&count).map_err(|_| DiagramError::MethodDisagreement(vec![("trees", u64::MAX)]))
}

pub(super) fn det(d: &LinkDiagram, method: DetMethod) -> Result<u64, DiagramError> {
    match method {
        DetMethod::Goeritz => Ok(goeritz_det(d)),
        DetMethod::States => {
            if !d.is_alternating() {
                return Err(DiagramError::NotAlternating { method: "states" });
            }
            monocyclic_state_count(d)
        }
        DetMethod::Trees => {
            if !d.is_alternating() {
                return Err(DiagramError::NotAlternating { method: "trees" });
            }
            tree_det(d)
        }
        DetMethod::All => {
            let mut results: Vec<(&'static str, u64)> = vec![("goeritz", goeritz_det(d))];
            if d.is_alternating() {
                results.push(("trees", tree_det(d)?));
                if d.crossing_number() <= STATE_BUDGET {
                    results.push(("states", monocyclic_state_count(d)?));
                }
            }
            if results.iter().any(|&(_, v)| v != results[0].1) {
                return Err(DiagramError::MethodDisagreement(results));
            }
            Ok(results[0].1)
        }
    }
}

/// Per-method values for verification transcripts.
pub fn det_transcript(d: &LinkDiagram) -> Result<Vec<(&'static str, u64)>, DiagramError> {
    let mut results: Vec<(&'static str, u64)> = vec![("goeritz", goeritz_det(d))];
    if d.is_alternating() {
        results.push(("trees", tree_det(d)?));
        if d.crossing_number() <= STATE_BUDGET {
            results.push(("states", monocyclic_state_count(d)?));
        }
    }
    if results.iter().any(|&(_, v)| v != results[0].1) {
        return Err(DiagramError::MethodDisagreement(results));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{figure_eight, trefoil};
    use super::super::{compile_rational, compile_tsum};
    use super::*;

    #[test]
    fn unknot_determinant() {
        let u = LinkDiagram::unknot();
        assert_eq!(goeritz_det(&u), 1);
        assert_eq!(monocyclic_state_count(&u).unwrap(), 1);
        assert_eq!(u.det(DetMethod::All).unwrap(), 1);
    }

    #[test]
    fn small_knot_determinants() {
        assert_eq!(figure_eight().det(DetMethod::All).unwrap(), 5);
        assert_eq!(trefoil().det(DetMethod::All).unwrap(), 3);
        assert_eq!(compile_rational(&[2, 2, 2, 2]).unwrap().det(DetMethod::All).unwrap(), 29);
        assert_eq!(compile_rational(&[3, 1, 1, 3]).unwrap().det(DetMethod::All).unwrap(), 25);
        assert_eq!(compile_rational(&[1, 3, 3, 1]).unwrap().det(DetMethod::All).unwrap(), 17);
    }

    #[test]
    fn state_counts_match_examples() {
        assert_eq!(monocyclic_state_count(&figure_eight()).unwrap(), 5);
        assert_eq!(monocyclic_state_count(&trefoil()).unwrap(), 3);
    }

    #[test]
    fn seq_and_parallel_agree() {
        for notation in [&[3][..], &[2, 2][..], &[3, 1, 3][..], &[2, 2, 2, 2][..]] {
            let d = compile_rational(notation).unwrap();
            assert_eq!(
                monocyclic_state_count(&d).unwrap(),
                monocyclic_state_count_seq(&d).unwrap()
            );
        }
    }

    #[test]
    fn bijection_small_cases() {
        assert!(state_tree_bijection_check(&figure_eight()).unwrap());
        assert!(state_tree_bijection_check(&trefoil()).unwrap());
        assert!(state_tree_bijection_check(&compile_rational(&[1, 3, 3, 1]).unwrap()).unwrap());
        // nugatory variant: the bijection is splice-local
        let kink = LinkDiagram::new(vec![super::super::Crossing { arcs: [0, 0, 1, 1] }]).unwrap();
        assert!(state_tree_bijection_check(&kink).unwrap());
    }

    #[test]
    fn mirror_invariance() {
        // fixed anchors plus a deterministic sample of 100 random notations
        for notation in [&[3][..], &[2, 2][..], &[4, 3][..], &[1, 2, 1, 2][..]] {
            let d = compile_rational(notation).unwrap();
            assert_eq!(
                d.det(DetMethod::Goeritz).unwrap(),
                d.mirror().det(DetMethod::Goeritz).unwrap()
            );
        }
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let len = (next() % 5 + 1) as usize;
            let notation: Vec<i64> = (0..len).map(|_| (next() % 4 + 1) as i64).collect();
            let d = compile_rational(&notation).unwrap();
            let m = d.mirror();
            assert!(m.is_alternating());
            assert_eq!(
                d.det(DetMethod::Goeritz).unwrap(),
                m.det(DetMethod::Goeritz).unwrap(),
                "notation {notation:?}"
            );
        }
    }

    #[test]
    fn nonalternating_routes_to_goeritz() {
        // compose a trefoil with an unmirrored trefoil the wrong way round:
        // splice forcing same-parity gluing is not available through the
        // public API, so build a non-alternating diagram directly instead
        let t = trefoil();
        let mut crossings = t.crossings().to_vec();
        // swap strand roles at one crossing only
        crossings[0] = super::super::Crossing {
            arcs: [
                crossings[0].arcs[1],
                crossings[0].arcs[2],
                crossings[0].arcs[3],
                crossings[0].arcs[0],
            ],
        };
        let d = LinkDiagram::new(crossings).unwrap();
        assert!(!d.is_alternating());
        assert!(matches!(
            d.det(DetMethod::States),
            Err(DiagramError::NotAlternating { .. })
        ));
        assert!(d.det(DetMethod::All).is_ok());
    }

    #[test]
    fn budget_enforced() {
        let d = compile_rational(&[13, 12]).unwrap();
        assert!(matches!(
            monocyclic_state_count(&d),
            Err(DiagramError::StateBudget { .. })
        ));
        // the all dispatcher still cross-checks goeritz against trees
        assert_eq!(d.det(DetMethod::All).unwrap(), 13 * 12 + 1);
    }

    #[test]
    fn link_determinants_divisible() {
        // (2, n) torus links have determinant n with 2 components for even n
        let hopf = compile_rational(&[2]).unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.det(DetMethod::All).unwrap(), 2);
        let d = compile_tsum(&[2], 1).unwrap();
        assert_eq!(d.det(DetMethod::All).unwrap() % 2, 1);
    }
}
