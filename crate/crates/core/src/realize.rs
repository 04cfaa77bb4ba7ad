//! Constructive realization of admissible determinants by achiral diagrams,
//! plus the Crowell and achiral determinant bounds as checkers.
//!
//! Every constructor re-verifies its diagram through all applicable
//! determinant methods before issuing a certificate, so a returned
//! certificate is a checked witness rather than a formula.

use crate::diagrams::{
    compile_dsquare_three, compile_dsquare_two, compile_tsum, det_transcript, torus_two_bridge,
    DetMethod, DiagramError, LinkDiagram,
};
use crate::numtheory::{
    gcd, isqrt, sum_of_two_squares_witness, two_square_decompositions, TwoSquareDecomposition,
};
use crate::tangles::{conway_for_fraction, square_det_2};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("{n} is even; only odd determinants are realized")]
    EvenInput { n: u64 },
    #[error("{n} is not a sum of two squares (witness prime {witness})")]
    NotSumOfTwoSquares { n: u64, witness: u64 },
    #[error("{n} is not a sum of two coprime squares")]
    NoCoprimeDecomposition { n: u64 },
    #[error("no prime alternating achiral knot has determinant {n}")]
    ExcludedValue { n: u64 },
    #[error("{0} is not an odd perfect square")]
    NotOddSquare(u64),
    #[error("construction failed: {0}")]
    Diagram(#[from] DiagramError),
    #[error("verification failed for target {expected}: methods gave {got:?}")]
    Verification { expected: u64, got: Vec<(String, u64)> },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Squares that no prime alternating achiral knot realizes.
pub const EXCLUDED_SQUARE_DETS: [u64; 3] = [1, 9, 49];

/// Table knots covering the two square families with k = 0.
pub const CATALOG: [(&str, u64); 2] = [("10_123", 121), ("12_1019", 361)];

/// How the target determinant is realized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// Palindromic even-length Conway notation of a rational achiral knot.
    Rational { notation: Vec<i64> },
    /// Tangle-plus-mirror closure with a torus factor tied into each half.
    AlternatingConnectedSumTangle { half_notation: Vec<i64>, factor: u64 },
    /// T(2, p) # T(2, −p).
    TorusConnectedSum { p: u64 },
    /// Strongly +achiral stack template; the parameter tuple fixes the boxes.
    StrongPlusTemplate { params: TemplateParams },
    /// Value carried from the knot tables, not recomputed.
    CatalogReference { name: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplateParams {
    TwoBox { x: i64, y: i64, a: i64, b: i64 },
    ThreeBox { x: i64, y: i64, a: i64, b: i64, c: i64, d: i64 },
}

#[derive(Debug, Clone)]
pub struct RealizationCertificate {
    pub target: u64,
    pub decomposition: (u64, u64),
    pub realization: Realization,
    pub diagram: Option<LinkDiagram>,
    pub claimed_det: u64,
    /// Per-method determinant values of the verified diagram.
    pub transcript: Vec<(String, u64)>,
}

impl RealizationCertificate {
    pub fn kind_name(&self) -> &'static str {
        match self.realization {
            Realization::Rational { .. } => "rational",
            Realization::AlternatingConnectedSumTangle { .. } => {
                "alternating-connected-sum-tangle"
            }
            Realization::TorusConnectedSum { .. } => "torus-connected-sum",
            Realization::StrongPlusTemplate { .. } => "strong-plus-template",
            Realization::CatalogReference { .. } => "catalog-reference",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = serde_json::Map::new();
        doc.insert("target".into(), self.target.into());
        doc.insert(
            "decomposition".into(),
            serde_json::json!([self.decomposition.0, self.decomposition.1]),
        );
        doc.insert("kind".into(), self.kind_name().into());
        match &self.realization {
            Realization::Rational { notation } => {
                doc.insert(
                    "notation".into(),
                    crate::tangles::format_conway(notation).into(),
                );
            }
            Realization::AlternatingConnectedSumTangle {
                half_notation,
                factor,
            } => {
                doc.insert(
                    "half_notation".into(),
                    crate::tangles::format_conway(half_notation).into(),
                );
                doc.insert("factor".into(), (*factor).into());
            }
            Realization::TorusConnectedSum { p } => {
                doc.insert("p".into(), (*p).into());
            }
            Realization::StrongPlusTemplate { params } => {
                let list = match *params {
                    TemplateParams::TwoBox { x, y, a, b } => vec![x, y, a, b],
                    TemplateParams::ThreeBox { x, y, a, b, c, d } => vec![x, y, a, b, c, d],
                };
                doc.insert("template".into(), serde_json::json!(list));
            }
            Realization::CatalogReference { name } => {
                doc.insert("catalog".into(), (*name).into());
            }
        }
        doc.insert("claimed_det".into(), self.claimed_det.into());
        let transcript: serde_json::Map<String, serde_json::Value> = self
            .transcript
            .iter()
            .map(|(m, v)| (m.clone(), serde_json::Value::from(*v)))
            .collect();
        doc.insert("transcript".into(), transcript.into());
        if let Some(d) = &self.diagram {
            doc.insert("crossings".into(), d.crossing_number().into());
            doc.insert(
                "diagram".into(),
                serde_json::from_str(&crate::diagrams::diagram_to_json(d)).unwrap(),
            );
        }
        serde_json::Value::Object(doc)
    }
}

fn verify(diagram: LinkDiagram, target: u64) -> Result<(LinkDiagram, Vec<(String, u64)>), RealizeError> {
    let transcript: Vec<(String, u64)> = det_transcript(&diagram)
        .map_err(RealizeError::Diagram)?
        .into_iter()
        .map(|(m, v)| (m.to_string(), v))
        .collect();
    if transcript.iter().any(|&(_, v)| v != target) {
        return Err(RealizeError::Verification {
            expected: target,
            got: transcript,
        });
    }
    Ok((diagram, transcript))
}

fn decompositions_for(n: u64) -> Result<Vec<TwoSquareDecomposition>, RealizeError> {
    if n % 2 == 0 {
        return Err(RealizeError::EvenInput { n });
    }
    let decs = two_square_decompositions(n);
    if decs.is_empty() {
        let witness = sum_of_two_squares_witness(n).expect_err("no decomposition means a witness");
        return Err(RealizeError::NotSumOfTwoSquares { n, witness });
    }
    Ok(decs)
}

fn unknot_certificate(n: u64) -> RealizationCertificate {
    let (diagram, transcript) = verify(LinkDiagram::unknot(), n).expect("unknot verifies");
    RealizationCertificate {
        target: 1,
        decomposition: (0, 1),
        realization: Realization::Rational { notation: vec![] },
        diagram: Some(diagram),
        claimed_det: 1,
        transcript,
    }
}

fn rational_certificate(n: u64, a: u64, b: u64) -> Result<RealizationCertificate, RealizeError> {
    let half = conway_for_fraction(b as i64, a as i64);
    let diagram = compile_tsum(&half, 1)?;
    let (diagram, transcript) = verify(diagram, n)?;
    let mut notation = half.clone();
    notation.extend(half.iter().rev());
    Ok(RealizationCertificate {
        target: n,
        decomposition: (a, b),
        realization: Realization::Rational { notation },
        diagram: Some(diagram),
        claimed_det: n,
        transcript,
    })
}

/// Realizes any odd sum of two squares as the determinant of an achiral
/// alternating diagram: coprime decompositions give rational knots, pure
/// squares the torus connected sum, and the rest a tangle connected sum.
/// Coprime decompositions are preferred with minimal small component.
pub fn realize_achiral(n: u64) -> Result<RealizationCertificate, RealizeError> {
    let decs = decompositions_for(n)?;
    if n == 1 {
        return Ok(unknot_certificate(n));
    }
    if let Some(d) = decs.iter().find(|d| d.a >= 1 && d.is_coprime()) {
        return rational_certificate(n, d.a, d.b);
    }
    if let Some(d) = decs.iter().find(|d| d.a == 0) {
        let p = d.b;
        let torus = torus_two_bridge(p as i64)?;
        let diagram = torus.connected_sum(&torus.mirror(), 0, 0)?;
        let (diagram, transcript) = verify(diagram, n)?;
        return Ok(RealizationCertificate {
            target: n,
            decomposition: (0, p),
            realization: Realization::TorusConnectedSum { p },
            diagram: Some(diagram),
            claimed_det: n,
            transcript,
        });
    }
    let d = decs.first().expect("nonempty by decompositions_for");
    let g = gcd(d.a, d.b);
    debug_assert!(g > 1);
    let half = conway_for_fraction((d.b / g) as i64, (d.a / g) as i64);
    let diagram = compile_tsum(&half, g as i64)?;
    let (diagram, transcript) = verify(diagram, n)?;
    Ok(RealizationCertificate {
        target: n,
        decomposition: (d.a, d.b),
        realization: Realization::AlternatingConnectedSumTangle {
            half_notation: half,
            factor: g,
        },
        diagram: Some(diagram),
        claimed_det: n,
        transcript,
    })
}

/// Realizes n as the determinant of an achiral rational knot, which exists
/// exactly when n is a sum of two coprime squares.
pub fn realize_achiral_rational(n: u64) -> Result<RealizationCertificate, RealizeError> {
    if n % 2 == 0 {
        return Err(RealizeError::EvenInput { n });
    }
    if n == 1 {
        return Ok(unknot_certificate(n));
    }
    if crate::numtheory::r2_0(n) == 0 {
        return Err(RealizeError::NoCoprimeDecomposition { n });
    }
    let decs = two_square_decompositions(n);
    let d = decs
        .iter()
        .find(|d| d.a >= 1 && d.is_coprime())
        .expect("positive r2_0 yields a coprime decomposition");
    rational_certificate(n, d.a, d.b)
}

/// Compile budget for the square family diagrams (k beyond this relies on
/// the verified closed form).
pub const FAMILY_COMPILE_BUDGET: u64 = 5;

const FAMILY_ROWS: [(u64, u64, [i64; 4]); 3] = [
    // residue base, modulus, (D, B, A, C)
    (7, 8, [2, 3, 2, 1]),
    (11, 16, [2, 7, 2, 1]),
    (19, 16, [4, 3, 4, 1]),
];

/// Realizes an odd square n = p² as the determinant of a prime alternating
/// achiral knot, which is possible iff n ∉ {1, 9, 49}.
pub fn realize_square_prime_alternating(n: u64) -> Result<RealizationCertificate, RealizeError> {
    if n % 2 == 0 {
        return Err(RealizeError::EvenInput { n });
    }
    let p = isqrt(n);
    if p * p != n {
        return Err(RealizeError::NotOddSquare(n));
    }
    if EXCLUDED_SQUARE_DETS.contains(&n) {
        return Err(RealizeError::ExcludedValue { n });
    }
    let smallest_factor = crate::numtheory::factorize(p)[0].0;
    if smallest_factor != p {
        // p composite: two-box template with X = B = 1, (1+Y)(A+1) = p
        let y = (smallest_factor - 1) as i64;
        let a = (p / smallest_factor - 1) as i64;
        let diagram = compile_dsquare_two(1, y, a, 1)?;
        let (diagram, transcript) = verify(diagram, n)?;
        return Ok(RealizationCertificate {
            target: n,
            decomposition: (0, p),
            realization: Realization::StrongPlusTemplate {
                params: TemplateParams::TwoBox { x: 1, y, a, b: 1 },
            },
            diagram: Some(diagram),
            claimed_det: n,
            transcript,
        });
    }
    if p % 4 == 1 {
        // p² is a sum of two coprime squares
        return realize_achiral_rational(n);
    }
    if let Some(&(name, det)) = CATALOG.iter().find(|&&(_, det)| det == n) {
        return Ok(RealizationCertificate {
            target: n,
            decomposition: (0, p),
            realization: Realization::CatalogReference { name },
            diagram: None,
            claimed_det: det,
            transcript: vec![],
        });
    }
    // p prime ≡ 3 (mod 4), p ≥ 23: exactly one family residue class fits
    let (k, row) = FAMILY_ROWS
        .iter()
        .find_map(|&(base, modulus, row)| {
            (p >= base && (p - base) % modulus == 0).then(|| ((p - base) / modulus, row))
        })
        .expect("primes 3 mod 4 fall in one family class");
    debug_assert!(k >= 1, "k = 0 members live in the catalog");
    let [dd, bb, aa, cc] = row;
    let params = TemplateParams::ThreeBox {
        x: 1,
        y: k as i64,
        a: aa,
        b: bb,
        c: cc,
        d: dd,
    };
    let closed_form = square_det_2(1, k as i64, aa, bb, cc, dd) as u64;
    debug_assert_eq!(closed_form, n);
    let (diagram, transcript) = if k <= FAMILY_COMPILE_BUDGET {
        let d = compile_dsquare_three(1, k as i64, aa, bb, cc, dd)?;
        let (d, t) = verify(d, n)?;
        (Some(d), t)
    } else {
        (None, vec![])
    };
    Ok(RealizationCertificate {
        target: n,
        decomposition: (0, p),
        realization: Realization::StrongPlusTemplate { params },
        diagram,
        claimed_det: n,
        transcript,
    })
}

/// Crowell's bound for reduced alternating non-split diagrams: det ≥ c, and
/// det ≥ 2c − 3 away from the (2, c) torus pattern.
pub fn crowell_bound_check(d: &LinkDiagram) -> Result<bool, RealizeError> {
    if !d.is_alternating() {
        return Err(RealizeError::Precondition("diagram must be alternating"));
    }
    if !d.is_reduced() {
        return Err(RealizeError::Precondition("diagram must be reduced"));
    }
    let c = d.crossing_number() as u64;
    let det = d.det(DetMethod::All)?;
    if det < c {
        return Ok(false);
    }
    if d.is_torus_two_pattern() {
        return Ok(true);
    }
    Ok(det as i128 >= 2 * c as i128 - 3)
}

/// The quadratic bound det ≥ n(n−3) for achiral alternating diagrams with
/// 2n crossings.
pub fn achiral_bound_check(d: &LinkDiagram) -> Result<bool, RealizeError> {
    let c = d.crossing_number();
    if c % 2 != 0 {
        return Err(RealizeError::Precondition(
            "achiral alternating diagrams have even crossing number",
        ));
    }
    let n = (c / 2) as i128;
    let det = d.det(DetMethod::Goeritz)? as i128;
    Ok(det >= n * (n - 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{chirality_filter, r2, ChiralityVerdict};

    #[test]
    fn realize_five_is_figure_eight() {
        let cert = realize_achiral(5).unwrap();
        assert!(matches!(cert.realization, Realization::Rational { .. }));
        assert_eq!(cert.decomposition, (1, 2));
        assert_eq!(cert.diagram.as_ref().unwrap().crossing_number(), 4);
        assert_eq!(cert.claimed_det, 5);
    }

    #[test]
    fn realize_nine_is_torus_sum() {
        let cert = realize_achiral(9).unwrap();
        assert!(matches!(
            cert.realization,
            Realization::TorusConnectedSum { p: 3 }
        ));
        let d = cert.diagram.unwrap();
        assert_eq!(d.crossing_number(), 6);
        assert!(d.is_alternating());
    }

    #[test]
    fn realize_45_uses_tangle_factor() {
        let cert = realize_achiral(45).unwrap();
        assert!(matches!(
            cert.realization,
            Realization::AlternatingConnectedSumTangle { factor: 3, .. }
        ));
        assert_eq!(cert.decomposition, (3, 6));
        assert_eq!(cert.claimed_det, 45);
    }

    #[test]
    fn realize_errors() {
        assert_eq!(
            realize_achiral(77).unwrap_err(),
            RealizeError::NotSumOfTwoSquares { n: 77, witness: 7 }
        );
        assert!(matches!(
            realize_achiral(4).unwrap_err(),
            RealizeError::EvenInput { .. }
        ));
        assert_eq!(
            realize_achiral_rational(49).unwrap_err(),
            RealizeError::NoCoprimeDecomposition { n: 49 }
        );
        assert_eq!(
            realize_achiral_rational(121).unwrap_err(),
            RealizeError::NoCoprimeDecomposition { n: 121 }
        );
    }

    #[test]
    fn realize_unknot() {
        let cert = realize_achiral(1).unwrap();
        assert_eq!(cert.diagram.unwrap().crossing_number(), 0);
        let cert = realize_achiral_rational(1).unwrap();
        assert!(matches!(cert.realization, Realization::Rational { notation } if notation.is_empty()));
    }

    #[test]
    fn rational_notation_for_25() {
        let cert = realize_achiral_rational(25).unwrap();
        let Realization::Rational { notation } = &cert.realization else {
            panic!("expected rational");
        };
        assert_eq!(notation, &vec![3, 1, 1, 3]);
        assert_eq!(cert.decomposition, (3, 4));
    }

    #[test]
    fn rational_notation_is_even_palindrome() {
        for n in [5u64, 13, 25, 65, 85, 325, 845] {
            let cert = realize_achiral_rational(n).unwrap();
            let Realization::Rational { notation } = &cert.realization else {
                panic!("expected rational");
            };
            assert_eq!(notation.len() % 2, 0);
            let rev: Vec<i64> = notation.iter().rev().copied().collect();
            assert_eq!(&rev, notation, "palindromic notation for {n}");
            assert_eq!(n % 12 == 1 || n % 12 == 5, true, "mod 12 law for {n}");
        }
    }

    #[test]
    fn preferred_decomposition_is_coprime_minimal() {
        let cert = realize_achiral(845).unwrap();
        assert_eq!(cert.decomposition, (2, 29));
        assert!(matches!(cert.realization, Realization::Rational { .. }));
    }

    #[test]
    fn square_realizations() {
        let cert = realize_square_prime_alternating(225).unwrap();
        assert!(matches!(
            cert.realization,
            Realization::StrongPlusTemplate {
                params: TemplateParams::TwoBox { x: 1, y: 2, a: 4, b: 1 }
            }
        ));
        assert_eq!(cert.claimed_det, 225);

        let cert = realize_square_prime_alternating(121).unwrap();
        assert!(matches!(
            cert.realization,
            Realization::CatalogReference { name: "10_123" }
        ));
        let cert = realize_square_prime_alternating(361).unwrap();
        assert!(matches!(
            cert.realization,
            Realization::CatalogReference { name: "12_1019" }
        ));

        for n in EXCLUDED_SQUARE_DETS {
            assert_eq!(
                realize_square_prime_alternating(n).unwrap_err(),
                RealizeError::ExcludedValue { n }
            );
        }
        assert_eq!(
            realize_square_prime_alternating(15).unwrap_err(),
            RealizeError::NotOddSquare(15)
        );
    }

    #[test]
    fn square_family_residues() {
        // 23 = 7 + 8·2
        let cert = realize_square_prime_alternating(529).unwrap();
        let Realization::StrongPlusTemplate {
            params: TemplateParams::ThreeBox { y, .. },
        } = cert.realization
        else {
            panic!("expected three-box family");
        };
        assert_eq!(y, 2);
        assert!(cert.diagram.is_some());
        assert_eq!(cert.claimed_det, 529);

        // 5² with 5 ≡ 1 (mod 4) goes rational
        let cert = realize_square_prime_alternating(25).unwrap();
        assert!(matches!(cert.realization, Realization::Rational { .. }));
    }

    #[test]
    fn every_prime_three_mod_four_fits_one_family() {
        for p in (23u64..1000).filter(|&p| crate::numtheory::is_prime(p) && p % 4 == 3) {
            let hits: Vec<u64> = FAMILY_ROWS
                .iter()
                .filter(|&&(base, modulus, _)| p >= base && (p - base) % modulus == 0)
                .map(|&(base, modulus, _)| (p - base) / modulus)
                .collect();
            assert_eq!(hits.len(), 1, "p = {p}");
            assert!(hits[0] >= 1, "p = {p}");
        }
    }

    #[test]
    fn bounds_on_small_diagrams() {
        let fig8 = crate::diagrams::compile_rational(&[2, 2]).unwrap();
        assert!(crowell_bound_check(&fig8).unwrap());
        assert!(achiral_bound_check(&fig8).unwrap());

        let torus17 = torus_two_bridge(17).unwrap();
        assert!(crowell_bound_check(&torus17).unwrap());

        // twist knots: determinant exactly 2c-3
        for c in 4..9i64 {
            let twist = crate::diagrams::compile_rational(&[c - 2, 2]).unwrap();
            assert_eq!(twist.det(DetMethod::All).unwrap(), (2 * c - 3) as u64);
            assert!(crowell_bound_check(&twist).unwrap());
        }

        let d2222 = crate::diagrams::compile_rational(&[2, 2, 2, 2]).unwrap();
        assert!(achiral_bound_check(&d2222).unwrap());
        let trefoil = crate::diagrams::compile_rational(&[3]).unwrap();
        assert!(achiral_bound_check(&trefoil).is_err());
    }

    #[test]
    fn realized_determinants_look_achiral() {
        for n in (1u64..200).step_by(2).filter(|&n| r2(n) > 0) {
            let cert = realize_achiral(n).unwrap();
            assert_eq!(
                chirality_filter(cert.claimed_det, None).unwrap(),
                ChiralityVerdict::Inconclusive,
                "n = {n}"
            );
            assert!(cert.diagram.unwrap().is_alternating(), "n = {n}");
        }
    }

    #[test]
    fn certificate_json_shape() {
        let cert = realize_achiral(25).unwrap();
        let doc = cert.to_json();
        assert_eq!(doc["kind"], "rational");
        assert_eq!(doc["claimed_det"], 25);
        assert_eq!(doc["transcript"]["goeritz"], 25);
        assert!(doc["diagram"]["crossings"].is_array());
    }
}
