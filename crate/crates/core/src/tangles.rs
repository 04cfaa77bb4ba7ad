//! Continued-fraction and Krebes-pair calculus for rational tangles, plus the
//! three-strand diagram-algebra pairing behind the square-determinant
//! templates.
//!
//! A rational tangle in Conway notation `(a₁ … aₙ)` evaluates the *reversed*
//! sequence: its fraction is `[[aₙ, …, a₁]] = aₙ + 1/(aₙ₋₁ + …)`. The
//! round-trip tests against [`conway_for_fraction`] pin this convention.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TangleError {
    #[error("Krebes fraction (0, 0) is not allowed")]
    ZeroFraction,
    #[error("connected-sum factor must be nonzero")]
    ZeroFactor,
    #[error("cannot parse Conway notation entry {0:?}")]
    BadConwayEntry(String),
}

/// An unreduced integer pair (p, q) standing for a tangle's pair of closure
/// determinants, under the identification (p, q) ~ (−p, −q): the stored pair
/// has its first nonzero component nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KrebesFraction {
    p: i64,
    q: i64,
}

impl KrebesFraction {
    pub fn new(p: i64, q: i64) -> Result<Self, TangleError> {
        if p == 0 && q == 0 {
            return Err(TangleError::ZeroFraction);
        }
        if p < 0 || (p == 0 && q < 0) {
            Ok(Self { p: -p, q: -q })
        } else {
            Ok(Self { p, q })
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn as_pair(&self) -> (i64, i64) {
        (self.p, self.q)
    }
}

/// Evaluates `[[a₁, …, aₙ]] = a₁ + 1/(a₂ + …)` exactly, honoring the
/// degenerate conventions 1/0 = ∞, ∞ + x = ∞, 1/∞ = 0. The empty sequence
/// evaluates to ∞ = (1, 0); the result is in lowest terms.
pub fn eval_cf(entries: &[i64]) -> KrebesFraction {
    let (mut p, mut q) = (1i64, 0i64);
    for &a in entries.iter().rev() {
        let next = (a * p + q, p);
        p = next.0;
        q = next.1;
    }
    KrebesFraction::new(p, q).expect("continuants are never (0, 0)")
}

/// Fraction of the rational tangle with Conway notation `(a₁ … aₙ)`:
/// the reversed sequence `[[aₙ, …, a₁]]`.
pub fn tangle_fraction(conway: &[i64]) -> KrebesFraction {
    let reversed: Vec<i64> = conway.iter().rev().copied().collect();
    eval_cf(&reversed)
}

/// Inverse of [`tangle_fraction`] on reduced positive fractions: Conway
/// notation with positive entries whose tangle fraction is (p, q).
/// Requires p > q ≥ 1 and gcd(p, q) = 1, or q = 1 (plain twists).
pub fn conway_for_fraction(p: i64, q: i64) -> Vec<i64> {
    assert!(p > 0 && q > 0 && p > q || q == 1 && p >= 1, "need p > q >= 1");
    assert_eq!(crate::numtheory::gcd(p as u64, q as u64), 1, "need gcd 1");
    // head-first Euclidean expansion of p/q, then reversed into tangle order
    let mut entries = Vec::new();
    let (mut a, mut b) = (p, q);
    while b != 0 {
        entries.push(a / b);
        let r = a % b;
        a = b;
        b = r;
    }
    entries.reverse();
    entries
}

/// Tangle sum: (p₁q₂ + p₂q₁, q₁q₂), kept unreduced. Summing two fractions
/// with zero denominator lands on the ∞ + ∞ = ∞ convention.
pub fn kr_sum(x: KrebesFraction, y: KrebesFraction) -> KrebesFraction {
    KrebesFraction::new(x.p * y.q + y.p * x.q, x.q * y.q)
        .unwrap_or(KrebesFraction { p: 1, q: 0 })
}

/// Transposition inverts the fraction.
pub fn kr_transpose(x: KrebesFraction) -> KrebesFraction {
    KrebesFraction::new(x.q, x.p).expect("transpose of valid fraction is valid")
}

/// Connected sum with a factor of determinant d multiplies both closure
/// determinants by d.
pub fn kr_connected_sum(x: KrebesFraction, d: i64) -> Result<KrebesFraction, TangleError> {
    if d == 0 {
        return Err(TangleError::ZeroFactor);
    }
    KrebesFraction::new(d * x.p, d * x.q)
}

/// Determinant p² + q² of the achiral closure built from the tangle and its
/// mirrored transpose.
pub fn tsum_det(x: KrebesFraction) -> u64 {
    (x.p * x.p + x.q * x.q) as u64
}

/// An element of the three-strand diagram algebra at loop value zero, as
/// integer coefficients over the five generators
/// (identity, e₂, e₁, e₁e₂, e₂e₁) in the fixed table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TL3Element(pub [i64; 5]);

/// Pairing values on the five generators.
const TL3_PAIRING_TABLE: [[i64; 5]; 5] = [
    [0, 0, 0, 1, 1],
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [1, 0, 0, 0, 1],
    [1, 0, 0, 1, 0],
];

/// Bilinear extension of the generator pairing table; symmetric.
pub fn tl3_pairing(s: TL3Element, t: TL3Element) -> i64 {
    let mut acc = 0i64;
    for i in 0..5 {
        for j in 0..5 {
            acc += s.0[i] * TL3_PAIRING_TABLE[i][j] * t.0[j];
        }
    }
    acc
}

/// Coefficients of the two-box stack (a crossing over tangles with bracket
/// pairs (A, B) and (X, Y)): a = XA, b = d = BX, c = AX + BY + AY, e = BY.
pub fn stack_element(x: i64, y: i64, a: i64, b: i64) -> TL3Element {
    TL3Element([x * a, b * x, a * x + b * y + a * y, b * x, b * y])
}

/// Determinant of the two-box square template: ((X+Y)(A+B))².
pub fn square_det_1(x: i64, y: i64, a: i64, b: i64) -> i64 {
    let f = (x + y) * (a + b);
    f * f
}

/// Determinant of the three-box square template: (X(DA+BC) + Y(BD+AC))².
pub fn square_det_2(x: i64, y: i64, a: i64, b: i64, c: i64, d: i64) -> i64 {
    let f = x * (d * a + b * c) + y * (b * d + a * c);
    f * f
}

/// Determinant f₁² + f₂² of the −achiral braid-type closure, with
/// f₁ = X(AD+BC) + Y(AC+BD) and f₂ = Y(AD−BC).
pub fn minus_achiral_det(a: i64, b: i64, c: i64, d: i64, x: i64, y: i64) -> i64 {
    let f1 = x * (a * d + b * c) + y * (a * c + b * d);
    let f2 = y * (a * d - b * c);
    f1 * f1 + f2 * f2
}

/// Parses whitespace-separated signed integers.
pub fn parse_conway(text: &str) -> Result<Vec<i64>, TangleError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| TangleError::BadConwayEntry(tok.to_string()))
        })
        .collect()
}

pub fn format_conway(entries: &[i64]) -> String {
    entries
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
