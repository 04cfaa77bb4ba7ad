//! Classification and enumeration of rational (two-bridge) knots by
//! determinant: Schubert form equivalence, achirality, Burnside counts, and
//! the unknotting-number-one upper bound.

use crate::numtheory::{gcd, omega, r2_0, totient};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("invalid Schubert form S({p}, {q})")]
    InvalidForm { p: u64, q: u64 },
    #[error("forms have different determinants {0} and {1}")]
    MismatchedP(u64, u64),
}

/// Normalized two-bridge form S(p, q): p odd, 0 < q < p, gcd(p, q) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchubertForm {
    p: u64,
    q: u64,
}

impl SchubertForm {
    pub fn new(p: u64, q: u64) -> Result<Self, CensusError> {
        if p % 2 == 1 && q > 0 && q < p && gcd(p, q) == 1 {
            Ok(SchubertForm { p, q })
        } else {
            Err(CensusError::InvalidForm { p, q })
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn modinv(q: u64, p: u64) -> u64 {
    // extended Euclid; inputs are coprime
    let (mut old_r, mut r) = (q as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    old_s.rem_euclid(p as i128) as u64
}

/// Two-bridge equivalence: q′ ≡ q or qq′ ≡ 1 (mod p); the chirality
/// insensitive variant also allows the negated classes.
pub fn schubert_equivalent(
    s1: SchubertForm,
    s2: SchubertForm,
    chirality_sensitive: bool,
) -> Result<bool, CensusError> {
    if s1.p != s2.p {
        return Err(CensusError::MismatchedP(s1.p, s2.p));
    }
    let p = s1.p;
    let inv = modinv(s1.q, p);
    let mut members = vec![s1.q, inv];
    if !chirality_sensitive {
        members.push(p - s1.q);
        members.push(p - inv);
    }
    Ok(members.contains(&s2.q))
}

/// A rational knot is achiral iff q² ≡ −1 (mod p).
pub fn is_achiral_rational(s: SchubertForm) -> bool {
    mulmod(s.q, s.q, s.p) == s.p - 1
}

/// Number of achiral rational knots of determinant n: r₂⁰(n)/2 for odd
/// n > 2, else 0.
pub fn count_achiral_rational(n: u64) -> u64 {
    if n > 2 && n % 2 == 1 {
        r2_0(n) / 2
    } else {
        0
    }
}

/// Number of rational knots of determinant n counting chiral pairs once:
/// ¼(φ(n) + r₂⁰(n) + 2^ω(n)), by Burnside on the ±/inverse action.
pub fn count_rational_by_det(n: u64) -> u64 {
    assert!(n > 1 && n % 2 == 1, "requires odd n > 1");
    (totient(n) + r2_0(n) + (1 << omega(n))) / 4
}

/// Counting chiral pairs twice: ½(φ(n) + 2^ω(n)).
pub fn count_rational_chiral_twice(n: u64) -> u64 {
    assert!(n > 1 && n % 2 == 1, "requires odd n > 1");
    (totient(n) + (1 << omega(n))) / 2
}

/// Representatives of the insensitive equivalence classes {±q^{±1}} with
/// p = n, each with its achirality flag, by direct orbit scan.
pub fn census_classes(n: u64) -> Vec<(SchubertForm, bool)> {
    assert!(n > 1 && n % 2 == 1);
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for q in 1..n {
        if gcd(q, n) != 1 || seen[q as usize] {
            continue;
        }
        let inv = modinv(q, n);
        for r in [q, inv, n - q, n - inv] {
            seen[r as usize] = true;
        }
        let form = SchubertForm::new(n, q).expect("coprime residue");
        out.push((form, is_achiral_rational(form)));
    }
    out
}

/// Brute-force count of sensitive classes {q^{±1}}.
pub fn census_classes_sensitive(n: u64) -> u64 {
    assert!(n > 1 && n % 2 == 1);
    let mut seen = vec![false; n as usize];
    let mut count = 0u64;
    for q in 1..n {
        if gcd(q, n) != 1 || seen[q as usize] {
            continue;
        }
        seen[q as usize] = true;
        seen[modinv(q, n) as usize] = true;
        count += 1;
    }
    count
}

fn coprime_product_reps(m: u64) -> u64 {
    // representations of m as an unordered product of two coprime factors
    if m == 1 {
        1
    } else {
        1 << (omega(m) - 1)
    }
}

/// Kanenobu–Murakami upper bound for the number of unknotting number one
/// rational knots of determinant p:
/// 2^{ω((p+1)/2)−1} + 2^{ω((p−1)/2)−1} − 1, with the ω = 0 degenerate term
/// read as the single representation 1 = 1·1.
pub fn km_upper_bound(p: u64) -> u64 {
    assert!(p % 2 == 1 && p >= 3);
    coprime_product_reps((p + 1) / 2) + coprime_product_reps((p - 1) / 2) - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum U1Series {
    /// Conway notation (n 1 1 n), quadratic determinant growth.
    A,
    /// Conway notation (3 (1 2)ⁿ 1 1 1 1 (2 1)ⁿ 3), exponential growth.
    B,
}

/// The two series of achiral unknotting-number-one rational knots, as
/// palindromic Conway notation plus the determinant of the closure.
pub fn achiral_u1_series(kind: U1Series, n: u64) -> (Vec<i64>, u64) {
    let half: Vec<i64> = match kind {
        U1Series::A => {
            assert!(n >= 1);
            vec![n as i64, 1]
        }
        U1Series::B => {
            let mut h = vec![3];
            for _ in 0..n {
                h.extend([1, 2]);
            }
            h.extend([1, 1]);
            h
        }
    };
    let mut notation = half.clone();
    notation.extend(half.iter().rev());
    let kr = crate::tangles::tangle_fraction(&half);
    (notation, crate::tangles::tsum_det(kr))
}
