//! Alexander polynomials of two-bridge knots from all-even continued
//! fractions, and the leading-coefficient square/sign laws.
//!
//! For p odd and q even the fraction p/q has a unique expansion with all
//! quotients even when each quotient is rounded to the nearest even integer;
//! parity forces strictly shrinking remainders and an even expansion length
//! 2g. The genus-g Seifert matrix read off that expansion is bidiagonal with
//! diagonal (−1)^{i+1}·aᵢ/2 and a single unit superdiagonal; the conventions
//! are pinned by three oracles (the figure-eight polynomial, |Δ(−1)| = p, and
//! the leading-coefficient product formula).

use crate::census::SchubertForm;

/// All-even continued-fraction expansion of a two-bridge fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenExpansion {
    entries: Vec<i64>,
}

impl EvenExpansion {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn genus(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn is_palindromic(&self) -> bool {
        let rev: Vec<i64> = self.entries.iter().rev().copied().collect();
        rev == self.entries
    }
}

/// Symmetric Laurent polynomial with integer coefficients on exponents
/// [−g, g], normalized to Δ(1) = 1 and Δ(t) = Δ(1/t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricLaurentPoly {
    /// coeffs[k] is the coefficient of t^k (and of t^{−k}).
    coeffs: Vec<i64>,
}

impl SymmetricLaurentPoly {
    pub fn coefficient(&self, k: i64) -> i64 {
        let k = k.unsigned_abs() as usize;
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        (self.coeffs.len() - 1) as i64
    }

    pub fn leading_coefficient(&self) -> i64 {
        *self.coeffs.last().expect("polynomials are nonzero")
    }

    pub fn eval(&self, t: i64) -> i64 {
        // t and 1/t enter symmetrically, so only integer t with |t| = 1 keeps
        // the value integral; that covers the two evaluations used here.
        assert!(t == 1 || t == -1);
        let mut acc = self.coeffs[0];
        for (k, &c) in self.coeffs.iter().enumerate().skip(1) {
            let tk = if t == 1 || k % 2 == 0 { 1 } else { -1 };
            acc += 2 * c * tk;
        }
        acc
    }

    /// Space-separated `coeff:exponent` pairs over the symmetric range.
    pub fn to_text(&self) -> String {
        let g = self.max_degree();
        (-g..=g)
            .map(|k| format!("{}:{}", self.coefficient(k), k))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All-even expansion of S(p, q): the representative q − p (for odd q) makes
/// the tail even, and nearest-even quotient extraction does the rest.
pub fn even_expansion(form: SchubertForm) -> EvenExpansion {
    let p = form.p() as i64;
    let q = form.q() as i64;
    let q = if q % 2 == 0 { q } else { q - p };
    let mut entries = Vec::new();
    let (mut num, mut den) = (p, q);
    while den != 0 {
        // nearest even quotient; parity makes the choice unique and |r| < |den|
        let exact = num as f64 / den as f64;
        let mut c = (exact / 2.0).round() as i64 * 2;
        let mut r = num - c * den;
        if r.abs() >= den.abs() {
            let fix = 2 * (r.signum() * den.signum());
            c += fix;
            r = num - c * den;
        }
        debug_assert!(r.abs() < den.abs());
        debug_assert_eq!(c % 2, 0);
        entries.push(c);
        num = den;
        den = r;
    }
    debug_assert_eq!(entries.len() % 2, 0, "even length is forced by parity");
    EvenExpansion { entries }
}

/// Evaluates `[[c₁, …, cₘ]]` as a fraction (numerator, denominator).
#[cfg(test)]
fn cf_value(entries: &[i64]) -> (i64, i64) {
    let (mut p, mut q) = (1i64, 0i64);
    for &a in entries.iter().rev() {
        (p, q) = (a * p + q, p);
    }
    (p, q)
}

/// Leading Alexander coefficient from the expansion: (−1)^g · ∏ aᵢ/2,
/// which is ±2^{−2g}·∏aᵢ with the sign that the Seifert matrix produces.
pub fn leading_coeff(expansion: &EvenExpansion) -> i64 {
    let g = expansion.genus();
    let prod: i64 = expansion.entries.iter().map(|&a| a / 2).product();
    if g % 2 == 0 {
        prod
    } else {
        -prod
    }
}

/// Alexander polynomial of the two-bridge knot S(p, q), normalized so that
/// Δ(1) = 1 and Δ(t) = Δ(1/t).
pub fn alexander_rational(form: SchubertForm) -> SymmetricLaurentPoly {
    let expansion = even_expansion(form);
    alexander_of_expansion(&expansion)
}

/// Determinant recurrence for the tridiagonal matrix t^{1/2}·V − t^{−1/2}·Vᵀ,
/// carried as Laurent polynomials in u = t^{1/2}:
/// D_k = d_k·(u − u^{−1})·D_{k−1} + D_{k−2} with d_k the k-th diagonal entry.
/// Intermediate coefficients stay bounded by the continuant values, so plain
/// machine integers suffice even for long ±2 expansions.
pub fn alexander_of_expansion(expansion: &EvenExpansion) -> SymmetricLaurentPoly {
    let n = expansion.entries.len();
    // D_k holds exponents −k..k in u; index i stores the coefficient of u^{i−k}
    let mut prev: Vec<i64> = vec![]; // D₋₁ = 0
    let mut cur: Vec<i64> = vec![1]; // D₀ = 1
    for (i, &a) in expansion.entries.iter().enumerate() {
        let d = if i % 2 == 0 { a / 2 } else { -a / 2 };
        let k = i + 1;
        let mut next = vec![0i64; 2 * k + 1];
        for (j, &c) in cur.iter().enumerate() {
            // u-shift: old exponent j−(k−1) becomes j−(k−1)±1
            next[j + 2] += d * c;
            next[j] -= d * c;
        }
        for (j, &c) in prev.iter().enumerate() {
            // same exponent, offset differs by two index steps
            next[j + 2] += c;
        }
        prev = std::mem::take(&mut cur);
        cur = next;
    }
    // D_{2g} has only even u-exponents: integral powers of t
    let g = n / 2;
    debug_assert!(cur.iter().enumerate().all(|(j, &c)| (j + n) % 2 == 0 || c == 0));
    let coeffs: Vec<i64> = (0..=g).map(|m| cur[n + 2 * m]).collect();
    let poly = SymmetricLaurentPoly { coeffs };
    debug_assert_eq!(poly.eval(1), 1, "knot normalization");
    for m in 0..=g as i64 {
        debug_assert_eq!(poly.coefficient(m), cur[(n as i64 - 2 * m) as usize], "palindromic");
    }
    poly
}

/// Whether |max cf Δ| of an achiral rational knot is a perfect square.
pub fn square_leading_check(form: SchubertForm) -> Result<bool, &'static str> {
    if !crate::census::is_achiral_rational(form) {
        return Err("S(p, q) is not achiral: q² must be −1 mod p");
    }
    let lead = alexander_rational(form).leading_coefficient().unsigned_abs();
    let r = crate::numtheory::isqrt(lead);
    Ok(r * r == lead)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn form(p: u64, q: u64) -> SchubertForm {
        SchubertForm::new(p, q).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(even_expansion(form(5, 2)).entries(), &[2, 2]);
        let e92 = even_expansion(form(9, 2));
        assert_eq!(e92.entries().len(), 2);
        assert_eq!(cf_value(e92.entries()).0.abs(), 9);
        let e257 = even_expansion(form(25, 7));
        assert_eq!(e257.entries().len(), 6);
        assert_eq!(cf_value(e257.entries()).0.abs(), 25);
    }

    #[test]
    fn expansion_round_trip() {
        for p in (3u64..600).step_by(2) {
            for q in 1..p.min(80) {
                if crate::numtheory::gcd(p, q) != 1 {
                    continue;
                }
                let e = even_expansion(form(p, q));
                assert!(e.entries().iter().all(|&a| a != 0 && a % 2 == 0));
                assert_eq!(e.entries().len() % 2, 0);
                assert_eq!(cf_value(e.entries()).0.unsigned_abs(), p, "S({p},{q})");
            }
        }
    }

    #[test]
    fn polynomial_examples() {
        // figure-eight: −t + 3 − 1/t
        let fig8 = alexander_rational(form(5, 2));
        assert_eq!(fig8.max_degree(), 1);
        assert_eq!(fig8.coefficient(1), -1);
        assert_eq!(fig8.coefficient(0), 3);
        assert_eq!(fig8.coefficient(-1), -1);

        // trefoil: t − 1 + 1/t
        let trefoil = alexander_rational(form(3, 1));
        assert_eq!(trefoil.coefficient(1), 1);
        assert_eq!(trefoil.coefficient(0), -1);

        // S(9, 2): −2t + 5 − 2/t
        let s92 = alexander_rational(form(9, 2));
        assert_eq!(s92.coefficient(1), -2);
        assert_eq!(s92.coefficient(0), 5);
        assert_eq!(s92.eval(-1).unsigned_abs(), 9);
    }

    #[test]
    fn leading_coeff_examples() {
        assert_eq!(
            leading_coeff(&EvenExpansion { entries: vec![2, 2] }),
            -1
        );
        assert_eq!(
            leading_coeff(&EvenExpansion { entries: vec![2, 4] }),
            -2
        );
        assert_eq!(
            leading_coeff(&EvenExpansion {
                entries: vec![2, 2, 2, 2]
            }),
            1
        );
    }

    #[test]
    fn square_leading_examples() {
        assert!(square_leading_check(form(5, 2)).unwrap());
        assert!(square_leading_check(form(25, 7)).unwrap());
        assert!(square_leading_check(form(29, 12)).unwrap());
        assert!(square_leading_check(form(3, 1)).is_err());
    }

    #[test]
    fn polynomial_text_format() {
        assert_eq!(alexander_rational(form(5, 2)).to_text(), "-1:-1 3:0 -1:1");
    }

    #[test]
    fn achiral_forms_have_palindromic_expansions() {
        for p in (5u64..=999).step_by(2) {
            for q in 1..p {
                if crate::numtheory::gcd(p, q) != 1 {
                    continue;
                }
                let f = form(p, q);
                if !crate::census::is_achiral_rational(f) {
                    continue;
                }
                let e = even_expansion(f);
                assert!(e.is_palindromic(), "S({p},{q}) gave {:?}", e.entries());
                assert!(square_leading_check(f).unwrap(), "S({p},{q})");
                // Crowell alternation with positive determinant
                let poly = alexander_rational(f);
                for k in 0..=poly.max_degree() {
                    let c = poly.coefficient(k);
                    assert!(c != 0, "S({p},{q}) coefficient {k}");
                    assert_eq!(c > 0, k % 2 == 0, "S({p},{q}) alternation at {k}");
                }
            }
        }
    }

    #[test]
    fn torus_factor_determinant_multiplies() {
        // Δ of T(2,p) at −1 has modulus p; the connected sum certificate for
        // p² multiplies the factors
        for p in [3u64, 5, 7] {
            let factor = alexander_rational(form(p, 1)).eval(-1).unsigned_abs();
            assert_eq!(factor, p);
            let cert = crate::realize::realize_achiral(p * p).unwrap();
            assert_eq!(cert.claimed_det, factor * factor);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn alexander_laws(p in 3u64..2000, q in 1u64..2000) {
            prop_assume!(p % 2 == 1 && q < p);
            prop_assume!(crate::numtheory::gcd(p, q) == 1);
            let f = form(p, q);
            let e = even_expansion(f);
            let poly = alexander_of_expansion(&e);
            prop_assert_eq!(poly.eval(1), 1);
            prop_assert_eq!(poly.eval(-1).unsigned_abs(), p);
            prop_assert_eq!(poly.max_degree() as usize, e.genus());
            prop_assert_eq!(poly.leading_coefficient(), leading_coeff(&e));
        }
    }
}
