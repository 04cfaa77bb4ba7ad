//! Exact integer arithmetic for two-square representations, counting
//! functions, and the determinant-based chirality filters.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("determinant must be a positive odd integer, got {0}")]
    EvenDeterminant(u64),
    #[error("|signed determinant| {signed} does not match determinant {det}")]
    SignMismatch { det: u64, signed: i64 },
}

/// Prime factorization as (prime, exponent) pairs with strictly increasing
/// primes. `factorize(1)` is the empty product.
pub type Factorization = Vec<(u64, u32)>;

const TRIAL_LIMIT: u64 = 1_000_000;

/// Deterministic trial division up to 10^6, with a Pollard rho fallback for
/// larger cofactors. Acceptance-scale inputs stay far below the fallback.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut n = n;
    let mut out: Factorization = Vec::new();
    let push = |p: u64, out: &mut Factorization| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    for p in std::iter::once(2).chain((3..TRIAL_LIMIT).step_by(2)) {
        if p * p > n {
            break;
        }
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
    }
    if n > 1 {
        if n < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(n) {
            push(n, &mut out);
        } else {
            let mut stack = vec![n];
            let mut found = Vec::new();
            while let Some(m) = stack.pop() {
                if is_prime(m) {
                    found.push(m);
                } else {
                    let d = pollard_rho(m);
                    stack.push(d);
                    stack.push(m / d);
                }
            }
            found.sort_unstable();
            for p in found {
                push(p, &mut out);
            }
            out.sort_unstable();
            // re-merge possible duplicates after sorting
            let mut merged: Factorization = Vec::new();
            for (p, e) in out {
                if let Some(last) = merged.last_mut() {
                    if last.0 == p {
                        last.1 += e;
                        continue;
                    }
                }
                merged.push((p, e));
            }
            return merged;
        }
    }
    out
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64 (fixed witness set).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n));
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn divisors(f: &Factorization) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in f {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out
}

/// r₂(n): a quarter of the lattice-point count on the circle of radius √n,
/// computed as #{d | n : d ≡ 1 (4)} − #{d | n : d ≡ 3 (4)}.
pub fn r2(n: u64) -> u64 {
    assert!(n >= 1);
    let f = factorize(n);
    let (mut plus, mut minus) = (0i64, 0i64);
    for d in divisors(&f) {
        match d % 4 {
            1 => plus += 1,
            3 => minus += 1,
            _ => {}
        }
    }
    debug_assert!(plus >= minus, "character sum is never negative");
    (plus - minus) as u64
}

/// r₂⁰(n): representations of n as a sum of two coprime squares. Equals 2^k
/// when n (or n/2) is a product of k distinct primes ≡ 1 (mod 4), else 0.
pub fn r2_0(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    if m % 2 == 0 {
        m /= 2;
        if m % 2 == 0 {
            return 0;
        }
    }
    let mut k = 0u32;
    for (p, _) in factorize(m) {
        if p % 4 != 1 {
            return 0;
        }
        k += 1;
    }
    1u64 << k
}

/// A representation n = a² + b² with 0 ≤ a ≤ b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoSquareDecomposition {
    pub a: u64,
    pub b: u64,
    pub n: u64,
}

impl TwoSquareDecomposition {
    pub fn is_coprime(&self) -> bool {
        gcd(self.a, self.b) == 1
    }
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// All decompositions n = a² + b², a ≤ b, sorted by a. Empty iff r₂(n) = 0.
pub fn two_square_decompositions(n: u64) -> Vec<TwoSquareDecomposition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut a = 0u64;
    while 2 * a * a <= n {
        let rest = n - a * a;
        let b = isqrt(rest);
        if b * b == rest {
            out.push(TwoSquareDecomposition { a, b, n });
        }
        a += 1;
    }
    out
}

/// Ok(()) when every prime ≡ 3 (mod 4) divides n to an even power;
/// Err(p) reports the first offending prime otherwise.
pub fn sum_of_two_squares_witness(n: u64) -> Result<(), u64> {
    assert!(n >= 1);
    for (p, e) in factorize(n) {
        if p % 4 == 3 && e % 2 == 1 {
            return Err(p);
        }
    }
    Ok(())
}

pub fn is_sum_two_squares(n: u64) -> bool {
    sum_of_two_squares_witness(n).is_ok()
}

/// Euler's totient via the factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Number of distinct prime divisors.
pub fn omega(n: u64) -> u32 {
    assert!(n >= 1);
    factorize(n).len() as u32
}

/// All x in [1, n−1] with x² ≡ −1 (mod n), by exhaustive residue scan.
/// For odd n > 1 the count equals r₂⁰(n).
pub fn sqrt_minus_one_roots(n: u64) -> Vec<u64> {
    assert!(n > 1 && n % 2 == 1, "requires odd n > 1");
    (1..n).filter(|&x| mulmod(x, x, n) == n - 1).collect()
}

/// Which chirality criterion certified the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralityReason {
    /// Δ(−1) < 0 forces σ ≡ 2 (mod 4).
    NegativeDeterminant,
    /// 3 | det but 9 ∤ det.
    NineDivisibility,
    /// det mod 36 outside {1, 5, 9, 13, 17, 25, 29}.
    Mod36Residue,
    /// det is not a sum of two squares.
    NotSumOfTwoSquares,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralityVerdict {
    ChiralCertified(ChiralityReason),
    Inconclusive,
}

/// Residues mod 36 that odd sums of two squares can leave.
pub const ACHIRAL_DET_RESIDUES_MOD_36: [u64; 7] = [1, 5, 9, 13, 17, 25, 29];

/// Applies the determinant-based chirality criteria in a fixed order (sign,
/// 9-divisibility, mod 36, two squares), so the reported reason is the first
/// and cheapest criterion that fires. The filters are one-sided: a chiral
/// verdict is a proof, `Inconclusive` decides nothing.
pub fn chirality_filter(
    det: u64,
    signed_det: Option<i64>,
) -> Result<ChiralityVerdict, NumTheoryError> {
    if det % 2 == 0 || det == 0 {
        return Err(NumTheoryError::EvenDeterminant(det));
    }
    if let Some(s) = signed_det {
        if s.unsigned_abs() != det {
            return Err(NumTheoryError::SignMismatch { det, signed: s });
        }
        if s < 0 {
            return Ok(ChiralityVerdict::ChiralCertified(
                ChiralityReason::NegativeDeterminant,
            ));
        }
    }
    if det % 3 == 0 && det % 9 != 0 {
        return Ok(ChiralityVerdict::ChiralCertified(
            ChiralityReason::NineDivisibility,
        ));
    }
    if !ACHIRAL_DET_RESIDUES_MOD_36.contains(&(det % 36)) {
        return Ok(ChiralityVerdict::ChiralCertified(
            ChiralityReason::Mod36Residue,
        ));
    }
    if r2(det) == 0 {
        return Ok(ChiralityVerdict::ChiralCertified(
            ChiralityReason::NotSumOfTwoSquares,
        ));
    }
    Ok(ChiralityVerdict::Inconclusive)
}

/// Fibonacci numbers with F₁ = F₂ = 1 (and F₀ = 0).
pub fn fibonacci(n: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let t = a + b;
        a = b;
        b = t;
    }
    a
}

/// Lucas numbers with the standard seeds L₀ = 2, L₁ = 1.
pub fn lucas(n: u32) -> u128 {
    let (mut a, mut b) = (2u128, 1u128);
    for _ in 0..n {
        let t = a + b;
        a = b;
        b = t;
    }
    a
}

/// Checks F_{2n+1} = F_n² + F_{n+1}² and L_{2n+1} + 2·L_{2n} = L_n² + L_{n+1}².
pub fn fib_lucas_identities(n: u32) -> (bool, bool) {
    let fib_ok = fibonacci(2 * n + 1) == fibonacci(n).pow(2) + fibonacci(n + 1).pow(2);
    let lucas_ok = lucas(2 * n + 1) + 2 * lucas(2 * n) == lucas(n).pow(2) + lucas(n + 1).pow(2);
    (fib_ok, lucas_ok)
}
