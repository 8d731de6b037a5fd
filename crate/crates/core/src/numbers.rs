//! Exact integer sequence utilities: binomials, Stirling numbers, Fubini
//! numbers, generalized Fibonacci numbers, and the bounded-height Dyck path
//! series built from the Kreweras polynomials
//! `f_0 = f_1 = 1`, `f_{k+1}(t) = f_k(t) - t * f_{k-1}(t)`.
//!
//! Everything is arbitrary precision; counts leave the 64-bit range around
//! `n ~ 20`. Memo tables are behind mutexes, so all functions may be called
//! from any thread.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

/// Arbitrary-precision nonnegative count.
pub type Count = BigUint;

pub fn count(v: u64) -> Count {
    BigUint::from(v)
}

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> Count {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn triangle_value(
    table: &LazyLock<Mutex<Vec<Vec<Count>>>>,
    n: u64,
    k: u64,
    step: impl Fn(&[Vec<Count>], usize, usize) -> Count,
) -> Count {
    let mut rows = table.lock().unwrap();
    while rows.len() <= n as usize {
        let i = rows.len();
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..=i {
            row.push(step(&rows, i, j));
        }
        rows.push(row);
    }
    rows[n as usize].get(k as usize).cloned().unwrap_or_default()
}

static STIRLING2: LazyLock<Mutex<Vec<Vec<Count>>>> = LazyLock::new(|| Mutex::new(Vec::new()));
static STIRLING1: LazyLock<Mutex<Vec<Vec<Count>>>> = LazyLock::new(|| Mutex::new(Vec::new()));

/// Stirling numbers of the second kind: partitions of `[n]` into `k`
/// nonempty parts. `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: u64, k: u64) -> Count {
    if k > n {
        return BigUint::zero();
    }
    triangle_value(&STIRLING2, n, k, |rows, i, j| {
        if i == 0 {
            return if j == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if j == 0 {
            return BigUint::zero();
        }
        BigUint::from(j as u64) * &rows[i - 1].get(j).cloned().unwrap_or_default()
            + &rows[i - 1][j - 1]
    })
}

/// Unsigned Stirling numbers of the first kind: permutations of `[n]` with
/// `k` cycles. `s(n,k) = (n-1) s(n-1,k) + s(n-1,k-1)`.
pub fn stirling1_unsigned(n: u64, k: u64) -> Count {
    if k > n {
        return BigUint::zero();
    }
    triangle_value(&STIRLING1, n, k, |rows, i, j| {
        if i == 0 {
            return if j == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if j == 0 {
            return BigUint::zero();
        }
        BigUint::from((i - 1) as u64) * &rows[i - 1].get(j).cloned().unwrap_or_default()
            + &rows[i - 1][j - 1]
    })
}

/// `n`th Fubini number `Fub_n = sum_k k! S(n,k)`, the number of ordered set
/// partitions of `[n]`. `Fub_0 = 1`.
pub fn fubini(n: u64) -> Count {
    (0..=n).map(|k| factorial(k) * stirling2(n, k)).sum()
}

static FIBONACCI: LazyLock<Mutex<HashMap<(u64, u64), Count>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Order-`k` generalized Fibonacci value: `a(0) = a(1) = 1` and for
/// `n >= 2`, `a(n)` is the sum of the previous `min(k, n-1)` values.
///
/// Order 2 yields 1, 1, 1, 2, 3, 5, 8, ... at `n = 0, 1, 2, ...`; higher
/// orders sum more history and approach powers of two.
pub fn fibonacci_order(k: u64, n: u64) -> Count {
    assert!(k >= 1, "order must be positive");
    if n <= 1 {
        return BigUint::one();
    }
    if let Some(v) = FIBONACCI.lock().unwrap().get(&(k, n)) {
        return v.clone();
    }
    let window = k.min(n - 1);
    let v: Count = (1..=window).map(|j| fibonacci_order(k, n - j)).sum();
    FIBONACCI.lock().unwrap().insert((k, n), v.clone());
    v
}

/// Integer polynomial with ascending coefficients; trailing zeros trimmed,
/// the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `self - t * other`, the step of the Kreweras recurrence.
    fn sub_shifted(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len() + 1);
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i + 1] -= c;
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

static KREWERAS: LazyLock<Mutex<Vec<IntPolynomial>>> =
    LazyLock::new(|| Mutex::new(vec![IntPolynomial::one(), IntPolynomial::one()]));

/// The `k`th Kreweras polynomial `f_k`.
pub fn kreweras_poly(k: u64) -> IntPolynomial {
    let mut polys = KREWERAS.lock().unwrap();
    while polys.len() <= k as usize {
        let next = polys[polys.len() - 1].sub_shifted(&polys[polys.len() - 2]);
        polys.push(next);
    }
    polys[k as usize].clone()
}

/// First `n_max + 1` power-series coefficients of `f_k / f_{k+1}`, computed
/// by exact long division. The coefficient at index `n` counts Dyck paths of
/// semilength `n` with height at most `k`.
pub fn bounded_height_series(k: u64, n_max: usize) -> Vec<Count> {
    let num = kreweras_poly(k);
    let den = kreweras_poly(k + 1);
    // den has constant term 1, so the quotient is an integer series.
    debug_assert!(den.coeff(0).is_one());
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for i in 0..=n_max {
        let mut c = num.coeff(i);
        for j in 1..=i.min(den.coeffs().len().saturating_sub(1)) {
            c -= den.coeff(j) * &out[i - j];
        }
        out.push(c);
    }
    out.into_iter()
        .map(|c| {
            c.to_biguint()
                .expect("bounded-height series coefficients are nonnegative")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        count(v)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), c(6));
        assert_eq!(binomial(7, 0), c(1));
        assert_eq!(binomial(3, 5), c(0));
        assert_eq!(binomial(3, -1), c(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn stirling2_against_brute_force() {
        // Oracle: enumerate set partitions as restricted growth strings.
        fn brute(n: usize, k: usize) -> u64 {
            fn rec(labels: &mut Vec<usize>, used: usize, n: usize, k: usize) -> u64 {
                if labels.len() == n {
                    return (used == k) as u64;
                }
                let mut total = 0;
                for v in 0..=used.min(k - 1) {
                    labels.push(v);
                    total += rec(labels, used.max(v + 1), n, k);
                    labels.pop();
                }
                total
            }
            if n == 0 || k == 0 {
                return (n == 0 && k == 0) as u64;
            }
            rec(&mut Vec::new(), 0, n, k)
        }
        for n in 0..=8u64 {
            for k in 0..=8u64 {
                assert_eq!(stirling2(n, k), c(brute(n as usize, k as usize)), "S({n},{k})");
            }
        }
        assert_eq!(stirling2(4, 2), c(7));
        assert_eq!(stirling2(5, 5), c(1));
        assert_eq!(stirling2(5, 0), c(0));
    }

    #[test]
    fn stirling1_against_brute_force() {
        // Oracle: count cycles over all permutations of [n].
        fn cycles(perm: &[usize]) -> usize {
            let mut seen = vec![false; perm.len()];
            let mut count = 0;
            for start in 0..perm.len() {
                if seen[start] {
                    continue;
                }
                count += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                }
            }
            count
        }
        fn brute(n: usize, k: usize) -> u64 {
            fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
                if items.is_empty() {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for (i, &x) in items.iter().enumerate() {
                    let mut rest = items.clone();
                    rest.remove(i);
                    for mut p in permutations(rest) {
                        p.insert(0, x);
                        out.push(p);
                    }
                }
                out
            }
            permutations((0..n).collect())
                .into_iter()
                .filter(|p| cycles(p) == k)
                .count() as u64
        }
        for n in 0..=6u64 {
            for k in 0..=6u64 {
                assert_eq!(
                    stirling1_unsigned(n, k),
                    c(brute(n as usize, k as usize)),
                    "s({n},{k})"
                );
            }
        }
        assert_eq!(stirling1_unsigned(3, 1), c(2));
        assert_eq!(stirling1_unsigned(3, 2), c(3));
        assert_eq!(stirling1_unsigned(3, 3), c(1));
        assert_eq!(stirling1_unsigned(4, 2), c(11));
    }

    #[test]
    fn stirling_identities() {
        for n in 0..=12u64 {
            let total: Count = (0..=n).map(|k| stirling1_unsigned(n, k)).sum();
            assert_eq!(total, factorial(n));
            let fub: Count = (0..=n).map(|k| factorial(k) * stirling2(n, k)).sum();
            assert_eq!(fub, fubini(n));
        }
    }

    #[test]
    fn fubini_examples() {
        let expected = [1u64, 1, 3, 13, 75, 541, 4683, 47293];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(fubini(n as u64), c(v));
        }
    }

    #[test]
    fn fibonacci_order_rows() {
        let fib: Vec<Count> = (1..=11).map(|n| fibonacci_order(2, n)).collect();
        let want = [1u64, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        assert_eq!(fib, want.map(c).to_vec());
        assert_eq!(fibonacci_order(3, 11), c(274));
        assert_eq!(fibonacci_order(4, 9), c(108));
        assert_eq!(fibonacci_order(5, 1), c(1));
    }

    #[test]
    fn kreweras_small() {
        assert_eq!(kreweras_poly(0), IntPolynomial::one());
        assert_eq!(kreweras_poly(1), IntPolynomial::one());
        assert_eq!(kreweras_poly(2).to_string(), "1 - t");
        assert_eq!(kreweras_poly(3).to_string(), "1 - 2t");
        assert_eq!(kreweras_poly(4).to_string(), "1 - 3t + t^2");
    }

    #[test]
    fn series_small_heights() {
        assert_eq!(bounded_height_series(1, 5), [1u64, 1, 1, 1, 1, 1].map(c));
        assert_eq!(bounded_height_series(2, 5), [1u64, 1, 2, 4, 8, 16].map(c));
        assert_eq!(bounded_height_series(2, 3)[3], c(4));
    }

    #[test]
    fn series_stabilizes_at_catalan() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        let series = bounded_height_series(12, 10);
        assert_eq!(series, catalan.map(c).to_vec());
        // Entrywise nondecreasing in k; equal to Catalan once k >= n.
        for k in 1..12 {
            let lo = bounded_height_series(k, 10);
            let hi = bounded_height_series(k + 1, 10);
            for i in 0..=10 {
                assert!(lo[i] <= hi[i]);
                if (k as usize) >= i {
                    assert_eq!(lo[i], c(catalan[i]));
                }
            }
        }
    }

    #[test]
    fn series_division_matches_coefficient_recurrence() {
        // Independent route: c_n(k) counts height-capped prefix walks via a
        // transfer recurrence on partial heights instead of long division.
        fn by_transfer(k: usize, n_max: usize) -> Vec<Count> {
            // walks of 2n steps from height 0 back to 0, staying in [0, k]
            let mut out = Vec::new();
            for n in 0..=n_max {
                let steps = 2 * n;
                let mut state = vec![BigUint::zero(); k + 1];
                state[0] = BigUint::one();
                for _ in 0..steps {
                    let mut next = vec![BigUint::zero(); k + 1];
                    for h in 0..=k {
                        if !state[h].is_zero() {
                            if h + 1 <= k {
                                next[h + 1] += &state[h];
                            }
                            if h >= 1 {
                                next[h - 1] += &state[h];
                            }
                        }
                    }
                    state = next;
                }
                out.push(state[0].clone());
            }
            out
        }
        for k in 1..=6u64 {
            assert_eq!(bounded_height_series(k, 9), by_transfer(k as usize, 9));
        }
    }
}
