//! Counting formulas for every family, exact and memoized.
//!
//! The recursive counters memoize on their full parameter tuple behind a
//! mutex, so they are callable from any thread. Counters that enumerate a
//! search space take an explicit candidate cap and fail with `ScaleExceeded`
//! rather than running away.

use crate::classify::FamilyTag;
use crate::error::{Error, Result};
use crate::lattice;
use crate::numbers::{
    binomial, bounded_height_series, count, factorial, fubini, fibonacci_order,
    stirling1_unsigned, stirling2, Count,
};
use crate::oracle;
use crate::simulate::park;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

/// Default cap on enumerated candidates for the oracle-backed counters.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// `|PF_{n,m}| = (m + 1 - n)(m + 1)^{n-1}`.
pub fn count_rational_pf(n: u64, m: u64) -> Result<Count> {
    if n == 0 || n > m {
        return Err(Error::OutOfDomain(format!(
            "count_rational_pf requires 1 <= n <= m, got n={n}, m={m}"
        )));
    }
    Ok(count(m + 1 - n) * count(m + 1).pow((n - 1) as u32))
}

/// `|IPF_n| = n! (n + 1)^{n-1}`.
pub fn count_ipf(n: u64) -> Result<Count> {
    if n == 0 {
        return Err(Error::OutOfDomain("count_ipf requires n >= 1".into()));
    }
    Ok(factorial(n) * count(n + 1).pow((n - 1) as u32))
}

/// `|IPF_{n,m}|` as the sum over all rational parking functions of the
/// product of `m - i + 1` over occupied spots `i`: each occupied spot leaves
/// that many choices of tolerance for the car parked there. There is no
/// closed form; the parking functions are enumerated directly.
pub fn count_irpf(n: u64, m: u64, cap: u64) -> Result<Count> {
    if n == 0 || n > m {
        return Err(Error::OutOfDomain(format!(
            "count_irpf requires 1 <= n <= m, got n={n}, m={m}"
        )));
    }
    let candidates = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if candidates > cap as u128 {
        return Err(Error::ScaleExceeded {
            candidates,
            cap: cap as u128,
        });
    }
    let mut total = BigUint::zero();
    let mut prefs = vec![1usize; n as usize];
    loop {
        if let Some(outcome) = park(&prefs, m as usize)?.into_outcome() {
            let mut product = BigUint::one();
            for spot in outcome.occupied_spots() {
                product *= count(m - spot as u64 + 1);
            }
            total += product;
        }
        if !next_tuple(&mut prefs, m as usize) {
            break;
        }
    }
    Ok(total)
}

/// Advances `t` to the next tuple over `[1, m]^n` in lexicographic order;
/// returns false after the last one.
pub(crate) fn next_tuple(t: &mut [usize], m: usize) -> bool {
    for i in (0..t.len()).rev() {
        if t[i] < m {
            t[i] += 1;
            return true;
        }
        t[i] = 1;
    }
    false
}

static ELL_IPF: LazyLock<Mutex<HashMap<(u64, u64), Count>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `|IPF_n(l)|` by the square recursion: split on the spot `z` left empty by
/// the first `n - 1` cars, with `min(z, l + 1)` preferences available to the
/// last car.
pub fn count_ell_ipf(n: u64, l: u64) -> Count {
    if n == 0 {
        return BigUint::one();
    }
    if let Some(v) = ELL_IPF.lock().unwrap().get(&(n, l)) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for x in 0..n {
        total += binomial(n - 1, x as i64)
            * count((x + 1).min(l + 1))
            * count_ell_ipf(x, l)
            * count_ell_ipf(n - 1 - x, l);
    }
    ELL_IPF.lock().unwrap().insert((n, l), total.clone());
    total
}

static ELL_IRPF: LazyLock<Mutex<HashMap<(u64, i64, u64), Count>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `|IPF_{n,m}(l)|` by the rational recursion on the spot `z` taken by the
/// last car and the run of `L` cars parked immediately to its left.
///
/// Boundary conventions: the empty preference list counts 1 for any street
/// (including the degenerate streets of length 0 and -1 produced by the
/// inner term `z - L - 2`), and no positive number of cars parks on a street
/// shorter than the car count.
pub fn count_ell_irpf(n: u64, m: u64, l: u64) -> Count {
    ell_irpf_signed(n, m as i64, l)
}

fn ell_irpf_signed(n: u64, m: i64, l: u64) -> Count {
    if n == 0 {
        return BigUint::one();
    }
    if m < n as i64 {
        return BigUint::zero();
    }
    if m == n as i64 {
        return count_ell_ipf(n, l);
    }
    if let Some(v) = ELL_IRPF.lock().unwrap().get(&(n, m, l)) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for z in 1..=m {
        for k in 0..(z.min(n as i64)) {
            let k = k as u64;
            let mut inner = BigUint::zero();
            for run in 0..=k {
                inner += binomial(k, run as i64)
                    * count(l.min(run) + 1)
                    * ell_irpf_signed(k - run, z - run as i64 - 2, l)
                    * count_ell_ipf(run, l);
            }
            total += binomial(n - 1, k as i64) * ell_irpf_signed(n - 1 - k, m - z, l) * inner;
        }
    }
    ELL_IRPF.lock().unwrap().insert((n, m, l), total.clone());
    total
}

/// `|IPF_n^up(l)|`: nondecreasing `l`-interval parking functions of length
/// `n`, read off the bounded-height path series `f_{l+1} / f_{l+2}`.
pub fn count_nd_ell_ipf(n: u64, l: u64) -> Count {
    bounded_height_series(l + 1, n as usize)[n as usize].clone()
}

/// `|IPF_{n,m}^up(l)|` for `m > n`: choose the `m - n` spots left empty and
/// multiply the square counts of the runs of consecutive cars between them.
/// The run after the last empty spot contributes a factor as well (the
/// gap sequence is read against a sentinel empty spot at `m + 1`).
pub fn count_nd_ell_irpf(n: u64, m: u64, l: u64) -> Result<Count> {
    if m <= n {
        return Err(Error::OutOfDomain(format!(
            "count_nd_ell_irpf requires m > n, got n={n}, m={m}; use count_nd_ell_ipf for m = n"
        )));
    }
    let series = bounded_height_series(l + 1, m as usize);
    let zeros = (m - n) as usize;
    let mut total = BigUint::zero();
    let mut combo: Vec<usize> = (1..=zeros).collect();
    loop {
        let mut product = BigUint::one();
        let mut prev = 0usize;
        for &z in &combo {
            product *= &series[z - prev - 1];
            prev = z;
        }
        product *= &series[m as usize - prev];
        total += product;
        if !next_combination(&mut combo, m as usize) {
            break;
        }
    }
    Ok(total)
}

/// Advances an ascending `k`-combination of `[1, m]`; false after the last.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < m - (k - 1 - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Nondecreasing `l`-interval Fubini ranking counts in the indexing of the
/// generalized Fibonacci rows: value 1 at `n = 0` and `n = 1`, then each
/// value sums the previous `min(l + 1, n - 1)` values.
///
/// Note the offset: the value at index `n` equals the number of
/// nondecreasing `l`-interval Fubini rankings of length `n - 1` as counted
/// by direct enumeration. The `verify` registry pins this relation.
pub fn count_nd_ell_fubini(n: u64, l: u64) -> Count {
    fibonacci_order(l + 1, n)
}

/// `|IPF_{n,m}(1)|` via unsigned Stirling numbers of the first kind:
/// `(1 / (2^b b!)) sum_i s(b+1, i+1) |IPF_{n+i}(1)|` with `b = m - n`.
/// The division is exact; a remainder signals an implementation bug.
pub fn count_uirpf_stirling1(n: u64, m: u64) -> Result<Count> {
    if m < 1 || m < n {
        return Err(Error::OutOfDomain(format!(
            "count_uirpf_stirling1 requires 1 <= n <= m, got n={n}, m={m}"
        )));
    }
    let b = m - n;
    let mut numerator = BigUint::zero();
    for i in 0..=b {
        numerator += stirling1_unsigned(b + 1, i + 1) * count_ell_ipf(n + i, 1);
    }
    let denominator = count(2).pow(b as u32) * factorial(b);
    if (&numerator % &denominator) != BigUint::zero() {
        return Err(Error::NonIntegerResult(format!(
            "{numerator} not divisible by {denominator} at n={n}, m={m}"
        )));
    }
    Ok(numerator / denominator)
}

/// `|IPF_{n,m}(1)|` via Stirling numbers of the second kind:
/// `sum_k k! S(n,k) C(m-n+k, k)`.
pub fn count_uirpf_stirling2(n: u64, m: u64) -> Result<Count> {
    if m < n {
        return Err(Error::OutOfDomain(format!(
            "count_uirpf_stirling2 requires n <= m, got n={n}, m={m}"
        )));
    }
    let mut total = BigUint::zero();
    for k in 0..=n {
        total += factorial(k) * stirling2(n, k) * binomial(m - n + k, k as i64);
    }
    Ok(total)
}

/// How a count is computed; not every method applies to every family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Recursion,
    GeneratingFunction,
    BijectionImage,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Recursion => "recursion",
            Method::GeneratingFunction => "generating_function",
            Method::BijectionImage => "bijection_image",
            Method::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed_form" | "closed-form" => Ok(Method::ClosedForm),
            "recursion" => Ok(Method::Recursion),
            "generating_function" | "generating-function" => Ok(Method::GeneratingFunction),
            "bijection_image" | "bijection-image" => Ok(Method::BijectionImage),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::MalformedInput(format!("unknown method {s:?}"))),
        }
    }
}

/// A counting request: which family, which route.
#[derive(Debug, Clone, Copy)]
pub struct CountQuery {
    pub family: FamilyTag,
    pub method: Method,
}

/// The methods that can answer a count for `tag`, preferred first.
pub fn applicable_methods(tag: &FamilyTag) -> Vec<Method> {
    use Method::*;
    match *tag {
        FamilyTag::Pf { .. } => vec![ClosedForm, Oracle],
        FamilyTag::IpfPair { n, m } if n == m => vec![ClosedForm, Recursion, Oracle],
        FamilyTag::IpfPair { .. } => vec![Recursion, Oracle],
        FamilyTag::EllIpf { .. } => vec![Recursion, Oracle],
        FamilyTag::NdPf { n, m } if n == m => {
            vec![GeneratingFunction, BijectionImage, Oracle]
        }
        FamilyTag::NdPf { .. } => vec![Recursion, BijectionImage, Oracle],
        FamilyTag::NdEllIpf { n, m, .. } if n == m => {
            vec![GeneratingFunction, BijectionImage, Oracle]
        }
        FamilyTag::NdEllIpf { .. } => vec![Recursion, BijectionImage, Oracle],
        FamilyTag::Fubini { .. } => vec![ClosedForm, Oracle],
        FamilyTag::EllFubini { .. } => vec![Oracle],
        FamilyTag::NdEllFubini { .. } => vec![Recursion, Oracle],
        FamilyTag::Uirpf { .. } => vec![ClosedForm, Recursion, Oracle],
    }
}

/// Answers a count query, dispatching to the formula behind each method.
pub fn count_query(q: &CountQuery, cap: u64) -> Result<Count> {
    q.family.validate()?;
    if !applicable_methods(&q.family).contains(&q.method) {
        return Err(Error::MalformedInput(format!(
            "method {} does not apply to {}",
            q.method.name(),
            q.family
        )));
    }
    match (q.family, q.method) {
        (FamilyTag::Pf { n, m }, Method::ClosedForm) => count_rational_pf(n as u64, m as u64),
        (FamilyTag::IpfPair { n, m }, Method::ClosedForm) => {
            debug_assert_eq!(n, m);
            count_ipf(n as u64)
        }
        (FamilyTag::IpfPair { n, m }, Method::Recursion) => count_irpf(n as u64, m as u64, cap),
        (FamilyTag::EllIpf { n, m, l }, Method::Recursion) => {
            Ok(count_ell_irpf(n as u64, m as u64, l as u64))
        }
        (FamilyTag::NdPf { n, m }, method) => {
            // unrestricted nondecreasing counts are the l = m case
            let tag = FamilyTag::NdEllIpf { n, m, l: m.max(1) };
            count_query(&CountQuery { family: tag, method }, cap)
        }
        (FamilyTag::NdEllIpf { n, l, .. }, Method::GeneratingFunction) => {
            Ok(count_nd_ell_ipf(n as u64, l as u64))
        }
        (FamilyTag::NdEllIpf { n, m, l }, Method::Recursion) => {
            count_nd_ell_irpf(n as u64, m as u64, l as u64)
        }
        (FamilyTag::NdEllIpf { n, m, l }, Method::BijectionImage) => {
            Ok(count(lattice::generate_dyck(n, m, Some(l + 1))?.len() as u64))
        }
        (FamilyTag::Fubini { n }, Method::ClosedForm) => Ok(fubini(n as u64)),
        (FamilyTag::NdEllFubini { n, l }, Method::Recursion) => {
            Ok(count_nd_ell_fubini(n as u64, l as u64))
        }
        (FamilyTag::Uirpf { n, m }, Method::ClosedForm) => {
            count_uirpf_stirling2(n as u64, m as u64)
        }
        (FamilyTag::Uirpf { n, m }, Method::Recursion) => {
            count_uirpf_stirling1(n as u64, m as u64)
        }
        (family, Method::Oracle) => oracle::count_family(&family, cap),
        _ => unreachable!("applicable_methods gate"),
    }
}
