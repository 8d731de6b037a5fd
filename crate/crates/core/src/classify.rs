//! Membership predicates for every family handled by this crate.
//!
//! Simulation is the ground truth for all parking-based predicates. The
//! sorted-inequality characterizations exist as fast paths but are only
//! trusted because the oracle sweeps prove them equivalent to simulation.

use crate::error::{Error, Result};
use crate::simulate::{displacements, park, park_interval};
use std::fmt;

/// Names a combinatorial family together with its parameters.
///
/// `m` defaults to `n` for the square families; `l` is the displacement
/// bound where applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// Rational parking functions `PF_{n,m}`.
    Pf { n: usize, m: usize },
    /// Nondecreasing rational parking functions.
    NdPf { n: usize, m: usize },
    /// Interval parking function pairs `(alpha, beta)`.
    IpfPair { n: usize, m: usize },
    /// `l`-interval rational parking functions `IPF_{n,m}(l)`.
    EllIpf { n: usize, m: usize, l: usize },
    /// Nondecreasing `l`-interval rational parking functions.
    NdEllIpf { n: usize, m: usize, l: usize },
    /// Fubini rankings of length `n`.
    Fubini { n: usize },
    /// `l`-interval Fubini rankings.
    EllFubini { n: usize, l: usize },
    /// Nondecreasing `l`-interval Fubini rankings.
    NdEllFubini { n: usize, l: usize },
    /// Unit interval rational parking functions `IPF_{n,m}(1)`.
    Uirpf { n: usize, m: usize },
}

impl FamilyTag {
    pub fn validate(&self) -> Result<()> {
        let (n, m) = match *self {
            FamilyTag::Pf { n, m }
            | FamilyTag::NdPf { n, m }
            | FamilyTag::IpfPair { n, m }
            | FamilyTag::EllIpf { n, m, .. }
            | FamilyTag::NdEllIpf { n, m, .. }
            | FamilyTag::Uirpf { n, m } => (n, m),
            FamilyTag::Fubini { n }
            | FamilyTag::EllFubini { n, .. }
            | FamilyTag::NdEllFubini { n, .. } => (n, n),
        };
        if m < n {
            return Err(Error::MalformedInput(format!(
                "family requires m >= n, got n={n}, m={m}"
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTag::Pf { n, m } => write!(f, "PF(n={n},m={m})"),
            FamilyTag::NdPf { n, m } => write!(f, "NDPF(n={n},m={m})"),
            FamilyTag::IpfPair { n, m } => write!(f, "IPF_pair(n={n},m={m})"),
            FamilyTag::EllIpf { n, m, l } => write!(f, "ELL_IPF(n={n},m={m},l={l})"),
            FamilyTag::NdEllIpf { n, m, l } => write!(f, "ND_ELL_IPF(n={n},m={m},l={l})"),
            FamilyTag::Fubini { n } => write!(f, "FUBINI(n={n})"),
            FamilyTag::EllFubini { n, l } => write!(f, "ELL_FUBINI(n={n},l={l})"),
            FamilyTag::NdEllFubini { n, l } => write!(f, "ND_ELL_FUBINI(n={n},l={l})"),
            FamilyTag::Uirpf { n, m } => write!(f, "UIRPF(n={n},m={m})"),
        }
    }
}

/// True iff all cars park under the standard parking procedure.
pub fn is_rational_pf(prefs: &[usize], m: usize) -> Result<bool> {
    Ok(park(prefs, m)?.succeeded())
}

/// True iff all cars park and no car is displaced more than `l` spots.
pub fn is_ell_interval(prefs: &[usize], m: usize, l: usize) -> Result<bool> {
    match park(prefs, m)?.into_outcome() {
        Some(outcome) => {
            let d = displacements(prefs, &outcome)?;
            Ok(d.into_iter().all(|x| x <= l))
        }
        None => Ok(false),
    }
}

/// True iff every car parks within its preference interval `[a_i, b_i]`.
pub fn is_interval_pf(prefs: &[usize], tol: &[usize], m: usize) -> Result<bool> {
    Ok(park_interval(prefs, tol, m)?.succeeded())
}

/// True iff `t` is a valid ranking with ties: a `k`-way tie at rank `r`
/// disallows ranks `r+1, ..., r+k-1`, and the used ranks are exactly the
/// greedy sequence starting at 1. The empty tuple is a valid ranking.
pub fn is_fubini_ranking(t: &[usize]) -> Result<bool> {
    let n = t.len();
    let mut mult = vec![0usize; n + 1];
    for &r in t {
        if r < 1 || r > n {
            return Err(Error::MalformedInput(format!(
                "rank {r} outside [1, {n}]"
            )));
        }
        mult[r] += 1;
    }
    // Walk the greedy rank sequence 1, 1 + mult(1), ... Every visited rank
    // must be used; since the multiplicities sum to n, reaching past n means
    // no off-sequence rank was used either.
    let mut next = 1;
    while next <= n {
        if mult[next] == 0 {
            return Ok(false);
        }
        next += mult[next];
    }
    Ok(true)
}

/// True iff entries weakly increase. The empty tuple qualifies.
pub fn is_nondecreasing(t: &[usize]) -> bool {
    t.windows(2).all(|w| w[0] <= w[1])
}

/// Sorted-inequality characterization of rational parking functions:
/// the nondecreasing rearrangement must satisfy `a'_i <= m - n + i`.
/// Kept equivalent to [`is_rational_pf`] by the oracle sweeps.
pub fn is_rational_pf_sorted(prefs: &[usize], m: usize) -> Result<bool> {
    let n = prefs.len();
    if n > m {
        return Err(Error::MalformedInput(format!(
            "{n} cars cannot park on {m} spots"
        )));
    }
    for &a in prefs {
        if a < 1 || a > m {
            return Err(Error::MalformedInput(format!("preference {a} outside [1, {m}]")));
        }
    }
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().enumerate().all(|(i, &a)| a <= m - n + i + 1))
}

/// Membership in the family named by `tag`. Pairs are not covered here;
/// use [`is_interval_pf`] for `IpfPair`.
pub fn is_member(tag: &FamilyTag, t: &[usize]) -> Result<bool> {
    tag.validate()?;
    let check_len = |n: usize| -> Result<()> {
        if t.len() != n {
            return Err(Error::MalformedInput(format!(
                "expected a tuple of length {n}, got {}",
                t.len()
            )));
        }
        Ok(())
    };
    match *tag {
        FamilyTag::Pf { n, m } => {
            check_len(n)?;
            is_rational_pf(t, m)
        }
        FamilyTag::NdPf { n, m } => {
            check_len(n)?;
            Ok(is_nondecreasing(t) && is_rational_pf(t, m)?)
        }
        FamilyTag::EllIpf { n, m, l } => {
            check_len(n)?;
            is_ell_interval(t, m, l)
        }
        FamilyTag::NdEllIpf { n, m, l } => {
            check_len(n)?;
            Ok(is_nondecreasing(t) && is_ell_interval(t, m, l)?)
        }
        FamilyTag::Fubini { n } => {
            check_len(n)?;
            is_fubini_ranking(t)
        }
        FamilyTag::EllFubini { n, l } => {
            check_len(n)?;
            Ok(is_fubini_ranking(t)? && is_ell_interval(t, n, l)?)
        }
        FamilyTag::NdEllFubini { n, l } => {
            check_len(n)?;
            Ok(is_nondecreasing(t)
                && is_fubini_ranking(t)?
                && is_ell_interval(t, n, l)?)
        }
        FamilyTag::Uirpf { n, m } => {
            check_len(n)?;
            is_ell_interval(t, m, 1)
        }
        FamilyTag::IpfPair { .. } => Err(Error::MalformedInput(
            "interval pairs need a tolerance vector; use is_interval_pf".into(),
        )),
    }
}
