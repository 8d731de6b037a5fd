//! Exhaustive enumeration at desk scale, the independent ground truth for
//! every formula and bijection in this crate.
//!
//! Membership goes through `simulate`/`classify` only; nothing here calls
//! the counting formulas or bijections under test, so the cross-checks in
//! the registry genuinely compare two separate computations.

use crate::arrange::{bpa_to_uirpf, fubini_to_pa, generate_bpa, pa_to_fubini, uirpf_to_bpa};
use crate::classify::{is_interval_pf, is_member, FamilyTag};
use crate::count::{
    self, next_tuple, count_ell_ipf, count_ell_irpf, count_ipf, count_irpf, count_nd_ell_fubini,
    count_nd_ell_ipf, count_nd_ell_irpf, count_rational_pf, count_uirpf_stirling1,
    count_uirpf_stirling2,
};
use crate::error::{Error, Result};
use crate::lattice::{dyck_to_prefs, generate_dyck_capped, prefs_to_dyck};
use crate::numbers::{count as big, fubini, Count};
use crate::tuple::format_tuple;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// A single enumerated object: a preference/rank tuple, or an interval
/// pair of preferences and tolerances.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Member {
    Tuple(Vec<usize>),
    Pair(Vec<usize>, Vec<usize>),
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Tuple(t) => f.write_str(&format_tuple(t)),
            Member::Pair(a, b) => write!(f, "{} {}", format_tuple(a), format_tuple(b)),
        }
    }
}

fn candidate_count(m: usize, n: usize, squared: bool) -> u128 {
    let base = (m.max(1) as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if squared {
        base.checked_mul(base).unwrap_or(u128::MAX)
    } else {
        base
    }
}

/// Every member of the family, in lexicographic order. For interval pairs
/// the order is lexicographic on the concatenation of preferences and
/// tolerances.
pub fn enumerate_family(tag: &FamilyTag, cap: u64) -> Result<Vec<Member>> {
    tag.validate()?;
    let (n, m, pairs) = match *tag {
        FamilyTag::Pf { n, m }
        | FamilyTag::NdPf { n, m }
        | FamilyTag::EllIpf { n, m, .. }
        | FamilyTag::NdEllIpf { n, m, .. }
        | FamilyTag::Uirpf { n, m } => (n, m, false),
        FamilyTag::IpfPair { n, m } => (n, m, true),
        FamilyTag::Fubini { n }
        | FamilyTag::EllFubini { n, .. }
        | FamilyTag::NdEllFubini { n, .. } => (n, n, false),
    };
    let candidates = candidate_count(m, n, pairs);
    if candidates > cap as u128 {
        return Err(Error::ScaleExceeded {
            candidates,
            cap: cap as u128,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        if !pairs && is_member(tag, &[])? {
            out.push(Member::Tuple(Vec::new()));
        } else if pairs {
            out.push(Member::Pair(Vec::new(), Vec::new()));
        }
        return Ok(out);
    }
    if pairs {
        let mut prefs = vec![1usize; n];
        loop {
            let mut tol = vec![1usize; n];
            loop {
                if prefs.iter().zip(&tol).all(|(a, b)| b >= a)
                    && is_interval_pf(&prefs, &tol, m)?
                {
                    out.push(Member::Pair(prefs.clone(), tol.clone()));
                }
                if !next_tuple(&mut tol, m) {
                    break;
                }
            }
            if !next_tuple(&mut prefs, m) {
                break;
            }
        }
    } else {
        let mut t = vec![1usize; n];
        loop {
            if is_member(tag, &t)? {
                out.push(Member::Tuple(t.clone()));
            }
            if !next_tuple(&mut t, m) {
                break;
            }
        }
    }
    Ok(out)
}

/// `|family|` by brute force.
pub fn count_family(tag: &FamilyTag, cap: u64) -> Result<Count> {
    Ok(big(enumerate_family(tag, cap)?.len() as u64))
}

/// One compared parameter point.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationRecord {
    pub identity: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The outcome of a verification sweep.
#[derive(Debug, Clone, Serialize, Default)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
}

impl VerificationReport {
    pub fn failures(&self) -> Vec<&VerificationRecord> {
        self.records
            .iter()
            .filter(|r| r.status == Status::Fail)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    fn push(&mut self, identity: &str, params: String, lhs: String, rhs: String) {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        self.records.push(VerificationRecord {
            identity: identity.to_string(),
            params,
            lhs,
            rhs,
            status,
        });
    }
}

/// The registered identity names, in the order `verify` runs them. The
/// final entry, `negative-selftest`, intentionally fails and is skipped by
/// the default sweep; it exists to prove the failure path works.
pub const IDENTITIES: &[&str] = &[
    "rational-pf-closed-form-vs-oracle",
    "square-interval-closed-form-vs-oracle",
    "interval-pair-sum-vs-oracle",
    "ell-ipf-recursion-vs-oracle",
    "ell-irpf-recursion-vs-oracle",
    "ell-irpf-square-consistency",
    "nd-ell-ipf-three-ways",
    "nd-ell-irpf-three-ways",
    "nd-ell-fubini-shift-vs-oracle",
    "fubini-closed-form-vs-oracle",
    "uirpf-stirling-formulas-vs-oracle",
    "dyck-prefs-round-trip",
    "fubini-pa-round-trip",
    "uirpf-bpa-round-trip",
    "negative-selftest",
];

/// Runs the registered identities over their default desk-scale sweeps.
/// `filter`, when given, selects a single identity by name. Identities
/// marked as negative self-tests only run when selected explicitly.
pub fn verify(filter: Option<&str>, cap: u64) -> Result<VerificationReport> {
    if let Some(name) = filter {
        if !IDENTITIES.contains(&name) {
            return Err(Error::UnknownIdentity(name.to_string()));
        }
    }
    let mut report = VerificationReport::default();
    let wanted = |name: &str| match filter {
        Some(f) => f == name,
        None => name != "negative-selftest",
    };

    if wanted("rational-pf-closed-form-vs-oracle") {
        for n in 1..=4usize {
            for m in n..=7 {
                report.push(
                    "rational-pf-closed-form-vs-oracle",
                    format!("n={n}, m={m}"),
                    count_rational_pf(n as u64, m as u64)?.to_string(),
                    count_family(&FamilyTag::Pf { n, m }, cap)?.to_string(),
                );
            }
        }
    }
    if wanted("square-interval-closed-form-vs-oracle") {
        for n in 1..=4usize {
            report.push(
                "square-interval-closed-form-vs-oracle",
                format!("n={n}"),
                count_ipf(n as u64)?.to_string(),
                count_family(&FamilyTag::IpfPair { n, m: n }, cap)?.to_string(),
            );
        }
    }
    if wanted("interval-pair-sum-vs-oracle") {
        for n in 1..=3usize {
            for m in n..=4 {
                report.push(
                    "interval-pair-sum-vs-oracle",
                    format!("n={n}, m={m}"),
                    count_irpf(n as u64, m as u64, cap)?.to_string(),
                    count_family(&FamilyTag::IpfPair { n, m }, cap)?.to_string(),
                );
            }
        }
    }
    if wanted("ell-ipf-recursion-vs-oracle") {
        for n in 1..=5usize {
            for l in 0..=4usize {
                report.push(
                    "ell-ipf-recursion-vs-oracle",
                    format!("n={n}, l={l}"),
                    count_ell_ipf(n as u64, l as u64).to_string(),
                    count_family(&FamilyTag::EllIpf { n, m: n, l }, cap)?.to_string(),
                );
            }
        }
    }
    if wanted("ell-irpf-recursion-vs-oracle") {
        for n in 1..=4usize {
            for m in n..=6 {
                for l in 0..=3usize {
                    report.push(
                        "ell-irpf-recursion-vs-oracle",
                        format!("n={n}, m={m}, l={l}"),
                        count_ell_irpf(n as u64, m as u64, l as u64).to_string(),
                        count_family(&FamilyTag::EllIpf { n, m, l }, cap)?.to_string(),
                    );
                }
            }
        }
    }
    if wanted("ell-irpf-square-consistency") {
        for n in 1..=8u64 {
            for l in 0..=6u64 {
                report.push(
                    "ell-irpf-square-consistency",
                    format!("n={n}, l={l}"),
                    count_ell_irpf(n, n, l).to_string(),
                    count_ell_ipf(n, l).to_string(),
                );
            }
        }
    }
    if wanted("nd-ell-ipf-three-ways") {
        for n in 1..=6usize {
            for l in 0..=4usize {
                let series = count_nd_ell_ipf(n as u64, l as u64).to_string();
                let image = generate_dyck_capped(n, n, Some(l + 1), cap)?.len().to_string();
                let oracle =
                    count_family(&FamilyTag::NdEllIpf { n, m: n, l }, cap)?.to_string();
                report.push(
                    "nd-ell-ipf-three-ways",
                    format!("n={n}, l={l} (series vs image)"),
                    series.clone(),
                    image,
                );
                report.push(
                    "nd-ell-ipf-three-ways",
                    format!("n={n}, l={l} (series vs oracle)"),
                    series,
                    oracle,
                );
            }
        }
    }
    if wanted("nd-ell-irpf-three-ways") {
        for n in 1..=4usize {
            for m in n + 1..=7 {
                for l in 0..=3usize {
                    let rec = count_nd_ell_irpf(n as u64, m as u64, l as u64)?.to_string();
                    let image = generate_dyck_capped(n, m, Some(l + 1), cap)?.len().to_string();
                    let oracle =
                        count_family(&FamilyTag::NdEllIpf { n, m, l }, cap)?.to_string();
                    report.push(
                        "nd-ell-irpf-three-ways",
                        format!("n={n}, m={m}, l={l} (recursion vs image)"),
                        rec.clone(),
                        image,
                    );
                    report.push(
                        "nd-ell-irpf-three-ways",
                        format!("n={n}, m={m}, l={l} (recursion vs oracle)"),
                        rec,
                        oracle,
                    );
                }
            }
        }
    }
    if wanted("nd-ell-fubini-shift-vs-oracle") {
        // the table-indexed sequence at n + 1 counts the sets of length n
        for n in 1..=6usize {
            for l in 1..=4usize {
                report.push(
                    "nd-ell-fubini-shift-vs-oracle",
                    format!("n={n}, l={l}"),
                    count_nd_ell_fubini(n as u64 + 1, l as u64).to_string(),
                    count_family(&FamilyTag::NdEllFubini { n, l }, cap)?.to_string(),
                );
            }
        }
    }
    if wanted("fubini-closed-form-vs-oracle") {
        for n in 1..=5usize {
            report.push(
                "fubini-closed-form-vs-oracle",
                format!("n={n}"),
                fubini(n as u64).to_string(),
                count_family(&FamilyTag::Fubini { n }, cap)?.to_string(),
            );
        }
    }
    if wanted("uirpf-stirling-formulas-vs-oracle") {
        for n in 1..=4usize {
            for m in n..=7 {
                let oracle = count_family(&FamilyTag::Uirpf { n, m }, cap)?.to_string();
                report.push(
                    "uirpf-stirling-formulas-vs-oracle",
                    format!("n={n}, m={m} (first kind)"),
                    count_uirpf_stirling1(n as u64, m as u64)?.to_string(),
                    oracle.clone(),
                );
                report.push(
                    "uirpf-stirling-formulas-vs-oracle",
                    format!("n={n}, m={m} (second kind)"),
                    count_uirpf_stirling2(n as u64, m as u64)?.to_string(),
                    oracle,
                );
            }
        }
    }
    if wanted("dyck-prefs-round-trip") {
        for n in 1..=4usize {
            for m in n..=7 {
                for l in 0..=3usize {
                    let words = generate_dyck_capped(n, m, Some(l + 1), cap)?;
                    let total = words.len();
                    let mut round = 0usize;
                    let mut image = BTreeSet::new();
                    for w in &words {
                        let prefs = dyck_to_prefs(w);
                        if prefs_to_dyck(&prefs, n, m)? == *w {
                            round += 1;
                        }
                        image.insert(prefs);
                    }
                    let expected: BTreeSet<Vec<usize>> =
                        enumerate_family(&FamilyTag::NdEllIpf { n, m, l }, cap)?
                            .into_iter()
                            .map(|mem| match mem {
                                Member::Tuple(t) => t,
                                Member::Pair(..) => unreachable!(),
                            })
                            .collect();
                    report.push(
                        "dyck-prefs-round-trip",
                        format!("n={n}, m={m}, l={l} (round trips)"),
                        total.to_string(),
                        round.to_string(),
                    );
                    report.push(
                        "dyck-prefs-round-trip",
                        format!("n={n}, m={m}, l={l} (image)"),
                        if image == expected { "equal" } else { "different" }.to_string(),
                        "equal".to_string(),
                    );
                }
            }
        }
    }
    if wanted("fubini-pa-round-trip") {
        for n in 1..=4usize {
            let members = enumerate_family(&FamilyTag::Fubini { n }, cap)?;
            let total = members.len();
            let mut round = 0usize;
            for mem in members {
                if let Member::Tuple(t) = mem {
                    if pa_to_fubini(&fubini_to_pa(&t)?) == t {
                        round += 1;
                    }
                }
            }
            report.push(
                "fubini-pa-round-trip",
                format!("n={n}"),
                total.to_string(),
                round.to_string(),
            );
        }
    }
    if wanted("uirpf-bpa-round-trip") {
        for n in 1..=3usize {
            for m in n..=6 {
                let members = enumerate_family(&FamilyTag::Uirpf { n, m }, cap)?;
                let total = members.len();
                let mut round = 0usize;
                for mem in &members {
                    if let Member::Tuple(t) = mem {
                        if bpa_to_uirpf(&uirpf_to_bpa(t, m)?) == *t {
                            round += 1;
                        }
                    }
                }
                let codomain = generate_bpa(n, m - n, cap)?;
                let mut reverse = 0usize;
                for q in &codomain {
                    if uirpf_to_bpa(&bpa_to_uirpf(q), m)? == *q {
                        reverse += 1;
                    }
                }
                report.push(
                    "uirpf-bpa-round-trip",
                    format!("n={n}, m={m} (forward)"),
                    total.to_string(),
                    round.to_string(),
                );
                report.push(
                    "uirpf-bpa-round-trip",
                    format!("n={n}, m={m} (reverse)"),
                    codomain.len().to_string(),
                    format!("{reverse}"),
                );
                report.push(
                    "uirpf-bpa-round-trip",
                    format!("n={n}, m={m} (cardinality)"),
                    total.to_string(),
                    codomain.len().to_string(),
                );
            }
        }
    }
    if wanted("negative-selftest") {
        // deliberately wrong on purpose: proves that a failing identity is
        // reported and surfaces through the exit code
        for n in 1..=3u64 {
            report.push(
                "negative-selftest",
                format!("n={n}"),
                count_ell_ipf(n, 1).to_string(),
                (count_ell_ipf(n, 1) + big(1)).to_string(),
            );
        }
    }
    Ok(report)
}

/// Convenience wrapper using the default cap.
pub fn verify_default(filter: Option<&str>) -> Result<VerificationReport> {
    verify(filter, count::DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::fibonacci_order;

    #[test]
    fn enumerate_examples() {
        let pf22 = enumerate_family(&FamilyTag::Pf { n: 2, m: 2 }, 1 << 20).unwrap();
        assert_eq!(
            pf22,
            vec![
                Member::Tuple(vec![1, 1]),
                Member::Tuple(vec![1, 2]),
                Member::Tuple(vec![2, 1]),
            ]
        );
        assert_eq!(
            enumerate_family(&FamilyTag::EllIpf { n: 3, m: 3, l: 1 }, 1 << 20)
                .unwrap()
                .len(),
            13
        );
        assert_eq!(
            enumerate_family(&FamilyTag::NdEllFubini { n: 4, l: 1 }, 1 << 20)
                .unwrap()
                .len(),
            // the length-5 value of the table-indexed Fibonacci sequence
            fibonacci_order(2, 5).to_string().parse::<usize>().unwrap()
        );
    }

    #[test]
    fn enumeration_is_deterministic_and_sorted() {
        let tag = FamilyTag::Uirpf { n: 3, m: 5 };
        let a = enumerate_family(&tag, 1 << 20).unwrap();
        let b = enumerate_family(&tag, 1 << 20).unwrap();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_family(&FamilyTag::Pf { n: 10, m: 10 }, 100),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn empty_tuples() {
        assert_eq!(
            enumerate_family(&FamilyTag::Fubini { n: 0 }, 10).unwrap(),
            vec![Member::Tuple(vec![])]
        );
    }

    #[test]
    fn unknown_identity_is_rejected() {
        assert!(matches!(
            verify_default(Some("no-such-identity")),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn negative_selftest_fails_on_purpose() {
        let report = verify_default(Some("negative-selftest")).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failures().len(), report.records.len());
    }

    #[test]
    fn single_identity_sweep_passes() {
        let report = verify_default(Some("fubini-closed-form-vs-oracle")).unwrap();
        assert!(report.passed());
        assert!(!report.records.is_empty());
    }
}
