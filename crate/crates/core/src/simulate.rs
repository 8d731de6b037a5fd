//! The standard parking procedure and its interval variant.
//!
//! `n` cars enter a one-way street with `m` spots. Car `i` drives to its
//! preferred spot and takes the first unoccupied spot at or after it. In the
//! interval variant car `i` additionally refuses any spot past its tolerance.
//! All operations here are pure; values are immutable after construction.

use crate::error::{Error, Result};
use std::fmt;

/// Which car, if any, occupies each of the `m` spots. Spot and car indices
/// are 1-based; an empty spot is printed as `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Outcome {
    slots: Vec<Option<usize>>,
}

impl Outcome {
    pub fn empty(m: usize) -> Self {
        Outcome {
            slots: vec![None; m],
        }
    }

    /// Builds an outcome from a slot vector where `0` means
    /// empty. Duplicate car indices are rejected.
    pub fn from_slots(raw: &[usize]) -> Result<Self> {
        let mut seen = vec![false; raw.len() + 1];
        let mut slots = Vec::with_capacity(raw.len());
        for &v in raw {
            if v == 0 {
                slots.push(None);
            } else {
                if v > raw.len() || seen[v] {
                    return Err(Error::MalformedInput(format!("bad outcome entry {v}")));
                }
                seen[v] = true;
                slots.push(Some(v));
            }
        }
        Ok(Outcome { slots })
    }

    /// Street length `m`.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    /// 1-based spot where `car` parked, if it parked.
    pub fn spot_of(&self, car: usize) -> Option<usize> {
        self.slots
            .iter()
            .position(|&s| s == Some(car))
            .map(|i| i + 1)
    }

    /// Ascending list of occupied spot indices, the set `I(alpha)`.
    pub fn occupied_spots(&self) -> Vec<usize> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|_| i + 1))
            .collect()
    }

    pub fn parked_cars(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| s.unwrap_or(0).to_string())
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Names the first car that could not park, together with the street state
/// at that moment. Failure cases are fixtures in their own right, so the
/// report carries the partial occupancy rather than a bare flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailureReport {
    pub car: usize,
    pub partial: Outcome,
}

/// Result of running the parking procedure on well-formed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParkResult {
    Parked(Outcome),
    Stuck(FailureReport),
}

impl ParkResult {
    pub fn succeeded(&self) -> bool {
        matches!(self, ParkResult::Parked(_))
    }

    pub fn outcome(&self) -> Option<&Outcome> {
        match self {
            ParkResult::Parked(o) => Some(o),
            ParkResult::Stuck(_) => None,
        }
    }

    pub fn into_outcome(self) -> Option<Outcome> {
        match self {
            ParkResult::Parked(o) => Some(o),
            ParkResult::Stuck(_) => None,
        }
    }
}

fn check_prefs(prefs: &[usize], m: usize) -> Result<()> {
    if prefs.len() > m {
        return Err(Error::MalformedInput(format!(
            "{} cars cannot park on {m} spots",
            prefs.len()
        )));
    }
    for (i, &a) in prefs.iter().enumerate() {
        if a < 1 || a > m {
            return Err(Error::MalformedInput(format!(
                "car {}: preference {a} outside [1, {m}]",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Runs the standard parking procedure: each car takes the first unoccupied
/// spot at or after its preference. The empty preference list parks
/// trivially and yields the all-empty outcome.
pub fn park(prefs: &[usize], m: usize) -> Result<ParkResult> {
    check_prefs(prefs, m)?;
    park_bounded(prefs, None, m)
}

/// Interval variant: car `i` gives up once the first free spot at or after
/// `prefs[i]` lies past `tol[i]`. A tolerance below its preference is a
/// structurally invalid pair and is rejected eagerly.
pub fn park_interval(prefs: &[usize], tol: &[usize], m: usize) -> Result<ParkResult> {
    if prefs.len() != tol.len() {
        return Err(Error::MalformedInput(format!(
            "preference list has length {} but tolerance vector has length {}",
            prefs.len(),
            tol.len()
        )));
    }
    check_prefs(prefs, m)?;
    for (i, (&a, &b)) in prefs.iter().zip(tol).enumerate() {
        if b > m {
            return Err(Error::MalformedInput(format!(
                "car {}: tolerance {b} outside [1, {m}]",
                i + 1
            )));
        }
        if b < a {
            return Err(Error::ToleranceBelowPreference {
                car: i + 1,
                preference: a,
                tolerance: b,
            });
        }
    }
    park_bounded(prefs, Some(tol), m)
}

fn park_bounded(prefs: &[usize], tol: Option<&[usize]>, m: usize) -> Result<ParkResult> {
    let mut outcome = Outcome::empty(m);
    for (idx, &a) in prefs.iter().enumerate() {
        let car = idx + 1;
        let limit = tol.map_or(m, |t| t[idx]);
        let spot = (a..=limit).find(|&s| outcome.slots[s - 1].is_none());
        match spot {
            Some(s) => outcome.slots[s - 1] = Some(car),
            None => {
                return Ok(ParkResult::Stuck(FailureReport {
                    car,
                    partial: outcome,
                }))
            }
        }
    }
    Ok(ParkResult::Parked(outcome))
}

/// Per-car displacement `d_i = (spot of car i) - a_i`. Cars never park
/// before their preference, so every entry is nonnegative.
pub fn displacements(prefs: &[usize], outcome: &Outcome) -> Result<Vec<usize>> {
    prefs
        .iter()
        .enumerate()
        .map(|(idx, &a)| {
            let car = idx + 1;
            let spot = outcome.spot_of(car).ok_or(Error::Inconsistent { car })?;
            if spot < a {
                return Err(Error::Inconsistent { car });
            }
            Ok(spot - a)
        })
        .collect()
}
