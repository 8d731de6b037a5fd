//! Lattice words over {N, E} and their correspondence with nondecreasing
//! parking functions.
//!
//! A word of shape `(n, m)` has `n` north and `m` east steps and stays
//! weakly above the line `y = x - (m - n)`: after any prefix with `v` norths
//! and `e` easts, `e <= (m - n) + v`. In the square case this is the usual
//! "never more easts than norths". All checks are integer comparisons.
//!
//! Height is measured as the largest number of cars simultaneously waiting
//! when the word is read as a parking transcript: each N enqueues a car,
//! each E serves one if any is waiting (an E with an empty queue is an
//! empty spot). On square words this equals the familiar maximum prefix
//! excess of N over E; on rational words it is the statistic that makes
//! height-bounded words correspond exactly to displacement-bounded
//! preference lists.

use crate::classify::is_nondecreasing;
use crate::error::{Error, Result};
use crate::simulate::park;
use std::fmt;

/// One lattice step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
}

/// A validated word of shape `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
    n: usize,
    m: usize,
}

impl DyckWord {
    /// Wraps a step sequence after validating shape and the diagonal
    /// invariant.
    pub fn new(steps: Vec<Step>, n: usize, m: usize) -> Result<Self> {
        if !is_valid_dyck(&steps, n, m) {
            let word: String = steps
                .iter()
                .map(|s| if *s == Step::N { 'N' } else { 'E' })
                .collect();
            return Err(Error::InvalidWord(format!(
                "{word:?} is not a valid word of shape ({n},{m})"
            )));
        }
        Ok(DyckWord { steps, n, m })
    }

    /// Parses a plain string over {N, E}.
    pub fn parse(s: &str, n: usize, m: usize) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' | 'n' => Ok(Step::N),
                'E' | 'e' => Ok(Step::E),
                _ => Err(Error::InvalidWord(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(steps, n, m)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// North-step count `n`.
    pub fn norths(&self) -> usize {
        self.n
    }

    /// East-step count `m`.
    pub fn easts(&self) -> usize {
        self.m
    }

    /// Maximum queue height over the word (see module docs). Square words:
    /// the maximum prefix `#N - #E`.
    pub fn height(&self) -> usize {
        let mut h = 0usize;
        let mut max = 0usize;
        for &s in &self.steps {
            match s {
                Step::N => {
                    h += 1;
                    max = max.max(h);
                }
                Step::E => h = h.saturating_sub(1),
            }
        }
        max
    }

    /// Per-prefix values of `#N - #E`, starting with the empty prefix at 0.
    /// Rational words may dip negative; the profile is informational and is
    /// not the statistic bounded by [`DyckWord::height`].
    pub fn height_profile(&self) -> Vec<i64> {
        let mut h = 0i64;
        let mut profile = vec![0];
        for &s in &self.steps {
            h += if s == Step::N { 1 } else { -1 };
            profile.push(h);
        }
        profile
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

/// True iff `steps` has exactly `n` norths, `m` easts, and every prefix
/// satisfies `#E <= (m - n) + #N`.
pub fn is_valid_dyck(steps: &[Step], n: usize, m: usize) -> bool {
    if n > m {
        return false;
    }
    let mut v = 0usize;
    let mut e = 0usize;
    for &s in steps {
        match s {
            Step::N => v += 1,
            Step::E => {
                e += 1;
                if e > (m - n) + v {
                    return false;
                }
            }
        }
    }
    v == n && e == m
}

/// The classical reading map: `a_i` is one more than the number of east
/// steps before the `i`-th north step. The image is a nondecreasing
/// parking function for `(n, m)` cars and spots.
pub fn dyck_to_prefs(w: &DyckWord) -> Vec<usize> {
    let mut prefs = Vec::with_capacity(w.n);
    let mut e = 0usize;
    for &s in &w.steps {
        match s {
            Step::N => prefs.push(1 + e),
            Step::E => e += 1,
        }
    }
    prefs
}

/// Inverse of [`dyck_to_prefs`]: spot `i` contributes `N^{c_i} E` where
/// `c_i` counts the cars preferring spot `i`.
pub fn prefs_to_dyck(prefs: &[usize], n: usize, m: usize) -> Result<DyckWord> {
    if prefs.len() != n {
        return Err(Error::MalformedInput(format!(
            "expected {n} preferences, got {}",
            prefs.len()
        )));
    }
    if !is_nondecreasing(prefs) {
        return Err(Error::NotNondecreasing);
    }
    if n > 0 && !park(prefs, m)?.succeeded() {
        return Err(Error::NotParkingFunction);
    }
    let mut counts = vec![0usize; m];
    for &a in prefs {
        counts[a - 1] += 1;
    }
    let mut steps = Vec::with_capacity(n + m);
    for &c in &counts {
        steps.extend(std::iter::repeat(Step::N).take(c));
        steps.push(Step::E);
    }
    DyckWord::new(steps, n, m)
}

/// All valid words of shape `(n, m)` in lexicographic order with `N < E`,
/// optionally restricted to height at most `max_height`.
pub fn generate_dyck(n: usize, m: usize, max_height: Option<usize>) -> Result<Vec<DyckWord>> {
    generate_dyck_capped(n, m, max_height, crate::count::DEFAULT_CAP)
}

/// [`generate_dyck`] with an explicit cap on the number of emitted words.
pub fn generate_dyck_capped(
    n: usize,
    m: usize,
    max_height: Option<usize>,
    cap: u64,
) -> Result<Vec<DyckWord>> {
    if n > m {
        return Err(Error::MalformedInput(format!(
            "shape ({n},{m}) requires n <= m"
        )));
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n + m);
    dfs(&mut steps, 0, 0, 0, n, m, max_height, cap, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    steps: &mut Vec<Step>,
    v: usize,
    e: usize,
    h: usize,
    n: usize,
    m: usize,
    max_height: Option<usize>,
    cap: u64,
    out: &mut Vec<DyckWord>,
) -> Result<()> {
    if v == n && e == m {
        if out.len() as u64 >= cap {
            return Err(Error::ScaleExceeded {
                candidates: out.len() as u128 + 1,
                cap: cap as u128,
            });
        }
        out.push(DyckWord {
            steps: steps.clone(),
            n,
            m,
        });
        return Ok(());
    }
    if v < n && max_height.map_or(true, |k| h + 1 <= k) {
        steps.push(Step::N);
        dfs(steps, v + 1, e, h + 1, n, m, max_height, cap, out)?;
        steps.pop();
    }
    if e < m && e + 1 <= (m - n) + v {
        steps.push(Step::E);
        dfs(steps, v, e + 1, h.saturating_sub(1), n, m, max_height, cap, out)?;
        steps.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_ell_interval, is_nondecreasing};
    use crate::numbers::bounded_height_series;
    use num_traits::ToPrimitive;
    use std::collections::BTreeSet;

    fn word(s: &str, n: usize, m: usize) -> DyckWord {
        DyckWord::parse(s, n, m).unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(word("NENNEEENENEEE", 5, 8).height(), 2);
        assert_eq!(word("NENNENEENNEE", 6, 6).height(), 2);
        assert_eq!(word("NNNEENENENEE", 6, 6).height(), 3);
        assert_eq!(word("NENENENE", 4, 4).height(), 1);
    }

    #[test]
    fn height_profile_tracks_plain_excess() {
        let w = word("NENNEEENENEEE", 5, 8);
        let p = w.height_profile();
        assert_eq!(p[0], 0);
        assert_eq!(*p.last().unwrap(), -3);
        assert!(p.windows(2).all(|x| (x[0] - x[1]).abs() == 1));
    }

    #[test]
    fn validity() {
        assert!(DyckWord::parse("NENE", 2, 2).is_ok());
        assert!(DyckWord::parse("ENNE", 2, 2).is_err());
        assert!(DyckWord::parse("NENNEEENENEEE", 5, 8).is_ok());
        // rational words may start with E as long as they respect the
        // shifted diagonal
        assert!(DyckWord::parse("ENE", 1, 2).is_ok());
        assert!(DyckWord::parse("EEN", 1, 2).is_err());
        assert!(DyckWord::parse("NEN", 2, 1).is_err());
        assert!(DyckWord::parse("NEX", 1, 2).is_err());
    }

    #[test]
    fn reading_map_examples() {
        assert_eq!(dyck_to_prefs(&word("NNENENEE", 4, 4)), vec![1, 1, 2, 3]);
        assert_eq!(
            dyck_to_prefs(&word("NENNEEENENEEE", 5, 8)),
            vec![1, 2, 2, 5, 6]
        );
        assert_eq!(dyck_to_prefs(&word("NNNNEEEE", 4, 4)), vec![1, 1, 1, 1]);
    }

    #[test]
    fn writing_map_examples() {
        assert_eq!(
            prefs_to_dyck(&[1, 1, 3, 3], 4, 4).unwrap().to_string(),
            "NNEENNEE"
        );
        assert_eq!(
            prefs_to_dyck(&[1, 2, 3, 4], 4, 4).unwrap().to_string(),
            "NENENENE"
        );
        assert_eq!(
            prefs_to_dyck(&[1, 2, 2, 5, 6], 5, 8).unwrap().to_string(),
            "NENNEEENENEEE"
        );
        assert!(matches!(
            prefs_to_dyck(&[2, 1], 2, 2),
            Err(Error::NotNondecreasing)
        ));
        assert!(matches!(
            prefs_to_dyck(&[2, 2], 2, 2),
            Err(Error::NotParkingFunction)
        ));
    }

    #[test]
    fn generation_counts() {
        assert_eq!(generate_dyck(3, 3, None).unwrap().len(), 5);
        let one = generate_dyck(4, 4, Some(1)).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "NENENENE");
        assert_eq!(generate_dyck(2, 2, Some(2)).unwrap().len(), 2);
        assert_eq!(generate_dyck(0, 0, None).unwrap().len(), 1);
    }

    #[test]
    fn generation_is_lexicographic_and_capped() {
        let words: Vec<String> = generate_dyck(3, 3, None)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        // lexicographic with N ordered before E
        let key = |w: &String| -> Vec<u8> {
            w.chars().map(|c| if c == 'N' { 0 } else { 1 }).collect()
        };
        let mut sorted = words.clone();
        sorted.sort_by_key(key);
        assert_eq!(words, sorted);
        assert!(matches!(
            generate_dyck_capped(4, 4, None, 3),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn round_trip() {
        for n in 0..=5usize {
            for m in n..=7 {
                for w in generate_dyck(n, m, None).unwrap() {
                    let prefs = dyck_to_prefs(&w);
                    assert!(is_nondecreasing(&prefs));
                    assert_eq!(prefs_to_dyck(&prefs, n, m).unwrap(), w, "{w}");
                }
            }
        }
    }

    #[test]
    fn square_counts_match_series() {
        for k in 1..=4usize {
            let series = bounded_height_series(k as u64, 7);
            for n in 0..=7usize {
                assert_eq!(
                    generate_dyck(n, n, Some(k)).unwrap().len(),
                    series[n].to_usize().unwrap(),
                    "n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn height_bound_matches_displacement_bound() {
        // the image of the height-bounded words is exactly the set of
        // nondecreasing preference lists with displacement at most l
        for n in 1..=4usize {
            for m in n..=7 {
                for l in 0..=3usize {
                    let image: BTreeSet<Vec<usize>> = generate_dyck(n, m, Some(l + 1))
                        .unwrap()
                        .iter()
                        .map(dyck_to_prefs)
                        .collect();
                    let mut expected = BTreeSet::new();
                    let mut t = vec![1usize; n];
                    loop {
                        if is_nondecreasing(&t) && is_ell_interval(&t, m, l).unwrap() {
                            expected.insert(t.clone());
                        }
                        if !crate::count::next_tuple(&mut t, m) {
                            break;
                        }
                    }
                    assert_eq!(image, expected, "n={n}, m={m}, l={l}");
                }
            }
        }
    }
}
