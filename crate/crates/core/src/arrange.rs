//! Preferential arrangements, barred preferential arrangements, block
//! structures, and the two constructive bijections that link them to Fubini
//! rankings and unit interval rational parking functions.
//!
//! Serialization convention: blocks print as `(e1 e2 ...)` with elements
//! ascending, bars print as `|`, and items are concatenated without
//! separators, e.g. `(2)|(3 5)(1)||(4 6 7)`.

use crate::classify::{is_ell_interval, is_fubini_ranking};
use crate::error::{Error, Result};
use crate::simulate::park;
use std::fmt;

/// An ordered sequence of nonempty disjoint blocks partitioning `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferentialArrangement {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl PreferentialArrangement {
    /// Validates and normalizes: blocks nonempty, disjoint, union `[n]`;
    /// elements are stored ascending within each block.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n + 1];
        let mut normalized = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::MalformedArrangement("empty block".into()));
            }
            for &e in &block {
                if e < 1 || e > n || seen[e] {
                    return Err(Error::MalformedArrangement(format!(
                        "element {e} repeated or outside [1, {n}]"
                    )));
                }
                seen[e] = true;
            }
            block.sort_unstable();
            normalized.push(block);
        }
        Ok(PreferentialArrangement {
            blocks: normalized,
            n,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Size of the underlying ground set.
    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for PreferentialArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write_block(f, block)?;
        }
        Ok(())
    }
}

fn write_block(f: &mut fmt::Formatter<'_>, block: &[usize]) -> fmt::Result {
    let parts: Vec<String> = block.iter().map(|e| e.to_string()).collect();
    write!(f, "({})", parts.join(" "))
}

/// One item of a barred preferential arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BpaItem {
    Bar,
    Block(Vec<usize>),
}

/// A preferential arrangement of `[n]` with bars interleaved between (or
/// around) its blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarredPreferentialArrangement {
    items: Vec<BpaItem>,
    n: usize,
    bars: usize,
}

impl BarredPreferentialArrangement {
    pub fn new(items: Vec<BpaItem>) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = items
            .iter()
            .filter_map(|i| match i {
                BpaItem::Block(b) => Some(b.clone()),
                BpaItem::Bar => None,
            })
            .collect();
        let pa = PreferentialArrangement::new(blocks)?;
        let bars = items.iter().filter(|i| matches!(i, BpaItem::Bar)).count();
        // re-store normalized blocks in their original positions
        let mut normalized = pa.blocks.into_iter();
        let items = items
            .into_iter()
            .map(|i| match i {
                BpaItem::Bar => BpaItem::Bar,
                BpaItem::Block(_) => BpaItem::Block(normalized.next().unwrap()),
            })
            .collect();
        Ok(BarredPreferentialArrangement {
            items,
            n: pa.n,
            bars,
        })
    }

    pub fn items(&self) -> &[BpaItem] {
        &self.items
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bars(&self) -> usize {
        self.bars
    }

    /// Parses the canonical serialization, e.g. `(2)|(3 5)(1)||(4 6 7)`.
    /// Whitespace and commas both separate elements inside a block.
    pub fn parse(s: &str) -> Result<Self> {
        let mut items = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('|') {
                items.push(BpaItem::Bar);
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('(') {
                let end = r
                    .find(')')
                    .ok_or_else(|| Error::MalformedArrangement(format!("unclosed block in {s:?}")))?;
                let block = r[..end]
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>().map_err(|_| {
                            Error::MalformedArrangement(format!("bad element {t:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                items.push(BpaItem::Block(block));
                rest = r[end + 1..].trim_start();
            } else {
                return Err(Error::MalformedArrangement(format!(
                    "unexpected character at {rest:?}"
                )));
            }
        }
        BarredPreferentialArrangement::new(items)
    }
}

impl fmt::Display for BarredPreferentialArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            match item {
                BpaItem::Bar => f.write_str("|")?,
                BpaItem::Block(b) => write_block(f, b)?,
            }
        }
        Ok(())
    }
}

/// One maximal run of the weakly increasing rearrangement: the minimum
/// (repeated once when the run has length at least two) followed by
/// consecutive values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub min: usize,
    pub len: usize,
}

impl Block {
    /// The run's literal entries: `min` for the first two positions, then
    /// `min + y - 2` for the `y`-th.
    pub fn values(&self) -> Vec<usize> {
        (1..=self.len)
            .map(|y| self.min + y.saturating_sub(2))
            .collect()
    }
}

/// The block structure of a unit interval preference list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub blocks: Vec<Block>,
}

impl fmt::Display for BlockStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.values().iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Groups competitors by rank: block `j` holds exactly the indices whose
/// rank is the `j`-th smallest used rank.
pub fn fubini_to_pa(r: &[usize]) -> Result<PreferentialArrangement> {
    if !is_fubini_ranking(r)? {
        return Err(Error::NotFubini);
    }
    let n = r.len();
    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, &rank) in r.iter().enumerate() {
        by_rank[rank].push(i + 1);
    }
    PreferentialArrangement::new(by_rank.into_iter().filter(|b| !b.is_empty()).collect())
}

/// Inverse of [`fubini_to_pa`]: every competitor in block `j` gets rank
/// one more than the number of competitors in earlier blocks.
pub fn pa_to_fubini(p: &PreferentialArrangement) -> Vec<usize> {
    let mut ranks = vec![0usize; p.n()];
    let mut earlier = 0usize;
    for block in p.blocks() {
        for &e in block {
            ranks[e - 1] = earlier + 1;
        }
        earlier += block.len();
    }
    ranks
}

/// Splits the weakly increasing rearrangement of a unit interval preference
/// list into its maximal runs: each run is either a singleton or a repeated
/// minimum followed by consecutive values, and each run must end strictly
/// below the next run's start.
pub fn block_structure(prefs: &[usize], m: usize) -> Result<BlockStructure> {
    if !is_ell_interval(prefs, m, 1)? {
        return Err(Error::NotUnitInterval);
    }
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    let mut blocks = Vec::new();
    let mut i = 0usize;
    while i < sorted.len() {
        let min = sorted[i];
        let mut len = 1usize;
        if i + 1 < sorted.len() && sorted[i + 1] == min {
            len = 2;
            while i + len < sorted.len() && sorted[i + len] == min + len - 1 {
                len += 1;
            }
        }
        // maximality: the next entry must lie past this run's last spot
        if i + len < sorted.len() && sorted[i + len] <= min + len.saturating_sub(2) {
            return Err(Error::Inconsistent { car: i + len + 1 });
        }
        blocks.push(Block { min, len });
        i += len;
    }
    Ok(BlockStructure { blocks })
}

/// The three-step construction: flatten the parking outcome, turn zeros
/// into bars, and parenthesize the surviving values left to right into
/// groups sized by the block structure. A bar can never fall inside a
/// group; if one does, the input was inconsistent and an error is raised
/// rather than reparenthesizing.
pub fn uirpf_to_bpa(prefs: &[usize], m: usize) -> Result<BarredPreferentialArrangement> {
    let structure = block_structure(prefs, m)?;
    let outcome = park(prefs, m)?
        .into_outcome()
        .ok_or(Error::NotUnitInterval)?;
    let mut items = Vec::new();
    let mut blocks = structure.blocks.iter();
    let mut current: Option<(Vec<usize>, usize)> = None; // (collected, target size)
    for &slot in outcome.slots() {
        match slot {
            None => {
                if current.is_some() {
                    return Err(Error::MalformedArrangement(
                        "empty spot inside a block of consecutively parked cars".into(),
                    ));
                }
                items.push(BpaItem::Bar);
            }
            Some(car) => {
                let (mut collected, target) = match current.take() {
                    Some(c) => c,
                    None => (
                        Vec::new(),
                        blocks
                            .next()
                            .ok_or_else(|| {
                                Error::MalformedArrangement(
                                    "more parked cars than block capacity".into(),
                                )
                            })?
                            .len,
                    ),
                };
                collected.push(car);
                if collected.len() == target {
                    items.push(BpaItem::Block(collected));
                } else {
                    current = Some((collected, target));
                }
            }
        }
    }
    if current.is_some() || blocks.next().is_some() {
        return Err(Error::MalformedArrangement(
            "block sizes do not partition the parked cars".into(),
        ));
    }
    BarredPreferentialArrangement::new(items)
}

/// Inverse of [`uirpf_to_bpa`]. The street length is `n + bars`; reading
/// the arrangement left to right as an outcome vector (bars as empty
/// spots), the `y`-th member of a block starting at spot `s` prefers `s`
/// when `y = 1` and `s + y - 2` otherwise.
pub fn bpa_to_uirpf(q: &BarredPreferentialArrangement) -> Vec<usize> {
    let mut prefs = vec![0usize; q.n()];
    let mut pos = 1usize; // 1-based spot index in the flattened outcome
    for item in q.items() {
        match item {
            BpaItem::Bar => pos += 1,
            BpaItem::Block(block) => {
                for (y, &car) in block.iter().enumerate() {
                    prefs[car - 1] = if y == 0 { pos } else { pos + y - 1 };
                }
                pos += block.len();
            }
        }
    }
    prefs
}

/// All preferential arrangements of `[n]`, sorted by their serialization.
pub fn generate_pa(n: usize, cap: u64) -> Result<Vec<PreferentialArrangement>> {
    if n == 0 {
        return Ok(vec![PreferentialArrangement::new(Vec::new())?]);
    }
    let candidates = (n as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if candidates > cap as u128 {
        return Err(Error::ScaleExceeded {
            candidates,
            cap: cap as u128,
        });
    }
    let mut out = Vec::new();
    let mut t = vec![1usize; n];
    loop {
        if is_fubini_ranking(&t)? {
            out.push(fubini_to_pa(&t)?);
        }
        if !crate::count::next_tuple(&mut t, n) {
            break;
        }
    }
    out.sort_by_key(|p| p.to_string());
    Ok(out)
}

/// All barred preferential arrangements of `[n]` with `b` bars, sorted by
/// their serialization.
pub fn generate_bpa(n: usize, b: usize, cap: u64) -> Result<Vec<BarredPreferentialArrangement>> {
    let mut out = Vec::new();
    for pa in generate_pa(n, cap)? {
        let gaps = pa.blocks().len() + 1;
        // distribute b indistinguishable bars over the gaps around blocks
        let mut split = vec![0usize; gaps];
        split[0] = b;
        loop {
            let mut items = Vec::new();
            for (g, &bars_here) in split.iter().enumerate() {
                items.extend(std::iter::repeat(BpaItem::Bar).take(bars_here));
                if g < pa.blocks().len() {
                    items.push(BpaItem::Block(pa.blocks()[g].clone()));
                }
            }
            out.push(BarredPreferentialArrangement::new(items)?);
            if !next_weak_composition(&mut split) {
                break;
            }
        }
    }
    out.sort_by_key(|q| q.to_string());
    Ok(out)
}

/// Advances a weak composition (fixed total, nonnegative parts) to its
/// successor in colex-style order; false after the last one.
fn next_weak_composition(parts: &mut [usize]) -> bool {
    let k = parts.len();
    if k <= 1 {
        return false;
    }
    for i in 0..k - 1 {
        if parts[i] > 0 {
            let head = parts[i] - 1;
            parts[i + 1] += 1;
            parts[0] = head;
            if i > 0 {
                parts[i] = 0;
            }
            return true;
        }
    }
    false
}
