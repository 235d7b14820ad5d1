//! Signature types, level predicates, vertical-strip moves, and the finite
//! enumerations everything else is indexed by.
//!
//! Irreducible objects are labelled by weakly decreasing integer tuples
//! ("signatures", equivalently Young diagrams):
//!
//! - [`GlSignature`]: a 2N-tuple labelling a representation of SU(2N); two
//!   signatures differing by a constant label the same representation, so a
//!   normalized form (last part zero) is used as the canonical one.
//! - [`SpSignature`]: a nonnegative N-tuple labelling a representation of
//!   Sp(N).
//! - [`HalfIntVector`]: an all-integer or all-half-integer nonnegative
//!   N-tuple labelling an evaluation point; stored as doubled integers so it
//!   stays exact.
//!
//! A [`LevelContext`] fixes the pair (N, level) and owns the enumerations of
//! the level-permissible bases. The canonical order of every basis is
//! ascending lexicographic on the part tuples, and all matrices elsewhere in
//! the crate index rows and columns in that order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// The pair (N, level) together with the derived denominator 2N + level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelContext {
    n: usize,
    level: i64,
}

impl LevelContext {
    pub fn new(n: usize, level: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfRange("N must be at least 1".into()));
        }
        if level < 1 {
            return Err(Error::OutOfRange("level must be at least 1".into()));
        }
        Ok(LevelContext { n, level })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// The shifted denominator 2N + level appearing in all evaluation angles.
    pub fn kappa(&self) -> i64 {
        2 * self.n as i64 + self.level
    }

    /// Number of parts of an untwisted signature.
    pub fn gl_rank(&self) -> usize {
        2 * self.n
    }

    /// Number of parts of a twisted signature.
    pub fn sp_rank(&self) -> usize {
        self.n
    }
}

impl fmt::Display for LevelContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={}, level={}", self.n, self.level)
    }
}

fn check_weakly_decreasing(parts: &[i64]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::InvalidSignature("signature has no parts".into()));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidSignature(format!(
            "parts must be weakly decreasing, got {:?}",
            parts
        )));
    }
    Ok(())
}

/// Signature of an irreducible representation of SU(2N): a weakly decreasing
/// integer 2N-tuple. Derived `Ord` is lexicographic on parts, which is the
/// canonical basis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlSignature {
    parts: Vec<i64>,
}

impl GlSignature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        check_weakly_decreasing(&parts)?;
        Ok(GlSignature { parts })
    }

    /// The zero signature with the given number of parts.
    pub fn zero(rank: usize) -> Self {
        GlSignature {
            parts: vec![0; rank],
        }
    }

    /// The signature (1,...,1,0,...,0) of the k-th exterior power of the
    /// vector representation.
    pub fn fundamental(k: usize, rank: usize) -> Result<Self> {
        if k > rank {
            return Err(Error::OutOfRange(format!(
                "exterior power {k} exceeds rank {rank}"
            )));
        }
        let mut parts = vec![0; rank];
        parts[..k].fill(1);
        Ok(GlSignature { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// Total number of boxes of the diagram.
    pub fn boxes(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Subtract the last part from every part. Signatures differing by a
    /// constant label the same representation; this picks the member of the
    /// class with last part zero. Idempotent.
    pub fn normalized(&self) -> GlSignature {
        let last = *self.parts.last().expect("nonempty");
        GlSignature {
            parts: self.parts.iter().map(|p| p - last).collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.parts.last() == Some(&0)
    }

    /// Level constraint: first part minus last part at most `level`.
    pub fn is_level_permissible(&self, ctx: &LevelContext) -> bool {
        self.parts.len() == ctx.gl_rank()
            && self.parts[0] - self.parts[self.parts.len() - 1] <= ctx.level()
    }

    /// Comma-separated parts, e.g. `"2,1,0,0"`; used as a JSON key.
    pub fn label(&self) -> String {
        join_parts(&self.parts)
    }

    pub fn parse(text: &str) -> Result<Self> {
        GlSignature::new(parse_parts(text)?)
    }
}

impl fmt::Display for GlSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Signature of an irreducible representation of Sp(N): a weakly decreasing
/// nonnegative N-tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpSignature {
    parts: Vec<i64>,
}

impl SpSignature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        check_weakly_decreasing(&parts)?;
        if parts.last().copied().unwrap_or(0) < 0 {
            return Err(Error::InvalidSignature(format!(
                "parts must be nonnegative, got {:?}",
                parts
            )));
        }
        Ok(SpSignature { parts })
    }

    pub fn zero(rank: usize) -> Self {
        SpSignature {
            parts: vec![0; rank],
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn boxes(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Sum of the first two parts, with the second part read as 0 when N = 1.
    /// This is the quantity the level constraint bounds.
    pub fn top_two(&self) -> i64 {
        self.parts[0] + self.parts.get(1).copied().unwrap_or(0)
    }

    /// Level constraint: first plus second part at most `level` (second part
    /// taken as 0 when N = 1).
    pub fn is_level_permissible(&self, ctx: &LevelContext) -> bool {
        self.parts.len() == ctx.sp_rank() && self.top_two() <= ctx.level()
    }

    pub fn label(&self) -> String {
        join_parts(&self.parts)
    }

    pub fn parse(text: &str) -> Result<Self> {
        SpSignature::new(parse_parts(text)?)
    }
}

impl fmt::Display for SpSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Whether a [`HalfIntVector`] has all-integer or all-half-integer parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Integrality {
    Integral,
    HalfIntegral,
}

impl Integrality {
    pub fn as_str(&self) -> &'static str {
        match self {
            Integrality::Integral => "integral",
            Integrality::HalfIntegral => "half-integral",
        }
    }
}

/// A weakly decreasing nonnegative N-tuple with entries in (1/2)Z, all of the
/// same integrality type, first entry at most level/2. These label the
/// evaluation points; parts are stored doubled so everything stays exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfIntVector {
    doubled: Vec<i64>,
}

impl HalfIntVector {
    /// Build from doubled parts, validating every invariant against `ctx`.
    pub fn from_doubled(doubled: Vec<i64>, ctx: &LevelContext) -> Result<Self> {
        check_weakly_decreasing(&doubled)?;
        if doubled.len() != ctx.sp_rank() {
            return Err(Error::InvalidSignature(format!(
                "expected {} parts, got {}",
                ctx.sp_rank(),
                doubled.len()
            )));
        }
        if doubled.last().copied().unwrap_or(0) < 0 {
            return Err(Error::InvalidSignature(format!(
                "parts must be nonnegative, got doubled {:?}",
                doubled
            )));
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|d| d.rem_euclid(2) != parity) {
            return Err(Error::InvalidSignature(format!(
                "parts must be all integers or all half-integers, got doubled {:?}",
                doubled
            )));
        }
        if doubled[0] > ctx.level() {
            return Err(Error::InvalidSignature(format!(
                "first part {}/2 exceeds level/2 = {}/2",
                doubled[0],
                ctx.level()
            )));
        }
        Ok(HalfIntVector { doubled })
    }

    /// The all-zero (integral) vector.
    pub fn zero(rank: usize) -> Self {
        HalfIntVector {
            doubled: vec![0; rank],
        }
    }

    /// Doubled parts: entry i is 2 g_i.
    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn kind(&self) -> Integrality {
        if self.doubled[0].rem_euclid(2) == 0 {
            Integrality::Integral
        } else {
            Integrality::HalfIntegral
        }
    }

    /// Human-readable parts, halves rendered as fractions: `"3/2,1/2"`.
    pub fn label(&self) -> String {
        self.doubled
            .iter()
            .map(|d| {
                if d % 2 == 0 {
                    (d / 2).to_string()
                } else {
                    format!("{d}/2")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for HalfIntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn join_parts(parts: &[i64]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_parts(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidSignature(format!("cannot parse part {tok:?}")))
        })
        .collect()
}

/// A finite Z-linear combination of basis labels. Zero multiplicities are
/// never stored; signed values appear only transiently inside reflection
/// bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalCombination<L: Ord> {
    terms: BTreeMap<L, i64>,
}

impl<L: Ord + Clone> FormalCombination<L> {
    pub fn new() -> Self {
        FormalCombination {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(label: L) -> Self {
        let mut c = Self::new();
        c.add(label, 1);
        c
    }

    /// Add `mult` to the multiplicity of `label`, dropping the entry if it
    /// lands on zero.
    pub fn add(&mut self, label: L, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(label.clone()).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn multiplicity(&self, label: &L) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, i64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    /// Sum of multiplicities weighted by `f` over the terms.
    pub fn weighted_sum<F: Fn(&L) -> f64>(&self, f: F) -> f64 {
        self.iter().map(|(l, m)| m as f64 * f(l)).sum()
    }
}

impl<L: Ord + Clone + fmt::Display> FormalCombination<L> {
    /// Map keyed by the display label, for JSON output.
    pub fn to_label_map(&self) -> BTreeMap<String, i64> {
        self.iter().map(|(l, m)| (l.to_string(), m)).collect()
    }
}

impl<L: Ord + Clone> FromIterator<(L, i64)> for FormalCombination<L> {
    fn from_iter<T: IntoIterator<Item = (L, i64)>>(iter: T) -> Self {
        let mut c = Self::new();
        for (l, m) in iter {
            c.add(l, m);
        }
        c
    }
}

/// All weakly decreasing nonnegative tuples of the given length with first
/// part at most `max_first`, in ascending lexicographic order.
fn weakly_decreasing_tuples(len: usize, max_first: i64) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, len: usize, bound: i64) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=bound {
            cur.push(v);
            rec(out, cur, len, v);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_first >= 0 {
        rec(&mut out, &mut Vec::with_capacity(len), len, max_first);
    }
    out
}

/// All normalized level-permissible untwisted signatures, ascending
/// lexicographic. The count is binomial(2N - 1 + level, level).
pub fn enumerate_untwisted_basis(ctx: &LevelContext) -> Vec<GlSignature> {
    weakly_decreasing_tuples(ctx.gl_rank() - 1, ctx.level())
        .into_iter()
        .map(|mut parts| {
            parts.push(0);
            GlSignature { parts }
        })
        .collect()
}

/// All level-permissible twisted signatures, ascending lexicographic.
pub fn enumerate_twisted_basis(ctx: &LevelContext) -> Vec<SpSignature> {
    weakly_decreasing_tuples(ctx.sp_rank(), ctx.level())
        .into_iter()
        .filter(|parts| parts[0] + parts.get(1).copied().unwrap_or(0) <= ctx.level())
        .map(|parts| SpSignature { parts })
        .collect()
}

/// All normalized level-permissible untwisted signatures with pairwise equal
/// parts (first = second, third = fourth, ...), ascending lexicographic.
pub fn enumerate_paired(ctx: &LevelContext) -> Vec<GlSignature> {
    // Pair values a_1 >= ... >= a_N with a_N = 0 forced by normalization.
    weakly_decreasing_tuples(ctx.sp_rank() - 1, ctx.level())
        .into_iter()
        .map(|halves| {
            let mut parts = Vec::with_capacity(ctx.gl_rank());
            for a in halves {
                parts.push(a);
                parts.push(a);
            }
            parts.push(0);
            parts.push(0);
            GlSignature { parts }
        })
        .collect()
}

/// The evaluation set: all uniform-type half-integer vectors with first part
/// at most level/2. Integral vectors first, then half-integral, each block
/// ascending lexicographic. Its size always equals the size of
/// [`enumerate_twisted_basis`].
pub fn enumerate_eval_set(ctx: &LevelContext) -> Vec<HalfIntVector> {
    let n = ctx.sp_rank();
    let mut out = Vec::new();
    // Integral: g_1 <= floor(level/2), doubled parts 2 g_i.
    for tuple in weakly_decreasing_tuples(n, ctx.level() / 2) {
        out.push(HalfIntVector {
            doubled: tuple.into_iter().map(|v| 2 * v).collect(),
        });
    }
    // Half-integral: doubled parts odd, positive, at most level.
    for tuple in weakly_decreasing_tuples(n, (ctx.level() - 1) / 2) {
        out.push(HalfIntVector {
            doubled: tuple.into_iter().map(|v| 2 * v + 1).collect(),
        });
    }
    out
}

fn for_each_row_subset<F: FnMut(&[usize])>(rows: usize, size: usize, visit: &mut F) {
    fn rec<F: FnMut(&[usize])>(
        start: usize,
        rows: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if remaining == 0 {
            visit(chosen);
            return;
        }
        // Not enough rows left to finish the subset.
        if start + remaining > rows {
            return;
        }
        for r in start..=(rows - remaining) {
            chosen.push(r);
            rec(r + 1, rows, remaining - 1, chosen, visit);
            chosen.pop();
        }
    }
    rec(0, rows, size, &mut Vec::with_capacity(size), visit);
}

fn is_weakly_decreasing(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// All weakly decreasing results of adding 1 to `boxes` distinct rows among
/// the first `max_rows` rows of `parts` (a vertical strip). Results are in
/// descending lexicographic order and multiplicity-free; the list is empty
/// when no placement works.
pub fn add_vertical_strips(parts: &[i64], boxes: usize, max_rows: usize) -> Vec<Vec<i64>> {
    let rows = max_rows.min(parts.len());
    let mut out = Vec::new();
    for_each_row_subset(rows, boxes, &mut |subset| {
        let mut candidate = parts.to_vec();
        for &r in subset {
            candidate[r] += 1;
        }
        if is_weakly_decreasing(&candidate) {
            out.push(candidate);
        }
    });
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All weakly decreasing nonnegative results of subtracting 1 from `boxes`
/// distinct rows of `parts` (removing a vertical strip). Same ordering
/// conventions as [`add_vertical_strips`].
pub fn remove_vertical_strips(parts: &[i64], boxes: usize) -> Vec<Vec<i64>> {
    let rows = parts.len();
    let mut out = Vec::new();
    for_each_row_subset(rows, boxes, &mut |subset| {
        let mut candidate = parts.to_vec();
        for &r in subset {
            candidate[r] -= 1;
        }
        if is_weakly_decreasing(&candidate) && candidate.last().copied().unwrap_or(0) >= 0 {
            out.push(candidate);
        }
    });
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, level: i64) -> LevelContext {
        LevelContext::new(n, level).unwrap()
    }

    fn gl(parts: &[i64]) -> GlSignature {
        GlSignature::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn normalize_subtracts_last_part() {
        assert_eq!(gl(&[2, 1]).normalized(), gl(&[1, 0]));
        assert_eq!(gl(&[3, 3, 3, 3]).normalized(), gl(&[0, 0, 0, 0]));
        assert_eq!(gl(&[5, 4, 2, 2]).normalized(), gl(&[3, 2, 0, 0]));
    }

    #[test]
    fn normalize_is_idempotent() {
        let f = gl(&[5, 4, 2, 2]);
        assert_eq!(f.normalized(), f.normalized().normalized());
    }

    #[test]
    fn non_monotone_rejected() {
        assert!(GlSignature::new(vec![1, 2]).is_err());
        assert!(SpSignature::new(vec![0, 1]).is_err());
        assert!(SpSignature::new(vec![0, -1]).is_err());
    }

    #[test]
    fn untwisted_basis_small_cases() {
        let labels = |c| {
            enumerate_untwisted_basis(&c)
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(ctx(1, 1)), ["0,0", "1,0"]);
        assert_eq!(labels(ctx(1, 2)), ["0,0", "1,0", "2,0"]);
        assert_eq!(
            labels(ctx(2, 1)),
            ["0,0,0,0", "1,0,0,0", "1,1,0,0", "1,1,1,0"]
        );
    }

    fn binomial(n: u64, k: u64) -> u64 {
        let k = k.min(n - k);
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    /// Independent brute force: filter every tuple in {0..level}^(2N-1) for
    /// monotonicity rather than generating monotone tuples directly.
    fn brute_force_untwisted_count(c: &LevelContext) -> u64 {
        let m = c.gl_rank() - 1;
        let base = (c.level() + 1) as u64;
        let mut count = 0;
        for code in 0..base.pow(m as u32) {
            let mut digits = Vec::with_capacity(m);
            let mut rest = code;
            for _ in 0..m {
                digits.push((rest % base) as i64);
                rest /= base;
            }
            if digits.windows(2).all(|w| w[0] >= w[1]) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn untwisted_basis_count_matches_binomial_and_brute_force() {
        for n in 1..=3usize {
            for level in 1..=4i64 {
                let c = ctx(n, level);
                let got = enumerate_untwisted_basis(&c).len() as u64;
                let expected = binomial((2 * n as u64 - 1) + level as u64, level as u64);
                assert_eq!(got, expected, "count at {c}");
                assert_eq!(got, brute_force_untwisted_count(&c), "brute force at {c}");
            }
        }
    }

    #[test]
    fn twisted_basis_small_cases() {
        let labels = |c| {
            enumerate_twisted_basis(&c)
                .iter()
                .map(|h| h.label())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(ctx(1, 3)), ["0", "1", "2", "3"]);
        assert_eq!(labels(ctx(2, 2)), ["0,0", "1,0", "1,1", "2,0"]);
        assert_eq!(labels(ctx(3, 1)), ["0,0,0", "1,0,0"]);
    }

    #[test]
    fn paired_small_cases() {
        let labels = |c| {
            enumerate_paired(&c)
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(ctx(1, 2)), ["0,0"]);
        assert_eq!(labels(ctx(2, 1)), ["0,0,0,0", "1,1,0,0"]);
        assert_eq!(labels(ctx(2, 2)), ["0,0,0,0", "1,1,0,0", "2,2,0,0"]);
    }

    #[test]
    fn paired_signatures_are_permissible_and_paired() {
        for n in 1..=3usize {
            for level in 1..=4i64 {
                let c = ctx(n, level);
                for f in enumerate_paired(&c) {
                    assert!(f.is_level_permissible(&c));
                    assert!(f.is_normalized());
                    for i in 0..c.sp_rank() {
                        assert_eq!(f.parts()[2 * i], f.parts()[2 * i + 1]);
                    }
                }
            }
        }
    }

    #[test]
    fn eval_set_small_cases() {
        let labels = |c| {
            enumerate_eval_set(&c)
                .iter()
                .map(|g| g.label())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(ctx(1, 1)), ["0", "1/2"]);
        assert_eq!(labels(ctx(2, 1)), ["0,0", "1/2,1/2"]);
        assert_eq!(labels(ctx(2, 2)), ["0,0", "1,0", "1,1", "1/2,1/2"]);
    }

    #[test]
    fn eval_set_size_matches_twisted_basis() {
        for n in 1..=3usize {
            for level in 1..=4i64 {
                let c = ctx(n, level);
                assert_eq!(
                    enumerate_eval_set(&c).len(),
                    enumerate_twisted_basis(&c).len(),
                    "at {c}"
                );
            }
        }
    }

    #[test]
    fn eval_set_entries_validate() {
        for n in 1..=3usize {
            for level in 1..=4i64 {
                let c = ctx(n, level);
                for g in enumerate_eval_set(&c) {
                    HalfIntVector::from_doubled(g.doubled().to_vec(), &c).unwrap();
                }
            }
        }
    }

    #[test]
    fn mixed_integrality_rejected() {
        let c = ctx(2, 1);
        assert!(HalfIntVector::from_doubled(vec![1, 0], &c).is_err());
    }

    #[test]
    fn add_strips_examples() {
        assert_eq!(
            add_vertical_strips(&[1, 0], 1, 2),
            vec![vec![2, 0], vec![1, 1]]
        );
        assert_eq!(
            add_vertical_strips(&[1, 0, 0, 0], 2, 4),
            vec![vec![2, 1, 0, 0], vec![1, 1, 1, 0]]
        );
        assert_eq!(add_vertical_strips(&[3, 1], 0, 2), vec![vec![3, 1]]);
    }

    #[test]
    fn remove_strips_examples() {
        assert_eq!(remove_vertical_strips(&[1, 1], 1), vec![vec![1, 0]]);
        assert_eq!(remove_vertical_strips(&[2, 0], 1), vec![vec![1, 0]]);
        assert_eq!(remove_vertical_strips(&[3, 1], 0), vec![vec![3, 1]]);
        assert!(remove_vertical_strips(&[1, 0], 2).is_empty());
    }

    #[test]
    fn strips_respect_max_rows() {
        // Only the first row may grow.
        assert_eq!(add_vertical_strips(&[1, 1], 1, 1), vec![vec![2, 1]]);
        // A strip larger than the row budget is impossible.
        assert!(add_vertical_strips(&[1, 0], 2, 1).is_empty());
    }

    #[test]
    fn formal_combination_drops_zero_entries() {
        let mut c: FormalCombination<GlSignature> = FormalCombination::new();
        c.add(gl(&[1, 0]), 2);
        c.add(gl(&[1, 0]), -2);
        assert!(c.is_empty());
    }

    #[test]
    fn signature_parsing_round_trips() {
        let f = GlSignature::parse("2,1,0,0").unwrap();
        assert_eq!(f, gl(&[2, 1, 0, 0]));
        assert_eq!(f.label(), "2,1,0,0");
        assert!(GlSignature::parse("2,x").is_err());
    }
}
