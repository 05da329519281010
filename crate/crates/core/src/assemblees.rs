//! Assemblées of permutations: ordered blocks partitioning `{1..n+1}`
//! with decreasing block-ends, their statistics, the induced state word,
//! the insertion algorithm over truncated subexceedant functions, and
//! the mirror/complement involution aligning insertion weights with the
//! `lrs`/`rls` statistics.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::One;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{binomial, Exponents};
use crate::shapes::{StateWord, Symbol};
use crate::{Int, Rational, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssembleeError {
    #[error("blocks must be nonempty")]
    EmptyBlock,
    #[error("blocks must partition 1..={expected} (problem near value {value})")]
    NotAPartition { expected: u32, value: u32 },
    #[error("enumeration guard exceeded (limit {limit})")]
    CapacityExceeded { limit: usize },
    #[error("subexceedant value f({index}) = {value} out of range 1..={bound}")]
    BadFunctionValue {
        index: usize,
        value: usize,
        bound: usize,
    },
    #[error("green point gaps must increase weakly, end at {m} and have one entry per line")]
    BadGreenChoice { m: usize },
    #[error("function and green choice disagree on (n, r)")]
    SizeMismatch,
    #[error("malformed JSON: {reason}")]
    BadJson { reason: String },
}

/// An assemblée in canonical order: disjoint nonempty ordered blocks
/// covering `{1..n+1}`, sorted by strictly decreasing last elements
/// (the block-ends).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assemblee {
    blocks: Vec<Vec<u32>>,
}

impl Assemblee {
    /// Validates a raw block list and puts it in canonical order.
    pub fn from_blocks(blocks: Vec<Vec<u32>>) -> Result<Assemblee, AssembleeError> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(AssembleeError::EmptyBlock);
        }
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let expected = total as u32;
        let mut seen = vec![false; total + 1];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > expected || seen[x as usize] {
                return Err(AssembleeError::NotAPartition { expected, value: x });
            }
            seen[x as usize] = true;
        }
        let mut blocks = blocks;
        blocks.sort_by_key(|b| std::cmp::Reverse(*b.last().unwrap()));
        Ok(Assemblee { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Total element count `n + 1`.
    pub fn element_count(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block count `r + 1`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block-ends in canonical (strictly decreasing) order.
    pub fn block_ends(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| *b.last().unwrap()).collect()
    }

    /// Elements read block by block, left to right.
    pub fn flattened(&self) -> Vec<u32> {
        self.blocks.iter().flatten().copied().collect()
    }

    fn is_block_end(&self, value: u32) -> bool {
        self.blocks.iter().any(|b| *b.last().unwrap() == value)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.blocks
                .iter()
                .map(|b| Value::Array(b.iter().map(|&x| Value::from(x)).collect()))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Assemblee, AssembleeError> {
        let bad = |reason: &str| AssembleeError::BadJson {
            reason: reason.to_string(),
        };
        let outer = value
            .as_array()
            .ok_or_else(|| bad("expected an array of blocks"))?;
        let mut blocks = Vec::with_capacity(outer.len());
        for block in outer {
            let items = block
                .as_array()
                .ok_or_else(|| bad("block is not an array"))?;
            let mut parsed = Vec::with_capacity(items.len());
            for item in items {
                let x = item
                    .as_u64()
                    .filter(|&x| x > 0 && x <= u32::MAX as u64)
                    .ok_or_else(|| bad("elements must be positive integers"))?;
                parsed.push(x as u32);
            }
            blocks.push(parsed);
        }
        Assemblee::from_blocks(blocks)
    }
}

impl std::fmt::Display for Assemblee {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for block in &self.blocks {
            write!(f, "[{}]", block.iter().map(|x| x.to_string()).join(","))?;
        }
        Ok(())
    }
}

/// The four statistics of an assemblée. `lrs` and `rls` are listed in
/// decreasing value order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statistics {
    pub lrs: Vec<u32>,
    pub rls: Vec<u32>,
    pub increases: BTreeSet<u32>,
    pub decreases: BTreeSet<u32>,
}

/// Computes `lrs` (elements above the top block-end with every larger
/// element to their left), `rls` (elements below the bottom block-end
/// with every smaller intermediate element to their right) and the
/// increase/decrease classification of non-block-ends.
pub fn statistics(a: &Assemblee) -> Statistics {
    let flat = a.flattened();
    let n_plus_1 = flat.len() as u32;
    let position: BTreeMap<u32, usize> = flat.iter().copied().zip(0..).collect();
    let b_top = a.block_ends()[0];
    let b_bottom = *a.block_ends().last().unwrap();

    // Right-to-left maxima of the subsequence above the top block-end.
    let above: Vec<u32> = flat.iter().copied().filter(|&x| x > b_top).collect();
    let mut lrs = Vec::new();
    let mut running = 0u32;
    for &x in above.iter().rev() {
        if x > running {
            lrs.push(x);
            running = x;
        }
    }
    lrs.reverse();

    // Left-to-right maxima of the subsequence below the bottom block-end.
    let below: Vec<u32> = flat.iter().copied().filter(|&x| x < b_bottom).collect();
    let mut rls = Vec::new();
    let mut running = 0u32;
    for &x in &below {
        if x > running {
            rls.push(x);
            running = x;
        }
    }
    rls.reverse();

    let mut increases = BTreeSet::new();
    let mut decreases = BTreeSet::new();
    for &x in &flat {
        if a.is_block_end(x) {
            continue;
        }
        let is_increase = x < n_plus_1 && position[&(x + 1)] > position[&x];
        if is_increase {
            increases.insert(x);
        } else {
            decreases.insert(x);
        }
    }
    Statistics {
        lrs,
        rls,
        increases,
        decreases,
    }
}

/// The state word of an assemblée of size `(n+1, r+1)`: the flattened
/// reading with the final block-end dropped, each block-end becoming a
/// light, each increase a heavy and each decrease a hole.
pub fn word_of_assemblee(a: &Assemblee) -> StateWord {
    let stats = statistics(a);
    let flat = a.flattened();
    let symbols = flat[..flat.len() - 1]
        .iter()
        .map(|&x| {
            if a.is_block_end(x) {
                Symbol::Light
            } else if stats.increases.contains(&x) {
                Symbol::Heavy
            } else {
                Symbol::Hole
            }
        })
        .collect();
    StateWord::new(symbols)
}

/// The Lah-type count `C(n, r) · (n+1)! / (r+1)!` of both the tableaux
/// of size `(n, r)` and the assemblées of size `(n+1, r+1)`.
pub fn lah_number(n: u64, r: u64) -> Int {
    let mut falling = Int::one();
    for i in (r + 2)..=(n + 1) {
        falling *= Int::from(i);
    }
    binomial(n, r) * falling
}

/// All canonical assemblées with `n_plus_1` elements in `r_plus_1`
/// blocks, in sorted order.
pub fn enumerate_assemblees(
    n_plus_1: usize,
    r_plus_1: usize,
    limit: usize,
) -> Result<Vec<Assemblee>, AssembleeError> {
    assert!(
        r_plus_1 >= 1 && r_plus_1 <= n_plus_1,
        "need 1 <= r+1 <= n+1"
    );
    let mut out = BTreeSet::new();
    let elements: Vec<u32> = (1..=n_plus_1 as u32).collect();
    for perm in elements.iter().copied().permutations(n_plus_1) {
        for cuts in (1..n_plus_1).combinations(r_plus_1 - 1) {
            let mut blocks = Vec::with_capacity(r_plus_1);
            let mut start = 0;
            for &cut in &cuts {
                blocks.push(perm[start..cut].to_vec());
                start = cut;
            }
            blocks.push(perm[start..].to_vec());
            let ends: Vec<u32> = blocks.iter().map(|b| *b.last().unwrap()).collect();
            if ends.windows(2).all(|w| w[0] > w[1]) {
                if out.len() == limit {
                    return Err(AssembleeError::CapacityExceeded { limit });
                }
                out.insert(Assemblee { blocks });
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// A function `f` on `[m]` with `1 ≤ f(i) ≤ i + r + 1`; there are
/// `(r+2)(r+3)⋯(n+1)` of them for `m = n − r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSubexceedant {
    r: usize,
    values: Vec<usize>,
}

impl TruncatedSubexceedant {
    pub fn new(r: usize, values: Vec<usize>) -> Result<Self, AssembleeError> {
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            let bound = i + r + 1;
            if v < 1 || v > bound {
                return Err(AssembleeError::BadFunctionValue {
                    index: i,
                    value: v,
                    bound,
                });
            }
        }
        Ok(TruncatedSubexceedant { r, values })
    }

    pub fn insertions(&self) -> usize {
        self.values.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Every function for the given size, in lexicographic order.
    pub fn enumerate(n: usize, r: usize) -> Vec<TruncatedSubexceedant> {
        assert!(r <= n);
        let m = n - r;
        let mut out = Vec::new();
        let mut values = vec![1usize; m];
        loop {
            out.push(TruncatedSubexceedant {
                r,
                values: values.clone(),
            });
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                if values[i - 1] < i + r + 1 {
                    values[i - 1] += 1;
                    break;
                }
                values[i - 1] = 1;
                i -= 1;
            }
        }
    }
}

/// Where each of the `r+1` green lines (top to bottom) puts its point:
/// a gap index in `0..=m` among the inserted elements, weakly increasing
/// from the top line down, with the bottom line pinned after the last
/// element. There are exactly `C(n, r)` choices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenPointChoice {
    m: usize,
    gaps: Vec<usize>,
}

impl GreenPointChoice {
    pub fn new(m: usize, gaps: Vec<usize>) -> Result<Self, AssembleeError> {
        let ok = !gaps.is_empty()
            && *gaps.last().unwrap() == m
            && gaps.iter().all(|&g| g <= m)
            && gaps.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return Err(AssembleeError::BadGreenChoice { m });
        }
        Ok(GreenPointChoice { m, gaps })
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// All valid choices for `r+1` lines over `m` elements.
    pub fn enumerate(m: usize, r: usize) -> Vec<GreenPointChoice> {
        let mut out = Vec::new();
        let mut gaps = Vec::with_capacity(r + 1);
        fn extend(
            m: usize,
            remaining: usize,
            low: usize,
            gaps: &mut Vec<usize>,
            out: &mut Vec<GreenPointChoice>,
        ) {
            if remaining == 0 {
                let mut full = gaps.clone();
                full.push(m);
                out.push(GreenPointChoice { m, gaps: full });
                return;
            }
            for g in low..=m {
                gaps.push(g);
                extend(m, remaining - 1, g, gaps, out);
                gaps.pop();
            }
        }
        extend(m, r, 0, &mut gaps, &mut out);
        out
    }
}

/// Result of one insertion: the assemblée before the involution is
/// applied, and the product of the per-element weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub assemblee: Assemblee,
    pub weight: Weight,
}

#[derive(Debug, Clone, Copy)]
enum StackEntry {
    Line(usize),
    Element(usize),
}

/// Runs the insertion algorithm: element `i` enters at height `f(i)`
/// among the previously inserted elements and the `r+1` green lines
/// (height 1 is below everything). An element entering at the very
/// bottom weighs `β⁻¹`, at the very top `α⁻¹`, otherwise `1`. Green
/// points then choose where the block-ends interleave.
pub fn insert(
    f: &TruncatedSubexceedant,
    g: &GreenPointChoice,
) -> Result<Insertion, AssembleeError> {
    let m = f.insertions();
    let r = f.r();
    if g.m != m || g.gaps.len() != r + 2 - 1 {
        return Err(AssembleeError::SizeMismatch);
    }

    // Lines indexed 1 (top) ..= r+1 (bottom); the bottom line starts at
    // height 1.
    let mut stack: Vec<StackEntry> = (1..=r + 1).rev().map(StackEntry::Line).collect();
    let mut exps = Exponents::default();
    for (idx, &height) in f.values().iter().enumerate() {
        let i = idx + 1;
        if height == 1 {
            exps.b -= 1;
        } else if height == i + r + 1 {
            exps.a -= 1;
        }
        stack.insert(height - 1, StackEntry::Element(i));
    }

    let mut element_value = vec![0u32; m + 1];
    let mut line_value = vec![0u32; r + 2];
    for (pos, entry) in stack.iter().enumerate() {
        let value = (pos + 1) as u32;
        match entry {
            StackEntry::Line(j) => line_value[*j] = value,
            StackEntry::Element(i) => element_value[*i] = value,
        }
    }

    // Merge: walk the gaps left to right; at each gap emit the lines
    // whose point sits there (top lines first, keeping block-ends
    // decreasing), each closing a block.
    let mut blocks = Vec::with_capacity(r + 1);
    let mut current: Vec<u32> = Vec::new();
    for gap in 0..=m {
        for (line, &line_gap) in g.gaps.iter().enumerate() {
            if line_gap == gap {
                current.push(line_value[line + 1]);
                blocks.push(std::mem::take(&mut current));
            }
        }
        if gap < m {
            current.push(element_value[gap + 1]);
        }
    }
    debug_assert!(current.is_empty());

    let assemblee = Assemblee::from_blocks(blocks).expect("insertion yields a partition");
    debug_assert_eq!(assemblee.element_count(), m + r + 1);
    Ok(Insertion {
        assemblee,
        weight: Weight::monomial(exps, Rational::one()),
    })
}

/// The involution pairing insertion weights with `lrs`/`rls`: mirrors
/// the subsequence of elements above the top block-end in place, and
/// complements every element `c` below the bottom block-end `b` to
/// `b − c`. Block structure and all other entries are unchanged.
pub fn rho(a: &Assemblee) -> Assemblee {
    let b_top = a.block_ends()[0];
    let b_bottom = *a.block_ends().last().unwrap();
    let mut blocks = a.blocks().to_vec();

    let mut above: Vec<(usize, usize)> = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        for (ei, &x) in block.iter().enumerate() {
            if x > b_top {
                above.push((bi, ei));
            }
        }
    }
    let values: Vec<u32> = above.iter().map(|&(bi, ei)| blocks[bi][ei]).collect();
    for (slot, &(bi, ei)) in above.iter().enumerate() {
        blocks[bi][ei] = values[values.len() - 1 - slot];
    }

    for block in &mut blocks {
        for x in block.iter_mut() {
            if *x < b_bottom {
                *x = b_bottom - *x;
            }
        }
    }
    Assemblee { blocks }
}

/// The weighted enumeration `Σ α^{−|lrs|} β^{−|rls|}` over all
/// assemblées of the given size.
pub fn assemblee_weight_sum(
    n_plus_1: usize,
    r_plus_1: usize,
    limit: usize,
) -> Result<Weight, AssembleeError> {
    let mut total = Weight::zero();
    for a in enumerate_assemblees(n_plus_1, r_plus_1, limit)? {
        let stats = statistics(&a);
        total = total.add(&Weight::monomial(
            Exponents::new(-(stats.lrs.len() as i64), -(stats.rls.len() as i64), 0),
            Rational::one(),
        ));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_word;

    fn running_example() -> Assemblee {
        Assemblee::from_blocks(vec![
            vec![5, 9, 1, 8, 6],
            vec![3, 11, 4],
            vec![2, 10, 12, 7],
        ])
        .unwrap()
    }

    #[test]
    fn canonical_order_sorts_by_block_end() {
        let a = running_example();
        assert_eq!(
            a.blocks(),
            &[vec![2, 10, 12, 7], vec![5, 9, 1, 8, 6], vec![3, 11, 4]]
        );
        assert_eq!(a.block_ends(), vec![7, 6, 4]);

        let single = Assemblee::from_blocks(vec![vec![1]]).unwrap();
        assert_eq!(single.blocks(), &[vec![1]]);

        assert_eq!(
            Assemblee::from_blocks(vec![vec![1, 2], vec![2, 3]]),
            Err(AssembleeError::NotAPartition {
                expected: 4,
                value: 2
            })
        );
    }

    #[test]
    fn statistics_of_the_running_example() {
        let stats = statistics(&running_example());
        assert_eq!(stats.lrs, vec![12, 11]);
        assert_eq!(stats.rls, vec![3, 2]);
        assert_eq!(stats.increases, BTreeSet::from([2, 10, 5, 3]));
        assert_eq!(stats.decreases, BTreeSet::from([12, 9, 1, 8, 11]));
    }

    #[test]
    fn statistics_of_tiny_assemblees() {
        let up = Assemblee::from_blocks(vec![vec![1, 2]]).unwrap();
        let s = statistics(&up);
        assert_eq!((s.lrs.as_slice(), s.rls.as_slice()), (&[][..], &[1][..]));

        let down = Assemblee::from_blocks(vec![vec![2, 1]]).unwrap();
        let s = statistics(&down);
        assert_eq!((s.lrs.as_slice(), s.rls.as_slice()), (&[2][..], &[][..]));
    }

    #[test]
    fn word_of_assemblee_examples() {
        assert_eq!(
            word_of_assemblee(&running_example()),
            parse_word("DDEADEEEADE").unwrap()
        );
        let up = Assemblee::from_blocks(vec![vec![1, 2]]).unwrap();
        assert_eq!(word_of_assemblee(&up), parse_word("D").unwrap());
        let down = Assemblee::from_blocks(vec![vec![2, 1]]).unwrap();
        assert_eq!(word_of_assemblee(&down), parse_word("E").unwrap());
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_assemblees(3, 2, 1000).unwrap().len(), 6);
        assert_eq!(enumerate_assemblees(2, 1, 1000).unwrap().len(), 2);
        let forced = enumerate_assemblees(3, 3, 1000).unwrap();
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].blocks(), &[vec![3], vec![2], vec![1]]);
        for n_plus_1 in 1..=6 {
            for r_plus_1 in 1..=n_plus_1 {
                let got = enumerate_assemblees(n_plus_1, r_plus_1, 1_000_000)
                    .unwrap()
                    .len();
                let expected = lah_number((n_plus_1 - 1) as u64, (r_plus_1 - 1) as u64);
                assert_eq!(Int::from(got), expected, "size ({n_plus_1}, {r_plus_1})");
            }
        }
    }

    #[test]
    fn subexceedant_counts_and_bounds() {
        // (r+2)(r+3)⋯(n+1) functions.
        let fs = TruncatedSubexceedant::enumerate(4, 1);
        assert_eq!(fs.len(), 3 * 4 * 5);
        assert!(TruncatedSubexceedant::new(1, vec![4]).is_err());
        assert!(TruncatedSubexceedant::new(1, vec![3, 1, 5]).is_ok());
    }

    #[test]
    fn green_choices_count_is_binomial() {
        for n in 1..=7usize {
            for r in 0..=n {
                let m = n - r;
                let count = GreenPointChoice::enumerate(m, r).len();
                assert_eq!(
                    Int::from(count),
                    binomial(n as u64, r as u64),
                    "(n, r) = ({n}, {r})"
                );
            }
        }
    }

    #[test]
    fn insertion_matches_the_worked_example() {
        let f = TruncatedSubexceedant::new(2, vec![3, 5, 2, 6, 1, 9, 2, 1]).unwrap();
        let g = GreenPointChoice::new(8, vec![3, 6, 8]).unwrap();
        let got = insert(&f, &g).unwrap();
        let expected =
            Assemblee::from_blocks(vec![vec![7, 10, 5, 8], vec![9, 2, 11, 6], vec![3, 1, 4]])
                .unwrap();
        assert_eq!(got.assemblee, expected);
        assert_eq!(
            got.weight,
            Weight::monomial(Exponents::new(-2, -2, 0), Rational::one())
        );
    }

    #[test]
    fn insertion_of_a_single_element() {
        // Below the single line: value 1, the line becomes the block-end 2.
        let below = insert(
            &TruncatedSubexceedant::new(0, vec![1]).unwrap(),
            &GreenPointChoice::new(1, vec![1]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            below.assemblee,
            Assemblee::from_blocks(vec![vec![1, 2]]).unwrap()
        );
        assert_eq!(
            below.weight,
            Weight::monomial(Exponents::new(0, -1, 0), Rational::one())
        );

        let above = insert(
            &TruncatedSubexceedant::new(0, vec![2]).unwrap(),
            &GreenPointChoice::new(1, vec![1]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            above.assemblee,
            Assemblee::from_blocks(vec![vec![2, 1]]).unwrap()
        );
        assert_eq!(
            above.weight,
            Weight::monomial(Exponents::new(-1, 0, 0), Rational::one())
        );
    }

    #[test]
    fn rho_matches_the_worked_example() {
        let a = Assemblee::from_blocks(vec![vec![7, 10, 5, 8], vec![9, 2, 11, 6], vec![3, 1, 4]])
            .unwrap();
        let image = rho(&a);
        assert_eq!(
            image,
            Assemblee::from_blocks(vec![vec![7, 11, 5, 8], vec![9, 2, 10, 6], vec![1, 3, 4]])
                .unwrap()
        );
        assert_eq!(rho(&image), a);
        let stats = statistics(&image);
        assert_eq!(stats.lrs, vec![11, 10]);
        assert_eq!(stats.rls, vec![3, 2]);
    }

    #[test]
    fn rho_fixes_all_singleton_blocks() {
        let a = Assemblee::from_blocks(vec![vec![3], vec![2], vec![1]]).unwrap();
        assert_eq!(rho(&a), a);
    }

    #[test]
    fn rho_is_an_involution_everywhere_small() {
        for n_plus_1 in 1..=5 {
            for r_plus_1 in 1..=n_plus_1 {
                for a in enumerate_assemblees(n_plus_1, r_plus_1, 100_000).unwrap() {
                    assert_eq!(rho(&rho(&a)), a, "assemblée {a}");
                    assert_eq!(
                        rho(&a).block_ends(),
                        a.block_ends(),
                        "block-ends preserved for {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_sums_match_hand_enumeration() {
        let inv = |a: i64, b: i64| Weight::monomial(Exponents::new(a, b, 0), Rational::one());
        let two = Rational::from_integer(Int::from(2));
        assert_eq!(
            assemblee_weight_sum(3, 2, 1000).unwrap(),
            inv(-1, 0)
                .scale(&two)
                .add(&inv(0, -1).scale(&two))
                .add(&Weight::constant(two))
        );
        assert_eq!(
            assemblee_weight_sum(2, 1, 1000).unwrap(),
            inv(-1, 0).add(&inv(0, -1))
        );
        for n_plus_1 in 1..=5 {
            assert_eq!(
                assemblee_weight_sum(n_plus_1, n_plus_1, 1000).unwrap(),
                Weight::one()
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let a = running_example();
        assert_eq!(Assemblee::from_json(&a.to_json()).unwrap(), a);
        assert!(Assemblee::from_json(&serde_json::json!([[0]])).is_err());
    }
}
