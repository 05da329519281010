//! Rhombic alternative tableaux: fillings of a tiling with `α`, `β`, `q`
//! subject to the emptiness rules, their weights, the per-state weight
//! generating function and the partition function.

use std::collections::BTreeMap;

use num_traits::One;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{binomial, Exponents};
use crate::shapes::{
    build_diagram, canonical_tiling, compute_strips, ShapeError, StateWord, Tile, TileKind, Tiling,
};
use crate::{Rational, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatError {
    #[error("filling does not cover tile {tile:?}")]
    MissingTile { tile: String },
    #[error("filling length {got} does not match tile count {expected}")]
    FillingLength { got: usize, expected: usize },
    #[error("tableau violates the filling rules")]
    InvalidTableau,
    #[error("enumeration guard exceeded (limit {limit})")]
    CapacityExceeded { limit: usize },
    #[error("malformed JSON: {reason}")]
    BadJson { reason: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Content of one tile. The order `Alpha < Beta < Q < Empty` is the one
/// used to sort enumerated tableaux.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fill {
    Alpha,
    Beta,
    Q,
    Empty,
}

impl Fill {
    pub fn to_char(self) -> char {
        match self {
            Fill::Alpha => 'a',
            Fill::Beta => 'b',
            Fill::Q => 'q',
            Fill::Empty => '.',
        }
    }

    pub fn from_char(c: char) -> Option<Fill> {
        match c {
            'a' => Some(Fill::Alpha),
            'b' => Some(Fill::Beta),
            'q' => Some(Fill::Q),
            '.' => Some(Fill::Empty),
            _ => None,
        }
    }

    /// Symbols that may sit in a tile of this kind: `α` needs a
    /// horizontal edge (square or short), `β` a vertical edge (square or
    /// tall), `q` fits anywhere.
    fn allowed_in(kind: TileKind) -> &'static [Fill] {
        match kind {
            TileKind::Square => &[Fill::Alpha, Fill::Beta, Fill::Q],
            TileKind::Tall => &[Fill::Beta, Fill::Q],
            TileKind::Short => &[Fill::Alpha, Fill::Q],
        }
    }
}

/// A tiling together with a symbol per tile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    tiling: Tiling,
    filling: BTreeMap<Tile, Fill>,
}

impl Tableau {
    pub fn new(tiling: Tiling, filling: BTreeMap<Tile, Fill>) -> Tableau {
        Tableau { tiling, filling }
    }

    /// Pairs a tiling with fills given in serialization (sorted tile)
    /// order.
    pub fn with_fills(tiling: Tiling, fills: &[Fill]) -> Result<Tableau, RatError> {
        let tiles = tiling.sorted_tiles();
        if fills.len() != tiles.len() {
            return Err(RatError::FillingLength {
                got: fills.len(),
                expected: tiles.len(),
            });
        }
        let filling = tiles.into_iter().zip(fills.iter().copied()).collect();
        Ok(Tableau { tiling, filling })
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    pub fn word(&self) -> &StateWord {
        self.tiling.diagram().word()
    }

    pub fn fill(&self, tile: &Tile) -> Option<Fill> {
        self.filling.get(tile).copied()
    }

    /// Fills in serialization (sorted tile) order.
    pub fn fills(&self) -> Vec<Fill> {
        self.filling.values().copied().collect()
    }

    pub fn count_fill(&self, fill: Fill) -> usize {
        self.filling.values().filter(|&&f| f == fill).count()
    }

    pub fn to_json(&self) -> Value {
        let mut value = self.tiling.to_json();
        let fills: Vec<Value> = self
            .fills()
            .iter()
            .map(|f| Value::String(f.to_char().to_string()))
            .collect();
        value
            .as_object_mut()
            .expect("tiling json is an object")
            .insert("filling".to_string(), Value::Array(fills));
        value
    }

    pub fn from_json(value: &Value) -> Result<Tableau, RatError> {
        let tiling = Tiling::from_json(value)?;
        let fills_json = value
            .get("filling")
            .and_then(Value::as_array)
            .ok_or_else(|| RatError::BadJson {
                reason: "missing array field `filling`".to_string(),
            })?;
        let mut fills = Vec::with_capacity(fills_json.len());
        for f in fills_json {
            let fill = f
                .as_str()
                .and_then(|s| s.chars().next())
                .and_then(Fill::from_char)
                .ok_or_else(|| RatError::BadJson {
                    reason: "filling entries must be one of a, b, q, .".to_string(),
                })?;
            fills.push(fill);
        }
        Tableau::with_fills(tiling, &fills)
    }
}

/// Per-tile context assembled once per tiling: replay order plus strip
/// coordinates, so both forcing rules point forward along the order.
struct FillingContext {
    /// (tile, west strip index, north strip index) in replay order.
    order: Vec<(Tile, Option<usize>, Option<usize>)>,
    west_strips: usize,
    north_strips: usize,
}

fn filling_context(tiling: &Tiling) -> Result<FillingContext, RatError> {
    let strips = compute_strips(tiling)?;
    let order = crate::shapes::replay(tiling)?
        .into_iter()
        .map(|c| {
            let m = strips.membership(&c.tile);
            (c.tile, m.west.map(|(i, _)| i), m.north.map(|(i, _)| i))
        })
        .collect();
    Ok(FillingContext {
        order,
        west_strips: strips.west.len(),
        north_strips: strips.north.len(),
    })
}

/// Checks the filling rules: a `β` empties everything west of it in its
/// west-strip, an `α` empties everything above it in its north-strip,
/// every other tile holds `α`, `β` or `q`, and symbols only sit in tile
/// kinds with a matching edge.
pub fn validate_filling(tableau: &Tableau) -> Result<bool, RatError> {
    for tile in tableau.tiling.tiles() {
        if tableau.fill(tile).is_none() {
            return Err(RatError::MissingTile {
                tile: format!("{:?}", tile),
            });
        }
    }
    let ctx = filling_context(&tableau.tiling)?;
    let mut beta_seen = vec![false; ctx.west_strips];
    let mut alpha_seen = vec![false; ctx.north_strips];
    for (tile, west, north) in &ctx.order {
        let fill = tableau.fill(tile).expect("checked above");
        let forced = west.is_some_and(|w| beta_seen[w]) || north.is_some_and(|n| alpha_seen[n]);
        if forced {
            if fill != Fill::Empty {
                return Ok(false);
            }
            continue;
        }
        if fill == Fill::Empty || !Fill::allowed_in(tile.kind).contains(&fill) {
            return Ok(false);
        }
        match fill {
            Fill::Alpha => alpha_seen[north.expect("α tiles have a north strip")] = true,
            Fill::Beta => beta_seen[west.expect("β tiles have a west strip")] = true,
            _ => {}
        }
    }
    Ok(true)
}

struct FillingSearch<'a> {
    ctx: &'a FillingContext,
    tiling: &'a Tiling,
    beta_seen: Vec<bool>,
    alpha_seen: Vec<bool>,
    current: BTreeMap<Tile, Fill>,
    out: Vec<Tableau>,
    limit: usize,
}

impl FillingSearch<'_> {
    fn dfs(&mut self, depth: usize) -> Result<(), RatError> {
        if depth == self.ctx.order.len() {
            if self.out.len() == self.limit {
                return Err(RatError::CapacityExceeded { limit: self.limit });
            }
            self.out
                .push(Tableau::new(self.tiling.clone(), self.current.clone()));
            return Ok(());
        }
        let (tile, west, north) = self.ctx.order[depth];
        let forced =
            west.is_some_and(|w| self.beta_seen[w]) || north.is_some_and(|n| self.alpha_seen[n]);
        if forced {
            self.current.insert(tile, Fill::Empty);
            self.dfs(depth + 1)?;
            self.current.remove(&tile);
            return Ok(());
        }
        for &fill in Fill::allowed_in(tile.kind) {
            self.current.insert(tile, fill);
            match fill {
                Fill::Alpha => self.alpha_seen[north.expect("α implies north strip")] = true,
                Fill::Beta => self.beta_seen[west.expect("β implies west strip")] = true,
                _ => {}
            }
            self.dfs(depth + 1)?;
            match fill {
                Fill::Alpha => self.alpha_seen[north.unwrap()] = false,
                Fill::Beta => self.beta_seen[west.unwrap()] = false,
                _ => {}
            }
            self.current.remove(&tile);
        }
        Ok(())
    }
}

/// All valid tableaux on a tiling, sorted by their filling vector under
/// `a < b < q < .` in serialization tile order.
pub fn enumerate_fillings(tiling: &Tiling, limit: usize) -> Result<Vec<Tableau>, RatError> {
    let ctx = filling_context(tiling)?;
    let mut search = FillingSearch {
        beta_seen: vec![false; ctx.west_strips],
        alpha_seen: vec![false; ctx.north_strips],
        ctx: &ctx,
        tiling,
        current: BTreeMap::new(),
        out: Vec::new(),
        limit,
    };
    search.dfs(0)?;
    let mut out = search.out;
    out.sort_by_key(|t| t.fills());
    Ok(out)
}

/// Weight of a tableau: `α^k β^ℓ` times the product of its symbols — a
/// single Laurent monomial.
pub fn tableau_weight(tableau: &Tableau) -> Result<Weight, RatError> {
    if !validate_filling(tableau)? {
        return Err(RatError::InvalidTableau);
    }
    Ok(tableau_weight_unchecked(tableau))
}

pub(crate) fn tableau_weight_unchecked(tableau: &Tableau) -> Weight {
    let word = tableau.word();
    let mut exps = Exponents::new(word.heavies() as i64, word.holes() as i64, 0);
    for fill in tableau.filling.values() {
        match fill {
            Fill::Alpha => exps.a += 1,
            Fill::Beta => exps.b += 1,
            Fill::Q => exps.q += 1,
            Fill::Empty => {}
        }
    }
    Weight::monomial(exps, Rational::one())
}

/// Weight generating function of a state: sum of tableau weights over
/// the canonical tiling (any tiling gives the same polynomial).
pub fn state_weight(word: &StateWord, limit: usize) -> Result<Weight, RatError> {
    let tiling = canonical_tiling(&build_diagram(word));
    state_weight_on(&tiling, limit)
}

/// Weight generating function computed on one specific tiling.
pub fn state_weight_on(tiling: &Tiling, limit: usize) -> Result<Weight, RatError> {
    let mut total = Weight::zero();
    for tableau in enumerate_fillings(tiling, limit)? {
        total = total.add(&tableau_weight_unchecked(&tableau));
    }
    Ok(total)
}

/// Partition function: the sum of `state_weight` over every word of
/// length `n` with exactly `r` lights.
pub fn partition_function(n: usize, r: usize, limit: usize) -> Result<Weight, RatError> {
    assert!(r <= n, "need 0 <= r <= n");
    let mut total = Weight::zero();
    for word in crate::asep::enumerate_states(n, r) {
        total = total.add(&state_weight(&word, limit)?);
    }
    Ok(total)
}

/// Partition function with the per-state sums spread over `jobs`
/// threads. The words are chunked deterministically and the partial
/// sums merged in chunk order, so the result is identical to the
/// sequential one.
pub fn partition_function_jobs(
    n: usize,
    r: usize,
    limit: usize,
    jobs: usize,
) -> Result<Weight, RatError> {
    if jobs <= 1 {
        return partition_function(n, r, limit);
    }
    let words = crate::asep::enumerate_states(n, r);
    if words.is_empty() {
        return Ok(Weight::zero());
    }
    let chunk_size = words.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = words
            .chunks(chunk_size)
            .map(|chunk| {
                scope.spawn(move || -> Result<Weight, RatError> {
                    let mut partial = Weight::zero();
                    for word in chunk {
                        partial = partial.add(&state_weight(word, limit)?);
                    }
                    Ok(partial)
                })
            })
            .collect();
        let mut total = Weight::zero();
        for handle in handles {
            total = total.add(&handle.join().expect("worker panicked")?);
        }
        Ok(total)
    })
}

/// Closed product form of the partition function at `q = 1`:
/// `(αβ)^(n−r) · C(n,r) · ∏_{i=r}^{n−1} (α⁻¹ + β⁻¹ + i)`, expanded
/// exactly. The product is empty when `r = n`.
pub fn closed_form_partition(n: usize, r: usize) -> Weight {
    assert!(r <= n, "need 0 <= r <= n");
    let inv_a = Weight::monomial(Exponents::new(-1, 0, 0), Rational::one());
    let inv_b = Weight::monomial(Exponents::new(0, -1, 0), Rational::one());
    let mut product = Weight::monomial(
        Exponents::new((n - r) as i64, (n - r) as i64, 0),
        Rational::from_integer(binomial(n as u64, r as u64)),
    );
    for i in r..n {
        let factor = inv_a
            .add(&inv_b)
            .add(&Weight::constant(Rational::from_integer(crate::Int::from(
                i,
            ))));
        product = product.mul(&factor);
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_word;

    fn tiling_of(word: &str) -> Tiling {
        canonical_tiling(&build_diagram(&parse_word(word).unwrap()))
    }

    fn weight_of_str(word: &str) -> Weight {
        state_weight(&parse_word(word).unwrap(), 10_000).unwrap()
    }

    fn mono(a: i64, b: i64, q: i64) -> Weight {
        Weight::monomial(Exponents::new(a, b, q), Rational::one())
    }

    #[test]
    fn validate_single_square() {
        let tiling = tiling_of("DE");
        let q = Tableau::with_fills(tiling.clone(), &[Fill::Q]).unwrap();
        assert!(validate_filling(&q).unwrap());
        let empty = Tableau::with_fills(tiling, &[Fill::Empty]).unwrap();
        assert!(!validate_filling(&empty).unwrap());
    }

    #[test]
    fn alpha_needs_a_horizontal_edge() {
        let tall = Tableau::with_fills(tiling_of("DA"), &[Fill::Alpha]).unwrap();
        assert!(!validate_filling(&tall).unwrap());
        let short = Tableau::with_fills(tiling_of("AE"), &[Fill::Beta]).unwrap();
        assert!(!validate_filling(&short).unwrap());
    }

    #[test]
    fn missing_fill_is_a_structural_error() {
        let tiling = tiling_of("DE");
        let tableau = Tableau::new(tiling, BTreeMap::new());
        assert!(matches!(
            validate_filling(&tableau),
            Err(RatError::MissingTile { .. })
        ));
    }

    #[test]
    fn enumerate_small_tilings() {
        assert_eq!(enumerate_fillings(&tiling_of("DE"), 100).unwrap().len(), 3);
        assert_eq!(enumerate_fillings(&tiling_of("DA"), 100).unwrap().len(), 2);
        let ed = enumerate_fillings(&tiling_of("ED"), 100).unwrap();
        assert_eq!(ed.len(), 1);
        assert_eq!(ed[0].fills(), Vec::new());
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_fillings(&tiling_of("DE"), 2),
            Err(RatError::CapacityExceeded { limit: 2 })
        ));
    }

    #[test]
    fn weights_of_trivial_tableaux() {
        let empty = Tableau::with_fills(tiling_of("ED"), &[]).unwrap();
        assert_eq!(tableau_weight(&empty).unwrap(), mono(1, 1, 0));
        let alpha = Tableau::with_fills(tiling_of("DE"), &[Fill::Alpha]).unwrap();
        assert_eq!(tableau_weight(&alpha).unwrap(), mono(2, 1, 0));
    }

    #[test]
    fn invalid_tableau_has_no_weight() {
        let empty = Tableau::with_fills(tiling_of("DE"), &[Fill::Empty]).unwrap();
        assert_eq!(tableau_weight(&empty), Err(RatError::InvalidTableau));
    }

    #[test]
    fn state_weights_match_hand_enumeration() {
        // DE: single square filled α, β or q, prefactor αβ.
        let expected = mono(2, 1, 0).add(&mono(1, 2, 0)).add(&mono(1, 1, 1));
        assert_eq!(weight_of_str("DE"), expected);
        assert_eq!(weight_of_str("ED"), mono(1, 1, 0));
        // AE: single short tile, α or q, prefactor β.
        assert_eq!(weight_of_str("AE"), mono(1, 1, 0).add(&mono(0, 1, 1)));
    }

    #[test]
    fn partition_function_small_cases() {
        let z10 = partition_function(1, 0, 1000).unwrap();
        assert_eq!(z10, Weight::alpha().add(&Weight::beta()));
        assert_eq!(partition_function(1, 1, 1000).unwrap(), Weight::one());

        let z21 = partition_function(2, 1, 1000).unwrap().substitute_q_one();
        let two = Rational::from_integer(crate::Int::from(2));
        let expected = Weight::alpha()
            .scale(&two)
            .add(&Weight::beta().scale(&two))
            .add(&Weight::alpha().mul(&Weight::beta()).scale(&two));
        assert_eq!(z21, expected);
    }

    #[test]
    fn closed_form_matches_partition_function() {
        assert_eq!(
            closed_form_partition(1, 0),
            Weight::alpha().add(&Weight::beta())
        );
        for n in 0..=4 {
            assert_eq!(closed_form_partition(n, n), Weight::one());
        }
        for n in 1..=4 {
            for r in 0..=n {
                let z = partition_function(n, r, 100_000)
                    .unwrap()
                    .substitute_q_one();
                assert_eq!(z, closed_form_partition(n, r), "(n, r) = ({n}, {r})");
            }
        }
    }

    #[test]
    fn tableau_json_round_trip() {
        for tableau in enumerate_fillings(&tiling_of("DDEA"), 1000).unwrap() {
            let decoded = Tableau::from_json(&tableau.to_json()).unwrap();
            assert_eq!(decoded, tableau);
        }
    }
}
