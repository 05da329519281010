//! Exact two-species exclusion process: state space, continuous-time
//! generator, stationary distribution and the stationarity check against
//! the tableau weights.
//!
//! Dynamics: adjacent sites swap at rate 1 when the heavier particle is
//! on the left and at rate `q` when it is on the right (under the order
//! hole < light < heavy); a heavy enters at the left boundary at rate
//! `α` when site 1 is a hole, and exits at the right boundary at rate
//! `β`. The light-particle count is conserved, so the chain lives on the
//! words with exactly `r` lights.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{rational_to_string, AlgebraError};
use crate::rat::{partition_function, state_weight, RatError};
use crate::shapes::{StateWord, Symbol};
use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AsepError {
    #[error("rate {name} = {value} must be positive")]
    NonPositiveRate { name: String, value: String },
    #[error("rate {name} = {value} must be non-negative")]
    NegativeRate { name: String, value: String },
    #[error("chain is reducible: generator rank is deficient")]
    Reducible,
    #[error("stationarity check limited to n <= {max}, got n = {n}")]
    SizeGuard { n: usize, max: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rat(#[from] RatError),
}

/// All words of length `n` with exactly `r` lights, in lexicographic
/// order under `D < A < E`.
pub fn enumerate_states(n: usize, r: usize) -> Vec<StateWord> {
    assert!(r <= n, "need 0 <= r <= n");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn extend(prefix: &mut Vec<Symbol>, n: usize, lights_left: usize, out: &mut Vec<StateWord>) {
        let remaining = n - prefix.len();
        if remaining == 0 {
            out.push(StateWord::new(prefix.clone()));
            return;
        }
        for s in Symbol::ALL {
            let lights = match s {
                Symbol::Light => {
                    if lights_left == 0 {
                        continue;
                    }
                    lights_left - 1
                }
                _ => {
                    if lights_left >= remaining {
                        continue;
                    }
                    lights_left
                }
            };
            prefix.push(s);
            extend(prefix, n, lights, out);
            prefix.pop();
        }
    }
    extend(&mut prefix, n, r, &mut out);
    out
}

/// All words of length `n`, any light count.
pub fn all_words(n: usize) -> Vec<StateWord> {
    (0..=n).flat_map(|r| enumerate_states(n, r)).collect()
}

/// Continuous-time generator on the states of `B_n^r`: sparse
/// off-diagonal rates plus the negated row sums on the diagonal.
#[derive(Debug, Clone)]
pub struct MarkovGenerator {
    states: Vec<StateWord>,
    rates: BTreeMap<(usize, usize), Rational>,
    diagonal: Vec<Rational>,
}

impl MarkovGenerator {
    pub fn states(&self) -> &[StateWord] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn rate(&self, from: usize, to: usize) -> Rational {
        if from == to {
            self.diagonal[from].clone()
        } else {
            self.rates
                .get(&(from, to))
                .cloned()
                .unwrap_or_else(Rational::zero)
        }
    }

    pub fn transitions(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.rates.iter()
    }
}

/// Builds the generator for `B_n^r` at rates `α = a`, `β = b`, `q`.
pub fn build_generator(
    n: usize,
    r: usize,
    a: &Rational,
    b: &Rational,
    q: &Rational,
) -> Result<MarkovGenerator, AsepError> {
    crate::algebra::require_positive("alpha", a)?;
    crate::algebra::require_positive("beta", b)?;
    crate::algebra::require_nonnegative("q", q)?;

    let states = enumerate_states(n, r);
    let index: BTreeMap<StateWord, usize> = states.iter().cloned().zip(0..).collect();
    let mut rates: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut diagonal = vec![Rational::zero(); states.len()];

    let add = |rates: &mut BTreeMap<(usize, usize), Rational>,
               diagonal: &mut Vec<Rational>,
               from: usize,
               to: usize,
               rate: Rational| {
        if rate.is_zero() || from == to {
            return;
        }
        *rates.entry((from, to)).or_insert_with(Rational::zero) += rate.clone();
        diagonal[from] -= rate;
    };

    for (i, word) in states.iter().enumerate() {
        let symbols = word.symbols();
        for site in 0..n.saturating_sub(1) {
            let (left, right) = (symbols[site], symbols[site + 1]);
            if left.heaviness() == right.heaviness() {
                continue;
            }
            let mut swapped = symbols.to_vec();
            swapped.swap(site, site + 1);
            let j = index[&StateWord::new(swapped)];
            let rate = if left.heaviness() > right.heaviness() {
                Rational::one()
            } else {
                q.clone()
            };
            add(&mut rates, &mut diagonal, i, j, rate);
        }
        if n > 0 && symbols[0] == Symbol::Hole {
            let mut entered = symbols.to_vec();
            entered[0] = Symbol::Heavy;
            let j = index[&StateWord::new(entered)];
            add(&mut rates, &mut diagonal, i, j, a.clone());
        }
        if n > 0 && symbols[n - 1] == Symbol::Heavy {
            let mut exited = symbols.to_vec();
            exited[n - 1] = Symbol::Hole;
            let j = index[&StateWord::new(exited)];
            add(&mut rates, &mut diagonal, i, j, b.clone());
        }
    }

    Ok(MarkovGenerator {
        states,
        rates,
        diagonal,
    })
}

/// Exact stationary distribution: the probability vector `π` with
/// `πG = 0` and `Σπ = 1`, obtained by replacing one redundant balance
/// equation with the normalization row and solving fraction-free.
pub fn stationary_distribution(g: &MarkovGenerator) -> Result<Vec<Rational>, AsepError> {
    let n = g.state_count();
    // Row j of the system is the balance equation of state j; the rows
    // of the generator sum to zero, so the last one is redundant.
    let mut matrix = vec![vec![Rational::zero(); n]; n];
    for (j, row) in matrix.iter_mut().enumerate() {
        for (i, entry) in row.iter_mut().enumerate() {
            *entry = g.rate(i, j);
        }
    }
    let mut rhs = vec![Rational::zero(); n];
    matrix[n - 1] = vec![Rational::one(); n];
    rhs[n - 1] = Rational::one();
    let pi = crate::algebra::linalg::solve_rational_system(&matrix, &rhs)
        .map_err(|_| AsepError::Reducible)?;
    debug_assert!(verify_balance(g, &pi));
    Ok(pi)
}

fn verify_balance(g: &MarkovGenerator, pi: &[Rational]) -> bool {
    let n = g.state_count();
    (0..n).all(|j| {
        pi.iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (i, p)| {
                acc + p.clone() * g.rate(i, j)
            })
            .is_zero()
    }) && pi.iter().fold(Rational::zero(), |s, x| s + x).is_one()
}

/// One state's stationarity comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StationarityRow {
    pub word: StateWord,
    pub pi: Rational,
    pub tableau_ratio: Rational,
    pub matches: bool,
}

/// Outcome of checking `π(X) = weight(X) / Z` exactly on every state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StationarityReport {
    pub n: usize,
    pub r: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub q: Rational,
    pub rows: Vec<StationarityRow>,
    pub pass: bool,
}

impl StationarityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "params": {
                "alpha": rational_to_string(&self.alpha),
                "beta": rational_to_string(&self.beta),
                "q": rational_to_string(&self.q),
            },
            "states": self
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "word": row.word.to_string(),
                        "pi": rational_to_string(&row.pi),
                        "tableau_ratio": rational_to_string(&row.tableau_ratio),
                        "match": row.matches,
                    })
                })
                .collect::<Vec<_>>(),
            "pass": self.pass,
        })
    }
}

/// Maximum lattice size accepted by [`verify_stationarity`].
pub const STATIONARITY_MAX_N: usize = 6;

/// Solves the chain exactly and compares every stationary probability
/// with the evaluated tableau ratio `weight(X)/Z`, with zero tolerance.
pub fn verify_stationarity(
    n: usize,
    r: usize,
    a: &Rational,
    b: &Rational,
    q: &Rational,
    limit: usize,
) -> Result<StationarityReport, AsepError> {
    if n > STATIONARITY_MAX_N {
        return Err(AsepError::SizeGuard {
            n,
            max: STATIONARITY_MAX_N,
        });
    }
    let generator = build_generator(n, r, a, b, q)?;
    let pi = stationary_distribution(&generator)?;
    let z = partition_function(n, r, limit)?.eval(a, b, q)?;
    let mut rows = Vec::with_capacity(generator.state_count());
    let mut pass = true;
    for (i, word) in generator.states().iter().enumerate() {
        let ratio = state_weight(word, limit)?.eval(a, b, q)? / z.clone();
        let matches = ratio == pi[i];
        pass &= matches;
        rows.push(StationarityRow {
            word: word.clone(),
            pi: pi[i].clone(),
            tableau_ratio: ratio,
            matches,
        });
    }
    Ok(StationarityReport {
        n,
        r,
        alpha: a.clone(),
        beta: b.clone(),
        q: q.clone(),
        rows,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn rat(text: &str) -> Rational {
        parse_rational(text).unwrap()
    }

    fn words(items: &[&str]) -> Vec<StateWord> {
        items
            .iter()
            .map(|w| crate::shapes::parse_word(w).unwrap())
            .collect()
    }

    #[test]
    fn state_enumeration_order() {
        assert_eq!(enumerate_states(2, 1), words(&["DA", "AD", "AE", "EA"]));
        assert_eq!(enumerate_states(1, 0), words(&["D", "E"]));
        assert_eq!(enumerate_states(2, 2), words(&["AA"]));
        for n in 0..=6 {
            for r in 0..=n {
                let count = enumerate_states(n, r).len();
                let expected = crate::algebra::binomial(n as u64, r as u64)
                    * crate::Int::from(1u64 << (n - r));
                assert_eq!(crate::Int::from(count), expected);
            }
        }
    }

    #[test]
    fn two_state_chain() {
        let g = build_generator(1, 0, &rat("1/2"), &rat("1/3"), &rat("1")).unwrap();
        // states [D, E]: E -> D at α, D -> E at β.
        assert_eq!(g.rate(1, 0), rat("1/2"));
        assert_eq!(g.rate(0, 1), rat("1/3"));
        let pi = stationary_distribution(&g).unwrap();
        assert_eq!(pi, vec![rat("3/5"), rat("2/5")]);
    }

    #[test]
    fn bulk_swap_rates() {
        let q = rat("2/5");
        let g = build_generator(2, 1, &rat("1"), &rat("1"), &q).unwrap();
        let states = enumerate_states(2, 1);
        let at = |w: &str| states.iter().position(|s| s.to_string() == w).unwrap();
        assert_eq!(g.rate(at("DA"), at("AD")), rat("1"));
        assert_eq!(g.rate(at("AD"), at("DA")), q);
        assert_eq!(g.rate(at("AE"), at("EA")), rat("1"));
        assert_eq!(g.rate(at("EA"), at("AE")), q);
        assert_eq!(g.rate(at("EA"), at("DA")), rat("1"));
        assert_eq!(g.rate(at("AD"), at("AE")), rat("1"));
    }

    #[test]
    fn absorbing_all_light_state() {
        let g = build_generator(2, 2, &rat("1"), &rat("1"), &rat("1")).unwrap();
        assert_eq!(g.state_count(), 1);
        assert_eq!(g.rate(0, 0), rat("0"));
        assert_eq!(stationary_distribution(&g).unwrap(), vec![rat("1")]);
    }

    #[test]
    fn light_count_is_conserved_and_r0_has_no_lights() {
        let g = build_generator(3, 1, &rat("1/2"), &rat("1/3"), &rat("2/5")).unwrap();
        for (&(i, j), rate) in g.transitions() {
            assert!(rate > &Rational::zero());
            assert_eq!(
                g.states()[i].lights(),
                g.states()[j].lights(),
                "{} -> {}",
                g.states()[i],
                g.states()[j]
            );
        }
        let classical = build_generator(3, 0, &rat("1"), &rat("1"), &rat("1")).unwrap();
        for word in classical.states() {
            assert_eq!(word.lights(), 0);
        }
    }

    #[test]
    fn rejects_bad_rates() {
        assert!(matches!(
            build_generator(2, 0, &rat("0"), &rat("1"), &rat("1")),
            Err(AsepError::NonPositiveRate { .. })
        ));
        assert!(matches!(
            build_generator(2, 0, &rat("1"), &rat("1"), &rat("-1")),
            Err(AsepError::NegativeRate { .. })
        ));
    }

    #[test]
    fn stationarity_examples_pass() {
        let checks = [
            (1, 0, "1/2", "1/3", "2/5"),
            (2, 1, "1/2", "1/3", "2/5"),
            (3, 1, "2/7", "3/5", "1/3"),
            (2, 0, "1", "1", "1"),
            (3, 2, "4/3", "5/2", "0"),
        ];
        for (n, r, a, b, q) in checks {
            let report = verify_stationarity(n, r, &rat(a), &rat(b), &rat(q), 100_000).unwrap();
            assert!(report.pass, "(n, r) = ({n}, {r})");
            assert_eq!(report.rows.len(), enumerate_states(n, r).len());
        }
    }

    #[test]
    fn size_guard_fires() {
        assert!(matches!(
            verify_stationarity(7, 0, &rat("1"), &rat("1"), &rat("1"), 10),
            Err(AsepError::SizeGuard { n: 7, max: 6 })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report =
            verify_stationarity(1, 0, &rat("1/2"), &rat("1/3"), &rat("2/5"), 1000).unwrap();
        let value = report.to_json();
        assert_eq!(value["pass"], Value::Bool(true));
        assert_eq!(value["states"][0]["word"], "D");
        assert_eq!(value["states"][0]["pi"], "3/5");
    }
}
