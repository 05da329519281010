//! State words, rhombic diagrams, rhombus tilings and strip decompositions.
//!
//! Geometry convention: the northeast corner of a diagram sits at the
//! origin and the three unit steps are `W = (-1, 0)`, `S = (0, -1)` and
//! `SW = (-1, -1)`. Both boundary paths run from the origin to the
//! southwest corner; with this choice the area of the diagram equals the
//! inversion count of its word.

mod diagram;
mod strips;
mod tiling;

pub use diagram::{build_diagram, RhombicDiagram};
pub use strips::{compute_strips, Strip, StripDecomposition, StripFamily, TileMembership};
pub use tiling::{
    apply_flip, canonical_tiling, enumerate_tilings, flippable_centers, replay, Crossing, Tile,
    TileKind, Tiling,
};

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("illegal character `{character}` at position {position} (expected D, A or E)")]
    Parse { position: usize, character: char },
    #[error("empty word")]
    EmptyWord,
    #[error("enumeration guard exceeded (limit {limit})")]
    CapacityExceeded { limit: usize },
    #[error("invalid tiling: {reason}")]
    InvalidTiling { reason: String },
    #[error("no flippable hexagon centered at ({x}, {y})")]
    InvalidFlip { x: i64, y: i64 },
    #[error("malformed JSON: {reason}")]
    BadJson { reason: String },
}

/// One site of a state word: heavy particle, light particle or hole.
///
/// The derived order `Heavy < Light < Hole` is the lexicographic order
/// `D < A < E` used when listing states. For inversion counting use
/// [`Symbol::heaviness`], which orders `Hole < Light < Heavy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Heavy,
    Light,
    Hole,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Heavy, Symbol::Light, Symbol::Hole];

    pub fn to_char(self) -> char {
        match self {
            Symbol::Heavy => 'D',
            Symbol::Light => 'A',
            Symbol::Hole => 'E',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            'D' => Some(Symbol::Heavy),
            'A' => Some(Symbol::Light),
            'E' => Some(Symbol::Hole),
            _ => None,
        }
    }

    /// Rank under the hopping order `Hole < Light < Heavy`.
    pub fn heaviness(self) -> u8 {
        match self {
            Symbol::Hole => 0,
            Symbol::Light => 1,
            Symbol::Heavy => 2,
        }
    }

    pub fn step(self) -> Step {
        match self {
            Symbol::Hole => Step::W,
            Symbol::Light => Step::SW,
            Symbol::Heavy => Step::S,
        }
    }
}

/// A word over `{D, A, E}` naming a two-species exclusion-process state.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateWord {
    symbols: Vec<Symbol>,
}

impl StateWord {
    pub fn new(symbols: Vec<Symbol>) -> StateWord {
        StateWord { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of heavy particles.
    pub fn heavies(&self) -> usize {
        self.count(Symbol::Heavy)
    }

    /// Number of light particles.
    pub fn lights(&self) -> usize {
        self.count(Symbol::Light)
    }

    /// Number of holes.
    pub fn holes(&self) -> usize {
        self.count(Symbol::Hole)
    }

    fn count(&self, s: Symbol) -> usize {
        self.symbols.iter().filter(|&&x| x == s).count()
    }

    /// Pairs `i < j` whose symbols are out of order under
    /// `Hole < Light < Heavy`; equals the diagram area.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.symbols.len() {
            for j in i + 1..self.symbols.len() {
                if self.symbols[i].heaviness() > self.symbols[j].heaviness() {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Parses a `D`/`A`/`E` word; reports the position of the first illegal
/// character.
pub fn parse_word(text: &str) -> Result<StateWord, ShapeError> {
    if text.is_empty() {
        return Err(ShapeError::EmptyWord);
    }
    let mut symbols = Vec::with_capacity(text.len());
    for (position, character) in text.chars().enumerate() {
        match Symbol::from_char(character) {
            Some(s) => symbols.push(s),
            None => {
                return Err(ShapeError::Parse {
                    position,
                    character,
                })
            }
        }
    }
    Ok(StateWord::new(symbols))
}

/// Boundary path step. The sort order `W < SW < S` is the sorted
/// (northwest path) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    W,
    SW,
    S,
}

impl Step {
    pub fn offset(self) -> (i64, i64) {
        match self {
            Step::W => (-1, 0),
            Step::SW => (-1, -1),
            Step::S => (0, -1),
        }
    }
}

/// Lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }

    pub fn step(self, s: Step) -> Point {
        let (dx, dy) = s.offset();
        Point::new(self.x + dx, self.y + dy)
    }
}

/// Orientation of a unit edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeDirection {
    Horizontal,
    Vertical,
    Diagonal,
}

/// Undirected unit edge, stored with endpoints in lexicographic order so
/// the same geometric edge always compares equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Point,
    hi: Point,
}

impl Edge {
    pub fn new(p: Point, q: Point) -> Edge {
        if (p.x, p.y) <= (q.x, q.y) {
            Edge { lo: p, hi: q }
        } else {
            Edge { lo: q, hi: p }
        }
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.lo, self.hi)
    }

    pub fn direction(&self) -> EdgeDirection {
        match (self.hi.x - self.lo.x, self.hi.y - self.lo.y) {
            (1, 0) => EdgeDirection::Horizontal,
            (0, 1) => EdgeDirection::Vertical,
            (1, 1) => EdgeDirection::Diagonal,
            _ => unreachable!("non-unit edge"),
        }
    }

    pub fn midpoint_doubled(&self) -> (i64, i64) {
        (self.lo.x + self.hi.x, self.lo.y + self.hi.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_running_word() {
        let w = parse_word("DDEADEEEADE").unwrap();
        assert_eq!(w.len(), 11);
        assert_eq!(w.heavies(), 4);
        assert_eq!(w.lights(), 2);
        assert_eq!(w.holes(), 5);
        assert_eq!(w.to_string(), "DDEADEEEADE");
    }

    #[test]
    fn parses_single_symbols() {
        let w = parse_word("E").unwrap();
        assert_eq!((w.len(), w.heavies(), w.lights(), w.holes()), (1, 0, 0, 1));
        let w = parse_word("DA").unwrap();
        assert_eq!((w.len(), w.heavies(), w.lights(), w.holes()), (2, 1, 1, 0));
    }

    #[test]
    fn rejects_bad_characters() {
        assert_eq!(
            parse_word("DAX"),
            Err(ShapeError::Parse {
                position: 2,
                character: 'X'
            })
        );
        assert_eq!(parse_word(""), Err(ShapeError::EmptyWord));
    }

    #[test]
    fn edge_normalization() {
        let e1 = Edge::new(Point::new(0, 0), Point::new(-1, 0));
        let e2 = Edge::new(Point::new(-1, 0), Point::new(0, 0));
        assert_eq!(e1, e2);
        assert_eq!(e1.direction(), EdgeDirection::Horizontal);
        assert_eq!(
            Edge::new(Point::new(0, 0), Point::new(0, -1)).direction(),
            EdgeDirection::Vertical
        );
        assert_eq!(
            Edge::new(Point::new(0, 0), Point::new(-1, -1)).direction(),
            EdgeDirection::Diagonal
        );
    }
}
