use std::collections::BTreeMap;

use super::{replay, Edge, ShapeError, Symbol, Tile, TileKind, Tiling};

/// Strip family: west-strips glue along vertical edges (one per heavy),
/// north-strips along horizontal edges (one per hole), northwest-strips
/// along diagonal edges (one per light).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StripFamily {
    West,
    North,
    Northwest,
}

impl StripFamily {
    pub fn of_symbol(symbol: Symbol) -> StripFamily {
        match symbol {
            Symbol::Heavy => StripFamily::West,
            Symbol::Hole => StripFamily::North,
            Symbol::Light => StripFamily::Northwest,
        }
    }
}

/// A maximal tile chain traced by one wire of the sorting network, from
/// its southeast boundary edge to its northwest boundary edge. A strip
/// with no tiles is degenerate: its two boundary edges coincide.
#[derive(Debug, Clone)]
pub struct Strip {
    pub family: StripFamily,
    /// Position in the word of the symbol owning this strip.
    pub word_pos: usize,
    /// Tiles in trajectory order, southeast to northwest.
    pub tiles: Vec<Tile>,
    pub se_edge: Edge,
    pub nw_edge: Edge,
}

impl Strip {
    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Exit edge of the wire at one of this strip's tiles.
    fn exit_edge(&self, tile: &Tile) -> Edge {
        match self.family {
            StripFamily::West => tile.west_edge(),
            StripFamily::North => tile.north_edge(),
            StripFamily::Northwest => match tile.kind {
                TileKind::Tall => tile.north_edge(),
                _ => tile.west_edge(),
            },
        }
    }

    /// Every edge the wire labels on its way northwest: the southeast
    /// boundary edge followed by the exit edge of each tile. The last
    /// entry is the northwest boundary edge.
    pub fn edge_chain(&self) -> Vec<Edge> {
        let mut chain = vec![self.se_edge];
        chain.extend(self.tiles.iter().map(|t| self.exit_edge(t)));
        chain
    }
}

/// For one tile, its location `(strip index within family, position
/// along the strip)` in each of the two families it belongs to.
#[derive(Debug, Clone, Copy, Default)]
pub struct TileMembership {
    pub west: Option<(usize, usize)>,
    pub north: Option<(usize, usize)>,
    pub northwest: Option<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct StripDecomposition {
    /// West-strips in word order of the heavies (top to bottom on the
    /// northwest boundary).
    pub west: Vec<Strip>,
    /// North-strips in word order of the holes (east to west on the
    /// northwest boundary).
    pub north: Vec<Strip>,
    /// Northwest-strips in word order of the lights (northeast to
    /// southwest on the northwest boundary).
    pub northwest: Vec<Strip>,
    membership: BTreeMap<Tile, TileMembership>,
}

impl StripDecomposition {
    pub fn membership(&self, tile: &Tile) -> &TileMembership {
        &self.membership[tile]
    }

    pub fn strip(&self, family: StripFamily, index: usize) -> &Strip {
        match family {
            StripFamily::West => &self.west[index],
            StripFamily::North => &self.north[index],
            StripFamily::Northwest => &self.northwest[index],
        }
    }
}

/// Traces every strip of a tiling by replaying its sorting network: each
/// crossing extends the two wires that meet there, so per-wire tile lists
/// come out in trajectory order. Empty strips pair their southeast edge
/// with the (geometrically identical) northwest edge.
pub fn compute_strips(tiling: &Tiling) -> Result<StripDecomposition, ShapeError> {
    let diagram = tiling.diagram();
    let word = diagram.word();
    let n = word.len();
    let crossings = replay(tiling)?;

    let mut wire_tiles: Vec<Vec<Tile>> = vec![Vec::new(); n];
    for c in &crossings {
        wire_tiles[c.east_wire].push(c.tile);
        wire_tiles[c.south_wire].push(c.tile);
    }

    // Family index of each wire: rank among same-symbol positions.
    let mut family_index = vec![0usize; n];
    let mut counts: BTreeMap<Symbol, usize> = BTreeMap::new();
    for (pos, &s) in word.symbols().iter().enumerate() {
        let slot = counts.entry(s).or_insert(0);
        family_index[pos] = *slot;
        *slot += 1;
    }

    let se_edges = diagram.se_edges();
    let nw_edges = diagram.nw_edges();
    let mut west = Vec::new();
    let mut north = Vec::new();
    let mut northwest = Vec::new();
    for (pos, &symbol) in word.symbols().iter().enumerate() {
        let strip = Strip {
            family: StripFamily::of_symbol(symbol),
            word_pos: pos,
            tiles: wire_tiles[pos].clone(),
            se_edge: se_edges[pos],
            nw_edge: nw_edges[diagram.nw_index_of_wire(pos)],
        };
        match strip.family {
            StripFamily::West => west.push(strip),
            StripFamily::North => north.push(strip),
            StripFamily::Northwest => northwest.push(strip),
        }
    }

    let mut membership: BTreeMap<Tile, TileMembership> = tiling
        .tiles()
        .map(|&t| (t, TileMembership::default()))
        .collect();
    let all = [&west, &north, &northwest];
    for strips in all {
        for (strip_idx, strip) in strips.iter().enumerate() {
            for (pos_along, tile) in strip.tiles.iter().enumerate() {
                let slot = membership.get_mut(tile).expect("tile from replay");
                match strip.family {
                    StripFamily::West => slot.west = Some((strip_idx, pos_along)),
                    StripFamily::North => slot.north = Some((strip_idx, pos_along)),
                    StripFamily::Northwest => slot.northwest = Some((strip_idx, pos_along)),
                }
            }
        }
    }

    let decomposition = StripDecomposition {
        west,
        north,
        northwest,
        membership,
    };
    for (tile, m) in &decomposition.membership {
        let ok = match tile.kind {
            TileKind::Square => m.west.is_some() && m.north.is_some() && m.northwest.is_none(),
            TileKind::Tall => m.west.is_some() && m.north.is_none() && m.northwest.is_some(),
            TileKind::Short => m.west.is_none() && m.north.is_some() && m.northwest.is_some(),
        };
        if !ok {
            return Err(ShapeError::InvalidTiling {
                reason: format!("tile {:?} is not in exactly two strips", tile),
            });
        }
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{build_diagram, canonical_tiling, enumerate_tilings, parse_word};

    fn strips_of(word: &str) -> StripDecomposition {
        let tiling = canonical_tiling(&build_diagram(&parse_word(word).unwrap()));
        compute_strips(&tiling).unwrap()
    }

    #[test]
    fn running_example_strip_counts() {
        let d = strips_of("DDEADEEEADE");
        assert_eq!(d.west.len(), 4);
        assert_eq!(d.north.len(), 5);
        assert_eq!(d.northwest.len(), 2);
    }

    #[test]
    fn degenerate_strips_pair_identical_edges() {
        let d = strips_of("ED");
        assert_eq!(d.west.len(), 1);
        assert_eq!(d.north.len(), 1);
        assert!(d.west[0].is_empty() && d.north[0].is_empty());
        assert_eq!(d.west[0].se_edge, d.west[0].nw_edge);
        assert_eq!(d.north[0].se_edge, d.north[0].nw_edge);
    }

    #[test]
    fn single_square_sits_in_both_strips() {
        let d = strips_of("DE");
        assert_eq!(d.west[0].tiles.len(), 1);
        assert_eq!(d.north[0].tiles.len(), 1);
        assert_eq!(d.west[0].tiles, d.north[0].tiles);
    }

    #[test]
    fn strip_counts_and_memberships_for_all_small_tilings() {
        for n in 1..=6 {
            for word in crate::asep::all_words(n) {
                let diagram = build_diagram(&word);
                for tiling in enumerate_tilings(&diagram, 10_000).unwrap() {
                    let d = compute_strips(&tiling).unwrap();
                    assert_eq!(d.west.len(), word.heavies(), "word {word}");
                    assert_eq!(d.north.len(), word.holes(), "word {word}");
                    assert_eq!(d.northwest.len(), word.lights(), "word {word}");
                    // Every tile lies in exactly two strips, matching its kind.
                    for tile in tiling.tiles() {
                        let m = d.membership(tile);
                        let families = [m.west.is_some(), m.north.is_some(), m.northwest.is_some()];
                        assert_eq!(families.iter().filter(|&&x| x).count(), 2);
                    }
                }
            }
        }
    }

    #[test]
    fn trajectory_orders_are_consistent_with_edges() {
        let d = strips_of("DDEADEEEADE");
        for strip in d.west.iter().chain(&d.north).chain(&d.northwest) {
            if let Some(first) = strip.tiles.first() {
                let entry = match strip.family {
                    StripFamily::West => first.east_edge(),
                    StripFamily::North => first.south_edge(),
                    StripFamily::Northwest => match first.kind {
                        TileKind::Tall => first.south_edge(),
                        _ => first.east_edge(),
                    },
                };
                assert_eq!(entry, strip.se_edge, "strip at {}", strip.word_pos);
            }
            if let Some(last) = strip.tiles.last() {
                let exit = match strip.family {
                    StripFamily::West => last.west_edge(),
                    StripFamily::North => last.north_edge(),
                    StripFamily::Northwest => match last.kind {
                        TileKind::Tall => last.north_edge(),
                        _ => last.west_edge(),
                    },
                };
                assert_eq!(exit, strip.nw_edge, "strip at {}", strip.word_pos);
            }
        }
    }
}
