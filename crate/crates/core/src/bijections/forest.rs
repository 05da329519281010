//! The forest of crossing binary trees behind a tableau, and the
//! label-passing algorithm that reads an assemblée off it.
//!
//! Strip center-lines are cut just past each `α` (north of it, in its
//! north-strip) and each `β` (west of it, in its west-strip). What
//! remains is a forest whose internal vertices are the `α`/`β` tiles,
//! whose leaves are the southeast boundary edges, and whose roots are
//! the surviving lines on the northwest boundary plus one trivial root
//! at the southwest point.

use std::collections::BTreeMap;

use super::{BijectionError, EdgeLabel};
use crate::assemblees::Assemblee;
use crate::rat::{validate_filling, Fill, Tableau};
use crate::shapes::{compute_strips, StripDecomposition, StripFamily, Symbol, Tile, TileKind};

/// Color class of a root: west roots are the red lines, north roots the
/// blue lines, northwest roots the green lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    West,
    Northwest,
    North,
}

#[derive(Debug, Clone)]
pub struct Root {
    pub class: RootClass,
    /// The strip whose line carries this root; `None` for the trivial
    /// root at the southwest point.
    pub strip: Option<(StripFamily, usize)>,
    pub leaf_count: usize,
    /// Consecutive interval assigned along the root order.
    pub label: EdgeLabel,
}

/// Line identifier: a strip family plus the strip's index in it.
type LineId = (StripFamily, usize);

pub struct Forest {
    /// Roots in total order: west roots top to bottom, then the trivial
    /// root and the northwest roots southwest to northeast, then the
    /// north roots left to right.
    pub roots: Vec<Root>,
    /// Branch vertices (the `α` and `β` tiles) in serialization order.
    pub vertices: Vec<Tile>,
    strips: StripDecomposition,
    /// Vertices sitting on each line as pass-through branch points,
    /// keyed by the line they do not terminate, sorted by position.
    through_vertices: BTreeMap<LineId, Vec<(usize, Tile)>>,
    /// For each vertex tile: the line it terminates and the position of
    /// the vertex along that line.
    cut_at: BTreeMap<Tile, (LineId, usize)>,
}

/// For a vertex tile, the line its fused label keeps following
/// (through) and the line that ends there (cut).
fn vertex_lines(
    tile: &Tile,
    fill: Fill,
    strips: &StripDecomposition,
) -> ((LineId, usize), (LineId, usize)) {
    let m = strips.membership(tile);
    let west = m.west.map(|(i, p)| ((StripFamily::West, i), p));
    let north = m.north.map(|(i, p)| ((StripFamily::North, i), p));
    let northwest = m.northwest.map(|(i, p)| ((StripFamily::Northwest, i), p));
    match (fill, tile.kind) {
        (Fill::Alpha, TileKind::Square) => (west.unwrap(), north.unwrap()),
        (Fill::Alpha, TileKind::Short) => (northwest.unwrap(), north.unwrap()),
        (Fill::Beta, TileKind::Square) => (north.unwrap(), west.unwrap()),
        (Fill::Beta, TileKind::Tall) => (northwest.unwrap(), west.unwrap()),
        _ => unreachable!("only α/β tiles are vertices"),
    }
}

/// Builds the forest of a valid tableau, with root labels assigned by
/// prefix sums of leaf counts along the root order.
pub fn build_forest(tableau: &Tableau) -> Result<Forest, BijectionError> {
    if !validate_filling(tableau)? {
        return Err(BijectionError::InvalidTableau);
    }
    let strips = compute_strips(tableau.tiling())?;

    let mut through_vertices: BTreeMap<LineId, Vec<(usize, Tile)>> = BTreeMap::new();
    let mut cut_at: BTreeMap<Tile, (LineId, usize)> = BTreeMap::new();
    let mut vertices = Vec::new();
    for tile in tableau.tiling().sorted_tiles() {
        let fill = tableau.fill(&tile).expect("validated filling");
        if fill != Fill::Alpha && fill != Fill::Beta {
            continue;
        }
        vertices.push(tile);
        let ((through_line, through_pos), (cut_line, cut_pos)) = vertex_lines(&tile, fill, &strips);
        through_vertices
            .entry(through_line)
            .or_default()
            .push((through_pos, tile));
        cut_at.insert(tile, (cut_line, cut_pos));
    }
    for list in through_vertices.values_mut() {
        list.sort_by_key(|&(pos, _)| pos);
    }
    let cut_lines: std::collections::BTreeSet<LineId> =
        cut_at.values().map(|&(line, _)| line).collect();

    let mut forest = Forest {
        roots: Vec::new(),
        vertices,
        strips,
        through_vertices,
        cut_at,
    };

    // Root order: red top→bottom, green southwest→northeast starting
    // with the trivial root, blue left→right.
    let mut ordered: Vec<(RootClass, Option<LineId>)> = Vec::new();
    for i in 0..forest.strips.west.len() {
        if !cut_lines.contains(&(StripFamily::West, i)) {
            ordered.push((RootClass::West, Some((StripFamily::West, i))));
        }
    }
    ordered.push((RootClass::Northwest, None));
    for i in (0..forest.strips.northwest.len()).rev() {
        ordered.push((RootClass::Northwest, Some((StripFamily::Northwest, i))));
    }
    for i in (0..forest.strips.north.len()).rev() {
        if !cut_lines.contains(&(StripFamily::North, i)) {
            ordered.push((RootClass::North, Some((StripFamily::North, i))));
        }
    }

    let mut next = 1u32;
    for (class, line) in ordered {
        let leaf_count = match line {
            None => 1,
            Some((family, idx)) => forest.leaf_count(family, idx, usize::MAX),
        };
        let label = EdgeLabel::interval(next, next + leaf_count as u32 - 1);
        next += leaf_count as u32;
        forest.roots.push(Root {
            class,
            strip: line,
            leaf_count,
            label,
        });
    }
    let n_plus_1 = tableau.word().len() as u32 + 1;
    if next != n_plus_1 + 1 {
        return Err(BijectionError::Termination {
            reason: format!(
                "forest leaves cover 1..{} instead of 1..{}",
                next - 1,
                n_plus_1
            ),
        });
    }
    Ok(forest)
}

impl Forest {
    /// Leaves reachable on a line southeast of `bound`: the line's own
    /// external vertex plus the subtrees hanging off its branch points.
    fn leaf_count(&self, family: StripFamily, idx: usize, bound: usize) -> usize {
        let mut total = 1;
        if let Some(verts) = self.through_vertices.get(&(family, idx)) {
            for &(pos, tile) in verts {
                if pos >= bound {
                    break;
                }
                let ((cut_family, cut_idx), cut_pos) = self.cut_at[&tile];
                total += self.leaf_count(cut_family, cut_idx, cut_pos);
            }
        }
        total
    }

    /// Passes a label southeast along a line: at each branch point the
    /// lower part (sized by the branch's leaf count) splits off down the
    /// cut line, the upper part continues; the surviving singleton lands
    /// on the line's southeast boundary edge.
    fn pass(
        &self,
        family: StripFamily,
        idx: usize,
        label: EdgeLabel,
        bound: usize,
        leaves: &mut [u32],
    ) {
        let (mut lo, hi) = label.bounds().expect("labels in flight are nonempty");
        if let Some(verts) = self.through_vertices.get(&(family, idx)) {
            for &(pos, tile) in verts.iter().rev() {
                if pos >= bound {
                    continue;
                }
                let ((cut_family, cut_idx), cut_pos) = self.cut_at[&tile];
                let branch = self.leaf_count(cut_family, cut_idx, cut_pos) as u32;
                self.pass(
                    cut_family,
                    cut_idx,
                    EdgeLabel::interval(lo, lo + branch - 1),
                    cut_pos,
                    leaves,
                );
                lo += branch;
            }
        }
        debug_assert_eq!(lo, hi, "exactly one value reaches the external vertex");
        leaves[self.strips.strip(family, idx).word_pos] = lo;
    }
}

/// Inverts fusion-exchange: reads the assemblée off a tableau by passing
/// the root labels down the forest and collecting the singleton leaf
/// labels northeast to southwest, block-ends at the light positions, the
/// trivial root's value closing the last block.
pub fn label_passing(tableau: &Tableau) -> Result<Assemblee, BijectionError> {
    let forest = build_forest(tableau)?;
    let word = tableau.word();
    let mut leaves = vec![0u32; word.len()];
    let mut final_block_end = 0u32;
    for root in &forest.roots {
        match root.strip {
            None => final_block_end = root.label.bounds().unwrap().0,
            Some((family, idx)) => forest.pass(family, idx, root.label, usize::MAX, &mut leaves),
        }
    }

    let mut blocks = Vec::new();
    let mut current = Vec::new();
    for (pos, &symbol) in word.symbols().iter().enumerate() {
        current.push(leaves[pos]);
        if symbol == Symbol::Light {
            blocks.push(std::mem::take(&mut current));
        }
    }
    current.push(final_block_end);
    blocks.push(current);
    Ok(Assemblee::from_blocks(blocks)?)
}
