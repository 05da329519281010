use std::collections::{BTreeSet, HashSet};

use serde_json::{json, Value};

use super::{build_diagram, parse_word, Edge, Point, RhombicDiagram, ShapeError, Step};

/// The three rhombus shapes: `Square` spans W×S, `Tall` spans S×SW,
/// `Short` spans W×SW. Each has unit area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TileKind {
    Square,
    Tall,
    Short,
}

impl TileKind {
    pub fn name(self) -> &'static str {
        match self {
            TileKind::Square => "square",
            TileKind::Tall => "tall",
            TileKind::Short => "short",
        }
    }

    pub fn from_name(name: &str) -> Option<TileKind> {
        match name {
            "square" => Some(TileKind::Square),
            "tall" => Some(TileKind::Tall),
            "short" => Some(TileKind::Short),
            _ => None,
        }
    }
}

/// One rhombus, identified by its kind and its anchor (northeast-most
/// vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    pub kind: TileKind,
    pub anchor: Point,
}

impl Tile {
    pub fn new(kind: TileKind, anchor: Point) -> Tile {
        Tile { kind, anchor }
    }

    /// Vertices in drawing order (a simple quadrilateral).
    pub fn vertices(&self) -> [Point; 4] {
        let v = self.anchor;
        match self.kind {
            TileKind::Square => [
                v,
                v.step(Step::W),
                v.step(Step::W).step(Step::S),
                v.step(Step::S),
            ],
            TileKind::Tall => [
                v,
                v.step(Step::SW),
                v.step(Step::SW).step(Step::S),
                v.step(Step::S),
            ],
            TileKind::Short => [
                v,
                v.step(Step::W),
                v.step(Step::W).step(Step::SW),
                v.step(Step::SW),
            ],
        }
    }

    /// East-most edge: the label entry on the west-going trajectory.
    pub fn east_edge(&self) -> Edge {
        let v = self.anchor;
        match self.kind {
            TileKind::Square | TileKind::Tall => Edge::new(v, v.step(Step::S)),
            TileKind::Short => Edge::new(v, v.step(Step::SW)),
        }
    }

    /// South-most edge.
    pub fn south_edge(&self) -> Edge {
        let v = self.anchor;
        match self.kind {
            TileKind::Square => Edge::new(v.step(Step::S), v.step(Step::S).step(Step::W)),
            TileKind::Tall => Edge::new(v.step(Step::S), v.step(Step::S).step(Step::SW)),
            TileKind::Short => Edge::new(v.step(Step::SW), v.step(Step::SW).step(Step::W)),
        }
    }

    /// West-most edge, opposite the east edge.
    pub fn west_edge(&self) -> Edge {
        let v = self.anchor;
        match self.kind {
            TileKind::Square => Edge::new(v.step(Step::W), v.step(Step::W).step(Step::S)),
            TileKind::Tall => Edge::new(v.step(Step::SW), v.step(Step::SW).step(Step::S)),
            TileKind::Short => Edge::new(v.step(Step::W), v.step(Step::W).step(Step::SW)),
        }
    }

    /// North-most edge, opposite the south edge.
    pub fn north_edge(&self) -> Edge {
        let v = self.anchor;
        match self.kind {
            TileKind::Square | TileKind::Short => Edge::new(v, v.step(Step::W)),
            TileKind::Tall => Edge::new(v, v.step(Step::SW)),
        }
    }

    pub fn edges(&self) -> [Edge; 4] {
        [
            self.east_edge(),
            self.south_edge(),
            self.west_edge(),
            self.north_edge(),
        ]
    }
}

// Serialization order: anchor.y descending, anchor.x descending, kind.
impl Ord for Tile {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (other.anchor.y, other.anchor.x, self.kind).cmp(&(self.anchor.y, self.anchor.x, other.kind))
    }
}

impl PartialOrd for Tile {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A rhombus tiling of a diagram. Tiles are kept in serialization order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    diagram: RhombicDiagram,
    tiles: BTreeSet<Tile>,
}

impl Tiling {
    pub fn new(diagram: RhombicDiagram, tiles: BTreeSet<Tile>) -> Tiling {
        Tiling { diagram, tiles }
    }

    pub fn diagram(&self) -> &RhombicDiagram {
        &self.diagram
    }

    pub fn tiles(&self) -> impl Iterator<Item = &Tile> {
        self.tiles.iter()
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn sorted_tiles(&self) -> Vec<Tile> {
        self.tiles.iter().copied().collect()
    }

    pub fn contains(&self, tile: &Tile) -> bool {
        self.tiles.contains(tile)
    }

    /// Checks that the tiles exactly cover the diagram (by replaying the
    /// sorting network) and that the per-kind counts match the budget.
    pub fn validate(&self) -> Result<(), ShapeError> {
        if self.tiles.len() != self.diagram.area() {
            return Err(ShapeError::InvalidTiling {
                reason: format!(
                    "{} tiles for area {}",
                    self.tiles.len(),
                    self.diagram.area()
                ),
            });
        }
        let (sq, ta, sh) = self.diagram.tile_budget();
        let count = |kind: TileKind| self.tiles.iter().filter(|t| t.kind == kind).count();
        if (
            count(TileKind::Square),
            count(TileKind::Tall),
            count(TileKind::Short),
        ) != (sq, ta, sh)
        {
            return Err(ShapeError::InvalidTiling {
                reason: "tile kind counts disagree with the word".to_string(),
            });
        }
        replay(self).map(|_| ())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "word": self.diagram.word().to_string(),
            "tiles": self
                .tiles
                .iter()
                .map(|t| json!({ "kind": t.kind.name(), "anchor": [t.anchor.x, t.anchor.y] }))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Tiling, ShapeError> {
        let bad = |reason: &str| ShapeError::BadJson {
            reason: reason.to_string(),
        };
        let word_text = value
            .get("word")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing string field `word`"))?;
        let word = parse_word(word_text)?;
        let diagram = build_diagram(&word);
        let tiles_json = value
            .get("tiles")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field `tiles`"))?;
        let mut tiles = BTreeSet::new();
        for t in tiles_json {
            let kind = t
                .get("kind")
                .and_then(Value::as_str)
                .and_then(TileKind::from_name)
                .ok_or_else(|| bad("tile kind must be square, tall or short"))?;
            let anchor = t
                .get("anchor")
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| bad("tile anchor must be [x, y]"))?;
            let x = anchor[0]
                .as_i64()
                .ok_or_else(|| bad("anchor x not an integer"))?;
            let y = anchor[1]
                .as_i64()
                .ok_or_else(|| bad("anchor y not an integer"))?;
            tiles.insert(Tile::new(kind, Point::new(x, y)));
        }
        let tiling = Tiling::new(diagram, tiles);
        tiling.validate()?;
        Ok(tiling)
    }
}

fn inverted(first: Step, second: Step) -> bool {
    first > second
}

/// The tile swept when two adjacent inverted steps swap at a path vertex.
fn swap_tile(first: Step, second: Step, prefix_end: Point) -> Tile {
    debug_assert!(inverted(first, second));
    let kind = match (first, second) {
        (Step::S, Step::W) => TileKind::Square,
        (Step::S, Step::SW) => TileKind::Tall,
        (Step::SW, Step::W) => TileKind::Short,
        _ => unreachable!(),
    };
    Tile::new(kind, prefix_end)
}

fn prefix_points(path: &[Step]) -> Vec<Point> {
    let mut points = vec![Point::ORIGIN];
    for &s in path {
        points.push(points.last().unwrap().step(s));
    }
    points
}

/// Deterministic tiling: bubble-sort the southeast path into the
/// northwest path, always swapping the leftmost adjacent inversion; each
/// swap deposits one tile.
pub fn canonical_tiling(diagram: &RhombicDiagram) -> Tiling {
    let mut path: Vec<Step> = diagram.se_path().to_vec();
    let mut tiles = BTreeSet::new();
    loop {
        let points = prefix_points(&path);
        let swap_at = (0..path.len().saturating_sub(1)).find(|&i| inverted(path[i], path[i + 1]));
        match swap_at {
            None => break,
            Some(i) => {
                tiles.insert(swap_tile(path[i], path[i + 1], points[i]));
                path.swap(i, i + 1);
            }
        }
    }
    debug_assert_eq!(path, diagram.nw_path());
    Tiling::new(diagram.clone(), tiles)
}

/// Two wires crossing inside one tile, recorded by their word positions.
/// The east wire entered through the east edge (the heavier step), the
/// south wire through the south edge.
#[derive(Debug, Clone, Copy)]
pub struct Crossing {
    pub tile: Tile,
    pub east_wire: usize,
    pub south_wire: usize,
}

/// Replays a tiling as a sorting network, yielding its crossings in an
/// order that visits each wire's crossings from southeast to northwest.
/// Fails if the tiles do not tile the diagram.
pub fn replay(tiling: &Tiling) -> Result<Vec<Crossing>, ShapeError> {
    let diagram = tiling.diagram();
    let mut path: Vec<(Step, usize)> = diagram.se_path().iter().copied().zip(0..).collect();
    let mut remaining: BTreeSet<Tile> = tiling.tiles.clone();
    let mut crossings = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let points = prefix_points(&path.iter().map(|&(s, _)| s).collect::<Vec<_>>());
        let mut progressed = false;
        for i in 0..path.len() - 1 {
            let (s1, w1) = path[i];
            let (s2, w2) = path[i + 1];
            if inverted(s1, s2) {
                let tile = swap_tile(s1, s2, points[i]);
                if remaining.remove(&tile) {
                    crossings.push(Crossing {
                        tile,
                        east_wire: w1,
                        south_wire: w2,
                    });
                    path.swap(i, i + 1);
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            return Err(ShapeError::InvalidTiling {
                reason: "tiles do not assemble into a sorting network".to_string(),
            });
        }
    }
    let sorted: Vec<Step> = path.iter().map(|&(s, _)| s).collect();
    if sorted != diagram.nw_path() {
        return Err(ShapeError::InvalidTiling {
            reason: "leftover inversions after consuming all tiles".to_string(),
        });
    }
    Ok(crossings)
}

/// All tilings of a diagram, by depth-first search over partial sorting
/// networks, deduplicated by tile set. Output is sorted by tile list.
pub fn enumerate_tilings(
    diagram: &RhombicDiagram,
    limit: usize,
) -> Result<Vec<Tiling>, ShapeError> {
    let mut complete: BTreeSet<Vec<Tile>> = BTreeSet::new();
    let mut seen: HashSet<Vec<Tile>> = HashSet::new();
    let mut stack: Vec<(Vec<Step>, Vec<Tile>)> = vec![(diagram.se_path().to_vec(), Vec::new())];
    while let Some((path, tiles)) = stack.pop() {
        let points = prefix_points(&path);
        let mut any = false;
        for i in 0..path.len().saturating_sub(1) {
            if inverted(path[i], path[i + 1]) {
                any = true;
                let tile = swap_tile(path[i], path[i + 1], points[i]);
                let mut next_tiles = tiles.clone();
                let insert_at = next_tiles.partition_point(|t| *t < tile);
                next_tiles.insert(insert_at, tile);
                if seen.insert(next_tiles.clone()) {
                    let mut next_path = path.clone();
                    next_path.swap(i, i + 1);
                    stack.push((next_path, next_tiles));
                }
            }
        }
        if !any {
            complete.insert(tiles);
            if complete.len() > limit {
                return Err(ShapeError::CapacityExceeded { limit });
            }
        }
        if seen.len() > limit.saturating_mul(64).max(1 << 16) {
            return Err(ShapeError::CapacityExceeded { limit });
        }
    }
    Ok(complete
        .into_iter()
        .map(|tiles| Tiling::new(diagram.clone(), tiles.into_iter().collect()))
        .collect())
}

/// The two rotations of the hexagon centered at `c`: each is one square,
/// one tall and one short tile sharing the center vertex.
fn hexagon_configs(c: Point) -> [[Tile; 3]; 2] {
    let at = |dx: i64, dy: i64| Point::new(c.x + dx, c.y + dy);
    [
        [
            Tile::new(TileKind::Tall, at(1, 1)),
            Tile::new(TileKind::Square, at(0, 0)),
            Tile::new(TileKind::Short, at(1, 1)),
        ],
        [
            Tile::new(TileKind::Square, at(1, 1)),
            Tile::new(TileKind::Short, at(1, 0)),
            Tile::new(TileKind::Tall, at(0, 1)),
        ],
    ]
}

/// Replaces the three tiles of the hexagon centered at `center` with the
/// opposite rotation. Applying the same flip twice restores the tiling.
pub fn apply_flip(tiling: &Tiling, center: Point) -> Result<Tiling, ShapeError> {
    let [config_a, config_b] = hexagon_configs(center);
    let (from, to) = if config_a.iter().all(|t| tiling.contains(t)) {
        (config_a, config_b)
    } else if config_b.iter().all(|t| tiling.contains(t)) {
        (config_b, config_a)
    } else {
        return Err(ShapeError::InvalidFlip {
            x: center.x,
            y: center.y,
        });
    };
    let mut tiles = tiling.tiles.clone();
    for t in &from {
        tiles.remove(t);
    }
    for t in &to {
        tiles.insert(*t);
    }
    Ok(Tiling::new(tiling.diagram.clone(), tiles))
}

/// Centers of all hexagons that can be flipped in this tiling.
pub fn flippable_centers(tiling: &Tiling) -> Vec<Point> {
    let mut candidates = BTreeSet::new();
    for tile in tiling.tiles() {
        for v in tile.vertices() {
            candidates.insert(v);
        }
    }
    candidates
        .into_iter()
        .filter(|&c| {
            hexagon_configs(c)
                .iter()
                .any(|config| config.iter().all(|t| tiling.contains(t)))
        })
        .collect()
}
