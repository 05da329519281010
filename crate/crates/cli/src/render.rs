//! Deterministic SVG and ASCII drawings of tableaux, assemblées and
//! label traces. Lattice step = 40 px; the W step maps to screen
//! (-40, 0) and the S step to (0, +40), so squares draw as squares and
//! the rhombi as unit parallelograms.

use std::fmt::Write as _;

use rhombic::bijections::EdgeLabel;
use rhombic::rat::{Fill, Tableau};
use rhombic::shapes::{compute_strips, Edge, Point, StripFamily, Tile, TileKind};
use rhombic::Assemblee;

const UNIT: i64 = 40;
const MARGIN: i64 = 30;

struct Frame {
    min_x: i64,
    max_y: i64,
    width: i64,
    height: i64,
}

impl Frame {
    fn around(points: impl Iterator<Item = Point>) -> Frame {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (0, 0, 0, 0);
        for p in points {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
        Frame {
            min_x,
            max_y,
            width: (max_x - min_x) * UNIT + 2 * MARGIN,
            height: (max_y - min_y) * UNIT + 2 * MARGIN,
        }
    }

    /// Screen position of a lattice point scaled by `scale` (2 for edge
    /// midpoints stored as doubled coordinates).
    fn at(&self, x: i64, y: i64, scale: i64) -> (i64, i64) {
        (
            (x - self.min_x * scale) * UNIT / scale + MARGIN,
            (self.max_y * scale - y) * UNIT / scale + MARGIN,
        )
    }

    fn point(&self, p: Point) -> (i64, i64) {
        self.at(p.x, p.y, 1)
    }

    fn edge_midpoint(&self, e: &Edge) -> (i64, i64) {
        let (mx, my) = e.midpoint_doubled();
        self.at(mx, my, 2)
    }
}

fn fill_glyph(fill: Fill) -> &'static str {
    match fill {
        Fill::Alpha => "α",
        Fill::Beta => "β",
        Fill::Q => "q",
        Fill::Empty => "",
    }
}

fn path_polyline(frame: &Frame, points: &[Point], out: &mut String) {
    let coords: Vec<String> = points
        .iter()
        .map(|p| {
            let (x, y) = frame.point(*p);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
        coords.join(" ")
    );
}

fn boundary_points(tableau: &Tableau) -> Vec<Point> {
    let diagram = tableau.tiling().diagram();
    let mut pts = vec![Point::ORIGIN];
    for e in diagram.nw_edges() {
        let (a, b) = e.endpoints();
        let last = *pts.last().unwrap();
        pts.push(if a == last { b } else { a });
    }
    pts
}

/// SVG drawing of a tableau: tiles with their symbols plus the strip
/// lines (west red dashed, north blue dotted, northwest green solid).
pub fn tableau_svg(tableau: &Tableau) -> anyhow::Result<String> {
    let tiling = tableau.tiling();
    let diagram = tiling.diagram();
    let frame = Frame::around(
        diagram
            .se_edges()
            .iter()
            .chain(diagram.nw_edges().iter())
            .flat_map(|e| {
                let (a, b) = e.endpoints();
                [a, b]
            }),
    );
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        frame.width, frame.height, frame.width, frame.height
    );
    let _ = writeln!(svg, "  <title>{}</title>", diagram.word());

    for tile in tiling.sorted_tiles() {
        let corners: Vec<String> = tile
            .vertices()
            .iter()
            .map(|v| {
                let (x, y) = frame.point(*v);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            svg,
            "  <polygon points=\"{}\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>",
            corners.join(" ")
        );
    }

    if tiling.tile_count() == 0 {
        path_polyline(&frame, &boundary_points(tableau), &mut svg);
        let se: Vec<Point> = {
            let mut pts = vec![Point::ORIGIN];
            for e in diagram.se_edges() {
                let (a, b) = e.endpoints();
                let last = *pts.last().unwrap();
                pts.push(if a == last { b } else { a });
            }
            pts
        };
        path_polyline(&frame, &se, &mut svg);
    }

    let strips = compute_strips(tiling)?;
    for strip in strips
        .west
        .iter()
        .chain(&strips.north)
        .chain(&strips.northwest)
    {
        if strip.is_empty() {
            continue;
        }
        let (stroke, dash) = match strip.family {
            StripFamily::West => ("red", " stroke-dasharray=\"7,4\""),
            StripFamily::North => ("blue", " stroke-dasharray=\"2,4\""),
            StripFamily::Northwest => ("green", ""),
        };
        let coords: Vec<String> = strip
            .edge_chain()
            .iter()
            .map(|e| {
                let (x, y) = frame.edge_midpoint(e);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            svg,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"1.5\"{dash}/>",
            coords.join(" ")
        );
    }

    for tile in tiling.sorted_tiles() {
        let fill = tableau.fill(&tile).unwrap_or(Fill::Empty);
        let glyph = fill_glyph(fill);
        if glyph.is_empty() {
            continue;
        }
        let (sx, sy) = centroid_screen(&frame, &tile);
        let _ = writeln!(
            svg,
            "  <text x=\"{sx}\" y=\"{sy}\" font-size=\"18\" text-anchor=\"middle\" dominant-baseline=\"central\">{glyph}</text>"
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn centroid_screen(frame: &Frame, tile: &Tile) -> (i64, i64) {
    let (mut sx, mut sy) = (0, 0);
    for v in tile.vertices() {
        sx += v.x;
        sy += v.y;
    }
    frame.at(sx, sy, 4)
}

/// ASCII tile grid: one character per tile at its (parity-separated)
/// centroid cell, `a`/`b`/`q`/`.` for the filling.
pub fn tableau_ascii(tableau: &Tableau) -> String {
    let mut cells: Vec<(i64, i64, char)> = Vec::new();
    for tile in tableau.tiling().sorted_tiles() {
        let v = tile.anchor;
        let (cx, cy) = match tile.kind {
            TileKind::Square => (2 * v.x - 1, 2 * v.y - 1),
            TileKind::Tall => (2 * v.x - 1, 2 * v.y - 2),
            TileKind::Short => (2 * v.x - 2, 2 * v.y - 1),
        };
        let c = tableau.fill(&tile).unwrap_or(Fill::Empty).to_char();
        cells.push((cx, cy, c));
    }
    let mut out = format!("word: {}\n", tableau.word());
    if cells.is_empty() {
        out.push_str("(no tiles)\n");
        return out;
    }
    let min_x = cells.iter().map(|&(x, _, _)| x).min().unwrap();
    let max_x = cells.iter().map(|&(x, _, _)| x).max().unwrap();
    let max_y = cells.iter().map(|&(_, y, _)| y).max().unwrap();
    let min_y = cells.iter().map(|&(_, y, _)| y).min().unwrap();
    let width = (max_x - min_x + 1) as usize;
    let mut grid = vec![vec![' '; width]; (max_y - min_y + 1) as usize];
    for (x, y, c) in cells {
        grid[(max_y - y) as usize][(x - min_x) as usize] = c;
    }
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// SVG of an assemblée: one box per block.
pub fn assemblee_svg(a: &Assemblee) -> String {
    let char_width = 11;
    let box_height = 44;
    let gap = 14;
    let pad = 12;
    let mut boxes: Vec<(i64, String)> = Vec::new();
    let mut x = MARGIN;
    for block in a.blocks() {
        let text = block
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let width = 2 * pad + char_width * text.chars().count() as i64;
        boxes.push((x, text));
        x += width + gap;
    }
    let total_width = x - gap + MARGIN;
    let total_height = box_height + 2 * MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total_width}\" height=\"{total_height}\" viewBox=\"0 0 {total_width} {total_height}\">"
    );
    for (bx, text) in &boxes {
        let width = 2 * pad + char_width * text.chars().count() as i64;
        let _ = writeln!(
            svg,
            "  <rect x=\"{bx}\" y=\"{MARGIN}\" width=\"{width}\" height=\"{box_height}\" rx=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>"
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-size=\"18\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            bx + width / 2,
            MARGIN + box_height / 2,
            text
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn assemblee_ascii(a: &Assemblee) -> String {
    let mut out = String::new();
    for block in a.blocks() {
        let text = block
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = write!(out, "[{text}]");
    }
    out.push('\n');
    out
}

/// SVG of a label trace: the tableau drawing plus every edge label at
/// its edge midpoint.
pub fn trace_svg(tableau: &Tableau, labels: &[(Edge, EdgeLabel)]) -> anyhow::Result<String> {
    let mut svg = tableau_svg(tableau)?;
    let closing = svg.rfind("</svg>").expect("tableau svg is well formed");
    svg.truncate(closing);
    let diagram = tableau.tiling().diagram();
    let frame = Frame::around(
        diagram
            .se_edges()
            .iter()
            .chain(diagram.nw_edges().iter())
            .flat_map(|e| {
                let (a, b) = e.endpoints();
                [a, b]
            }),
    );
    for (edge, label) in labels {
        if label.is_empty() {
            continue;
        }
        let (x, y) = frame.edge_midpoint(edge);
        let _ = writeln!(
            svg,
            "  <text x=\"{x}\" y=\"{y}\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"darkred\">{label}</text>"
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn trace_ascii(tableau: &Tableau, labels: &[(Edge, EdgeLabel)]) -> String {
    let mut out = tableau_ascii(tableau);
    for (edge, label) in labels {
        let (a, b) = edge.endpoints();
        let _ = writeln!(out, "({},{})-({},{}) {}", a.x, a.y, b.x, b.y, label);
    }
    out
}
