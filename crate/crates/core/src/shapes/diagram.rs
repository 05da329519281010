use super::{Edge, Point, StateWord, Step, Symbol};

/// The closed region between the sorted northwest boundary path and the
/// southeast path spelled by the word. Its area (in unit rhombi) equals
/// the inversion count of the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhombicDiagram {
    word: StateWord,
    nw_path: Vec<Step>,
    se_path: Vec<Step>,
    area: usize,
}

/// Builds the rhombic diagram of a state word.
pub fn build_diagram(word: &StateWord) -> RhombicDiagram {
    let (l, r, k) = (word.holes(), word.lights(), word.heavies());
    let mut nw_path = Vec::with_capacity(word.len());
    nw_path.extend(std::iter::repeat_n(Step::W, l));
    nw_path.extend(std::iter::repeat_n(Step::SW, r));
    nw_path.extend(std::iter::repeat_n(Step::S, k));
    let se_path: Vec<Step> = word.symbols().iter().map(|s| s.step()).collect();
    let area = word.inversions();
    RhombicDiagram {
        word: word.clone(),
        nw_path,
        se_path,
        area,
    }
}

impl RhombicDiagram {
    pub fn word(&self) -> &StateWord {
        &self.word
    }

    pub fn nw_path(&self) -> &[Step] {
        &self.nw_path
    }

    pub fn se_path(&self) -> &[Step] {
        &self.se_path
    }

    pub fn area(&self) -> usize {
        self.area
    }

    fn path_points(path: &[Step]) -> Vec<Point> {
        let mut points = vec![Point::ORIGIN];
        for &s in path {
            points.push(points.last().unwrap().step(s));
        }
        points
    }

    fn path_edges(path: &[Step]) -> Vec<Edge> {
        let points = Self::path_points(path);
        points.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
    }

    /// Northwest boundary edges in path order (from the origin).
    pub fn nw_edges(&self) -> Vec<Edge> {
        Self::path_edges(&self.nw_path)
    }

    /// Southeast boundary edges in path order; edge `i` belongs to symbol
    /// `i` of the word.
    pub fn se_edges(&self) -> Vec<Edge> {
        Self::path_edges(&self.se_path)
    }

    /// Southwest corner shared by both paths.
    pub fn sw_corner(&self) -> Point {
        *Self::path_points(&self.nw_path).last().unwrap()
    }

    /// Position of a wire's northwest boundary edge in `nw_edges()`:
    /// same-symbol wires keep their relative order, so the `j`-th hole
    /// ends at the `j`-th horizontal edge, the `j`-th light at the `j`-th
    /// diagonal edge and the `j`-th heavy at the `j`-th vertical edge.
    pub fn nw_index_of_wire(&self, word_pos: usize) -> usize {
        let (l, r) = (self.word.holes(), self.word.lights());
        let symbol = self.word.symbols()[word_pos];
        let rank = self.word.symbols()[..word_pos]
            .iter()
            .filter(|&&s| s == symbol)
            .count();
        match symbol {
            Symbol::Hole => rank,
            Symbol::Light => l + rank,
            Symbol::Heavy => l + r + rank,
        }
    }

    /// Expected tile counts `(squares, tall, short)` for any tiling:
    /// one square per heavy-before-hole pair, one tall rhombus per
    /// heavy-before-light pair, one short rhombus per light-before-hole
    /// pair.
    pub fn tile_budget(&self) -> (usize, usize, usize) {
        let symbols = self.word.symbols();
        let (mut squares, mut tall, mut short) = (0, 0, 0);
        for i in 0..symbols.len() {
            for j in i + 1..symbols.len() {
                match (symbols[i], symbols[j]) {
                    (Symbol::Heavy, Symbol::Hole) => squares += 1,
                    (Symbol::Heavy, Symbol::Light) => tall += 1,
                    (Symbol::Light, Symbol::Hole) => short += 1,
                    _ => {}
                }
            }
        }
        (squares, tall, short)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_word;

    /// Independent oracle: twice the signed area of the closed polygon
    /// formed by walking the northwest path forward and the southeast
    /// path backward.
    fn shoelace_area(diagram: &RhombicDiagram) -> i64 {
        let mut polygon = RhombicDiagram::path_points(diagram.nw_path());
        let mut back = RhombicDiagram::path_points(diagram.se_path());
        back.reverse();
        polygon.extend(back.into_iter().skip(1));
        let mut doubled = 0i64;
        for w in polygon.windows(2) {
            doubled += w[0].x * w[1].y - w[1].x * w[0].y;
        }
        doubled.abs() / 2
    }

    #[test]
    fn single_cell_diagram() {
        let d = build_diagram(&parse_word("DE").unwrap());
        assert_eq!(d.area(), 1);
        assert_eq!(shoelace_area(&d) as usize, d.area());
        assert_eq!(d.tile_budget(), (1, 0, 0));
    }

    #[test]
    fn sorted_word_has_no_area() {
        let d = build_diagram(&parse_word("ED").unwrap());
        assert_eq!(d.area(), 0);
        assert_eq!(d.nw_path(), d.se_path());
        assert_eq!(shoelace_area(&d), 0);
    }

    #[test]
    fn running_example_area_and_budget() {
        let d = build_diagram(&parse_word("DDEADEEEADE").unwrap());
        assert_eq!(shoelace_area(&d) as usize, d.area());
        assert_eq!(d.area(), 25);
        assert_eq!(d.tile_budget(), (15, 5, 5));
        let (sq, ta, sh) = d.tile_budget();
        assert_eq!(sq + ta + sh, d.area());
    }

    #[test]
    fn shoelace_matches_inversions_for_all_small_words() {
        for n in 1..=6 {
            for word in crate::asep::all_words(n) {
                let d = build_diagram(&word);
                assert_eq!(shoelace_area(&d) as usize, d.area(), "word {word}");
            }
        }
    }

    #[test]
    fn paths_share_endpoints() {
        let d = build_diagram(&parse_word("DDEADEEEADE").unwrap());
        let nw_end = RhombicDiagram::path_points(d.nw_path()).pop();
        let se_end = RhombicDiagram::path_points(d.se_path()).pop();
        assert_eq!(nw_end, se_end);
        assert_eq!(d.sw_corner(), Point::new(-7, -6));
    }
}
