//! Lattice picture of the pairs in `A x A`.
//!
//! Each ordered pair `(a, b)` with `a + b <= max_sum` is drawn at `(a + b, a)`,
//! so column `x = n` holds exactly `r1(A, n)` points. Orientation: `x = a + b`
//! grows rightward, `y = a` grows upward, origin at the bottom left.
//!
//! A missing integer `c` empties two lines of the triangle: the row `a = c`
//! (points `(c + x, c)`) and the diagonal `b = c` (points `(x + c, x)`). The
//! SVG marks both with dashed guides.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::set::IntegerSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramFormat {
    Svg,
    Ascii,
}

/// Default cap on the rendered document size.
pub const DEFAULT_DIAGRAM_BUDGET: u64 = 64 << 20;

const CELL: u64 = 12;
const MARGIN: u64 = 24;
// rough bytes per emitted lattice point in SVG
const BYTES_PER_POINT: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeDiagram {
    pub set_spec: String,
    pub max_sum: u64,
    /// `(a + b, a)` for every pair, by column then row.
    pub points: Vec<(u64, u64)>,
    /// Non-members `<= max_sum`.
    pub removed: Vec<u64>,
}

impl LatticeDiagram {
    pub fn new(set: &IntegerSet, max_sum: u64) -> Self {
        let mut points = Vec::new();
        for x in 0..=max_sum {
            for a in 0..=x {
                if set.contains(a) && set.contains(x - a) {
                    points.push((x, a));
                }
            }
        }
        LatticeDiagram {
            set_spec: set.to_string(),
            max_sum,
            points,
            removed: set.nonmembers_in(0, max_sum).collect(),
        }
    }

    /// Number of points per column `x = 0..=max_sum`.
    pub fn column_counts(&self) -> Vec<u64> {
        let mut counts = vec![0; self.max_sum as usize + 1];
        for &(x, _) in &self.points {
            counts[x as usize] += 1;
        }
        counts
    }

    pub fn to_svg(&self) -> String {
        let side = (self.max_sum + 1) * CELL;
        let size = side + 2 * MARGIN;
        let px = |x: u64| MARGIN + x * CELL + CELL / 2;
        let py = |a: u64| MARGIN + (self.max_sum - a) * CELL + CELL / 2;

        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        let _ = writeln!(
            out,
            "  <title>pairs (a + b, a) for {}</title>",
            xml_escape(&self.set_spec)
        );
        let _ = writeln!(
            out,
            r#"  <g id="axes" stroke="black" stroke-width="1"><line x1="{m}" y1="{b}" x2="{r}" y2="{b}"/><line x1="{m}" y1="{b}" x2="{m}" y2="{m}"/></g>"#,
            m = MARGIN,
            b = MARGIN + side,
            r = MARGIN + side,
        );
        let _ = writeln!(
            out,
            r##"  <g id="removed" stroke="#c33" stroke-width="1" stroke-dasharray="3,3" opacity="0.5">"##
        );
        for &c in &self.removed {
            // row a = c and diagonal b = c, both running to x = max_sum
            let _ = writeln!(
                out,
                r#"    <line class="removed-row" data-c="{c}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(c),
                py(c),
                px(self.max_sum),
                py(c)
            );
            let _ = writeln!(
                out,
                r#"    <line class="removed-diagonal" data-c="{c}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(c),
                py(0),
                px(self.max_sum),
                py(self.max_sum - c)
            );
        }
        let _ = writeln!(out, "  </g>");
        let _ = writeln!(out, r#"  <g id="pairs" fill="black">"#);
        for &(x, a) in &self.points {
            let _ = writeln!(
                out,
                r#"    <circle data-sum="{x}" data-a="{a}" cx="{}" cy="{}" r="3"/>"#,
                px(x),
                py(a)
            );
        }
        let _ = writeln!(out, "  </g>");
        out.push_str("</svg>\n");
        out
    }

    /// Rows from `a = max_sum` down to 0, one character per `x`: `*` for a
    /// pair, `.` for an empty lattice point, space above the diagonal.
    pub fn to_ascii(&self) -> String {
        let width = self.max_sum as usize + 1;
        let mut grid = vec![vec![b' '; width]; width];
        for (a, row) in grid.iter_mut().enumerate() {
            for cell in row.iter_mut().skip(a) {
                *cell = b'.';
            }
        }
        for &(x, a) in &self.points {
            grid[a as usize][x as usize] = b'*';
        }
        let mut out = String::with_capacity(width * (width + 1));
        for row in grid.iter().rev() {
            out.push_str(std::str::from_utf8(row).expect("ascii"));
            out.push('\n');
        }
        out
    }
}

pub fn render_diagram(set: &IntegerSet, max_sum: u64, format: DiagramFormat) -> Result<String> {
    render_diagram_with(set, max_sum, format, DEFAULT_DIAGRAM_BUDGET)
}

pub fn render_diagram_with(
    set: &IntegerSet,
    max_sum: u64,
    format: DiagramFormat,
    budget: u64,
) -> Result<String> {
    let lattice = (max_sum.saturating_add(1)).saturating_mul(max_sum.saturating_add(2)) / 2;
    let needed = lattice.saturating_mul(BYTES_PER_POINT);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    let diagram = LatticeDiagram::new(set, max_sum);
    Ok(match format {
        DiagramFormat::Svg => diagram.to_svg(),
        DiagramFormat::Ascii => diagram.to_ascii(),
    })
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> IntegerSet {
        s.parse().unwrap()
    }

    #[test]
    fn full_set_columns() {
        let d = LatticeDiagram::new(&set("nat"), 4);
        assert_eq!(d.column_counts(), vec![1, 2, 3, 4, 5]);
        assert!(d.removed.is_empty());
    }

    #[test]
    fn empty_set_has_no_points() {
        let d = LatticeDiagram::new(&set("empty"), 6);
        assert!(d.points.is_empty());
        assert!(!d.to_svg().contains("<circle"));
    }

    #[test]
    fn missing_one() {
        let d = LatticeDiagram::new(&set("complement(finite:1)"), 4);
        assert_eq!(d.column_counts(), vec![1, 0, 2, 2, 3]);
        assert_eq!(d.removed, vec![1]);
        assert_eq!(d.to_ascii(), "    *\n   *.\n  *.*\n ....\n*.***\n");
    }

    #[test]
    fn svg_point_count() {
        let d = LatticeDiagram::new(&set("pow2"), 20);
        let svg = d.to_svg();
        assert_eq!(svg.matches("<circle").count(), d.points.len());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn budget() {
        assert!(matches!(
            render_diagram_with(&set("nat"), 100, DiagramFormat::Ascii, 1000),
            Err(Error::Budget { budget: 1000, .. })
        ));
        assert!(render_diagram(&set("nat"), 10, DiagramFormat::Ascii).is_ok());
    }
}
