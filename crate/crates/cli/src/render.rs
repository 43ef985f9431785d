//! Arc diagrams as text art or SVG.
//!
//! Points sit on a horizontal line. Arcs of the partition (the finest member
//! of a chain) are drawn above it, ties from coarser chain members are dashed
//! arcs above labelled with their ordinal, and an optional comb partition is
//! drawn below.

use std::fmt::Write as _;

use ncpart::{chain_to_tied_diagram, PartitionChain, Result, SetPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Solid,
    Tie,
    Comb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stroke {
    pub left: usize,
    pub right: usize,
    pub style: Style,
    pub label: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub n: usize,
    pub above: Vec<Stroke>,
    pub below: Vec<Stroke>,
}

impl Diagram {
    /// A partition, or a `;`-separated chain, with an optional comb
    /// `(r, m)` underneath.
    pub fn from_input(s: &str, comb: Option<(usize, usize)>) -> Result<Diagram> {
        let mut d =
            if s.contains(';') { Diagram::from_chain(&s.parse()?) } else { Diagram::from_partition(&s.parse()?) };
        if let Some((r, m)) = comb {
            d.below = solid(&SetPartition::comb(d.n, m, r)?, Style::Comb);
        }
        Ok(d)
    }

    pub fn from_partition(p: &SetPartition) -> Diagram {
        Diagram { n: p.n(), above: solid(p, Style::Solid), below: Vec::new() }
    }

    pub fn from_chain(chain: &PartitionChain) -> Diagram {
        let tied = chain_to_tied_diagram(chain);
        let mut above = solid(&tied.base, Style::Solid);
        for tie in &tied.ties {
            let to = tied.base.blocks()[tie.to - 1][0];
            // the last point of the earlier block before the later one starts
            let left = tied.base.blocks()[tie.from - 1].iter().copied().filter(|&e| e < to).max().unwrap_or(to);
            above.push(Stroke { left, right: to, style: Style::Tie, label: Some(tie.ordinal) });
        }
        Diagram { n: tied.base.n(), above, below: Vec::new() }
    }

    pub fn to_text(&self, color: bool) -> String {
        const GAP: usize = 4;
        if self.n == 0 {
            return String::new();
        }
        let label_width = self.n.to_string().len();
        let width = GAP * (self.n - 1) + label_width;
        let col = |e: usize| GAP * (e - 1);
        let up = heights(&self.above);
        let down = heights(&self.below);
        let top = up.iter().copied().max().unwrap_or(0);
        let bottom = down.iter().copied().max().unwrap_or(0);
        let mut grid = vec![vec![(' ', Style::Solid); width]; top + 1 + bottom];

        let mut draw = |strokes: &[Stroke],
                        hs: &[usize],
                        row_of: &dyn Fn(usize) -> usize,
                        inner: &dyn Fn(usize) -> std::ops::Range<usize>| {
            for (s, &h) in strokes.iter().zip(hs) {
                let (horiz, vert) = match s.style {
                    Style::Tie => ('.', ':'),
                    _ => ('-', '|'),
                };
                for r in inner(h) {
                    grid[r][col(s.left)] = (vert, s.style);
                    grid[r][col(s.right)] = (vert, s.style);
                }
                let r = row_of(h);
                for c in col(s.left)..=col(s.right) {
                    grid[r][c] = (horiz, s.style);
                }
                grid[r][col(s.left)] = ('+', s.style);
                grid[r][col(s.right)] = ('+', s.style);
                if let Some(label) = s.label {
                    let text = label.to_string();
                    let start = (col(s.left) + col(s.right) + 1).saturating_sub(text.len()) / 2;
                    for (i, ch) in text.chars().enumerate() {
                        grid[r][start + i] = (ch, s.style);
                    }
                }
            }
        };
        draw(&self.above, &up, &|h| top - h, &|h| top - h + 1..top);
        draw(&self.below, &down, &|h| top + h, &|h| top + 1..top + h);
        for e in 1..=self.n {
            for (i, ch) in e.to_string().chars().enumerate() {
                grid[top][col(e) + i] = (ch, Style::Solid);
            }
        }

        let mut out = String::new();
        for row in grid {
            let mut line = String::new();
            let mut current = Style::Solid;
            for (ch, style) in row {
                if color && style != current && ch != ' ' {
                    line.push_str(ansi(style));
                    current = style;
                }
                line.push(ch);
            }
            if color && current != Style::Solid {
                line.push_str(ansi(Style::Solid));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self) -> String {
        const GAP: f64 = 40.0;
        const MARGIN: f64 = 24.0;
        let x = |e: usize| MARGIN + GAP * (e as f64 - 1.0);
        let radius = |s: &Stroke| GAP * (s.right - s.left) as f64 / 2.0;
        let rise = self.above.iter().map(radius).fold(0.0, f64::max);
        let drop = self.below.iter().map(radius).fold(0.0, f64::max);
        let width = 2.0 * MARGIN + GAP * self.n.saturating_sub(1) as f64;
        let base = MARGIN + rise + 12.0;
        let height = base + drop + MARGIN + 12.0;

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(svg, r#"  <g fill="none" stroke="black" stroke-width="1.5">"#);
        if self.n > 1 {
            let _ = writeln!(
                svg,
                r##"    <line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="#bbb" stroke-width="1"/>"##,
                x(1),
                x(self.n)
            );
        }
        let mut labels = String::new();
        for (strokes, sweep) in [(&self.above, 1), (&self.below, 0)] {
            for s in strokes.iter() {
                let r = radius(s);
                let attrs = match s.style {
                    Style::Solid => String::new(),
                    Style::Tie => r#" stroke-dasharray="4 3""#.to_string(),
                    Style::Comb => r##" stroke="#2a6fdb""##.to_string(),
                };
                let _ = writeln!(
                    svg,
                    r#"    <path d="M {} {base} A {r} {r} 0 0 {sweep} {} {base}"{attrs}/>"#,
                    x(s.left),
                    x(s.right)
                );
                if let Some(label) = s.label {
                    let _ = writeln!(
                        labels,
                        r#"    <text x="{}" y="{}" text-anchor="middle">{label}</text>"#,
                        (x(s.left) + x(s.right)) / 2.0,
                        base - r - 4.0
                    );
                }
            }
        }
        let _ = writeln!(svg, "  </g>");
        let _ = writeln!(svg, r#"  <g font-family="sans-serif" font-size="12">"#);
        svg.push_str(&labels);
        for e in 1..=self.n {
            let _ = writeln!(svg, r#"    <circle cx="{}" cy="{base}" r="3"/>"#, x(e));
            let _ = writeln!(svg, r#"    <text x="{}" y="{}" text-anchor="middle">{e}</text>"#, x(e), base + 16.0);
        }
        let _ = writeln!(svg, "  </g>");
        svg.push_str("</svg>\n");
        svg
    }
}

fn solid(p: &SetPartition, style: Style) -> Vec<Stroke> {
    p.standard_arcs().into_iter().map(|a| Stroke { left: a.left, right: a.right, style, label: None }).collect()
}

/// Height 1 for innermost strokes, otherwise one more than the tallest
/// stroke spanned.
fn heights(strokes: &[Stroke]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..strokes.len()).collect();
    order.sort_by_key(|&i| strokes[i].right - strokes[i].left);
    let mut h = vec![0; strokes.len()];
    for &i in &order {
        let s = strokes[i];
        h[i] = 1 + order
            .iter()
            .filter(|&&j| j != i && h[j] > 0)
            .filter(|&&j| s.left <= strokes[j].left && strokes[j].right <= s.right)
            .map(|&j| h[j])
            .max()
            .unwrap_or(0);
    }
    h
}

fn ansi(style: Style) -> &'static str {
    match style {
        Style::Solid => "\x1b[0m",
        Style::Tie => "\x1b[33m",
        Style::Comb => "\x1b[34m",
    }
}
