//! World-line diagrams of three-strand braids, time running to the right.
//!
//! Strands are named `a`, `b`, `c` after their starting positions (top to
//! bottom). Each crossing swaps the strands at the two positions of its
//! pair, so world lines follow the permutation rather than returning to
//! their rows after every exchange. For a positive power the strand moving
//! down passes over the one moving up; for a negative power the strand
//! moving up passes over.

use std::fmt::Write as _;

use crate::braid::{BraidWord, Factor, Generator};

const STRAND_NAMES: [char; 3] = ['a', 'b', 'c'];
const STRAND_COLOURS: [&str; 3] = ["#d62728", "#1f77b4", "#2ca02c"];

/// Horizontal distance between crossings in SVG units.
pub const SVG_COLUMN_PITCH: u32 = 60;
/// Vertical distance between strand positions in SVG units.
pub const SVG_ROW_PITCH: u32 = 100;
const SVG_MARGIN: u32 = 40;

/// Characters per crossing in the ASCII layout.
pub const ASCII_COLUMN_PITCH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Positive exponent.
    Clockwise,
    /// Negative exponent.
    Anticlockwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Time step, 0-based.
    pub position: usize,
    pub pair: Generator,
    pub orientation: Orientation,
    /// Strand passing over.
    pub over: usize,
    /// Strand passing under.
    pub under: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    /// `strands[s][t]` is the row (0..3) of strand `s` after `t` crossings.
    pub strands: [Vec<usize>; 3],
    pub crossings: Vec<Crossing>,
}

impl Diagram {
    /// One crossing per elementary exchange of `w`, in temporal order.
    pub fn from_word(w: &BraidWord) -> Diagram {
        // occupant[row] = strand currently in that row
        let mut occupant = [0usize, 1, 2];
        let mut strands: [Vec<usize>; 3] = [vec![0], vec![1], vec![2]];
        let mut crossings = Vec::new();
        for f in w.factors() {
            let top = usize::from(f.generator.index() - 1);
            let orientation =
                if f.exponent > 0 { Orientation::Clockwise } else { Orientation::Anticlockwise };
            for _ in 0..f.exponent.unsigned_abs() {
                let (down, up) = (occupant[top], occupant[top + 1]);
                let (over, under) = match orientation {
                    Orientation::Clockwise => (down, up),
                    Orientation::Anticlockwise => (up, down),
                };
                crossings.push(Crossing {
                    position: crossings.len(),
                    pair: f.generator,
                    orientation,
                    over,
                    under,
                });
                occupant.swap(top, top + 1);
                for (row, &s) in occupant.iter().enumerate() {
                    strands[s].push(row);
                }
            }
        }
        Diagram { strands, crossings }
    }

    /// Reads the crossings back as a word, merging consecutive crossings of
    /// the same pair and orientation.
    pub fn to_word(&self) -> BraidWord {
        word_from_crossings(self.crossings.iter().map(|c| (c.pair, c.orientation)))
    }

    /// The strand taking part in every crossing, when exactly one does.
    pub fn mobile_strand(&self) -> Option<usize> {
        let mut mobile: Vec<usize> = (0..3)
            .filter(|&s| self.crossings.iter().all(|c| c.over == s || c.under == s))
            .collect();
        if self.crossings.is_empty() || mobile.len() != 1 {
            None
        } else {
            mobile.pop()
        }
    }

    fn final_occupants(&self) -> [usize; 3] {
        let mut occ = [0usize; 3];
        for (s, trace) in self.strands.iter().enumerate() {
            occ[*trace.last().expect("trace starts non-empty")] = s;
        }
        occ
    }

    pub fn to_ascii(&self) -> String {
        let mut rows: Vec<String> = (0..5).map(|_| String::new()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r % 2 == 0 {
                row.push(STRAND_NAMES[r / 2]);
                row.push_str(" -");
            } else {
                row.push_str("   ");
            }
        }
        for c in &self.crossings {
            let top = 2 * usize::from(c.pair.index() - 1);
            let centre = match c.orientation {
                Orientation::Clockwise => '\\',
                Orientation::Anticlockwise => '/',
            };
            for (r, row) in rows.iter_mut().enumerate() {
                let block = if r == top {
                    ['\\', ' ', '/', '-']
                } else if r == top + 1 {
                    [' ', centre, ' ', ' ']
                } else if r == top + 2 {
                    ['/', ' ', '\\', '-']
                } else if r % 2 == 0 {
                    ['-'; 4]
                } else {
                    [' '; 4]
                };
                row.extend(block);
            }
        }
        let last = self.final_occupants();
        let mut out = String::new();
        for (r, row) in rows.iter_mut().enumerate() {
            if r % 2 == 0 {
                row.push_str("- ");
                row.push(STRAND_NAMES[last[r / 2]]);
            } else {
                row.push_str("   ");
            }
            out.push_str(row.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self) -> String {
        let n = self.crossings.len() as u32;
        let width = 2 * SVG_MARGIN + SVG_COLUMN_PITCH * (n + 2);
        let height = 2 * SVG_MARGIN + SVG_ROW_PITCH * 2;
        let x = |step: u32| SVG_MARGIN + SVG_COLUMN_PITCH * step;
        let y = |row: usize| SVG_MARGIN + SVG_ROW_PITCH * row as u32;

        let mut svg = String::new();
        svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
        );
        let line = |svg: &mut String, s: usize, x1: u32, y1: u32, x2: u32, y2: u32, colour: &str, w: u32| {
            let _ = writeln!(
                svg,
                "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{colour}\" stroke-width=\"{w}\" stroke-linecap=\"round\" data-strand=\"{}\"/>",
                STRAND_NAMES[s]
            );
        };

        // lead-in
        for (s, (rows, colour)) in self.strands.iter().zip(STRAND_COLOURS).enumerate() {
            line(&mut svg, s, x(0), y(rows[0]), x(1), y(rows[0]), colour, 4);
        }
        for (t, c) in self.crossings.iter().enumerate() {
            let t = t as u32;
            let seg = |s: usize| (y(self.strands[s][t as usize]), y(self.strands[s][t as usize + 1]));
            for s in (0..3).filter(|&s| s != c.over) {
                let (y1, y2) = seg(s);
                line(&mut svg, s, x(t + 1), y1, x(t + 2), y2, STRAND_COLOURS[s], 4);
            }
            let (y1, y2) = seg(c.over);
            line(&mut svg, c.over, x(t + 1), y1, x(t + 2), y2, "#ffffff", 12);
            line(&mut svg, c.over, x(t + 1), y1, x(t + 2), y2, STRAND_COLOURS[c.over], 4);
        }
        // lead-out
        for (s, (rows, colour)) in self.strands.iter().zip(STRAND_COLOURS).enumerate() {
            let row = *rows.last().expect("non-empty");
            line(&mut svg, s, x(n + 1), y(row), x(n + 2), y(row), colour, 4);
        }
        svg.push_str("</svg>\n");
        svg
    }
}

fn word_from_crossings(crossings: impl Iterator<Item = (Generator, Orientation)>) -> BraidWord {
    let mut factors: Vec<Factor> = Vec::new();
    for (g, o) in crossings {
        let step = match o {
            Orientation::Clockwise => 1,
            Orientation::Anticlockwise => -1,
        };
        match factors.last_mut() {
            Some(last) if last.generator == g && last.exponent.signum() == step => last.exponent += step,
            _ => factors.push(Factor::new(g, step)),
        }
    }
    BraidWord::new(factors)
}

/// Renders `w` in the requested format.
pub fn diagram(w: &BraidWord, format: Format) -> String {
    let d = Diagram::from_word(w);
    match format {
        Format::Ascii => d.to_ascii(),
        Format::Svg => d.to_svg(),
    }
}

/// Recovers the word from an ASCII diagram produced by [`Diagram::to_ascii`].
pub fn word_from_ascii(text: &str) -> Option<BraidWord> {
    let mut rows: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    if rows.len() != 5 {
        return None;
    }
    let len = rows[0].len();
    // gap rows are written without trailing blanks
    for row in rows.iter_mut() {
        if row.len() < len {
            row.resize(len, ' ');
        }
    }
    // "a -" prefix and "- a" suffix
    let body = len.checked_sub(6)?;
    if body % ASCII_COLUMN_PITCH != 0 || rows.iter().any(|r| r.len() != len) {
        return None;
    }
    let mut crossings = Vec::new();
    for k in 0..body / ASCII_COLUMN_PITCH {
        let col = 3 + k * ASCII_COLUMN_PITCH + 1;
        let (pair, glyph) = match (rows[1][col], rows[3][col]) {
            (g @ ('\\' | '/'), ' ') => (Generator::Sigma1, g),
            (' ', g @ ('\\' | '/')) => (Generator::Sigma2, g),
            _ => return None,
        };
        let orientation = if glyph == '\\' { Orientation::Clockwise } else { Orientation::Anticlockwise };
        crossings.push((pair, orientation));
    }
    Some(word_from_crossings(crossings.into_iter()))
}
