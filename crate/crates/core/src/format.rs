//! Text-grid and JSON encodings of polyominoes.
//!
//! Grid: one line per row, `#` for a cell and `.` for an empty square, the
//! last line is the lowest row and the first column is `x = 0`. Trailing
//! whitespace and blank lines around the picture are ignored.
//!
//! JSON: `{"cells": [[x, y], ...]}` with cells in lexicographic order.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::grid::{Cell, Polyomino};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Grid,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grid" => Ok(Format::Grid),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected grid or json)")),
        }
    }
}

/// Guesses the format from the first non-blank character.
pub fn detect(text: &str) -> Format {
    match text.trim_start().chars().next() {
        Some('{') => Format::Json,
        _ => Format::Grid,
    }
}

pub fn parse(text: &str, format: Format) -> Result<Polyomino, ParseError> {
    match format {
        Format::Grid => parse_grid(text),
        Format::Json => parse_json(text),
    }
}

pub fn render(p: &Polyomino, format: Format) -> String {
    match format {
        Format::Grid => to_grid(p),
        Format::Json => to_json(p),
    }
}

pub fn parse_grid(text: &str) -> Result<Polyomino, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .skip_while(|(_, l)| l.is_empty())
        .collect();
    let last = lines.iter().rposition(|(_, l)| !l.is_empty()).map_or(0, |k| k + 1);
    let rows = &lines[..last];
    let mut cells = Vec::new();
    for (row_index, (line_no, line)) in rows.iter().enumerate() {
        let y = (rows.len() - 1 - row_index) as i32;
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(col as i32, y)),
                '.' => {}
                other => {
                    return Err(ParseError {
                        line: *line_no,
                        column: col + 1,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
    }
    let first_line = rows.first().map_or(1, |(n, _)| *n);
    Polyomino::new(cells).map_err(|e| ParseError {
        line: first_line,
        column: 1,
        message: e.to_string(),
    })
}

/// Bounding-box picture; the shape is drawn relative to its lower-left
/// corner, so parsing the output yields the normalized polyomino.
pub fn to_grid(p: &Polyomino) -> String {
    let (lo, hi) = p.bounding_box();
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        for x in lo.x..=hi.x {
            out.push(if p.contains(&Cell::new(x, y)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn parse_json(text: &str) -> Result<Polyomino, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn to_json(p: &Polyomino) -> String {
    serde_json::to_string(p).expect("polyomino serializes")
}
