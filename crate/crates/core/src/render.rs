//! Deterministic SVG and plain-PBM output.
//!
//! Every document starts with the same XML prologue, lists elements sorted by
//! cell coordinate and prints every number with six fractional digits, so a
//! given state and style always produce the same bytes. The SVG y axis points
//! down; lattice y is flipped when placing cells.

use std::fmt::Write;

use crate::engine::AutomatonState;
use crate::error::{Error, Result};
use crate::gasket::gasket_row;
use crate::genealogy::{children_of, family_tree_edges};
use crate::lattice::{self, cells_within, slice_coords, slices_of, Cell, LatticeKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderMode {
    Plain,
    ByGeneration,
    Fertility,
    GasketDots,
    GasketSolid,
    TreeOverlay,
}

impl RenderMode {
    pub fn name(self) -> &'static str {
        match self {
            RenderMode::Plain => "plain",
            RenderMode::ByGeneration => "generation",
            RenderMode::Fertility => "fertility",
            RenderMode::GasketDots => "gasket-dots",
            RenderMode::GasketSolid => "gasket-solid",
            RenderMode::TreeOverlay => "tree",
        }
    }
}

impl std::str::FromStr for RenderMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        [
            RenderMode::Plain,
            RenderMode::ByGeneration,
            RenderMode::Fertility,
            RenderMode::GasketDots,
            RenderMode::GasketSolid,
            RenderMode::TreeOverlay,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| format!("unknown style '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RenderStyle {
    pub mode: RenderMode,
    /// Outline every cell within reach of the current generation.
    pub show_grid: bool,
    /// Output units per cell (center spacing).
    pub cell_size: u32,
}

impl RenderStyle {
    pub fn new(mode: RenderMode) -> RenderStyle {
        RenderStyle {
            mode,
            show_grid: false,
            cell_size: 10,
        }
    }
}

pub const PATRIARCH_COLOR: &str = "#000000";
pub const THREE_CHILDREN_COLOR: &str = "#1f4fd8";
pub const TWO_CHILDREN_COLOR: &str = "#8e3fbf";
pub const ONE_CHILD_COLOR: &str = "#d62728";
pub const LEAF_COLOR: &str = "#2ca02c";
const PLAIN_COLOR: &str = "#7f7f7f";
const FAINT_COLOR: &str = "#e6e6e6";
const GRID_COLOR: &str = "#c8c8c8";

/// Formats with six fractional digits, without negative zero.
fn num(v: f64) -> String {
    let v = if v.abs() < 5e-7 { 0.0 } else { v };
    format!("{v:.6}")
}

struct Canvas {
    out: String,
    scale: f64,
    kind: LatticeKind,
}

impl Canvas {
    fn new(kind: LatticeKind, generation: u32, cell_size: u32) -> Canvas {
        let s = cell_size as f64;
        let n = generation as f64;
        let (half_w, half_h) = match kind {
            LatticeKind::Square => (n + 0.5, n + 0.5),
            LatticeKind::Hex => (n + 0.5, n * 3f64.sqrt() / 2.0 + 1.0 / 3f64.sqrt()),
        };
        let (w, h) = (2.0 * half_w * s, 2.0 * half_h * s);
        let mut out = String::new();
        header(&mut out, -half_w * s, -half_h * s, w, h);
        Canvas {
            out,
            scale: s,
            kind,
        }
    }

    fn point(&self, c: Cell) -> (f64, f64) {
        let (x, y) = lattice::center(c);
        (x * self.scale, -y * self.scale)
    }

    fn cell(&mut self, c: Cell, fill: &str, stroke: &str) {
        let (cx, cy) = self.point(c);
        let s = self.scale;
        match self.kind {
            LatticeKind::Square => writeln!(
                self.out,
                r#"<rect x="{}" y="{}" width="{}" height="{}" fill="{fill}" stroke="{stroke}"/>"#,
                num(cx - s / 2.0),
                num(cy - s / 2.0),
                num(s),
                num(s)
            )
            .unwrap(),
            LatticeKind::Hex => {
                // Pointy-top: vertices at 30 + 60k degrees, circumradius s / sqrt(3).
                let r = s / 3f64.sqrt();
                let pts: Vec<String> = (0..6)
                    .map(|k| {
                        let a = (30.0 + 60.0 * k as f64).to_radians();
                        format!("{},{}", num(cx + r * a.cos()), num(cy - r * a.sin()))
                    })
                    .collect();
                writeln!(
                    self.out,
                    r#"<polygon points="{}" fill="{fill}" stroke="{stroke}"/>"#,
                    pts.join(" ")
                )
                .unwrap();
            }
        }
    }

    fn dot(&mut self, c: Cell) {
        let (cx, cy) = self.point(c);
        writeln!(
            self.out,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#000000"/>"##,
            num(cx),
            num(cy),
            num(self.scale * 0.2)
        )
        .unwrap();
    }

    fn segment(&mut self, a: Cell, b: Cell) {
        let (x1, y1) = self.point(a);
        let (x2, y2) = self.point(b);
        writeln!(
            self.out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="{}"/>"##,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            num(self.scale * 0.15)
        )
        .unwrap();
    }

    fn group(&mut self, id: &str) {
        writeln!(self.out, r#"<g id="{id}">"#).unwrap();
    }

    fn end_group(&mut self) {
        self.out.push_str("</g>\n");
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn header(out: &mut String, x: f64, y: f64, w: f64, h: f64) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        num(w),
        num(h),
        num(x),
        num(y),
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(
        out,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#ffffff"/>"##,
        num(x),
        num(y),
        num(w),
        num(h)
    )
    .unwrap();
}

/// Whether `c` sits on the gasket in some slice containing it.
fn in_gasket(kind: LatticeKind, c: Cell) -> bool {
    slices_of(kind, c)
        .expect("valid cell")
        .into_iter()
        .any(|s| {
            let sc = slice_coords(kind, s, c).expect("member of slice");
            sc.a & sc.b == 0
        })
}

/// Live cells marked by the gasket styles, sorted.
pub fn gasket_marked_cells(state: &AutomatonState) -> Vec<Cell> {
    let mut cells: Vec<Cell> = state
        .iter()
        .map(|(c, _)| c)
        .filter(|&c| in_gasket(state.kind(), c))
        .collect();
    cells.sort_unstable();
    cells
}

/// Number of children `c` would get if the state advanced one generation.
pub fn potential_fertility(state: &AutomatonState, c: Cell) -> Result<usize> {
    state.require(c)?;
    Ok(lattice::neighbors(state.kind(), c)?
        .into_iter()
        .filter(|&n| !state.is_live(n) && state.live_neighbor_count(n) == 1)
        .count())
}

fn fertility_color(kind: LatticeKind, c: Cell, children: usize) -> Result<&'static str> {
    let mismatch = |reason: String| Error::StyleMismatch {
        style: "fertility",
        kind,
        reason,
    };
    if c.is_patriarch() {
        return Ok(PATRIARCH_COLOR);
    }
    match children {
        0 => Ok(LEAF_COLOR),
        1 => Ok(ONE_CHILD_COLOR),
        2 if kind == LatticeKind::Hex => Ok(TWO_CHILDREN_COLOR),
        3 => Ok(THREE_CHILDREN_COLOR),
        n => Err(mismatch(format!(
            "{c} has {n} children, which has no color on this lattice"
        ))),
    }
}

/// Fill color by fertility; frontier cells use their potential fertility.
fn fertility_fill(state: &AutomatonState, c: Cell, generation: u32) -> Result<&'static str> {
    let children = if generation == state.generation() {
        potential_fertility(state, c)?
    } else {
        children_of(state, c)?.len()
    };
    fertility_color(state.kind(), c, children)
}

fn generation_shade(generation: u32, last: u32) -> String {
    let v = 40 + (180 * generation as u64 / last.max(1) as u64) as u8;
    format!("#{v:02x}{v:02x}{v:02x}")
}

pub fn render_state(state: &AutomatonState, style: RenderStyle) -> Result<String> {
    let kind = state.kind();
    let mut canvas = Canvas::new(kind, state.generation(), style.cell_size);
    let records = state.sorted_records();

    if style.show_grid {
        canvas.group("grid");
        for c in cells_within(kind, state.generation()) {
            canvas.cell(c, "none", GRID_COLOR);
        }
        canvas.end_group();
    }

    canvas.group("cells");
    let gasket: Vec<bool> = match style.mode {
        RenderMode::GasketDots | RenderMode::GasketSolid => {
            records.iter().map(|&(c, _)| in_gasket(kind, c)).collect()
        }
        _ => Vec::new(),
    };
    for (i, &(c, rec)) in records.iter().enumerate() {
        let fill = match style.mode {
            RenderMode::Plain => PLAIN_COLOR.to_string(),
            RenderMode::ByGeneration => generation_shade(rec.generation, state.generation()),
            RenderMode::Fertility | RenderMode::GasketDots => {
                fertility_fill(state, c, rec.generation)?.to_string()
            }
            RenderMode::GasketSolid if gasket[i] => "#000000".to_string(),
            RenderMode::GasketSolid | RenderMode::TreeOverlay => FAINT_COLOR.to_string(),
        };
        canvas.cell(c, &fill, "#000000");
    }
    canvas.end_group();

    match style.mode {
        RenderMode::GasketDots => {
            canvas.group("gasket");
            for (i, &(c, _)) in records.iter().enumerate() {
                if gasket[i] {
                    canvas.dot(c);
                }
            }
            canvas.end_group();
        }
        RenderMode::TreeOverlay => {
            canvas.group("tree");
            for (p, c) in family_tree_edges(state) {
                canvas.segment(p, c);
            }
            canvas.end_group();
        }
        _ => {}
    }
    Ok(canvas.finish())
}

/// Rows `0..=n` of the gasket as upward triangles, row 0 at the top.
/// `GasketDots` marks triangle centers instead of filling them; `show_grid`
/// outlines the absent positions too.
pub fn render_gasket(n: u32, style: RenderStyle) -> String {
    let s = style.cell_size as f64;
    let h = s * 3f64.sqrt() / 2.0;
    let rows = n as f64 + 1.0;
    let mut out = String::new();
    header(&mut out, -rows * s / 2.0, 0.0, rows * s, rows * h);
    out.push_str("<g id=\"gasket\">\n");
    for row in 0..=n as u64 {
        let present = gasket_row(row);
        for pos in 0..=row {
            let on = present.contains(pos);
            if !on && !style.show_grid {
                continue;
            }
            let apex_x = (pos as f64 - row as f64 / 2.0) * s;
            let apex_y = row as f64 * h;
            if on && style.mode == RenderMode::GasketDots {
                writeln!(
                    out,
                    r##"<circle cx="{}" cy="{}" r="{}" fill="#000000"/>"##,
                    num(apex_x),
                    num(apex_y + h * 2.0 / 3.0),
                    num(s * 0.2)
                )
                .unwrap();
                continue;
            }
            let fill = if on { "#000000" } else { "none" };
            let stroke = if on { "#000000" } else { GRID_COLOR };
            writeln!(
                out,
                r#"<polygon points="{},{} {},{} {},{}" fill="{fill}" stroke="{stroke}"/>"#,
                num(apex_x),
                num(apex_y),
                num(apex_x - s / 2.0),
                num(apex_y + h),
                num(apex_x + s / 2.0),
                num(apex_y + h)
            )
            .unwrap();
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Plain PBM (`P1`) over `[-generation, generation]^2`, top row `y = generation`.
pub fn render_bitmap(state: &AutomatonState) -> Result<String> {
    if state.kind() != LatticeKind::Square {
        return Err(Error::Unsupported(state.kind()));
    }
    let n = state.generation() as i32;
    let side = 2 * n + 1;
    let mut out = format!("P1\n{side} {side}\n");
    for y in (-n..=n).rev() {
        let row: Vec<&str> = (-n..=n)
            .map(|x| {
                if state.is_live(Cell::square(x, y)) {
                    "1"
                } else {
                    "0"
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    Ok(out)
}
