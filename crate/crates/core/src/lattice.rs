//! Square and hexagonal lattices: coordinates, adjacency, distances, slices
//! and the dihedral symmetry group fixing the origin cell.
//!
//! Square cells are addressed by the integer coordinates of their centers.
//! Hex cells use cube coordinates `(x, y, z)` with `x + y + z = 0`.
//!
//! # Hex axis directions
//!
//! The six unit directions, in counter-clockwise order, are
//!
//! ```text
//! u0 = ( 1, -1,  0)   u1 = ( 1,  0, -1)   u2 = ( 0,  1, -1)
//! u3 = (-1,  1,  0)   u4 = (-1,  0,  1)   u5 = ( 0, -1,  1)
//! ```
//!
//! The planar embedding is pointy-top with `u0` pointing right and unit
//! spacing between adjacent centers: the center of `(x, y, z)` is
//! `((x - y) / 2, sqrt(3) (x + y) / 2)`. Square slices use the rays
//! `(1,0), (0,1), (-1,0), (0,-1)` in the same counter-clockwise order;
//! slice `k` is spanned by rays `k` and `k + 1`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LatticeKind {
    Square,
    Hex,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 2] = [LatticeKind::Square, LatticeKind::Hex];

    /// Number of neighbors of a cell; also the number of slices and of
    /// rotations in the symmetry group.
    pub fn degree(self) -> usize {
        match self {
            LatticeKind::Square => 4,
            LatticeKind::Hex => 6,
        }
    }

    pub fn slice_count(self) -> usize {
        self.degree()
    }

    /// Order of the dihedral group fixing the patriarch (8 or 12).
    pub fn symmetry_order(self) -> usize {
        2 * self.degree()
    }

    pub fn patriarch(self) -> Cell {
        match self {
            LatticeKind::Square => Cell::Square { x: 0, y: 0 },
            LatticeKind::Hex => Cell::Hex { x: 0, y: 0, z: 0 },
        }
    }

    /// Axis offsets in axial `(x, y)` form, in counter-clockwise order.
    pub(crate) fn axial_offsets(self) -> &'static [(i32, i32)] {
        match self {
            LatticeKind::Square => &SQUARE_OFFSETS,
            LatticeKind::Hex => &HEX_OFFSETS,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::Hex => "hex",
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LatticeKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "square" => Ok(LatticeKind::Square),
            "hex" => Ok(LatticeKind::Hex),
            other => Err(format!(
                "unknown lattice '{other}' (expected square or hex)"
            )),
        }
    }
}

const SQUARE_OFFSETS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
const HEX_OFFSETS: [(i32, i32); 6] = [(1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)];

/// A lattice cell. Ordering is lexicographic on the coordinates, which is
/// the order used for every sorted output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Square { x: i32, y: i32 },
    Hex { x: i32, y: i32, z: i32 },
}

impl Cell {
    pub const fn square(x: i32, y: i32) -> Cell {
        Cell::Square { x, y }
    }

    /// Builds a hex cell without validating `x + y + z = 0`; see
    /// [`validate`].
    pub const fn hex(x: i32, y: i32, z: i32) -> Cell {
        Cell::Hex { x, y, z }
    }

    pub fn kind(&self) -> LatticeKind {
        match self {
            Cell::Square { .. } => LatticeKind::Square,
            Cell::Hex { .. } => LatticeKind::Hex,
        }
    }

    pub fn is_patriarch(&self) -> bool {
        match *self {
            Cell::Square { x, y } => x == 0 && y == 0,
            Cell::Hex { x, y, z } => x == 0 && y == 0 && z == 0,
        }
    }

    /// The first two coordinates; for hex cells `z` is implied.
    pub(crate) fn axial(&self) -> (i32, i32) {
        match *self {
            Cell::Square { x, y } => (x, y),
            Cell::Hex { x, y, .. } => (x, y),
        }
    }

    pub(crate) fn from_axial(kind: LatticeKind, x: i32, y: i32) -> Cell {
        match kind {
            LatticeKind::Square => Cell::Square { x, y },
            LatticeKind::Hex => Cell::Hex { x, y, z: -x - y },
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Cell::Square { x, y } => write!(f, "{x},{y}"),
            Cell::Hex { x, y, z } => write!(f, "{x},{y},{z}"),
        }
    }
}

impl Cell {
    /// Parses the `x,y` / `x,y,z` form produced by `Display`.
    pub fn parse(kind: LatticeKind, s: &str) -> std::result::Result<Cell, String> {
        let parts: Vec<&str> = s.split(',').collect();
        let num = |t: &str| {
            t.trim()
                .parse::<i32>()
                .map_err(|e| format!("bad coordinate '{t}': {e}"))
        };
        let cell = match (kind, parts.len()) {
            (LatticeKind::Square, 2) => Cell::square(num(parts[0])?, num(parts[1])?),
            (LatticeKind::Hex, 3) => Cell::hex(num(parts[0])?, num(parts[1])?, num(parts[2])?),
            _ => return Err(format!("'{s}' is not a {kind} coordinate")),
        };
        validate(kind, cell).map_err(|e| e.to_string())?;
        Ok(cell)
    }
}

/// Checks that `c` is a well-formed cell of `kind`.
pub fn validate(kind: LatticeKind, c: Cell) -> Result<()> {
    match c {
        Cell::Square { .. } if kind == LatticeKind::Square => Ok(()),
        Cell::Hex { x, y, z } if kind == LatticeKind::Hex => {
            if x as i64 + y as i64 + z as i64 == 0 {
                Ok(())
            } else {
                Err(Error::InvalidCoordinate(c))
            }
        }
        _ => Err(Error::LatticeMismatch {
            cell: c,
            expected: kind,
        }),
    }
}

/// The neighbors of `c` in counter-clockwise order starting with the
/// `+x` direction (square) or `u0` (hex).
pub fn neighbors(kind: LatticeKind, c: Cell) -> Result<Vec<Cell>> {
    validate(kind, c)?;
    let (x, y) = c.axial();
    Ok(kind
        .axial_offsets()
        .iter()
        .map(|&(dx, dy)| Cell::from_axial(kind, x + dx, y + dy))
        .collect())
}

/// Axis unit direction `k` (taken modulo the lattice degree).
pub fn axis(kind: LatticeKind, k: usize) -> Cell {
    let (dx, dy) = kind.axial_offsets()[k % kind.degree()];
    Cell::from_axial(kind, dx, dy)
}

fn axial_delta(a: Cell, b: Cell) -> (i64, i64) {
    let (ax, ay) = a.axial();
    let (bx, by) = b.axial();
    (bx as i64 - ax as i64, by as i64 - ay as i64)
}

fn check_pair(kind: LatticeKind, a: Cell, b: Cell) -> Result<()> {
    validate(kind, a)?;
    validate(kind, b)
}

/// Minimum number of neighbor moves from `a` to `b`.
pub fn manhattan_distance(kind: LatticeKind, a: Cell, b: Cell) -> Result<u64> {
    check_pair(kind, a, b)?;
    Ok(manhattan_unchecked(kind, a, b))
}

pub(crate) fn manhattan_unchecked(kind: LatticeKind, a: Cell, b: Cell) -> u64 {
    let (dx, dy) = axial_delta(a, b);
    match kind {
        LatticeKind::Square => dx.unsigned_abs() + dy.unsigned_abs(),
        LatticeKind::Hex => (dx.unsigned_abs() + dy.unsigned_abs() + (dx + dy).unsigned_abs()) / 2,
    }
}

/// Distance from the patriarch.
pub(crate) fn norm(kind: LatticeKind, c: Cell) -> u64 {
    manhattan_unchecked(kind, kind.patriarch(), c)
}

/// Squared Euclidean distance between centers. Exact: for hex cells the
/// embedding gives `dx^2 + dx*dy + dy^2` in axial differences.
pub fn squared_geometric_distance(kind: LatticeKind, a: Cell, b: Cell) -> Result<i64> {
    check_pair(kind, a, b)?;
    let (dx, dy) = axial_delta(a, b);
    Ok(match kind {
        LatticeKind::Square => dx * dx + dy * dy,
        LatticeKind::Hex => dx * dx + dx * dy + dy * dy,
    })
}

pub fn geometric_distance(kind: LatticeKind, a: Cell, b: Cell) -> Result<f64> {
    squared_geometric_distance(kind, a, b).map(|d| (d as f64).sqrt())
}

/// Center of `c` in the plane (y axis pointing up).
pub fn center(c: Cell) -> (f64, f64) {
    match c {
        Cell::Square { x, y } => (x as f64, y as f64),
        Cell::Hex { x, y, .. } => {
            let (x, y) = (x as f64, y as f64);
            ((x - y) / 2.0, 3f64.sqrt() * (x + y) / 2.0)
        }
    }
}

/// Position of a cell inside a slice: `cell = a * ray(slice) + b * ray(slice + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SliceCoord {
    pub slice: usize,
    pub a: u64,
    pub b: u64,
}

impl SliceCoord {
    /// Gasket row: the Manhattan distance from the patriarch.
    pub fn row(&self) -> u64 {
        self.a + self.b
    }

    /// Gasket position within the row.
    pub fn pos(&self) -> u64 {
        self.b
    }
}

fn check_slice(kind: LatticeKind, slice: usize) -> Result<()> {
    if slice < kind.slice_count() {
        Ok(())
    } else {
        Err(Error::InvalidSlice { kind, index: slice })
    }
}

/// Decomposes `c` along the two rays of `slice`, returning signed
/// components (both non-negative iff `c` is in the slice).
fn decompose(kind: LatticeKind, slice: usize, c: Cell) -> (i64, i64) {
    let n = kind.degree();
    let back = Symmetry::rotation((n - slice % n) % n);
    let (x, y) = back.apply_unchecked(c).axial();
    match kind {
        LatticeKind::Square => (x as i64, y as i64),
        // a*u0 + b*u1 = (a + b, -a, -b)
        LatticeKind::Hex => (-(y as i64), x as i64 + y as i64),
    }
}

/// Slices containing `c`. Axis cells lie in two slices, the patriarch in all.
pub fn slices_of(kind: LatticeKind, c: Cell) -> Result<Vec<usize>> {
    validate(kind, c)?;
    Ok((0..kind.slice_count())
        .filter(|&k| {
            let (a, b) = decompose(kind, k, c);
            a >= 0 && b >= 0
        })
        .collect())
}

pub fn slice_coords(kind: LatticeKind, slice: usize, c: Cell) -> Result<SliceCoord> {
    validate(kind, c)?;
    check_slice(kind, slice)?;
    let (a, b) = decompose(kind, slice, c);
    if a < 0 || b < 0 {
        return Err(Error::NotInSlice { cell: c, slice });
    }
    Ok(SliceCoord {
        slice,
        a: a as u64,
        b: b as u64,
    })
}

/// Inverse of [`slice_coords`].
pub fn cell_from_slice(kind: LatticeKind, coord: SliceCoord) -> Result<Cell> {
    check_slice(kind, coord.slice)?;
    let (r0x, r0y) = kind.axial_offsets()[coord.slice];
    let (r1x, r1y) = kind.axial_offsets()[(coord.slice + 1) % kind.degree()];
    let (a, b) = (coord.a as i32, coord.b as i32);
    Ok(Cell::from_axial(kind, a * r0x + b * r1x, a * r0y + b * r1y))
}

/// True iff the center of `c` lies on a symmetry line through the corners of
/// the patriarch (the diagonals on the square grid; the lines through
/// `u_i + u_{i+1}` on the hex grid). The patriarch itself is excluded.
pub fn on_corner_axis(kind: LatticeKind, c: Cell) -> Result<bool> {
    validate(kind, c)?;
    Ok(match c {
        _ if c.is_patriarch() => false,
        Cell::Square { x, y } => x.unsigned_abs() == y.unsigned_abs(),
        Cell::Hex { x, y, z } => x == y || y == z || z == x,
    })
}

/// An element of the dihedral group fixing the patriarch: an optional
/// reflection followed by `rotation` counter-clockwise steps of 90 (square)
/// or 60 (hex) degrees. The reflection is across the `x` axis on the square
/// grid and across the `u0` axis on the hex grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symmetry {
    pub rotation: u8,
    pub reflected: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        rotation: 0,
        reflected: false,
    };

    pub fn rotation(steps: usize) -> Symmetry {
        Symmetry {
            rotation: steps as u8,
            reflected: false,
        }
    }

    pub fn reflection(then_rotate: usize) -> Symmetry {
        Symmetry {
            rotation: then_rotate as u8,
            reflected: true,
        }
    }

    /// All group elements for `kind`, rotations first.
    pub fn group(kind: LatticeKind) -> Vec<Symmetry> {
        let n = kind.degree();
        (0..n)
            .map(Symmetry::rotation)
            .chain((0..n).map(Symmetry::reflection))
            .collect()
    }

    fn apply_unchecked(self, c: Cell) -> Cell {
        let mut c = c;
        if self.reflected {
            c = match c {
                Cell::Square { x, y } => Cell::Square { x, y: -y },
                Cell::Hex { x, y, z } => Cell::Hex {
                    x: -y,
                    y: -x,
                    z: -z,
                },
            };
        }
        for _ in 0..self.rotation {
            c = match c {
                Cell::Square { x, y } => Cell::Square { x: -y, y: x },
                Cell::Hex { x, y, z } => Cell::Hex {
                    x: -y,
                    y: -z,
                    z: -x,
                },
            };
        }
        c
    }
}

pub fn apply_symmetry(kind: LatticeKind, g: Symmetry, c: Cell) -> Result<Cell> {
    validate(kind, c)?;
    if g.rotation as usize >= kind.degree() {
        return Err(Error::UnknownSymmetry {
            kind,
            rotation: g.rotation,
            reflected: g.reflected,
        });
    }
    Ok(g.apply_unchecked(c))
}

/// All shortest neighbor paths from `a` to `b`, each including both
/// endpoints. Fails if there are more than `cap` of them.
pub fn enumerate_shortest_paths(
    kind: LatticeKind,
    a: Cell,
    b: Cell,
    cap: usize,
) -> Result<Vec<Vec<Cell>>> {
    check_pair(kind, a, b)?;
    let len = manhattan_unchecked(kind, a, b) as usize;
    let mut paths = Vec::new();
    let mut path = Vec::with_capacity(len + 1);
    path.push(a);
    extend_paths(kind, b, &mut path, &mut paths, cap).map_err(|()| Error::PathCapExceeded {
        from: a,
        to: b,
        cap,
    })?;
    Ok(paths)
}

fn extend_paths(
    kind: LatticeKind,
    target: Cell,
    path: &mut Vec<Cell>,
    out: &mut Vec<Vec<Cell>>,
    cap: usize,
) -> std::result::Result<(), ()> {
    let here = *path.last().expect("path is never empty");
    let remaining = manhattan_unchecked(kind, here, target);
    if remaining == 0 {
        if out.len() == cap {
            return Err(());
        }
        out.push(path.clone());
        return Ok(());
    }
    let (x, y) = here.axial();
    for &(dx, dy) in kind.axial_offsets() {
        let next = Cell::from_axial(kind, x + dx, y + dy);
        if manhattan_unchecked(kind, next, target) < remaining {
            path.push(next);
            let r = extend_paths(kind, target, path, out, cap);
            path.pop();
            r?;
        }
    }
    Ok(())
}

/// Every cell within Manhattan distance `radius` of the patriarch, sorted.
pub fn cells_within(kind: LatticeKind, radius: u32) -> Vec<Cell> {
    let r = radius as i32;
    let mut cells: Vec<Cell> = (-r..=r)
        .flat_map(|x| (-r..=r).map(move |y| Cell::from_axial(kind, x, y)))
        .filter(|&c| norm(kind, c) <= radius as u64)
        .collect();
    cells.sort();
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet, VecDeque};

    use proptest::prelude::*;

    const SQ: LatticeKind = LatticeKind::Square;
    const HX: LatticeKind = LatticeKind::Hex;

    fn bfs_distances(kind: LatticeKind, from: Cell, radius: u64) -> HashMap<Cell, u64> {
        // Search a disc wider than `radius` so shortcuts outside it are found.
        let limit = 2 * radius + 2;
        let mut dist = HashMap::from([(from, 0u64)]);
        let mut queue = VecDeque::from([from]);
        while let Some(c) = queue.pop_front() {
            let d = dist[&c];
            if d == limit {
                continue;
            }
            for n in neighbors(kind, c).unwrap() {
                dist.entry(n).or_insert_with(|| {
                    queue.push_back(n);
                    d + 1
                });
            }
        }
        dist
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(
            neighbors(SQ, Cell::square(0, 0)).unwrap(),
            vec![
                Cell::square(1, 0),
                Cell::square(0, 1),
                Cell::square(-1, 0),
                Cell::square(0, -1)
            ]
        );
        assert_eq!(
            neighbors(SQ, Cell::square(2, 1)).unwrap(),
            vec![
                Cell::square(3, 1),
                Cell::square(2, 2),
                Cell::square(1, 1),
                Cell::square(2, 0)
            ]
        );
        let hex: HashSet<Cell> = neighbors(HX, HX.patriarch()).unwrap().into_iter().collect();
        let expected: HashSet<Cell> = [
            (1, -1, 0),
            (-1, 1, 0),
            (1, 0, -1),
            (-1, 0, 1),
            (0, 1, -1),
            (0, -1, 1),
        ]
        .into_iter()
        .map(|(x, y, z)| Cell::hex(x, y, z))
        .collect();
        assert_eq!(hex, expected);
        assert_eq!(
            neighbors(HX, HX.patriarch()).unwrap()[0],
            Cell::hex(1, -1, 0)
        );
        assert_eq!(
            neighbors(HX, HX.patriarch()).unwrap()[1],
            Cell::hex(1, 0, -1)
        );
    }

    #[test]
    fn malformed_hex_is_rejected() {
        assert_eq!(
            neighbors(HX, Cell::hex(1, 1, 1)),
            Err(Error::InvalidCoordinate(Cell::hex(1, 1, 1)))
        );
        assert!(matches!(
            manhattan_distance(SQ, Cell::square(0, 0), HX.patriarch()),
            Err(Error::LatticeMismatch { .. })
        ));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            manhattan_distance(SQ, Cell::square(0, 0), Cell::square(2, 1)),
            Ok(3)
        );
        assert_eq!(
            manhattan_distance(HX, HX.patriarch(), Cell::hex(3, -2, -1)),
            Ok(3)
        );
        assert_eq!(
            manhattan_distance(HX, Cell::hex(3, -2, -1), Cell::hex(3, -2, -1)),
            Ok(0)
        );
        assert_eq!(
            geometric_distance(SQ, Cell::square(0, 0), Cell::square(3, 4)),
            Ok(5.0)
        );
        let d = geometric_distance(SQ, Cell::square(0, 0), Cell::square(1, 1)).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
        for n in neighbors(HX, Cell::hex(2, -5, 3)).unwrap() {
            let d = geometric_distance(HX, Cell::hex(2, -5, 3), n).unwrap();
            assert!((d - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hex_distance_matches_bfs_oracle() {
        let dist = bfs_distances(HX, HX.patriarch(), 8);
        assert_eq!(dist[&Cell::hex(3, -2, -1)], 3);
    }

    #[test]
    fn manhattan_matches_bfs_within_radius_8() {
        for kind in LatticeKind::ALL {
            let cells = cells_within(kind, 8);
            for &a in cells.iter().step_by(7) {
                let dist = bfs_distances(kind, a, 16);
                for &b in &cells {
                    assert_eq!(
                        manhattan_unchecked(kind, a, b),
                        dist[&b],
                        "{kind} {a} -> {b}"
                    );
                }
            }
            let dist = bfs_distances(kind, kind.patriarch(), 8);
            for &b in &cells {
                assert_eq!(norm(kind, b), dist[&b]);
            }
        }
    }

    #[test]
    fn embedding_matches_squared_distance() {
        for kind in LatticeKind::ALL {
            for &c in &cells_within(kind, 6) {
                let (x, y) = center(c);
                let sq = squared_geometric_distance(kind, kind.patriarch(), c).unwrap() as f64;
                assert!((x * x + y * y - sq).abs() < 1e-9, "{c}");
            }
        }
        // u0 points right.
        let (x, y) = center(Cell::hex(1, -1, 0));
        assert!((x - 1.0).abs() < 1e-12 && y.abs() < 1e-12);
    }

    #[test]
    fn slice_examples() {
        assert_eq!(slices_of(SQ, Cell::square(2, 1)).unwrap(), vec![0]);
        assert_eq!(slices_of(SQ, Cell::square(3, 0)).unwrap(), vec![0, 3]);
        assert_eq!(
            slices_of(HX, HX.patriarch()).unwrap(),
            vec![0, 1, 2, 3, 4, 5]
        );
        assert_eq!(
            slice_coords(SQ, 0, Cell::square(2, 1)).unwrap(),
            SliceCoord {
                slice: 0,
                a: 2,
                b: 1
            }
        );
        assert_eq!(
            slice_coords(HX, 0, Cell::hex(3, -2, -1)).unwrap(),
            SliceCoord {
                slice: 0,
                a: 2,
                b: 1
            }
        );
        // 2*u0 + 1*u1 reconstructs the cell.
        assert_eq!(
            cell_from_slice(
                HX,
                SliceCoord {
                    slice: 0,
                    a: 2,
                    b: 1
                }
            )
            .unwrap(),
            Cell::hex(3, -2, -1)
        );
        assert_eq!(
            slice_coords(SQ, 0, Cell::square(0, 0)).unwrap(),
            SliceCoord {
                slice: 0,
                a: 0,
                b: 0
            }
        );
        assert_eq!(
            slice_coords(SQ, 1, Cell::square(2, 1)),
            Err(Error::NotInSlice {
                cell: Cell::square(2, 1),
                slice: 1
            })
        );
        assert!(matches!(
            slice_coords(SQ, 4, Cell::square(0, 0)),
            Err(Error::InvalidSlice { .. })
        ));
    }

    #[test]
    fn every_non_patriarch_cell_is_in_one_or_two_slices() {
        for kind in LatticeKind::ALL {
            for c in cells_within(kind, 10) {
                let s = slices_of(kind, c).unwrap();
                if c.is_patriarch() {
                    assert_eq!(s.len(), kind.slice_count());
                } else {
                    assert!(s.len() == 1 || s.len() == 2, "{c}: {s:?}");
                }
            }
        }
    }

    #[test]
    fn slice_round_trip_within_radius_20() {
        for kind in LatticeKind::ALL {
            for slice in 0..kind.slice_count() {
                for a in 0..=20u64 {
                    for b in 0..=(20 - a) {
                        let coord = SliceCoord { slice, a, b };
                        let cell = cell_from_slice(kind, coord).unwrap();
                        assert_eq!(norm(kind, cell), a + b);
                        assert_eq!(slice_coords(kind, slice, cell).unwrap(), coord);
                    }
                }
            }
        }
    }

    #[test]
    fn corner_axis_examples() {
        assert_eq!(on_corner_axis(SQ, Cell::square(3, 3)), Ok(true));
        assert_eq!(on_corner_axis(SQ, Cell::square(-3, 3)), Ok(true));
        assert_eq!(on_corner_axis(SQ, Cell::square(3, 0)), Ok(false));
        assert_eq!(on_corner_axis(SQ, Cell::square(0, 0)), Ok(false));
        assert_eq!(on_corner_axis(HX, Cell::hex(2, -1, -1)), Ok(true));
        assert_eq!(on_corner_axis(HX, Cell::hex(3, -2, -1)), Ok(false));
        assert_eq!(on_corner_axis(HX, HX.patriarch()), Ok(false));
        // Exactly the multiples of u_i + u_{i+1}.
        for c in cells_within(HX, 12) {
            let on_diag = (0..6).any(|i| {
                let (x0, y0) = HX.axial_offsets()[i];
                let (x1, y1) = HX.axial_offsets()[(i + 1) % 6];
                (1..=12).any(|k| c.axial() == (k * (x0 + x1), k * (y0 + y1)))
            });
            assert_eq!(on_corner_axis(HX, c).unwrap(), on_diag, "{c}");
        }
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(
            apply_symmetry(SQ, Symmetry::reflection(0), Cell::square(2, 1)),
            Ok(Cell::square(2, -1))
        );
        assert_eq!(
            apply_symmetry(SQ, Symmetry::rotation(1), Cell::square(1, 0)),
            Ok(Cell::square(0, 1))
        );
        for k in 0..6 {
            assert_eq!(
                apply_symmetry(HX, Symmetry::rotation(1), axis(HX, k)),
                Ok(axis(HX, k + 1))
            );
        }
        assert!(matches!(
            apply_symmetry(SQ, Symmetry::rotation(4), Cell::square(1, 0)),
            Err(Error::UnknownSymmetry { .. })
        ));
    }

    #[test]
    fn symmetry_group_has_expected_order_and_is_faithful() {
        for kind in LatticeKind::ALL {
            let group = Symmetry::group(kind);
            assert_eq!(group.len(), kind.symmetry_order());
            let probe = cell_from_slice(
                kind,
                SliceCoord {
                    slice: 0,
                    a: 3,
                    b: 1,
                },
            )
            .unwrap();
            let images: HashSet<Cell> = group
                .iter()
                .map(|&g| apply_symmetry(kind, g, probe).unwrap())
                .collect();
            assert_eq!(images.len(), group.len());
        }
    }

    #[test]
    fn symmetries_preserve_adjacency_and_distance() {
        for kind in LatticeKind::ALL {
            for g in Symmetry::group(kind) {
                for c in cells_within(kind, 6) {
                    let gc = apply_symmetry(kind, g, c).unwrap();
                    assert_eq!(norm(kind, gc), norm(kind, c));
                    let mapped: HashSet<Cell> = neighbors(kind, c)
                        .unwrap()
                        .into_iter()
                        .map(|n| apply_symmetry(kind, g, n).unwrap())
                        .collect();
                    let direct: HashSet<Cell> = neighbors(kind, gc).unwrap().into_iter().collect();
                    assert_eq!(mapped, direct);
                }
            }
        }
    }

    #[test]
    fn neighbor_relation_is_symmetric_within_radius_10() {
        for kind in LatticeKind::ALL {
            for c in cells_within(kind, 10) {
                let ns = neighbors(kind, c).unwrap();
                assert_eq!(ns.iter().collect::<HashSet<_>>().len(), kind.degree());
                for n in ns {
                    assert_eq!(manhattan_unchecked(kind, c, n), 1);
                    assert!(neighbors(kind, n).unwrap().contains(&c));
                }
            }
        }
    }

    #[test]
    fn shortest_path_examples() {
        let o = Cell::square(0, 0);
        assert_eq!(
            enumerate_shortest_paths(SQ, o, Cell::square(1, 1), 10)
                .unwrap()
                .len(),
            2
        );
        let paths = enumerate_shortest_paths(SQ, o, Cell::square(2, 1), 10).unwrap();
        assert_eq!(paths.len(), 3);
        assert!(paths.iter().all(|p| p.len() == 4));
        assert_eq!(
            enumerate_shortest_paths(SQ, o, o, 10).unwrap(),
            vec![vec![o]]
        );
        assert_eq!(
            enumerate_shortest_paths(SQ, o, Cell::square(3, 3), 19),
            Err(Error::PathCapExceeded {
                from: o,
                to: Cell::square(3, 3),
                cap: 19
            })
        );
        assert_eq!(
            enumerate_shortest_paths(SQ, o, Cell::square(3, 3), 20)
                .unwrap()
                .len(),
            20
        );
    }

    #[test]
    fn shortest_paths_increase_geometric_distance() {
        for kind in LatticeKind::ALL {
            let o = kind.patriarch();
            for b in cells_within(kind, 6) {
                for path in enumerate_shortest_paths(kind, o, b, 1000).unwrap() {
                    assert_eq!(path.len() as u64, norm(kind, b) + 1);
                    for w in path.windows(2) {
                        assert_eq!(manhattan_unchecked(kind, w[0], w[1]), 1);
                        assert!(
                            squared_geometric_distance(kind, o, w[1]).unwrap()
                                > squared_geometric_distance(kind, o, w[0]).unwrap()
                        );
                    }
                }
            }
        }
    }

    fn arb_cell(kind: LatticeKind, r: i32) -> impl Strategy<Value = Cell> {
        (-r..=r, -r..=r).prop_map(move |(x, y)| Cell::from_axial(kind, x, y))
    }

    fn arb_kind() -> impl Strategy<Value = LatticeKind> {
        prop_oneof![Just(SQ), Just(HX)]
    }

    proptest! {
        #[test]
        fn manhattan_is_a_metric(
            (kind, a, b, c) in arb_kind().prop_flat_map(|k| (Just(k), arb_cell(k, 20), arb_cell(k, 20), arb_cell(k, 20)))
        ) {
            let d = |p, q| manhattan_distance(kind, p, q).unwrap();
            prop_assert_eq!(d(a, a), 0);
            prop_assert_eq!(d(a, b), d(b, a));
            prop_assert_eq!(d(a, b) == 0, a == b);
            prop_assert!(d(a, c) <= d(a, b) + d(b, c));
        }

        #[test]
        fn parse_inverts_display((kind, c) in arb_kind().prop_flat_map(|k| (Just(k), arb_cell(k, 1000)))) {
            prop_assert_eq!(Cell::parse(kind, &c.to_string()), Ok(c));
        }
    }
}
