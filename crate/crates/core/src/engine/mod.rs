//! Growth of the Ulam-Warburton automaton.
//!
//! A dead cell is born when exactly one of its neighbors is live; live cells
//! never die. [`AutomatonState::step`] only examines neighbors of the
//! frontier (the cells born in the previous generation): a dead cell with a
//! single live neighbor outside the frontier would already have been born
//! when that neighbor was new, since live-neighbor counts never decrease.
//! [`AutomatonState::step_naive`] scans every dead cell in range and serves
//! as the reference the frontier stepper is tested against.
//!
//! Each dead cell caches its live-neighbor count and the direction of its
//! latest live neighbor, so a frontier step costs a constant number of grid
//! accesses per birth.

mod grid;
pub mod snapshot;

use grid::TileGrid;

use crate::error::{Error, Result};
use crate::lattice::{self, Cell, LatticeKind};

pub use snapshot::{parse_snapshot, write_snapshot, Snapshot};

/// Default upper bound on the number of live cells a state may hold.
pub const DEFAULT_CELL_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BirthRecord {
    pub generation: u32,
    /// `None` only for the patriarch.
    pub parent: Option<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PopulationRow {
    pub generation: u32,
    pub births: u64,
    pub cumulative: u64,
}

#[derive(Clone, Debug)]
pub struct AutomatonState {
    kind: LatticeKind,
    grid: TileGrid,
    frontier: Vec<Cell>,
    generation: u32,
    births: Vec<u64>,
    live: u64,
    budget: u64,
}

impl AutomatonState {
    pub fn new(kind: LatticeKind) -> AutomatonState {
        AutomatonState::with_budget(kind, DEFAULT_CELL_BUDGET)
    }

    pub fn with_budget(kind: LatticeKind, budget: u64) -> AutomatonState {
        let mut state = AutomatonState {
            kind,
            grid: TileGrid::new(),
            frontier: vec![kind.patriarch()],
            generation: 0,
            births: vec![1],
            live: 1,
            budget,
        };
        state.grid.ensure_radius(1);
        state.insert(0, 0, 0, grid::NO_PARENT);
        state
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn generation(&self) -> u32 {
        self.generation
    }

    /// Cells born in the most recent generation, sorted.
    pub fn frontier(&self) -> &[Cell] {
        &self.frontier
    }

    pub fn live_count(&self) -> u64 {
        self.live
    }

    pub fn cell_budget(&self) -> u64 {
        self.budget
    }

    pub fn set_cell_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    /// Approximate heap footprint of the cell storage.
    pub fn storage_bytes(&self) -> usize {
        self.grid.allocated_bytes()
    }

    fn decode(&self, x: i32, y: i32, w: u32) -> BirthRecord {
        let dir = grid::dir_of(w);
        let parent = (dir != grid::NO_PARENT).then(|| {
            let (dx, dy) = self.kind.axial_offsets()[dir as usize];
            Cell::from_axial(self.kind, x + dx, y + dy)
        });
        BirthRecord {
            generation: grid::generation_of(w),
            parent,
        }
    }

    /// Birth record of `c`, or `None` if it is dead (or not a cell of this
    /// lattice).
    pub fn record(&self, c: Cell) -> Option<BirthRecord> {
        if lattice::validate(self.kind, c).is_err() {
            return None;
        }
        let (x, y) = c.axial();
        let w = self.grid.get(x, y);
        grid::is_live(w).then(|| self.decode(x, y, w))
    }

    pub fn is_live(&self, c: Cell) -> bool {
        c.kind() == self.kind && {
            let (x, y) = c.axial();
            grid::is_live(self.grid.get(x, y))
        }
    }

    /// Like [`record`](Self::record) but errors on dead cells.
    pub fn require(&self, c: Cell) -> Result<BirthRecord> {
        lattice::validate(self.kind, c)?;
        self.record(c).ok_or(Error::CellNotLive(c))
    }

    /// Live neighbors of `c`, counted directly from the live set.
    pub fn live_neighbor_count(&self, c: Cell) -> usize {
        let (x, y) = c.axial();
        self.kind
            .axial_offsets()
            .iter()
            .filter(|&&(dx, dy)| grid::is_live(self.grid.get(x + dx, y + dy)))
            .count()
    }

    /// Every live cell with its record, in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, BirthRecord)> + '_ {
        self.grid
            .live_words()
            .map(move |(x, y, w)| (Cell::from_axial(self.kind, x, y), self.decode(x, y, w)))
    }

    /// Every live cell with its record, sorted by cell.
    pub fn sorted_records(&self) -> Vec<(Cell, BirthRecord)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_unstable_by_key(|&(c, _)| c);
        v
    }

    /// Per-generation birth counts and their running total.
    pub fn population(&self) -> Vec<PopulationRow> {
        let mut cumulative = 0;
        self.births
            .iter()
            .enumerate()
            .map(|(g, &births)| {
                cumulative += births;
                PopulationRow {
                    generation: g as u32,
                    births,
                    cumulative,
                }
            })
            .collect()
    }

    fn insert(&mut self, x: i32, y: i32, generation: u32, parent_dir: u32) {
        let word = grid::live_word(generation, parent_dir);
        let offsets = self.kind.axial_offsets();
        let deg = offsets.len() as u32;
        // A newly born neighbor of a dead cell is stored as that cell's
        // toucher, seen from the dead cell.
        let bump = |w: &mut u32, k: usize| {
            if !grid::is_live(*w) {
                let back = (k as u32 + deg / 2) % deg;
                *w = (back << 3) | (grid::dead_count(*w) + 1);
            }
        };
        if let Some((tile, i)) = self.grid.interior_mut(x, y) {
            tile[i] = word;
            for (k, &(dx, dy)) in offsets.iter().enumerate() {
                bump(
                    &mut tile[i.wrapping_add_signed(TileGrid::local_offset(dx, dy))],
                    k,
                );
            }
            return;
        }
        *self.grid.get_mut(x, y) = word;
        for (k, &(dx, dy)) in offsets.iter().enumerate() {
            bump(self.grid.get_mut(x + dx, y + dy), k);
        }
    }

    /// Adds one generation of births, given as `(x, y, parent direction)`.
    /// The new frontier keeps the order of `births`.
    fn commit(&mut self, births: Vec<(i32, i32, u32)>) -> Result<()> {
        let requested = self.live + births.len() as u64;
        if requested > self.budget {
            return Err(Error::CellBudgetExceeded {
                budget: self.budget,
                requested,
            });
        }
        let generation = self.generation + 1;
        if generation > grid::MAX_GENERATION {
            return Err(Error::Precondition(format!(
                "generation {generation} exceeds the supported maximum {}",
                grid::MAX_GENERATION
            )));
        }
        self.grid.ensure_radius(generation as i32 + 1);
        self.frontier.clear();
        for &(x, y, dir) in &births {
            self.insert(x, y, generation, dir);
            self.frontier.push(Cell::from_axial(self.kind, x, y));
        }
        self.generation = generation;
        self.births.push(births.len() as u64);
        self.live = requested;
        Ok(())
    }

    /// One frontier step. Births commute, so the frontier is left in
    /// discovery order; callers that expose it sort it.
    fn advance(&mut self) -> Result<()> {
        let offsets = self.kind.axial_offsets();
        let mut births = Vec::with_capacity(self.frontier.len() * 2);
        let mut consider = |nx: i32, ny: i32, w: u32| {
            if !grid::is_live(w) && grid::dead_count(w) == 1 {
                births.push((nx, ny, grid::dead_toucher(w)));
            }
        };
        for c in &self.frontier {
            let (x, y) = c.axial();
            if let Some((tile, i)) = self.grid.interior(x, y) {
                for &(dx, dy) in offsets {
                    consider(
                        x + dx,
                        y + dy,
                        tile[i.wrapping_add_signed(TileGrid::local_offset(dx, dy))],
                    );
                }
            } else {
                for &(dx, dy) in offsets {
                    consider(x + dx, y + dy, self.grid.get(x + dx, y + dy));
                }
            }
        }
        if cfg!(debug_assertions) {
            for &(x, y, dir) in &births {
                self.assert_unique_parent(x, y, dir);
            }
        }
        self.commit(births)
    }

    /// Recounts the live neighbors of a birth candidate without the cached
    /// counts.
    fn assert_unique_parent(&self, x: i32, y: i32, dir: u32) {
        let offsets = self.kind.axial_offsets();
        let interior = self.grid.interior(x, y);
        let (mut count, mut found) = (0, u32::MAX);
        for (k, &(dx, dy)) in offsets.iter().enumerate() {
            let w = match interior {
                Some((tile, i)) => tile[i.wrapping_add_signed(TileGrid::local_offset(dx, dy))],
                None => self.grid.get(x + dx, y + dy),
            };
            if grid::is_live(w) {
                count += 1;
                found = k as u32;
            }
        }
        assert!(
            count == 1 && found == dir,
            "{} born with {count} live neighbors",
            Cell::from_axial(self.kind, x, y)
        );
    }

    /// Advances one generation, examining only neighbors of the frontier.
    /// Returns the cells born, sorted.
    pub fn step(&mut self) -> Result<&[Cell]> {
        self.advance()?;
        self.frontier.sort_unstable();
        Ok(&self.frontier)
    }

    /// Advances one generation by scanning every dead cell within Manhattan
    /// distance `generation + 1` of the patriarch.
    pub fn step_naive(&mut self) -> Result<&[Cell]> {
        let r = self.generation as i32 + 1;
        let offsets = self.kind.axial_offsets();
        let mut births = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                let cell = Cell::from_axial(self.kind, x, y);
                if lattice::norm(self.kind, cell) > r as u64 || grid::is_live(self.grid.get(x, y)) {
                    continue;
                }
                let mut live = offsets
                    .iter()
                    .enumerate()
                    .filter(|(_, &(dx, dy))| grid::is_live(self.grid.get(x + dx, y + dy)));
                if let (Some((dir, _)), None) = (live.next(), live.next()) {
                    births.push((x, y, dir as u32));
                }
            }
        }
        self.commit(births)?;
        Ok(&self.frontier)
    }

    /// Steps until `generation` is reached.
    pub fn run_to(&mut self, generation: u32) -> Result<()> {
        let mut result = Ok(());
        while self.generation < generation && result.is_ok() {
            result = self.advance();
        }
        self.frontier.sort_unstable();
        result
    }
}

#[cfg(test)]
impl AutomatonState {
    /// Overwrites a cell's record without any rule checks, for exercising
    /// the verifiers on broken states.
    pub(crate) fn force_record(&mut self, c: Cell, generation: u32, parent: Option<Cell>) {
        let (x, y) = c.axial();
        let dir = match parent {
            None => grid::NO_PARENT,
            Some(p) => {
                let (px, py) = p.axial();
                self.kind
                    .axial_offsets()
                    .iter()
                    .position(|&o| o == (px - x, py - y))
                    .unwrap() as u32
            }
        };
        self.grid.ensure_radius(x.abs().max(y.abs()) + 1);
        if !grid::is_live(self.grid.get(x, y)) {
            self.live += 1;
        }
        *self.grid.get_mut(x, y) = grid::live_word(generation, dir);
    }

    pub(crate) fn force_dead(&mut self, c: Cell) {
        let (x, y) = c.axial();
        if grid::is_live(self.grid.get(x, y)) {
            self.live -= 1;
        }
        *self.grid.get_mut(x, y) = 0;
    }
}

/// The state after `n` frontier steps from a single live cell.
pub fn run(kind: LatticeKind, n: u32) -> Result<AutomatonState> {
    run_with_budget(kind, n, DEFAULT_CELL_BUDGET)
}

pub fn run_with_budget(kind: LatticeKind, n: u32, budget: u64) -> Result<AutomatonState> {
    let mut state = AutomatonState::with_budget(kind, budget);
    state.run_to(n)?;
    Ok(state)
}
