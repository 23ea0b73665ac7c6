//! Pioneers and mechanical checks of the automaton's structural properties.
//!
//! A pioneer is a cell whose birth generation equals its Manhattan distance
//! from the patriarch. In slice coordinates `(a, b)` the pioneers of every
//! slice form the Sierpinski gasket: `(a, b)` is a pioneer iff `a & b == 0`.

mod report;

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use crate::engine::{self, AutomatonState};
use crate::error::{Error, Result};
use crate::gasket::{eventually_alive_square, gasket_row};
use crate::genealogy::{self, children_of};
use crate::lattice::{
    self, cell_from_slice, cells_within, enumerate_shortest_paths, on_corner_axis, slice_coords,
    squared_geometric_distance, Cell, LatticeKind, SliceCoord, Symmetry,
};

pub use report::{write_reports, VerificationReport, MAX_LISTED_CELLS};

/// Path-count ceiling for [`verify_monotone_paths`].
pub const DEFAULT_PATH_CAP: usize = 1 << 20;

fn base_report(claim: &str, state: &AutomatonState) -> VerificationReport {
    VerificationReport::new(claim)
        .param("lattice", state.kind())
        .param("generation", state.generation())
}

fn distance(kind: LatticeKind, c: Cell) -> u64 {
    lattice::norm(kind, c)
}

/// Live cells born at a generation equal to their distance from the
/// patriarch, sorted.
pub fn pioneers(state: &AutomatonState) -> Vec<Cell> {
    let kind = state.kind();
    let mut out: Vec<Cell> = state
        .iter()
        .filter(|(c, r)| r.generation as u64 == distance(kind, *c))
        .map(|(c, _)| c)
        .collect();
    out.sort_unstable();
    out
}

/// Gasket pairs `(a, b)` with `a + b <= generation` in one slice, as cells.
fn gasket_cells(kind: LatticeKind, slice: usize, generation: u32) -> impl Iterator<Item = Cell> {
    (0..=generation as u64).flat_map(move |row| {
        gasket_row(row)
            .positions()
            .map(|b| {
                cell_from_slice(
                    kind,
                    SliceCoord {
                        slice,
                        a: row - b,
                        b,
                    },
                )
                .expect("slice index checked")
            })
            .collect::<Vec<_>>()
    })
}

fn check_slice(kind: LatticeKind, slice: usize) -> Result<()> {
    if slice < kind.slice_count() {
        Ok(())
    } else {
        Err(Error::InvalidSlice { kind, index: slice })
    }
}

/// The pioneers of `slice` coincide with the gasket rows `0..=generation`.
pub fn verify_pioneer_gasket(state: &AutomatonState, slice: usize) -> Result<VerificationReport> {
    let kind = state.kind();
    check_slice(kind, slice)?;
    let mut report = base_report("pioneer-gasket", state).param("slice", slice);
    let found: BTreeSet<SliceCoord> = pioneers(state)
        .into_iter()
        .filter_map(|c| slice_coords(kind, slice, c).ok())
        .collect();
    let expected: BTreeSet<SliceCoord> = gasket_cells(kind, slice, state.generation())
        .map(|c| slice_coords(kind, slice, c).expect("built in slice"))
        .collect();
    let missing = expected.difference(&found).count() as u64;
    let extra = found.difference(&expected).count() as u64;
    for coord in expected.symmetric_difference(&found) {
        report.fail(cell_from_slice(kind, *coord)?);
    }
    report.count("pioneers_in_slice", found.len() as u64);
    report.count("gasket_cells", expected.len() as u64);
    report.count("missing_pioneers", missing);
    report.count("extra_pioneers", extra);
    Ok(report.finish())
}

/// Every gasket cell of every slice, up to the current generation, is live.
pub fn verify_containment(state: &AutomatonState) -> VerificationReport {
    let kind = state.kind();
    let mut report = base_report("containment", state);
    let mut checked = 0;
    for slice in 0..kind.slice_count() {
        for c in gasket_cells(kind, slice, state.generation()) {
            checked += 1;
            if !state.is_live(c) {
                report.fail(c);
            }
        }
    }
    report.count("gasket_cells_checked", checked);
    let report = report.finish();
    let missing = report.counterexamples().len() as u64;
    let mut report = report;
    report.count("missing", missing);
    report
}

/// The live set is invariant under the full dihedral group, and no live cell
/// lies on a line through the corners of the patriarch.
pub fn verify_symmetry(state: &AutomatonState) -> VerificationReport {
    let kind = state.kind();
    let mut report = base_report("symmetry", state);
    let group = Symmetry::group(kind);
    let mut asymmetric = 0;
    let mut on_corner = 0;
    for (c, _) in state.iter() {
        for &g in &group {
            let image = lattice::apply_symmetry(kind, g, c).expect("group element");
            if !state.is_live(image) {
                asymmetric += 1;
                report.fail(c);
            }
        }
        if on_corner_axis(kind, c).expect("valid cell") {
            on_corner += 1;
            report.fail(c);
        }
    }
    report.count("group_order", group.len() as u64);
    report.count("live_cells", state.live_count());
    report.count("asymmetric_images", asymmetric);
    report.count("live_on_corner_axis", on_corner);
    report.finish()
}

/// Every non-patriarch cell was born one generation after its parent.
pub fn verify_parent_generation(state: &AutomatonState) -> VerificationReport {
    let mut report = base_report("parent-generation", state);
    for (c, rec) in state.iter() {
        let ok = match rec.parent {
            None => c.is_patriarch() && rec.generation == 0,
            Some(p) => state
                .record(p)
                .is_some_and(|pr| pr.generation + 1 == rec.generation),
        };
        if !ok {
            report.fail(c);
        }
    }
    report.count("live_cells", state.live_count());
    report.finish()
}

/// Every live cell lies within Manhattan distance of its birth generation.
pub fn verify_distance_bound(state: &AutomatonState) -> VerificationReport {
    let kind = state.kind();
    let mut report = base_report("distance-bound", state);
    let mut pioneers = 0;
    for (c, rec) in state.iter() {
        let d = distance(kind, c);
        if d > rec.generation as u64 {
            report.fail(c);
        } else if d == rec.generation as u64 {
            pioneers += 1;
        }
    }
    report.count("live_cells", state.live_count());
    report.count("at_bound", pioneers);
    report.finish()
}

/// Along every shortest path from the patriarch to each cell within
/// `radius`, the Euclidean distance from the patriarch strictly increases.
pub fn verify_monotone_paths(
    kind: LatticeKind,
    radius: u32,
    cap: usize,
) -> Result<VerificationReport> {
    let origin = kind.patriarch();
    let mut report = VerificationReport::new("monotone-paths")
        .param("lattice", kind)
        .param("radius", radius);
    let mut paths = 0u64;
    let targets = cells_within(kind, radius);
    for &target in &targets {
        for path in enumerate_shortest_paths(kind, origin, target, cap)? {
            paths += 1;
            let increasing = path.windows(2).all(|w| {
                squared_geometric_distance(kind, origin, w[1]).unwrap()
                    > squared_geometric_distance(kind, origin, w[0]).unwrap()
            });
            if !increasing {
                report.fail(target);
            }
        }
    }
    report.count("targets", targets.len() as u64);
    report.count("paths", paths);
    Ok(report.finish())
}

/// Finalized cells with three children sit at even distance (pass flag);
/// the converse is tallied, with even-distance cells lacking three
/// children listed as observations.
pub fn verify_even_distance_children(state: &AutomatonState) -> Result<VerificationReport> {
    if state.generation() < 2 {
        return Err(Error::Precondition(
            "even-distance check needs generation >= 2".into(),
        ));
    }
    let kind = state.kind();
    let mut report = base_report("even-distance", state);
    let (mut three, mut even, mut even_with_three) = (0, 0, 0);
    for (c, rec) in state.iter() {
        if c.is_patriarch() || rec.generation >= state.generation() {
            continue;
        }
        let has_three = children_of(state, c)?.len() == 3;
        let is_even = distance(kind, c).is_multiple_of(2);
        three += has_three as u64;
        even += is_even as u64;
        if has_three && !is_even {
            report.fail(c);
        }
        if is_even {
            if has_three {
                even_with_three += 1;
            } else {
                report.observations.push(c);
            }
        }
    }
    report.count("three_children", three);
    report.count("even_distance", even);
    report.count("converse_holds", even_with_three);
    report.count("converse_fails", even - even_with_three);
    Ok(report.finish())
}

/// Compares live cells within `radius` against the 2-adic predicate.
///
/// Requires a square state with `generation >= 2 * radius` and
/// `generation + 1` a power of two. Live cells failing the predicate are
/// counterexamples. Predicate cells that are still dead are observations;
/// `stable` records whether any cell within the radius was born during the
/// last `radius` generations.
pub fn verify_eventually_alive(state: &AutomatonState, radius: u32) -> Result<VerificationReport> {
    if state.kind() != LatticeKind::Square {
        return Err(Error::Unsupported(state.kind()));
    }
    let g = state.generation();
    if (g as u64) < 2 * radius as u64 || !(g as u64 + 1).is_power_of_two() {
        return Err(Error::Precondition(format!(
            "eventually-alive check needs generation >= 2 * radius and generation + 1 a power of two \
             (generation {g}, radius {radius})"
        )));
    }
    let mut report = base_report("eventually-alive", state).param("radius", radius);
    let cutoff = g - radius;
    let (mut late, mut live, mut predicate) = (0, 0, 0);
    for c in cells_within(LatticeKind::Square, radius) {
        let Cell::Square { x, y } = c else {
            unreachable!()
        };
        let expected = eventually_alive_square(x as i64, y as i64);
        predicate += expected as u64;
        match state.record(c) {
            Some(rec) => {
                live += 1;
                if rec.generation > cutoff {
                    late += 1;
                }
                if !expected {
                    report.fail(c);
                }
            }
            None if expected => report.observations.push(c),
            None => {}
        }
    }
    report.count("live_within_radius", live);
    report.count("predicate_within_radius", predicate);
    report.count("late_births_within_radius", late);
    let mut report = report.param("stable", late == 0).finish();
    let dead = report.observations.len() as u64;
    report.count("predicate_true_but_dead", dead);
    report.count(
        "live_but_predicate_false",
        report.counterexamples().len() as u64,
    );
    Ok(report)
}

/// Finalized non-patriarch child counts lie in the lattice's permitted set.
pub fn verify_fertility_domain(state: &AutomatonState) -> VerificationReport {
    let hist = genealogy::fertility_histogram(state);
    let mut report = base_report("fertility-domain", state);
    for (k, v) in &hist.counts {
        report.count(&format!("children_{k}"), *v);
    }
    for &c in &hist.out_of_domain {
        report.fail(c);
    }
    report.finish()
}

/// The parent of every non-patriarch pioneer is itself a pioneer.
pub fn verify_pioneer_closure(state: &AutomatonState) -> VerificationReport {
    let kind = state.kind();
    let mut report = base_report("pioneer-closure", state);
    let all = pioneers(state);
    for &c in &all {
        if let Some(p) = state.record(c).and_then(|r| r.parent) {
            let rec = state.record(p).expect("parents are live");
            if rec.generation as u64 != distance(kind, p) {
                report.fail(c);
            }
        }
    }
    report.count("pioneers", all.len() as u64);
    report.finish()
}

/// For every `2^k - 1` up to the current generation, the whole ring at that
/// distance consists of pioneers.
pub fn verify_completed_rings(state: &AutomatonState) -> VerificationReport {
    let kind = state.kind();
    let mut report = base_report("completed-ring", state);
    let mut rings = 0;
    let mut k = 0;
    while (1u64 << k) - 1 <= state.generation() as u64 {
        let n = (1u64 << k) - 1;
        rings += 1;
        for c in ring(kind, n as u32) {
            if state.record(c).map(|r| r.generation as u64) != Some(n) {
                report.fail(c);
            }
        }
        k += 1;
    }
    report.count("rings", rings);
    report.finish()
}

fn ring(kind: LatticeKind, n: u32) -> Vec<Cell> {
    if n == 0 {
        return vec![kind.patriarch()];
    }
    (0..kind.slice_count())
        .flat_map(|slice| {
            (0..n as u64).map(move |b| {
                cell_from_slice(
                    kind,
                    SliceCoord {
                        slice,
                        a: n as u64 - b,
                        b,
                    },
                )
                .expect("valid slice")
            })
        })
        .collect()
}

/// `generation,births,cumulative` table for `n` generations.
pub fn sequence_export(kind: LatticeKind, n: u32) -> Result<String> {
    Ok(population_csv(&engine::run(kind, n)?))
}

pub fn sequence_export_with_budget(kind: LatticeKind, n: u32, budget: u64) -> Result<String> {
    Ok(population_csv(&engine::run_with_budget(kind, n, budget)?))
}

pub fn population_csv(state: &AutomatonState) -> String {
    let mut out = String::from("generation,births,cumulative\n");
    for row in state.population() {
        writeln!(out, "{},{},{}", row.generation, row.births, row.cumulative).unwrap();
    }
    out
}

/// A named claim that the verification suite can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Symmetry,
    ParentGeneration,
    DistanceBound,
    Containment,
    PioneerGasket,
    PioneerClosure,
    CompletedRing,
    FertilityDomain,
    MonotonePaths,
    EvenDistance,
    EventuallyAlive,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::Symmetry,
        Claim::ParentGeneration,
        Claim::DistanceBound,
        Claim::Containment,
        Claim::PioneerGasket,
        Claim::PioneerClosure,
        Claim::CompletedRing,
        Claim::FertilityDomain,
        Claim::MonotonePaths,
        Claim::EvenDistance,
        Claim::EventuallyAlive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Symmetry => "symmetry",
            Claim::ParentGeneration => "parent-generation",
            Claim::DistanceBound => "distance-bound",
            Claim::Containment => "containment",
            Claim::PioneerGasket => "pioneer-gasket",
            Claim::PioneerClosure => "pioneer-closure",
            Claim::CompletedRing => "completed-ring",
            Claim::FertilityDomain => "fertility-domain",
            Claim::MonotonePaths => "monotone-paths",
            Claim::EvenDistance => "even-distance",
            Claim::EventuallyAlive => "eventually-alive",
        }
    }

    /// Whether `all` includes this claim for the given state. The 2-adic and
    /// even-distance claims concern the square lattice; the 2-adic check also
    /// needs its generation precondition.
    pub fn applies_to(self, state: &AutomatonState) -> bool {
        let square = state.kind() == LatticeKind::Square;
        match self {
            Claim::EvenDistance => square && state.generation() >= 2,
            Claim::EventuallyAlive => square && (state.generation() as u64 + 1).is_power_of_two(),
            _ => true,
        }
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown claim '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restricts the pioneer-gasket check to one slice.
    pub slice: Option<usize>,
    /// Radius for the 2-adic check; defaults to `generation / 2`.
    pub radius: Option<u32>,
    /// Radius for the shortest-path check.
    pub path_radius: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            slice: None,
            radius: None,
            path_radius: 6,
        }
    }
}

pub fn check_claim(
    state: &AutomatonState,
    claim: Claim,
    opts: &SuiteOptions,
) -> Result<Vec<VerificationReport>> {
    Ok(match claim {
        Claim::Symmetry => vec![verify_symmetry(state)],
        Claim::ParentGeneration => vec![verify_parent_generation(state)],
        Claim::DistanceBound => vec![verify_distance_bound(state)],
        Claim::Containment => vec![verify_containment(state)],
        Claim::PioneerGasket => match opts.slice {
            Some(s) => vec![verify_pioneer_gasket(state, s)?],
            None => (0..state.kind().slice_count())
                .map(|s| verify_pioneer_gasket(state, s))
                .collect::<Result<_>>()?,
        },
        Claim::PioneerClosure => vec![verify_pioneer_closure(state)],
        Claim::CompletedRing => vec![verify_completed_rings(state)],
        Claim::FertilityDomain => vec![verify_fertility_domain(state)],
        Claim::MonotonePaths => vec![verify_monotone_paths(
            state.kind(),
            opts.path_radius,
            DEFAULT_PATH_CAP,
        )?],
        Claim::EvenDistance => vec![verify_even_distance_children(state)?],
        Claim::EventuallyAlive => {
            let radius = opts.radius.unwrap_or(state.generation() / 2);
            vec![verify_eventually_alive(state, radius)?]
        }
    })
}
