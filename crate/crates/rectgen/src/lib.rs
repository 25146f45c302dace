//! Generator for the temperature-1, just-barely-3D thin-rectangle tile sets.
//!
//! `generate_tileset(k, N)` computes the counter parameters, instantiates
//! every gadget creation loop of the four units (Seed, Counter, Return Row,
//! Roof), merges exact-duplicate tile types and returns the resulting tile
//! assembly system together with a per-unit accounting report.

pub mod gadget;
pub mod params;
pub mod units;

use std::collections::HashMap;

use atam_core::{Direction, GeometryMode, Pos, Tas, TileSet, TileType};
use gadget::{Gadget, Unit};
use params::{compute_params, ConstructionParams, ParamError};

pub use gadget::Unit as GadgetUnit;
pub use params::{bin, bit, digit, encode_label};

/// Per-unit gadget and tile accounting plus tile metadata used by checkers.
#[derive(Debug, Clone)]
pub struct TilesetReport {
    pub gadget_counts: HashMap<&'static str, usize>,
    pub tile_counts: HashMap<&'static str, usize>,
    pub tiles_total_before_dedup: usize,
    pub tiles_total: usize,
    pub merged_duplicates: Vec<(String, String)>,
    /// designated input side per tile name (None only for the seed tile)
    pub input_sides: HashMap<String, Option<Direction>>,
    /// owning unit per tile name
    pub units: HashMap<String, Unit>,
    /// distinct tile types with identical sides (dedup lint; empty after merge)
    pub duplicate_side_lint: Vec<(String, String)>,
}

/// A generated system: parameters, the TAS, and the report.
#[derive(Debug, Clone)]
pub struct Generated {
    pub params: ConstructionParams,
    pub tas: Tas,
    pub report: TilesetReport,
    pub gadgets: Vec<Gadget>,
}

/// Name of the seed tile type.
pub const SEED_TILE: &str = "seed_start/s0";

/// Runs all four units' creation loops for `p`.
pub fn gen_all_gadgets(p: &ConstructionParams) -> Vec<Gadget> {
    let mut gs = units::gen_seed_unit(p);
    gs.extend(units::gen_counter_units(p));
    gs.extend(units::gen_return_row(p));
    gs.extend(units::gen_roof(p));
    gs
}

/// Generates the tile set T_{k,N} and wraps it as a temperature-1 TAS with
/// the seed at the origin of the vertical frame.
pub fn generate_tileset(k: u32, n_height: u64) -> Result<Generated, ParamError> {
    let p = compute_params(k, n_height)?;
    let gadgets = gen_all_gadgets(&p);

    let mut gadget_counts: HashMap<&'static str, usize> = HashMap::new();
    let mut tile_counts: HashMap<&'static str, usize> = HashMap::new();
    let mut input_sides: HashMap<String, Option<Direction>> = HashMap::new();
    let mut units_map: HashMap<String, Unit> = HashMap::new();
    let mut merged: Vec<(String, String)> = Vec::new();
    let mut by_sides: HashMap<Vec<atam_core::Glue>, String> = HashMap::new();
    let mut tiles: Vec<TileType> = Vec::new();
    let mut total_before = 0usize;

    for g in &gadgets {
        *gadget_counts.entry(g.unit.name()).or_insert(0) += 1;
        for t in &g.tiles {
            total_before += 1;
            let key: Vec<atam_core::Glue> = t.tile.sides().to_vec();
            if let Some(first) = by_sides.get(&key) {
                merged.push((first.clone(), t.tile.name.clone()));
                continue;
            }
            by_sides.insert(key, t.tile.name.clone());
            *tile_counts.entry(g.unit.name()).or_insert(0) += 1;
            input_sides.insert(t.tile.name.clone(), t.input);
            units_map.insert(t.tile.name.clone(), g.unit);
            tiles.push(t.tile.clone());
        }
    }

    let tiles_total = tiles.len();
    let set = TileSet::new(tiles).expect("generated tile names are unique");
    let lint = set.duplicate_side_pairs();
    let seed = set.id_of(SEED_TILE).expect("seed tile present");
    let tas = Tas::new(set, Pos::new(0, 0, 0), seed, 1, GeometryMode::JustBarely3d)
        .expect("seed admissible");

    Ok(Generated {
        params: p,
        tas,
        report: TilesetReport {
            gadget_counts,
            tile_counts,
            tiles_total_before_dedup: total_before,
            tiles_total,
            merged_duplicates: merged,
            input_sides,
            units: units_map,
            duplicate_side_lint: lint,
        },
        gadgets,
    })
}

// ---------------------------------------------------------------------------
// layout helpers shared with checkers and the counter-value decoder
// ---------------------------------------------------------------------------

/// First row of counter band `x` (1-based; band x holds the bumps written by
/// counter row x). The seed band occupies rows 0..=3l.
pub fn band_start(p: &ConstructionParams, x: u64) -> i64 {
    assert!(x >= 1);
    (3 * p.l as i64 + 1) + (x as i64 - 1) * (3 * p.l as i64 + 2)
}

/// Row of the left-edge marker bump of stack `x` (0 = the seed's stack).
pub fn marker_row(p: &ConstructionParams, x: u64) -> i64 {
    if x == 0 {
        2
    } else {
        band_start(p, x) + 3
    }
}

/// Row of bit `j` (1-based, marker lowest) of stack `x`.
pub fn bit_row(p: &ConstructionParams, x: u64, j: u32) -> i64 {
    marker_row(p, x) + 3 * (j as i64 - 1)
}

/// x-coordinate of the E lane (bumps and read path) of digit column `i`
/// (1 = least significant, easternmost).
pub fn lane_e(p: &ConstructionParams, i: u32) -> i32 {
    (p.c + 3 * (p.d - i) + 2) as i32
}

/// Decodes the counter value encoded by stack `x` from a placed
/// configuration: bit = 0 iff the z=0 bump cell holds a writer plug.
/// Returns None if any bump cell is missing or a marker bit is inconsistent.
pub fn decode_stack(
    cfg: &HashMap<Pos, atam_core::TileId>,
    tiles: &TileSet,
    p: &ConstructionParams,
    x: u64,
) -> Option<u64> {
    let mut value = 0u64;
    for i in 1..=p.d {
        let ex = lane_e(p, i);
        let mut enc = 0u64;
        for j in 1..=p.l {
            let pos = Pos::new(ex, bit_row(p, x, j) as i32, 0);
            let tid = cfg.get(&pos)?;
            let name = &tiles.get(*tid).name;
            let is_plug = name.ends_with("/plug") || name.ends_with("/p1");
            if !is_plug {
                enc |= 1 << (j - 1);
            }
        }
        // the low bit is the left-edge marker: set exactly on the msd column
        let marker = enc & 1;
        if (i == p.d) != (marker == 1) {
            return None;
        }
        value += (enc >> 1) * params::pow_u64(p.m, i - 1);
    }
    Some(value)
}
