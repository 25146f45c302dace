//! Gadget templates: named groups of tiles with one input glue, up to a few
//! output glues, and internal glues unique to the instance so that each
//! gadget uniquely self-assembles from its input.

use atam_core::{Direction, Glue, TileType};

/// The four gadget units of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Seed,
    Counter,
    ReturnRow,
    Roof,
}

impl Unit {
    pub fn name(self) -> &'static str {
        match self {
            Unit::Seed => "seed",
            Unit::Counter => "counter",
            Unit::ReturnRow => "return_row",
            Unit::Roof => "roof",
        }
    }
}

/// One tile of a gadget template: position relative to the gadget anchor,
/// a short role tag (unique within the gadget), its six glues, and the side
/// through which it binds to its predecessor.
#[derive(Debug, Clone)]
pub struct GadgetTile {
    pub rel: (i32, i32, i32),
    pub role: String,
    pub tile: TileType,
    pub input: Option<Direction>,
}

/// A gadget instance. Tiles are in placement order: the first tile carries
/// the gadget's input glue (or is the seed).
#[derive(Debug, Clone)]
pub struct Gadget {
    pub name: String,
    pub unit: Unit,
    pub tiles: Vec<GadgetTile>,
}

impl Gadget {
    /// Total tile count of the template.
    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }
}

/// Builds a gadget tile by tile. Internal glues get instance-unique labels
/// (`<name>~<n>`), so distinct gadget instances never cross-talk.
pub struct GadgetBuilder {
    name: String,
    unit: Unit,
    tiles: Vec<GadgetTile>,
    internal: u32,
}

impl GadgetBuilder {
    pub fn new(name: impl Into<String>, unit: Unit) -> Self {
        GadgetBuilder { name: name.into(), unit, tiles: Vec::new(), internal: 0 }
    }

    /// Adds a tile with no glues yet at `rel`; returns its index.
    pub fn tile(&mut self, role: &str, rel: (i32, i32, i32)) -> usize {
        let name = format!("{}/{}", self.name, role);
        self.tiles.push(GadgetTile {
            rel,
            role: role.to_string(),
            tile: TileType::new(name),
            input: None,
        });
        self.tiles.len() - 1
    }

    /// Declares the gadget's input: tile `idx` binds via side `d` with `glue`.
    pub fn input(&mut self, idx: usize, d: Direction, glue: Glue) {
        assert!(self.tiles[idx].input.is_none(), "{}: second input", self.name);
        self.tiles[idx].tile.set_side(d, glue);
        self.tiles[idx].input = Some(d);
    }

    /// Wires an internal bond: tile `from`'s side `d` to tile `to`, which
    /// must sit at `from.rel + delta(d)` and binds via the opposite side.
    pub fn link(&mut self, from: usize, d: Direction, to: usize) {
        let (dx, dy, dz) = d.delta();
        let f = self.tiles[from].rel;
        let expected = (f.0 + dx, f.1 + dy, f.2 + dz);
        assert_eq!(
            self.tiles[to].rel, expected,
            "{}: link geometry mismatch {} -> {}",
            self.name, self.tiles[from].role, self.tiles[to].role
        );
        assert!(self.tiles[to].input.is_none(), "{}: second input on {}", self.name, self.tiles[to].role);
        self.internal += 1;
        let g = Glue::new(format!("{}~{}", self.name, self.internal), 1);
        self.tiles[from].tile.set_side(d, g.clone());
        self.tiles[to].tile.set_side(d.opposite(), g);
        self.tiles[to].input = Some(d.opposite());
    }

    /// Declares an output glue on tile `idx`, side `d`.
    pub fn output(&mut self, idx: usize, d: Direction, glue: Glue) {
        assert!(self.tiles[idx].tile.side(d).is_null(), "{}: side already wired", self.name);
        self.tiles[idx].tile.set_side(d, glue);
    }

    pub fn finish(self) -> Gadget {
        // every tile except the anchor must have exactly one input
        for (i, t) in self.tiles.iter().enumerate() {
            if i > 0 {
                assert!(t.input.is_some(), "{}: tile {} has no input", self.name, t.role);
            }
        }
        // relative positions must be distinct
        for i in 0..self.tiles.len() {
            for j in i + 1..self.tiles.len() {
                assert_ne!(
                    self.tiles[i].rel, self.tiles[j].rel,
                    "{}: overlapping tiles {} and {}",
                    self.name, self.tiles[i].role, self.tiles[j].role
                );
            }
        }
        Gadget { name: self.name, unit: self.unit, tiles: self.tiles }
    }
}
