//! Core data model for the abstract Tile Assembly Model (aTAM) in two and
//! "just-barely" three dimensions, with single-step attachment semantics at
//! arbitrary temperature (specialized in practice to tau = 1).
//!
//! Conventions: x grows east, y grows north, z is the third axis. 2D systems
//! are modeled as 3D systems pinned to the z = 0 plane; just-barely-3D systems
//! allow z in {0, 1} only.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// A glue: finite string label plus non-negative integer strength.
///
/// The null glue has an empty label and strength 0 and never binds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Glue {
    pub label: String,
    pub strength: u32,
}

impl Glue {
    pub fn new(label: impl Into<String>, strength: u32) -> Self {
        Glue { label: label.into(), strength }
    }

    pub fn null() -> Self {
        Glue { label: String::new(), strength: 0 }
    }

    pub fn is_null(&self) -> bool {
        self.strength == 0 && self.label.is_empty()
    }
}

/// Two glues bind iff their labels are equal, strengths are equal and the
/// strength is positive.
pub fn binds(a: &Glue, b: &Glue) -> bool {
    a.strength > 0 && a.strength == b.strength && a.label == b.label
}

/// The six sides of a (unit cube) tile. 2D tiles simply carry null U/D glues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    North,
    East,
    South,
    West,
    Up,
    Down,
}

pub const DIRECTIONS: [Direction; 6] = [
    Direction::North,
    Direction::East,
    Direction::South,
    Direction::West,
    Direction::Up,
    Direction::Down,
];

impl Direction {
    pub fn index(self) -> usize {
        match self {
            Direction::North => 0,
            Direction::East => 1,
            Direction::South => 2,
            Direction::West => 3,
            Direction::Up => 4,
            Direction::Down => 5,
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::North => Direction::South,
            Direction::East => Direction::West,
            Direction::South => Direction::North,
            Direction::West => Direction::East,
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }

    pub fn delta(self) -> (i32, i32, i32) {
        match self {
            Direction::North => (0, 1, 0),
            Direction::East => (1, 0, 0),
            Direction::South => (0, -1, 0),
            Direction::West => (-1, 0, 0),
            Direction::Up => (0, 0, 1),
            Direction::Down => (0, 0, -1),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Direction::North => "N",
            Direction::East => "E",
            Direction::South => "S",
            Direction::West => "W",
            Direction::Up => "U",
            Direction::Down => "D",
        }
    }

    pub fn from_letter(s: &str) -> Option<Direction> {
        match s {
            "N" => Some(Direction::North),
            "E" => Some(Direction::East),
            "S" => Some(Direction::South),
            "W" => Some(Direction::West),
            "U" => Some(Direction::Up),
            "D" => Some(Direction::Down),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// Integer lattice position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pos {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl Pos {
    pub fn new(x: i32, y: i32, z: i32) -> Self {
        Pos { x, y, z }
    }

    pub fn step(self, d: Direction) -> Pos {
        let (dx, dy, dz) = d.delta();
        Pos { x: self.x + dx, y: self.y + dy, z: self.z + dz }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// A tile type: a unique name plus one glue per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileType {
    pub name: String,
    sides: [Glue; 6],
}

impl TileType {
    pub fn new(name: impl Into<String>) -> Self {
        TileType {
            name: name.into(),
            sides: [Glue::null(), Glue::null(), Glue::null(), Glue::null(), Glue::null(), Glue::null()],
        }
    }

    pub fn with_side(mut self, d: Direction, g: Glue) -> Self {
        self.sides[d.index()] = g;
        self
    }

    pub fn set_side(&mut self, d: Direction, g: Glue) {
        self.sides[d.index()] = g;
    }

    pub fn side(&self, d: Direction) -> &Glue {
        &self.sides[d.index()]
    }

    pub fn sides(&self) -> &[Glue; 6] {
        &self.sides
    }

    /// True iff the U and D glues are null (a planar tile).
    pub fn is_planar(&self) -> bool {
        self.side(Direction::Up).is_null() && self.side(Direction::Down).is_null()
    }
}

/// Identifier of a tile type within a `TileSet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileId(pub u32);

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("duplicate tile type name: {0}")]
    DuplicateName(String),
    #[error("unknown tile type name: {0}")]
    UnknownName(String),
    #[error("empty assembly")]
    EmptyAssembly,
    #[error("illegal attachment of {tile} at {pos}: {reason}")]
    IllegalAttachment { pos: Pos, tile: String, reason: String },
    #[error("position {0} outside allowed planes for this geometry mode")]
    OutsidePlanes(Pos),
    #[error("seed is not tau-stable")]
    UnstableSeed,
}

/// Geometry restriction for a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryMode {
    /// z pinned to 0.
    Planar,
    /// z restricted to {0, 1}.
    JustBarely3d,
}

impl GeometryMode {
    pub fn allows(self, p: Pos) -> bool {
        match self {
            GeometryMode::Planar => p.z == 0,
            GeometryMode::JustBarely3d => p.z == 0 || p.z == 1,
        }
    }
}

/// An immutable set of tile types with name and glue-side lookup indexes.
#[derive(Debug, Clone)]
pub struct TileSet {
    types: Vec<TileType>,
    by_name: HashMap<String, TileId>,
    // (side, glue) -> tiles presenting that glue on that side; used to find
    // attachment candidates without scanning the whole set.
    by_side_glue: HashMap<(Direction, Glue), Vec<TileId>>,
}

impl TileSet {
    pub fn new(types: Vec<TileType>) -> Result<Self, ModelError> {
        let mut by_name = HashMap::new();
        let mut by_side_glue: HashMap<(Direction, Glue), Vec<TileId>> = HashMap::new();
        for (i, t) in types.iter().enumerate() {
            let id = TileId(i as u32);
            if by_name.insert(t.name.clone(), id).is_some() {
                return Err(ModelError::DuplicateName(t.name.clone()));
            }
            for d in DIRECTIONS {
                let g = t.side(d);
                if g.strength > 0 {
                    by_side_glue.entry((d, g.clone())).or_default().push(id);
                }
            }
        }
        Ok(TileSet { types, by_name, by_side_glue })
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn get(&self, id: TileId) -> &TileType {
        &self.types[id.0 as usize]
    }

    pub fn id_of(&self, name: &str) -> Option<TileId> {
        self.by_name.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (TileId, &TileType)> {
        self.types.iter().enumerate().map(|(i, t)| (TileId(i as u32), t))
    }

    /// Tile types presenting `glue` on side `d`.
    pub fn presenting(&self, d: Direction, glue: &Glue) -> &[TileId] {
        self.by_side_glue
            .get(&(d, glue.clone()))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// Pairs of distinct tile types with identical sides (the dedup lint).
    pub fn duplicate_side_pairs(&self) -> Vec<(String, String)> {
        let mut seen: HashMap<&[Glue; 6], &str> = HashMap::new();
        let mut dups = Vec::new();
        for t in &self.types {
            if let Some(prev) = seen.get(&t.sides) {
                dups.push((prev.to_string(), t.name.clone()));
            } else {
                seen.insert(&t.sides, &t.name);
            }
        }
        dups
    }

    /// Number of distinct non-null glues across the set.
    pub fn glue_count(&self) -> usize {
        let mut glues: HashSet<&Glue> = HashSet::new();
        for t in &self.types {
            for d in DIRECTIONS {
                let g = t.side(d);
                if g.strength > 0 {
                    glues.insert(g);
                }
            }
        }
        glues.len()
    }
}

/// A configuration: a partial map from positions to tile types. Unlike an
/// `Assembly` it may be disconnected; checkers accept it as raw input.
pub type Configuration = HashMap<Pos, TileId>;

/// A connected, non-empty arrangement of tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    placements: HashMap<Pos, TileId>,
}

impl Assembly {
    /// Single-tile assembly.
    pub fn seed(pos: Pos, tile: TileId) -> Self {
        let mut placements = HashMap::new();
        placements.insert(pos, tile);
        Assembly { placements }
    }

    /// Wraps a configuration, requiring non-emptiness and bond connectivity.
    pub fn from_configuration(cfg: Configuration, tiles: &TileSet) -> Result<Self, ModelError> {
        if cfg.is_empty() {
            return Err(ModelError::EmptyAssembly);
        }
        let asm = Assembly { placements: cfg };
        if !is_bond_connected(asm.placements(), tiles) {
            return Err(ModelError::IllegalAttachment {
                pos: *asm.placements.keys().next().unwrap(),
                tile: String::new(),
                reason: "binding graph is disconnected".into(),
            });
        }
        Ok(asm)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn get(&self, p: Pos) -> Option<TileId> {
        self.placements.get(&p).copied()
    }

    pub fn contains(&self, p: Pos) -> bool {
        self.placements.contains_key(&p)
    }

    pub fn placements(&self) -> &HashMap<Pos, TileId> {
        &self.placements
    }

    /// Placements in deterministic (position-sorted) order.
    pub fn sorted_placements(&self) -> Vec<(Pos, TileId)> {
        let mut v: Vec<(Pos, TileId)> = self.placements.iter().map(|(p, t)| (*p, *t)).collect();
        v.sort();
        v
    }

    pub fn bounding_box(&self) -> (Pos, Pos) {
        let mut lo = Pos::new(i32::MAX, i32::MAX, i32::MAX);
        let mut hi = Pos::new(i32::MIN, i32::MIN, i32::MIN);
        for p in self.placements.keys() {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            lo.z = lo.z.min(p.z);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
            hi.z = hi.z.max(p.z);
        }
        (lo, hi)
    }

    fn insert_unchecked(&mut self, p: Pos, t: TileId) {
        self.placements.insert(p, t);
    }
}

/// An edge of a binding graph: two adjacent positions whose abutting glues
/// bind, with the bond strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub a: Pos,
    pub b: Pos,
    pub strength: u32,
}

/// The binding graph of a configuration: vertices are the occupied positions,
/// edges join adjacent tiles whose abutting glues bind.
pub fn binding_graph(cfg: &Configuration, tiles: &TileSet) -> Result<Vec<Bond>, ModelError> {
    if cfg.is_empty() {
        return Err(ModelError::EmptyAssembly);
    }
    let mut bonds = Vec::new();
    for (&p, &tid) in cfg.iter() {
        let t = tiles.get(tid);
        // Scan only the three "positive" directions so each edge appears once.
        for d in [Direction::North, Direction::East, Direction::Up] {
            let q = p.step(d);
            if let Some(&uid) = cfg.get(&q) {
                let u = tiles.get(uid);
                let a = t.side(d);
                let b = u.side(d.opposite());
                if binds(a, b) {
                    bonds.push(Bond { a: p, b: q, strength: a.strength });
                }
            }
        }
    }
    Ok(bonds)
}

/// Whether the binding graph of `cfg` is connected (tau = 1 stability).
pub fn is_bond_connected(cfg: &Configuration, tiles: &TileSet) -> bool {
    if cfg.is_empty() {
        return false;
    }
    let start = *cfg.keys().next().unwrap();
    let mut seen: HashSet<Pos> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        let t = tiles.get(cfg[&p]);
        for d in DIRECTIONS {
            let q = p.step(d);
            if seen.contains(&q) {
                continue;
            }
            if let Some(&uid) = cfg.get(&q) {
                if binds(t.side(d), tiles.get(uid).side(d.opposite())) {
                    seen.insert(q);
                    queue.push_back(q);
                }
            }
        }
    }
    seen.len() == cfg.len()
}

/// Tau-stability: every cut of the binding graph has weight at least tau.
///
/// At tau = 1 this is exactly bond connectivity. For tau >= 2 a global
/// minimum cut is computed (Stoer-Wagner); no construction in this crate's
/// callers exercises that path beyond unit tests.
pub fn is_stable(cfg: &Configuration, tiles: &TileSet, tau: u32) -> bool {
    if cfg.is_empty() {
        return false;
    }
    if cfg.len() == 1 {
        return true;
    }
    if !is_bond_connected(cfg, tiles) {
        return false;
    }
    if tau <= 1 {
        return true;
    }
    let bonds = match binding_graph(cfg, tiles) {
        Ok(b) => b,
        Err(_) => return false,
    };
    global_min_cut(cfg, &bonds) >= tau as u64
}

/// Stoer-Wagner global minimum cut over the binding graph.
fn global_min_cut(cfg: &Configuration, bonds: &[Bond]) -> u64 {
    let verts: Vec<Pos> = cfg.keys().copied().collect();
    let n = verts.len();
    if n < 2 {
        return u64::MAX;
    }
    let index: HashMap<Pos, usize> = verts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut w = vec![vec![0u64; n]; n];
    for b in bonds {
        let (i, j) = (index[&b.a], index[&b.b]);
        w[i][j] += b.strength as u64;
        w[j][i] += b.strength as u64;
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    while active.len() > 1 {
        let m = active.len();
        let mut in_a = vec![false; m];
        let mut weights = vec![0u64; m];
        let (mut prev, mut last) = (0usize, 0usize);
        for _ in 0..m {
            let mut sel = usize::MAX;
            for i in 0..m {
                if !in_a[i] && (sel == usize::MAX || weights[i] > weights[sel]) {
                    sel = i;
                }
            }
            in_a[sel] = true;
            prev = last;
            last = sel;
            for i in 0..m {
                if !in_a[i] {
                    weights[i] += w[active[sel]][active[i]];
                }
            }
        }
        best = best.min(weights[last]);
        // merge `last` into `prev`
        let (lp, pp) = (active[last], active[prev]);
        for i in 0..n {
            w[pp][i] += w[lp][i];
            w[i][pp] += w[i][lp];
        }
        active.remove(last);
    }
    best
}

/// A tile assembly system: tile set, singleton seed, temperature, geometry.
#[derive(Debug, Clone)]
pub struct Tas {
    pub tiles: TileSet,
    pub seed_pos: Pos,
    pub seed_tile: TileId,
    pub temperature: u32,
    pub mode: GeometryMode,
}

impl Tas {
    pub fn new(
        tiles: TileSet,
        seed_pos: Pos,
        seed_tile: TileId,
        temperature: u32,
        mode: GeometryMode,
    ) -> Result<Self, ModelError> {
        if !mode.allows(seed_pos) {
            return Err(ModelError::OutsidePlanes(seed_pos));
        }
        if temperature == 0 {
            return Err(ModelError::UnstableSeed);
        }
        Ok(Tas { tiles, seed_pos, seed_tile, temperature, mode })
    }

    pub fn seed_assembly(&self) -> Assembly {
        Assembly::seed(self.seed_pos, self.seed_tile)
    }

    /// Total binding strength of tile `t` placed at empty position `p`
    /// against the existing assembly.
    pub fn binding_strength(&self, asm: &Assembly, p: Pos, t: TileId) -> u32 {
        let tt = self.tiles.get(t);
        let mut total = 0;
        for d in DIRECTIONS {
            if let Some(nid) = asm.get(p.step(d)) {
                let a = tt.side(d);
                let b = self.tiles.get(nid).side(d.opposite());
                if binds(a, b) {
                    total += a.strength;
                }
            }
        }
        total
    }

    /// Candidate tile types that could attach at `p` (present at least one
    /// matching glue toward an occupied neighbor); the caller still checks
    /// total strength against tau.
    pub fn candidates_at(&self, asm: &Assembly, p: Pos) -> Vec<TileId> {
        let mut out: Vec<TileId> = Vec::new();
        for d in DIRECTIONS {
            if let Some(nid) = asm.get(p.step(d)) {
                let facing = self.tiles.get(nid).side(d.opposite());
                if facing.strength > 0 {
                    for &tid in self.tiles.presenting(d, facing) {
                        if !out.contains(&tid) {
                            out.push(tid);
                        }
                    }
                }
            }
        }
        out
    }

    /// Attachable (tile) choices at `p`, i.e. candidates meeting temperature.
    pub fn attachable_at(&self, asm: &Assembly, p: Pos) -> Vec<TileId> {
        if !self.mode.allows(p) || asm.contains(p) {
            return Vec::new();
        }
        let mut v: Vec<TileId> = self
            .candidates_at(asm, p)
            .into_iter()
            .filter(|&t| self.binding_strength(asm, p, t) >= self.temperature)
            .collect();
        v.sort();
        v
    }

    /// The full frontier, computed from scratch: every (position, tile) pair
    /// such that the tile attaches stably at the empty position.
    pub fn frontier(&self, asm: &Assembly) -> Vec<(Pos, TileId)> {
        let mut seen: HashSet<Pos> = HashSet::new();
        let mut out = Vec::new();
        for (&p, _) in asm.placements().iter() {
            for d in DIRECTIONS {
                let q = p.step(d);
                if asm.contains(q) || !self.mode.allows(q) || !seen.insert(q) {
                    continue;
                }
                for t in self.attachable_at(asm, q) {
                    out.push((q, t));
                }
            }
        }
        out.sort();
        out
    }

    /// Attaches tile `t` at `p`, requiring (p, t) to be in the frontier.
    pub fn attach(&self, asm: &Assembly, p: Pos, t: TileId) -> Result<Assembly, ModelError> {
        let name = self.tiles.get(t).name.clone();
        if asm.contains(p) {
            return Err(ModelError::IllegalAttachment {
                pos: p,
                tile: name,
                reason: "position already occupied".into(),
            });
        }
        if !self.mode.allows(p) {
            return Err(ModelError::OutsidePlanes(p));
        }
        let s = self.binding_strength(asm, p, t);
        if s < self.temperature {
            return Err(ModelError::IllegalAttachment {
                pos: p,
                tile: name,
                reason: format!("binding strength {} below temperature {}", s, self.temperature),
            });
        }
        let mut next = asm.clone();
        next.insert_unchecked(p, t);
        Ok(next)
    }

    /// True iff the frontier of `asm` is empty.
    pub fn is_terminal(&self, asm: &Assembly) -> bool {
        for (&p, _) in asm.placements().iter() {
            for d in DIRECTIONS {
                let q = p.step(d);
                if !asm.contains(q) && self.mode.allows(q) && !self.attachable_at(asm, q).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Incrementally maintained frontier, for closure-scale runs. The from-scratch
/// `Tas::frontier` stays as the reference implementation for testing.
#[derive(Debug, Clone)]
pub struct IncrementalFrontier {
    entries: HashMap<Pos, Vec<TileId>>,
}

impl IncrementalFrontier {
    pub fn new(tas: &Tas, asm: &Assembly) -> Self {
        let mut entries: HashMap<Pos, Vec<TileId>> = HashMap::new();
        for (p, t) in tas.frontier(asm) {
            entries.entry(p).or_default().push(t);
        }
        IncrementalFrontier { entries }
    }

    /// Applies the delta for an attachment at `p`: the entry at `p` dies and
    /// all empty neighbors of `p` are re-evaluated.
    pub fn on_attach(&mut self, tas: &Tas, asm: &Assembly, p: Pos) {
        self.entries.remove(&p);
        for d in DIRECTIONS {
            let q = p.step(d);
            if asm.contains(q) || !tas.mode.allows(q) {
                continue;
            }
            let tiles = tas.attachable_at(asm, q);
            if tiles.is_empty() {
                self.entries.remove(&q);
            } else {
                self.entries.insert(q, tiles);
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = (&Pos, &Vec<TileId>)> {
        self.entries.iter()
    }

    pub fn at(&self, p: Pos) -> Option<&Vec<TileId>> {
        self.entries.get(&p)
    }

    /// Snapshot in the same sorted form as `Tas::frontier`.
    pub fn sorted(&self) -> Vec<(Pos, TileId)> {
        let mut v = Vec::new();
        for (p, ts) in &self.entries {
            for t in ts {
                v.push((*p, *t));
            }
        }
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(label: &str) -> Glue {
        Glue::new(label, 1)
    }

    fn two_tile_set() -> TileSet {
        let a = TileType::new("a").with_side(Direction::East, g("x"));
        let b = TileType::new("b").with_side(Direction::West, g("x"));
        TileSet::new(vec![a, b]).unwrap()
    }

    #[test]
    fn binds_requires_equal_label_strength_positive() {
        assert!(binds(&Glue::new("x", 1), &Glue::new("x", 1)));
        assert!(!binds(&Glue::new("x", 1), &Glue::new("y", 1)));
        assert!(!binds(&Glue::new("x", 0), &Glue::new("x", 0)));
        assert!(!binds(&Glue::new("x", 1), &Glue::new("x", 2)));
    }

    #[test]
    fn binding_graph_cases() {
        let tiles = two_tile_set();
        let mut cfg: Configuration = HashMap::new();
        cfg.insert(Pos::new(0, 0, 0), TileId(0));
        assert_eq!(binding_graph(&cfg, &tiles).unwrap().len(), 0);

        cfg.insert(Pos::new(1, 0, 0), TileId(1));
        let bonds = binding_graph(&cfg, &tiles).unwrap();
        assert_eq!(bonds.len(), 1);
        assert_eq!(bonds[0].strength, 1);

        // diagonal tiles: no bond, disconnected as configuration
        let mut diag: Configuration = HashMap::new();
        diag.insert(Pos::new(0, 0, 0), TileId(0));
        diag.insert(Pos::new(1, 1, 0), TileId(1));
        assert_eq!(binding_graph(&diag, &tiles).unwrap().len(), 0);
        assert!(!is_bond_connected(&diag, &tiles));
        assert!(Assembly::from_configuration(diag, &tiles).is_err());

        let empty: Configuration = HashMap::new();
        assert!(binding_graph(&empty, &tiles).is_err());
    }

    #[test]
    fn frontier_and_attach() {
        let tiles = two_tile_set();
        let tas = Tas::new(tiles, Pos::new(0, 0, 0), TileId(0), 1, GeometryMode::JustBarely3d).unwrap();
        let asm = tas.seed_assembly();
        let f = tas.frontier(&asm);
        assert_eq!(f, vec![(Pos::new(1, 0, 0), TileId(1))]);

        let next = tas.attach(&asm, Pos::new(1, 0, 0), TileId(1)).unwrap();
        assert_eq!(next.len(), 2);
        assert!(tas.is_terminal(&next));
        assert!(!tas.is_terminal(&asm));

        // occupied position
        assert!(tas.attach(&next, Pos::new(1, 0, 0), TileId(0)).is_err());
        // zero-strength contact at tau=1
        assert!(tas.attach(&asm, Pos::new(0, 1, 0), TileId(1)).is_err());
    }

    #[test]
    fn frontier_empty_when_no_glue_matches() {
        let a = TileType::new("a").with_side(Direction::East, g("x"));
        let b = TileType::new("b").with_side(Direction::West, g("y"));
        let tiles = TileSet::new(vec![a, b]).unwrap();
        let tas = Tas::new(tiles, Pos::new(0, 0, 0), TileId(0), 1, GeometryMode::JustBarely3d).unwrap();
        assert!(tas.frontier(&tas.seed_assembly()).is_empty());
        assert!(tas.is_terminal(&tas.seed_assembly()));
    }

    #[test]
    fn planar_mode_rejects_z1() {
        let a = TileType::new("a").with_side(Direction::Up, g("x"));
        let b = TileType::new("b").with_side(Direction::Down, g("x"));
        let tiles = TileSet::new(vec![a, b]).unwrap();
        let tas = Tas::new(tiles, Pos::new(0, 0, 0), TileId(0), 1, GeometryMode::Planar).unwrap();
        assert!(tas.frontier(&tas.seed_assembly()).is_empty());

        let tas3 = Tas::new(
            TileSet::new(vec![
                TileType::new("a").with_side(Direction::Up, g("x")),
                TileType::new("b").with_side(Direction::Down, g("x")),
            ])
            .unwrap(),
            Pos::new(0, 0, 0),
            TileId(0),
            1,
            GeometryMode::JustBarely3d,
        )
        .unwrap();
        assert_eq!(tas3.frontier(&tas3.seed_assembly()).len(), 1);
    }

    #[test]
    fn duplicate_names_rejected_and_dedup_lint() {
        let a = TileType::new("a").with_side(Direction::East, g("x"));
        let a2 = TileType::new("a").with_side(Direction::West, g("x"));
        assert!(TileSet::new(vec![a.clone(), a2]).is_err());

        let same_sides = TileType::new("b").with_side(Direction::East, g("x"));
        let ts = TileSet::new(vec![a, same_sides]).unwrap();
        assert_eq!(ts.duplicate_side_pairs(), vec![("a".to_string(), "b".to_string())]);
    }

    #[test]
    fn general_tau_stability_cut_check() {
        // Two tiles joined by a single strength-1 bond: stable at tau 1, not 2.
        let tiles = two_tile_set();
        let mut cfg: Configuration = HashMap::new();
        cfg.insert(Pos::new(0, 0, 0), TileId(0));
        cfg.insert(Pos::new(1, 0, 0), TileId(1));
        assert!(is_stable(&cfg, &tiles, 1));
        assert!(!is_stable(&cfg, &tiles, 2));

        // Strength-2 bond: stable at tau 2.
        let a = TileType::new("a").with_side(Direction::East, Glue::new("x", 2));
        let b = TileType::new("b").with_side(Direction::West, Glue::new("x", 2));
        let tiles2 = TileSet::new(vec![a, b]).unwrap();
        let mut cfg2: Configuration = HashMap::new();
        cfg2.insert(Pos::new(0, 0, 0), TileId(0));
        cfg2.insert(Pos::new(1, 0, 0), TileId(1));
        assert!(is_stable(&cfg2, &tiles2, 2));
        assert!(!is_stable(&cfg2, &tiles2, 3));
    }
}
