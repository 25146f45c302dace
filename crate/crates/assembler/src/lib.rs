//! Execution and certification of tile systems: the deterministic placement
//! policy, the union closure of all producible placements (the tau=1
//! directedness oracle), conditional-determinism auditing and shape checks.

use std::collections::{HashMap, HashSet, VecDeque};

use atam_core::{
    Assembly, Direction, GeometryMode, IncrementalFrontier, Pos, Tas, TileId, DIRECTIONS,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("nondeterministic placement under policy at {pos}: {tiles:?}")]
    NondeterministicPlacement { pos: Pos, tiles: Vec<String> },
    #[error("policy walker lost the frontier (internal error)")]
    LostFrontier,
    #[error("sequence step {step} is not in the frontier of its prefix")]
    InvalidStep { step: usize },
}

/// An executed assembly sequence: placement steps plus the final assembly.
#[derive(Debug, Clone)]
pub struct AssemblySequence {
    pub steps: Vec<(Pos, TileId)>,
    pub result: Assembly,
}

impl AssemblySequence {
    /// Replays the steps, checking each against the frontier of its prefix.
    pub fn validate(&self, tas: &Tas) -> Result<(), RunError> {
        let mut asm = tas.seed_assembly();
        for (i, &(p, t)) in self.steps.iter().enumerate() {
            if i == 0 {
                if p != tas.seed_pos || t != tas.seed_tile {
                    return Err(RunError::InvalidStep { step: 0 });
                }
                continue;
            }
            if !tas.attachable_at(&asm, p).contains(&t) {
                return Err(RunError::InvalidStep { step: i });
            }
            asm = tas.attach(&asm, p, t).expect("attachable implies attach");
        }
        if asm != self.result {
            return Err(RunError::InvalidStep { step: self.steps.len() });
        }
        Ok(())
    }
}

/// Runs the paper-style deterministic placement policy to a terminal
/// assembly: depth-first, always preferring a z=0 placement anywhere over any
/// z=1 placement, breaking direction ties north, east, south, west (then the
/// vertical steps).
pub fn run_policy_sequence(tas: &Tas) -> Result<AssemblySequence, RunError> {
    const ORDER: [Direction; 6] = [
        Direction::North,
        Direction::East,
        Direction::South,
        Direction::West,
        Direction::Up,
        Direction::Down,
    ];
    let mut asm = tas.seed_assembly();
    let mut steps = vec![(tas.seed_pos, tas.seed_tile)];
    let mut frontier = IncrementalFrontier::new(tas, &asm);
    // placement order doubles as the depth-first stack
    loop {
        if frontier.is_empty() {
            break;
        }
        let want_z0 = frontier.positions().any(|(p, _)| p.z == 0);
        let mut chosen: Option<Pos> = None;
        'walk: for &(p, _) in steps.iter().rev() {
            for d in ORDER {
                let q = p.step(d);
                if q.z == if want_z0 { 0 } else { 1 } && frontier.at(q).is_some() {
                    chosen = Some(q);
                    break 'walk;
                }
            }
        }
        let q = chosen.ok_or(RunError::LostFrontier)?;
        let tiles = frontier.at(q).cloned().unwrap_or_default();
        if tiles.len() != 1 {
            return Err(RunError::NondeterministicPlacement {
                pos: q,
                tiles: tiles.iter().map(|t| tas.tiles.get(*t).name.clone()).collect(),
            });
        }
        asm = tas.attach(&asm, q, tiles[0]).expect("frontier entry attaches");
        frontier.on_attach(tas, &asm, q);
        steps.push((q, tiles[0]));
    }
    Ok(AssemblySequence { steps, result: asm })
}

/// Runs a uniformly random legal assembly sequence with a seeded generator.
pub fn run_random_sequence(tas: &Tas, seed: u64) -> AssemblySequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut asm = tas.seed_assembly();
    let mut steps = vec![(tas.seed_pos, tas.seed_tile)];
    let mut frontier = IncrementalFrontier::new(tas, &asm);
    loop {
        let mut entries = frontier.sorted();
        if entries.is_empty() {
            break;
        }
        let &(p, t) = entries.choose(&mut rng).expect("nonempty");
        entries.clear();
        asm = tas.attach(&asm, p, t).expect("frontier entry attaches");
        frontier.on_attach(tas, &asm, p);
        steps.push((p, t));
    }
    AssemblySequence { steps, result: asm }
}

/// Inclusive position bounds for closure exploration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub lo: Pos,
    pub hi: Pos,
}

impl Budget {
    pub fn contains(&self, p: Pos) -> bool {
        p.x >= self.lo.x
            && p.x <= self.hi.x
            && p.y >= self.lo.y
            && p.y <= self.hi.y
            && p.z >= self.lo.z
            && p.z <= self.hi.z
    }

    /// Default budget for a k x N target in the vertical frame: the box plus
    /// margin 2 in x and y.
    pub fn for_rect(k: u32, n_height: u64) -> Budget {
        Budget {
            lo: Pos::new(-2, -2, 0),
            hi: Pos::new(k as i32 + 1, n_height as i32 + 1, 1),
        }
    }
}

/// A position where two distinct tile types are both reachable.
#[derive(Debug, Clone)]
pub struct Conflict {
    pub pos: Pos,
    pub first: TileId,
    pub second: TileId,
}

/// Least fixed point of single-tile tau=1 attachability from the seed.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    /// every tile type reachable at each position
    pub cell_types: HashMap<Pos, Vec<TileId>>,
    pub conflicts: Vec<Conflict>,
    /// positions outside the budget at which some tile could still attach
    pub escapes: Vec<Pos>,
    pub terminal: bool,
}

impl ClosureReport {
    pub fn domain(&self) -> impl Iterator<Item = &Pos> {
        self.cell_types.keys()
    }

    /// The single configuration the closure denotes when conflict-free.
    pub fn configuration(&self) -> Option<HashMap<Pos, TileId>> {
        if !self.conflicts.is_empty() {
            return None;
        }
        Some(self.cell_types.iter().map(|(p, ts)| (*p, ts[0])).collect())
    }
}

/// Computes the union closure: a (position, tile) pair enters iff an
/// already-entered neighboring pair presents a binding glue toward it. Sound
/// and complete for tau = 1, where any single positive bond admits a tile.
pub fn union_closure(tas: &Tas, budget: Budget) -> ClosureReport {
    assert_eq!(tas.temperature, 1, "union closure is a tau=1 oracle");
    let mut cell_types: HashMap<Pos, Vec<TileId>> = HashMap::new();
    let mut conflicts = Vec::new();
    let mut escapes: HashSet<Pos> = HashSet::new();
    let mut queue: VecDeque<(Pos, TileId)> = VecDeque::new();

    cell_types.insert(tas.seed_pos, vec![tas.seed_tile]);
    queue.push_back((tas.seed_pos, tas.seed_tile));

    while let Some((p, t)) = queue.pop_front() {
        let tt = tas.tiles.get(t);
        for d in DIRECTIONS {
            let g = tt.side(d);
            if g.strength == 0 {
                continue;
            }
            let q = p.step(d);
            if !tas.mode.allows(q) {
                continue;
            }
            let partners = tas.tiles.presenting(d.opposite(), g);
            if partners.is_empty() {
                continue;
            }
            if !budget.contains(q) {
                escapes.insert(q);
                continue;
            }
            for &t2 in partners {
                let entry = cell_types.entry(q).or_default();
                if entry.contains(&t2) {
                    continue;
                }
                if !entry.is_empty() {
                    conflicts.push(Conflict { pos: q, first: entry[0], second: t2 });
                }
                entry.push(t2);
                queue.push_back((q, t2));
            }
        }
    }

    let terminal = escapes.is_empty();
    let mut escapes: Vec<Pos> = escapes.into_iter().collect();
    escapes.sort();
    ClosureReport { cell_types, conflicts, escapes, terminal }
}

/// Directedness-and-shape verdict for a generated k x N system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    DirectedAndCorrect,
    Conflict(Vec<Pos>),
    Escape(Pos),
    NotTerminal,
    /// terminal and in-box but the z=0 slab has a hole
    ShapeIncomplete(Pos),
}

impl Verdict {
    /// CLI exit code: 0 ok, 2 conflict, 3 escape, 4 not terminal / incomplete.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::DirectedAndCorrect => 0,
            Verdict::Conflict(_) => 2,
            Verdict::Escape(_) => 3,
            Verdict::NotTerminal | Verdict::ShapeIncomplete(_) => 4,
        }
    }
}

/// Certifies that the system uniquely self-assembles a k x N rectangle in
/// the vertical frame: conflict-free closure, terminal, inside the box, and
/// the z=0 slab fully covered.
pub fn check_directed(tas: &Tas, k: u32, n_height: u64) -> Verdict {
    let report = union_closure(tas, Budget::for_rect(k, n_height));
    verdict_from_closure(&report, k, n_height)
}

pub fn verdict_from_closure(report: &ClosureReport, k: u32, n_height: u64) -> Verdict {
    if !report.conflicts.is_empty() {
        let mut ps: Vec<Pos> = report.conflicts.iter().map(|c| c.pos).collect();
        ps.sort();
        ps.dedup();
        return Verdict::Conflict(ps);
    }
    let in_box = |p: &Pos| {
        p.x >= 0 && (p.x as u32) < k && p.y >= 0 && (p.y as u64) < n_height && (p.z == 0 || p.z == 1)
    };
    if let Some(p) = report.escapes.first() {
        return Verdict::Escape(*p);
    }
    if let Some(p) = report.domain().find(|p| !in_box(p)) {
        return Verdict::Escape(*p);
    }
    if !report.terminal {
        return Verdict::NotTerminal;
    }
    for x in 0..k as i32 {
        for y in 0..n_height as i32 {
            let p = Pos::new(x, y, 0);
            if !report.cell_types.contains_key(&p) {
                return Verdict::ShapeIncomplete(p);
            }
        }
    }
    Verdict::DirectedAndCorrect
}

/// True iff, after transposing out of the vertical frame, dom(asm) contains
/// the full z=0 slab of the formal rectangle and is contained in its
/// z in {0,1} box. Both checks are frame-invariant, so they run directly on
/// vertical-frame coordinates.
pub fn shape_check(asm: &Assembly, k: u32, n_height: u64) -> bool {
    let in_box = |p: &Pos| {
        p.x >= 0 && (p.x as u32) < k && p.y >= 0 && (p.y as u64) < n_height && (p.z == 0 || p.z == 1)
    };
    if !asm.placements().keys().all(in_box) {
        return false;
    }
    for x in 0..k as i32 {
        for y in 0..n_height as i32 {
            if !asm.contains(Pos::new(x, y, 0)) {
                return false;
            }
        }
    }
    true
}

/// Maps a vertical-frame position to the formal R3_{k,N} frame, where the
/// first coordinate runs along the length N.
pub fn transpose_to_formal(p: Pos) -> Pos {
    Pos::new(p.y, p.x, p.z)
}

/// One conditional-determinism violation.
#[derive(Debug, Clone)]
pub enum CdViolation {
    /// step bound with total strength != tau
    BindingStrength { step: usize, pos: Pos, strength: u32 },
    /// more than one bond formed at attachment time
    MultipleInputSides { step: usize, pos: Pos, sides: Vec<Direction> },
    /// another tile type shares this (side, glue) input
    AmbiguousInputType { step: usize, pos: Pos, tiles: Vec<String> },
    NotTerminal,
}

#[derive(Debug, Clone, Default)]
pub struct CdReport {
    pub violations: Vec<CdViolation>,
}

impl CdReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Audits the Lutz-Shutters conditional-determinism conditions along a
/// sequence: every attachment binds with exactly strength tau through a
/// unique input side, no alternative tile type shares that (side, glue)
/// input, and the result is terminal.
pub fn check_conditional_determinism(tas: &Tas, seq: &AssemblySequence) -> CdReport {
    let mut report = CdReport::default();
    let mut asm = tas.seed_assembly();
    for (i, &(p, t)) in seq.steps.iter().enumerate() {
        if i == 0 {
            continue;
        }
        let tt = tas.tiles.get(t);
        let mut strength = 0;
        let mut sides = Vec::new();
        for d in DIRECTIONS {
            if let Some(nid) = asm.get(p.step(d)) {
                let a = tt.side(d);
                if atam_core::binds(a, tas.tiles.get(nid).side(d.opposite())) {
                    strength += a.strength;
                    sides.push(d);
                }
            }
        }
        if strength != tas.temperature {
            report.violations.push(CdViolation::BindingStrength { step: i, pos: p, strength });
        }
        if sides.len() != 1 {
            report
                .violations
                .push(CdViolation::MultipleInputSides { step: i, pos: p, sides: sides.clone() });
        }
        if let Some(&d) = sides.first() {
            let glue = tt.side(d);
            let sharing = tas.tiles.presenting(d, glue);
            if sharing.len() != 1 || sharing[0] != t {
                report.violations.push(CdViolation::AmbiguousInputType {
                    step: i,
                    pos: p,
                    tiles: sharing.iter().map(|s| tas.tiles.get(*s).name.clone()).collect(),
                });
            }
        }
        asm = match tas.attach(&asm, p, t) {
            Ok(a) => a,
            Err(_) => {
                report.violations.push(CdViolation::BindingStrength { step: i, pos: p, strength });
                return report;
            }
        };
    }
    if !tas.is_terminal(&asm) {
        report.violations.push(CdViolation::NotTerminal);
    }
    report
}

/// Reconstructs an explicit assembly sequence witnessing that `target` is
/// reachable inside a conflict-free closure configuration: a bond path from
/// the seed, replayed one attachment at a time.
pub fn witness_path(
    tas: &Tas,
    cfg: &HashMap<Pos, TileId>,
    target: Pos,
) -> Option<Vec<(Pos, TileId)>> {
    // breadth-first over bonds of the closure configuration
    let mut parent: HashMap<Pos, Pos> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(tas.seed_pos);
    parent.insert(tas.seed_pos, tas.seed_pos);
    while let Some(p) = queue.pop_front() {
        if p == target {
            break;
        }
        let t = tas.tiles.get(cfg[&p]);
        for d in DIRECTIONS {
            let q = p.step(d);
            if parent.contains_key(&q) {
                continue;
            }
            if let Some(&uid) = cfg.get(&q) {
                if atam_core::binds(t.side(d), tas.tiles.get(uid).side(d.opposite())) {
                    parent.insert(q, p);
                    queue.push_back(q);
                }
            }
        }
    }
    parent.get(&target)?;
    let mut chain = vec![target];
    let mut cur = target;
    while cur != tas.seed_pos {
        cur = parent[&cur];
        chain.push(cur);
    }
    chain.reverse();
    // replay: every tile on the chain binds to its predecessor at tau = 1
    let mut asm = tas.seed_assembly();
    let mut steps = vec![(tas.seed_pos, cfg[&tas.seed_pos])];
    for &p in chain.iter().skip(1) {
        let t = cfg[&p];
        asm = tas.attach(&asm, p, t).ok()?;
        steps.push((p, t));
    }
    Some(steps)
}
