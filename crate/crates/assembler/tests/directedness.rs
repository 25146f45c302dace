//! End-to-end certification of generated systems: closure-based directedness,
//! policy/closure agreement, order independence, escape detection, witness
//! reconstruction and ablations.

use assembler::*;
use atam_core::{GeometryMode, Pos, Tas, TileSet};
use rectgen::generate_tileset;

#[test]
fn t11x56_is_directed_and_correct() {
    let gen = generate_tileset(11, 56).unwrap();
    let verdict = check_directed(&gen.tas, 11, 56);
    assert_eq!(verdict, Verdict::DirectedAndCorrect, "closure verdict");

    let closure = union_closure(&gen.tas, Budget::for_rect(11, 56));
    let cfg = closure.configuration().unwrap();

    // policy run reaches the same terminal assembly, position by position
    let seq = run_policy_sequence(&gen.tas).unwrap();
    assert_eq!(seq.result.len(), cfg.len());
    for (p, t) in seq.result.placements() {
        assert_eq!(cfg.get(p), Some(t), "mismatch at {}", p);
    }
    assert!(gen.tas.is_terminal(&seq.result));
    assert!(shape_check(&seq.result, 11, 56));
    seq.validate(&gen.tas).unwrap();
}

#[test]
fn t3x49_d1_path_is_directed_and_correct() {
    let gen = generate_tileset(3, 49).unwrap();
    assert_eq!(check_directed(&gen.tas, 3, 49), Verdict::DirectedAndCorrect);
    let seq = run_policy_sequence(&gen.tas).unwrap();
    assert!(shape_check(&seq.result, 3, 49));
}

#[test]
fn conditional_determinism_holds_on_policy_sequence() {
    let gen = generate_tileset(11, 56).unwrap();
    let seq = run_policy_sequence(&gen.tas).unwrap();
    let report = check_conditional_determinism(&gen.tas, &seq);
    assert!(report.ok(), "violations: {:?}", &report.violations[..report.violations.len().min(5)]);
}

#[test]
fn order_independence_small() {
    let gen = generate_tileset(4, 49).unwrap();
    let reference = run_policy_sequence(&gen.tas).unwrap().result;
    for seed in 0..8u64 {
        let random = run_random_sequence(&gen.tas, seed);
        assert_eq!(random.result, reference, "seed {}", seed);
    }
}

#[test]
fn closure_witnesses_replay() {
    let gen = generate_tileset(5, 60).unwrap();
    let closure = union_closure(&gen.tas, Budget::for_rect(5, 60));
    let cfg = closure.configuration().expect("conflict-free");
    let mut cells: Vec<Pos> = cfg.keys().copied().collect();
    cells.sort();
    // deterministic sample of 50 cells across the assembly
    let stride = (cells.len() / 50).max(1);
    for p in cells.iter().step_by(stride) {
        let steps = witness_path(&gen.tas, &cfg, *p).expect("witness exists");
        assert_eq!(steps.last().unwrap().0, *p);
    }
}

#[test]
fn shrunken_budget_reports_escape() {
    let gen = generate_tileset(5, 60).unwrap();
    let mut budget = Budget::for_rect(5, 60);
    budget.hi.y = 58; // one row short of the construction's top
    let closure = union_closure(&gen.tas, budget);
    assert!(!closure.escapes.is_empty());
    assert_ne!(verdict_from_closure(&closure, 5, 60), Verdict::DirectedAndCorrect);
}

#[test]
fn wrong_target_height_is_escape() {
    let gen = generate_tileset(5, 60).unwrap();
    // verify the 60-built set against N = 59: tiles land outside the box
    match check_directed(&gen.tas, 5, 59) {
        Verdict::Escape(_) => {}
        v => panic!("expected escape, got {:?}", v),
    }
}

#[test]
fn roof_ablation_flips_verdict() {
    let gen = generate_tileset(11, 56).unwrap();
    let kept: Vec<_> = gen
        .tas
        .tiles
        .iter()
        .filter(|(_, t)| gen.report.units[&t.name] != rectgen::GadgetUnit::Roof)
        .map(|(_, t)| t.clone())
        .collect();
    let tiles = TileSet::new(kept).unwrap();
    let seed = tiles.id_of(rectgen::SEED_TILE).unwrap();
    let tas = Tas::new(tiles, Pos::new(0, 0, 0), seed, 1, GeometryMode::JustBarely3d).unwrap();
    assert_ne!(check_directed(&tas, 11, 56), Verdict::DirectedAndCorrect);
}

#[test]
fn write_msb_ablation_flips_verdict() {
    let gen = generate_tileset(11, 56).unwrap();
    let kept: Vec<_> = gen
        .tas
        .tiles
        .iter()
        .filter(|(_, t)| !t.name.starts_with("cwrite_msb.copy.1/"))
        .map(|(_, t)| t.clone())
        .collect();
    let tiles = TileSet::new(kept).unwrap();
    let seed = tiles.id_of(rectgen::SEED_TILE).unwrap();
    let tas = Tas::new(tiles, Pos::new(0, 0, 0), seed, 1, GeometryMode::JustBarely3d).unwrap();
    assert_ne!(check_directed(&tas, 11, 56), Verdict::DirectedAndCorrect);
}

#[test]
fn constructed_conflict_is_detected() {
    // two tiles sharing an input glue on the same side with different outputs
    use atam_core::{Direction, Glue, TileType};
    let seed = TileType::new("s").with_side(Direction::East, Glue::new("a", 1));
    let t1 = TileType::new("t1")
        .with_side(Direction::West, Glue::new("a", 1))
        .with_side(Direction::North, Glue::new("b", 1));
    let t2 = TileType::new("t2")
        .with_side(Direction::West, Glue::new("a", 1))
        .with_side(Direction::South, Glue::new("c", 1));
    let tiles = TileSet::new(vec![seed, t1, t2]).unwrap();
    let tas = Tas::new(tiles, Pos::new(0, 0, 0), atam_core::TileId(0), 1, GeometryMode::JustBarely3d)
        .unwrap();
    let closure = union_closure(&tas, Budget { lo: Pos::new(-3, -3, 0), hi: Pos::new(3, 3, 1) });
    assert!(!closure.conflicts.is_empty());
}

#[test]
fn single_tile_tas_closure() {
    use atam_core::{TileSet, TileType};
    let tiles = TileSet::new(vec![TileType::new("s")]).unwrap();
    let tas = Tas::new(tiles, Pos::new(0, 0, 0), atam_core::TileId(0), 1, GeometryMode::JustBarely3d)
        .unwrap();
    let closure = union_closure(&tas, Budget { lo: Pos::new(-2, -2, 0), hi: Pos::new(2, 2, 1) });
    assert_eq!(closure.cell_types.len(), 1);
    assert!(closure.terminal);
    let seq = run_policy_sequence(&tas).unwrap();
    assert_eq!(seq.steps.len(), 1);
}
