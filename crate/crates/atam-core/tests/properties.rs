//! Property tests for the attachment semantics: frontier/attach round trips,
//! incremental-vs-scratch frontier agreement over random legal sequences, and
//! the tau=1 stability/connectivity equivalence on random configurations.

use atam_core::*;
use proptest::prelude::*;
use std::collections::HashMap;

/// A small random tile soup over a fixed glue alphabet. Glues are all
/// strength 1, so plenty of attachments are possible.
fn soup(n_tiles: usize, n_glues: usize, seed: u64) -> TileSet {
    // deterministic xorshift so the soup is reproducible per seed
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut types = Vec::new();
    for i in 0..n_tiles {
        let mut t = TileType::new(format!("t{}", i));
        for d in DIRECTIONS {
            // planar soup: skip U/D so everything stays in z=0
            if matches!(d, Direction::Up | Direction::Down) {
                continue;
            }
            let r = next() % (n_glues as u64 + 2);
            if r < n_glues as u64 {
                t.set_side(d, Glue::new(format!("g{}", r), 1));
            }
        }
        types.push(t);
    }
    TileSet::new(types).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn incremental_frontier_matches_scratch(seed in 0u64..500, steps in 1usize..60) {
        let tiles = soup(6, 3, seed);
        let tas = Tas::new(tiles, Pos::new(0, 0, 0), TileId(0), 1, GeometryMode::Planar).unwrap();
        let mut asm = tas.seed_assembly();
        let mut inc = IncrementalFrontier::new(&tas, &asm);
        let mut rng_state = seed.wrapping_add(7);
        for _ in 0..steps {
            let f = tas.frontier(&asm);
            prop_assert_eq!(inc.sorted(), f.clone());
            if f.is_empty() {
                break;
            }
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let (p, t) = f[(rng_state >> 33) as usize % f.len()];
            asm = tas.attach(&asm, p, t).unwrap();
            inc.on_attach(&tas, &asm, p);
        }
        prop_assert_eq!(inc.sorted(), tas.frontier(&asm));
    }

    #[test]
    fn attach_succeeds_exactly_on_frontier(seed in 0u64..500) {
        let tiles = soup(5, 2, seed);
        let tas = Tas::new(tiles, Pos::new(0, 0, 0), TileId(0), 1, GeometryMode::Planar).unwrap();
        let mut asm = tas.seed_assembly();
        for _ in 0..20 {
            let f = tas.frontier(&asm);
            for &(p, t) in &f {
                let next = tas.attach(&asm, p, t);
                prop_assert!(next.is_ok());
                let next = next.unwrap();
                prop_assert_eq!(next.len(), asm.len() + 1);
                prop_assert!(is_stable(next.placements(), &tas.tiles, 1));
            }
            if f.is_empty() {
                break;
            }
            let (p, t) = f[0];
            asm = tas.attach(&asm, p, t).unwrap();
        }
    }

    #[test]
    fn tau1_stability_iff_connected(seed in 0u64..500, n in 1usize..12) {
        let tiles = soup(4, 2, seed);
        // scatter tiles over a small board; roughly half the boards disconnect
        let mut cfg: Configuration = HashMap::new();
        let mut state = seed.wrapping_add(99);
        for i in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = ((state >> 32) % 4) as i32;
            let y = ((state >> 48) % 4) as i32;
            cfg.insert(Pos::new(x, y, 0), TileId((i % 4) as u32));
        }
        prop_assert_eq!(is_stable(&cfg, &tiles, 1), is_bond_connected(&cfg, &tiles));
    }
}
