//! The gadget creation loops for the four units of the construction: Seed,
//! Counter, Return Row and Roof.
//!
//! Geometry summary (vertical frame: x east, y north, z in {0,1}). Each digit
//! column is three lanes wide: W (descent), M (write bodies), E (bit bumps
//! and the read path). A digit's l bits sit on the E lane at a 3-row pitch; a
//! written 1 is a z=1 "overhang" hanging east off the write body, a written 0
//! is a z=0 "plug" in the lane. A reader verifies a guessed 1 by passing
//! under the overhang at z=0 (blocked by a plug) and a guessed 0 by climbing
//! over the plug at z=1 (blocked by an overhang); both guesses are offered by
//! a two-tile pair (z=0 tile guessing 1 northward, z=1 tile above it guessing
//! 0), so every wrong guess is geometrically blocked before it places a tile.

use crate::gadget::{Gadget, GadgetBuilder, Unit};
use crate::params::{bin, bit, digit, pow_u64, ConstructionParams};
use atam_core::{Direction, Glue};

use Direction::{Down, East, North, South, Up, West};

fn g1(label: String) -> Glue {
    Glue::new(label, 1)
}

fn lbl(tokens: &[&str]) -> Glue {
    g1(tokens.join(","))
}

/// Shared glue label for roof/counter fill chains.
pub const D_FILL: &str = "d_fill";

/// Ops threaded through read/descend chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Inc,
    Copy,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Inc => "inc",
            Op::Copy => "copy",
        }
    }
}

/// Write-chain series: copy columns, most-significant-digit columns, and the
/// roll-over all-zeros rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    Copy,
    Msd,
}

impl Series {
    fn name(self) -> &'static str {
        match self {
            Series::Copy => "copy",
            Series::Msd => "msd",
        }
    }
}

// ---------------------------------------------------------------------------
// shared single-tile gadgets
// ---------------------------------------------------------------------------

fn up_column(name: String, unit: Unit, input: Glue, output: Glue) -> Gadget {
    let mut b = GadgetBuilder::new(name, unit);
    let t = b.tile("t", (0, 0, 0));
    b.input(t, South, input);
    b.output(t, North, output);
    b.finish()
}

fn down_column(name: String, input: Glue, output: Glue) -> Gadget {
    let mut b = GadgetBuilder::new(name, Unit::Counter);
    let t = b.tile("t", (0, 0, 0));
    b.input(t, North, input);
    b.output(t, South, output);
    b.finish()
}

// ---------------------------------------------------------------------------
// Seed unit
// ---------------------------------------------------------------------------

/// Instantiates the Seed unit: the bottom-row start (with its width-c west
/// lip), then per digit column an up-climb, the top bit, and a descending
/// chain writing the remaining bits as bumps, finishing with the first read
/// guesses for the counter.
pub fn gen_seed_unit(p: &ConstructionParams) -> Vec<Gadget> {
    let l = p.l;
    let d = p.d;
    let mut out = Vec::new();

    // Seed_Start, variant chosen by c: the seed tile at the far left plus the
    // lip tiles, ending on digit column d's W lane.
    {
        let mut b = GadgetBuilder::new("seed_start", Unit::Seed);
        let mut prev = b.tile("s0", (0, 0, 0));
        for i in 1..=p.c {
            let t = b.tile(&format!("s{}", i), (i as i32, 0, 0));
            b.link(prev, East, t);
            prev = t;
        }
        b.output(prev, North, lbl(&["seed", "col", &d.to_string(), "1"]));
        out.push(b.finish());
    }

    // encoded column value: digit bits shifted up one, left-edge bit lowest
    let enc = |i: u32| -> u64 { 2 * digit(p.s, p.m, i) + if i == d { 1 } else { 0 } };

    for i in 1..=d {
        let is = i.to_string();
        // climb the W lane
        for j in 1..=(3 * l - 3) {
            out.push(up_column(
                format!("seed_up.{}.{}", i, j),
                Unit::Seed,
                lbl(&["seed", "col", &is, &j.to_string()]),
                lbl(&["seed", "col", &is, &(j + 1).to_string()]),
            ));
        }
        // Seed_Msb: cap the column, cross east onto the M lane, write bit l.
        {
            let v1 = bit(enc(i), l) == 1;
            let mut b = GadgetBuilder::new(format!("seed_msb.{}", i), Unit::Seed);
            let a = b.tile("a", (0, 0, 0));
            b.input(a, South, lbl(&["seed", "col", &is, &(3 * l - 2).to_string()]));
            let bt = b.tile("b", (0, 1, 0));
            b.link(a, North, bt);
            let c = b.tile("c", (0, 2, 0));
            b.link(bt, North, c);
            let dt = b.tile("d", (1, 2, 0));
            b.link(c, East, dt);
            let e3 = b.tile("e3", (1, 1, 0));
            b.link(dt, South, e3);
            if v1 {
                let v = b.tile("v", (1, 1, 1));
                b.link(e3, Up, v);
                let h = b.tile("oh", (2, 1, 1));
                b.link(v, East, h);
            } else {
                let pl = b.tile("plug", (2, 1, 0));
                b.link(e3, East, pl);
            }
            b.output(e3, South, lbl(&["seed", "bit", &is, &(l - 1).to_string()]));
            out.push(b.finish());
        }
        // mid bits l-1 .. 2, descending the M lane
        for j in (2..=l.saturating_sub(1)).rev() {
            out.push(seed_bit(i, j, bit(enc(i), j) == 1, p));
        }
    }

    // left-edge marker of the most significant digit column is 1
    out.push(seed_bit(d, 1, true, p));
    // markers of the remaining columns are 0, each followed by a spacer onto
    // the next column east
    for i in (1..=d.saturating_sub(1)).rev() {
        out.push(seed_bit(i, 1, false, p));
    }
    for i in 1..=d.saturating_sub(1) {
        let mut b = GadgetBuilder::new(format!("seed_spacer.{}", i), Unit::Seed);
        let a = b.tile("a", (0, 0, 0));
        b.input(a, North, lbl(&["seed", "bit", &(i + 1).to_string(), "0"]));
        let bt = b.tile("b", (0, -1, 0));
        b.link(a, South, bt);
        let c = b.tile("c", (1, -1, 0));
        b.link(bt, East, c);
        let dt = b.tile("d", (2, -1, 0));
        b.link(c, East, dt);
        b.output(dt, North, lbl(&["seed", "col", &i.to_string(), "1"]));
        out.push(b.finish());
    }

    // Seed_End: down to the bottom row, east onto column 1's E lane, then the
    // first read-guess pair.
    {
        let mut b = GadgetBuilder::new("seed_end", Unit::Seed);
        let a = b.tile("a", (0, 0, 0));
        b.input(a, North, lbl(&["seed", "bit", "1", "0"]));
        let bt = b.tile("b", (0, -1, 0));
        b.link(a, South, bt);
        let c = b.tile("c", (1, -1, 0));
        b.link(bt, East, c);
        let pz0 = b.tile("pz0", (1, 0, 0));
        b.link(c, North, pz0);
        let pz1 = b.tile("pz1", (1, 0, 1));
        b.link(pz0, Up, pz1);
        b.output(pz0, North, lbl(&["inc", "read", "1"]));
        b.output(pz1, North, lbl(&["inc", "read", "0"]));
        out.push(b.finish());
    }

    let _ = l;
    out
}

fn seed_bit(i: u32, j: u32, one: bool, _p: &ConstructionParams) -> Gadget {
    let is = i.to_string();
    let mut b = GadgetBuilder::new(format!("seed_bit.{}.{}", i, j), Unit::Seed);
    let a = b.tile("a", (0, 0, 0));
    b.input(a, North, lbl(&["seed", "bit", &is, &j.to_string()]));
    let bt = b.tile("b", (0, -1, 0));
    b.link(a, South, bt);
    let c = b.tile("c", (0, -2, 0));
    b.link(bt, South, c);
    if one {
        let v = b.tile("v", (0, -2, 1));
        b.link(c, Up, v);
        let h = b.tile("oh", (1, -2, 1));
        b.link(v, East, h);
    } else {
        let pl = b.tile("plug", (1, -2, 0));
        b.link(c, East, pl);
    }
    b.output(c, South, lbl(&["seed", "bit", &is, &(j - 1).to_string()]));
    b.finish()
}

// ---------------------------------------------------------------------------
// Counter unit
// ---------------------------------------------------------------------------

/// All bit strings of length `len`, lexicographic.
fn bitstrings(len: u32) -> Vec<String> {
    (0..(1u64 << len)).map(|v| bin(v, len)).collect()
}

/// Read gadget verifying the leading (most recently guessed) bit of `w` and
/// offering the guess pair for the next bit.
fn counter_read(op: Op, w: &str) -> Gadget {
    let one = w.starts_with('1');
    let mut b = GadgetBuilder::new(format!("cread.{}.{}", op.name(), w), Unit::Counter);
    let input = lbl(&[op.name(), "read", w]);
    let pz0;
    if one {
        // pass under the overhang at z=0
        let a = b.tile("a", (0, 0, 0));
        b.input(a, South, input);
        let bt = b.tile("b", (0, 1, 0));
        b.link(a, North, bt);
        pz0 = b.tile("pz0", (0, 2, 0));
        b.link(bt, North, pz0);
    } else {
        // climb over the plug at z=1, then drop back to z=0
        let a = b.tile("a", (0, 0, 1));
        b.input(a, South, input);
        let bt = b.tile("b", (0, 1, 1));
        b.link(a, North, bt);
        let c = b.tile("c", (0, 1, 0));
        b.link(bt, Down, c);
        pz0 = b.tile("pz0", (0, 2, 0));
        b.link(c, North, pz0);
    }
    let pz1 = b.tile("pz1", (0, 2, 1));
    b.link(pz0, Up, pz1);
    b.output(pz0, North, lbl(&[op.name(), "read", &format!("1{}", w)]));
    b.output(pz1, North, lbl(&[op.name(), "read", &format!("0{}", w)]));
    b.finish()
}

/// Read gadget for the most significant bit: verifies it, crosses over the
/// column top at z=1 onto the M lane and starts the write chain.
fn counter_read_msb(op: Op, w: &str, write_entry: Glue) -> Gadget {
    let one = w.starts_with('1');
    let mut b = GadgetBuilder::new(format!("cread_msb.{}.{}", op.name(), w), Unit::Counter);
    let input = lbl(&[op.name(), "read", w]);
    let dt;
    if one {
        let a = b.tile("a", (0, 0, 0));
        b.input(a, South, input);
        let bt = b.tile("b", (0, 1, 0));
        b.link(a, North, bt);
        let c = b.tile("c", (0, 1, 1));
        b.link(bt, Up, c);
        dt = b.tile("d", (-1, 1, 1));
        b.link(c, West, dt);
    } else {
        let a = b.tile("a", (0, 0, 1));
        b.input(a, South, input);
        let bt = b.tile("b", (0, 1, 1));
        b.link(a, North, bt);
        // the z=0 cell under the crossing is patched by the shared d_fill tile
        b.output(bt, Down, g1(D_FILL.to_string()));
        dt = b.tile("d", (-1, 1, 1));
        b.link(bt, West, dt);
    }
    let f = b.tile("f", (-1, 2, 1));
    b.link(dt, North, f);
    let g2 = b.tile("g2", (-1, 3, 1));
    b.link(f, North, g2);
    let gt = b.tile("g", (-1, 3, 0));
    b.link(g2, Down, gt);
    b.output(gt, North, write_entry);
    b.finish()
}

/// Write gadget for one bit: three body tiles on the M lane plus the bit
/// element on the E lane. `tall` write a three-tile plug column (used only by
/// the roll-over all-zeros chain, whose bumps are never read).
fn counter_write(name: String, input: Glue, output: Glue, one: bool, tall: bool) -> Gadget {
    let mut b = GadgetBuilder::new(name, Unit::Counter);
    let a = b.tile("a", (0, 0, 0));
    b.input(a, South, input);
    let bt = b.tile("b", (0, 1, 0));
    b.link(a, North, bt);
    if one {
        let v = b.tile("v", (0, 1, 1));
        b.link(bt, Up, v);
        let h = b.tile("oh", (1, 1, 1));
        b.link(v, East, h);
    } else if tall {
        let p1 = b.tile("p1", (1, 1, 0));
        b.link(bt, East, p1);
        let p2 = b.tile("p2", (1, 2, 0));
        b.link(p1, North, p2);
        let p3 = b.tile("p3", (1, 3, 0));
        b.link(p2, North, p3);
    } else {
        let pl = b.tile("plug", (1, 1, 0));
        b.link(bt, East, pl);
    }
    let c = b.tile("c", (0, 2, 0));
    b.link(bt, North, c);
    b.output(c, North, output);
    b.finish()
}

/// Write gadget for the most significant bit: writes the bit, tops off the M
/// lane and crosses west onto the W lane, pointing the descent downward.
fn counter_write_msb(name: String, input: Glue, output: Glue, one: bool, tall: bool) -> Gadget {
    let mut b = GadgetBuilder::new(name, Unit::Counter);
    let a = b.tile("a", (0, 0, 0));
    b.input(a, South, input);
    let bt = b.tile("b", (0, 1, 0));
    b.link(a, North, bt);
    if one {
        let v = b.tile("v", (0, 1, 1));
        b.link(bt, Up, v);
        let h = b.tile("oh", (1, 1, 1));
        b.link(v, East, h);
    } else if tall {
        let p1 = b.tile("p1", (1, 1, 0));
        b.link(bt, East, p1);
        let p2 = b.tile("p2", (1, 2, 0));
        b.link(p1, North, p2);
    } else {
        let pl = b.tile("plug", (1, 1, 0));
        b.link(bt, East, pl);
    }
    let c = b.tile("c", (0, 2, 0));
    b.link(bt, North, c);
    let dt = b.tile("d", (-1, 2, 0));
    b.link(c, West, dt);
    b.output(dt, South, output);
    b.finish()
}

/// Instantiates every Counter-unit creation loop.
pub fn gen_counter_units(p: &ConstructionParams) -> Vec<Gadget> {
    let l = p.l;
    let m = p.m;
    let mut out = Vec::new();

    // read gadgets for all bits except the most significant one
    for i in 0..=(l - 2) {
        for u in bitstrings(i) {
            for op in [Op::Inc, Op::Copy] {
                out.push(counter_read(op, &format!("0{}", u)));
                out.push(counter_read(op, &format!("1{}", u)));
            }
        }
    }

    // most-significant-bit readers: copy columns rewrite the same digit
    for i in 0..=(2 * m - 1) {
        out.push(counter_read_msb(
            Op::Copy,
            &bin(i, l),
            lbl(&["copy", "write", &bin(i, l)]),
        ));
    }
    // increment columns, digit value 0..m-2: write the incremented digit and
    // switch the columns west to copy mode
    for i in 0..=(2 * m - 3) {
        out.push(counter_read_msb(
            Op::Inc,
            &bin(i, l),
            lbl(&["copy", "write", &bin(i + 2, l)]),
        ));
    }
    // the roll-over: an increment column holding m-1 (not the msd) writes all
    // zeros and carries the increment west
    out.push(counter_read_msb(
        Op::Inc,
        &bin(2 * m - 2, l),
        lbl(&["inc", "write_all_0s", "1"]),
    ));

    // all-zeros writers for the roll-over row (bits 1..l-1)
    for i in 1..=(l - 1) {
        out.push(counter_write(
            format!("cwrite0s.{}", i),
            lbl(&["inc", "write_all_0s", &i.to_string()]),
            lbl(&["inc", "write_all_0s", &(i + 1).to_string()]),
            false,
            true,
        ));
    }

    // left-edge-marker writers: writing 1 switches the chain to msd mode
    for u in bitstrings(l - 1) {
        out.push(counter_write(
            format!("cwrite.copy.{}0", u),
            lbl(&["copy", "write", &format!("{}0", u)]),
            lbl(&["copy", "write", &u]),
            false,
            false,
        ));
        out.push(counter_write(
            format!("cwrite.copy.{}1", u),
            lbl(&["copy", "write", &format!("{}1", u)]),
            lbl(&["msd", "write", &u]),
            true,
            false,
        ));
    }

    // mid-bit writers for copy and msd chains
    for i in 1..=l.saturating_sub(2) {
        for u in bitstrings(i) {
            for series in [Series::Copy, Series::Msd] {
                let sn = series.name();
                out.push(counter_write(
                    format!("cwrite.{}.{}0", sn, u),
                    lbl(&[sn, "write", &format!("{}0", u)]),
                    lbl(&[sn, "write", &u]),
                    false,
                    false,
                ));
                out.push(counter_write(
                    format!("cwrite.{}.{}1", sn, u),
                    lbl(&[sn, "write", &format!("{}1", u)]),
                    lbl(&[sn, "write", &u]),
                    true,
                    false,
                ));
            }
        }
    }

    // five most-significant-bit writer variants
    for series in [Series::Copy, Series::Msd] {
        let sn = series.name();
        for bitv in ["0", "1"] {
            out.push(counter_write_msb(
                format!("cwrite_msb.{}.{}", sn, bitv),
                lbl(&[sn, "write", bitv]),
                lbl(&[sn, "down_z_0", "1"]),
                bitv == "1",
                false,
            ));
        }
    }
    out.push(counter_write_msb(
        "cwrite_msb.0s".to_string(),
        lbl(&["inc", "write_all_0s", &l.to_string()]),
        lbl(&["inc", "down_z_0", "1"]),
        false,
        true,
    ));

    // z=0 descent chains for increment and copy columns
    for op in [Op::Inc, Op::Copy] {
        for i in 1..=(3 * l - 2) {
            out.push(down_column(
                format!("down.{}.{}", op.name(), i),
                lbl(&[op.name(), "down_z_0", &i.to_string()]),
                lbl(&[op.name(), "down_z_0", &(i + 1).to_string()]),
            ));
        }
    }
    // the msd column's descent is one shorter; it hands off to the Return Row
    for i in 1..=(3 * l - 3) {
        out.push(down_column(
            format!("down.msd.{}", i),
            lbl(&["msd", "down_z_0", &i.to_string()]),
            lbl(&["msd", "down_z_0", &(i + 1).to_string()]),
        ));
    }

    // z=1 return: start (tail to the lane bottom plus the z=1 head), the
    // three-tile descending links, and the end that crosses west and plants
    // the next column's guess pair
    for op in [Op::Inc, Op::Copy] {
        let on = op.name();
        {
            let mut b = GadgetBuilder::new(format!("retc_start.{}", on), Unit::Counter);
            let a = b.tile("a", (0, 0, 0));
            b.input(a, North, lbl(&[on, "down_z_0", &(3 * l - 1).to_string()]));
            let t1 = b.tile("t1", (0, -1, 0));
            b.link(a, South, t1);
            let h = b.tile("h", (0, -1, 1));
            b.link(t1, Up, h);
            b.output(h, South, lbl(&[on, "down_z_1", "1"]));
            out.push(b.finish());
        }
        for i in 1..=(l - 1) {
            let mut b = GadgetBuilder::new(format!("retc.{}.{}", on, i), Unit::Counter);
            let c1 = b.tile("c1", (0, 0, 1));
            b.input(c1, North, lbl(&[on, "down_z_1", &i.to_string()]));
            let c2 = b.tile("c2", (0, -1, 1));
            b.link(c1, South, c2);
            let c3 = b.tile("c3", (0, -2, 1));
            b.link(c2, South, c3);
            b.output(c3, South, lbl(&[on, "down_z_1", &(i + 1).to_string()]));
            out.push(b.finish());
        }
        {
            let mut b = GadgetBuilder::new(format!("retc_end.{}", on), Unit::Counter);
            let e1 = b.tile("e1", (0, 0, 1));
            b.input(e1, North, lbl(&[on, "down_z_1", &l.to_string()]));
            let e2 = b.tile("e2", (0, -1, 1));
            b.link(e1, South, e2);
            let e3 = b.tile("e3", (0, -2, 1));
            b.link(e2, South, e3);
            let e4 = b.tile("e4", (0, -3, 1));
            b.link(e3, South, e4);
            let pz1 = b.tile("pz1", (-1, -3, 1));
            b.link(e4, West, pz1);
            let pz0 = b.tile("pz0", (-1, -3, 0));
            b.link(pz1, Down, pz0);
            let e7 = b.tile("e7", (-1, -4, 0));
            b.link(pz0, South, e7);
            b.output(pz0, North, lbl(&[on, "read", "1"]));
            b.output(pz1, North, lbl(&[on, "read", "0"]));
            out.push(b.finish());
        }
    }

    // the shared z=0 patch tile under a crossing (bound from above at z=1)
    {
        let mut b = GadgetBuilder::new("dfill_u".to_string(), Unit::Counter);
        let t = b.tile("t", (0, 0, 0));
        b.input(t, Up, g1(D_FILL.to_string()));
        out.push(b.finish());
    }

    out
}

// ---------------------------------------------------------------------------
// Return Row unit
// ---------------------------------------------------------------------------

/// Instantiates the Return Row unit, which carries the frontier from the msd
/// column back to the east edge along the bottom row of the band just written
/// and starts the next incrementing counter row.
pub fn gen_return_row(p: &ConstructionParams) -> Vec<Gadget> {
    let l = p.l;
    let d = p.d;
    let mut out = Vec::new();
    if d == 1 {
        let mut b = GadgetBuilder::new("ret_single".to_string(), Unit::ReturnRow);
        let a = b.tile("a", (0, 0, 0));
        b.input(a, North, lbl(&["msd", "down_z_0", &(3 * l - 2).to_string()]));
        let t1 = b.tile("t1", (0, -1, 0));
        b.link(a, South, t1);
        let t2 = b.tile("t2", (0, -2, 0));
        b.link(t1, South, t2);
        let t3 = b.tile("t3", (0, -3, 0));
        b.link(t2, South, t3);
        let s1 = b.tile("s1", (1, -3, 0));
        b.link(t3, East, s1);
        let s2 = b.tile("s2", (2, -3, 0));
        b.link(s1, East, s2);
        let r1 = b.tile("r1", (2, -2, 0));
        b.link(s2, North, r1);
        let pz0 = b.tile("pz0", (2, -1, 0));
        b.link(r1, North, pz0);
        let pz1 = b.tile("pz1", (2, -1, 1));
        b.link(pz0, Up, pz1);
        b.output(pz0, North, lbl(&["inc", "read", "1"]));
        b.output(pz1, North, lbl(&["inc", "read", "0"]));
        out.push(b.finish());
        return out;
    }

    {
        let mut b = GadgetBuilder::new("ret_start".to_string(), Unit::ReturnRow);
        let a = b.tile("a", (0, 0, 0));
        b.input(a, North, lbl(&["msd", "down_z_0", &(3 * l - 2).to_string()]));
        let t1 = b.tile("t1", (0, -1, 0));
        b.link(a, South, t1);
        let t2 = b.tile("t2", (0, -2, 0));
        b.link(t1, South, t2);
        let t3 = b.tile("t3", (0, -3, 0));
        b.link(t2, South, t3);
        let s1 = b.tile("s1", (1, -3, 0));
        b.link(t3, East, s1);
        let s2 = b.tile("s2", (2, -3, 0));
        b.link(s1, East, s2);
        b.output(s2, East, lbl(&["return", "1"]));
        out.push(b.finish());
    }
    for i in 1..=d.saturating_sub(2) {
        let mut b = GadgetBuilder::new(format!("ret.{}", i), Unit::ReturnRow);
        let l1 = b.tile("l1", (0, 0, 0));
        b.input(l1, West, lbl(&["return", &i.to_string()]));
        let l2 = b.tile("l2", (1, 0, 0));
        b.link(l1, East, l2);
        let l3 = b.tile("l3", (2, 0, 0));
        b.link(l2, East, l3);
        b.output(l3, East, lbl(&["return", &(i + 1).to_string()]));
        out.push(b.finish());
    }
    {
        let mut b = GadgetBuilder::new("ret_end".to_string(), Unit::ReturnRow);
        let l1 = b.tile("l1", (0, 0, 0));
        b.input(l1, West, lbl(&["return", &(d - 1).to_string()]));
        let l2 = b.tile("l2", (1, 0, 0));
        b.link(l1, East, l2);
        let l3 = b.tile("l3", (2, 0, 0));
        b.link(l2, East, l3);
        let r1 = b.tile("r1", (2, 1, 0));
        b.link(l3, North, r1);
        let pz0 = b.tile("pz0", (2, 2, 0));
        b.link(r1, North, pz0);
        let pz1 = b.tile("pz1", (2, 2, 1));
        b.link(pz0, Up, pz1);
        b.output(pz0, North, lbl(&["inc", "read", "1"]));
        b.output(pz1, North, lbl(&["inc", "read", "0"]));
        out.push(b.finish());
    }
    out
}

// ---------------------------------------------------------------------------
// Roof unit
// ---------------------------------------------------------------------------

/// Instantiates the Roof unit: the chimney column that takes over when the
/// msd increments past m-1, filler arms patching the last counter row, the
/// cap, the shingles and the shared vertical fill tile.
pub fn gen_roof(p: &ConstructionParams) -> Vec<Gadget> {
    let l = p.l;
    let d = p.d;
    let m = p.m;
    let r = p.r;
    let c = p.c;
    let mut out = Vec::new();

    out.push(up_column(
        "roof_up.1".to_string(),
        Unit::Roof,
        lbl(&["inc", "read", &bin(2 * m - 1, l)]),
        lbl(&["roof", "col", "2"]),
    ));
    out.push(up_column(
        "roof_up.2".to_string(),
        Unit::Roof,
        lbl(&["roof", "col", "2"]),
        lbl(&["roof", "col", "3"]),
    ));

    // chimney segments spanning the last counter band, each offering a
    // westward... (eastward) filler arm; only the lowest port can grow
    for i in 3..=(l + 2) {
        let mut b = GadgetBuilder::new(format!("chimney.{}", i), Unit::Roof);
        let c1 = b.tile("c1", (0, 0, 0));
        b.input(c1, South, lbl(&["roof", "col", &i.to_string()]));
        b.output(c1, East, lbl(&["roof", "filler", "1"]));
        let c2 = b.tile("c2", (0, 1, 0));
        b.link(c1, North, c2);
        let c3 = b.tile("c3", (0, 2, 0));
        b.link(c2, North, c3);
        b.output(c3, North, lbl(&["roof", "col", &(i + 1).to_string()]));
        out.push(b.finish());
    }

    // plain column through the top of the band and the r extra rows
    for i in (l + 3)..=(l + r + 3) {
        out.push(up_column(
            format!("roof_up.{}", i),
            Unit::Roof,
            lbl(&["roof", "col", &i.to_string()]),
            lbl(&["roof", "col", &(i + 1).to_string()]),
        ));
    }

    {
        let mut b = GadgetBuilder::new("roof_cap".to_string(), Unit::Roof);
        let t = b.tile("t", (0, 0, 0));
        b.input(t, South, lbl(&["roof", "col", &(l + r + 4).to_string()]));
        b.output(t, East, lbl(&["roof", "r_shingle", "1"]));
        b.output(t, West, lbl(&["roof", "l_shingle", "1"]));
        out.push(b.finish());
    }

    // filler arms along the bottom row of the last counter band, one link per
    // digit column east of the chimney, with risers where the guess pair and
    // its plinth would have gone
    for t in 1..=d.saturating_sub(1) {
        let mut b = GadgetBuilder::new(format!("roof_filler.{}", t), Unit::Roof);
        let l1 = b.tile("l1", (0, 0, 0));
        b.input(l1, West, lbl(&["roof", "filler", &t.to_string()]));
        let l2 = b.tile("l2", (1, 0, 0));
        b.link(l1, East, l2);
        let l3 = b.tile("l3", (2, 0, 0));
        b.link(l2, East, l3);
        let re1 = b.tile("re1", (2, 1, 0));
        b.link(l3, North, re1);
        let re2 = b.tile("re2", (2, 2, 0));
        b.link(re1, North, re2);
        b.output(l3, East, lbl(&["roof", "filler", &(t + 1).to_string()]));
        out.push(b.finish());
    }

    for t in 1..=(c + 2) {
        let mut b = GadgetBuilder::new(format!("lsh.{}", t), Unit::Roof);
        let tt = b.tile("t", (0, 0, 0));
        b.input(tt, East, lbl(&["roof", "l_shingle", &t.to_string()]));
        b.output(tt, West, lbl(&["roof", "l_shingle", &(t + 1).to_string()]));
        b.output(tt, South, g1(D_FILL.to_string()));
        out.push(b.finish());
    }
    if r > 0 {
        for t in 1..=(3 * d - 3) {
            let mut b = GadgetBuilder::new(format!("rsh.{}", t), Unit::Roof);
            let tt = b.tile("t", (0, 0, 0));
            b.input(tt, West, lbl(&["roof", "r_shingle", &t.to_string()]));
            b.output(tt, East, lbl(&["roof", "r_shingle", &(t + 1).to_string()]));
            b.output(tt, South, g1(D_FILL.to_string()));
            out.push(b.finish());
        }
    }

    // the shared vertical fill tile: hangs from any south-facing d_fill glue
    // and chains downward until it lands on existing structure
    {
        let mut b = GadgetBuilder::new("dfill_n".to_string(), Unit::Roof);
        let t = b.tile("t", (0, 0, 0));
        b.input(t, North, g1(D_FILL.to_string()));
        b.output(t, South, g1(D_FILL.to_string()));
        out.push(b.finish());
    }

    out
}
