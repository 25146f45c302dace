//! Counter parameters and the small encoding helpers used by every gadget
//! creation loop.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("width too small for one digit column")]
    WidthTooSmall,
    #[error("height below construction minimum")]
    HeightTooSmall,
    #[error("label token contains the reserved separator: {0:?}")]
    ReservedSeparator(String),
    #[error("empty label reserved for the null glue")]
    EmptyLabel,
}

/// The tuple (k, N, d, m, l, s, c, r) that drives tile-set generation.
///
/// d digit columns of 3 tiles each count in base m; each digit is encoded as
/// l bits (its value in binary plus a low "left edge" bit); the counter
/// starts at s; c extra columns and r extra rows are filled in outside the
/// counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub k: u32,
    pub n_height: u64,
    pub d: u32,
    pub m: u64,
    pub l: u32,
    pub s: u64,
    pub c: u32,
    pub r: u32,
}

impl ConstructionParams {
    /// Height of one counter row in tiles.
    pub fn row_pitch(&self) -> u64 {
        3 * self.l as u64 + 2
    }

    /// Height of the seed unit in tiles.
    pub fn seed_height(&self) -> u64 {
        3 * self.l as u64 + 1
    }

    /// Number of counter rows: the counter runs from s up to and including
    /// the roll-over of m^d - 1.
    pub fn counter_rows(&self) -> u64 {
        pow_u64(self.m, self.d) - self.s
    }

    /// Height of seed plus all counter rows; N minus this is r.
    pub fn counter_height(&self) -> u64 {
        self.seed_height() + self.counter_rows() * self.row_pitch()
    }
}

pub fn pow_u64(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("m^d overflow")
}

/// Computes the construction parameters for a k x N rectangle.
pub fn compute_params(k: u32, n_height: u64) -> Result<ConstructionParams, ParamError> {
    if k < 3 {
        return Err(ParamError::WidthTooSmall);
    }
    if n_height < 49 {
        return Err(ParamError::HeightTooSmall);
    }
    let d = k / 3;
    // m = ceil((N/5)^(1/d)): the least m with 5 * m^d >= N.
    let mut m: u64 = 1;
    while 5u64.checked_mul(pow_u64(m, d)).map_or(true, |v| v < n_height) {
        m += 1;
    }
    assert!(m >= 2, "counter base must exceed 1 for N >= 49");
    // l = ceil(log2 m) + 1: bits per digit value plus the left-edge bit.
    let mut l: u32 = 0;
    while (1u64 << l) < m {
        l += 1;
    }
    let l = l + 1;
    let pitch = 3 * l as u64 + 2;
    let rows = (n_height - 3 * l as u64 - 1) / pitch;
    let md = pow_u64(m, d);
    assert!(rows <= md, "counter cannot reach height N (max-height lemma violated)");
    assert!(rows >= 1, "counter too short (min-height lemma violated)");
    let s = md - rows;
    let c = k % 3;
    let r = ((n_height + 1) % pitch) as u32;
    let p = ConstructionParams { k, n_height, d, m, l, s, c, r };
    debug_assert_eq!(p.counter_height() + r as u64, n_height);
    Ok(p)
}

/// Binary representation of `a`, truncated or zero-padded on the left to
/// length `b`. `b = 0` yields the empty string.
pub fn bin(a: u64, b: u32) -> String {
    (0..b)
        .rev()
        .map(|i| if (a >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// The i-th base-`base` digit of `a`, 1-indexed from the right.
pub fn digit(a: u64, base: u64, i: u32) -> u64 {
    (a / pow_u64(base, i - 1)) % base
}

/// Bit `j` (1-indexed from the least significant) of `a`.
pub fn bit(a: u64, j: u32) -> u8 {
    ((a >> (j - 1)) & 1) as u8
}

/// Canonical injective comma-joined encoding of a token list.
pub fn encode_label(tokens: &[&str]) -> Result<String, ParamError> {
    if tokens.is_empty() {
        return Err(ParamError::EmptyLabel);
    }
    for t in tokens {
        if t.contains(',') {
            return Err(ParamError::ReservedSeparator((*t).to_string()));
        }
    }
    Ok(tokens.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_parameter_examples() {
        let p = compute_params(11, 56).unwrap();
        assert_eq!((p.d, p.m, p.l, p.s, p.c, p.r), (3, 3, 3, 23, 2, 2));

        let p = compute_params(3, 49).unwrap();
        assert_eq!((p.d, p.m, p.l, p.s, p.c, p.r), (1, 10, 5, 9, 0, 16));

        let p = compute_params(12, 500).unwrap();
        assert_eq!((p.d, p.m, p.l, p.s, p.c, p.r), (4, 4, 3, 212, 0, 6));
    }

    #[test]
    fn rejects_small_inputs() {
        assert_eq!(compute_params(2, 100).unwrap_err(), ParamError::WidthTooSmall);
        assert_eq!(compute_params(3, 48).unwrap_err(), ParamError::HeightTooSmall);
    }

    #[test]
    fn bin_examples() {
        assert_eq!(bin(5, 4), "0101");
        assert_eq!(bin(5, 2), "01");
        assert_eq!(bin(0, 3), "000");
        assert_eq!(bin(7, 0), "");
    }

    #[test]
    fn digit_examples() {
        assert_eq!(digit(23, 3, 1), 2);
        assert_eq!(digit(23, 3, 2), 1);
        assert_eq!(digit(23, 3, 3), 2);
        assert_eq!(digit(0, 10, 5), 0);
        assert_eq!(digit(7, 2, 3), 1);
    }

    #[test]
    fn encode_label_examples() {
        assert_eq!(encode_label(&["inc", "read", "1"]).unwrap(), "inc,read,1");
        assert_eq!(encode_label(&["copy", "write", "0110"]).unwrap(), "copy,write,0110");
        assert!(encode_label(&[]).is_err());
        assert!(encode_label(&["a,b"]).is_err());
    }

    #[test]
    fn height_accounting_sweep() {
        for k in 3..=30 {
            for n in [49u64, 50, 77, 99, 120, 500, 1234, 5000] {
                let p = compute_params(k, n).unwrap();
                // independent straight-line recomputation of each parameter
                let d = k / 3;
                let mut m = 1u64;
                while 5 * m.pow(d) < n {
                    m += 1;
                }
                let mut t = 0u32;
                while (1u64 << t) < m {
                    t += 1;
                }
                let l = t + 1;
                let s = m.pow(d) - (n - 3 * l as u64 - 1) / (3 * l as u64 + 2);
                assert_eq!((p.d, p.m, p.l, p.s), (d, m, l, s), "k={} n={}", k, n);
                assert_eq!(p.c, k % 3);
                assert_eq!(p.r as u64, (n + 1) % (3 * l as u64 + 2));
                assert!(p.s < m.pow(d));
                assert!(p.counter_height() <= n);
                assert_eq!(p.counter_height() + p.r as u64, n);
                assert!(6 * l as u64 + 3 <= n);
                assert!(n <= m.pow(d) * (3 * l as u64 + 2) + 3 * l as u64 + 1);
            }
        }
    }
}
