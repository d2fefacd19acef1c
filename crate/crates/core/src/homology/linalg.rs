//! Row-reduction rank over prime fields.
//!
//! Rows are reduced against a pivot table keyed by each stored row's lowest
//! nonzero column. GF(2) rows are packed 64 columns per word; odd primes use
//! one word per entry.

/// Sparse row: `(column, coefficient)` pairs, coefficients in `{-1, +1}`.
pub type SignedRow = Vec<(usize, i8)>;

pub fn rank_gf2(rows: &[SignedRow], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    let mut row = vec![0u64; words];
    for r in rows {
        row.iter_mut().for_each(|w| *w = 0);
        for &(c, _) in r {
            row[c / 64] ^= 1 << (c % 64);
        }
        let mut first_word = 0;
        loop {
            while first_word < words && row[first_word] == 0 {
                first_word += 1;
            }
            if first_word == words {
                break;
            }
            let c = first_word * 64 + row[first_word].trailing_zeros() as usize;
            match &pivots[c] {
                Some(p) => {
                    for (x, y) in row[first_word..].iter_mut().zip(&p[first_word..]) {
                        *x ^= y;
                    }
                }
                None => {
                    pivots[c] = Some(row.clone());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank over GF(p) for an odd prime `p <= 2^31`.
pub fn rank_mod_p(rows: &[SignedRow], cols: usize, p: u64) -> usize {
    debug_assert!(p > 2);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    let mut row = vec![0u64; cols];
    for r in rows {
        row.iter_mut().for_each(|x| *x = 0);
        for &(c, s) in r {
            let v = if s >= 0 { s as u64 } else { p - (-s) as u64 };
            row[c] = (row[c] + v) % p;
        }
        let mut lead = 0;
        loop {
            while lead < cols && row[lead] == 0 {
                lead += 1;
            }
            if lead == cols {
                break;
            }
            match &pivots[lead] {
                Some(piv) => {
                    // pivot rows are normalized to a leading 1
                    let factor = row[lead];
                    for (x, &y) in row[lead..].iter_mut().zip(&piv[lead..]) {
                        *x = (*x + p - factor * y % p) % p;
                    }
                }
                None => {
                    let inv = inv_mod(row[lead], p);
                    let mut normalized = row.clone();
                    for x in normalized[lead..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    pivots[lead] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
