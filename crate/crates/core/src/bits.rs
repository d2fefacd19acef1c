//! Small helpers for `u64` vertex sets.

/// Largest vertex count a [`Graph`](crate::Graph) can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub const fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Ones {}

#[inline]
pub fn ones(mask: u64) -> Ones {
    Ones(mask)
}

pub fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u64 {
    vertices.into_iter().fold(0, |m, v| m | bit(v))
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}
