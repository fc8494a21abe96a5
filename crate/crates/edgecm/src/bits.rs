//! Small-vertex-set helpers. Vertex sets are `u32` bitmasks, which caps
//! graphs at 32 vertices; the enumeration bounds elsewhere are stricter.

/// Bitmask vertex set.
pub type VertexSet = u32;

/// Mask with a single bit `i` set.
#[inline]
pub fn bit(i: usize) -> VertexSet {
    1u32 << i
}

/// Mask with bits `0..n` set.
#[inline]
pub fn full(n: usize) -> VertexSet {
    if n == 0 {
        0
    } else if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterate over the indices of set bits, ascending.
#[inline]
pub fn iter(mask: VertexSet) -> BitIter {
    BitIter(mask)
}

/// Members of `mask` as a sorted `Vec`.
pub fn to_vec(mask: VertexSet) -> Vec<usize> {
    iter(mask).collect()
}

/// Number of set bits.
#[inline]
pub fn count(mask: VertexSet) -> usize {
    mask.count_ones() as usize
}

pub struct BitIter(VertexSet);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}
