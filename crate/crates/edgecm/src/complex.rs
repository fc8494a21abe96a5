//! Simplicial complexes on small ground sets, stored as the full face list.
//!
//! Faces are bitmasks over the ground set. The face family is downward
//! closed and contains the empty face whenever it is nonempty; the void
//! complex (no faces at all) is representable and distinct from `{∅}`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits;

pub type Face = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum ComplexError {
    #[error("ground set of {ground} vertices exceeds the bound {bound}")]
    GroundBoundExceeded { ground: usize, bound: usize },
    #[error("face family exceeds the bound of {bound} faces")]
    FaceBoundExceeded { bound: usize },
}

/// All faces of a simplicial complex, grouped by dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: usize,
    /// `by_size[k]` holds the faces with `k` vertices, sorted.
    by_size: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// The void complex: no faces.
    pub fn void(ground: usize) -> Self {
        SimplicialComplex { ground, by_size: Vec::new() }
    }

    /// The full simplex on the ground set.
    pub fn full_simplex(ground: usize) -> Self {
        assert!(ground <= 24, "ground set too large for explicit faces");
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); ground + 1];
        for s in 0..(1u64 << ground) {
            by_size[bits::count(s as Face)].push(s as Face);
        }
        for level in by_size.iter_mut() {
            level.sort_unstable();
        }
        SimplicialComplex { ground, by_size }
    }

    /// Complex whose faces are the subsets containing none of the given
    /// inclusion-minimal non-faces. `max_faces` caps the enumeration.
    pub fn from_minimal_non_faces(
        ground: usize,
        non_faces: &[Face],
        max_faces: usize,
    ) -> Result<Self, ComplexError> {
        if ground > 24 {
            return Err(ComplexError::GroundBoundExceeded { ground, bound: 24 });
        }
        if non_faces.contains(&0) {
            // The empty set is a non-face: nothing survives.
            return Ok(SimplicialComplex::void(ground));
        }
        let mut by_size: Vec<Vec<Face>> = vec![vec![0]];
        let mut total = 1usize;
        loop {
            let last = by_size.last().expect("at least the empty face");
            if last.is_empty() {
                by_size.pop();
                break;
            }
            let prev: HashSet<Face> = last.iter().copied().collect();
            let mut next: Vec<Face> = Vec::new();
            for &f in last {
                let top = 32 - f.leading_zeros() as usize;
                for v in if f == 0 { 0 } else { top }..ground {
                    let g = f | bits::bit(v);
                    // Downward closure: all subfaces of g of one size less
                    // must be faces; checking them prunes early, but the
                    // minimal-non-face test alone is what defines the family.
                    // Subset test, not membership: any non-face inside g?
                    #[allow(clippy::manual_contains)]
                    if non_faces.iter().any(|&nf| nf & g == nf) {
                        continue;
                    }
                    if bits::iter(g).all(|w| f == g & !bits::bit(w) || prev.contains(&(g & !bits::bit(w)))) {
                        next.push(g);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            total += next.len();
            if total > max_faces {
                return Err(ComplexError::FaceBoundExceeded { bound: max_faces });
            }
            by_size.push(next);
        }
        Ok(SimplicialComplex { ground, by_size })
    }

    /// Build from an explicit face list; the downward closure is taken.
    pub fn from_faces(ground: usize, faces: &[Face]) -> Self {
        let mut all: HashSet<Face> = HashSet::new();
        for &f in faces {
            // Every subset of a face is a face.
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); 33];
        for f in all {
            by_size[bits::count(f)].push(f);
        }
        while by_size.last().is_some_and(|l| l.is_empty()) {
            by_size.pop();
        }
        for level in by_size.iter_mut() {
            level.sort_unstable();
        }
        SimplicialComplex { ground, by_size }
    }

    pub fn ground_count(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }

    /// Dimension: largest face size minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        if self.is_void() {
            None
        } else {
            Some(self.by_size.len() as isize - 2)
        }
    }

    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Faces with `k` vertices (dimension `k - 1`), sorted.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.by_size.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces_of_size(bits::count(f)).binary_search(&f).is_ok()
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for f in self.faces() {
            let extendable = (0..self.ground)
                .any(|v| f & bits::bit(v) == 0 && self.contains(f | bits::bit(v)));
            if !extendable {
                out.push(f);
            }
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets
            .windows(2)
            .all(|w| bits::count(w[0]) == bits::count(w[1]))
    }

    /// A vertex contained in every facet, if any; the complex is then a cone
    /// with that apex and all its reduced homology vanishes.
    pub fn cone_apex(&self) -> Option<usize> {
        let facets = self.facets();
        if facets.is_empty() {
            return None;
        }
        let common = facets.iter().fold(!0u32, |a, &f| a & f);
        bits::iter(common).next()
    }

    /// The link of a face: `{ g : g ∩ f = ∅, g ∪ f a face }`.
    pub fn link(&self, f: Face) -> SimplicialComplex {
        debug_assert!(self.contains(f));
        let k = bits::count(f);
        let mut by_size: Vec<Vec<Face>> = Vec::new();
        for size in k..self.by_size.len() {
            let mut level = Vec::new();
            for &h in &self.by_size[size] {
                if h & f == f {
                    level.push(h & !f);
                }
            }
            level.sort_unstable();
            by_size.push(level);
        }
        while by_size.last().is_some_and(|l| l.is_empty()) {
            by_size.pop();
        }
        SimplicialComplex { ground: self.ground, by_size }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_simplex_faces() {
        let c = SimplicialComplex::full_simplex(3);
        assert_eq!(c.face_count(), 8);
        assert_eq!(c.dim(), Some(2));
        assert!(c.is_pure());
        assert_eq!(c.cone_apex(), Some(0));
    }

    #[test]
    fn empty_and_void() {
        let v = SimplicialComplex::void(3);
        assert!(v.is_void());
        assert_eq!(v.dim(), None);
        let irrelevant = SimplicialComplex::from_faces(3, &[0]);
        assert_eq!(irrelevant.dim(), Some(-1));
        assert_eq!(irrelevant.face_count(), 1);
    }

    #[test]
    fn non_faces_of_an_edge() {
        // One minimal non-face {0, 1} on two vertices: the two points.
        let c = SimplicialComplex::from_minimal_non_faces(2, &[0b11], 100).unwrap();
        assert_eq!(c.face_count(), 3);
        assert_eq!(c.dim(), Some(0));
        assert!(!c.is_pure() || c.facets().len() == 2);
        assert_eq!(c.facets(), vec![0b01, 0b10]);
    }

    #[test]
    fn links() {
        // Hollow triangle: edges only.
        let c = SimplicialComplex::from_minimal_non_faces(3, &[0b111], 100).unwrap();
        assert_eq!(c.dim(), Some(1));
        let lk = c.link(0b001);
        assert_eq!(lk.dim(), Some(0));
        assert_eq!(lk.faces_of_size(1), &[0b010, 0b100]);
        let lk_edge = c.link(0b011);
        assert_eq!(lk_edge.dim(), Some(-1));
    }

    #[test]
    fn face_bound_respected() {
        assert!(matches!(
            SimplicialComplex::from_minimal_non_faces(10, &[], 5),
            Err(ComplexError::FaceBoundExceeded { .. })
        ));
    }

    #[test]
    fn downward_closure_from_faces() {
        let c = SimplicialComplex::from_faces(4, &[0b0111, 0b1100]);
        assert!(c.contains(0b0011));
        assert!(c.contains(0b1000));
        assert!(c.contains(0));
        assert!(!c.contains(0b1111));
        assert!(!c.is_pure());
    }
}
