//! Exact monomial-ideal arithmetic: minimal generators, membership, colon,
//! sum, intersection, radical, irreducible decomposition, associated primes,
//! height, and unmixedness.
//!
//! Exponents are 64-bit and overflow is a hard error: a silent wraparound
//! would corrupt decompositions, so arithmetic asserts instead.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum IdealError {
    #[error("the zero ideal has no decomposition")]
    ZeroIdeal,
    #[error("the unit ideal has no decomposition")]
    UnitIdeal,
    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
}

/// A monomial as a sparse exponent vector. No zero exponents are stored;
/// the unit monomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(u32, u64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(i: usize) -> Self {
        Monomial { exps: vec![(i as u32, 1)] }
    }

    pub fn power(i: usize, e: u64) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(i as u32, e)] }
        }
    }

    /// Build from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(pairs: &[(usize, u64)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::power(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u64)] {
        &self.exps
    }

    pub fn degree_of(&self, var: usize) -> u64 {
        self.exps
            .iter()
            .find(|(v, _)| *v as usize == var)
            .map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().fold(0u64, |acc, (_, e)| {
            acc.checked_add(*e).expect("monomial degree overflow")
        })
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().map(|(v, _)| *v as usize).collect()
    }

    /// `Some((var, exp))` when the monomial is a positive power of a single
    /// variable.
    pub fn as_pure_power(&self) -> Option<(usize, u64)> {
        match self.exps.as_slice() {
            [(v, e)] => Some((*v as usize, *e)),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.degree_of(v as usize) >= e)
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u64, u64) -> u64) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let (v, e) = match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        i += 1;
                        (va, f(ea, 0))
                    } else if vb < va {
                        j += 1;
                        (vb, f(0, eb))
                    } else {
                        i += 1;
                        j += 1;
                        (va, f(ea, eb))
                    }
                }
                (Some(&(va, ea)), None) => {
                    i += 1;
                    (va, f(ea, 0))
                }
                (None, Some(&(vb, eb))) => {
                    j += 1;
                    (vb, f(0, eb))
                }
                (None, None) => unreachable!(),
            };
            if e > 0 {
                exps.push((v, e));
            }
        }
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.checked_add(b).expect("exponent overflow"))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u64::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u64::min)
    }

    /// `self / gcd(self, other)`, the building block of colon ideals.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        let g = self.gcd(other);
        self.merge(&g, |a, b| a - b)
    }

    /// All exponents flattened to 1.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// Render with a variable naming function, e.g. `x*y^2`.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    name(v as usize)
                } else {
                    format!("{}^{}", name(v as usize), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A monomial ideal held as its unique minimal generating set: an antichain
/// under divisibility, kept in a deterministic sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize a generator list: drop duplicates and anything divisible
    /// by another generator.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            if let Some(&(v, _)) = g.exponents().last() {
                assert!((v as usize) < ambient, "generator variable outside ambient ring");
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let kept: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        // A unit generator swallows everything else.
        let gens = if kept.iter().any(|g| g.is_one()) {
            vec![Monomial::one()]
        } else {
            kept
        };
        MonomialIdeal { ambient, gens }
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one()] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `self : f = { g / gcd(g, f) }`, minimalized.
    pub fn colon(&self, f: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.ambient,
            self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect(),
        )
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal::new(self.ambient, gens))
    }

    /// Add a single monomial generator.
    pub fn plus(&self, m: &Monomial) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        MonomialIdeal::new(self.ambient, gens)
    }

    /// Intersection via pairwise lcm of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::new(self.ambient, gens))
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ambient, self.gens.iter().map(Monomial::radical).collect())
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.ambient != other.ambient {
            Err(IdealError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        } else {
            Ok(())
        }
    }

    fn check_proper_nonzero(&self) -> Result<(), IdealError> {
        if self.is_zero() {
            Err(IdealError::ZeroIdeal)
        } else if self.is_unit() {
            Err(IdealError::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Irredundant irreducible decomposition.
    ///
    /// Splitting: pick the first generator that is not a pure power and its
    /// lowest variable `x` with exponent `a`, and recurse on
    /// `I = (I + (x^a)) ∩ (I + (g / x^a))`. Leaves are generated by pure
    /// powers, i.e. irreducible. Redundant components are exactly those
    /// containing another component, so pairwise containment filtering after
    /// deduplication yields the irredundant decomposition.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>, IdealError> {
        self.check_proper_nonzero()?;
        let mut components = Vec::new();
        self.decompose_into(&mut components);
        components.sort();
        components.dedup();
        let irredundant: Vec<IrreducibleComponent> = components
            .iter()
            .filter(|q| !components.iter().any(|q2| q2 != *q && q2.contained_in(q)))
            .cloned()
            .collect();
        debug_assert_eq!(
            irredundant
                .iter()
                .map(|c| c.as_ideal(self.ambient))
                .reduce(|a, b| a.intersect(&b).expect("same ambient"))
                .as_ref(),
            Some(self),
            "decomposition must intersect back to the input"
        );
        Ok(irredundant)
    }

    fn decompose_into(&self, out: &mut Vec<IrreducibleComponent>) {
        let split = self
            .gens
            .iter()
            .find(|g| g.as_pure_power().is_none())
            .cloned();
        match split {
            None => {
                // All generators are pure powers of distinct variables (the
                // antichain property forces distinctness).
                out.push(IrreducibleComponent {
                    entries: self
                        .gens
                        .iter()
                        .map(|g| g.as_pure_power().expect("pure power"))
                        .map(|(v, e)| (v as u32, e))
                        .collect(),
                });
            }
            Some(g) => {
                let &(v, e) = g.exponents().first().expect("non-unit generator");
                let pure = Monomial::power(v as usize, e);
                let rest = g.quotient_by_gcd(&pure);
                self.plus(&pure).decompose_into(out);
                self.plus(&rest).decompose_into(out);
            }
        }
    }

    /// Associated primes as sorted variable lists: the distinct radicals of
    /// the irredundant irreducible components.
    pub fn associated_primes(&self) -> Result<Vec<Vec<usize>>, IdealError> {
        let mut primes: Vec<Vec<usize>> = self
            .irreducible_decomposition()?
            .iter()
            .map(|c| c.variables())
            .collect();
        primes.sort();
        primes.dedup();
        Ok(primes)
    }

    /// Height: the least cardinality of an associated prime.
    pub fn height(&self) -> Result<usize, IdealError> {
        Ok(self
            .associated_primes()?
            .iter()
            .map(|p| p.len())
            .min()
            .expect("proper nonzero ideal has a prime"))
    }

    /// Krull dimension of the quotient ring, `ambient - height`.
    pub fn quotient_dimension(&self) -> Result<usize, IdealError> {
        Ok(self.ambient - self.height()?)
    }

    /// All associated primes share one height.
    pub fn is_unmixed_ideal(&self) -> Result<bool, IdealError> {
        let primes = self.associated_primes()?;
        Ok(primes.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        format!(
            "({})",
            self.gens
                .iter()
                .map(|g| g.render(name))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// An irreducible monomial ideal, generated by pure powers of distinct
/// variables; entries map each variable to its exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    entries: Vec<(u32, u64)>,
}

impl IrreducibleComponent {
    pub fn from_entries(mut entries: Vec<(u32, u64)>) -> Self {
        entries.sort();
        assert!(entries.iter().all(|&(_, e)| e > 0));
        IrreducibleComponent { entries }
    }

    pub fn entries(&self) -> &[(u32, u64)] {
        &self.entries
    }

    /// The variables of the radical prime, ascending.
    pub fn variables(&self) -> Vec<usize> {
        self.entries.iter().map(|&(v, _)| v as usize).collect()
    }

    pub fn as_ideal(&self, ambient: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            ambient,
            self.entries
                .iter()
                .map(|&(v, e)| Monomial::power(v as usize, e))
                .collect(),
        )
    }

    /// Ideal containment `self ⊆ other`: every pure power of `self` is a
    /// multiple of a pure power of `other`.
    pub fn contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.entries
            .iter()
            .all(|&(v, e)| other.entries.iter().any(|&(w, f)| w == v && f <= e))
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        format!(
            "({})",
            self.entries
                .iter()
                .map(|&(v, e)| Monomial::power(v as usize, e).render(name))
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u64)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    // Variables 0, 1, 2, 3, 4 read as x, y, z, u, v below.

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 1)]), m(&[(0, 1), (1, 2)])]);
        assert_eq!(i.generators(), &[m(&[(0, 1), (1, 1)])]);
        assert!(MonomialIdeal::new(2, vec![]).is_zero());
        let kept = MonomialIdeal::new(2, vec![m(&[(0, 2)]), m(&[(0, 1), (1, 1)]), m(&[(1, 3)])]);
        assert_eq!(kept.generators().len(), 3);
    }

    #[test]
    fn membership() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 2)])]);
        assert!(i.contains(&m(&[(0, 2), (1, 2)])));
        assert!(!i.contains(&m(&[(0, 1), (1, 1)])));
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::one()));
    }

    #[test]
    fn colon_by_one_is_identity() {
        let i = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 2)]), m(&[(1, 1), (2, 2)])]);
        assert_eq!(i.colon(&Monomial::one()), i);
    }

    #[test]
    fn colon_on_five_cycle_with_sink() {
        // Cycle x y z u v (0..4), arcs (y,x), (v,x), (u,z), plus (y,z), (u,v);
        // weights w(x) = 3, w(z) = 2. Coloning the edge ideal by x^3 leaves
        // (y, v, u*z^2).
        let wx = 3u64;
        let wz = 2u64;
        let gens = vec![
            m(&[(1, 1), (0, wx)]), // y x^3
            m(&[(4, 1), (0, wx)]), // v x^3
            m(&[(3, 1), (2, wz)]), // u z^2
            m(&[(1, 1), (2, wz)]), // y z^2  (edge yz oriented (y,z))
            m(&[(3, 1), (4, 2)]),  // u v^2  (edge uv oriented (u,v))
        ];
        let i = MonomialIdeal::new(5, gens);
        let q = i.colon(&Monomial::power(0, wx));
        assert_eq!(
            q,
            MonomialIdeal::new(5, vec![Monomial::var(1), Monomial::var(4), m(&[(3, 1), (2, wz)])])
        );
    }

    #[test]
    fn colon_on_five_cycle_weight_one_vertex() {
        // w(x) = 1 and arcs (y,x), (x,v), (u,v); edges yz, zu oriented
        // (y,z), (z,u). Colon by x gives (y, v^p, m(zu)).
        let p = 2u64;
        let wz = 3u64;
        let gens = vec![
            m(&[(1, 1), (0, 1)]),  // y x
            m(&[(0, 1), (4, p)]),  // x v^p
            m(&[(3, 1), (4, p)]),  // u v^p
            m(&[(1, 1), (2, wz)]), // y z^3
            m(&[(2, 1), (3, 2)]),  // z u^2
        ];
        let i = MonomialIdeal::new(5, gens);
        let q = i.colon(&Monomial::var(0));
        assert_eq!(
            q,
            MonomialIdeal::new(
                5,
                vec![Monomial::var(1), Monomial::power(4, p), m(&[(2, 1), (3, 2)])]
            )
        );
    }

    #[test]
    fn sum_and_ambient_mismatch() {
        let xy = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 1)])]);
        let x = MonomialIdeal::new(2, vec![Monomial::var(0)]);
        assert_eq!(xy.sum(&x).unwrap(), x);
        assert_eq!(x.sum(&MonomialIdeal::zero(2)).unwrap(), x);
        assert!(matches!(
            x.sum(&MonomialIdeal::zero(3)),
            Err(IdealError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn radical_examples() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 3)])]);
        assert_eq!(i.radical(), MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 1)])]));
        let j = MonomialIdeal::new(2, vec![m(&[(0, 2)]), m(&[(0, 1), (1, 1)])]);
        assert_eq!(j.radical(), MonomialIdeal::new(2, vec![Monomial::var(0)]));
    }

    #[test]
    fn decomposition_of_xy2() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 2)])]);
        let comps = i.irreducible_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![
                IrreducibleComponent::from_entries(vec![(0, 1)]),
                IrreducibleComponent::from_entries(vec![(1, 2)]),
            ]
        );
    }

    #[test]
    fn decomposition_of_xy_xz() {
        let i = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 1)]), m(&[(0, 1), (2, 1)])]);
        let comps = i.irreducible_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![
                IrreducibleComponent::from_entries(vec![(0, 1)]),
                IrreducibleComponent::from_entries(vec![(1, 1), (2, 1)]),
            ]
        );
    }

    #[test]
    fn decomposition_recovers_input_by_intersection() {
        // (x y^2, y z^2): freeze the computed components and verify their
        // intersection is the input again.
        let i = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 2)]), m(&[(1, 1), (2, 2)])]);
        let comps = i.irreducible_decomposition().unwrap();
        assert_eq!(
            comps,
            vec![
                IrreducibleComponent::from_entries(vec![(0, 1), (2, 2)]),
                IrreducibleComponent::from_entries(vec![(1, 1)]),
                IrreducibleComponent::from_entries(vec![(1, 2), (2, 2)]),
            ]
        );
        let back = comps
            .iter()
            .map(|c| c.as_ideal(3))
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn decomposition_rejects_zero_and_unit() {
        assert_eq!(
            MonomialIdeal::zero(2).irreducible_decomposition(),
            Err(IdealError::ZeroIdeal)
        );
        assert_eq!(
            MonomialIdeal::unit(2).irreducible_decomposition(),
            Err(IdealError::UnitIdeal)
        );
    }

    #[test]
    fn associated_primes_of_single_edge() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 1)])]);
        assert_eq!(i.associated_primes().unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn associated_primes_of_xy2() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 1), (1, 2)])]);
        assert_eq!(i.associated_primes().unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(i.height().unwrap(), 1);
        assert!(i.is_unmixed_ideal().unwrap());
    }

    #[test]
    fn embedded_prime_of_x2_xy() {
        let i = MonomialIdeal::new(2, vec![m(&[(0, 2)]), m(&[(0, 1), (1, 1)])]);
        assert_eq!(i.associated_primes().unwrap(), vec![vec![0], vec![0, 1]]);
        assert!(!i.is_unmixed_ideal().unwrap());
    }

    #[test]
    fn path2_edge_ideal_is_mixed() {
        // Path x - y - z: ideal (xy, yz) has primes {y} and {x, z}.
        let i = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 1)]), m(&[(1, 1), (2, 1)])]);
        assert_eq!(i.associated_primes().unwrap(), vec![vec![0, 2], vec![1]]);
        assert_eq!(i.height().unwrap(), 1);
        assert!(!i.is_unmixed_ideal().unwrap());
    }

    #[test]
    fn five_cycle_edge_ideal_height() {
        let gens = (0..5).map(|i| m(&[(i, 1), ((i + 1) % 5, 1)])).collect();
        let i = MonomialIdeal::new(5, gens);
        assert_eq!(i.height().unwrap(), 3);
        assert!(i.is_unmixed_ideal().unwrap());
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn exponent_overflow_is_a_hard_error() {
        let big = Monomial::power(0, u64::MAX);
        let _ = big.mul(&Monomial::var(0));
    }
}
