//! Finite commutative rings `Z_{n1} x ... x Z_{nk}` and their ideals.
//!
//! Elements are addressed by their index in lexicographic order of the
//! residue tuples, so the first coordinate is the most significant digit.
//! Every ideal is stored as an explicit element set together with a
//! generator witness.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Index of an element inside its ring or module.
pub type Elem = usize;

/// Largest ring handled; the arithmetic tables are quadratic in this.
pub const MAX_RING_CARDINALITY: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement {
    pub coords: Vec<u32>,
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, &self.coords)
    }
}

pub(crate) fn fmt_coords(f: &mut fmt::Formatter<'_>, coords: &[u32]) -> fmt::Result {
    if coords.len() == 1 {
        return write!(f, "{}", coords[0]);
    }
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

struct RingInner {
    moduli: Vec<u32>,
    strides: Vec<usize>,
    card: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: Elem,
    ideals: OnceLock<Vec<(FixedBitSet, Vec<Elem>)>>,
}

/// A product of residue-class rings. Cloning is cheap.
#[derive(Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

impl Ring {
    /// Builds `Z_{m0} x Z_{m1} x ...`. Every modulus must be at least 2.
    pub fn new(moduli: &[u32]) -> Result<Ring> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("empty list of moduli".into()));
        }
        if let Some(bad) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidRing(format!(
                "modulus {bad} is below 2, so 1 = 0 would hold"
            )));
        }
        let card = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .filter(|&c| c <= MAX_RING_CARDINALITY)
            .ok_or(Error::SizeLimit {
                what: "ring",
                actual: moduli.iter().map(|&m| m as usize).fold(1usize, usize::saturating_mul),
                limit: MAX_RING_CARDINALITY,
            })?;

        let mut strides = vec![1usize; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1] as usize;
        }
        let decode = |e: Elem| -> Vec<u32> {
            moduli
                .iter()
                .zip(&strides)
                .map(|(&m, &s)| ((e / s) % m as usize) as u32)
                .collect()
        };
        let encode = |c: &[u32]| -> Elem { c.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum() };
        let coords: Vec<Vec<u32>> = (0..card).map(decode).collect();

        let mut add = vec![0u16; card * card];
        let mut mul = vec![0u16; card * card];
        let mut scratch = vec![0u32; moduli.len()];
        for a in 0..card {
            for b in 0..card {
                for (i, &m) in moduli.iter().enumerate() {
                    scratch[i] = (coords[a][i] + coords[b][i]) % m;
                }
                add[a * card + b] = encode(&scratch) as u16;
                for (i, &m) in moduli.iter().enumerate() {
                    scratch[i] = ((coords[a][i] as u64 * coords[b][i] as u64) % m as u64) as u32;
                }
                mul[a * card + b] = encode(&scratch) as u16;
            }
        }
        let neg = (0..card)
            .map(|a| {
                let c: Vec<u32> = coords[a].iter().zip(moduli).map(|(&x, &m)| (m - x) % m).collect();
                encode(&c) as u16
            })
            .collect();
        let one = encode(&vec![1; moduli.len()]);

        Ok(Ring {
            inner: Arc::new(RingInner {
                moduli: moduli.to_vec(),
                strides,
                card,
                add,
                mul,
                neg,
                one,
                ideals: OnceLock::new(),
            }),
        })
    }

    pub fn moduli(&self) -> &[u32] {
        &self.inner.moduli
    }

    pub fn cardinality(&self) -> usize {
        self.inner.card
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.card
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.inner.add[a * self.inner.card + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.mul[a * self.inner.card + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inner.neg[a] as Elem
    }

    pub fn product(&self, factors: &[Elem]) -> Elem {
        factors.iter().fold(self.one(), |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn from_int(&self, k: i64) -> Elem {
        self.inner
            .moduli
            .iter()
            .zip(&self.inner.strides)
            .map(|(&m, &s)| k.rem_euclid(m as i64) as usize * s)
            .sum()
    }

    pub fn coords(&self, e: Elem) -> Vec<u32> {
        self.inner
            .moduli
            .iter()
            .zip(&self.inner.strides)
            .map(|(&m, &s)| ((e / s) % m as usize) as u32)
            .collect()
    }

    pub fn element(&self, e: Elem) -> RingElement {
        RingElement { coords: self.coords(e) }
    }

    /// Index of a residue tuple; coordinates are reduced first.
    pub fn index_of(&self, coords: &[u32]) -> Result<Elem> {
        if coords.len() != self.inner.moduli.len() {
            return Err(Error::InvalidInput(format!(
                "element {coords:?} has {} coordinates, ring {} has {}",
                coords.len(),
                self,
                self.inner.moduli.len()
            )));
        }
        Ok(coords
            .iter()
            .zip(&self.inner.moduli)
            .zip(&self.inner.strides)
            .map(|((&c, &m), &s)| (c % m) as usize * s)
            .sum())
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.inner.card)
    }

    pub(crate) fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.moduli == other.inner.moduli
    }

    fn principal_set(&self, g: Elem) -> FixedBitSet {
        let mut s = self.empty_set();
        for r in self.elements() {
            s.insert(self.mul(r, g));
        }
        s
    }

    fn sum_sets(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut s = self.empty_set();
        for x in a.ones() {
            for y in b.ones() {
                s.insert(self.add(x, y));
            }
        }
        s
    }

    fn cached_ideals(&self) -> &[(FixedBitSet, Vec<Elem>)] {
        self.inner.ideals.get_or_init(|| {
            let mut seen: std::collections::HashSet<FixedBitSet> = Default::default();
            let mut all: Vec<FixedBitSet> = Vec::new();
            for g in self.elements() {
                let s = self.principal_set(g);
                if seen.insert(s.clone()) {
                    all.push(s);
                }
            }
            // Close under sums; for principal ideal rings nothing new appears.
            let mut i = 0;
            while i < all.len() {
                for j in 0..=i {
                    let s = self.sum_sets(&all[i], &all[j]);
                    if seen.insert(s.clone()) {
                        all.push(s);
                    }
                }
                i += 1;
            }
            let mut out: Vec<(FixedBitSet, Vec<Elem>)> = all
                .into_iter()
                .map(|s| {
                    let gens = self.generator_witness(&s);
                    (s, gens)
                })
                .collect();
            out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
            out
        })
    }

    /// A short generating set for an ideal given as a set: a single
    /// generator when one exists, otherwise a greedy ascending pick.
    fn generator_witness(&self, s: &FixedBitSet) -> Vec<Elem> {
        if let Some(g) = s.ones().find(|&g| self.principal_set(g) == *s) {
            return vec![g];
        }
        let mut gens = Vec::new();
        let mut span = self.empty_set();
        span.insert(0);
        for x in s.ones() {
            if !span.contains(x) {
                gens.push(x);
                span = self.sum_sets(&span, &self.principal_set(x));
            }
        }
        gens
    }
}

pub(crate) fn canonical_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.inner.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RingRepr {
    moduli: Vec<u32>,
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RingRepr { moduli: self.inner.moduli.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RingRepr::deserialize(d)?;
        Ring::new(&repr.moduli).map_err(serde::de::Error::custom)
    }
}

/// How two ideals are combined by [`Ideal::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Product,
    Intersection,
    Sum,
}

/// Whether [`Ideal::is_n_absorbing`] quantifies over elements or over ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbsorbingMode {
    Elementwise,
    Strongly,
}

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    elems: FixedBitSet,
    generators: Vec<Elem>,
}

impl Ideal {
    /// Smallest ideal containing `gens`.
    pub fn generated(ring: &Ring, gens: &[Elem]) -> Result<Ideal> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= ring.cardinality()) {
            return Err(Error::InvalidInput(format!("{bad} is not an element of {ring}")));
        }
        let mut elems = ring.empty_set();
        elems.insert(0);
        for &g in gens {
            elems = ring.sum_sets(&elems, &ring.principal_set(g));
        }
        Ok(Ideal { ring: ring.clone(), elems, generators: gens.to_vec() })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        let mut elems = ring.empty_set();
        elems.insert(0);
        Ideal { ring: ring.clone(), elems, generators: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        let mut elems = ring.empty_set();
        elems.insert_range(..);
        Ideal { ring: ring.clone(), elems, generators: vec![ring.one()] }
    }

    /// Wraps an element set that must already be an ideal; the closure
    /// properties are checked and a generator witness is attached.
    pub fn from_set(ring: &Ring, elems: FixedBitSet) -> Result<Ideal> {
        if elems.len() != ring.cardinality() {
            return Err(Error::InvalidInput("element set has the wrong universe".into()));
        }
        if !elems.contains(0) {
            return Err(Error::InvalidInput("set does not contain 0".into()));
        }
        for x in elems.ones() {
            for y in elems.ones() {
                if !elems.contains(ring.add(x, y)) {
                    return Err(Error::InvalidInput("set is not closed under addition".into()));
                }
            }
            for r in ring.elements() {
                if !elems.contains(ring.mul(r, x)) {
                    return Err(Error::InvalidInput("set does not absorb multiplication".into()));
                }
            }
        }
        let generators = ring.generator_witness(&elems);
        Ok(Ideal { ring: ring.clone(), elems, generators })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn set(&self) -> &FixedBitSet {
        &self.elems
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.elems.ones()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.elems.contains(e)
    }

    pub fn len(&self) -> usize {
        self.elems.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.elems.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elems.is_subset(&other.elems)
    }

    pub fn combine(&self, other: &Ideal, kind: Combine) -> Result<Ideal> {
        if !self.ring.same(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let ring = &self.ring;
        let gens: Vec<Elem> = match kind {
            Combine::Product => {
                let mut s = ring.empty_set();
                for x in self.elements() {
                    for y in other.elements() {
                        s.insert(ring.mul(x, y));
                    }
                }
                s.ones().collect()
            }
            Combine::Intersection => {
                let mut s = self.elems.clone();
                s.intersect_with(&other.elems);
                s.ones().collect()
            }
            Combine::Sum => {
                let mut s = self.elems.clone();
                s.union_with(&other.elems);
                s.ones().collect()
            }
        };
        let closed = Ideal::generated(ring, &gens)?;
        Ok(closed.with_witness())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(other, Combine::Product)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(other, Combine::Intersection)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(other, Combine::Sum)
    }

    fn with_witness(mut self) -> Ideal {
        self.generators = self.ring.generator_witness(&self.elems);
        self
    }

    /// `ab in I => a in I or b in I`, for proper `I`. `R` itself is not prime.
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let ring = &self.ring;
        ring.elements().all(|a| {
            self.contains(a)
                || ring
                    .elements()
                    .all(|b| !self.contains(ring.mul(a, b)) || self.contains(b))
        })
    }

    /// n-absorbing test; `Strongly` quantifies over tuples of ideals.
    pub fn is_n_absorbing(&self, n: usize, mode: AbsorbingMode) -> Result<bool> {
        Ok(match mode {
            AbsorbingMode::Elementwise => self.n_absorbing_witness(n)?.is_none(),
            AbsorbingMode::Strongly => self.strongly_n_absorbing_witness(n)?.is_none(),
        })
    }

    fn check_absorbing_input(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if !self.is_proper() {
            return Err(Error::ImproperInput("absorbing ideals must be proper".into()));
        }
        Ok(())
    }

    /// First `n+1` elements (nondecreasing) whose product lies in the
    /// ideal while no `n` of them do.
    pub fn n_absorbing_witness(&self, n: usize) -> Result<Option<Vec<Elem>>> {
        self.check_absorbing_input(n)?;
        let ring = &self.ring;
        let mut tuple = vec![0; n + 1];
        let found = search_tuples(&mut tuple, 0, ring.cardinality(), &mut |xs| {
            if !self.contains(ring.product(xs)) {
                return false;
            }
            !(0..xs.len()).any(|skip| {
                let p = xs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .fold(ring.one(), |acc, (_, &x)| ring.mul(acc, x));
                self.contains(p)
            })
        });
        Ok(found.then_some(tuple))
    }

    /// As [`Ideal::n_absorbing_witness`], quantified over ideals.
    pub fn strongly_n_absorbing_witness(&self, n: usize) -> Result<Option<Vec<Ideal>>> {
        self.check_absorbing_input(n)?;
        let ideals = enumerate_ideals(&self.ring);
        let mut tuple = vec![0; n + 1];
        let product = |idx: &mut dyn Iterator<Item = usize>| -> Ideal {
            idx.fold(Ideal::unit(&self.ring), |acc, i| {
                acc.product(&ideals[i]).expect("same ring")
            })
        };
        let found = search_tuples(&mut tuple, 0, ideals.len(), &mut |xs| {
            if !product(&mut xs.iter().copied()).is_subset(self) {
                return false;
            }
            !(0..xs.len()).any(|skip| {
                let mut rest = xs.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x);
                product(&mut rest).is_subset(self)
            })
        });
        Ok(found.then(|| tuple.into_iter().map(|i| ideals[i].clone()).collect()))
    }

    /// `{r : r^k in I for some 1 <= k <= |R|}`.
    pub fn radical(&self) -> Result<Ideal> {
        if !self.is_proper() {
            return Err(Error::ImproperInput("radical of the unit ideal".into()));
        }
        let ring = &self.ring;
        let mut s = ring.empty_set();
        for r in ring.elements() {
            let mut p = r;
            for _ in 0..ring.cardinality() {
                if self.contains(p) {
                    s.insert(r);
                    break;
                }
                p = ring.mul(p, r);
            }
        }
        Ideal::from_set(ring, s)
    }

    /// Prime ideals containing this one that are minimal with that property.
    pub fn minimal_primes(&self) -> Result<Vec<Ideal>> {
        if !self.is_proper() {
            return Err(Error::ImproperInput("minimal primes over the unit ideal".into()));
        }
        let over: Vec<Ideal> = enumerate_ideals(&self.ring)
            .into_iter()
            .filter(|p| self.is_subset(p) && p.is_prime())
            .collect();
        Ok(over
            .iter()
            .filter(|p| !over.iter().any(|q| q != *p && q.is_subset(p)))
            .cloned()
            .collect())
    }
}

/// Visits nondecreasing tuples over `0..bound`; stops at the first one the
/// callback accepts, leaving it in `tuple`.
pub(crate) fn search_tuples(
    tuple: &mut [usize],
    pos: usize,
    bound: usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if pos == tuple.len() {
        return accept(tuple);
    }
    let start = if pos == 0 { 0 } else { tuple[pos - 1] };
    for v in start..bound {
        tuple[pos] = v;
        if search_tuples(tuple, pos + 1, bound, accept) {
            return true;
        }
    }
    false
}

/// All ideals of the ring, ordered by size then by element list.
pub fn enumerate_ideals(ring: &Ring) -> Vec<Ideal> {
    ring.cached_ideals()
        .iter()
        .map(|(s, g)| Ideal { ring: ring.clone(), elems: s.clone(), generators: g.clone() })
        .collect()
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.elems == other.elems
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.elems, &other.elems)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, &g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_coords(f, &self.ring.coords(g))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} of {}", self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Ring, gens: &[i64]) -> Ideal {
        let g: Vec<Elem> = gens.iter().map(|&k| ring.from_int(k)).collect();
        Ideal::generated(ring, &g).unwrap()
    }

    fn ints(ideal: &Ideal) -> Vec<u32> {
        ideal.elements().map(|e| ideal.ring().coords(e)[0]).collect()
    }

    #[test]
    fn rejects_degenerate_moduli() {
        assert!(matches!(Ring::new(&[1]), Err(Error::InvalidRing(_))));
        assert!(matches!(Ring::new(&[]), Err(Error::InvalidRing(_))));
        assert!(matches!(Ring::new(&[4, 0]), Err(Error::InvalidRing(_))));
        assert_eq!(Ring::new(&[6]).unwrap().cardinality(), 6);
        assert_eq!(Ring::new(&[2, 3]).unwrap().cardinality(), 6);
    }

    #[test]
    fn lexicographic_indexing() {
        let r = Ring::new(&[2, 3]).unwrap();
        let all: Vec<Vec<u32>> = r.elements().map(|e| r.coords(e)).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(r.coords(r.one()), vec![1, 1]);
        assert_eq!(r.index_of(&[1, 2]).unwrap(), 5);
        assert_eq!(r.from_int(-1), r.index_of(&[1, 2]).unwrap());
    }

    #[test]
    fn generated_ideals() {
        let z8 = Ring::new(&[8]).unwrap();
        assert_eq!(ints(&ideal(&z8, &[2])), vec![0, 2, 4, 6]);
        assert_eq!(ints(&ideal(&z8, &[])), vec![0]);
        let z2z3 = Ring::new(&[2, 3]).unwrap();
        let i = Ideal::generated(&z2z3, &[z2z3.index_of(&[1, 0]).unwrap()]).unwrap();
        let coords: Vec<Vec<u32>> = i.elements().map(|e| z2z3.coords(e)).collect();
        assert_eq!(coords, vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn ideal_lattices() {
        let z6 = Ring::new(&[6]).unwrap();
        let ids: Vec<Vec<u32>> = enumerate_ideals(&z6).iter().map(ints).collect();
        assert_eq!(ids, vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
        let z8 = Ring::new(&[8]).unwrap();
        let gens: Vec<String> = enumerate_ideals(&z8).iter().map(|i| i.to_string()).collect();
        assert_eq!(gens, vec!["(0)", "(4)", "(2)", "(1)"]);
        assert_eq!(enumerate_ideals(&Ring::new(&[2, 2]).unwrap()).len(), 4);
    }

    #[test]
    fn combine_examples() {
        let z6 = Ring::new(&[6]).unwrap();
        assert!(ideal(&z6, &[2]).product(&ideal(&z6, &[3])).unwrap().is_zero());
        let i = ideal(&z6, &[2]);
        assert_eq!(i.intersection(&i).unwrap(), i);
        let z36 = Ring::new(&[36]).unwrap();
        assert!(ideal(&z36, &[4]).intersection(&ideal(&z36, &[9])).unwrap().is_zero());
        assert_eq!(ideal(&z36, &[4]).sum(&ideal(&z36, &[9])).unwrap(), Ideal::unit(&z36));
        let z8 = Ring::new(&[8]).unwrap();
        assert_eq!(
            ideal(&z6, &[2]).product(&ideal(&z8, &[2])).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn primality() {
        let z6 = Ring::new(&[6]).unwrap();
        assert!(ideal(&z6, &[2]).is_prime());
        assert!(!ideal(&z6, &[0]).is_prime());
        assert!(!Ideal::unit(&z6).is_prime());
    }

    #[test]
    fn absorbing_examples() {
        let el = AbsorbingMode::Elementwise;
        let z6 = Ring::new(&[6]).unwrap();
        assert!(Ideal::zero(&z6).is_n_absorbing(2, el).unwrap());
        let z8 = Ring::new(&[8]).unwrap();
        assert!(!Ideal::zero(&z8).is_n_absorbing(2, el).unwrap());
        assert_eq!(
            Ideal::zero(&z8).n_absorbing_witness(2).unwrap().unwrap(),
            vec![2, 2, 2]
        );
        let z30 = Ring::new(&[30]).unwrap();
        assert!(!Ideal::zero(&z30).is_n_absorbing(2, el).unwrap());
        assert!(Ideal::zero(&z30).is_n_absorbing(3, el).unwrap());
        assert!(matches!(
            Ideal::unit(&z6).is_n_absorbing(2, el),
            Err(Error::ImproperInput(_))
        ));
        assert!(matches!(
            Ideal::zero(&z6).is_n_absorbing(0, el),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn radical_and_minimal_primes() {
        let z8 = Ring::new(&[8]).unwrap();
        assert_eq!(ideal(&z8, &[4]).radical().unwrap(), ideal(&z8, &[2]));
        assert_eq!(ideal(&z8, &[4]).minimal_primes().unwrap(), vec![ideal(&z8, &[2])]);
        let z6 = Ring::new(&[6]).unwrap();
        assert_eq!(Ideal::zero(&z6).radical().unwrap(), Ideal::zero(&z6));
        assert_eq!(
            Ideal::zero(&z6).minimal_primes().unwrap(),
            vec![ideal(&z6, &[3]), ideal(&z6, &[2])]
        );
        let p = ideal(&z6, &[3]);
        assert_eq!(p.radical().unwrap(), p);
        assert_eq!(p.minimal_primes().unwrap(), vec![p.clone()]);
        assert!(Ideal::unit(&z6).radical().is_err());
    }
}
