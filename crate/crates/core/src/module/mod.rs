//! Finite modules over [`Ring`]s and their submodules.
//!
//! A [`Module`] is table backed: addition, negation and the scalar action
//! are precomputed over element indices. Modules built from cyclic
//! components `Z_d` attached to ring coordinates also remember that
//! presentation; quotients and localizations only carry tables and
//! element labels.

mod construct;
mod hom;

pub use construct::{
    direct_product, localize, quotient_module, tensor_free, Decomposition, Localization,
    ProductModule, Quotient,
};
pub use hom::ModuleHom;

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{canonical_cmp, fmt_coords, Elem, Ideal, Ring};

/// Default bound on `|M|` for submodule enumeration.
pub const DEFAULT_SUBMODULE_BOUND: usize = 256;

/// Largest module handled; the addition table is quadratic in this.
pub const MAX_MODULE_CARDINALITY: usize = 2048;

/// A cyclic summand `Z_order` on which the ring acts through coordinate `coord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub coord: usize,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleElement {
    pub coords: Vec<u32>,
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(f, &self.coords)
    }
}

struct ModuleInner {
    ring: Ring,
    card: usize,
    components: Option<Vec<Component>>,
    name: String,
    labels: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, Elem>,
    add: Vec<u16>,
    neg: Vec<u16>,
    act: Vec<u16>,
    submodules: OnceLock<Vec<(FixedBitSet, Vec<Elem>)>>,
}

#[derive(Clone)]
pub struct Module {
    inner: Arc<ModuleInner>,
}

impl Module {
    /// Direct sum of the cyclic `components`; each order must divide the
    /// modulus of its ring coordinate.
    pub fn new(ring: &Ring, components: &[Component]) -> Result<Module> {
        for c in components {
            let Some(&modulus) = ring.moduli().get(c.coord) else {
                return Err(Error::InvalidModule(format!(
                    "component attached to coordinate {} of {ring}",
                    c.coord
                )));
            };
            if c.order == 0 || modulus % c.order != 0 {
                return Err(Error::InvalidModule(format!(
                    "order {} does not divide modulus {modulus}",
                    c.order
                )));
            }
        }
        let card = components
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.order as usize))
            .filter(|&n| n <= MAX_MODULE_CARDINALITY)
            .ok_or(Error::SizeLimit {
                what: "module",
                actual: components.iter().map(|c| c.order as usize).fold(1, usize::saturating_mul),
                limit: MAX_MODULE_CARDINALITY,
            })?;

        let orders: Vec<u32> = components.iter().map(|c| c.order).collect();
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        let labels: Vec<Vec<u32>> = (0..card)
            .map(|e| {
                orders
                    .iter()
                    .zip(&strides)
                    .map(|(&o, &s)| ((e / s) % o as usize) as u32)
                    .collect()
            })
            .collect();
        let encode = |c: &[u32]| -> u16 {
            c.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum::<usize>() as u16
        };

        let mut add = vec![0u16; card * card];
        let mut scratch = vec![0u32; orders.len()];
        for a in 0..card {
            for b in 0..card {
                for (j, &o) in orders.iter().enumerate() {
                    scratch[j] = (labels[a][j] + labels[b][j]) % o;
                }
                add[a * card + b] = encode(&scratch);
            }
        }
        let neg = (0..card)
            .map(|a| {
                let c: Vec<u32> = labels[a].iter().zip(&orders).map(|(&x, &o)| (o - x) % o).collect();
                encode(&c)
            })
            .collect();
        let mut act = vec![0u16; ring.cardinality() * card];
        for r in ring.elements() {
            let rc = ring.coords(r);
            for m in 0..card {
                for (j, comp) in components.iter().enumerate() {
                    let o = comp.order as u64;
                    scratch[j] = ((rc[comp.coord] as u64 % o) * labels[m][j] as u64 % o) as u32;
                }
                act[r * card + m] = encode(&scratch);
            }
        }
        let name = component_name(ring, components);
        Ok(Module::from_parts(ring, Some(components.to_vec()), name, labels, add, neg, act))
    }

    /// `R` as a module over itself.
    pub fn regular(ring: &Ring) -> Module {
        let comps: Vec<Component> = ring
            .moduli()
            .iter()
            .enumerate()
            .map(|(coord, &order)| Component { coord, order })
            .collect();
        Module::new(ring, &comps).expect("regular module is always valid")
    }

    pub(crate) fn from_parts(
        ring: &Ring,
        components: Option<Vec<Component>>,
        name: String,
        labels: Vec<Vec<u32>>,
        add: Vec<u16>,
        neg: Vec<u16>,
        act: Vec<u16>,
    ) -> Module {
        let card = labels.len();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let module = Module {
            inner: Arc::new(ModuleInner {
                ring: ring.clone(),
                card,
                components,
                name,
                labels,
                index,
                add,
                neg,
                act,
                submodules: OnceLock::new(),
            }),
        };
        debug_assert!(card > 64 || module.action_laws_hold());
        module
    }

    /// Exhaustive check of the module axioms that involve the action.
    pub fn action_laws_hold(&self) -> bool {
        let ring = self.ring();
        for r in ring.elements() {
            for s in ring.elements() {
                for m in self.elements() {
                    let rs_m = self.act(ring.mul(r, s), m);
                    if rs_m != self.act(r, self.act(s, m))
                        || self.act(ring.add(r, s), m) != self.add(self.act(r, m), self.act(s, m))
                    {
                        return false;
                    }
                }
            }
        }
        let one = ring.one();
        self.elements().all(|m| {
            self.act(one, m) == m
                && self.elements().all(|n| {
                    ring.elements()
                        .all(|r| self.act(r, self.add(m, n)) == self.add(self.act(r, m), self.act(r, n)))
                })
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn cardinality(&self) -> usize {
        self.inner.card
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.card
    }

    pub fn components(&self) -> Option<&[Component]> {
        self.inner.components.as_deref()
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn is_zero_module(&self) -> bool {
        self.inner.card == 1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.inner.add[a * self.inner.card + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inner.neg[a] as Elem
    }

    /// Scalar action `r * m`.
    #[inline]
    pub fn act(&self, r: Elem, m: Elem) -> Elem {
        self.inner.act[r * self.inner.card + m] as Elem
    }

    pub fn coords(&self, m: Elem) -> &[u32] {
        &self.inner.labels[m]
    }

    pub fn element(&self, m: Elem) -> ModuleElement {
        ModuleElement { coords: self.inner.labels[m].clone() }
    }

    pub fn index_of(&self, coords: &[u32]) -> Result<Elem> {
        self.inner.index.get(coords).copied().ok_or_else(|| {
            Error::InvalidInput(format!("{coords:?} is not an element label of {}", self.name()))
        })
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.inner.card)
    }

    pub(crate) fn same(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.components.is_some()
                && self.inner.components == other.inner.components
                && self.ring().same(other.ring()))
    }

    pub(crate) fn cyclic_set(&self, g: Elem) -> FixedBitSet {
        let mut s = self.empty_set();
        for r in self.ring().elements() {
            s.insert(self.act(r, g));
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

    /// Span of a set that is already known to be an additive subgroup
    /// plus extra generators.
    fn span_with(&self, base: &FixedBitSet, gens: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut s = base.clone();
        for g in gens {
            if !s.contains(g) {
                s = self.sum_sets(&s, &self.cyclic_set(g));
            }
        }
        s
    }

    fn generator_witness(&self, set: &FixedBitSet) -> Vec<Elem> {
        if let Some(g) = set.ones().find(|&g| self.cyclic_set(g) == *set) {
            return if g == 0 { Vec::new() } else { vec![g] };
        }
        let mut gens = Vec::new();
        let mut span = self.empty_set();
        span.insert(0);
        for x in set.ones() {
            if !span.contains(x) {
                gens.push(x);
                span = self.sum_sets(&span, &self.cyclic_set(x));
            }
        }
        gens
    }

    /// Smallest submodule containing `gens`.
    pub fn submodule_generated(&self, gens: &[Elem]) -> Result<Submodule> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= self.inner.card) {
            return Err(Error::InvalidInput(format!("{bad} is not an element of {}", self.name())));
        }
        let mut zero = self.empty_set();
        zero.insert(0);
        let elems = self.span_with(&zero, gens.iter().copied());
        Ok(Submodule { module: self.clone(), elems, generators: gens.to_vec() })
    }

    pub fn zero_submodule(&self) -> Submodule {
        let mut elems = self.empty_set();
        elems.insert(0);
        Submodule { module: self.clone(), elems, generators: Vec::new() }
    }

    pub fn whole(&self) -> Submodule {
        let mut elems = self.empty_set();
        elems.insert_range(..);
        let generators = self.generator_witness(&elems);
        Submodule { module: self.clone(), elems, generators }
    }

    /// Wraps an element set after checking that it is a submodule.
    pub fn submodule_from_set(&self, elems: FixedBitSet) -> Result<Submodule> {
        if elems.len() != self.inner.card || !elems.contains(0) {
            return Err(Error::InvalidInput("set is not a submodule: missing 0".into()));
        }
        for x in elems.ones() {
            if elems.ones().any(|y| !elems.contains(self.add(x, y))) {
                return Err(Error::InvalidInput("set is not closed under addition".into()));
            }
            if self.ring().elements().any(|r| !elems.contains(self.act(r, x))) {
                return Err(Error::InvalidInput("set is not closed under the action".into()));
            }
        }
        let generators = self.generator_witness(&elems);
        Ok(Submodule { module: self.clone(), elems, generators })
    }

    pub(crate) fn submodule_unchecked(&self, elems: FixedBitSet) -> Submodule {
        let generators = self.generator_witness(&elems);
        Submodule { module: self.clone(), elems, generators }
    }

    fn cached_submodules(&self) -> &[(FixedBitSet, Vec<Elem>)] {
        self.inner.submodules.get_or_init(|| {
            let mut seen: HashSet<FixedBitSet> = HashSet::new();
            let mut cyclic: Vec<(Elem, FixedBitSet)> = Vec::new();
            for g in self.elements() {
                let s = self.cyclic_set(g);
                if seen.insert(s.clone()) {
                    cyclic.push((g, s));
                }
            }
            // Every submodule is a finite sum of cyclic ones: close the
            // cyclic family under adding one more cyclic summand.
            let mut all: Vec<FixedBitSet> = cyclic.iter().map(|(_, s)| s.clone()).collect();
            let mut i = 0;
            while i < all.len() {
                for (g, c) in &cyclic {
                    if c.is_subset(&all[i]) {
                        continue;
                    }
                    let s = self.span_with(&all[i], [*g]);
                    if seen.insert(s.clone()) {
                        all.push(s);
                    }
                }
                i += 1;
            }
            for a in &all {
                for b in &all {
                    let mut meet = a.clone();
                    meet.intersect_with(b);
                    assert!(seen.contains(&meet), "submodule family not closed under intersection");
                }
                for (g, _) in &cyclic {
                    assert!(seen.contains(&self.span_with(a, [*g])), "submodule family not closed under sums");
                }
            }
            all.sort_by(canonical_cmp);
            all.into_iter()
                .map(|s| {
                    let g = self.generator_witness(&s);
                    (s, g)
                })
                .collect()
        })
    }

    /// Every submodule, smallest first; fails above `bound` elements.
    pub fn enumerate_submodules_bounded(&self, bound: usize) -> Result<Vec<Submodule>> {
        if self.inner.card > bound {
            return Err(Error::SizeLimit { what: "module", actual: self.inner.card, limit: bound });
        }
        Ok(self
            .cached_submodules()
            .iter()
            .map(|(s, g)| Submodule { module: self.clone(), elems: s.clone(), generators: g.clone() })
            .collect())
    }

    pub fn enumerate_submodules(&self) -> Result<Vec<Submodule>> {
        self.enumerate_submodules_bounded(DEFAULT_SUBMODULE_BOUND)
    }

    /// Every submodule `N` satisfies `N = (N :_R M) M`.
    pub fn is_multiplication_module(&self) -> Result<bool> {
        let whole = self.whole();
        for n in self.enumerate_submodules()? {
            if whole.scaled(&n.colon_module()) != n {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn component_name(ring: &Ring, components: &[Component]) -> String {
    let parts: Vec<String> = components
        .iter()
        .filter(|c| c.order > 1)
        .map(|c| {
            if ring.moduli().len() == 1 {
                format!("Z{}", c.order)
            } else {
                format!("Z{}@{}", c.order, c.coord)
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.name)
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({} over {})", self.inner.name, self.inner.ring)
    }
}

#[derive(Clone)]
pub struct Submodule {
    module: Module,
    elems: FixedBitSet,
    generators: Vec<Elem>,
}

impl Submodule {
    pub fn module(&self) -> &Module {
        &self.module
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
    pub fn contains(&self, m: Elem) -> bool {
        self.elems.contains(m)
    }

    pub fn len(&self) -> usize {
        self.elems.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.module.cardinality()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elems.is_subset(&other.elems)
    }

    fn check_same(&self, other: &Submodule) -> Result<()> {
        if self.module.same(&other.module) {
            Ok(())
        } else {
            Err(Error::ModuleMismatch)
        }
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_same(other)?;
        let elems = self.module.span_with(&self.elems, other.generators.iter().copied());
        Ok(self.module.submodule_unchecked(elems))
    }

    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        self.check_same(other)?;
        let mut elems = self.elems.clone();
        elems.intersect_with(&other.elems);
        Ok(self.module.submodule_unchecked(elems))
    }

    /// `I N`, the submodule generated by all `i n`.
    pub fn scaled(&self, ideal: &Ideal) -> Submodule {
        let mut gens = self.module.empty_set();
        for i in ideal.elements() {
            for n in self.elements() {
                gens.insert(self.module.act(i, n));
            }
        }
        let mut zero = self.module.empty_set();
        zero.insert(0);
        let elems = self.module.span_with(&zero, gens.ones());
        self.module.submodule_unchecked(elems)
    }

    /// `{r in R : r x in N for every x in xs}` as a bit set over `R`.
    pub fn colon_set(&self, xs: impl IntoIterator<Item = Elem> + Clone) -> FixedBitSet {
        let ring = self.module.ring();
        let mut s = ring.empty_set();
        for r in ring.elements() {
            if xs.clone().into_iter().all(|x| self.contains(self.module.act(r, x))) {
                s.insert(r);
            }
        }
        s
    }

    /// The colon ideal `(N :_R X)` of a nonempty element set `X`.
    pub fn colon_ideal(&self, xs: &[Elem]) -> Result<Ideal> {
        if xs.is_empty() {
            return Err(Error::InvalidInput("colon ideal of an empty set".into()));
        }
        if let Some(&bad) = xs.iter().find(|&&x| x >= self.module.cardinality()) {
            return Err(Error::InvalidInput(format!("{bad} is not an element of {}", self.module)));
        }
        let s = self.colon_set(xs.iter().copied());
        Ok(Ideal::from_set(self.module.ring(), s).expect("a colon of a submodule is an ideal"))
    }

    /// `(N :_R M)`.
    pub fn colon_module(&self) -> Ideal {
        let all: Vec<Elem> = self.module.elements().collect();
        self.colon_ideal(&all).expect("modules are nonempty")
    }

    /// `(N :_M r1 r2 ... rk) = {m : (r1 r2 ... rk) m in N}`.
    pub fn colon_submodule(&self, scalars: &[Elem]) -> Result<Submodule> {
        if scalars.is_empty() {
            return Err(Error::InvalidInput("colon submodule needs at least one scalar".into()));
        }
        let ring = self.module.ring();
        if let Some(&bad) = scalars.iter().find(|&&r| r >= ring.cardinality()) {
            return Err(Error::InvalidInput(format!("{bad} is not an element of {ring}")));
        }
        let r = ring.product(scalars);
        let mut s = self.module.empty_set();
        for m in self.module.elements() {
            if self.contains(self.module.act(r, m)) {
                s.insert(m);
            }
        }
        Ok(self.module.submodule_unchecked(s))
    }

    /// `Z_R(M/N) = {r : r m in N for some m not in N}`.
    pub fn zero_divisors_on_quotient(&self) -> Result<Vec<Elem>> {
        if !self.is_proper() {
            return Err(Error::ImproperInput("M/M has no zero-divisors to report".into()));
        }
        let ring = self.module.ring();
        Ok(ring
            .elements()
            .filter(|&r| {
                self.module
                    .elements()
                    .any(|m| !self.contains(m) && self.contains(self.module.act(r, m)))
            })
            .collect())
    }

    /// `AB = (A :_R M)(B :_R M) M` inside a multiplication module.
    pub fn product(&self, other: &Submodule) -> Result<Submodule> {
        self.check_same(other)?;
        if !self.module.is_multiplication_module()? {
            return Err(Error::UnsupportedStructure(format!(
                "{} is not a multiplication module",
                self.module
            )));
        }
        let ideal = self.colon_module().product(&other.colon_module())?;
        Ok(self.module.whole().scaled(&ideal))
    }

    /// Left fold of [`Submodule::product`].
    pub fn product_all(factors: &[Submodule]) -> Result<Submodule> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::InvalidInput("empty product".into()))?;
        rest.iter().try_fold(first.clone(), |acc, f| acc.product(f))
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.module.same(&other.module) && self.elems == other.elems
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.elems, &other.elems)
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, &g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_coords(f, self.module.coords(g))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{self} of {}", self.module.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32, order: u32) -> Module {
        Module::new(&Ring::new(&[n]).unwrap(), &[Component { coord: 0, order }]).unwrap()
    }

    fn sub(m: &Module, gens: &[u32]) -> Submodule {
        let g: Vec<Elem> = gens.iter().map(|&x| m.index_of(&[x]).unwrap()).collect();
        m.submodule_generated(&g).unwrap()
    }

    fn ints(n: &Submodule) -> Vec<u32> {
        n.elements().map(|e| n.module().coords(e)[0]).collect()
    }

    #[test]
    fn construction() {
        let z6 = Ring::new(&[6]).unwrap();
        let m = Module::new(&z6, &[Component { coord: 0, order: 2 }, Component { coord: 0, order: 3 }])
            .unwrap();
        assert_eq!(m.cardinality(), 6);
        assert!(m.action_laws_hold());
        assert_eq!(cyclic(8, 4).cardinality(), 4);
        assert!(matches!(
            Module::new(&z6, &[Component { coord: 0, order: 4 }]),
            Err(Error::InvalidModule(_))
        ));
        assert!(Module::new(&z6, &[Component { coord: 1, order: 2 }]).is_err());
        let zero = Module::new(&z6, &[]).unwrap();
        assert!(zero.is_zero_module());
        assert_eq!(zero.name(), "0");
    }

    #[test]
    fn generated_submodules() {
        let m = cyclic(8, 8);
        assert_eq!(ints(&sub(&m, &[2])), vec![0, 2, 4, 6]);
        assert!(sub(&m, &[]).is_zero());
        assert_eq!(sub(&m, &[3]), m.whole());
    }

    #[test]
    fn submodule_lattices() {
        let z8 = cyclic(8, 8);
        let subs = z8.enumerate_submodules().unwrap();
        assert_eq!(subs.len(), 4);
        for w in subs.windows(2) {
            assert!(w[0].is_subset(&w[1]));
        }
        let z2 = Ring::new(&[2]).unwrap();
        let plane = Module::new(&z2, &[Component { coord: 0, order: 2 }; 2]).unwrap();
        assert_eq!(plane.enumerate_submodules().unwrap().len(), 5);
        assert_eq!(cyclic(6, 6).enumerate_submodules().unwrap().len(), 4);
        assert!(matches!(
            z8.enumerate_submodules_bounded(4),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn colon_ideals() {
        let m = cyclic(8, 8);
        let n = sub(&m, &[4]);
        assert_eq!(n.colon_module().to_string(), "(4)");
        let inside: Vec<Elem> = n.elements().collect();
        assert!(!n.colon_ideal(&inside).unwrap().is_proper());
        assert!(matches!(n.colon_ideal(&[]), Err(Error::InvalidInput(_))));

        let z30 = Ring::new(&[30]).unwrap();
        let m = Module::new(
            &z30,
            &[
                Component { coord: 0, order: 2 },
                Component { coord: 0, order: 3 },
                Component { coord: 0, order: 5 },
            ],
        )
        .unwrap();
        let x = m.index_of(&[1, 1, 1]).unwrap();
        assert!(m.zero_submodule().colon_ideal(&[x]).unwrap().is_zero());
    }

    #[test]
    fn colon_submodules() {
        let m = cyclic(8, 8);
        let ring = m.ring().clone();
        let n = sub(&m, &[4]);
        assert_eq!(n.colon_submodule(&[ring.one()]).unwrap(), n);
        assert_eq!(n.colon_submodule(&[ring.zero()]).unwrap(), m.whole());
        assert_eq!(ints(&n.colon_submodule(&[ring.from_int(2)]).unwrap()), vec![0, 2, 4, 6]);
        assert!(n.colon_submodule(&[]).is_err());
    }

    #[test]
    fn zero_divisors() {
        let m = cyclic(6, 6);
        let zd: Vec<u32> = m
            .zero_submodule()
            .zero_divisors_on_quotient()
            .unwrap()
            .into_iter()
            .map(|r| m.ring().coords(r)[0])
            .collect();
        assert_eq!(zd, vec![0, 2, 3, 4]);
        let f = cyclic(5, 5);
        assert_eq!(f.zero_submodule().zero_divisors_on_quotient().unwrap(), vec![0]);
        assert!(m.whole().zero_divisors_on_quotient().is_err());
    }

    #[test]
    fn multiplication_modules() {
        assert!(cyclic(8, 8).is_multiplication_module().unwrap());
        let z2 = Ring::new(&[2]).unwrap();
        let plane = Module::new(&z2, &[Component { coord: 0, order: 2 }; 2]).unwrap();
        assert!(!plane.is_multiplication_module().unwrap());
        assert!(Module::new(&z2, &[]).unwrap().is_multiplication_module().unwrap());
        let line = plane.submodule_generated(&[1]).unwrap();
        assert!(matches!(line.product(&line), Err(Error::UnsupportedStructure(_))));
    }

    #[test]
    fn submodule_products() {
        let m = cyclic(8, 8);
        assert_eq!(ints(&sub(&m, &[2]).product(&sub(&m, &[2])).unwrap()), vec![0, 4]);
        let n = sub(&m, &[2]);
        assert_eq!(n.product(&m.whole()).unwrap(), n);
        let m6 = cyclic(6, 6);
        assert!(sub(&m6, &[2]).product(&sub(&m6, &[3])).unwrap().is_zero());
        let three = [sub(&m, &[2]), sub(&m, &[2]), sub(&m, &[6])];
        assert_eq!(ints(&Submodule::product_all(&three).unwrap()), vec![0]);
    }
}
