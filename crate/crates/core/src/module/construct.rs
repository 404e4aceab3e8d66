//! Quotients, localizations, direct products and free tensoring.

use std::collections::BTreeMap;

use super::{Component, Module, ModuleHom, Submodule};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ideal, Ring};

/// `M/L` on least coset representatives, with the projection `M -> M/L`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: Module,
    pub projection: ModuleHom,
    /// Least representative in `M` of each quotient element.
    pub representatives: Vec<Elem>,
}

pub fn quotient_module(m: &Module, l: &Submodule) -> Result<Quotient> {
    if !l.module().same(m) {
        return Err(Error::ModuleMismatch);
    }
    let rep_of: Vec<Elem> = m
        .elements()
        .map(|x| l.elements().map(|y| m.add(x, y)).min().expect("0 is in L"))
        .collect();
    let mut reps: Vec<Elem> = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let class: BTreeMap<Elem, Elem> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let card = reps.len();
    let ring = m.ring();

    let class_of = |x: Elem| class[&rep_of[x]] as u16;
    let mut add = vec![0u16; card * card];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * card + j] = class_of(m.add(a, b));
        }
    }
    let neg = reps.iter().map(|&a| class_of(m.neg(a))).collect();
    let mut act = vec![0u16; ring.cardinality() * card];
    for r in ring.elements() {
        for (i, &a) in reps.iter().enumerate() {
            act[r * card + i] = class_of(m.act(r, a));
        }
    }
    let labels = reps.iter().map(|&a| m.coords(a).to_vec()).collect();
    let name = format!("({})/{}", m.name(), l);
    let module = Module::from_parts(ring, None, name, labels, add, neg, act);
    let table = m.elements().map(|x| class_of(x) as Elem).collect();
    let projection = ModuleHom::from_table(m, &module, table)?;
    debug_assert_eq!(projection.kernel(), l);
    Ok(Quotient { module, projection, representatives: reps })
}

/// `S^{-1}M` for a finite module, realized as `M/T` with `T` the
/// `S`-torsion. The localized module keeps `R` as its ring of scalars;
/// the action factors through `S^{-1}R = R/T_R`, which is reported in
/// [`Localization::ring`] (`None` for the zero ring).
#[derive(Debug, Clone)]
pub struct Localization {
    pub multiplicative_set: Vec<Elem>,
    pub ring_torsion: Ideal,
    pub ring: Option<Ring>,
    /// `R -> S^{-1}R` on element indices, empty when the localized ring is zero.
    pub ring_map: Vec<Elem>,
    pub torsion: Submodule,
    pub module: Module,
    pub map: ModuleHom,
}

impl Localization {
    /// `S^{-1}N`, i.e. `(N + T)/T`.
    pub fn localize_submodule(&self, n: &Submodule) -> Result<Submodule> {
        self.map.image_of(n)
    }
}

fn check_multiplicative(ring: &Ring, s: &[Elem]) -> Result<()> {
    if let Some(&bad) = s.iter().find(|&&x| x >= ring.cardinality()) {
        return Err(Error::InvalidMultiplicativeSet(format!("{bad} is not a ring element")));
    }
    if !s.contains(&ring.one()) {
        return Err(Error::InvalidMultiplicativeSet("1 is missing".into()));
    }
    for &a in s {
        for &b in s {
            if !s.contains(&ring.mul(a, b)) {
                return Err(Error::InvalidMultiplicativeSet(format!(
                    "{} * {} leaves the set",
                    ring.element(a),
                    ring.element(b)
                )));
            }
        }
    }
    Ok(())
}

/// `R/T` for an ideal `T`, written again as a product of residue rings.
fn ring_quotient(ring: &Ring, t: &Ideal) -> Option<(Ring, Vec<Elem>)> {
    let moduli = ring.moduli();
    let divisors: Vec<u32> = (0..moduli.len())
        .map(|i| {
            t.elements()
                .map(|x| ring.coords(x)[i])
                .fold(moduli[i], gcd)
        })
        .collect();
    let kept: Vec<u32> = divisors.iter().copied().filter(|&d| d > 1).collect();
    if kept.is_empty() {
        return None;
    }
    let target = Ring::new(&kept).expect("divisors of valid moduli");
    let map = ring
        .elements()
        .map(|r| {
            let c: Vec<u32> = ring
                .coords(r)
                .iter()
                .zip(&divisors)
                .filter(|(_, &d)| d > 1)
                .map(|(&x, &d)| x % d)
                .collect();
            target.index_of(&c).expect("reduced coordinates")
        })
        .collect();
    Some((target, map))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn localize(m: &Module, s: &[Elem]) -> Result<Localization> {
    let ring = m.ring();
    check_multiplicative(ring, s)?;

    let mut t = m.empty_set();
    for x in m.elements() {
        if s.iter().any(|&u| m.act(u, x) == 0) {
            t.insert(x);
        }
    }
    let torsion = m
        .submodule_from_set(t)
        .expect("S-torsion of a multiplicative set is a submodule");
    let mut tr = ring.empty_set();
    for r in ring.elements() {
        if s.iter().any(|&u| ring.mul(u, r) == 0) {
            tr.insert(r);
        }
    }
    let ring_torsion = Ideal::from_set(ring, tr).expect("S-torsion of R is an ideal");

    let quotient = quotient_module(m, &torsion)?;
    let qm = &quotient.module;
    for &u in s {
        let mut seen = qm.empty_set();
        for x in qm.elements() {
            seen.insert(qm.act(u, x));
        }
        assert!(seen.is_full(), "every s in S must act invertibly on S^-1 M");
    }
    let (lring, ring_map) = match ring_quotient(ring, &ring_torsion) {
        Some((lr, map)) => {
            for &u in s {
                let su = map[u];
                assert!(
                    lr.elements().any(|x| lr.mul(su, x) == lr.one()),
                    "every s in S must be a unit of S^-1 R"
                );
            }
            (Some(lr), map)
        }
        None => (None, Vec::new()),
    };
    Ok(Localization {
        multiplicative_set: s.to_vec(),
        ring_torsion,
        ring: lring,
        ring_map,
        torsion,
        module: quotient.module,
        map: quotient.projection,
    })
}

/// `M_1 x ... x M_n` over `R_1 x ... x R_n`.
#[derive(Debug, Clone)]
pub struct ProductModule {
    pub ring: Ring,
    pub module: Module,
    pub factors: Vec<Module>,
    component_offsets: Vec<usize>,
}

/// Coordinate factors `N_k` of a submodule of a product.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parts: Vec<Submodule>,
    /// Whether `N` equals the product of its factors.
    pub split: bool,
}

pub fn direct_product(parts: &[(Ring, Module)]) -> Result<ProductModule> {
    if parts.len() < 2 {
        return Err(Error::InvalidInput("a direct product needs at least two factors".into()));
    }
    let mut moduli = Vec::new();
    let mut comps = Vec::new();
    let mut component_offsets = Vec::new();
    for (ring, module) in parts {
        if !module.ring().same(ring) {
            return Err(Error::RingMismatch);
        }
        let own = module.components().ok_or_else(|| {
            Error::UnsupportedStructure("product factors must be sums of cyclic components".into())
        })?;
        component_offsets.push(comps.len());
        let shift = moduli.len();
        comps.extend(own.iter().map(|c| Component { coord: c.coord + shift, order: c.order }));
        moduli.extend_from_slice(ring.moduli());
    }
    component_offsets.push(comps.len());
    let ring = Ring::new(&moduli)?;
    let module = Module::new(&ring, &comps)?;
    Ok(ProductModule {
        ring,
        module,
        factors: parts.iter().map(|(_, m)| m.clone()).collect(),
        component_offsets,
    })
}

impl ProductModule {
    /// The `k`-th coordinate of a product element.
    pub fn project(&self, k: usize, m: Elem) -> Elem {
        let c = &self.module.coords(m)[self.component_offsets[k]..self.component_offsets[k + 1]];
        self.factors[k].index_of(c).expect("factor coordinates")
    }

    pub fn embed(&self, coords: &[Elem]) -> Result<Elem> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidInput("one coordinate per factor expected".into()));
        }
        let mut flat = Vec::new();
        for (f, &x) in self.factors.iter().zip(coords) {
            flat.extend_from_slice(f.coords(x));
        }
        self.module.index_of(&flat)
    }

    pub fn decompose(&self, n: &Submodule) -> Result<Decomposition> {
        if !n.module().same(&self.module) {
            return Err(Error::ModuleMismatch);
        }
        let parts: Vec<Submodule> = self
            .factors
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let mut s = f.empty_set();
                for m in n.elements() {
                    s.insert(self.project(k, m));
                }
                f.submodule_from_set(s).expect("projection of a submodule")
            })
            .collect();
        let split = self.assemble(&parts)? == *n;
        Ok(Decomposition { parts, split })
    }

    pub fn assemble(&self, parts: &[Submodule]) -> Result<Submodule> {
        if parts.len() != self.factors.len()
            || parts.iter().zip(&self.factors).any(|(p, f)| !p.module().same(f))
        {
            return Err(Error::ModuleMismatch);
        }
        let mut s = self.module.empty_set();
        for m in self.module.elements() {
            if parts.iter().enumerate().all(|(k, p)| p.contains(self.project(k, m))) {
                s.insert(m);
            }
        }
        Ok(self.module.submodule_unchecked(s))
    }
}

/// `(R^k (x) M, R^k (x) N)`, realized as `(M^k, N^k)`.
pub fn tensor_free(m: &Module, n: &Submodule, k: usize) -> Result<(Module, Submodule)> {
    if k == 0 {
        return Err(Error::InvalidInput("free rank must be at least 1".into()));
    }
    if !n.module().same(m) {
        return Err(Error::ModuleMismatch);
    }
    if k == 1 {
        return Ok((m.clone(), n.clone()));
    }
    let comps = m.components().ok_or_else(|| {
        Error::UnsupportedStructure("tensoring needs a sum of cyclic components".into())
    })?;
    let big = Module::new(m.ring(), &comps.repeat(k))?;
    let width = comps.len();
    let mut s = big.empty_set();
    for x in big.elements() {
        let inside = big
            .coords(x)
            .chunks(width.max(1))
            .all(|block| n.contains(m.index_of(block).expect("block coordinates")));
        if inside {
            s.insert(x);
        }
    }
    let nk = big.submodule_from_set(s)?;
    Ok((big, nk))
}
