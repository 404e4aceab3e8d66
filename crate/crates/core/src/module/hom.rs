use std::fmt;

use super::{Module, Submodule};
use crate::error::{Error, Result};
use crate::ring::Elem;

/// An `R`-linear map between finite modules, stored as a full table.
#[derive(Clone)]
pub struct ModuleHom {
    source: Module,
    target: Module,
    map: Vec<Elem>,
    kernel: Submodule,
    image: Submodule,
}

impl ModuleHom {
    /// The hom sending the `j`-th cyclic generator of `source` to
    /// `images[j]`. The annihilator of each generator must kill its image.
    pub fn new(source: &Module, target: &Module, images: &[Elem]) -> Result<ModuleHom> {
        if !source.ring().same(target.ring()) {
            return Err(Error::RingMismatch);
        }
        let comps = source.components().ok_or_else(|| {
            Error::UnsupportedStructure("hom source must be a sum of cyclic components".into())
        })?;
        if images.len() != comps.len() {
            return Err(Error::InvalidInput(format!(
                "{} images for {} generators",
                images.len(),
                comps.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.cardinality()) {
            return Err(Error::InvalidInput(format!("{bad} is not an element of {target}")));
        }
        let ring = source.ring();
        let unit = |j: usize| -> Elem {
            let mut c = vec![0u32; comps.len()];
            c[j] = 1 % comps[j].order;
            source.index_of(&c).expect("unit vector")
        };
        for (j, &y) in images.iter().enumerate() {
            let e = unit(j);
            if let Some(r) = ring
                .elements()
                .find(|&r| source.act(r, e) == 0 && target.act(r, y) != 0)
            {
                return Err(Error::RelationViolation(format!(
                    "{} kills generator {j} but not its image {}",
                    ring.element(r),
                    target.element(y)
                )));
            }
        }
        let map = source
            .elements()
            .map(|m| {
                source.coords(m).iter().zip(images).fold(0, |acc, (&c, &y)| {
                    target.add(acc, target.act(ring.from_int(c as i64), y))
                })
            })
            .collect();
        ModuleHom::from_table(source, target, map)
    }

    /// Wraps an explicit table after checking additivity and `R`-linearity.
    pub fn from_table(source: &Module, target: &Module, map: Vec<Elem>) -> Result<ModuleHom> {
        if !source.ring().same(target.ring()) {
            return Err(Error::RingMismatch);
        }
        if map.len() != source.cardinality() || map.iter().any(|&y| y >= target.cardinality()) {
            return Err(Error::InvalidInput("hom table has the wrong shape".into()));
        }
        let ring = source.ring();
        for m in source.elements() {
            for n in source.elements() {
                if map[source.add(m, n)] != target.add(map[m], map[n]) {
                    return Err(Error::RelationViolation("table is not additive".into()));
                }
            }
            for r in ring.elements() {
                if map[source.act(r, m)] != target.act(r, map[m]) {
                    return Err(Error::RelationViolation("table is not R-linear".into()));
                }
            }
        }
        let mut ker = source.empty_set();
        let mut img = target.empty_set();
        for (m, &y) in map.iter().enumerate() {
            if y == 0 {
                ker.insert(m);
            }
            img.insert(y);
        }
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            kernel: source.submodule_unchecked(ker),
            image: target.submodule_unchecked(img),
            map,
        })
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::from_table(m, m, m.elements().collect()).expect("identity is linear")
    }

    pub fn zero(source: &Module, target: &Module) -> Result<ModuleHom> {
        ModuleHom::from_table(source, target, vec![0; source.cardinality()])
    }

    /// Every hom `source -> target`. The source must be a sum of cyclics.
    pub fn enumerate(source: &Module, target: &Module) -> Result<Vec<ModuleHom>> {
        let comps = source.components().ok_or_else(|| {
            Error::UnsupportedStructure("hom source must be a sum of cyclic components".into())
        })?;
        let ring = source.ring();
        // Admissible images for each generator: elements killed by its annihilator.
        let mut choices: Vec<Vec<Elem>> = Vec::with_capacity(comps.len());
        for (j, comp) in comps.iter().enumerate() {
            let mut c = vec![0u32; comps.len()];
            c[j] = 1 % comp.order;
            let e = source.index_of(&c)?;
            let ann: Vec<Elem> = ring.elements().filter(|&r| source.act(r, e) == 0).collect();
            choices.push(
                target
                    .elements()
                    .filter(|&y| ann.iter().all(|&r| target.act(r, y) == 0))
                    .collect(),
            );
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; comps.len()];
        loop {
            let images: Vec<Elem> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            out.push(ModuleHom::new(source, target, &images)?);
            let mut k = pick.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
            }
        }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    #[inline]
    pub fn apply(&self, m: Elem) -> Elem {
        self.map[m]
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    pub fn kernel(&self) -> &Submodule {
        &self.kernel
    }

    pub fn image(&self) -> &Submodule {
        &self.image
    }

    pub fn is_epimorphism(&self) -> bool {
        !self.image.is_proper()
    }

    pub fn is_monomorphism(&self) -> bool {
        self.kernel.is_zero()
    }

    /// `f(N)` for a submodule of the source.
    pub fn image_of(&self, n: &Submodule) -> Result<Submodule> {
        if !n.module().same(&self.source) {
            return Err(Error::ModuleMismatch);
        }
        let mut s = self.target.empty_set();
        for m in n.elements() {
            s.insert(self.map[m]);
        }
        Ok(self.target.submodule_unchecked(s))
    }

    /// `f^{-1}(N')` for a submodule of the target.
    pub fn preimage(&self, n: &Submodule) -> Result<Submodule> {
        if !n.module().same(&self.target) {
            return Err(Error::ModuleMismatch);
        }
        let mut s = self.source.empty_set();
        for m in self.source.elements() {
            if n.contains(self.map[m]) {
                s.insert(m);
            }
        }
        Ok(self.source.submodule_unchecked(s))
    }
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({} -> {})", self.source.name(), self.target.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{quotient_module, Component};
    use crate::ring::Ring;

    fn z(n: u32, order: u32) -> Module {
        Module::new(&Ring::new(&[n]).unwrap(), &[Component { coord: 0, order }]).unwrap()
    }

    #[test]
    fn relation_check() {
        let z8 = z(8, 8);
        let z4 = z(8, 4);
        // 1 in Z4 is killed by 4, but 1 in Z8 is not.
        assert!(matches!(
            ModuleHom::new(&z4, &z8, &[1]),
            Err(Error::RelationViolation(_))
        ));
        let f = ModuleHom::new(&z4, &z8, &[2]).unwrap();
        assert!(f.is_monomorphism());
        assert_eq!(f.image().len(), 4);
        let g = ModuleHom::new(&z8, &z4, &[1]).unwrap();
        assert!(g.is_epimorphism());
        assert_eq!(g.kernel().len(), 2);
    }

    #[test]
    fn identity_and_zero() {
        let m = z(8, 8);
        let id = ModuleHom::identity(&m);
        let zero = ModuleHom::zero(&m, &m).unwrap();
        for n in m.enumerate_submodules().unwrap() {
            assert_eq!(id.image_of(&n).unwrap(), n);
            assert_eq!(id.preimage(&n).unwrap(), n);
            assert!(zero.image_of(&n).unwrap().is_zero());
        }
    }

    #[test]
    fn projection_preimage() {
        let m = z(8, 8);
        let l = m.submodule_generated(&[4]).unwrap();
        let q = quotient_module(&m, &l).unwrap();
        let class_of_two = q.module.submodule_generated(&[q.projection.apply(2)]).unwrap();
        let back = q.projection.preimage(&class_of_two).unwrap();
        assert_eq!(back, m.submodule_generated(&[2]).unwrap());
    }

    #[test]
    fn enumerate_counts() {
        // Hom(Z4, Z8) = Z4, Hom(Z8, Z4) = Z4, Hom(Z2+Z2, Z2) = Z2^2 over Z2.
        assert_eq!(ModuleHom::enumerate(&z(8, 4), &z(8, 8)).unwrap().len(), 4);
        assert_eq!(ModuleHom::enumerate(&z(8, 8), &z(8, 4)).unwrap().len(), 4);
        let z2 = Ring::new(&[2]).unwrap();
        let plane = Module::new(&z2, &[Component { coord: 0, order: 2 }; 2]).unwrap();
        let line = Module::regular(&z2);
        assert_eq!(ModuleHom::enumerate(&plane, &line).unwrap().len(), 4);
    }
}
