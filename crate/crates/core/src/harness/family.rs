use std::fmt;

use serde::{Deserialize, Serialize};

use crate::module::{Component, Module};
use crate::ring::Ring;

/// Bounds of the enumerated universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFamily {
    /// Largest modulus of a one-coordinate ring.
    pub max_modulus: u32,
    /// Largest modulus of each coordinate of a two-coordinate ring.
    pub max_pair_modulus: u32,
    /// Largest module cardinality.
    pub max_module: usize,
    /// Module bound for checks quantifying over pairs of submodules.
    pub max_quadratic_module: usize,
    /// Module bound for enumerating every hom between two modules.
    pub max_hom_module: usize,
}

impl Default for InstanceFamily {
    fn default() -> Self {
        InstanceFamily {
            max_modulus: 16,
            max_pair_modulus: 4,
            max_module: 36,
            max_quadratic_module: 12,
            max_hom_module: 16,
        }
    }
}

impl InstanceFamily {
    pub fn with_max_module(mut self, max_module: usize) -> Self {
        self.max_module = max_module;
        self
    }

    pub fn with_max_modulus(mut self, max_modulus: u32) -> Self {
        self.max_modulus = max_modulus;
        self
    }

    /// Rings in enumeration order: `Z_n` for `2 <= n <= max_modulus`, then
    /// `Z_a x Z_b` with `2 <= a <= b <= max_pair_modulus`.
    pub fn rings(&self) -> Vec<Ring> {
        let mut out: Vec<Ring> =
            (2..=self.max_modulus).map(|n| Ring::new(&[n]).expect("modulus in range")).collect();
        for a in 2..=self.max_pair_modulus {
            for b in a..=self.max_pair_modulus {
                out.push(Ring::new(&[a, b]).expect("moduli in range"));
            }
        }
        out
    }
}

/// One enumerated `(R, M)`.
#[derive(Clone)]
pub struct Instance {
    pub ring: Ring,
    pub module: Module,
}

impl Instance {
    pub fn id(&self) -> InstanceId {
        InstanceId {
            ring: self.ring.to_string(),
            module: self.module.name().to_string(),
            components: self.module.components().map(<[Component]>::to_vec).unwrap_or_default(),
        }
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.module.name(), self.ring)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.module.name(), self.ring)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceId {
    pub ring: String,
    pub module: String,
    pub components: Vec<Component>,
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.module, self.ring)
    }
}

/// Invariant-factor chains `d_1 | d_2 | ... | d_k` of divisors `>= 2` of
/// `n`, with product at most `bound`.
fn chains(n: u32, bound: usize) -> Vec<Vec<u32>> {
    let divisors: Vec<u32> = (2..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::<u32>::new(), 1usize)];
    while let Some((chain, size)) = frontier.pop() {
        for &d in &divisors {
            if chain.last().is_some_and(|&last| d % last != 0) || size * d as usize > bound {
                continue;
            }
            let mut next = chain.clone();
            next.push(d);
            out.push(next.clone());
            frontier.push((next, size * d as usize));
        }
    }
    out
}

/// Nonzero modules over `ring` with at most `bound` elements, one per
/// isomorphism class, ordered by cardinality then components.
pub fn modules_over(ring: &Ring, bound: usize) -> Vec<Module> {
    let mut shapes: Vec<(usize, Vec<Component>)> = vec![(1, Vec::new())];
    for (coord, &n) in ring.moduli().iter().enumerate() {
        let mut next = Vec::new();
        for (size, comps) in &shapes {
            for chain in chains(n, bound / size) {
                let extra: usize = chain.iter().map(|&d| d as usize).product();
                let mut c = comps.clone();
                c.extend(chain.iter().map(|&order| Component { coord, order }));
                next.push((size * extra, c));
            }
        }
        shapes = next;
    }
    shapes.retain(|(size, _)| *size > 1);
    shapes.sort();
    shapes
        .into_iter()
        .map(|(_, comps)| Module::new(ring, &comps).expect("orders divide their moduli"))
        .collect()
}

/// Every instance within the bounds, in deterministic order.
pub fn generate_instances(family: &InstanceFamily) -> Vec<Instance> {
    if family.max_module < 2 {
        return Vec::new();
    }
    family
        .rings()
        .into_iter()
        .flat_map(|ring| {
            modules_over(&ring, family.max_module)
                .into_iter()
                .map(move |module| Instance { ring: ring.clone(), module })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(ring: &[u32], bound: usize) -> Vec<String> {
        let r = Ring::new(ring).unwrap();
        modules_over(&r, bound).iter().map(|m| m.name().to_string()).collect()
    }

    #[test]
    fn modules_over_z8() {
        assert_eq!(
            names(&[8], 16),
            [
                "Z2", "Z2+Z2", "Z4", "Z2+Z2+Z2", "Z2+Z4", "Z8", "Z2+Z2+Z2+Z2", "Z2+Z2+Z4", "Z2+Z8", "Z4+Z4"
            ]
        );
    }

    #[test]
    fn spec_instances_present() {
        let fam = InstanceFamily { max_modulus: 8, max_pair_modulus: 3, max_module: 16, ..Default::default() };
        let all: Vec<String> = generate_instances(&fam).iter().map(|i| i.to_string()).collect();
        for want in ["Z8 over Z8", "Z2+Z4 over Z8", "Z2@0+Z3@1 over Z2xZ3"] {
            assert!(all.iter().any(|s| s == want), "{want} missing from {all:?}");
        }
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn empty_bound() {
        let fam = InstanceFamily { max_module: 0, ..Default::default() };
        assert!(generate_instances(&fam).is_empty());
    }
}
