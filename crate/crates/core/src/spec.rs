//! Text formats for rings and modules.
//!
//! Rings: `Z8`, `Z2xZ3` (also `8`, `2x3`). Modules: a comma-separated list
//! of cyclic orders on coordinate 0 (`"2,4"`), or JSON
//! `{"ring":{"moduli":[2,3]},"components":[{"coord":0,"order":2}]}` where
//! `ring` is optional when a ring is given separately.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::module::{Component, Module};
use crate::ring::{Elem, Ring};

pub fn parse_ring(s: &str) -> Result<Ring> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty ring".into()));
    }
    let moduli = t
        .split(['x', 'X', '*'])
        .map(|part| {
            let p = part.trim();
            let digits = p.strip_prefix('Z').or_else(|| p.strip_prefix('z')).unwrap_or(p);
            digits
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad ring factor {part:?} in {s:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    Ring::new(&moduli)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    ring: Option<RingJson>,
    components: Vec<Component>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    moduli: Vec<u32>,
}

/// Parses a module spec. `ring` is required for the inline form and must
/// agree with the JSON `ring` field when both are given.
pub fn parse_module(s: &str, ring: Option<&Ring>) -> Result<Module> {
    let t = s.trim();
    if t.starts_with('{') {
        let spec: ModuleJson =
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("module JSON: {e}")))?;
        let r = match (spec.ring, ring) {
            (Some(j), Some(r)) if j.moduli != r.moduli() => {
                return Err(Error::Parse(format!("module ring {:?} differs from --ring {r}", j.moduli)))
            }
            (Some(j), None) => Ring::new(&j.moduli)?,
            (_, Some(r)) => r.clone(),
            (None, None) => return Err(Error::Parse("module JSON needs a ring".into())),
        };
        return Module::new(&r, &spec.components);
    }
    let r = ring.ok_or_else(|| Error::Parse("inline module specs need --ring".into()))?;
    let components = t
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map(|order| Component { coord: 0, order })
                .map_err(|_| Error::Parse(format!("bad cyclic order {part:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Module::new(r, &components)
}

/// Parses `"1,0;0,2"`-style generator lists: elements separated by `;`,
/// coordinates by `,`.
pub fn parse_elements(m: &Module, s: &str) -> Result<Vec<Elem>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let coords = p
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad coordinate {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            m.index_of(&coords)
        })
        .collect()
}
