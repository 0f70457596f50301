//! Shared state for coloring computations on one tiling instance: the acting
//! symmetry group H, the H-orbits of tiles with their stabilizers, vertex
//! H-classes and a radius-3 patch for partition keys and audits.

use crate::catalog::TilingInstance;
use crate::geom::{mirror_setup, realize_patch, GeomError, MirrorSetup, Patch};
use crate::symmetry::SymmetryClass;
use crate::word::Word;
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SymmetryMode {
    /// Colors permuted by the full symmetry group of the tiling.
    Full,
    /// Colors permuted by the orientation-preserving subgroup only.
    Chiral,
}

/// One H-orbit of tiles: a transitivity class under the acting group H,
/// refining a tile orbit of the full symmetry group.
#[derive(Clone, Debug)]
pub struct HOrbit {
    /// Index into `TilingInstance::tile_orbits`.
    pub tile_orbit: usize,
    /// Word in the full symmetry group mapping the orbit's seed tile to this
    /// H-class representative.
    pub rep: Word,
    /// Generators of the representative tile's stabilizer inside H.
    pub stab: Vec<Word>,
    /// Parity signatures (under H's maps) of words landing in this class.
    sigs: Vec<u32>,
    /// For each covered signature delta, a word in the seed stabilizer with
    /// that signature (used to pull tile words back into H).
    fixer: HashMap<u32, Word>,
}

/// Context for enumerating and checking colorings of one instance under one
/// symmetry mode.
pub struct ColoringContext {
    pub inst: TilingInstance,
    pub mode: SymmetryMode,
    pub h: SymmetryClass,
    pub horbits: Vec<HOrbit>,
    /// Representatives of the vertex H-classes.
    pub vertex_reps: Vec<Word>,
    pub setup: MirrorSetup,
    pub patch: Patch,
}

fn xor_closure(gens: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut set = vec![0u32];
    for g in gens {
        let mut next = set.clone();
        for &s in &set {
            if !next.contains(&(s ^ g)) {
                next.push(s ^ g);
            }
        }
        set = next;
        // closure under the existing elements as well
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for &a in &snapshot {
                for &b in &snapshot {
                    if !set.contains(&(a ^ b)) {
                        set.push(a ^ b);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    set.sort();
    set
}

/// Shortest products of the generators realizing each signature in the
/// closure of their signatures.
fn signature_fixers(gens: &[Word], h: &SymmetryClass) -> HashMap<u32, Word> {
    let mut out: HashMap<u32, Word> = HashMap::new();
    out.insert(0, Word::empty());
    let mut frontier = vec![Word::empty()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for g in gens.iter().flat_map(|g| [g.clone(), g.inverse()]) {
                let v = u.concat(&g);
                let sig = h.signature(&v);
                if !out.contains_key(&sig) {
                    out.insert(sig, v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Transversal words of the full symmetry group, one per signature.
fn gt_transversal(gt: &SymmetryClass, h: &SymmetryClass) -> HashMap<u32, Word> {
    signature_fixers(gt.generators(), h)
}

/// Generators of `(conj <gens> conj^-1) ∩ H` by Schreier's method over the
/// signature quotient.
fn stab_h_generators(gens: &[Word], conj: &Word, h: &SymmetryClass) -> Vec<Word> {
    let conj_gens: Vec<Word> = gens.iter().map(|s| s.conjugate_by(conj)).collect();
    let reps = signature_fixers(&conj_gens, h);
    let mut out: Vec<Word> = Vec::new();
    for u in reps.values() {
        for g in &conj_gens {
            let ug = u.concat(g);
            let r = &reps[&h.signature(&ug)];
            let w = ug.concat(&r.inverse());
            if !w.is_empty() && !out.contains(&w) {
                out.push(w.clone());
                let inv = w.inverse();
                if inv != w && !out.contains(&inv) {
                    out.push(inv);
                }
            }
        }
    }
    out.sort();
    out
}

/// Computes the H-orbits of tiles: one per tile orbit when H is the full
/// group; a split per double coset `H \ G_T / S_j` when H is proper.
pub fn h_orbits(inst: &TilingInstance, h: &SymmetryClass) -> Vec<HOrbit> {
    let gt = &inst.full_symmetry;
    let gt_sigs = xor_closure(gt.generators().iter().map(|g| h.signature(g)));
    let transversal = gt_transversal(gt, h);
    let mut out = Vec::new();
    for (j, orb) in inst.tile_orbits.iter().enumerate() {
        let fixers = signature_fixers(&orb.stabilizer, h);
        let mut stab_sigs: Vec<u32> = fixers.keys().cloned().collect();
        stab_sigs.sort();
        // cosets of the stabilizer signatures inside the G_T signatures
        let mut leaders: Vec<u32> = Vec::new();
        for &s in &gt_sigs {
            let coset_min = stab_sigs.iter().map(|&d| s ^ d).min().unwrap();
            if coset_min == s {
                leaders.push(s);
            }
        }
        leaders.sort();
        for leader in leaders {
            let rep = transversal[&leader].clone();
            let stab = stab_h_generators(&orb.stabilizer, &rep, h);
            let sigs: Vec<u32> = stab_sigs.iter().map(|&d| leader ^ d).collect();
            out.push(HOrbit {
                tile_orbit: j,
                rep,
                stab,
                sigs,
                fixer: fixers.clone(),
            });
        }
    }
    out
}

/// Representatives of the vertex classes under H.
pub fn vertex_class_reps(inst: &TilingInstance, h: &SymmetryClass) -> Vec<Word> {
    let gt = &inst.full_symmetry;
    let gt_sigs = xor_closure(gt.generators().iter().map(|g| h.signature(g)));
    let transversal = gt_transversal(gt, h);
    let fixers = signature_fixers(&inst.vertex_stabilizer, h);
    let stab_sigs: Vec<u32> = fixers.keys().cloned().collect();
    let mut reps = Vec::new();
    for &s in &gt_sigs {
        if stab_sigs.iter().map(|&d| s ^ d).min().unwrap() == s {
            reps.push(transversal[&s].clone());
        }
    }
    reps
}

impl HOrbit {
    pub fn covers_signature(&self, sig: u32) -> bool {
        self.sigs.contains(&sig)
    }

    /// Rewrites a tile word `w` (with `w . seed_tile` in this H-orbit) as
    /// `u . rep_tile` with `u` in H.
    pub fn pull_into_h(&self, w: &Word, h: &SymmetryClass) -> Word {
        let delta = h.signature(w) ^ h.signature(&self.rep);
        let fix = self
            .fixer
            .get(&delta)
            .expect("tile word signature outside its H-orbit");
        w.concat(fix).concat(&self.rep.inverse())
    }
}

impl ColoringContext {
    pub fn new(inst: &TilingInstance, mode: SymmetryMode) -> Result<ColoringContext, GeomError> {
        let h = match mode {
            SymmetryMode::Full => inst.full_symmetry.clone(),
            SymmetryMode::Chiral => inst.chiral_symmetry.clone(),
        };
        let setup = mirror_setup(&inst.ambient);
        let patch = realize_patch(inst, &setup, 3)?;
        let horbits = h_orbits(inst, &h);
        let vertex_reps = vertex_class_reps(inst, &h);
        Ok(ColoringContext {
            inst: inst.clone(),
            mode,
            h,
            horbits,
            vertex_reps,
            setup,
            patch,
        })
    }

    /// Resolves a tile (orbit, word) to its H-orbit index.
    pub fn horbit_of(&self, tile_orbit: usize, word: &Word) -> usize {
        let sig = self.h.signature(word);
        self.horbits
            .iter()
            .position(|o| o.tile_orbit == tile_orbit && o.covers_signature(sig))
            .expect("tile word outside the full symmetry group")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, FamilySpec};

    #[test]
    fn full_mode_has_one_orbit_per_tile_orbit() {
        let inst = instantiate(FamilySpec::Quasi(6, 4)).unwrap();
        let orbits = h_orbits(&inst, &inst.full_symmetry);
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.rep.is_empty()));
    }

    #[test]
    fn snub_chiral_keeps_three_orbits() {
        let inst = instantiate(FamilySpec::Snub5(6, 6)).unwrap();
        let orbits = h_orbits(&inst, &inst.chiral_symmetry);
        assert_eq!(orbits.len(), 3);
    }

    #[test]
    fn quasi_chiral_keeps_two_orbits() {
        // stabilizers contain reflections, so the tile orbits do not split
        let inst = instantiate(FamilySpec::Quasi(6, 4)).unwrap();
        let orbits = h_orbits(&inst, &inst.chiral_symmetry);
        assert_eq!(orbits.len(), 2);
        // the p-gon H-stabilizer is the rotation <QR>
        assert!(orbits[0].stab.contains(&crate::word::w("QR")));
    }

    #[test]
    fn hex6neq_chiral_splits_the_q_gons() {
        let inst = instantiate(FamilySpec::Hex6Neq(3, 4)).unwrap();
        let orbits = h_orbits(&inst, &inst.chiral_symmetry);
        assert_eq!(orbits.len(), 4);
        let q_orbits = orbits.iter().filter(|o| o.tile_orbit == 1).count();
        assert_eq!(q_orbits, 2);
    }

    #[test]
    fn rhombi_full_has_three_orbits() {
        let inst = instantiate(FamilySpec::Rhombi(8, 6)).unwrap();
        let orbits = h_orbits(&inst, &inst.full_symmetry);
        assert_eq!(orbits.len(), 3);
    }
}
