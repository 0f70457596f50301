//! Parameter sweeps checking the enumerated coloring counts against the
//! closed-form proposition values.

use super::checks::{classify, mirrored_key, Classification};
use super::context::{ColoringContext, SymmetryMode};
use super::enumerate::{enumerate_colorings, EnumerateOptions};
use crate::catalog::{expected_count, instantiate, CountMode, FamilyId, FamilySpec};
use rayon::prelude::*;

#[derive(Clone, Debug)]
pub struct SweepCell {
    pub spec: FamilySpec,
    pub mode: CountMode,
    pub enumerated: usize,
    pub expected: u32,
    pub pass: bool,
    pub note: String,
}

/// Enumerates the precise schemes of one instance at m = valency under the
/// requested counting mode and compares with the proposition value.
pub fn verify_cell(spec: FamilySpec, mode: CountMode) -> SweepCell {
    let expected = expected_count(spec, mode).unwrap_or(0);
    let run = || -> Result<usize, String> {
        let inst = instantiate(spec).map_err(|e| e.to_string())?;
        let m = inst.valency();
        let opts = EnumerateOptions {
            precise_only: true,
            no_shared_orbit_colors: false,
        };
        let is_snub_pq = matches!(spec, FamilySpec::Snub5(p, q) if p == q);
        let count = match mode {
            CountMode::ChirallyPerfect => {
                // the proposition counts colorings up to the roles of the two
                // polygon classes: mirror-paired partitions count once, and a
                // mirror-invariant partition would be perfect, not chirally
                // perfect
                let ctx = ColoringContext::new(&inst, SymmetryMode::Chiral)
                    .map_err(|e| e.to_string())?;
                let schemes =
                    enumerate_colorings(&ctx, m, &opts).map_err(|e| e.to_string())?;
                let mut chiral_pairs = 0usize;
                let mut unpaired = 0usize;
                for s in &schemes {
                    match mirrored_key(&ctx, s) {
                        Some(k) if k == s.key => {} // mirror-invariant: perfect
                        Some(k) => {
                            if schemes.iter().any(|t| t.key == k) {
                                chiral_pairs += 1;
                            } else {
                                unpaired += 1;
                            }
                        }
                        None => unpaired += 1,
                    }
                }
                if unpaired > 0 {
                    return Err(format!("{unpaired} schemes lack a mirror partner"));
                }
                if chiral_pairs % 2 != 0 {
                    return Err("odd number of mirror-paired schemes".to_string());
                }
                chiral_pairs / 2
            }
            CountMode::Perfect if is_snub_pq => {
                // the full symmetry group is not word-representable here:
                // enumerate over the rotations and keep the schemes whose
                // partition survives the geometric mirror
                let ctx = ColoringContext::new(&inst, SymmetryMode::Chiral)
                    .map_err(|e| e.to_string())?;
                enumerate_colorings(&ctx, m, &opts)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .filter(|s| classify(&ctx, s) == Classification::Perfect)
                    .count()
            }
            CountMode::Perfect => {
                let ctx = ColoringContext::new(&inst, SymmetryMode::Full)
                    .map_err(|e| e.to_string())?;
                enumerate_colorings(&ctx, m, &opts)
                    .map_err(|e| e.to_string())?
                    .len()
            }
        };
        Ok(count)
    };
    match run() {
        Ok(enumerated) => SweepCell {
            spec,
            mode,
            enumerated,
            expected,
            pass: enumerated == expected as usize,
            note: String::new(),
        },
        Err(e) => SweepCell {
            spec,
            mode,
            enumerated: usize::MAX,
            expected,
            pass: false,
            note: e,
        },
    }
}

/// Runs many cells in parallel, preserving input order.
pub fn verify_proposition(cells: &[(FamilySpec, CountMode)]) -> Vec<SweepCell> {
    cells
        .par_iter()
        .map(|(spec, mode)| verify_cell(*spec, *mode))
        .collect()
}

/// The sweep cells for one family over parameter ranges.
pub fn family_cells(
    family: FamilyId,
    p_range: impl IntoIterator<Item = u32> + Clone,
    q_range: impl IntoIterator<Item = u32> + Clone,
    mode: CountMode,
) -> Vec<(FamilySpec, CountMode)> {
    let ps: Vec<u32> = p_range.into_iter().collect();
    let qs: Vec<u32> = q_range.into_iter().collect();
    let mut out = Vec::new();
    match family {
        FamilyId::Quasi => {
            for &p in &ps {
                for &q in &qs {
                    out.push((FamilySpec::Quasi(p, q), mode));
                }
            }
        }
        FamilyId::Rhombi => {
            for &p in &ps {
                for &q in &qs {
                    if p != q {
                        out.push((FamilySpec::Rhombi(p, q), mode));
                    }
                }
            }
        }
        FamilyId::Snub5 => {
            for &p in &ps {
                for &q in &qs {
                    let pq_ok = match mode {
                        CountMode::ChirallyPerfect => p == q,
                        CountMode::Perfect => p != q,
                    };
                    if pq_ok {
                        out.push((FamilySpec::Snub5(p, q), mode));
                    }
                }
            }
        }
        FamilyId::Hex6Eq => {
            for &p in &ps {
                out.push((FamilySpec::Hex6Eq(p), mode));
            }
        }
        FamilyId::Hex6Neq => {
            for &p in &ps {
                for &q in &qs {
                    if p != q {
                        out.push((FamilySpec::Hex6Neq(p, q), mode));
                    }
                }
            }
        }
        FamilyId::ThreeValent => {
            for &p in &ps {
                for &q in &qs {
                    out.push((FamilySpec::ThreeVal(q, 2 * p, 2 * p), mode));
                }
            }
        }
    }
    out
}

/// Convenience wrapper used by the CLI: sweep a family over inclusive
/// ranges.
pub fn verify_family(
    family: FamilyId,
    p_range: (u32, u32),
    q_range: (u32, u32),
    mode: CountMode,
) -> Vec<SweepCell> {
    let cells = family_cells(
        family,
        p_range.0..=p_range.1,
        q_range.0..=q_range.1,
        mode,
    );
    verify_proposition(&cells)
}
