//! Preciseness, perfect-vs-chirally-perfect classification, and the brute
//! force patch audit.

use super::context::{ColoringContext, SymmetryMode};
use super::enumerate::ColoringScheme;
use crate::geom::validate::edge_mirror;
use crate::word::Word;

/// A coloring is precise when no two tiles sharing a vertex have the same
/// color; by vertex transitivity it suffices to check one vertex per
/// H-class.
pub fn is_precise(ctx: &ColoringContext, scheme: &ColoringScheme) -> bool {
    ctx.vertex_reps.iter().all(|u| {
        let colors: Vec<usize> = ctx
            .inst
            .vertex_corona
            .iter()
            .map(|(j, w)| scheme.color_of(ctx, *j, &u.concat(w)))
            .collect();
        let mut seen = vec![false; scheme.m];
        colors.iter().all(|&c| {
            if seen[c] {
                false
            } else {
                seen[c] = true;
                true
            }
        })
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    Perfect,
    ChirallyPerfect,
}

/// Colors of every patch tile under a scheme, in patch order.
pub fn scheme_patch_colors(ctx: &ColoringContext, scheme: &ColoringScheme) -> Vec<usize> {
    ctx.patch
        .tiles
        .iter()
        .map(|t| scheme.color_of(ctx, t.orbit, &t.word))
        .collect()
}

/// Does mapping tile i to `image[i]` send color classes to color classes?
fn colors_map_consistently(
    colors: &[usize],
    image: &[Option<usize>],
    m: usize,
) -> bool {
    let mut map: Vec<Option<usize>> = vec![None; m];
    let mut seen_target: Vec<bool> = vec![false; m];
    for (i, img) in image.iter().enumerate() {
        let Some(j) = img else { continue };
        let (a, b) = (colors[i], colors[*j]);
        match map[a] {
            None => {
                if seen_target[b] {
                    return false; // not injective
                }
                map[a] = Some(b);
                seen_target[b] = true;
            }
            Some(x) if x != b => return false,
            _ => {}
        }
    }
    true
}

/// Classifies a scheme: perfect when the orientation-reversing symmetry of
/// the instance maps color classes to color classes, otherwise chirally
/// perfect. Schemes over the full symmetry group are perfect by
/// construction unless the instance's mirror lies outside the word group.
pub fn classify(ctx: &ColoringContext, scheme: &ColoringScheme) -> Classification {
    let colors = scheme_patch_colors(ctx, scheme);
    if ctx.inst.mirror_outside_words {
        // the geometric mirror through a shared triangle edge
        let mu = match edge_mirror(&ctx.inst, &ctx.setup) {
            Ok(m) => m,
            Err(_) => return Classification::ChirallyPerfect,
        };
        let image = ctx.patch.map_tiles_any(&mu);
        return if colors_map_consistently(&colors, &image, scheme.m) {
            Classification::Perfect
        } else {
            Classification::ChirallyPerfect
        };
    }
    if ctx.mode == SymmetryMode::Full {
        return Classification::Perfect;
    }
    let Some(sigma) = reversing_word(ctx) else {
        return Classification::Perfect; // H is the full group
    };
    let image = ctx.patch.map_tiles_any(&ctx.setup.word_matrix(&sigma));
    if colors_map_consistently(&colors, &image, scheme.m) {
        Classification::Perfect
    } else {
        Classification::ChirallyPerfect
    }
}

/// An orientation-reversing (relative to H) word fixing the seed vertex,
/// when the full symmetry group is word-representable and larger than H.
fn reversing_word(ctx: &ColoringContext) -> Option<Word> {
    ctx.inst
        .vertex_stabilizer
        .iter()
        .chain(ctx.inst.full_symmetry.generators())
        .find(|g| !ctx.h.contains(g))
        .cloned()
}

/// The partition key of a scheme's mirror image, used to pair mirror-related
/// schemes. `None` when the instance has no orientation-reversing symmetry.
pub fn mirrored_key(ctx: &ColoringContext, scheme: &ColoringScheme) -> Option<Vec<u16>> {
    let colors = scheme_patch_colors(ctx, scheme);
    let image = if ctx.inst.mirror_outside_words {
        let mu = edge_mirror(&ctx.inst, &ctx.setup).ok()?;
        ctx.patch.map_tiles_any(&mu)
    } else {
        let sigma = reversing_word(ctx)?;
        ctx.patch.map_tiles_any(&ctx.setup.word_matrix(&sigma))
    };
    let mut mirrored = vec![usize::MAX; colors.len()];
    for (t, img) in image.iter().enumerate() {
        let j = (*img)?;
        mirrored[j] = colors[t];
    }
    if mirrored.iter().any(|&c| c == usize::MAX) {
        return None;
    }
    Some(super::enumerate::partition_key(&mirrored))
}

/// Report from the brute-force audit of a patch coloring.
#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub violations: Vec<String>,
}

impl AuditReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-derives preciseness and equivariance on the patch by brute force:
/// every complete vertex must see pairwise distinct colors, and every
/// generator of H must induce a single well-defined color permutation.
pub fn patch_audit(ctx: &ColoringContext, colors: &[usize]) -> AuditReport {
    let mut report = AuditReport::default();
    let m = colors.iter().max().map(|&c| c + 1).unwrap_or(0);
    for (vi, v) in ctx.patch.vertices.iter().enumerate() {
        if !v.complete {
            continue;
        }
        let mut seen = vec![false; m];
        for &t in &v.tiles {
            let c = colors[t];
            if seen[c] {
                report
                    .violations
                    .push(format!("vertex {vi}: color {c} repeats in its corona"));
                break;
            }
            seen[c] = true;
        }
    }
    for g in ctx.h.generators() {
        let mat = ctx.setup.word_matrix(g);
        let image = ctx.patch.map_tiles(&mat);
        if !colors_map_consistently(colors, &image, m) {
            report
                .violations
                .push(format!("generator {g} does not induce a color permutation"));
        }
    }
    report
}
