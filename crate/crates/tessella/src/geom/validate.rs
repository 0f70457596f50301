//! Cross-checks of the catalog constants against the geometric realization.

use super::model::{mirror_setup, MirrorSetup};
use super::patch::{realize_patch, Patch, POINT_TOL};
use crate::catalog::TilingInstance;
use crate::word::{Word, LETTERS};

/// One validation check with its outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Validates an instance's catalog data against its geometric realization:
/// relators hold as isometries, stabilizer words fix their seed tiles,
/// corona words produce the seed vertex's corona in cyclic order, and the
/// full-symmetry predicate agrees with the set of words mapping the patch
/// into itself.
pub fn validate_realization(inst: &TilingInstance) -> ValidationReport {
    let mut report = ValidationReport::default();
    let setup = mirror_setup(&inst.ambient);

    let residual = setup.relator_residual(&inst.ambient);
    report.push(
        "relators",
        residual < 1e-9,
        format!("max residual {residual:.2e}"),
    );

    let patch1 = match realize_patch(inst, &setup, 1) {
        Ok(p) => p,
        Err(e) => {
            report.push("realize", false, format!("{e}"));
            return report;
        }
    };

    // (b) stabilizer words fix their seed tile centers
    for orb in inst.tile_orbits.iter() {
        let center = super::patch::polygon_center(
            &setup.model,
            &orb.corner_words
                .iter()
                .map(|w| setup.word_matrix(w).apply(patch1.seed_vertex))
                .collect::<Vec<_>>(),
        );
        let mut worst = 0.0f64;
        for s in &orb.stabilizer {
            let img = setup.word_matrix(s).apply(center);
            worst = worst.max(super::model::coord_dist(img, center) / super::model::coord_dist(center, [0.0; 3]).max(1.0));
        }
        report.push(
            format!("stabilizer[{}]", orb.name),
            worst < 1e-7,
            format!("max displacement {worst:.2e} over {} words", orb.stabilizer.len()),
        );
    }

    // (c) the corona words reproduce the seed vertex's incident tiles in
    // cyclic order (up to rotation and reversal)
    let seed_tiles: Vec<usize> = patch1.vertices[0].tiles.clone();
    let seed_centers: Vec<_> = inst
        .tile_orbits
        .iter()
        .map(|orb| {
            super::patch::polygon_center(
                &setup.model,
                &orb.corner_words
                    .iter()
                    .map(|cw| setup.word_matrix(cw).apply(patch1.seed_vertex))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let expected: Vec<Option<usize>> = inst
        .vertex_corona
        .iter()
        .map(|(orbit, w)| patch1.tile_at(setup.word_matrix(w).apply(seed_centers[*orbit])))
        .collect();
    let corona_ok = if expected.iter().any(|e| e.is_none()) {
        false
    } else {
        let expected: Vec<usize> = expected.into_iter().map(|e| e.unwrap()).collect();
        cyclically_equal(&seed_tiles, &expected)
    };
    report.push(
        "corona",
        corona_ok && seed_tiles.len() == inst.valency(),
        format!(
            "{} tiles at seed vertex, corona length {}",
            seed_tiles.len(),
            inst.valency()
        ),
    );

    // tile regularity at radius 1
    let irregular = patch1.worst_tile_irregularity();
    report.push(
        "regular-polygons",
        irregular < 1e-7,
        format!("worst corner-radius spread {irregular:.2e}"),
    );

    // (d) the full-symmetry predicate matches the words that map the patch
    // into itself, checked on a word ball of radius 6 for proper subgroups.
    // Words whose image provably escapes the finite patch are inconclusive
    // and skipped rather than misreported.
    if !inst.full_symmetry.is_whole_group() {
        let patch4 = match realize_patch(inst, &setup, 4) {
            Ok(p) => p,
            Err(e) => {
                report.push("parity", false, format!("{e}"));
                return report;
            }
        };
        let model = setup.model;
        let boundary = patch4
            .vertices
            .iter()
            .filter(|v| !v.complete)
            .map(|v| model.distance(patch4.seed_vertex, v.point))
            .fold(f64::INFINITY, f64::min);
        // test set: the seed vertex and its corona tile centers
        let corona_tiles: Vec<&super::patch::PatchTile> = patch1.vertices[0]
            .tiles
            .iter()
            .map(|&t| &patch1.tiles[t])
            .collect();
        let small_diam = corona_tiles
            .iter()
            .map(|t| model.distance(patch1.seed_vertex, t.center))
            .fold(0.0f64, f64::max);
        let mut ok = true;
        let mut tested = 0usize;
        let mut detail = String::new();
        for word in word_ball(6) {
            let m = setup.word_matrix(&word);
            let shift = model.distance(patch1.seed_vertex, m.apply(patch1.seed_vertex));
            if shift + small_diam + 1e-9 >= boundary {
                continue; // image may leave the patch: inconclusive
            }
            tested += 1;
            let claims = inst.full_symmetry.contains(&word);
            let maps = patch4.vertex_at(m.apply(patch1.seed_vertex)).is_some()
                && corona_tiles.iter().all(|t| {
                    patch4
                        .tile_at(m.apply(t.center))
                        .map(|j| patch4.tiles[j].gon == t.gon)
                        .unwrap_or(false)
                });
            if claims != maps {
                ok = false;
                detail = format!("word {word}: predicate {claims}, geometry {maps}");
                break;
            }
        }
        if ok {
            detail = format!("{tested} conclusive words agree");
        }
        report.push("parity", ok && tested > 4, detail);
    }

    // the snub p = q tilings have a reflection along the shared edge of
    // adjacent triangles that is not a word in the ambient group
    if inst.mirror_outside_words {
        match edge_mirror(inst, &setup) {
            Ok(m) => {
                let p3 = realize_patch(inst, &setup, 3).ok();
                let ok = p3
                    .map(|p3| {
                        patch1.tiles.iter().all(|t| {
                            p3.tile_at(m.apply(t.center))
                                .map(|j| p3.tiles[j].gon == t.gon)
                                .unwrap_or(false)
                        })
                    })
                    .unwrap_or(false);
                report.push("edge-mirror", ok, "geometric mirror maps the patch into itself");
            }
            Err(e) => report.push("edge-mirror", false, format!("{e}")),
        }
    }

    report
}

/// The reflection along the geodesic through the seed vertex and its `PQ`
/// neighbour: the shared edge of two adjacent snub triangles. Only a
/// symmetry of the tiling in the snub `p = q` case.
pub fn edge_mirror(
    inst: &TilingInstance,
    setup: &MirrorSetup,
) -> Result<super::model::Mat3, super::model::GeomError> {
    use super::model::{cross, euclidean_dot, GeometryClass, Mat3};
    let v0 = super::solve::generator_point(inst, setup)?.point;
    let v1 = setup.word_matrix(&crate::word::w("PQ")).apply(v0);
    let model = setup.model;
    match model.class {
        GeometryClass::Euclidean => {
            let dx = v1[0] - v0[0];
            let dy = v1[1] - v0[1];
            let n = (dx * dx + dy * dy).sqrt();
            let (ux, uy) = (dx / n, dy / n);
            let l = [
                [2.0 * ux * ux - 1.0, 2.0 * ux * uy],
                [2.0 * ux * uy, 2.0 * uy * uy - 1.0],
            ];
            let tx = v0[0] - (l[0][0] * v0[0] + l[0][1] * v0[1]);
            let ty = v0[1] - (l[1][0] * v0[0] + l[1][1] * v0[1]);
            Ok(Mat3([
                [l[0][0], l[0][1], tx],
                [l[1][0], l[1][1], ty],
                [0.0, 0.0, 1.0],
            ]))
        }
        GeometryClass::Spherical => {
            let n = cross(v0, v1);
            let nn = euclidean_dot(n, n).sqrt();
            let n = super::model::scale(n, 1.0 / nn);
            let mut m = Mat3::IDENTITY;
            for i in 0..3 {
                for j in 0..3 {
                    m.0[i][j] -= 2.0 * n[i] * n[j];
                }
            }
            Ok(m)
        }
        GeometryClass::Hyperbolic => {
            let raw = cross(v0, v1);
            let n = [raw[0], raw[1], -raw[2]];
            let norm = model.bilinear(n, n).abs().sqrt();
            let n = super::model::scale(n, 1.0 / norm);
            let bn = [n[0], n[1], -n[2]];
            let mut m = Mat3::IDENTITY;
            for i in 0..3 {
                for j in 0..3 {
                    m.0[i][j] -= 2.0 * n[i] * bn[j];
                }
            }
            Ok(m)
        }
    }
}

/// All freely reduced words of length <= n.
pub fn word_ball(n: usize) -> Vec<Word> {
    let mut ball = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::new();
        for u in &frontier {
            for l in LETTERS {
                let v = u.concat(&Word::single(l));
                if v.len() > u.len() {
                    next.push(v.clone());
                    ball.push(v);
                }
            }
        }
        frontier = next;
    }
    ball
}

/// Does `word` (as an isometry) map the small patch's tiles and vertices
/// onto tiles and vertices of the big patch?
fn word_maps_patch(big: &Patch, small: &Patch, setup: &MirrorSetup, word: &Word) -> bool {
    let m = setup.word_matrix(word);
    for v in &small.vertices {
        if big.vertex_at(m.apply(v.point)).is_none() {
            return false;
        }
    }
    for t in &small.tiles {
        match big.tile_at(m.apply(t.center)) {
            Some(j) if big.tiles[j].gon == t.gon => {}
            _ => return false,
        }
    }
    true
}

fn cyclically_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    for rev in [false, true] {
        let bb: Vec<usize> = if rev {
            b.iter().rev().cloned().collect()
        } else {
            b.to_vec()
        };
        for shift in 0..n {
            if (0..n).all(|i| a[i] == bb[(i + shift) % n]) {
                return true;
            }
        }
    }
    false
}

/// Quick access to geometric quality numbers used by the acceptance sweeps.
pub struct GeometryQuality {
    pub relator_residual: f64,
    pub edge_spread: f64,
    pub solve_iterations: usize,
    pub solve_residual: f64,
    pub tile_irregularity: f64,
}

pub fn geometry_quality(inst: &TilingInstance, radius: usize) -> Result<GeometryQuality, super::model::GeomError> {
    let setup = mirror_setup(&inst.ambient);
    let patch = realize_patch(inst, &setup, radius)?;
    Ok(GeometryQuality {
        relator_residual: setup.relator_residual(&inst.ambient),
        edge_spread: patch.edge_length_spread(),
        solve_iterations: patch.solve_iterations,
        solve_residual: patch.solve_residual,
        tile_irregularity: patch.worst_tile_irregularity(),
    })
}

const _: () = {
    // keep the tolerance in one place
    assert!(POINT_TOL == 1e-7);
};
