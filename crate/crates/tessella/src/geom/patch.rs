//! Finite geometric patches: tiles with polygon coordinates, canonical
//! identities by center-point hashing, and vertex incidence.

use super::model::{add, scale, GeomError, Mat3, MirrorSetup, Model, Vec3};
use super::solve::generator_point;
use crate::catalog::TilingInstance;
use crate::word::Word;
use std::collections::HashMap;

/// Relative tolerance for point identification.
pub const POINT_TOL: f64 = 1e-7;

#[derive(Clone, Debug)]
pub struct PatchTile {
    pub orbit: usize,
    pub word: Word,
    pub gon: u32,
    pub center: Vec3,
    pub corners: Vec<Vec3>,
    pub corner_vertices: Vec<usize>,
    pub layer: usize,
}

#[derive(Clone, Debug)]
pub struct PatchVertex {
    pub point: Vec3,
    pub word: Word,
    pub layer: usize,
    /// Incident patch tiles in cyclic order around the vertex.
    pub tiles: Vec<usize>,
    /// True when all `valency` tiles around this vertex are in the patch.
    pub complete: bool,
}

/// A finite piece of the tiling: all tiles within `radius` coronas of the
/// seed vertex.
#[derive(Clone, Debug)]
pub struct Patch {
    pub radius: usize,
    pub model: Model,
    pub seed_vertex: Vec3,
    pub tiles: Vec<PatchTile>,
    pub vertices: Vec<PatchVertex>,
    centers: PointIndex,
    vertex_index: PointIndex,
    pub solve_iterations: usize,
    pub solve_residual: f64,
}

/// Spatial hash with per-point relative quantization; lookups probe the 27
/// neighbouring cells so points within tolerance always collide.
#[derive(Clone, Debug, Default)]
struct PointIndex {
    cells: HashMap<[i64; 3], Vec<u32>>,
    points: Vec<Vec3>,
}

fn point_scale(p: Vec3) -> f64 {
    1.0 + p[0].abs().max(p[1].abs()).max(p[2].abs())
}

impl PointIndex {
    fn key(p: Vec3) -> [i64; 3] {
        let q = 20.0 * POINT_TOL * point_scale(p);
        [
            (p[0] / q).round() as i64,
            (p[1] / q).round() as i64,
            (p[2] / q).round() as i64,
        ]
    }

    fn close(a: Vec3, b: Vec3) -> bool {
        let tol = POINT_TOL * point_scale(a);
        (a[0] - b[0]).abs() <= tol && (a[1] - b[1]).abs() <= tol && (a[2] - b[2]).abs() <= tol
    }

    fn find(&self, p: Vec3) -> Option<u32> {
        let k = Self::key(p);
        for dx in -1..=1i64 {
            for dy in -1..=1i64 {
                for dz in -1..=1i64 {
                    if let Some(ids) = self.cells.get(&[k[0] + dx, k[1] + dy, k[2] + dz]) {
                        for &id in ids {
                            if Self::close(p, self.points[id as usize]) {
                                return Some(id);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn insert(&mut self, p: Vec3, id: u32) {
        debug_assert_eq!(id as usize, self.points.len());
        self.points.push(p);
        self.cells.entry(Self::key(p)).or_default().push(id);
    }
}

/// Builds the patch of all tiles within `radius` coronas of the seed vertex.
pub fn realize_patch(
    inst: &TilingInstance,
    setup: &MirrorSetup,
    radius: usize,
) -> Result<Patch, GeomError> {
    if radius == 0 || radius > 5 {
        return Err(GeomError::BadRadius(radius));
    }
    let gp = generator_point(inst, setup)?;
    let v0 = gp.point;
    let model = setup.model;

    // seed polygon corners and centers per orbit
    let seed_corners: Vec<Vec<Vec3>> = inst
        .tile_orbits
        .iter()
        .map(|orb| {
            orb.corner_words
                .iter()
                .map(|w| setup.word_matrix(w).apply(v0))
                .collect()
        })
        .collect();
    let seed_centers: Vec<Vec3> = seed_corners.iter().map(|cs| polygon_center(&model, cs)).collect();

    let mut patch = Patch {
        radius,
        model,
        seed_vertex: v0,
        tiles: Vec::new(),
        vertices: Vec::new(),
        centers: PointIndex::default(),
        vertex_index: PointIndex::default(),
        solve_iterations: gp.iterations,
        solve_residual: gp.residual,
    };
    patch.vertices.push(PatchVertex {
        point: v0,
        word: Word::empty(),
        layer: 0,
        tiles: Vec::new(),
        complete: false,
    });
    patch.vertex_index.insert(v0, 0);

    let mut frontier: Vec<usize> = vec![0];
    for layer in 1..=radius {
        let mut next_frontier: Vec<usize> = Vec::new();
        for &vid in &frontier {
            let base = patch.vertices[vid].word.clone();
            for (orbit, cw) in &inst.vertex_corona {
                let tile_word = base.concat(cw);
                let mat = setup.word_matrix(&tile_word);
                let center = mat.apply(seed_centers[*orbit]);
                if let Some(existing) = patch.centers.find(center) {
                    let t = &patch.tiles[existing as usize];
                    if t.orbit != *orbit {
                        return Err(GeomError::ToleranceCollision(radius));
                    }
                    continue;
                }
                let tid = patch.tiles.len() as u32;
                let corners: Vec<Vec3> =
                    seed_corners[*orbit].iter().map(|&c| mat.apply(c)).collect();
                let mut corner_vertices = Vec::with_capacity(corners.len());
                for (ci, &cpt) in corners.iter().enumerate() {
                    let vid2 = match patch.vertex_index.find(cpt) {
                        Some(v) => v as usize,
                        None => {
                            let v = patch.vertices.len();
                            patch.vertices.push(PatchVertex {
                                point: cpt,
                                word: tile_word
                                    .concat(&inst.tile_orbits[*orbit].corner_words[ci]),
                                layer,
                                tiles: Vec::new(),
                                complete: false,
                            });
                            patch.vertex_index.insert(cpt, v as u32);
                            next_frontier.push(v);
                            v
                        }
                    };
                    corner_vertices.push(vid2);
                }
                patch.centers.insert(center, tid);
                patch.tiles.push(PatchTile {
                    orbit: *orbit,
                    word: tile_word,
                    gon: inst.tile_orbits[*orbit].gon,
                    center,
                    corners,
                    corner_vertices,
                    layer,
                });
            }
        }
        if next_frontier.is_empty() && layer < radius {
            break; // spherical patch closed up early
        }
        frontier = next_frontier;
    }

    // vertex incidence in cyclic order
    let valency = inst.valency();
    for (ti, tile) in patch.tiles.iter().enumerate() {
        for &vid in &tile.corner_vertices {
            patch.vertices[vid].tiles.push(ti);
        }
    }
    for v in patch.vertices.iter_mut() {
        let frame = model.frame_at(v.point);
        v.tiles
            .sort_by(|&a, &b| {
                let aa = model.angle_from(&frame, patch.tiles[a].center);
                let ab = model.angle_from(&frame, patch.tiles[b].center);
                aa.partial_cmp(&ab).unwrap()
            });
        v.complete = v.tiles.len() == valency;
    }
    Ok(patch)
}

pub fn polygon_center(model: &Model, corners: &[Vec3]) -> Vec3 {
    let sum = corners.iter().fold([0.0; 3], |acc, &c| add(acc, c));
    model.normalize_point(scale(sum, 1.0 / corners.len() as f64))
}

impl Patch {
    /// Patch tile whose center matches `point`, if any.
    pub fn tile_at(&self, point: Vec3) -> Option<usize> {
        self.centers.find(point).map(|i| i as usize)
    }

    pub fn vertex_at(&self, point: Vec3) -> Option<usize> {
        self.vertex_index.find(point).map(|i| i as usize)
    }

    /// Maps every tile through an isometry; `None` where the image is not in
    /// the patch. The image must stay in the same tile orbit.
    pub fn map_tiles(&self, m: &Mat3) -> Vec<Option<usize>> {
        self.tiles
            .iter()
            .map(|t| {
                self.tile_at(m.apply(t.center))
                    .filter(|&j| self.tiles[j].orbit == t.orbit)
            })
            .collect()
    }

    /// Like `map_tiles` but allows the image to land in a different orbit of
    /// the same gon (mirrors may swap orbits).
    pub fn map_tiles_any(&self, m: &Mat3) -> Vec<Option<usize>> {
        self.tiles
            .iter()
            .map(|t| {
                self.tile_at(m.apply(t.center))
                    .filter(|&j| self.tiles[j].gon == t.gon)
            })
            .collect()
    }

    /// Max relative spread of edge lengths over the whole patch: edges are
    /// consecutive corner pairs of every tile.
    pub fn edge_length_spread(&self) -> f64 {
        let mut min = f64::INFINITY;
        let mut max = 0.0f64;
        for t in &self.tiles {
            let n = t.corners.len();
            for i in 0..n {
                let d = self.model.distance(t.corners[i], t.corners[(i + 1) % n]);
                min = min.min(d);
                max = max.max(d);
            }
        }
        (max - min) / max
    }

    /// Regularity of each tile: relative spread of its corner distances from
    /// the center plus edge-length spread within the tile.
    pub fn worst_tile_irregularity(&self) -> f64 {
        let mut worst = 0.0f64;
        for t in &self.tiles {
            let rs: Vec<f64> = t
                .corners
                .iter()
                .map(|&c| self.model.distance(t.center, c))
                .collect();
            let rmin = rs.iter().cloned().fold(f64::INFINITY, f64::min);
            let rmax = rs.iter().cloned().fold(0.0f64, f64::max);
            worst = worst.max((rmax - rmin) / rmax);
        }
        worst
    }

    /// Exports the line-oriented `tessella-patch v1` text format: one tile
    /// per line with orbit, word, gon and projected polygon coordinates.
    pub fn export(&self) -> String {
        let frame = self.model.frame_at(self.seed_vertex);
        let mut out = String::from("tessella-patch v1\n");
        for t in &self.tiles {
            let mut line = format!("{} {} {}", t.orbit, t.word, t.gon);
            for &c in &t.corners {
                let [x, y] = self.model.project(&frame, c);
                line.push_str(&format!(" {x:.6},{y:.6}"));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}
