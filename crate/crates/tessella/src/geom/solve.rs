//! Generator-point solves: corner points, on-mirror equalization and the
//! interior Newton solve for snub-type tilings.

use super::model::{add, scale, sub, GeomError, MirrorSetup, Vec3};
use crate::catalog::{GeneratorPointRule, TilingInstance};
use crate::word::Word;

/// Result of a generator-point solve.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorPoint {
    pub point: Vec3,
    pub iterations: usize,
    pub residual: f64,
}

const TARGET: f64 = 1e-12;
const MAX_ITER: usize = 100;

/// Finds the seed vertex of the tiling: the point whose orbit closes into
/// equal-length edges around it.
pub fn generator_point(
    inst: &TilingInstance,
    setup: &MirrorSetup,
) -> Result<GeneratorPoint, GeomError> {
    match &inst.generator_point {
        GeneratorPointRule::Corner(i) => Ok(GeneratorPoint {
            point: setup.corners[*i],
            iterations: 0,
            residual: 0.0,
        }),
        GeneratorPointRule::OnMirror { between, .. } => {
            solve_on_mirror(setup, *between, &inst.equal_edge_words)
        }
        GeneratorPointRule::Interior => solve_interior(setup, &inst.equal_edge_words),
    }
}

fn edge_residuals(setup: &MirrorSetup, words: &[Word], v: Vec3) -> Vec<f64> {
    let model = setup.model;
    let ds: Vec<f64> = words
        .iter()
        .map(|w| model.distance(v, setup.word_matrix(w).apply(v)))
        .collect();
    let last = *ds.last().unwrap();
    ds[..ds.len() - 1].iter().map(|d| d - last).collect()
}

fn residual_norm(f: &[f64]) -> f64 {
    f.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
}

/// Safeguarded 1-D Newton on the geodesic between two fundamental corners.
fn solve_on_mirror(
    setup: &MirrorSetup,
    between: (usize, usize),
    words: &[Word],
) -> Result<GeneratorPoint, GeomError> {
    let model = setup.model;
    let a = setup.corners[between.0];
    let b = setup.corners[between.1];
    let point_at = |t: f64| model.interpolate(a, b, t);
    let g = |t: f64| edge_residuals(setup, words, point_at(t))[0];

    let (mut lo, mut hi) = (1e-6, 1.0 - 1e-6);
    let (mut glo, ghi) = (g(lo), g(hi));
    if glo == 0.0 {
        return Ok(GeneratorPoint { point: point_at(lo), iterations: 0, residual: 0.0 });
    }
    if glo * ghi > 0.0 {
        return Err(GeomError::NoConvergence { iterations: 0, residual: glo.abs().min(ghi.abs()) });
    }
    let mut t = 0.5 * (lo + hi);
    let mut gt = g(t);
    for iter in 0..MAX_ITER {
        if gt.abs() < TARGET {
            return Ok(GeneratorPoint { point: point_at(t), iterations: iter, residual: gt.abs() });
        }
        // keep the bracket
        if (gt > 0.0) == (glo > 0.0) {
            lo = t;
            glo = gt;
        } else {
            hi = t;
        }
        let h = 1e-8;
        let dg = (g(t + h) - g(t - h)) / (2.0 * h);
        let mut next = t - gt / dg;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        t = next;
        gt = g(t);
    }
    Err(GeomError::NoConvergence { iterations: MAX_ITER, residual: gt.abs() })
}

/// Damped 2-D Newton for an interior generator point, started from the
/// incenter of the fundamental triangle.
fn solve_interior(setup: &MirrorSetup, words: &[Word]) -> Result<GeneratorPoint, GeomError> {
    let model = setup.model;
    let [c0, c1, c2] = setup.corners;
    let point_at = |x: [f64; 2]| {
        let p = add(c0, add(scale(sub(c1, c0), x[0]), scale(sub(c2, c0), x[1])));
        model.normalize_point(p)
    };

    // incenter: equalize the three mirror edges P, Q, R
    let mirror_words: Vec<Word> = crate::word::LETTERS.iter().map(|&l| Word::single(l)).collect();
    let start = newton2(setup, &mirror_words, [1.0 / 3.0, 1.0 / 3.0], &point_at)?;
    if words.len() == mirror_words.len()
        && words.iter().zip(mirror_words.iter()).all(|(a, b)| a == b)
    {
        return Ok(start.into());
    }
    let x0 = start.chart;
    let sol = newton2(setup, words, x0, &point_at)?;
    Ok(sol.into())
}

struct Newton2Out {
    point: Vec3,
    iterations: usize,
    residual: f64,
    chart: [f64; 2],
}

impl From<Newton2Out> for GeneratorPoint {
    fn from(n: Newton2Out) -> GeneratorPoint {
        GeneratorPoint { point: n.point, iterations: n.iterations, residual: n.residual }
    }
}

fn newton2(
    setup: &MirrorSetup,
    words: &[Word],
    mut x: [f64; 2],
    point_at: &impl Fn([f64; 2]) -> Vec3,
) -> Result<Newton2Out, GeomError> {
    let f = |x: [f64; 2]| edge_residuals(setup, words, point_at(x));
    let mut fx = f(x);
    for iter in 0..MAX_ITER {
        let norm = residual_norm(&fx);
        if norm < TARGET {
            return Ok(Newton2Out { point: point_at(x), iterations: iter, residual: norm, chart: x });
        }
        // numeric Jacobian
        let h = 1e-7;
        let mut jac = [[0.0; 2]; 2];
        for k in 0..2 {
            let mut xp = x;
            let mut xm = x;
            xp[k] += h;
            xm[k] -= h;
            let fp = f(xp);
            let fm = f(xm);
            for r in 0..2 {
                jac[r][k] = (fp[r] - fm[r]) / (2.0 * h);
            }
        }
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if det.abs() < 1e-18 {
            return Err(GeomError::NoConvergence { iterations: iter, residual: norm });
        }
        let dx = [
            (fx[0] * jac[1][1] - fx[1] * jac[0][1]) / det,
            (fx[1] * jac[0][0] - fx[0] * jac[1][0]) / det,
        ];
        // damping: halve the step while the residual grows
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let xn = [x[0] - lambda * dx[0], x[1] - lambda * dx[1]];
            let fn_ = f(xn);
            if residual_norm(&fn_) < norm {
                x = xn;
                fx = fn_;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(GeomError::NoConvergence { iterations: iter, residual: norm });
        }
    }
    let norm = residual_norm(&fx);
    if norm < TARGET {
        Ok(Newton2Out { point: point_at(x), iterations: MAX_ITER, residual: norm, chart: x })
    } else {
        Err(GeomError::NoConvergence { iterations: MAX_ITER, residual: norm })
    }
}

// chart accessor used by solve_interior to chain solves
impl Newton2Out {
    #[allow(dead_code)]
    fn chart(&self) -> [f64; 2] {
        self.chart
    }
}
