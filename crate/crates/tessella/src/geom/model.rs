//! Points, isometries and metric helpers for the three constant-curvature
//! models: the unit sphere, the Euclidean plane (homogeneous coordinates)
//! and the hyperboloid model of the hyperbolic plane.

use crate::group::Presentation;
use std::f64::consts::PI;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeometryClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl std::fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GeometryClass::Spherical => "spherical",
            GeometryClass::Euclidean => "euclidean",
            GeometryClass::Hyperbolic => "hyperbolic",
        };
        write!(f, "{s}")
    }
}

/// Geometry of the `*abc` triangle group by angle sum.
pub fn triangle_group_geometry(pres: &Presentation) -> GeometryClass {
    let [a, b, c] = pres.orders();
    let s = 1.0 / a as f64 + 1.0 / b as f64 + 1.0 / c as f64;
    if (s - 1.0).abs() < 1e-12 {
        GeometryClass::Euclidean
    } else if s > 1.0 {
        GeometryClass::Spherical
    } else {
        GeometryClass::Hyperbolic
    }
}

pub type Vec3 = [f64; 3];

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn sub_norm(&self, other: &Mat3) -> f64 {
        let mut n: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                n = n.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        n
    }

    pub fn pow(&self, n: u32) -> Mat3 {
        let mut out = Mat3::IDENTITY;
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn euclidean_dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Coordinate-space distance, used for point identification where the
/// metric distance loses half the significant digits near zero.
pub fn coord_dist(a: Vec3, b: Vec3) -> f64 {
    let d = sub(a, b);
    euclidean_dot(d, d).sqrt()
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// The three model spaces share this interface: a bilinear form, reflections,
/// point normalization and a distance.
#[derive(Clone, Copy, Debug)]
pub struct Model {
    pub class: GeometryClass,
}

impl Model {
    pub fn new(class: GeometryClass) -> Model {
        Model { class }
    }

    /// Form sign on the third coordinate: +1 sphere, -1 hyperboloid.
    fn form_sign(&self) -> f64 {
        match self.class {
            GeometryClass::Spherical => 1.0,
            GeometryClass::Hyperbolic => -1.0,
            GeometryClass::Euclidean => 0.0,
        }
    }

    pub fn bilinear(&self, a: Vec3, b: Vec3) -> f64 {
        a[0] * b[0] + a[1] * b[1] + self.form_sign() * a[2] * b[2]
    }

    /// Rescales a curved-model point onto its quadric (|<x,x>| = 1 with the
    /// sign appropriate for points); renormalizes the homogeneous coordinate
    /// in the Euclidean model.
    pub fn normalize_point(&self, v: Vec3) -> Vec3 {
        match self.class {
            GeometryClass::Euclidean => [v[0] / v[2], v[1] / v[2], 1.0],
            GeometryClass::Spherical => {
                let n = euclidean_dot(v, v).sqrt();
                scale(v, 1.0 / n)
            }
            GeometryClass::Hyperbolic => {
                let q = -self.bilinear(v, v);
                let s = (1.0 / q.abs().sqrt()) * if v[2] < 0.0 { -1.0 } else { 1.0 };
                scale(v, s)
            }
        }
    }

    pub fn distance(&self, a: Vec3, b: Vec3) -> f64 {
        match self.class {
            GeometryClass::Euclidean => {
                let dx = a[0] - b[0];
                let dy = a[1] - b[1];
                (dx * dx + dy * dy).sqrt()
            }
            GeometryClass::Spherical => self.bilinear(a, b).clamp(-1.0, 1.0).acos(),
            GeometryClass::Hyperbolic => {
                let c = -self.bilinear(a, b);
                c.max(1.0).acosh()
            }
        }
    }

    /// A chart point between `a` and `b` at parameter `t` (0..1).
    pub fn interpolate(&self, a: Vec3, b: Vec3, t: f64) -> Vec3 {
        self.normalize_point(add(scale(a, 1.0 - t), scale(b, t)))
    }

    /// Orientation of an isometry: +1 direct, -1 reversing.
    pub fn orientation(&self, m: &Mat3) -> f64 {
        match self.class {
            GeometryClass::Euclidean => {
                // determinant of the linear part
                (m.0[0][0] * m.0[1][1] - m.0[0][1] * m.0[1][0]).signum()
            }
            _ => m.det().signum(),
        }
    }

    /// Projects a model point to drawing coordinates with `center` sent to
    /// the origin: Poincare disk for the hyperboloid, stereographic from the
    /// antipode of `center` for the sphere, a recentring isometry for the
    /// plane.
    pub fn project(&self, frame: &Frame, v: Vec3) -> [f64; 2] {
        match self.class {
            GeometryClass::Euclidean => [v[0] - frame.center[0], v[1] - frame.center[1]],
            GeometryClass::Spherical => {
                let u = euclidean_dot(v, frame.e1);
                let w = euclidean_dot(v, frame.e2);
                let h = euclidean_dot(v, frame.center);
                [u / (1.0 + h), w / (1.0 + h)]
            }
            GeometryClass::Hyperbolic => {
                let u = self.bilinear(v, frame.e1);
                let w = self.bilinear(v, frame.e2);
                let h = -self.bilinear(v, frame.center);
                [u / (1.0 + h), w / (1.0 + h)]
            }
        }
    }

    /// Orthonormal frame at a point, used for projection and for angular
    /// sorting of incident tiles.
    pub fn frame_at(&self, center: Vec3) -> Frame {
        match self.class {
            GeometryClass::Euclidean => Frame {
                center,
                e1: [1.0, 0.0, 0.0],
                e2: [0.0, 1.0, 0.0],
            },
            _ => {
                let sign = self.form_sign();
                let seed1 = if center[0].abs() < 0.9 * center[2].abs() + 0.1 {
                    [1.0, 0.0, 0.0]
                } else {
                    [0.0, 1.0, 0.0]
                };
                let gram = |x: Vec3, y: Vec3| x[0] * y[0] + x[1] * y[1] + sign * x[2] * y[2];
                let cc = gram(center, center); // +1 sphere, -1 hyperboloid
                let mut e1 = sub(seed1, scale(center, gram(seed1, center) / cc));
                let n1 = gram(e1, e1).abs().sqrt();
                e1 = scale(e1, 1.0 / n1);
                let seed2 = [0.0, 0.0, 1.0];
                let mut e2 = sub(seed2, scale(center, gram(seed2, center) / cc));
                e2 = sub(e2, scale(e1, gram(seed2, e1)));
                let n2 = gram(e2, e2).abs().sqrt();
                if n2 < 1e-12 {
                    let seed3 = [0.0, 1.0, 0.0];
                    e2 = sub(seed3, scale(center, gram(seed3, center) / cc));
                    e2 = sub(e2, scale(e1, gram(seed3, e1)));
                    let n3 = gram(e2, e2).abs().sqrt();
                    e2 = scale(e2, 1.0 / n3);
                } else {
                    e2 = scale(e2, 1.0 / n2);
                }
                // fix the handedness so cyclic sorts agree across vertices
                let det = euclidean_dot(cross(e1, e2), center);
                if det < 0.0 {
                    e2 = scale(e2, -1.0);
                }
                Frame { center, e1, e2 }
            }
        }
    }

    /// Angle of `point` as seen from the frame's center, for cyclic sorting.
    pub fn angle_from(&self, frame: &Frame, point: Vec3) -> f64 {
        match self.class {
            GeometryClass::Euclidean => {
                (point[1] - frame.center[1]).atan2(point[0] - frame.center[0])
            }
            _ => {
                let u = self.bilinear(point, frame.e1);
                let w = self.bilinear(point, frame.e2);
                w.atan2(u)
            }
        }
    }
}

/// Projection frame anchored at a point.
#[derive(Clone, Copy, Debug)]
pub struct Frame {
    pub center: Vec3,
    pub e1: Vec3,
    pub e2: Vec3,
}

/// Reflection matrices for the three mirrors of the fundamental triangle,
/// plus the corner points (index 0 = QR corner, 1 = RP, 2 = PQ).
#[derive(Clone, Debug)]
pub struct MirrorSetup {
    pub model: Model,
    /// Reflection matrices indexed by letter (P, Q, R).
    pub reflections: [Mat3; 3],
    pub corners: [Vec3; 3],
}

#[derive(Debug, thiserror::Error)]
pub enum GeomError {
    #[error("presentation {0} is {1}, not {2}")]
    GeometryMismatch(String, GeometryClass, GeometryClass),
    #[error("generator-point solve failed to converge: residual {residual:.3e} after {iterations} iterations")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("distinct tiles collapsed within tolerance at radius {0}; reduce the patch radius")]
    ToleranceCollision(usize),
    #[error("patch radius must be at least 1 and at most 5, got {0}")]
    BadRadius(usize),
}

/// Builds the mirrors of the `*abc` fundamental triangle in its intrinsic
/// geometry. The Gram matrix of the mirror normals has off-diagonal entries
/// `-cos(pi/n)` for the order `n` of the corresponding rotation.
pub fn mirror_setup(pres: &Presentation) -> MirrorSetup {
    let class = triangle_group_geometry(pres);
    let model = Model::new(class);
    let [a, b, c] = pres.orders();
    match class {
        GeometryClass::Euclidean => euclidean_setup(a, b, c),
        _ => curved_setup(model, a, b, c),
    }
}

fn curved_setup(model: Model, a: u32, b: u32, c: u32) -> MirrorSetup {
    let s = model.form_sign();
    // normals for mirrors P, Q, R with pair angles: (P,Q)=pi/c, (Q,R)=pi/a, (R,P)=pi/b
    let cpq = -(PI / c as f64).cos();
    let cqr = -(PI / a as f64).cos();
    let crp = -(PI / b as f64).cos();
    let np: Vec3 = [1.0, 0.0, 0.0];
    let sq = (1.0 - cpq * cpq).sqrt();
    let nq: Vec3 = [cpq, sq, 0.0];
    let x = crp;
    let y = (cqr - cpq * x) / sq;
    let z2 = (1.0 - x * x - y * y) / s;
    let z = z2.abs().sqrt();
    let nr: Vec3 = [x, y, z];

    let reflect = |n: Vec3| -> Mat3 {
        // x -> x - 2 <x,n> n with <n,n> = 1
        let bn = [n[0], n[1], s * n[2]];
        let mut m = Mat3::IDENTITY;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= 2.0 * n[i] * bn[j];
            }
        }
        m
    };

    let corner = |m1: Vec3, m2: Vec3, opposite: Vec3| -> Vec3 {
        // x with <x,m1> = <x,m2> = 0:  B x ∝ m1 × m2
        let raw = cross(m1, m2);
        let mut x = [raw[0], raw[1], s * raw[2]];
        if model.class == GeometryClass::Hyperbolic && x[2] < 0.0 {
            x = scale(x, -1.0);
        }
        let xn = model.normalize_point(x);
        // keep the corner on the inner side of the opposite mirror
        if model.bilinear(xn, opposite) < 0.0 {
            model.normalize_point(scale(xn, -1.0))
        } else {
            xn
        }
    };

    MirrorSetup {
        model,
        reflections: [reflect(np), reflect(nq), reflect(nr)],
        corners: [corner(nq, nr, np), corner(nr, np, nq), corner(np, nq, nr)],
    }
}

fn euclidean_setup(a: u32, b: u32, c: u32) -> MirrorSetup {
    let model = Model::new(GeometryClass::Euclidean);
    let alpha = PI / a as f64; // angle at QR corner
    let beta = PI / b as f64; // at RP corner
    let gamma = PI / c as f64; // at PQ corner
    let c0: Vec3 = [0.0, 0.0, 1.0]; // QR corner
    let c1: Vec3 = [1.0, 0.0, 1.0]; // RP corner
    let r02 = beta.sin() / gamma.sin();
    let c2: Vec3 = [r02 * alpha.cos(), r02 * alpha.sin(), 1.0]; // PQ corner

    let line_reflection = |p: Vec3, q: Vec3| -> Mat3 {
        let dx = q[0] - p[0];
        let dy = q[1] - p[1];
        let n = (dx * dx + dy * dy).sqrt();
        let (ux, uy) = (dx / n, dy / n);
        let l = [
            [2.0 * ux * ux - 1.0, 2.0 * ux * uy],
            [2.0 * ux * uy, 2.0 * uy * uy - 1.0],
        ];
        // x -> p + L (x - p)
        let tx = p[0] - (l[0][0] * p[0] + l[0][1] * p[1]);
        let ty = p[1] - (l[1][0] * p[0] + l[1][1] * p[1]);
        Mat3([
            [l[0][0], l[0][1], tx],
            [l[1][0], l[1][1], ty],
            [0.0, 0.0, 1.0],
        ])
    };

    MirrorSetup {
        model,
        // P through C1,C2; Q through C0,C2; R through C0,C1
        reflections: [
            line_reflection(c1, c2),
            line_reflection(c0, c2),
            line_reflection(c0, c1),
        ],
        corners: [c0, c1, c2],
    }
}

impl MirrorSetup {
    pub fn letter_matrix(&self, l: crate::word::Letter) -> &Mat3 {
        &self.reflections[l.index()]
    }

    pub fn word_matrix(&self, w: &crate::word::Word) -> Mat3 {
        w.letters()
            .iter()
            .fold(Mat3::IDENTITY, |m, &l| m.mul(&self.reflections[l.index()]))
    }

    /// Largest relator residual over the six relators.
    pub fn relator_residual(&self, pres: &Presentation) -> f64 {
        let mut worst: f64 = 0.0;
        for l in crate::word::LETTERS {
            let m = self.letter_matrix(l);
            worst = worst.max(m.mul(m).sub_norm(&Mat3::IDENTITY));
        }
        for rel in pres.rotation_relators() {
            worst = worst.max(self.word_matrix(&rel).sub_norm(&Mat3::IDENTITY));
        }
        worst
    }
}
