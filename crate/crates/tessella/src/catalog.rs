//! The catalog of tiling families: symmetry data, tile orbits, seed coronas
//! and the closed-form coloring counts.
//!
//! Conventions: the ambient group is always a `*abc` triangle group with
//! rotation orders (QR, RP, PQ) = (a, b, c); corner 0 is the QR corner and
//! so on. Tile polygons are orbits of the seed vertex, described by corner
//! words; the corona lists the tiles around the seed vertex in cyclic order
//! as (orbit index, word) pairs. Corona and corner words were derived from
//! the geometric realization once and are validated against it by
//! `geom::validate_realization`.

use crate::geom::model::{triangle_group_geometry, GeometryClass};
use crate::group::{build_triangle_group, Presentation};
use crate::symmetry::SymmetryClass;
use crate::word::{w, Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    /// `(q.2p'.2p')` truncated and `(2a.2b.2c)` omnitruncated 3-valent tilings.
    ThreeValent,
    /// `(p.q.p.q)` quasiregular tilings.
    Quasi,
    /// `(p.4.q.4)` rhombitilings.
    Rhombi,
    /// `(3.3.p.3.q)` snub tilings, including `p = q`.
    Snub5,
    /// `(3.p.3.p.3.p)` 6-valent tilings.
    Hex6Eq,
    /// `(3.p.3.q.3.q)` 6-valent tilings with `p != q`.
    Hex6Neq,
}

/// A family bound to its numeric parameters, as written on the CLI:
/// `quasi:p,q`, `rhombi:p,q`, `snub5:p,q`, `hex6eq:p`, `hex6neq:p,q`,
/// `3val:a,b,c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilySpec {
    ThreeVal(u32, u32, u32),
    Quasi(u32, u32),
    Rhombi(u32, u32),
    Snub5(u32, u32),
    Hex6Eq(u32),
    Hex6Neq(u32, u32),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid parameters for {0}: {1}")]
    InvalidParameters(&'static str, String),
    #[error("unknown family spec {0:?}")]
    UnknownSpec(String),
    #[error("counting mode not defined for this family/parameters")]
    IncompatibleMode,
}

impl FamilySpec {
    pub fn family(&self) -> FamilyId {
        match self {
            FamilySpec::ThreeVal(..) => FamilyId::ThreeValent,
            FamilySpec::Quasi(..) => FamilyId::Quasi,
            FamilySpec::Rhombi(..) => FamilyId::Rhombi,
            FamilySpec::Snub5(..) => FamilyId::Snub5,
            FamilySpec::Hex6Eq(..) => FamilyId::Hex6Eq,
            FamilySpec::Hex6Neq(..) => FamilyId::Hex6Neq,
        }
    }

    /// Parses CLI syntax like `quasi:6,4` or `3val:4,6,12`.
    pub fn parse(s: &str) -> Result<FamilySpec, CatalogError> {
        let bad = || CatalogError::UnknownSpec(s.to_string());
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u32> = args
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match (name.trim(), nums.as_slice()) {
            ("quasi", [p, q]) => Ok(FamilySpec::Quasi(*p, *q)),
            ("rhombi", [p, q]) => Ok(FamilySpec::Rhombi(*p, *q)),
            ("snub5", [p, q]) => Ok(FamilySpec::Snub5(*p, *q)),
            ("hex6eq", [p]) => Ok(FamilySpec::Hex6Eq(*p)),
            ("hex6neq", [p, q]) => Ok(FamilySpec::Hex6Neq(*p, *q)),
            ("3val", [a, b, c]) => Ok(FamilySpec::ThreeVal(*a, *b, *c)),
            _ => Err(bad()),
        }
    }

    pub fn to_cli_string(&self) -> String {
        match self {
            FamilySpec::ThreeVal(a, b, c) => format!("3val:{a},{b},{c}"),
            FamilySpec::Quasi(p, q) => format!("quasi:{p},{q}"),
            FamilySpec::Rhombi(p, q) => format!("rhombi:{p},{q}"),
            FamilySpec::Snub5(p, q) => format!("snub5:{p},{q}"),
            FamilySpec::Hex6Eq(p) => format!("hex6eq:{p}"),
            FamilySpec::Hex6Neq(p, q) => format!("hex6neq:{p},{q}"),
        }
    }
}

/// One transitivity class of tiles under the tiling's full symmetry group.
#[derive(Clone, Debug)]
pub struct TileOrbitSpec {
    pub name: &'static str,
    pub gon: u32,
    /// Generators of the seed tile's stabilizer inside the full symmetry
    /// group of the tiling.
    pub stabilizer: Vec<Word>,
    /// Word placing the canonical seed tile of this orbit (identity for all
    /// catalog seeds).
    pub rep_anchor: Word,
    /// Words mapping the seed vertex to the seed tile's polygon corners, in
    /// cyclic order.
    pub corner_words: Vec<Word>,
}

/// Where the generator point (the seed vertex) lives, and how to find it.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorPointRule {
    /// A corner of the fundamental triangle (0 = QR, 1 = RP, 2 = PQ).
    Corner(usize),
    /// On the geodesic between two corners, solved so the listed edge words
    /// give equal edge lengths at the seed vertex.
    OnMirror { mirror: Letter, between: (usize, usize) },
    /// Interior point solved by 2-D Newton iteration for equal edge lengths.
    Interior,
}

/// A tiling family bound to parameters, with everything the coloring engine
/// and the realizer need.
#[derive(Clone, Debug)]
pub struct TilingInstance {
    pub spec: FamilySpec,
    pub ambient: Presentation,
    /// The tiling's full symmetry group as a subgroup of the ambient group.
    pub full_symmetry: SymmetryClass,
    /// Orientation-preserving symmetries.
    pub chiral_symmetry: SymmetryClass,
    /// True when the tiling has reflection symmetries that are not words in
    /// the ambient group (the snub `p = q` case); chirality classification
    /// then falls back to the geometric mirror.
    pub mirror_outside_words: bool,
    pub tile_orbits: Vec<TileOrbitSpec>,
    /// Tiles around the seed vertex in cyclic order: (orbit index, word).
    pub vertex_corona: Vec<(usize, Word)>,
    /// Generators of the seed vertex's stabilizer inside the full symmetry
    /// group.
    pub vertex_stabilizer: Vec<Word>,
    pub geometry_class: GeometryClass,
    pub generator_point: GeneratorPointRule,
    /// Words `u` whose edges `v - u v` at the seed vertex must share one
    /// length (drives the generator-point solves).
    pub equal_edge_words: Vec<Word>,
}

impl TilingInstance {
    pub fn valency(&self) -> usize {
        self.vertex_corona.len()
    }

    /// The vertex configuration in dot notation, e.g. `(3.3.6.3.6)`.
    pub fn vertex_config(&self) -> Vec<u32> {
        self.vertex_corona
            .iter()
            .map(|(j, _)| self.tile_orbits[*j].gon)
            .collect()
    }

    pub fn config_string(&self) -> String {
        let parts: Vec<String> = self.vertex_config().iter().map(|g| g.to_string()).collect();
        format!("({})", parts.join("."))
    }
}

/// Standard angle-sum criterion on a vertex configuration.
pub fn classify_geometry(config: &[u32]) -> GeometryClass {
    let interior: f64 = config.iter().map(|&g| (g as f64 - 2.0) / g as f64).sum();
    let defect = interior - 2.0; // multiples of pi
    if defect.abs() < 1e-9 {
        GeometryClass::Euclidean
    } else if defect < 0.0 {
        GeometryClass::Spherical
    } else {
        GeometryClass::Hyperbolic
    }
}

fn check(cond: bool, family: &'static str, msg: &str) -> Result<(), CatalogError> {
    if cond {
        Ok(())
    } else {
        Err(CatalogError::InvalidParameters(family, msg.to_string()))
    }
}

/// Builds the full instance for a family and parameters.
pub fn instantiate(spec: FamilySpec) -> Result<TilingInstance, CatalogError> {
    match spec {
        FamilySpec::Quasi(p, q) => quasi(p, q),
        FamilySpec::Rhombi(p, q) => rhombi(p, q),
        FamilySpec::Snub5(p, q) => snub5(p, q),
        FamilySpec::Hex6Eq(p) => hex6eq(p),
        FamilySpec::Hex6Neq(p, q) => hex6neq(p, q),
        FamilySpec::ThreeVal(a, b, c) => three_valent(a, b, c),
    }
}

fn rotation_word(x: Letter, y: Letter, n: usize) -> Word {
    Word::from_letters(std::iter::repeat([x, y]).take(n).flatten())
}

/// Corner words of a polygon whose vertices are the full dihedral orbit of
/// the seed vertex: v, Yv, YXv, YXYv, ... (2n corners).
fn dihedral_corner_words(first: Letter, second: Letter, n: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(2 * n);
    let mut cur = Word::empty();
    for i in 0..2 * n {
        out.push(cur.clone());
        let l = if i % 2 == 0 { first } else { second };
        cur = cur.concat(&Word::single(l));
    }
    out
}

/// Corner words of a polygon whose vertices are a rotation orbit of the seed
/// vertex: (XY)^i for i in 0..n.
fn rotation_corner_words(x: Letter, y: Letter, n: usize) -> Vec<Word> {
    (0..n).map(|i| rotation_word(x, y, i)).collect()
}

fn quasi(p: u32, q: u32) -> Result<TilingInstance, CatalogError> {
    check(p >= 3 && q >= 3, "quasi", "need p, q >= 3")?;
    let ambient = build_triangle_group(p, q, 2).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::Quasi(p, q),
        ambient,
        full_symmetry: SymmetryClass::whole_group(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "p-gon",
                gon: p,
                stabilizer: vec![w("Q"), w("R")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::Q, Letter::R, p as usize),
            },
            TileOrbitSpec {
                name: "q-gon",
                gon: q,
                stabilizer: vec![w("R"), w("P")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, q as usize),
            },
        ],
        vertex_corona: vec![
            (0, Word::empty()),
            (1, Word::empty()),
            (0, w("PQ")),
            (1, w("PQ")),
        ],
        vertex_stabilizer: vec![w("P"), w("Q")],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::Corner(2),
        equal_edge_words: vec![],
    })
}

fn rhombi(p: u32, q: u32) -> Result<TilingInstance, CatalogError> {
    check(p >= 3 && q >= 3, "rhombi", "need p, q >= 3")?;
    check(p != q, "rhombi", "family requires p != q")?;
    let ambient = build_triangle_group(p, q, 2).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::Rhombi(p, q),
        ambient,
        full_symmetry: SymmetryClass::whole_group(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "p-gon",
                gon: p,
                stabilizer: vec![w("Q"), w("R")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::Q, Letter::R, p as usize),
            },
            TileOrbitSpec {
                name: "square",
                gon: 4,
                stabilizer: vec![w("P"), w("Q")],
                rep_anchor: Word::empty(),
                corner_words: vec![Word::empty(), w("P"), w("PQ"), w("Q")],
            },
            TileOrbitSpec {
                name: "q-gon",
                gon: q,
                stabilizer: vec![w("R"), w("P")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, q as usize),
            },
        ],
        vertex_corona: vec![
            (0, Word::empty()),
            (1, Word::empty()),
            (2, Word::empty()),
            (1, w("R")),
        ],
        vertex_stabilizer: vec![w("R")],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::OnMirror {
            mirror: Letter::R,
            between: (0, 1),
        },
        equal_edge_words: vec![w("Q"), w("P")],
    })
}

fn snub5(p: u32, q: u32) -> Result<TilingInstance, CatalogError> {
    check(p >= 3 && q >= 3, "snub5", "need p, q >= 3")?;
    let ambient = build_triangle_group(p, q, 2).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::Snub5(p, q),
        ambient,
        full_symmetry: SymmetryClass::even_words(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: p == q,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "p-gon",
                gon: p,
                stabilizer: vec![w("QR")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::Q, Letter::R, p as usize),
            },
            TileOrbitSpec {
                name: "q-gon",
                gon: q,
                stabilizer: vec![w("RP")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, q as usize),
            },
            TileOrbitSpec {
                name: "triangle",
                gon: 3,
                stabilizer: vec![],
                rep_anchor: Word::empty(),
                corner_words: vec![Word::empty(), w("QR"), w("PQ")],
            },
        ],
        vertex_corona: vec![
            (0, Word::empty()),
            (2, Word::empty()),
            (2, w("PQ")),
            (1, Word::empty()),
            (2, w("RQ")),
        ],
        vertex_stabilizer: vec![],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::Interior,
        equal_edge_words: vec![w("QR"), w("RP"), w("PQ")],
    })
}

fn hex6eq(p: u32) -> Result<TilingInstance, CatalogError> {
    check(p >= 3, "hex6eq", "need p >= 3")?;
    let ambient = build_triangle_group(p, 3, 3).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::Hex6Eq(p),
        ambient,
        full_symmetry: SymmetryClass::whole_group(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "p-gon",
                gon: p,
                stabilizer: vec![w("Q"), w("R")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::Q, Letter::R, p as usize),
            },
            TileOrbitSpec {
                name: "triangle",
                gon: 3,
                stabilizer: vec![w("R"), w("P")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, 3),
            },
        ],
        vertex_corona: vec![
            (0, Word::empty()),
            (1, Word::empty()),
            (0, w("PQ")),
            (1, w("PQ")),
            (0, w("PQPQ")),
            (1, w("PQPQ")),
        ],
        vertex_stabilizer: vec![w("P"), w("Q")],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::Corner(2),
        equal_edge_words: vec![],
    })
}

fn hex6neq(p: u32, q: u32) -> Result<TilingInstance, CatalogError> {
    check(p >= 3 && q >= 3, "hex6neq", "need p, q >= 3")?;
    check(p != q, "hex6neq", "family requires p != q")?;
    let ambient = build_triangle_group(2 * p, q, 2).unwrap();
    let full = SymmetryClass::pr_kernel();
    let chiral = SymmetryClass::kernel_of(&[crate::symmetry::EVEN_WORDS, crate::symmetry::PR_PARITY]);
    Ok(TilingInstance {
        spec: FamilySpec::Hex6Neq(p, q),
        ambient,
        full_symmetry: full,
        chiral_symmetry: chiral,
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "p-gon",
                gon: p,
                stabilizer: vec![w("QRQR"), w("Q")],
                rep_anchor: Word::empty(),
                corner_words: (0..p).map(|i| rotation_word(Letter::Q, Letter::R, 2 * i as usize)).collect(),
            },
            TileOrbitSpec {
                name: "q-gon",
                gon: q,
                stabilizer: vec![w("RP")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, q as usize),
            },
            TileOrbitSpec {
                name: "triangle",
                gon: 3,
                stabilizer: vec![w("Q")],
                rep_anchor: Word::empty(),
                corner_words: vec![Word::empty(), w("PR"), w("QPR")],
            },
        ],
        vertex_corona: vec![
            (0, Word::empty()),
            (2, w("QRPQ")),
            (1, w("Q")),
            (2, Word::empty()),
            (1, Word::empty()),
            (2, w("RPQ")),
        ],
        vertex_stabilizer: vec![w("Q")],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::OnMirror {
            mirror: Letter::Q,
            between: (0, 2),
        },
        equal_edge_words: vec![w("QRQR"), w("RP")],
    })
}

fn three_valent(n1: u32, n2: u32, n3: u32) -> Result<TilingInstance, CatalogError> {
    check(n1 >= 3 && n2 >= 3 && n3 >= 3, "3val", "gons must be >= 3")?;
    // route to the truncated form (q.2p'.2p') when two entries repeat,
    // otherwise to the omnitruncated form (2a.2b.2c)
    let (q, twop) = if n2 == n3 {
        (n1, n2)
    } else if n1 == n2 {
        (n3, n1)
    } else if n1 == n3 {
        (n2, n1)
    } else {
        return three_valent_omni(n1, n2, n3);
    };
    check(
        twop % 2 == 0,
        "3val",
        "(q.m.m) requires the repeated gon m to be even",
    )?;
    let pp = twop / 2;
    check(pp >= 2, "3val", "repeated gon must be at least 4")?;
    let ambient = build_triangle_group(pp, q, 2).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::ThreeVal(q, twop, twop),
        ambient,
        full_symmetry: SymmetryClass::whole_group(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "q-gon",
                gon: q,
                stabilizer: vec![w("R"), w("P")],
                rep_anchor: Word::empty(),
                corner_words: rotation_corner_words(Letter::R, Letter::P, q as usize),
            },
            TileOrbitSpec {
                name: "2p-gon",
                gon: twop,
                stabilizer: vec![w("Q"), w("R")],
                rep_anchor: Word::empty(),
                corner_words: dihedral_corner_words(Letter::Q, Letter::R, pp as usize),
            },
        ],
        vertex_corona: vec![(0, Word::empty()), (1, Word::empty()), (1, w("P"))],
        vertex_stabilizer: vec![w("P")],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::OnMirror {
            mirror: Letter::P,
            between: (1, 2),
        },
        equal_edge_words: vec![w("Q"), w("R")],
    })
}

fn three_valent_omni(n1: u32, n2: u32, n3: u32) -> Result<TilingInstance, CatalogError> {
    check(
        n1 % 2 == 0 && n2 % 2 == 0 && n3 % 2 == 0,
        "3val",
        "a 3-valent tiling with three distinct gons requires all even",
    )?;
    let (a, b, c) = (n1 / 2, n2 / 2, n3 / 2);
    let ambient = build_triangle_group(a, b, c).unwrap();
    Ok(TilingInstance {
        spec: FamilySpec::ThreeVal(n1, n2, n3),
        ambient,
        full_symmetry: SymmetryClass::whole_group(),
        chiral_symmetry: SymmetryClass::even_words(),
        mirror_outside_words: false,
        tile_orbits: vec![
            TileOrbitSpec {
                name: "2a-gon",
                gon: n1,
                stabilizer: vec![w("Q"), w("R")],
                rep_anchor: Word::empty(),
                corner_words: dihedral_corner_words(Letter::Q, Letter::R, a as usize),
            },
            TileOrbitSpec {
                name: "2b-gon",
                gon: n2,
                stabilizer: vec![w("R"), w("P")],
                rep_anchor: Word::empty(),
                corner_words: dihedral_corner_words(Letter::R, Letter::P, b as usize),
            },
            TileOrbitSpec {
                name: "2c-gon",
                gon: n3,
                stabilizer: vec![w("P"), w("Q")],
                rep_anchor: Word::empty(),
                corner_words: dihedral_corner_words(Letter::P, Letter::Q, c as usize),
            },
        ],
        vertex_corona: vec![(0, Word::empty()), (1, Word::empty()), (2, Word::empty())],
        vertex_stabilizer: vec![],
        geometry_class: triangle_group_geometry(&ambient),
        generator_point: GeneratorPointRule::Interior,
        equal_edge_words: vec![w("P"), w("Q"), w("R")],
    })
}

/// Counting mode for the closed-form predicates and sweeps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CountMode {
    Perfect,
    ChirallyPerfect,
}

fn mult(x: u32, n: u32) -> bool {
    x % n == 0
}

fn odd_mult3(x: u32) -> bool {
    x % 3 == 0 && x % 2 == 1
}

fn one_other(p: u32, q: u32, a: impl Fn(u32) -> bool, b: impl Fn(u32) -> bool) -> bool {
    (a(p) && b(q)) || (a(q) && b(p))
}

/// The propositions' coloring counts, one clause at a time. The clause sets
/// are transcribed from the statements; where a plain reading of two clauses
/// would overlap, the "even" qualifiers exclude the divisibility handled by
/// higher clauses, which is the unique consistent reading (and the one the
/// enumeration sweeps confirm).
pub fn expected_count(spec: FamilySpec, mode: CountMode) -> Result<u32, CatalogError> {
    match (spec, mode) {
        (FamilySpec::ThreeVal(a, b, c), CountMode::Perfect) => {
            Ok(if a % 2 == 0 && b % 2 == 0 && c % 2 == 0 { 1 } else { 0 })
        }
        (FamilySpec::Quasi(p, q), CountMode::Perfect) => {
            let both_even = mult(p, 2) && mult(q, 2);
            let both_three = mult(p, 3) && mult(q, 3);
            Ok(if both_even && both_three {
                2
            } else if (both_even && !(mult(p, 3) && mult(q, 3)))
                || (both_three && !(mult(p, 2) && mult(q, 2)))
            {
                1
            } else {
                0
            })
        }
        (FamilySpec::Rhombi(p, q), CountMode::Perfect) => {
            let both_even = mult(p, 2) && mult(q, 2);
            Ok(if mult(p, 6) && mult(q, 6) {
                3
            } else if both_even && (mult(p, 3) != mult(q, 3)) {
                2
            } else if (both_even && !mult(p, 3) && !mult(q, 3))
                || one_other(p, q, |x| mult(x, 2), odd_mult3)
            {
                1
            } else {
                0
            })
        }
        (FamilySpec::Snub5(p, q), CountMode::Perfect) if p != q => {
            // classes used by the clauses
            let m3not4 = |x| mult(x, 3) && !mult(x, 4);
            let m4not3 = |x| mult(x, 4) && !mult(x, 3);
            let even_only = |x| mult(x, 2) && !mult(x, 4) && !mult(x, 3);
            let m6not4 = |x| mult(x, 6) && !mult(x, 4);
            let m12 = |x| mult(x, 12);
            Ok(if m12(p) && m12(q) {
                6
            } else if one_other(p, q, m12, m6not4) {
                5
            } else if m6not4(p) && m6not4(q) {
                4
            } else if one_other(p, q, |x| mult(x, 6), odd_mult3) || one_other(p, q, m12, m4not3) {
                3
            } else if one_other(p, q, m12, even_only)
                || (odd_mult3(p) && odd_mult3(q))
                || (m4not3(p) && m4not3(q))
                || one_other(p, q, m6not4, m4not3)
            {
                2
            } else if one_other(p, q, m3not4, even_only)
                || one_other(p, q, m4not3, even_only)
                || one_other(p, q, m4not3, odd_mult3)
            {
                1
            } else {
                0
            })
        }
        (FamilySpec::Snub5(p, q), CountMode::Perfect) if p == q => Ok(0),
        (FamilySpec::Snub5(p, q), CountMode::ChirallyPerfect) if p == q => {
            Ok(if mult(p, 12) {
                3
            } else if mult(p, 6) && !mult(p, 4) {
                2
            } else if odd_mult3(p) || (mult(p, 4) && !mult(p, 3)) {
                1
            } else {
                0
            })
        }
        (FamilySpec::Hex6Eq(p), CountMode::Perfect) => Ok(if mult(p, 3) { 1 } else { 0 }),
        (FamilySpec::Hex6Neq(p, q), CountMode::Perfect) => {
            let p3not5 = mult(p, 3) && !mult(p, 5);
            let p5not3 = mult(p, 5) && !mult(p, 3);
            let p15 = mult(p, 15);
            let q_even_not43 = mult(q, 2) && !mult(q, 4) && !mult(q, 3);
            let q4not3 = mult(q, 4) && !mult(q, 3);
            let q6not4 = mult(q, 6) && !mult(q, 4);
            Ok(if p15 && mult(q, 12) {
                6
            } else if (p15 && q4not3) || (p15 && q6not4) || (p5not3 && mult(q, 12)) {
                4
            } else if p5not3 && q4not3 {
                3
            } else if (p15 && q_even_not43)
                || (p15 && odd_mult3(q))
                || (p3not5 && mult(q, 6))
                || (p5not3 && q6not4)
            {
                2
            } else if (p3not5 && mult(q, 2) && !mult(q, 6))
                || (p5not3 && q_even_not43)
                || (p3not5 && odd_mult3(q))
                || (p5not3 && odd_mult3(q))
            {
                1
            } else {
                0
            })
        }
        _ => Err(CatalogError::IncompatibleMode),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_geometry(&[3, 6, 3, 6]), GeometryClass::Euclidean);
        assert_eq!(classify_geometry(&[3, 4, 3, 4]), GeometryClass::Spherical);
        assert_eq!(classify_geometry(&[6, 4, 6, 4]), GeometryClass::Hyperbolic);
    }

    #[test]
    fn instantiate_rejects_bad_parameters() {
        assert!(instantiate(FamilySpec::Hex6Neq(3, 3)).is_err());
        assert!(instantiate(FamilySpec::Rhombi(4, 4)).is_err());
        assert!(instantiate(FamilySpec::Quasi(2, 5)).is_err());
        assert!(instantiate(FamilySpec::ThreeVal(4, 6, 9)).is_err());
        assert!(instantiate(FamilySpec::ThreeVal(5, 7, 7)).is_err());
    }

    #[test]
    fn quasi_instance_matches_expectations() {
        let t = instantiate(FamilySpec::Quasi(6, 4)).unwrap();
        assert_eq!(t.ambient.orders(), [6, 4, 2]);
        assert_eq!(t.valency(), 4);
        assert_eq!(t.vertex_config(), vec![6, 4, 6, 4]);
        assert_eq!(t.geometry_class, GeometryClass::Hyperbolic);
        assert!(t.full_symmetry.is_whole_group());
    }

    #[test]
    fn snub_chiral_predicate_is_even_length() {
        let t = instantiate(FamilySpec::Snub5(4, 4)).unwrap();
        assert!(t.chiral_symmetry.contains(&w("PQ")));
        assert!(!t.chiral_symmetry.contains(&w("P")));
        assert!(t.mirror_outside_words);
    }

    #[test]
    fn hex6neq_symmetry_contains_paper_generators() {
        let t = instantiate(FamilySpec::Hex6Neq(3, 4)).unwrap();
        assert_eq!(t.ambient.orders(), [6, 4, 2]);
        for s in ["PR", "Q", "QRQP"] {
            assert!(t.full_symmetry.contains(&w(s)));
        }
        assert!(!t.full_symmetry.contains(&w("P")));
        // corona reads (3.p.3.q.3.q) cyclically
        assert_eq!(t.vertex_config(), vec![3, 3, 4, 3, 4, 3]);
    }

    #[test]
    fn three_valent_routing() {
        let t = instantiate(FamilySpec::ThreeVal(8, 6, 6)).unwrap();
        assert_eq!(t.ambient.orders(), [3, 8, 2]);
        assert_eq!(t.vertex_config(), vec![8, 6, 6]);
        let t = instantiate(FamilySpec::ThreeVal(4, 6, 12)).unwrap();
        assert_eq!(t.ambient.orders(), [2, 3, 6]);
        assert_eq!(t.vertex_config(), vec![4, 6, 12]);
        assert_eq!(t.geometry_class, GeometryClass::Euclidean);
        // order of arguments does not matter for the truncated form
        let t = instantiate(FamilySpec::ThreeVal(6, 8, 6)).unwrap();
        assert_eq!(t.vertex_config(), vec![8, 6, 6]);
    }

    #[test]
    fn expected_counts_from_the_propositions() {
        use CountMode::*;
        let e = |s, m| expected_count(s, m).unwrap();
        // quasiregular
        assert_eq!(e(FamilySpec::Quasi(6, 12), Perfect), 2);
        assert_eq!(e(FamilySpec::Quasi(6, 4), Perfect), 1);
        assert_eq!(e(FamilySpec::Quasi(8, 4), Perfect), 1);
        assert_eq!(e(FamilySpec::Quasi(9, 6), Perfect), 1);
        assert_eq!(e(FamilySpec::Quasi(9, 3), Perfect), 1);
        assert_eq!(e(FamilySpec::Quasi(3, 4), Perfect), 0);
        assert_eq!(e(FamilySpec::Quasi(3, 5), Perfect), 0);
        // rhombi
        assert_eq!(e(FamilySpec::Rhombi(12, 6), Perfect), 3);
        assert_eq!(e(FamilySpec::Rhombi(8, 6), Perfect), 2);
        assert_eq!(e(FamilySpec::Rhombi(8, 3), Perfect), 1);
        assert_eq!(e(FamilySpec::Rhombi(3, 6), Perfect), 1);
        assert_eq!(e(FamilySpec::Rhombi(5, 3), Perfect), 0);
        // snub
        assert_eq!(e(FamilySpec::Snub5(3, 4), Perfect), 1);
        assert_eq!(e(FamilySpec::Snub5(3, 9), Perfect), 2);
        assert_eq!(e(FamilySpec::Snub5(6, 12), Perfect), 5);
        assert_eq!(e(FamilySpec::Snub5(3, 6), Perfect), 3);
        assert_eq!(e(FamilySpec::Snub5(12, 12), Perfect), 0);
        assert_eq!(e(FamilySpec::Snub5(6, 6), ChirallyPerfect), 2);
        assert_eq!(e(FamilySpec::Snub5(4, 4), ChirallyPerfect), 1);
        assert_eq!(e(FamilySpec::Snub5(3, 3), ChirallyPerfect), 1);
        // 6-valent
        assert_eq!(e(FamilySpec::Hex6Eq(6), Perfect), 1);
        assert_eq!(e(FamilySpec::Hex6Eq(9), Perfect), 1);
        assert_eq!(e(FamilySpec::Hex6Eq(4), Perfect), 0);
        assert_eq!(e(FamilySpec::Hex6Neq(6, 3), Perfect), 1);
        assert_eq!(e(FamilySpec::Hex6Neq(3, 4), Perfect), 1);
        assert_eq!(e(FamilySpec::Hex6Neq(3, 6), Perfect), 2);
        assert_eq!(e(FamilySpec::Hex6Neq(5, 6), Perfect), 2);
        assert_eq!(e(FamilySpec::Hex6Neq(5, 4), Perfect), 3);
        assert_eq!(e(FamilySpec::Hex6Neq(15, 12), Perfect), 6);
        // 3-valent
        assert_eq!(e(FamilySpec::ThreeVal(4, 6, 12), Perfect), 1);
        assert_eq!(e(FamilySpec::ThreeVal(8, 6, 6), Perfect), 1);
        assert_eq!(e(FamilySpec::ThreeVal(3, 12, 12), Perfect), 0);
    }

    #[test]
    fn snub_clauses_match_scheme_indicator_sum() {
        // Independent tally of the case analysis: schemes exist iff
        // [2|p & 3|q], [3|p & 2|q], two when [3|p & 3|q], [4|p & 2|q],
        // [2|p & 4|q]; the clause list must agree on the whole grid.
        for p in 3..=30u32 {
            for q in 3..=30u32 {
                if p == q {
                    continue;
                }
                let ind = |c: bool| c as u32;
                let total = ind(p % 2 == 0 && q % 3 == 0)
                    + ind(p % 3 == 0 && q % 2 == 0)
                    + 2 * ind(p % 3 == 0 && q % 3 == 0)
                    + ind(p % 4 == 0 && q % 2 == 0)
                    + ind(p % 2 == 0 && q % 4 == 0);
                assert_eq!(
                    expected_count(FamilySpec::Snub5(p, q), CountMode::Perfect).unwrap(),
                    total,
                    "snub5 clause mismatch at ({p},{q})"
                );
            }
        }
    }

    #[test]
    fn hex6neq_clauses_match_scheme_indicator_sum() {
        for p in 3..=30u32 {
            for q in 3..=30u32 {
                if p == q {
                    continue;
                }
                let ind = |c: bool| c as u32;
                let total = ind(p % 3 == 0) * (ind(q % 2 == 0) + ind(q % 3 == 0))
                    + ind(p % 5 == 0)
                        * (ind(q % 2 == 0) + ind(q % 3 == 0) + 2 * ind(q % 4 == 0));
                assert_eq!(
                    expected_count(FamilySpec::Hex6Neq(p, q), CountMode::Perfect).unwrap(),
                    total,
                    "hex6neq clause mismatch at ({p},{q})"
                );
            }
        }
    }

    #[test]
    fn parse_cli_specs() {
        assert_eq!(FamilySpec::parse("quasi:6,4"), Ok(FamilySpec::Quasi(6, 4)));
        assert_eq!(FamilySpec::parse("3val:4,6,12"), Ok(FamilySpec::ThreeVal(4, 6, 12)));
        assert_eq!(FamilySpec::parse("hex6eq:9"), Ok(FamilySpec::Hex6Eq(9)));
        assert!(FamilySpec::parse("quasi:6").is_err());
        assert!(FamilySpec::parse("foo:1,2").is_err());
    }
}
