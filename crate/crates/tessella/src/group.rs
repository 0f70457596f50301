//! Triangle group presentations and subgroup specifications.

use crate::word::{Letter, Word};
use std::fmt;

/// Errors from exact group computations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("rotation orders must all be at least 2, got ({0}, {1}, {2})")]
    BadOrders(u32, u32, u32),
    #[error("coset enumeration exceeded {0} cosets without closing")]
    ResourceExhausted(usize),
}

/// The triangle group `<P,Q,R | P^2=Q^2=R^2=(QR)^a=(RP)^b=(PQ)^c=1>`.
///
/// The letter absent from a rotation relator is the mirror opposite that
/// corner: P is opposite the QR corner, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Presentation {
    /// Orders of QR, RP, PQ in that order.
    orders: [u32; 3],
}

/// Builds the `*abc` triangle group presentation, rejecting orders below 2.
pub fn build_triangle_group(a: u32, b: u32, c: u32) -> Result<Presentation, GroupError> {
    if a < 2 || b < 2 || c < 2 {
        return Err(GroupError::BadOrders(a, b, c));
    }
    Ok(Presentation { orders: [a, b, c] })
}

impl Presentation {
    /// Order of the rotation `QR` (index 0), `RP` (1) or `PQ` (2).
    pub fn order(&self, corner: usize) -> u32 {
        self.orders[corner]
    }

    pub fn orders(&self) -> [u32; 3] {
        self.orders
    }

    /// The generator pair whose product rotates about the given corner.
    pub fn corner_pair(corner: usize) -> (Letter, Letter) {
        match corner {
            0 => (Letter::Q, Letter::R),
            1 => (Letter::R, Letter::P),
            2 => (Letter::P, Letter::Q),
            _ => panic!("corner index out of range"),
        }
    }

    /// The mirror opposite the given corner.
    pub fn opposite_mirror(corner: usize) -> Letter {
        match corner {
            0 => Letter::P,
            1 => Letter::Q,
            2 => Letter::R,
            _ => panic!("corner index out of range"),
        }
    }

    /// The three rotation relators as explicit words.
    pub fn rotation_relators(&self) -> [Word; 3] {
        let rel = |corner: usize| {
            let (x, y) = Self::corner_pair(corner);
            Word::from_letters(
                std::iter::repeat([x, y])
                    .take(self.orders[corner] as usize)
                    .flatten(),
            )
        };
        [rel(0), rel(1), rel(2)]
    }

    /// Sum of relator lengths, used for default enumeration limits.
    pub fn relator_length_sum(&self) -> usize {
        6 + 2 * (self.orders.iter().sum::<u32>() as usize)
    }

    /// Conway-style signature, e.g. `*632`.
    pub fn signature(&self) -> String {
        let [a, b, c] = self.orders;
        if a <= 9 && b <= 9 && c <= 9 {
            format!("*{a}{b}{c}")
        } else {
            format!("*{a}.{b}.{c}")
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signature())
    }
}

/// A subgroup of a triangle group given by generator words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupSpec {
    pub parent: Presentation,
    pub generators: Vec<Word>,
}

impl SubgroupSpec {
    pub fn new(parent: Presentation, generators: Vec<Word>) -> SubgroupSpec {
        SubgroupSpec { parent, generators }
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(parent: Presentation) -> SubgroupSpec {
        SubgroupSpec {
            parent,
            generators: vec![
                Word::single(Letter::P),
                Word::single(Letter::Q),
                Word::single(Letter::R),
            ],
        }
    }

    pub fn parse(parent: Presentation, gens: &[&str]) -> SubgroupSpec {
        SubgroupSpec {
            parent,
            generators: gens.iter().map(|s| Word::parse(s).expect("generator word")).collect(),
        }
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> in {}", self.parent)
    }
}
