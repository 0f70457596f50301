//! Index-2^k subgroups of a triangle group cut out by letter parities.
//!
//! The catalog needs two kinds: the orientation-preserving (even-length)
//! subgroup, and for the (3.p.3.q.3.q) family the kernel of the parity map
//! P,R -> 1, Q -> 0.

use crate::coset::CosetTable;
use crate::group::Presentation;
use crate::word::{Word, LETTERS};

/// A homomorphism onto Z/2 given by the images of P, Q, R.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ParityMap {
    pub images: [bool; 3],
}

impl ParityMap {
    pub fn eval(&self, word: &Word) -> bool {
        word.letters()
            .iter()
            .fold(false, |acc, &l| acc ^ self.images[l.index()])
    }

    /// Whether all six relators of the presentation die, i.e. the map is a
    /// genuine homomorphism.
    pub fn respects(&self, pres: &Presentation) -> bool {
        (0..3).all(|corner| {
            let (x, y) = Presentation::corner_pair(corner);
            let flip = self.images[x.index()] ^ self.images[y.index()];
            !flip || pres.order(corner) % 2 == 0
        })
    }
}

/// The word-length parity (orientation character).
pub const EVEN_WORDS: ParityMap = ParityMap {
    images: [true, true, true],
};

/// Parity of the total count of letters P and R.
pub const PR_PARITY: ParityMap = ParityMap {
    images: [true, false, true],
};

/// A subgroup of the ambient triangle group cut out by parity maps
/// (the whole group when `maps` is empty), together with an inverse-closed
/// generating set of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryClass {
    maps: Vec<ParityMap>,
    gens: Vec<Word>,
    index: usize,
}

impl SymmetryClass {
    pub fn whole_group() -> SymmetryClass {
        SymmetryClass {
            maps: vec![],
            gens: LETTERS.iter().map(|&l| Word::single(l)).collect(),
            index: 1,
        }
    }

    pub fn kernel_of(maps: &[ParityMap]) -> SymmetryClass {
        let maps: Vec<ParityMap> = maps.to_vec();
        // image vectors reachable letter by letter; quotient is (Z/2)^rank
        let signature = |w: &Word| -> Vec<bool> { maps.iter().map(|m| m.eval(w)).collect() };
        let zero = vec![false; maps.len()];
        // BFS transversal of the image group
        let mut reps: Vec<(Vec<bool>, Word)> = vec![(zero.clone(), Word::empty())];
        let mut head = 0;
        while head < reps.len() {
            let (_, u) = reps[head].clone();
            head += 1;
            for l in LETTERS {
                let ux = u.concat(&Word::single(l));
                let sig = signature(&ux);
                if !reps.iter().any(|(s, _)| *s == sig) {
                    reps.push((sig, ux));
                }
            }
        }
        let index = reps.len();
        let rep_of = |sig: &Vec<bool>| -> &Word {
            &reps.iter().find(|(s, _)| s == sig).unwrap().1
        };
        // Schreier generators of the kernel
        let mut gens: Vec<Word> = Vec::new();
        for (_, u) in &reps {
            for l in LETTERS {
                let ux = u.concat(&Word::single(l));
                let g = ux.concat(&rep_of(&signature(&ux)).inverse());
                if !g.is_empty() && !gens.contains(&g) {
                    gens.push(g.clone());
                    let inv = g.inverse();
                    if inv != g && !gens.contains(&inv) {
                        gens.push(inv);
                    }
                }
            }
        }
        SymmetryClass { maps, gens, index }
    }

    pub fn even_words() -> SymmetryClass {
        Self::kernel_of(&[EVEN_WORDS])
    }

    pub fn pr_kernel() -> SymmetryClass {
        Self::kernel_of(&[PR_PARITY])
    }

    pub fn is_whole_group(&self) -> bool {
        self.maps.is_empty()
    }

    /// Index in the ambient triangle group.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.maps.iter().all(|m| !m.eval(word))
    }

    /// Parity signature of a word as a bit vector over this class's maps.
    pub fn signature(&self, word: &Word) -> u32 {
        self.maps
            .iter()
            .enumerate()
            .fold(0u32, |acc, (k, m)| acc | ((m.eval(word) as u32) << k))
    }

    /// Inverse-closed generating words of the subgroup.
    pub fn generators(&self) -> &[Word] {
        &self.gens
    }

    pub fn maps(&self) -> &[ParityMap] {
        &self.maps
    }

    /// A shortest word outside the subgroup, if it is proper.
    pub fn odd_representative(&self) -> Option<Word> {
        if self.is_whole_group() {
            return None;
        }
        for l in LETTERS {
            if !self.contains(&Word::single(l)) {
                return Some(Word::single(l));
            }
        }
        for a in LETTERS {
            for b in LETTERS {
                let w = Word::from_letters([a, b]);
                if !w.is_empty() && !self.contains(&w) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// The coset table of this subgroup in the ambient group (rows are the
    /// parity signatures in BFS order).
    pub fn coset_table(&self, pres: &Presentation) -> CosetTable {
        debug_assert!(self.maps.iter().all(|m| m.respects(pres)));
        let mut sigs: Vec<u32> = vec![0];
        let letter_bits: Vec<u32> = LETTERS
            .iter()
            .map(|&l| {
                self.maps
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (k, m)| acc | ((m.images[l.index()] as u32) << k))
            })
            .collect();
        let mut rows: Vec<[u32; 3]> = Vec::new();
        let mut head = 0;
        while head < sigs.len() {
            let s = sigs[head];
            head += 1;
            let mut row = [0u32; 3];
            for (gi, &bits) in letter_bits.iter().enumerate() {
                let t = s ^ bits;
                let idx = match sigs.iter().position(|&x| x == t) {
                    Some(i) => i,
                    None => {
                        sigs.push(t);
                        sigs.len() - 1
                    }
                };
                row[gi] = idx as u32;
            }
            rows.push(row);
        }
        // rows discovered while writing earlier rows may still need filling
        for i in rows.len()..sigs.len() {
            let s = sigs[i];
            let mut row = [0u32; 3];
            for (gi, &bits) in letter_bits.iter().enumerate() {
                let t = s ^ bits;
                row[gi] = sigs.iter().position(|&x| x == t).unwrap() as u32;
            }
            rows.push(row);
        }
        CosetTable::from_action(rows, pres.orders())
    }
}
