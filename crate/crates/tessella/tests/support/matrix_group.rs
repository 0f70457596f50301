//! Independent oracles for spherical triangle groups: closure of the
//! reflection matrices under multiplication (group order), and a direct
//! enumeration of all subgroups of the resulting finite group.

use tessella::coset::CosetTable;
use tessella::geom::{mirror_setup, Mat3};
use tessella::group::Presentation;
use tessella::word::LETTERS;

fn mat_key(m: &Mat3) -> [i64; 9] {
    let mut out = [0i64; 9];
    for i in 0..3 {
        for j in 0..3 {
            out[3 * i + j] = (m.0[i][j] * 1e6).round() as i64;
        }
    }
    out
}

/// The finite matrix group generated by the three mirrors, with its
/// multiplication table. Element 0 is the identity.
pub struct FiniteGroup {
    pub order: usize,
    pub mul: Vec<Vec<u16>>,
    pub inv: Vec<u16>,
    /// Indices of the images of P, Q, R.
    pub gens: [u16; 3],
}

pub fn matrix_closure(pres: &Presentation) -> FiniteGroup {
    let setup = mirror_setup(pres);
    let mut elems: Vec<Mat3> = vec![Mat3::IDENTITY];
    let mut keys = std::collections::HashMap::new();
    keys.insert(mat_key(&Mat3::IDENTITY), 0usize);
    let mut gens = [0u16; 3];
    for l in LETTERS {
        let m = *setup.letter_matrix(l);
        let k = mat_key(&m);
        let id = *keys.entry(k).or_insert_with(|| {
            elems.push(m);
            elems.len() - 1
        });
        gens[l.index()] = id as u16;
    }
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head];
        head += 1;
        for l in LETTERS {
            let nxt = cur.mul(setup.letter_matrix(l));
            let k = mat_key(&nxt);
            if !keys.contains_key(&k) {
                keys.insert(k, elems.len());
                elems.push(nxt);
            }
        }
        assert!(elems.len() < 100_000, "matrix closure diverged: not spherical");
    }
    let order = elems.len();
    let mut mul = vec![vec![0u16; order]; order];
    for a in 0..order {
        for b in 0..order {
            mul[a][b] = keys[&mat_key(&elems[a].mul(&elems[b]))] as u16;
        }
    }
    let mut inv = vec![0u16; order];
    for a in 0..order {
        inv[a as usize] = (0..order).find(|&b| mul[a][b] == 0).unwrap() as u16;
    }
    FiniteGroup { order, mul, inv, gens }
}

impl FiniteGroup {
    /// Closure of a set of elements under multiplication.
    fn span(&self, gens: &[u16]) -> Vec<u16> {
        let mut set: Vec<bool> = vec![false; self.order];
        let mut out: Vec<u16> = vec![0];
        set[0] = true;
        let mut head = 0;
        while head < out.len() {
            let a = out[head];
            head += 1;
            for &g in gens {
                let x = self.mul[a as usize][g as usize];
                if !set[x as usize] {
                    set[x as usize] = true;
                    out.push(x);
                }
            }
        }
        out.sort();
        out
    }

    /// All subgroups, as sorted element lists, by closing the lattice of
    /// cyclic subgroups under joins.
    pub fn all_subgroups(&self) -> Vec<Vec<u16>> {
        let mut subs: Vec<Vec<u16>> = vec![vec![0]];
        for g in 1..self.order as u16 {
            let c = self.span(&[g]);
            if !subs.contains(&c) {
                subs.push(c);
            }
        }
        loop {
            let mut grew = false;
            let snapshot = subs.clone();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let mut gens: Vec<u16> = snapshot[i].clone();
                    gens.extend(&snapshot[j]);
                    let joined = self.span(&gens);
                    if !subs.contains(&joined) {
                        subs.push(joined);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        subs.sort();
        subs
    }

    /// The canonical coset table of a subgroup (given as a sorted element
    /// list) under the P, Q, R generators.
    pub fn coset_table_of(&self, sub: &[u16], pres: &Presentation) -> CosetTable {
        let in_sub = |x: u16| sub.binary_search(&x).is_ok();
        // right cosets: classes of the relation a ~ b iff a b^-1 in S
        let mut coset_of: Vec<Option<usize>> = vec![None; self.order];
        let mut reps: Vec<u16> = Vec::new();
        for a in 0..self.order as u16 {
            if coset_of[a as usize].is_some() {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for b in 0..self.order as u16 {
                // b in S a  <=>  b a^-1 in S
                if in_sub(self.mul[b as usize][self.inv[a as usize] as usize]) {
                    coset_of[b as usize] = Some(id);
                }
            }
        }
        let rows: Vec<[u32; 3]> = reps
            .iter()
            .map(|&r| {
                let mut row = [0u32; 3];
                for (gi, &g) in self.gens.iter().enumerate() {
                    row[gi] = coset_of[self.mul[r as usize][g as usize] as usize].unwrap() as u32;
                }
                row
            })
            .collect();
        CosetTable::from_action(rows, pres.orders())
    }
}
