//! Coset tables and Todd-Coxeter enumeration for triangle groups.
//!
//! All three generators are involutions, so a table stores one total map per
//! letter and each column is an involution permutation of the rows. Row 0 is
//! the subgroup itself; rows are right cosets acted on by right
//! multiplication.

use crate::group::{GroupError, Presentation, SubgroupSpec};
use crate::word::{Letter, Word, LETTERS};

/// A closed coset table: the permutation action of the generators on the
/// right cosets of a finite-index subgroup. Rows are numbered in BFS order
/// from row 0 (letter order P, Q, R), which makes the table canonical: two
/// tables are equal iff they describe the same subgroup of the same parent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CosetTable {
    action: Vec<[u32; 3]>,
    orders: [u32; 3],
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.action.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orders(&self) -> [u32; 3] {
        self.orders
    }

    pub fn step(&self, row: u32, letter: Letter) -> u32 {
        self.action[row as usize][letter.index()]
    }

    /// Row reached from `row` by reading `word` left to right.
    pub fn act(&self, row: u32, word: &Word) -> u32 {
        word.letters()
            .iter()
            .fold(row, |r, &l| self.action[r as usize][l.index()])
    }

    /// Membership: a word lies in the subgroup iff it fixes row 0.
    pub fn contains(&self, word: &Word) -> bool {
        self.act(0, word) == 0
    }

    /// Orbit partition of the rows under the subgroup generated by `words`
    /// (the word set is closed under inverses before use). Returns the orbit
    /// label of each row; labels are indices of orbit representatives in
    /// first-appearance order.
    pub fn suborbits(&self, words: &[Word]) -> Vec<u32> {
        let mut gens: Vec<Word> = Vec::new();
        for w in words {
            gens.push(w.clone());
            gens.push(w.inverse());
        }
        let n = self.len();
        let mut label = vec![u32::MAX; n];
        let mut next = 0;
        for start in 0..n as u32 {
            if label[start as usize] != u32::MAX {
                continue;
            }
            label[start as usize] = next;
            let mut stack = vec![start];
            while let Some(r) = stack.pop() {
                for g in &gens {
                    let s = self.act(r, g);
                    if label[s as usize] == u32::MAX {
                        label[s as usize] = next;
                        stack.push(s);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Orbit of a single row under `words` (inverse-closed), in BFS order.
    pub fn orbit_of(&self, row: u32, words: &[Word]) -> Vec<u32> {
        let mut gens: Vec<Word> = Vec::new();
        for w in words {
            gens.push(w.clone());
            gens.push(w.inverse());
        }
        let mut seen = vec![false; self.len()];
        let mut out = vec![row];
        seen[row as usize] = true;
        let mut i = 0;
        while i < out.len() {
            let r = out[i];
            i += 1;
            for g in &gens {
                let s = self.act(r, g);
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    out.push(s);
                }
            }
        }
        out
    }

    /// For each row, a word mapping row 0 to it (BFS over letters).
    pub fn transversal(&self) -> Vec<Word> {
        let n = self.len();
        let mut words: Vec<Option<Word>> = vec![None; n];
        words[0] = Some(Word::empty());
        let mut queue = std::collections::VecDeque::from([0u32]);
        while let Some(r) = queue.pop_front() {
            for l in LETTERS {
                let s = self.step(r, l);
                if words[s as usize].is_none() {
                    words[s as usize] =
                        Some(words[r as usize].clone().unwrap().concat(&Word::single(l)));
                    queue.push_back(s);
                }
            }
        }
        words.into_iter().map(|w| w.unwrap()).collect()
    }

    /// Schreier generators of the row-0 stabilizer, freely reduced, deduped.
    pub fn schreier_generators(&self) -> Vec<Word> {
        let t = self.transversal();
        let mut out: Vec<Word> = Vec::new();
        for (r, u) in t.iter().enumerate() {
            for l in LETTERS {
                let s = self.step(r as u32, l);
                let g = u.concat(&Word::single(l)).concat(&t[s as usize].inverse());
                if !g.is_empty() && !out.contains(&g) && !out.contains(&g.inverse()) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// Builds a table directly from a raw action (used for parity quotients
    /// and tests); renumbers rows canonically.
    pub fn from_action(action: Vec<[u32; 3]>, orders: [u32; 3]) -> CosetTable {
        canonicalize(&action, orders)
    }
}

fn canonicalize(action: &[[u32; 3]], orders: [u32; 3]) -> CosetTable {
    let n = action.len();
    let mut perm = vec![u32::MAX; n];
    let mut order_rows = Vec::with_capacity(n);
    perm[0] = 0;
    order_rows.push(0u32);
    let mut head = 0;
    while head < order_rows.len() {
        let r = order_rows[head];
        head += 1;
        for g in 0..3 {
            let s = action[r as usize][g];
            if perm[s as usize] == u32::MAX {
                perm[s as usize] = order_rows.len() as u32;
                order_rows.push(s);
            }
        }
    }
    debug_assert_eq!(order_rows.len(), n, "table must be transitive");
    let mut out = vec![[0u32; 3]; n];
    for (new_r, &old_r) in order_rows.iter().enumerate() {
        for g in 0..3 {
            out[new_r][g] = perm[action[old_r as usize][g] as usize];
        }
    }
    CosetTable { action: out, orders }
}

/// Default enumeration limit: ample for the indices arising from the tiling
/// families, where tables close almost immediately.
pub fn default_max_cosets(expected_index: usize, pres: &Presentation) -> usize {
    10 * expected_index.max(1) * pres.relator_length_sum()
}

/// HLT-style Todd-Coxeter with coincidence handling.
///
/// Fails with `ResourceExhausted` if more than `max_cosets` cosets are
/// defined before the table closes.
pub fn coset_enumerate(sub: &SubgroupSpec, max_cosets: usize) -> Result<CosetTable, GroupError> {
    let mut e = Enumerator::new(max_cosets);
    let relators: Vec<Vec<Letter>> = sub
        .parent
        .rotation_relators()
        .iter()
        .map(|w| w.letters().to_vec())
        .collect();

    for g in &sub.generators {
        if g.is_empty() {
            continue;
        }
        e.scan_and_fill(0, g.letters())?;
    }
    let mut r = 0usize;
    while r < e.table.len() {
        if e.find(r as u32) != r as u32 {
            r += 1;
            continue;
        }
        for rel in &relators {
            if e.find(r as u32) != r as u32 {
                break;
            }
            let rep = e.find(r as u32);
            e.scan_and_fill(rep, rel)?;
        }
        r += 1;
    }
    Ok(canonicalize(&e.compact(), sub.parent.orders()))
}

struct Enumerator {
    table: Vec<[i64; 3]>,
    parent: Vec<u32>,
    max: usize,
    defined: usize,
}

const UNDEF: i64 = -1;

impl Enumerator {
    fn new(max: usize) -> Enumerator {
        Enumerator {
            table: vec![[UNDEF; 3]],
            parent: vec![0],
            max,
            defined: 1,
        }
    }

    fn find(&mut self, mut r: u32) -> u32 {
        while self.parent[r as usize] != r {
            let p = self.parent[r as usize];
            self.parent[r as usize] = self.parent[p as usize];
            r = self.parent[r as usize];
        }
        r
    }

    fn get(&mut self, r: u32, g: usize) -> Option<u32> {
        let v = self.table[r as usize][g];
        if v < 0 {
            None
        } else {
            let s = self.find(v as u32);
            self.table[r as usize][g] = s as i64;
            Some(s)
        }
    }

    fn define(&mut self, r: u32, g: usize) -> Result<u32, GroupError> {
        if self.defined >= self.max {
            return Err(GroupError::ResourceExhausted(self.max));
        }
        let n = self.table.len() as u32;
        self.table.push([UNDEF; 3]);
        self.parent.push(n);
        self.defined += 1;
        self.table[r as usize][g] = n as i64;
        self.table[n as usize][g] = r as i64;
        Ok(n)
    }

    /// Establish r·g = s, merging cosets on conflict.
    fn join(&mut self, r: u32, g: usize, s: u32) {
        let r = self.find(r);
        let s = self.find(s);
        match (self.get(r, g), self.get(s, g)) {
            (Some(a), _) => self.coincide(a, s),
            (None, Some(b)) => self.coincide(b, r),
            (None, None) => {
                self.table[r as usize][g] = s as i64;
                self.table[s as usize][g] = r as i64;
            }
        }
    }

    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, dead) = if a < b { (a, b) } else { (b, a) };
            self.parent[dead as usize] = keep;
            for g in 0..3 {
                let d = self.table[dead as usize][g];
                if d < 0 {
                    continue;
                }
                let d = self.find(d as u32);
                // d's edge pointed at dead; retarget through keep
                match self.get(keep, g) {
                    Some(k) => {
                        if k != d {
                            queue.push((k, d));
                        }
                    }
                    None => {
                        self.table[keep as usize][g] = d as i64;
                        self.table[d as usize][g] = keep as i64;
                    }
                }
            }
        }
    }

    /// Trace `word` from `start` back to `start`, defining cosets to fill
    /// gaps (HLT style) and recording the final deduction or coincidence.
    fn scan_and_fill(&mut self, start: u32, word: &[Letter]) -> Result<(), GroupError> {
        let n = word.len();
        let mut i = 0usize;
        let mut f = self.find(start);
        loop {
            // forward as far as defined
            while i < n {
                match self.get(f, word[i].index()) {
                    Some(x) => {
                        f = x;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == n {
                let s = self.find(start);
                if f != s {
                    self.coincide(f, s);
                }
                return Ok(());
            }
            // backward as far as defined (letters are involutions)
            let mut j = n - 1;
            let mut b = self.find(start);
            while j > i {
                match self.get(b, word[j].index()) {
                    Some(x) => {
                        b = x;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                self.join(f, word[i].index(), b);
                return Ok(());
            }
            // fill one gap and resume
            let nf = self.define(f, word[i].index())?;
            f = nf;
            i += 1;
        }
    }

    /// Live rows renumbered densely, as a raw action.
    fn compact(&mut self) -> Vec<[u32; 3]> {
        let n = self.table.len();
        let mut index = vec![u32::MAX; n];
        let mut count = 0u32;
        for r in 0..n as u32 {
            if self.find(r) == r {
                index[r as usize] = count;
                count += 1;
            }
        }
        let mut out = vec![[0u32; 3]; count as usize];
        for r in 0..n as u32 {
            if self.find(r) != r {
                continue;
            }
            for g in 0..3 {
                let s = self.get(r, g).expect("closed table");
                out[index[r as usize] as usize][g] = index[s as usize];
            }
        }
        out
    }
}

/// Convenience: enumerate with the default limit for an expected index.
pub fn enumerate_with_default_limit(
    sub: &SubgroupSpec,
    expected_index: usize,
) -> Result<CosetTable, GroupError> {
    coset_enumerate(sub, default_max_cosets(expected_index, &sub.parent))
}
