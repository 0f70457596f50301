//! Backtracking enumeration of all subgroups up to a given index.
//!
//! Standard partial coset table search: entries are filled in row-major
//! order, new rows are numbered by first appearance, and relator scans drive
//! deductions. Every subgroup of index <= max_index appears exactly once;
//! conjugate subgroups are deliberately kept distinct.

use crate::coset::CosetTable;
use crate::group::{GroupError, Presentation};
use crate::symmetry::SymmetryClass;
use crate::word::{Letter, Word};

/// All subgroups of the triangle group with index <= `max_index` whose
/// row-0 stabilizer contains every `forced` word. When `within` is given,
/// only subgroups of that parity-kernel are returned (checked on Schreier
/// generators via a parity labelling of the rows).
pub fn low_index_subgroups(
    pres: &Presentation,
    max_index: usize,
    forced: &[Word],
    within: Option<&SymmetryClass>,
) -> Result<Vec<CosetTable>, GroupError> {
    if max_index == 0 || max_index > 64 {
        return Err(GroupError::ResourceExhausted(max_index));
    }
    let relators: Vec<Vec<Letter>> = pres
        .rotation_relators()
        .iter()
        .map(|w| w.letters().to_vec())
        .collect();
    let forced: Vec<Vec<Letter>> = forced
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.letters().to_vec())
        .collect();
    let mut search = Search {
        table: vec![[UNDEF; 3]],
        trail: Vec::new(),
        relators,
        forced,
        max: max_index,
        out: Vec::new(),
    };
    search.run();
    let mut tables: Vec<CosetTable> = search
        .out
        .into_iter()
        .map(|t| CosetTable::from_action(t, pres.orders()))
        .collect();
    if let Some(h) = within {
        tables.retain(|t| lies_within(t, h));
    }
    Ok(tables)
}

/// J <= H iff the parity labelling of rows from row 0 is consistent on every
/// edge; this is exactly "all Schreier generators satisfy the predicate".
pub fn lies_within(table: &CosetTable, h: &SymmetryClass) -> bool {
    let maps = h.maps();
    if maps.is_empty() {
        return true;
    }
    let n = table.len();
    let mut label: Vec<Option<u32>> = vec![None; n];
    label[0] = Some(0);
    let mut stack = vec![0u32];
    while let Some(r) = stack.pop() {
        let lr = label[r as usize].unwrap();
        for l in crate::word::LETTERS {
            let s = table.step(r, l);
            let bits: u32 = maps
                .iter()
                .enumerate()
                .fold(0, |acc, (k, m)| acc | ((m.images[l.index()] as u32) << k));
            let ls = lr ^ bits;
            match label[s as usize] {
                None => {
                    label[s as usize] = Some(ls);
                    stack.push(s);
                }
                Some(x) if x != ls => return false,
                _ => {}
            }
        }
    }
    true
}

const UNDEF: i32 = -1;

struct Search {
    table: Vec<[i32; 3]>,
    trail: Vec<(u32, usize)>,
    relators: Vec<Vec<Letter>>,
    forced: Vec<Vec<Letter>>,
    max: usize,
    out: Vec<Vec<[u32; 3]>>,
}

enum ScanOutcome {
    Fine,
    Deduced,
    Contradiction,
}

impl Search {
    fn run(&mut self) {
        if self.propagate() {
            self.step();
        }
    }

    fn step(&mut self) {
        let slot = (0..self.table.len() as u32)
            .flat_map(|r| (0..3).map(move |g| (r, g)))
            .find(|&(r, g)| self.table[r as usize][g] == UNDEF);
        let (r, g) = match slot {
            None => {
                self.emit();
                return;
            }
            Some(s) => s,
        };
        let rows = self.table.len();
        for s in 0..rows as u32 {
            if self.table[s as usize][g] == UNDEF {
                self.try_branch(r, g, s, false);
            }
        }
        if rows < self.max {
            self.try_branch(r, g, rows as u32, true);
        }
    }

    fn try_branch(&mut self, r: u32, g: usize, s: u32, fresh: bool) {
        let mark = self.trail.len();
        let rows = self.table.len();
        if fresh {
            self.table.push([UNDEF; 3]);
        }
        self.set(r, g, s);
        if self.propagate() {
            self.step();
        }
        while self.trail.len() > mark {
            let (tr, tg) = self.trail.pop().unwrap();
            self.table[tr as usize][tg] = UNDEF;
        }
        if fresh {
            self.table.truncate(rows);
        }
    }

    fn set(&mut self, r: u32, g: usize, s: u32) {
        self.table[r as usize][g] = s as i32;
        self.trail.push((r, g));
        if self.table[s as usize][g] == UNDEF {
            self.table[s as usize][g] = r as i32;
            self.trail.push((s, g));
        }
    }

    /// Deduce until stable; false on contradiction.
    fn propagate(&mut self) -> bool {
        loop {
            let mut deduced = false;
            for ri in 0..self.table.len() as u32 {
                for k in 0..self.relators.len() {
                    let rel = std::mem::take(&mut self.relators[k]);
                    let outcome = self.scan(ri, &rel);
                    self.relators[k] = rel;
                    match outcome {
                        ScanOutcome::Contradiction => return false,
                        ScanOutcome::Deduced => deduced = true,
                        ScanOutcome::Fine => {}
                    }
                }
            }
            for k in 0..self.forced.len() {
                let wl = std::mem::take(&mut self.forced[k]);
                let outcome = self.scan(0, &wl);
                self.forced[k] = wl;
                match outcome {
                    ScanOutcome::Contradiction => return false,
                    ScanOutcome::Deduced => deduced = true,
                    ScanOutcome::Fine => {}
                }
            }
            if !deduced {
                return true;
            }
        }
    }

    /// Scan `word` as a cycle at `start` without filling; deduce on a single
    /// gap, report contradiction on mismatch.
    fn scan(&mut self, start: u32, word: &[Letter]) -> ScanOutcome {
        let n = word.len();
        let mut f = start;
        let mut i = 0;
        while i < n {
            let v = self.table[f as usize][word[i].index()];
            if v == UNDEF {
                break;
            }
            f = v as u32;
            i += 1;
        }
        if i == n {
            return if f == start {
                ScanOutcome::Fine
            } else {
                ScanOutcome::Contradiction
            };
        }
        let mut b = start;
        let mut j = n - 1;
        while j > i {
            let v = self.table[b as usize][word[j].index()];
            if v == UNDEF {
                break;
            }
            b = v as u32;
            j -= 1;
        }
        if j > i {
            return ScanOutcome::Fine; // gap longer than one letter
        }
        // single gap: f ·w[i] = b must hold
        let g = word[i].index();
        let tf = self.table[f as usize][g];
        let tb = self.table[b as usize][g];
        if tf != UNDEF {
            return if tf as u32 == b {
                ScanOutcome::Fine
            } else {
                ScanOutcome::Contradiction
            };
        }
        if tb != UNDEF {
            return if tb as u32 == f {
                ScanOutcome::Fine
            } else {
                ScanOutcome::Contradiction
            };
        }
        self.set(f, g, b);
        ScanOutcome::Deduced
    }

    fn emit(&mut self) {
        let t: Vec<[u32; 3]> = self
            .table
            .iter()
            .map(|row| [row[0] as u32, row[1] as u32, row[2] as u32])
            .collect();
        self.out.push(t);
    }
}
