//! Direct backtracking search for H-equivariant precise colorings on a
//! finite patch, independent of the subgroup machinery. Used to cross-check
//! enumerate_colorings on spherical and Euclidean instances.

use tessella::color::ColoringContext;
use tessella::geom::Patch;

/// All m-colorings of the patch tiles such that (a) tiles sharing a vertex
/// have distinct colors, (b) every generator of H induces a single partial
/// color permutation on the patch, (c) all m colors occur. Results are
/// first-appearance-normalized partition vectors, deduplicated.
pub fn search_equivariant_precise(ctx: &ColoringContext, m: usize) -> Vec<Vec<u16>> {
    let patch: &Patch = &ctx.patch;
    let n = patch.tiles.len();

    // conflict sets: tiles sharing any vertex
    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in &patch.vertices {
        for (a_idx, &a) in v.tiles.iter().enumerate() {
            for &b in &v.tiles[a_idx + 1..] {
                conflicts[a].push(b);
                conflicts[b].push(a);
            }
        }
    }

    // generator images (and their inverses come from the generator list
    // being inverse-closed already)
    let gen_maps: Vec<Vec<Option<usize>>> = ctx
        .h
        .generators()
        .iter()
        .map(|g| patch.map_tiles(&ctx.setup.word_matrix(g)))
        .collect();

    struct Search<'a> {
        colors: Vec<Option<usize>>,
        perms: Vec<Vec<Option<usize>>>, // per generator: color -> color
        perms_used: Vec<Vec<bool>>,     // per generator: target used
        conflicts: &'a [Vec<usize>],
        gen_maps: &'a [Vec<Option<usize>>],
        m: usize,
        out: Vec<Vec<u16>>,
    }

    impl Search<'_> {
        fn propagate(&mut self, start: usize, trail: &mut Vec<(usize, usize)>) -> bool {
            let mut queue = vec![start];
            while let Some(t) = queue.pop() {
                let c = self.colors[t].unwrap();
                for (gi, map) in self.gen_maps.iter().enumerate() {
                    let Some(img) = map[t] else { continue };
                    match (self.perms[gi][c], self.colors[img]) {
                        (Some(pc), Some(ic)) => {
                            if pc != ic {
                                return false;
                            }
                        }
                        (Some(pc), None) => {
                            self.colors[img] = Some(pc);
                            trail.push((img, usize::MAX));
                            if !self.check_conflicts(img) {
                                return false;
                            }
                            queue.push(img);
                        }
                        (None, Some(ic)) => {
                            if self.perms_used[gi][ic] {
                                return false;
                            }
                            self.perms[gi][c] = Some(ic);
                            self.perms_used[gi][ic] = true;
                            trail.push((gi, c + (1 << 20)));
                        }
                        (None, None) => {}
                    }
                }
            }
            true
        }

        fn check_conflicts(&self, t: usize) -> bool {
            let c = self.colors[t];
            self.conflicts[t].iter().all(|&u| self.colors[u] != c)
        }

        fn undo(&mut self, trail: &mut Vec<(usize, usize)>, mark: usize) {
            while trail.len() > mark {
                let (a, b) = trail.pop().unwrap();
                if b == usize::MAX {
                    self.colors[a] = None;
                } else {
                    let c = b - (1 << 20);
                    let target = self.perms[a][c].take().unwrap();
                    self.perms_used[a][target] = false;
                }
            }
        }

        fn step(&mut self, max_used: usize) {
            let next = self.colors.iter().position(|c| c.is_none());
            let Some(t) = next else {
                if max_used == self.m {
                    let vec: Vec<usize> = self.colors.iter().map(|c| c.unwrap()).collect();
                    let key = tessella::color::partition_key(&vec);
                    if !self.out.contains(&key) {
                        self.out.push(key);
                    }
                }
                return;
            };
            // symmetry breaking: allow at most one fresh color
            let limit = (max_used + 1).min(self.m);
            for c in 0..limit {
                let mut trail: Vec<(usize, usize)> = Vec::new();
                self.colors[t] = Some(c);
                trail.push((t, usize::MAX));
                if self.check_conflicts(t) && self.propagate(t, &mut trail) {
                    self.step(max_used.max(c + 1));
                }
                self.undo(&mut trail, 0);
            }
        }
    }

    let gens = ctx.h.generators().len();
    let mut search = Search {
        colors: vec![None; n],
        perms: vec![vec![None; m]; gens],
        perms_used: vec![vec![false; m]; gens],
        conflicts: &conflicts,
        gen_maps: &gen_maps,
        m,
        out: Vec::new(),
    };
    search.step(0);
    search.out.sort();
    search.out
}
