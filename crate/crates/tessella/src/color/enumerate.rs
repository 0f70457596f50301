//! Enumeration of all colorings whose colors are permuted by H, as
//! partitions of the tiling built from subgroup cosets: for each grouping of
//! the H-orbits, each assignment of subgroups J_i of H with the right index
//! sum, and each valid choice of double-coset offsets, one candidate scheme.

use super::checks::{is_precise, scheme_patch_colors};
use super::context::ColoringContext;
use crate::coset::CosetTable;
use crate::group::GroupError;
use crate::low_index::low_index_subgroups;
use crate::word::Word;
use std::collections::BTreeMap;
use std::sync::Mutex;

/// One group of H-orbits sharing a color set, colored by the cosets of J.
#[derive(Clone, Debug)]
pub struct ColorGroup {
    /// H-orbit indices; `members[0]` is the anchor with offset identity.
    pub members: Vec<usize>,
    /// Coset table of J in the ambient triangle group.
    pub table: CosetTable,
    /// Rows of the H-orbit of row 0 (the restriction of the table to H).
    pub h_rows: Vec<u32>,
    /// Words in H mapping row 0 to each h_row.
    pub h_words: Vec<Word>,
    /// Per-member double-coset offset words (identity for the anchor).
    pub offsets: Vec<Word>,
    /// First color id used by this group.
    pub color_base: usize,
}

/// A coloring scheme: an orbit grouping with per-group subgroups and
/// offsets. Induces the color of every tile of the instance.
#[derive(Clone, Debug)]
pub struct ColoringScheme {
    pub groups: Vec<ColorGroup>,
    pub m: usize,
    /// For each H-orbit: (group index, member position).
    pub orbit_loc: Vec<(usize, usize)>,
    /// Color ids over the context patch, the canonical partition key.
    pub key: Vec<u16>,
}

impl ColoringScheme {
    /// Color of the tile `word . seed_tile(tile_orbit)`.
    pub fn color_of(&self, ctx: &ColoringContext, tile_orbit: usize, word: &Word) -> usize {
        let oi = ctx.horbit_of(tile_orbit, word);
        let (gi, mi) = self.orbit_loc[oi];
        let group = &self.groups[gi];
        let u = ctx.horbits[oi].pull_into_h(word, &ctx.h);
        let lookup = group.offsets[mi].concat(&u.inverse());
        let row = group.table.act(0, &lookup);
        let pos = group
            .h_rows
            .iter()
            .position(|&r| r == row)
            .expect("color row outside the restricted table");
        group.color_base + pos
    }

    /// Number of distinct subgroup indices per group, in order.
    pub fn group_indices(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.h_rows.len()).collect()
    }

    /// Stable text form: grouping, J generators, offsets, m.
    pub fn describe(&self, ctx: &ColoringContext) -> String {
        let mut out = format!("scheme m={}\n", self.m);
        for (gi, g) in self.groups.iter().enumerate() {
            let names: Vec<&str> = g
                .members
                .iter()
                .map(|&oi| ctx.inst.tile_orbits[ctx.horbits[oi].tile_orbit].name)
                .collect();
            let mut gens: Vec<String> = g
                .table
                .schreier_generators()
                .iter()
                .map(|w| w.to_string())
                .collect();
            gens.sort_by_key(|s| (s.len(), s.clone()));
            gens.truncate(6);
            out.push_str(&format!(
                "  group {}: orbits [{}] index {} J=<{}>",
                gi + 1,
                names.join(", "),
                g.h_rows.len(),
                gens.join(",")
            ));
            if g.members.len() > 1 {
                let offs: Vec<String> = g.offsets.iter().map(|w| w.to_string()).collect();
                out.push_str(&format!(" offsets [{}]", offs.join(", ")));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    /// Keep only precise schemes (and prune by corona multiplicity first).
    pub precise_only: bool,
    /// Restrict groupings so every group is a single H-orbit.
    pub no_shared_orbit_colors: bool,
}

/// All set partitions of 0..n as groups of indices, each group sorted, the
/// groups ordered by their smallest element.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, n: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(current.clone());
            return;
        }
        for gi in 0..current.len() {
            current[gi].push(i);
            rec(i + 1, n, current, out);
            current[gi].pop();
        }
        current.push(vec![i]);
        rec(i + 1, n, current, out);
        current.pop();
    }
    rec(0, n, &mut current, &mut out);
    out
}

fn compositions(total: usize, mins: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(total: usize, mins: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if mins.is_empty() {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min: usize = mins[1..].iter().sum();
        let lo = mins[0];
        if total < lo + rest_min {
            return;
        }
        for v in lo..=(total - rest_min) {
            cur.push(v);
            rec(total - v, &mins[1..], cur, out);
            cur.pop();
        }
    }
    rec(total, mins, &mut cur, &mut out);
    out
}

type SearchKey = ([u32; 3], usize, Vec<String>, Vec<[bool; 3]>);

fn subgroup_candidates(
    ctx: &ColoringContext,
    target_h_index: usize,
    forced: &[Word],
) -> Result<Vec<CosetTable>, GroupError> {
    static CACHE: Mutex<BTreeMap<SearchKey, Vec<CosetTable>>> = Mutex::new(BTreeMap::new());
    let ambient_index = ctx.h.index() * target_h_index;
    let key: SearchKey = (
        ctx.inst.ambient.orders(),
        ambient_index,
        {
            let mut f: Vec<String> = forced.iter().map(|w| w.to_string()).collect();
            f.sort();
            f
        },
        ctx.h.maps().iter().map(|m| m.images).collect(),
    );
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let tables = low_index_subgroups(&ctx.inst.ambient, ambient_index, forced, Some(&ctx.h))?;
    let result: Vec<CosetTable> = tables
        .into_iter()
        .filter(|t| t.len() == ambient_index)
        .collect();
    CACHE.lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// Enumerates the distinct tile partitions with m colors permuted by the
/// context's acting group. Without `precise_only`, non-precise perfect
/// schemes are included.
pub fn enumerate_colorings(
    ctx: &ColoringContext,
    m: usize,
    opts: &EnumerateOptions,
) -> Result<Vec<ColoringScheme>, GroupError> {
    let n = ctx.horbits.len();
    if m == 0 {
        return Ok(Vec::new());
    }

    // corona multiplicity of each H-orbit per vertex class
    let corona_counts: Vec<Vec<usize>> = ctx
        .vertex_reps
        .iter()
        .map(|u| {
            let mut counts = vec![0usize; n];
            for (j, wt) in &ctx.inst.vertex_corona {
                let word = u.concat(wt);
                counts[ctx.horbit_of(*j, &word)] += 1;
            }
            counts
        })
        .collect();

    let mut dedup: BTreeMap<Vec<u16>, ColoringScheme> = BTreeMap::new();

    for grouping in set_partitions(n) {
        if opts.no_shared_orbit_colors && grouping.iter().any(|g| g.len() > 1) {
            continue;
        }
        // minimum colors per group: corona pruning only when filtering to
        // precise schemes (an all-one-color scheme is perfect, not precise)
        let mins: Vec<usize> = grouping
            .iter()
            .map(|g| {
                if opts.precise_only {
                    corona_counts
                        .iter()
                        .map(|counts| g.iter().map(|&oi| counts[oi]).sum::<usize>())
                        .max()
                        .unwrap_or(1)
                        .max(1)
                } else {
                    1
                }
            })
            .collect();

        for comp in compositions(m, &mins) {
            // candidate subgroup tables per group
            let mut per_group: Vec<Vec<ColorGroup>> = Vec::with_capacity(grouping.len());
            let mut dead = false;
            for (g_idx, group) in grouping.iter().enumerate() {
                let n_i = comp[g_idx];
                let anchor = group[0];
                let forced = ctx.horbits[anchor].stab.clone();
                let tables = if n_i == 1 {
                    vec![ctx.h.coset_table(&ctx.inst.ambient)]
                } else {
                    subgroup_candidates(ctx, n_i, &forced)?
                };
                let mut realized: Vec<ColorGroup> = Vec::new();
                for table in tables {
                    if n_i == 1 && !forced.iter().all(|w| table.contains(w)) {
                        continue;
                    }
                    let h_rows = table.orbit_of(0, ctx.h.generators());
                    if h_rows.len() != n_i {
                        continue;
                    }
                    let h_words = h_transversal(&table, ctx.h.generators(), &h_rows);
                    // per-member valid offsets: rows of the restricted table
                    // fixed by the member's stabilizer
                    let mut member_choices: Vec<Vec<usize>> = Vec::new();
                    for (pos, &oi) in group.iter().enumerate() {
                        if pos == 0 {
                            member_choices.push(vec![0]);
                            continue;
                        }
                        let stab = &ctx.horbits[oi].stab;
                        let valid: Vec<usize> = (0..h_rows.len())
                            .filter(|&ri| {
                                stab.iter().all(|s| table.act(h_rows[ri], s) == h_rows[ri])
                            })
                            .collect();
                        member_choices.push(valid);
                    }
                    if member_choices.iter().any(|c| c.is_empty()) {
                        continue;
                    }
                    // reduce offset choices to double-coset representatives:
                    // rows in the same orbit under the member stabilizer give
                    // the same color class, and fixed rows are their own
                    // orbits, so each fixed row is already a representative.
                    for combo in cartesian(&member_choices) {
                        realized.push(ColorGroup {
                            members: group.clone(),
                            table: table.clone(),
                            h_rows: h_rows.clone(),
                            h_words: h_words.clone(),
                            offsets: combo
                                .iter()
                                .map(|&ri| h_words[ri].clone())
                                .collect(),
                            color_base: 0,
                        });
                    }
                }
                if realized.is_empty() {
                    dead = true;
                    break;
                }
                per_group.push(realized);
            }
            if dead {
                continue;
            }
            // cartesian product over the groups
            for pick in cartesian_groups(&per_group) {
                let mut groups: Vec<ColorGroup> = pick.into_iter().cloned().collect();
                let mut base = 0;
                let mut orbit_loc = vec![(0usize, 0usize); n];
                for (gi, g) in groups.iter_mut().enumerate() {
                    g.color_base = base;
                    base += g.h_rows.len();
                    for (mi, &oi) in g.members.iter().enumerate() {
                        orbit_loc[oi] = (gi, mi);
                    }
                }
                let mut scheme = ColoringScheme {
                    groups,
                    m,
                    orbit_loc,
                    key: Vec::new(),
                };
                if opts.precise_only && !is_precise(ctx, &scheme) {
                    continue;
                }
                scheme.key = partition_key(&scheme_patch_colors(ctx, &scheme));
                dedup.entry(scheme.key.clone()).or_insert(scheme);
            }
        }
    }
    Ok(dedup.into_values().collect())
}

/// Normalizes a color vector by first-appearance renaming, giving a
/// partition invariant.
pub fn partition_key(colors: &[usize]) -> Vec<u16> {
    let mut rename: BTreeMap<usize, u16> = BTreeMap::new();
    let mut next = 0u16;
    colors
        .iter()
        .map(|&c| {
            *rename.entry(c).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        })
        .collect()
}

fn h_transversal(table: &CosetTable, h_gens: &[Word], h_rows: &[u32]) -> Vec<Word> {
    let mut words: Vec<Option<Word>> = vec![None; h_rows.len()];
    let pos = |r: u32| h_rows.iter().position(|&x| x == r);
    words[0] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let base = words[i].clone().unwrap();
        for g in h_gens {
            let s = table.act(h_rows[i], g);
            if let Some(k) = pos(s) {
                if words[k].is_none() {
                    words[k] = Some(base.concat(g));
                    queue.push_back(k);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("transitive H-orbit")).collect()
}

fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::new();
        for base in &out {
            for &v in c {
                let mut b = base.clone();
                b.push(v);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

fn cartesian_groups<'a>(per_group: &'a [Vec<ColorGroup>]) -> Vec<Vec<&'a ColorGroup>> {
    let mut out: Vec<Vec<&ColorGroup>> = vec![Vec::new()];
    for g in per_group {
        let mut next = Vec::new();
        for base in &out {
            for item in g {
                let mut b = base.clone();
                b.push(item);
                next.push(b);
            }
        }
        out = next;
    }
    out
}
