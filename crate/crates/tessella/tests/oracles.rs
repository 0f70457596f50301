//! Independent-oracle cross-checks: the combinatorial tiling generator
//! against geometric patches, matrix-closure group orders, and the
//! low-index search against a direct subgroup enumeration.

mod support;

use support::combinatorial::{patch_matches_combo, Combo};
use support::matrix_group::matrix_closure;
use tessella::catalog::{instantiate, FamilySpec};
use tessella::geom::{mirror_setup, realize_patch};
use tessella::group::build_triangle_group;
use tessella::low_index::low_index_subgroups;

fn check_iso(spec: FamilySpec) {
    let inst = instantiate(spec).unwrap();
    let setup = mirror_setup(&inst.ambient);
    let patch = realize_patch(&inst, &setup, 2).unwrap();
    let config: Vec<usize> = inst.vertex_config().iter().map(|&g| g as usize).collect();
    let combo = Combo::generate(&config, 5).unwrap_or_else(|e| panic!("{spec:?}: {e:?}"));
    assert!(
        patch_matches_combo(&patch, &combo),
        "incidence mismatch for {spec:?}"
    );
}

#[test]
fn combinatorial_oracle_agrees_with_geometry() {
    for spec in [
        FamilySpec::Quasi(6, 4),
        FamilySpec::Quasi(3, 6),
        FamilySpec::Quasi(3, 4),
        FamilySpec::Rhombi(3, 6),
        FamilySpec::Rhombi(8, 6),
        FamilySpec::Snub5(4, 4),
        FamilySpec::Snub5(3, 4),
        FamilySpec::Snub5(6, 6),
        FamilySpec::Hex6Eq(3),
        FamilySpec::Hex6Eq(6),
        FamilySpec::Hex6Neq(3, 4),
        FamilySpec::Hex6Neq(6, 3),
        FamilySpec::ThreeVal(8, 6, 6),
        FamilySpec::ThreeVal(4, 6, 12),
        FamilySpec::ThreeVal(10, 4, 4),
    ] {
        check_iso(spec);
    }
}

#[test]
fn negative_control_wrong_config_fails() {
    let inst = instantiate(FamilySpec::Quasi(6, 4)).unwrap();
    let setup = mirror_setup(&inst.ambient);
    let patch = realize_patch(&inst, &setup, 2).unwrap();
    // a different quasiregular tiling must not match
    let combo = Combo::generate(&[6, 4, 6, 4, 6, 4][..4].to_vec().as_slice(), 5).unwrap();
    let _ = combo;
    let wrong = Combo::generate(&[8, 4, 8, 4], 5).unwrap();
    assert!(!patch_matches_combo(&patch, &wrong));
}

#[test]
fn spherical_group_orders_match_matrix_closure() {
    for (orders, expect) in [((5, 3, 2), 120usize), ((4, 3, 2), 48), ((3, 3, 2), 24)] {
        let pres = build_triangle_group(orders.0, orders.1, orders.2).unwrap();
        let g = matrix_closure(&pres);
        assert_eq!(g.order, expect);
        // coset enumeration of the trivial subgroup gives the same order
        let sub = tessella::group::SubgroupSpec::new(pres, vec![]);
        assert_eq!(tessella::coset::coset_enumerate(&sub, 20_000).unwrap().len(), expect);
    }
}

#[test]
fn low_index_matches_direct_subgroup_enumeration() {
    for orders in [(3, 3, 2), (2, 2, 2), (4, 3, 2)] {
        let pres = build_triangle_group(orders.0, orders.1, orders.2).unwrap();
        let g = matrix_closure(&pres);
        let max_index = 6usize;
        let mut expected: Vec<tessella::coset::CosetTable> = g
            .all_subgroups()
            .iter()
            .filter(|s| g.order / s.len() <= max_index)
            .map(|s| g.coset_table_of(s, &pres))
            .collect();
        expected.sort_by_key(|t| format!("{t:?}"));
        expected.dedup();
        let mut got = low_index_subgroups(&pres, max_index, &[], None).unwrap();
        got.sort_by_key(|t| format!("{t:?}"));
        assert_eq!(
            got.len(),
            expected.len(),
            "subgroup count mismatch for {orders:?}"
        );
        assert_eq!(got, expected, "subgroup sets differ for {orders:?}");
    }
}

#[test]
fn debug_dump_quasi64() {
    use tessella::geom::{mirror_setup, realize_patch};
    let inst = instantiate(FamilySpec::Quasi(6, 4)).unwrap();
    let setup = mirror_setup(&inst.ambient);
    let patch = realize_patch(&inst, &setup, 2).unwrap();
    let combo = Combo::generate(&[6, 4, 6, 4], 5).unwrap();
    eprintln!("combo verts {}", combo.vertex_count());
    support::combinatorial::debug_dump(&combo, 1);
    // geo seed corona
    let v0 = &patch.vertices[0];
    eprintln!("geo seed tiles: {:?}", v0.tiles.iter().map(|&t| patch.tiles[t].gon).collect::<Vec<_>>());
    eprintln!("match: {}", patch_matches_combo(&patch, &combo));
}
