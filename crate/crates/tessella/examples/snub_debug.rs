use tessella::catalog::{instantiate, FamilySpec};
use tessella::color::*;
use tessella::geom::validate::edge_mirror;

fn main() {
    for (p, q) in [(4u32, 4u32), (6, 6)] {
        println!("=== snub5({p},{q}) chiral m=5");
        let inst = instantiate(FamilySpec::Snub5(p, q)).unwrap();
        let ctx = ColoringContext::new(&inst, SymmetryMode::Chiral).unwrap();
        let opts = EnumerateOptions { precise_only: true, no_shared_orbit_colors: false };
        let schemes = enumerate_colorings(&ctx, 5, &opts).unwrap();
        println!("{} schemes", schemes.len());
        let mu = edge_mirror(&inst, &ctx.setup).unwrap();
        let image = ctx.patch.map_tiles_any(&mu);
        for (i, s) in schemes.iter().enumerate() {
            let colors = scheme_patch_colors(&ctx, s);
            let audit = patch_audit(&ctx, &colors);
            // mirrored partition key
            let mirrored: Vec<usize> = (0..colors.len())
                .map(|t| image[t].map(|j| colors[j]).unwrap_or(usize::MAX))
                .collect();
            // normalize mirrored with only mapped tiles... quick: compare via key on mapped prefix
            println!("-- scheme {i}: {:?} audit_clean={} classify={:?}", s.group_indices(), audit.clean(), classify(&ctx, s));
            print!("{}", s.describe(&ctx));
            // which scheme's key matches the mirrored coloring?
            for (k, s2) in schemes.iter().enumerate() {
                let c2 = scheme_patch_colors(&ctx, s2);
                // check: exists color bijection with c2 on tiles where mirror image defined
                let mut map = std::collections::HashMap::new();
                let mut ok = true;
                let mut used = std::collections::HashSet::new();
                for t in 0..colors.len() {
                    if mirrored[t] == usize::MAX { continue; }
                    let a = c2[t]; let b = mirrored[t];
                    match map.get(&a) {
                        None => { if !used.insert(b) { ok = false; break; } map.insert(a, b); }
                        Some(&x) => if x != b { ok = false; break; },
                    }
                }
                if ok { println!("   mirror(scheme {i}) == scheme {k}"); }
            }
        }
    }
}
