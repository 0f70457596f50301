use tessella::catalog::{CountMode, FamilyId};
use tessella::color::{family_cells, verify_proposition};
use std::time::Instant;

fn main() {
    let mut all = Vec::new();
    // criterion-2 ranges
    let mut quasi = family_cells(FamilyId::Quasi, 3..=13, 3..=13, CountMode::Perfect);
    quasi.extend(family_cells(FamilyId::Quasi, std::iter::once(18), (3..=13).chain(std::iter::once(18)), CountMode::Perfect));
    quasi.extend(family_cells(FamilyId::Quasi, 3..=13, std::iter::once(18), CountMode::Perfect));
    all.push(("quasi", quasi));
    all.push(("rhombi", family_cells(FamilyId::Rhombi, 3..=13, 3..=13, CountMode::Perfect)));
    let mut snubp = family_cells(FamilyId::Snub5, 3..=13, 3..=13, CountMode::Perfect);
    snubp.push((tessella::catalog::FamilySpec::Snub5(6,12), CountMode::Perfect));
    snubp.push((tessella::catalog::FamilySpec::Snub5(12,12), CountMode::Perfect));
    all.push(("snub5-perfect", snubp));
    all.push(("snub5-chiral", (3..=13).map(|p| (tessella::catalog::FamilySpec::Snub5(p,p), CountMode::ChirallyPerfect)).collect()));
    all.push(("hex6eq", family_cells(FamilyId::Hex6Eq, 3..=10, 3..=3, CountMode::Perfect)));
    all.push(("hex6neq", family_cells(FamilyId::Hex6Neq, [3,4,5,6,9,10,15], 3..=13, CountMode::Perfect)));
    let mut total_cells = 0; let mut total_bad = 0;
    let t0 = Instant::now();
    for (name, cells) in all {
        let t = Instant::now();
        let results = verify_proposition(&cells);
        let bad: Vec<_> = results.iter().filter(|c| !c.pass).collect();
        println!("{:<14} {:>4} cells {:>3} fail  {:.1}s", name, results.len(), bad.len(), t.elapsed().as_secs_f64());
        for b in bad.iter().take(8) {
            println!("   FAIL {:?} {:?}: got {} expected {} {}", b.spec, b.mode, b.enumerated, b.expected, b.note);
        }
        total_cells += results.len(); total_bad += bad.len();
    }
    println!("TOTAL {total_cells} cells, {total_bad} failures, {:.1}s", t0.elapsed().as_secs_f64());
    std::process::exit(if total_bad > 0 {1} else {0});
}
