use tessella::catalog::{instantiate, FamilySpec};
use tessella::geom::validate_realization;

fn main() {
    let specs = [
        FamilySpec::Quasi(6, 4), FamilySpec::Quasi(3, 6), FamilySpec::Quasi(3, 4), FamilySpec::Quasi(4, 4),
        FamilySpec::Rhombi(3, 6), FamilySpec::Rhombi(8, 6), FamilySpec::Rhombi(3, 4),
        FamilySpec::Snub5(4, 4), FamilySpec::Snub5(3, 4), FamilySpec::Snub5(6, 6), FamilySpec::Snub5(3, 6), FamilySpec::Snub5(6, 12),
        FamilySpec::Hex6Eq(3), FamilySpec::Hex6Eq(6), FamilySpec::Hex6Eq(9),
        FamilySpec::Hex6Neq(3, 4), FamilySpec::Hex6Neq(6, 3), FamilySpec::Hex6Neq(5, 4),
        FamilySpec::ThreeVal(8, 6, 6), FamilySpec::ThreeVal(4, 6, 12), FamilySpec::ThreeVal(10, 4, 4), FamilySpec::ThreeVal(4, 6, 10),
    ];
    let mut bad = 0;
    for spec in specs {
        let inst = match instantiate(spec) {
            Ok(i) => i,
            Err(e) => { println!("{spec:?}: INSTANTIATE ERROR {e}"); bad += 1; continue; }
        };
        let rep = validate_realization(&inst);
        let status = if rep.all_passed() { "ok" } else { "FAIL" };
        println!("{:<24} {} {}", inst.spec.to_cli_string(), inst.config_string(), status);
        if !rep.all_passed() {
            bad += 1;
            for c in rep.checks.iter().filter(|c| !c.passed) {
                println!("    {}: {}", c.name, c.detail);
            }
        }
    }
    std::process::exit(if bad > 0 { 1 } else { 0 });
}
