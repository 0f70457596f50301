use tessella::catalog::{CountMode, FamilySpec};
use tessella::color::verify_cell;

fn main() {
    use CountMode::*;
    let cases: Vec<(&str, FamilySpec, CountMode)> = vec![
        ("(6.4.6.4)", FamilySpec::Quasi(6,4), Perfect),
        ("(8.4.8.4)", FamilySpec::Quasi(8,4), Perfect),
        ("(9.6.9.6)", FamilySpec::Quasi(9,6), Perfect),
        ("(9.3.9.3)", FamilySpec::Quasi(9,3), Perfect),
        ("(6.12.6.12)", FamilySpec::Quasi(6,12), Perfect),
        ("(3.4.3.4)", FamilySpec::Quasi(3,4), Perfect),
        ("(3.5.3.5)", FamilySpec::Quasi(3,5), Perfect),
        ("(8.4.3.4)", FamilySpec::Rhombi(8,3), Perfect),
        ("(8.4.6.4)", FamilySpec::Rhombi(8,6), Perfect),
        ("(12.4.6.4)", FamilySpec::Rhombi(12,6), Perfect),
        ("(5.4.3.4)", FamilySpec::Rhombi(5,3), Perfect),
        ("(3.3.3.3.4)", FamilySpec::Snub5(3,4), Perfect),
        ("(3.3.3.3.9)", FamilySpec::Snub5(3,9), Perfect),
        ("(3.3.6.3.12)", FamilySpec::Snub5(6,12), Perfect),
        ("(3.3.3.3.6)", FamilySpec::Snub5(3,6), Perfect),
        ("(3.3.6.3.6) chiral", FamilySpec::Snub5(6,6), ChirallyPerfect),
        ("(3.3.4.3.4) chiral", FamilySpec::Snub5(4,4), ChirallyPerfect),
        ("(3.3.3.3.3) chiral", FamilySpec::Snub5(3,3), ChirallyPerfect),
        ("(3.3.12.3.12) chiral", FamilySpec::Snub5(12,12), ChirallyPerfect),
        ("(3.3.12.3.12) perfect", FamilySpec::Snub5(12,12), Perfect),
        ("(3.6.3.6.3.6)", FamilySpec::Hex6Eq(6), Perfect),
        ("(3.9.3.9.3.9)", FamilySpec::Hex6Eq(9), Perfect),
        ("(3.6.3.3.3.3)", FamilySpec::Hex6Neq(6,3), Perfect),
        ("(3.3.3.4.3.4)", FamilySpec::Hex6Neq(3,4), Perfect),
        ("(3.3.3.6.3.6)", FamilySpec::Hex6Neq(3,6), Perfect),
        ("(3.5.3.6.3.6)", FamilySpec::Hex6Neq(5,6), Perfect),
        ("(3.5.3.4.3.4)", FamilySpec::Hex6Neq(5,4), Perfect),
        ("(4.6.12)", FamilySpec::ThreeVal(4,6,12), Perfect),
        ("(8.6.6)", FamilySpec::ThreeVal(8,6,6), Perfect),
    ];
    let mut bad = 0;
    for (name, spec, mode) in cases {
        let cell = verify_cell(spec, mode);
        if !cell.pass { bad += 1; }
        println!("{:<24} expected {} got {} {} {}", name, cell.expected, cell.enumerated,
                 if cell.pass {"ok"} else {"MISMATCH"}, cell.note);
    }
    std::process::exit(if bad > 0 {1} else {0});
}
