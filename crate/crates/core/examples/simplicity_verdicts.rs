//! Certified simplicity verdicts for a sweep of presets, with the
//! hypothesis checks that accompany each verdict.

use deformed_witt::deform::FamilyDescriptor;
use deformed_witt::ideals::{decide_simplicity, SimplicityOptions};

fn main() -> deformed_witt::Result<()> {
    let presets: [(&str, &[(&str, &str)]); 9] = [
        ("qwitt_poly", &[]),
        ("qwitt_poly", &[("q", "zeta(5)")]),
        ("qwitt_poly", &[("q", "-1")]),
        ("qwitt_laurent", &[("k", "2")]),
        ("qwitt_laurent", &[("q", "zeta(4)")]),
        ("power_twist", &[("s", "-2")]),
        ("multi_laurent", &[("n", "3")]),
        ("multi_laurent", &[("q1", "2"), ("q2", "3")]),
        ("multi_laurent", &[("q1", "q"), ("q2", "q")]),
    ];
    let opts = SimplicityOptions::default();
    for (name, params) in presets {
        let family = FamilyDescriptor::from_params(name, params)?;
        let v = decide_simplicity(&family, &opts)?;
        let h = &v.hypothesis_report;
        println!(
            "{:<40} {:<12} epi={:<7} d-surjective={:<7} delta in F={}",
            family.describe(),
            format!("{:?}", v.verdict),
            h.epimorphism.result,
            h.partial_surjective.result,
            h.delta_in_f.result
        );
        if let Some(w) = &v.witness {
            println!("{:<40} witness ({})", "", w.generator);
        }
        for note in &h.notes {
            println!("{:<40} note: {note}", "");
        }
    }
    Ok(())
}
