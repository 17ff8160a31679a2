//! Exact residuals of every defining identity on seeded random inputs,
//! for each preset family. Any nonzero residual would be printed with the
//! inputs that produced it.

use deformed_witt::cli::{residual_suites, Windows};
use deformed_witt::deform::FamilyDescriptor;

fn main() -> deformed_witt::Result<()> {
    let presets: [(&str, &[(&str, &str)]); 5] = [
        ("qwitt_poly", &[]),
        ("qwitt_laurent", &[("k", "2")]),
        ("power_twist", &[("s", "3")]),
        ("multi_laurent", &[]),
        ("qwitt_poly", &[("q", "zeta(6)")]),
    ];
    let windows = Windows {
        jacobi_samples: 25,
        ..Windows::default()
    };
    for (name, params) in presets {
        let family = FamilyDescriptor::from_params(name, params)?;
        let w = family.build(windows.gcd_window)?;
        println!("{family}");
        for c in residual_suites(&w, &windows, 1)? {
            let status = if c.all_zero { "all zero" } else { "NONZERO" };
            println!("  {:<19} {:>3} samples  {status}", c.name, c.samples);
            if let Some(x) = c.witness {
                println!("    inputs {:?} give {}", x.inputs, x.residual);
            }
        }
    }
    Ok(())
}
