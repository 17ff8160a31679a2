//! Scenarios as the `witt` binary runs them: a JSON config, an optional
//! unit rescaling of g, and a custom σ given as `variable -> image`
//! entries. The JSON report is byte-for-byte reproducible.

use deformed_witt::cli::{run_cli, run_scenario, ConfigFile, Overrides, ScenarioConfig};

fn main() -> deformed_witt::Result<()> {
    let file: ConfigFile = serde_json::from_str(
        r#"{
            "family": "qwitt_laurent",
            "params": {"q": "zeta(8)^3", "k": "2"},
            "seed": 11,
            "windows": {"jacobi_samples": 10},
            "g_unit_factor": "2*t^-1"
        }"#,
    )
    .map_err(|e| deformed_witt::Error::Config(e.to_string()))?;
    let cfg = ScenarioConfig::resolve(Some(file), Overrides::default())?;
    let report = run_scenario(&cfg)?;
    println!("{}", report.to_text());

    let custom: ConfigFile = serde_json::from_str(
        r#"{"custom": {"parameters": ["p"], "variables": ["x", "y"],
            "sigma": ["x -> p*x", "y -> p^2*y"]}}"#,
    )
    .map_err(|e| deformed_witt::Error::Config(e.to_string()))?;
    let cfg = ScenarioConfig::resolve(Some(custom), Overrides::default())?;
    let report = run_scenario(&cfg)?;
    println!("{}", report.to_json());

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli(
        [
            "witt",
            "ideal-stable",
            "--family",
            "power_twist",
            "--param",
            "s=4",
            "--gen",
            "1 + q*t^3 + q^2*t^6",
        ],
        &mut out,
        &mut err,
    );
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
    Ok(())
}
