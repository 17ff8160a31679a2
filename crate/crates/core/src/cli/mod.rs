//! Expression parsing, scenario configuration, subcommand dispatch and
//! reporting for the `witt` binary.
//!
//! Exit status: 0 when every contract holds, 1 on a contract violation
//! (nonzero mandatory residual, oracle disagreement, failed algebra
//! invariant), 2 on a usage or configuration error.

mod config;
mod parse;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use crate::ring::format_element;
pub use config::{
    parse_param, AlgebraSource, ConfigFile, CustomAlgebra, OutputFormat, Overrides, ScenarioConfig,
    Windows,
};
pub use parse::{parse_element, parse_sigma};
pub use report::{
    AlgebraSummary, ConfigEcho, CounterexampleEcho, ExtractedRow, OperationResult, Report,
    ResidualCheck, ResidualWitness, Timing,
};

use crate::coeff::{Coefficient, FieldDescriptor};
use crate::deform::DeformedWittAlgebra;
use crate::error::{Error, Result};
use crate::ideals::{
    brute_force_stability, decide_simplicity, extract_monomials, hypotheses, is_partial_stable,
    reconstruct_terms, BruteForceSummary, PrincipalIdeal, SimplicityOptions,
};
use crate::random::ElementSampler;
use crate::ring::{format_coefficient, Ring, RingElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// One CLI request beyond the scenario itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Request {
    CheckAxioms,
    Bracket { a: String, b: String },
    Partial { a: String },
    IdealStable { generator: String },
    ExtractMonomials { p: String },
    Simplicity,
}

impl Request {
    fn name(&self) -> &'static str {
        match self {
            Request::CheckAxioms => "check-axioms",
            Request::Bracket { .. } => "bracket",
            Request::Partial { .. } => "partial",
            Request::IdealStable { .. } => "ideal-stable",
            Request::ExtractMonomials { .. } => "extract-monomials",
            Request::Simplicity => "simplicity",
        }
    }
}

pub fn describe_field(f: &FieldDescriptor) -> String {
    match f {
        FieldDescriptor::Rationals => "Q".into(),
        FieldDescriptor::RationalFunctions(names) => format!("Q({})", names.join(", ")),
        FieldDescriptor::Cyclotomic(n) => format!("Q(zeta({n}))"),
    }
}

pub fn describe_ring(r: &Ring) -> String {
    let vars: Vec<String> = r
        .variables()
        .iter()
        .zip(r.laurent_flags())
        .map(|(v, &l)| if l { format!("{v}^(+-1)") } else { v.clone() })
        .collect();
    format!("{}[{}]", describe_field(r.field()), vars.join(", "))
}

/// Builds the configured algebra, applying the unit factor if present.
pub fn build_algebra(cfg: &ScenarioConfig) -> Result<DeformedWittAlgebra> {
    let w = cfg.algebra.build(cfg.windows.gcd_window)?;
    let Some(text) = &cfg.g_unit_factor else {
        return Ok(w);
    };
    let u = parse_element(text, w.ring()).map_err(|e| e.context("g_unit_factor"))?;
    if !u.is_unit() {
        return Err(Error::Config(format!(
            "g_unit_factor `{text}` is not a unit"
        )));
    }
    let g = w.g() * &u;
    DeformedWittAlgebra::new(w.sigma().clone(), Some(g), cfg.windows.gcd_window)
}

fn simplicity_options(cfg: &ScenarioConfig) -> SimplicityOptions {
    SimplicityOptions {
        seed: cfg.seed,
        gcd_window: cfg.windows.gcd_window,
        multiplier_window: cfg.windows.multiplier_window,
        dependence_bound: cfg.windows.dependence_bound,
        hom_jacobi_window: cfg.windows.hom_jacobi_window,
        ..SimplicityOptions::default()
    }
}

fn echo(cfg: &ScenarioConfig, w: &DeformedWittAlgebra) -> (ConfigEcho, AlgebraSummary) {
    let ring = w.ring();
    let sigma = (0..ring.nvars())
        .map(|i| {
            format!(
                "{} -> {}",
                ring.variables()[i],
                w.sigma().image_of_generator(i)
            )
        })
        .collect();
    (
        ConfigEcho {
            algebra: cfg.algebra.describe(),
            field: describe_field(ring.field()),
            ring: describe_ring(ring),
            seed: cfg.seed,
            windows: cfg.windows.clone(),
            g_unit_factor: cfg.g_unit_factor.clone(),
        },
        AlgebraSummary {
            sigma,
            g: format_element(w.g()),
            g_provenance: w.provenance().to_string(),
            delta: format_element(w.delta()),
            stabilization: w.stabilization().clone(),
        },
    )
}

/// Runs `samples` residual evaluations of the given arity.
struct Suite<'a> {
    w: &'a DeformedWittAlgebra,
    windows: &'a Windows,
    seed: u64,
}

impl Suite<'_> {
    fn run(
        &self,
        name: &'static str,
        identity: &'static str,
        mandatory: bool,
        salt: u64,
        arity: usize,
        residual: impl Fn(&mut ElementSampler, &[RingElement]) -> Result<RingElement>,
    ) -> Result<ResidualCheck> {
        let mut sampler = ElementSampler::new(
            self.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt),
            self.windows.sample_terms,
            self.windows.sample_degree,
        );
        let mut nonzero = 0;
        let mut witness = None;
        for _ in 0..self.windows.jacobi_samples {
            let inputs: Vec<RingElement> =
                (0..arity).map(|_| sampler.element(self.w.ring())).collect();
            let r = residual(&mut sampler, &inputs).map_err(|e| e.context(name))?;
            if !r.is_zero() {
                nonzero += 1;
                witness.get_or_insert_with(|| ResidualWitness {
                    inputs: inputs.iter().map(format_element).collect(),
                    residual: format_element(&r),
                });
            }
        }
        Ok(ResidualCheck {
            name,
            identity,
            mandatory,
            samples: self.windows.jacobi_samples,
            nonzero,
            all_zero: nonzero == 0,
            witness,
        })
    }
}

/// Every residual suite on seeded random inputs.
pub fn residual_suites(
    w: &DeformedWittAlgebra,
    windows: &Windows,
    seed: u64,
) -> Result<Vec<ResidualCheck>> {
    let s = Suite { w, windows, seed };
    let field = w.ring().field().clone();
    Ok(vec![
        s.run(
            "leibniz",
            "d(ab) - d(a)b - sigma(a)d(b)",
            true,
            1,
            2,
            |_, x| w.leibniz_residual(&x[0], &x[1]),
        )?,
        s.run(
            "twist",
            "d(sigma(a)) - delta*sigma(d(a))",
            true,
            2,
            1,
            |_, x| w.twist_residual(&x[0]),
        )?,
        s.run("skew", "[a,b] + [b,a]", true, 3, 2, |_, x| {
            Ok(w.bracket(&x[0], &x[1])? + w.bracket(&x[1], &x[0])?)
        })?,
        s.run("alternating", "[a,a]", true, 4, 1, |_, x| {
            w.skew_residual(&x[0])
        })?,
        s.run(
            "bilinearity",
            "[ca+b,e] - c[a,e] - [b,e]",
            true,
            5,
            3,
            |rng, x| {
                let c = rng.coefficient(&field);
                let lhs = w.bracket(&(x[0].scale(&c) + &x[1]), &x[2])?;
                Ok(lhs - w.bracket(&x[0], &x[2])?.scale(&c) - w.bracket(&x[1], &x[2])?)
            },
        )?,
        s.run(
            "generalized_jacobi",
            "cyclic [sigma(a),[b,c]] + delta[a,[b,c]]",
            true,
            6,
            3,
            |_, x| w.generalized_jacobi_residual(&x[0], &x[1], &x[2]),
        )?,
        s.run(
            "hom_jacobi",
            "cyclic [sigma1(a),[b,c]], sigma1 = sigma + delta*Id",
            w.delta_is_constant(),
            7,
            3,
            |_, x| w.hom_jacobi_residual(&x[0], &x[1], &x[2]),
        )?,
    ])
}

fn base_report(cfg: &ScenarioConfig, w: &DeformedWittAlgebra, command: &'static str) -> Report {
    let (config, algebra) = echo(cfg, w);
    Report {
        command,
        config,
        algebra,
        checks: Vec::new(),
        hypotheses: None,
        result: None,
        verdicts: None,
        violations: Vec::new(),
        timing: None,
    }
}

/// Residual suites, hypothesis checks and, for presets, the simplicity
/// verdict.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report> {
    execute(cfg, &Request::CheckAxioms)
}

/// Serves one request against the configured algebra.
pub fn execute(cfg: &ScenarioConfig, request: &Request) -> Result<Report> {
    let w = build_algebra(cfg)?;
    let mut report = base_report(cfg, &w, request.name());
    let parse = |label: &str, text: &str| {
        parse_element(text, w.ring()).map_err(|e| e.context(format!("--{label}")))
    };
    match request {
        Request::CheckAxioms => {
            report.checks = residual_suites(&w, &cfg.windows, cfg.seed)?;
            for c in &report.checks {
                if c.mandatory && !c.all_zero {
                    report.violations.push(format!(
                        "{}: {} of {} residuals nonzero",
                        c.name, c.nonzero, c.samples
                    ));
                }
            }
            match cfg.algebra.family() {
                Some(f) => report.verdicts = Some(simplicity(f, cfg, &mut report.violations)?),
                None => report.hypotheses = Some(hypotheses(&w)),
            }
        }
        Request::Simplicity => {
            let family = cfg
                .algebra
                .family()
                .ok_or_else(|| Error::Config("simplicity verdicts need a preset family".into()))?;
            report.verdicts = Some(simplicity(family, cfg, &mut report.violations)?);
        }
        Request::Bracket { a, b } => {
            let (x, y) = (parse("a", a)?, parse("b", b)?);
            report.result = Some(OperationResult::Bracket {
                a: format_element(&x),
                b: format_element(&y),
                bracket: format_element(&w.bracket(&x, &y).map_err(|e| e.context("bracket"))?),
            });
        }
        Request::Partial { a } => {
            let x = parse("a", a)?;
            report.result = Some(OperationResult::Partial {
                a: format_element(&x),
                partial: format_element(&w.partial(&x).map_err(|e| e.context("partial"))?),
            });
        }
        Request::IdealStable { generator } => {
            let p = parse("gen", generator)?;
            let ideal = PrincipalIdeal::new(&p)?;
            let cert = is_partial_stable(&w, &ideal).map_err(|e| e.context("is_partial_stable"))?;
            let brute = brute_force_stability(&w, &ideal, cfg.windows.multiplier_window)
                .map_err(|e| e.context("brute_force_stability"))?;
            let agrees = cert.stable == brute.stable;
            if !agrees {
                report.violations.push(format!(
                    "stability criterion says {} but the window-{} brute force says {}",
                    cert.stable, brute.window, brute.stable
                ));
            }
            report.result = Some(OperationResult::IdealStable {
                generator: format_element(ideal.generator()),
                proper: ideal.is_proper(),
                stable: cert.stable,
                quotient: cert.quotient.as_ref().map(format_element),
                counterexample: cert.counterexample.as_ref().map(|c| CounterexampleEcho {
                    multiplier: format_element(&c.multiplier),
                    element: format_element(&c.element),
                }),
                criterion: cert.justification,
                brute_force: BruteForceSummary {
                    window: brute.window,
                    checks: brute.checks.len(),
                    all_divisible: brute.stable,
                },
                oracle_agrees: agrees,
            });
        }
        Request::ExtractMonomials { p } => {
            let x = parse("p", p)?;
            let extracted =
                extract_monomials(&w, &x).map_err(|e| e.context("extract_monomials"))?;
            let rebuilt = reconstruct_terms(&w, &x, &extracted);
            let reconstructed = extracted.iter().zip(&rebuilt).all(|(t, r)| &t.term == r);
            if !reconstructed {
                report
                    .violations
                    .push("a term differs from its reconstruction from sigma-iterates".into());
            }
            let field = w.ring().field();
            let fmt = |c: &Coefficient| format_coefficient(c, field);
            report.result = Some(OperationResult::ExtractMonomials {
                p: format_element(&x),
                terms: extracted
                    .iter()
                    .map(|t| ExtractedRow {
                        term: format_element(&t.term),
                        eigenvalue: fmt(&t.eigenvalue),
                        combination: t.combination.iter().map(fmt).collect(),
                    })
                    .collect(),
                reconstructed,
            });
        }
    }
    Ok(report)
}

fn simplicity(
    family: &crate::deform::FamilyDescriptor,
    cfg: &ScenarioConfig,
    violations: &mut Vec<String>,
) -> Result<crate::ideals::SimplicityVerdict> {
    let v = decide_simplicity(family, &simplicity_options(cfg))
        .map_err(|e| e.context("decide_simplicity"))?;
    if let Some(w) = &v.witness {
        if !w.verified() {
            violations.push(format!("witness ({}) failed re-verification", w.generator));
        }
    }
    Ok(v)
}

/// Exit status for an error: 2 when the request itself is unusable.
pub fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Syntax { .. }
        | Error::UnknownSymbol { .. }
        | Error::ExponentDomain { .. }
        | Error::Config(_)
        | Error::UnsupportedFamily(_)
        | Error::InvalidDescriptor(_)
        | Error::InvalidOverride(_)
        | Error::NegativeExponentOnNonUnit(_)
        | Error::SigmaIsIdentityOnSample
        | Error::ZeroGenerator
        | Error::ZeroInput
        | Error::SingularSystem { .. }
        | Error::UnsupportedSigma => EXIT_USAGE,
        _ => EXIT_VIOLATION,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "witt",
    version,
    about = "Exact checks and simplicity certificates for sigma-deformed Witt algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Preset: qwitt_poly, qwitt_laurent, power_twist or multi_laurent.
    #[arg(long)]
    pub family: Option<String>,
    /// Preset parameter `key=value`, e.g. `q=zeta(5)`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// JSON scenario file; flags override its values.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Add wall-clock time to the report (breaks byte-for-byte reproducibility).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Residual suites, hypothesis checks and the simplicity verdict.
    CheckAxioms {
        #[command(flatten)]
        common: Common,
    },
    /// The deformed bracket [a, b].
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        common: Common,
    },
    /// The sigma-derivation applied to a.
    Partial {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decides whether (gen) is a d-stable ideal, with a brute-force cross-check.
    IdealStable {
        #[arg(long = "gen", allow_hyphen_values = true)]
        generator: String,
        #[command(flatten)]
        common: Common,
    },
    /// Writes each term of p as a combination of its sigma-iterates.
    ExtractMonomials {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[command(flatten)]
        common: Common,
    },
    /// The certified simplicity verdict alone.
    Simplicity {
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn split(self) -> (Request, Common) {
        match self {
            Command::CheckAxioms { common } => (Request::CheckAxioms, common),
            Command::Bracket { a, b, common } => (Request::Bracket { a, b }, common),
            Command::Partial { a, common } => (Request::Partial { a }, common),
            Command::IdealStable { generator, common } => {
                (Request::IdealStable { generator }, common)
            }
            Command::ExtractMonomials { p, common } => (Request::ExtractMonomials { p }, common),
            Command::Simplicity { common } => (Request::Simplicity, common),
        }
    }
}

/// Resolves the scenario from the config file and flags.
pub fn scenario_from(common: &Common) -> Result<ScenarioConfig> {
    let file = common.config.as_deref().map(ConfigFile::load).transpose()?;
    let params = common
        .params
        .iter()
        .map(|p| parse_param(p))
        .collect::<Result<_>>()?;
    ScenarioConfig::resolve(
        file,
        Overrides {
            family: common.family.clone(),
            params,
            seed: common.seed,
            json: common.json,
        },
    )
}

/// Parses `args`, runs the request and writes the report; returns the
/// exit status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (request, common) = cli.command.split();
    let started = Instant::now();
    let outcome = scenario_from(&common).and_then(|cfg| execute(&cfg, &request).map(|r| (cfg, r)));
    match outcome {
        Ok((cfg, mut report)) => {
            if common.timing {
                report.timing = Some(Timing {
                    total_ms: started.elapsed().as_millis(),
                });
            }
            let text = match cfg.output {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            };
            let _ = out.write_all(text.as_bytes());
            for v in &report.violations {
                let _ = writeln!(err, "violation: {v}");
            }
            if report.ok() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests;
