//! Named families of (ring, σ, g) triples.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::DeformedWittAlgebra;
use crate::coeff::{Coefficient, FieldDescriptor};
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::ring::{ExponentVector, RingDescriptor, RingExt};

/// Value of a deformation parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSpec {
    /// A transcendental parameter; equal names are the same parameter.
    Symbol(String),
    Rational(BigRational),
    /// `ζ_order^power`.
    Zeta {
        order: u64,
        power: i64,
    },
}

impl QSpec {
    /// Parses `symbolic`, an identifier, a rational literal `a` or `a/b`,
    /// `zeta(n)` or `zeta(n)^j`. `symbolic` is named after `key`.
    pub fn parse(key: &str, value: &str) -> Result<QSpec> {
        let v = value.trim();
        let bad = || Error::Config(format!("invalid value `{value}` for parameter `{key}`"));
        if v == "symbolic" {
            return Ok(QSpec::Symbol(key.to_string()));
        }
        if let Some(rest) = v.strip_prefix("zeta(") {
            let (order, tail) = rest.split_once(')').ok_or_else(bad)?;
            let order: u64 = order.trim().parse().map_err(|_| bad())?;
            if order == 0 {
                return Err(bad());
            }
            let tail = tail.trim();
            let power = if tail.is_empty() {
                1
            } else {
                let p = tail.strip_prefix('^').ok_or_else(bad)?.trim();
                let p = p
                    .strip_prefix('(')
                    .and_then(|p| p.strip_suffix(')'))
                    .unwrap_or(p);
                p.trim().parse().map_err(|_| bad())?
            };
            return Ok(QSpec::Zeta { order, power });
        }
        if crate::coeff::is_identifier(v) {
            return Ok(QSpec::Symbol(v.to_string()));
        }
        let r: BigRational = match v.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse().map_err(|_| bad())?;
                let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(v.parse().map_err(|_| bad())?),
        };
        Ok(QSpec::Rational(r))
    }

    fn symbol(&self) -> Option<&str> {
        match self {
            QSpec::Symbol(s) => Some(s),
            _ => None,
        }
    }

    fn to_coefficient(&self, field: &FieldDescriptor) -> Result<Coefficient> {
        let c = match self {
            QSpec::Symbol(s) => field
                .parameter_index(s)
                .and_then(|i| field.param(i))
                .ok_or_else(|| Error::UnknownSymbol {
                    symbol: s.clone(),
                    position: 0,
                })?,
            QSpec::Rational(r) => field.from_rational(r),
            QSpec::Zeta { order, power } => field
                .zeta(*order, *power)
                .ok_or_else(|| Error::Config(format!("zeta({order}) is not in the field")))?,
        };
        if c.is_zero() {
            return Err(Error::Config(
                "deformation parameter must be nonzero".into(),
            ));
        }
        Ok(c)
    }
}

impl fmt::Display for QSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpec::Symbol(s) => write!(f, "{s}"),
            QSpec::Rational(r) => write!(f, "{r}"),
            QSpec::Zeta { order, power: 1 } => write!(f, "zeta({order})"),
            QSpec::Zeta { order, power } => write!(f, "zeta({order})^{power}"),
        }
    }
}

/// A preset family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    /// `F[t]`, `σ(t) = qt`, `g = (1 − q)t`.
    QwittPoly { q: QSpec },
    /// `F[t, t⁻¹]`, `σ(t) = qt`, `g = t^k`.
    QwittLaurent { q: QSpec, k: i64 },
    /// `F[t, t⁻¹]`, `σ(t) = qt^s`, `s ∉ {0, 1, 2}`.
    PowerTwist { q: QSpec, s: i64 },
    /// `F[x₁^±, …, xₙ^±]`, `σ(xᵢ) = qᵢxᵢ`, `g = 1`.
    MultiLaurent { qs: Vec<QSpec> },
}

impl FamilyDescriptor {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyDescriptor::QwittPoly { .. } => "qwitt_poly",
            FamilyDescriptor::QwittLaurent { .. } => "qwitt_laurent",
            FamilyDescriptor::PowerTwist { .. } => "power_twist",
            FamilyDescriptor::MultiLaurent { .. } => "multi_laurent",
        }
    }

    /// Builds a family from its name and `key=value` parameters. Missing
    /// parameters default to `q=symbolic`, `k=1`, `s=3` and `n=2`.
    pub fn from_params<K: AsRef<str>, V: AsRef<str>>(
        name: &str,
        params: &[(K, V)],
    ) -> Result<Self> {
        let params: Vec<(&str, &str)> = params
            .iter()
            .map(|(k, v)| (k.as_ref(), v.as_ref()))
            .collect();
        let get = |key: &str| {
            params
                .iter()
                .rev()
                .find(|(k, _)| *k == key)
                .map(|&(_, v)| v)
        };
        let int = |key: &str, default: i64| -> Result<i64> {
            get(key).map_or(Ok(default), |v| {
                v.trim()
                    .parse()
                    .map_err(|_| Error::Config(format!("parameter `{key}` must be an integer")))
            })
        };
        let q = |key: &str| QSpec::parse(key, get(key).unwrap_or("symbolic"));
        let allowed: &[&str] = match name {
            "qwitt_poly" => &["q"],
            "qwitt_laurent" => &["q", "k"],
            "power_twist" => &["q", "s"],
            "multi_laurent" => &[],
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        };
        for &(k, _) in &params {
            let multi_key = name == "multi_laurent"
                && (k == "n"
                    || k.strip_prefix('q')
                        .is_some_and(|i| i.parse::<usize>().is_ok_and(|i| i >= 1)));
            if !allowed.contains(&k) && !multi_key {
                return Err(Error::Config(format!(
                    "unknown parameter `{k}` for family {name}"
                )));
            }
        }
        let family = match name {
            "qwitt_poly" => FamilyDescriptor::QwittPoly { q: q("q")? },
            "qwitt_laurent" => FamilyDescriptor::QwittLaurent {
                q: q("q")?,
                k: int("k", 1)?,
            },
            "power_twist" => FamilyDescriptor::PowerTwist {
                q: q("q")?,
                s: int("s", 3)?,
            },
            _ => {
                let highest = params
                    .iter()
                    .filter_map(|(k, _)| k.strip_prefix('q')?.parse::<i64>().ok())
                    .max()
                    .unwrap_or(0);
                let n = int("n", highest.max(2))?;
                if n < 1 || n < highest {
                    return Err(Error::Config(format!(
                        "multi_laurent needs n >= 1 covering every q_i (n = {n})"
                    )));
                }
                let qs = (1..=n)
                    .map(|i| q(&format!("q{i}")))
                    .collect::<Result<_>>()?;
                FamilyDescriptor::MultiLaurent { qs }
            }
        };
        family.validate()?;
        Ok(family)
    }

    fn validate(&self) -> Result<()> {
        if let FamilyDescriptor::PowerTwist { s, .. } = self {
            if matches!(s, 0..=2) {
                return Err(Error::Config(format!(
                    "power_twist requires s outside {{0, 1, 2}}, got {s}"
                )));
            }
        }
        if let FamilyDescriptor::MultiLaurent { qs } = self {
            if qs.is_empty() {
                return Err(Error::Config(
                    "multi_laurent needs at least one variable".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn parameters(&self) -> Vec<&QSpec> {
        match self {
            FamilyDescriptor::QwittPoly { q }
            | FamilyDescriptor::QwittLaurent { q, .. }
            | FamilyDescriptor::PowerTwist { q, .. } => vec![q],
            FamilyDescriptor::MultiLaurent { qs } => qs.iter().collect(),
        }
    }

    /// `ℚ(ζ_N)` when a root of unity occurs (`N` the lcm of the orders),
    /// `ℚ(q…)` when a symbol occurs, `ℚ` otherwise.
    pub fn field(&self) -> Result<FieldDescriptor> {
        let params = self.parameters();
        let mut symbols: Vec<String> = Vec::new();
        for s in params.iter().filter_map(|p| p.symbol()) {
            if !symbols.iter().any(|x| x == s) {
                symbols.push(s.to_string());
            }
        }
        let order = params
            .iter()
            .filter_map(|p| match p {
                QSpec::Zeta { order, .. } => Some(*order),
                _ => None,
            })
            .fold(None, |acc: Option<u64>, o| {
                Some(acc.map_or(o, |a| a.lcm(&o)))
            });
        match (symbols.is_empty(), order) {
            (false, Some(_)) => Err(Error::Config(
                "symbolic parameters cannot be combined with roots of unity".into(),
            )),
            (false, None) => FieldDescriptor::rational_functions(symbols),
            (true, Some(n)) => FieldDescriptor::cyclotomic(n),
            (true, None) => Ok(FieldDescriptor::Rationals),
        }
    }

    /// Builds the algebra with the family's closed-form `g`, which is
    /// checked against the computed gcd.
    pub fn build(&self, window: i64) -> Result<DeformedWittAlgebra> {
        self.validate()?;
        let field = self.field()?;
        let coeffs: Vec<Coefficient> = self
            .parameters()
            .iter()
            .map(|p| p.to_coefficient(&field))
            .collect::<Result<_>>()?;
        let one = field.one();
        let (sigma, g) = match self {
            FamilyDescriptor::QwittPoly { .. } => {
                let ring = RingDescriptor::univariate(field, "t", false)?;
                let q = &coeffs[0];
                let sigma = Endomorphism::diagonal(&ring, vec![q.clone()])?;
                let g = ring.constant(&one - q) * ring.var(0);
                (sigma, g)
            }
            FamilyDescriptor::QwittLaurent { k, .. } => {
                let ring = RingDescriptor::univariate(field, "t", true)?;
                let sigma = Endomorphism::diagonal(&ring, vec![coeffs[0].clone()])?;
                let g = ring.monomial(one, ExponentVector::new(vec![*k]))?;
                (sigma, g)
            }
            FamilyDescriptor::PowerTwist { s, .. } => {
                let ring = RingDescriptor::univariate(field, "t", true)?;
                let q = &coeffs[0];
                let image = ring.monomial(q.clone(), ExponentVector::new(vec![*s]))?;
                let sigma = Endomorphism::from_images(&ring, &[image])?;
                // g = 1 − T with T = q t^{s−1} (s > 2) or q⁻¹ t^{1−s} (s < 0).
                let t = if *s > 2 {
                    ring.monomial(q.clone(), ExponentVector::new(vec![s - 1]))?
                } else {
                    ring.monomial(q.inv()?, ExponentVector::new(vec![1 - s]))?
                };
                let g = ring.one() - t;
                (sigma, g)
            }
            FamilyDescriptor::MultiLaurent { qs } => {
                let vars: Vec<(String, bool)> =
                    (1..=qs.len()).map(|i| (format!("x{i}"), true)).collect();
                let ring = RingDescriptor::new(field, vars)?;
                let sigma = Endomorphism::diagonal(&ring, coeffs.clone())?;
                let g = ring.one();
                (sigma, g)
            }
        };
        DeformedWittAlgebra::new(sigma, Some(g), window).map_err(|e| e.context(self.name()))
    }

    /// Canonical text form, e.g. `qwitt_laurent{q=q,k=2}`.
    pub fn describe(&self) -> String {
        let params: Vec<String> = match self {
            FamilyDescriptor::QwittPoly { q } => vec![format!("q={q}")],
            FamilyDescriptor::QwittLaurent { q, k } => vec![format!("q={q}"), format!("k={k}")],
            FamilyDescriptor::PowerTwist { q, s } => vec![format!("q={q}"), format!("s={s}")],
            FamilyDescriptor::MultiLaurent { qs } => qs
                .iter()
                .enumerate()
                .map(|(i, q)| format!("q{}={q}", i + 1))
                .collect(),
        };
        format!("{}{{{}}}", self.name(), params.join(","))
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
