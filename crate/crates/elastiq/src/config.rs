//! Run configuration: a flat `key = value` file plus command-line overrides.
//!
//! Recognized keys: `scenario`, `order`, `n` (comma list), `T`, `cfl`, `mu`,
//! `seed`, `out`. Lines starting with `#` are comments.

use crate::error::{Error, Result};
use crate::sbp_core::Order;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    Manufactured,
    Stoneley,
    Energy,
    Spectrum,
    Dispersion,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Manufactured => "manufactured",
            Scenario::Stoneley => "stoneley",
            Scenario::Energy => "energy",
            Scenario::Spectrum => "spectrum",
            Scenario::Dispersion => "dispersion",
        }
    }

    fn default_n(self) -> Vec<usize> {
        match self {
            Scenario::Manufactured => vec![61, 121, 241],
            Scenario::Stoneley => vec![61, 121],
            Scenario::Energy => vec![61],
            Scenario::Spectrum => vec![41, 81],
            Scenario::Dispersion => Vec::new(),
        }
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "manufactured" => Scenario::Manufactured,
            "stoneley" => Scenario::Stoneley,
            "energy" => Scenario::Energy,
            "spectrum" => Scenario::Spectrum,
            "dispersion" => Scenario::Dispersion,
            _ => return Err(Error::config("scenario", format!("unknown scenario `{s}`"))),
        })
    }
}

/// Shear modulus of the upper medium of the interface-wave test: either a
/// tabulated row `r1`..`r4` or an explicit value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MuSpec {
    Row(usize),
    Value(f64),
}

impl MuSpec {
    pub fn value(self) -> f64 {
        match self {
            MuSpec::Row(r) => crate::analytic::StoneleyParams::table_mus()[r - 1],
            MuSpec::Value(v) => v,
        }
    }
}

impl FromStr for MuSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(r) = s.strip_prefix('r') {
            let r: usize = r.parse().map_err(|_| Error::config("mu", format!("bad row `{s}`")))?;
            if !(1..=4).contains(&r) {
                return Err(Error::config("mu", "row must be r1..r4"));
            }
            return Ok(MuSpec::Row(r));
        }
        let v: f64 = s.parse().map_err(|_| Error::config("mu", format!("not a number: `{s}`")))?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::config("mu", "must be positive"));
        }
        Ok(MuSpec::Value(v))
    }
}

impl fmt::Display for MuSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuSpec::Row(r) => write!(f, "r{r}"),
            MuSpec::Value(v) => write!(f, "{v:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub order: Order,
    pub n: Vec<usize>,
    /// Final time; `None` selects the scenario default.
    pub t_final: Option<f64>,
    pub cfl: f64,
    pub mu: MuSpec,
    pub seed: u64,
    pub out: PathBuf,
}

impl ScenarioConfig {
    pub fn new(scenario: Scenario) -> Self {
        ScenarioConfig {
            scenario,
            order: Order::Four,
            n: scenario.default_n(),
            t_final: None,
            cfl: 1.3,
            mu: MuSpec::Row(1),
            seed: 0,
            out: PathBuf::from("out"),
        }
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = value.trim();
        match key.trim() {
            "scenario" => self.scenario = v.parse()?,
            "order" => {
                let p: u32 = v.parse().map_err(|_| Error::config("order", format!("not an integer: `{v}`")))?;
                self.order = Order::from_int(p).map_err(|_| Error::config("order", "must be 4 or 6"))?;
            }
            "n" => {
                self.n = v
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<usize>().map_err(|_| Error::config("n", format!("not an integer: `{s}`"))))
                    .collect::<Result<_>>()?;
            }
            "T" => {
                let t: f64 = v.parse().map_err(|_| Error::config("T", format!("not a number: `{v}`")))?;
                self.t_final = Some(t);
            }
            "cfl" => self.cfl = v.parse().map_err(|_| Error::config("cfl", format!("not a number: `{v}`")))?,
            "mu" => self.mu = v.parse()?,
            "seed" => self.seed = v.parse().map_err(|_| Error::config("seed", format!("not an integer: `{v}`")))?,
            "out" => self.out = PathBuf::from(v),
            k => return Err(Error::config(k, "unknown key")),
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut scenario = None;
        let mut pairs = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::config(format!("line {}", ln + 1), "expected `key = value`"))?;
            if k.trim() == "scenario" {
                scenario = Some(v.trim().parse::<Scenario>()?);
            } else {
                pairs.push((k.trim().to_string(), v.trim().to_string()));
            }
        }
        let mut cfg = ScenarioConfig::new(scenario.ok_or_else(|| Error::config("scenario", "missing"))?);
        for (k, v) in pairs {
            cfg.set(&k, &v)?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.t_final {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::config("T", "must be positive"));
            }
        }
        if !(self.cfl > 0.0 && self.cfl.is_finite()) {
            return Err(Error::config("cfl", "must be positive"));
        }
        let needs_n = !matches!(self.scenario, Scenario::Dispersion);
        if needs_n && self.n.is_empty() {
            return Err(Error::config("n", "empty list"));
        }
        let min = match self.scenario {
            Scenario::Spectrum => crate::interp::min_coarse_nodes(3),
            _ => self.order.min_nodes(),
        };
        for &n in &self.n {
            if n < min {
                return Err(Error::config("n", format!("{n} is below the minimum {min}")));
            }
            if matches!(self.scenario, Scenario::Manufactured | Scenario::Energy) && n % 2 == 0 {
                return Err(Error::config("n", format!("{n} must be odd")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ScenarioConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario = {}", self.scenario.name())?;
        writeln!(f, "order = {}", self.order.as_int())?;
        let n: Vec<String> = self.n.iter().map(|n| n.to_string()).collect();
        writeln!(f, "n = {}", n.join(","))?;
        if let Some(t) = self.t_final {
            writeln!(f, "T = {t:?}")?;
        }
        writeln!(f, "cfl = {:?}", self.cfl)?;
        writeln!(f, "mu = {}", self.mu)?;
        writeln!(f, "seed = {}", self.seed)?;
        writeln!(f, "out = {}", self.out.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_serialize_round_trip() {
        let text = "# run\nscenario = stoneley\norder = 6\nn = 61, 121\nT = 6.5\nmu = r3\nseed = 7\nout = res\n";
        let c = ScenarioConfig::parse(text).unwrap();
        assert_eq!(c.order, Order::Six);
        assert_eq!(c.n, vec![61, 121]);
        assert_eq!(c.mu, MuSpec::Row(3));
        assert_eq!(ScenarioConfig::parse(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn bad_values_are_config_errors() {
        let mut c = ScenarioConfig::new(Scenario::Energy);
        assert_eq!(c.set("order", "5").unwrap_err().exit_code(), 2);
        assert!(c.set("bogus", "1").is_err());
        c.n = vec![10];
        assert!(c.validate().is_err());
    }
}
