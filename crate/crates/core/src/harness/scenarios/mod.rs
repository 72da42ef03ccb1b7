//! The scenario catalog: each scenario recomputes a family of statements
//! about Kronecker modules and records them as checks.
//!
//! Randomness is drawn from `ChaCha8Rng::seed_from_u64(seed)`, with one
//! stream per purpose (see [`Stream`]), so changing how one part of a
//! scenario samples never shifts another.

mod covers;
mod generation;
mod random;
mod two_arrows;

use std::collections::BTreeSet;
use std::fmt::{self, Display};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::harness::format::{parse_module_file, AnyModule};
use crate::harness::report::{Checks, ConfigEcho, Report};
use crate::kron::{IsoSearch, KroneckerModule};
use crate::{Error, Result};

/// Subset searches larger than this are refused rather than sampled.
pub const DEFAULT_SUBSET_LIMIT: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0x6b72_6f6e;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scenario {
    MainTheoremA,
    BristleOrbits,
    OptimalityI3,
    OptTauB1,
    N2Generation,
    N2Classification,
    CoverEqualities,
    TauB1Cover,
    MuExt,
    SaturatedFaithful,
    AnnihilatedLemma,
    CoverNotBristled,
    BristledLayers,
    IndecomposableGenerator,
}

/// Per-scenario defaults.
struct Defaults {
    n: usize,
    field: FieldSpec,
    t_max: usize,
    samples: usize,
}

impl Scenario {
    pub const ALL: [Scenario; 14] = [
        Scenario::MainTheoremA,
        Scenario::BristleOrbits,
        Scenario::OptimalityI3,
        Scenario::OptTauB1,
        Scenario::N2Generation,
        Scenario::N2Classification,
        Scenario::CoverEqualities,
        Scenario::TauB1Cover,
        Scenario::MuExt,
        Scenario::SaturatedFaithful,
        Scenario::AnnihilatedLemma,
        Scenario::CoverNotBristled,
        Scenario::BristledLayers,
        Scenario::IndecomposableGenerator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::MainTheoremA => "main-theorem-a",
            Scenario::BristleOrbits => "main-theorem-b-bristle-orbits",
            Scenario::OptimalityI3 => "optimality-I3",
            Scenario::OptTauB1 => "opt-taub1",
            Scenario::N2Generation => "n2-generation",
            Scenario::N2Classification => "n2-classification",
            Scenario::CoverEqualities => "cover-equalities",
            Scenario::TauB1Cover => "tau-b1-cover",
            Scenario::MuExt => "mu-ext",
            Scenario::SaturatedFaithful => "saturated-faithful",
            Scenario::AnnihilatedLemma => "annihilated-lemma",
            Scenario::CoverNotBristled => "cover-not-bristled",
            Scenario::BristledLayers => "bristled-layers",
            Scenario::IndecomposableGenerator => "indecomposable-generator",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Scenario::MainTheoremA => "preinjectives I_t are generated by B0 and saturated",
            Scenario::BristleOrbits => "tau-orbits of bristles; minimal t for a module given with --module",
            Scenario::OptimalityI3 => "no n+1 bristles generate I_3",
            Scenario::OptTauB1 => "tau B(1) needs B(1) among n+1 generating bristles",
            Scenario::N2Generation => "two arrows: J generates I_t iff |J| >= t+1",
            Scenario::N2Classification => "two arrows: bristled indecomposables and saturation",
            Scenario::CoverEqualities => "I_2 generated by located bristles in the universal cover",
            Scenario::TauB1Cover => "tau B(1) generated by located bristles in the universal cover",
            Scenario::MuExt => "middle term of the almost split sequence ending in B(1)",
            Scenario::SaturatedFaithful => "random saturated non-simple bricks are faithful",
            Scenario::AnnihilatedLemma => "Ext(B(1), M) >= dim M_2 when the last arrow acts by zero",
            Scenario::CoverNotBristled => "cover representations of preinjectives are not bristled",
            Scenario::BristledLayers => "top and socle of indecomposable bristled modules",
            Scenario::IndecomposableGenerator => "an indecomposable regular module generating preinjectives",
        }
    }

    fn defaults(self) -> Defaults {
        let gf = |p| FieldSpec::Prime(p);
        let d = |n, field, t_max, samples| Defaults { n, field, t_max, samples };
        match self {
            Scenario::MainTheoremA => d(3, gf(5), 4, 0),
            Scenario::BristleOrbits => d(3, gf(5), 3, 0),
            Scenario::OptimalityI3 | Scenario::OptTauB1 => d(3, gf(2), 3, 0),
            // For n2-classification the default t_max is q + 2, filled in at resolution.
            Scenario::N2Generation | Scenario::N2Classification => d(2, gf(2), 3, 0),
            Scenario::SaturatedFaithful => d(3, gf(5), 0, 200),
            Scenario::AnnihilatedLemma => d(3, gf(5), 0, 100),
            Scenario::IndecomposableGenerator => d(3, gf(5), 3, 0),
            Scenario::CoverEqualities
            | Scenario::TauB1Cover
            | Scenario::MuExt
            | Scenario::CoverNotBristled
            | Scenario::BristledLayers => d(3, gf(5), 0, 0),
        }
    }

    /// Scenarios that enumerate bristles or test saturation.
    pub fn needs_finite_field(self) -> bool {
        !matches!(
            self,
            Scenario::CoverEqualities
                | Scenario::TauB1Cover
                | Scenario::AnnihilatedLemma
                | Scenario::IndecomposableGenerator
        )
    }

    fn fixed_n(self) -> Option<usize> {
        matches!(self, Scenario::N2Generation | Scenario::N2Classification).then_some(2)
    }

    fn min_n(self) -> usize {
        match self {
            // For one arrow B(1) is projective.
            Scenario::N2Generation | Scenario::N2Classification | Scenario::AnnihilatedLemma => 2,
            _ => 3,
        }
    }
}

impl Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scenario `{s}`")))
    }
}

/// What to run. Unset fields take the scenario's defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub n: Option<usize>,
    pub field: Option<FieldSpec>,
    pub t_max: Option<usize>,
    pub subset_limit: u64,
    pub samples: Option<usize>,
    pub seed: u64,
    pub attempts: usize,
    pub module: Option<PathBuf>,
    /// Record wall-clock time in the report.
    pub timing: bool,
}

impl ScenarioConfig {
    pub fn new(scenario: Scenario) -> Self {
        ScenarioConfig {
            scenario,
            n: None,
            field: None,
            t_max: None,
            subset_limit: DEFAULT_SUBSET_LIMIT,
            samples: None,
            seed: DEFAULT_SEED,
            attempts: IsoSearch::default().attempts,
            module: None,
            timing: false,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = Some(field);
        self
    }

    pub fn with_t_max(mut self, t_max: usize) -> Self {
        self.t_max = Some(t_max);
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = Some(samples);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Independent random streams.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Stream {
    Modules = 1,
    Cocycles = 2,
}

/// Resolved configuration, specialised to a field.
pub(crate) struct Ctx<F: Field> {
    pub field: F,
    pub n: usize,
    pub t_max: usize,
    pub subset_limit: u64,
    pub samples: usize,
    pub seed: u64,
    pub iso: IsoSearch,
    pub module: Option<KroneckerModule<F>>,
}

impl<F: Field> Ctx<F> {
    pub fn rng(&self, stream: Stream) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream as u64);
        rng
    }

    pub fn q(&self) -> Result<u64> {
        self.field.cardinality().ok_or(Error::RequiresFiniteField("this scenario"))
    }

    pub fn refuse_above_limit(&self, what: &str, count: u64) -> Result<()> {
        if count > self.subset_limit {
            return Err(Error::TooLarge(format!(
                "{what}: {count} subsets exceed the exhaustive limit {}; refusing to sample",
                self.subset_limit
            )));
        }
        Ok(())
    }
}

fn resolve(cfg: &ScenarioConfig) -> Result<(ConfigEcho, Option<AnyModule>)> {
    let sc = cfg.scenario;
    let defaults = sc.defaults();
    let module = match &cfg.module {
        None => None,
        Some(path) => {
            if sc != Scenario::BristleOrbits {
                return Err(Error::InvalidArgument(format!("{sc} does not take a module file")));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
            Some(parse_module_file(&text)?)
        }
    };
    let n = match (&module, cfg.n) {
        (Some(m), Some(n)) if m.n() != n => {
            return Err(Error::InvalidArgument(format!("--n {n} conflicts with the module file (n = {})", m.n())))
        }
        (Some(m), _) => m.n(),
        (None, Some(n)) => n,
        (None, None) => defaults.n,
    };
    if let Some(fixed) = sc.fixed_n() {
        if n != fixed {
            return Err(Error::InvalidArgument(format!("{sc} is defined for n = {fixed} only")));
        }
    }
    if n < sc.min_n() {
        return Err(Error::InvalidArgument(format!("{sc} needs n ≥ {}, got {n}", sc.min_n())));
    }
    let field = match (&module, cfg.field) {
        (Some(m), Some(f)) if m.field_spec() != f => {
            return Err(Error::InvalidArgument(format!(
                "field {f} conflicts with the module file ({})",
                m.field_spec()
            )))
        }
        (Some(m), _) => m.field_spec(),
        (None, Some(f)) => f,
        (None, None) => defaults.field,
    };
    if sc.needs_finite_field() && !field.is_finite() {
        return Err(Error::RequiresFiniteField(sc.name()));
    }
    let t_max = match (cfg.t_max, sc, field) {
        (Some(t), _, _) => t,
        (None, Scenario::N2Classification, FieldSpec::Prime(p)) => p as usize + 2,
        (None, _, _) => defaults.t_max,
    };
    let echo = ConfigEcho {
        n,
        field: field.to_string(),
        t_max,
        subset_limit: cfg.subset_limit,
        samples: cfg.samples.unwrap_or(defaults.samples),
        seed: cfg.seed,
        attempts: cfg.attempts,
        module: cfg.module.as_ref().map(|p| p.display().to_string()),
    };
    Ok((echo, module))
}

fn ctx<F: Field>(field: F, echo: &ConfigEcho, module: Option<KroneckerModule<F>>) -> Ctx<F> {
    Ctx {
        field,
        n: echo.n,
        t_max: echo.t_max,
        subset_limit: echo.subset_limit,
        samples: echo.samples,
        seed: echo.seed,
        iso: IsoSearch { attempts: echo.attempts, seed: echo.seed },
        module,
    }
}

fn dispatch<F: Field>(sc: Scenario, c: &Ctx<F>) -> Result<Checks> {
    let mut checks = Checks::new();
    match sc {
        Scenario::MainTheoremA => generation::preinjectives(c, &mut checks)?,
        Scenario::BristleOrbits => generation::bristle_orbits(c, &mut checks)?,
        Scenario::OptimalityI3 => generation::optimality_i3(c, &mut checks)?,
        Scenario::OptTauB1 => generation::optimality_tau_b1(c, &mut checks)?,
        Scenario::IndecomposableGenerator => generation::indecomposable_generator(c, &mut checks)?,
        Scenario::BristledLayers => generation::bristled_layers(c, &mut checks)?,
        Scenario::N2Generation => two_arrows::generation(c, &mut checks)?,
        Scenario::N2Classification => two_arrows::classification(c, &mut checks)?,
        Scenario::CoverEqualities => covers::ball_equalities(c, &mut checks)?,
        Scenario::TauB1Cover => covers::tau_bristle_cover(c, &mut checks)?,
        Scenario::MuExt => covers::mu_extension(c, &mut checks)?,
        Scenario::CoverNotBristled => covers::not_bristled(c, &mut checks)?,
        Scenario::SaturatedFaithful => random::saturated_faithful(c, &mut checks)?,
        Scenario::AnnihilatedLemma => random::annihilated(c, &mut checks)?,
    }
    Ok(checks)
}

/// Runs a scenario. The report is a pure function of the configuration
/// unless `timing` is set.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report> {
    let start = Instant::now();
    let (echo, module) = resolve(cfg)?;
    let checks = match (echo.field.parse::<FieldSpec>()?, module) {
        (FieldSpec::Prime(p), module) => {
            let module = match module {
                Some(AnyModule::Prime(m)) => Some(m),
                _ => None,
            };
            dispatch(cfg.scenario, &ctx(PrimeField::new(p)?, &echo, module))?
        }
        (FieldSpec::Rationals, module) => {
            let module = match module {
                Some(AnyModule::Rational(m)) => Some(m),
                _ => None,
            };
            dispatch(cfg.scenario, &ctx(Rationals, &echo, module))?
        }
    };
    let mut report = Report::new(cfg.scenario.name(), echo, checks.into_vec());
    if cfg.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// `{a, b, …}` of the distinct values, for "the same value for every X" checks.
pub(crate) fn value_set<T: Ord + Display>(values: impl IntoIterator<Item = T>) -> String {
    let set: BTreeSet<T> = values.into_iter().collect();
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub(crate) fn single<T: Display>(v: T) -> String {
    format!("{{{v}}}")
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn dims_str((a, b): (i64, i64)) -> String {
    format!("({a},{b})")
}
