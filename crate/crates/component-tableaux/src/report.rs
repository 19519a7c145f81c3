//! Run configuration, per-composition verification and conformance reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{self, CoveringReport, DimensionReport, LabelPartition, OrbitalReport, OrbitalStatus, TableauFacts};
use crate::builder::{component_tableaux, ChoiceJson, ComponentTableau, LineJson};
use crate::diagram::{Composition, Diagram, Pos};
use crate::invariants::{self, Engine, Generators, InvariantJson, InvariantRecord};
use crate::poly::SparsePolynomial;
use crate::roots::{self, ExcludedJson, ExcludedRootSet, PenetrationRecord};
use crate::Error;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_HARD_CAP: usize = 12;
pub const DEFAULT_SYMBOLIC_MAX_N: usize = 10;
pub const DEFAULT_TRIALS: usize = 8;
pub const CACHE_ENV: &str = "COMPONENT_TABLEAUX_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Global and specific vanishing, with the degree ledger of the hatted tableaux.
    Vanishing,
    Weierstrass,
    /// Covering of `Z`, with Star ⊆ X and One ∩ X = ∅.
    Covering,
    Dimension,
    Injectivity,
    Orbital,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Vanishing, Check::Weierstrass, Check::Covering, Check::Dimension, Check::Injectivity, Check::Orbital];
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "vanishing" => Check::Vanishing,
            "weierstrass" => Check::Weierstrass,
            "covering" => Check::Covering,
            "dimension" => Check::Dimension,
            "injectivity" => Check::Injectivity,
            "orbital" => Check::Orbital,
            other => return Err(Error::InvalidInput(format!("unknown check {other:?}"))),
        })
    }
}

/// Parses `all`, `none` or a comma-separated list of checks.
pub fn parse_checks(s: &str) -> Result<BTreeSet<Check>, Error> {
    match s.trim() {
        "all" => Ok(Check::ALL.into_iter().collect()),
        "none" | "" => Ok(BTreeSet::new()),
        list => list.split(',').map(Check::from_str).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub composition: Option<Composition>,
    pub n: Option<usize>,
    pub checks: BTreeSet<Check>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub threads: usize,
    pub symbolic_max_n: usize,
    pub hard_cap: usize,
    /// Random evaluations per identity test for the numeric engine.
    pub trials: usize,
    /// Injectivity is skipped above this `n` in sweeps.
    pub injectivity_max_n: usize,
    pub cache: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            composition: None,
            n: None,
            checks: Check::ALL.into_iter().collect(),
            format: Format::Text,
            out: None,
            seed: 0,
            threads: 0,
            symbolic_max_n: DEFAULT_SYMBOLIC_MAX_N,
            hard_cap: DEFAULT_HARD_CAP,
            trials: DEFAULT_TRIALS,
            injectivity_max_n: usize::MAX,
            cache: std::env::var_os(CACHE_ENV).map(PathBuf::from),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if let Some(n) = self.n {
            if n > self.hard_cap {
                return Err(Error::InvalidInput(format!("n = {n} exceeds the cap {}", self.hard_cap)));
            }
        }
        if let Some(c) = &self.composition {
            if c.n() > self.hard_cap {
                return Err(Error::InvalidInput(format!("n = {} exceeds the cap {}", c.n(), self.hard_cap)));
            }
        }
        Ok(())
    }

    pub fn engine_for(&self, n: usize) -> Engine {
        if n <= self.symbolic_max_n {
            Engine::Symbolic
        } else {
            Engine::Numeric
        }
    }
}

/// Overall status, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 2,
            Status::Inconclusive => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        })
    }
}

/// FNV-1a over the parts, for reproducible per-task random streams.
pub fn stream_seed(seed: u64, parts: &[usize], tag: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(seed);
    for &p in parts {
        eat(p as u64);
    }
    eat(tag);
    h
}

fn rng_for(seed: u64, d: &Diagram, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_seed(seed, d.composition().parts(), tag))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PairFailure {
    pub pair: [usize; 3],
    pub mode: String,
    /// A surviving monomial, when the engine can name one.
    pub witness: Option<Vec<Pos>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeLedger {
    pub pair: [usize; 3],
    pub entry: usize,
    pub s_prime: usize,
    pub true_degree: usize,
    pub virtual_degree: i64,
    pub window_degree: i64,
    pub unrestricted_delta: i64,
    pub heights_ok: bool,
    pub exclusions_match: bool,
    pub exceptional_excluded: bool,
    /// Maximal-height pairs: the zero pattern alone forces vanishing.
    pub structural_shortcut: Option<bool>,
}

impl DegreeLedger {
    pub fn ok(&self) -> bool {
        self.heights_ok
            && self.virtual_degree == self.true_degree as i64 - 1
            && self.unrestricted_delta == -1
            && self.exclusions_match
            && self.exceptional_excluded
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VanishingReport {
    pub ok: bool,
    pub global: bool,
    pub specific: bool,
    pub failures: Vec<PairFailure>,
    pub degrees: Vec<DegreeLedger>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Restriction {
    pub pair: [usize; 3],
    pub sign: Option<i8>,
    pub variable: Option<Pos>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WeierstrassReport {
    pub ok: bool,
    pub restrictions: Vec<Restriction>,
    pub distinct: bool,
    /// `|V| = g`.
    pub star_count_ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CoveringSection {
    pub ok: bool,
    pub labels_sane: bool,
    #[serde(flatten)]
    pub covering: CoveringReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableauReport {
    pub index: usize,
    pub choice_sequence: Vec<ChoiceJson>,
    pub lines: Vec<LineJson>,
    pub excluded: Vec<ExcludedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<VanishingReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weierstrass: Option<WeierstrassReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covering: Option<CoveringSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<DimensionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbital: Option<OrbitalReport>,
    pub jordan_type: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InjectivityPair {
    pub i: usize,
    pub j: usize,
    pub witness: Option<analysis::InjectivityWitness>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CompositionReport {
    pub composition: Vec<usize>,
    pub n: usize,
    pub engine: Engine,
    pub tableau_count: usize,
    pub invariant_count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub invariants: Vec<InvariantJson>,
    pub tableaux: Vec<TableauReport>,
    pub injectivity_pairs: Vec<InjectivityPair>,
    pub status: Status,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConformanceReport {
    pub schema_version: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub symbolic_max_n: usize,
    pub engines: Vec<Engine>,
    pub compositions: Vec<CompositionReport>,
    pub status: Status,
    pub pass: bool,
}

impl ConformanceReport {
    pub fn new(cfg: &RunConfig, compositions: Vec<CompositionReport>) -> Self {
        let status = compositions.iter().map(|c| c.status).max().unwrap_or(Status::Pass);
        let engines: BTreeSet<Engine> = compositions.iter().map(|c| c.engine).collect();
        ConformanceReport {
            schema_version: SCHEMA_VERSION,
            seed: cfg.seed,
            checks: cfg.checks.iter().copied().collect(),
            symbolic_max_n: cfg.symbolic_max_n,
            engines: engines.into_iter().collect(),
            compositions,
            status,
            pass: status == Status::Pass,
        }
    }
}

/// Everything derived from one component tableau.
#[derive(Clone, Debug)]
pub struct TableauData {
    pub ct: ComponentTableau,
    pub roots: ExcludedRootSet,
    pub records: Vec<PenetrationRecord>,
    pub labels: LabelPartition,
}

impl TableauData {
    pub fn new(ct: ComponentTableau) -> Result<Self, Error> {
        let roots = roots::excluded_roots(&ct)?;
        let records =
            (0..ct.diagram.pairs().len()).map(|p| roots::penetrating_string(&ct, p)).collect::<Result<Vec<_>, _>>()?;
        let labels = LabelPartition::new(&ct, &roots);
        Ok(TableauData { ct, roots, records, labels })
    }
}

/// All tableaux of a diagram with their derived data.
pub fn tableau_data(d: &Diagram) -> Result<Vec<TableauData>, Error> {
    component_tableaux(d).into_iter().map(TableauData::new).collect()
}

fn cache_file(dir: &std::path::Path, d: &Diagram, pair: usize) -> PathBuf {
    let key: Vec<String> = d.composition().parts().iter().map(|c| c.to_string()).collect();
    dir.join(format!("{}_{pair}.json", key.join("-")))
}

/// Symbolic generators, read from and written to the cache directory if set.
pub fn symbolic_generators(d: &Diagram, cache: Option<&std::path::Path>) -> Result<Vec<InvariantRecord>, Error> {
    let mut out = Vec::with_capacity(d.pairs().len());
    for (k, pair) in d.pairs().iter().enumerate() {
        if let Some(dir) = cache {
            let f = cache_file(dir, d, k);
            if let Ok(text) = std::fs::read_to_string(&f) {
                if let Ok(j) = serde_json::from_str::<InvariantJson>(&text) {
                    if j.pair == [pair.left + 1, pair.right + 1, pair.height] {
                        out.push(InvariantRecord {
                            pair: *pair,
                            d_d: j.d_d,
                            true_degree: j.degree,
                            poly: SparsePolynomial::from_json(&j.polynomial)?,
                        });
                        continue;
                    }
                }
            }
        }
        let rec = invariants::invariant(d, pair)?;
        if let Some(dir) = cache {
            std::fs::create_dir_all(dir)?;
            let text = serde_json::to_string(&rec.to_json()).map_err(|e| Error::Io(e.into()))?;
            std::fs::write(cache_file(dir, d, k), text)?;
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn generators_for(d: &Diagram, cfg: &RunConfig) -> Result<Generators, Error> {
    Ok(match cfg.engine_for(d.n()) {
        Engine::Symbolic => Generators::from_records(symbolic_generators(d, cfg.cache.as_deref())?),
        Engine::Numeric => Generators::numeric(cfg.trials),
    })
}

fn pair_key(d: &Diagram, k: usize) -> [usize; 3] {
    let p = d.pairs()[k];
    [p.left + 1, p.right + 1, p.height]
}

fn vanishing_report(
    d: &Diagram,
    t: &TableauData,
    gens: &Generators,
    rng: &mut ChaCha8Rng,
) -> Result<VanishingReport, Error> {
    let mut failures = Vec::new();
    let mut degrees = Vec::new();
    let (mut global, mut specific) = (true, true);
    for (k, rec) in t.records.iter().enumerate() {
        if let Some(w) = gens.vanishing_witness(d, k, &t.roots.union, rng)? {
            global = false;
            failures.push(PairFailure { pair: pair_key(d, k), mode: "global".into(), witness: Some(w) });
        }
        if let Some(w) = gens.vanishing_witness(d, k, &rec.excluded, rng)? {
            specific = false;
            failures.push(PairFailure { pair: pair_key(d, k), mode: "specific".into(), witness: Some(w) });
        }
        let (hat, heights_ok) = match roots::hatted_tableau(&t.ct, rec) {
            Ok(h) => (Some(h), true),
            Err(Error::Consistency(_)) => (None, false),
            Err(e) => return Err(e),
        };
        let pair = d.pairs()[k];
        let ledger = match hat {
            Some(h) => DegreeLedger {
                pair: pair_key(d, k),
                entry: rec.entry,
                s_prime: rec.s_prime,
                true_degree: d.true_degree(&pair),
                virtual_degree: h.virtual_degree,
                window_degree: h.window_degree,
                unrestricted_delta: h.unrestricted_delta,
                heights_ok,
                exclusions_match: roots::hat_exclusions_match(d, rec, &h)?,
                exceptional_excluded: roots::exceptional_witness(d, &pair, &h, &rec.excluded).is_none(),
                structural_shortcut: if pair.height == d.max_height() {
                    invariants::structurally_singular(d, &pair, &rec.primary)
                } else {
                    None
                },
            },
            None => DegreeLedger {
                pair: pair_key(d, k),
                entry: rec.entry,
                s_prime: rec.s_prime,
                true_degree: d.true_degree(&pair),
                virtual_degree: i64::MIN,
                window_degree: i64::MIN,
                unrestricted_delta: i64::MIN,
                heights_ok,
                exclusions_match: false,
                exceptional_excluded: false,
                structural_shortcut: None,
            },
        };
        if !ledger.ok() {
            failures.push(PairFailure { pair: pair_key(d, k), mode: "degree".into(), witness: None });
        }
        // The shortcut is advisory, but it must never claim vanishing wrongly.
        if ledger.structural_shortcut == Some(true) && !gens.vanishes(d, k, &rec.primary, rng)? {
            failures.push(PairFailure { pair: pair_key(d, k), mode: "shortcut".into(), witness: None });
        }
        degrees.push(ledger);
    }
    Ok(VanishingReport { ok: failures.is_empty(), global, specific, failures, degrees })
}

fn weierstrass_report(
    d: &Diagram,
    t: &TableauData,
    gens: &Generators,
    rng: &mut ChaCha8Rng,
) -> Result<(WeierstrassReport, Vec<Option<(i8, Pos)>>), Error> {
    let vars: Vec<Option<(i8, Pos)>> =
        (0..d.pairs().len()).map(|k| gens.restrict(d, k, &t.ct, rng)).collect::<Result<_, _>>()?;
    let restrictions: Vec<Restriction> = vars
        .iter()
        .enumerate()
        .map(|(k, v)| Restriction { pair: pair_key(d, k), sign: v.map(|x| x.0), variable: v.map(|x| x.1) })
        .collect();
    let found: BTreeSet<Pos> = vars.iter().flatten().map(|v| v.1).collect();
    let all = vars.iter().all(|v| v.is_some());
    let distinct = found.len() == vars.iter().flatten().count();
    let star_count_ok = t.ct.stars.len() == d.pairs().len();
    Ok((WeierstrassReport { ok: all && distinct && star_count_ok, restrictions, distinct, star_count_ok }, vars))
}

/// Runs the selected checks on one composition.
pub fn verify_composition(comp: &Composition, cfg: &RunConfig) -> Result<CompositionReport, Error> {
    let d = Diagram::new(comp);
    let data = tableau_data(&d)?;
    let gens = generators_for(&d, cfg)?;
    let checks = &cfg.checks;
    let needs_restriction = checks.contains(&Check::Weierstrass) || checks.contains(&Check::Injectivity);
    let mut failures = Vec::new();
    let mut inconclusive = false;
    let mut tableaux = Vec::with_capacity(data.len());
    let mut restrictions = Vec::with_capacity(data.len());

    for (idx, t) in data.iter().enumerate() {
        let mut rng = rng_for(cfg.seed, &d, idx as u64);
        let vanishing =
            if checks.contains(&Check::Vanishing) { Some(vanishing_report(&d, t, &gens, &mut rng)?) } else { None };
        let (weierstrass, vars) = if needs_restriction {
            let (w, v) = weierstrass_report(&d, t, &gens, &mut rng)?;
            (checks.contains(&Check::Weierstrass).then_some(w), v)
        } else {
            (None, Vec::new())
        };
        restrictions.push(vars);
        let covering = checks.contains(&Check::Covering).then(|| {
            let covering = analysis::covering_check(&t.labels);
            let labels_sane = t.labels.labels_sane();
            CoveringSection { ok: covering.ok && labels_sane, labels_sane, covering }
        });
        let dim = analysis::tangent_dimension(&d, &t.labels)?;
        let orbital = if checks.contains(&Check::Orbital) {
            let mut orng = rng_for(cfg.seed, &d, 1_000_000 + idx as u64);
            Some(analysis::orbital_variety_test(&d, &t.labels, &mut orng)?)
        } else {
            None
        };
        let tag = format!("{} tableau {idx}", d.composition());
        if vanishing.as_ref().is_some_and(|v| !v.ok) {
            failures.push(format!("{tag}: vanishing"));
        }
        if weierstrass.as_ref().is_some_and(|w| !w.ok) {
            failures.push(format!("{tag}: weierstrass"));
        }
        if covering.as_ref().is_some_and(|c| !c.ok) {
            failures.push(format!("{tag}: covering"));
        }
        if checks.contains(&Check::Dimension) && !dim.ok() {
            failures.push(format!("{tag}: dimension"));
        }
        if orbital.as_ref().is_some_and(|o| o.status == OrbitalStatus::Inconclusive) {
            inconclusive = true;
        }
        tableaux.push(TableauReport {
            index: idx,
            choice_sequence: t.ct.choice_sequence(),
            lines: t.ct.to_json().lines,
            excluded: t.roots.to_json(),
            vanishing,
            weierstrass,
            covering,
            jordan_type: dim.jordan_type_of_e.clone(),
            dimension: checks.contains(&Check::Dimension).then_some(dim),
            orbital,
        });
    }

    let mut injectivity_pairs = Vec::new();
    if checks.contains(&Check::Injectivity) && d.n() <= cfg.injectivity_max_n {
        for a in 0..data.len() {
            for b in a + 1..data.len() {
                let fa = TableauFacts { ct: &data[a].ct, records: &data[a].records, restriction: &restrictions[a] };
                let fb = TableauFacts { ct: &data[b].ct, records: &data[b].records, restriction: &restrictions[b] };
                let mut rng = rng_for(cfg.seed, &d, 2_000_000 + (a * data.len() + b) as u64);
                let w = analysis::injectivity_witness(&d, &fa, &fb, &gens, &mut rng)?;
                let ok = w.ok();
                if !ok {
                    failures.push(format!("{} tableaux {a},{b}: injectivity", d.composition()));
                }
                injectivity_pairs.push(InjectivityPair { i: a, j: b, witness: Some(w), ok });
            }
        }
    }

    let status = if !failures.is_empty() {
        Status::Fail
    } else if inconclusive {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(CompositionReport {
        composition: comp.parts().to_vec(),
        n: d.n(),
        engine: gens.engine,
        tableau_count: data.len(),
        invariant_count: d.pairs().len(),
        invariants: gens.records.iter().map(|r| r.to_json()).collect(),
        tableaux,
        injectivity_pairs,
        status,
        failures,
    })
}

/// Summary row of a sweep.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub composition: Vec<usize>,
    pub tableaux: usize,
    pub invariants: usize,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub schema_version: u32,
    pub seed: u64,
    pub n: usize,
    pub checks: Vec<Check>,
    pub rows: Vec<SweepRow>,
    pub failures: Vec<String>,
    pub status: Status,
}

/// Every composition of `n`, verified in parallel, in canonical order.
pub fn sweep_n(n: usize, cfg: &RunConfig) -> Result<SweepReport, Error> {
    let comps = Composition::all_of(n);
    let results: Vec<Result<CompositionReport, Error>> =
        comps.par_iter().map(|c| verify_composition(c, cfg)).collect();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut status = Status::Pass;
    for (c, r) in comps.iter().zip(results) {
        match r {
            Ok(rep) => {
                failures.extend(rep.failures.iter().cloned());
                status = status.max(rep.status);
                rows.push(SweepRow {
                    composition: rep.composition,
                    tableaux: rep.tableau_count,
                    invariants: rep.invariant_count,
                    status: rep.status,
                });
            }
            Err(e) => {
                failures.push(format!("{c}: {e}"));
                status = Status::Fail;
                rows.push(SweepRow {
                    composition: c.parts().to_vec(),
                    tableaux: 0,
                    invariants: 0,
                    status: Status::Fail,
                });
            }
        }
    }
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        seed: cfg.seed,
        n,
        checks: cfg.checks.iter().copied().collect(),
        rows,
        failures,
        status,
    })
}

/// Tableau counts keyed by composition, as a convenience for callers.
pub fn tableau_counts(report: &SweepReport) -> BTreeMap<Vec<usize>, usize> {
    report.rows.iter().map(|r| (r.composition.clone(), r.tableaux)).collect()
}

/// Runs `f` on a pool with `threads` workers (0 = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_parsing() {
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        assert_eq!(parse_checks("vanishing,orbital").unwrap().len(), 2);
        assert!(parse_checks("bogus").is_err());
    }

    #[test]
    fn trivial_composition_passes() {
        let r = verify_composition(&"1".parse().unwrap(), &RunConfig::default()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tableau_count, 1);
    }
}
