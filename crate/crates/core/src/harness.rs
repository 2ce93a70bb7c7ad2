//! Subcommand dispatch, report documents and the golden-file corpus.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Map, Value};

use crate::error::{invalid, Result, SerpError};
use crate::fusion::{graded_multiplicities_with, verify_kedem_with, EvalModule, Strategy, ZChoice, MAX_FUSION_N};
use crate::qpoly::{partition_generating_function, QPoly};
use crate::report::{Check, CheckSet, ToReport};
use crate::serpentine::{enumerate_serpentine, serpentine_level_set, SerpentineTableau};
use crate::symfun::{kostka_foulkes_standard, maj_qcharacter, Workspace};
use crate::table::verify_table;
use crate::tableau::{ballot_number, enumerate_two_row_tableaux, two_row_shapes, MAX_CELLS};
use crate::vertex::{
    calibrate, compare_with_oracle, expected_sign, verify_ebasis, verify_gamma_commutation,
    verify_schur_constant_terms, CalibrationReading,
};
use crate::virasoro::{
    l0_on_serpentine, verify_d_operator, verify_heisenberg, verify_l0_degree, verify_singular_vector,
    verify_virasoro_algebra,
};

pub const SUBCOMMANDS: [&str; 12] = [
    "tableaux",
    "stats",
    "serpentine",
    "kostka-foulkes",
    "fusion-check",
    "virasoro-check",
    "singular-check",
    "theorem3-check",
    "ebasis-check",
    "gamma-check",
    "table-check",
    "all",
];

/// Largest Virasoro mode in the bracket sweep.
const VIRASORO_MAX_MODE: i64 = 4;
const VIRASORO_MAX_DEGREE: u32 = 8;
/// Highest positive mode applied to the square Schur functions.
const SINGULAR_MAX_MODE: i64 = 6;
const GAMMA_ORDER: u32 = 6;
/// Fusion characters are also computed at the shifted points up to this `N`.
const Z_INDEPENDENCE_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Tsv,
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = SerpError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "tsv" => Ok(OutputFormat::Tsv),
            "pretty" => Ok(OutputFormat::Pretty),
            _ => invalid(format!("unknown format {s:?} (json, tsv, pretty)")),
        }
    }
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Tsv => "tsv",
            OutputFormat::Pretty => "pretty",
        }
    }
}

fn z_name(z: ZChoice) -> &'static str {
    match z {
        ZChoice::Consecutive => "consecutive",
        ZChoice::Shifted => "shifted",
    }
}

pub fn parse_z_choice(s: &str) -> Result<ZChoice> {
    match s {
        "consecutive" => Ok(ZChoice::Consecutive),
        "shifted" => Ok(ZChoice::Shifted),
        _ => invalid(format!("unknown z choice {s:?} (consecutive, shifted)")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub degree_bound: u32,
    /// Largest `N` for the fusion checks when `n` is not given.
    pub n_max: usize,
    pub k_max: usize,
    /// A single `N` (or `k`) instead of the default range.
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub z_choice: ZChoice,
    pub output_format: OutputFormat,
    pub corpus: Option<PathBuf>,
    /// Overwrite golden files instead of diffing against them.
    pub bless: bool,
    pub seed_level: Option<usize>,
    /// Record wall-clock time; off by default so reports are byte-stable.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            degree_bound: 12,
            n_max: 12,
            k_max: 3,
            n: None,
            k: None,
            z_choice: ZChoice::Consecutive,
            output_format: OutputFormat::Json,
            corpus: None,
            bless: false,
            seed_level: None,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.degree_bound == 0 {
            return invalid("degree bound must be at least 1");
        }
        if !self.n_max.is_multiple_of(2) {
            return invalid(format!("n_max = {} must be even", self.n_max));
        }
        if self.n_max > MAX_FUSION_N {
            return invalid(format!("n_max = {} exceeds {MAX_FUSION_N}", self.n_max));
        }
        if let Some(l) = self.seed_level {
            if l % 2 != 0 {
                return invalid(format!("seed level {l} must be even"));
            }
        }
        Ok(())
    }

    fn workspace(&self) -> Workspace {
        Workspace::strict(self.degree_bound)
    }

    /// Fields that affect the computed values; output routing is left out so
    /// the same run renders identically in every mode.
    pub fn to_json(&self) -> Value {
        json!({
            "degree_bound": self.degree_bound,
            "n_max": self.n_max,
            "k_max": self.k_max,
            "n": self.n,
            "k": self.k,
            "z_choice": z_name(self.z_choice),
            "seed_level": self.seed_level,
        })
    }
}

/// Result of one subcommand.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub subcommand: String,
    pub config: Value,
    pub checks: CheckSet,
    /// Computed listings for the subcommands that produce data.
    pub data: Option<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "subcommand": self.subcommand,
            "config": self.config,
            "checks": self.checks.to_json(),
            "elapsed_ms": self.elapsed_ms,
        });
        if let Some(d) = &self.data {
            v["data"] = d.clone();
        }
        v
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Tsv => {
                let mut s = String::from("name\tstatus\tlhs\trhs\twitness\n");
                for c in self.checks.checks() {
                    let w = c.witness.as_ref().map(Value::to_string).unwrap_or_default();
                    let _ = writeln!(s, "{}\t{}\t{}\t{}\t{w}", c.name, c.status.as_str(), c.lhs, c.rhs);
                }
                s
            }
            OutputFormat::Pretty => {
                let mut s = String::new();
                for c in self.checks.checks() {
                    let tag = if c.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{tag}  {}", c.name);
                    if !c.passed() {
                        let _ = writeln!(s, "      lhs: {}\n      rhs: {}", c.lhs, c.rhs);
                        if let Some(w) = &c.witness {
                            let _ = writeln!(s, "      witness: {w}");
                        }
                    }
                }
                let failed = self.checks.failures().count();
                let _ = writeln!(s, "{}: {} checks, {} failed", self.subcommand, self.checks.len(), failed);
                s
            }
        }
    }
}

/// Runs `name` under `config`. Argument errors come back as `Err`;
/// verification failures are failing checks in the report.
pub fn run_subcommand(name: &str, config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let (checks, data) = match name {
        "tableaux" => tableaux(config)?,
        "stats" => (stats(config)?, None),
        "serpentine" => serpentine(config)?,
        "kostka-foulkes" => kostka_foulkes(config)?,
        "fusion-check" => (fusion_check(config)?, None),
        "virasoro-check" => (virasoro_check(config)?, None),
        "singular-check" => (singular_check(config)?, None),
        "theorem3-check" => (constant_term_check(config)?, None),
        "ebasis-check" => (ebasis_check(config)?, None),
        "gamma-check" => (gamma_check(config)?, None),
        "table-check" => (verify_table(&config.workspace())?, None),
        "all" => (all(config)?, None),
        _ => return invalid(format!("unknown subcommand {name:?}; expected one of {}", SUBCOMMANDS.join(", "))),
    };
    let mut report = Report { subcommand: name.to_string(), config: config.to_json(), checks, data, elapsed_ms: 0 };
    if let Some(dir) = &config.corpus {
        let check = golden_check(&report, dir, config.bless)?;
        report.checks.push(check);
    }
    if config.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

fn tableaux(config: &RunConfig) -> Result<(CheckSet, Option<Value>)> {
    let n = config.n.unwrap_or(4);
    if n > MAX_CELLS {
        return invalid(format!("N = {n} exceeds {MAX_CELLS} cells"));
    }
    let half = (n * n.saturating_sub(1) / 2) as u64;
    let mut set = CheckSet::new();
    let mut listing = Vec::new();
    for shape in two_row_shapes(n) {
        let tabs = enumerate_two_row_tableaux(n, Some(&shape))?;
        let count = ballot_number(shape.part(0) as u64, shape.part(1) as u64);
        set.equal(format!("#SYT{shape} = ballot number"), &(tabs.len() as u64), &count);
        let bad: Vec<String> = tabs.iter().filter(|t| t.maj() + t.charge() != half).map(ToString::to_string).collect();
        set.equal(format!("maj + charge = {half} on shape {shape}"), &bad, &Vec::new());
        for t in tabs {
            listing.push(json!({
                "tableau": t.to_string(),
                "shape": shape.to_string(),
                "descents": t.descent_set().into_iter().collect::<Vec<_>>(),
                "maj": t.maj(),
                "charge": t.charge(),
            }));
        }
    }
    Ok((set, Some(Value::Array(listing))))
}

/// `maj + charge = N(N−1)/2`, `maj(ι t) = maj(t) + N + 1` and the tableau
/// counts for `N ≤ n`; `Σ (2k+1) #SYT = 2^N` for `N ≤ 16`.
fn stats(config: &RunConfig) -> Result<CheckSet> {
    let n_top = config.n.unwrap_or(config.n_max);
    if n_top > MAX_CELLS {
        return invalid(format!("N = {n_top} exceeds {MAX_CELLS} cells"));
    }
    let mut set = CheckSet::new();
    for n in 1..=n_top {
        let half = (n * n.saturating_sub(1) / 2) as u64;
        let all = enumerate_two_row_tableaux(n, None)?;
        let expected: u64 = two_row_shapes(n).iter().map(|s| ballot_number(s.part(0) as u64, s.part(1) as u64)).sum();
        set.equal(format!("N={n} number of two-row tableaux"), &(all.len() as u64), &expected);
        let bad_charge: Vec<String> =
            all.iter().filter(|t| t.maj() + t.charge() != half).map(ToString::to_string).collect();
        set.equal(format!("N={n} maj + charge = {half}"), &bad_charge, &Vec::new());
        let bad_embed: Vec<String> =
            all.iter().filter(|t| t.embed().maj() != t.maj() + n as u64 + 1).map(ToString::to_string).collect();
        set.equal(format!("N={n} maj(embed t) = maj(t) + {}", n + 1), &bad_embed, &Vec::new());
    }
    for n in 0..=MAX_FUSION_N as u32 {
        set.equal(format!("N={n} sum (2k+1) #SYT(n+k,n-k) = 2^N"), &crate::fusion::spin_dimension_sum(n), &(1u64 << n));
    }
    Ok(set)
}

fn serpentine(config: &RunConfig) -> Result<(CheckSet, Option<Value>)> {
    let r_max = config.n.map(|n| n as u32).unwrap_or(config.degree_bound);
    let all = enumerate_serpentine(r_max);
    let mut set = CheckSet::new();
    let series = QPoly::from_exponents(all.iter().map(SerpentineTableau::stable_major_index));
    set.equal(
        format!("sum over r(tau) <= {r_max} of q^r(tau) = prod (1-q^i)^-1 mod q^{}", r_max + 1),
        &series,
        &partition_generating_function(r_max),
    );
    if r_max >= 4 {
        let counts: Vec<i64> = (0..=4).map(|r| series.coeff(r)).collect();
        set.equal("tableaux with r = 0..4", &counts, &vec![1, 1, 2, 3, 5]);
    }
    let mut k = 0u32;
    while k * k <= r_max {
        let tau = SerpentineTableau::principal(k);
        set.equal(format!("r(tau_{k}) = {}", k * k), &tau.stable_major_index(), &((k * k) as i64));
        k += 1;
    }
    let bad_l0: Vec<String> =
        all.iter().filter(|t| l0_on_serpentine(t) != t.stable_major_index()).map(ToString::to_string).collect();
    set.equal("L_0 eigenvalue = r(tau)", &bad_l0, &Vec::new());

    let levels: Vec<usize> = match config.seed_level {
        Some(l) => vec![l],
        None => (0..=8).step_by(2).collect(),
    };
    for level in levels {
        let t = serpentine_level_set(level)?;
        set.equal(
            format!("|T^({level})| = C({level},{})", level / 2),
            &(t.len() as u64),
            &num_integer::binomial(level as u64, level as u64 / 2),
        );
    }
    let listing = all
        .iter()
        .map(|t| json!({"tableau": t.to_string(), "r": t.stable_major_index(), "sector": t.sector()}))
        .collect();
    Ok((set, Some(Value::Array(listing))))
}

fn kostka_foulkes(config: &RunConfig) -> Result<(CheckSet, Option<Value>)> {
    let n = config.n.unwrap_or(4);
    if n == 0 || n > MAX_CELLS {
        return invalid(format!("N = {n} must lie in 1..={MAX_CELLS}"));
    }
    let shift = (n * (n - 1) / 2) as i64;
    let mut set = CheckSet::new();
    let mut data = Map::new();
    for shape in two_row_shapes(n) {
        let k = kostka_foulkes_standard(&shape)?;
        let count = ballot_number(shape.part(0) as u64, shape.part(1) as u64) as i64;
        set.equal(format!("K_{shape}(1) = #SYT{shape}"), &k.eval_at_one(), &count);
        set.equal(
            format!("q^{shift} K_{shape}(1/q) = maj character"),
            &k.invert_variable().shift(shift),
            &maj_qcharacter(&shape)?,
        );
        data.insert(shape.to_string(), k.to_report());
    }
    Ok((set, Some(Value::Object(data))))
}

fn fusion_sizes(config: &RunConfig) -> Result<Vec<usize>> {
    match config.n {
        Some(n) if n < 2 || n % 2 != 0 || n > MAX_FUSION_N => {
            invalid(format!("N = {n} must be even and in 2..={MAX_FUSION_N}"))
        }
        Some(n) => Ok(vec![n]),
        None => Ok((2..=config.n_max).step_by(2).collect()),
    }
}

fn fusion_check(config: &RunConfig) -> Result<CheckSet> {
    let mut set = CheckSet::new();
    for n in fusion_sizes(config)? {
        let strategy = Strategy::auto(n);
        set.extend(verify_kedem_with(n, config.z_choice, strategy)?);
        if n <= Z_INDEPENDENCE_MAX_N {
            let a = graded_multiplicities_with(&EvalModule::with_choice(n, ZChoice::Consecutive)?, strategy);
            let b = graded_multiplicities_with(&EvalModule::with_choice(n, ZChoice::Shifted)?, strategy);
            let half = (n / 2) as u32;
            let chars = |m: &crate::fusion::GradedMultiplicities| (0..=half).map(|k| m.get(k)).collect::<Vec<_>>();
            set.equal(format!("N={n} characters at z = 1..N and z = N+1..2N agree"), &chars(&a), &chars(&b));
        }
    }
    Ok(set)
}

fn virasoro_check(config: &RunConfig) -> Result<CheckSet> {
    let deg = config.degree_bound.min(VIRASORO_MAX_DEGREE);
    let mut set = verify_virasoro_algebra(VIRASORO_MAX_MODE, deg)?;
    set.extend(verify_heisenberg(VIRASORO_MAX_MODE, deg)?);
    set.extend(verify_l0_degree(deg)?);
    set.extend(verify_d_operator(deg)?);
    Ok(set)
}

fn k_range(config: &RunConfig) -> Vec<usize> {
    match config.k {
        Some(k) => vec![k],
        None => (1..=config.k_max).collect(),
    }
}

fn singular_check(config: &RunConfig) -> Result<CheckSet> {
    let ws = config.workspace();
    let mut set = CheckSet::new();
    for k in k_range(config) {
        set.extend(verify_singular_vector(k as u32, SINGULAR_MAX_MODE, &ws)?);
    }
    Ok(set)
}

/// The constant-term identities, plus the composed modes against the
/// constant-term formula once the convention is calibrated.
fn constant_term_check(config: &RunConfig) -> Result<CheckSet> {
    let ws = config.workspace();
    let ks = k_range(config);
    let mut set = CheckSet::new();
    for &k in &ks {
        set.extend(verify_schur_constant_terms(k, &ws)?);
    }
    let printed = calibrate(CalibrationReading::AsPrinted, &ws);
    set.verdict(
        "vacuum identity e_-(N+1) Omega_-N = Omega_-(N+2) has no solving convention",
        printed.is_err(),
        printed.as_ref().map(|c| format!("{:?}", c.convention)).unwrap_or_else(|e| e.to_string()),
        "no convention",
    );
    match calibrate(CalibrationReading::Corrected, &ws) {
        Ok(cal) => {
            set.equal(
                "calibrated convention (step, sigma)",
                &vec![cal.convention.step, cal.convention.sigma],
                &vec![2, 1],
            );
            for &k in &ks {
                let (checks, ratio) = compare_with_oracle(k, cal.convention, &ws)?;
                set.extend(checks);
                set.equal(format!("k={k} composed / oracle = (-1)^(k(k-1)/2)"), &ratio, &Some(expected_sign(k)));
            }
        }
        Err(e) => set.push(Check::verdict("calibration", false, e.to_string(), "unique convention")),
    }
    Ok(set)
}

fn ebasis_check(config: &RunConfig) -> Result<CheckSet> {
    let ws = config.workspace();
    let ks = k_range(config);
    let mut set = CheckSet::new();
    for &n in &ks {
        set.extend(verify_ebasis(n, &ws)?);
    }
    let top = ks.iter().copied().max().unwrap_or(0);
    for k in 0..=2 * top {
        let t = serpentine_level_set(2 * k)?;
        set.equal(
            format!("|T^({})| = C({},{k})", 2 * k, 2 * k),
            &(t.len() as u64),
            &num_integer::binomial(2 * k as u64, k as u64),
        );
    }
    Ok(set)
}

fn gamma_check(config: &RunConfig) -> Result<CheckSet> {
    let ws = config.workspace();
    if config.degree_bound < GAMMA_ORDER {
        return invalid(format!("degree bound must be at least {GAMMA_ORDER}"));
    }
    let states = (config.degree_bound - GAMMA_ORDER).min(GAMMA_ORDER);
    verify_gamma_commutation(GAMMA_ORDER, states, &ws)
}

fn all(config: &RunConfig) -> Result<CheckSet> {
    let mut set = CheckSet::new();
    for name in SUBCOMMANDS.iter().filter(|&&s| s != "all") {
        let sub = run_subcommand(name, &RunConfig { corpus: None, ..config.clone() })?;
        for c in sub.checks.checks() {
            let mut c = c.clone();
            c.name = format!("{name}: {}", c.name);
            set.push(c);
        }
    }
    Ok(set)
}

/// File name of the golden report for `report`: the subcommand plus any
/// explicit `n`/`k`.
pub fn golden_name(report: &Report) -> String {
    let mut name = report.subcommand.clone();
    for key in ["n", "k"] {
        if let Some(v) = report.config.get(key).and_then(Value::as_u64) {
            let _ = write!(name, "-{key}{v}");
        }
    }
    name.push_str(".json");
    name
}

fn golden_check(report: &Report, dir: &Path, bless: bool) -> Result<Check> {
    let path = dir.join(golden_name(report));
    let rendered = report.render(OutputFormat::Json);
    let io = |e: std::io::Error| SerpError::InvalidArgument(format!("{}: {e}", path.display()));
    let name = format!("matches golden {}", path.display());
    if bless {
        fs::create_dir_all(dir).map_err(io)?;
        fs::write(&path, &rendered).map_err(io)?;
        return Ok(Check::verdict(name, true, "written", "written"));
    }
    let golden = match fs::read_to_string(&path) {
        Ok(s) => s,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Ok(Check::verdict(name, false, "missing", "present"));
        }
        Err(e) => return Err(io(e)),
    };
    if golden == rendered {
        return Ok(Check::verdict(name, true, "identical", "identical"));
    }
    let line = golden
        .lines()
        .zip(rendered.lines())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| golden.lines().count().min(rendered.lines().count()));
    Ok(Check::verdict(name, false, rendered.lines().nth(line).unwrap_or(""), golden.lines().nth(line).unwrap_or(""))
        .with_witness(json!({ "first_differing_line": line + 1 })))
}
