//! Command-line front end, JSON result documents and the on-disk
//! character-table cache.
//!
//! Every command prints one document `{command, version, request, result}` with
//! rationals rendered as exact `"p/q"` strings and keys in a fixed order, so
//! identical requests produce byte-identical output.
//!
//! # Cache
//!
//! Character tables are stored as `chartab-d{d}.json` in the directory named by
//! `HURWITZ_GW_CACHE_DIR`, defaulting to `$XDG_CACHE_HOME/hurwitz-gw` or
//! `$HOME/.cache/hurwitz-gw`. Files carry a format version and a SHA-256
//! checksum; anything that fails to validate is rebuilt and overwritten. The
//! cache never changes a result, only how fast it is obtained.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::characters::{self, CharacterTable};
use crate::error::{Error, Result};
use crate::gwh;
use crate::hurwitz::{self, BranchData};
use crate::partitions::{enumerate_partitions, parse_profiles, Partition};
use crate::qseries::rational_to_string;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "HURWITZ_GW_CACHE_DIR";
/// Bumped whenever the cache file layout changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;
/// Library version embedded in every output document.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug, Clone, Serialize)]
#[command(
    name = "hurwitz-gw",
    version,
    about = "Exact Hurwitz numbers, characters, completed cycles and GW invariants"
)]
pub struct Cli {
    /// Write the result document to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Neither read nor write the character-table cache.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Disconnected or connected Hurwitz number.
    Hur(HurArgs),
    /// Character table of S_d.
    Char(CharArgs),
    /// Completed cycle as a class sum.
    Cycle(CycleArgs),
    /// Stationary Gromov–Witten invariant of a target curve.
    Gw(GwArgs),
    /// Numerical I-function coefficient.
    Ifun(IfunArgs),
    /// Numerical ELSV check.
    Elsv(ElsvArgs),
    /// Route cross-check and oracle suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct HurArgs {
    #[arg(long, default_value_t = 0)]
    pub target_genus: u32,
    #[arg(long)]
    pub d: u32,
    /// Branch profiles separated by ';', e.g. "(3);(2,1)". Empty for none.
    #[arg(long, default_value = "", value_parser = parse_profile_list)]
    pub profiles: ProfileList,
    /// Count connected covers only.
    #[arg(long)]
    pub connected: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CharArgs {
    #[arg(long)]
    pub d: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Closed ρ-formula.
    Closed,
    /// Double Hurwitz numbers times one-marking I-functions.
    Wallcrossing,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CycleArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Route::Closed)]
    pub route: Route,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct GwArgs {
    #[arg(long, default_value_t = 0)]
    pub target_genus: u32,
    #[arg(long)]
    pub d: u32,
    /// Descendent indices, comma separated, e.g. "1,1".
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub ks: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Route::Closed)]
    pub route: Route,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct IfunArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub g: i64,
    #[arg(long)]
    pub eta: Partition,
    /// Descendent index of the single marking; omit for no markings.
    #[arg(long)]
    pub k: Option<u32>,
    /// Connected version (only without markings).
    #[arg(long)]
    pub connected: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ElsvArgs {
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub g: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    pub d_max: u32,
    #[arg(long, default_value_t = 6)]
    pub k_max: u32,
    /// Largest degree for the brute-force monodromy comparison.
    #[arg(long, default_value_t = 3)]
    pub oracle_d_max: u32,
}

/// Parsed `;`-separated profile list; serialized back in the same grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileList(pub Vec<Partition>);

impl Serialize for ProfileList {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        s.serialize_str(&parts.join(";"))
    }
}

fn parse_profile_list(s: &str) -> std::result::Result<ProfileList, String> {
    if s.trim().is_empty() {
        return Ok(ProfileList(Vec::new()));
    }
    parse_profiles(s)
        .map(ProfileList)
        .map_err(|e| e.to_string())
}

/// The cache directory: `HURWITZ_GW_CACHE_DIR`, else the user cache directory.
pub fn cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return PathBuf::from(dir);
    }
    if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(xdg).join("hurwitz-gw");
    }
    match std::env::var_os("HOME") {
        Some(home) => PathBuf::from(home).join(".cache").join("hurwitz-gw"),
        None => std::env::temp_dir().join("hurwitz-gw"),
    }
}

/// On-disk form of a character table.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CacheFile {
    pub version: u32,
    pub degree: u32,
    pub partitions: Vec<Partition>,
    pub matrix: Vec<Vec<i64>>,
    pub checksum: String,
}

impl CacheFile {
    pub fn from_table(t: &CharacterTable) -> Self {
        let mut file = CacheFile {
            version: CACHE_FORMAT_VERSION,
            degree: t.degree(),
            partitions: t.partitions().to_vec(),
            matrix: t.matrix().to_vec(),
            checksum: String::new(),
        };
        file.checksum = file.compute_checksum();
        file
    }

    fn compute_checksum(&self) -> String {
        let payload = json!([self.version, self.degree, self.partitions, self.matrix]);
        hex::encode(Sha256::digest(payload.to_string().as_bytes()))
    }

    /// Validates version, checksum and shape, and returns the table.
    pub fn into_table(self) -> Result<CharacterTable> {
        if self.version != CACHE_FORMAT_VERSION {
            return Err(Error::Cache(format!(
                "format version {} (expected {CACHE_FORMAT_VERSION})",
                self.version
            )));
        }
        if self.checksum != self.compute_checksum() {
            return Err(Error::Cache("checksum mismatch".into()));
        }
        CharacterTable::from_matrix(self.degree, self.partitions, self.matrix)
    }
}

/// Character-table cache rooted at a directory.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, d: u32) -> PathBuf {
        self.dir.join(format!("chartab-d{d}.json"))
    }

    /// Reads and validates the stored table; `Ok(None)` if there is no file.
    pub fn load(&self, d: u32) -> Result<Option<CharacterTable>> {
        let path = self.path(d);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let file: CacheFile = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if file.degree != d {
            return Err(Error::Cache(format!(
                "{} holds degree {}",
                path.display(),
                file.degree
            )));
        }
        file.into_table().map(Some)
    }

    /// Writes the table atomically (temporary file, then rename).
    pub fn store(&self, t: &CharacterTable) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let path = self.path(t.degree());
        let tmp = self.dir.join(format!(
            ".chartab-d{}.{}.tmp",
            t.degree(),
            std::process::id()
        ));
        std::fs::write(&tmp, serde_json::to_string(&CacheFile::from_table(t))?)?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Makes the in-memory table for degree `d` available, loading it from disk
    /// or building and persisting it. Unreadable or stale files are rebuilt.
    pub fn ensure(&self, d: u32) -> Result<()> {
        if characters::is_cached(d) {
            return Ok(());
        }
        match self.load(d) {
            Ok(Some(t)) => {
                characters::install_table(t);
                return Ok(());
            }
            Ok(None) => {}
            Err(e) => eprintln!("warning: rebuilding cached table for degree {d}: {e}"),
        }
        let t = characters::table(d)?;
        self.store(&t)
    }
}

/// Parses `args` and runs the command, printing the document. Returns the exit code:
/// 0 on success, 1 on computation errors or a failed `verify`, 2 on usage errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok((doc, ok)) => match emit(&cli, &doc) {
            Ok(()) => i32::from(!ok),
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn emit(cli: &Cli, doc: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hur(_) => "hur",
        Command::Char(_) => "char",
        Command::Cycle(_) => "cycle",
        Command::Gw(_) => "gw",
        Command::Ifun(_) => "ifun",
        Command::Elsv(_) => "elsv",
        Command::Verify(_) => "verify",
    }
}

/// Runs a parsed command and returns its document and whether it reports success.
pub fn run(cli: &Cli) -> Result<(Value, bool)> {
    let warm = |d: u32| -> Result<()> {
        if cli.no_cache || d > characters::MAX_TABLE_DEGREE {
            return Ok(());
        }
        let cache = TableCache::new(cache_dir());
        for e in 1..=d {
            cache.ensure(e)?;
        }
        Ok(())
    };
    let mut ok = true;
    let result = match &cli.command {
        Command::Hur(a) => {
            let b = BranchData::new(a.target_genus, a.d, a.profiles.0.clone())
                .map_err(|e| Error::InvalidArgument(format!("--profiles: {e}")))?;
            warm(a.d)?;
            let value = if a.connected {
                hurwitz::hurwitz_connected(&b)?
            } else {
                hurwitz::hurwitz_disconnected(&b)?
            };
            json!({ "value": rational_to_string(&value) })
        }
        Command::Char(a) => {
            warm(a.d)?;
            let t = characters::table(a.d)?;
            json!({
                "partitions": t.partitions(),
                "matrix": t.matrix(),
            })
        }
        Command::Cycle(a) => {
            warm(a.d)?;
            let value = match a.route {
                Route::Closed => gwh::completed_cycle(a.k, a.d)?.value,
                Route::Wallcrossing => gwh::tau_via_wallcrossing(a.k, a.d)?,
            };
            serde_json::to_value(&value)?
        }
        Command::Gw(a) => {
            warm(a.d)?;
            let value = match a.route {
                Route::Closed => gwh::stationary_gw(a.target_genus, a.d, &a.ks)?,
                Route::Wallcrossing => gwh::stationary_gw_wallcrossing(a.target_genus, a.d, &a.ks)?,
            };
            serde_json::to_value(&value)?
        }
        Command::Ifun(a) => {
            warm(a.eta.size())?;
            let value = match (a.k, a.connected) {
                (Some(_), true) => {
                    return Err(Error::InvalidArgument(
                        "--connected: only available without a marking (omit --k)".into(),
                    ))
                }
                (Some(k), false) => gwh::i_function_numeric(a.g, &a.eta, k)?,
                (None, false) => gwh::i_function_empty(a.g, &a.eta)?,
                (None, true) => gwh::i_function_connected_empty(a.g, &a.eta)?,
            };
            serde_json::to_value(&value)?
        }
        Command::Elsv(a) => {
            warm(a.mu.size())?;
            serde_json::to_value(gwh::elsv_check(&a.mu, a.g)?)?
        }
        Command::Verify(a) => {
            warm(a.d_max.max(a.oracle_d_max))?;
            let crosscheck = gwh::gwh_crosscheck(a.d_max, a.k_max)?;
            let oracle = oracle_suite(a.oracle_d_max)?;
            ok = crosscheck.pass && oracle.pass;
            json!({
                "pass": ok,
                "crosscheck": crosscheck,
                "oracle": oracle,
            })
        }
    };
    let doc = json!({
        "command": command_name(&cli.command),
        "version": VERSION,
        "request": serde_json::to_value(&cli.command)?,
        "result": result,
    });
    Ok((doc, ok))
}

/// Outcome of comparing Burnside sums with monodromy enumeration.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub pass: bool,
    pub cases: usize,
    pub failures: Vec<String>,
}

/// Burnside vs brute-force monodromy, disconnected and connected, for all
/// `d ≤ d_max`, target genus ≤ 1 and at most two profiles.
pub fn oracle_suite(d_max: u32) -> Result<OracleReport> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for d in 1..=d_max {
        let parts = enumerate_partitions(d);
        let mut profile_sets: Vec<Vec<Partition>> = vec![Vec::new()];
        for (i, a) in parts.iter().enumerate() {
            profile_sets.push(vec![a.clone()]);
            for b in &parts[i..] {
                profile_sets.push(vec![a.clone(), b.clone()]);
            }
        }
        for h in 0..=1 {
            for profiles in &profile_sets {
                let b = BranchData::new(h, d, profiles.clone())?;
                for connected in [false, true] {
                    cases += 1;
                    let (fast, slow) = if connected {
                        (
                            hurwitz::hurwitz_connected(&b)?,
                            hurwitz::monodromy_oracle(&b, true)?,
                        )
                    } else {
                        (
                            hurwitz::hurwitz_disconnected(&b)?,
                            hurwitz::monodromy_oracle(&b, false)?,
                        )
                    };
                    if fast != slow {
                        let names: Vec<String> = profiles.iter().map(ToString::to_string).collect();
                        failures.push(format!(
                            "h={h} d={d} [{}] connected={connected}: {} vs {}",
                            names.join(";"),
                            rational_to_string(&fast),
                            rational_to_string(&slow)
                        ));
                    }
                }
            }
        }
    }
    Ok(OracleReport {
        pass: failures.is_empty(),
        cases,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        for d in 1..=8 {
            let t = CharacterTable::build(d).unwrap();
            cache.store(&t).unwrap();
            let back = cache.load(d).unwrap().unwrap();
            assert_eq!(back.matrix(), t.matrix());
            assert_eq!(back.partitions(), t.partitions());
        }
        assert!(cache.load(9).unwrap().is_none());
    }

    #[test]
    fn corrupted_cache_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path());
        cache.store(&CharacterTable::build(4).unwrap()).unwrap();
        let path = cache.path(4);
        let text = std::fs::read_to_string(&path).unwrap();
        let mut file: CacheFile = serde_json::from_str(&text).unwrap();
        file.matrix[0][0] += 1;
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(cache.load(4), Err(Error::Cache(_))));
        file.matrix[0][0] -= 1;
        file.version += 1;
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(cache.load(4), Err(Error::Cache(_))));
    }

    #[test]
    fn documents() {
        let cli =
            Cli::try_parse_from(["hurwitz-gw", "--no-cache", "cycle", "--d", "2", "--k", "1"])
                .unwrap();
        let (doc, ok) = run(&cli).unwrap();
        assert!(ok);
        assert_eq!(doc["result"], json!({"(2)": "1"}));
        assert_eq!(doc["request"], json!({"d": 2, "k": 1, "route": "closed"}));

        let cli = Cli::try_parse_from([
            "hurwitz-gw",
            "--no-cache",
            "hur",
            "--target-genus",
            "0",
            "--d",
            "3",
            "--profiles",
            "(3);(3);(3)",
        ])
        .unwrap();
        assert_eq!(run(&cli).unwrap().0["result"], json!({"value": "1/3"}));
    }

    #[test]
    fn parse_errors_name_the_flag() {
        let err = Cli::try_parse_from(["hurwitz-gw", "hur", "--d", "3", "--profiles", "(3,0)"])
            .unwrap_err();
        assert!(err.to_string().contains("--profiles"), "{err}");
        let err =
            Cli::try_parse_from(["hurwitz-gw", "elsv", "--mu", "(x)", "--g", "1"]).unwrap_err();
        assert!(err.to_string().contains("--mu"), "{err}");
    }

    #[test]
    fn oracle_suite_small() {
        let r = oracle_suite(3).unwrap();
        assert!(r.pass, "{:?}", r.failures);
    }
}
