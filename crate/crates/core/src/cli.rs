//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (input outside a
//! map's domain or malformed partition text), 3 verification failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::bijections::{
    gon_conjugate, gon_conjugate_inverse, hon_from_distinct, hon_to_distinct, involution_i,
    mex_embed, mex_embed_inverse, parity_pad, parity_pad_inverse, phi_no, phi_on, psi_no, psi_on,
    sylvester_forward, sylvester_inverse, BijectionError, BijectionId, DistinctPair,
};
use crate::classes::ClassId;
use crate::counting::{count_record, count_records, AbVariant, CountRecord, CSV_HEADER};
use crate::partitions::{parse_overpartition, parse_partition, Partition};
use crate::verifier::{verify_many, CheckId, IdentityId, TheoremId, CROSSCHECK_ID, DEFAULT_NMAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Statistics accepted by `count` besides the class names.
pub const STATS: [&str; 18] = [
    "overpartitions",
    "d",
    "d2",
    "r",
    "p_e",
    "p_eo",
    "p_oe",
    "e_on",
    "e_no",
    "hprime_on",
    "cor22",
    "sigma_mex",
    "sigma_l",
    "sigma_maex",
    "ab_ngeo",
    "ab_ngto",
    "ab_ogen",
    "ab_ogtn",
];

#[derive(Debug, Parser)]
#[command(
    name = "overpart",
    version,
    about = "Overpartition counting, identity verification and bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of overpartitions of n in a class, or a statistic at n
    Count {
        /// class (gno, eno, gon, eon) or statistic name; see `list`
        what: String,
        #[arg(long)]
        n: u32,
    },
    /// Run identities, theorems and the enumeration crosscheck
    Verify {
        /// run only this id (default: everything)
        #[arg(long)]
        id: Option<String>,
        /// truncation order for identities (default: per identity)
        #[arg(long)]
        order: Option<usize>,
        /// upper bound for theorems and the crosscheck
        #[arg(long, default_value_t = DEFAULT_NMAX)]
        nmax: u32,
        /// one JSON report per line
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection or its inverse
    Biject {
        /// map name; see `list`
        map: String,
        /// apply the inverse map
        #[arg(long)]
        inverse: bool,
        /// overpartition, partition or `alpha=.. beta=..` pair
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// overlined-part count for inverses that need it
        #[arg(long)]
        k: Option<u32>,
    },
    /// Emit count records for n = 0..=nmax
    Table {
        #[arg(long)]
        nmax: u32,
        /// CSV with a header row (the default)
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// one JSON record per line
        #[arg(long)]
        json: bool,
    },
    /// List identity, theorem, map, class and statistic names
    List,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Count { what, n } => count(&what, n, out),
        Command::Verify {
            id,
            order,
            nmax,
            json,
        } => verify(id.as_deref(), order, nmax, json, out),
        Command::Biject {
            map,
            inverse,
            input,
            k,
        } => biject(&map, inverse, &input, k, out),
        Command::Table { nmax, json, .. } => table(nmax, json, out),
        Command::List => list(out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}

fn stat_value(r: &CountRecord, what: &str) -> Option<i64> {
    if let Ok(c) = what.parse::<ClassId>() {
        return Some(r.class_count(c) as i64);
    }
    if let Some(v) = what.strip_prefix("ab_") {
        return v.parse::<AbVariant>().ok().map(|v| r.ab_diffs.get(v));
    }
    let v = match what {
        "d" => r.d,
        "d2" => r.d2,
        "r" => r.r,
        "p_e" => r.p_e,
        "p_eo" => r.p_eo,
        "p_oe" => r.p_oe,
        "e_on" => r.e_on,
        "e_no" => r.e_no,
        "hprime_on" => r.hprime_on,
        "cor22" => r.cor22,
        "sigma_mex" => r.sigma_mex,
        "sigma_l" => r.sigma_l,
        "sigma_maex" => r.sigma_maex,
        _ => return None,
    };
    Some(v as i64)
}

fn count(what: &str, n: u32, out: &mut dyn Write) -> Result<i32, CliError> {
    let known = what.parse::<ClassId>().is_ok() || STATS.contains(&what);
    if !known {
        return Err(CliError::Usage(format!(
            "unknown class or statistic {what:?}"
        )));
    }
    let value = if what == "overpartitions" {
        crate::partitions::enumerate_overpartitions(n).count() as i64
    } else {
        stat_value(&count_record(n), what).expect("name checked above")
    };
    writeln!(out, "{value}").map_err(io)?;
    Ok(EXIT_OK)
}

fn verify(
    id: Option<&str>,
    order: Option<usize>,
    nmax: u32,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if order == Some(0) {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    let ids = match id {
        Some(s) => vec![s.parse::<CheckId>().map_err(CliError::Usage)?],
        None => CheckId::all(),
    };
    let reports = verify_many(&ids, order, nmax);
    for r in &reports {
        if json {
            let line = serde_json::to_string(r).expect("reports serialise");
            writeln!(out, "{line}").map_err(io)?;
        } else {
            writeln!(out, "{r}").map_err(io)?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn require_k(k: Option<u32>, map: BijectionId) -> Result<u32, CliError> {
    k.ok_or_else(|| CliError::Usage(format!("{map} --inverse needs --k")))
}

fn show_with_k(mu: &Partition, k: u32) -> String {
    format!("mu={mu} k={k}")
}

fn biject(
    map: &str,
    inverse: bool,
    input: &str,
    k: Option<u32>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let id = map.parse::<BijectionId>().map_err(CliError::Usage)?;
    let op = || parse_overpartition(input).map_err(BijectionError::from);
    let part = || parse_partition(input).map_err(BijectionError::from);
    let text = match (id, inverse) {
        (BijectionId::Sylvester, false) => sylvester_forward(&op()?)?.to_string(),
        (BijectionId::Sylvester, true) => {
            let pair: DistinctPair = input.parse()?;
            let k = k.unwrap_or_else(|| pair.overline_count());
            sylvester_inverse(&pair, k)?.to_string()
        }
        (BijectionId::MexEmbed, false) => {
            let (mu, k) = mex_embed(&op()?)?;
            show_with_k(&mu, k)
        }
        (BijectionId::MexEmbed, true) => {
            mex_embed_inverse(&part()?, require_k(k, id)?)?.to_string()
        }
        (BijectionId::Involution, _) => involution_i(&op()?)?.to_string(),
        (BijectionId::PhiOn, false) => phi_on(&op()?)?.to_string(),
        (BijectionId::PhiOn, true) => psi_on(&part()?)?.to_string(),
        (BijectionId::PhiNo, false) => phi_no(&op()?)?.to_string(),
        (BijectionId::PhiNo, true) => psi_no(&part()?)?.to_string(),
        (BijectionId::GonConj, false) => {
            let (mu, k) = gon_conjugate(&op()?)?;
            show_with_k(&mu, k)
        }
        (BijectionId::GonConj, true) => {
            gon_conjugate_inverse(&part()?, require_k(k, id)?)?.to_string()
        }
        (BijectionId::ParityPad, false) => parity_pad(&part()?)?.to_string(),
        (BijectionId::ParityPad, true) => parity_pad_inverse(&part()?)?.to_string(),
        (BijectionId::HonDistinct, false) => hon_to_distinct(&op()?)?.to_string(),
        (BijectionId::HonDistinct, true) => hon_from_distinct(&part()?)?.to_string(),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(EXIT_OK)
}

fn table(nmax: u32, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let records = count_records(nmax);
    if json {
        for r in &records {
            let line = serde_json::to_string(r).expect("records serialise");
            writeln!(out, "{line}").map_err(io)?;
        }
    } else {
        writeln!(out, "{CSV_HEADER}").map_err(io)?;
        for r in &records {
            writeln!(out, "{}", r.csv_row()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn list(out: &mut dyn Write) -> Result<i32, CliError> {
    let mut lines: Vec<String> = IdentityId::all()
        .into_iter()
        .map(|i| format!("identity {i}"))
        .collect();
    lines.extend(TheoremId::ALL.iter().map(|t| format!("theorem {t}")));
    lines.push(format!("check {CROSSCHECK_ID}"));
    lines.extend(BijectionId::ALL.iter().map(|b| format!("map {b}")));
    lines.extend(ClassId::ALL.iter().map(|c| format!("class {c}")));
    lines.extend(STATS.iter().map(|s| format!("stat {s}")));
    for l in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("overpart").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            call(&["count", "gno", "--n", "4"]),
            (0, "9\n".into(), String::new())
        );
        assert_eq!(call(&["count", "overpartitions", "--n", "4"]).1, "14\n");
        assert_eq!(call(&["count", "r", "--n", "6"]).1, "7\n");
        assert_eq!(call(&["count", "ab_ngto", "--n", "4"]).1, "6\n");
        assert_eq!(call(&["count", "bogus", "--n", "4"]).0, EXIT_USAGE);
    }

    #[test]
    fn biject_examples() {
        let (code, out, _) = call(&["biject", "sylvester", "--input", "10~,8~,7~,6,4,4,2,1"]);
        assert_eq!((code, out.as_str()), (0, "alpha=3,1 beta=11,9,7,6,3,2\n"));
        let (code, out, _) = call(&[
            "biject",
            "sylvester",
            "--inverse",
            "--input",
            "alpha=3,1 beta=11,9,7,6,3,2",
        ]);
        assert_eq!((code, out.as_str()), (0, "10~,8~,7~,6,4,4,2,1\n"));
        assert_eq!(
            call(&["biject", "sylvester", "--input", "2~,2"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(
            call(&["biject", "sylvester", "--input", "2~,x"]).0,
            EXIT_DOMAIN
        );
        assert_eq!(
            call(&["biject", "gon-conj", "--inverse", "--input", "2,1"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["biject", "nope", "--input", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "gno"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--id", "I-NOPE"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_single() {
        let (code, out, _) = call(&["verify", "--id", "I-EULER3", "--order", "80", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["id"], "I-EULER3");
        assert_eq!(v["bound"], 80);
        assert_eq!(v["verdict"], "pass");
        assert!(v["first_failure"].is_null());
    }

    #[test]
    fn table_formats() {
        let (code, out, _) = call(&["table", "--nmax", "4"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 6);
        assert!(lines[5].starts_with("4,9,12,6,9,"));
        let (_, out, _) = call(&["table", "--nmax", "2", "--json"]);
        assert_eq!(out.lines().count(), 3);
        assert_eq!(
            call(&["table", "--nmax", "2", "--json", "--csv"]).0,
            EXIT_USAGE
        );
    }
}
