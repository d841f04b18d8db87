//! Command-line front end: classification, enumeration and verification
//! with machine-readable output.
//!
//! Exit codes: 0 success / verifier pass, 1 verifier fail, 2 verifier
//! inconclusive, 64 usage error, 65 invalid parameters. Results go to
//! stdout as an envelope {command, inputs, result, version}; diagnostics
//! go to stderr. Everything is deterministic; there are no seeds.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pentact::actions::{self, ActionParams, ActionsError, VerdictTarget};
use pentact::fp::{todd_coxeter, CosetStatus, DEFAULT_MAX_COSETS};
use pentact::group::{so3_catalog, su2_catalog, Ambient, GroupError, IsoType};
use pentact::verify::{self, defaults, VerificationReport, VerifyStatus};

const EXIT_USAGE: u8 = 64;
const EXIT_INVALID: u8 = 65;

#[derive(Parser)]
#[command(
    name = "pentact",
    version,
    about = "Exact invariants of SO(3)- and SU(2)-actions on simply-connected 5-manifolds"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Pi1Method {
    Formula,
    Coset,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification record of the action with parameters (m, n, l).
    #[command(allow_negative_numbers = true)]
    Classify { m: i64, n: i64, l: i64 },
    /// Decide whether the actions (m, n, l) and (m2, n2, l2) are
    /// equivalent.
    #[command(allow_negative_numbers = true)]
    Equiv {
        m: i64,
        n: i64,
        l: i64,
        m2: i64,
        n2: i64,
        l2: i64,
    },
    /// Enumerate the pairwise inequivalent classes with the given (m, n)
    /// and l up to --lmax.
    #[command(name = "enum", allow_negative_numbers = true)]
    Enumerate {
        m: i64,
        n: i64,
        #[arg(long, default_value_t = 20)]
        lmax: u32,
    },
    /// Slice data at the exceptional orbits of (m, n, l).
    #[command(allow_negative_numbers = true)]
    Slice { m: i64, n: i64, l: i64 },
    /// Fundamental-group order of the glued model with invariants
    /// (n1, n2, b1, b2, k).
    #[command(allow_negative_numbers = true)]
    Pi1 {
        n1: u64,
        n2: u64,
        b1: u64,
        b2: u64,
        k: i64,
        #[arg(long, value_enum, default_value_t = Pi1Method::Formula)]
        method: Pi1Method,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
    },
    /// Fixed-point set of the principal isotropy of (m, n, l).
    #[command(allow_negative_numbers = true)]
    Fixedset { m: i64, n: i64, l: i64 },
    /// Curvature admissibility verdict for an action (m n l) or a named
    /// target (--named).
    #[command(allow_negative_numbers = true)]
    Curvature {
        m: Option<i64>,
        n: Option<i64>,
        l: Option<i64>,
        /// One of: s5, wu-su2, wu-so3, brieskorn, wu-sum:K:L, s3xs2-sum:K.
        #[arg(long)]
        named: Option<String>,
    },
    /// Dump the normalizer table and the two-orbit-type table.
    Tables,
    /// A catalog subgroup with its invariants. Tags: trivial, cyclic,
    /// dicyclic, bintet, binoct, binico, kleinfour, dihedral, tet, oct,
    /// ico.
    Subgroup {
        tag: String,
        param: Option<u32>,
        /// Ambient group for the ambiguous families (trivial, cyclic).
        #[arg(long, value_enum)]
        ambient: Option<AmbientArg>,
    },
    /// Run a verifier. Lemma ids: pi1, bijection, exceptional-pairs,
    /// table1, noncyclic, equiv-counts, gauss-bonnet, all.
    Verify {
        lemma: String,
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long)]
        kmin: Option<i64>,
        #[arg(long)]
        kmax: Option<i64>,
        #[arg(long)]
        mmax: Option<u32>,
        #[arg(long)]
        qmax: Option<u64>,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Check one bijection pair instead of the sweep.
        #[arg(long, requires = "q2")]
        q1: Option<u64>,
        #[arg(long, requires = "q1")]
        q2: Option<u64>,
        /// Check one equivalence-count pair instead of the sweep.
        #[arg(long, requires = "n")]
        m: Option<u32>,
        #[arg(long, requires = "m")]
        n: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AmbientArg {
    Su2,
    So3,
}

#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    command: &'static str,
    inputs: I,
    result: R,
    version: &'static str,
}

fn emit<I: Serialize, R: Serialize>(
    format: Format,
    command: &'static str,
    inputs: I,
    result: R,
    text: String,
) {
    match format {
        Format::Json => {
            let envelope = Envelope {
                command,
                inputs,
                result,
                version: env!("CARGO_PKG_VERSION"),
            };
            println!(
                "{}",
                serde_json::to_string(&envelope).expect("serializable output")
            );
        }
        Format::Text => println!("{text}"),
    }
}

fn invalid(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_INVALID)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Let --help/--version print normally with exit 0.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    run(cli)
}

fn run(cli: Cli) -> ExitCode {
    let format = cli.format;
    match cli.command {
        Command::Classify { m, n, l } => {
            let params = match ActionParams::new(m, n, l) {
                Ok(p) => p,
                Err(e) => return invalid(e),
            };
            let record = actions::classify(&params);
            let text = render::classify_text(&record);
            emit(format, "classify", [m, n, l], record, text);
            ExitCode::SUCCESS
        }
        Command::Equiv {
            m,
            n,
            l,
            m2,
            n2,
            l2,
        } => {
            let a = match ActionParams::new(m, n, l) {
                Ok(p) => p,
                Err(e) => return invalid(e),
            };
            let b = match ActionParams::new(m2, n2, l2) {
                Ok(p) => p,
                Err(e) => return invalid(e),
            };
            let (equivalent, rule) = actions::equivalence_rule(&a, &b);
            #[derive(Serialize)]
            struct EquivResult {
                equivalent: bool,
                rule: String,
            }
            let text = format!(
                "{a} and {b} are {}equivalent ({rule})",
                if equivalent { "" } else { "not " }
            );
            emit(
                format,
                "equiv",
                [m, n, l, m2, n2, l2],
                EquivResult { equivalent, rule },
                text,
            );
            ExitCode::SUCCESS
        }
        Command::Enumerate { m, n, lmax } => {
            if m < 0 || n < 0 {
                return invalid("m and n must be nonnegative");
            }
            let classes = actions::enumerate_actions(m as u32, n as u32, lmax);
            let text = render::enumerate_text(m as u32, n as u32, lmax, &classes);
            #[derive(Serialize)]
            struct Inputs {
                m: i64,
                n: i64,
                lmax: u32,
            }
            emit(format, "enum", Inputs { m, n, lmax }, &classes, text);
            ExitCode::SUCCESS
        }
        Command::Slice { m, n, l } => {
            let params = match ActionParams::new(m, n, l) {
                Ok(p) => p,
                Err(e) => return invalid(e),
            };
            match actions::slice_data(&params) {
                Ok(slice) => {
                    let text = render::slice_text(&params, &slice);
                    emit(format, "slice", [m, n, l], slice, text);
                    ExitCode::SUCCESS
                }
                Err(e) => invalid(e),
            }
        }
        Command::Pi1 {
            n1,
            n2,
            b1,
            b2,
            k,
            method,
            max_cosets,
        } => run_pi1(format, n1, n2, b1, b2, k, method, max_cosets),
        Command::Fixedset { m, n, l } => {
            let params = match ActionParams::new(m, n, l) {
                Ok(p) => p,
                Err(e) => return invalid(e),
            };
            let fixed = actions::fixed_set_principal(&params);
            let text = render::fixed_set_text(&params, &fixed);
            emit(format, "fixedset", [m, n, l], fixed, text);
            ExitCode::SUCCESS
        }
        Command::Curvature { m, n, l, named } => run_curvature(format, m, n, l, named),
        Command::Tables => {
            #[derive(Serialize)]
            struct TablesResult {
                normalizer_table: Vec<actions::NormalizerRow>,
                two_orbit_type_table: Vec<actions::TwoOrbitRow>,
            }
            let result = TablesResult {
                normalizer_table: actions::table1_rows(),
                two_orbit_type_table: actions::table2_rows(),
            };
            let text = render::tables_text(&result.normalizer_table, &result.two_orbit_type_table);
            emit(format, "tables", (), result, text);
            ExitCode::SUCCESS
        }
        Command::Subgroup {
            tag,
            param,
            ambient,
        } => run_subgroup(format, &tag, param, ambient),
        Command::Verify {
            lemma,
            nmax,
            kmin,
            kmax,
            mmax,
            qmax,
            window,
            max_cosets,
            q1,
            q2,
            m,
            n,
        } => {
            let opts = VerifyOpts {
                nmax: nmax.unwrap_or(defaults::N_MAX),
                kmin: kmin.unwrap_or(defaults::K_MIN),
                kmax: kmax.unwrap_or(defaults::K_MAX),
                mmax: mmax.unwrap_or(defaults::M_MAX),
                qmax: qmax.unwrap_or(defaults::Q_MAX),
                window: window.unwrap_or(defaults::WINDOW),
                max_cosets: max_cosets.unwrap_or(DEFAULT_MAX_COSETS),
                q_pair: q1.zip(q2),
                mn_pair: m.zip(n),
            };
            run_verify(format, &lemma, &opts)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_pi1(
    format: Format,
    n1: u64,
    n2: u64,
    b1: u64,
    b2: u64,
    k: i64,
    method: Pi1Method,
    max_cosets: usize,
) -> ExitCode {
    let order = match actions::pi1_order(n1, n2, b1, b2, k) {
        Ok(o) => o,
        Err(e) => return invalid(e),
    };
    #[derive(Serialize)]
    struct CosetCertificate {
        status: &'static str,
        order: Option<usize>,
        max_cosets_used: usize,
        agrees_with_formula: Option<bool>,
    }
    #[derive(Serialize)]
    struct Pi1Result {
        order: u64,
        method: &'static str,
        coset: Option<CosetCertificate>,
    }
    let mut exit = ExitCode::SUCCESS;
    let result = match method {
        Pi1Method::Formula => Pi1Result {
            order,
            method: "formula",
            coset: None,
        },
        Pi1Method::Coset => {
            let presentation =
                actions::pi1_presentation(n1, n2, b1, b2, k).expect("validated above");
            let outcome = todd_coxeter(&presentation, max_cosets);
            let certificate = match outcome.status {
                CosetStatus::Completed(coset_order) => CosetCertificate {
                    status: "completed",
                    order: Some(coset_order),
                    max_cosets_used: outcome.max_cosets_used,
                    agrees_with_formula: Some(coset_order as u64 == order),
                },
                CosetStatus::Exceeded => {
                    exit = ExitCode::from(2);
                    CosetCertificate {
                        status: "exceeded",
                        order: None,
                        max_cosets_used: outcome.max_cosets_used,
                        agrees_with_formula: None,
                    }
                }
            };
            if certificate.agrees_with_formula == Some(false) {
                exit = ExitCode::FAILURE;
            }
            Pi1Result {
                order,
                method: "coset",
                coset: Some(certificate),
            }
        }
    };
    let text = render::pi1_text(
        n1,
        n2,
        b1,
        b2,
        k,
        &result.order,
        result
            .coset
            .as_ref()
            .map(|c| (c.status, c.order, c.max_cosets_used)),
    );
    #[derive(Serialize)]
    struct Inputs {
        n1: u64,
        n2: u64,
        b1: u64,
        b2: u64,
        k: i64,
    }
    emit(format, "pi1", Inputs { n1, n2, b1, b2, k }, result, text);
    exit
}

fn parse_named_target(name: &str) -> Result<VerdictTarget, String> {
    let lower = name.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("wu-sum:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() == 2 {
            let wu = parts[0].parse().map_err(|_| "bad K in wu-sum:K:L")?;
            let brieskorn = parts[1].parse().map_err(|_| "bad L in wu-sum:K:L")?;
            return Ok(VerdictTarget::ConnSumWuBrieskorn { wu, brieskorn });
        }
        return Err("wu-sum takes the form wu-sum:K:L".to_string());
    }
    if let Some(rest) = lower.strip_prefix("s3xs2-sum:") {
        let copies: u32 = rest.parse().map_err(|_| "bad K in s3xs2-sum:K")?;
        if copies == 0 {
            return Err("s3xs2-sum needs at least one copy".to_string());
        }
        return Ok(VerdictTarget::ConnSumS3xS2 { extra: copies - 1 });
    }
    match lower.as_str() {
        "s5" => Ok(VerdictTarget::LinearSphere(Ambient::SO3)),
        "wu-su2" => Ok(VerdictTarget::WuSu2),
        "wu-so3" => Ok(VerdictTarget::WuSo3),
        "brieskorn" => Ok(VerdictTarget::ConnSumWuBrieskorn {
            wu: 0,
            brieskorn: 1,
        }),
        other => Err(format!(
            "unknown target `{other}`; expected s5, wu-su2, wu-so3, brieskorn, wu-sum:K:L \
             or s3xs2-sum:K"
        )),
    }
}

fn run_curvature(
    format: Format,
    m: Option<i64>,
    n: Option<i64>,
    l: Option<i64>,
    named: Option<String>,
) -> ExitCode {
    let (target, label) = match (m, n, l, named) {
        (Some(m), Some(n), Some(l), None) => match ActionParams::new(m, n, l) {
            Ok(p) => (VerdictTarget::Action(p), p.to_string()),
            Err(e) => return invalid(e),
        },
        (None, None, None, Some(name)) => match parse_named_target(&name) {
            Ok(t) => (t, name),
            Err(e) => return invalid(e),
        },
        _ => {
            eprintln!("error: pass either `m n l` or `--named <target>`");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match actions::curvature_verdict(&target) {
        Ok(verdict) => {
            let text = render::curvature_text(&label, &verdict);
            emit(format, "curvature", label.clone(), verdict, text);
            ExitCode::SUCCESS
        }
        Err(e) => invalid(e),
    }
}

fn parse_subgroup_tag(tag: &str, param: Option<u32>) -> Result<(IsoType, Ambient), String> {
    let needs = |name: &str| format!("family `{name}` needs a parameter");
    let lower = tag.to_ascii_lowercase();
    let (tag, default_ambient) = match lower.as_str() {
        "trivial" | "1" => (IsoType::Trivial, Ambient::SU2),
        "cyclic" | "z" => (
            IsoType::Cyclic(param.ok_or_else(|| needs("cyclic"))?),
            Ambient::SU2,
        ),
        "dicyclic" | "dic" => (
            IsoType::Dicyclic(param.ok_or_else(|| needs("dicyclic"))?),
            Ambient::SU2,
        ),
        "bintet" | "t*" => (IsoType::BinTet, Ambient::SU2),
        "binoct" | "o*" => (IsoType::BinOct, Ambient::SU2),
        "binico" | "i*" => (IsoType::BinIco, Ambient::SU2),
        "kleinfour" | "v4" => (IsoType::KleinFour, Ambient::SO3),
        "dihedral" | "d" => (
            IsoType::Dihedral(param.ok_or_else(|| needs("dihedral"))?),
            Ambient::SO3,
        ),
        "tet" | "t" => (IsoType::Tet, Ambient::SO3),
        "oct" | "o" => (IsoType::Oct, Ambient::SO3),
        "ico" | "i" => (IsoType::Ico, Ambient::SO3),
        other => return Err(format!("unknown subgroup tag `{other}`")),
    };
    Ok((tag, default_ambient))
}

fn run_subgroup(
    format: Format,
    tag: &str,
    param: Option<u32>,
    ambient: Option<AmbientArg>,
) -> ExitCode {
    let (iso, default_ambient) = match parse_subgroup_tag(tag, param) {
        Ok(t) => t,
        Err(e) => return invalid(e),
    };
    let ambient = match ambient {
        Some(AmbientArg::Su2) => Ambient::SU2,
        Some(AmbientArg::So3) => Ambient::SO3,
        None => default_ambient,
    };
    let export = match ambient {
        Ambient::SU2 => su2_catalog(iso).map(|g| g.export()),
        Ambient::SO3 => so3_catalog(iso).map(|g| g.export()),
    };
    match export {
        Ok(export) => {
            let text = render::subgroup_text(&export);
            #[derive(Serialize)]
            struct Inputs<'a> {
                tag: &'a str,
                param: Option<u32>,
                ambient: Ambient,
            }
            emit(
                format,
                "subgroup",
                Inputs {
                    tag,
                    param,
                    ambient,
                },
                export,
                text,
            );
            ExitCode::SUCCESS
        }
        Err(e @ (GroupError::BadParam { .. } | GroupError::UnknownTag { .. })) => invalid(e),
        Err(e) => invalid(e),
    }
}

struct VerifyOpts {
    nmax: u64,
    kmin: i64,
    kmax: i64,
    mmax: u32,
    qmax: u64,
    window: i64,
    max_cosets: usize,
    q_pair: Option<(u64, u64)>,
    mn_pair: Option<(u32, u32)>,
}

fn run_one_verifier(lemma: &str, opts: &VerifyOpts) -> Result<VerificationReport, ActionsError> {
    match lemma {
        "pi1" => Ok(verify::verify_pi1_formula(
            opts.nmax,
            opts.kmin,
            opts.kmax,
            opts.max_cosets,
        )),
        "bijection" => match opts.q_pair {
            Some((q1, q2)) => verify::verify_bijection(q1, q2, opts.window),
            None => Ok(verify::verify_bijection_sweep(opts.qmax, opts.window)),
        },
        "exceptional-pairs" => Ok(verify::verify_exceptional_pairs(opts.mmax)),
        "table1" => Ok(verify::verify_table1(opts.mmax)),
        "noncyclic" => Ok(verify::verify_noncyclic_obstruction()),
        "equiv-counts" => match opts.mn_pair {
            Some((m, n)) => verify::verify_equivalence_counts(m, n),
            None => Ok(verify::verify_equivalence_counts_sweep(
                defaults::EQUIV_N_MAX,
            )),
        },
        "gauss-bonnet" => Ok(verify::verify_gauss_bonnet_bound()),
        other => Err(ActionsError::UnknownRow(format!(
            "unknown lemma id `{other}`"
        ))),
    }
}

const ALL_LEMMAS: [&str; 7] = [
    "pi1",
    "bijection",
    "exceptional-pairs",
    "table1",
    "noncyclic",
    "equiv-counts",
    "gauss-bonnet",
];

fn status_exit(status: VerifyStatus) -> ExitCode {
    match status {
        VerifyStatus::Pass => ExitCode::SUCCESS,
        VerifyStatus::Fail => ExitCode::FAILURE,
        VerifyStatus::Inconclusive => ExitCode::from(2),
    }
}

fn run_verify(format: Format, lemma: &str, opts: &VerifyOpts) -> ExitCode {
    if lemma == "all" {
        let mut reports = Vec::new();
        let mut worst = VerifyStatus::Pass;
        for id in ALL_LEMMAS {
            let report = run_one_verifier(id, opts).expect("fixed ids are valid");
            eprintln!(
                "{}: {:?} ({} cases)",
                report.lemma, report.status, report.cases
            );
            worst = match (worst, report.status) {
                (_, VerifyStatus::Fail) | (VerifyStatus::Fail, _) => VerifyStatus::Fail,
                (VerifyStatus::Inconclusive, _) | (_, VerifyStatus::Inconclusive) => {
                    VerifyStatus::Inconclusive
                }
                _ => VerifyStatus::Pass,
            };
            reports.push(report);
        }
        let text = reports
            .iter()
            .map(render::report_text)
            .collect::<Vec<_>>()
            .join("\n");
        emit(format, "verify", "all", &reports, text);
        return status_exit(worst);
    }
    match run_one_verifier(lemma, opts) {
        Ok(report) => {
            let text = render::report_text(&report);
            let status = report.status;
            emit(format, "verify", lemma, report, text);
            status_exit(status)
        }
        Err(e) => invalid(e),
    }
}
