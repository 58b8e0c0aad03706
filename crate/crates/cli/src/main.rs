//! Command-line front end: analyze | eff-div | nef-div | eff2 | nef2 | chow |
//! pairing | orbit | logfano | richardson | corpus.
//!
//! Root indices and word positions are 1-based, matching the subscripts of the
//! divisor labels X_1, …, X_d. Exit code 0 on success, 1 on a domain error
//! (with an error JSON on stderr), 2 on a usage error.

use bottsam::{
    aut_stabilization, dense_orbit_criterion, effective_cone_2cycles, effective_cone_divisors,
    greedy_reduced_subword, intersection_desing, log_fano_certificate, nef2_cone,
    nef_divisor_cone, pairing, BSWord, CartanMatrix, ChowRing, CycleClass, Weight,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bottsam",
    version,
    about = "Exact invariants of Bott-Samelson varieties: cones, Chow products, orbit and log Fano criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized sweeps (corpus --sample).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct SystemArgs {
    /// Built-in type such as A2, C3, G2.
    #[arg(long = "type")]
    type_name: Option<String>,
    /// JSON file {"rank": n, "matrix": [[...], ...]}.
    #[arg(long)]
    cartan_file: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct WordArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Comma-separated 1-based simple-root indices, e.g. 1,2,1,2.
    #[arg(long)]
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Prefix Demazure products and reduced-step flags of a word.
    Analyze(WordArgs),
    /// Effective cone of divisors: standard divisors plus Sigma classes.
    EffDiv(WordArgs),
    /// Nef cone of divisors (image of the orthant in the O basis); optionally
    /// classify one divisor class.
    NefDiv {
        #[command(flatten)]
        word: WordArgs,
        /// Divisor class in X coordinates to test for ampleness and nefness.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
    },
    /// Effective cone of 2-cycles of a reduced word.
    Eff2(WordArgs),
    /// Nef cone of 2-cycles of a reduced word of length 4.
    Nef2(WordArgs),
    /// Chow-ring tables: square reductions and an optional pairing matrix.
    Chow {
        #[command(flatten)]
        word: WordArgs,
        /// Emit the pairing matrix of this grade.
        #[arg(long)]
        grade: Option<usize>,
    },
    /// The integral pairing of a weight with a simple coroot.
    Pairing {
        #[command(flatten)]
        system: SystemArgs,
        /// Comma-separated fundamental-weight coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// 1-based simple-root index.
        #[arg(long)]
        index: usize,
    },
    /// Dense-orbit criterion, chosen subword, and automorphism stabilization.
    Orbit {
        #[command(flatten)]
        word: WordArgs,
        /// Optional reduced subword (1-based positions) replacing the greedy one.
        #[arg(long)]
        subword: Option<String>,
    },
    /// Log Fano certificate with the ample recipe and boundary divisor.
    Logfano {
        #[command(flatten)]
        word: WordArgs,
        /// Denominator M; defaults to max(a_i) + 1.
        #[arg(long)]
        m: Option<i64>,
    },
    /// Desingularization data for an intersection of translated Schubert varieties.
    Richardson {
        #[command(flatten)]
        system: SystemArgs,
        /// Reduced word for u.
        #[arg(long)]
        word_u: String,
        /// Reduced word for v.
        #[arg(long)]
        word_v: String,
    },
    /// Sweep all words up to a length, one report per word.
    Corpus {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        max_len: usize,
        /// Sample this many words uniformly instead of sweeping (uses --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Domain(bottsam::Error),
    Input(String),
}

impl From<bottsam::Error> for CliError {
    fn from(e: bottsam::Error) -> Self {
        CliError::Domain(e)
    }
}

fn error_kind(e: &CliError) -> &'static str {
    match e {
        CliError::Input(_) => "input",
        CliError::Domain(err) => match err {
            bottsam::Error::IndexOutOfRange { .. } => "index-out-of-range",
            bottsam::Error::PositionOutOfRange { .. } => "position-out-of-range",
            bottsam::Error::InvalidCartan(_) => "invalid-cartan",
            bottsam::Error::UnknownType(_) => "unknown-type",
            bottsam::Error::RankMismatch { .. } => "rank-mismatch",
            bottsam::Error::NotFiniteType => "not-finite-type",
            bottsam::Error::NotReduced => "not-reduced",
            bottsam::Error::ReducedPosition(_) => "reduced-position",
            bottsam::Error::GradeMismatch { .. } => "grade-mismatch",
            bottsam::Error::GradeOverflow(..) => "grade-overflow",
            bottsam::Error::DimensionMismatch(..) => "dimension-mismatch",
            bottsam::Error::SigmaUnsupported { .. } => "sigma-unsupported",
            bottsam::Error::SigmaValidation { .. } => "sigma-validation",
            bottsam::Error::NonIntegralClass => "non-integral-class",
            bottsam::Error::InvalidLogFanoScale(..) => "invalid-log-fano-scale",
            bottsam::Error::Nef2Precondition(_) => "nef2-precondition",
            bottsam::Error::Internal(_) => "internal",
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
        }
        Err(e) => {
            let message = match &e {
                CliError::Domain(err) => err.to_string(),
                CliError::Input(msg) => msg.clone(),
            };
            let payload = json!({"error": {"kind": error_kind(&e), "message": message}});
            eprintln!("{payload}");
            std::process::exit(1);
        }
    }
}

fn load_cartan(system: &SystemArgs) -> Result<CartanMatrix, CliError> {
    match (&system.type_name, &system.cartan_file) {
        (Some(name), None) => Ok(CartanMatrix::from_type(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(CartanMatrix::from_json(&text)?)
        }
        _ => Err(CliError::Input(
            "exactly one of --type or --cartan-file is required".into(),
        )),
    }
}

fn parse_csv(text: &str, what: &str) -> Result<Vec<usize>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("malformed {what}: `{p}`")))
        })
        .collect()
}

fn parse_word_args(args: &WordArgs) -> Result<BSWord, CliError> {
    let cartan = load_cartan(&args.system)?;
    let word = parse_csv(&args.word, "word")?;
    Ok(BSWord::analyze(&cartan, &word)?)
}

fn class_texts(classes: &[bottsam::DivisorClass]) -> Vec<String> {
    classes.iter().map(|c| c.to_text()).collect()
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let text_mode = cli.format == Format::Text;
    match &cli.command {
        Command::Analyze(args) => {
            let bsw = parse_word_args(args)?;
            let prefix_lengths: Vec<usize> =
                (0..=bsw.len()).map(|i| bsw.prefix(i).length()).collect();
            if text_mode {
                let mut out = format!(
                    "word {:?}\nreduced: {}\nreduced_step: {:?}\nprefix lengths: {:?}\nsigma positions: {:?}",
                    bsw.word(),
                    bsw.is_reduced(),
                    bsw.reduced_step(),
                    prefix_lengths,
                    bsw.sigma_positions(),
                );
                out.push_str(&format!(
                    "\nanticanonical: {}",
                    bsw.canonical_class().to_text()
                ));
                return Ok(out);
            }
            Ok(json!({
                "word": bsw.word(),
                "reduced": bsw.is_reduced(),
                "reduced_step": bsw.reduced_step(),
                "prefix_lengths": prefix_lengths,
                "sigma_positions": bsw.sigma_positions(),
                "anticanonical": bsw.canonical_class(),
            })
            .to_string())
        }
        Command::EffDiv(args) => {
            let bsw = parse_word_args(args)?;
            let report = effective_cone_divisors(&bsw)?;
            if text_mode {
                let mut lines = vec![format!(
                    "effective cone of X{:?}: {} generators",
                    bsw.word(),
                    report.generators.len()
                )];
                for (gen, extremal) in report.generators.iter().zip(&report.extremal) {
                    lines.push(format!(
                        "  {} {}",
                        gen.to_text(),
                        if *extremal { "(extremal)" } else { "(redundant)" }
                    ));
                }
                return Ok(lines.join("\n"));
            }
            let mut value = serde_json::to_value(&report).expect("serializable report");
            value["generators_text"] = json!(class_texts(&report.generators));
            Ok(value.to_string())
        }
        Command::NefDiv { word, class } => {
            let bsw = parse_word_args(word)?;
            let cone = nef_divisor_cone(&bsw)?;
            let classified = match class {
                Some(text) => {
                    let coeffs = text
                        .split(',')
                        .map(|p| {
                            p.trim().parse::<i64>().map_err(|_| {
                                CliError::Input(format!("malformed class entry `{p}`"))
                            })
                        })
                        .collect::<Result<Vec<i64>, CliError>>()?;
                    let class = bottsam::DivisorClass::from_integers(coeffs);
                    Some((
                        bottsam::is_ample(&bsw, &class)?,
                        bottsam::is_globally_generated(&bsw, &class)?,
                        class,
                    ))
                }
                None => None,
            };
            if text_mode {
                let mut lines = vec!["nef cone rays:".to_string()];
                for r in cone.rays() {
                    let class = bottsam::DivisorClass {
                        coeffs: r
                            .iter()
                            .map(|x| num_rational::BigRational::from_integer(x.clone()))
                            .collect(),
                    };
                    lines.push(format!("  {}", class.to_text()));
                }
                if let Some((ample, nef, class)) = &classified {
                    lines.push(format!(
                        "{}: ample {}, globally generated {}",
                        class.to_text(),
                        ample,
                        nef
                    ));
                }
                return Ok(lines.join("\n"));
            }
            let mut value = serde_json::to_value(&cone).expect("serializable cone");
            if let Some((ample, nef, class)) = &classified {
                value["class"] = serde_json::to_value(class).expect("serializable class");
                value["ample"] = json!(ample);
                value["globally_generated"] = json!(nef);
            }
            Ok(value.to_string())
        }
        Command::Eff2(args) => {
            let bsw = parse_word_args(args)?;
            let cone = effective_cone_2cycles(&bsw)?;
            render_cycle_cone(&bsw, cone, text_mode, "effective 2-cycle cone rays")
        }
        Command::Nef2(args) => {
            let bsw = parse_word_args(args)?;
            let cone = nef2_cone(&bsw)?;
            render_cycle_cone(&bsw, cone, text_mode, "nef 2-cycle cone rays")
        }
        Command::Chow { word, grade } => {
            let bsw = parse_word_args(word)?;
            let ring = ChowRing::new(&bsw);
            let squares: Vec<serde_json::Value> = (1..=bsw.len())
                .map(|j| {
                    let sq = ring.square_reduce(j).expect("position in range");
                    json!({"position": j, "class": sq})
                })
                .collect();
            let pairing_matrix = match grade {
                Some(k) => Some(int_matrix(&ring.pairing_matrix(*k)?)?),
                None => None,
            };
            if text_mode {
                let mut lines = vec![format!("Chow ring of X{:?}", bsw.word())];
                for j in 1..=bsw.len() {
                    let sq = ring.square_reduce(j).expect("position in range");
                    lines.push(format!("  x_{j}^2 = {}", sq.to_text()));
                }
                if let Some(m) = &pairing_matrix {
                    lines.push(format!("pairing matrix (grade {}):", grade.unwrap()));
                    for row in m {
                        lines.push(format!("  {row:?}"));
                    }
                }
                return Ok(lines.join("\n"));
            }
            Ok(json!({
                "word": bsw.word(),
                "squares": squares,
                "pairing_matrix": pairing_matrix,
            })
            .to_string())
        }
        Command::Pairing {
            system,
            weight,
            index,
        } => {
            let cartan = load_cartan(system)?;
            let coords = weight
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Input(format!("malformed weight entry `{p}`")))
                })
                .collect::<Result<Vec<i64>, CliError>>()?;
            let lambda = Weight::new(coords);
            let value = pairing(&cartan, &lambda, *index)?;
            if text_mode {
                return Ok(format!("<lambda, alpha_{index}^vee> = {value}"));
            }
            Ok(json!({"weight": lambda.coords, "index": index, "pairing": value}).to_string())
        }
        Command::Orbit { word, subword } => {
            let bsw = parse_word_args(word)?;
            let chosen = match subword {
                Some(text) => Some(parse_csv(text, "subword")?),
                None => None,
            };
            let report = dense_orbit_criterion(&bsw, chosen.as_deref())?;
            let stabilization = aut_stabilization(&bsw).ok();
            let verdict = if report.satisfied {
                "satisfied"
            } else {
                "inconclusive"
            };
            if text_mode {
                let mut out = format!(
                    "dense orbit criterion: {verdict}\nsubword: {:?}\ncharacters: {:?}\nrank {} of {} characters",
                    report.subword,
                    report.characters.iter().map(|c| c.coords.clone()).collect::<Vec<_>>(),
                    report.rank,
                    report.fiber_dimension,
                );
                if let Some(flags) = &stabilization {
                    out.push_str(&format!("\naut stabilization: {flags:?}"));
                }
                out.push_str(&format!(
                    "\ngreedy subword: {:?}",
                    greedy_reduced_subword(&bsw)
                ));
                return Ok(out);
            }
            let mut value = serde_json::to_value(&report).expect("serializable report");
            value["verdict"] = json!(verdict);
            value["aut_stabilization"] = json!(stabilization);
            value["greedy_subword"] = json!(greedy_reduced_subword(&bsw));
            Ok(value.to_string())
        }
        Command::Logfano { word, m } => {
            let bsw = parse_word_args(word)?;
            let cert = log_fano_certificate(&bsw, *m)?;
            if text_mode {
                return Ok(format!(
                    "log Fano certificate for X{:?}\n  a = {:?}, M = {}\n  Delta = {}\n  -K - Delta = {}\n  checks: floor_zero {}, ample {}, decomposition {}",
                    bsw.word(),
                    cert.a,
                    cert.m,
                    cert.delta.to_text(),
                    cert.log_fano_divisor.to_text(),
                    cert.checks.floor_zero,
                    cert.checks.ample,
                    cert.checks.decomposition,
                ));
            }
            Ok(serde_json::to_string(&cert).expect("serializable certificate"))
        }
        Command::Richardson {
            system,
            word_u,
            word_v,
        } => {
            let cartan = load_cartan(system)?;
            let wu = parse_csv(word_u, "word-u")?;
            let wv = parse_csv(word_v, "word-v")?;
            let report = intersection_desing(&cartan, &wu, &wv)?;
            if text_mode {
                return Ok(format!(
                    "concatenated word: {:?}\nw = u*v has reduced word {:?} (length {})\nfiber dimension: {}\nfiber nonempty: {}\ndense orbit: {}",
                    report.concatenated_word,
                    report.w_reduced_word,
                    report.w_length,
                    report.fiber_dimension,
                    report.fiber_nonempty,
                    if report.orbit.satisfied { "satisfied" } else { "inconclusive" },
                ));
            }
            Ok(serde_json::to_string(&report).expect("serializable report"))
        }
        Command::Corpus {
            system,
            max_len,
            sample,
        } => {
            let cartan = load_cartan(system)?;
            corpus(&cartan, *max_len, *sample, cli.seed, text_mode)
        }
    }
}

fn int_matrix(m: &[Vec<bottsam::num::Int>]) -> Result<Vec<Vec<i64>>, CliError> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    i64::try_from(x)
                        .map_err(|_| CliError::Input("matrix entry exceeds i64".into()))
                })
                .collect()
        })
        .collect()
}

fn render_cycle_cone(
    bsw: &BSWord,
    cone: bottsam::RationalCone,
    text_mode: bool,
    title: &str,
) -> Result<String, CliError> {
    if text_mode {
        let d = bsw.len();
        let lines: Vec<String> = cone
            .rays()
            .iter()
            .map(|r| {
                let cycle = CycleClass::from_vector(d, 2, r);
                format!("  {}", cycle.to_text())
            })
            .collect();
        return Ok(format!("{title}:\n{}", lines.join("\n")));
    }
    Ok(serde_json::to_string(&cone).expect("serializable cone"))
}

/// All nonempty words over the alphabet 1..=rank with length ≤ max_len,
/// ordered by length then lexicographically.
fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut word = vec![1usize; len];
        loop {
            out.push(word.clone());
            // Odometer increment.
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                if word[pos - 1] < rank {
                    word[pos - 1] += 1;
                    break;
                }
                word[pos - 1] = 1;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

fn corpus(
    cartan: &CartanMatrix,
    max_len: usize,
    sample: Option<usize>,
    seed: Option<u64>,
    text_mode: bool,
) -> Result<String, CliError> {
    let mut words = all_words(cartan.rank(), max_len);
    if let Some(n) = sample {
        let mut state = seed.unwrap_or(0x5eed_5eed_5eed_5eed);
        let mut next = move |m: usize| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % m
        };
        let mut chosen = Vec::new();
        for _ in 0..n.min(words.len()) {
            chosen.push(words.remove(next(words.len())));
        }
        chosen.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        words = chosen;
    }
    let mut reports = Vec::new();
    let mut lines = Vec::new();
    for word in &words {
        let bsw = BSWord::analyze(cartan, word)?;
        let eff = effective_cone_divisors(&bsw);
        let orbit = dense_orbit_criterion(&bsw, None)?;
        let fano_ok = log_fano_certificate(&bsw, None).is_ok();
        let (gen_count, extremal_count, sigma_valid) = match &eff {
            Ok(report) => (
                report.generators.len(),
                report.extremal.iter().filter(|&&f| f).count(),
                report.sigmas.iter().all(|s| s.coefficient_check && s.fiber_check),
            ),
            Err(_) => (0, 0, false),
        };
        let entry = json!({
            "word": word,
            "reduced": bsw.is_reduced(),
            "sigma_positions": bsw.sigma_positions(),
            "sigma_valid": sigma_valid,
            "eff_generators": gen_count,
            "extremal_rays": extremal_count,
            "dense_orbit": if orbit.satisfied { "satisfied" } else { "inconclusive" },
            "log_fano": fano_ok,
        });
        if text_mode {
            lines.push(format!(
                "{word:?} reduced={} generators={gen_count} extremal={extremal_count} orbit={} fano={fano_ok}",
                bsw.is_reduced(),
                if orbit.satisfied { "satisfied" } else { "inconclusive" },
            ));
        }
        reports.push(entry);
    }
    if text_mode {
        return Ok(lines.join("\n"));
    }
    Ok(serde_json::Value::Array(reports).to_string())
}
