use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::{json, Value};

use spherectl_core::bundle::Orientation;
use spherectl_core::classify::{self, Answer};
use spherectl_core::exactnum::int_json;
use spherectl_core::moduli::{self, CurvatureClass, PROVENANCE};
use spherectl_core::space;
use spherectl_core::{BigInt, BundleClass};

mod render;

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spherectl",
    version,
    about = "Exact invariants of S3-bundles over S4 and moduli separation certificates"
)]
struct Cli {
    /// Output format; tsv is only available for `census` and `family`.
    #[arg(long, global = true, value_enum, env = "SPHERECTL_FORMAT", default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology, signature, p1^2[W] and mu of one sphere bundle.
    Invariants {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k: BigInt,
        #[arg(long)]
        reverse_orientation: bool,
    },
    /// Homeomorphism and diffeomorphism verdicts for two sphere bundles.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        n1: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k1: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        n2: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k2: BigInt,
        /// Ignore orientation (mu compared up to sign).
        #[arg(long)]
        unoriented: bool,
    },
    /// Separation certificate for the metrics GZ(k0) and GZ(k1).
    Certify {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k0: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        k1: BigInt,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Pairwise certificates along the family k = l + 112n·j.
    Components {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        l: BigInt,
        #[arg(long)]
        pairs: usize,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Partition k in [from, to] into diffeomorphism classes.
    Census {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        from: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        to: BigInt,
        #[arg(long)]
        unoriented: bool,
    },
    /// mu-values realized by Milnor spheres.
    RealizedMu {
        #[arg(long)]
        unoriented: bool,
    },
    /// Members k = l, l + 112n, ... of a Grove-Ziller family.
    Family {
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        l: BigInt,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct CertArgs {
    /// Drop the scal>0 tag from the separated moduli spaces.
    #[arg(long)]
    no_scal: bool,
    /// Append the analytic steps of the argument.
    #[arg(long)]
    quote_provenance: bool,
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    json: Value,
    tsv: Option<String>,
    pretty: String,
    code: u8,
}

impl Output {
    fn new(json: Value, pretty: String) -> Self {
        Output {
            json,
            tsv: None,
            pretty,
            code: 0,
        }
    }
}

fn verdict_code(answer: Answer) -> u8 {
    match answer {
        Answer::Yes => 0,
        Answer::No => EXIT_NO,
        Answer::Unknown => EXIT_UNKNOWN,
    }
}

fn provenance_json() -> Value {
    PROVENANCE
        .iter()
        .map(|(step, statement)| json!({ "step": step, "statement": statement }))
        .collect()
}

fn with_provenance(mut v: Value, cert: CertArgs) -> Value {
    if cert.quote_provenance {
        v["provenance"] = provenance_json();
    }
    v
}

fn run(command: &Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Invariants {
            n,
            k,
            reverse_orientation,
        } => {
            let b = BundleClass::new(n.clone(), k.clone())?;
            let o = if *reverse_orientation {
                Orientation::Negative
            } else {
                Orientation::Positive
            };
            let d = space::dossier(&b, o);
            Output::new(serde_json::to_value(&d)?, render::dossier(&d))
        }
        Command::Classify {
            n1,
            k1,
            n2,
            k2,
            unoriented,
        } => {
            let b1 = BundleClass::new(n1.clone(), k1.clone())?;
            let b2 = BundleClass::new(n2.clone(), k2.clone())?;
            let (question, v) = if *unoriented {
                ("diffeomorphic", classify::unoriented_diffeomorphic(&b1, &b2))
            } else {
                ("oriented-diffeomorphic", classify::oriented_diffeomorphic(&b1, &b2))
            };
            let homeo = classify::homeomorphic(&b1, &b2);
            let json = json!({
                "pair": [b1, b2],
                "question": question,
                "answer": v.answer(),
                "reason": v.reason(),
                "homeomorphic": homeo,
            });
            let mut out = Output::new(json, render::verdict(question, &v, &homeo));
            out.code = verdict_code(v.answer());
            out
        }
        Command::Certify { n, k0, k1, cert } => {
            let b0 = BundleClass::new(n.clone(), k0.clone())?;
            let b1 = BundleClass::new(n.clone(), k1.clone())?;
            if !n.is_positive() {
                return Err(Failure(format!("Euler coefficient must be positive, got {n}")));
            }
            let c = moduli::separation_certificate(&b0, &b1)?
                .with_curvature_classes(CurvatureClass::separated(!cert.no_scal));
            let json = with_provenance(serde_json::to_value(&c)?, *cert);
            Output::new(json, render::certificate(&c, cert.quote_provenance))
        }
        Command::Components { n, l, pairs, cert } => {
            let b = BundleClass::new(n.clone(), l.clone())?;
            if !n.is_positive() {
                return Err(Failure(format!("Euler coefficient must be positive, got {n}")));
            }
            let rep = moduli::infinite_components_report_with(&b, *pairs, CurvatureClass::separated(!cert.no_scal));
            let json = with_provenance(serde_json::to_value(&rep)?, *cert);
            Output::new(json, render::components(&rep, cert.quote_provenance))
        }
        Command::Census {
            n,
            from,
            to,
            unoriented,
        } => {
            let rep = classify::census(n, from, to, *unoriented)?;
            let mut out = Output::new(serde_json::to_value(&rep)?, render::census(&rep));
            out.tsv = Some(rep.to_tsv());
            out
        }
        Command::RealizedMu { unoriented } => {
            let set = if *unoriented {
                space::realized_mu_set_unoriented::<BigInt>()
            } else {
                space::realized_mu_set::<BigInt>()
            };
            let values: Vec<String> = set.iter().map(ToString::to_string).collect();
            let json = json!({ "unoriented": unoriented, "count": values.len(), "values": values });
            Output::new(json, render::mu_set(&values, *unoriented))
        }
        Command::Family { n, l, count } => {
            let b = BundleClass::new(n.clone(), l.clone())?;
            if !n.is_positive() {
                return Err(Failure(format!("Euler coefficient must be positive, got {n}")));
            }
            let fam = classify::gz_family(&b, *count);
            let step = classify::family_step(n);
            let ks: Vec<&BigInt> = fam.iter().map(|b| b.pont()).collect();
            let members: Vec<Value> = ks.iter().map(|k| int_json(*k)).collect();
            let json = json!({
                "n": int_json(b.euler()),
                "l": int_json(b.pont()),
                "step": int_json(&step),
                "members": members,
            });
            let mut out = Output::new(json, render::family(n, &step, &ks));
            out.tsv = Some(render::family_tsv(&ks));
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli.command) {
        Ok(out) => out,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON value serializes") + "\n",
        Format::Pretty => out.pretty,
        Format::Tsv => match out.tsv {
            Some(t) => t,
            None => {
                eprintln!("error: tsv output is only available for census and family");
                return ExitCode::from(EXIT_INPUT);
            }
        },
    };
    print!("{text}");
    ExitCode::from(out.code)
}
