use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use reality::counting::{
    an_counts, an_is_ambivalent, an_partition_report, gl_class_count, gl_real_class_count, partitions,
    sl2_expected_profile,
};
use reality::report::{
    analyze, analyze_full, chartable_text, parse_group_spec, search_order32, sweep_small_groups,
    verify_paper, AnalyzeOptions, Selector,
};
use reality::{Budget, Error};

#[derive(Parser)]
#[command(
    name = "reality",
    version,
    about = "Real, strongly real and rational classes and Frobenius-Schur indicators of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classes, characters, indicators and flags of a group.
    Analyze {
        spec: String,
        /// Also compute the dimension of the Lie algebra spanned by g - g^-1.
        #[arg(long)]
        plesken: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the character table.
    Chartable {
        spec: String,
        /// Print every value as its residue mod p.
        #[arg(long)]
        raw_modp: bool,
    },
    /// Closed-form class counts.
    Count {
        #[command(subcommand)]
        family: CountFamily,
    },
    /// Re-check published tables and statements.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Search for special groups.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
}

#[derive(Subcommand)]
enum CountFamily {
    /// Classes and real classes of GL(n,q).
    Gl { n: usize, q: u64 },
    /// Classes and real classes of A_n, with the partition listing.
    An { n: usize },
    /// Expected class and indicator profile of SL(2,q).
    Sl2 { q: u64 },
}

#[derive(Subcommand)]
enum VerifyTarget {
    Paper {
        /// an, covers, sl2, gl, plesken, inclusions or all.
        #[arg(default_value = "all")]
        selector: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// Strongly real groups of order 32 that are not totally orthogonal.
    Order32 {
        #[arg(long)]
        json: bool,
    },
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn run(cli: Cli, budget: Budget) -> Result<(String, ExitCode), Error> {
    let out = match cli.command {
        Command::Analyze {
            spec,
            plesken,
            json: as_json,
        } => {
            let spec = parse_group_spec(&spec)?;
            let report = analyze(&spec, &AnalyzeOptions { plesken, budget })?;
            if as_json {
                json(&report)
            } else {
                report.to_text()
            }
        }
        Command::Chartable { spec, raw_modp } => {
            let spec = parse_group_spec(&spec)?;
            let analysis = analyze_full(
                &spec,
                &AnalyzeOptions {
                    plesken: false,
                    budget,
                },
            )?;
            chartable_text(&analysis, raw_modp)
        }
        Command::Count { family } => count(family)?,
        Command::Verify {
            target:
                VerifyTarget::Paper {
                    selector,
                    json: as_json,
                },
        } => {
            let selector: Selector = selector
                .parse()
                .map_err(|message| Error::Parse { position: 0, message })?;
            let summary = verify_paper(selector, &budget);
            let code = if summary.is_success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            let text = if as_json {
                json(&summary)
            } else {
                summary.to_text()
            };
            return Ok((text, code));
        }
        Command::Search {
            target: SearchTarget::Order32 { json: as_json },
        } => {
            let search = search_order32(&budget)?;
            let sweep = sweep_small_groups(&budget)?;
            if as_json {
                json(&serde_json::json!({ "search": search, "sweep": sweep }))
            } else {
                let mut out = format!(
                    "{} automorphisms of C2xQ8, {} classes of involutions, {} hits\n",
                    search.automorphisms,
                    search.involution_classes,
                    search.hits.len()
                );
                for hit in &search.hits {
                    let p = &hit.properties;
                    out.push_str(&format!(
                        "\n{}: order {}, exponent {}, |G'| = {}, degrees 1^16 4: {}, all properties: {}\n",
                        hit.spec,
                        hit.report.order,
                        hit.report.exponent,
                        hit.report.derived_order,
                        p.degrees_16_by_1_and_4,
                        p.all()
                    ));
                }
                out.push_str(&format!(
                    "\n{} groups of order < 32 examined, {} strongly real, {} not totally orthogonal\n",
                    sweep.groups_examined,
                    sweep.strongly_real,
                    sweep.counterexamples.len()
                ));
                out
            }
        }
    };
    Ok((out, ExitCode::SUCCESS))
}

fn count(family: CountFamily) -> Result<String, Error> {
    Ok(match family {
        CountFamily::Gl { n, q } => format!(
            "GL({n},{q}): {} classes, {} real classes\n",
            gl_class_count(n, q)?,
            gl_real_class_count(n, q)?
        ),
        CountFamily::An { n } => {
            let c = an_counts(n)?;
            let mut out = format!(
                "A{n}: {} classes, {} real classes, ambivalent: {}\n\n",
                c.total_classes,
                c.real_classes,
                an_is_ambivalent(n)?
            );
            let mut rows = vec![vec![
                "partition".to_string(),
                "in A_n".into(),
                "splits".into(),
                "non-real".into(),
            ]];
            for p in partitions(n) {
                let r = an_partition_report(&p);
                if r.in_an {
                    rows.push(vec![p.to_string(), "yes".into(), yes(r.splits), yes(r.nonreal)]);
                }
            }
            out.push_str(&left_align(&rows));
            out
        }
        CountFamily::Sl2 { q } => {
            let p = sl2_expected_profile(q)?;
            format!(
                "SL(2,{q}): {} classes, {} real, {} strongly real, symplectic characters: {}, totally orthogonal: {}\n",
                p.classes,
                p.real,
                p.strongly_real,
                yes(p.has_symplectic),
                yes(p.ortho_ambivalent)
            )
        }
    })
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn left_align(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            cells.join("  ").trim_end().to_string() + "\n"
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match Budget::from_env() {
        Ok(b) => b,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    match run(cli, budget) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
