//! Command-line front end. Every subcommand prints a deterministic,
//! byte-stable text (or JSON) rendering of a library operation.
//!
//! Exit codes: 0 on success, 1 on a domain error (the error name goes to
//! stderr), 2 on a usage error.
//!
//! Words over a generating set are comma-separated 1-based indices with an
//! optional `'` suffix for the inverse; maps act on the left, so the LAST
//! index in the list applies first, and factorizations print
//! leftmost-applied-last.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use riaut::decision::{self, EtaClass};
use riaut::expansion::{self, ExpansionElem};
use riaut::generation::{self, Mode};
use riaut::green;
use riaut::prefix_codes;
use riaut::text;
use riaut::words::Alphabet;
use riaut::{Error, GroupElem, RiAutElem};

#[derive(Parser)]
#[command(
    name = "riaut",
    about = "Exact computation in right-ideal automorphism monoids, Thompson-Higman groups, and suffix expansions",
    after_help = "Composition is right-to-left everywhere: `compose A B` applies B first, and\n\
                  in generator words like `1,2` the index 2 applies first.\n\
                  The empty word renders as ^."
)]
struct Cli {
    /// Alphabet size (2..=26).
    #[arg(short, global = true, default_value_t = 2)]
    k: u32,
    /// Work in the dictionary-order preserving submonoid.
    #[arg(long, global = true, default_value_t = false)]
    dict: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized utilities; reserved, the current subcommands are
    /// all deterministic.
    #[arg(long, global = true, default_value_t = riaut::sample::DEFAULT_SEED)]
    seed: u64,
    /// Cap on the J-class level of enumerating subcommands (rees).
    #[arg(long, global = true, default_value_t = green::DEFAULT_LEVEL_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two tables: `compose A B` is A after B.
    Compose { psi: String, phi: String },
    /// Invert a table.
    Inverse { table: String },
    /// Maximal essential extension of a table.
    Maxext { table: String },
    /// Table equality of two elements.
    Eq { left: String, right: String },
    /// Check dictionary-order preservation.
    Dictcheck { table: String },
    /// J-order comparison: is LEFT <=_J RIGHT?
    Jcmp { left: String, right: String },
    /// Factorization witnesses for the J-order: beta . RIGHT . alpha = LEFT.
    Jfactor { left: String, right: String },
    /// List the standard generating set, one table per line.
    Gens,
    /// Factor a table into standard generators.
    Factor { table: String },
    /// A maximally extended element with the given domain code.
    Lemma45 { code: String },
    /// Rebuild a single-inner-leaf code with a second inner leaf, preserving
    /// the flank counts of the given inner leaf.
    Twoleaves { code: String, leaf: String },
    /// Intersect two essential right ideals, given by their codes.
    Intersect { left: String, right: String },
    /// Multiply two suffix-expansion elements.
    Expmul { left: String, right: String },
    /// Project an expansion element down to its restricted table.
    Rho { elem: String },
    /// Lift a table through the expansion: a three-generator word mapping to
    /// it under rho.
    Lift {
        table: String,
        #[arg(long)]
        gens: std::path::PathBuf,
    },
    /// The full fiber of rho over a table (expansion over the whole group).
    Fiber { table: String },
    /// Word problem over a generator file.
    Wp {
        #[arg(long, value_enum)]
        mode: WpMode,
        #[arg(long)]
        gens: std::path::PathBuf,
        u: String,
        v: String,
    },
    /// Set word problem in the group: are the two sets of words equal?
    /// Words within a set are separated by `;`.
    Setwp {
        #[arg(long)]
        gens: std::path::PathBuf,
        us: String,
        vs: String,
    },
    /// The finite Rees quotient at a J-level: order and elements.
    Rees { level: usize },
    /// Residual-finiteness witness: smallest separating quotient level.
    Separate { left: String, right: String },
    /// Image of a table under the level-i partial collapse homomorphism.
    Etai { table: String, i: usize },
    /// Compose two right-ideal homomorphisms (tables may be non-maximal,
    /// non-injective, or empty).
    RihomCompose { psi: String, phi: String },
    /// Minimal generating set of the image ideal of a homomorphism.
    RihomImagecode { table: String },
    /// Is the homomorphism prefix-code preserving?
    RihomPc { table: String },
    /// Uniform-length restriction of a homomorphism.
    RihomRestrict { table: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WpMode {
    Riaut,
    Group,
    Dict,
    Expansion,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.name());
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, text: impl Display, json: Value) {
    match cli.format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{json}"),
    }
}

fn emit_bool(cli: &Cli, b: bool) {
    emit(cli, b, json!(b));
}

fn mode_of(cli: &Cli) -> Mode {
    if cli.dict {
        Mode::Dict
    } else {
        Mode::General
    }
}

fn load_tables(
    cli: &Cli,
    path: &std::path::Path,
    alphabet: &Alphabet,
) -> Result<Vec<RiAutElem>, Error> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let tables = text::parse_generator_file(&content, alphabet)?;
    if cli.dict && !tables.iter().all(RiAutElem::is_dict_preserving) {
        return Err(Error::NotDictPreserving);
    }
    Ok(tables)
}

/// Generator files used in group contexts are read through maximal
/// extension, since group elements are canonical extended tables.
fn load_group_gens(
    cli: &Cli,
    path: &std::path::Path,
    alphabet: &Alphabet,
) -> Result<Vec<GroupElem>, Error> {
    Ok(load_tables(cli, path, alphabet)?
        .iter()
        .map(RiAutElem::max_extend)
        .collect())
}

fn run(cli: &Cli) -> Result<(), Error> {
    let alphabet = Alphabet::new(cli.k)?;
    if cli.k > 26 {
        return Err(Error::Parse("text rendering requires k <= 26".into()));
    }
    let table = |s: &str| text::parse_table(s, &alphabet);
    let code = |s: &str| text::parse_code(s, &alphabet);

    match &cli.command {
        Command::Compose { psi, phi } => {
            let result = table(psi)?.compose(&table(phi)?);
            emit(cli, &result, text::table_json(&result));
        }
        Command::Inverse { table: t } => {
            let result = table(t)?.inverse();
            emit(cli, &result, text::table_json(&result));
        }
        Command::Maxext { table: t } => {
            let result = table(t)?.max_extend();
            emit(cli, &result, text::table_json(result.rep()));
        }
        Command::Eq { left, right } => emit_bool(cli, table(left)? == table(right)?),
        Command::Dictcheck { table: t } => emit_bool(cli, table(t)?.is_dict_preserving()),
        Command::Jcmp { left, right } => {
            emit_bool(cli, green::j_leq(&table(left)?, &table(right)?))
        }
        Command::Jfactor { left, right } => {
            let (beta, alpha) = green::j_factor(&table(left)?, &table(right)?)?;
            emit(
                cli,
                format!("beta: {beta}\nalpha: {alpha}"),
                json!({"beta": text::table_json(&beta), "alpha": text::table_json(&alpha)}),
            );
        }
        Command::Gens => {
            let set = generation::standard_generators(&alphabet, mode_of(cli));
            let lines: Vec<String> = set.elements.iter().map(|e| e.to_string()).collect();
            emit(
                cli,
                lines.join("\n"),
                Value::Array(set.elements.iter().map(text::table_json).collect()),
            );
        }
        Command::Factor { table: t } => {
            let factors = generation::factor(&table(t)?, mode_of(cli))?;
            let text_form = factors
                .iter()
                .rev()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(" \u{2218} ");
            emit(
                cli,
                text_form,
                Value::Array(factors.iter().rev().map(text::table_json).collect()),
            );
        }
        Command::Lemma45 { code: c } => {
            let g = generation::max_extended_with_domain(&code(c)?, mode_of(cli))?;
            emit(cli, &g, text::table_json(g.rep()));
        }
        Command::Twoleaves { code: c, leaf } => {
            let p = code(c)?;
            let z = text::parse_word(leaf, &alphabet)?;
            let q = prefix_codes::two_inner_leaves(&p, &z)?;
            emit(cli, &q, text::code_json(&q));
        }
        Command::Intersect { left, right } => {
            let r = prefix_codes::intersect(&code(left)?, &code(right)?);
            emit(cli, &r, text::code_json(&r));
        }
        Command::Expmul { left, right } => {
            let result = text::parse_expansion(left, &alphabet)?
                .multiply(&text::parse_expansion(right, &alphabet)?);
            emit(cli, &result, text::expansion_json(&result));
        }
        Command::Rho { elem } => {
            let result = text::parse_expansion(elem, &alphabet)?.rho();
            emit(cli, &result, text::table_json(&result));
        }
        Command::Lift { table: t, gens } => {
            let delta = table(t)?;
            let gammas = load_group_gens(cli, gens, &alphabet)?;
            let word = expansion::lift(&delta, &gammas)?;
            let text_form = word
                .iter()
                .map(ExpansionElem::to_string)
                .collect::<Vec<_>>()
                .join(" \u{00b7} ");
            emit(
                cli,
                text_form,
                Value::Array(word.iter().map(text::expansion_json).collect()),
            );
        }
        Command::Fiber { table: t } => {
            let fiber = expansion::rho_fiber(&table(t)?);
            let lines: Vec<String> = fiber.iter().map(|e| e.to_string()).collect();
            emit(
                cli,
                lines.join("\n"),
                Value::Array(fiber.iter().map(text::expansion_json).collect()),
            );
        }
        Command::Wp { mode, gens, u, v } => {
            let uw = text::parse_gen_word(u)?;
            let vw = text::parse_gen_word(v)?;
            let answer = match mode {
                WpMode::Riaut => {
                    let tables = load_tables(cli, gens, &alphabet)?;
                    decision::wp_riaut(&uw, &vw, &tables, &alphabet)?
                }
                WpMode::Dict => {
                    let tables = load_tables(cli, gens, &alphabet)?;
                    if !tables.iter().all(RiAutElem::is_dict_preserving) {
                        return Err(Error::NotDictPreserving);
                    }
                    decision::wp_riaut(&uw, &vw, &tables, &alphabet)?
                }
                WpMode::Group => {
                    let gens = load_group_gens(cli, gens, &alphabet)?;
                    decision::wp_group(&uw, &vw, &gens, &alphabet)?
                }
                WpMode::Expansion => {
                    let gens = load_group_gens(cli, gens, &alphabet)?;
                    decision::wp_expansion(&uw, &vw, &gens, &alphabet)?
                }
            };
            emit_bool(cli, answer);
        }
        Command::Setwp { gens, us, vs } => {
            let gens = load_group_gens(cli, gens, &alphabet)?;
            let us = text::parse_gen_word_set(us)?;
            let vs = text::parse_gen_word_set(vs)?;
            emit_bool(cli, decision::set_wp(&us, &vs, &gens, &alphabet)?);
        }
        Command::Rees { level } => {
            if *level > cli.cap {
                return Err(Error::TooLarge(format!(
                    "level {level} exceeds --cap {}",
                    cli.cap
                )));
            }
            let q = decision::rees_quotient(&alphabet, *level)?;
            let mut lines = vec![format!("order {}", q.order()), "0".to_string()];
            lines.extend(q.elements().iter().map(|e| e.to_string()));
            emit(
                cli,
                lines.join("\n"),
                json!({
                    "order": q.order(),
                    "elements": Value::Array(
                        std::iter::once(json!("0"))
                            .chain(q.elements().iter().map(text::table_json))
                            .collect()
                    ),
                }),
            );
        }
        Command::Separate { left, right } => {
            let (level, distinct) = decision::separate(&table(left)?, &table(right)?)?;
            emit(
                cli,
                format!("level {level} distinct {distinct}"),
                json!({"level": level, "distinct": distinct}),
            );
        }
        Command::Etai { table: t, i } => {
            if *i == 0 {
                return Err(Error::Parse("the level threshold must be at least 1".into()));
            }
            let class = decision::eta_i_class(&table(t)?, *i);
            let json_value = match &class {
                EtaClass::MonoidPart(e) => json!({"part": "monoid", "table": text::table_json(e)}),
                EtaClass::GroupPart(g) => {
                    json!({"part": "group", "table": text::table_json(g.rep())})
                }
            };
            emit(cli, &class, json_value);
        }
        Command::RihomCompose { psi, phi } => {
            let result =
                text::parse_rihom(psi, &alphabet)?.compose(&text::parse_rihom(phi, &alphabet)?);
            emit(cli, &result, text::rihom_json(&result));
        }
        Command::RihomImagecode { table: t } => {
            let ic = text::parse_rihom(t, &alphabet)?.image_code();
            let text_form = format!(
                "{{{}}}",
                ic.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(",")
            );
            emit(
                cli,
                text_form,
                Value::Array(ic.iter().map(|w| json!(w.to_string())).collect()),
            );
        }
        Command::RihomPc { table: t } => {
            emit_bool(cli, text::parse_rihom(t, &alphabet)?.is_pc_preserving())
        }
        Command::RihomRestrict { table: t } => {
            let r = text::parse_rihom(t, &alphabet)?.restrict_to_pc();
            emit(cli, &r, text::rihom_json(&r));
        }
    }
    Ok(())
}
