//! Command-line surface for the library: space files in, deterministic
//! line-oriented `key: value` reports out.
//!
//! Exit codes: 0 success, 2 unreadable or unparseable input, 3 a file
//! that parses but describes an invalid space, 4 a failed precondition
//! (unknown name, wrong field, missing dominance, budget).

mod spacefile;

use clap::{Parser, Subcommand, ValueEnum};
use mvspace::oracle::{oracle_is_mvspace, oracle_mdim, oracle_sum};
use mvspace::{
    common_mbasis, find_mbasis, im_restrict, is_multi_linearly_independent, ker_restrict,
    map_image, mdim, rank_nullity_check, Error, LinearMap, MVSpace, Matrix, MultiIndependence,
    RestrictedMVSpace, Scalar, Universe, Vector,
};
use spacefile::{parse, parse_scalar, parse_vector, FileError, SpaceFile};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exact operations on multi vector spaces described by space files.
#[derive(Parser)]
#[command(name = "mvspace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every space in the file is well formed.
    Validate { file: PathBuf },
    /// Look up the count of one vector in a space.
    Count {
        file: PathBuf,
        #[arg(long)]
        space: String,
        /// The vector, written `(a,b,...)`.
        #[arg(long)]
        vector: String,
    },
    /// Compute the multi dimension of a space.
    Dim {
        file: PathBuf,
        #[arg(long)]
        space: String,
    },
    /// Add two spaces.
    Sum {
        file: PathBuf,
        /// The two space names, written `A,B`.
        #[arg(long)]
        spaces: String,
        /// Also write the result as a space file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Intersect two spaces.
    Meet {
        file: PathBuf,
        /// The two space names, written `A,B`.
        #[arg(long)]
        spaces: String,
        /// Also write the result as a space file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find an M-basis of a space: an ambient basis restricting to a
    /// basis of every level.
    Mbasis {
        file: PathBuf,
        #[arg(long)]
        space: String,
    },
    /// Decide multi linear independence of vectors inside a space.
    Indep {
        file: PathBuf,
        #[arg(long)]
        space: String,
        /// The vectors, written `(a,b);(c,d);...`.
        #[arg(long)]
        vectors: String,
    },
    /// Find one basis that is an M-basis of two spaces at once.
    CommonMbasis {
        file: PathBuf,
        /// The two space names, written `A,B`.
        #[arg(long)]
        spaces: String,
    },
    /// Push a space through a linear map.
    Map {
        file: PathBuf,
        #[arg(long)]
        space: String,
        /// The matrix, one row per codomain coordinate, written
        /// `a,b;c,d;...`.
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum)]
        what: MapReport,
    },
    /// Re-derive counts, sums, meets, and dimensions definitionally over
    /// the finite universe and compare (finite fields only).
    OracleCheck { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy)]
enum MapReport {
    /// The image space under the map.
    Image,
    /// The space cut down to the kernel.
    Ker,
    /// The image space on its carrier inside the codomain.
    Im,
    /// The kernel/image dimension balance.
    RankNullity,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Failure {
        let code = match &e {
            FileError::Syntax { .. } => 2,
            FileError::Invariant { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Library errors surface as invariant violations when the data itself is
/// bad, and as precondition failures otherwise.
fn op_failure(e: Error) -> Failure {
    let code = match &e {
        Error::InvalidChain(_) | Error::NotClosed(_) => 3,
        _ => 4,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn argument(message: String) -> Failure {
    Failure { code: 2, message }
}

fn precondition(message: String) -> Failure {
    Failure { code: 4, message }
}

fn load(path: &Path) -> Result<SpaceFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse(&text).map_err(Failure::from)
}

fn find<'a>(file: &'a SpaceFile, name: &str) -> Result<&'a MVSpace, Failure> {
    file.get(name)
        .ok_or_else(|| precondition(format!("no space named `{name}`")))
}

fn two_names(arg: &str) -> Result<(&str, &str), Failure> {
    match arg.split_once(',') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a, b)),
        _ => Err(argument(format!("`{arg}`: expected two names `A,B`"))),
    }
}

fn row_text(vectors: &[Vector]) -> String {
    let mut out = String::new();
    for v in vectors {
        out.push(' ');
        out.push_str(&v.to_string());
    }
    out
}

fn count_text(counts: &[u32]) -> String {
    counts
        .iter()
        .map(|c| format!(" {c}"))
        .collect::<String>()
}

fn space_report(out: &mut String, space: &MVSpace) {
    writeln!(out, "omega: {}", space.omega()).unwrap();
    for level in space.levels() {
        writeln!(
            out,
            "level {}:{}",
            level.count,
            row_text(level.subspace.basis())
        )
        .unwrap();
    }
    writeln!(out, "mdim: {}", mdim(space)).unwrap();
}

fn restricted_report(out: &mut String, part: &RestrictedMVSpace) {
    writeln!(out, "carrier:{}", row_text(part.carrier().basis())).unwrap();
    space_report(out, part.space());
}

fn parse_vector_list(file: &SpaceFile, text: &str) -> Result<Vec<Vector>, Failure> {
    text.split(';')
        .map(|t| parse_vector(file.field, file.ambient, t).map_err(argument))
        .collect()
}

fn parse_matrix(file: &SpaceFile, text: &str) -> Result<LinearMap, Failure> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for row_text in text.split(';') {
        let inner = row_text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(row_text);
        let mut row = Vec::new();
        for part in inner.split(',') {
            row.push(parse_scalar(file.field, part).map_err(argument)?);
        }
        if row.len() != file.ambient {
            return Err(argument(format!(
                "matrix row `{row_text}` has {} entries, expected {}",
                row.len(),
                file.ambient
            )));
        }
        rows.push(row);
    }
    Ok(LinearMap::new(Matrix::from_rows(file.field, rows)))
}

fn binary_report(
    file: &SpaceFile,
    keyword: &str,
    spaces: &str,
    out_path: Option<&Path>,
    op: impl Fn(&MVSpace, &MVSpace) -> Result<MVSpace, Error>,
) -> Result<String, Failure> {
    let (a, b) = two_names(spaces)?;
    let left = find(file, a)?;
    let right = find(file, b)?;
    let result = op(left, right).map_err(op_failure)?;
    let mut report = String::new();
    writeln!(report, "{keyword}: {a} {b}").unwrap();
    space_report(&mut report, &result);
    if let Some(path) = out_path {
        let single = SpaceFile {
            field: file.field,
            ambient: file.ambient,
            omega: file.omega,
            spaces: vec![("RESULT".to_string(), result)],
        };
        std::fs::write(path, single.serialize()).map_err(|e| Failure {
            code: 2,
            message: format!("cannot write {}: {e}", path.display()),
        })?;
        writeln!(report, "out: {}", path.display()).unwrap();
    }
    Ok(report)
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Validate { file } => {
            let file = load(&file)?;
            let mut report = String::new();
            writeln!(report, "field: {}", file.field).unwrap();
            writeln!(report, "ambient: {}", file.ambient).unwrap();
            writeln!(report, "omega: {}", file.omega).unwrap();
            writeln!(report, "spaces: {}", file.spaces.len()).unwrap();
            for (name, _) in &file.spaces {
                writeln!(report, "{name}: valid").unwrap();
            }
            Ok(report)
        }
        Command::Count {
            file,
            space,
            vector,
        } => {
            let file = load(&file)?;
            let space = find(&file, &space)?;
            let v = parse_vector(file.field, file.ambient, &vector).map_err(argument)?;
            let count = space.count(&v).map_err(op_failure)?;
            Ok(format!("count: {count}\n"))
        }
        Command::Dim { file, space } => {
            let file = load(&file)?;
            let space = find(&file, &space)?;
            Ok(format!("dim: {}\n", mdim(space)))
        }
        Command::Sum { file, spaces, out } => {
            let file = load(&file)?;
            binary_report(&file, "sum", &spaces, out.as_deref(), |a, b| a.sum(b))
        }
        Command::Meet { file, spaces, out } => {
            let file = load(&file)?;
            binary_report(&file, "meet", &spaces, out.as_deref(), |a, b| a.intersect(b))
        }
        Command::Mbasis { file, space } => {
            let file = load(&file)?;
            let space = find(&file, &space)?;
            let basis = find_mbasis(space);
            let mut report = String::new();
            writeln!(report, "basis:{}", row_text(basis.vectors())).unwrap();
            writeln!(report, "counts:{}", count_text(basis.counts())).unwrap();
            writeln!(report, "mdim: {}", mdim(space)).unwrap();
            Ok(report)
        }
        Command::Indep {
            file,
            space,
            vectors,
        } => {
            let file = load(&file)?;
            let space = find(&file, &space)?;
            let xs = parse_vector_list(&file, &vectors)?;
            let verdict = is_multi_linearly_independent(space, &xs).map_err(op_failure)?;
            let mut report = String::new();
            match verdict {
                MultiIndependence::Independent => {
                    writeln!(report, "independent: yes").unwrap();
                }
                MultiIndependence::Violation(w) => {
                    writeln!(report, "independent: no").unwrap();
                    let coefficients = Vector::new(file.field, w.coefficients);
                    writeln!(report, "witness: {coefficients}").unwrap();
                    writeln!(report, "combination: {}", w.combination).unwrap();
                    writeln!(report, "count: {}", w.combination_count).unwrap();
                    writeln!(report, "min count: {}", w.min_count).unwrap();
                }
                MultiIndependence::LinearlyDependent => {
                    writeln!(report, "independent: no").unwrap();
                    // A vanishing combination: coefficients from the
                    // kernel of the vectors-as-columns matrix.
                    let stacked = Matrix::from_row_vectors(file.field, file.ambient, &xs);
                    let kernel = LinearMap::new(stacked.transpose()).kernel();
                    let coefficients = kernel.basis()[0].clone();
                    writeln!(report, "witness: {coefficients}").unwrap();
                    writeln!(report, "combination: {}", Vector::zero(file.field, file.ambient))
                        .unwrap();
                }
            }
            Ok(report)
        }
        Command::CommonMbasis { file, spaces } => {
            let file = load(&file)?;
            let (a, b) = two_names(&spaces)?;
            let left = find(&file, a)?;
            let right = find(&file, b)?;
            let (for_left, for_right) = common_mbasis(left, right).map_err(op_failure)?;
            let mut report = String::new();
            writeln!(report, "basis for {a}:{}", row_text(for_left.vectors())).unwrap();
            writeln!(report, "counts for {a}:{}", count_text(for_left.counts())).unwrap();
            writeln!(report, "basis for {b}:{}", row_text(for_right.vectors())).unwrap();
            writeln!(report, "counts for {b}:{}", count_text(for_right.counts())).unwrap();
            Ok(report)
        }
        Command::Map {
            file,
            space,
            matrix,
            what,
        } => {
            let file = load(&file)?;
            let space = find(&file, &space)?;
            let f = parse_matrix(&file, &matrix)?;
            let mut report = String::new();
            match what {
                MapReport::Image => {
                    let image = map_image(&f, space).map_err(op_failure)?;
                    space_report(&mut report, &image);
                }
                MapReport::Ker => {
                    let part = ker_restrict(&f, space).map_err(op_failure)?;
                    restricted_report(&mut report, &part);
                }
                MapReport::Im => {
                    let part = im_restrict(&f, space).map_err(op_failure)?;
                    restricted_report(&mut report, &part);
                }
                MapReport::RankNullity => {
                    let kernel_part = ker_restrict(&f, space).map_err(op_failure)?;
                    let image_part = im_restrict(&f, space).map_err(op_failure)?;
                    let (lhs, rhs) = rank_nullity_check(&f, space).map_err(op_failure)?;
                    writeln!(report, "kernel mdim: {}", kernel_part.mdim()).unwrap();
                    writeln!(report, "image mdim: {}", image_part.mdim()).unwrap();
                    writeln!(report, "total: {lhs}").unwrap();
                    writeln!(report, "dim: {rhs}").unwrap();
                }
            }
            Ok(report)
        }
        Command::OracleCheck { file } => {
            let file = load(&file)?;
            let Some(p) = file.field.modulus() else {
                return Err(precondition(
                    "oracle checks enumerate the universe and need a finite field".to_string(),
                ));
            };
            Universe::new(p, file.ambient).map_err(op_failure)?;
            let mut report = String::new();
            let mut checks = 0usize;
            let mut tables = Vec::new();
            for (name, space) in &file.spaces {
                let table = space.to_count_function().map_err(op_failure)?;
                if let Some(defect) = oracle_is_mvspace(&table) {
                    return Err(Failure {
                        code: 3,
                        message: format!("space `{name}` is not closed: {defect}"),
                    });
                }
                writeln!(report, "{name}: closed").unwrap();
                checks += 1;
                if p == 2 && file.ambient <= 3 {
                    let by_search = oracle_mdim(&table).map_err(op_failure)?;
                    if by_search != mdim(space) {
                        return Err(Failure {
                            code: 3,
                            message: format!(
                                "space `{name}`: dimension routes disagree ({by_search} vs {})",
                                mdim(space)
                            ),
                        });
                    }
                    writeln!(report, "dim {name}: agree").unwrap();
                    checks += 1;
                }
                tables.push((name.clone(), space, table));
            }
            for i in 0..tables.len() {
                for j in (i + 1)..tables.len() {
                    let (a, sa, ta) = &tables[i];
                    let (b, sb, tb) = &tables[j];
                    let sum_by_chain = sa.sum(sb).map_err(op_failure)?;
                    let sum_by_table = oracle_sum(ta, tb).map_err(op_failure)?;
                    if sum_by_chain.to_count_function().map_err(op_failure)? != sum_by_table {
                        return Err(Failure {
                            code: 3,
                            message: format!("sum routes disagree for `{a}`, `{b}`"),
                        });
                    }
                    writeln!(report, "sum {a} {b}: agree").unwrap();
                    checks += 1;
                    let meet_by_chain = sa.intersect(sb).map_err(op_failure)?;
                    let meet_by_table = ta.intersection(tb).map_err(op_failure)?;
                    if meet_by_chain.to_count_function().map_err(op_failure)? != meet_by_table {
                        return Err(Failure {
                            code: 3,
                            message: format!("meet routes disagree for `{a}`, `{b}`"),
                        });
                    }
                    writeln!(report, "meet {a} {b}: agree").unwrap();
                    checks += 1;
                }
            }
            writeln!(report, "checks: {checks}").unwrap();
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
