use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cell24_kirby::census::{parse_census, run_census};
use cell24_kirby::geometry::{self, parse_radius, write_svg, PlaneClass, RenderOptions};
use cell24_kirby::pairing::PairingScheme;
use cell24_kirby::report::{pairing_rows, ReportRecord, Sections};

const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "cell24-kirby",
    version,
    about = "Kirby diagrams from 24-cell side-pairing codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the twelve side pairings and their k-parts.
    Decode {
        code: String,
        #[arg(long)]
        json: bool,
    },
    /// Handle counts, 2-handle cycles and 3-handle orbits as JSON.
    Handles { code: String },
    /// Combinatorial validity checks as JSON.
    Validate { code: String },
    /// Planar framing certificate as JSON.
    Framing { code: String },
    /// Write SVG panels.
    Diagram {
        code: String,
        /// xy, xz, yz, special or all.
        #[arg(long, default_value = "all")]
        plane: String,
        /// Output file, or directory for `--plane all`. A single panel goes
        /// to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "1/8")]
        radius: String,
        /// View direction for the special panel, as "x,y,z".
        #[arg(long, default_value = "1,1,1")]
        view: String,
        #[arg(long)]
        triangles: bool,
        #[arg(long)]
        no_labels: bool,
    },
    /// Batch report for a census file of `[id] CODE` lines.
    Census {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the framing certificates.
        #[arg(long)]
        no_framing: bool,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn parse(code: &str) -> Result<PairingScheme, ExitCode> {
    PairingScheme::parse(code).map_err(|e| fail(EXIT_PARSE, format!("{code}: {e}")))
}

/// Stdout write that treats a closed pipe as success.
fn put(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn emit(json: &str, out: Option<&Path>) -> Result<(), ExitCode> {
    match out {
        Some(p) => std::fs::write(p, format!("{json}\n"))
            .map_err(|e| fail(EXIT_IO, format!("{}: {e}", p.display()))),
        None => {
            put(&format!("{json}\n"));
            Ok(())
        }
    }
}

fn record(code: &str, sections: Sections) -> ExitCode {
    let scheme = match parse(code) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let rec = ReportRecord::build(&scheme, sections);
    let json = serde_json::to_string_pretty(&rec).expect("report serializes");
    if let Err(e) = emit(&json, None) {
        return e;
    }
    if !rec.is_valid() {
        if let Some(f) = rec.validity.as_ref().and_then(|v| v.failure.as_ref()) {
            eprintln!("invalid: {f}");
        }
        return ExitCode::from(EXIT_INVALID);
    }
    ExitCode::SUCCESS
}

fn parse_view(s: &str) -> Option<[f64; 3]> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse().ok())
        .collect::<Option<_>>()?;
    let v: [f64; 3] = v.try_into().ok()?;
    (v.iter().all(|x| x.is_finite()) && v.iter().any(|&x| x != 0.0)).then_some(v)
}

fn diagram(
    code: &str,
    plane: &str,
    out: Option<PathBuf>,
    radius: &str,
    view: &str,
    triangles: bool,
    no_labels: bool,
) -> ExitCode {
    let scheme = match parse(code) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let planes: Vec<PlaneClass> = if plane.eq_ignore_ascii_case("all") {
        PlaneClass::ALL.to_vec()
    } else {
        match plane.parse() {
            Ok(p) => vec![p],
            Err(e) => return fail(EXIT_PARSE, e),
        }
    };
    let radius = match parse_radius(radius) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_PARSE, e),
    };
    let Some(view) = parse_view(view) else {
        return fail(EXIT_PARSE, format!("bad view direction {view:?}"));
    };
    let validity = cell24_kirby::handles::validate(&scheme);
    let scene = match geometry::scene(&scheme, radius) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    let options = RenderOptions {
        view,
        show_labels: !no_labels,
        show_triangles: triangles,
        ..RenderOptions::default()
    };
    let file_name = |p: PlaneClass| format!("{}_{}.svg", scheme.code(), p);
    if planes.len() == 1 {
        let p = planes[0];
        match out {
            Some(path) => {
                if let Err(e) = write_svg(&scene, p, &options, &path) {
                    return fail(EXIT_IO, e);
                }
            }
            None => put(&geometry::render_svg(&scene, p, &options)),
        }
    } else {
        let dir = out.unwrap_or_else(|| PathBuf::from("."));
        if let Err(e) = std::fs::create_dir_all(&dir) {
            return fail(EXIT_IO, format!("{}: {e}", dir.display()));
        }
        for p in planes {
            let path = dir.join(file_name(p));
            if let Err(e) = write_svg(&scene, p, &options, &path) {
                return fail(EXIT_IO, e);
            }
            eprintln!("wrote {}", path.display());
        }
    }
    if validity.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVALID)
    }
}

fn census(file: &Path, out: Option<&Path>, no_framing: bool) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_PARSE, format!("{}: {e}", file.display())),
    };
    let sections = Sections {
        pairings: false,
        handles: true,
        framing: !no_framing,
    };
    let report = run_census(&parse_census(&text), sections);
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Err(e) = emit(&json, out) {
        return e;
    }
    let s = &report.summary;
    eprintln!(
        "{} entries: {} valid, {} invalid ({} parse errors), {} orientable",
        s.entries, s.valid, s.invalid, s.parse_errors, s.orientable
    );
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Decode { code, json } => {
            let scheme = match parse(&code) {
                Ok(s) => s,
                Err(e) => return e,
            };
            let rows = pairing_rows(&scheme);
            if json {
                put(&format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rows).expect("rows serialize")
                ));
            } else {
                let lines: String = rows.iter().map(|r| r.line() + "\n").collect();
                put(&lines);
            }
            ExitCode::SUCCESS
        }
        Command::Handles { code } => record(
            &code,
            Sections {
                pairings: true,
                handles: true,
                framing: false,
            },
        ),
        Command::Validate { code } => record(&code, Sections::NONE),
        Command::Framing { code } => record(
            &code,
            Sections {
                pairings: false,
                handles: false,
                framing: true,
            },
        ),
        Command::Diagram {
            code,
            plane,
            out,
            radius,
            view,
            triangles,
            no_labels,
        } => diagram(&code, &plane, out, &radius, &view, triangles, no_labels),
        Command::Census {
            file,
            out,
            no_framing,
        } => census(&file, out.as_deref(), no_framing),
    }
}
