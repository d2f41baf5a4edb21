//! Command-line front end. [`run`] parses arguments, dispatches, prints the
//! result and returns the process exit code:
//! 0 on success, 1 if an inequality is violated, 2 on malformed input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cheeger_core::cheeger::cheeger;
use cheeger_core::geometry::{ConvexPolygon, ShapeJson};
use cheeger_core::search::{maximize_wh, wh_bound, SearchConfig};
use cheeger_core::verify::{
    asymmetry, shape_report, stability_constant, sweep_rectangles, sweep_sharpness, sweeps_to_csv, theorem_name,
    verify_corpus, AsymmetryOptions, CorpusParams, StabilityParams, MARGIN_TOL,
};
use cheeger_core::{GeomError, Polygon, Pose};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cheeger", version, about = "Width and Cheeger constant of convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scalar functionals and inequality margins of one shape.
    Report {
        #[arg(long)]
        shape: PathBuf,
        /// Also measure the Hausdorff-width asymmetry.
        #[arg(long)]
        asymmetry: bool,
    },
    /// Check every inequality on a random polygon corpus.
    Verify {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Deficit threshold for the stability check.
        #[arg(long)]
        eta: Option<f64>,
        /// Constant of the quantitative Pal inequality.
        #[arg(long)]
        c2: Option<f64>,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        /// Skip the asymmetry and stability measurements.
        #[arg(long)]
        no_asymmetry: bool,
        /// Per-shape CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Tabulate a parametrized family against its closed forms.
    Sweep {
        family: Family,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Parameter values; defaults to eps = 2^-3..2^-10 or L = 2, 4, ..., 512.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<f64>>,
    },
    /// Hausdorff-width asymmetry and a realizing equilateral triangle.
    Asymmetry {
        #[arg(long)]
        shape: PathBuf,
    },
    /// Hill-climb `w h` over convex polygons.
    Optimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20_000)]
        iters: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        /// Accepted-move trajectory CSV of the winning restart.
        #[arg(long)]
        trajectory: Option<PathBuf>,
    },
    /// Draw the shape and its Cheeger set as SVG.
    CheegerSet {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Reps,
    Rectangles,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::input(e.to_string())
    }
}

/// What a command produced: text for stdout plus violation messages.
struct Output {
    stdout: String,
    violations: Vec<String>,
}

impl Output {
    fn clean(stdout: String) -> Self {
        Self {
            stdout,
            violations: Vec::new(),
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            for v in &out.violations {
                eprintln!("violation: {v}");
            }
            if out.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Report { shape, asymmetry } => report(&shape, asymmetry),
        Command::Verify {
            count,
            seed,
            eta,
            c2,
            max_vertices,
            no_asymmetry,
            csv,
        } => verify(count, seed, eta, c2, max_vertices, !no_asymmetry, csv.as_deref()),
        Command::Sweep { family, out, params } => sweep(family, out.as_deref(), params),
        Command::Asymmetry { shape } => asym(&shape),
        Command::Optimize {
            n,
            seed,
            iters,
            restarts,
            trajectory,
        } => optimize(n, seed, iters, restarts, trajectory.as_deref()),
        Command::CheegerSet { shape, out } => cheeger_set(&shape, &out),
    }
}

fn load_shape(path: &Path) -> Result<Polygon, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let json: ShapeJson =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if json.vertices.iter().flatten().any(|c| !c.is_finite()) {
        return Err(Failure::input(format!("{}: non-finite coordinate", path.display())));
    }
    Ok(json.to_polygon::<f64>()?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn vertices_json(v: &[[f64; 2]]) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn violation(check: &str, margin: f64, vertices: &[[f64; 2]]) -> String {
    format!(
        "{} (margin {margin}) for vertices {}",
        theorem_name(check),
        vertices_json(vertices)
    )
}

fn report(path: &Path, with_asym: bool) -> Result<Output, Failure> {
    let p = load_shape(path)?;
    let rep = shape_report(&p, with_asym);
    let xy = p.to_xy();
    let violations = rep
        .margins
        .iter()
        .filter(|(_, m)| **m < -MARGIN_TOL)
        .map(|(k, m)| violation(k, *m, &xy))
        .collect();
    Ok(Output {
        stdout: to_json(&rep),
        violations,
    })
}

fn verify(
    count: usize,
    seed: u64,
    eta: Option<f64>,
    c2: Option<f64>,
    max_vertices: usize,
    with_asymmetry: bool,
    csv: Option<&Path>,
) -> Result<Output, Failure> {
    if count == 0 {
        return Err(Failure::input("--count must be positive"));
    }
    if max_vertices < 3 {
        return Err(Failure::input("--max-vertices must be at least 3"));
    }
    let stability = match (eta, c2) {
        (None, None) => StabilityParams::admissible_default(),
        _ => {
            let d = StabilityParams::admissible_default();
            stability_constant(eta.unwrap_or(d.eta), c2.unwrap_or(d.c2))?
        }
    };
    let params = CorpusParams {
        stability,
        max_vertices,
        with_asymmetry,
        ..CorpusParams::default()
    };
    let rep = verify_corpus(count, seed, &params);
    if let Some(path) = csv {
        write_file(path, &rep.to_csv())?;
    }
    let violations = rep
        .violations
        .iter()
        .map(|v| format!("shape {}: {}", v.index, violation(&v.check, v.margin, &v.vertices)))
        .collect();

    // Per-shape rows go to the CSV; the summary keeps stdout small.
    #[derive(Serialize)]
    struct Summary<'a> {
        count: usize,
        seed: u64,
        params: &'a CorpusParams,
        min_margins: &'a std::collections::BTreeMap<String, f64>,
        max_cheeger_consistency: f64,
        violations: &'a [cheeger_core::verify::Violation],
        max_alpha_over_delta: Option<f64>,
        stability_shortfalls: usize,
    }
    let summary = Summary {
        count: rep.count,
        seed: rep.seed,
        params: &rep.params,
        min_margins: &rep.min_margins,
        max_cheeger_consistency: rep.max_cheeger_consistency,
        violations: &rep.violations,
        max_alpha_over_delta: rep.max_alpha_over_delta,
        stability_shortfalls: rep.stability_shortfalls,
    };
    Ok(Output {
        stdout: to_json(&summary),
        violations,
    })
}

fn sweep(family: Family, out: Option<&Path>, params: Option<Vec<f64>>) -> Result<Output, Failure> {
    let records = match family {
        Family::Reps => {
            let eps = params.unwrap_or_else(|| (3..=10).map(|k| 2f64.powi(-k)).collect());
            sweep_sharpness(&eps)?
        }
        Family::Rectangles => {
            let ls = params.unwrap_or_else(|| (1..=9).map(|k| 2f64.powi(k)).collect());
            sweep_rectangles(&ls)?
        }
    };
    let csv = sweeps_to_csv(&records);
    match out {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(Output::clean(to_json(&records)))
        }
        None => Ok(Output::clean(csv)),
    }
}

fn asym(path: &Path) -> Result<Output, Failure> {
    let p = load_shape(path)?;
    let (value, pose) = asymmetry(&p, &AsymmetryOptions::default());
    #[derive(Serialize)]
    struct Asym {
        asymmetry: f64,
        pose: Pose,
        triangle: ShapeJson,
    }
    let triangle: Vec<[f64; 2]> = pose.vertices().iter().map(|v| [v.x, v.y]).collect();
    Ok(Output::clean(to_json(&Asym {
        asymmetry: value,
        pose,
        triangle: ShapeJson { vertices: triangle },
    })))
}

fn optimize(n: usize, seed: u64, iters: usize, restarts: usize, trajectory: Option<&Path>) -> Result<Output, Failure> {
    let cfg = SearchConfig::new(n, iters, seed, restarts);
    let res = maximize_wh(&cfg)?;
    if let Some(path) = trajectory {
        write_file(path, &res.trajectory_csv())?;
    }
    let mut violations = Vec::new();
    if res.max_accepted > wh_bound() {
        violations.push(violation(
            cheeger_core::verify::MAIN,
            wh_bound() - res.max_accepted,
            &res.best_shape.vertices,
        ));
    }
    Ok(Output {
        stdout: to_json(&res),
        violations,
    })
}

fn cheeger_set(path: &Path, out: &Path) -> Result<Output, Failure> {
    let p = load_shape(path)?;
    let c = cheeger(&p);
    write_file(out, &render_svg(&p, &c.cheeger_set.core, c.r_star))?;
    #[derive(Serialize)]
    struct Summary {
        h: f64,
        r_star: f64,
        core: ShapeJson,
    }
    Ok(Output::clean(to_json(&Summary {
        h: c.h,
        r_star: c.r_star,
        core: ShapeJson::from(&c.cheeger_set.core),
    })))
}

/// Schematic SVG: the polygon as a closed polyline and the Cheeger set as
/// offset edges joined by circular arcs. Model coordinates are kept and the
/// y axis is flipped by a group transform.
fn render_svg(p: &ConvexPolygon<f64>, core: &ConvexPolygon<f64>, r: f64) -> String {
    let xs = p.vertices().iter().map(|v| v.x);
    let ys = p.vertices().iter().map(|v| v.y);
    let (x0, x1) = (xs.clone().fold(f64::INFINITY, f64::min), xs.fold(f64::NEG_INFINITY, f64::max));
    let (y0, y1) = (ys.clone().fold(f64::INFINITY, f64::min), ys.fold(f64::NEG_INFINITY, f64::max));
    let pad = 0.05 * (x1 - x0).max(y1 - y0);
    let stroke = 0.004 * (x1 - x0).max(y1 - y0);

    let mut outline = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let _ = write!(outline, "{}{} {} ", if i == 0 { "M" } else { "L" }, v.x, v.y);
    }
    outline.push('Z');

    let n = core.len();
    let shift = |i: usize, e: usize| core.vertex(i) + core.edge_normal(e) * r;
    let start = shift(0, n - 1);
    let mut set = format!("M{} {} ", start.x, start.y);
    for i in 0..n {
        let a = shift(i, i);
        let b = shift(i + 1, i);
        let _ = write!(set, "A{r} {r} 0 0 1 {} {} L{} {} ", a.x, a.y, b.x, b.y);
    }
    set.push('Z');

    format!(
        concat!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{vx} {vy} {vw} {vh}\">\n",
            "<g transform=\"scale(1,-1)\" stroke-width=\"{sw}\">\n",
            "<path d=\"{outline}\" fill=\"none\" stroke=\"black\"/>\n",
            "<path d=\"{set}\" fill=\"steelblue\" fill-opacity=\"0.35\" stroke=\"steelblue\"/>\n",
            "</g>\n</svg>\n"
        ),
        vx = x0 - pad,
        vy = -(y1 + pad),
        vw = x1 - x0 + 2.0 * pad,
        vh = y1 - y0 + 2.0 * pad,
        sw = stroke,
        outline = outline,
        set = set,
    )
}
