//! Command-line interface: builds Farey complexes, manipulates paths,
//! friezes, and tiling windows, and runs the lifting pipeline. All output is
//! deterministic; see `--help` on each subcommand.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use farey_core::complex::{build_complex_with_cap, genus_and_cusps, ExportFormat, Pair, SL2Matrix};
use farey_core::frieze::{
    count_friezes_brute_force, count_friezes_formula, frieze_from_path, realize_quiddity,
    semiregular_from_cyclic_quiddity, tiling_from_paths, Frieze, FriezeKind, TilingWindow,
};
use farey_core::lifting::{
    is_strongly_contractible_with_budget, lift_closed_path_with_budget, lift_frieze_with_budget,
    lift_matrix, lift_path_positive, lift_tiling_positive, LiftOutcome, Obstruction,
};
use farey_core::paths::{
    itinerary, lift_path, make_twisted, path_from_itinerary, Path, TwistedPath,
};
use farey_core::ring::{make_ring, split_top_level, Elem, Ring, RingDescriptor, UnitSubgroup};
use farey_core::selftest;

#[derive(Parser)]
#[command(
    name = "farey",
    version,
    about = "Farey complexes, friezes, and SL2-tilings over finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Farey complexes: construction, diameter, surface check, exports.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Paths and itineraries.
    #[command(subcommand)]
    Path(PathCmd),
    /// Friezes: construction, extension, counting.
    #[command(subcommand)]
    Frieze(FriezeCmd),
    /// SL2-tiling windows.
    #[command(subcommand)]
    Tiling(TilingCmd),
    /// Lifting from Z/NZ to Z.
    #[command(subcommand)]
    Lift(LiftCmd),
    /// Run the built-in verification suite (one line per criterion).
    Selftest {
        /// Run a single criterion (AC1..AC10).
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct RingArgs {
    /// Ring: "z6", "gf4", "gf8:1+x+x^3", "z2xz3", or a JSON descriptor.
    #[arg(long)]
    ring: String,
}

#[derive(Args)]
struct UnitArgs {
    /// Unit group: "one", "pm1", "all", or a comma-separated element list.
    #[arg(long, default_value = "pm1")]
    units: String,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Build the complex and print a summary.
    Build {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        units: UnitArgs,
        #[arg(long, default_value = "text")]
        format: String,
        /// Abort if the vertex count would exceed this cap.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Maximum over ordered vertex pairs of the shortest path length.
    Diameter {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        units: UnitArgs,
    },
    /// Decide the surface-complex property (requires -1 in the units).
    Surface {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        units: UnitArgs,
    },
    /// Export as DOT, JSON, or OFF.
    Export {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        units: UnitArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Genus and cusp count of the level-N modular surface.
    Genus {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum PathCmd {
    /// Itinerary of a path in E_R.
    Itinerary {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated fraction tokens, e.g. "1/0,0/1,4/3".
        #[arg(long)]
        path: String,
    },
    /// Rebuild the path through a start edge from itinerary entries.
    FromItinerary {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated ring elements.
        #[arg(long)]
        entries: String,
        /// Start edge "a/b,c/d" (default the standard edge 1/0,0/1).
        #[arg(long)]
        edge: Option<String>,
    },
    /// Lift a path from F_{R,U} to E_R.
    Lift {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        units: UnitArgs,
        #[arg(long)]
        path: String,
        /// Initial lift of the first vertex (default: its representative).
        #[arg(long)]
        at: Option<String>,
    },
}

#[derive(Subcommand)]
enum FriezeCmd {
    /// Frieze generated by a twisted path (endpoints equivalent).
    FromPath {
        #[command(flatten)]
        ring: RingArgs,
        /// Units of the ambient complex of the input path.
        #[arg(long, default_value = "one")]
        units: String,
        #[arg(long)]
        path: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Realize a quiddity sequence over the ring.
    FromQuiddity {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated ring elements.
        #[arg(long)]
        quiddity: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Window of the unique tame SL2-tiling extension.
    Extend {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "one")]
        units: String,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        quiddity: Option<String>,
        /// Inclusive row range "i0:i1".
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        rows: String,
        /// Inclusive column range "j0:j1".
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        cols: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Count tame friezes over the field of order q.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        /// all | semiregular | regular
        #[arg(long, default_value = "all")]
        kind: String,
        /// formula | brute_force | both
        #[arg(long, default_value = "both")]
        method: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Validate frieze data and report its structure.
    Check {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, default_value = "one")]
        units: String,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        quiddity: Option<String>,
    },
}

#[derive(Subcommand)]
enum TilingCmd {
    /// Window of the tiling built from two twisted paths in E_R.
    FromPaths {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        rows: String,
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        cols: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check the 3x3-determinant condition on a CSV window.
    Tame {
        #[command(flatten)]
        ring: RingArgs,
        /// CSV file of entries (stdin when omitted).
        #[arg(long)]
        file: Option<String>,
    },
    /// Extract the row and column recurrences of a tame CSV window.
    Recurrences {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        file: Option<String>,
    },
}

#[derive(Subcommand)]
enum LiftCmd {
    /// Lift a matrix in SL2(Z/NZ) to SL2(Z).
    Matrix {
        #[command(flatten)]
        ring: RingArgs,
        /// Matrix "a,b;c,d".
        #[arg(long)]
        matrix: String,
    },
    /// Positive integer lift of a path in E_N.
    Path {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        path: String,
    },
    /// Positive integer lift of a tiling window.
    Tiling {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        delta: String,
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        rows: String,
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        cols: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Decide liftability of a semiregular frieze over Z/NZ and lift it.
    Frieze {
        #[command(flatten)]
        ring: RingArgs,
        /// Twisted path in F_N (or E_N) corresponding to the frieze.
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        quiddity: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide strong contractibility of a closed path in F_N.
    Contractible {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        path: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

type CmdResult = Result<(), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Expands ring shorthands: "z6", "gf9", "gf8:1+x+x^3", "z2xz3", or JSON.
fn parse_ring(spec: &str) -> Result<Ring, String> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        let desc: RingDescriptor = serde_json::from_str(spec).map_err(err)?;
        return make_ring(&desc).map_err(err);
    }
    // Product shorthand: zNxzM(xzK...).
    let parts: Vec<&str> = spec.split('x').collect();
    if parts.len() > 1 && parts.iter().all(|p| is_zmod_token(p)) {
        let factors = parts
            .iter()
            .map(|p| RingDescriptor::Zmod {
                n: p[1..].parse().unwrap(),
            })
            .collect();
        return make_ring(&RingDescriptor::Product { factors }).map_err(err);
    }
    if let Some(n) = spec.strip_prefix('z').and_then(|s| s.parse::<u64>().ok()) {
        return make_ring(&RingDescriptor::Zmod { n }).map_err(err);
    }
    if let Some(rest) = spec.strip_prefix("gf") {
        let (q_str, poly) = match rest.split_once(':') {
            Some((q, p)) => (q, Some(p)),
            None => (rest, None),
        };
        let q: u64 = q_str
            .parse()
            .map_err(|_| format!("bad field order in {spec:?}"))?;
        let p = smallest_prime_factor(q)
            .ok_or_else(|| format!("field order must be >= 2 in {spec:?}"))?;
        let mut k = 0u32;
        let mut m = q;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        if m != 1 {
            return Err(format!("{q} is not a prime power"));
        }
        if k == 1 {
            return make_ring(&RingDescriptor::Zmod { n: p }).map_err(err);
        }
        let coeffs = match poly {
            Some(p_str) => parse_poly_tokens(p_str, p)?,
            None => default_poly(q)
                .ok_or_else(|| format!("no default modulus for GF({q}); pass gf{q}:<poly>"))?,
        };
        return make_ring(&RingDescriptor::Quotient {
            base: Box::new(RingDescriptor::Zmod { n: p }),
            poly: coeffs,
        })
        .map_err(err);
    }
    Err(format!("cannot parse ring {spec:?}"))
}

fn is_zmod_token(s: &str) -> bool {
    s.len() > 1 && s.starts_with('z') && s[1..].chars().all(|c| c.is_ascii_digit())
}

fn smallest_prime_factor(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            return Some(p);
        }
        p += 1;
    }
    Some(q)
}

/// Default irreducible moduli (coefficients low-to-high) for small fields.
fn default_poly(q: u64) -> Option<Vec<u64>> {
    match q {
        4 => Some(vec![1, 1, 1]),        // x^2 + x + 1
        8 => Some(vec![1, 1, 0, 1]),     // x^3 + x + 1
        9 => Some(vec![1, 0, 1]),        // x^2 + 1
        16 => Some(vec![1, 1, 0, 0, 1]), // x^4 + x + 1
        25 => Some(vec![3, 0, 1]),       // x^2 + 3
        27 => Some(vec![1, 2, 0, 1]),    // x^3 + 2x + 1
        _ => None,
    }
}

fn parse_poly_tokens(s: &str, base: u64) -> Result<Vec<u64>, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<u64> = Vec::new();
    for term in s.split('+') {
        let (c, k): (u64, usize) = if let Some(idx) = term.find("x^") {
            let c = if idx == 0 {
                1
            } else {
                term[..idx].parse().map_err(err)?
            };
            (c, term[idx + 2..].parse().map_err(err)?)
        } else if let Some(rest) = term.strip_suffix('x') {
            let c = if rest.is_empty() {
                1
            } else {
                rest.parse().map_err(err)?
            };
            (c, 1)
        } else {
            (term.parse().map_err(err)?, 0)
        };
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] = (coeffs[k] + c) % base;
    }
    Ok(coeffs)
}

fn parse_units(ring: &Ring, spec: &str) -> Result<UnitSubgroup, String> {
    match spec {
        "one" => Ok(UnitSubgroup::trivial(ring)),
        "pm1" => Ok(UnitSubgroup::pm_one(ring)),
        "all" => UnitSubgroup::full(ring).map_err(err),
        list => {
            let gens = split_top_level(list, ',')
                .iter()
                .map(|t| ring.parse_elem(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            UnitSubgroup::generated(ring, &gens).map_err(err)
        }
    }
}

fn parse_vertex(ring: &Ring, token: &str) -> Result<Pair, String> {
    let parts = split_top_level(token.trim(), '/');
    if parts.len() != 2 {
        return Err(format!("vertex token {token:?} is not of the form a/b"));
    }
    Ok((
        ring.parse_elem(parts[0]).map_err(err)?,
        ring.parse_elem(parts[1]).map_err(err)?,
    ))
}

fn parse_path(ring: &Ring, units: &UnitSubgroup, spec: &str) -> Result<Path, String> {
    let verts = split_top_level(spec, ',')
        .iter()
        .map(|t| parse_vertex(ring, t))
        .collect::<Result<Vec<_>, _>>()?;
    Path::new(ring, units, verts).map_err(err)
}

fn parse_twisted_e_path(ring: &Ring, spec: &str) -> Result<TwistedPath, String> {
    let path = parse_path(ring, &UnitSubgroup::trivial(ring), spec)?;
    make_twisted(path).map_err(err)
}

fn parse_range(spec: &str) -> Result<(i64, i64), String> {
    let (a, b) = spec
        .split_once(':')
        .ok_or_else(|| format!("range {spec:?} is not of the form a:b"))?;
    let lo: i64 = a.trim().parse().map_err(err)?;
    let hi: i64 = b.trim().parse().map_err(err)?;
    if lo > hi {
        return Err(format!("empty range {spec:?}"));
    }
    Ok((lo, hi))
}

fn format_path(path: &Path) -> String {
    path.format_vertices().join(",")
}

fn budget_from(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("FAREY_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(farey_core::lifting::DEFAULT_SEARCH_BUDGET)
}

/// Frieze from CLI input: either a twisted path (lifted to E_R if the given
/// units are non-trivial) or a quiddity tuple interpreted cyclically.
fn frieze_from_args(
    ring: &Ring,
    units_spec: &str,
    path: Option<&str>,
    quiddity: Option<&str>,
) -> Result<Frieze, String> {
    match (path, quiddity) {
        (Some(p), None) => {
            let units = parse_units(ring, units_spec)?;
            let path = parse_path(ring, &units, p)?;
            let e_path = if units.is_trivial() {
                path
            } else {
                let start = path.vertices()[0].clone();
                lift_path(&path, &start).map_err(err)?
            };
            let twisted = make_twisted(e_path).map_err(err)?;
            frieze_from_path(&twisted).map_err(err)
        }
        (None, Some(q)) => {
            let entries = split_top_level(q, ',')
                .iter()
                .map(|t| ring.parse_elem(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            match semiregular_from_cyclic_quiddity(ring, &entries).map_err(err)? {
                Some(f) => Ok(f),
                // Not a closed tuple: realize it by repetition instead.
                None => realize_quiddity(ring, &entries).map_err(err),
            }
        }
        _ => Err("pass exactly one of --path or --quiddity".into()),
    }
}

fn print_frieze(f: &Frieze, format: &str) -> CmdResult {
    let ring = f.ring();
    match format {
        "json" => {
            let q: Vec<String> = f.quiddity().iter().map(|e| ring.format_elem(e)).collect();
            let v = serde_json::json!({
                "ring": ring.descriptor(),
                "width": f.width(),
                "alpha": ring.format_elem(f.alpha()),
                "beta": ring.format_elem(&f.beta()),
                "twist": ring.format_elem(&f.twist()),
                "period": f.period(),
                "semiregular": f.is_semiregular(),
                "regular": f.is_regular(),
                "quasiregular": f.is_quasiregular(),
                "quiddity": q,
                "path": f.generating_path().to_json(),
            });
            println!("{}", serde_json::to_string_pretty(&v).map_err(err)?);
        }
        "text" => {
            let q: Vec<String> = f.quiddity().iter().map(|e| ring.format_elem(e)).collect();
            println!(
                "width={} alpha={} beta={} twist={} period={} regular={}",
                f.width(),
                ring.format_elem(f.alpha()),
                ring.format_elem(&f.beta()),
                ring.format_elem(&f.twist()),
                f.period(),
                f.is_regular()
            );
            println!("quiddity: {}", q.join(","));
            let x1 = 2 * (f.period() as i64) + f.width() as i64;
            println!("{}", f.render_diamond(0, x1));
        }
        other => return Err(format!("unsupported format {other:?}")),
    }
    Ok(())
}

fn print_window(w: &TilingWindow, format: &str) -> CmdResult {
    match format {
        "text" => println!("{}", w.render()),
        "csv" => println!("{}", w.to_csv()),
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&w.to_json()).map_err(err)?
        ),
        other => return Err(format!("unsupported format {other:?}")),
    }
    Ok(())
}

fn read_window(ring: &Ring, file: Option<&str>) -> Result<TilingWindow, String> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path).map_err(err)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(err)?;
            buf
        }
    };
    let entries = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            split_top_level(line, ',')
                .iter()
                .map(|t| ring.parse_elem(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)
        })
        .collect::<Result<Vec<_>, _>>()?;
    TilingWindow::from_entries(ring, 0, 0, entries).map_err(err)
}

fn require_zmod(ring: &Ring) -> Result<u64, String> {
    match ring.descriptor() {
        RingDescriptor::Zmod { n } => Ok(n),
        _ => Err("this command requires a ring of the form Z/NZ (e.g. --ring z6)".into()),
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Complex(cmd) => run_complex(cmd),
        Command::Path(cmd) => run_path(cmd),
        Command::Frieze(cmd) => run_frieze(cmd),
        Command::Tiling(cmd) => run_tiling(cmd),
        Command::Lift(cmd) => run_lift(cmd),
        Command::Selftest { only } => run_selftest(only),
    }
}

fn run_complex(cmd: ComplexCmd) -> CmdResult {
    match cmd {
        ComplexCmd::Build {
            ring,
            units,
            format,
            cap,
        } => {
            let r = parse_ring(&ring.ring)?;
            let u = parse_units(&r, &units.units)?;
            let c = build_complex_with_cap(&r, &u, cap).map_err(err)?;
            match format.as_str() {
                "json" => {
                    let v = serde_json::json!({
                        "ring": r.descriptor(),
                        "vertices": c.vertex_count(),
                        "directed_edges": c.directed_edge_count(),
                        "faces": c.faces().len(),
                        "undirected": c.is_undirected(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).map_err(err)?);
                }
                _ => println!(
                    "ring={} units={} vertices={} directed_edges={} faces={} undirected={}",
                    r.name(),
                    u.len(),
                    c.vertex_count(),
                    c.directed_edge_count(),
                    c.faces().len(),
                    c.is_undirected()
                ),
            }
            Ok(())
        }
        ComplexCmd::Diameter { ring, units } => {
            let r = parse_ring(&ring.ring)?;
            let u = parse_units(&r, &units.units)?;
            let c = build_complex_with_cap(&r, &u, 1_000_000).map_err(err)?;
            println!("{}", c.diameter().map_err(err)?);
            Ok(())
        }
        ComplexCmd::Surface { ring, units } => {
            let r = parse_ring(&ring.ring)?;
            let u = parse_units(&r, &units.units)?;
            let c = build_complex_with_cap(&r, &u, 1_000_000).map_err(err)?;
            match c.surface_violation().map_err(err)? {
                None => println!("true"),
                Some(v) => {
                    println!("false");
                    match v {
                        farey_core::complex::SurfaceViolation::EdgeFaceCount { edge, count } => {
                            println!(
                                "violation: edge {}--{} lies on {count} faces",
                                c.format_vertex(edge.0),
                                c.format_vertex(edge.1)
                            );
                        }
                        farey_core::complex::SurfaceViolation::LinkNotConnected {
                            vertex,
                            from,
                            to,
                        } => {
                            println!(
                                "violation: no face fan at {} connects {} to {}",
                                c.format_vertex(vertex),
                                c.format_vertex(from),
                                c.format_vertex(to)
                            );
                        }
                    }
                }
            }
            Ok(())
        }
        ComplexCmd::Export {
            ring,
            units,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            let u = parse_units(&r, &units.units)?;
            let c = build_complex_with_cap(&r, &u, 1_000_000).map_err(err)?;
            let fmt: ExportFormat = format.parse().map_err(err)?;
            print!("{}", c.export(fmt).map_err(err)?);
            Ok(())
        }
        ComplexCmd::Genus { n, format } => {
            if n < 2 {
                return Err("level must be at least 2".into());
            }
            let (genus, cusps) = genus_and_cusps(n);
            if format == "json" {
                println!("{}", serde_json::json!({"genus": genus, "cusps": cusps}));
            } else {
                println!("genus={genus} cusps={cusps}");
            }
            Ok(())
        }
    }
}

fn run_path(cmd: PathCmd) -> CmdResult {
    match cmd {
        PathCmd::Itinerary { ring, path } => {
            let r = parse_ring(&ring.ring)?;
            let p = parse_path(&r, &UnitSubgroup::trivial(&r), &path)?;
            let its = itinerary(&p).map_err(err)?;
            let tokens: Vec<String> = its.iter().map(|e| r.format_elem(e)).collect();
            println!("{}", tokens.join(","));
            Ok(())
        }
        PathCmd::FromItinerary {
            ring,
            entries,
            edge,
        } => {
            let r = parse_ring(&ring.ring)?;
            let entries = split_top_level(&entries, ',')
                .iter()
                .map(|t| r.parse_elem(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let (v0, v1) = match edge {
                Some(e) => {
                    let parts = split_top_level(&e, ',');
                    if parts.len() != 2 {
                        return Err("edge must be two vertices \"a/b,c/d\"".into());
                    }
                    (parse_vertex(&r, parts[0])?, parse_vertex(&r, parts[1])?)
                }
                None => ((r.one(), r.zero()), (r.zero(), r.one())),
            };
            let p = path_from_itinerary(&r, (&v0, &v1), &entries).map_err(err)?;
            println!("{}", format_path(&p));
            Ok(())
        }
        PathCmd::Lift {
            ring,
            units,
            path,
            at,
        } => {
            let r = parse_ring(&ring.ring)?;
            let u = parse_units(&r, &units.units)?;
            let p = parse_path(&r, &u, &path)?;
            let start = match at {
                Some(token) => parse_vertex(&r, &token)?,
                None => p.vertices()[0].clone(),
            };
            let lifted = lift_path(&p, &start).map_err(err)?;
            println!("{}", format_path(&lifted));
            Ok(())
        }
    }
}

fn run_frieze(cmd: FriezeCmd) -> CmdResult {
    match cmd {
        FriezeCmd::FromPath {
            ring,
            units,
            path,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            let f = frieze_from_args(&r, &units, Some(&path), None)?;
            print_frieze(&f, &format)
        }
        FriezeCmd::FromQuiddity {
            ring,
            quiddity,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            let f = frieze_from_args(&r, "one", None, Some(&quiddity))?;
            print_frieze(&f, &format)
        }
        FriezeCmd::Extend {
            ring,
            units,
            path,
            quiddity,
            rows,
            cols,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            let f = frieze_from_args(&r, &units, path.as_deref(), quiddity.as_deref())?;
            let w = f.extension_window(parse_range(&rows)?, parse_range(&cols)?);
            print_window(&w, &format)
        }
        FriezeCmd::Count {
            q,
            n,
            kind,
            method,
            budget,
        } => {
            let ring = parse_ring(&format!("gf{q}"))?;
            let kind: FriezeKind = kind.parse().map_err(err)?;
            let budget = budget
                .or_else(|| {
                    std::env::var("FAREY_BUDGET")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(farey_core::frieze::DEFAULT_COUNT_BUDGET);
            match method.as_str() {
                "formula" => println!("{}", count_friezes_formula(&ring, n, kind).map_err(err)?),
                "brute_force" => println!(
                    "{}",
                    count_friezes_brute_force(&ring, n, kind, budget).map_err(err)?
                ),
                "both" => {
                    let f = count_friezes_formula(&ring, n, kind).map_err(err)?;
                    let b = count_friezes_brute_force(&ring, n, kind, budget).map_err(err)?;
                    println!("{f} {b} {}", if f == b { "agree" } else { "DISAGREE" });
                }
                other => return Err(format!("unknown method {other:?}")),
            }
            Ok(())
        }
        FriezeCmd::Check {
            ring,
            units,
            path,
            quiddity,
        } => {
            let r = parse_ring(&ring.ring)?;
            let f = frieze_from_args(&r, &units, path.as_deref(), quiddity.as_deref())?;
            let w = f.extension_window((0, 2 + f.width() as i64), (0, 2 + f.width() as i64));
            println!(
                "width={} alpha={} beta={} twist={} period={} semiregular={} regular={} quasiregular={}",
                f.width(),
                r.format_elem(f.alpha()),
                r.format_elem(&f.beta()),
                r.format_elem(&f.twist()),
                f.period(),
                f.is_semiregular(),
                f.is_regular(),
                f.is_quasiregular()
            );
            println!(
                "window sl2={} tame={}",
                w.is_sl2(),
                w.is_tame().map_err(err)?
            );
            Ok(())
        }
    }
}

fn run_tiling(cmd: TilingCmd) -> CmdResult {
    match cmd {
        TilingCmd::FromPaths {
            ring,
            gamma,
            delta,
            rows,
            cols,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            let g = parse_twisted_e_path(&r, &gamma)?;
            let d = parse_twisted_e_path(&r, &delta)?;
            let w =
                tiling_from_paths(&g, &d, parse_range(&rows)?, parse_range(&cols)?).map_err(err)?;
            print_window(&w, &format)
        }
        TilingCmd::Tame { ring, file } => {
            let r = parse_ring(&ring.ring)?;
            let w = read_window(&r, file.as_deref())?;
            println!("{}", w.is_tame().map_err(err)?);
            Ok(())
        }
        TilingCmd::Recurrences { ring, file } => {
            let r = parse_ring(&ring.ring)?;
            let w = read_window(&r, file.as_deref())?;
            let (rows, cols) = w.recurrences().map_err(err)?;
            let fmt = |v: &[Elem]| {
                v.iter()
                    .map(|e| r.format_elem(e))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            println!("rows: {}", fmt(&rows));
            println!("cols: {}", fmt(&cols));
            Ok(())
        }
    }
}

fn run_lift(cmd: LiftCmd) -> CmdResult {
    match cmd {
        LiftCmd::Matrix { ring, matrix } => {
            let r = parse_ring(&ring.ring)?;
            require_zmod(&r)?;
            let rows: Vec<&str> = matrix.split(';').collect();
            if rows.len() != 2 {
                return Err("matrix must be \"a,b;c,d\"".into());
            }
            let parse_row = |row: &str| -> Result<(Elem, Elem), String> {
                let parts = split_top_level(row, ',');
                if parts.len() != 2 {
                    return Err("matrix must be \"a,b;c,d\"".into());
                }
                Ok((
                    r.parse_elem(parts[0]).map_err(err)?,
                    r.parse_elem(parts[1]).map_err(err)?,
                ))
            };
            let (a, b) = parse_row(rows[0])?;
            let (c, d) = parse_row(rows[1])?;
            let m = SL2Matrix::new(&r, a, b, c, d).map_err(err)?;
            let lifted = lift_matrix(&m).map_err(err)?;
            let z = lifted.ring().clone();
            println!(
                "{} {}\n{} {}",
                z.format_elem(&lifted.a),
                z.format_elem(&lifted.b),
                z.format_elem(&lifted.c),
                z.format_elem(&lifted.d)
            );
            Ok(())
        }
        LiftCmd::Path { ring, path } => {
            let r = parse_ring(&ring.ring)?;
            require_zmod(&r)?;
            let p = parse_path(&r, &UnitSubgroup::trivial(&r), &path)?;
            let lifted = lift_path_positive(&p).map_err(err)?;
            println!("{}", format_path(&lifted));
            Ok(())
        }
        LiftCmd::Tiling {
            ring,
            gamma,
            delta,
            rows,
            cols,
            format,
        } => {
            let r = parse_ring(&ring.ring)?;
            require_zmod(&r)?;
            let g = parse_twisted_e_path(&r, &gamma)?;
            let d = parse_twisted_e_path(&r, &delta)?;
            let w = lift_tiling_positive(&g, &d, parse_range(&rows)?, parse_range(&cols)?)
                .map_err(err)?;
            print_window(&w, &format)
        }
        LiftCmd::Frieze {
            ring,
            path,
            quiddity,
            budget,
        } => {
            let r = parse_ring(&ring.ring)?;
            require_zmod(&r)?;
            let f = frieze_from_args(&r, "pm1", path.as_deref(), quiddity.as_deref())?;
            match lift_frieze_with_budget(&f, budget_from(budget)).map_err(err)? {
                LiftOutcome::Lifted(lifted) => {
                    println!("liftable");
                    let x1 = 2 * (lifted.period() as i64) + lifted.width() as i64;
                    println!("{}", lifted.render_diamond(0, x1));
                }
                LiftOutcome::NotLiftable(Obstruction::NotClosed { twist }) => {
                    println!(
                        "not liftable: path not closed (twist {})",
                        r.format_elem(&twist)
                    );
                }
                LiftOutcome::NotLiftable(Obstruction::NotContractible) => {
                    println!("not liftable: closed but not strongly contractible");
                }
            }
            Ok(())
        }
        LiftCmd::Contractible {
            ring,
            path,
            format,
            budget,
        } => {
            let r = parse_ring(&ring.ring)?;
            require_zmod(&r)?;
            let p = parse_path(&r, &UnitSubgroup::pm_one(&r), &path)?;
            let (ok, trace) =
                is_strongly_contractible_with_budget(&p, budget_from(budget)).map_err(err)?;
            if format == "json" {
                let v = serde_json::json!({
                    "contractible": ok,
                    "trace": trace.map(|t| t.to_json(&r)),
                });
                println!("{}", serde_json::to_string_pretty(&v).map_err(err)?);
            } else {
                println!("{ok}");
                if let Some(t) = trace {
                    println!("moves: {}", t.len());
                }
                if ok {
                    let lifted =
                        lift_closed_path_with_budget(&p, budget_from(budget)).map_err(err)?;
                    println!("lift: {}", format_path(&lifted));
                }
            }
            Ok(())
        }
    }
}

fn run_selftest(only: Option<String>) -> CmdResult {
    let results = match only {
        Some(id) => {
            vec![selftest::run_one(&id).ok_or_else(|| format!("unknown criterion {id:?}"))?]
        }
        None => selftest::run_all(),
    };
    let mut all_ok = true;
    for r in &results {
        println!("{}", r.line());
        all_ok &= r.passed;
    }
    if all_ok {
        Ok(())
    } else {
        Err("one or more criteria failed".into())
    }
}
