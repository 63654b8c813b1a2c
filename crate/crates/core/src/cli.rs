//! Command-line front end. Exit codes: 0 success, 1 a computed negative
//! answer (verification failure, violated condition, no coloring within the
//! color limit), 2 usage or input errors.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::{
    classify_cycle_feet, color_bipartite2, color_bridgeless2, color_cycle_feet2, color_tree, color_two_odd_cycles2,
    color_unicyclic3, pw_auto, BipartiteOutcome, FeetClass, TwoOddLayout,
};
use crate::decompose::{self, bipartition, bridgeless_core, disjoint_odd_cycles, shortest_odd_cycle};
use crate::exact::{exact_directed, exact_pp, exact_pw, Budget, ExactError, ExactResult, Mode};
use crate::generate::{self, Family};
use crate::graph::{Color, ColoringResult, Digraph, Graph, Route, Status, Vertex};
use crate::io::{self, AnyGraph, Format};
use crate::orient::robbins_orientation;
use crate::verify::{self, PairCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "properwalk", version, about = "Proper-walk edge colorings: construct, verify, solve exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a graph from a named family.
    ///
    /// Families: path N, cycle N, complete N, star LEAVES, theta A B P,
    /// cycle-feet N [F0 .. F(N-1)], two-triangles, petersen, bowtie,
    /// random N P.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Report structure: bridges, blocks, core components, odd cycles.
    Analyze {
        graph: String,
        /// Also print a strongly connected orientation of each bridgeless piece.
        #[arg(long)]
        orient: bool,
    },
    /// Color a graph with a construction and print the coloring file.
    Color {
        graph: String,
        #[arg(long, value_enum, default_value_t = ColorMode::Auto)]
        mode: ColorMode,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        dot: bool,
    },
    /// Check a coloring for properly colored walks or paths.
    Verify {
        graph: String,
        coloring: String,
        #[arg(long, value_enum, conflicts_with = "pair")]
        pairs: Option<Pairs>,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<Vertex>>,
        #[arg(long, conflicts_with = "path")]
        walk: bool,
        #[arg(long)]
        path: bool,
        #[arg(long)]
        directed: bool,
        /// Print a fewest-edges walk for a single pair.
        #[arg(long)]
        witness: bool,
    },
    /// Smallest number of colors by exhaustive search.
    Exact {
        graph: String,
        #[arg(long, value_enum, default_value_t = Param::Pw)]
        param: Param,
        #[arg(long)]
        directed: bool,
        #[arg(long = "max-k")]
        max_k: Option<Color>,
        /// Edge limit applied at every color count.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run the automatic coloring on seeded random connected graphs.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Compare every result with the exact solver.
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ColorMode {
    Auto,
    Tree,
    Bipartite,
    Bridgeless,
    TwoOdd,
    CycleFeet,
    Unicyclic,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pairs {
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Param {
    Pw,
    Pp,
}

struct Outcome {
    code: i32,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { code: EXIT_OK, text }
    }

    fn negative(text: String) -> Self {
        Self { code: EXIT_NEGATIVE, text }
    }
}

type CmdResult = Result<Outcome, String>;

/// Parses `args` (program name first) and runs the subcommand. Graph or
/// coloring arguments equal to `-` read standard input.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(err, "{line}");
            return EXIT_ERROR;
        }
    };
    let mut input = Input { stdin, used: false };
    let result = match cli.command {
        Command::Gen { family, params, seed, directed, dot } => gen(&family, &params, seed, directed, dot),
        Command::Analyze { graph, orient } => analyze(&mut input, &graph, orient),
        Command::Color { graph, mode, out, dot } => color(&mut input, &graph, mode, out.as_deref(), dot),
        Command::Verify { graph, coloring, pairs: _, pair, walk: _, path, directed, witness } => {
            let pair = pair.map(|p| (p[0], p[1]));
            verify_cmd(&mut input, &graph, &coloring, pair, path, directed, witness)
        }
        Command::Exact { graph, param, directed, max_k, budget } => exact(&mut input, &graph, param, directed, max_k, budget),
        Command::Experiment { n, p, trials, seed, exact } => experiment(n, p, trials, seed, exact),
    };
    match result {
        Ok(o) => {
            if out.write_all(o.text.as_bytes()).is_err() {
                return EXIT_ERROR;
            }
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            if self.used {
                return Err("standard input can be read only once".into());
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| format!("reading standard input: {e}"))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn graph(&mut self, path: &str) -> Result<Graph, String> {
        let text = self.read(path)?;
        io::parse_graph(&text).map_err(|e| format!("{path}: {e}"))
    }

    fn digraph(&mut self, path: &str) -> Result<Digraph, String> {
        let text = self.read(path)?;
        io::parse_digraph(&text).map_err(|e| format!("{path}: {e}"))
    }
}

fn num<T: std::str::FromStr>(family: &str, params: &[String], i: usize) -> Result<T, String> {
    let raw = params.get(i).ok_or_else(|| format!("{family}: missing parameter {}", i + 1))?;
    raw.parse().map_err(|_| format!("{family}: bad parameter {raw:?}"))
}

fn family(name: &str, params: &[String], seed: u64, directed: bool) -> Result<Family, String> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(format!("{name} takes {k} parameter(s), got {}", params.len()))
        }
    };
    let f = match name {
        "path" => {
            arity(1)?;
            Family::Path(num(name, params, 0)?)
        }
        "cycle" => {
            arity(1)?;
            let n = num(name, params, 0)?;
            if directed {
                Family::DirectedCycle(n)
            } else {
                Family::Cycle(n)
            }
        }
        "complete" => {
            arity(1)?;
            Family::Complete(num(name, params, 0)?)
        }
        "star" => {
            arity(1)?;
            Family::Star(num(name, params, 0)?)
        }
        "theta" => {
            arity(3)?;
            Family::Theta { a: num(name, params, 0)?, b: num(name, params, 1)?, p: num(name, params, 2)? }
        }
        "cycle-feet" => {
            let n: usize = num(name, params, 0)?;
            let feet = if params.len() == 1 {
                vec![0; n]
            } else {
                (1..params.len()).map(|i| num(name, params, i)).collect::<Result<_, _>>()?
            };
            Family::CycleWithFeet { n, feet }
        }
        "two-triangles" => {
            arity(0)?;
            Family::TwoTrianglesSharedVertex
        }
        "petersen" => {
            arity(0)?;
            Family::Petersen
        }
        "bowtie" => {
            arity(0)?;
            return Ok(Family::BowtieDigraph);
        }
        "random" => {
            arity(2)?;
            Family::RandomConnected { n: num(name, params, 0)?, p: num(name, params, 1)?, seed }
        }
        _ => return Err(format!("unknown family {name:?}")),
    };
    if directed && !matches!(f, Family::DirectedCycle(_)) {
        return Err(format!("{name} has no directed version"));
    }
    Ok(f)
}

fn gen(name: &str, params: &[String], seed: u64, directed: bool, dot: bool) -> CmdResult {
    let f = family(name, params, seed, directed)?;
    let format = if dot { Format::Dot } else { Format::EdgeList };
    let text = match generate::generate(&f).map_err(|e| e.to_string())? {
        AnyGraph::Undirected(g) => io::emit_graph(&g, None, format),
        AnyGraph::Directed(d) => io::emit_digraph(&d, None, format),
    }
    .map_err(|e| e.to_string())?;
    Ok(Outcome::ok(text))
}

fn list(vs: &[Vertex]) -> String {
    let parts: Vec<String> = vs.iter().map(Vertex::to_string).collect();
    format!("[{}]", parts.join(" "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(input: &mut Input, path: &str, orient: bool) -> CmdResult {
    let g = input.graph(path)?;
    let mut s = String::new();
    writeln!(s, "vertices {}", g.n()).unwrap();
    writeln!(s, "edges {}", g.m()).unwrap();
    writeln!(s, "max-degree {}", g.max_degree()).unwrap();
    writeln!(s, "connected {}", yes(g.is_connected())).unwrap();
    if !g.is_connected() {
        return Ok(Outcome::ok(s));
    }
    writeln!(s, "complete {}", yes(g.is_complete())).unwrap();
    writeln!(s, "tree {}", yes(g.is_tree())).unwrap();
    match bipartition(&g) {
        Some(b) => writeln!(s, "bipartite yes {} {}", list(&b.class_x()), list(&b.class_y())).unwrap(),
        None => writeln!(s, "bipartite no").unwrap(),
    }
    let core = bridgeless_core(&g).map_err(|e| e.to_string())?;
    let bridges: Vec<String> = core.bridges.iter().map(|&e| format!("{}-{}", g.edge(e).0, g.edge(e).1)).collect();
    writeln!(s, "bridges {} {}", bridges.len(), bridges.join(" ")).unwrap();
    let blocks = decompose::blocks(&g).map_err(|e| e.to_string())?;
    writeln!(s, "blocks {}", blocks.len()).unwrap();
    for b in &blocks {
        writeln!(s, "  block {}", list(&b.vertices)).unwrap();
    }
    writeln!(s, "core-components {}", core.components.len()).unwrap();
    for c in &core.components {
        let kind = if c.nontrivial { "nontrivial" } else { "trivial" };
        writeln!(s, "  component {} {kind} incident-bridges {}", list(&c.vertices), c.incident_bridges).unwrap();
    }
    writeln!(s, "bridge-condition {}", yes(core.satisfies_bridge_condition())).unwrap();
    match shortest_odd_cycle(&g) {
        Some(c) => writeln!(s, "shortest-odd-cycle {}", list(&c)).unwrap(),
        None => writeln!(s, "shortest-odd-cycle none").unwrap(),
    }
    match disjoint_odd_cycles(&g) {
        Some(p) => writeln!(s, "two-odd-cycles {} {} connector {}", list(&p.c1), list(&p.c2), list(&p.connector)).unwrap(),
        None => writeln!(s, "two-odd-cycles none").unwrap(),
    }
    let shape = classify_cycle_feet(&g);
    match shape.classification {
        FeetClass::NotMember => writeln!(s, "cycle-feet no").unwrap(),
        FeetClass::Complete => writeln!(s, "cycle-feet triangle").unwrap(),
        FeetClass::Pw2 { u, v, w } => writeln!(s, "cycle-feet two-colorable at {u} {v} {w}").unwrap(),
        FeetClass::Pw3 { reason } => writeln!(s, "cycle-feet needs three: {reason}").unwrap(),
    }
    if orient {
        for c in core.components.iter().filter(|c| c.nontrivial) {
            let (h, map) = g.induced(&c.vertices);
            let o = robbins_orientation(&h).map_err(|e| e.to_string())?;
            let arcs: Vec<String> = o.arcs().map(|(a, b)| format!("{}>{}", map[a], map[b])).collect();
            writeln!(s, "orientation {} {}", list(&c.vertices), arcs.join(" ")).unwrap();
        }
    }
    Ok(Outcome::ok(s))
}

fn exact_coloring(g: &Graph) -> Result<ColoringResult, String> {
    let max_k = g.max_degree().max(3).min(Color::MAX as usize) as Color;
    let r = exact_pw(g, max_k, Budget::default()).map_err(|e| e.to_string())?;
    Ok(ColoringResult { k: r.k, coloring: r.witness, status: Status::Exact, route: Route::Exact })
}

fn color(input: &mut Input, path: &str, mode: ColorMode, out: Option<&str>, dot: bool) -> CmdResult {
    let g = input.graph(path)?;
    let e = |e: crate::construct::ConstructError| e.to_string();
    let r = match mode {
        ColorMode::Auto => pw_auto(&g).map_err(e)?,
        ColorMode::Tree => color_tree(&g).map_err(e)?,
        ColorMode::Unicyclic => color_unicyclic3(&g).map_err(e)?,
        ColorMode::Bridgeless => color_bridgeless2(&g).map_err(e)?,
        ColorMode::Exact => exact_coloring(&g)?,
        ColorMode::Bipartite => match color_bipartite2(&g).map_err(e)? {
            BipartiteOutcome::Colored(r) => r,
            BipartiteOutcome::Violation { component, incident_bridges } => {
                return Ok(Outcome::negative(format!(
                    "violation: core component {} meets {incident_bridges} bridges\n",
                    list(&component)
                )));
            }
        },
        ColorMode::TwoOdd => {
            let pair = disjoint_odd_cycles(&g).ok_or("no two edge-disjoint odd cycles found")?;
            color_two_odd_cycles2(&g, &TwoOddLayout::new(&g, pair).map_err(e)?).map_err(e)?
        }
        ColorMode::CycleFeet => match classify_cycle_feet(&g).classification {
            FeetClass::Pw2 { u, v, w } => color_cycle_feet2(&g, (u, v, w)).map_err(e)?,
            FeetClass::Pw3 { reason } => return Ok(Outcome::negative(format!("violation: {reason}\n"))),
            FeetClass::Complete => return Err("a bare triangle needs one color".into()),
            FeetClass::NotMember => return Err("not an odd cycle with feet".into()),
        },
    };
    let format = if dot { Format::Dot } else { Format::EdgeList };
    let mut text = io::emit_graph(&g, Some(&r.coloring), format).map_err(|e| e.to_string())?;
    let summary = r.summary();
    match out {
        Some(file) => {
            if !dot {
                writeln!(text, "# {summary}").unwrap();
            }
            std::fs::write(file, text).map_err(|e| format!("{file}: {e}"))?;
            Ok(Outcome::ok(format!("{summary}\n")))
        }
        None => {
            if !dot {
                writeln!(text, "# {summary}").unwrap();
            }
            Ok(Outcome::ok(text))
        }
    }
}

fn pair_text(check: PairCheck) -> Outcome {
    match check {
        PairCheck::Pass => Outcome::ok("PASS\n".into()),
        PairCheck::Fail { u, v } => Outcome::negative(format!("FAIL {u} {v}\n")),
    }
}

fn verify_cmd(
    input: &mut Input,
    graph: &str,
    coloring: &str,
    pair: Option<(Vertex, Vertex)>,
    paths: bool,
    directed: bool,
    witness: bool,
) -> CmdResult {
    if witness && (pair.is_none() || paths || directed) {
        return Err("--witness needs --pair on an undirected walk check".into());
    }
    let e = |e: verify::VerifyError| e.to_string();
    let single = |ok: bool, (u, v): (Vertex, Vertex)| {
        if ok {
            Outcome::ok("PASS\n".into())
        } else {
            Outcome::negative(format!("FAIL {u} {v}\n"))
        }
    };
    if directed {
        let d = input.digraph(graph)?;
        let c = io::parse_arc_coloring(&input.read(coloring)?, &d).map_err(|e| format!("{coloring}: {e}"))?;
        return Ok(match (pair, paths) {
            (None, false) => pair_text(verify::verify_all_pairs_directed(&d, &c).map_err(e)?),
            (None, true) => pair_text(verify::verify_all_pairs_directed_path(&d, &c).map_err(e)?),
            (Some((u, v)), false) => single(verify::walk_reachable_directed(&d, &c, u, v).map_err(e)?, (u, v)),
            (Some((u, v)), true) => single(verify::path_reachable_directed(&d, &c, u, v).map_err(e)?, (u, v)),
        });
    }
    let g = input.graph(graph)?;
    let c = io::parse_coloring(&input.read(coloring)?, &g).map_err(|e| format!("{coloring}: {e}"))?;
    Ok(match (pair, paths) {
        (None, false) => pair_text(verify::verify_all_pairs(&g, &c).map_err(e)?),
        (None, true) => pair_text(verify::verify_all_pairs_path(&g, &c).map_err(e)?),
        (Some((u, v)), true) => single(verify::path_reachable(&g, &c, u, v).map_err(e)?, (u, v)),
        (Some((u, v)), false) => match verify::walk_reachable(&g, &c, u, v, None, None).map_err(e)? {
            None => single(false, (u, v)),
            Some(w) if witness => {
                let vs = w.vertices(&g).expect("walk from the verifier");
                let colors: Vec<String> = w.edges.iter().map(|&e| c.color(e).to_string()).collect();
                Outcome::ok(format!("PASS\nwalk {}\ncolors [{}]\n", list(&vs), colors.join(" ")))
            }
            Some(_) => single(true, (u, v)),
        },
    })
}

fn exact_text(r: &ExactResult, coloring_text: String, name: &str) -> Outcome {
    let mut s = format!("# {name} = {}\n", r.k);
    s.push_str(&coloring_text);
    writeln!(s, "# explored {}", r.explored).unwrap();
    Outcome::ok(s)
}

fn exact(input: &mut Input, path: &str, param: Param, directed: bool, max_k: Option<Color>, budget: Option<usize>) -> CmdResult {
    let budget = budget.map(Budget::uniform).unwrap_or_default();
    let name = match (param, directed) {
        (Param::Pw, false) => "pW",
        (Param::Pp, false) => "pP",
        (Param::Pw, true) => "directed pW",
        (Param::Pp, true) => "directed pP",
    };
    let handle = |r: Result<ExactResult, ExactError>| match r {
        Err(ExactError::ExceedsMaxK { max_k, explored }) => {
            Ok(Err(Outcome::negative(format!("{name} > {max_k}\n# explored {explored}\n"))))
        }
        Err(e) => Err(e.to_string()),
        Ok(r) => Ok(Ok(r)),
    };
    if directed {
        let d = input.digraph(path)?;
        let mode = if param == Param::Pw { Mode::Walk } else { Mode::Path };
        let max_k = max_k.unwrap_or(4);
        return Ok(match handle(exact_directed(&d, mode, max_k, budget))? {
            Err(o) => o,
            Ok(r) => exact_text(&r, io::emit_digraph(&d, Some(&r.witness), Format::EdgeList).map_err(|e| e.to_string())?, name),
        });
    }
    let g = input.graph(path)?;
    let max_k = max_k.unwrap_or_else(|| g.max_degree().max(3).min(Color::MAX as usize) as Color);
    let r = match param {
        Param::Pw => exact_pw(&g, max_k, budget),
        Param::Pp => exact_pp(&g, max_k, budget),
    };
    Ok(match handle(r)? {
        Err(o) => o,
        Ok(r) => exact_text(&r, io::emit_coloring(&g, &r.witness).map_err(|e| e.to_string())?, name),
    })
}

fn experiment(n: usize, p: f64, trials: usize, seed: u64, with_exact: bool) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = String::from("trial\tseed\tn\tm\tk\tstatus\troute");
    if with_exact {
        s.push_str("\texact\tverdict");
    }
    s.push('\n');
    let mut tally: std::collections::BTreeMap<(Color, String), usize> = Default::default();
    let (mut agree, mut mismatch) = (0, 0);
    for t in 0..trials {
        let trial_seed: u64 = rng.gen();
        let g = generate::random_connected(n, p, trial_seed).map_err(|e| e.to_string())?;
        let r = pw_auto(&g).map_err(|e| format!("trial {t}: {e}"))?;
        write!(s, "{t}\t{trial_seed}\t{}\t{}\t{}\t{}\t{}", g.n(), g.m(), r.k, r.status, r.route).unwrap();
        *tally.entry((r.k, r.status.to_string())).or_default() += 1;
        if with_exact {
            let max_k = g.max_degree().max(3).min(Color::MAX as usize) as Color;
            let x = exact_pw(&g, max_k, Budget::default()).map_err(|e| format!("trial {t}: {e}"))?;
            let ok = match r.status {
                Status::Exact => x.k == r.k,
                Status::UpperBound => x.k <= r.k,
            };
            let verdict = if ok {
                agree += 1;
                "agree"
            } else {
                mismatch += 1;
                "exact-mismatch"
            };
            write!(s, "\t{}\t{verdict}", x.k).unwrap();
        }
        s.push('\n');
    }
    if trials > 0 {
        for ((k, status), count) in &tally {
            writeln!(s, "# k={k} {status}: {count}").unwrap();
        }
        if with_exact {
            writeln!(s, "# agreement {agree}/{trials}, exact-mismatch {mismatch}").unwrap();
        }
    }
    Ok(if mismatch > 0 { Outcome::negative(s) } else { Outcome::ok(s) })
}
