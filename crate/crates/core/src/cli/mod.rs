//! The `mstfan` command line driver.

mod document;
mod dot;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use document::{GeneratorSpec, InstanceDocument, VERSION};
pub use dot::dual_graph_dot;

use crate::config::{HeightFunction, PointConfiguration};
use crate::epistasis::{self, WeightKind};
use crate::error::{Error, Result};
use crate::generators::{self, Generator};
use crate::matroid::{self, CycleMatroid};
use crate::mstfan::{self, CensusOptions, FanContext, FanOptions, OrderedSpanningTree};
use crate::sample::RationalSampler;
use crate::scalar::parse_rational;
use crate::triangulate::{dual_graph, Candidates};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SCALE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "mstfan", version, about = "Regular triangulations, edge lengths and MST-cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub input: InputArgs,
    /// Seed for pseudo-random heights and samples.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct InputArgs {
    /// Instance JSON file.
    #[arg(long, global = true)]
    pub instance: Option<PathBuf>,
    /// Built-in configuration, e.g. `ngon:5`, `cube:3`, `prism:3`, `crosspoly:3`.
    #[arg(long, global = true, conflicts_with = "instance")]
    pub generate: Option<String>,
    /// Height source for generated configurations.
    #[arg(long, global = true, value_enum)]
    pub heights: Option<HeightSource>,
    /// Comma separated heights for `--heights explicit`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub values: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HeightSource {
    Random,
    Explicit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Weights {
    Lattice,
    Epistatic,
}

impl From<Weights> for WeightKind {
    fn from(w: Weights) -> Self {
        match w {
            Weights::Lattice => WeightKind::Lattice,
            Weights::Epistatic => WeightKind::Epistatic,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the instance document (useful with --generate).
    Instance,
    /// Regular triangulation induced by the heights.
    Triangulate,
    /// Dual graph with edge length forms and lengths.
    DualGraph {
        /// Also write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Secondary cone of the induced triangulation.
    SecondaryCone,
    /// Greedy minimum spanning tree of the dual graph.
    Mst {
        #[arg(long, value_enum, default_value = "lattice")]
        weights: Weights,
    },
    /// MST-cone of an edge order given by dual edge indices.
    MstCone {
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<usize>,
    },
    /// Realizable ordered spanning trees of the induced triangulation.
    EnumerateTrees {
        /// Count over all regular triangulations instead.
        #[arg(long)]
        all: bool,
    },
    /// Check the fan axioms for the MST-cones of the induced triangulation.
    FanCheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Bergman fan membership at the saturating cells of the MST-fan.
    BergmanCheck,
    /// Epistatic filtration and merge tree.
    Filtration {
        #[arg(long, value_enum, default_value = "lattice")]
        weights: Weights,
    },
    /// Counts of triangulations and ordered trees for standard polytopes.
    Table1 {
        /// Rows such as P5..P8, prism3, octa, cube3.
        #[arg(long, value_delimiter = ',', default_value = "P5,P6,P7,octa,prism3")]
        rows: Vec<String>,
    },
}

/// Exit status and captured standard streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(v) => Outcome { code: EXIT_OK, stdout: document::render(&v), stderr: String::new() },
        Err(e) => {
            let code = match e {
                Error::ScaleGuard { .. } => EXIT_SCALE,
                _ => EXIT_VALIDATION,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

struct Instance {
    doc: InstanceDocument,
    config: PointConfiguration,
    heights: Option<HeightFunction>,
}

impl Instance {
    fn heights(&self) -> Result<&HeightFunction> {
        self.heights.as_ref().ok_or_else(|| Error::InvalidArgument("this command needs heights".into()))
    }
}

fn load(input: &InputArgs, seed: u64) -> Result<Instance> {
    match (&input.instance, &input.generate) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let doc = InstanceDocument::parse(&text)?;
            let config = doc.configuration()?;
            let mut heights = doc.height_function(&config)?;
            if input.heights.is_some() || input.values.is_some() {
                heights = Some(choose_heights(&config, input, seed)?);
            }
            let doc = InstanceDocument::from_parts(&config, heights.as_ref(), doc.generator);
            Ok(Instance { doc, config, heights })
        }
        (None, Some(name)) => {
            let g: Generator = name.parse()?;
            let config = g.build()?;
            let heights = Some(choose_heights(&config, input, seed)?);
            let spec = g.to_string();
            let (gname, n) = spec.split_once(':').expect("generator display");
            let gen = GeneratorSpec { name: gname.to_string(), n: n.parse().expect("generator size") };
            let doc = InstanceDocument::from_parts(&config, heights.as_ref(), Some(gen));
            Ok(Instance { doc, config, heights })
        }
        (None, None) => Err(Error::InvalidArgument("provide --instance <file> or --generate <name>".into())),
    }
}

fn choose_heights(config: &PointConfiguration, input: &InputArgs, seed: u64) -> Result<HeightFunction> {
    match (input.heights, &input.values) {
        (Some(HeightSource::Explicit), None) => Err(Error::InvalidArgument("--heights explicit needs --values".into())),
        (Some(HeightSource::Random), Some(_)) => {
            Err(Error::InvalidArgument("--values conflicts with --heights random".into()))
        }
        (Some(HeightSource::Explicit), Some(v)) | (None, Some(v)) => {
            let values = v.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>>>()?;
            HeightFunction::new(config, values)
        }
        (_, None) => generators::random_generic_heights(&Candidates::new(config)?, &mut RationalSampler::new(seed)),
    }
}

fn execute(cli: &Cli) -> Result<Value> {
    if let Command::Table1 { rows } = &cli.command {
        return table1(rows, cli.jobs).map(|p| document::result_document("table1", None, p));
    }
    let inst = load(&cli.input, cli.seed)?;
    let name = command_name(&cli.command);
    let payload = match &cli.command {
        Command::Instance => serde_json::to_value(&inst.doc).expect("serializable"),
        Command::Triangulate => triangulate(&inst)?,
        Command::DualGraph { dot } => dual(&inst, dot.as_ref())?,
        Command::SecondaryCone => secondary(&inst)?,
        Command::Mst { weights } => mst(&inst, (*weights).into())?,
        Command::MstCone { order } => mst_cone(&inst, order)?,
        Command::EnumerateTrees { all } => enumerate(&inst, *all, cli.jobs)?,
        Command::FanCheck { samples } => fan_check(&inst, *samples, cli.seed)?,
        Command::BergmanCheck => bergman(&inst)?,
        Command::Filtration { weights } => filtration(&inst, (*weights).into())?,
        Command::Table1 { .. } => unreachable!("handled above"),
    };
    Ok(document::result_document(name, Some(inst.doc.digest()), payload))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Instance => "instance",
        Command::Triangulate => "triangulate",
        Command::DualGraph { .. } => "dual-graph",
        Command::SecondaryCone => "secondary-cone",
        Command::Mst { .. } => "mst",
        Command::MstCone { .. } => "mst-cone",
        Command::EnumerateTrees { .. } => "enumerate-trees",
        Command::FanCheck { .. } => "fan-check",
        Command::BergmanCheck => "bergman-check",
        Command::Filtration { .. } => "filtration",
        Command::Table1 { .. } => "table1",
    }
}

fn context(inst: &Instance) -> Result<(Candidates, FanContext)> {
    let h = inst.heights()?;
    let cand = Candidates::new(&inst.config)?;
    let check = cand.is_generic(h)?;
    if !check.generic {
        return Err(Error::NonGeneric(format!("{:?}", check.witness)));
    }
    let tri = cand.regular_triangulation(h)?;
    let ctx = FanContext::with_candidates(&cand, &tri, Some(h))?;
    Ok((cand, ctx))
}

fn triangulate(inst: &Instance) -> Result<Value> {
    let h = inst.heights()?;
    let cand = Candidates::new(&inst.config)?;
    let tri = cand.regular_triangulation(h)?;
    let generic = cand.is_generic(h)?;
    let c = &inst.config;
    Ok(json!({
        "cells": tri.cells().iter().map(|s| document::simplex(c, s)).collect::<Vec<_>>(),
        "generic": generic.generic,
        "genericity_witness": generic.witness.map(|w| format!("{w:?}")),
    }))
}

fn dual(inst: &Instance, dot: Option<&PathBuf>) -> Result<Value> {
    let h = inst.heights()?;
    let tri = Candidates::new(&inst.config)?.regular_triangulation(h)?;
    let g = dual_graph(&tri, h)?;
    let c = &inst.config;
    if let Some(path) = dot {
        std::fs::write(path, dual_graph_dot(c, &g)).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    let nodes: Vec<Value> =
        g.cells().iter().enumerate().map(|(i, s)| json!({"id": i, "cell": document::simplex(c, s)})).collect();
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "id": i,
                "ends": [e.ends.0, e.ends.1],
                "ridge": document::ridge(c, &e.ridge),
                "form": document::form(c, &e.form),
                "length": document::rational(&e.length),
                "tie_class": e.tie_class,
            })
        })
        .collect();
    Ok(json!({"nodes": nodes, "edges": edges, "connected": g.is_connected()}))
}

fn secondary(inst: &Instance) -> Result<Value> {
    let h = inst.heights()?;
    let cand = Candidates::new(&inst.config)?;
    let tri = cand.regular_triangulation(h)?;
    let sc = cand.secondary_cone(&tri)?;
    let rep = sc.dimension();
    let c = &inst.config;
    Ok(json!({
        "constraints": sc.constraints().iter().map(|f| document::form(c, f)).collect::<Vec<_>>(),
        "essential": sc.minimized().constraints().iter().map(|f| document::form(c, f)).collect::<Vec<_>>(),
        "dimension": rep.dimension,
        "full_dimensional": rep.interior_point.is_some(),
        "interior_point": rep.interior_point.as_deref().map(|x| document::point(c, x)),
        "contains_heights_strictly": sc.contains_strictly(h.values()),
    }))
}

fn mst(inst: &Instance, kind: WeightKind) -> Result<Value> {
    let (_, ctx) = context(inst)?;
    let g = ctx.graph();
    let w = epistasis::edge_weights(&inst.config, g, kind)?;
    let (tree, part) = mstfan::greedy_mst(g, &w)?;
    let order: Vec<usize> = tree.edges().iter().map(|r| g.edge_index(r).expect("tree edge")).collect();
    Ok(json!({
        "weights": match kind { WeightKind::Lattice => "lattice", WeightKind::Epistatic => "epistatic" },
        "order": order,
        "ridges": tree.edges().iter().map(|r| document::ridge(&inst.config, r)).collect::<Vec<_>>(),
        "lengths": order.iter().map(|&e| document::rational(&w[e])).collect::<Vec<_>>(),
        "ranges": part.ranges(),
    }))
}

fn mst_cone(inst: &Instance, order: &[usize]) -> Result<Value> {
    let (_, ctx) = context(inst)?;
    let g = ctx.graph();
    let edges = order
        .iter()
        .map(|&i| {
            g.edges().get(i).map(|e| e.ridge.clone()).ok_or_else(|| Error::InvalidArgument(format!("no dual edge {i}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let tree = OrderedSpanningTree::new(g, edges)?;
    let k = ctx.mst_cone(&tree)?;
    let c = &inst.config;
    let witness = k.cone.is_full_dimensional();
    Ok(json!({
        "order": order,
        "ranges": k.partition.ranges(),
        "in_tree": k.in_tree_conditions.iter().map(|f| document::form(c, f)).collect::<Vec<_>>(),
        "cut_edge": k.cut_edge_conditions.iter().map(|(r, f)| json!({
            "edge": g.edge_index(r).expect("graph edge"),
            "cut": mstfan::cut_edge(&tree, g, r).map(|(i, _)| i).expect("non-tree edge"),
            "form": document::form(c, f),
        })).collect::<Vec<_>>(),
        "inequalities": k.inequality_count(),
        "realizable": witness.is_some(),
        "interior_point": witness.as_deref().map(|x| document::point(c, x)),
    }))
}

fn enumerate(inst: &Instance, all: bool, jobs: Option<usize>) -> Result<Value> {
    if all {
        let c = mstfan::census(&inst.config, CensusOptions { jobs, lift_guard: false })?;
        return Ok(census_json(&c));
    }
    let (_, ctx) = context(inst)?;
    let g = ctx.graph();
    let trees = ctx.spanning_trees().len();
    let ordered = ctx.ordered_tree_count();
    if !crate::limits::scale_override() {
        crate::limits::guard("ordered tree enumeration", ordered, crate::limits::MAX_ORDERED_TREES)?;
    }
    let cones = with_jobs(jobs, || ctx.enumerate_realizable())?;
    let orders: Vec<Vec<usize>> =
        cones.iter().map(|k| k.tree.edges().iter().map(|r| g.edge_index(r).expect("tree edge")).collect()).collect();
    Ok(json!({
        "spanning_trees": trees,
        "ordered_trees": ordered,
        "realizable": cones.len(),
        "orders": orders,
    }))
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(f),
        None => f(),
    }
}

fn fan_check(inst: &Instance, samples: usize, seed: u64) -> Result<Value> {
    let (_, ctx) = context(inst)?;
    let cones = ctx.enumerate_realizable()?;
    let r = mstfan::check_fan(&ctx, &cones, FanOptions { samples, seed })?;
    if r.violations() > 0 {
        return Err(Error::FanViolation(format!("{r:?}")));
    }
    Ok(json!({
        "cones": r.cones,
        "distinct_cones": r.distinct_cones,
        "samples": r.samples,
        "uncovered": r.uncovered,
        "max_interior_multiplicity": r.max_interior_multiplicity,
        "face_pairs_checked": r.face_pairs_checked,
        "face_violations": r.face_violations,
        "impure": r.impure,
        "shared_facets": r.shared_facets,
        "violations": r.violations(),
    }))
}

fn bergman(inst: &Instance) -> Result<Value> {
    let (_, ctx) = context(inst)?;
    let cones = ctx.enumerate_realizable()?;
    let cells = matroid::saturating_cells(&cones, ctx.graph(), ctx.secondary_cone())?;
    let m = CycleMatroid::of_dual_graph(ctx.graph());
    let loops = matroid::initial_matroid_loops(&m, &ctx.weights_at(inst.heights()?.values()));
    Ok(json!({
        "cells": cells.iter().map(|s| json!({
            "collection": s.collection,
            "dimension": s.cone.dimension().dimension,
            "bergman": s.bergman,
        })).collect::<Vec<_>>(),
        "all_members": cells.iter().all(|s| s.bergman),
        "loops_at_heights": loops,
    }))
}

fn filtration(inst: &Instance, kind: WeightKind) -> Result<Value> {
    let h = inst.heights()?;
    let f = epistasis::epistatic_filtration(&inst.config, h, kind)?;
    let t = epistasis::merge_tree(&f)?;
    let c = &inst.config;
    Ok(json!({
        "steps": f.steps.iter().map(|s| json!({
            "edge": s.edge,
            "ridge": document::ridge(c, &s.ridge),
            "weight": document::rational(&s.weight),
            "critical": s.critical,
            "merged": s.merged.map(|(a, b)| [a, b]),
            "forced_tie": s.forced_tie,
        })).collect::<Vec<_>>(),
        "merge_tree": {
            "leaves": t.leaves.iter().map(|s| document::simplex(c, s)).collect::<Vec<_>>(),
            "internal": t.internal.iter().map(|n| json!({
                "children": [n.children.0, n.children.1],
                "weight": document::rational(&n.weight),
            })).collect::<Vec<_>>(),
        },
    }))
}

/// Generator behind a table row name.
pub fn table_row(name: &str) -> Result<Generator> {
    match name {
        "octa" | "octahedron" => Ok(Generator::Crosspoly(3)),
        p if p.starts_with('P') => p[1..].parse().map(Generator::Ngon).map_err(|_| unknown_row(p)),
        p if p.starts_with("prism") => p[5..].parse().map(Generator::Prism).map_err(|_| unknown_row(p)),
        p if p.starts_with("cube") => p[4..].parse().map(Generator::Cube).map_err(|_| unknown_row(p)),
        other => Err(unknown_row(other)),
    }
}

fn unknown_row(name: &str) -> Error {
    Error::Parse(format!("unknown table row {name:?}"))
}

fn census_json(c: &mstfan::Census) -> Value {
    json!({
        "triangulations": c.triangulations,
        "regular": c.regular,
        "ordered_trees": c.ordered_trees,
        "realizable": c.realizable,
        "summary": format!("{} triangulations, {} ordered trees, {} realizable", c.regular, c.ordered_trees, c.realizable),
    })
}

fn table1(rows: &[String], jobs: Option<usize>) -> Result<Value> {
    let mut out = Vec::new();
    for row in rows {
        let config = table_row(row)?.build()?;
        let c = mstfan::census(&config, CensusOptions { jobs, lift_guard: false })?;
        let mut v = census_json(&c);
        v["row"] = json!(row);
        out.push(v);
    }
    Ok(json!({ "rows": out }))
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(table_row("P7").unwrap(), Generator::Ngon(7));
        assert_eq!(table_row("octa").unwrap(), Generator::Crosspoly(3));
        assert_eq!(table_row("prism4").unwrap(), Generator::Prism(4));
        assert_eq!(table_row("cube3").unwrap(), Generator::Cube(3));
        assert!(table_row("Q3").is_err());
        assert!(table_row("prismX").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["mstfan", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["mstfan", "--help"]).code, EXIT_OK);
        assert_eq!(run(["mstfan", "triangulate"]).code, EXIT_VALIDATION);
    }
}
