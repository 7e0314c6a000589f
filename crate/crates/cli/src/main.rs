use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dgsym::constructions::{cayley_digraph, product_action_digraph};
use dgsym::symmetry::{coset_two_arc_criterion, verify_lemma_prime_factn, DigraphAction};
use dgsym::{Bounds, Digraph, Permutation, SArc, Status, Transitivity};
use dgsym_cli::casebook::{self, CaseError, CaseResult, CASES};
use dgsym_cli::input::{load_digraph, load_group, load_spec, InputError};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "dgsym", version, about = "Permutation groups, digraphs and their symmetries")]
struct Cli {
    #[command(flatten)]
    bounds: BoundArgs,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, global = true)]
    bound_subgroup_order: Option<u64>,
    #[arg(long, global = true)]
    bound_normal_order: Option<u64>,
    #[arg(long, global = true)]
    bound_coset_index: Option<u64>,
    #[arg(long, global = true)]
    bound_transporter_nodes: Option<u64>,
    #[arg(long, global = true)]
    bound_element_table: Option<u64>,
    #[arg(long, global = true)]
    bound_enumeration: Option<u64>,
    #[arg(long, global = true)]
    bound_regular_nodes: Option<u64>,
    #[arg(long, global = true)]
    bound_digraph_vertices: Option<u64>,
    #[arg(long, global = true)]
    bound_digraph_arcs: Option<u64>,
    #[arg(long, global = true)]
    bound_s_arcs: Option<u64>,
}

impl BoundArgs {
    fn resolve(&self) -> Bounds {
        let d = Bounds::default();
        Bounds {
            subgroup_order: self.bound_subgroup_order.unwrap_or(d.subgroup_order),
            normal_order: self.bound_normal_order.unwrap_or(d.normal_order),
            coset_index: self.bound_coset_index.unwrap_or(d.coset_index),
            transporter_nodes: self.bound_transporter_nodes.unwrap_or(d.transporter_nodes),
            element_table: self.bound_element_table.unwrap_or(d.element_table),
            enumeration: self.bound_enumeration.unwrap_or(d.enumeration),
            regular_nodes: self.bound_regular_nodes.unwrap_or(d.regular_nodes),
            digraph_vertices: self.bound_digraph_vertices.unwrap_or(d.digraph_vertices),
            digraph_arcs: self.bound_digraph_arcs.unwrap_or(d.digraph_arcs),
            s_arcs: self.bound_s_arcs.unwrap_or(d.s_arcs),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Order, orbits, primitivity and stabilizers of a group.
    Group {
        /// Group file path, `path#NAME`, or `catalog:NAME`.
        source: String,
        /// Also report the stabilizer of this 1-based point.
        #[arg(long)]
        stabilizer: Option<usize>,
    },
    #[command(subcommand)]
    Digraph(DigraphCommand),
    #[command(subcommand)]
    Check(CheckCommand),
    #[command(subcommand)]
    Search(SearchCommand),
    #[command(subcommand)]
    Case(CaseCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum DigraphCommand {
    /// Build Cos(G, H, g) from a spec file.
    BuildCoset {
        spec: String,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Build Cay(R, S) for a group R and connection set S.
    BuildCayley {
        group: String,
        /// Elements of S in cycle notation.
        #[arg(long = "element", required = true)]
        elements: Vec<String>,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Direct product of two edge-list digraphs, or the m-th power of one.
    Product {
        first: String,
        second: Option<String>,
        #[arg(long)]
        power: Option<usize>,
        /// Act on the power with this group on the first digraph, wreathed
        /// with Sym(m).
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Valency, connectivity and s-arc counts of an edge-list digraph.
    Export {
        digraph: String,
        #[arg(long, value_enum, default_value_t = Export::Dot)]
        to: Export,
    },
    Info {
        digraph: String,
        #[arg(long, default_value_t = 3)]
        max_s: usize,
    },
}

#[derive(Args)]
struct Target {
    /// Coset digraph spec file.
    #[arg(long, conflicts_with_all = ["digraph", "group"])]
    spec: Option<String>,
    /// Edge-list digraph, used with --group.
    #[arg(long, requires = "group")]
    digraph: Option<String>,
    #[arg(long, requires = "digraph")]
    group: Option<String>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Whether the group is transitive on s-arcs.
    ArcTransitivity {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1)]
        s: usize,
    },
    /// The stabilizer factorization clauses at a 2-arc.
    Lemma22 {
        #[command(flatten)]
        target: Target,
        /// 1-based 2-arc `u,v,w`; the canonical one for specs by default.
        #[arg(long, value_delimiter = ',')]
        arc: Option<Vec<usize>>,
    },
    /// H = (H ∩ H^{g⁻¹})(H ∩ H^g) for a coset digraph spec.
    Criterion { spec: String },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// A regular subgroup of a permutation group.
    RegularSubgroup { source: String },
}

#[derive(Subcommand)]
enum CaseCommand {
    List,
    Run {
        id: String,
    },
    RunAll {
        /// Include long stretch cases.
        #[arg(long)]
        allow_long: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Engine(#[from] dgsym::Error),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

/// Text or JSON produced by a command, and whether its checks passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn info(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = cli.bounds.resolve();
    let result = run(&cli.command, &bounds, cli.format);
    match result {
        Ok(outcome) => {
            let rendered = match (cli.format, &outcome.json) {
                (Format::Json, Value::String(lines)) => lines.clone(),
                (Format::Json, v) => format!("{v}\n"),
                (Format::Text, _) => outcome.text,
            };
            if let Err(e) = write_output(cli.out.as_deref(), &rendered) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write_output(path: Option<&str>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn run(command: &Command, bounds: &Bounds, format: Format) -> Result<Outcome, CliError> {
    match command {
        Command::Group { source, stabilizer } => group_info(source, *stabilizer),
        Command::Digraph(c) => digraph(c, bounds),
        Command::Check(c) => check(c, bounds),
        Command::Search(SearchCommand::RegularSubgroup { source }) => {
            let g = load_group(source)?;
            let found = g.group.find_regular_subgroup(bounds)?;
            let gens: Option<Vec<String>> = found
                .as_ref()
                .map(|r| r.generators().iter().map(ToString::to_string).collect());
            let text = match &gens {
                Some(gs) => format!("regular subgroup of order {}: {}\n", g.group.degree(), gs.join(", ")),
                None => "no regular subgroup\n".to_string(),
            };
            Ok(Outcome::info(text, json!({ "group": g.name, "regular_subgroup": gens })))
        }
        Command::Case(c) => case(c, bounds, format),
    }
}

fn one_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|p| p + 1).collect()
}

fn group_info(source: &str, stabilizer: Option<usize>) -> Result<Outcome, CliError> {
    let named = load_group(source)?;
    let g = &named.group;
    let orbits: Vec<Vec<usize>> = g.orbits().iter().map(|o| one_based(o)).collect();
    let primitive = if g.is_transitive() {
        Some(g.is_primitive()?)
    } else {
        None
    };
    let derived: Vec<String> = g.derived_series().iter().map(|h| h.order().to_string()).collect();
    let mut json = json!({
        "name": named.name,
        "degree": g.degree(),
        "order": g.order().to_string(),
        "orbits": orbits,
        "transitive": g.is_transitive(),
        "regular": g.is_regular(),
        "primitive": primitive,
        "solvable": g.is_solvable(),
        "derived_series_orders": derived,
    });
    let mut text = format!(
        "{}: degree {}, order {}\norbits: {:?}\ntransitive: {}, regular: {}, primitive: {}\nsolvable: {}, derived series orders: {}\n",
        named.name,
        g.degree(),
        g.order(),
        orbits,
        g.is_transitive(),
        g.is_regular(),
        primitive.map_or("n/a".to_string(), |p| p.to_string()),
        g.is_solvable(),
        derived.join(" > "),
    );
    if let Some(p) = stabilizer {
        if p == 0 {
            return Err(CliError::Usage("points are 1-based".into()));
        }
        let st = g.point_stabilizer(p - 1)?;
        let gens: Vec<String> = st.generators().iter().map(ToString::to_string).collect();
        text += &format!("stabilizer of {p}: order {}, generators {}\n", st.order(), gens.join(", "));
        json["stabilizer"] = json!({ "point": p, "order": st.order().to_string(), "generators": gens });
    }
    Ok(Outcome::info(text, json))
}

fn render_digraph(d: &Digraph, export: Option<Export>, name: &str) -> String {
    match export {
        Some(Export::Dot) => d.to_dot(name),
        Some(Export::Edges) => d.to_edge_list(),
        None => format!(
            "{} vertices, {} arcs, valency {}, strongly connected: {}\n",
            d.vertex_count(),
            d.arc_count(),
            d.valency().map_or("irregular".to_string(), |k| k.to_string()),
            d.is_strongly_connected()
        ),
    }
}

fn digraph_json(d: &Digraph) -> Value {
    json!({
        "vertices": d.vertex_count(),
        "arcs": d.arc_count(),
        "valency": d.valency(),
        "strongly_connected": d.is_strongly_connected(),
        "edge_list": d.to_edge_list(),
    })
}

fn digraph(c: &DigraphCommand, bounds: &Bounds) -> Result<Outcome, CliError> {
    match c {
        DigraphCommand::BuildCoset { spec, export } => {
            let spec = load_spec(spec)?;
            let built = spec.build(bounds)?;
            let d = built.digraph();
            let mut json = digraph_json(d);
            json["group_order"] = json!(built.action.group().order().to_string());
            Ok(Outcome::info(render_digraph(d, *export, "Cos"), json))
        }
        DigraphCommand::BuildCayley { group, elements, export } => {
            let r = load_group(group)?;
            let s = elements
                .iter()
                .map(|e| Permutation::parse(e, r.group.degree()))
                .collect::<dgsym::Result<Vec<_>>>()?;
            let action = cayley_digraph(&r.group, &s, bounds)?;
            Ok(Outcome::info(
                render_digraph(action.digraph(), *export, "Cay"),
                digraph_json(action.digraph()),
            ))
        }
        DigraphCommand::Product {
            first,
            second,
            power,
            group,
            export,
        } => {
            let a = load_digraph(first)?;
            let (d, order) = match (second, power) {
                (Some(b), None) => (a.direct_product(&load_digraph(b)?, bounds)?, None),
                (None, Some(m)) if *m >= 1 => match group {
                    Some(src) => {
                        let g = load_group(src)?;
                        let act = product_action_digraph(&a, &g.group, *m, bounds)?;
                        let order = act.group().order().to_string();
                        (act.digraph().clone(), Some(order))
                    }
                    None => (a.power(*m, bounds)?, None),
                },
                _ => return Err(CliError::Usage("give a second digraph or --power m ≥ 1".into())),
            };
            let mut json = digraph_json(&d);
            let mut text = render_digraph(&d, *export, "Product");
            if let Some(o) = order {
                if export.is_none() {
                    text += &format!("wreath group order {o}\n");
                }
                json["group_order"] = json!(o);
            }
            Ok(Outcome::info(text, json))
        }
        DigraphCommand::Export { digraph, to } => {
            let d = load_digraph(digraph)?;
            Ok(Outcome::info(render_digraph(&d, Some(*to), "G"), digraph_json(&d)))
        }
        DigraphCommand::Info { digraph, max_s } => {
            let d = load_digraph(digraph)?;
            let counts: Vec<String> = (0..=*max_s).map(|s| d.count_s_arcs(s).to_string()).collect();
            let mut json = digraph_json(&d);
            json["s_arc_counts"] = json!(counts);
            json["directed_cycle"] = json!(d.is_directed_cycle());
            let text = render_digraph(&d, None, "G")
                + &format!("directed cycle: {}\ns-arc counts (s = 0..={max_s}): {}\n", d.is_directed_cycle(), counts.join(" "));
            Ok(Outcome::info(text, json))
        }
    }
}

/// The action and, for spec inputs, the canonical 2-arc.
fn resolve_target(t: &Target, bounds: &Bounds) -> Result<(DigraphAction, Option<SArc>), CliError> {
    match (&t.spec, &t.digraph, &t.group) {
        (Some(spec), _, _) => {
            let spec = load_spec(spec)?;
            let built = spec.build(bounds)?;
            let arc = SArc(built.canonical_two_arc(&spec).to_vec());
            Ok((built.action, Some(arc)))
        }
        (None, Some(d), Some(g)) => {
            let action = DigraphAction::bind(load_digraph(d)?, load_group(g)?.group)?;
            Ok((action, None))
        }
        _ => Err(CliError::Usage("give --spec, or --digraph with --group".into())),
    }
}

fn check(c: &CheckCommand, bounds: &Bounds) -> Result<Outcome, CliError> {
    match c {
        CheckCommand::ArcTransitivity { target, s } => {
            let (action, _) = resolve_target(target, bounds)?;
            let t = action.is_s_arc_transitive(*s, bounds)?;
            let word = match t {
                Transitivity::Yes => "yes",
                Transitivity::No => "no",
                Transitivity::Vacuous => "vacuous",
            };
            Ok(Outcome {
                text: format!("{s}-arc-transitive: {word}\n"),
                json: json!({ "s": s, "transitive": word }),
                ok: t != Transitivity::No,
            })
        }
        CheckCommand::Lemma22 { target, arc } => {
            let (action, canonical) = resolve_target(target, bounds)?;
            let arc = match arc {
                Some(a) if a.len() == 3 && a.iter().all(|&p| p >= 1) => SArc(a.iter().map(|p| p - 1).collect()),
                Some(_) => return Err(CliError::Usage("--arc takes three 1-based vertices".into())),
                None => canonical.ok_or_else(|| CliError::Usage("--arc is required with --digraph".into()))?,
            };
            let data = action.two_arc_stabilizer_data(&arc)?;
            let report = verify_lemma_prime_factn(&action, &data, bounds)?;
            let mut text = format!(
                "2-arc {:?}: |Gv| = {}, |Guv| = {}, |Gvw| = {}\n",
                one_based(arc.vertices()),
                data.gv_order,
                data.guv_order,
                data.gvw_order
            );
            let mut clauses = serde_json::Map::new();
            for (name, clause) in report.clauses() {
                text += &format!("({name}) {}: {}\n", clause.status, clause.witness);
                clauses.insert(name.into(), json!({ "status": clause.status, "witness": clause.witness }));
            }
            let ok = report.clauses().iter().all(|(_, c)| c.status != Status::Fail);
            Ok(Outcome {
                text,
                json: json!({ "two_arc": one_based(arc.vertices()), "clauses": clauses }),
                ok,
            })
        }
        CheckCommand::Criterion { spec } => {
            let spec = load_spec(spec)?;
            let holds = coset_two_arc_criterion(&spec, bounds)?;
            Ok(Outcome {
                text: format!("H = (H ∩ H^(g^-1))(H ∩ H^g): {holds}\n"),
                json: json!({ "criterion": holds }),
                ok: holds,
            })
        }
    }
}

fn case_text(results: &[CaseResult]) -> String {
    let mut out = String::new();
    for r in results {
        out += &format!("{} ({} ms)\n", r.case_id, r.elapsed.as_millis());
        for c in &r.claims {
            out += &format!("  [{}] {}: expected {}, got {}\n", c.status, c.description, c.expected, c.actual);
        }
    }
    out
}

fn case(c: &CaseCommand, bounds: &Bounds, format: Format) -> Result<Outcome, CliError> {
    let results = match c {
        CaseCommand::List => {
            let text: String = CASES
                .iter()
                .map(|c| format!("{:24}{}{}\n", c.id, c.summary, if c.long { " [long]" } else { "" }))
                .collect();
            let json = json!(CASES
                .iter()
                .map(|c| json!({ "id": c.id, "summary": c.summary, "long": c.long }))
                .collect::<Vec<_>>());
            return Ok(Outcome::info(text, json));
        }
        CaseCommand::Run { id } => vec![casebook::run_case(id, bounds)?],
        CaseCommand::RunAll { allow_long } => casebook::run_all(bounds, *allow_long)?,
    };
    let ok = results.iter().all(CaseResult::passed);
    let text = match format {
        Format::Text => case_text(&results),
        Format::Json => String::new(),
    };
    let mut lines = String::new();
    for l in casebook::report_lines(&results) {
        lines += &l;
        lines.push('\n');
    }
    Ok(Outcome {
        text,
        json: Value::String(lines),
        ok,
    })
}
