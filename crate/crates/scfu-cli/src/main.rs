use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use scfu::algebra::{convert, coproduct, product, takeuchi_antipode, Basis, FriendlyOrder, HopfElement, Key, Tensor};
use scfu::closedform::{antipode_chi_single_arc, antipode_kappa, antipode_p_friendly, antipode_p_q, minimal_coarsenings};
use scfu::combinatorics::enumerate::{enumerate_arcsets, enumerate_orders, enumerate_set_compositions};
use scfu::combinatorics::{LabelSet, LinearOrder};
use scfu::notation::{element_from_json, element_to_json, latex_arc_diagram, parse_arcs, parse_order, pi_to_json, tensor_to_json};
use scfu::pi::{c_table, pi_p_antipode};
use scfu::primitives::{is_primitive, q_primitive};
use scfu::ribbon::{enumerate_phi_set, ribbon_lhs, ribbon_rhs};
use scfu::verify::{effective_max_n, run_suite, CheckReport, Suite};

#[derive(Parser)]
#[command(name = "scfu", version, about = "Antipodes, primitives and ribbon identities for superclass functions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Takeuchi,
    Both,
}

/// A single basis element given by order and arcs, or a JSON element.
#[derive(Args)]
struct ElementArgs {
    /// Basis: kappa, pq, chi, pfriendly or pfriendly:{refinement|inclusion|atomic}.
    #[arg(long, default_value = "kappa")]
    basis: String,
    /// Space-separated labels, e.g. "3 1 2".
    #[arg(long, conflicts_with = "input")]
    order: Option<String>,
    /// Comma-separated arcs, e.g. "1-3,3-2".
    #[arg(long, default_value = "", conflicts_with = "input")]
    arcs: String,
    /// JSON element (inline, or @path to read a file); its basis overrides --basis.
    #[arg(long)]
    input: Option<String>,
}

impl ElementArgs {
    fn element(&self) -> Result<HopfElement> {
        if let Some(src) = &self.input {
            let text = match src.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
                None => src.clone(),
            };
            return Ok(element_from_json(&text)?);
        }
        let order = self.order.as_deref().context("either --order or --input is required")?;
        let basis = Basis::from_name(&self.basis)?;
        Ok(HopfElement::basis_element(basis, parse_order(order)?, parse_arcs(&self.arcs)?)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Antipode of an element, by closed form, by Takeuchi's formula, or both.
    Antipode {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Δ_{I,J} of an element; J is the complement of I.
    Coproduct {
        #[command(flatten)]
        element: ElementArgs,
        /// Labels of the left block I.
        #[arg(long)]
        left: String,
    },
    /// Product of two basis elements on disjoint label sets.
    Product {
        #[arg(long, default_value = "kappa")]
        basis: String,
        #[arg(long)]
        left_order: String,
        #[arg(long, default_value = "")]
        left_arcs: String,
        #[arg(long)]
        right_order: String,
        #[arg(long, default_value = "")]
        right_arcs: String,
    },
    /// Change of basis.
    Convert {
        #[command(flatten)]
        element: ElementArgs,
        /// Target basis.
        #[arg(long)]
        to: String,
    },
    /// Ribbon fillings and the factorization identity.
    Ribbon {
        #[command(subcommand)]
        action: RibbonAction,
    },
    /// Primitive elements Q.
    Primitives {
        #[command(subcommand)]
        action: PrimitivesAction,
    },
    /// The projection to symmetric functions in noncommuting variables.
    Pi {
        #[command(subcommand)]
        action: PiAction,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// List combinatorial objects.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
}

#[derive(Subcommand)]
enum RibbonAction {
    /// Check the identity for every φ ∈ L[n], τ = ε_n, up to n.
    Verify {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Show the fillings in Φ_τ(φ) and both sides of the identity.
    Show {
        #[arg(long)]
        phi: String,
        /// Defaults to the increasing order on the labels of φ.
        #[arg(long)]
        tau: Option<String>,
    },
}

#[derive(Subcommand)]
enum PrimitivesAction {
    /// Q_{(φ,λ)} expanded in a P^≥ basis.
    Q {
        #[arg(long)]
        order: String,
        #[arg(long, default_value = "")]
        arcs: String,
        #[arg(long, default_value = "inclusion")]
        friendly: String,
    },
    /// Run the primitives suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum PiAction {
    /// Signed c-coefficient table of the projected P antipode.
    AntipodeP {
        #[arg(long, default_value = "")]
        arcs: String,
        /// Degree; defaults to the largest label in the arcs.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "inclusion")]
        friendly: String,
    },
}

#[derive(Subcommand)]
enum EnumerateWhat {
    /// All orders of {1,…,n}.
    Orders {
        #[arg(long)]
        n: usize,
    },
    /// All arc sets compatible with an order.
    Arcsets {
        #[arg(long)]
        order: String,
    },
    /// All set compositions of {1,…,n}.
    Compositions {
        #[arg(long)]
        n: usize,
    },
    /// The minimal coarsenings A_τ(φ,λ).
    Coarsenings {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        phi: String,
        #[arg(long, default_value = "")]
        arcs: String,
    },
}

enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Antipode { element, method } => antipode(fmt, element, *method, out),
        Command::Coproduct { element, left } => {
            let x = element.element()?;
            let i = parse_order(left)?.ground();
            if !i.is_subset(&x.ground()) {
                bail!("--left contains labels outside the ground set {}", x.ground());
            }
            let j = x.ground().difference(&i);
            emit_tensor(fmt, &coproduct(&x, &i, &j)?, out)?;
            Ok(Outcome::Ok)
        }
        Command::Product { basis, left_order, left_arcs, right_order, right_arcs } => {
            let b = Basis::from_name(basis)?;
            let x = HopfElement::basis_element(b, parse_order(left_order)?, parse_arcs(left_arcs)?)?;
            let y = HopfElement::basis_element(b, parse_order(right_order)?, parse_arcs(right_arcs)?)?;
            emit_element(fmt, &product(&x, &y)?, out)?;
            Ok(Outcome::Ok)
        }
        Command::Convert { element, to } => {
            let x = element.element()?;
            emit_element(fmt, &convert(&x, Basis::from_name(to)?)?, out)?;
            Ok(Outcome::Ok)
        }
        Command::Ribbon { action: RibbonAction::Verify { n } } => verify(fmt, &[Suite::Ribbon], *n, out),
        Command::Ribbon { action: RibbonAction::Show { phi, tau } } => ribbon_show(fmt, phi, tau.as_deref(), out),
        Command::Primitives { action: PrimitivesAction::Q { order, arcs, friendly } } => {
            let o = FriendlyOrder::from_name(friendly)?;
            let q = q_primitive(&parse_order(order)?, &parse_arcs(arcs)?, o)?;
            emit_element(fmt, &q, out)?;
            if fmt == Format::Text {
                let report = is_primitive(&q)?;
                writeln!(out, "primitive: {}", report.is_primitive)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Primitives { action: PrimitivesAction::Verify { max_n } } => verify(fmt, &[Suite::Primitives], *max_n, out),
        Command::Pi { action: PiAction::AntipodeP { arcs, n, friendly } } => pi_antipode_p(fmt, arcs, *n, friendly, out),
        Command::Verify { suite, max_n } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![Suite::from_name(suite)?] };
            verify(fmt, &suites, *max_n, out)
        }
        Command::Enumerate { what } => enumerate(fmt, what, out),
    }
}

fn closed_antipode(x: &HopfElement) -> Result<HopfElement> {
    let mut acc = HopfElement::zero(x.basis(), x.ground());
    for (k, c) in x.terms() {
        let s = match x.basis() {
            Basis::Kappa => antipode_kappa(&k.order, &k.arcs)?,
            Basis::Pq => antipode_p_q(&k.order, &k.arcs)?,
            Basis::Friendly(o) => antipode_p_friendly(&k.order, &k.arcs, o)?,
            Basis::Chi => {
                let l = k.order.labels();
                let single = k.arcs.len() == 1
                    && l.len() >= 2
                    && k.arcs.arcs()[0].left == l[0]
                    && k.arcs.arcs()[0].right == l[l.len() - 1];
                if !single {
                    bail!("the closed chi antipode needs exactly one arc from the first to the last label of the order");
                }
                antipode_chi_single_arc(&k.order)?
            }
        };
        acc = acc.add(&s.scale(c))?;
    }
    Ok(acc)
}

fn antipode(fmt: Format, args: &ElementArgs, method: Method, out: &mut impl Write) -> Result<Outcome> {
    let x = args.element()?;
    match method {
        Method::Closed => {
            emit_element(fmt, &closed_antipode(&x)?, out)?;
            Ok(Outcome::Ok)
        }
        Method::Takeuchi => {
            emit_element(fmt, &takeuchi_antipode(&x)?, out)?;
            Ok(Outcome::Ok)
        }
        Method::Both => {
            let closed = closed_antipode(&x)?;
            let oracle = takeuchi_antipode(&x)?;
            let same = closed == oracle;
            match fmt {
                Format::Json => {
                    let v = serde_json::json!({
                        "match": same,
                        "closed": serde_json::from_str::<serde_json::Value>(&element_to_json(&closed))?,
                        "takeuchi": serde_json::from_str::<serde_json::Value>(&element_to_json(&oracle))?,
                    });
                    writeln!(out, "{v}")?;
                }
                _ if same => {
                    writeln!(out, "match, {} terms", closed.len())?;
                    emit_element(fmt, &closed, out)?;
                }
                _ => {
                    writeln!(out, "MISMATCH")?;
                    for k in x.terms().keys() {
                        writeln!(out, "order: {}\narcs: {}", k.order, k.arcs)?;
                    }
                    writeln!(out, "closed:   {closed}")?;
                    writeln!(out, "takeuchi: {oracle}")?;
                    writeln!(out, "difference: {}", closed.sub(&oracle)?)?;
                }
            }
            Ok(if same { Outcome::Ok } else { Outcome::Mismatch })
        }
    }
}

fn emit_element(fmt: Format, x: &HopfElement, out: &mut impl Write) -> Result<()> {
    match fmt {
        Format::Json => writeln!(out, "{}", element_to_json(x))?,
        Format::Text => writeln!(out, "{x}")?,
        Format::Latex => {
            writeln!(out, "{}", x.latex())?;
            for (k, c) in x.terms() {
                writeln!(out, "% coefficient {}", c.render_latex())?;
                writeln!(out, "{}", latex_arc_diagram(k))?;
            }
        }
    }
    Ok(())
}

fn emit_tensor(fmt: Format, t: &Tensor, out: &mut impl Write) -> Result<()> {
    match fmt {
        Format::Json => writeln!(out, "{}", tensor_to_json(t))?,
        Format::Text => writeln!(out, "{t}")?,
        Format::Latex => {
            let terms: Vec<String> = t
                .terms()
                .iter()
                .map(|(ks, c)| {
                    let f: Vec<String> = ks.iter().map(Key::latex).collect();
                    format!("{} \\cdot {}", c.render_latex(), f.join(" \\otimes "))
                })
                .collect();
            writeln!(out, "{}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })?;
        }
    }
    Ok(())
}

fn ribbon_show(fmt: Format, phi: &str, tau: Option<&str>, out: &mut impl Write) -> Result<Outcome> {
    let phi = parse_order(phi)?;
    let tau = match tau {
        Some(t) => parse_order(t)?,
        None => LinearOrder::new(phi.ground().iter())?,
    };
    let fillings = enumerate_phi_set(&phi, &tau)?;
    let (lhs, rhs) = (ribbon_lhs(&phi, &tau)?, ribbon_rhs(&phi, &tau)?);
    match fmt {
        Format::Json => {
            let v = serde_json::json!({
                "phi": phi.to_string(),
                "tau": tau.to_string(),
                "fillings": fillings.iter().map(|g| serde_json::json!({
                    "shape": g.shape.to_string(),
                    "rows": g.row_values().iter().map(|r| r.iter().map(|l| l.0).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "lhs": lhs.render("t", false),
                "rhs": rhs.render("t", false),
                "equal": lhs == rhs,
            });
            writeln!(out, "{v}")?;
        }
        _ => {
            for g in &fillings {
                writeln!(out, "{}", g.shape)?;
                writeln!(out, "{}\n", g.render())?;
            }
            writeln!(out, "fillings: {}", fillings.len())?;
            writeln!(out, "rhs: {}", rhs.render("t", true))?;
            writeln!(out, "lhs: {}", lhs.render("t", true))?;
        }
    }
    Ok(if lhs == rhs { Outcome::Ok } else { Outcome::Mismatch })
}

fn pi_antipode_p(fmt: Format, arcs: &str, n: Option<usize>, friendly: &str, out: &mut impl Write) -> Result<Outcome> {
    let lambda = parse_arcs(arcs)?;
    let top = lambda.support().iter().map(|l| l.0 as usize).max().unwrap_or(1);
    let n = n.unwrap_or(top);
    let o = FriendlyOrder::from_name(friendly)?;
    match fmt {
        Format::Json => writeln!(out, "{}", pi_to_json(&pi_p_antipode(&lambda, n, o)?))?,
        Format::Text => {
            writeln!(out, "{:<24} {:>6} {:>5}", "mu", "c", "sign")?;
            for (mu, c, s) in c_table(&lambda, n)? {
                let name = if mu.is_empty() { "(none)".to_string() } else { mu.to_string() };
                writeln!(out, "{name:<24} {c:>6} {s:>5}")?;
            }
        }
        Format::Latex => {
            let terms: Vec<String> = c_table(&lambda, n)?
                .into_iter()
                .map(|(mu, c, s)| {
                    let arcs: Vec<String> = mu.arcs().iter().map(|a| format!("{}\\frown {}", a.left, a.right)).collect();
                    format!("{}{} P_{{\\{{{}\\}}}}", if s < 0 { "-" } else { "+" }, c, arcs.join(","))
                })
                .collect();
            writeln!(out, "{}", terms.join(" "))?;
        }
    }
    Ok(Outcome::Ok)
}

fn verify(fmt: Format, suites: &[Suite], requested: usize, out: &mut impl Write) -> Result<Outcome> {
    let max_n = effective_max_n(requested);
    if max_n < requested {
        eprintln!("SCFU_MAX_N caps the sweep at n = {max_n}");
    }
    let mut reports: Vec<CheckReport> = Vec::new();
    for &s in suites {
        reports.extend(run_suite(s, max_n, |r| eprintln!("{r}"))?);
    }
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
    match fmt {
        Format::Json => {
            let v: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "check": r.name,
                        "n": r.n,
                        "cases": r.cases,
                        "mismatches": r.mismatches.len(),
                        "first_mismatch": r.mismatches.first().map(|m| m.to_string()),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(v))?;
        }
        _ => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            if let Some(r) = failed.first() {
                writeln!(out, "\nfirst counterexample ({}):\n{}", r.name, r.mismatches[0])?;
            }
            writeln!(out, "{}", if failed.is_empty() { "pass" } else { "FAIL" })?;
        }
    }
    Ok(if failed.is_empty() { Outcome::Ok } else { Outcome::Mismatch })
}

fn enumerate(fmt: Format, what: &EnumerateWhat, out: &mut impl Write) -> Result<Outcome> {
    let lines: Vec<String> = match what {
        EnumerateWhat::Orders { n } => enumerate_orders(&LinearOrder::identity(*n).ground()).iter().map(|o| o.to_string()).collect(),
        EnumerateWhat::Arcsets { order } => enumerate_arcsets(&parse_order(order)?).iter().map(|a| a.to_string()).collect(),
        EnumerateWhat::Compositions { n } => enumerate_set_compositions(&LinearOrder::identity(*n).ground())
            .iter()
            .map(|c| c.blocks().iter().map(LabelSet::to_string).collect::<Vec<_>>().join(" "))
            .collect(),
        EnumerateWhat::Coarsenings { tau, phi, arcs } => {
            minimal_coarsenings(&parse_order(tau)?, &parse_order(phi)?, &parse_arcs(arcs)?)?.iter().map(|a| a.to_string()).collect()
        }
    };
    match fmt {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&lines)?)?,
        _ => {
            for l in &lines {
                writeln!(out, "{l}")?;
            }
        }
    }
    Ok(Outcome::Ok)
}
