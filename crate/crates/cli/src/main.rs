//! `krc`: crystal graphs, R-matrix images and verification suites.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kr_crystals::cartan::classical_weights;
use kr_crystals::crystal::is_highest;
use kr_crystals::kr::{enumerate_highest_left, is_tensor_highest, Id};
use kr_crystals::pm::phi;
use kr_crystals::rmatrix::{closed_form_r, Violations};
use kr_crystals::verify::{self, TensorCase};
use kr_crystals::{CartanKind, CartanSpec, CoordElement, Crystal, Error, KRSpec, KrCrystal, KrElement};

#[derive(Parser)]
#[command(name = "krc", version, about = "Kirillov-Reshetikhin crystals, R-matrices and energies")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Crystal graph of B^{r,k}
    Graph {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Omit the 0-arrows
        #[arg(long)]
        classical: bool,
    },
    /// R: B^{r,k} ⊗ B^{1,l} → B^{1,l} ⊗ B^{r,k} and the energy H
    Rmatrix {
        #[command(flatten)]
        spec: SpecArgs,
        /// JSON array `[left, right]` of element objects; defaults to u0 ⊗ u0'
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Every classically highest element, by both methods
        #[arg(long)]
        all_highest: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run verification suites; exit 1 on any violation
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    k: usize,
    /// Width of the B^{1,l} factor
    #[arg(long, default_value_t = 1)]
    l: usize,
    /// Maximum number of crystal elements
    #[arg(long, default_value_t = 200_000)]
    cap: usize,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    D1,
    B1,
    A2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Brute,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Axioms,
    Branching,
    Theorem,
    Highest,
    All,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

impl SpecArgs {
    fn kr(&self) -> Result<KRSpec, Error> {
        let kind = match self.kind {
            Kind::D1 => CartanKind::D1,
            Kind::B1 => CartanKind::B1,
            Kind::A2 => CartanKind::A2Odd,
        };
        KRSpec::new(CartanSpec::new(kind, self.n)?, self.r, self.k)
    }
}

fn el_json(c: &KrCrystal, b: Id) -> Value {
    let e = if c.spec().r == 1 {
        KrElement::Coord(c.coord_of(b).expect("rows have coordinates"))
    } else {
        KrElement::Tableau { cols: c.element(b).clone() }
    };
    serde_json::to_value(e).expect("serializable")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn cmd_graph(spec: &SpecArgs, format: Format, classical: bool) -> Outcome {
    let kr = KrCrystal::build(spec.kr()?, spec.cap)?;
    let indices = if classical { kr.cartan().classical_indices() } else { kr.cartan().affine_indices() };
    let g = kr.graph(&indices);
    match format {
        Format::Json => {
            print_json(&g.to_json(|t| serde_json::to_value(KrElement::Tableau { cols: t.clone() }).unwrap()))
        }
        Format::Dot => print!("{}", g.to_dot(&kr.spec().to_string(), |t| t.pretty())),
        Format::Table => {
            let n = kr.cartan().n();
            let mut out = String::new();
            for b in kr.ids() {
                let eps: Vec<String> = (0..=n).map(|i| kr.eps_phi(i, &b).0.to_string()).collect();
                let phis: Vec<String> = (0..=n).map(|i| kr.eps_phi(i, &b).1.to_string()).collect();
                writeln!(
                    out,
                    "{b:>6}  {:<24} wt={:?} eps=[{}] phi=[{}]",
                    kr.element(b).pretty(),
                    kr.weight(&b).0,
                    eps.join(","),
                    phis.join(",")
                )
                .unwrap();
            }
            print!("{out}");
        }
    }
    Ok(())
}

fn parse_pair(js: &str) -> Result<(KrElement, KrElement), Failure> {
    serde_json::from_str(js).map_err(|e| Failure::Usage(format!("--element must be a JSON array [left, right]: {e}")))
}

fn cmd_rmatrix(spec: &SpecArgs, element: Option<&str>, method: Method, all: bool, format: Format) -> Outcome {
    let ks = spec.kr()?;
    let case = TensorCase::build(ks, spec.l, spec.cap)?;
    let (big, row) = (&case.big, &case.row);
    let cartan = ks.cartan;
    if all {
        let top = row.id_of_coord(&CoordElement::top(&cartan, spec.l)).expect("1^l present");
        let rows: Vec<Value> = enumerate_highest_left(&ks, spec.l)
            .iter()
            .map(|(mu, x)| {
                let src = (big.highest_of(mu).unwrap(), row.id_of_coord(x).unwrap());
                let (y, b) = case.forward.image(src);
                let closed = closed_form_r(&ks, mu, x).map_err(|e| e.to_string());
                let closed_img = closed.as_ref().ok().and_then(|(p, _)| phi(&cartan, p).ok()).and_then(|t| big.id_of(&t));
                json!({
                    "src": [el_json(big, src.0), el_json(row, src.1)],
                    "brute": {"dst": [el_json(row, y), el_json(big, b)], "H": case.forward.energy(src)},
                    "closed": match &closed {
                        Ok((p, h)) => json!({"P": p.to_string(), "dst": closed_img.map(|c| json!([el_json(row, top), el_json(big, c)])), "H": h}),
                        Err(e) => json!({"error": e}),
                    },
                    "agree": closed.as_ref().ok().map(|(_, h)| *h) == Some(case.forward.energy(src))
                        && (top, closed_img) == (y, Some(b)),
                })
            })
            .collect();
        let agree = rows.iter().all(|r| r["agree"] == json!(true));
        if format == Format::Table {
            for r in &rows {
                println!(
                    "{} | brute H={} | closed {} H={} | {}",
                    r["src"],
                    r["brute"]["H"],
                    r["closed"]["P"],
                    r["closed"]["H"],
                    if r["agree"] == json!(true) { "ok" } else { "MISMATCH" }
                );
            }
        } else {
            print_json(&Value::Array(rows));
        }
        return if agree { Ok(()) } else { Err(Failure::Verification("closed form and oracle disagree".into())) };
    }

    let src = match element {
        None => (big.u0(), row.u0()),
        Some(js) => {
            let (a, b) = parse_pair(js)?;
            let x = big.id_of(&a.to_tableau()).ok_or_else(|| Failure::Usage(format!("left factor is not in {ks}")))?;
            let y = row
                .id_of(&b.to_tableau())
                .ok_or_else(|| Failure::Usage(format!("right factor is not in B^(1,{})", spec.l)))?;
            (x, y)
        }
    };
    let mut out = json!({"src": [el_json(big, src.0), el_json(row, src.1)]});
    let (y, b) = case.forward.image(src);
    let h = case.forward.energy(src);
    if method != Method::Closed {
        out["dst"] = json!([el_json(row, y), el_json(big, b)]);
        out["H"] = json!(h);
    }
    if method != Method::Brute {
        let highest = is_highest(big, &src.0, &cartan.classical_indices())
            && is_tensor_highest(&cartan, big, &src.0, row, &src.1);
        if !highest {
            if method == Method::Closed {
                return Err(Failure::Usage("the closed form needs a classically highest element".into()));
            }
            out["closed"] = json!(null);
        } else {
            let mu = big.element(src.0).shape();
            let x: CoordElement = row.coord_of(src.1)?;
            let (p, hc) = closed_form_r(&ks, &mu, &x)?;
            let img = big
                .id_of(&phi(&cartan, &p)?)
                .ok_or_else(|| Failure::Verification("Φ(P) is not in the crystal".into()))?;
            let top = row.id_of_coord(&CoordElement::top(&cartan, spec.l)).unwrap();
            out["P"] = json!(p.to_string());
            if method == Method::Closed {
                out["dst"] = json!([el_json(row, top), el_json(big, img)]);
                out["H"] = json!(hc);
            } else if (top, img, hc) != (y, b, h) {
                print_json(&out);
                return Err(Failure::Verification(format!("closed form gives {p} with H = {hc}, oracle H = {h}")));
            }
        }
    }
    print_json(&out);
    Ok(())
}

fn summarize(name: &str, v: &Violations) -> bool {
    println!("{name}: {} checks, {} violations", v.checked, v.failed);
    for s in &v.samples {
        println!("  {s}");
    }
    v.is_clean()
}

fn cmd_verify(spec: &SpecArgs, suite: Suite) -> Outcome {
    let ks = spec.kr()?;
    let runs = |s: Suite| suite == Suite::All || suite == s;
    let mut ok = true;
    if runs(Suite::Branching) {
        let mut v = Violations::default();
        for lam in classical_weights(&ks) {
            println!("Λ = {lam}");
            for (inner, found, expect) in verify::branching_table(&ks.cartan, &lam, spec.cap)? {
                println!("  λ = {:<10} J-highest {found:>4}  diagrams {expect:>4}", inner.to_string());
                v.check(found == expect, || format!("Λ = {lam}, λ = {inner}: {found} vs {expect}"));
            }
        }
        ok &= summarize("branching", &v);
    }
    if !(runs(Suite::Axioms) || runs(Suite::Theorem) || runs(Suite::Highest)) {
        return finish(ok);
    }
    let case = TensorCase::build(ks, spec.l, spec.cap)?;
    if runs(Suite::Axioms) {
        let mut v = verify::axioms_suite(&case.big);
        v.merge(verify::axioms_suite(&case.row));
        v.merge(verify::phi_round_trip_suite(&case.big)?);
        ok &= summarize("axioms", &v);
        let mut c = verify::coordinate_suite(&case.row)?;
        if ks.r == 1 {
            c.merge(verify::coordinate_suite(&case.big)?);
        }
        ok &= summarize("coordinates", &c);
    }
    if runs(Suite::Highest) {
        ok &= summarize("highest", &verify::highest_suite(&case)?);
    }
    if runs(Suite::Theorem) {
        ok &= summarize("r-table", &verify::rtable_suite(&case));
        ok &= summarize("energy", &verify::energy_suite(&case));
        let rep = verify::theorem_suite(&case)?;
        println!("highest elements: {} left, {} right", rep.highest_left, rep.highest_right);
        ok &= summarize("theorem", &rep.theorem);
        ok &= summarize("inverse", &rep.inverse);
        ok &= summarize("full-width", &rep.full_width);
        ok &= summarize("energy forms", &rep.energy_forms);
    }
    finish(ok)
}

fn finish(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let spec = match &cli.cmd {
        Cmd::Graph { spec, .. } | Cmd::Rmatrix { spec, .. } | Cmd::Verify { spec, .. } => spec,
    };
    if let Some(t) = spec.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("krc: {e}");
            return ExitCode::from(2);
        }
    }
    let res = match &cli.cmd {
        Cmd::Graph { spec, format, classical } => cmd_graph(spec, *format, *classical),
        Cmd::Rmatrix { spec, element, method, all_highest, format } => {
            cmd_rmatrix(spec, element.as_deref(), *method, *all_highest, *format)
        }
        Cmd::Verify { spec, suite } => cmd_verify(spec, *suite),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("krc: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("krc: {m}");
            ExitCode::from(2)
        }
    }
}
