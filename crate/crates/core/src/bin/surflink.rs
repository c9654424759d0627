use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use surflink::artin::{artin_apply, FreeWord};
use surflink::braid::{braid_equal, full_twist, BraidWord, FamilySpec, Signs, YVariant};
use surflink::constructions::{check_feasible, highgenus, plus_tower, GenusProfile};
use surflink::group::{abelian_verdict, Caps};
use surflink::lattice::lattice_contains;
use surflink::linking::{peripheral_lattice, TorusLink};
use surflink::report::{group_of, LinkInput, Report, SCHEMA};
use surflink::tables::{make_table, Ranges};

#[derive(Parser)]
#[command(name = "surflink", version, about = "Invariants and link groups of torus-covering T^2-links")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = Caps::default().max_rules)]
    max_rules: usize,
    #[arg(long, global = true, default_value_t = Caps::default().max_len)]
    max_len: usize,
    #[arg(long, global = true, default_value_t = Caps::default().max_passes)]
    max_passes: usize,
    /// Seed for `selfcheck` sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Components, their strands and degrees.
    Components(LinkArgs),
    /// Directional linking matrices.
    Lk(LinkArgs),
    /// Double linking numbers (b must be a full twist power).
    Dlk(LinkArgs),
    /// Triple linking numbers and the triple point lower bound.
    Tlk(LinkArgs),
    /// Peripheral rows of each component, optionally testing lattice membership.
    Peripheral {
        #[command(flatten)]
        link: LinkArgs,
        /// Component (from 1) whose lattice is tested with --contains.
        #[arg(long)]
        component: Option<usize>,
        /// Vector in the coordinates of the other components, e.g. `0,1`.
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// Link group presentation.
    Group(LinkArgs),
    /// Abelianness certificate by Knuth-Bendix completion.
    Abelian(LinkArgs),
    /// Every invariant plus the verdict as one versioned report.
    Report(LinkArgs),
    /// Regenerate a table from braid words and diff it against the closed forms.
    Tables {
        #[arg(long)]
        id: u8,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[arg(long, default_value_t = 3)]
        lmax: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Consecutive)]
        variant: VariantArg,
    },
    /// Necessary genus-rank condition for an abelian surface link.
    Feasible {
        /// Comma-separated component genera.
        #[arg(long)]
        genera: String,
    },
    /// Build one of the constructive families and certify it.
    Construct {
        #[arg(long, conflicts_with = "highgenus", required_unless_present = "highgenus")]
        plus: Option<usize>,
        #[arg(long)]
        highgenus: Option<usize>,
        /// Skip the abelianness check.
        #[arg(long)]
        no_certify: bool,
    },
    /// Seeded random checks of the core identities; exits 1 on any failure.
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    X,
    Y,
    Z,
    P,
    Q,
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    Verbatim,
    Consecutive,
}

impl From<VariantArg> for YVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Verbatim => YVariant::Verbatim,
            VariantArg::Consecutive => YVariant::Consecutive,
        }
    }
}

#[derive(Args)]
struct LinkArgs {
    #[arg(long = "braid-a", allow_hyphen_values = true)]
    braid_a: Option<String>,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long = "braid-b", allow_hyphen_values = true, conflicts_with = "twist")]
    braid_b: Option<String>,
    /// Use b = delta2^N.
    #[arg(long = "N", allow_negative_numbers = true)]
    twist: Option<i64>,
    #[arg(long, value_enum, ignore_case = true, conflicts_with_all = ["braid_a", "braid_b"])]
    family: Option<FamilyArg>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Sign triple such as `+,-,+`.
    #[arg(long, allow_hyphen_values = true)]
    e: Option<String>,
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<surflink::Error> for Failure {
    fn from(e: surflink::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type Outcome = Result<(String, serde_json::Value), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_signs(text: &str) -> Result<Signs, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(usage(format!("--e expects three signs like +,-,+, got `{text}`")));
    }
    let mut e = [0i8; 3];
    for (slot, p) in e.iter_mut().zip(&parts) {
        *slot = match *p {
            "+" | "+1" | "1" => 1,
            "-" | "-1" => -1,
            other => return Err(usage(format!("--e: bad sign `{other}`"))),
        };
    }
    Ok(e)
}

impl LinkArgs {
    fn input(&self) -> Result<LinkInput, Failure> {
        if let Some(fam) = self.family {
            let k = self.k.ok_or_else(|| usage("--family needs --k"))?;
            let twist = self.twist.unwrap_or(1);
            let needs_l = matches!(fam, FamilyArg::X | FamilyArg::Y);
            let needs_e = matches!(fam, FamilyArg::X | FamilyArg::Y | FamilyArg::Z);
            let l = if needs_l { self.l.ok_or_else(|| usage("--family X|Y needs --l"))? } else { 0 };
            let e = match (&self.e, needs_e) {
                (Some(t), true) => parse_signs(t)?,
                (None, true) => return Err(usage("--family X|Y|Z needs --e")),
                _ => [1, 1, 1],
            };
            let variant = self.variant.map(YVariant::from).unwrap_or_default();
            let family = match fam {
                FamilyArg::X => FamilySpec::X { k, l, e },
                FamilyArg::Y => FamilySpec::Y { k, l, e, variant },
                FamilyArg::Z => FamilySpec::Z { k, e },
                FamilyArg::P => FamilySpec::P { k },
                FamilyArg::Q => FamilySpec::Q { k },
            };
            return Ok(LinkInput::Family { family, twist });
        }
        let braid_a = self.braid_a.clone().ok_or_else(|| usage("need --braid-a or --family"))?;
        let strands = self.strands.ok_or_else(|| usage("--braid-a needs --strands"))?;
        if self.braid_b.is_none() && self.twist.is_none() {
            return Err(usage("need --braid-b or --N"));
        }
        Ok(LinkInput::Words { strands, braid_a, braid_b: self.braid_b.clone(), twist: self.twist })
    }

    fn link(&self) -> Result<(LinkInput, TorusLink), Failure> {
        let input = self.input()?;
        let link = input.build()?;
        Ok((input, link))
    }
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| r.iter().map(|x| format!("{x:>4}")).collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

fn run(cli: &Cli) -> Outcome {
    let caps = Caps { max_rules: cli.max_rules, max_len: cli.max_len, max_passes: cli.max_passes };
    match &cli.cmd {
        Cmd::Components(a) => {
            let (_, link) = a.link()?;
            let cd = &link.components;
            let mut text = format!("components: {}\n", cd.n);
            for (i, orbit) in cd.orbits.iter().enumerate() {
                let strands: Vec<String> = orbit.iter().map(|s| (s + 1).to_string()).collect();
                text += &format!("  {}: strands {} (degree {})\n", i + 1, strands.join(","), cd.degrees[i]);
            }
            Ok((text, json!(cd)))
        }
        Cmd::Lk(a) => {
            let (_, link) = a.link()?;
            let (la, lb) = (link.lk_a()?, link.lk_b()?);
            let text = format!("lk^a:\n{}\nlk^b:\n{}\n", matrix_text(&la.entries), matrix_text(&lb.entries));
            Ok((text, json!({ "lk_a": la, "lk_b": lb })))
        }
        Cmd::Dlk(a) => {
            let (_, link) = a.link()?;
            let dlk = link
                .dlk()?
                .ok_or_else(|| usage("dlk needs b = delta2^N: pass --N instead of --braid-b"))?;
            let mut text = String::new();
            for i in 0..dlk.len() {
                for j in i + 1..dlk.len() {
                    text += &format!("Dlk({},{}) = {}\n", i + 1, j + 1, dlk[i][j]);
                }
            }
            Ok((text, json!({ "dlk": dlk })))
        }
        Cmd::Tlk(a) => {
            let (_, link) = a.link()?;
            let inv = link.invariants()?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, j, k) in triples(link.n()) {
                let (x, y, z) = inv.tlk.cyclic(i, j, k);
                text += &format!("Tlk({},{},{}) cyclic: ({x}, {y}, {z})\n", i + 1, j + 1, k + 1);
                rows.push(json!({ "indices": [i + 1, j + 1, k + 1], "cyclic": [x, y, z] }));
            }
            text += &format!("triple point lower bound: {}\n", inv.triple_point_lower_bound);
            Ok((text, json!({ "tlk": inv.tlk, "cyclic": rows, "triple_point_lower_bound": inv.triple_point_lower_bound })))
        }
        Cmd::Peripheral { link: a, component, contains } => {
            let (_, link) = a.link()?;
            let inv = link.invariants()?;
            let mut text = String::new();
            for (j, rows) in inv.peripheral.iter().enumerate() {
                text += &format!("component {}: a {:?}, b {:?}\n", j + 1, rows[0], rows[1]);
            }
            let mut value = json!({ "peripheral": inv.peripheral });
            if let Some(v) = contains {
                let c = component.ok_or_else(|| usage("--contains needs --component"))?;
                if c == 0 || c > link.n() {
                    return Err(usage(format!("--component {c} out of range 1..={}", link.n())));
                }
                let v = v
                    .split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| usage(format!("--contains: bad vector `{v}`")))?;
                let lattice = peripheral_lattice(c - 1, &inv.peripheral[c - 1]);
                if v.len() != link.n() - 1 {
                    return Err(usage(format!("--contains needs {} coordinates", link.n() - 1)));
                }
                let member = lattice_contains(&lattice, &v);
                text += &format!("{v:?} in lattice of component {c}: {member}\n");
                value["contains"] = json!({ "component": c, "vector": v, "member": member });
            }
            Ok((text, value))
        }
        Cmd::Group(a) => {
            let (_, link) = a.link()?;
            let p = group_of(&link)?;
            Ok((p.to_text(), json!(p)))
        }
        Cmd::Abelian(a) => {
            let (_, link) = a.link()?;
            let v = abelian_verdict(&group_of(&link)?, &caps)?;
            Ok((format!("{v}\n"), json!(v)))
        }
        Cmd::Report(a) => {
            let input = a.input()?;
            let r = Report::compute(&input, Some(&caps))?;
            let text = r.to_json() + "\n";
            Ok((text, serde_json::to_value(&r).expect("reports serialize")))
        }
        Cmd::Tables { id, kmax, lmax, variant } => {
            let d = make_table(*id, &Ranges { kmax: *kmax, lmax: *lmax, variant: (*variant).into() })?;
            let mut text = String::new();
            if *id == 2 {
                for b in &d.bounds {
                    text += &format!(
                        "{:?}_{{{},{},{:?}}}: computed {} printed {} ({:?})\n",
                        b.family, b.k, b.l, b.e, b.computed, b.printed, b.label
                    );
                }
            } else {
                let bad: Vec<_> = d.mismatches().collect();
                text += &format!("table {id}: {} cells, {} mismatches\n", d.cells.len(), bad.len());
                for c in bad {
                    text += &format!(
                        "  {:?} k={} l={} e={:?} {}: computed {} printed {}\n",
                        c.family, c.k, c.l, c.e, c.column, c.computed, c.expected
                    );
                }
            }
            Ok((text, json!(d)))
        }
        Cmd::Feasible { genera } => {
            let p = GenusProfile::parse(genera).map_err(|e| usage(format!("--genera: {e}")))?;
            let (text, fail) = match check_feasible(&p) {
                Ok(()) => ("feasible\n".to_string(), None),
                Err(f) => (format!("infeasible ({f})\n"), Some(f)),
            };
            Ok((text, json!({ "genera": p.genera, "feasible": fail.is_none(), "failure": fail })))
        }
        Cmd::Construct { plus, highgenus: hg, no_certify } => {
            let rec = match (plus, hg) {
                (Some(n), _) => plus_tower(*n)?,
                (None, Some(n)) => highgenus(*n)?,
                (None, None) => return Err(usage("need --plus or --highgenus")),
            };
            let rec = if *no_certify { rec } else { rec.certify(&caps)? };
            Ok((rec.log(), json!(rec)))
        }
        Cmd::Selfcheck { cases } => selfcheck(cli.seed, *cases),
    }
}

fn random_word(rng: &mut ChaCha8Rng, m: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..m as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(m, letters).expect("generators in range")
}

/// Samples braids and checks product preservation, lk symmetry for full twists
/// and the Dlk/Tlk cross-checks that run inside the invariant code.
fn selfcheck(seed: u64, cases: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..cases {
        let m = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=10);
        let a = random_word(&mut rng, m, len);
        let product = (1..=m).fold(FreeWord::identity(m), |acc, i| acc.mul(&FreeWord::generator(m, i)));
        if artin_apply(&a, &product)? != product {
            failures.push(format!("case {case}: product not preserved by {a}"));
        }
        let n = rng.gen_range(-2..=2);
        let link = TorusLink::with_full_twist(a.clone(), n);
        if !link.lk_a()?.is_symmetric() {
            failures.push(format!("case {case}: lk^a asymmetric for {a}"));
        }
        link.invariants()?;
        let twisted = &a * &full_twist(m, 1);
        let untwisted = &full_twist(m, 1) * &a;
        if !braid_equal(&twisted, &untwisted)? {
            failures.push(format!("case {case}: full twist not central for {a}"));
        }
    }
    let text = if failures.is_empty() {
        format!("selfcheck: {cases} cases, seed {seed}, all passed\n")
    } else {
        format!("selfcheck: {} of {cases} cases failed\n{}\n", failures.len(), failures.join("\n"))
    };
    if failures.is_empty() {
        Ok((text, json!({ "seed": seed, "cases": cases, "failures": failures })))
    } else {
        Err(Failure::Compute(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value)) => {
            let body = if cli.json {
                let out = json!({ "schema": SCHEMA, "result": value });
                serde_json::to_string_pretty(&out).expect("json values serialize") + "\n"
            } else {
                text
            };
            // A closed pipe (e.g. `| head`) is not an error for the caller.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
