//! The `fusioncell` command line.
//!
//! Groups are given as inline JSON, a path to a JSON spec, or a shorthand
//! (`cyclic:n`, `elem-abelian:p^k`, `sym:n`, `wreath:p,n,q`, `b3r:r,gamma`,
//! `sz8`). Fusion systems are given as inline JSON, a path, or `GROUP@p`.
//!
//! Exit codes: 0 success, 2 bad input, 3 cap exceeded, 4 external data
//! required, 5 internal error.

mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog;
use crate::cellularity;
use crate::error::{Error, Result};
use crate::fusion::{FusionSpec, FusionSystem};
use crate::group::{build_group_with, Caps, Elem, GroupHom};

#[derive(Debug, Parser)]
#[command(name = "fusioncell", version, about = "Fusion systems and cellularity of their classifying spaces")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached fusion tables (FUSIONCELL_CACHE takes precedence).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Largest group order any closure may enumerate.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// JSON list of seed morphisms `[{"domain":[..],"map":{..}}]`.
    #[arg(long, global = true, value_name = "FILE")]
    seed_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FusionArg {
    /// Fusion system: JSON file, inline JSON, or GROUP@p.
    #[arg(long)]
    fusion: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a group and summarize it.
    Group {
        spec: String,
        /// Print only the expanded JSON spec.
        #[arg(long)]
        spec_only: bool,
    },
    /// List every subgroup.
    Subgroups { spec: String },
    /// Build a fusion system and summarize it.
    Fusion {
        #[command(flatten)]
        f: FusionArg,
        /// Print the full morphism tables.
        #[arg(long)]
        tables: bool,
    },
    /// Check both saturation axioms.
    Saturated {
        #[command(flatten)]
        f: FusionArg,
    },
    /// The closure Cl_F(P).
    Closure {
        #[command(flatten)]
        f: FusionArg,
        #[arg(long = "P", value_name = "GROUP")]
        p: String,
    },
    /// Decide BP-cellularity of BF.
    Cellular {
        #[command(flatten)]
        f: FusionArg,
        #[arg(long = "P", value_name = "GROUP")]
        p: String,
    },
    /// Omega_{p^m}(S).
    Omega {
        #[command(flatten)]
        f: FusionArg,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Least m with BF cellular for B(Z/p^m).
    M0 {
        #[command(flatten)]
        f: FusionArg,
    },
    /// The hyperfocal subgroup.
    Hyperfocal {
        #[command(flatten)]
        f: FusionArg,
    },
    /// The fundamental group S / hyperfocal, or the exotic check on B(3,r;0,gamma,0).
    Pi1 {
        #[arg(long, required_unless_present = "b3r", conflicts_with = "b3r")]
        fusion: Option<String>,
        /// `r,gamma`: run the exotic check with seeds from --seed-file or --order-two.
        #[arg(long, value_name = "R,GAMMA")]
        b3r: Option<String>,
        /// Use every order-two automorphism of S as a seed.
        #[arg(long, requires = "b3r")]
        order_two: bool,
    },
    /// The fusion-invariance certificate for a strongly closed K.
    Certificate {
        #[command(flatten)]
        f: FusionArg,
        /// Members of K, e.g. `[0,4,8]`.
        #[arg(long = "K", value_name = "MEMBERS")]
        k: String,
    },
    /// Named groups.
    Catalog {
        #[command(subcommand)]
        entry: CatalogEntry,
    },
    /// Saturation, hyperfocal data, m0 and optionally cellularity in one report.
    Report {
        #[command(flatten)]
        f: FusionArg,
        #[arg(long = "P", value_name = "GROUP")]
        p: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogEntry {
    /// B(3,r;0,gamma,0) with its named elements.
    B3r {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        gamma: u32,
        /// Look for x outside N with x^(3^l) = e.
        #[arg(long, conflicts_with = "verdict")]
        census: bool,
        /// Cellularity verdict for B(Z/3^l), from declared facts.
        #[arg(long)]
        verdict: bool,
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Z/p^n wr Z/q.
    Wreath {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
    },
    /// Sz(8) and its Sylow 2-subgroup.
    Sz8,
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::InvalidSpec(_)
            | Error::InvalidInput(_)
            | Error::SubgroupMismatch(_)
            | Error::Io(_) => 2,
            Error::OrderCapExceeded { .. } => 3,
            Error::ExternalDataRequired(_) => 4,
            Error::RelationCheckFailed(_) | Error::Internal(_) => 5,
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn main() -> i32 {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Ctx {
    json: bool,
    caps: Caps,
    cache: Option<PathBuf>,
    seed_file: Option<PathBuf>,
}

impl Ctx {
    fn fusion(&self, arg: &str) -> Result<FusionSystem> {
        let spec = input::fusion_spec(arg, self.seed_file.as_deref())?;
        input::load_fusion(&spec, &self.caps, self.cache.as_deref())
    }

    fn emit(&self, value: impl Serialize, text: impl FnOnce() -> String) -> Result<String> {
        if self.json {
            Ok(serde_json::to_string_pretty(&value)?)
        } else {
            Ok(text())
        }
    }
}

/// Executes a parsed command and returns what it prints on stdout.
pub fn run(cli: &Cli) -> Result<String> {
    let mut caps = Caps::default();
    if let Some(cap) = cli.cap {
        caps.max_order = cap;
    }
    let cache = std::env::var_os("FUSIONCELL_CACHE")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| cli.cache_dir.clone());
    let ctx = Ctx {
        json: cli.json,
        caps,
        cache,
        seed_file: cli.seed_file.clone(),
    };
    match &cli.command {
        Command::Group { spec, spec_only } => {
            let spec = input::group_spec(spec)?;
            if *spec_only {
                return Ok(spec.to_json());
            }
            let g = build_group_with(&spec, &ctx.caps)?;
            let v = json!({
                "spec": spec,
                "label": g.label(),
                "order": g.order(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "generators": g.generators(),
            });
            ctx.emit(&v, || {
                format!(
                    "{}\norder: {}\nexponent: {}\nabelian: {}\ngenerators: {:?}",
                    g.label(),
                    g.order(),
                    g.exponent(),
                    g.is_abelian(),
                    g.generators()
                )
            })
        }
        Command::Subgroups { spec } => {
            let g = build_group_with(&input::group_spec(spec)?, &ctx.caps)?;
            let subs = g.all_subgroups_capped(ctx.caps.max_subgroup_enumeration)?;
            ctx.emit(&subs, || {
                let mut out = format!("{} subgroups of {}", subs.len(), g.label());
                for h in &subs {
                    out.push_str(&format!("\n{:>6}  {:?}", h.order(), h.members()));
                }
                out
            })
        }
        Command::Fusion { f, tables } => {
            let spec = input::fusion_spec(&f.fusion, ctx.seed_file.as_deref())?;
            let fs = input::load_fusion(&spec, &ctx.caps, ctx.cache.as_deref())?;
            if *tables {
                return Ok(serde_json::to_string(&fs.to_tables()?)?);
            }
            fusion_summary(&ctx, &spec, &fs)
        }
        Command::Saturated { f } => {
            let report = ctx.fusion(&f.fusion)?.is_saturated()?;
            ctx.emit(&report, || {
                let mut out = format!("saturated: {}", report.saturated);
                for w in &report.witnesses {
                    out.push_str(&format!("\n  {:?} at {:?}: {}", w.axiom, w.subgroup, w.detail));
                }
                out
            })
        }
        Command::Closure { f, p } => {
            let fs = ctx.fusion(&f.fusion)?;
            let pg = build_group_with(&input::group_spec(p)?, &ctx.caps)?;
            let k = cellularity::cl_closure(&fs, &pg)?;
            let v = json!({"closure": k, "closure_order": k.order(), "sylow_order": fs.sylow().order()});
            ctx.emit(&v, || {
                format!("closure order {} of {}: {:?}", k.order(), fs.sylow().order(), k.members())
            })
        }
        Command::Cellular { f, p } => {
            let fs = ctx.fusion(&f.fusion)?;
            let pg = build_group_with(&input::group_spec(p)?, &ctx.caps)?;
            let report = cellularity::is_bp_cellular(&fs, &pg)?;
            ctx.emit(&report, || cellularity_text(&report))
        }
        Command::Omega { f, m } => {
            let fs = ctx.fusion(&f.fusion)?;
            let w = cellularity::omega_subgroup(fs.sylow(), fs.prime(), *m);
            let v = json!({"m": m, "omega": w, "order": w.order()});
            ctx.emit(&v, || format!("Omega_{}^{m}(S) has order {}: {:?}", fs.prime(), w.order(), w.members()))
        }
        Command::M0 { f } => {
            let m0 = cellularity::min_cellularity_exponent(&ctx.fusion(&f.fusion)?)?;
            ctx.emit(json!({ "m0": m0 }), || format!("m0: {m0}"))
        }
        Command::Hyperfocal { f } => {
            let h = cellularity::hyperfocal(&ctx.fusion(&f.fusion)?)?;
            let v = json!({
                "hyperfocal": h.hyperfocal,
                "hyperfocal_order": h.hyperfocal.order(),
                "pi1_order": h.pi1.order(),
            });
            ctx.emit(&v, || {
                format!(
                    "hyperfocal order {}: {:?}\npi1 order: {}",
                    h.hyperfocal.order(),
                    h.hyperfocal.members(),
                    h.pi1.order()
                )
            })
        }
        Command::Pi1 { fusion, b3r, order_two } => match (fusion, b3r) {
            (Some(fusion), _) => {
                let h = cellularity::hyperfocal(&ctx.fusion(fusion)?)?;
                let pi1 = &h.pi1;
                let v = json!({
                    "pi1_order": pi1.order(),
                    "pi1_abelian": pi1.is_abelian(),
                    "simply_connected": pi1.order() == 1,
                });
                ctx.emit(&v, || format!("pi1 order: {}\nabelian: {}", pi1.order(), pi1.is_abelian()))
            }
            (None, Some(rg)) => exotic_pi1(&ctx, rg, *order_two),
            (None, None) => Err(Error::InvalidInput("pi1 needs --fusion or --b3r".into())),
        },
        Command::Certificate { f, k } => {
            let fs = ctx.fusion(&f.fusion)?;
            let k = input::subgroup(k, fs.sylow())?;
            let cert = cellularity::fusion_invariance_certificate(&fs, &k)?;
            ctx.emit(&cert, || {
                let mut out = format!(
                    "K of order {}: {} pairs checked, {} violations\nrho: S -> Sym({}), kernel order {}",
                    cert.k.order(),
                    cert.checked_pairs,
                    cert.violations.len(),
                    cert.rho_target_degree,
                    cert.rho_kernel.order()
                );
                for v in &cert.violations {
                    out.push_str(&format!("\n  {:?} -> {:?}: {}", v.domain, v.image, v.detail));
                }
                out
            })
        }
        Command::Catalog { entry } => catalog_entry(&ctx, entry),
        Command::Report { f, p } => {
            let spec = input::fusion_spec(&f.fusion, ctx.seed_file.as_deref())?;
            let fs = input::load_fusion(&spec, &ctx.caps, ctx.cache.as_deref())?;
            let saturation = fs.is_saturated()?;
            let h = cellularity::hyperfocal(&fs)?;
            let m0 = cellularity::min_cellularity_exponent(&fs)?;
            let cell = match p {
                Some(p) => {
                    let pg = build_group_with(&input::group_spec(p)?, &ctx.caps)?;
                    Some(cellularity::is_bp_cellular(&fs, &pg)?)
                }
                None => None,
            };
            let v = json!({
                "sylow_order": fs.sylow().order(),
                "saturated": saturation.saturated,
                "witnesses": saturation.witnesses,
                "hyperfocal_order": h.hyperfocal.order(),
                "pi1_order": h.pi1.order(),
                "m0": m0,
                "cellularity": cell,
            });
            ctx.emit(&v, || {
                let mut out = format!(
                    "{}\nsaturated: {}\nhyperfocal order: {}\npi1 order: {}\nm0: {m0}",
                    fs.sylow().label(),
                    saturation.saturated,
                    h.hyperfocal.order(),
                    h.pi1.order()
                );
                if let Some(c) = &cell {
                    out.push('\n');
                    out.push_str(&cellularity_text(c));
                }
                out
            })
        }
    }
}

fn fusion_summary(ctx: &Ctx, spec: &FusionSpec, f: &FusionSystem) -> Result<String> {
    let morphisms = f.morphism_count().ok();
    let v = json!({
        "spec": spec,
        "sylow": f.sylow().label(),
        "sylow_order": f.sylow().order(),
        "p": f.prime(),
        "subgroups": f.subgroups().len(),
        "morphisms": morphisms,
        "axiomatized": f.is_axiomatized(),
    });
    ctx.emit(&v, || {
        format!(
            "{} (order {}, p = {})\nsubgroups: {}\nmorphisms: {}",
            f.sylow().label(),
            f.sylow().order(),
            f.prime(),
            f.subgroups().len(),
            morphisms.map_or("not available (axiomatized)".to_string(), |n| n.to_string())
        )
    })
}

fn cellularity_text(r: &cellularity::CellularityReport) -> String {
    let normal = serde_json::to_string(&r.closure_normal_in_f).expect("verdict serializes");
    let mut out = format!(
        "cellular: {}\nclosure order: {}\nclosure abelian: {}\nnormal in F: {normal}\nquotient order: {}",
        r.cellular,
        r.closure.order(),
        r.closure_abelian,
        r.quotient_order
    );
    for c in &r.citations {
        out.push_str(&format!("\n  - {c}"));
    }
    for a in &r.axiomatized_inputs {
        out.push_str(&format!("\n  assumed: {a}"));
    }
    out
}

fn parse_b3r(arg: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("expected r,gamma, got {arg:?}"));
    let (r, g) = arg.split_once(',').ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, g.trim().parse().map_err(|_| bad())?))
}

fn exotic_pi1(ctx: &Ctx, rg: &str, order_two: bool) -> Result<String> {
    let (r, gamma) = parse_b3r(rg)?;
    let g = catalog::build_b3r_with(r, gamma, &ctx.caps)?;
    let mut seeds: Vec<GroupHom> = match &ctx.seed_file {
        Some(path) => input::read_seeds(path)?
            .iter()
            .map(|s| s.to_hom(&g.group))
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    if order_two {
        seeds.extend(catalog::order_two_automorphisms(&g)?);
    }
    let shapes: Vec<Option<catalog::SeedShape>> = seeds.iter().map(|h| catalog::seed_shape(&g, h)).collect();
    let preserving = seeds
        .iter()
        .filter(|h| g.n.members().iter().all(|&x| h.apply(x).is_some_and(|y| g.n.contains(y))))
        .count();
    let generates = catalog::exotic_pi1_check(&g, &seeds)?;
    let v = json!({
        "group": g.group.label(),
        "seeds": seeds.len(),
        "shapes": shapes,
        "seeds_preserving_N": preserving,
        "generates_S": generates,
    });
    ctx.emit(&v, || {
        format!(
            "{}: {} seeds, {} preserve N\n<N, x^-1 alpha(x)> = S: {generates}",
            g.group.label(),
            seeds.len(),
            preserving
        )
    })
}

fn catalog_entry(ctx: &Ctx, entry: &CatalogEntry) -> Result<String> {
    match entry {
        CatalogEntry::B3r { r, gamma, census, verdict, l } => {
            let g = catalog::build_b3r_with(*r, *gamma, &ctx.caps)?;
            if *census {
                let c = catalog::order_census(&g, *l);
                return ctx.emit(&c, || {
                    format!(
                        "{} l = {}\nexists_outside_N: {}\nwitness: {}",
                        g.group.label(),
                        c.l,
                        c.exists_outside_n,
                        c.witness.map_or("none".to_string(), |w| w.to_string())
                    )
                });
            }
            if *verdict {
                let report = catalog::exotic_cellularity_verdict(&g, *l)?;
                return ctx.emit(&report, || cellularity_text(&report));
            }
            ctx.emit(&g, || {
                let named: Vec<String> = g.named_elements().iter().map(|(k, v)| format!("{k}={v}")).collect();
                format!(
                    "{} of order {}\nnamed elements: {}\nN = <s, s2> of order {}",
                    g.group.label(),
                    g.group.order(),
                    named.join(" "),
                    g.n.order()
                )
            })
        }
        CatalogEntry::Wreath { p, n, q } => {
            let g = build_group_with(&catalog::wreath_spec(*p, *n, *q)?, &ctx.caps)?;
            let s = g.sylow_subgroup(*p);
            let v = json!({"order": g.order(), "sylow_order": s.order(), "sylow": s});
            ctx.emit(&v, || {
                format!("Z/{} wr Z/{q}: order {}, Sylow {p}-subgroup of order {}", p.pow(*n), g.order(), s.order())
            })
        }
        CatalogEntry::Sz8 => {
            let g = build_group_with(&catalog::suzuki_8_spec(), &ctx.caps)?;
            let s = g.sylow_subgroup(2);
            let involutions: Vec<Elem> = s.members().iter().copied().filter(|&x| g.element_order(x) == 2).collect();
            let omega = g.subgroup_generated(&involutions);
            let v = json!({
                "order": g.order(),
                "sylow_order": s.order(),
                "involutions_in_sylow": involutions.len(),
                "involution_subgroup_order": omega.order(),
            });
            ctx.emit(&v, || {
                format!(
                    "Sz(8): order {}\nSylow 2-subgroup of order {}\n{} involutions generating a subgroup of order {}",
                    g.order(),
                    s.order(),
                    involutions.len(),
                    omega.order()
                )
            })
        }
    }
}
