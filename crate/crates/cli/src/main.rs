use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use accordion_core::category::{build_presented_category, phi_iso, TypeA};
use accordion_core::classify::{classify_uct, Witness};
use accordion_core::complex::k_groups;
use accordion_core::modules::counterexample_pipeline;
use accordion_core::{builtin, io, Error, PointSet, Space};
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "accordion", version, about = "Filtrated K-theory UCT classification and NT*(X) computations")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Input {
    /// Space as a JSON file path or inline JSON.
    space: Option<String>,
    /// Built-in space: X1|X2|X3|X4|S|Cn:<n>|On:<n>|W:<n1,...>.
    #[arg(long)]
    builtin: Option<String>,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Decide UCT(X) and print the accordion decomposition or a witness.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Hasse diagram in DOT with the witness highlighted.
        #[arg(long)]
        dot: bool,
    },
    /// Table of NT*(Y, Z) computed from the order complex.
    NtTable {
        #[command(flatten)]
        input: Input,
        /// Comma-separated table instead of aligned columns.
        #[arg(long)]
        csv: bool,
    },
    /// The presented category NT*(X).
    NtCat {
        #[command(flatten)]
        input: Input,
        /// List the indecomposable arrows.
        #[arg(long)]
        indecomposables: bool,
        /// Print the long chain of a type (A) space.
        #[arg(long)]
        long_chain: bool,
        /// Check the isomorphism with the category of the canonical accordion.
        #[arg(long)]
        phi: bool,
    },
    /// Non-projective module M, M_k and Ext²(M_k, P_Y).
    Counterexample {
        #[command(flatten)]
        input: Input,
        /// Object Y, e.g. `34` or `{1^1}`.
        #[arg(long)]
        y: String,
        /// Multiplier k in M_k.
        #[arg(long, default_value_t = 2)]
        k: i64,
    },
    /// All T₀-spaces up to isomorphism with their verdicts.
    EnumeratePosets {
        /// Largest number of points, at most 7.
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Only connected spaces.
        #[arg(long)]
        connected: bool,
        /// Machine-readable JSON output.
        #[arg(long)]
        json: bool,
    },
}

impl Input {
    fn load(&self) -> anyhow::Result<Space> {
        match (&self.space, &self.builtin) {
            (Some(_), Some(_)) => bail!(Error::Malformed("give either a space or --builtin, not both".into())),
            (None, Some(name)) => Ok(builtin::by_name(name)?),
            (Some(src), None) => {
                let text = if src.trim_start().starts_with('{') {
                    src.clone()
                } else {
                    let path = PathBuf::from(src);
                    std::fs::read_to_string(&path)
                        .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
                        .context("reading space")?
                };
                Ok(io::parse_space(&text)?)
            }
            (None, None) => bail!(Error::Malformed("no space given".into())),
        }
    }
}

fn names(s: &Space, sets: impl IntoIterator<Item = PointSet>) -> Vec<String> {
    sets.into_iter().map(|y| s.set_name(y)).collect()
}

fn witness_json(s: &Space, comp: PointSet, w: &Witness) -> Value {
    json!({
        "kind": format!("{:?}", w.kind),
        "component": s.set_name(comp),
        "model": io::SpaceJson::from_space(&w.model),
        "embedding": w.embedding.iter().map(|&x| s.label(x)).collect::<Vec<_>>(),
        "domain": s.set_name(w.domain),
        "retraction": w.retraction.as_ref().map(|r| {
            r.iter().map(|&(a, b)| (s.label(a).to_string(), w.model.label(b).to_string())).collect::<Vec<_>>()
        }),
    })
}

fn classify(s: &Space, as_json: bool, dot: bool) -> anyhow::Result<String> {
    let v = classify_uct(s)?;
    if dot {
        let hl = v.witness.as_ref().map_or(PointSet::EMPTY, |(_, w)| w.image());
        return Ok(io::hasse_dot(s, hl));
    }
    let components: Vec<Value> = v
        .components
        .iter()
        .map(|(c, f)| json!({"points": s.set_name(*c), "m": f.m, "n": f.n}))
        .collect();
    if as_json {
        let mut out = json!({"holds": v.holds, "components": components});
        if let Some((c, w)) = &v.witness {
            out["witness"] = witness_json(s, *c, w);
        }
        return Ok(format!("{out}\n"));
    }
    let mut out = format!("UCT holds: {}\n", v.holds);
    for (c, f) in &v.components {
        let runs: Vec<String> = f.n.iter().map(|n| format!("O{n}")).collect();
        writeln!(out, "component {}: accordion m={} {}", s.set_name(*c), f.m, runs.join(" v "))?;
    }
    if let Some((c, w)) = &v.witness {
        writeln!(out, "component {}: witness {:?} on {}", s.set_name(*c), w.kind, s.set_name(w.image()))?;
    }
    Ok(out)
}

fn nt_table(s: &Space, as_json: bool, csv: bool) -> anyhow::Result<String> {
    let objs = s.lc_connected().to_vec();
    let mut rows = Vec::with_capacity(objs.len());
    for &y in &objs {
        let mut row = Vec::with_capacity(objs.len());
        for &z in &objs {
            let k = k_groups(s, y, z)?;
            if k.degenerate {
                eprintln!("warning: {} -> {}: cohomology outside the exact regime", s.set_name(y), s.set_name(z));
            }
            row.push(k.group.to_string());
        }
        rows.push(row);
    }
    let labels = names(s, objs.iter().copied());
    if as_json {
        return Ok(format!("{}\n", json!({"objects": labels, "table": rows})));
    }
    let mut out = String::new();
    if csv {
        writeln!(out, "Y\\Z,{}", labels.join(","))?;
        for (l, row) in labels.iter().zip(&rows) {
            writeln!(out, "{l},{}", row.join(","))?;
        }
        return Ok(out);
    }
    let width = |col: &[&str]| col.iter().map(|x| x.chars().count()).max().unwrap_or(0);
    let first = width(&labels.iter().map(String::as_str).chain(["Y\\Z"]).collect::<Vec<_>>());
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| width(&rows.iter().map(|r| r[j].as_str()).chain([labels[j].as_str()]).collect::<Vec<_>>()))
        .collect();
    let pad = |x: &str, w: usize| format!("{x}{}", " ".repeat(w - x.chars().count()));
    let line = |head: &str, cells: &[String]| {
        let cells: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| pad(c, w)).collect();
        format!("{} | {}", pad(head, first), cells.join(" | ")).trim_end().to_string()
    };
    writeln!(out, "{}", line("Y\\Z", &labels))?;
    for (l, row) in labels.iter().zip(&rows) {
        writeln!(out, "{}", line(l, row))?;
    }
    Ok(out)
}

fn nt_cat(s: &Space, as_json: bool, indecomposables: bool, chain: bool, phi: bool) -> anyhow::Result<String> {
    if phi {
        let iso = phi_iso(s)?;
        let map: Vec<Value> = iso
            .generator_map
            .iter()
            .map(|(a, b, sign)| json!({"from": a.name(s), "to": b.name(iso.target.space()), "sign": sign}))
            .collect();
        if as_json {
            return Ok(format!("{}\n", json!({"generators": map, "verified": iso.report.ok(), "report": iso.report})));
        }
        let mut out = String::new();
        for (a, b, sign) in &iso.generator_map {
            let sign = if *sign < 0 { "-" } else { "+" };
            writeln!(out, "{} -> {sign}{}", a.name(s), b.name(iso.target.space()))?;
        }
        writeln!(out, "verified: {}", iso.report.ok())?;
        return Ok(out);
    }
    if chain {
        let t = TypeA::new(s)?;
        let arrows: Vec<String> = t.long_chain()?.iter().map(|a| a.name(s)).collect();
        if as_json {
            return Ok(format!("{}\n", json!({"long_chain": arrows, "length": arrows.len()})));
        }
        return Ok(arrows.iter().map(|a| format!("{a}\n")).collect());
    }
    let c = build_presented_category(s)?;
    let indec: Vec<String> = c.indecomposables().iter().map(|&g| c.generators()[g].name(s)).collect();
    if indecomposables {
        if as_json {
            return Ok(format!("{}\n", json!({"indecomposables": indec})));
        }
        return Ok(indec.iter().map(|a| format!("{a}\n")).collect());
    }
    let objects = names(s, c.objects().iter().copied());
    let table: Vec<Vec<String>> = c.hom_table().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    if as_json {
        let arrows: Vec<String> = c.generators().iter().map(|a| a.name(s)).collect();
        return Ok(format!(
            "{}\n",
            json!({"objects": objects, "arrows": arrows, "indecomposables": indec, "hom": table, "relations": c.relations().len()})
        ));
    }
    let mut out = String::new();
    writeln!(out, "objects ({}): {}", objects.len(), objects.join(" "))?;
    writeln!(out, "generators: {}", c.generators().len())?;
    writeln!(out, "relations: {}", c.relations().len())?;
    writeln!(out, "indecomposables ({}):", indec.len())?;
    for a in &indec {
        writeln!(out, "  {a}")?;
    }
    writeln!(out, "hom:")?;
    for (y, row) in objects.iter().zip(&table) {
        for (z, g) in objects.iter().zip(row) {
            if g != "0" {
                writeln!(out, "  {y} -> {z}: {g}")?;
            }
        }
    }
    Ok(out)
}

fn counterexample(s: &Space, y: &str, k: i64) -> anyhow::Result<String> {
    let c = build_presented_category(s)?;
    let set = s.parse_set(y)?;
    let idx = c
        .object_index(set)
        .ok_or_else(|| Error::Malformed(format!("{y} is not a connected locally closed subset")))?;
    let r = counterexample_pipeline(&c, idx, k)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&r.summary())?))
}

fn enumerate(max_points: usize, connected: bool, as_json: bool) -> anyhow::Result<String> {
    if max_points > 7 {
        bail!(Error::Malformed("--max-points is limited to 7".into()));
    }
    let mut out = String::new();
    for n in 1..=max_points {
        let spaces = if connected { builtin::connected_spaces_up_to_iso(n) } else { builtin::spaces_up_to_iso(n) };
        for s in spaces {
            let v = classify_uct(&s)?;
            let kind = v.witness.as_ref().map(|(_, w)| format!("{:?}", w.kind));
            if as_json {
                let line = json!({
                    "points": n,
                    "space": io::SpaceJson::from_space(&s),
                    "connected": s.is_connected(s.all()),
                    "holds": v.holds,
                    "witness": kind,
                });
                writeln!(out, "{line}")?;
            } else {
                let rel: Vec<String> =
                    s.generating_pairs().iter().map(|&(a, b)| format!("{}<{}", s.label(a), s.label(b))).collect();
                writeln!(out, "{n}\t{}\t{}\t{}", rel.join(","), v.holds, kind.as_deref().unwrap_or("-"))?;
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> anyhow::Result<String> {
    match cli.verb {
        Verb::Classify { input, dot } => classify(&input.load()?, input.json, dot),
        Verb::NtTable { input, csv } => nt_table(&input.load()?, input.json, csv),
        Verb::NtCat { input, indecomposables, long_chain, phi } => {
            nt_cat(&input.load()?, input.json, indecomposables, long_chain, phi)
        }
        Verb::Counterexample { input, y, k } => counterexample(&input.load()?, &y, k),
        Verb::EnumeratePosets { max_points, connected, json } => enumerate(max_points, connected, json),
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::UnsupportedSpace(_) | Error::NotTypeA) => 3,
        Some(
            Error::Malformed(_)
            | Error::Json(_)
            | Error::UnknownPoint(_)
            | Error::CycleDetected
            | Error::PointOutOfRange { .. }
            | Error::TooManyPoints(_)
            | Error::NotLocallyClosed(_)
            | Error::NotConnected,
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
