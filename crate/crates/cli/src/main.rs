//! `podo`: validate, render, derive and section plan files from the shell.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use podosnova::catalog::{parse_mark_string, Family, ParsedMark};
use podosnova::drafting::{generate_plan_display, DimSide, DisplayList, PlanOptions};
use podosnova::io::{capsule_stub, emit_dxf_with, load_section_text, DxfOptions, CAPSULE_MAGIC};
use podosnova::model::{EntityId, Orientation};
use podosnova::section::FoundationOptions;
use podosnova::{
    decode_capsule, derive_ceiling_plan, derive_foundation_plan, emit_svg, encode_capsule, generate_section_display, load_text, save_text, Catalog,
    IoError, Model, ModelError,
};

#[derive(Parser)]
#[command(name = "podo", version, about = "Structural base plans on a coordination grid")]
struct Cli {
    /// Mark catalog (TSV) to use instead of the built-in one.
    #[arg(long, global = true, value_name = "TSV")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model document or capsule.
    Validate { model: PathBuf },
    /// Draw a plan as SVG or DXF.
    Render {
        model: PathBuf,
        #[arg(long, value_name = "OUT", conflicts_with = "dxf", required_unless_present = "dxf")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "OUT")]
        dxf: Option<PathBuf>,
        /// Drawing scale as 1:N.
        #[arg(long, default_value = "1:100", value_parser = parse_scale)]
        scale: u32,
        /// Which span dimension chains to draw.
        #[arg(long, value_enum)]
        dims: Option<Dims>,
        /// Add overall dimensions outside the span chains.
        #[arg(long)]
        overall: bool,
        /// DXF only: transliterate text to 7-bit ASCII instead of escaping it.
        #[arg(long)]
        ascii: bool,
    },
    /// Derive a foundation or ceiling plan from a floor plan.
    Derive {
        #[arg(value_enum)]
        target: Target,
        model: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: PathBuf,
        /// Foundation only: strips under bearing partitions only.
        #[arg(long)]
        bearing_only: bool,
    },
    /// Draw a cross section. Plan references in the spec are paths relative to it.
    Section {
        spec: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: PathBuf,
    },
    /// Query the mark catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// List the capsules of a prototype library with their stubs.
    Protos { dir: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Parse a mark string and print its parts.
    Parse { mark: String },
    /// Print every mark of a family.
    List {
        #[arg(value_parser = parse_family)]
        family: Family,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Dims {
    Both,
    Left,
    Right,
    Top,
    Bottom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Foundation,
    Ceiling,
}

fn parse_scale(s: &str) -> Result<u32, String> {
    let n = s.strip_prefix("1:").unwrap_or(s);
    match n.parse::<u32>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a scale like 1:100, got `{s}`")),
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// A failed command: exit status and a one-line message.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn at(entity: Option<EntityId>) -> String {
    entity.map(|e| format!(" at {e}")).unwrap_or_default()
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        invalid(format!("{}{}: {e}", e.code(), at(e.entity())))
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match &e {
            IoError::Integrity { entity, source } => invalid(format!("{}{}: {source}", source.code(), at(*entity))),
            _ => invalid(format!("{}: {e}", e.code())),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, data: &[u8]) -> Result<(), Failure> {
    fs::write(path, data).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// A text document, or a capsule when the file starts with the capsule magic.
fn load_model(path: &Path) -> Result<Model, Failure> {
    let bytes = read(path)?;
    if bytes.starts_with(CAPSULE_MAGIC) {
        return Ok(decode_capsule(&bytes)?.0);
    }
    let text = String::from_utf8(bytes).map_err(|_| invalid(format!("{} is neither UTF-8 text nor a capsule", path.display())))?;
    Ok(load_text(&text)?)
}

fn save_model(path: &Path, m: &Model) -> Result<(), Failure> {
    if path.extension().is_some_and(|e| e == "podo") {
        write(path, &encode_capsule(m))
    } else {
        write(path, save_text(m).as_bytes())
    }
}

fn is_dxf(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("dxf"))
}

fn catalog(cli: &Cli) -> Result<Catalog, Failure> {
    match &cli.catalog {
        Some(p) => Catalog::load(p).map_err(|e| usage(format!("catalog {}: {e}", p.display()))),
        None => Ok(Catalog::builtin()),
    }
}

fn emit(list: &DisplayList, out: &Path, dxf: bool, scale: u32, ascii: bool) -> Result<(), Failure> {
    let text = if dxf { emit_dxf_with(list, scale as f64, DxfOptions { transliterate: ascii }) } else { emit_svg(list, scale as f64) };
    write(out, text.as_bytes())
}

fn stub_summary(stub: &DisplayList) -> String {
    use podosnova::drafting::Primitive;
    let mut axes = Vec::new();
    let mut dims = Vec::new();
    for p in stub.primitives() {
        match p {
            Primitive::AxisBubble { label, .. } => axes.push(label.as_str()),
            Primitive::DimLinear(d) => dims.push(d.text.as_str()),
            _ => {}
        }
    }
    format!("axes {} dims {}", if axes.is_empty() { "-".into() } else { axes.join(",") }, if dims.is_empty() { "-".into() } else { dims.join(",") })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { model } => {
            let m = load_model(model)?;
            m.validate_with_catalog(&catalog(cli)?)?;
            println!("ok: {} plan, {} entities", m.kind, m.entity_count());
        }
        Command::Render { model, svg, dxf, scale, dims, overall, ascii } => {
            let m = load_model(model)?;
            let dim_sides = dims.map(|d| match d {
                Dims::Both => vec![DimSide::Below, DimSide::Left],
                Dims::Left => vec![DimSide::Left],
                Dims::Right => vec![DimSide::Right],
                Dims::Top => vec![DimSide::Above],
                Dims::Bottom => vec![DimSide::Below],
            });
            let opts = PlanOptions { scale: *scale, dim_sides, overall: *overall };
            let list = generate_plan_display(&m, &opts).map_err(|e| invalid(e.to_string()))?;
            match (svg, dxf) {
                (Some(out), _) => emit(&list, out, false, *scale, *ascii)?,
                (None, Some(out)) => emit(&list, out, true, *scale, *ascii)?,
                (None, None) => return Err(usage("one of --svg or --dxf is required")),
            }
        }
        Command::Derive { target, model, output, bearing_only } => {
            let m = load_model(model)?;
            let derived = match target {
                Target::Foundation => derive_foundation_plan(&m, FoundationOptions { bearing_only: *bearing_only })?,
                Target::Ceiling => derive_ceiling_plan(&m)?,
            };
            save_model(output, &derived)?;
            println!("{}: {} plan, {} entities", output.display(), derived.kind, derived.entity_count());
        }
        Command::Section { spec, output } => {
            let text = String::from_utf8(read(spec)?).map_err(|_| invalid(format!("{} is not UTF-8", spec.display())))?;
            let s = load_section_text(&text)?;
            let base = spec.parent().unwrap_or(Path::new("."));
            let mut plans = BTreeMap::new();
            for r in s.plan_refs() {
                plans.insert(r.to_string(), load_model(&base.join(r))?);
            }
            let out = generate_section_display(&s, &plans).map_err(|e| invalid(format!("{}: {e}", e.code())))?;
            for w in &out.warnings {
                eprintln!("warning: {w:?}");
            }
            emit(&out.display, output, is_dxf(output), s.scale, false)?;
        }
        Command::Catalog { action: CatalogCmd::Parse { mark } } => match parse_mark_string(mark).map_err(|e| invalid(format!("ParseError: {e}")))? {
            ParsedMark::Marked(f) => {
                println!("name   {}", f.name);
                println!("dims   {}", f.dims.as_slice().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
                println!("metric {}", f.metric.as_deref().unwrap_or("-"));
            }
            ParsedMark::Unmarked => println!("unmarked"),
        },
        Command::Catalog { action: CatalogCmd::List { family } } => {
            for rec in catalog(cli)?.family(*family) {
                println!("{}\t{}", rec.mark_string(), rec.series_note);
            }
        }
        Command::Protos { dir } => {
            let mut files: Vec<PathBuf> = fs::read_dir(dir)
                .map_err(|e| usage(format!("cannot list {}: {e}", dir.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|e| e == "podo"))
                .collect();
            files.sort();
            let mut bad = 0;
            for f in &files {
                let name = f.file_name().unwrap_or_default().to_string_lossy();
                match read(f).and_then(|b| decode_capsule(&b).map_err(Failure::from)) {
                    Ok((m, _)) => {
                        let spans = |o| m.resolve_axes(o).map(|a| a.len()).unwrap_or(0);
                        println!(
                            "{name}\t{}\t{}x{} axes\t{} entities\t{}",
                            m.kind,
                            spans(Orientation::H),
                            spans(Orientation::V),
                            m.entity_count(),
                            stub_summary(&capsule_stub(&m))
                        );
                    }
                    Err(e) => {
                        bad += 1;
                        println!("{name}\tunreadable\t{}", e.message);
                    }
                }
            }
            if bad > 0 {
                return Err(invalid(format!("{bad} of {} capsules unreadable", files.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("podo: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
