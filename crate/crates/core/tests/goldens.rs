//! Byte-for-byte output checks. Run with `PODO_BLESS=1` to rewrite the files.
mod common;

use std::path::Path;

use common::*;
use podosnova::drafting::{generate_plan_display, PlanOptions};
use podosnova::io::save_section_text;
use podosnova::{emit_dxf, emit_svg, generate_section_display, save_text, Catalog};

fn check(rel: &str, actual: &str) {
    let path = data_dir().join(rel);
    if std::env::var_os("PODO_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if expected != actual {
        let line = expected.lines().zip(actual.lines()).position(|(a, b)| a != b).unwrap_or(expected.lines().count().min(actual.lines().count()));
        panic!("{rel} differs from the golden, first at line {}", line + 1);
    }
}

fn plan_options() -> PlanOptions {
    PlanOptions { overall: true, ..PlanOptions::default() }
}

#[test]
fn plan_svg() {
    let m = podosnova::fixtures::reference_floor(&Catalog::builtin());
    check("golden/reference_floor.svg", &emit_svg(&generate_plan_display(&m, &plan_options()).unwrap(), 100.0));
}

#[test]
fn plan_dxf() {
    let m = podosnova::fixtures::reference_floor(&Catalog::builtin());
    check("golden/reference_floor.dxf", &emit_dxf(&generate_plan_display(&m, &plan_options()).unwrap(), 100.0));
}

#[test]
fn section_svg_and_dxf() {
    let out = generate_section_display(&reference_section(), &reference_plans(&Catalog::builtin())).unwrap();
    assert!(out.warnings.is_empty());
    check("golden/reference_section.svg", &emit_svg(&out.display, 100.0));
    check("golden/reference_section.dxf", &emit_dxf(&out.display, 100.0));
}

#[test]
fn text_documents() {
    for (name, m) in reference_plans(&Catalog::builtin()) {
        check(&name, &save_text(&m));
    }
    check("reference_section.json", &save_section_text(&reference_section()));
}

#[test]
fn goldens_exist() {
    let dir = data_dir();
    for f in ["golden/reference_floor.svg", "golden/reference_floor.dxf", "golden/reference_section.svg", "golden/reference_section.dxf"] {
        assert!(Path::new(&dir.join(f)).is_file(), "{f}");
    }
}
