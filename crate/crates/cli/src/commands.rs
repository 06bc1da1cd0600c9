use std::path::Path;
use std::sync::Arc;

use sysalg::morita::{
    check_preceq_projective, dual_basis_counterexample, is_fin_generated_preceq, is_preceq_generator,
    module_side, trace_ideal, validate_matrix_semiring, Grade, MatrixSemiring,
};
use sysalg::tensor::DEFAULT_CLASS_CAP;
use sysalg::{
    enumerate_morphisms, is_null_monic, is_preceq_onto, load_str, tensor_product, validate_context,
    validate_module, validate_semiring, validate_system, validate_triple, verify_mor1, verify_morplus,
    FiniteModuleSystem, Loaded, MoritaContext, MorphismKind, SearchError, SearchOptions, Side,
    Structure, SystemDef, TheoremOptions,
};

use crate::catalog::{catalog, lookup};
use crate::report::{Check, Mark, RunReport};
use crate::{Cli, Command, CorpusAction, KindArg, SideArg};

enum Fail {
    /// Exit 2: the input cannot be used.
    Input(String),
    /// Exit 1: a bound or property stopped the computation.
    Property(String),
}

impl From<SearchError> for Fail {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Precondition(_) => Fail::Input(e.to_string()),
            _ => Fail::Property(e.to_string()),
        }
    }
}

/// Runs the command, filling `report`. Returns a document to print instead
/// of the report (`corpus dump` without `--out`).
pub fn run(cli: &Cli, report: &mut RunReport) -> Option<String> {
    let mut doc = None;
    let result = dispatch(cli, report, &mut doc);
    match result {
        Ok(()) => {}
        Err(Fail::Input(e)) => {
            report.error = Some(e);
            report.exit_code = 2;
        }
        Err(Fail::Property(e)) => {
            report.error = Some(e);
            report.exit_code = 1;
        }
    }
    if report.exit_code == 2 && doc.is_some() {
        doc = None;
    }
    doc
}

fn search(cli: &Cli) -> SearchOptions {
    SearchOptions { node_bound: cli.node_bound, ..SearchOptions::default() }
}

/// `--cap`, else `$SYSALG_MAX_CLASSES`, else the library default.
fn class_cap(flag: Option<usize>) -> Result<usize, Fail> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("SYSALG_MAX_CLASSES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Fail::Input(format!("SYSALG_MAX_CLASSES: not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_CLASS_CAP),
    }
}

fn load(path: &Path, report: &mut RunReport) -> Result<Loaded, Fail> {
    let shown = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|e| Fail::Input(format!("{shown}: {e}")))?;
    report.inputs.push(crate::report::Fingerprint::of(&shown, &bytes));
    let text = String::from_utf8(bytes).map_err(|_| Fail::Input(format!("{shown}: not UTF-8")))?;
    load_str(&text).map_err(|e| Fail::Input(format!("{shown}: {e}")))
}

fn load_module(path: &Path, report: &mut RunReport) -> Result<FiniteModuleSystem, Fail> {
    match load(path, report)?.structure {
        Structure::Module(m) => Ok(m),
        Structure::Tensor(t) => Ok(t.module),
        other => Err(Fail::Input(format!("{}: expected a module, found a {}", path.display(), other.kind()))),
    }
}

fn load_context(path: &Path, report: &mut RunReport) -> Result<MoritaContext, Fail> {
    match load(path, report)?.structure {
        Structure::Context(c) => Ok(c),
        other => Err(Fail::Input(format!("{}: expected a context, found a {}", path.display(), other.kind()))),
    }
}

fn load_system(path: &Path, report: &mut RunReport) -> Result<SystemDef, Fail> {
    match load(path, report)?.structure {
        Structure::System(s) => Ok(s),
        other => Err(Fail::Input(format!("{}: expected a system, found a {}", path.display(), other.kind()))),
    }
}

fn names(m: &FiniteModuleSystem, els: &[usize]) -> String {
    els.iter().map(|&e| m.name(e)).collect::<Vec<_>>().join(", ")
}

fn write_out(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli, report: &mut RunReport, doc: &mut Option<String>) -> Result<(), Fail> {
    match &cli.command {
        Command::Check { file } => {
            let loaded = load(file, report)?;
            let r = match &loaded.structure {
                Structure::Semiring(s) => validate_semiring(s),
                Structure::Triple(t) => validate_triple(t),
                Structure::System(s) => validate_system(s),
                Structure::Module(m) => validate_module(m),
                Structure::Context(c) => validate_context(c),
                Structure::Tensor(t) => validate_module(&t.module),
            };
            report.note(format!("{} {:?}: {}", loaded.structure.kind(), loaded.name, if r.is_valid() { "valid" } else { "invalid" }));
            report.absorb_validation(loaded.structure.kind(), &r);
            report.settle(|_| true);
        }

        Command::Tensor { left, right, ground, cap, out } => {
            let m1 = load_module(left, report)?;
            let m2 = load_module(right, report)?;
            let g = Arc::new(load_system(ground, report)?);
            let t = tensor_product(&m1, &m2, &g, class_cap(*cap)?)?;
            report.push(Check::new("tensor.classes", Mark::Pass, format!("{} classes", t.classes())));
            for c in 0..t.classes() {
                let rep: Vec<String> = t
                    .representative(c)
                    .iter()
                    .map(|&(x, y)| format!("{}⊗{}", m1.name(x), m2.name(y)))
                    .collect();
                let rep = if rep.is_empty() { "0".to_string() } else { rep.join(" + ") };
                report.note(format!("class {}: {rep}", t.module.name(c)));
            }
            if let Some(out) = out {
                let loaded = Loaded { name: "tensor".into(), structure: Structure::Tensor(tensor_file(&t)) };
                write_out(out, &sysalg::dump(&loaded))?;
                report.note(format!("presentation written to {}", out.display()));
            }
            report.settle(|_| true);
        }

        Command::Homs { source, target, kind, side, list } => {
            let src = load_module(source, report)?;
            let tgt = load_module(target, report)?;
            let side = match side {
                Some(SideArg::Left) => Side::Left,
                Some(SideArg::Right) => Side::Right,
                None => module_side(&src),
            };
            let kind = match kind {
                KindArg::Homomorphism => MorphismKind::Homomorphism,
                KindArg::Preceq => MorphismKind::PreceqMorphism,
            };
            let maps = enumerate_morphisms(&src, &tgt, side, kind, search(cli))?;
            let onto = maps.iter().filter(|f| is_preceq_onto(f).holds).count();
            let monic = maps.iter().filter(|f| is_null_monic(f).holds).count();
            report.push(Check::new(
                "homs.count",
                Mark::Pass,
                format!("{} {} maps ({side:?} side); {onto} ≼-onto, {monic} null-monic", maps.len(), kind.as_str()),
            ));
            if *list {
                for (i, f) in maps.iter().enumerate() {
                    let body: Vec<String> = f.pairs().into_iter().map(|(x, y)| format!("{x}↦{y}")).collect();
                    report.note(format!("#{i}: {}", body.join(" ")));
                }
            }
            report.settle(|_| true);
        }

        Command::Trace { module, preceq } => {
            let m = load_module(module, report)?;
            let grade = if *preceq { Grade::Preceq } else { Grade::Strict };
            let t = trace_ideal(&m, grade, search(cli))?;
            let a = m.ground(module_side(&m)).expect("trace_ideal checked the action").clone();
            let shown: Vec<&str> = t.elements.iter().map(|&e| a.name(e)).collect();
            report.push(Check::new(
                "trace.elements",
                Mark::Pass,
                format!("{{{}}} from {} morphisms", shown.join(", "), t.morphisms),
            ));
            report.note(format!("contains 1: {}", t.elements.contains(&a.one())));
            report.settle(|_| true);
        }

        Command::Generator { module, n_max } => {
            let m = load_module(module, report)?;
            let v = is_preceq_generator(&m, *n_max, search(cli))?;
            for (name, c) in [("onto", &v.onto), ("trace", &v.trace), ("image", &v.image)] {
                let copies = c.copies.map(|n| format!(" (n = {n})")).unwrap_or_default();
                report.push(Check::new(format!("generator.{name}"), Mark::from_verdict(c.verdict), format!("{}{copies}", c.detail)));
            }
            report.push(Check::new(
                "generator.agree",
                if v.agree() { Mark::Pass } else { Mark::Fail },
                if v.agree() { "the three characterizations agree" } else { "the characterizations disagree" },
            ));
            let fg = is_fin_generated_preceq(&m, *n_max);
            let detail = match &fg.generators {
                Some(g) => format!("generated by {{{}}}", names(&m, g)),
                None => format!("no generating set with at most {n_max} elements"),
            };
            report.note(format!("finitely ≼-generated: {} ({detail})", fg.holds));
            report.settle(|_| true);
        }

        Command::Projective { module, t_max, pool, work_bound } => {
            let p = load_module(module, report)?;
            let side = module_side(&p);
            let a = p
                .ground(side)
                .cloned()
                .ok_or_else(|| Fail::Input("module has no scalar action".into()))?;
            let mut modules = vec![FiniteModuleSystem::regular(&a), FiniteModuleSystem::zero_module(&a), p.clone()];
            for path in pool {
                modules.push(load_module(path, report)?);
            }
            let pr = check_preceq_projective(&p, &modules, *t_max, *work_bound, search(cli))?;
            let mut db = Check::new("projective.dual_basis", Mark::from_verdict(pr.dual_basis.verdict), pr.dual_basis.detail.clone());
            if let Some(basis) = &pr.dual_basis.basis {
                let regular = FiniteModuleSystem::regular(&a);
                for (y, f) in &basis.pairs {
                    let values: Vec<String> = p.elements().map(|x| format!("{}↦{}", p.name(x), regular.name(f[x]))).collect();
                    db = db.with_witness(format!("y = {}, f = {}", p.name(*y), values.join(" ")));
                }
                let bad = dual_basis_counterexample(&p, basis);
                report.push(db);
                report.push(Check::new(
                    "projective.dual_basis.replay",
                    if bad.is_none() { Mark::Pass } else { Mark::Fail },
                    match bad {
                        None => "x ≼ Σ f(x)·y re-evaluated for every x".to_string(),
                        Some(x) => format!("fails at {}", p.name(x)),
                    },
                ));
            } else {
                report.push(db);
            }
            let mut lift = Check::new("projective.lifting", Mark::from_verdict(pr.lifting.verdict), pr.lifting.detail.clone());
            if let Some(c) = &pr.lifting.counterexample {
                lift = lift.with_witness(c.clone());
            }
            report.push(lift);
            report.settle(|_| true);
        }

        Command::MoritaCheck { context } => {
            let ctx = load_context(context, report)?;
            report.absorb_validation("context", &validate_context(&ctx));
            let ms = MatrixSemiring::new(ctx);
            report.note(format!("matrix semiring: {} elements, checked on {} elementary matrices", ms.size(), ms.elementary().len()));
            report.absorb_validation("matrix", &validate_matrix_semiring(&ms));
            report.settle(|_| true);
        }

        Command::Verify { context, mor1, morplus, swap, strict, t_max, n_max, cap } => {
            let ctx = load_context(context, report)?;
            let opts = TheoremOptions { t_max: *t_max, n_max: *n_max, cap: class_cap(*cap)?, search: search(cli) };
            let (mor1, morplus) = if !mor1 && !morplus { (true, true) } else { (*mor1, *morplus) };
            let mut orientations = vec![("", ctx)];
            if *swap {
                let swapped = orientations[0].1.swap();
                orientations.push(("[swap]", swapped));
            }
            for (suffix, c) in &orientations {
                if mor1 {
                    report.absorb_theorem(&format!("mor1{suffix}"), &verify_mor1(c, opts), *strict);
                }
                if morplus {
                    match verify_morplus(c, opts) {
                        Ok(t) => report.absorb_theorem(&format!("morplus{suffix}"), &t, *strict),
                        Err(e) => report.push(Check::new(format!("morplus{suffix}"), Mark::Fail, e.to_string())),
                    }
                }
            }
            // Claims are reported; the exit code follows the theorem statuses.
            report.settle(|c| !c.name.contains('.'));
        }

        Command::Corpus { action: CorpusAction::List } => {
            for item in catalog() {
                let kind = (item.build)().kind();
                report.note(format!("{:<28} {:<9} {}", item.name, kind, item.description));
            }
            report.settle(|_| true);
        }

        Command::Corpus { action: CorpusAction::Dump { name, out } } => {
            let loaded = lookup(name).ok_or_else(|| {
                let known: Vec<String> = catalog().into_iter().map(|i| i.name).collect();
                Fail::Input(format!("unknown corpus entry {name:?}; known: {}", known.join(", ")))
            })?;
            let text = sysalg::dump(&loaded);
            match out {
                Some(path) => {
                    write_out(path, &text)?;
                    report.note(format!("{name} written to {}", path.display()));
                }
                None => *doc = Some(text),
            }
            report.settle(|_| true);
        }
    }
    Ok(())
}

fn tensor_file(t: &sysalg::TensorPresentation) -> sysalg::format::TensorFile {
    sysalg::format::TensorFile {
        module: t.module.clone(),
        left_elements: t.left.names().to_vec(),
        right_elements: t.right.names().to_vec(),
        simple: t.simple_table().to_vec(),
    }
}
