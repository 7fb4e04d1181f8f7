//! One function per subcommand. Each returns the text to print.

use std::fmt::Write;

use atlas_core::exactnum::{FieldScalar, Rational};
use atlas_core::hurwitz::{epsilon, octonion_suite, rho, ZornMatrix};
use atlas_core::jordan::{
    check_algebra_axioms, check_pair_axioms, check_triple_axioms, derivations_of_j, reduced_structure_algebra, tkk,
    v_normalization,
};
use atlas_core::lie::{cartan_subalgebra, LieAlgebra};
use atlas_core::projection::{
    c3_panels, decompose_roots, eta_embedding, figure_points, label_particles, nested_decomposition, plane_checks,
    table3_quantum_numbers, EtaTarget, NestedNode,
};
use atlas_core::rootspace::{span_rank, validate_root_system, AlgebraName, RootSystem, RootVector};
use atlas_core::titslie::{magic_square, types_with, verify_jacobi, HURWITZ_DIMS};
use serde_json::{json, Value};

use crate::{roots_for, svg, tits_for, CliError, JacobiPolicy, Options, Outcome};

fn root_json(r: &RootVector) -> Value {
    Value::Array(r.0.iter().map(|c| Value::String(c.to_string())).collect())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

pub fn roots(name: AlgebraName, count: bool, opts: &Options) -> Result<Outcome, CliError> {
    let rs = RootSystem::from_roots(name, roots_for(name, opts)?);
    if count {
        return Ok(Outcome::pass(format!("{}\n", rs.len())));
    }
    if opts.json {
        let v = json!({ "name": name.as_str(), "rank": rs.rank, "roots": rs.roots.iter().map(root_json).collect::<Vec<_>>() });
        return Ok(Outcome::pass(pretty(&v)));
    }
    let mut out = format!("{name}: {} roots, rank {}\n", rs.len(), rs.rank);
    for r in &rs.roots {
        let _ = writeln!(out, "{r}");
    }
    Ok(Outcome::pass(out))
}

pub fn verify(name: AlgebraName, opts: &Options) -> Result<Outcome, CliError> {
    let rs = RootSystem::from_roots(name, roots_for(name, opts)?);
    let report = validate_root_system(&rs);
    let mut out = format!("{name}: {} roots, {} pairs checked, {} violations\n", rs.len(), report.pairs_checked, report.violations.len());
    for v in report.violations.iter().take(10) {
        let _ = writeln!(out, "  {v}");
    }
    Ok(Outcome { text: out, ok: report.is_valid() })
}

fn node_json(n: &NestedNode) -> Value {
    let mut v = json!({ "label": n.label, "count": n.roots.len() });
    if n.children.is_empty() {
        v["roots"] = Value::Array(n.roots.iter().map(root_json).collect());
    } else {
        v["children"] = Value::Array(n.children.iter().map(node_json).collect());
    }
    v
}

fn node_text(out: &mut String, n: &NestedNode, depth: usize) {
    let _ = writeln!(out, "{}{} ({})", "  ".repeat(depth), n.label, n.roots.len());
    for c in &n.children {
        node_text(out, c, depth + 1);
    }
}

pub fn decompose(name: AlgebraName, nested: bool, opts: &Options) -> Result<Outcome, CliError> {
    if nested {
        let tree = nested_decomposition(name)?;
        if opts.json {
            return Ok(Outcome::pass(pretty(&node_json(&tree))));
        }
        let mut out = String::new();
        node_text(&mut out, &tree, 0);
        return Ok(Outcome::pass(out));
    }
    let roots = roots_for(name, opts)?;
    let dec = decompose_roots(name.as_str(), &roots, [1, 2, 3])?;
    if opts.json {
        let rank = span_rank(&roots);
        let roots: Vec<Value> = dec
            .parts
            .iter()
            .flat_map(|p| p.roots.iter().map(move |r| json!({ "tag": p.tag.to_string(), "root": root_json(r) })))
            .collect();
        let v = json!({ "name": name.as_str(), "rank": rank, "roots": roots });
        return Ok(Outcome::pass(pretty(&v)));
    }
    let sizes: Vec<String> = dec.sizes().iter().map(|(t, n)| format!("{t}: {n}")).collect();
    let mut out = format!("{name} = {}\n", sizes.join(", "));
    for p in &dec.parts {
        let _ = writeln!(out, "{}", p.tag);
        for r in &p.roots {
            let _ = writeln!(out, "  {r}");
        }
    }
    Ok(Outcome::pass(out))
}

pub fn planes(name: AlgebraName) -> Result<Outcome, CliError> {
    let checks = plane_checks(name)?;
    let mut out = String::new();
    for c in &checks {
        let _ = writeln!(out, "{}  {}", if c.ok { "ok  " } else { "FAIL" }, c.label);
    }
    Ok(Outcome { text: out, ok: checks.iter().all(|c| c.ok) })
}

fn pair(p: &(FieldScalar, FieldScalar)) -> String {
    format!("({}, {})", p.0, p.1)
}

pub fn table3() -> Result<Outcome, CliError> {
    let mut out = String::from("i j  root  (s, t)  (s', t')\n");
    for r in table3_quantum_numbers()? {
        let _ = writeln!(out, "{} {}  {}  {}  {}", r.plane1_index, r.plane2_index, r.root, pair(&r.st), pair(&r.st_prime));
    }
    Ok(Outcome::pass(out))
}

pub fn embed(target: &str) -> Result<Outcome, CliError> {
    let t = EtaTarget::parse(target).ok_or_else(|| CliError::Usage(format!("unknown embedding `{target}` (a5-in-e6, d6-in-e7)")))?;
    let emb = eta_embedding(t)?;
    let mut out = format!("{}: type {}, {} images\n", t.as_str(), emb.dynkin, emb.images.len());
    if let Some(etas) = &emb.etas {
        for (k, e) in etas.iter().enumerate() {
            let _ = writeln!(out, "eta{} = {e}", k + 1);
        }
    }
    for (label, r) in &emb.images {
        let _ = writeln!(out, "{label} -> {r}");
    }
    for c in &emb.checks {
        let _ = writeln!(out, "{}  {}", if c.ok { "ok  " } else { "FAIL" }, c.label);
    }
    Ok(Outcome { text: out, ok: emb.is_ok() })
}

pub fn label_e8(opts: &Options) -> Result<Outcome, CliError> {
    let labels = label_particles()?;
    if opts.json {
        let roots: Vec<Value> =
            labels.iter().map(|l| json!({ "tag": l.kind.to_string(), "root": root_json(&l.root) })).collect();
        return Ok(Outcome::pass(pretty(&json!({ "name": "e8", "rank": 8, "roots": roots }))));
    }
    let mut out = String::new();
    for l in &labels {
        let _ = writeln!(out, "{:<14} {}", l.kind.to_string(), l.root);
    }
    Ok(Outcome::pass(out))
}

pub fn figure(name: &str, path: &str) -> Result<Outcome, CliError> {
    let (doc, summary) = if name == "c3" {
        let panels = c3_panels()?;
        let counts: Vec<String> = panels.iter().map(|(l, p)| format!("{l}: {}", p.len())).collect();
        (svg::panels_svg(&panels), format!("c3 panels {}\n", counts.join(", ")))
    } else {
        let alg: AlgebraName = crate::parse_algebra(name)?;
        let set = figure_points(alg.as_str())?;
        (svg::figure_svg(&set), format!("{name}: {} distinct points, {} roots\n", set.points.len(), set.total_roots()))
    };
    std::fs::write(path, doc).map_err(|source| CliError::Io { path: path.to_string(), source })?;
    Ok(Outcome::pass(format!("{summary}wrote {path}\n")))
}

pub fn octonion_check(opts: &Options) -> Result<Outcome, CliError> {
    let r = octonion_suite(opts.samples, opts.seed)?;
    let mut out = String::new();
    let _ = writeln!(out, "Zorn vs table: {}", r.zorn_vs_table);
    let _ = writeln!(out, "composition:   {}", r.composition);
    let _ = writeln!(out, "alternativity: {}", r.alternativity);
    for (label, ok) in &r.identities {
        let _ = writeln!(out, "{}  {label}", if *ok { "ok  " } else { "FAIL" });
    }
    let mut named = vec![("rho+".to_string(), rho(true)), ("rho-".to_string(), rho(false))];
    for k in 1..=3 {
        named.push((format!("eps{k}+"), epsilon(true, k)));
        named.push((format!("eps{k}-"), epsilon(false, k)));
    }
    for (label, x) in named {
        let z = ZornMatrix::from_octonion(&x)?;
        let _ = writeln!(out, "{label} =\n{z}");
    }
    Ok(Outcome { text: out, ok: r.is_ok() })
}

fn check_n(n: usize) -> Result<usize, CliError> {
    if HURWITZ_DIMS.contains(&n) {
        Ok(n)
    } else {
        Err(CliError::Usage(format!("n must be 1, 2, 4 or 8, not {n}")))
    }
}

pub fn jordan_check(n: usize, opts: &Options) -> Result<Outcome, CliError> {
    let n = check_n(n)?;
    let mut out = String::new();
    let mut ok = true;
    for (what, f) in [
        ("algebra axioms", check_algebra_axioms as fn(usize, usize, u64) -> _),
        ("triple axioms", check_triple_axioms),
        ("pair axioms", check_pair_axioms),
    ] {
        let r = f(n, opts.samples, opts.seed)?;
        ok &= r.is_ok();
        let _ = writeln!(out, "{what}: {} checks, {} failures", r.checks, r.failures.len());
        for w in r.failures.iter().take(5) {
            let _ = writeln!(out, "  {w}");
        }
    }
    let der = derivations_of_j(n)?.dim();
    let str0 = reduced_structure_algebra(n)?.dim();
    let jdim = 3 + 3 * n;
    let _ = writeln!(out, "dim J = {jdim}, dim Der = {der}, dim str0 = {str0}, dim TKK = {}", 2 * jdim + str0);
    Ok(Outcome { text: out, ok })
}

pub fn tkk_report(n: usize, opts: &Options) -> Result<Outcome, CliError> {
    let n = check_n(n)?;
    let t = tkk(n)?;
    let (deg_ok, witness) = crate::claims::grading_check(&t.lie);
    let (jac, mode) = verify_jacobi(&t.lie, opts.verify_mode());
    let v = v_normalization(n, 5, opts.seed)?;
    let mut counts = [0usize; 3];
    for d in t.lie.grading().unwrap_or(&[]) {
        counts[(d + 1) as usize] += 1;
    }
    let mut out = format!("TKK(J3^{n}): dim {} = {} + {} + {}\n", t.lie.dim(), counts[2], counts[1], counts[0]);
    let _ = writeln!(out, "grading: {}", if deg_ok { "ok".to_string() } else { witness });
    let _ = writeln!(out, "Jacobi: {jac} ({mode})");
    let _ = writeln!(out, "V constant: {}", v.as_ref().map_or("none".to_string(), Rational::to_string));
    Ok(Outcome { text: out, ok: deg_ok && jac.is_ok() && v == Some(Rational::ONE) })
}

fn constants_json(l: &LieAlgebra<Rational>) -> Value {
    Value::Array(l.constants().map(|(i, j, k, c)| json!({ "i": i, "j": j, "k": k, "c": c.to_string() })).collect())
}

pub fn tits(h: usize, n: usize, opts: &Options) -> Result<Outcome, CliError> {
    let n = check_n(n)?;
    let l = tits_for(h, n, opts)?;
    if opts.json {
        return Ok(Outcome::pass(pretty(&constants_json(&l))));
    }
    let (jac, mode) = verify_jacobi(&l, opts.verify_mode());
    let rank = cartan_subalgebra(&l, opts.seed)?.rank;
    let blocks: Vec<String> = l.blocks().iter().map(|b| format!("{} {}", b.name, b.len)).collect();
    let mut out = format!("{}: dim {}, rank {rank}, type {}\n", l.name(), l.dim(), types_with(l.dim(), rank).join("/"));
    let _ = writeln!(out, "blocks: {}", blocks.join(", "));
    let _ = writeln!(out, "Jacobi: {jac} ({mode})");
    Ok(Outcome { text: out, ok: jac.is_ok() })
}

pub fn magic(opts: &Options) -> Result<Outcome, CliError> {
    let report = magic_square(opts.verify_mode(), opts.seed)?;
    let mut out = String::new();
    let mut ok = report.is_symmetric();
    for &h in &HURWITZ_DIMS {
        let row: Vec<String> = HURWITZ_DIMS
            .iter()
            .map(|&n| {
                let e = report.entry(h, n).expect("all cells");
                format!("{:>4} {:<3}", e.dim, e.identified_type().unwrap_or("?"))
            })
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    for e in &report.entries {
        ok &= e.jacobi.is_ok() && e.identified_type().is_some();
        let _ = writeln!(out, "T({},{}): rank {}, Jacobi {} ({})", e.h_dim, e.n, e.rank, e.jacobi, e.jacobi_mode);
    }
    let _ = writeln!(out, "symmetric: {}", report.is_symmetric());
    Ok(Outcome { text: out, ok })
}

pub fn run_all(prefix: Option<&str>, opts: &Options) -> Result<Outcome, CliError> {
    let report = crate::claims::run_all(prefix, opts)?;
    let text = if opts.json { pretty(&report.to_json()) } else { report.to_text() };
    Ok(Outcome { text, ok: report.is_ok() })
}

/// Jacobi policy names accepted by `--verify` and `--mode`.
pub fn parse_policy(s: &str) -> Result<JacobiPolicy, CliError> {
    s.parse()
}
