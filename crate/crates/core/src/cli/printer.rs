use std::fmt::Write;

use super::ast::*;

/// Canonical layout of a session: two-space indents, one declaration per
/// line, blank lines between top-level items.
pub fn format_session(s: &Session) -> String {
    let mut out = String::new();
    for (i, item) in s.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match item {
            Item::Ring(r) => ring(&mut out, r),
            Item::Module(m) => module(&mut out, m),
            Item::Run(r) => run(&mut out, r),
        }
    }
    out
}

fn ring(out: &mut String, r: &RingDecl) {
    match &r.name {
        Some(n) => writeln!(out, "ring {n} {{").unwrap(),
        None => out.push_str("ring {\n"),
    }
    writeln!(out, "  char {};", r.characteristic).unwrap();
    let vars: Vec<String> = r
        .vars
        .iter()
        .map(|v| match v.weight {
            Some(w) => format!("{}:{w}", v.name),
            None => v.name.clone(),
        })
        .collect();
    writeln!(out, "  vars {};", vars.join(" ")).unwrap();
    if let Some(o) = &r.order {
        writeln!(out, "  order {o};").unwrap();
    }
    if !r.ideal.is_empty() {
        out.push_str("  ideal {\n");
        for g in &r.ideal {
            writeln!(out, "    {g};").unwrap();
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
}

fn module(out: &mut String, m: &ModuleDecl) {
    write!(out, "module {} over {}", m.name, m.ring).unwrap();
    match &m.body {
        ModuleBody::Call { func, args } => writeln!(out, " = {func}({});", args.join(", ")).unwrap(),
        ModuleBody::Explicit { gens, rels } => {
            out.push_str(" {\n");
            let g: Vec<String> = gens.iter().map(|d| d.to_string()).collect();
            if g.is_empty() {
                out.push_str("  gens;\n");
            } else {
                writeln!(out, "  gens {};", g.join(" ")).unwrap();
            }
            if !rels.is_empty() {
                out.push_str("  rels {\n");
                for col in rels {
                    writeln!(out, "    [{}];", col.join(", ")).unwrap();
                }
                out.push_str("  }\n");
            }
            out.push_str("}\n");
        }
    }
}

pub(crate) fn value(v: &Value) -> String {
    match v {
        Value::Int(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => format!("{s:?}"),
        Value::Ident(s) => s.clone(),
        Value::List(items) => {
            let parts: Vec<String> = items.iter().map(value).collect();
            format!("[{}]", parts.join(", "))
        }
    }
}

fn run(out: &mut String, r: &RunDecl) {
    write!(out, "run {}", r.signature()).unwrap();
    if r.config.is_empty() && r.expects.is_empty() {
        out.push_str(";\n");
        return;
    }
    out.push_str(" {\n");
    for s in &r.config {
        writeln!(out, "  {} {};", s.key, value(&s.value)).unwrap();
    }
    for e in &r.expects {
        write!(out, "  expect {} = {}", e.key, value(&e.value)).unwrap();
        if let Some(p) = e.provenance {
            write!(out, " {}", p.name()).unwrap();
            if let Some(n) = &e.note {
                write!(out, " {n:?}").unwrap();
            }
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
}
