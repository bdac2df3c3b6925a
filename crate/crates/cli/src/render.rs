//! Human-readable output for `--format pretty`.

use std::fmt::Write;

use spherectl_core::classify::DiffeoVerdict;
use spherectl_core::moduli::PROVENANCE;
use spherectl_core::{BigInt, CensusReport, ComponentsReport, SeparationCertificate, SpaceDossier};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn dossier(d: &SpaceDossier) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "M_k for n = {}, k = {} (orientation {:+})",
        d.bundle.euler(),
        d.bundle.pont(),
        d.orientation.sign()
    );
    let _ = writeln!(s, "  H^0..7          {}", d.cohomology);
    let _ = writeln!(s, "  homotopy sphere {}", yes_no(d.is_homotopy_sphere));
    let _ = writeln!(s, "  sign(W)         {}", d.sign_w);
    let _ = writeln!(s, "  p1^2[W]         {}", d.p1sq_w);
    match &d.mu {
        Some(mu) => {
            let _ = writeln!(s, "  mu              {mu}");
        }
        None => {
            let _ = writeln!(s, "  mu              undefined (|n| > 1)");
        }
    }
    s
}

pub fn verdict(question: &str, v: &DiffeoVerdict, homeo: &DiffeoVerdict) -> String {
    format!("{question}: {v}\nhomeomorphic: {homeo}\n")
}

fn provenance_lines(s: &mut String) {
    for (step, statement) in PROVENANCE {
        let _ = writeln!(s, "  [{step}] {statement}");
    }
}

pub fn certificate(c: &SeparationCertificate, provenance: bool) -> String {
    let mut s = String::new();
    let tags: Vec<_> = c.curvature_classes.iter().map(|t| t.tag()).collect();
    let _ = writeln!(
        s,
        "{} vs {} on n = {}",
        c.metric_labels.0,
        c.metric_labels.1,
        c.pair.0.euler()
    );
    let _ = writeln!(s, "  sign(X)     {}", c.glued.sign_x);
    let _ = writeln!(s, "  p1^2[X]     {}   ({})", c.glued.p1sq_x, c.derivation.formula());
    let _ = writeln!(s, "  A-hat(X)    forced zero");
    let _ = writeln!(s, "  verdict     {} [{}]", c.verdict, tags.join(", "));
    if provenance {
        provenance_lines(&mut s);
    }
    s
}

pub fn components(r: &ComponentsReport, provenance: bool) -> String {
    let mut s = String::new();
    let ks: Vec<String> = r.family.iter().map(|b| b.pont().to_string()).collect();
    let _ = writeln!(s, "family n = {}: k in [{}]", r.base.euler(), ks.join(", "));
    for c in &r.certificates {
        let _ = writeln!(
            s,
            "  {} vs {}: {} (p1^2[X] = {})",
            c.metric_labels.0, c.metric_labels.1, c.verdict, c.contradiction_value
        );
    }
    match r.banner() {
        Some(banner) => {
            let tags: Vec<_> = r.curvature_classes.iter().map(|t| t.tag()).collect();
            let _ = writeln!(s, "{banner} [{}]", tags.join(", "));
        }
        None => {
            let _ = writeln!(s, "no verdict: not every pair is separated");
        }
    }
    if provenance {
        provenance_lines(&mut s);
    }
    s
}

pub fn census(r: &CensusReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n = {}, k in [{}, {}]{}: {} classes, {} skipped, {} unknown pairs",
        r.n,
        r.from,
        r.to,
        if r.unoriented { " (unoriented)" } else { "" },
        r.classes.len(),
        r.skipped,
        r.unknown_pairs_count
    );
    for c in &r.classes {
        let mu = c.mu.as_ref().map(|m| format!("  mu = {m}")).unwrap_or_default();
        let _ = writeln!(s, "  k = {:>6}  x{}{}", c.representative, c.members_count, mu);
    }
    s
}

pub fn mu_set(values: &[String], unoriented: bool) -> String {
    format!(
        "{} values{}: {}\n",
        values.len(),
        if unoriented { " up to sign" } else { "" },
        values.join(", ")
    )
}

pub fn family(n: &BigInt, step: &BigInt, ks: &[&BigInt]) -> String {
    let ks: Vec<String> = ks.iter().map(ToString::to_string).collect();
    format!("n = {n}, step {step}: {}\n", ks.join(", "))
}

pub fn family_tsv(ks: &[&BigInt]) -> String {
    let mut s = String::from("index\tk\n");
    for (i, k) in ks.iter().enumerate() {
        let _ = writeln!(s, "{i}\t{k}");
    }
    s
}
