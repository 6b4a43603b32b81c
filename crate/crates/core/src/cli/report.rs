//! Machine-readable reports and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::conncalc::ConnFn;
use crate::groups::FiniteGroup;
use crate::homology::{Conn, Connectivity, HomologyResult};
use crate::strata::Mode;
use crate::universe::{GammaReport, LiftReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Links(LinksReport),
    Conn(ConnReport),
    Bm(BmReport),
    CubeBm(CubeBmReport),
    Cocartesian(CocartesianReport),
    Suspend(SuspendReport),
    Freudenthal(FreudenthalReport),
    UniverseCheck(UniverseReport),
}

impl Report {
    /// False when a verification in the report failed.
    pub fn passed(&self) -> bool {
        match self {
            Report::Links(r) => r.links.iter().all(|l| l.conjugation_invariant),
            Report::Cocartesian(r) => r.pass,
            Report::UniverseCheck(r) => r.pass,
            _ => true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Links(r) => {
                let _ = writeln!(out, "links of {} ({}, mode {}){}", r.space, r.group, mode_name(r.mode), sd_note(r.subdivided));
                for l in &r.links {
                    let _ = writeln!(
                        out,
                        "  {:<14} vertices {:<5} f {:?}  H {}  conn {}{}{}",
                        l.chain,
                        l.f_vector.first().copied().unwrap_or(0),
                        l.f_vector,
                        homology_text(&l.homology),
                        connectivity_text(&l.connectivity),
                        provisional_mark(l.provisional),
                        if l.conjugation_invariant { "" } else { "  CONJUGATES DISAGREE" }
                    );
                    for w in &l.warnings {
                        let _ = writeln!(out, "    warning: {w}");
                    }
                }
            }
            Report::Conn(r) => {
                let _ = writeln!(out, "connectivity of {} ({}, mode {}){}", r.map, r.group, mode_name(r.mode), sd_note(r.subdivided));
                conn_rows(&mut out, &r.values);
            }
            Report::Bm(r) => {
                let _ = writeln!(out, "Blakers–Massey for square {} ({})", r.square, r.group);
                let _ = writeln!(out, " n = conn({})", r.u);
                conn_rows(&mut out, &r.n);
                let _ = writeln!(out, " m = conn({})", r.v);
                conn_rows(&mut out, &r.m);
                let _ = writeln!(out, " bound n + m - 1");
                conn_rows(&mut out, &r.bound);
            }
            Report::CubeBm(r) => {
                let name = r.cube.as_deref().unwrap_or("constant edges");
                let _ = writeln!(out, "cubical Blakers–Massey for {name} ({}, n = {})", r.group, r.n);
                for e in &r.edges {
                    let _ = writeln!(out, " edge {}", e.name);
                    conn_rows(&mut out, &e.values);
                }
                let _ = writeln!(out, " bound 1 - n + sum");
                conn_rows(&mut out, &r.bound);
            }
            Report::Cocartesian(r) => {
                let _ = writeln!(out, "cocartesian check for square {} ({}, mode {})", r.square, r.group, mode_name(r.mode));
                let _ = writeln!(out, "  {:<14} {}", "(spaces)", yes_no(r.spaces));
                for l in &r.links {
                    let _ = writeln!(out, "  {:<14} {}{}", l.chain, yes_no(l.cocartesian), provisional_mark(l.provisional));
                }
                let _ = writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" });
            }
            Report::Suspend(r) => {
                let _ = writeln!(out, "{}-fold suspension of the links of {} ({})", r.times, r.space, r.group);
                for l in &r.links {
                    let _ = writeln!(out, "  {:<14} H {}{}", l.chain, homology_text(&l.homology), provisional_mark(l.provisional));
                }
            }
            Report::Freudenthal(r) => {
                let _ = writeln!(out, "Freudenthal bounds for {} {} ({})", r.kind, r.input, r.group);
                let _ = writeln!(out, " measured n");
                conn_rows(&mut out, &r.measured);
                let _ = writeln!(out, " unit into the universe construction: n + 1");
                conn_rows(&mut out, &r.universe_bound);
                let _ = writeln!(out, " suspension map: 2n + 1");
                conn_rows(&mut out, &r.freudenthal_bound);
            }
            Report::UniverseCheck(r) => {
                let _ = writeln!(out, "universe checks (seed {})", r.seed);
                for g in &r.groups {
                    let _ = writeln!(out, " {}: {}", g.group, if g.pass { "PASS" } else { "FAIL" });
                    for s in &g.subgroup_sums {
                        let _ = writeln!(out, "  sum over {:<8} isotropy {:<8} {}", s.subgroup, s.isotropy, pass_fail(s.pass));
                    }
                    for gm in &g.gamma {
                        let _ = writeln!(out, "  gamma {}<{}  {} samples  {}", gm.h, gm.k, gm.samples.len(), pass_fail(gm.pass));
                    }
                    for l in &g.lifts {
                        let _ = writeln!(
                            out,
                            "  lift {}<{}  {} evaluations, {} seam, {} boundary, {} centre  {}",
                            l.h,
                            l.k,
                            l.evaluations,
                            l.seam_checks,
                            l.boundary_checks,
                            l.centre_checks,
                            pass_fail(l.pass)
                        );
                        for f in &l.failures {
                            let _ = writeln!(out, "    {f}");
                        }
                    }
                    let _ = writeln!(out, "  random equivariance checks: {}", g.random_checks);
                    for f in &g.random_failures {
                        let _ = writeln!(out, "    {f}");
                    }
                }
                let _ = writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" });
            }
        }
        out
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Isovariant => "isvt",
        Mode::Equivariant => "eqvt",
    }
}

fn sd_note(subdivided: bool) -> &'static str {
    if subdivided {
        " [scene subdivided for rigidity]"
    } else {
        ""
    }
}

fn provisional_mark(p: bool) -> &'static str {
    if p {
        "  [provisional]"
    } else {
        ""
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "cocartesian"
    } else {
        "NOT cocartesian"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn homology_text(h: &HomologyResult) -> String {
    let mut parts = Vec::new();
    for (d, b) in h.betti().iter().enumerate() {
        let mut term = match *b {
            0 => String::new(),
            1 => "Z".to_string(),
            b => format!("Z^{b}"),
        };
        for t in h.torsion(d) {
            if !term.is_empty() {
                term.push('+');
            }
            let _ = write!(term, "Z/{t}");
        }
        parts.push(if term.is_empty() { "0".to_string() } else { term });
    }
    if parts.is_empty() {
        "0 (empty)".to_string()
    } else {
        parts.join(", ")
    }
}

fn connectivity_text(c: &Connectivity) -> String {
    if c.caveat {
        format!("{} (homological)", c.value)
    } else {
        c.value.to_string()
    }
}

fn conn_rows(out: &mut String, rows: &[ConnEntry]) {
    for r in rows {
        let caveat = if r.caveat { " (homological)" } else { "" };
        let _ = writeln!(out, "  {:<14} {}{}{}", r.class, r.value, caveat, provisional_mark(r.provisional));
    }
}

/// One value of a connectivity function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnEntry {
    pub class: String,
    pub value: Conn,
    pub provisional: bool,
    pub caveat: bool,
}

pub fn conn_entries(f: &ConnFn, group: &FiniteGroup) -> Vec<ConnEntry> {
    f.iter()
        .map(|(k, value)| ConnEntry { class: k.name(group), value, provisional: f.is_provisional(k), caveat: f.has_caveat(k) })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkEntry {
    /// Canonical representative of the class.
    pub chain: String,
    /// How many chains of the class were computed and compared.
    pub conjugates: usize,
    pub conjugation_invariant: bool,
    pub provisional: bool,
    pub warnings: Vec<String>,
    pub f_vector: Vec<usize>,
    pub homology: HomologyResult,
    pub reduced_betti: Option<Vec<usize>>,
    pub components: usize,
    pub connectivity: Connectivity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinksReport {
    pub space: String,
    pub group: String,
    pub mode: Mode,
    pub subdivided: bool,
    pub links: Vec<LinkEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnReport {
    pub map: String,
    pub group: String,
    pub mode: Mode,
    pub subdivided: bool,
    pub values: Vec<ConnEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BmReport {
    pub square: String,
    pub group: String,
    pub mode: Mode,
    pub u: String,
    pub v: String,
    pub n: Vec<ConnEntry>,
    pub m: Vec<ConnEntry>,
    pub bound: Vec<ConnEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedConnFn {
    pub name: String,
    pub values: Vec<ConnEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CubeBmReport {
    pub cube: Option<String>,
    pub group: String,
    pub mode: Mode,
    pub n: usize,
    pub edges: Vec<NamedConnFn>,
    pub bound: Vec<ConnEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocartesianEntry {
    pub chain: String,
    pub provisional: bool,
    pub cocartesian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocartesianReport {
    pub square: String,
    pub group: String,
    pub mode: Mode,
    /// The square of underlying complexes.
    pub spaces: bool,
    pub links: Vec<CocartesianEntry>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuspendEntry {
    pub chain: String,
    pub provisional: bool,
    pub homology: HomologyResult,
    pub reduced_betti: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuspendReport {
    pub space: String,
    pub group: String,
    pub times: usize,
    pub links: Vec<SuspendEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreudenthalReport {
    pub input: String,
    /// `map` or `space`.
    pub kind: String,
    pub group: String,
    pub measured: Vec<ConnEntry>,
    pub universe_bound: Vec<ConnEntry>,
    pub freudenthal_bound: Vec<ConnEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSumCheck {
    pub subgroup: String,
    pub isotropy: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseGroupReport {
    pub group: String,
    pub subgroup_sums: Vec<SubgroupSumCheck>,
    pub gamma: Vec<GammaReport>,
    pub lifts: Vec<LiftReport>,
    pub random_checks: usize,
    pub random_failures: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseReport {
    pub seed: u64,
    pub groups: Vec<UniverseGroupReport>,
    pub pass: bool,
}
