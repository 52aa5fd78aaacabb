//! Single-graph reports for `analyze` and `gb`.

use std::fmt::Write as _;

use anyhow::Result;
use bei_core::closedness::{closedness_certificate, ClosednessCertificate, Obstruction};
use bei_core::edge_ideals::{binomial_generators, cut_point_sets, ini_lex_graph};
use bei_core::graph::*;
use bei_core::poly::{buchberger, initial_ideal, FieldKind, MonomialOrder, PolyRing};
use bei_core::regularity::{binomial_betti_table, initial_betti_table};
use bei_core::with_field;
use itertools::Itertools;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Every statistic the campaigns use, for one graph. Ideal computations that
/// hit a scale guard are reported as skipped.
pub fn analyze(g: &Graph, field: FieldKind) -> Result<String> {
    let mut out = String::new();
    let stats = graph_stats(g);
    writeln!(out, "n: {}", g.n())?;
    writeln!(out, "edges: {}", g.edge_string())?;
    writeln!(
        out,
        "canonical_id: {}",
        canonical_form(g)?.to_graph().to_graph6()
    )?;
    writeln!(out, "connected: {}", yes(stats.connected))?;
    writeln!(out, "ell: {}", stats.ell.iter().join("+"))?;
    writeln!(
        out,
        "maximal cliques (r = {}): {}",
        stats.r,
        maximal_cliques(g).iter().join(" ")
    )?;
    writeln!(out, "chordal: {}", yes(stats.chordal))?;
    writeln!(out, "claw-free: {}", yes(stats.claw_free))?;
    writeln!(out, "tree: {}", yes(stats.tree))?;
    writeln!(
        out,
        "cliques meet in <= 1 vertex: {}",
        yes(cliques_pairwise_intersect_at_most_one(g))
    )?;
    writeln!(out, "weakly chordal: {}", yes(is_weakly_chordal(g)))?;
    writeln!(out, "indmatch: {}", induced_matching_number(g))?;

    let certificate = closedness_certificate(g)?;
    match &certificate {
        ClosednessCertificate::Closed(l) => {
            writeln!(
                out,
                "closed: yes, labeling {}",
                l.as_slice().iter().join(" ")
            )?;
            let relabeled = l.apply(g);
            let h = ini_lex_graph(&relabeled)?;
            let named = h
                .edges()
                .iter()
                .map(|(i, j)| format!("x{i}-y{j}"))
                .join(" ");
            writeln!(out, "in_lex(G) edges: {named}")?;
            writeln!(
                out,
                "in_lex(G) weakly chordal: {}",
                yes(is_weakly_chordal(&h.to_graph()))
            )?;
            writeln!(
                out,
                "indmatch(in_lex(G)): {}",
                induced_matching_number(&h.to_graph())
            )?;
        }
        ClosednessCertificate::NotClosed { obstruction } => {
            let why = match obstruction {
                Some(Obstruction::Claw { center, leaves }) => {
                    format!("claw at {center} with leaves {}", leaves.iter().join(" "))
                }
                Some(Obstruction::ChordlessCycle(c)) => {
                    format!("chordless cycle {}", c.iter().join(" "))
                }
                None => "no closed labeling exists".to_string(),
            };
            writeln!(out, "closed: no ({why})")?;
        }
    }
    if stats.connected {
        let sets = cut_point_sets(g)?;
        writeln!(out, "cut-point sets: {}", sets.iter().join(" "))?;
    }

    // measure in a closed labeling when there is one, which leaves the Betti numbers unchanged
    let measured = certificate
        .labeling()
        .map_or_else(|| g.clone(), |l| l.apply(g));
    match with_field!(field, |f| binomial_betti_table(f, &measured)) {
        Ok(t) => {
            writeln!(
                out,
                "reg(S/J_G) over {field}: {}",
                t.regularity().expect("proper ideal")
            )?;
            writeln!(out, "Betti table of S/J_G:\n{t}")?;
        }
        Err(e) => writeln!(out, "reg(S/J_G) over {field}: skipped ({e})")?,
    }
    match with_field!(field, |f| initial_betti_table(f, &measured)) {
        Ok(t) => {
            writeln!(
                out,
                "reg(S/in_lex(J_G)) over {field}: {}",
                t.regularity().expect("proper ideal")
            )?;
            writeln!(out, "Betti table of S/in_lex(J_G):\n{t}")?;
        }
        Err(e) => writeln!(out, "reg(S/in_lex(J_G)) over {field}: skipped ({e})")?,
    }
    Ok(out)
}

/// Reduced lex Groebner basis of `J_G` and its initial ideal, in the given labeling.
pub fn groebner_report(g: &Graph, field: FieldKind) -> Result<String> {
    with_field!(field, |f| {
        let ring = PolyRing::for_graph(f, g.n())?;
        let gb = buchberger(&ring, &binomial_generators(&ring, g)?, MonomialOrder::Lex);
        let mut out = String::new();
        writeln!(
            out,
            "# reduced Groebner basis over {field}, lex x1 > ... > x{0} > y1 > ... > y{0}",
            g.n()
        )?;
        for p in gb.gens() {
            writeln!(out, "{}", ring.format(p))?;
        }
        writeln!(out, "# initial ideal")?;
        for m in initial_ideal(ring.nvars(), &gb).gens() {
            writeln!(out, "{}", ring.format_monomial(m))?;
        }
        Ok(out)
    })
}
