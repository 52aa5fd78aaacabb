use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Result};
use bei_core::closedness::{find_closed_labeling, is_closed_wrt_labeling};
use bei_core::edge_ideals::{
    binomial_generators, contained_in_every_prime_component, cut_point_sets, ini_lex_graph,
    leaf_cut_vertices, q1_q2_decomposition, verify_prime_decomposition, MAX_EQUALITY_N,
};
use bei_core::graph::*;
use bei_core::poly::{is_groebner_basis, FieldKind, PolyRing};
use bei_core::regularity::{
    binomial_betti_table, binomial_regularity, initial_betti_table, initial_regularity, BettiTable,
};
use bei_core::with_field;
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{CampaignConfig, REPORT_FIELDS};

/// Largest `n` for which closed-regularity also resolves `J_G` itself; above
/// it only the monomial pathway runs.
pub const RESOLUTION_N_MAX: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Campaign {
    ClosedRegularity,
    MmBounds,
    WeaklyChordalIndmatch,
    ChordalCliqueBound,
    PrimeDecomposition,
    CharIndependence,
    GbClosedness,
}

enum Family {
    /// Connected closed graphs, measured in a closed labeling.
    Closed,
    Connected,
    /// Connected chordal graphs whose maximal cliques meet in at most one vertex.
    BlockChordal,
}

impl Campaign {
    pub const ALL: [Campaign; 7] = [
        Campaign::ClosedRegularity,
        Campaign::MmBounds,
        Campaign::WeaklyChordalIndmatch,
        Campaign::ChordalCliqueBound,
        Campaign::PrimeDecomposition,
        Campaign::CharIndependence,
        Campaign::GbClosedness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::ClosedRegularity => "closed-regularity",
            Campaign::MmBounds => "mm-bounds",
            Campaign::WeaklyChordalIndmatch => "weakly-chordal-indmatch",
            Campaign::ChordalCliqueBound => "chordal-clique-bound",
            Campaign::PrimeDecomposition => "prime-decomposition",
            Campaign::CharIndependence => "char-independence",
            Campaign::GbClosedness => "gb-closedness",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Campaign::ClosedRegularity => {
                "closed connected graphs: reg(S/J_G) = reg(S/in_lex(J_G)) = ell"
            }
            Campaign::MmBounds => {
                "connected graphs: ell <= reg(S/J_G) <= n-1, with n-1 only for the path"
            }
            Campaign::WeaklyChordalIndmatch => {
                "closed connected graphs: in_lex(G) weakly chordal with indmatch = ell"
            }
            Campaign::ChordalCliqueBound => {
                "chordal graphs with cliques meeting in <= 1 vertex: reg(S/J_G) <= r"
            }
            Campaign::PrimeDecomposition => {
                "connected graphs: J_G against its cut-point primes and the Q1/Q2 split"
            }
            Campaign::CharIndependence => {
                "closed connected graphs: regularity equal over every field"
            }
            Campaign::GbClosedness => {
                "connected graphs, every labeling: generators are a Groebner basis iff closed"
            }
        }
    }

    /// Largest supported `n_max`.
    pub fn guard(self) -> usize {
        match self {
            Campaign::ClosedRegularity | Campaign::WeaklyChordalIndmatch => 7,
            Campaign::MmBounds | Campaign::CharIndependence => 5,
            Campaign::ChordalCliqueBound
            | Campaign::PrimeDecomposition
            | Campaign::GbClosedness => 6,
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Campaign::ClosedRegularity => RESOLUTION_N_MAX,
            Campaign::GbClosedness => 5,
            c => c.guard(),
        }
    }

    pub fn default_fields(self) -> Vec<FieldKind> {
        match self {
            Campaign::CharIndependence => REPORT_FIELDS.to_vec(),
            _ => vec![FieldKind::DEFAULT],
        }
    }

    fn family(self) -> Family {
        match self {
            Campaign::ClosedRegularity
            | Campaign::WeaklyChordalIndmatch
            | Campaign::CharIndependence => Family::Closed,
            Campaign::ChordalCliqueBound => Family::BlockChordal,
            _ => Family::Connected,
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                anyhow!(
                    "unknown campaign {s:?}; expected one of {}",
                    Campaign::ALL.iter().map(|c| c.name()).join(", ")
                )
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One graph's measurements and verdict within a campaign.
#[derive(Clone, Debug)]
pub struct CampaignResult {
    pub campaign: Campaign,
    pub n: usize,
    pub canonical: CanonicalForm,
    /// graph6 string of the canonical form.
    pub canonical_id: String,
    /// The graph as measured; closed campaigns use a closed labeling.
    pub graph: Graph,
    pub closed: bool,
    pub chordal: bool,
    pub tree: bool,
    /// Longest induced path length per connected component.
    pub ell: Vec<usize>,
    pub r: usize,
    pub reg_jg: Vec<(FieldKind, usize)>,
    pub reg_in: Vec<(FieldKind, usize)>,
    pub indmatch_h: Option<usize>,
    /// Campaign-specific measurements as `key=value` pairs joined by `;`.
    pub detail: String,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl CampaignResult {
    pub fn ell_sum(&self) -> usize {
        self.ell.iter().sum()
    }

    pub fn reg_jg_over(&self, field: FieldKind) -> Option<usize> {
        self.reg_jg
            .iter()
            .find(|(f, _)| *f == field)
            .map(|&(_, r)| r)
    }

    pub fn reg_in_over(&self, field: FieldKind) -> Option<usize> {
        self.reg_in
            .iter()
            .find(|(f, _)| *f == field)
            .map(|&(_, r)| r)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn is_path(&self) -> Result<bool> {
        Ok(self.canonical == canonical_form(&Graph::path(self.n)?)?)
    }
}

/// Runs `campaign`'s pipeline on one connected graph of its family.
pub fn measure(campaign: Campaign, g: &Graph, fields: &[FieldKind]) -> Result<CampaignResult> {
    let start = Instant::now();
    if !g.is_connected() {
        bail!(
            "{campaign} runs on connected graphs; {} is disconnected",
            g.edge_string()
        );
    }
    let canonical = canonical_form(g)?;
    let labeling = find_closed_labeling(g)?;
    let graph = match campaign.family() {
        Family::Closed => match &labeling {
            Some(l) => l.apply(g),
            None => bail!(
                "{campaign} runs on closed graphs; {} is not closed",
                g.edge_string()
            ),
        },
        Family::BlockChordal if !(is_chordal(g) && cliques_pairwise_intersect_at_most_one(g)) => {
            bail!("{campaign} needs a chordal graph whose cliques meet in at most one vertex")
        }
        _ => g.clone(),
    };
    let stats = graph_stats(&graph);
    let mut res = CampaignResult {
        campaign,
        n: g.n(),
        canonical,
        canonical_id: canonical.to_graph().to_graph6(),
        graph,
        closed: labeling.is_some(),
        chordal: stats.chordal,
        tree: stats.tree,
        ell: stats.ell,
        r: stats.r,
        reg_jg: Vec::new(),
        reg_in: Vec::new(),
        indmatch_h: None,
        detail: String::new(),
        verdict: Verdict::Fail,
        elapsed: Duration::ZERO,
    };
    let ok = match campaign {
        Campaign::ClosedRegularity => closed_regularity(&mut res, fields)?,
        Campaign::MmBounds => mm_bounds(&mut res, fields)?,
        Campaign::WeaklyChordalIndmatch => weakly_chordal_indmatch(&mut res)?,
        Campaign::ChordalCliqueBound => chordal_clique_bound(&mut res, fields)?,
        Campaign::PrimeDecomposition => prime_decomposition(&mut res, fields[0])?,
        Campaign::CharIndependence => char_independence(&mut res, fields)?,
        Campaign::GbClosedness => gb_closedness(&mut res, fields[0])?,
    };
    res.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    res.elapsed = start.elapsed();
    Ok(res)
}

fn regularities(res: &mut CampaignResult, fields: &[FieldKind]) -> Result<()> {
    for &f in fields {
        res.reg_jg.push((f, binomial_regularity(&res.graph, f)?));
    }
    Ok(())
}

fn closed_regularity(res: &mut CampaignResult, fields: &[FieldKind]) -> Result<bool> {
    let ell = res.ell_sum();
    if res.n <= RESOLUTION_N_MAX {
        regularities(res, fields)?;
    } else {
        res.detail = "resolution=skipped".into();
    }
    res.reg_in.push((
        FieldKind::DEFAULT,
        initial_regularity(&res.graph, FieldKind::DEFAULT)?,
    ));
    let h = ini_lex_graph(&res.graph)?.to_graph();
    let indmatch = induced_matching_number(&h);
    res.indmatch_h = Some(indmatch);
    Ok(res.reg_jg.iter().chain(&res.reg_in).all(|&(_, r)| r == ell) && indmatch == ell)
}

fn mm_bounds(res: &mut CampaignResult, fields: &[FieldKind]) -> Result<bool> {
    regularities(res, fields)?;
    let (ell, top, path) = (res.ell_sum(), res.n - 1, res.is_path()?);
    res.detail = format!("path={path}");
    Ok(res
        .reg_jg
        .iter()
        .all(|&(_, r)| ell <= r && r <= top && (r == top) == path))
}

fn weakly_chordal_indmatch(res: &mut CampaignResult) -> Result<bool> {
    let h = ini_lex_graph(&res.graph)?.to_graph();
    let weak = is_weakly_chordal(&h);
    let indmatch = induced_matching_number(&h);
    res.indmatch_h = Some(indmatch);
    res.detail = format!("weakly_chordal={weak}");
    Ok(weak && indmatch == res.ell_sum())
}

fn chordal_clique_bound(res: &mut CampaignResult, fields: &[FieldKind]) -> Result<bool> {
    regularities(res, fields)?;
    let path = res.is_path()?;
    res.detail = format!("tree={};path={path}", res.tree);
    let (r, top, tree) = (res.r, res.n - 1, res.tree);
    Ok(res
        .reg_jg
        .iter()
        .all(|&(_, reg)| reg <= r && (!tree || (reg == top) == path)))
}

fn prime_decomposition(res: &mut CampaignResult, field: FieldKind) -> Result<bool> {
    let g = res.graph.clone();
    let n = g.n();
    let cut_sets = cut_point_sets(&g)?.len();
    let equality = if n <= MAX_EQUALITY_N {
        Some(with_field!(field, |f| verify_prime_decomposition(f, &g))?)
    } else {
        None
    };
    let containment = with_field!(field, |f| contained_in_every_prime_component(f, &g))?;
    let q1q2 = if n <= MAX_EQUALITY_N && res.chordal && cliques_pairwise_intersect_at_most_one(&g) {
        let vertices = if res.r == 1 {
            (1..=n).collect()
        } else {
            leaf_cut_vertices(&g)
        };
        let mut held = 0;
        for &i in &vertices {
            if with_field!(field, |f| q1_q2_decomposition(f, &g, i).map(|d| d.holds()))? {
                held += 1;
            }
        }
        Some((held, vertices.len()))
    } else {
        None
    };
    let show = |b: Option<bool>| match b {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "skipped",
    };
    res.detail = format!(
        "cut_sets={cut_sets};equality={};containment={};q1q2={}",
        show(equality),
        show(Some(containment)),
        q1q2.map_or("skipped".to_string(), |(h, t)| format!("{h}/{t}"))
    );
    Ok(equality.unwrap_or(true) && containment && q1q2.map_or(true, |(h, t)| h == t))
}

fn char_independence(res: &mut CampaignResult, fields: &[FieldKind]) -> Result<bool> {
    let g = res.graph.clone();
    let mut tables: Vec<BettiTable> = Vec::new();
    for &field in fields {
        let t = with_field!(field, |f| binomial_betti_table(f, &g))?;
        let t_in = with_field!(field, |f| initial_betti_table(f, &g))?;
        res.reg_jg
            .push((field, t.regularity().expect("proper ideal")));
        res.reg_in
            .push((field, t_in.regularity().expect("proper ideal")));
        tables.push(t);
        tables.push(t_in);
    }
    let same_tables = tables
        .chunks(2)
        .tuple_windows()
        .all(|(a, b)| a[0].same_numbers(&b[0]) && a[1].same_numbers(&b[1]));
    res.detail = format!(
        "reg_in={};betti_tables={}",
        res.reg_in.iter().map(|(f, r)| format!("{f}:{r}")).join(","),
        if same_tables { "identical" } else { "differ" }
    );
    Ok(res.reg_jg.iter().map(|p| p.1).all_equal() && res.reg_in.iter().map(|p| p.1).all_equal())
}

fn gb_closedness(res: &mut CampaignResult, field: FieldKind) -> Result<bool> {
    let g = res.graph.clone();
    let n = g.n();
    let (mut labelings, mut closed, mut gb, mut mismatch) = (0, 0, 0, 0);
    for p in (1..=n).permutations(n) {
        let h = g.permuted(&p);
        let is_gb = with_field!(field, |f| {
            let ring = PolyRing::for_graph(f, n)?;
            let gens = binomial_generators(&ring, &h)?;
            is_groebner_basis(&ring, &gens)
        });
        let is_closed = is_closed_wrt_labeling(&h);
        labelings += 1;
        closed += is_closed as usize;
        gb += is_gb as usize;
        mismatch += (is_gb != is_closed) as usize;
    }
    res.detail = format!("labelings={labelings};closed={closed};gb={gb}");
    Ok(mismatch == 0)
}

/// Connected graphs on `1..=n_max` vertices in the campaign's family, in
/// canonical order.
pub fn family_members(campaign: Campaign, n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_connected_graphs(n)? {
            let member = match campaign.family() {
                Family::Closed => find_closed_labeling(&g)?.is_some(),
                Family::BlockChordal => {
                    is_chordal(&g) && cliques_pairwise_intersect_at_most_one(&g)
                }
                Family::Connected => true,
            };
            if member {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Measures every family member on `cfg.jobs` threads. The output is sorted by
/// `(n, canonical form)` whatever the thread count.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<Vec<CampaignResult>> {
    cfg.validate()?;
    let graphs = family_members(cfg.campaign, cfg.n_max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()?;
    let mut results = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| measure(cfg.campaign, g, &cfg.fields))
            .collect::<Result<Vec<_>>>()
    })?;
    results.sort_by_key(|r| (r.n, r.canonical));
    Ok(results)
}
