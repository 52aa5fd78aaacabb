use bei_core::graph::Graph;
use bei_core::poly::FieldKind;
use bei_lab::{measure, run_campaign, Campaign, CampaignConfig, Verdict};

const ALL_FIELDS: [FieldKind; 3] = [
    FieldKind::Prime(32003),
    FieldKind::Prime(2),
    FieldKind::Rational,
];

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn closed_regularity_examples() {
    let triple = |graph: &Graph| {
        let r = measure(Campaign::ClosedRegularity, graph, &[FieldKind::DEFAULT]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        (
            r.reg_jg_over(FieldKind::DEFAULT).unwrap(),
            r.reg_in_over(FieldKind::DEFAULT).unwrap(),
            r.ell_sum(),
        )
    };
    assert_eq!(triple(&Graph::path(5).unwrap()), (4, 4, 4));
    assert_eq!(triple(&Graph::complete(5).unwrap()), (1, 1, 1));
    let pendant = g(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
    assert_eq!(triple(&pendant), (2, 2, 2));
    // relabeled input is measured in a closed labeling
    let scrambled = g(4, &[(4, 2), (4, 3), (2, 3), (3, 1)]);
    assert_eq!(triple(&scrambled), (2, 2, 2));
    assert!(measure(
        Campaign::ClosedRegularity,
        &Graph::star(3).unwrap(),
        &[FieldKind::DEFAULT]
    )
    .is_err());
}

#[test]
fn closed_regularity_above_the_resolution_bound() {
    let r = measure(
        Campaign::ClosedRegularity,
        &Graph::path(7).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.reg_jg_over(FieldKind::DEFAULT), None);
    assert_eq!(r.reg_in_over(FieldKind::DEFAULT), Some(6));
    assert_eq!(r.detail, "resolution=skipped");
}

#[test]
fn mm_bounds_examples() {
    let c4 = measure(
        Campaign::MmBounds,
        &Graph::cycle(4).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!(
        (c4.ell_sum(), c4.reg_jg_over(FieldKind::DEFAULT)),
        (2, Some(2))
    );
    assert_eq!(c4.verdict, Verdict::Pass);
    let k2 = measure(
        Campaign::MmBounds,
        &Graph::path(2).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!(
        (k2.ell_sum(), k2.reg_jg_over(FieldKind::DEFAULT)),
        (1, Some(1))
    );
    assert_eq!(k2.detail, "path=true");
    let five = run_campaign(&CampaignConfig::new(Campaign::MmBounds)).unwrap();
    let on_five: Vec<_> = five.iter().filter(|r| r.n == 5).collect();
    assert_eq!(on_five.len(), 21);
    let extremal: Vec<_> = on_five
        .iter()
        .filter(|r| r.reg_jg_over(FieldKind::DEFAULT) == Some(4))
        .collect();
    assert_eq!(extremal.len(), 1);
    assert_eq!(extremal[0].detail, "path=true");
}

#[test]
fn weakly_chordal_examples() {
    let p6 = measure(
        Campaign::WeaklyChordalIndmatch,
        &Graph::path(6).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!((p6.indmatch_h, p6.verdict), (Some(5), Verdict::Pass));
    let k6 = measure(
        Campaign::WeaklyChordalIndmatch,
        &Graph::complete(6).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!((k6.indmatch_h, k6.verdict), (Some(1), Verdict::Pass));
}

#[test]
fn chordal_clique_bound_examples() {
    let bowtie = g(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]);
    let r = measure(Campaign::ChordalCliqueBound, &bowtie, &[FieldKind::DEFAULT]).unwrap();
    assert_eq!(
        (r.r, r.reg_jg_over(FieldKind::DEFAULT), r.verdict),
        (2, Some(2), Verdict::Pass)
    );
    let path = measure(
        Campaign::ChordalCliqueBound,
        &Graph::path(6).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!(path.reg_jg_over(FieldKind::DEFAULT), Some(5));
    assert!(measure(
        Campaign::ChordalCliqueBound,
        &Graph::cycle(4).unwrap(),
        &[FieldKind::DEFAULT]
    )
    .is_err());
}

#[test]
fn prime_decomposition_examples() {
    for graph in [
        Graph::path(3).unwrap(),
        Graph::complete(4).unwrap(),
        Graph::star(3).unwrap(),
    ] {
        let r = measure(Campaign::PrimeDecomposition, &graph, &[FieldKind::DEFAULT]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.detail);
        assert!(r.detail.contains("equality=pass"));
    }
    let k4 = measure(
        Campaign::PrimeDecomposition,
        &Graph::complete(4).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert!(k4.detail.starts_with("cut_sets=1;"));
    let star = measure(
        Campaign::PrimeDecomposition,
        &Graph::star(3).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert!(star.detail.ends_with("q1q2=1/1"));
}

#[test]
fn char_independence_examples() {
    for (graph, reg) in [
        (Graph::path(4).unwrap(), 3),
        (Graph::complete(4).unwrap(), 1),
    ] {
        let r = measure(Campaign::CharIndependence, &graph, &ALL_FIELDS).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.reg_jg.iter().chain(&r.reg_in).all(|&(_, x)| x == reg));
        assert!(r.detail.ends_with("betti_tables=identical"));
    }
}

#[test]
fn gb_closedness_counts_labelings() {
    let r = measure(
        Campaign::GbClosedness,
        &Graph::path(3).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    // closed exactly when the middle vertex gets label 2
    assert_eq!(r.detail, "labelings=6;closed=2;gb=2");
    let claw = measure(
        Campaign::GbClosedness,
        &Graph::star(3).unwrap(),
        &[FieldKind::DEFAULT],
    )
    .unwrap();
    assert_eq!(claw.detail, "labelings=24;closed=0;gb=0");
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cfg = CampaignConfig::new(Campaign::PrimeDecomposition).with_n_max(5);
    let one = run_campaign(&cfg.clone().with_jobs(1)).unwrap();
    let many = run_campaign(&cfg.with_jobs(4)).unwrap();
    let (mut a, mut b) = (Vec::new(), Vec::new());
    bei_lab::write_csv(&one, &mut a).unwrap();
    bei_lab::write_csv(&many, &mut b).unwrap();
    assert_eq!(a, b);
}

#[test]
fn guards() {
    for c in Campaign::ALL {
        let cfg = CampaignConfig::new(c).with_n_max(c.guard() + 1);
        assert!(run_campaign(&cfg).is_err(), "{c}");
        assert!(c.default_n_max() <= c.guard());
        assert_eq!(c.name().parse::<Campaign>().unwrap(), c);
    }
    assert!("closed".parse::<Campaign>().is_err());
}
