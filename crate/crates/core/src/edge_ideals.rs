//! Binomial edge ideals `J_G = (x_i y_j - x_j y_i : {i,j} in E(G))`, their
//! lex initial ideals, the prime ideals `P_S(G)` and the decomposition of
//! `J_G` at the cut vertex of a leaf clique.
//!
//! All ideals live in `K[x1..xn, y1..yn]` with `x_i` at index `i - 1` and
//! `y_i` at index `n + i - 1`.

use crate::closedness::closed_violation;
use crate::graph::stats::components_within;
use crate::graph::{
    cliques_pairwise_intersect_at_most_one, is_chordal, maximal_cliques, Graph, VertexSet,
};
use crate::poly::{
    buchberger, contains_all, ideal_equal, ideal_intersection, ideal_sum, initial_ideal,
    intersect_all, reduce, Field, GroebnerBasis, Monomial, MonomialIdeal, MonomialOrder, PolyRing,
    Polynomial, MAX_INTERSECTION_VARS, MAX_VARS,
};
use crate::{Error, Result};

/// Largest graph whose binomial edge ideal fits in a ring.
pub const MAX_IDEAL_N: usize = MAX_VARS / 2;

/// Largest graph for which [`verify_prime_decomposition`] checks equality.
pub const MAX_EQUALITY_N: usize = MAX_INTERSECTION_VARS / 2;

/// Largest graph for which [`verify_prime_decomposition`] checks containments.
pub const MAX_CONTAINMENT_N: usize = 6;

fn check_ring<F: Field>(ring: &PolyRing<F>, n: usize) -> Result<()> {
    if ring.nvars() != 2 * n {
        return Err(Error::VariableCount(ring.nvars(), 2 * n));
    }
    Ok(())
}

fn graph_ring<F: Field>(field: F, g: &Graph) -> Result<PolyRing<F>> {
    if g.n() > MAX_IDEAL_N {
        return Err(Error::ScaleGuard(format!(
            "binomial edge ideals need n <= {MAX_IDEAL_N}, got {}",
            g.n()
        )));
    }
    PolyRing::for_graph(field, g.n())
}

/// `x_i` in the ring for an `n`-vertex graph.
pub fn x_var<F: Field>(ring: &PolyRing<F>, i: usize) -> Polynomial<F::Elem> {
    ring.var(i - 1)
}

/// `y_i` in the ring for an `n`-vertex graph.
pub fn y_var<F: Field>(ring: &PolyRing<F>, i: usize) -> Polynomial<F::Elem> {
    ring.var(ring.nvars() / 2 + i - 1)
}

/// `f_ij = x_i y_j - x_j y_i`.
pub fn f_ij<F: Field>(ring: &PolyRing<F>, i: usize, j: usize) -> Polynomial<F::Elem> {
    let n = ring.nvars() / 2;
    let mut a = vec![0u32; 2 * n];
    a[i - 1] = 1;
    a[n + j - 1] = 1;
    let mut b = vec![0u32; 2 * n];
    b[j - 1] = 1;
    b[n + i - 1] = 1;
    let fld = ring.field();
    ring.from_terms([
        (Monomial::from_exponents(&a), fld.one()),
        (Monomial::from_exponents(&b), fld.neg(&fld.one())),
    ])
}

/// Generators of `J_G`, one per edge `{i,j}` with `i < j`, in edge order.
pub fn binomial_generators<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
) -> Result<Vec<Polynomial<F::Elem>>> {
    check_ring(ring, g.n())?;
    Ok(g.edges()
        .into_iter()
        .map(|(i, j)| f_ij(ring, i, j))
        .collect())
}

/// Binomial edge ideal of the complete graph on `set`.
fn complete_binomials<F: Field>(ring: &PolyRing<F>, set: VertexSet) -> Vec<Polynomial<F::Elem>> {
    let v = set.to_vec();
    let mut out = Vec::new();
    for (a, &i) in v.iter().enumerate() {
        for &j in &v[a + 1..] {
            out.push(f_ij(ring, i, j));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct BinomialEdgeIdeal<F: Field> {
    graph: Graph,
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F::Elem>>,
}

impl<F: Field> BinomialEdgeIdeal<F> {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F::Elem>] {
        &self.gens
    }

    /// Reduced lex Gröbner basis.
    pub fn groebner_basis(&self) -> GroebnerBasis<F::Elem> {
        buchberger(&self.ring, &self.gens, MonomialOrder::Lex)
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self.ring.nvars(), &self.groebner_basis())
    }
}

pub fn binomial_edge_ideal<F: Field>(field: F, g: &Graph) -> Result<BinomialEdgeIdeal<F>> {
    let ring = graph_ring(field, g)?;
    let gens = binomial_generators(&ring, g)?;
    Ok(BinomialEdgeIdeal {
        graph: g.clone(),
        ring,
        gens,
    })
}

/// The bipartite graph on `{x_1..x_n} ∪ {y_1..y_n}` with an edge `x_i y_j`
/// for every edge `{i,j}`, `i < j`, of a closed labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IniLexGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl IniLexGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Pairs `(i, j)` standing for the edges `{x_i, y_j}`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// As a graph on `2n` vertices: `x_i` is vertex `i`, `y_j` is vertex `n + j`.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(i, j)| (i, self.n + j)).collect();
        Graph::from_edges(2 * self.n, &edges).expect("bipartite edges are valid")
    }

    /// The edge ideal `(x_i y_j)` in `K[x1..xn, y1..yn]`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self.edges.iter().map(|&(i, j)| {
            Monomial::from_support(2 * self.n, 1 << (i - 1) | 1 << (self.n + j - 1))
        });
        MonomialIdeal::new(2 * self.n, gens)
    }
}

/// Rejects labelings that are not closed, since the initial ideal is then
/// not generated by the edge monomials.
pub fn ini_lex_graph(g: &Graph) -> Result<IniLexGraph> {
    if let Some((i, j, k)) = closed_violation(g) {
        return Err(Error::NotClosed(i, j, k));
    }
    if g.n() > MAX_IDEAL_N {
        return Err(Error::ScaleGuard(format!(
            "initial-ideal graph needs n <= {MAX_IDEAL_N}, got {}",
            g.n()
        )));
    }
    Ok(IniLexGraph {
        n: g.n(),
        edges: g.edges(),
    })
}

/// Number of connected components of `G` restricted to `[n] \ S`.
pub fn component_count(g: &Graph, s: VertexSet) -> usize {
    components_within(g, g.vertices().difference(s)).len()
}

/// `S` is empty or removing any of its vertices lowers the component count.
pub fn is_cut_point_set(g: &Graph, s: VertexSet) -> bool {
    let c = component_count(g, s);
    s.iter().all(|i| component_count(g, s.without(i)) < c)
}

/// All cut-point sets of a connected graph, in [`VertexSet`] order.
pub fn cut_point_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out: Vec<VertexSet> = (0u32..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| is_cut_point_set(g, s))
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeComponent<E> {
    pub s: VertexSet,
    /// Components of `G` restricted to `[n] \ S`, sorted by minimum.
    pub components: Vec<VertexSet>,
    pub gens: Vec<Polynomial<E>>,
}

/// `P_S(G) = (x_i, y_i : i in S) + sum of J of the completed components of G - S`.
pub fn prime_component<F: Field>(
    ring: &PolyRing<F>,
    g: &Graph,
    s: VertexSet,
) -> Result<PrimeComponent<F::Elem>> {
    check_ring(ring, g.n())?;
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidArgument(format!(
            "{s} is not a subset of 1..={}",
            g.n()
        )));
    }
    let components = components_within(g, g.vertices().difference(s));
    let mut gens = Vec::new();
    for i in s.iter() {
        gens.push(x_var(ring, i));
        gens.push(y_var(ring, i));
    }
    for c in &components {
        gens.extend(complete_binomials(ring, *c));
    }
    Ok(PrimeComponent {
        s,
        components,
        gens,
    })
}

/// `J_G ⊆ P_S(G)` for every `S ⊆ [n]`, by reducing each generator.
pub fn contained_in_every_prime_component<F: Field>(field: F, g: &Graph) -> Result<bool> {
    let ring = graph_ring(field, g)?;
    let jg = binomial_generators(&ring, g)?;
    for bits in 0u32..1 << g.n() {
        let p = prime_component(&ring, g, VertexSet::from_bits(bits))?;
        let gb = buchberger(&ring, &p.gens, MonomialOrder::Lex);
        if !contains_all(&ring, &gb, &jg) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `J_G` against its cut-point primes: equality of ideals for
/// `n <= MAX_EQUALITY_N`, containment in each prime up to `MAX_CONTAINMENT_N`.
pub fn verify_prime_decomposition<F: Field>(field: F, g: &Graph) -> Result<bool> {
    if g.n() > MAX_CONTAINMENT_N {
        return Err(Error::ScaleGuard(format!(
            "prime decomposition checks need n <= {MAX_CONTAINMENT_N}, got {}",
            g.n()
        )));
    }
    let sets = cut_point_sets(g)?;
    let ring = graph_ring(field, g)?;
    let jg = binomial_generators(&ring, g)?;
    let primes = sets
        .iter()
        .map(|&s| prime_component(&ring, g, s).map(|p| p.gens))
        .collect::<Result<Vec<_>>>()?;
    if g.n() <= MAX_EQUALITY_N {
        let meet = intersect_all(&ring, &primes)?;
        return Ok(ideal_equal(&ring, &jg, &meet));
    }
    Ok(primes.iter().all(|p| {
        let gb = buchberger(&ring, p, MonomialOrder::Lex);
        jg.iter().all(|f| reduce(&ring, f, gb.gens()).is_zero())
    }))
}

fn union_of(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |a, b| a.union(*b))
}

/// A leaf order `F_1, ..., F_r` of the maximal cliques: each `F_k` meets the
/// union of `F_1..F_{k-1}` inside a single one of them. Built by repeatedly
/// removing the smallest leaf; fails for graphs without one (non-chordal).
pub fn leaf_order(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut rest = maximal_cliques(g);
    let mut removed = Vec::with_capacity(rest.len());
    while rest.len() > 1 {
        let pick = (0..rest.len()).find(|&k| {
            let others: Vec<VertexSet> = rest
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, f)| *f)
                .collect();
            let meet = rest[k].intersection(union_of(&others));
            others.iter().any(|f| meet.is_subset(*f))
        });
        let Some(k) = pick else {
            return Err(Error::InvalidArgument(
                "the clique complex has no leaf order".into(),
            ));
        };
        removed.push(rest.remove(k));
    }
    removed.extend(rest);
    removed.reverse();
    Ok(removed)
}

/// Vertices `i` lying in a maximal clique `F` with `F ∩ (other cliques) = {i}`.
pub fn leaf_cut_vertices(g: &Graph) -> Vec<usize> {
    let cliques = maximal_cliques(g);
    let mut out = VertexSet::EMPTY;
    for (k, f) in cliques.iter().enumerate() {
        let others: Vec<VertexSet> = cliques
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, c)| *c)
            .collect();
        let meet = f.intersection(union_of(&others));
        if meet.len() == 1 {
            out = out.union(meet);
        }
    }
    out.to_vec()
}

/// The split `J_G = Q1 ∩ Q2` at a vertex `i`, with `Q1` (resp. `Q2`) the
/// intersection of the cut-point primes with `i ∉ S` (resp. `i ∈ S`), and
/// the identities checked on it. `G'` is `G` with the closed neighbourhood of
/// `i` completed to a clique.
#[derive(Clone, Debug)]
pub struct QDecomposition<E> {
    pub vertex: usize,
    pub q1: Vec<Polynomial<E>>,
    pub q2: Vec<Polynomial<E>>,
    /// `Q1 ∩ Q2 = J_G`.
    pub intersection_is_jg: bool,
    /// `Q1 = J_{G'}`.
    pub q1_is_completed: bool,
    /// `Q2 = (x_i, y_i) + J_{G - i}`; `None` when `G` is a single clique.
    pub q2_is_deleted: Option<bool>,
    /// `Q1 + Q2 = (x_i, y_i) + J_{G'}`; `None` when `G` is a single clique.
    pub sum_is_completed: Option<bool>,
}

impl<E> QDecomposition<E> {
    pub fn holds(&self) -> bool {
        self.intersection_is_jg
            && self.q1_is_completed
            && self.q2_is_deleted.unwrap_or(true)
            && self.sum_is_completed.unwrap_or(true)
    }
}

/// Requires a connected chordal graph whose maximal cliques pairwise meet in
/// at most one vertex, and `i` the cut vertex of a leaf clique (any vertex
/// when `G` is complete). An empty family of primes intersects to the unit
/// ideal.
pub fn q1_q2_decomposition<F: Field>(
    field: F,
    g: &Graph,
    i: usize,
) -> Result<QDecomposition<F::Elem>> {
    if g.n() > MAX_EQUALITY_N {
        return Err(Error::ScaleGuard(format!(
            "the decomposition needs n <= {MAX_EQUALITY_N}, got {}",
            g.n()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_chordal(g) || !cliques_pairwise_intersect_at_most_one(g) {
        return Err(Error::InvalidArgument(
            "graph must be chordal with cliques meeting in at most one vertex".into(),
        ));
    }
    if i == 0 || i > g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: i,
            n: g.n(),
        });
    }
    let single_clique = maximal_cliques(g).len() == 1;
    if !single_clique && !leaf_cut_vertices(g).contains(&i) {
        return Err(Error::InvalidArgument(format!(
            "vertex {i} is not the cut vertex of a leaf clique"
        )));
    }
    let ring = graph_ring(field, g)?;
    let sets = cut_point_sets(g)?;
    let primes_with = |inside: bool| -> Result<Vec<Vec<Polynomial<F::Elem>>>> {
        sets.iter()
            .filter(|s| s.contains(i) == inside)
            .map(|&s| prime_component(&ring, g, s).map(|p| p.gens))
            .collect()
    };
    let q1 = intersect_all(&ring, &primes_with(false)?)?;
    let q2 = intersect_all(&ring, &primes_with(true)?)?;
    let jg = binomial_generators(&ring, g)?;
    let intersection_is_jg = ideal_equal(&ring, &jg, &ideal_intersection(&ring, &q1, &q2)?);

    let mut completed = g.clone();
    completed.complete_on(g.closed_neighbors(i));
    let j_completed = binomial_generators(&ring, &completed)?;
    let q1_is_completed = ideal_equal(&ring, &q1, &j_completed);

    let xy = vec![x_var(&ring, i), y_var(&ring, i)];
    let (q2_is_deleted, sum_is_completed) = if single_clique {
        (None, None)
    } else {
        let mut deleted = g.clone();
        for u in g.neighbors(i).iter() {
            deleted.remove_edge(i, u);
        }
        let q2_expected = ideal_sum(&xy, &binomial_generators(&ring, &deleted)?);
        let sum_expected = ideal_sum(&xy, &j_completed);
        (
            Some(ideal_equal(&ring, &q2, &q2_expected)),
            Some(ideal_equal(&ring, &ideal_sum(&q1, &q2), &sum_expected)),
        )
    };
    Ok(QDecomposition {
        vertex: i,
        q1,
        q2,
        intersection_is_jg,
        q1_is_completed,
        q2_is_deleted,
        sum_is_completed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PrimeField, Rationals};

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v)
    }

    fn ring(n: usize) -> PolyRing<PrimeField> {
        PolyRing::for_graph(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn generators() {
        let r = ring(2);
        let g = Graph::path(2).unwrap();
        let fs = binomial_generators(&r, &g).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(r.format(&fs[0]), "x1*y2 - x2*y1");
        let k4 = Graph::complete(4).unwrap();
        let j = binomial_edge_ideal(Rationals, &k4).unwrap();
        assert_eq!(j.gens().len(), 6);
        assert!(binomial_generators(&r, &Graph::path(3).unwrap()).is_err());
    }

    #[test]
    fn star_initial_ideal_has_a_cubic() {
        let star = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        let j = binomial_edge_ideal(PrimeField::default(), &star).unwrap();
        let init = j.initial_ideal();
        let shown: Vec<String> = init
            .gens()
            .iter()
            .map(|m| j.ring().format_monomial(m))
            .collect();
        assert_eq!(shown, ["x1*y2", "x1*y3", "x2*y1*y3"]);
    }

    #[test]
    fn ini_lex_graph_of_closed_graphs() {
        let p3 = Graph::path(3).unwrap();
        let h = ini_lex_graph(&p3).unwrap();
        assert_eq!(h.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(h.to_graph().edges(), vec![(1, 5), (2, 6)]);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            ini_lex_graph(&k3).unwrap().edges(),
            &[(1, 2), (1, 3), (2, 3)]
        );
        let star = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(ini_lex_graph(&star), Err(Error::NotClosed(1, 2, 3)));
        let j = binomial_edge_ideal(PrimeField::default(), &k3).unwrap();
        assert_eq!(j.initial_ideal(), ini_lex_graph(&k3).unwrap().edge_ideal());
    }

    #[test]
    fn cut_sets() {
        assert_eq!(
            cut_point_sets(&Graph::complete(4).unwrap()).unwrap(),
            vec![VertexSet::EMPTY]
        );
        assert_eq!(
            cut_point_sets(&Graph::path(3).unwrap()).unwrap(),
            vec![VertexSet::EMPTY, vs(&[2])]
        );
        assert_eq!(
            cut_point_sets(&Graph::path(4).unwrap()).unwrap(),
            vec![VertexSet::EMPTY, vs(&[2]), vs(&[3])]
        );
        let two = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(cut_point_sets(&two), Err(Error::Disconnected));
    }

    #[test]
    fn prime_components() {
        let r = ring(3);
        let p3 = Graph::path(3).unwrap();
        let p = prime_component(&r, &p3, VertexSet::EMPTY).unwrap();
        let shown: Vec<_> = p.gens.iter().map(|f| r.format(f)).collect();
        assert_eq!(shown, ["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"]);
        let p = prime_component(&r, &p3, vs(&[2])).unwrap();
        let shown: Vec<_> = p.gens.iter().map(|f| r.format(f)).collect();
        assert_eq!(shown, ["x2", "y2"]);
        assert_eq!(p.components, vec![vs(&[1]), vs(&[3])]);
    }

    #[test]
    fn prime_decompositions() {
        for g in [
            Graph::complete(3).unwrap(),
            Graph::path(3).unwrap(),
            Graph::cycle(4).unwrap(),
        ] {
            assert!(verify_prime_decomposition(PrimeField::default(), &g).unwrap());
            assert!(contained_in_every_prime_component(PrimeField::default(), &g).unwrap());
        }
        assert!(matches!(
            verify_prime_decomposition(PrimeField::default(), &Graph::path(7).unwrap()),
            Err(Error::ScaleGuard(_))
        ));
    }

    #[test]
    fn leaf_orders() {
        let g = Graph::from_edges(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let order = leaf_order(&g).unwrap();
        assert_eq!(order.len(), 2);
        assert_eq!(leaf_cut_vertices(&g), vec![3]);
        assert!(leaf_order(&Graph::cycle(4).unwrap()).is_err());
        assert_eq!(leaf_cut_vertices(&Graph::path(4).unwrap()), vec![2, 3]);
    }

    #[test]
    fn decomposition_at_a_leaf_cut_vertex() {
        let p3 = Graph::path(3).unwrap();
        let d = q1_q2_decomposition(PrimeField::default(), &p3, 2).unwrap();
        assert!(d.holds());
        let r = ring(3);
        let shown: Vec<_> = d.q2.iter().map(|f| r.format(f)).collect();
        assert_eq!(shown, ["x2", "y2"]);
        assert_eq!(d.q1.len(), 3);

        let k2 = Graph::path(2).unwrap();
        let d = q1_q2_decomposition(PrimeField::default(), &k2, 1).unwrap();
        assert!(d.holds());
        assert!(d.q2_is_deleted.is_none());
        assert_eq!(d.q2, vec![ring(2).one()]);

        let claw = Graph::star(3).unwrap();
        assert!(q1_q2_decomposition(Rationals, &claw, 1).unwrap().holds());
        assert!(q1_q2_decomposition(PrimeField::default(), &claw, 2).is_err());
    }
}
