//! Named verification suites shared by the command line and the acceptance
//! tests. Each suite returns one [`Check`] per case it examined.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::boolrep::{
    complex_of_matrix_on, is_minimal_lattice_rep, mat_of_flats, matrix_from_lattice_rep, mindeg_exhaustive,
    mindeg_lower_bound, BooleanMatrix, MINDEG_MAX_ROWS,
};
use crate::complex::{
    complex_from_lattice, complex_from_lattice_excluding, complexes_isomorphic, has_chain_certificate,
    LatticeRepresentation, SimplicialComplex,
};
use crate::counting::{facet_formula_corrected, facet_formula_closed};
use crate::error::{Error, Result};
use crate::gain_graph::{delta, delta_prime, group_from_matroid, GainGraph, Mode};
use crate::group::{groups_isomorphic, FiniteGroup};
use crate::lattice::build_rhodes;
use crate::models::{
    dowling_complex, ln_representation, multi_complete_graphic, powerset_representation, rhodes_complex,
    rhodes_hat_complex, rhodes_hat_representation, rhodes_hat_sum_model, rhodes_sum_model,
};
use crate::oracle;
use crate::partition::bits;
use crate::spc::{Spc, SpcSpace};
use crate::wreath::{brandt_groupoid, spc_of_subgroupoid, subgroupoid_of_spc, TrivialSubgroupoid, Wreath};

/// Suite names with the acceptance criterion each one covers.
pub const SUITES: [(&str, usize, &str); 14] = [
    ("orders", 1, "order axioms; meet and join against exhaustive bounds"),
    ("upper-bounds", 2, "necklace test against exhaustive upper-bound search"),
    ("rhodes-lattice", 3, "R_n(G) is a lattice iff n = 1 or G trivial"),
    ("wreath", 4, "L-order on monomial matrices against the Dowling order"),
    ("groupoid", 5, "SPCs and trivial subgroupoids"),
    ("rhodes-trivial", 6, "H_n(1) against U_{n,n} + graphic K_n"),
    ("rhodes", 7, "H_n(G) against U_{n,n} + graphic |G|K_n"),
    ("rhodes-lift", 8, "complex of R-hat against U_{n,n} + lift(Delta_n(G))"),
    ("facets", 9, "basis counts of lift(Delta_n(G)) and the closed formulas"),
    ("reconstruct", 10, "group recovered from 3-subset data"),
    ("matroids", 11, "matroid, Boolean representability, circuits and flats"),
    ("minimal-reps", 12, "minimal lattice representations L_n and 2^n"),
    ("mindeg", 13, "matrices from representations and minimum degree"),
    ("oracle-guards", 14, "fast paths against exhaustive searches"),
];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub suite: String,
    pub criterion: usize,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str, criterion: usize) -> Self {
        Self { schema_version: "1", suite: suite.to_string(), criterion, checks: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Restricts a suite to one `n` and/or one group; `seed` and `samples`
/// drive the randomized parts.
#[derive(Debug, Clone)]
pub struct Options {
    pub n: Option<usize>,
    pub group: Option<String>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { n: None, group: None, seed: 0x5eed, samples: 10_000 }
    }
}

pub fn run(suite: &str, opts: &Options) -> Result<Report> {
    let criterion = SUITES
        .iter()
        .find(|(name, _, _)| *name == suite)
        .map(|&(_, c, _)| c)
        .ok_or_else(|| Error::UnknownSuite(suite.to_string()))?;
    let mut r = Report::new(suite, criterion);
    match criterion {
        1 => orders(&mut r, opts)?,
        2 => upper_bounds(&mut r, opts)?,
        3 => rhodes_lattice(&mut r, opts)?,
        4 => wreath(&mut r, opts)?,
        5 => groupoid(&mut r, opts)?,
        6 => rhodes_trivial(&mut r, opts)?,
        7 => rhodes(&mut r, opts)?,
        8 => rhodes_lift(&mut r, opts)?,
        9 => facets(&mut r, opts)?,
        10 => reconstruct(&mut r, opts)?,
        11 => matroids(&mut r, opts)?,
        12 => minimal_reps(&mut r, opts)?,
        13 => mindeg(&mut r, opts)?,
        _ => oracle_guards(&mut r, opts)?,
    }
    Ok(r)
}

fn small_groups() -> Vec<(String, FiniteGroup)> {
    ["1", "Z2", "Z3"].iter().map(|s| (s.to_string(), FiniteGroup::from_spec(s).expect("known spec"))).collect()
}

/// `(n, group)` pairs for a suite, narrowed by the options.
fn cases(
    opts: &Options,
    ns: std::ops::RangeInclusive<usize>,
    groups: Vec<(String, FiniteGroup)>,
) -> Result<Vec<(usize, String, FiniteGroup)>> {
    let ns: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => ns.collect(),
    };
    let groups = match &opts.group {
        Some(spec) => vec![(spec.clone(), FiniteGroup::from_spec(spec)?)],
        None => groups,
    };
    Ok(ns.iter().flat_map(|&n| groups.iter().map(move |(s, g)| (n, s.clone(), g.clone()))).collect())
}

fn orders(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=3, small_groups())? {
        let space = SpcSpace::new(n, g)?;
        let all = space.enumerate()?;
        let tag = format!("n={n} G={name}");
        let rp = oracle::is_partial_order(&all, |a, b| space.rhodes_leq(a, b).unwrap());
        r.push(format!("rhodes order {tag}"), rp, format!("{} SPCs", all.len()));
        let dp = oracle::is_partial_order(&all, |a, b| space.dowling_leq(a, b).unwrap());
        r.push(format!("dowling order {tag}"), dp, format!("{} SPCs", all.len()));
        let (mut meet_bad, mut join_bad, mut joins) = (0, 0, 0);
        for a in &all {
            for b in &all {
                if Some(space.rhodes_meet(a, b)?) != oracle::rhodes_glb(&space, &all, a, b) {
                    meet_bad += 1;
                }
                let j = space.rhodes_join(a, b)?;
                joins += j.is_some() as usize;
                if j != oracle::rhodes_lub(&space, &all, a, b) {
                    join_bad += 1;
                }
            }
        }
        let pairs = all.len() * all.len();
        r.push(format!("meet is glb {tag}"), meet_bad == 0, format!("{meet_bad} of {pairs} pairs disagree"));
        r.push(
            format!("join is lub {tag}"),
            join_bad == 0,
            format!("{join_bad} of {pairs} pairs disagree, {joins} joins defined"),
        );
    }
    Ok(())
}

fn upper_bounds(r: &mut Report, opts: &Options) -> Result<()> {
    let check = |space: &SpcSpace, all: &[Spc], a: &Spc, b: &Spc| -> Result<bool> {
        let fast = space.has_common_upper_bound(a, b)?;
        Ok(fast == oracle::rhodes_upper_bound_exists(space, all, a, b) && fast == space.rhodes_join(a, b)?.is_some())
    };
    let random_case = opts.group.is_none() && opts.n.is_none_or(|n| n == 4);
    if opts.n.is_none_or(|n| n <= 3) {
        for (n, name, g) in cases(opts, 1..=3, small_groups())? {
            let space = SpcSpace::new(n, g)?;
            let all = space.enumerate()?;
            let mut bad = 0;
            for a in &all {
                for b in &all {
                    bad += !check(&space, &all, a, b)? as usize;
                }
            }
            r.push(
                format!("all pairs n={n} G={name}"),
                bad == 0,
                format!("{bad} of {} pairs disagree", all.len() * all.len()),
            );
        }
    }
    if random_case {
        let space = SpcSpace::new(4, FiniteGroup::cyclic(2)?)?;
        let all = space.enumerate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let (mut bad, mut bounded) = (0, 0);
        for _ in 0..opts.samples {
            let a = all.choose(&mut rng).expect("nonempty");
            let b = all.choose(&mut rng).expect("nonempty");
            bad += !check(&space, &all, a, b)? as usize;
            bounded += space.has_common_upper_bound(a, b)? as usize;
        }
        r.push(
            "random pairs n=4 G=Z2",
            bad == 0,
            format!("{bad} of {} pairs disagree, {bounded} bounded, seed {}", opts.samples, opts.seed),
        );
    }
    Ok(())
}

fn rhodes_lattice(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=3, small_groups())? {
        let expected = n == 1 || g.is_trivial();
        let rp = build_rhodes(n, &g)?;
        let detail = match rp.witness {
            Some((a, b)) => format!("no join for {} and {}", rp.poset.label(a), rp.poset.label(b)),
            None => format!("lattice on {} SPCs", rp.spcs.len()),
        };
        r.push(format!("n={n} G={name}"), rp.is_lattice == expected, detail);
    }
    Ok(())
}

fn wreath(r: &mut Report, opts: &Options) -> Result<()> {
    let z2 = vec![("Z2".to_string(), FiniteGroup::cyclic(2)?)];
    let mut todo = cases(opts, 2..=3, z2)?;
    if opts.n.is_none() && opts.group.is_some() {
        todo.retain(|c| c.0 == 2);
    }
    for (n, name, g) in todo {
        let w = Wreath::new(SpcSpace::new(n, g)?);
        if n <= 2 {
            wreath_exhaustive(r, &w, &format!("n={n} G={name}"))?;
        } else {
            wreath_sampled(r, &w, &format!("n={n} G={name}"), opts)?;
        }
    }
    Ok(())
}

fn wreath_exhaustive(r: &mut Report, w: &Wreath, tag: &str) -> Result<()> {
    let mats = w.enumerate_matrices()?;
    let spcs: Vec<Spc> = mats.iter().map(|m| w.spc_of_matrix(m)).collect::<std::result::Result<_, _>>()?;
    let mut classes = spcs.clone();
    classes.sort();
    classes.dedup();
    let mut all = w.space().enumerate()?;
    all.sort();
    r.push(
        format!("surjective {tag}"),
        classes == all,
        format!("{} matrices, {} L-classes, {} SPCs", mats.len(), classes.len(), all.len()),
    );
    let mut bad = 0;
    for (c, sc) in mats.iter().zip(&spcs) {
        for (a, sa) in mats.iter().zip(&spcs) {
            bad += (w.l_below(c, a)? != w.space().dowling_leq(sa, sc)?) as usize;
        }
    }
    r.push(
        format!("anti-isomorphism {tag}"),
        bad == 0,
        format!("{bad} of {} ordered pairs disagree", mats.len() * mats.len()),
    );
    let units = w.units()?;
    let mut bad = 0;
    for u in &units {
        let act: Vec<Spc> =
            mats.iter().map(|m| w.spc_of_matrix(&w.multiply(m, u)?)).collect::<std::result::Result<_, _>>()?;
        for i in 0..mats.len() {
            for j in 0..mats.len() {
                bad += (spcs[i] == spcs[j] && act[i] != act[j]) as usize;
                bad += (w.space().dowling_leq(&spcs[i], &spcs[j])? != w.space().dowling_leq(&act[i], &act[j])?) as usize;
            }
        }
    }
    r.push(format!("unit action {tag}"), bad == 0, format!("{} units, {bad} violations", units.len()));
    Ok(())
}

fn wreath_sampled(r: &mut Report, w: &Wreath, tag: &str, opts: &Options) -> Result<()> {
    let mats = w.enumerate_matrices()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut bad, mut below) = (0, 0);
    for _ in 0..opts.samples {
        let a = mats.choose(&mut rng).expect("nonempty");
        let c = mats.choose(&mut rng).expect("nonempty");
        // half the pairs are c = b a, which are always related
        let c = if rng.gen_bool(0.5) { w.multiply(c, a)? } else { c.clone() };
        let lb = w.l_below(&c, a)?;
        below += lb as usize;
        bad += (lb != w.space().dowling_leq(&w.spc_of_matrix(a)?, &w.spc_of_matrix(&c)?)?) as usize;
    }
    r.push(
        format!("sampled anti-isomorphism {tag}"),
        bad == 0,
        format!("{bad} of {} pairs disagree, {below} related, seed {}", opts.samples, opts.seed),
    );
    Ok(())
}

fn groupoid(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=3, small_groups())? {
        let space = SpcSpace::new(n, g.clone())?;
        let all = space.enumerate()?;
        let gs: Vec<TrivialSubgroupoid> = all.iter().map(|s| subgroupoid_of_spc(&space, s)).collect();
        let mut bad = 0;
        for (s, t) in all.iter().zip(&gs) {
            bad += (spc_of_subgroupoid(&space, t)? != *s) as usize;
            bad += TrivialSubgroupoid::new(&g, n, &t.morphisms()).is_err() as usize;
        }
        r.push(format!("round trip n={n} G={name}"), bad == 0, format!("{bad} failures over {} SPCs", all.len()));
        let mut bad = 0;
        for (a, ta) in all.iter().zip(&gs) {
            for (b, tb) in all.iter().zip(&gs) {
                bad += (space.rhodes_leq(a, b)? != ta.is_subgroupoid_of(tb)) as usize;
            }
        }
        r.push(format!("order n={n} G={name}"), bad == 0, format!("{bad} pairs disagree"));
        let morphisms: Vec<_> = brandt_groupoid(n, &g).collect();
        if morphisms.len() <= 18 {
            let mut found = Vec::new();
            for mask in 0u32..1 << morphisms.len() {
                let pick: Vec<_> = bits(mask).map(|k| morphisms[k]).collect();
                if let Ok(t) = TrivialSubgroupoid::new(&g, n, &pick) {
                    found.push(spc_of_subgroupoid(&space, &t)?);
                }
            }
            found.sort();
            let mut sorted = all.clone();
            sorted.sort();
            r.push(
                format!("every trivial subgroupoid n={n} G={name}"),
                found == sorted,
                format!("{} subgroupoids, {} SPCs", found.len(), all.len()),
            );
        }
    }
    Ok(())
}

fn iso_check(r: &mut Report, name: String, a: &SimplicialComplex, b: &SimplicialComplex) -> Result<()> {
    let found = complexes_isomorphic(a, b)?.is_some();
    r.push(name, found, format!("ground {}, rank {} vs {}, f {:?}", a.ground_size(), a.rank(), b.rank(), a.f_vector()));
    Ok(())
}

fn rhodes_trivial(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=4, vec![("1".into(), FiniteGroup::trivial())])? {
        let h = rhodes_complex(n, &g)?;
        let model = SimplicialComplex::uniform(n, n)?.prefixed("U.").direct_sum(&multi_complete_graphic(n, 1)?.prefixed("K."))?;
        iso_check(r, format!("n={n} G={name}"), &h, &model)?;
    }
    Ok(())
}

fn rhodes(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=3, small_groups())? {
        iso_check(r, format!("n={n} G={name}"), &rhodes_complex(n, &g)?, &rhodes_sum_model(n, &g)?)?;
    }
    Ok(())
}

fn rhodes_lift(r: &mut Report, opts: &Options) -> Result<()> {
    for (n, name, g) in cases(opts, 1..=3, small_groups())? {
        let h = rhodes_hat_complex(n, &g)?;
        iso_check(r, format!("n={n} G={name}"), &h, &rhodes_hat_sum_model(n, &g)?)?;
        let expected = if n > 1 && !g.is_trivial() { 2 * n } else { 2 * n - 1 };
        r.push(format!("rank n={n} G={name}"), h.rank() == expected, format!("rank {}, expected {expected}", h.rank()));
        if n > 1 {
            let c_part: u32 = ((1u32 << h.ground_size()) - 1) & !((1u32 << n) - 1);
            let restricted = h.restriction(c_part)?;
            let lift = delta(n, &g)?.lift_matroid()?;
            let same = (0..1u32 << lift.ground_size()).all(|x| restricted.is_independent(x) == lift.is_independent(x));
            r.push(format!("restriction to C_n n={n} G={name}"), same, format!("{} edges", lift.ground_size()));
        }
    }
    Ok(())
}

/// Facet count of `Ĥ_n(G)` and lift bases by brute force, with both formulas.
pub fn facet_report(n: usize, g: &FiniteGroup) -> Result<(usize, usize, String, String)> {
    let gg = delta(n, g)?;
    let oracle_count = oracle::basis_count(&gg, Mode::Lift);
    let facets = rhodes_hat_complex(n, g)?.facets().len();
    let q = g.order() as u64;
    let closed = facet_formula_closed(n as u64, q);
    let corrected = facet_formula_corrected(n as u64, q);
    Ok((oracle_count, facets, closed.to_string(), corrected.to_string()))
}

fn facets(r: &mut Report, opts: &Options) -> Result<()> {
    let expected = [(2usize, 2usize, 1usize), (2, 3, 3), (3, 2, 16)];
    for (n, q, want) in expected {
        if opts.n.is_some_and(|m| m != n) {
            continue;
        }
        let g = FiniteGroup::cyclic(q)?;
        if let Some(spec) = &opts.group {
            if groups_isomorphic(&FiniteGroup::from_spec(spec)?, &g)?.is_none() {
                continue;
            }
        }
        let (oracle_count, facets, closed, corrected) = facet_report(n, &g)?;
        r.push(
            format!("n={n} G=Z{q}"),
            oracle_count == want && facets == want && corrected == want.to_string(),
            format!("oracle {oracle_count}, facets {facets}, closed formula {closed}, corrected formula {corrected}"),
        );
    }
    Ok(())
}

fn reconstruct(r: &mut Report, opts: &Options) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut outputs = Vec::new();
    for spec in ["Z4", "V4", "Z5"] {
        if opts.group.as_deref().is_some_and(|s| s != spec) {
            continue;
        }
        let g = FiniteGroup::from_spec(spec)?;
        let h = if g.order() <= 4 {
            let hh = rhodes_hat_complex(3, &g)?;
            hh.restriction(((1u32 << hh.ground_size()) - 1) & !0b111)?
        } else {
            delta(3, &g)?.lift_matroid()?
        };
        let mut perm: Vec<usize> = (0..h.ground_size()).collect();
        perm.shuffle(&mut rng);
        let shuffled = h.permuted(&perm);
        let rec = group_from_matroid(&shuffled)?;
        let ok = groups_isomorphic(&rec, &g)?.is_some();
        r.push(format!("G={spec}"), ok, format!("recovered group of order {} with order profile {:?}", rec.order(), rec.order_profile()));
        outputs.push((spec, rec));
    }
    if let [(_, z4), (_, v4), ..] = outputs.as_slice() {
        r.push("Z4 and V4 data differ", groups_isomorphic(z4, v4)?.is_none(), "reconstructions are not isomorphic");
    }
    Ok(())
}

/// Gain graphs exercised by the matroid checks.
pub fn gain_graph_corpus(seed: u64) -> Result<Vec<(String, GainGraph)>> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        for n in 2..=3 {
            out.push((format!("delta({n},{name})"), delta(n, &g)?));
            if !g.is_trivial() {
                out.push((format!("delta'({n},{name})"), delta_prime(n, &g)?));
            }
        }
    }
    out.push(("delta(4,1)".into(), delta(4, &FiniteGroup::trivial())?));
    out.push(("delta(4,Z2)".into(), delta(4, &FiniteGroup::cyclic(2)?)?));
    let z3 = FiniteGroup::cyclic(3)?;
    let hand: [(&str, usize, &[(usize, usize, usize)]); 5] = [
        ("balanced triangle", 3, &[(0, 1, 0), (1, 2, 0), (0, 2, 0)]),
        ("unbalanced theta", 2, &[(0, 1, 0), (0, 1, 1), (0, 1, 2)]),
        ("tight handcuff", 3, &[(0, 1, 0), (0, 1, 1), (0, 2, 0), (0, 2, 1)]),
        ("loose handcuff", 4, &[(0, 1, 0), (0, 1, 1), (1, 2, 0), (2, 3, 0), (2, 3, 2)]),
        ("loops and digon", 3, &[(0, 0, 1), (1, 1, 0), (0, 1, 0), (0, 1, 2), (1, 2, 1)]),
    ];
    for (name, v, edges) in hand {
        let mut gg = GainGraph::new(v, z3.clone())?;
        for &(a, b, x) in edges {
            gg.add_edge(a, b, x)?;
        }
        out.push((name.to_string(), gg));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..8 {
        let g = if k % 2 == 0 { FiniteGroup::cyclic(2)? } else { z3.clone() };
        let v = rng.gen_range(3..=5);
        let mut gg = GainGraph::new(v, g.clone())?;
        for _ in 0..rng.gen_range(5..=10) {
            let a = rng.gen_range(0..v);
            let b = if rng.gen_bool(0.1) { a } else { rng.gen_range(0..v) };
            gg.add_edge(a, b, rng.gen_range(0..g.order()))?;
        }
        out.push((format!("random #{k}"), gg));
    }
    Ok(out)
}

/// Complexes built from the lattices, their models and the gain graphs.
pub fn complex_corpus(seed: u64) -> Result<Vec<(String, SimplicialComplex)>> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        for n in 1..=3 {
            out.push((format!("H_{n}({name})"), rhodes_complex(n, &g)?));
            out.push((format!("Hhat_{n}({name})"), rhodes_hat_complex(n, &g)?));
            out.push((format!("M_{n}({name})"), dowling_complex(n, &g)?));
            out.push((format!("sum model H_{n}({name})"), rhodes_sum_model(n, &g)?));
            out.push((format!("sum model Hhat_{n}({name})"), rhodes_hat_sum_model(n, &g)?));
        }
    }
    out.push(("H_4(1)".into(), rhodes_complex(4, &FiniteGroup::trivial())?));
    for (k, m) in [(2, 3), (2, 4), (3, 5)] {
        out.push((format!("U_{{{k},{m}}}"), SimplicialComplex::uniform(k, m)?));
    }
    for (name, gg) in gain_graph_corpus(seed)? {
        out.push((format!("frame {name}"), gg.frame_matroid()?));
        out.push((format!("lift {name}"), gg.lift_matroid()?));
    }
    Ok(out)
}

fn matroids(r: &mut Report, opts: &Options) -> Result<()> {
    let mut bad = Vec::new();
    let corpus = complex_corpus(opts.seed)?;
    for (name, h) in &corpus {
        if !h.is_matroid() || !h.is_boolean_representable()? {
            bad.push(name.clone());
        }
    }
    r.push("matroid and Boolean representable", bad.is_empty(), format!("{} complexes, failing: {bad:?}", corpus.len()));
    let graphs = gain_graph_corpus(opts.seed)?;
    let (mut circuits, mut unclassified, mut flat_bad) = (0, Vec::new(), Vec::new());
    for (name, gg) in &graphs {
        for mode in [Mode::Frame, Mode::Lift] {
            let h = if mode == Mode::Frame { gg.frame_matroid()? } else { gg.lift_matroid()? };
            for c in h.circuits() {
                circuits += 1;
                if gg.classify_circuit(c, mode).is_err() {
                    unclassified.push(format!("{name} {mode:?} {}", h.format_set(c)));
                }
            }
            if gg.edges().len() <= 10 {
                let table = h.flat_table()?;
                for x in 0..1u32 << gg.edges().len() {
                    let fast = if mode == Mode::Frame { gg.frame_flat(x)? } else { gg.lift_flat(x)? };
                    if fast != table[x as usize] {
                        flat_bad.push(format!("{name} {mode:?} {}", h.format_set(x)));
                    }
                }
            }
        }
    }
    r.push(
        "every circuit classified",
        unclassified.is_empty(),
        format!("{circuits} circuits over {} graphs, unclassified: {unclassified:?}", graphs.len()),
    );
    r.push("flat predicates match generic flats", flat_bad.is_empty(), format!("mismatches: {:?}", &flat_bad[..flat_bad.len().min(5)]));
    Ok(())
}

fn minimal_reps(r: &mut Report, opts: &Options) -> Result<()> {
    let ns: Vec<usize> = opts.n.map_or((2..=4).collect(), |n| vec![n]);
    let groups = match &opts.group {
        Some(spec) => vec![(spec.clone(), FiniteGroup::from_spec(spec)?)],
        None => small_groups(),
    };
    for &n in &ns {
        for (name, g) in &groups {
            let rep = ln_representation(n, g)?;
            r.push(format!("L_{n} minimal G={name}"), is_minimal_lattice_rep(&rep)?, format!("{} elements", rep.lattice.len()));
            if n <= 3 {
                let same = complex_from_lattice(&rep)? == rhodes_complex(n, g)?;
                r.push(format!("L_{n} represents H_{n}({name})"), same, format!("ground {}", rep.ground.len()));
            }
        }
        let rep = powerset_representation(n)?;
        r.push(format!("2^{n} minimal"), is_minimal_lattice_rep(&rep)?, format!("{} elements", rep.lattice.len()));
    }
    let ns: Vec<usize> = opts.n.map_or((2..=4).collect(), |n| vec![n]);
    for n in ns {
        let rep = powerset_representation(n)?;
        let h = complex_from_lattice(&rep)?;
        let k = multi_complete_graphic(n + 1, 1)?;
        let same = (0..1u32 << h.ground_size()).all(|x| h.is_independent(x) == k.is_independent(x));
        r.push(format!("2^{n} represents graphic K_{}", n + 1), same, format!("{} edges", h.ground_size()));
    }
    Ok(())
}

/// Lattice representations exercised by the matrix and certificate checks.
pub fn representation_corpus(seed: u64, max_ground: usize) -> Result<Vec<(String, LatticeRepresentation, Option<usize>)>> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        for n in 2..=3 {
            out.push((format!("L_{n}({name})"), ln_representation(n, &g)?, None));
            let (rep, top, _) = rhodes_hat_representation(n, &g)?;
            out.push((format!("Rhat_{n}({name}) without T"), rep.clone(), top));
            out.push((format!("Rhat_{n}({name})"), rep, None));
        }
    }
    for n in 2..=4 {
        out.push((format!("2^{n}"), powerset_representation(n)?, None));
    }
    for (name, h) in complex_corpus(seed)? {
        // a loop would have to map to the bottom
        if h.ground_size() <= max_ground && h.loops() == 0 {
            out.push((format!("flats of {name}"), h.flat_representation()?, None));
        }
    }
    out.retain(|(_, rep, _)| rep.ground.len() <= max_ground);
    Ok(out)
}

fn mindeg(r: &mut Report, opts: &Options) -> Result<()> {
    if opts.n.is_none() {
        let mut bad = Vec::new();
        let reps = representation_corpus(opts.seed, 16)?;
        for (name, rep, excluded) in &reps {
            if excluded.is_some() {
                continue;
            }
            let m = matrix_from_lattice_rep(rep)?;
            if complex_of_matrix_on(&m, rep.ground.clone())? != complex_from_lattice(rep)? {
                bad.push(name.clone());
            }
        }
        r.push("matrix reproduces represented complex", bad.is_empty(), format!("{} representations, failing: {bad:?}", reps.len()));
        let mut bad = Vec::new();
        let corpus = complex_corpus(opts.seed)?;
        for (name, h) in &corpus {
            if complex_of_matrix_on(&mat_of_flats(h)?, h.ground().to_vec())? != *h {
                bad.push(name.clone());
            }
        }
        r.push("matrix of flats reproduces complex", bad.is_empty(), format!("{} complexes, failing: {bad:?}", corpus.len()));
    }
    let ns: Vec<usize> = opts.n.map_or((2..=4).collect(), |n| vec![n]);
    let one = FiniteGroup::trivial();
    for n in ns {
        let h = rhodes_complex(n, &one)?;
        let witness = matrix_from_lattice_rep(&ln_representation(n, &one)?)?;
        let reproduces = complex_of_matrix_on(&witness, h.ground().to_vec())? == h;
        let lower = mindeg_lower_bound(&h);
        r.push(
            format!("mindeg H_{n}(1) = {}", 2 * n - 1),
            reproduces && lower == 2 * n - 1 && witness.rows() == 2 * n - 1,
            format!("rank bound {lower}, witness with {} rows", witness.rows()),
        );
        let m = dowling_complex(n, &one)?;
        let rep = powerset_representation(n)?;
        let witness = matrix_from_lattice_rep(&rep)?;
        let lower = mindeg_lower_bound(&m);
        let graphic = complex_of_matrix_on(&witness, rep.ground.clone())?;
        let iso = complexes_isomorphic(&graphic, &m)?.is_some();
        r.push(
            format!("mindeg M_{n}(1) = {n}"),
            iso && lower == n && witness.rows() == n,
            format!("rank bound {lower}, witness with {} rows", witness.rows()),
        );
    }
    if opts.n.is_none() {
        let u = SimplicialComplex::uniform(2, 3)?;
        let found = mindeg_exhaustive(&u, MINDEG_MAX_ROWS)?;
        let rows = found.as_ref().map(BooleanMatrix::rows);
        r.push("mindeg U_{2,3} = 2", rows == Some(2), format!("exhaustive search found {rows:?} rows"));
    }
    Ok(())
}

fn oracle_guards(r: &mut Report, opts: &Options) -> Result<()> {
    let (mut sets, mut bad) = (0usize, Vec::new());
    for (name, rep, excluded) in representation_corpus(opts.seed, 12)? {
        let table = complex_from_lattice_excluding(&rep, excluded)?;
        for x in 0..1u32 << rep.ground.len() {
            if x.count_ones() > 8 {
                continue;
            }
            sets += 1;
            let greedy = has_chain_certificate(&rep, excluded, x);
            let search = oracle::chain_certificate_by_permutation(&rep, excluded, x);
            if greedy != search || table.is_independent(x) != search {
                bad.push(format!("{name} {}", table.format_set(x)));
            }
        }
    }
    r.push("chain certificate", bad.is_empty(), format!("{sets} sets, disagreements: {:?}", &bad[..bad.len().min(5)]));

    let mut mats: Vec<(String, BooleanMatrix)> = Vec::new();
    for (name, rep, excluded) in representation_corpus(opts.seed, 8)? {
        if excluded.is_none() {
            mats.push((name, matrix_from_lattice_rep(&rep)?));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for k in 0..40 {
        let cols = rng.gen_range(2..=7);
        let rows = (0..rng.gen_range(1..=6)).map(|_| rng.gen_range(0..1u32 << cols)).collect();
        mats.push((format!("random #{k}"), BooleanMatrix::new(cols, rows)?));
    }
    let (mut sets, mut bad) = (0usize, Vec::new());
    for (name, m) in &mats {
        for w in 0..1u32 << m.cols() {
            if w.count_ones() > 6 {
                continue;
            }
            sets += 1;
            if m.has_unitriangular_witness(w) != oracle::unitriangular_by_search(m, w) {
                bad.push(format!("{name} {w:#b}"));
            }
        }
    }
    r.push("unitriangular witness", bad.is_empty(), format!("{} matrices, {sets} column sets, disagreements: {bad:?}", mats.len()));

    let (mut pairs, mut bad) = (0usize, 0usize);
    for n in 1..=2 {
        for (_, g) in small_groups() {
            let w = Wreath::new(SpcSpace::new(n, g)?);
            let mats = w.enumerate_matrices()?;
            for c in &mats {
                for a in &mats {
                    pairs += 1;
                    bad += (w.l_below(c, a)? != oracle::l_below_by_search(&w, c, a)) as usize;
                }
            }
        }
    }
    r.push("l_below", bad == 0, format!("{bad} of {pairs} pairs disagree"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(run("nope", &Options::default()).unwrap_err(), Error::UnknownSuite("nope".into()));
    }

    #[test]
    fn narrowed_suite() {
        let opts = Options { n: Some(2), group: Some("Z2".into()), ..Options::default() };
        let r = run("rhodes-lattice", &opts).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert!(r.passed());
    }
}
