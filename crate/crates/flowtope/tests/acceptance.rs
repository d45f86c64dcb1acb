//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use flowtope::catalog::*;
use flowtope::cli::is_birkhoff_translate;
use flowtope::ehrhart::{ehrhart_from_fvector, interpolate_ehrhart, EhrhartPolynomial};
use flowtope::exact_math::affine_rank;
use flowtope::graphs::{enumerate_ld, enumerate_ld_3reg, graph_isomorphic, sink_id, star, Graph};
use flowtope::polytopes::{equivalent, is_compressed, LatticePolytope};
use flowtope::quivers::{add_weights, flow_polytope, omega, tighten, Bounds, Quiver, Weight};
use flowtope::subdivision::{cell_set_p, classify_compressed};
use flowtope::toric::{binomial_moves, generated_in_degree, hilbert_consistency, initial_ideal_from_nonfaces, Binomial, Monomial};
use flowtope::triangulation::{
    certify_regular, is_unimodular, minimal_nonfaces, nonface_degrees, pulling_triangulation, subdivide_and_triangulate,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same_graphs(found: &[Graph], expected: &[Graph]) -> bool {
    found.len() == expected.len() && expected.iter().all(|g| found.iter().any(|h| graph_isomorphic(g, h)))
}

fn same_classes(found: &[LatticePolytope], names: &[&str]) -> bool {
    found.len() == names.len()
        && names.iter().all(|n| {
            let t = table_polytope(n).unwrap();
            found.iter().any(|p| equivalent(p, &t).is_some())
        })
}

fn sorted(v: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    v.iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c
        })
        .collect()
}

fn graph_enumeration() -> Outcome {
    let l1 = enumerate_ld(1, 2);
    ensure(same_graphs(&l1, &[Graph::from_pairs(&[("a", "b"), ("a", "b")]).unwrap()]), || "L1 is not the 2-cycle".into())?;
    let l3 = enumerate_ld(3, 4);
    let paper3: Vec<Graph> = graphs_dim3().into_iter().map(|(_, g)| g).collect();
    ensure(same_graphs(&l3, &paper3), || format!("L3 has {} members", l3.len()))?;
    let r4 = enumerate_ld_3reg(4);
    let paper4: Vec<Graph> = ["I", "II", "III", "IV", "V"].iter().map(|l| named_graph(4, l).unwrap()).collect();
    ensure(same_graphs(&r4, &paper4), || format!("L4 3-regular has {} members", r4.len()))?;
    Ok("|L1| = 1, |L3| = 4, |L4 3-reg| = 5".into())
}

fn classification(d: usize, expected: &[(&str, (usize, usize))]) -> Outcome {
    let classes = classify_compressed(d).map_err(|e| e.to_string())?;
    ensure(classes.len() == expected.len(), || format!("{} classes", classes.len()))?;
    for (name, shape) in expected {
        let t = table_polytope(name).unwrap();
        ensure((t.points().len(), t.facets().len()) == *shape, || format!("{name} table has shape {:?}", (t.points().len(), t.facets().len())))?;
        let hits = classes.iter().filter(|c| equivalent(&c.polytope, &t).is_some()).count();
        ensure(hits == 1, || format!("{name} matched {hits} classes"))?;
    }
    for c in &classes {
        ensure(is_compressed(&c.polytope) && c.polytope.dim() == d, || "a class is not a compressed full polytope".into())?;
    }
    Ok(format!("{} classes", classes.len()))
}

fn cell_families_match() -> Outcome {
    let fams = cell_families();
    for (d, label, names) in &fams {
        let g = named_graph(*d, label).unwrap();
        ensure(same_classes(&cell_set_p(&g), names), || format!("P(Γ_{label}) in dim {d}"))?;
    }
    Ok(format!("{} graphs", fams.len()))
}

fn triangulations_match() -> Outcome {
    let claims: Vec<_> = triangulation_claims().into_iter().chain(new_triangulation_claims()).collect();
    for c in &claims {
        let t = pulling_triangulation(&table_polytope(c.polytope).unwrap(), &c.pull);
        let nf: Vec<Vec<usize>> = minimal_nonfaces(&t).into_iter().map(|f| f.0).collect();
        ensure(sorted(t.maximal_cells()) == sorted(&c.cells), || format!("cells of {} {}", c.item, c.polytope))?;
        ensure(sorted(&nf) == sorted(&c.nonfaces), || format!("non-faces of {} {}", c.item, c.polytope))?;
    }
    Ok(format!("{} items", claims.len()))
}

fn ehrhart_rows() -> Outcome {
    let rows = ehrhart_table();
    for r in &rows {
        let p = table_polytope(r.polytope).unwrap();
        let expected = EhrhartPolynomial::from_scaled(&r.numerators, r.denominator);
        ensure(interpolate_ehrhart(&p) == expected, || format!("interpolation for {}", r.polytope))?;
        let t = pulling_triangulation(&p, &pull_order(r.polytope).unwrap_or_default());
        ensure(ehrhart_from_fvector(&t).ok() == Some(expected), || format!("f-vector route for {}", r.polytope))?;
    }
    Ok(format!("{} rows", rows.len()))
}

fn toric_verdicts() -> Outcome {
    let mut quadratic = 0;
    for name in all_classes() {
        let p = table_polytope(name).unwrap();
        let g2 = generated_in_degree(&p, 2);
        ensure(g2 == (name != "V.b(4)"), || format!("degree-2 verdict for {name}"))?;
        quadratic += g2 as usize;
        let order = if name == "V.b(4)" { vec![0] } else { pull_order(name).unwrap_or_default() };
        let ii = initial_ideal_from_nonfaces(&pulling_triangulation(&p, &order)).map_err(|e| e.to_string())?;
        let degrees: BTreeSet<usize> = ii.iter().map(Monomial::degree).collect();
        if name == "V.b(4)" {
            ensure(degrees == BTreeSet::from([3]), || format!("Birkhoff initial ideal degrees {degrees:?}"))?;
        } else {
            ensure(degrees.iter().all(|&k| k <= 2), || format!("{name} initial ideal degrees {degrees:?}"))?;
        }
    }
    let moves = binomial_moves(&table_polytope("V.b(4)").unwrap(), 3);
    ensure(moves == vec![Binomial::new(Monomial::new(vec![1, 3, 4]), Monomial::new(vec![0, 2, 5]))], || format!("{} Birkhoff moves", moves.len()))?;
    Ok(format!("{quadratic} quadratic classes, Birkhoff move {}", moves[0].to_text()))
}

/// Random acyclic quiver on at most six vertices with `χ ≤ 4`, and the
/// weight of a random nonnegative flow on it.
fn random_acyclic(rng: &mut ChaCha8Rng) -> (Quiver, Weight) {
    loop {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=n + 3);
        let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let arrows: Vec<(String, String, String)> = (0..m)
            .map(|k| {
                let i = rng.gen_range(0..n - 1);
                let j = rng.gen_range(i + 1..n);
                (format!("a{k}"), vs[i].clone(), vs[j].clone())
            })
            .collect();
        let mut theta: Weight = vs.iter().map(|v| (v.clone(), 0)).collect();
        for (_, t, h) in &arrows {
            let x = rng.gen_range(0..=2);
            *theta.get_mut(t).unwrap() -= x;
            *theta.get_mut(h).unwrap() += x;
        }
        let q = Quiver::new(vs, arrows).unwrap();
        if q.chi() <= 4 {
            return (q, theta);
        }
    }
}

/// `Γ*` for a random graph with cycle rank at most 4, sinks of weight 1 or 2
/// and the total spread over the original vertices.
fn random_star(rng: &mut ChaCha8Rng, graphs: &[Graph]) -> (Quiver, Weight) {
    let g = graphs.choose(rng).unwrap();
    let mut theta = Weight::new();
    let mut total = 0;
    for e in g.edges() {
        let s = if rng.gen_bool(0.8) { 1 } else { 2 };
        theta.insert(sink_id(&e.id), s);
        total += s;
    }
    let vs = g.vertices();
    let mut neg = vec![0i64; vs.len()];
    for _ in 0..total {
        neg[rng.gen_range(0..vs.len())] -= 1;
    }
    theta.extend(vs.iter().cloned().zip(neg));
    (star(g), theta)
}

fn tightness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..200 {
        let (q, theta) = random_acyclic(rng);
        let (t, tt) = tighten(&q, &theta).map_err(|e| format!("case {case}: {e}"))?;
        let p = flow_polytope(&t, &tt, &Bounds::default()).map_err(|e| e.to_string())?;
        ensure(p.dim() as i64 == t.chi(), || format!("case {case}: dim {} vs χ {}", p.dim(), t.chi()))?;
        ensure(p.dim() == 0 || p.facets().len() == t.arrows().len(), || format!("case {case}: {} facets, {} arrows", p.facets().len(), t.arrows().len()))?;
        let orig = flow_polytope(&q, &theta, &Bounds::default()).map_err(|e| e.to_string())?;
        ensure(equivalent(&orig, &p).is_some(), || format!("case {case}: tightening changed the polytope"))?;
    }
    Ok(())
}

fn santos_and_at_most_d(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut nonfaces = 0;
    for name in all_classes() {
        let p = table_polytope(name).unwrap();
        let mut order: Vec<usize> = (0..p.points().len()).collect();
        for _ in 0..50 {
            order.shuffle(rng);
            let t = pulling_triangulation(&p, &order);
            ensure(is_unimodular(&t), || format!("{name} pull {order:?} not unimodular"))?;
            for f in minimal_nonfaces(&t) {
                let pts: Vec<Vec<i64>> = f.0.iter().map(|&i| p.points()[i].clone()).collect();
                let independent = affine_rank(&pts).map_err(|e| e.to_string())? + 1 == pts.len();
                ensure(pts.len() <= p.dim() && independent, || format!("{name} non-face {:?}", f.0))?;
                nonfaces += 1;
            }
        }
    }
    Ok(nonfaces)
}

fn general(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let graphs: Vec<Graph> = (1..=3).flat_map(|d| enumerate_ld(d, 2 * d)).chain(graphs_dim4().into_iter().map(|(_, g)| g)).collect();
    let mut done = 0;
    while done < 50 {
        let (q, theta) = if done % 2 == 0 { random_acyclic(rng) } else { random_star(rng, &graphs) };
        let Ok(p) = flow_polytope(&q, &theta, &Bounds::default()) else { continue };
        if p.dim() > 4 {
            continue;
        }
        let mut order: Vec<usize> = (0..p.points().len()).collect();
        order.shuffle(rng);
        let t = subdivide_and_triangulate(&q, &theta, &order).map_err(|e| e.to_string())?;
        ensure(is_unimodular(&t), || format!("case {done}: not unimodular"))?;
        ensure(certify_regular(&t).is_some(), || format!("case {done}: no regularity certificate"))?;
        // The bound is max(dim, 2): a segment of length 2 has the non-face {0, 2}.
        ensure(nonface_degrees(&t).iter().all(|&k| k <= p.dim().max(2)), || format!("case {done}: non-face degree above {}", p.dim()))?;
        done += 1;
    }
    Ok(())
}

/// Whether `θ = base + ω_k` with `k ≥ 0` zero on the arrows out of the `−1`
/// side, for either choice of side.
fn translate_oracle(g: &Graph, theta: &Weight) -> bool {
    let sides: [BTreeSet<&String>; 2] = {
        let (_, base) = labeled_weight(4, "V.b").unwrap();
        let ones: BTreeSet<&String> = g.vertices().iter().filter(|v| base[*v] == -1).collect();
        let twos: BTreeSet<&String> = g.vertices().iter().filter(|v| base[*v] == -2).collect();
        [ones, twos]
    };
    (0..2).any(|s| {
        let (ones, twos) = (&sides[s], &sides[1 - s]);
        let kb: BTreeMap<&String, i64> = g.edges().iter().map(|e| (&e.id, theta[&sink_id(&e.id)] - 1)).collect();
        ones.iter().all(|v| theta[*v] == -1)
            && kb.values().all(|k| *k >= 0)
            && twos.iter().all(|w| {
                let spent: i64 = g.edges().iter().filter(|e| e.u == **w || e.v == **w).map(|e| kb[&e.id]).sum();
                theta[*w] == -2 - spent
            })
    })
}

fn biconditionals(rng: &mut ChaCha8Rng) -> Result<(usize, usize), String> {
    let g = named_graph(4, "V").unwrap();
    let q = star(&g);
    let (_, base) = labeled_weight(4, "V.b").unwrap();
    let swapped: Weight = base.iter().map(|(v, t)| (v.clone(), match t { -1 => -2, -2 => -1, t => *t })).collect();
    let vb = table_polytope("V.b(4)").unwrap();
    let (mut translates, mut equal) = (0, 0);
    for case in 0..50 {
        let theta0 = if rng.gen_bool(0.5) { &base } else { &swapped };
        let only_b = rng.gen_bool(0.5);
        let k: BTreeMap<String, i64> = q
            .arrows()
            .iter()
            .map(|a| {
                let movable = !only_b || theta0[&a.tail] == -2;
                (a.id.clone(), if movable && rng.gen_bool(0.25) { rng.gen_range(1..=2) } else { 0 })
            })
            .collect();
        let theta = add_weights(theta0, &omega(&q, &k).map_err(|e| e.to_string())?);
        let p0 = flow_polytope(&q, theta0, &Bounds::default()).map_err(|e| e.to_string())?;
        let p = flow_polytope(&q, &theta, &Bounds::default()).map_err(|e| e.to_string())?;
        let kv: Vec<i64> = q.arrows().iter().map(|a| k[&a.id]).collect();
        let above = p.points().iter().all(|x| x.iter().zip(&kv).all(|(a, b)| a >= b));
        let same = equivalent(&p0, &p).is_some();
        ensure(above == same, || format!("translated case {case}: x ≥ k {above}, equivalent {same}"))?;
        let member = translate_oracle(&g, &theta);
        ensure(member == is_birkhoff_translate(&theta), || format!("case {case}: library predicate disagrees"))?;
        let birkhoff = equivalent(&p, &vb).is_some();
        ensure(member == birkhoff, || format!("grobner case {case}: translate {member}, Birkhoff {birkhoff}"))?;
        translates += member as usize;
        equal += same as usize;
    }
    Ok((translates, equal))
}

fn hilbert() -> Result<(), String> {
    for name in all_classes() {
        let p = table_polytope(name).unwrap();
        let t = pulling_triangulation(&p, &pull_order(name).unwrap_or_default());
        ensure(hilbert_consistency(&p, &t, 4), || format!("{name}"))?;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut timings = Vec::new();
    let mut lap = |label: &str, start: Instant| timings.push(format!("{label} {:.1}s", start.elapsed().as_secs_f64()));
    let s = Instant::now();
    tightness(&mut rng).map_err(|e| format!("tightness: {e}"))?;
    lap("tightness", s);
    let s = Instant::now();
    let nf = santos_and_at_most_d(&mut rng).map_err(|e| format!("santos/at-most-d: {e}"))?;
    lap("santos", s);
    let s = Instant::now();
    general(&mut rng).map_err(|e| format!("general: {e}"))?;
    lap("general", s);
    let s = Instant::now();
    let (tr, eq) = biconditionals(&mut rng)?;
    lap("weights", s);
    let s = Instant::now();
    hilbert().map_err(|e| format!("hilbert: {e}"))?;
    lap("hilbert", s);
    Ok(format!("{nf} non-faces checked, {tr}/50 Birkhoff translates, {eq}/50 translated; {}", timings.join(", ")))
}

fn negative_control() -> Outcome {
    let p = table_polytope("nonflow").unwrap();
    ensure(is_compressed(&p) && p.dim() == 4 && p.points().len() == 7 && p.facets().len() == 9, || "shape".into())?;
    for name in CLASSES_DIM4 {
        ensure(equivalent(&p, &table_polytope(name).unwrap()).is_none(), || format!("equivalent to {name}"))?;
    }
    Ok("inequivalent to all 11 classes".into())
}

fn main() {
    let dim4: Vec<(&str, (usize, usize))> = CLASSES_DIM4.iter().map(|n| (*n, expected_shape_dim4(n).unwrap())).collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("graph enumeration", Box::new(graph_enumeration)),
        ("3-dim classification", Box::new(|| classification(3, &[("I.a(3)", (4, 4)), ("II.c(3)", (5, 5)), ("I.b(3)", (6, 8))]))),
        ("cell families", Box::new(cell_families_match)),
        ("4-dim classification", Box::new(move || classification(4, &dim4))),
        ("pulling triangulations", Box::new(triangulations_match)),
        ("Ehrhart table", Box::new(ehrhart_rows)),
        ("toric verdicts", Box::new(toric_verdicts)),
        ("property suites", Box::new(property_suites)),
        ("negative control", Box::new(negative_control)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
