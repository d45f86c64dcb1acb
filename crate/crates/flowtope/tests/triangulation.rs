use std::collections::{BTreeMap, BTreeSet};

use flowtope::catalog::{all_classes, table_polytope};
use flowtope::ehrhart::interpolate_ehrhart;
use flowtope::exact_math::{affine_rank, rat, Rational};
use flowtope::graphs::{enumerate_ld, sink_id, star};
use flowtope::polytopes::{normalized_volume, simplex_volume, LatticePolytope};
use flowtope::quivers::{is_nonempty, Quiver, Weight};
use flowtope::subdivision::cells;
use flowtope::triangulation::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simplex(d: usize) -> LatticePolytope {
    let mut pts = vec![vec![0; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        pts.push(e);
    }
    LatticePolytope::from_points(d, pts).unwrap()
}

fn kronecker(t: i64) -> (Quiver, Weight) {
    let q = Quiver::new(vec!["s".into(), "t".into()], vec![("a1".into(), "s".into(), "t".into()), ("a2".into(), "s".into(), "t".into())]).unwrap();
    (q, [("s".to_string(), -t), ("t".to_string(), t)].into())
}

/// Solve `m x = b` over the rationals by Gaussian elimination.
fn solve(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        b.swap(c, p);
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone() / m[c][c].clone();
                for k in c..n {
                    let v = m[c][k].clone() * f.clone();
                    m[r][k] -= v;
                }
                let v = b[c].clone() * f;
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| b[i].clone() / m[i][i].clone()).collect())
}

/// The lower hull of the lifted points induces exactly the cells of `t`.
fn heights_induce(t: &Triangulation, h: &BTreeMap<usize, Rational>) -> bool {
    let p = t.polytope();
    let y = p.normalized_points();
    let d = p.dim();
    t.maximal_cells().iter().all(|cell| {
        let m: Vec<Vec<Rational>> = cell.iter().map(|&c| std::iter::once(Rational::one()).chain(y[c].iter().map(|v| rat(*v, 1))).collect()).collect();
        let b: Vec<Rational> = cell.iter().map(|c| h[c].clone()).collect();
        let Some(coef) = solve(m, b) else { return false };
        (0..y.len()).filter(|q| !cell.contains(q)).all(|q| {
            let f = coef[0].clone() + (0..d).map(|i| coef[i + 1].clone() * rat(y[q][i], 1)).fold(Rational::zero(), |a, b| a + b);
            h[&q] > f
        })
    })
}

fn nonface_sets(t: &Triangulation) -> BTreeSet<Vec<usize>> {
    minimal_nonfaces(t).into_iter().map(|f| f.0).collect()
}

/// Minimal non-faces by checking every small subset.
fn brute_nonfaces(t: &Triangulation) -> BTreeSet<Vec<usize>> {
    let n = t.polytope().points().len();
    let face = |s: &[usize]| t.maximal_cells().iter().any(|c| s.iter().all(|i| c.contains(i)));
    (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| s.len() <= t.polytope().dim() + 1 && !face(s))
        .filter(|s| {
            (0..s.len()).all(|skip| {
                let sub: Vec<usize> = s.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, v)| *v).collect();
                sub.is_empty() || face(&sub)
            })
        })
        .collect()
}

fn check_at_most_d(t: &Triangulation) {
    let p = t.polytope();
    for f in minimal_nonfaces(t) {
        assert!(f.0.len() <= p.dim());
        let pts: Vec<Vec<i64>> = f.0.iter().map(|&i| p.points()[i].clone()).collect();
        assert_eq!(affine_rank(&pts).unwrap() + 1, pts.len());
    }
}

#[test]
fn simplices_are_fixed_points() {
    for d in 1..=4 {
        let s = simplex(d);
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..=d).collect();
            order.shuffle(&mut rng);
            let t = pulling_triangulation(&s, &order);
            assert_eq!(t.maximal_cells(), &[(0..=d).collect::<Vec<_>>()]);
        }
        let t = pulling_triangulation(&s, &[]);
        let f = f_vector(&t);
        for j in 0..=d {
            let binom = (0..=j).fold(1u64, |acc, i| acc * (d as u64 + 1 - i as u64) / (i as u64 + 1));
            assert_eq!(f[j], binom);
        }
        assert!(is_unimodular(&t));
        let h = certify_regular(&t).unwrap();
        assert!(h.values().all(|v| v.is_zero()));
        assert!(nonface_sets(&t).is_empty());
    }
}

#[test]
fn small_examples() {
    let seg = LatticePolytope::from_points(1, vec![vec![0], vec![1], vec![2]]).unwrap();
    let coarse = Triangulation::new(seg.clone(), vec![vec![0, 2]]);
    assert!(!is_unimodular(&coarse));
    assert_eq!(nonface_sets(&coarse), [vec![1]].into_iter().collect());
    assert_eq!(nonface_sets(&coarse), brute_nonfaces(&coarse));
    let h = certify_regular(&coarse).unwrap();
    assert!(heights_induce(&coarse, &h));
    // Overlapping cells are not a triangulation.
    let overlap = Triangulation::new(seg.clone(), vec![vec![0, 2], vec![0, 1]]);
    assert!(certify_regular(&overlap).is_none());

    let p = table_polytope("II.c(3)").unwrap();
    let t = pulling_triangulation(&p, &[0]);
    assert_eq!(t.maximal_cells(), &[vec![0, 1, 3, 4], vec![0, 2, 3, 4]]);
    assert_eq!(f_vector(&t)[3], 2);
    assert_eq!(nonface_sets(&t), [vec![1, 2]].into_iter().collect());
    let b = table_polytope("V.b(4)").unwrap();
    let t = pulling_triangulation(&b, &[0]);
    assert_eq!(f_vector(&t)[4], 3);
    assert_eq!(nonface_sets(&t), [vec![1, 3, 4]].into_iter().collect());

    let ib = pulling_triangulation(&table_polytope("I.b(3)").unwrap(), &[0]);
    let h = certify_regular(&ib).unwrap();
    assert!(heights_induce(&ib, &h));
}

#[test]
fn glued_kronecker() {
    let (q, theta) = kronecker(2);
    let t = subdivide_and_triangulate(&q, &theta, &[]).unwrap();
    // Points (0,2), (1,1), (2,0) and two unit segments.
    assert_eq!(t.polytope().points(), &[vec![0, 2], vec![1, 1], vec![2, 0]]);
    assert_eq!(t.maximal_cells(), &[vec![0, 1], vec![1, 2]]);
    assert!(is_unimodular(&t));
    let h = certify_regular(&t).unwrap();
    assert!(heights_induce(&t, &h));
    assert_eq!(nonface_sets(&t), [vec![0, 2]].into_iter().collect());
}

#[test]
fn santos_and_at_most_d_on_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in all_classes() {
        let p = table_polytope(name).unwrap();
        let e = interpolate_ehrhart(&p);
        let d = p.dim();
        let fact: i64 = (1..=d as i64).product();
        let cells_expected = e.coefficients[d].clone() * rat(fact, 1);
        let mut order: Vec<usize> = (0..p.points().len()).collect();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            let t = pulling_triangulation(&p, &order);
            assert!(is_unimodular(&t), "{name}");
            let vol: u64 = t.maximal_cells().iter().map(|c| simplex_volume(&p, c)).sum();
            assert_eq!(vol, normalized_volume(&p));
            assert_eq!(rat(t.maximal_cells().len() as i64, 1), cells_expected);
            check_at_most_d(&t);
            assert_eq!(nonface_sets(&t), brute_nonfaces(&t), "{name}");
            // Without the pulling heights the certificate comes from the LP.
            let bare = Triangulation::new(p.clone(), t.maximal_cells().to_vec());
            let h = certify_regular(&bare).unwrap();
            assert!(heights_induce(&bare, &h), "{name}");
            assert!(heights_induce(&t, &certify_regular(&t).unwrap()), "{name}");
        }
    }
}

/// Γ* of a graph in `L_3` with random sink weights spread over the sources.
fn random_star() -> impl Strategy<Value = (Quiver, Weight)> {
    let graphs = enumerate_ld(3, 4);
    (0..graphs.len(), prop::collection::vec(1i64..3, 6), prop::collection::vec(0usize..4, 8)).prop_map(move |(i, sinks, spread)| {
        let g = graphs[i].clone();
        let mut theta = Weight::new();
        let mut total = 0;
        for (k, e) in g.edges().iter().enumerate() {
            theta.insert(sink_id(&e.id), sinks[k]);
            total += sinks[k];
        }
        let vs = g.vertices();
        let mut neg = vec![0i64; vs.len()];
        for j in 0..total as usize {
            neg[spread[j % spread.len()] % vs.len()] -= 1;
        }
        theta.extend(vs.iter().cloned().zip(neg));
        (star(&g), theta)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn glued_triangulations((q, theta) in random_star(), seed in any::<u64>()) {
        prop_assume!(is_nonempty(&q, &theta));
        let whole = flowtope::quivers::flow_polytope(&q, &theta, &Default::default()).unwrap();
        let mut order: Vec<usize> = (0..whole.points().len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let t = subdivide_and_triangulate(&q, &theta, &order).unwrap();
        prop_assert!(is_unimodular(&t));
        let vol: u64 = t.maximal_cells().iter().map(|c| simplex_volume(t.polytope(), c)).sum();
        prop_assert_eq!(vol, normalized_volume(t.polytope()));
        let h = certify_regular(&t);
        prop_assert!(h.is_some());
        prop_assert!(heights_induce(&t, &h.unwrap()));
        let d = t.polytope().dim();
        prop_assert!(d <= 3 && nonface_degrees(&t).iter().all(|&k| k <= 2));
        // Non-faces not inside a single cell of the subdivision are pairs.
        let cell_sets: Vec<BTreeSet<usize>> = cells(&q, &theta)
            .unwrap()
            .iter()
            .map(|c| c.polytope.points().iter().map(|x| t.polytope().index_of(x).unwrap()).collect())
            .collect();
        for f in minimal_nonfaces(&t) {
            if !cell_sets.iter().any(|s| f.0.iter().all(|i| s.contains(i))) {
                prop_assert_eq!(f.0.len(), 2);
            }
        }
    }
}
