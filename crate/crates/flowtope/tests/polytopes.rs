use std::collections::BTreeSet;

use flowtope::catalog::{all_classes, labeled_weight, table_polytope};
use flowtope::ehrhart::interpolate_ehrhart;
use flowtope::exact_math::{affine_rank, rat};
use flowtope::graphs::star;
use flowtope::polytopes::*;
use flowtope::quivers::{flow_polytope, tighten, Bounds, Quiver, Weight};
use flowtope::triangulation::{is_unimodular, pulling_triangulation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(points: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::from_points(points[0].len(), points.iter().map(|p| p.to_vec()).collect()).unwrap()
}

fn cube(d: usize) -> LatticePolytope {
    let pts = (0..1u32 << d).map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect()).collect();
    LatticePolytope::from_points(d, pts).unwrap()
}

fn simplex(d: usize) -> LatticePolytope {
    let mut pts = vec![vec![0; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = 1;
        pts.push(e);
    }
    LatticePolytope::from_points(d, pts).unwrap()
}

fn facet_sets(p: &LatticePolytope) -> BTreeSet<Vec<usize>> {
    p.facet_point_sets().iter().cloned().collect()
}

/// Compressed exactly when every pulling triangulation is unimodular; a
/// sample of orders stands in for "every".
fn pulling_sample_unimodular(p: &LatticePolytope, orders: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..p.points().len()).collect();
    (0..orders).all(|_| {
        order.shuffle(&mut rng);
        is_unimodular(&pulling_triangulation(p, &order))
    })
}

fn tight_pair(dim: usize, label: &str) -> (Quiver, Weight) {
    let (g, theta) = labeled_weight(dim, label).unwrap();
    tighten(&star(&g), &theta).unwrap()
}

#[test]
fn facet_counts() {
    assert_eq!(cube(2).facets().len(), 4);
    for d in 1..=5 {
        assert_eq!(simplex(d).facets().len(), d + 1);
    }
    assert_eq!(table_polytope("I.a(4)").unwrap().facets().len(), 7);
    assert_eq!(table_polytope("V.b(4)").unwrap().facets().len(), 9);
    let f = facet_sets(&table_polytope("II.f(4)").unwrap());
    let expected: BTreeSet<Vec<usize>> =
        [&[0, 3, 4, 5, 6][..], &[0, 1, 2, 5, 6], &[0, 1, 2, 3, 4], &[0, 1, 3, 5], &[1, 2, 3, 4, 5, 6], &[0, 2, 4, 6]]
            .iter()
            .map(|s| s.to_vec())
            .collect();
    assert_eq!(f, expected);
}

#[test]
fn nonflow_facet_system() {
    let p = table_polytope("nonflow").unwrap();
    // Coordinates (x, y, z, w); every inequality as normal · v ≥ offset.
    let listed: BTreeSet<Facet> = [
        ([0, 0, 0, 1], 0),
        ([1, 0, 0, 0], 0),
        ([0, -1, 0, 0], -1),
        ([0, 0, -1, 0], -1),
        ([-1, 1, 1, -2], 0),
        ([1, -1, -1, 1], -1),
        ([-1, 0, 0, -1], -1),
        ([0, 1, 0, -1], 0),
        ([0, 0, 1, -1], 0),
    ]
    .iter()
    .map(|(n, o)| Facet { normal: n.to_vec(), offset: *o })
    .collect();
    assert_eq!(p.facets().iter().cloned().collect::<BTreeSet<_>>(), listed);
    let sets: BTreeSet<Vec<usize>> = [
        &[0, 1, 2, 4, 5, 6][..],
        &[0, 3, 5, 6],
        &[1, 3, 4, 5],
        &[2, 3, 4, 6],
        &[0, 1, 2, 3],
        &[3, 4, 5, 6],
        &[1, 2, 3, 4],
        &[0, 2, 3, 6],
        &[0, 1, 3, 5],
    ]
    .iter()
    .map(|s| s.to_vec())
    .collect();
    assert_eq!(facet_sets(&p), sets);
    assert!(is_compressed(&p));
    for name in all_classes() {
        assert!(equivalent(&p, &table_polytope(name).unwrap()).is_none(), "{name}");
    }
}

#[test]
fn compressed_examples() {
    for name in all_classes() {
        let p = table_polytope(name).unwrap();
        assert!(is_compressed(&p), "{name}");
        assert!(pulling_sample_unimodular(&p, 10, 7), "{name}");
    }
    let wide = poly(&[&[0], &[1], &[2]]);
    assert!(!is_compressed(&wide));
    assert!(!is_unimodular(&pulling_triangulation(&wide, &[0, 1, 2])));
    assert!(is_compressed(&cube(3)));
    let cross = poly(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[0, 0]]);
    assert!(!is_compressed(&cross));
}

#[test]
fn normalization() {
    let p = table_polytope("I.a(3)").unwrap();
    let (q, _) = normalize_full_dim(&p);
    assert_eq!(q.points(), p.normalized_points());
    assert_eq!(q.ambient_dim(), 3);
    let c = cube(3);
    assert_eq!(normalize_full_dim(&c).0.points(), c.points());

    let (g, theta) = labeled_weight(4, "V.b").unwrap();
    let raw = flow_polytope(&star(&g), &theta, &Bounds::default()).unwrap();
    assert_eq!(raw.ambient_dim(), 18);
    assert_eq!(affine_rank(raw.points()).unwrap(), 4);
    let (n, map) = normalize_full_dim(&raw);
    assert_eq!((n.dim(), n.ambient_dim(), n.points().len()), (4, 4, 6));
    assert_eq!(normalized_volume(&n), normalized_volume(&raw));
    assert_eq!(raw.points().iter().map(|x| map.apply(x)).collect::<Vec<_>>(), n.points());
}

#[test]
fn volume_matches_leading_ehrhart_coefficient() {
    for name in all_classes().into_iter().chain(["nonflow"]) {
        let p = table_polytope(name).unwrap();
        let e = interpolate_ehrhart(&p);
        let d = p.dim() as i64;
        let fact: i64 = (1..=d).product();
        assert_eq!(e.coefficients[d as usize].clone() * rat(fact, 1), rat(normalized_volume(&p) as i64, 1), "{name}");
    }
}

#[test]
fn equivalence_examples() {
    let p = table_polytope("V.b(4)").unwrap();
    let swapped = LatticePolytope::from_points(4, p.points().iter().map(|x| vec![x[2], x[0], x[3], x[1]]).collect()).unwrap();
    assert!(equivalent(&p, &swapped).is_some());
    assert!(equivalent(&table_polytope("I.a(4)").unwrap(), &p).is_none());

    let from = |label: &str| {
        let (q, t) = tight_pair(3, label);
        flow_polytope(&q, &t, &Bounds::default()).unwrap()
    };
    assert!(equivalent(&from("II.c"), &from("III.c")).is_some());
    assert!(equivalent(&from("II.c"), &table_polytope("II.c(3)").unwrap()).is_some());
}

#[test]
fn class_fingerprints() {
    let four: Vec<&str> = ["II.c(4)", "I.d(4)", "II.f(4)", "III.d(4)", "I.a(4)", "V.b(4)"].to_vec();
    let shapes: BTreeSet<(usize, usize)> = four
        .iter()
        .map(|n| {
            let p = table_polytope(n).unwrap();
            (p.facets().len(), p.points().len())
        })
        .collect();
    assert_eq!(shapes.len(), 6);

    let names: Vec<&str> = all_classes().into_iter().filter(|n| n.ends_with("(4)")).collect();
    assert_eq!(names.len(), 11);
    let polys: Vec<LatticePolytope> = names.iter().map(|n| table_polytope(n).unwrap()).collect();
    let fps: BTreeSet<Fingerprint> = polys.iter().map(fingerprint).collect();
    assert_eq!(fps.len(), 11);
    for i in 0..polys.len() {
        for j in 0..polys.len() {
            assert_eq!(equivalent(&polys[i], &polys[j]).is_some(), i == j, "{} {}", names[i], names[j]);
        }
    }
    assert_eq!(classify_indices(&polys), (0..11).collect::<Vec<_>>());
}

#[test]
fn products() {
    let seg = poly(&[&[0], &[1]]);
    assert!(equivalent(&product(&seg, &seg), &cube(2)).is_some());
    let p = product(&seg, &table_polytope("I.a(3)").unwrap());
    assert_eq!((p.dim(), p.points().len()), (4, 8));
    let wide = poly(&[&[0], &[1], &[2]]);
    let samples = [seg.clone(), wide.clone(), simplex(2), table_polytope("II.c(3)").unwrap(), poly(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[0, 0]])];
    for a in &samples {
        for b in &samples {
            assert_eq!(is_compressed(&product(a, b)), is_compressed(a) && is_compressed(b));
        }
    }
}

#[test]
fn prime_flow() {
    let (q, t) = tight_pair(3, "I.b");
    assert!(is_prime_flow(&q, &t).unwrap());
    let kron = Quiver::new(vec!["s".into(), "t".into()], vec![("a".into(), "s".into(), "t".into()), ("b".into(), "s".into(), "t".into())]).unwrap();
    let kt: Weight = [("s".to_string(), -1), ("t".to_string(), 1)].into();
    assert!(is_prime_flow(&kron, &kt).unwrap());
    // Two Kronecker blocks glued at m.
    let glued = Quiver::new(
        vec!["s".into(), "m".into(), "t".into()],
        vec![
            ("a".into(), "s".into(), "m".into()),
            ("b".into(), "s".into(), "m".into()),
            ("c".into(), "m".into(), "t".into()),
            ("d".into(), "m".into(), "t".into()),
        ],
    )
    .unwrap();
    let gt: Weight = [("s".to_string(), -1), ("m".to_string(), 0), ("t".to_string(), 1)].into();
    assert!(!is_prime_flow(&glued, &gt).unwrap());
}

/// A unimodular matrix built from elementary row operations.
fn unimodular(d: usize, ops: &[(usize, usize, i64)], swaps: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % d, j % d);
        if i != j {
            let rj = m[j].clone();
            for (a, b) in m[i].iter_mut().zip(&rj) {
                *a += c * b;
            }
        }
    }
    for &(i, j) in swaps {
        m.swap(i % d, j % d);
    }
    m
}

fn image(p: &LatticePolytope, m: &[Vec<i64>], t: &[i64]) -> LatticePolytope {
    let pts = p
        .points()
        .iter()
        .map(|x| m.iter().zip(t).map(|(row, ti)| row.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() + ti).collect())
        .collect();
    LatticePolytope::from_points(p.ambient_dim(), pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn equivalence_under_unimodular_images(
        k in 0usize..14,
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..6),
        swaps in prop::collection::vec((0usize..4, 0usize..4), 0..3),
        ops2 in prop::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..6),
        t in prop::collection::vec(-3i64..4, 4),
    ) {
        let name = all_classes()[k];
        let p = table_polytope(name).unwrap();
        let d = p.ambient_dim();
        let m = unimodular(d, &ops, &swaps);
        let q = image(&p, &m, &t[..d]);
        let r = image(&q, &unimodular(d, &ops2, &[]), &t[..d]);
        prop_assert_eq!(fingerprint(&p), fingerprint(&q));
        let f = equivalent(&p, &q);
        prop_assert!(f.is_some());
        let f = f.unwrap();
        let imgs: BTreeSet<Vec<i64>> = p.points().iter().map(|x| f.apply(x)).collect();
        prop_assert_eq!(imgs, q.points().iter().cloned().collect::<BTreeSet<_>>());
        prop_assert!(equivalent(&q, &p).is_some());
        prop_assert!(equivalent(&p, &p).is_some());
        prop_assert!(equivalent(&q, &r).is_some() && equivalent(&p, &r).is_some());
        for x in q.points() {
            prop_assert!(q.facets().iter().all(|f| f.value(x) >= 0));
        }
        for s in q.facet_point_sets() {
            let pts: Vec<Vec<i64>> = s.iter().map(|&i| q.points()[i].clone()).collect();
            prop_assert_eq!(affine_rank(&pts).unwrap(), q.dim() - 1);
        }
    }

    #[test]
    fn compressed_matches_pulling_unimodularity(pts in prop::collection::btree_set(prop::collection::vec(0i64..3, 3), 4..9), seed in any::<u64>()) {
        let pts: Vec<Vec<i64>> = pts.into_iter().collect();
        prop_assume!(affine_rank(&pts).unwrap() == 3);
        // Point sets that are not all the lattice points of their hull are rejected.
        let hull = LatticePolytope::from_points(3, pts.clone());
        prop_assume!(hull.is_ok());
        let hull = hull.unwrap();
        if is_compressed(&hull) {
            prop_assert!(pulling_sample_unimodular(&hull, 6, seed));
        }
    }

    #[test]
    fn facets_match_brute_force(cuts in prop::collection::vec((prop::array::uniform3(-1i64..=1), 0i64..4), 0..3)) {
        let pts: Vec<Vec<i64>> = (0..64)
            .map(|k| vec![k % 4, k / 4 % 4, k / 16])
            .filter(|x| cuts.iter().all(|(a, b)| a.iter().zip(x).map(|(u, v)| u * v).sum::<i64>() >= b - 3))
            .collect();
        prop_assume!(pts.len() >= 4 && affine_rank(&pts).unwrap() == 3);
        let p = LatticePolytope::from_points(3, pts.clone()).unwrap();
        // Every supporting plane through three affinely independent points.
        let mut oracle = BTreeSet::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    let u: Vec<i64> = (0..3).map(|c| pts[j][c] - pts[i][c]).collect();
                    let v: Vec<i64> = (0..3).map(|c| pts[k][c] - pts[i][c]).collect();
                    let n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
                    if n == [0, 0, 0] {
                        continue;
                    }
                    let g = n.iter().fold(0i64, |g, x| num_integer::gcd(g, *x));
                    let n: Vec<i64> = n.iter().map(|x| x / g).collect();
                    let val = |x: &Vec<i64>| n.iter().zip(x).map(|(a, b)| a * b).sum::<i64>();
                    let off = val(&pts[i]);
                    if pts.iter().all(|x| val(x) >= off) {
                        oracle.insert((n.clone(), off));
                    } else if pts.iter().all(|x| val(x) <= off) {
                        oracle.insert((n.iter().map(|x| -x).collect(), -off));
                    }
                }
            }
        }
        let found: BTreeSet<(Vec<i64>, i64)> = p.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect();
        prop_assert_eq!(found, oracle);
    }
}
