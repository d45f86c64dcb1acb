//! Reference data: the named graphs and weights, point tables of the prime
//! compressed flow polytopes in dimensions 3 and 4, their pull orders,
//! triangulations, Ehrhart polynomials and standard-monomial decompositions.
//!
//! Polytope names carry their dimension, e.g. `"II.c(4)"`. Point tables list
//! one row per coordinate, so that column `i` is the point `v_i`.

use crate::graphs::{sink_id, Graph};
use crate::polytopes::LatticePolytope;
use crate::quivers::Weight;

fn graph(pairs: &[(&str, &str)]) -> Graph {
    Graph::from_pairs(pairs).expect("valid graph")
}

/// Graphs of `L_3` by label.
pub fn graphs_dim3() -> Vec<(&'static str, Graph)> {
    vec![
        ("I", graph(&[("L", "R"); 4])),
        ("II", graph(&[("A", "B"), ("A", "T"), ("A", "T"), ("T", "B"), ("T", "B")])),
        ("III", graph(&[("BL", "TL"), ("BR", "TR"), ("BL", "BR"), ("BL", "BR"), ("TL", "TR"), ("TL", "TR")])),
        ("IV", graph(&[("BL", "TL"), ("BL", "TR"), ("BL", "BR"), ("TL", "TR"), ("TL", "BR"), ("TR", "BR")])),
    ]
}

/// The graphs of `L_4` swept by the classification, by label.
pub fn graphs_dim4() -> Vec<(&'static str, Graph)> {
    vec![
        (
            "I",
            graph(&[
                ("TL", "TR"),
                ("TL", "TR"),
                ("TL", "ML"),
                ("TR", "MR"),
                ("ML", "BL"),
                ("ML", "BL"),
                ("MR", "BR"),
                ("MR", "BR"),
                ("BL", "BR"),
            ]),
        ),
        (
            "II",
            graph(&[
                ("TL", "TR"),
                ("TL", "TR"),
                ("TL", "ML"),
                ("TR", "MR"),
                ("ML", "BL"),
                ("MR", "BR"),
                ("BL", "BR"),
                ("ML", "BR"),
                ("BL", "MR"),
            ]),
        ),
        (
            "III",
            graph(&[
                ("TL", "TR"),
                ("TL", "TR"),
                ("TL", "ML"),
                ("TR", "MR"),
                ("ML", "BL"),
                ("MR", "BR"),
                ("ML", "MR"),
                ("BL", "BR"),
                ("BL", "BR"),
            ]),
        ),
        (
            "IV",
            graph(&[
                ("P", "T"),
                ("T", "U"),
                ("U", "Q"),
                ("Q", "P"),
                ("P", "R"),
                ("R", "Q"),
                ("T", "S"),
                ("S", "U"),
                ("R", "S"),
            ]),
        ),
        (
            "V",
            graph(&[
                ("b0", "t0"),
                ("b0", "t1"),
                ("b0", "t2"),
                ("b1", "t0"),
                ("b1", "t1"),
                ("b1", "t2"),
                ("b2", "t0"),
                ("b2", "t1"),
                ("b2", "t2"),
            ]),
        ),
        (
            "VI",
            graph(&[
                ("c00", "c03"),
                ("c03", "c33"),
                ("c33", "c30"),
                ("c30", "c00"),
                ("c00", "m"),
                ("c03", "m"),
                ("c30", "m"),
                ("c33", "m"),
            ]),
        ),
        ("VII", graph(&[("A", "D"), ("D", "B"), ("B", "C"), ("C", "A"), ("A", "B"), ("C", "D"), ("C", "D")])),
        ("VIII", graph(&[("A", "B"), ("A", "B"), ("B", "C"), ("B", "C"), ("A", "C"), ("A", "C")])),
        ("IX", graph(&[("L", "R"); 5])),
        ("X", graph(&[("BL", "TL"), ("BR", "TR"), ("BL", "BR"), ("BL", "BR"), ("BL", "BR"), ("TL", "TR"), ("TL", "TR")])),
    ]
}

pub fn named_graph(dim: usize, label: &str) -> Option<Graph> {
    let list = match dim {
        3 => graphs_dim3(),
        4 => graphs_dim4(),
        _ => return None,
    };
    list.into_iter().find(|(l, _)| *l == label).map(|(_, g)| g)
}

const SIX: [&str; 6] = ["TL", "TR", "MR", "BR", "BL", "ML"];

/// Labeled weights as `(label, [(vertex, θ(vertex))])` on the graph named by
/// the label's prefix.
pub fn weight_labels(dim: usize) -> Vec<(&'static str, Vec<(&'static str, i64)>)> {
    let six = |vals: [i64; 6]| SIX.iter().copied().zip(vals).collect::<Vec<_>>();
    match dim {
        3 => vec![
            ("I.a", vec![("L", -1), ("R", -3)]),
            ("I.b", vec![("L", -2), ("R", -2)]),
            ("II.a", vec![("T", -3), ("A", -1), ("B", -1)]),
            ("II.b", vec![("T", -1), ("A", -2), ("B", -2)]),
            ("II.c", vec![("T", -2), ("A", -1), ("B", -2)]),
            ("III.a", vec![("BL", -1), ("TL", -2), ("TR", -2), ("BR", -1)]),
            ("III.b", vec![("BL", -2), ("TL", -2), ("TR", -1), ("BR", -1)]),
            ("III.c", vec![("BL", -1), ("TL", -2), ("TR", -1), ("BR", -2)]),
            ("IV.a", vec![("BL", -2), ("TL", -1), ("TR", -1), ("BR", -2)]),
        ],
        4 => vec![
            ("I.a", six([-2, -1, -2, -1, -2, -1])),
            ("I.b", six([-2, -2, -2, -1, -1, -1])),
            ("I.c", six([-2, -2, -1, -2, -1, -1])),
            ("I.d", six([-2, -1, -2, -1, -1, -2])),
            ("II.a", six([-2, -2, -2, -1, -1, -1])),
            ("II.b", six([-2, -2, -1, -2, -1, -1])),
            ("II.c", six([-1, -2, -2, -2, -1, -1])),
            ("II.d", six([-1, -2, -2, -1, -1, -2])),
            ("II.e", six([-1, -2, -1, -2, -2, -1])),
            ("II.f", six([-1, -2, -1, -2, -1, -2])),
            ("II.g", six([-1, -1, -2, -2, -2, -1])),
            ("II.h", six([-1, -1, -2, -2, -1, -2])),
            ("III.a", six([-2, -2, -2, -1, -1, -1])),
            ("III.b", six([-2, -2, -1, -2, -1, -1])),
            ("III.c", six([-2, -1, -1, -1, -2, -2])),
            ("III.d", six([-2, -1, -2, -1, -2, -1])),
            ("III.e", six([-2, -1, -1, -2, -1, -2])),
            ("III.f", six([-2, -1, -2, -1, -1, -2])),
            ("IV.a", vec![("P", -1), ("T", -2), ("Q", -1), ("U", -2), ("R", -1), ("S", -2)]),
            ("IV.b", vec![("P", -1), ("T", -1), ("Q", -2), ("U", -2), ("R", -1), ("S", -2)]),
            ("IV.c", vec![("P", -2), ("T", -1), ("Q", -1), ("U", -2), ("R", -1), ("S", -2)]),
            ("V.a", vec![("b0", -2), ("b1", -2), ("b2", -1), ("t0", -1), ("t1", -1), ("t2", -2)]),
            ("V.b", vec![("b0", -2), ("b1", -2), ("b2", -2), ("t0", -1), ("t1", -1), ("t2", -1)]),
            ("VI.a", vec![("c00", -2), ("c03", -2), ("c30", -1), ("c33", -2), ("m", -1)]),
            ("VI.b", vec![("c00", -2), ("c03", -2), ("c30", -1), ("c33", -1), ("m", -2)]),
            ("VI.c", vec![("c00", -1), ("c03", -2), ("c30", -2), ("c33", -1), ("m", -2)]),
            ("VI.d", vec![("c00", -2), ("c03", -1), ("c30", -1), ("c33", -1), ("m", -3)]),
            ("VII.a", vec![("A", -2), ("B", -2), ("D", -1), ("C", -2)]),
            ("VII.b", vec![("A", -2), ("B", -1), ("D", -2), ("C", -2)]),
            ("VII.c", vec![("A", -2), ("B", -1), ("D", -1), ("C", -3)]),
            ("VII.d", vec![("A", -1), ("B", -1), ("D", -2), ("C", -3)]),
            ("VIII.a", vec![("A", -2), ("B", -2), ("C", -2)]),
            ("VIII.b", vec![("A", -3), ("B", -2), ("C", -1)]),
            ("IX.a", vec![("L", -2), ("R", -3)]),
            ("IX.b", vec![("L", -1), ("R", -4)]),
            ("X.a", vec![("BL", -2), ("TL", -2), ("TR", -1), ("BR", -2)]),
            ("X.b", vec![("BL", -2), ("TL", -2), ("TR", -2), ("BR", -1)]),
            ("X.c", vec![("BL", -3), ("TL", -1), ("TR", -1), ("BR", -2)]),
            ("X.d", vec![("BL", -3), ("TL", -2), ("TR", -1), ("BR", -1)]),
            ("X.e", vec![("BL", -3), ("TL", -1), ("TR", -2), ("BR", -1)]),
        ],
        _ => vec![],
    }
}

/// The graph and full `Γ*` weight (sinks 1) of a labeled weight.
pub fn labeled_weight(dim: usize, label: &str) -> Option<(Graph, Weight)> {
    let (_, vals) = weight_labels(dim).into_iter().find(|(l, _)| *l == label)?;
    let g = named_graph(dim, label.split('.').next()?)?;
    let mut w: Weight = vals.into_iter().map(|(v, t)| (v.to_string(), t)).collect();
    for e in g.edges() {
        w.insert(sink_id(&e.id), 1);
    }
    Some((g, w))
}

/// Point tables, one row per coordinate.
fn table_rows(name: &str) -> Option<Vec<Vec<i64>>> {
    let rows: &[&[i64]] = match name {
        "I.a(3)" => &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        "II.c(3)" => &[&[0, 0, 1, 1, 0], &[0, 0, 0, 0, 1], &[0, 1, 0, 1, 0]],
        "I.b(3)" => &[&[0, 1, 1, 0, 0, 1], &[0, 0, 0, 1, 1, 1], &[0, 0, 1, 0, 1, 1]],
        "II.c(4)" => &[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]],
        "I.d(4)" => &[&[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1], &[0, 0, 0, 1, 0, 1], &[0, 1, 0, 0, 0, 0]],
        "II.f(4)" => &[
            &[0, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 1, 0, 1, 0, 1],
        ],
        "III.d(4)" => &[
            &[0, 0, 1, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 1, 1, 0, 1, 1],
            &[0, 1, 0, 0, 1, 0, 0, 1],
        ],
        "I.a(4)" => &[
            &[0, 1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 0, 1, 0, 1, 0, 1, 0, 1],
            &[0, 0, 0, 1, 1, 0, 0, 1, 1],
        ],
        "V.b(4)" => &[&[0, 0, 1, 1, 0, 0], &[0, 0, 0, 0, 1, 1], &[0, 0, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 0]],
        "VI.c(4)" => &[
            &[0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1],
            &[0, 1, 1, 0, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0, 1],
        ],
        "VII.b(4)" => &[
            &[0, 1, 0, 1, 0, 1, 1, 0],
            &[0, 0, 1, 0, 1, 1, 0, 1],
            &[0, 0, 0, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1],
        ],
        "VIII.a(4)" => &[
            &[0, 0, 1, 0, 0, 1, 0, 1, 1, 1],
            &[0, 0, 0, 1, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 1, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
        ],
        "IX.a(4)" => &[
            &[0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
            &[0, 0, 0, 1, 0, 0, 1, 0, 1, 1],
            &[0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            &[0, 1, 1, 1, 0, 0, 0, 1, 1, 1],
        ],
        "X.a(4)" => &[
            &[0, 0, 0, 0, 1, 1, 1, 1, 1],
            &[0, 1, 0, 0, 1, 1, 0, 0, 1],
            &[0, 0, 1, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 1, 0, 1, 0, 1, 0],
        ],
        "nonflow" => &[
            &[0, 1, 1, 0, 1, 0, 0],
            &[0, 1, 0, 1, 1, 1, 0],
            &[0, 0, 1, 1, 1, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0],
        ],
        _ => return None,
    };
    Some(rows.iter().map(|r| r.to_vec()).collect())
}

/// Points `v_0, v_1, …` of a named table.
pub fn table_points(name: &str) -> Option<Vec<Vec<i64>>> {
    let rows = table_rows(name)?;
    let n = rows[0].len();
    Some((0..n).map(|i| rows.iter().map(|r| r[i]).collect()).collect())
}

/// A named polytope with the paper's point order.
pub fn table_polytope(name: &str) -> Option<LatticePolytope> {
    let pts = table_points(name)?;
    Some(LatticePolytope::from_table(pts[0].len(), pts).expect("tables are saturated"))
}

pub const CLASSES_DIM3: [&str; 3] = ["I.a(3)", "II.c(3)", "I.b(3)"];

pub const CLASSES_DIM4: [&str; 11] = [
    "II.c(4)", "I.d(4)", "II.f(4)", "III.d(4)", "I.a(4)", "V.b(4)", "VI.c(4)", "VII.b(4)", "VIII.a(4)", "IX.a(4)",
    "X.a(4)",
];

/// All fourteen classes of dimension 3 and 4.
pub fn all_classes() -> Vec<&'static str> {
    CLASSES_DIM3.iter().chain(CLASSES_DIM4.iter()).copied().collect()
}

/// Expected (points, facets) of each 4-dimensional class.
pub fn expected_shape_dim4(name: &str) -> Option<(usize, usize)> {
    Some(match name {
        "II.c(4)" => (5, 5),
        "I.d(4)" => (6, 6),
        "II.f(4)" => (7, 6),
        "III.d(4)" => (8, 7),
        "I.a(4)" => (9, 7),
        "V.b(4)" => (6, 9),
        "VI.c(4)" => (7, 8),
        "VII.b(4)" => (8, 9),
        "VIII.a(4)" => (10, 12),
        "IX.a(4)" => (10, 10),
        "X.a(4)" => (9, 9),
        _ => return None,
    })
}

/// `P(Γ)` as listed for each named graph.
pub fn cell_families() -> Vec<(usize, &'static str, Vec<&'static str>)> {
    vec![
        (3, "I", vec!["I.a(3)", "I.b(3)"]),
        (3, "II", vec!["I.a(3)", "II.c(3)"]),
        (3, "III", vec!["I.a(3)", "II.c(3)"]),
        (3, "IV", vec!["I.a(3)"]),
        (4, "I", vec!["I.a(4)", "I.d(4)"]),
        (4, "II", vec!["I.d(4)", "II.c(4)", "II.f(4)"]),
        (4, "III", vec!["II.c(4)", "II.f(4)", "III.d(4)"]),
        (4, "IV", vec!["I.d(4)", "II.c(4)"]),
        (4, "V", vec!["II.c(4)", "V.b(4)"]),
        (4, "VI", vec!["II.c(4)", "I.d(4)", "VI.c(4)"]),
        (4, "VII", vec!["II.c(4)", "I.d(4)", "VII.b(4)"]),
        (4, "VIII", vec!["I.d(4)", "VIII.a(4)"]),
        (4, "IX", vec!["II.c(4)", "IX.a(4)"]),
        (4, "X", vec!["II.c(4)", "II.f(4)", "X.a(4)"]),
    ]
}

/// Which labeled 4-dimensional weights produce each class; the remaining
/// labels give polytopes of dimension below 4.
pub fn provenance_dim4() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("II.c(4)", vec!["II.c", "III.c", "IV.b", "V.a", "VI.a", "VI.d", "VII.c", "IX.b", "X.d"]),
        ("I.d(4)", vec!["I.d", "II.d", "II.e", "IV.c", "VI.b", "VII.a", "VII.d", "VIII.b"]),
        ("II.f(4)", vec!["II.f", "III.e", "X.e"]),
        ("III.d(4)", vec!["III.d"]),
        ("I.a(4)", vec!["I.a"]),
        ("V.b(4)", vec!["V.b"]),
        ("VI.c(4)", vec!["VI.c"]),
        ("VII.b(4)", vec!["VII.b"]),
        ("VIII.a(4)", vec!["VIII.a"]),
        ("IX.a(4)", vec!["IX.a"]),
        ("X.a(4)", vec!["X.a"]),
    ]
}

pub const LOWER_DIM_LABELS_DIM4: [&str; 12] =
    ["I.b", "I.c", "II.a", "II.b", "II.g", "II.h", "III.a", "III.b", "III.f", "IV.a", "X.b", "X.c"];

#[derive(Clone, Debug)]
pub struct TriangulationClaim {
    pub item: &'static str,
    pub polytope: &'static str,
    pub pull: Vec<usize>,
    pub cells: Vec<Vec<usize>>,
    pub nonfaces: Vec<Vec<usize>>,
}

fn claim(item: &'static str, polytope: &'static str, pull: &[usize], cells: &[&[usize]], nonfaces: &[&[usize]]) -> TriangulationClaim {
    TriangulationClaim {
        item,
        polytope,
        pull: pull.to_vec(),
        cells: cells.iter().map(|c| c.to_vec()).collect(),
        nonfaces: nonfaces.iter().map(|c| c.to_vec()).collect(),
    }
}

/// Pull orders with the resulting maximal cells and minimal non-faces for
/// the cells of quivers with 3-regular chassis. Item (vii) is stated for
/// II.f but its data is that of V.b, to which it is bound here.
pub fn triangulation_claims() -> Vec<TriangulationClaim> {
    vec![
        claim("simplex-3", "I.a(3)", &[0], &[&[0, 1, 2, 3]], &[]),
        claim("simplex-4", "II.c(4)", &[0], &[&[0, 1, 2, 3, 4]], &[]),
        claim("i", "II.c(3)", &[0], &[&[0, 2, 3, 4], &[0, 1, 3, 4]], &[&[1, 2]]),
        claim("ii", "I.b(3)", &[0], &[&[0, 1, 2, 5], &[0, 3, 4, 5], &[0, 1, 3, 5], &[0, 2, 4, 5]], &[&[1, 4], &[2, 3]]),
        claim("iii", "I.d(4)", &[2], &[&[0, 1, 2, 3, 5], &[0, 1, 2, 4, 5]], &[&[3, 4]]),
        claim(
            "iv",
            "II.f(4)",
            &[2, 3],
            &[&[0, 1, 2, 3, 5], &[0, 2, 3, 5, 6], &[0, 2, 3, 4, 6]],
            &[&[1, 4], &[1, 6], &[4, 5]],
        ),
        claim(
            "v",
            "III.d(4)",
            &[3, 0, 4],
            &[&[0, 1, 2, 3, 5], &[0, 3, 5, 6, 7], &[0, 1, 3, 5, 7], &[1, 2, 3, 4, 5], &[1, 3, 4, 5, 7]],
            &[&[0, 4], &[1, 6], &[2, 6], &[2, 7], &[4, 6]],
        ),
        claim(
            "vi",
            "I.a(4)",
            &[4, 6, 5],
            &[&[0, 4, 5, 6, 7], &[0, 4, 6, 7, 8], &[0, 1, 2, 4, 6], &[0, 1, 4, 5, 6], &[0, 1, 3, 4, 5], &[0, 3, 4, 5, 7]],
            &[&[1, 7], &[1, 8], &[2, 3], &[2, 5], &[2, 7], &[2, 8], &[3, 6], &[3, 8], &[5, 8]],
        ),
        claim("vii", "V.b(4)", &[0], &[&[0, 2, 3, 4, 5], &[0, 1, 2, 3, 5], &[0, 1, 2, 4, 5]], &[&[1, 3, 4]]),
    ]
}

/// Pull orders and triangulations for the remaining 4-dimensional cells.
pub fn new_triangulation_claims() -> Vec<TriangulationClaim> {
    vec![
        claim(
            "i",
            "VI.c(4)",
            &[5],
            &[&[0, 1, 2, 3, 5], &[0, 3, 4, 5, 6], &[0, 1, 3, 5, 6], &[0, 2, 3, 4, 5]],
            &[&[1, 4], &[2, 6]],
        ),
        claim(
            "ii",
            "VII.b(4)",
            &[0, 4, 7],
            &[&[0, 1, 3, 5, 6], &[0, 3, 4, 5, 6], &[0, 4, 5, 6, 7], &[0, 1, 5, 6, 7], &[0, 1, 2, 5, 7], &[0, 2, 4, 5, 7]],
            &[&[2, 6], &[3, 7], &[1, 4], &[2, 3]],
        ),
        claim(
            "iii",
            "VIII.a(4)",
            &[0, 2, 6],
            &[
                &[0, 2, 7, 8, 9],
                &[0, 2, 5, 7, 9],
                &[0, 2, 3, 7, 8],
                &[0, 1, 2, 3, 7],
                &[0, 2, 4, 5, 7],
                &[0, 1, 2, 4, 7],
                &[0, 6, 7, 8, 9],
                &[0, 3, 6, 7, 8],
                &[0, 5, 6, 7, 9],
                &[0, 4, 5, 6, 7],
                &[0, 1, 3, 6, 7],
                &[0, 1, 4, 6, 7],
            ],
            &[&[1, 5], &[1, 8], &[1, 9], &[2, 6], &[3, 4], &[3, 5], &[3, 9], &[4, 8], &[4, 9], &[5, 8]],
        ),
        claim(
            "iv",
            "IX.a(4)",
            &[0, 1, 6],
            &[
                &[0, 2, 5, 7, 9],
                &[0, 3, 6, 8, 9],
                &[0, 1, 4, 7, 8],
                &[0, 1, 2, 7, 9],
                &[0, 1, 7, 8, 9],
                &[0, 1, 2, 3, 9],
                &[0, 1, 3, 8, 9],
                &[0, 5, 6, 7, 9],
                &[0, 6, 7, 8, 9],
                &[0, 4, 5, 6, 7],
                &[0, 4, 6, 7, 8],
            ],
            &[&[4, 9], &[3, 7], &[1, 6], &[3, 4], &[3, 5], &[5, 8], &[2, 8], &[2, 6], &[1, 5], &[2, 4]],
        ),
        claim(
            "v",
            "X.a(4)",
            &[0, 6, 3],
            &[
                &[0, 1, 4, 5, 8],
                &[0, 5, 6, 7, 8],
                &[0, 4, 5, 6, 8],
                &[0, 2, 6, 7, 8],
                &[0, 3, 5, 7, 8],
                &[0, 1, 3, 5, 8],
                &[0, 2, 3, 7, 8],
                &[0, 1, 2, 3, 8],
            ],
            &[&[2, 5], &[3, 4], &[3, 6], &[1, 7], &[4, 7], &[1, 6], &[2, 4]],
        ),
    ]
}

/// The pull order used for each class (all fourteen).
pub fn pull_order(name: &str) -> Option<Vec<usize>> {
    triangulation_claims()
        .into_iter()
        .chain(new_triangulation_claims())
        .find(|c| c.polytope == name)
        .map(|c| c.pull)
        .or_else(|| (name == "I.a(3)").then(|| vec![0]))
}

#[derive(Clone, Debug)]
pub struct EhrhartRow {
    pub polytope: &'static str,
    /// Ascending coefficients over `denominator`.
    pub numerators: Vec<i64>,
    pub denominator: i64,
    pub h_star: Vec<i64>,
}

fn row(polytope: &'static str, numerators: &[i64], denominator: i64, h_star: &[i64]) -> EhrhartRow {
    EhrhartRow { polytope, numerators: numerators.to_vec(), denominator, h_star: h_star.to_vec() }
}

pub fn ehrhart_table() -> Vec<EhrhartRow> {
    vec![
        row("I.a(3)", &[6, 11, 6, 1], 6, &[1]),
        row("II.c(3)", &[6, 13, 9, 2], 6, &[1, 1]),
        row("I.b(3)", &[6, 14, 12, 4], 6, &[1, 2, 1]),
        row("II.c(4)", &[24, 50, 35, 10, 1], 24, &[1]),
        row("I.d(4)", &[24, 56, 46, 16, 2], 24, &[1, 1]),
        row("II.f(4)", &[24, 62, 57, 22, 3], 24, &[1, 2]),
        row("III.d(4)", &[24, 66, 67, 30, 5], 24, &[1, 3, 1]),
        row("I.a(4)", &[24, 72, 78, 36, 6], 24, &[1, 4, 1]),
        row("V.b(4)", &[24, 54, 45, 18, 3], 24, &[1, 1, 1]),
        row("VI.c(4)", &[24, 60, 56, 24, 4], 24, &[1, 2, 1]),
        row("VII.b(4)", &[24, 64, 66, 32, 6], 24, &[1, 3, 2]),
        row("VIII.a(4)", &[24, 72, 84, 48, 12], 24, &[1, 5, 5, 1]),
        row("IX.a(4)", &[24, 70, 85, 50, 11], 24, &[1, 5, 5]),
        row("X.a(4)", &[24, 68, 76, 40, 8], 24, &[1, 4, 3]),
    ]
}

/// Standard monomials as `⊔ w_i⟨t_z : z ∈ C_i⟩`, given as `(support of w_i, C_i)`.
/// The second 4-dimensional entry is stated under the label II.c but its
/// cells are those of II.f.
pub fn standard_monomial_decompositions() -> Vec<(&'static str, Vec<(Vec<usize>, Vec<usize>)>)> {
    let d = |pieces: &[(&[usize], &[usize])]| pieces.iter().map(|(w, c)| (w.to_vec(), c.to_vec())).collect();
    vec![
        ("I.a(3)", d(&[(&[], &[0, 1, 2, 3])])),
        ("II.c(3)", d(&[(&[], &[0, 2, 3, 4]), (&[1], &[0, 1, 3, 4])])),
        ("I.b(3)", d(&[(&[], &[0, 1, 2, 5]), (&[3], &[0, 1, 3, 5]), (&[4], &[0, 2, 4, 5]), (&[3, 4], &[0, 3, 4, 5])])),
        ("II.c(4)", d(&[(&[], &[0, 1, 2, 3, 4])])),
        ("I.d(4)", d(&[(&[], &[0, 1, 2, 3, 5]), (&[4], &[0, 1, 2, 4, 5])])),
        ("II.f(4)", d(&[(&[], &[0, 1, 2, 3, 5]), (&[6], &[0, 2, 3, 5, 6]), (&[4], &[0, 2, 3, 4, 6])])),
        (
            "III.d(4)",
            d(&[
                (&[], &[0, 1, 2, 3, 5]),
                (&[7], &[0, 1, 3, 5, 7]),
                (&[4], &[1, 2, 3, 4, 5]),
                (&[6], &[0, 3, 5, 6, 7]),
                (&[4, 7], &[1, 3, 4, 5, 7]),
            ]),
        ),
        (
            "I.a(4)",
            d(&[
                (&[], &[0, 4, 5, 6, 7]),
                (&[8], &[0, 4, 6, 7, 8]),
                (&[1], &[0, 1, 4, 5, 6]),
                (&[3], &[0, 3, 4, 5, 7]),
                (&[2], &[0, 1, 2, 4, 6]),
                (&[1, 3], &[0, 1, 3, 4, 5]),
            ]),
        ),
        ("V.b(4)", d(&[(&[], &[0, 2, 3, 4, 5]), (&[1], &[0, 1, 2, 3, 5]), (&[1, 4], &[0, 1, 2, 4, 5])])),
        (
            "VI.c(4)",
            d(&[
                (&[], &[0, 1, 2, 3, 5]),
                (&[6], &[0, 1, 3, 5, 6]),
                (&[4], &[0, 3, 4, 5, 6]),
                (&[2, 4], &[0, 2, 3, 4, 5]),
            ]),
        ),
        (
            "VII.b(4)",
            d(&[
                (&[], &[0, 1, 3, 5, 6]),
                (&[4], &[0, 3, 4, 5, 6]),
                (&[7], &[0, 4, 5, 6, 7]),
                (&[1, 7], &[0, 1, 5, 6, 7]),
                (&[2], &[0, 1, 2, 5, 7]),
                (&[2, 4], &[0, 2, 4, 5, 7]),
            ]),
        ),
        (
            "VIII.a(4)",
            d(&[
                (&[], &[0, 2, 7, 8, 9]),
                (&[5], &[0, 2, 5, 7, 9]),
                (&[3], &[0, 2, 3, 7, 8]),
                (&[6], &[0, 6, 7, 8, 9]),
                (&[1], &[0, 1, 2, 3, 7]),
                (&[4], &[0, 1, 2, 4, 7]),
                (&[5, 6], &[0, 5, 6, 7, 9]),
                (&[3, 6], &[0, 3, 6, 7, 8]),
                (&[4, 5], &[0, 2, 4, 5, 7]),
                (&[1, 6], &[0, 1, 3, 6, 7]),
                (&[4, 6], &[0, 1, 4, 6, 7]),
                (&[4, 5, 6], &[0, 4, 5, 6, 7]),
            ]),
        ),
        (
            "IX.a(4)",
            d(&[
                (&[], &[0, 2, 5, 7, 9]),
                (&[1], &[0, 1, 2, 7, 9]),
                (&[8], &[0, 1, 7, 8, 9]),
                (&[3], &[0, 1, 2, 3, 9]),
                (&[6], &[0, 6, 7, 8, 9]),
                (&[4], &[0, 1, 4, 7, 8]),
                (&[5, 6], &[0, 5, 6, 7, 9]),
                (&[4, 6], &[0, 4, 6, 7, 8]),
                (&[4, 5], &[0, 4, 5, 6, 7]),
                (&[3, 8], &[0, 1, 3, 8, 9]),
                (&[3, 6], &[0, 3, 6, 8, 9]),
            ]),
        ),
        (
            "X.a(4)",
            d(&[
                (&[], &[0, 1, 4, 5, 8]),
                (&[6], &[0, 4, 5, 6, 8]),
                (&[3], &[0, 1, 3, 5, 8]),
                (&[2], &[0, 1, 2, 3, 8]),
                (&[7], &[0, 5, 6, 7, 8]),
                (&[3, 7], &[0, 3, 5, 7, 8]),
                (&[2, 7], &[0, 2, 3, 7, 8]),
                (&[2, 6], &[0, 2, 6, 7, 8]),
            ]),
        ),
    ]
}
