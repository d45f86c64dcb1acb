"""Smoke test for the pyflowtope extension module."""

from fractions import Fraction

import pyflowtope as ft


def main():
    q = ft.Quiver(["s", "t"], [("a1", "s", "t"), ("a2", "s", "t")])
    theta = {"s": -2, "t": 2}
    assert q.chi() == 1 and q.is_acyclic()
    assert ft.lattice_points(q, theta) == [[0, 2], [1, 1], [2, 0]]
    assert ft.lattice_points(q, theta, upper={"a1": 1}) == [[0, 2], [1, 1]]

    tq, tw = ft.tighten(q, theta)
    p = ft.flow_polytope(tq, tw)
    assert p.dim == 1 and len(p.facets) == len(tq.arrows)

    birkhoff = ft.LatticePolytope.table("V.b(4)")
    assert (len(birkhoff), len(birkhoff.facets), birkhoff.dim) == (6, 9, 4)
    assert birkhoff.is_compressed()
    assert ft.ehrhart(birkhoff) == [Fraction(1), Fraction(9, 4), Fraction(15, 8), Fraction(3, 4), Fraction(1, 8)]
    assert ft.h_star(birkhoff)[:3] == [1, 1, 1]
    assert not ft.generated_in_degree(birkhoff, 2)
    assert ft.generated_in_degree(birkhoff, 3)
    assert ft.initial_ideal(birkhoff, [0]) == [[1, 3, 4]]

    t = ft.triangulate(ft.LatticePolytope.table("II.c(3)"), [0])
    assert t["cells"] == [[0, 1, 3, 4], [0, 2, 3, 4]]
    assert t["nonfaces"] == [[1, 2]]
    assert t["unimodular"] and t["regular"]

    classes = ft.classify(3)
    assert sorted((len(c), len(c.facets)) for c in classes) == [(4, 4), (5, 5), (6, 8)]
    assert any(ft.equivalent(c, ft.LatticePolytope.table("I.b(3)")) for c in classes)
    assert ft.reproduce("birkhoff-not-quadratic")

    try:
        ft.LatticePolytope.from_points([[0, 0], [2, 0], [0, 2]])
    except ValueError:
        pass
    else:
        raise AssertionError("unsaturated point set accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
