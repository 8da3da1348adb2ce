import itertools

import pytest

from tanglecolor import INFINITY_TANGLE, ZERO_TANGLE, build_rational, parse_knot_pd, parse_tangle_file
from tanglecolor.errors import TooLargeError
from tanglecolor.oracle import brute_force_boundary, brute_force_count

from conftest import random_words

PLUS1 = parse_tangle_file("X 2 1 4 3\nB 1 2 3 4")


def test_counts(trefoil):
    assert brute_force_count(trefoil, 3) == 9
    assert brute_force_count(trefoil, 6) == 18
    assert brute_force_count(parse_knot_pd("O"), 7) == 7


def test_plain_python_enumeration_agrees(trefoil, figure8):
    # the numpy enumeration against a literal loop over every assignment
    for D in (trefoil, figure8):
        arcs = {1: 0, 6: 0, 2: 1, 3: 1, 4: 2, 5: 2} if D is trefoil else None
        if arcs is None:
            from tanglecolor import arcs as arc_partition
            arcs = arc_partition(D).arc_of
        k = len(set(arcs.values()))
        for m in (2, 3, 4, 5):
            count = 0
            for colors in itertools.product(range(m), repeat=k):
                if all((2 * colors[arcs[c.over_a]] - colors[arcs[c.under_in]]
                        - colors[arcs[c.under_out]]) % m == 0 for c in D.crossings):
                    count += 1
            assert brute_force_count(D, m) == count


def test_boundary_sets():
    assert brute_force_boundary(ZERO_TANGLE, 2) == {
        (0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)}
    assert brute_force_boundary(INFINITY_TANGLE, 2) == {
        (0, 0, 0, 0), (1, 0, 0, 1), (0, 1, 1, 0), (1, 1, 1, 1)}
    assert brute_force_boundary(PLUS1, 2) == {
        (a, b, a, b) for a in range(2) for b in range(2)}


def test_boundary_set_is_a_subspace():
    for w in random_words(4, 25):
        T = build_rational(w)
        for p in (2, 3, 5):
            found = brute_force_boundary(T, p)
            for u in found:
                for s in range(p):
                    assert tuple(s * x % p for x in u) in found
                for v in found:
                    assert tuple((x + y) % p for x, y in zip(u, v)) in found


def test_guard():
    big = parse_knot_pd("O\n" * 13)
    with pytest.raises(TooLargeError):
        brute_force_count(big, 2)
    with pytest.raises(TooLargeError):
        brute_force_count(parse_knot_pd("O\n" * 9), 10)


def test_chunked_enumeration_is_exact(monkeypatch):
    import tanglecolor.oracle as oracle
    T = build_rational([2, 1, 2])
    expected = brute_force_boundary(T, 5), brute_force_count(T, 5)
    monkeypatch.setattr(oracle, "CHUNK", 7)
    assert (brute_force_boundary(T, 5), brute_force_count(T, 5)) == expected
