import json

import pytest
from hypothesis import given

from coxeter_lab.acceptance import d_tilde
from coxeter_lab.coxeter import reflect
from coxeter_lab.errors import (
    CyclicGraph,
    Disconnected,
    DuplicateEdge,
    InvalidParity,
    InvalidStarType,
    UnknownVertex,
)
from coxeter_lab.graph_core import (
    EVEN,
    ODD,
    StarType,
    bipartition,
    branching_kind,
    build_star,
    classify,
    imaginary_root,
    make_wood,
    multiplicity,
    parse_wood,
    s0_parameter,
    star_type,
    tits_positive_definite,
)

from conftest import path, trees


def test_parse_smallest_tree():
    w = parse_wood('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
    assert w.neighbors("a") == {"b"}


@pytest.mark.parametrize("doc, err", [
    ({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]]}, CyclicGraph),
    ({"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}, Disconnected),
    ({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}, DuplicateEdge),
    ({"vertices": ["a", "b"], "edges": [["a", "z"]]}, UnknownVertex),
    ({"vertices": ["a"], "edges": [["a", "a"]]}, CyclicGraph),
])
def test_parse_rejects(doc, err):
    with pytest.raises(err):
        parse_wood(json.dumps(doc))


def test_parity_block_overrides_and_is_checked():
    doc = {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]],
           "parity": {"a": "even", "b": "odd", "c": "even"}}
    ctx = bipartition(parse_wood(doc))
    assert ctx.numeration == ("b", "a", "c")
    doc["parity"]["c"] = "odd"
    with pytest.raises(InvalidParity):
        parse_wood(doc)


def test_bipartition_examples():
    w = path("a", "b", "c")
    ctx = bipartition(w)
    assert dict(ctx.parity) == {"a": ODD, "b": EVEN, "c": ODD}
    assert ctx.numeration == ("a", "c", "b") and ctx.p == 2
    ctx = bipartition(w, seed=("a", EVEN))
    assert ctx.numeration == ("b", "a", "c") and ctx.p == 1
    single = bipartition(make_wood(["a"], []))
    assert dict(single.parity) == {"a": ODD} and single.p == 1


@given(trees())
def test_parity_alternates_on_every_edge(w):
    ctx = bipartition(w)
    assert all(ctx.parity[a] != ctx.parity[b] for a, b in w.edges)
    assert list(ctx.numeration[: ctx.p]) == [v for v in w.vertices if ctx.parity[v] == ODD]


def test_multiplicity_and_branching():
    d4 = build_star((1, 1, 1, 1))
    assert multiplicity(d4, "center") == 4 and branching_kind(d4, "center") == "strong"
    d5 = d_tilde(5)
    assert branching_kind(d5, "s0") == "weak"
    assert branching_kind(path("a", "b", "c"), "b") == "none"
    with pytest.raises(UnknownVertex):
        multiplicity(d4, "nope")


def test_star_examples():
    e6 = build_star((2, 2, 2))
    assert len(e6) == 7 and multiplicity(e6, "center") == 3
    assert star_type(build_star((1, 1, 1, 1))).arms == (1, 1, 1, 1)
    assert star_type(d_tilde(6)) is None
    with pytest.raises(InvalidStarType):
        build_star((3,))


@pytest.mark.parametrize("arms", [(1, 1, 1), (2, 2, 2), (5, 2, 1), (4, 1, 1, 1, 1), (7, 3, 3)])
def test_star_roundtrip(arms):
    assert star_type(build_star(arms)) == StarType(arms)


def test_imaginary_root_examples():
    u = imaginary_root(build_star((1, 1, 1, 1)))
    assert u["center"] == 2 and all(u[f"arm_{i}_1"] == 1 for i in range(1, 5))
    u = imaginary_root(build_star((3, 3, 1)))
    spine = ["arm_1_3", "arm_1_2", "arm_1_1", "center", "arm_2_1", "arm_2_2", "arm_2_3"]
    assert [u[v] for v in spine] == [1, 2, 3, 4, 3, 2, 1] and u["arm_3_1"] == 2
    assert imaginary_root(path("a", "b", "c")) is None


def test_imaginary_root_independent_of_bipartition():
    w = d_tilde(7)
    a, b = bipartition(w), bipartition(w).flipped()
    assert imaginary_root(a).to_json() == imaginary_root(b).to_json()


@given(trees(max_size=10))
def test_imaginary_root_iff_extended_and_fixed_by_reflections(w):
    ctx = bipartition(w)
    u = imaginary_root(ctx)
    cls = classify(ctx)
    assert (u is not None) == (cls.tag == "ExtendedDynkin")
    assert (cls.tag == "Dynkin") == tits_positive_definite(ctx)
    if u is not None:
        assert all(reflect(u, g) == u for g in ctx.numeration)


def test_classify_examples():
    e8 = classify(build_star((4, 2, 1)))
    assert (e8.tag, e8.kind, e8.rank) == ("Dynkin", "E", 8)
    e6 = classify(build_star((2, 2, 2)))
    assert (e6.tag, e6.kind) == ("ExtendedDynkin", "E6~")
    wild = classify(build_star((2, 2, 2, 2)))
    assert wild.tag == "Other" and wild.star.arms == (2, 2, 2, 2) and wild.s0_k == 1
    assert classify(d_tilde(8)).kind == "D8~"
    assert classify(path("a", "b", "c")).kind == "A"


def test_s0_with_k0_are_exactly_the_extended_stars():
    found = set()
    for s in range(2, 6):
        def arms_of(s, hi):
            if s == 0:
                yield ()
                return
            for a in range(hi, 0, -1):
                for rest in arms_of(s - 1, a):
                    yield (a,) + rest
        for arms in arms_of(s, 9):
            if s0_parameter(arms) == 0:
                found.add(arms)
                assert classify(build_star(arms)).tag == "ExtendedDynkin"
    assert found == {(1, 1, 1, 1), (2, 2, 2), (3, 3, 1), (5, 2, 1)}
