import pytest

from tdcolor.classes import Rejection, recognize_bipartite, recognize_chain, recognize_cograph, recognize_split
from tdcolor.generators import CLASSES, GenSpec, UnsatisfiableSpec, generate
from tdcolor.graph import complete_graph, is_isolate_free, max_clique

SEEDS = range(1000)


def _n(seed, lo=2, hi=12):
    return lo + seed % (hi - lo + 1)


@pytest.mark.parametrize(
    "cls, accept",
    [
        ("tree", lambda g: g.is_tree()),
        ("cograph", lambda g: not isinstance(recognize_cograph(g), Rejection)),
        ("chain", lambda g: not isinstance(recognize_chain(g), Rejection)),
        ("split", lambda g: not isinstance(recognize_split(g), Rejection) and g.is_connected()),
        ("bipartite", lambda g: not isinstance(recognize_bipartite(g), Rejection)),
        ("any", lambda g: True),
    ],
)
def test_round_trip_through_recognizer(cls, accept):
    for seed in SEEDS:
        g = generate(GenSpec(cls, _n(seed), seed))
        assert g.n == _n(seed) and is_isolate_free(g) and accept(g), (cls, seed)


def test_split_clique_is_maximum():
    for seed in range(300):
        g = generate(GenSpec("split", _n(seed, 2, 9), seed))
        assert recognize_split(g).omega == len(max_clique(g)) >= 2


def test_shape_flags():
    assert recognize_chain(generate(GenSpec("chain", 6, 7, k=3))).k == 3
    assert generate(GenSpec("split", 2, 0)) == complete_graph(2)
    for seed in range(50):
        assert not generate(GenSpec("cograph", 8, seed, connected=False)).is_connected()
        assert generate(GenSpec("cograph", 8, seed, connected=True)).is_connected()
        assert generate(GenSpec("bipartite", 9, seed, connected=True)).is_connected()


@pytest.mark.parametrize("cls", CLASSES)
def test_deterministic(cls):
    assert generate(GenSpec(cls, 9, 123)) == generate(GenSpec(cls, 9, 123))


@pytest.mark.parametrize(
    "spec",
    [GenSpec("chain", 5, 0, k=3), GenSpec("tree", 1, 0), GenSpec("cograph", 3, 0, connected=False), GenSpec("x", 4, 0)],
)
def test_unsatisfiable(spec):
    with pytest.raises(UnsatisfiableSpec):
        generate(spec)
