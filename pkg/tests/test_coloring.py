import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import K4_FOUR, K4_THREE
from intervalspan import families as fam
from intervalspan.coloring import (
    ColoringError,
    IntervalCertificate,
    is_interval,
    make_certificate,
    normalize,
    reverse,
    verify_certificate,
    vertex_spectrum,
    windows_of,
)
from intervalspan.graph import Multigraph

K4 = fam.k4()
PATH3 = Multigraph(3, ((0, 1), (1, 2)))


def test_vertex_spectrum():
    assert sorted(vertex_spectrum(K4, K4_FOUR, 0)) == [1, 2, 3]
    assert sorted(vertex_spectrum(K4, K4_FOUR, 2)) == [2, 3, 4]
    K2 = Multigraph(2, ((0, 1),))
    assert vertex_spectrum(K2, [1], 0) == [1] == vertex_spectrum(K2, [1], 1)
    with pytest.raises(ColoringError):
        vertex_spectrum(K4, [1, 2], 0)


def test_parallel_slots_counted_separately():
    G = Multigraph(2, ((0, 1), (0, 1)))
    assert sorted(vertex_spectrum(G, [2, 1], 0)) == [1, 2]
    v = is_interval(G, [1, 1])
    assert not v and v.kind == "not_proper"


def test_is_interval_examples():
    v = is_interval(K4, K4_FOUR)
    assert v and v.t == 4 and str(v) == "ok(4)"
    assert is_interval(K4, K4_THREE).t == 3
    bad = is_interval(PATH3, [1, 3])
    assert not bad and (bad.kind, bad.witness) == ("not_consecutive", 1)


def test_is_interval_other_violations():
    assert is_interval(PATH3, [2, 3]).kind == "not_starting_at_1"
    # two components, each locally fine, colour 2 unused
    two = Multigraph(4, ((0, 1), (2, 3)))
    assert is_interval(two, [1, 3]).kind == "gap_in_colors"
    with pytest.raises(ColoringError):
        is_interval(PATH3, [1, 0])


def test_normalize():
    tri_path = Multigraph(4, ((0, 1), (1, 2), (2, 3)))
    assert normalize(tri_path, [5, 6, 7]) == [1, 2, 3]
    assert normalize(K4, K4_FOUR) == K4_FOUR
    assert normalize(K4, [c + 10 for c in K4_FOUR]) == K4_FOUR


def test_reverse():
    assert reverse(K4, K4_FOUR, 4) == [4, 3, 2, 2, 3, 1]
    assert is_interval(K4, reverse(K4, K4_FOUR, 4)).t == 4
    matching = Multigraph(4, ((0, 1), (2, 3)))
    assert reverse(matching, [1, 1], 1) == [1, 1]
    with pytest.raises(ColoringError):
        reverse(PATH3, [1, 3], 3)


def test_certificate_examples():
    cert = make_certificate(K4, K4_FOUR)
    assert cert.t == 4 and cert.windows == ((1, 3), (1, 3), (2, 4), (2, 4))
    assert verify_certificate(cert)[0]
    ok, diag = verify_certificate(IntervalCertificate(K4, list(K4_FOUR), 5, list(cert.windows)))
    assert not ok and diag
    wins = list(cert.windows)
    wins[0] = (2, 4)
    ok, diag = verify_certificate(IntervalCertificate(K4, list(K4_FOUR), 4, wins))
    assert not ok and any("window" in d for d in diag)


def test_certificate_partial_coloring_is_rejected_not_raised():
    ok, diag = verify_certificate(IntervalCertificate(K4, [1, 2], 4, [(1, 3)] * 4))
    assert not ok and diag


def test_windows_of_isolated_vertex():
    G = Multigraph(3, ((0, 1),))
    assert windows_of(G, [1])[2] == (1, 0)


shifts = st.integers(min_value=0, max_value=20)


@given(k=shifts, which=st.sampled_from(["four", "three", "prism"]))
def test_shift_invariance(k, which):
    G, c = {
        "four": (K4, K4_FOUR),
        "three": (K4, K4_THREE),
        "prism": (fam.prism(3), [1, 3, 2, 4, 3, 5, 3, 2, 4]),
    }[which]
    base = is_interval(G, c)
    shifted = [x + k for x in c]
    v = is_interval(G, shifted)
    assert v.ok or v.kind == "not_starting_at_1"
    assert is_interval(G, normalize(G, shifted)).t == base.t


def _prism_five():
    G = fam.prism(3)
    c = [1, 3, 2, 4, 3, 5, 3, 2, 4]
    return G, c


def test_prism_coloring_fixture_is_valid():
    G, c = _prism_five()
    v = is_interval(G, c)
    assert v, str(v)


@settings(max_examples=50)
@given(data=st.data())
def test_reverse_involution_on_solver_output(data):
    from intervalspan.solver import feasible

    G = data.draw(st.sampled_from([K4, fam.prism(3), fam.moebius_ladder(3), fam.complete_bipartite(2, 3)]))
    t = data.draw(st.integers(min_value=G.max_degree, max_value=G.n + 2))
    cert = feasible(G, t)
    if cert is None:
        return
    r = reverse(G, cert.coloring, t)
    assert is_interval(G, r).t == t
    assert reverse(G, r, t) == list(cert.coloring)
    # connected: windows cover 1..t without gaps
    covered = set()
    for lo, hi in cert.windows:
        covered.update(range(lo, hi + 1))
    assert covered == set(range(1, t + 1))
