import pytest

from conftest import K4_FOUR
from intervalspan import families as fam
from intervalspan.coloring import make_certificate, verify_certificate
from intervalspan.formats import (
    FormatError,
    dumps_certificate,
    loads_certificate,
    read_certificate,
    to_dot,
    write_certificate,
)
from intervalspan.solver import solve

K4 = fam.k4()


def test_certificate_text_is_bit_exact():
    text = dumps_certificate(make_certificate(K4, K4_FOUR))
    assert text == (
        "p icert 4 6 4\n"
        "k 0 1\nk 1 2\nk 2 3\nk 3 3\nk 4 2\nk 5 4\n"
        "w 0 1 3\nw 1 1 3\nw 2 2 4\nw 3 2 4\n"
    )


def test_certificate_round_trip_for_every_solver_output(tmp_path):
    for G in (fam.prism(4), fam.digon_necklace(3), fam.ring_of_diamonds(2), fam.complete_bipartite(3, 3)):
        for t, cert in solve(G).certificates.items():
            path = tmp_path / f"c{t}.cert"
            write_certificate(path, cert)
            back = read_certificate(path, G)
            assert back == cert and verify_certificate(back)[0]


def test_loaded_bad_certificate_fails_verification():
    text = dumps_certificate(make_certificate(K4, K4_FOUR)).replace("k 5 4", "k 5 3")
    ok, diag = verify_certificate(loads_certificate(text, K4))
    assert not ok and diag


@pytest.mark.parametrize(
    "text",
    [
        "p icert 4 6\n",
        "p icert 5 6 4\n",
        "p icert 4 6 4\nk 0 1\n",
        "p icert 4 6 4\nk 0 1\nk 0 1\n",
        "p icert 4 6 4\nz 1 2\n",
        "p icert 4 6 4\nk 9 1\n",
    ],
)
def test_certificate_parse_errors(text):
    with pytest.raises(FormatError):
        loads_certificate(text, K4)


def test_dot_export():
    dot = to_dot(K4, K4_FOUR)
    assert dot.startswith("graph G {\n") and dot.endswith("}\n")
    assert '  2 -- 3 [label="4"];' in dot
    assert "label" not in to_dot(K4)
