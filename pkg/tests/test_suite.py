import pytest

from intervalspan.suite import THEOREM_IDS, run_theorem_suite, t20_instance


def test_summary_is_deterministic(tmp_path):
    ids = ["T10", "T16", "T17", "Kmn"]
    a = run_theorem_suite(ids, tmp_path / "a", max_n=8)
    b = run_theorem_suite(ids, tmp_path / "b", max_n=8)
    assert [c.line() for c in a] == [c.line() for c in b]
    assert (tmp_path / "a" / "summary.txt").read_bytes() == (tmp_path / "b" / "summary.txt").read_bytes()
    assert all(c.passed for c in a)


def test_summary_line_format(tmp_path):
    checks = run_theorem_suite(["Kmn"], tmp_path, max_n=8)
    for c in checks:
        line = c.line()
        assert line.startswith("id=Kmn instance=")
        assert " expected=" in line and " observed=" in line and line.endswith(("status=pass", "status=fail"))
    assert (tmp_path / "evidence" / "Kmn").is_dir()


def test_t20_instances_are_seeded():
    assert t20_instance(5).edges == t20_instance(5).edges


@pytest.mark.slow
def test_full_suite_passes(tmp_path):
    checks = run_theorem_suite(list(THEOREM_IDS), tmp_path, max_n=12)
    failed = [c.line() for c in checks if not c.passed]
    assert not failed, failed
    assert {c.id for c in checks} == set(THEOREM_IDS)
