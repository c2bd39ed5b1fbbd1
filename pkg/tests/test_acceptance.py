"""Acceptance criteria 1-9, one group of tests per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import random
import time
from dataclasses import replace

import pytest
from hypothesis import given, settings

from d5roof.bott import bott, bott_oracle_batch
from d5roof.bundles import O, U_PLUS, V, Dual, Twist
from d5roof.chessboard import replay
from d5roof.cli import main, resolve_script_path
from d5roof.cy_pairs import commutant_transpose, dimension_count, hoppe_check, kleiman_suite, unique_section_check
from d5roof.ext import MODES, ext_divisor
from d5roof.script import format_script, parse_script
from d5roof.sequences import LEMMAS, contested_u_dual_twist, run_lemma
from d5roof.weights import fundamental, weyl_dim
from test_script import scripts


def c(n, title):
    return pytest.mark.criterion(n, title)


@c(1, "bott agrees with the Weyl-group oracle")
def test_c1_oracle_equivalence():
    rng = random.Random(2024)
    lams = [tuple(rng.randint(-8, 8) for _ in range(5)) for _ in range(10_000)]
    t0 = time.perf_counter()
    fast = [bott(lam) for lam in lams]
    slow = bott_oracle_batch(lams)
    elapsed = time.perf_counter() - t0
    assert fast == slow
    assert elapsed < 60


@c(2, "representation dimensions")
def test_c2_dimensions():
    assert weyl_dim(fundamental(1)) == 10
    assert weyl_dim(fundamental(4)) == 16
    assert weyl_dim(fundamental(2)) == 45
    assert weyl_dim((0, 0, 0, 1, 1)) == 210


@c(3, "vanishing lemma suites")
def test_c3_lemmas():
    t0 = time.perf_counter()
    results = [run_lemma(name) for name in LEMMAS]
    elapsed = time.perf_counter() - t0
    for res in results:
        assert res.ok, res.failures
    labels = {lab for res in results for lab, _ in res.rows}
    for a, b in [(-6, 1), (-5, 1), (-4, 1), (-5, 2)]:
        assert f"O({a},{b})" in labels
    assert "U+^vee(-2,0)" in labels
    assert len(dict(results[2].rows)) == 12 and len(dict(results[3].rows)) == 6
    assert elapsed < 30


@c(4, "non-vanishing Ext anchors")
@pytest.mark.parametrize("mode", MODES)
def test_c4_anchors(mode):
    assert ext_divisor(Twist(U_PLUS, 1, -1), O, mode).concentrated() == (0, 1)
    # the extension O(2,-2) by V(1,-1) defines U-(1,-1): Ext^1 from O(2,-2) to V(1,-1)
    assert ext_divisor(Twist(O, 2, -2), Twist(V, 1, -1), mode).concentrated() == (1, 1)


@c(4, "non-vanishing Ext anchors")
def test_c4_contested_twist_is_flagged(capsys):
    table, matches = contested_u_dual_twist()
    assert table.as_dict() == {0: 1} and not matches
    assert ext_divisor(Twist(U_PLUS, 1, -1), O).as_dict() == {0: table.as_dict()[0]}
    assert main(["lemma", "ext_U_O"]) == 0
    assert "FLAG" in capsys.readouterr().out


def _check_replay(rep):
    assert rep.ok, rep.error
    assert all(cert.status == "pass" for _, cert in rep.records)
    assert rep.lattice_invariant and set(rep.lattice_ranks) == {64}
    assert len(rep.final) == 64
    assert rep.target_ok, rep.target_message


@c(5, "script replay")
def test_c5_flop(flop_report):
    _check_replay(flop_report)
    labels = {lab.split(" C(")[0].split(" B(")[0] for lab, _ in flop_report.records}
    assert labels == {"stage 1", "stage 2", "stage 3", "stage 4", "stage 4.1", "stage 4.2", "stage 4.3",
                      "stage 4.4", "stage 4.5", "stage 4.6", "stage 5.1", "stage 5.2", "stage 5.3"}


@c(5, "script replay")
def test_c5_cayley(flop_report, cayley_report, flop_script, cayley_script):
    _check_replay(cayley_report)
    assert cayley_script.mode == "cayley"
    assert cayley_script.steps == flop_script.steps
    sig = lambda rep: [(lab, cert.kind, cert.status, len(cert.pairs)) for lab, cert in rep.records]  # noqa: E731
    assert sig(cayley_report) == sig(flop_report)


@c(5, "script replay")
def test_c5_cli_exit_codes(capsys):
    assert main(["verify", "d5_flop.script"]) == 0
    assert main(["verify", "d5_cayley.script"]) == 0
    capsys.readouterr()


@c(6, "Kleiman suite")
def test_c6_kleiman():
    t0 = time.perf_counter()
    samples = kleiman_suite(samples=20, seed=0)
    ident = commutant_transpose([[int(i == j) for j in range(16)] for i in range(16)])
    elapsed = time.perf_counter() - t0
    assert len(samples) == 20
    assert all(s.generic and s.dimension == 16 and s.symmetric for s in samples)
    assert ident.dimension == 256
    assert elapsed < 120


@c(7, "dimension count")
def test_c7_dimension_count():
    dc = dimension_count(16, 210, 45, printed_bound=174)
    assert dc.sym == 136 and dc.bound == 74 and dc.holds
    assert any("174" in note for note in dc.notes)


@c(8, "CY-side checks")
def test_c8_unique_section():
    rep = unique_section_check(range(1, 6))
    assert rep.ok
    assert {v.label for v in rep.verdicts} == {"k=1 End(U-)", "k=2", "k=3", "k=4", "k=5"}


@c(8, "CY-side checks")
@pytest.mark.xfail(
    strict=True,
    reason="literal Hoppe check fails at (k,l)=(4,0): wedge^4 U-^vee(-1) = U-(0,1) has H^0 = V16; "
    "the normalized-twist variant passes",
)
def test_c8_hoppe_literal():
    assert hoppe_check(range(1, 5), range(0, 6)).ok


@c(8, "CY-side checks")
def test_c8_hoppe_normalized():
    assert hoppe_check(range(1, 5), range(0, 6), normalized=True).ok


@c(9, "DSL robustness")
@pytest.mark.parametrize("name", ["d5_flop.script", "d5_cayley.script"])
def test_c9_shipped_round_trip(name):
    text = resolve_script_path(name).read_text(encoding="utf-8")
    s = parse_script(text)
    assert format_script(s) == text and parse_script(format_script(s)) == s


@c(9, "DSL robustness")
@settings(max_examples=100, derandomize=True)
@given(scripts)
def test_c9_fuzzed_round_trip(s):
    assert parse_script(format_script(s)) == s


@c(9, "DSL robustness")
def test_c9_corrupted_claim(flop_script, tmp_path, capsys):
    k = next(i for i, st in enumerate(flop_script.steps) if st.kind == "mutate_right")
    bad_step = flop_script.steps[k]
    bad_step = replace(bad_step, new=replace(bad_step.new, expr=Dual(U_PLUS)))
    bad = replace(flop_script, steps=flop_script.steps[:k] + (bad_step,) + flop_script.steps[k + 1 :])
    path = tmp_path / "corrupted.script"
    path.write_text(format_script(bad), encoding="utf-8")
    assert main(["verify", str(path)]) != 0
    out = capsys.readouterr().out
    failing = [ln for ln in out.splitlines() if ln.startswith("[fail]")]
    assert len(failing) == 1 and bad_step.label in failing[0] and "mutate_right" in failing[0]
    assert "expected" in failing[0]
    rep = replay(bad)
    assert not rep.ok and rep.records[-1][1].kclass_delta
