"""Smoke tests for the Python bindings."""
import json
from fractions import Fraction

import _cg3


def test_decompose_fundamentals():
    labels = _cg3.decompose([1, 0], [1, 0])
    assert len(labels) == 2
    weights = sorted(tuple(l["weight"]) for l in labels)
    assert weights == [(1, 1, 0), (2, 0, 0)]


def test_cg_verified():
    out = _cg3.cg([1, 0], [1, 0], [1, 1, 0, 0, 0], [0, 0, 0])
    assert out["verified"] is True
    coeffs = sorted(t["coefficient"] for t in out["terms"])
    assert coeffs == [Fraction(-1), Fraction(1)]


def test_gamma_eval():
    assert _cg3.gamma_eval_at_one(1, 1, 1, 0) == Fraction(3, 2)
    assert _cg3.gamma_eval_at_one(2, 1, 0, 0) == Fraction(1, 2)


def test_cli_round_trip():
    rc, out, err = _cg3.run_command(["table", "--w1", "1,0", "--w2", "1,1"])
    assert rc == 0, err
    parsed = json.loads(out)
    assert {tuple(r["label"]) for r in parsed["rows"]} == {
        (1, 0, 0, 0, 0), (1, 0, 0, 1, 0)}
    for row in parsed["rows"]:
        for t in row["terms"]:
            assert int(t["coefficient"]["den"]) != 0


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("smoke tests passed")
