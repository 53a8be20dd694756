"""Every narrative script in demos/ runs and reports only successes."""

import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.stem)
def test_demo_runs(script):
    out = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=120, check=False)
    assert out.returncode == 0, out.stderr
    answers = [line.rsplit(":", 1)[1].strip() for line in out.stdout.splitlines() if line.endswith(("True", "False"))]
    assert answers and "False" not in answers


def test_demos_present():
    assert {p.stem for p in DEMOS} >= {"derivation_pipeline", "canonical_bialgebra", "broken_inputs"}
