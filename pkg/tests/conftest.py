"""Shared fixtures: frozen reference values and a subprocess CLI runner.

The numbers in FROZEN were produced by an independent straight-from-the-
formulas prototype (plain bisection at 1e-14, closed-form areas) before
this package was written; tests compare against them, never against the
package's own output.
"""

from __future__ import annotations

import pathlib
import subprocess
import sys

import pytest

from crosssec.geometry import FabricationParams
from crosssec.solver import forward_geometry

REPO = pathlib.Path(__file__).resolve().parent.parent

# Three reference builds sharing one membrane perimeter (558 mm):
# fab = (S_c, S_s, L) in mm; areas in mm^2; angles in rad.
FROZEN = {
    "S1": dict(
        fab=(152.0, 127.0, 76.2),
        theta_c=2.057737772688636, theta_s=3.3200696265292406,
        H_c=147.73505353055467, H_s=76.50441965746617,
        w=209.88950273836156, w_c=126.56700218333302,
        A_c=16050.06685150713, A_s=2558.899765223114,
        total=21167.866381953358, ergo=1.8725803187228036,
    ),
    "S2": dict(
        fab=(152.0, 127.0, 50.8),
        theta_c=2.338605970671078, theta_s=4.250690382774937,
        H_c=129.99197120529254, H_s=59.75499910068342,
        w=210.87438696640507, w_c=119.65480591199673,
        A_c=12918.621881766952, A_s=2296.8214122590057,
        total=17512.264706284965, ergo=2.1515646722448163,
    ),
    "S3": dict(
        fab=(127.0, 152.0, 76.2),
        theta_c=1.916503796935981, theta_s=3.7848972214397856,
        H_c=132.53300119002301, H_s=80.319221953498,
        w=214.1477795041974, w_c=108.4368775114567,
        A_c=12547.29060875297, A_s=3535.841938980497,
        total=19618.974486713963, ergo=2.5630888916212085,
    ),
}

# Closed-form inverse of the spec (H_c, H_s, w) = (101.6, 50.8, 190).
INVERSE_190_SPEC = (101.6, 50.8, 190.0)
INVERSE_190_FAB = (130.30793710385646, 128.8734550018467, 28.88114636469403)


def rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def run_cli(*args, cwd=None):
    """Run the CLI in a fresh interpreter; returns CompletedProcess."""
    return subprocess.run(
        [sys.executable, "-m", "crosssec.cli", *[str(a) for a in args]],
        capture_output=True, text=True, cwd=cwd or REPO)


@pytest.fixture(scope="session")
def s1_section():
    return forward_geometry(FabricationParams(*FROZEN["S1"]["fab"]))


@pytest.fixture(scope="session")
def s3_section():
    return forward_geometry(FabricationParams(*FROZEN["S3"]["fab"]))
