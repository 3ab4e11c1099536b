"""Custom Cartan matrices, JSON input, and the command line.

Any square integer matrix with 2 on the diagonal, non-positive entries
off it and a symmetric zero pattern is accepted as long as some positive
diagonal symmetrizes it; the minimal such diagonal is computed for you.

Run:  python3 demos/05_custom_cartan_and_cli.py
"""

import json
import subprocess
import sys
import tempfile

from klrdim import (
    Weight,
    algebra_dim,
    graded_dim,
    validate_cartan,
)
from klrdim.errors import NotSymmetrizable

# An asymmetric but symmetrizable matrix: the edge ratios force d = (1, 2).
c = validate_cartan([[2, -2], [-1, 2]])
print("matrix:", c.matrix)
print("minimal symmetrizer:", c.symmetrizer)

lam = Weight((1, 1))
print("size-2 algebra dimension:", algebra_dim(c, lam, 2))
print("e(0,1) R e(0,1):", graded_dim(c, lam, (0, 1), (0, 1)))

# Ratio inconsistency around a cycle means no symmetrizer exists.
try:
    validate_cartan([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]])
except NotSymmetrizable as exc:
    print("rejected:", exc)

print()

# The same computations through the CLI.  A Cartan matrix travels as JSON
# with optional node labels; builtin names like A2, C3~, A4^2 also work.
doc = {"matrix": [[2, -2], [-1, 2]], "labels": [1, 2]}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    json.dump(doc, fh)
    path = fh.name

for argv in (
    ["gdim", "--cartan", path, "--weight", "1,1", "--nu", "1,2"],
    ["block", "--cartan", "A1~", "--weight", "1,2", "--beta", "0,2"],
    ["nonzero", "--cartan", "A2", "--weight", "1,1", "--nu", "1,2",
     "--method", "shuffle", "--format", "json"],
    ["verify", "--cartan", "A2", "--weight", "1,1", "--suite", "oracle",
     "--max-n", "3"],
):
    out = subprocess.run(
        [sys.executable, "-m", "klrdim.cli", *argv],
        capture_output=True, text=True, check=True,
    )
    print(f"$ klrdim {' '.join(argv)}")
    print(out.stdout.rstrip())
    print()
