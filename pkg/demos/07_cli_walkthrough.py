"""The command-line front end driven from Python (same as ``wittkit ...`` in a shell).

Run: python3 demos/07_cli_walkthrough.py
"""

import os
import tempfile

from wittkit.cli import main

d = tempfile.mkdtemp()


def write(name, text):
    path = os.path.join(d, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


ring = write("sphere.ring", "vars: x y z\norder: grevlex\nrel: x^2 + y^2 + z^2 - 1\n")
row = write("row.txt", "v: x, y, z\n")
rowsec = write("rowsec.txt", "v: x, y, z\nw: x, y, z\n")
psi2 = write("psi2.txt", "0, 1\n-1, 0\n")
wit = write("swap.txt", "level: 0\nrank: 4\nE 1 2 1\nE 2 1 -1\nE 1 2 1\n")

for argv in (
    ["unimodular", ring, row],
    ["vaserstein", ring, rowsec],
    ["complete3", ring, rowsec, "--tsv"],
    ["verify-witt", ring, psi2, psi2, wit],
    ["orbit", "--p", "2", "--n", "4", "--generators", "SE"],
):
    print("$ wittkit", " ".join(os.path.basename(a) for a in argv))
    code = main(argv)
    print(f"[exit {code}]\n")
