"""Regenerate the CLI golden files: ``python tests/make_golden.py``."""

import io
from pathlib import Path

from realgrass.cli import main

GOLDEN = Path(__file__).parent / "golden"
SHAPES = [(2, 5), (3, 6), (1, 4)]


def golden_commands():
    for k, n in SHAPES:
        yield f"cohomology_{k}_{n}.json", ["cohomology", str(k), str(n)]
        yield f"homology_{k}_{n}.json", ["cohomology", str(k), str(n), "--homology"]
        yield f"graph_{k}_{n}.json", ["graph", str(k), str(n)]
        yield f"graph_{k}_{n}.dot", ["graph", str(k), str(n), "--format", "dot"]
        yield f"poly_{k}_{n}.json", ["poly", str(k), str(n)]


def render(argv):
    buf = io.StringIO()
    if main(argv, out=buf) != 0:
        raise SystemExit(f"command failed: {argv}")
    return buf.getvalue().encode("utf-8")


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in golden_commands():
        (GOLDEN / name).write_bytes(render(argv))
        print(name)
