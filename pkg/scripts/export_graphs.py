#!/usr/bin/env python3
"""Regenerate the sample .graph files in graphs/ from the corpus builders."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from coxgraph.corpus import corpus
from coxgraph.graphs import graph_text


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "graphs"
    out_dir.mkdir(exist_ok=True)
    for name, g in corpus().items():
        path = out_dir / f"{name}.graph"
        path.write_text(graph_text(g), encoding="utf-8")
        print(f"wrote {path} ({g.n} vertices, {len(g.edges)} edges)")


if __name__ == "__main__":
    main()
