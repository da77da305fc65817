#!/usr/bin/env python3
"""Regenerate the pinned benchmark suite.

Writes the 60 golden instance files under data/instances/ and rewrites the
SUITE_SHA256 manifest in src/cellpack/benchmark.py.  The suite is a pure
function of the pinned generator, so rerunning this script must be a no-op
unless the generator itself changed.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from cellpack.benchmark import instance_digest, suite_filename, suite_instances  # noqa: E402
from cellpack.instgen import render_instance_text  # noqa: E402


def main() -> int:
    out_dir = REPO / "data" / "instances"
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest: dict[str, str] = {}
    for n, seed, inst in suite_instances():
        name = suite_filename(n, seed)
        (out_dir / name).write_text(render_instance_text(inst), encoding="ascii")
        manifest[name] = instance_digest(inst)

    lines = "\n".join(f'    "{k}": "{v}",' for k, v in manifest.items())
    block = (
        "# Filled in by scripts/regenerate_suite.py; do not edit by hand.\n"
        "SUITE_SHA256: dict[str, str] = {\n" + lines + "\n}\n"
    )
    module = REPO / "src" / "cellpack" / "benchmark.py"
    text = module.read_text(encoding="utf-8")
    new = re.sub(
        r"# Filled in by scripts/regenerate_suite\.py; do not edit by hand\.\n"
        r"SUITE_SHA256: dict\[str, str\] = \{[^}]*\}\n",
        block,
        text,
        count=1,
    )
    if new == text and "SUITE_SHA256: dict[str, str] = {}" in text:
        raise SystemExit("failed to splice the manifest into benchmark.py")
    module.write_text(new, encoding="utf-8")
    print(f"wrote {len(manifest)} instances to {out_dir} and pinned their digests")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
