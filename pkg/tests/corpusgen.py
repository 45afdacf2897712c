"""Deterministic generator for a large synthetic Java project.

Used by the desk-scale performance check: emits a realistic tree of
packages/classes (fields, constructors, branching methods, cross-package
references, interfaces, and a few dependency cycles) sized to roughly
100k source lines.
"""

from __future__ import annotations

import random
from pathlib import Path

_METHOD_TEMPLATES = (
    """    public int crunch{idx}(int a, int b) {{
        int total = {seed};
        for (int i = 0; i < a; i++) {{
            if (i % 3 == 0 && i > b) {{
                total += i;
            }} else {{
                total -= 1;
            }}
        }}
        return total;
    }}
""",
    """    public int fold{idx}(int v) {{
        int r = v;
        while (r > {seed} || r < -{seed}) {{
            r = r / 2;
        }}
        return r;
    }}
""",
    """    public String label{idx}(int kind) {{
        switch (kind) {{
            case 0:
                return "zero{idx}";
            case 1:
                return "one{idx}";
            default:
                return "many{idx}";
        }}
    }}
""",
    """    public int guard{idx}(String text) {{
        try {{
            return Integer.parseInt(text.trim());
        }} catch (NumberFormatException e) {{
            return {seed};
        }}
    }}
""",
    """    public int pick{idx}(int a, int b) {{
        int hi = a > b ? a : b;
        if (hi > {seed}) {{
            hi = hi - {seed};
        }}
        return hi;
    }}
""",
    """    public void touch{idx}() {{
        this.state = this.state + {seed};
    }}
""",
)


def _class_text(rng: random.Random, package: str, name: str, peers: list[str]) -> str:
    lines = [f"package {package};", ""]
    peer_fields = []
    for i, peer in enumerate(sorted(set(peers))):
        lines.append(f"import {peer};")
        peer_fields.append((peer.rpartition(".")[2], f"peer{i}"))
    if peer_fields:
        lines.append("")
    lines.append(f"public class {name} {{")
    lines.append("    private int state;")
    lines.append("    private String tag;")
    for type_name, field_name in peer_fields:
        lines.append(f"    private {type_name} {field_name};")
    lines.append("")
    lines.append(f"    public {name}(int seed) {{")
    lines.append("        this.state = seed;")
    lines.append(f"        this.tag = \"{name}\";")
    lines.append("    }")
    lines.append("")
    body = []
    for idx in range(rng.randint(8, 11)):
        template = rng.choice(_METHOD_TEMPLATES)
        body.append(template.format(idx=idx, seed=rng.randint(1, 97)))
    lines.append("\n".join(body))
    lines.append("}")
    return "\n".join(lines) + "\n"


def generate_project(root: Path, packages: int = 40, classes_per_package: int = 30,
                     seed: int = 1234) -> int:
    """Write the synthetic project under ``root``; returns physical lines."""
    rng = random.Random(seed)
    package_names = [f"com.example.mod{p:02d}" for p in range(packages)]
    all_classes = {
        pkg: [f"Widget{p:02d}x{c:02d}" for c in range(classes_per_package)]
        for p, pkg in enumerate(package_names)
    }
    total_lines = 0
    for p, pkg in enumerate(package_names):
        pkg_dir = root.joinpath(*pkg.split("."))
        pkg_dir.mkdir(parents=True, exist_ok=True)
        for c, cls in enumerate(all_classes[pkg]):
            peers = []
            for _ in range(rng.randint(0, 3)):
                op = rng.randrange(packages)
                oc = rng.randrange(classes_per_package)
                if package_names[op] != pkg:
                    peers.append(f"{package_names[op]}.{all_classes[package_names[op]][oc]}")
            # a couple of deliberate cycles between neighbouring packages
            if c == 0 and p % 6 == 0 and p + 1 < packages:
                peers.append(f"{package_names[p + 1]}.{all_classes[package_names[p + 1]][0]}")
            if c == 0 and p % 6 == 1:
                peers.append(f"{package_names[p - 1]}.{all_classes[package_names[p - 1]][0]}")
            text = _class_text(rng, pkg, cls, peers)
            (pkg_dir / f"{cls}.java").write_text(text, encoding="utf-8")
            total_lines += text.count("\n")
    return total_lines
