"""Runs each subcommand once and validates its report against the schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

tmp = tempfile.mkdtemp()
col = os.path.join(tmp, "k4.col")
cache = os.path.join(tmp, "cache.jsonl")
star = os.path.join(tmp, "star.txt")
with open(star, "w") as f:
    f.write("n=6\n0 1\n0 2\n0 3\n0 4\n4 5\n")

runs = [
    (["construct", "--construct", "k4:n=6", "--format", "json", "--coloring-out", col], 0),
    (["check-coloring", "--coloring", col, "--pattern", "K4"], 0),
    (["find-coloring", "--construct", "p5:n=8"], 0),
    (["enumerate-colorings", "--construct", "k4:n=6", "--pattern", "P4"], 0),
    (["check-saturation", "--construct", "k4:n=8", "--jobs", "2"], 0),
    (["check-saturation", "--construct", "k4:n=8", "--cache", cache], 0),
    (["check-saturation", "--construct", "k4:n=8", "--cache", cache], 0),
    (["check-saturation", "--construct", "k4:n=9", "--budget-nodes", "3"], 3),
    (["check-saturation", "--graph", star, "--pattern", "P5"], 1),
    (["check-saturation", "--graph", star, "--pattern", "C5"], 1),
    (["rsat", "--n", "5", "--pattern", "K3"], 0),
    (["audit", "--construct", "k4:n=9"], 0),
    (["audit", "--clique-extension", "3", "--trials", "5"], 0),
    (["hypercube-unique", "--w", "4"], 0),
    (["tbfrc", "--w", "5"], 0),
    (["greedy-cycle", "--k", "7", "--n", "19", "--trials", "5"], 0),
    (["closed-form", "kr_upper_poly_slope(4)"], 0),
]

bad = 0
for args, want in runs:
    p = subprocess.run([cli] + args, capture_output=True, text=True)
    label = " ".join(args)
    try:
        report = json.loads(p.stdout)
    except json.JSONDecodeError:
        print(f"not json: {label}\n{p.stdout}{p.stderr}")
        bad += 1
        continue
    errors = list(validator.iter_errors(report))
    for e in errors:
        print(f"{label}: {e.json_path}: {e.message}")
    if p.returncode != want or report["exit_code"] != p.returncode:
        print(f"{label}: exit {p.returncode}, report says {report['exit_code']}, want {want}")
        bad += 1
    bad += bool(errors)
    print(f"{'ok  ' if not errors else 'FAIL'} {label}")

sys.exit(1 if bad else 0)
