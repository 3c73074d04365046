"""Validates the tool's JSON output against the shipped schemas and checks it is byte-stable."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("validate", ["validate", "(7,0;(1,7),(2,7),(4,7))"], 0),
    ("validate", ["validate", "(4,0;(1,2),(1,4))"], 2),
    ("validate", ["validate", "(2,0;(1,2)_4)"], 0),
    ("enumerate", ["enumerate", "2"], 0),
    ("enumerate", ["enumerate", "4", "--jobs", "3"], 0),
    ("classify", ["classify", "(8,0;(1,4),(1,8),(5,8))"], 0),
    ("classify", ["classify", "(7,0;(5,7),(1,7),(1,7))"], 0),
    ("table1", ["table1"], 0),
    ("verify", ["verify"], 0),
    ("presentation", ["present", "mod", "4"], 0),
    ("presentation", ["present", "pmod", "4", "--simplify"], 0),
    ("presentation", ["present", "lmod", "(6,0;(1,2),(1,2),(1,3),(2,3))"], 0),
    ("presentation", ["present", "normalizer", "(6,0;(1,2),(1,2),(1,3),(2,3))"], 0),
    ("presentation", ["present", "centralizer", "(6,0;(1,3),(2,3),(1,6),(5,6))"], 0),
    ("analysis", ["analyze", "(6,0;(1,2),(1,2),(1,3),(2,3))"], 0),
    ("analysis", ["analyze", "(7,0;(1,7),(2,7),(4,7))"], 0),
    ("analysis", ["analyze", "(2,0;(1,2)_6)"], 0),
    ("analysis", ["analyze", "(8,0;(1,4),(3,4),(1,8),(7,8))"], 0),
    ("analysis", ["analyze", "(3,0;(1,3),(2,3),(1,3),(2,3))"], 0),
]


def run(tool, args):
    proc = subprocess.run([tool, *args, "--format", "json"], capture_output=True, timeout=120)
    return proc.returncode, proc.stdout


def main():
    tool, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.stem: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
    failures = 0
    for name, args, code in CASES:
        rc, out = run(tool, args)
        rc2, out2 = run(tool, args)
        problems = []
        if rc != code:
            problems.append(f"exit {rc}, expected {code}")
        if out != out2 or rc != rc2:
            problems.append("output differs between runs")
        try:
            jsonschema.validate(json.loads(out), schemas[name])
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            problems.append(f"schema {name}: {str(e).splitlines()[0]}")
        status = "ok" if not problems else "FAILED " + "; ".join(problems)
        print(f"{' '.join(args)}: {status}")
        failures += bool(problems)
    for name, schema in schemas.items():
        jsonschema.Draft202012Validator.check_schema(schema)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
