#!/usr/bin/env python3
# Runs the CLI over a fixed set of invocations and validates every JSON
# document (or JSON-lines record) against docs/schemas/cli.json.
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

FAMILY = '{"n":3,"sets":[[1,2],[1,2,3]]}'

RUNS = [
    ["construct", "--named", "pitman_stanley", "--n", "3"],
    ["construct", "--building-set", '{"n":3,"blocks":[[1],[2],[3],[1,2],[1,2,3]]}'],
    ["construct", "--y", '{"n":3,"y":{"1,2":2,"1,2,3":1}}'],
    ["construct", "--graph", '{"n":3,"edges":[[1,2],[2,3]]}'],
    ["points", "--family", FAMILY, "--dilate", "1"],
    ["points", "--family", FAMILY, "--dilate", "2", "--multiset"],
    ["gb", "--named", "pitman_stanley", "--n", "3", "--method", "both"],
    ["gb", "--named", "associahedron", "--n", "3", "--method", "elimination",
     "--ring", "multiset", "--order", "lex"],
    ["gb", "--family", FAMILY, "--method", "shibuta"],
    ["verify", "all", "--named", "permutohedron", "--n", "3"],
    ["verify", "all", "--named", "permutohedron", "--n", "3", "--with-basis",
     "--timings"],
    ["verify", "idp", "--family", FAMILY, "--k-max", "4"],
    ["verify", "prop63", "--family", FAMILY],
    ["verify", "squarefree", "--named", "associahedron", "--n", "3"],
    ["verify", "all", "--batch", "4", "--seed", "11"],
]


def documents(text):
    text = text.strip()
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    resources = []
    for path in sorted(schema_dir.glob("*.json")):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)
    cli = json.loads((schema_dir / "cli.json").read_text())
    Draft202012Validator.check_schema(cli)
    validator = Draft202012Validator(cli, registry=registry)

    failures = 0
    for args in RUNS:
        out = subprocess.run([binary, *args], capture_output=True, text=True)
        if out.returncode != 0:
            print(f"FAIL exit {out.returncode}: {' '.join(args)}\n{out.stderr}")
            failures += 1
            continue
        # Wall-clock timings are the one field allowed to vary.
        again = subprocess.run([binary, *args], capture_output=True, text=True)
        if "--timings" not in args and again.stdout != out.stdout:
            print(f"FAIL output differs between runs: {' '.join(args)}")
            failures += 1
        for doc in documents(out.stdout):
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            for e in errors[:3]:
                print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message[:200]}")
            failures += bool(errors)
    print(f"{len(RUNS)} invocations, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
