#!/usr/bin/env python3
"""Validate JSON fixture inputs and expected outputs against docs/schemas."""
import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(__file__).resolve().parent
fixtures = root.parent / "fixtures"
schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in root.glob("*.schema.json")}

failures = 0
checked = 0


def check(doc, schema, label):
    global failures, checked
    checked += 1
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        failures += 1
        print(f"{label}: {e.message}")


for path in sorted(fixtures.glob("*.json")):
    if path.name.startswith("bad_") or path.name.startswith("basis_"):
        continue
    check(json.loads(path.read_text()), schemas["field"], path.name)

for path in sorted((fixtures / "expected").glob("*.out")):
    text = path.read_text()
    if not text.lstrip().startswith("{"):
        continue
    doc = json.loads(text)
    kind = "error" if "error" in doc else doc.get("verb")
    if kind not in schemas:
        failures += 1
        print(f"{path.name}: no schema for '{kind}'")
        continue
    check(doc, schemas[kind], path.name)

print(f"{checked} documents checked, {failures} failures")
sys.exit(1 if failures else 0)
