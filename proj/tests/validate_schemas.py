"""Validate motdt JSON outputs and shipped data files against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return schemas, Registry().with_resources(resources)


def main():
    motdt, root = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(root / "schemas")

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    failures = []

    def check(name, doc, label):
        errors = sorted(validator(name).iter_errors(doc), key=str)
        if errors:
            failures.append(f"{label}: {errors[0].message}")
        print(("ok    " if not errors else "FAIL  ") + label)

    def run(args):
        out = subprocess.run([str(motdt), *args], capture_output=True, text=True, check=False)
        if out.returncode != 0:
            failures.append(f"{' '.join(args)}: exit {out.returncode}: {out.stderr.strip()}")
            return None
        return json.loads(out.stdout)

    data = root / "data"
    for path in sorted(data.glob("zd_*.json")) + [data / "cusp_2_3.json"]:
        check("datum.schema.json", json.loads(path.read_text()), f"data/{path.name}")
    for path in sorted(data.glob("series_*.json")):
        check("series.schema.json", json.loads(path.read_text()), f"data/{path.name}")

    for w, order in [("t^3", "6"), ("t^4/4 - t^2/2", "6"), ("t^4/4 - 2*t^3/3 + t^2/2", "6"), ("t^3/3 - 2*t", "4")]:
        doc = run(["dt", "--potential", w, "--order", order, "--format", "json"])
        if doc is not None:
            check("dt_report.schema.json", doc, f"dt {w}")
    for name in ["zd_2.json", "zd_4.json", "cusp_2_3.json"]:
        doc = run(["resolution", "--file", str(data / name), "--format", "json"])
        if doc is not None:
            check("resolution_report.schema.json", doc, f"resolution {name}")
    for name in ["series_geometric.json", "series_mu3.json"]:
        doc = run(["sym", "--file", str(data / name), "--format", "json"])
        if doc is not None:
            check("series.schema.json", doc, f"sym {name}")
    doc = run(["verify", "--suite", "core", "--format", "json"])
    if doc is not None:
        check("verify_report.schema.json", doc, "verify core")

    # The schemas must reject what the readers reject.
    bad = {"dim": 1, "components": [{"id": 1, "m": 2, "nu": 1}], "x0": [[1, 0, 0]], "strata": []}
    if validator("datum.schema.json").is_valid(bad):
        failures.append("datum schema accepted a zero exponent denominator")
    if validator("series.schema.json").is_valid({"arity": 1, "order": 2, "coeffs": [], "extra": 1}):
        failures.append("series schema accepted an unknown field")

    for f in failures:
        print("FAIL  " + f)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
