"""Runs the CLI in JSON mode and validates each report against the schema."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
validator = jsonschema.Draft202012Validator(schema)
defs = schema["$defs"]

runs = [
    (["table1"], 0),
    (["fixed-loci", "--family", "b", "--specialize", "b1*b2*b3=1"], 0),
    (["fixed-loci", "--family", "nu"], 0),
    (["singularities", "--family", "b"], 0),
    (["freeness", "--group", "G2"], 0),
    (["bad-sets"], 0),
    (["invariants"], 0),
    (["bloch", "--group", "G3"], 0),
    (["bloch", "--group", "G1", "--mode", "strict"], 1),
    (["oracle", "--triples", "1", "--level", "4"], 0),
    (["fixed-loci", "--family", "b", "--specialize", "x9=1"], 2),
]


def sub(name):
    return jsonschema.Draft202012Validator({"$defs": defs, "$ref": f"#/$defs/{name}"})


failed = 0
for args, want in runs:
    p = subprocess.run([exe, "--format", "json", *args], capture_output=True, text=True)
    label = " ".join(args)
    if p.returncode != want:
        print(f"FAIL {label}: exit {p.returncode}, expected {want}")
        failed += 1
        continue
    doc = json.loads(p.stdout)
    errors = list(validator.iter_errors(doc))
    if args[0] == "fixed-loci" and "result" in doc:
        for row in doc["result"]["rows"]:
            errors += list(sub("locus").iter_errors(row["locus"]))
    if args[0] == "singularities":
        for fam in doc["result"]["families"]:
            for bv in fam["bad"]:
                errors += list(sub("bad_value").iter_errors(bv))
    if args[0] == "bloch":
        for r in doc["result"]["results"]:
            for i in r["inputs"]:
                errors += list(sub("verdict").iter_errors(i["strict"]))
                errors += list(sub("verdict").iter_errors(i["as_claimed"]))
    again = subprocess.run([exe, "--format", "json", *args], capture_output=True, text=True)
    if again.stdout != p.stdout:
        errors.append("output differs between runs")
    if errors:
        print(f"FAIL {label}: {errors[0]}")
        failed += 1
    else:
        print(f"ok   {label}")
sys.exit(1 if failed else 0)
