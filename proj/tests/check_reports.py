"""Golden gallery reports, schema validation and exit codes of the real binary."""

import json
import pathlib
import subprocess
import sys

import jsonschema

binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((root / "schemas" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)
fixtures = root / "fixtures"
failures = []


def run(*args):
    return subprocess.run([binary, *args], capture_output=True, text=True)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def valid(text, what):
    try:
        validator.validate(json.loads(text))
        check(True, what + " matches schema")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(False, f"{what} matches schema: {e}")


cases = [line.split()[0] for line in run("gallery", "--list").stdout.splitlines() if line.strip()]
check(len(cases) == 6, "six gallery cases")
for case in cases:
    r = run("gallery", case, "--json")
    check(r.returncode == 0, f"{case}: exit 0")
    golden = root / "tests" / "golden" / f"{case}.json"
    check(golden.exists() and r.stdout == golden.read_text(), f"{case}: equals golden file")
    valid(r.stdout, case)

f = lambda name: str(fixtures / f"{name}.json")
checks = [
    ["check", "even-rank", "--algebra", f("torus6"), "--classes", f("torus6_classes"), "-l", "1"],
    ["check", "lefschetz", "--algebra", f("torus6"), "--omega", f("torus6_omega")],
    ["check", "hr-check", "--algebra", f("torus6"), "--omega", f("torus6_omega"), "--hodge", f("torus_hodge")],
    ["check", "signature", "--algebra", f("k3")],
    ["check", "component", "--algebra", f("blowup_torus_n3"), "--subspace", f("blowup_torus_n3_mu1"), "--z-power", "4"],
    ["check", "tensor-split", "--algebra", f("p2_x_elliptic"), "--omega", f("p2_x_elliptic_omega")],
    ["check", "projbundle-transfer", "--algebra", f("projbundle_t4_c2")],
    ["check", "half-subspace", "--algebra", f("torus6"), "--hodge", f("torus_hodge")],
    ["validate", f("broken_duality")],
]
for args in checks:
    r = run(*args, "--json")
    check(r.returncode == 0, " ".join(args[:2]) + ": exit 0")
    valid(r.stdout, " ".join(args[:2]))

even = ["check", "even-rank", "--algebra", f("torus6"), "--classes", f("torus6_classes"), "-l", "1"]
check(run(*even, "--expect", "obstructed").returncode == 0, "--expect obstructed holds: exit 0")
check(run(*even, "--expect", "clear").returncode == 1, "--expect clear violated: exit 1")
check(run("validate", f("missing")).returncode == 2, "missing file: exit 2")
check(run("check", "nope").returncode == 2, "unknown check: exit 2")
check(run("gallery", "nope").returncode == 2, "unknown case: exit 2")
r = run("gallery", "fibered-projector", "--skip-heavy", "--json", "--expect", "clear")
check(r.returncode == 0 and json.loads(r.stdout)["certificates"]["P_wedge_P"] == "SKIPPED", "--skip-heavy marks SKIPPED")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
