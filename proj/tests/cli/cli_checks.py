#!/usr/bin/env python3
"""End-to-end checks for the command line tool.

Usage: cli_checks.py /path/to/domgame
"""

import json
import subprocess
import sys

CLI = sys.argv[1]
failures = 0


def run(args, stdin=None, expect_code=0):
    global failures
    proc = subprocess.run(
        [CLI] + args, input=stdin, capture_output=True, text=True, timeout=600
    )
    if proc.returncode != expect_code:
        failures += 1
        print(
            f"FAIL {' '.join(args)}: exit {proc.returncode} != {expect_code}\n"
            f"  stdout: {proc.stdout!r}\n  stderr: {proc.stderr!r}"
        )
    return proc


def expect(cond, label):
    global failures
    if not cond:
        failures += 1
        print(f"FAIL {label}")


# solve: paper values for P4 (total game) and P5 (dominator-start game).
out = run(["solve", "--name", "P4", "--variant", "total", "--mover", "d"]).stdout
expect("total game value (Dominator starts) = 3" in out, "solve P4 total value")
expect("gamma_t = 2" in out, "solve P4 gamma_t")

out = run(["solve", "--name", "P5", "--variant", "dom", "--mover", "d"]).stdout
expect("gamma = 2" in out, "solve P5 gamma")
expect("game value (Dominator starts) = 3" in out, "solve P5 value")

out = run(["solve", "--name", "K5", "--variant", "dom", "--mover", "d"]).stdout
expect("game value (Dominator starts) = 1" in out, "solve K5 value")

# solve --json round-trips and a stdin-supplied graph works.
proc = run(["--json", "solve", "--stdin"], stdin="Ch\n")
payload = json.loads(proc.stdout)
expect(payload["gamma"] == 2 and payload["game_value"] == 2, "solve P4 json values")
expect(json.loads(json.dumps(payload)) == payload, "solve json round-trip")

# classify: co-domino is minimally imperfect; kc(3,2) is perfect with a
# replayable certificate; K1 is perfect everywhere applicable.
out = run(["classify", "--name", "co-domino"]).stdout
expect("minimally imperfect: yes" in out, "classify co-domino")
expect("gg-perfect: no" in out, "classify co-domino verdict")

proc = run(["--json", "classify", "--certificate", "--edges", "7; 0 2; 0 3; 0 4; 1 2; 1 3; 1 4; 0 5; 0 6"])
report = json.loads(proc.stdout)
expect(report["gg_perfect"] is True, "classify kc(3,2) perfect")
expect(isinstance(report.get("script"), list) and report["script"][0]["op"] == "start", "certificate emitted")

out = run(["classify", "--graph6", "@"]).stdout
expect("gg-perfect: yes" in out, "classify K1")
expect("n/a" in out, "classify K1 total n/a")

# classify --oracle agrees on a small graph.
run(["classify", "--oracle", "--name", "C5"])

# contract: a triangle contracts to a single vertex.
out = run(["contract", "--name", "K3"]).stdout
expect(out.splitlines()[0] == "@", "contract K3 -> K1")

# build: replay a script from stdin; graph6 of P3 u K1 plus universal vertex.
out = run(["build"], stdin="start\nunion 2\nextend 1\n").stdout.strip()
expect(out != "", "build emits graph6")
iso = run(["iso", out, out])
expect("isomorphic" in iso.stdout, "build output parses")

# check-psc verdicts.
out = run(["check-psc", "--name", "P4", "--family", "0;3"]).stdout
expect(out.strip() == "PSC", "P4 end pair is a PSC")
out = run(["check-psc", "--name", "P5", "--family", "0;4"], expect_code=1).stdout
expect("distance" in out, "P5 end pair violates distance")

# enumerate: 11 graphs on four vertices.
out = run(["enumerate", "--n", "4"]).stdout
expect(len(out.strip().splitlines()) == 11, "enumerate n=4")

# table1 --check on builtin streams, and the trivial n=1 row.
out = run(["table1", "--n", "6", "--check"]).stdout
expect(out.strip() == "6\t122\t81\t8", "table1 n=6 row")
out = run(["table1", "--n", "1"]).stdout
expect(out.strip() == "1\t1\t1\t0", "table1 n=1 row")

# hunt-imperfect: exactly P5 and C5 (the 5-antihole) on five vertices.
out = run(["hunt-imperfect", "--n", "5"]).stdout
lines = out.strip().splitlines()
expect(len(lines) == 2, "hunt-imperfect n=5 count")
expect({line.split("\t")[1] for line in lines} == {"P5", "antihole(5)"}, "hunt-imperfect names")

# identical output independently of the worker count.
seq = run(["table1", "--n", "6", "--jobs", "1"]).stdout
par = run(["table1", "--n", "6", "--jobs", "4"]).stdout
expect(seq == par, "table1 output independent of --jobs")
seq = run(["hunt-imperfect", "--n", "6", "--jobs", "1"]).stdout
par = run(["hunt-imperfect", "--n", "6", "--jobs", "3"]).stdout
expect(seq == par, "hunt-imperfect output independent of --jobs")

# iso: C5 is self-complementary; the 4-star is not C5.
run(["iso", "Dhc", "DUW"])  # C5 and its complement
bad = run(["iso", "Dhc", "D?{"], expect_code=1)
expect("not isomorphic" in bad.stdout, "iso distinguishes")

# errors: malformed input, total game on isolated vertices, size guard.
K26 = "Y" + "~" * 54 + "_"
run(["solve", "--graph6", "not-a-line!"], expect_code=2)
run(["solve", "--edges", "3; 0 1", "--variant", "total"], expect_code=2)
run(["solve", "--graph6", K26], expect_code=2)  # above the default --max-n
run(["--max-n", "30", "solve", "--graph6", K26])  # explicit raise admits it
run(["table1", "--n", "9"], expect_code=2)  # builtin streams stop at 7
run(["classify", "--name", "P5", "--graph6", "Ch"], expect_code=2)  # two inputs

if failures:
    print(f"{failures} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
