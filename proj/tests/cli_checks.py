#!/usr/bin/env python3
"""End-to-end checks of the polarize CLI: golden listings, JSON shape,
exit statuses, OBJ output and the oracle-backed --verify mode."""

import json
import os
import subprocess
import sys

CLI = sys.argv[1]

ROSE_ARGS = [
    "curve",
    "--coord", "4 t (1 - t^2)^2 (1 - 14 t^2 + t^4)",
    "--coord", "8 t^2 (1 - t^2) (3 - 10 t^2 + 3 t^4)",
    "--denom", "(1 + t^2)^5",
]

PROJECTIVE_ARGS = [
    "tri",
    "--coord", "16 u v^2 (1 - u^2)",
    "--coord", "8 u v (u^2 + 1) (v^2 - 1)",
    "--coord", "4 v (1 - u^4) (v^2 - 1)",
    "--coord", "4 v^2 (u^4 - 6 u^2 + 1)",
    "--denom", "(u^2 + 1)^2 (v^2 + 1)^2",
    "--degree", "8",
]

ROSE_LISTING = """
rcpoly =  {{0, 0, 1}, {2/5, 0, 1}, {18/25, 12/25, 10/9}, {1/2, 6/5, 4/3},
   {-14/45, 71/45, 12/7}, {-45/37, 45/37, 148/63}, {-71/45, 14/45, 24/7},
   {-6/5, -1/2, 16/3}, {-12/25, -18/25, 80/9}, {0, -2/5, 16}, {0, 0, 32}};
"""

failures = []


def run(args, env_extra=None):
    env = dict(os.environ)
    env.pop("POLARIZE_MAX_ORACLE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([CLI] + args, capture_output=True, text=True, env=env)


def check(name, condition, detail=""):
    if condition:
        print(f"ok: {name}")
    else:
        failures.append(name)
        print(f"FAIL: {name} {detail}")


def squash(text):
    return "".join(text.split())


# paper format reproduces the published listing, token for token
r = run(ROSE_ARGS + ["--format", "paper", "--name", "rcpoly"])
check("rose paper listing", r.returncode == 0 and squash(r.stdout) == squash(ROSE_LISTING),
      r.stdout + r.stderr)

# json output carries exact rational strings in the documented shape
r = run(ROSE_ARGS + ["--format", "json"])
check("rose json exit", r.returncode == 0, r.stderr)
net = json.loads(r.stdout)
check("rose json shape",
      net["kind"] == "curve" and net["degree"] == 10 and net["frame"] == ["0", "1"]
      and len(net["points"]) == 11
      and net["points"][2]["affine"] == ["18/25", "12/25"]
      and net["points"][2]["weight"] == "10/9"
      and net["points"][10]["index"] == [10])

# the projective-plane net: 45 points, entry 11 frozen from the listing
r = run(PROJECTIVE_ARGS + ["--format", "json"])
net = json.loads(r.stdout or "{}")
check("projective-plane json",
      r.returncode == 0 and len(net.get("points", [])) == 45
      and net["points"][10]["affine"] == ["0", "-1/7", "-1/2", "0"]
      and net["points"][10]["weight"] == "1"
      and net["points"][10]["index"] == [1, 1, 6]
      and net["points"][9]["index"] == [1, 0, 7])

# dropping the z coordinate gives the cross-cap net
r = run(PROJECTIVE_ARGS + ["--format", "json", "--drop-coord", "2"])
net = json.loads(r.stdout or "{}")
check("cross-cap drop-coord",
      r.returncode == 0 and net["points"][10]["affine"] == ["0", "-1/7", "0"]
      and net["points"][44]["affine"] == ["0", "0", "0"]
      and net["points"][44]["weight"] == "4")

# rect subcommand with explicit bidegree and separate frames
r = run(["rect", "--coord", "u v", "--bidegree", "2,2",
         "--frame-u", "0,1", "--frame-v", "-1,1", "--format", "json"])
net = json.loads(r.stdout or "{}")
check("rect json", r.returncode == 0 and net.get("bidegree") == [2, 2]
      and net.get("frame_v") == ["-1", "1"] and len(net.get("points", [])) == 9)

# exit statuses: parse (2), degree/frame (3), zero weight (4)
check("exit parse error", run(["curve", "--coord", "t^-1"]).returncode == 2)
check("exit unknown variable", run(["curve", "--coord", "u"]).returncode == 2)
check("exit degree too low",
      run(["curve", "--coord", "t^3", "--degree", "2"]).returncode == 3)
check("exit degenerate frame",
      run(["curve", "--coord", "t", "--frame", "1,1"]).returncode == 3)
check("exit zero weight",
      run(["curve", "--coord", "1", "--denom", "t"]).returncode == 4)
check("homogeneous rescues zero weight",
      run(["curve", "--coord", "1", "--denom", "t", "--homogeneous"]).returncode == 0)
check("exit bad flag", run(["curve", "--coord", "t", "--format", "yaml"]).returncode == 2)
check("exit samples too small",
      run(["curve", "--coord", "t", "--coord", "t^2", "--format", "obj",
           "--samples", "1"]).returncode == 3)

# no partial output on failure
r = run(["curve", "--coord", "1", "--denom", "t"])
check("no partial output", r.stdout == "" and "b_0" in r.stderr, r.stderr)

# obj: a curve is a polyline; a surface is a quad mesh
r = run(["curve", "--coord", "t", "--coord", "t^2", "--format", "obj", "--samples", "3"])
check("curve obj", r.returncode == 0 and r.stdout ==
      "v 0 0 0\nv 0.5 0.25 0\nv 1 1 0\nl 1 2 3\n", r.stdout)
r = run(["rect", "--coord", "u", "--coord", "v", "--coord", "u v",
         "--format", "obj", "--samples", "3"])
check("rect obj", r.returncode == 0
      and len([l for l in r.stdout.splitlines() if l.startswith("f ")]) == 4
      and len([l for l in r.stdout.splitlines() if l.startswith("v ")]) == 9, r.stdout)

# the triangular frame accepts the barycentric-style 3-component spelling
r_cart = run(PROJECTIVE_ARGS + ["--tri-frame", "(1,0);(0,1);(0,0)"])
r_bary = run(PROJECTIVE_ARGS + ["--tri-frame", "(1,0,0);(0,1,0);(0,0,1)"])
check("barycentric frame spelling",
      r_cart.returncode == 0 and r_cart.stdout == r_bary.stdout, r_bary.stderr)
check("barycentric frame must sum to 1",
      run(PROJECTIVE_ARGS + ["--tri-frame", "(1,0,1);(0,1,0);(0,0,1)"]).returncode == 3)

# --verify cross-checks against the defining-sum oracle
r = run(ROSE_ARGS + ["--verify"])
check("verify rose", r.returncode == 0 and "defining-sum oracle" in r.stderr, r.stderr)
r = run(ROSE_ARGS + ["--verify"], env_extra={"POLARIZE_MAX_ORACLE": "5"})
check("verify gate blocks", r.returncode == 3, r.stderr)
r = run(PROJECTIVE_ARGS + ["--verify"])
check("verify projective plane", r.returncode == 0, r.stderr)

# json output is stable across a round trip through python's json module
r = run(ROSE_ARGS + ["--format", "json"])
canonical = json.dumps(json.loads(r.stdout), indent=2) + "\n"
check("json canonical", r.stdout == canonical)

print()
if failures:
    print(f"{len(failures)} CLI check(s) failed: {failures}")
    sys.exit(1)
print("all CLI checks passed")
