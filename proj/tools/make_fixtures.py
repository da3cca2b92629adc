#!/usr/bin/env python3
"""Regenerates tests/fixtures from the nervekit binary.

usage: make_fixtures.py path/to/nervekit path/to/fixtures
"""
import copy
import json
import subprocess
import sys


def run(cli, *args):
    out = subprocess.run([cli, *args, "--no-timings"], check=True, capture_output=True, text=True).stdout
    return json.loads(out)


def write(path, doc):
    with open(path, "w") as f:
        f.write(json.dumps(doc, separators=(",", ":")) + "\n")


def main():
    cli, out = sys.argv[1], sys.argv[2]
    example = lambda name, d: json.loads(
        subprocess.run([cli, "example", "--example", name, "-d", str(d)], check=True, capture_output=True,
                       text=True).stdout)

    bg = example("bg:z2", 2)
    poset = example("discrete:poset01/ids", 2)
    write(f"{out}/bg_z2.json", bg)
    write(f"{out}/poset01_ids.json", poset)
    write(f"{out}/hom_simplex_1.json", example("hom-simplex:1", 2))
    plain = {k: v for k, v in bg.items() if k != "sub"}
    write(f"{out}/bg_z2_plain.json", plain)

    delta = run(cli, "nerve", "--example", "discrete:poset012", "-d", "2", "--emit-cells")["results"]["space"]
    write(f"{out}/nerve_poset012.json", delta)
    write(f"{out}/empty_sset.json", {"dim": 0, "cells": [0], "face": [[]], "degen": [[]]})
    binerve = run(cli, "binerve", "--example", "discrete:poset01/ids", "--cols", "1", "--rows", "1",
                  "--emit-cells")["results"]["bisset"]
    write(f"{out}/binerve_poset01.json", binerve)

    # Planted defects.
    bad = copy.deepcopy(delta)
    level2 = bad["face"][2]
    level2[0][0], level2[0][1] = level2[0][1], level2[0][0]
    write(f"{out}/defect_broken_identity.json", bad)

    bad = copy.deepcopy(bg)
    table = bad["comp"]["0,0,0"][2]
    table[6], table[7] = table[7], table[6]
    write(f"{out}/defect_broken_commutation.json", bad)

    bad = copy.deepcopy(binerve)
    bad["marked"] = [m for m in bad["marked"] if m != [1, 0, 0]]
    write(f"{out}/defect_broken_marking.json", bad)

    bad = copy.deepcopy(poset)
    bad["sub"]["1,1"] = []
    write(f"{out}/defect_non_wide.json", bad)


if __name__ == "__main__":
    main()
