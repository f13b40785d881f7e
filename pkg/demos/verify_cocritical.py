"""Verify a constructed graph is co-critical, then read off its structure.

Two phases.  Phase one proves the graph itself admits a good coloring but
no single-edge extension does, by exhausting the partition search on every
non-edge.  Phase two takes the coloring that maximizes red and checks the
degree, clique, and edge-count consequences that saturation forces.
"""

import argparse
import time

from cocritical import ConstructionParams, build, is_cocritical, saturation_structure_checks

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--t", type=int, default=4)
parser.add_argument("--k", type=int, default=3)
parser.add_argument("--n", type=int, default=13)
args = parser.parse_args()

g = build(ConstructionParams(args.t, args.k, args.n))

##################################
# Phase one: the verdict
##################################
t0 = time.perf_counter()
rep = is_cocritical(g, args.t, args.k)
elapsed = time.perf_counter() - t0

print(f"verdict: {rep.verdict()}  ({elapsed:.2f}s)")
print(f"base search: {rep.base_status}, witness blocks "
      f"{sorted(sorted(b) for b in rep.base_witness.blocks) if rep.base_witness else None}")
nodes = sum(s for _, s, _ in rep.per_edge_stats)
worst = max(rep.per_edge_stats, key=lambda row: row[1])
print(f"non-edges exhausted: {len(rep.per_edge_stats)}, search nodes {nodes}, "
      f"hardest non-edge {worst[0]} at {worst[1]} nodes")
if rep.failures:
    print(f"failures: {rep.failures}")
    raise SystemExit(1)

##################################
# Phase two: forced structure
##################################
struct = saturation_structure_checks(g, args.t, args.k)
print(f"max-red coloring: {len(struct.coloring.red)} red edges, "
      f"{len(struct.coloring.blue)} blue edges")
for name, item in struct.items.items():
    state = "pass" if item.passed else "FAIL"
    if not item.applicable:
        state = "not applicable"
    print(f"  {name:24s} {state}  {item.details}")
