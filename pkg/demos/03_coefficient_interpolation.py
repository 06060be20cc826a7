"""Recovering every coefficient of I(G; X) from one evaluation point.

A degree-n polynomial needs n+1 distinct sample points.  Instead of
moving the point, the clone family moves the graph: member i is a
multiset S_i built from the binary representation of i, and evaluating
the S_i-clone at the single fixed point x yields I(G; x(S_i)) after an
exact division.  The shifted points are pairwise distinct (verified
exactly during construction), so Lagrange interpolation recovers the
coefficient vector."""

from fractions import Fraction

from indpoly import (
    Graph,
    build_clone_family,
    format_rational,
    interpolate_coeffs,
    isp_coeffs,
    s_clone,
)

g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
x = Fraction(2)

print("=" * 64)
print("The clone family at x = 2 for a 5-vertex graph")
print("=" * 64)
family = build_clone_family(x, g.n)
print(f"offset s0 = {family.offset}, spacing = {family.spacing}")
print(f"{'i':>2}  {'S_i':<12} {'x(S_i)':<12} clone vertices")
for record in family.dump_records():
    print(f"{record['i']:>2}  {str(record['s_set']):<12} {record['point']:<12} {record['clone_vertices']}")

print()
print("=" * 64)
print("Interpolation against the definitional evaluator")
print("=" * 64)
recovered = interpolate_coeffs(g, x)
direct = isp_coeffs(g)
print("n+1 oracle calls at the single point x = 2 recover:")
print(f"  interpolated: {[format_rational(c) for c in recovered.coeffs]}")
print(f"  enumerated:   {[format_rational(c) for c in direct.coeffs]}")
assert recovered == direct

print()
print("=" * 64)
print("The clones stay small: polylogarithmic growth per vertex")
print("=" * 64)
for i, spec in enumerate(family.sets):
    cloned = s_clone(g, spec)
    print(f"  S_{i}: clone has {cloned.n} vertices ({cloned.n // g.n} per original)")

print()
print("The same pipeline accepts any oracle speaking the line protocol")
print('  request:  {"graph": {"n": ..., "edges": [...]}, "point": "p/q"}')
print('  response: {"value": "p/q"}')
print("via interpolate_coeffs(g, x, oracle=external_oracle(command)).")
