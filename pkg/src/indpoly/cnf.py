"""CNF formulas, DIMACS parsing, exhaustive counters, and the reductions
from counting SAT to counting independent sets.

Literals follow the DIMACS convention: variable i is the positive literal
``i`` and its negation ``-i`` (i >= 1).  A formula stores its declared
variable count; declared-but-unused variables matter, because they turn
into an explicit power-of-two multiplier in the reductions.

``count_sat`` and ``count_x3sat`` enumerate all 2^n assignments (no
solver shortcuts); the enumeration is vectorized over numpy blocks and
refuses to run beyond ``max_variables``.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, FormulaError
from .graphs import Graph
from .isp import count_is_of_size

DEFAULT_ASSIGNMENT_BOUND = 24
_BLOCK = 1 << 20


class CnfFormula:
    """Clause list over signed DIMACS literals.

    Duplicate literals inside a clause are dropped on construction.  A
    clause containing both a literal and its negation is kept verbatim:
    it is legal 3-CNF input and the downstream gadget handles it
    pointwise.  Width constraints (<= 3 for 3-CNF, {2, 3} for X3SAT) are
    enforced by the operations that need them, not by the container.
    """

    __slots__ = ("variable_count", "clauses")

    def __init__(self, variable_count: int, clauses):
        if variable_count < 0:
            raise FormulaError(f"negative variable count {variable_count}")
        normalized = []
        for idx, clause in enumerate(clauses, start=1):
            seen = []
            for lit in clause:
                if not isinstance(lit, int) or lit == 0:
                    raise FormulaError(f"clause {idx}: invalid literal {lit!r}")
                if abs(lit) > variable_count:
                    raise FormulaError(
                        f"clause {idx}: literal {lit} out of range 1..{variable_count}"
                    )
                if lit not in seen:
                    seen.append(lit)
            if not seen:
                raise FormulaError(f"clause {idx}: empty clause")
            normalized.append(tuple(seen))
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "clauses", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("CnfFormula is immutable")

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def used_variables(self) -> set:
        return {abs(lit) for clause in self.clauses for lit in clause}

    def unused_variable_count(self) -> int:
        return self.variable_count - len(self.used_variables())

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return (
            self.variable_count == other.variable_count
            and self.clauses == other.clauses
        )

    def __hash__(self):
        return hash((self.variable_count, self.clauses))

    def __repr__(self):
        return f"CnfFormula(n={self.variable_count}, m={len(self.clauses)})"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF: comments "c ...", header "p cnf n m", clauses as
    0-terminated literal sequences (clauses may span lines)."""
    n = None
    declared_m = None
    clauses = []
    current = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise FormulaError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormulaError(f"line {lineno}: non-integer header fields")
            if n < 0 or declared_m < 0:
                raise FormulaError(f"line {lineno}: negative header counts")
            continue
        if n is None:
            raise FormulaError(f"line {lineno}: clause data before header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise FormulaError(f"line {lineno}: non-integer token {token!r}")
            if lit == 0:
                if not current:
                    raise FormulaError(f"line {lineno}: empty clause")
                clauses.append(tuple(current))
                current = []
                current_line = None
            else:
                if abs(lit) > n:
                    raise FormulaError(
                        f"line {lineno}: literal {lit} out of range 1..{n}"
                    )
                current.append(lit)
                current_line = lineno
    if current:
        raise FormulaError(
            f"line {current_line}: clause missing terminating 0"
        )
    if n is None:
        raise FormulaError("missing header line \"p cnf n m\"")
    if len(clauses) != declared_m:
        raise FormulaError(
            f"header declares {declared_m} clauses but {len(clauses)} found"
        )
    return CnfFormula(n, clauses)


def _check_assignment_capacity(f: CnfFormula, max_variables: int):
    if f.variable_count > max_variables:
        raise CapacityError(
            f"exhaustive enumeration over {f.variable_count} variables exceeds "
            f"the bound {max_variables}"
        )


def count_sat(f: CnfFormula, *, max_variables: int = DEFAULT_ASSIGNMENT_BOUND) -> int:
    """Exact number of satisfying assignments, over all 2^n assignments."""
    _check_assignment_capacity(f, max_variables)
    n = f.variable_count
    total = 0
    limit = 1 << n
    for base in range(0, limit, _BLOCK):
        hi = min(base + _BLOCK, limit)
        assigns = np.arange(base, hi, dtype=np.int64)
        ok = np.ones(hi - base, dtype=bool)
        for clause in f.clauses:
            sat = np.zeros(hi - base, dtype=bool)
            for lit in clause:
                bit = (assigns >> (abs(lit) - 1)) & 1
                sat |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
            ok &= sat
        total += int(np.count_nonzero(ok))
    return total


def count_x3sat(f: CnfFormula, *, max_variables: int = DEFAULT_ASSIGNMENT_BOUND) -> int:
    """Exact number of assignments with exactly one true literal per clause.
    Clauses must have width 2 or 3."""
    for idx, clause in enumerate(f.clauses, start=1):
        if len(clause) not in (2, 3):
            raise FormulaError(
                f"clause {idx} has width {len(clause)}; X3SAT needs width 2 or 3"
            )
    _check_assignment_capacity(f, max_variables)
    n = f.variable_count
    total = 0
    limit = 1 << n
    for base in range(0, limit, _BLOCK):
        hi = min(base + _BLOCK, limit)
        assigns = np.arange(base, hi, dtype=np.int64)
        ok = np.ones(hi - base, dtype=bool)
        for clause in f.clauses:
            true_count = np.zeros(hi - base, dtype=np.uint8)
            for lit in clause:
                bit = ((assigns >> (abs(lit) - 1)) & 1).astype(np.uint8)
                true_count += bit if lit > 0 else 1 - bit
            ok &= true_count == 1
        total += int(np.count_nonzero(ok))
    return total


def reduce_to_x3sat(f: CnfFormula) -> CnfFormula:
    """Parsimonious reduction from 3-CNF SAT counting to X3SAT counting.

    Each input clause (a v b v c) becomes five clauses over six fresh
    variables u1..u6:

        (a v u1 v u4)(b v u2 v u4)(u1 v u2 v u5)(u3 v u4 v u6)(c v u3)

    and for every truth assignment of (a, b, c) the block has exactly one
    X3SAT extension over u1..u6 when a v b v c holds and none otherwise.
    Width-2 clauses reuse b for c; width-1 clauses reuse a for both.  The
    output has exactly 5m clauses over n + 6m variables and the same
    solution count under X3SAT semantics.
    """
    clauses_out = []
    next_var = f.variable_count + 1
    for idx, clause in enumerate(f.clauses, start=1):
        width = len(clause)
        if width > 3:
            raise FormulaError(f"clause {idx} has width {width}; 3-CNF needs <= 3")
        a = clause[0]
        b = clause[1] if width > 1 else a
        c = clause[2] if width > 2 else b
        u1, u2, u3, u4, u5, u6 = range(next_var, next_var + 6)
        next_var += 6
        clauses_out.extend(
            [
                (a, u1, u4),
                (b, u2, u4),
                (u1, u2, u5),
                (u3, u4, u6),
                (c, u3),
            ]
        )
    return CnfFormula(next_var - 1, clauses_out)


def x3sat_to_graph(f: CnfFormula):
    """Parsimonious reduction from X3SAT counting to counting independent
    sets of a fixed size.

    One clique per clause (a triangle for width 3, an edge for width 2),
    vertices labeled by literals.  For vertices u, v in different cliques:
    the same literal connects each of them to the other's clique partners;
    complementary literals connect u to v and each partner of u to each
    partner of v.  Returns (graph, target_size, multiplier) with

        count_x3sat(f) == multiplier * count_is_of_size(graph, target_size)

    where target_size is the clause count and multiplier is 2^r for the r
    declared variables that appear in no clause.
    """
    clique_of = []
    labels = {}
    vertex = 0
    clique_members = []
    for idx, clause in enumerate(f.clauses, start=1):
        width = len(clause)
        if width not in (2, 3):
            raise FormulaError(
                f"clause {idx} has width {width}; X3SAT needs width 2 or 3"
            )
        if len({abs(lit) for lit in clause}) != width:
            raise FormulaError(
                f"clause {idx} uses a variable twice (complementary pair)"
            )
        members = []
        for lit in clause:
            labels[vertex] = lit
            clique_of.append(idx - 1)
            members.append(vertex)
            vertex += 1
        clique_members.append(members)

    edges = set()
    partners = {}
    for members in clique_members:
        for u in members:
            partners[u] = [w for w in members if w != u]
            for w in members:
                if u < w:
                    edges.add((u, w))

    total = vertex
    for u in range(total):
        for v in range(u + 1, total):
            if clique_of[u] == clique_of[v]:
                continue
            if labels[u] == labels[v]:
                for p in partners[v]:
                    edges.add((min(u, p), max(u, p)))
                for p in partners[u]:
                    edges.add((min(v, p), max(v, p)))
            elif labels[u] == -labels[v]:
                edges.add((u, v))
                for p in partners[u]:
                    for q in partners[v]:
                        edges.add((min(p, q), max(p, q)))

    multiplier = 2 ** f.unused_variable_count()
    return Graph(total, edges, labels), len(f.clauses), multiplier


def count_sat_via_independent_sets(f: CnfFormula) -> int:
    """Count satisfying assignments of a 3-CNF through the composed
    reduction: 3-CNF -> X3SAT -> independent sets of a fixed size."""
    reduced = reduce_to_x3sat(f)
    graph, target, multiplier = x3sat_to_graph(reduced)
    return multiplier * count_is_of_size(graph, target)


def reduction_report(f: CnfFormula) -> dict:
    """Size/record view of the composed reduction, for the CLI."""
    reduced = reduce_to_x3sat(f)
    graph, target, multiplier = x3sat_to_graph(reduced)
    return {
        "clauses_in": len(f.clauses),
        "clauses_out": len(reduced.clauses),
        "vars_in": f.variable_count,
        "vars_out": reduced.variable_count,
        "vertices": graph.n,
        "target_size": target,
        "multiplier": multiplier,
    }
