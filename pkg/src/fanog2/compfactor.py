"""Norms, multiplication factors and composition factors on the Fano plane.

A multiplication factor is an antisymmetric sign table eps[p][q] in {+1,-1}
for p != q, stored as a 7x7 tuple-of-tuples with zero diagonal (indices are
point labels minus one).  A composition factor is a multiplication factor
whose induced 8-dimensional algebra is a composition algebra; for the
trivial norm this is equivalent to a line rule plus a quadrilateral rule,
and exactly 16 of them exist, in two sides of eight.
"""

from functools import lru_cache
from itertools import permutations, product

from . import fano


def eps_get(eps, p, q):
    return eps[p - 1][q - 1]


def _freeze(table):
    return tuple(tuple(row) for row in table)


def is_norm(n):
    """n maps labels 1..7 to +-1 with N(P+Q) = N(P)N(Q) for P != Q."""
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p != q:
                if n[fano.add(p, q) - 1] != n[p - 1] * n[q - 1]:
                    return False
    return True


NORM_ONE = (1,) * 7


def norm_plus_support_is_line_or_all(n):
    support = frozenset(p for p in fano.POINTS if n[p - 1] == 1)
    return support == frozenset(fano.POINTS) or fano.is_line(support)


def is_mult_factor(eps):
    for p in fano.POINTS:
        if eps[p - 1][p - 1] != 0:
            return False
        for q in fano.POINTS:
            if p != q and eps[p - 1][q - 1] * eps[q - 1][p - 1] != -1:
                return False
    return True


def future(eps, p):
    return frozenset(q for q in fano.POINTS if q != p and eps_get(eps, p, q) == 1)


def past(eps, p):
    return frozenset(q for q in fano.POINTS if q != p and eps_get(eps, p, q) == -1)


def is_composition_factor(eps, norm=NORM_ONE):
    """The line and quadrilateral rules for a general norm.

    (i)  N(P+R) eps_PQ eps_QR = 1 for any line {P,Q,R};
    (ii) N(P+Q) eps_PQ eps_QR eps_RS eps_SP N(P+S) = -1 for any
         quadrilateral {P,Q,R,S}.
    Both rules are checked over all orderings.
    """
    for d in fano.LINES:
        for p, q, r in permutations(sorted(fano.LINE_POINTS[d])):
            if (
                norm[fano.add(p, r) - 1] * eps_get(eps, p, q) * eps_get(eps, q, r)
                != 1
            ):
                return False
    for d in fano.LINES:
        for p, q, r, s in permutations(sorted(fano.QUADRILATERALS[d])):
            v = (
                norm[fano.add(p, q) - 1]
                * eps_get(eps, p, q)
                * eps_get(eps, q, r)
                * eps_get(eps, r, s)
                * eps_get(eps, s, p)
                * norm[fano.add(p, s) - 1]
            )
            if v != -1:
                return False
    return True


def side(eps):
    """'O+' if the future of every point is a line, 'O-' if every past is."""
    if all(fano.is_line(future(eps, p)) for p in fano.POINTS):
        return "O+"
    if all(fano.is_line(past(eps, p)) for p in fano.POINTS):
        return "O-"
    return None


def canonical_epsilon(tau=fano.TAU, base_point=1):
    """The canonical composition factor of an oriented Fano plane.

    eps_{tau^i P0, tau^j P0} = legendre7(j - i); the result does not depend
    on the base point.
    """
    if fano.order(tau) != 7:
        raise ValueError("an orientation must have order 7")
    exponent = {}
    p = base_point
    for k in range(7):
        exponent[p] = k
        p = fano.apply(tau, p)
    table = [[0] * 7 for _ in range(7)]
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p != q:
                table[p - 1][q - 1] = fano.legendre7(exponent[q] - exponent[p])
    return _freeze(table)


EPS_TAU = canonical_epsilon()


def negate(eps):
    return _freeze([[-v for v in row] for row in eps])


@lru_cache(maxsize=None)
def enumerate_composition_factors():
    """All 16 composition factors for the trivial norm.

    Every composition factor orients each line consistently, so candidates
    are exactly the 2^7 choices of a cyclic orientation per line; the
    quadrilateral rule then cuts the 128 candidates down to 16.
    """
    # two cyclic orientations per line, as ordered triples
    line_orients = {}
    for d in fano.LINES:
        p, q, r = sorted(fano.LINE_POINTS[d])
        line_orients[d] = ((p, q, r), (p, r, q))
    found = []
    for choice in product((0, 1), repeat=7):
        table = [[0] * 7 for _ in range(7)]
        for d in fano.LINES:
            a, b, c = line_orients[d][choice[d - 1]]
            for x, y in ((a, b), (b, c), (c, a)):
                table[x - 1][y - 1] = 1
                table[y - 1][x - 1] = -1
        eps = _freeze(table)
        if is_composition_factor(eps):
            found.append(eps)
    assert len(found) == 16
    return tuple(found)


def act(g, eps):
    """Left action: (g.eps)_{PQ} = eps_{g^-1 P, g^-1 Q}."""
    ginv = fano.inverse(g)
    table = [[0] * 7 for _ in range(7)]
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p != q:
                table[p - 1][q - 1] = eps_get(
                    eps, fano.apply(ginv, p), fano.apply(ginv, q)
                )
    return _freeze(table)


def orbit(eps, group=None):
    if group is None:
        group = fano.all_collineations()
    return frozenset(act(g, eps) for g in group)


def orbit_decomposition():
    """The two 8-element orbits, keyed by side tag."""
    factors = enumerate_composition_factors()
    orbits = []
    remaining = set(factors)
    while remaining:
        eps = min(remaining)
        o = orbit(eps)
        orbits.append(o)
        remaining -= o
    return orbits


def isotropy(eps, group=None):
    if group is None:
        group = fano.all_collineations()
    return frozenset(g for g in group if act(g, eps) == eps)


def orientable_triangles(eps):
    """Triangles {P,Q,R} carrying a cyclically consistent eps-orientation."""
    out = []
    for t in fano.all_triangles():
        p, q, r = sorted(t)
        # orientable iff some cyclic order of the triangle gives all +1
        s1 = eps_get(eps, p, q) == eps_get(eps, q, r) == eps_get(eps, r, p) == 1
        s2 = eps_get(eps, p, r) == eps_get(eps, r, q) == eps_get(eps, q, p) == 1
        if s1 or s2:
            out.append(t)
    return tuple(out)


def enumerate_oriented_maps():
    """All 8 maps alpha: F -> V_F* with alpha_P(P)=1, alpha_P(Q)+alpha_Q(P)=1.

    alpha_P is stored as a 3-bit dual mask; alpha_P(Q) is the pairing parity.
    """

    def pair(phi, p):
        return bin(phi & fano.MASK[p]).count("1") % 2

    choices = {p: [phi for phi in range(1, 8) if pair(phi, p) == 1] for p in fano.POINTS}
    out = []
    for combo in product(*(choices[p] for p in fano.POINTS)):
        alpha = dict(zip(fano.POINTS, combo))
        if all(
            pair(alpha[p], q) + pair(alpha[q], p) == 1
            for p in fano.POINTS
            for q in fano.POINTS
            if p < q
        ):
            out.append(tuple(combo))
    assert len(out) == 8
    return tuple(out)


def exponentiate(alpha):
    """Candidate sign rule eps_PQ = (-1)^{alpha_P(Q)} for an oriented map.

    Raises if the resulting table is not a composition factor; callers rely
    on this being validated loudly rather than patched.
    """

    def pair(phi, p):
        return bin(phi & fano.MASK[p]).count("1") % 2

    table = [[0] * 7 for _ in range(7)]
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p != q:
                table[p - 1][q - 1] = -1 if pair(alpha[p - 1], q) else 1
    eps = _freeze(table)
    if not is_composition_factor(eps):
        raise AssertionError("exponentiation candidate failed the composition rules")
    return eps


def act_oriented_map(g, alpha):
    """(g.alpha)_P(Q) = alpha_{g^-1 P}(g^-1 Q)."""
    ginv = fano.inverse(g)
    out = []
    for p in fano.POINTS:
        src = alpha[fano.apply(ginv, p) - 1]
        # transported dual mask alpha_{g^-1 P} o g^-1, read off on the basis
        m = 0
        for bit, basis_label in ((1, 1), (2, 2), (4, 3)):
            v = bin(src & fano.MASK[fano.apply(ginv, basis_label)]).count("1") % 2
            if v:
                m |= bit
        out.append(m)
    return tuple(out)


def point_to_bilinear(p):
    """The bilinear form (Q,R) -> (Q wedge R)(P), as a 7x7 0/1 table.

    Point p may be 0 (the zero vector), giving the zero form.
    """
    table = [[0] * 7 for _ in range(7)]
    if p == 0:
        return _freeze(table)
    for q in fano.POINTS:
        for r in fano.POINTS:
            if q != r:
                phi = fano.LINE_DUAL_MASK[fano.wedge(q, r)]
                table[q - 1][r - 1] = bin(phi & fano.MASK[p]).count("1") % 2
    return _freeze(table)


def twist(eps, v):
    """Sign-twist of a factor by a Fano-cube element v (label 1..7 or 0).

    The pair (P,Q) picks up -1 iff v does not lie on the line through P,Q.
    This is the affine action of the 8-element kernel group on each side.
    """
    if v == 0:
        return eps
    table = [[0] * 7 for _ in range(7)]
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p != q:
                s = 1 if v in fano.LINE_POINTS[fano.wedge(p, q)] else -1
                table[p - 1][q - 1] = eps_get(eps, p, q) * s
    return _freeze(table)


def serialize(eps):
    """Row-major string of '+', '-' and '.' (diagonal)."""
    chars = {1: "+", -1: "-", 0: "."}
    return "".join(chars[v] for row in eps for v in row)
