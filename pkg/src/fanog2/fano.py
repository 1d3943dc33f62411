"""The Fano plane, its cube, its dual, its collineation group and orientations.

Points are labelled 1..7 and identified with the nonzero vectors of (Z_2)^3
through a fixed coordinate model: P1 -> 001, P2 -> 010, P3 -> 100 and then
P_{i+3} = P_i + P_{i+1} (indices mod 7).  Lines are labelled 1..7 with
D_i = {P_i, P_{i+1}, P_{i+3}}.  A collineation is stored as a tuple of 7
labels (the image of each point); additivity over (Z_2)^3 is the validation
predicate.
"""

from functools import lru_cache
from itertools import permutations

# label -> 3-bit mask, generated by the recurrence P_{i+3} = P_i + P_{i+1}
MASK = {1: 0b001, 2: 0b010, 3: 0b100, 4: 0b011, 5: 0b110, 6: 0b111, 7: 0b101}
LABEL = {m: i for i, m in MASK.items()}

POINTS = (1, 2, 3, 4, 5, 6, 7)
LINES = (1, 2, 3, 4, 5, 6, 7)

IDENTITY = (1, 2, 3, 4, 5, 6, 7)


def _lab(k):
    """Reduce an integer index to the 1..7 label range."""
    return (k - 1) % 7 + 1


# D_i = {P_i, P_{i+1}, P_{i+3}}
LINE_POINTS = {i: frozenset({i, _lab(i + 1), _lab(i + 3)}) for i in LINES}
_LINE_OF_PAIR = {}
for _i, _pts in LINE_POINTS.items():
    for _p in _pts:
        for _q in _pts:
            if _p != _q:
                _LINE_OF_PAIR[(_p, _q)] = _i

# quadrilaterals are the complements of the lines
QUADRILATERALS = {i: frozenset(POINTS) - LINE_POINTS[i] for i in LINES}

# the linear form vanishing on a line, as a 3-bit mask
def _dual_mask(i):
    for phi in range(1, 8):
        if all(bin(phi & MASK[p]).count("1") % 2 == 0 for p in LINE_POINTS[i]):
            return phi
    raise AssertionError("no vanishing form for line %d" % i)


LINE_DUAL_MASK = {i: _dual_mask(i) for i in LINES}
LINE_OF_DUAL_MASK = {m: i for i, m in LINE_DUAL_MASK.items()}


def add(p, q):
    """Sum of two points in the Fano cube; 0 when p == q."""
    m = MASK[p] ^ MASK[q]
    return LABEL[m] if m else 0


def wedge(p, q):
    """The unique line through two distinct points."""
    if p == q:
        raise ValueError("wedge of equal points is undefined")
    return _LINE_OF_PAIR[(p, q)]


def line_add(d1, d2):
    """Third line through the intersection point of two distinct lines."""
    if d1 == d2:
        raise ValueError("line_add of equal lines is undefined")
    m = LINE_DUAL_MASK[d1] ^ LINE_DUAL_MASK[d2]
    return LINE_OF_DUAL_MASK[m]


def is_line(points):
    """True iff a 3-set of points is a line (masks XOR to zero)."""
    pts = list(points)
    if len(pts) != 3:
        return False
    return MASK[pts[0]] ^ MASK[pts[1]] ^ MASK[pts[2]] == 0


def lines_through(p):
    return tuple(i for i in LINES if p in LINE_POINTS[i])


def apply(g, p):
    return g[p - 1]


def compose(g, h):
    """g after h."""
    return tuple(g[h[i] - 1] for i in range(7))


def inverse(g):
    inv = [0] * 7
    for i in range(7):
        inv[g[i] - 1] = i + 1
    return tuple(inv)


def is_additive(g):
    for p in POINTS:
        for q in POINTS:
            if p < q:
                if add(g[p - 1], g[q - 1]) != g[add(p, q) - 1]:
                    return False
    return True


@lru_cache(maxsize=None)
def all_collineations():
    """The 168 additive bijections, built from images of the basis P1,P2,P3."""
    basis_masks = (1, 2, 4)
    result = []
    for images in permutations(range(1, 8), 3):
        # images are masks for the basis; require linear independence
        a, b, c = images
        if a ^ b == 0 or a ^ c == 0 or b ^ c == 0 or a ^ b ^ c == 0:
            continue
        perm = [0] * 7
        for m in range(1, 8):
            im = 0
            if m & 1:
                im ^= a
            if m & 2:
                im ^= b
            if m & 4:
                im ^= c
            perm[LABEL[m] - 1] = LABEL[im]
        result.append(tuple(perm))
    assert len(result) == 168
    return tuple(sorted(result))


def order(g):
    n = 1
    h = g
    while h != IDENTITY:
        h = compose(g, h)
        n += 1
    return n


def order_histogram():
    hist = {}
    for g in all_collineations():
        n = order(g)
        hist[n] = hist.get(n, 0) + 1
    return hist


def line_image(g, d):
    """The image line of D_d under a collineation."""
    pts = LINE_POINTS[d]
    imgs = {g[p - 1] for p in pts}
    return wedge(*sorted(imgs)[:2])


def line_perm(g):
    """The induced permutation on line labels."""
    return tuple(line_image(g, d) for d in LINES)


def as_matrix(g):
    """3x3 Z_2 matrix of g in the basis (P1, P2, P3) = (001, 010, 100)."""
    cols = [MASK[g[LABEL[1 << j] - 1]] for j in range(3)]
    return [[(cols[j] >> i) & 1 for j in range(3)] for i in range(3)]


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(3)) % 2 for j in range(3)]
        for i in range(3)
    ]


def order7_minimal_polynomial(g):
    """Which cubic over Z_2 annihilates an order-7 collineation.

    Returns 'x^3+x^2+1' or 'x^3+x+1'.
    """
    if order(g) != 7:
        raise ValueError("collineation is not of order 7")
    m = as_matrix(g)
    m2 = _mat_mul(m, m)
    m3 = _mat_mul(m2, m)
    ident = [[1 if i == j else 0 for j in range(3)] for i in range(3)]

    def is_zero(mat):
        return all(v == 0 for row in mat for v in row)

    def madd(*ms):
        return [
            [sum(mm[i][j] for mm in ms) % 2 for j in range(3)] for i in range(3)
        ]

    if is_zero(madd(m3, m2, ident)):
        return "x^3+x^2+1"
    if is_zero(madd(m3, m, ident)):
        return "x^3+x+1"
    raise AssertionError("order-7 element annihilated by neither cubic")


def legendre7(n):
    """Legendre symbol (n/7), computed as n^3 mod 7 read in {+1,-1}."""
    if n % 7 == 0:
        raise ValueError("legendre7 undefined for multiples of 7")
    r = pow(n, 3, 7)
    return 1 if r == 1 else -1


def orientation_type(tau):
    """(0,1,3) if {P, tau P, tau^3 P} is a line for every P, else (0,2,3)."""
    if order(tau) != 7:
        raise ValueError("an orientation must have order 7")
    t3 = compose(tau, compose(tau, tau))
    if all(is_line({p, apply(tau, p), apply(t3, p)}) for p in POINTS):
        return (0, 1, 3)
    t2 = compose(tau, tau)
    if all(is_line({p, apply(t2, p), apply(t3, p)}) for p in POINTS):
        return (0, 2, 3)
    raise AssertionError("order-7 element of neither orientation type")


# the canonical shift i -> i+1; equal to a*b for the standard generators
TAU = (2, 3, 4, 5, 6, 7, 1)


def standard_generators():
    """Generators a (order 2) and b (order 3) with ab = TAU.

    They satisfy a^2 = b^3 = (ab)^7 = (aba^-1 b^-1)^4 = 1 and generate the
    whole 168-element group.
    """
    a = (1, 2, 7, 4, 6, 5, 3)
    b = (2, 7, 4, 6, 5, 3, 1)
    return a, b


def generated_subgroup(gens):
    """Closure of a set of collineations under composition."""
    seen = set(gens)
    seen.add(IDENTITY)
    frontier = list(seen)
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                gh = compose(g, h)
                if gh not in seen:
                    seen.add(gh)
                    new.append(gh)
        frontier = new
    return seen


def involution_from(d, p):
    """The unique order-2 collineation fixing line d pointwise, R -> R+p off d."""
    if p not in LINE_POINTS[d]:
        raise ValueError("point P%d is not on line D%d" % (p, d))
    perm = []
    for r in POINTS:
        if r in LINE_POINTS[d]:
            perm.append(r)
        else:
            perm.append(add(r, p))
    g = tuple(perm)
    assert is_additive(g) and order(g) == 2
    return g


def stable_triangle(g):
    """The unique non-collinear 3-set permuted by an order-3 collineation."""
    if order(g) != 3:
        raise ValueError("collineation is not of order 3")
    triangles = []
    seen = set()
    for p in POINTS:
        orbit = frozenset({p, apply(g, p), apply(g, apply(g, p))})
        if len(orbit) == 3 and orbit not in seen:
            seen.add(orbit)
            if not is_line(orbit):
                triangles.append(orbit)
    if len(triangles) != 1:
        raise AssertionError(
            "expected exactly one stable triangle, found %d" % len(triangles)
        )
    return triangles[0]


def all_triangles():
    """All 28 non-collinear 3-sets."""
    out = []
    for p in POINTS:
        for q in POINTS:
            for r in POINTS:
                if p < q < r and not is_line({p, q, r}):
                    out.append(frozenset({p, q, r}))
    return out


def induced_line_orientation(tau, d):
    """The cyclic order (P, tau P, tau^3 P) induced on line d by a type-(0,1,3) tau."""
    if orientation_type(tau) != (0, 1, 3):
        raise ValueError("induced orientation requires a type (0,1,3) orientation")
    t3 = compose(tau, compose(tau, tau))
    for p in LINE_POINTS[d]:
        cyc = (p, apply(tau, p), apply(t3, p))
        if frozenset(cyc) == LINE_POINTS[d]:
            return cyc
    raise AssertionError("line D%d is not of the form {P, tau P, tau^3 P}" % d)


def cyclic_equal(c1, c2):
    """Whether two 3-cycles describe the same cyclic order."""
    a, b, c = c1
    return c2 in ((a, b, c), (b, c, a), (c, a, b))


def dual_orientation_type(tau):
    """Orientation type of the dual plane under the induced line permutation.

    Dual points are lines; three dual points are collinear iff the lines are
    concurrent, i.e. their dual masks XOR to zero.
    """
    lp = line_perm(tau)

    def dapply(perm, d):
        return perm[d - 1]

    def dcollinear(ds):
        ds = list(ds)
        return (
            len(ds) == 3
            and LINE_DUAL_MASK[ds[0]] ^ LINE_DUAL_MASK[ds[1]] ^ LINE_DUAL_MASK[ds[2]]
            == 0
        )

    lp3 = tuple(lp[lp[lp[i] - 1] - 1] for i in range(7))
    if all(dcollinear({d, dapply(lp, d), dapply(lp3, d)}) for d in LINES):
        return (0, 1, 3)
    lp2 = tuple(lp[lp[i] - 1] for i in range(7))
    if all(dcollinear({d, dapply(lp2, d), dapply(lp3, d)}) for d in LINES):
        return (0, 2, 3)
    raise AssertionError("dual permutation of neither orientation type")


def conjugacy_class(g):
    """The conjugacy class of a collineation, by exhaustive conjugation."""
    out = set()
    for h in all_collineations():
        out.add(compose(h, compose(g, inverse(h))))
    return frozenset(out)


def order7_class_split():
    """The order-7 elements split into two classes of 24, separated both by
    the exhaustive-conjugation oracle and by the minimal-polynomial tag,
    and powers tau^n fall in the class of tau exactly when n is a quadratic
    residue mod 7.
    """
    sevens = [g for g in all_collineations() if order(g) == 7]
    classes = set()
    for g in sevens:
        classes.add(conjugacy_class(g))
    if len(classes) != 2 or any(len(c) != 24 for c in classes):
        return False
    for c in classes:
        if len({order7_minimal_polynomial(g) for g in c}) != 1:
            return False
    powers = {1: TAU}
    for n in range(2, 7):
        powers[n] = compose(TAU, powers[n - 1])
    tau_class = next(c for c in classes if TAU in c)
    for n in range(1, 7):
        if (powers[n] in tau_class) != (legendre7(n) == 1):
            return False
    return True


def serialize(g):
    """A collineation as a 7-character digit string."""
    return "".join(str(v) for v in g)


def deserialize(s):
    g = tuple(int(ch) for ch in s)
    if sorted(g) != list(POINTS) or not is_additive(g):
        raise ValueError("not a collineation: %r" % s)
    return g


def line_name(d):
    return "D%d" % d
