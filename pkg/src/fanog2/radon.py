"""The finite Radon transform for Z_2-valued functions on the Fano plane.

A function f: points -> Z_2 is stored as a 7-bit mask whose bit (p-1) is
f(P_p); likewise a function on lines has bit (d-1) equal to the value on
D_d.  The transform sums f over the three points of each line.
"""

from functools import lru_cache

from . import fano


def evaluate(mask, p):
    return (mask >> (p - 1)) & 1


def from_values(values):
    """Pack an iterable of 7 bits (indexed by label-1) into a mask."""
    m = 0
    for i, v in enumerate(values):
        if v & 1:
            m |= 1 << i
    return m


ALL_FUNCTIONS = tuple(range(128))
ZERO = 0
ONE = 127


def point_indicator(p):
    return 1 << (p - 1)


def line_indicator(d):
    return from_values(1 if p in fano.LINE_POINTS[d] else 0 for p in fano.POINTS)


def t_line(d):
    """T_D: zero on D, one off D."""
    return ONE ^ line_indicator(d)


def t_point(p):
    """T_P: one at P, zero elsewhere (the point indicator)."""
    return point_indicator(p)


def radon(f):
    """f*(D) = sum of f over the points of D, for each line."""
    out = 0
    for d in fano.LINES:
        s = sum(evaluate(f, p) for p in fano.LINE_POINTS[d]) % 2
        if s:
            out |= 1 << (d - 1)
    return out


@lru_cache(maxsize=None)
def kernel():
    """The 8 functions with zero transform: 0 and the seven T_D."""
    ker = tuple(f for f in ALL_FUNCTIONS if radon(f) == 0)
    assert set(ker) == {ZERO} | {t_line(d) for d in fano.LINES}
    return ker


@lru_cache(maxsize=None)
def image():
    """The 16-element image of the transform."""
    return tuple(sorted({radon(f) for f in ALL_FUNCTIONS}))


def image_membership(h):
    """The image is exactly {T_P} u {T_P + 1} u {0, 1} on the line side.

    T_P here means the indicator of the pencil of lines through P.
    """
    pencil = {
        from_values(1 if p in fano.LINE_POINTS[d] else 0 for d in fano.LINES)
        for p in fano.POINTS
    }
    members = {0, 127} | pencil | {m ^ 127 for m in pencil}
    return h in members


def preimages(h):
    return tuple(f for f in ALL_FUNCTIONS if radon(f) == h)


def radon_mult(f):
    """Multiplicative transform: f*(D) = product of f(P) over P in D.

    Defined for functions with values in {+1,-1}, stored as sign tuples
    indexed by label-1.
    """
    return tuple(
        _prod(f[p - 1] for p in fano.LINE_POINTS[d]) for d in fano.LINES
    )


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out


def all_sign_functions():
    out = []
    for m in range(128):
        out.append(tuple(-1 if (m >> i) & 1 else 1 for i in range(7)))
    return tuple(out)


@lru_cache(maxsize=None)
def mult_domain():
    """R: the 64 sign functions on points whose total product is +1."""
    out = tuple(f for f in all_sign_functions() if _prod(f) == 1)
    assert len(out) == 64
    return out


@lru_cache(maxsize=None)
def mult_image():
    """R*: the 8 line sign functions with product +1 on every pencil.

    Equal to the multiplicative transform of the domain R.
    """
    img = sorted({radon_mult(f) for f in mult_domain()})
    pencil_ok = [
        h
        for h in all_sign_functions()
        if all(
            _prod(h[d - 1] for d in fano.lines_through(p)) == 1
            for p in fano.POINTS
        )
    ]
    assert sorted(pencil_ok) == img and len(img) == 8
    return tuple(img)


def mult_kernel():
    """The 8-element kernel of the multiplicative transform on R."""
    triv = tuple(1 for _ in fano.POINTS)
    return tuple(f for f in mult_domain() if radon_mult(f) == radon_mult(triv))


def concurrent_triples():
    """All 3-sets of concurrent lines (dual lines), 7 of them."""
    out = []
    for d1 in fano.LINES:
        for d2 in fano.LINES:
            for d3 in fano.LINES:
                if d1 < d2 < d3 and fano.line_add(d1, d2) == d3:
                    out.append((d1, d2, d3))
    assert len(out) == 7
    return tuple(out)


def concurrency_identity(f):
    """Sum over each concurrent line triple of f* equals the total sum of f.

    Returns (lhs_values, rhs); the identity asserts all lhs equal rhs.
    """
    h = radon(f)
    rhs = sum(evaluate(f, p) for p in fano.POINTS) % 2
    lhs = tuple(
        (evaluate(h, d1) + evaluate(h, d2) + evaluate(h, d3)) % 2
        for d1, d2, d3 in concurrent_triples()
    )
    return lhs, rhs
