"""Line-orientation signs of collineations and the order-1344 covering group.

For a collineation g and a line D = {P,Q,R} the sign

    delta_star(g, D) = eps_PQ * eps_{gP,gQ}

does not depend on the pair chosen in D.  An augmented automorphism is a
pair (g, signs) with signs: points -> {+1,-1} acting by e_P -> signs(P) *
e_{gP}; it is an algebra automorphism of the 8-dimensional algebra exactly
when the product of the three signs on every line equals delta_star(g, D).
There are 8 lifts per collineation, 1344 in all.
"""

import json
import os
from functools import lru_cache
from itertools import combinations

from . import compfactor, fano, octonion, radon

CACHE_VERSION = 1


def delta_star(g, d, eps=compfactor.EPS_TAU, check=False):
    pts = sorted(fano.LINE_POINTS[d])
    values = {
        compfactor.eps_get(eps, p, q)
        * compfactor.eps_get(eps, fano.apply(g, p), fano.apply(g, q))
        for p, q in combinations(pts, 2)
    }
    if check and len(values) != 1:
        raise AssertionError("delta_star depends on the pair for g=%r D=%d" % (g, d))
    return next(iter(values))


def delta_star_fn(g, eps=compfactor.EPS_TAU):
    """The sign function D -> delta_star(g, D) as a 7-tuple."""
    return tuple(delta_star(g, d, eps) for d in fano.LINES)


def det(g, eps=compfactor.EPS_TAU):
    """Product of delta_star(g, D) over all seven lines; always +1."""
    out = 1
    for v in delta_star_fn(g, eps):
        out *= v
    return out


def delta_star_properties(eps=compfactor.EPS_TAU, sample_pairs=None):
    """Check the global identities of delta_star over the whole group.

    - det g = +1 for all 168 collineations;
    - pencil products: the three lines through any point multiply to +1;
    - the multiplier identity delta*(g2 g1, D) = delta*(g2, g1 D) delta*(g1, D)
      for the given sample of pairs (all pairs if None... that is 168^2, so a
      deterministic subsample is used by default).
    """
    group = fano.all_collineations()
    for g in group:
        fn = delta_star_fn(g, eps)
        if det(g, eps) != 1:
            return False
        for p in fano.POINTS:
            prod = 1
            for d in fano.lines_through(p):
                prod *= fn[d - 1]
            if prod != 1:
                return False
    if sample_pairs is None:
        sample_pairs = [(group[i], group[(i * 37 + 11) % 168]) for i in range(168)]
    for g1, g2 in sample_pairs:
        g21 = fano.compose(g2, g1)
        for d in fano.LINES:
            if delta_star(g21, d, eps) != delta_star(
                g2, fano.line_image(g1, d), eps
            ) * delta_star(g1, d, eps):
                return False
    return True


def classify_delta_star(eps=compfactor.EPS_TAU):
    """Partition of the 168 collineations by their delta_star function."""
    classes = {}
    for g in fano.all_collineations():
        classes.setdefault(delta_star_fn(g, eps), []).append(g)
    return classes


def distinguished_point(fn):
    """The point attached to a member of R*: the unique P whose three lines
    carry +1, for a non-constant member; 0 for the constant function 1.
    """
    if all(v == 1 for v in fn):
        return 0
    plus = [d for d in fano.LINES if fn[d - 1] == 1]
    if len(plus) != 3:
        raise ValueError("not a member of R*: %r" % (fn,))
    common = set.intersection(*(set(fano.LINE_POINTS[d]) for d in plus))
    if len(common) != 1:
        raise ValueError("not a member of R*: %r" % (fn,))
    return common.pop()


# ---------------------------------------------------------------------------
# augmented automorphisms: (base permutation, sign 7-tuple)


def aug_apply(aug, coeffs, field=None):
    """Apply an augmented automorphism to an 8-coefficient vector."""
    g, s = aug
    out = [coeffs[0]] + [None] * 7
    for p in fano.POINTS:
        v = coeffs[p]
        out[fano.apply(g, p)] = v if s[p - 1] == 1 else -v
    return tuple(out)


def aug_compose(a2, a1):
    """(g2, s2) after (g1, s1): base g2 g1, signs s(P) = s2(g1 P) s1(P)."""
    g2, s2 = a2
    g1, s1 = a1
    g = fano.compose(g2, g1)
    s = tuple(s2[fano.apply(g1, p) - 1] * s1[p - 1] for p in fano.POINTS)
    return (g, s)


AUG_IDENTITY = (fano.IDENTITY, (1,) * 7)


def aug_inverse(aug):
    g, s = aug
    ginv = fano.inverse(g)
    return (ginv, tuple(s[fano.apply(ginv, p) - 1] for p in fano.POINTS))


def aug_order(aug):
    n = 1
    h = aug
    while h != AUG_IDENTITY:
        h = aug_compose(aug, h)
        n += 1
    return n


def is_algebra_automorphism(aug, eps=compfactor.EPS_TAU):
    """Check multiplicativity on all imaginary basis pairs."""
    g, s = aug
    for p in fano.POINTS:
        for q in fano.POINTS:
            if p == q:
                continue
            lhs_sign = compfactor.eps_get(eps, p, q) * s[fano.add(p, q) - 1]
            rhs_sign = (
                s[p - 1]
                * s[q - 1]
                * compfactor.eps_get(eps, fano.apply(g, p), fano.apply(g, q))
            )
            if lhs_sign != rhs_sign:
                return False
    return True


def t_map(d):
    """The kernel element t_D: identity base, +1 on D and -1 off D."""
    return (
        fano.IDENTITY,
        tuple(1 if p in fano.LINE_POINTS[d] else -1 for p in fano.POINTS),
    )


def lifts(g, eps=compfactor.EPS_TAU):
    """The eight sign functions lifting g, via Radon preimages of delta_star.

    A sign tuple s lifts g iff its multiplicative Radon transform equals
    delta_star(g, .); each result is validated as an algebra automorphism.
    """
    target = delta_star_fn(g, eps)
    out = []
    for s in radon.all_sign_functions():
        if radon.radon_mult(s) == target:
            aug = (g, s)
            if not is_algebra_automorphism(aug, eps):
                raise AssertionError("lift candidate fails multiplicativity")
            out.append(aug)
    if len(out) != 8:
        raise AssertionError("expected 8 lifts of %r, found %d" % (g, len(out)))
    return tuple(out)


def aug_serialize(aug):
    g, s = aug
    mask = 0
    for i, v in enumerate(s):
        if v == -1:
            mask |= 1 << i
    return [fano.serialize(g), mask]


def aug_deserialize(rec):
    g = fano.deserialize(rec[0])
    mask = rec[1]
    s = tuple(-1 if (mask >> i) & 1 else 1 for i in range(7))
    return (g, s)


def _cache_key(eps):
    return {
        "version": CACHE_VERSION,
        "coordinates": [fano.MASK[p] for p in fano.POINTS],
        "eps": compfactor.serialize(eps),
    }


def enumerate_aug_group(eps=compfactor.EPS_TAU, cache_dir=None):
    """All 1344 augmented automorphisms, optionally cached as JSON on disk."""
    path = None
    if cache_dir is not None:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, "aug-group.json")
        if os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            if data.get("key") == _cache_key(eps):
                return tuple(aug_deserialize(r) for r in data["elements"])
    group = _enumerate_aug_group_uncached(eps)
    if path is not None:
        data = {"key": _cache_key(eps), "elements": [aug_serialize(a) for a in group]}
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    return group


@lru_cache(maxsize=None)
def _enumerate_aug_group_uncached(eps=compfactor.EPS_TAU):
    out = []
    for g in fano.all_collineations():
        out.extend(lifts(g, eps))
    assert len(out) == 1344
    return tuple(out)


def projection(aug):
    return aug[0]


def kernel_elements():
    """ker(projection): the identity and the seven t_D."""
    return (AUG_IDENTITY,) + tuple(t_map(d) for d in fano.LINES)


def fiber_order_profile(g, eps=compfactor.EPS_TAU):
    return tuple(sorted(aug_order(a) for a in lifts(g, eps)))


def order7_same_orientation(tau_prime, tau=fano.TAU):
    """Whether an order-7 collineation induces tau's cyclic order on each line.

    True exactly for tau, tau^2 and tau^4.
    """
    if fano.order(tau_prime) != 7:
        raise ValueError("an orientation must have order 7")
    if fano.orientation_type(tau_prime) != fano.orientation_type(tau):
        return False
    for d in fano.LINES:
        if not fano.cyclic_equal(
            fano.induced_line_orientation(tau, d),
            fano.induced_line_orientation(tau_prime, d),
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# diagram emitters for the eight delta_star colorings


def delta_star_diagram_text(eps=compfactor.EPS_TAU):
    """Text grid: one section per R* member, lines tagged +/-, with the
    distinguished point (or '-' for the constant function).
    """
    classes = classify_delta_star(eps)
    sections = []
    for fn in sorted(classes, key=lambda f: (distinguished_point(f), f)):
        p = distinguished_point(fn)
        head = (
            "distinguished point: none (constant +1)"
            if p == 0
            else "distinguished point: P%d" % p
        )
        rows = [head]
        rows.append(
            "  " + "  ".join(
                "%s:%s" % (fano.line_name(d), "+" if fn[d - 1] == 1 else "-")
                for d in fano.LINES
            )
        )
        rows.append("  class size: %d" % len(classes[fn]))
        sections.append("\n".join(rows))
    return "\n\n".join(sections)


def delta_star_diagram_dot(eps=compfactor.EPS_TAU):
    """DOT graphs: incidence graph of the plane, one graph per coloring,
    line nodes colored by the sign.
    """
    classes = classify_delta_star(eps)
    out = []
    for idx, fn in enumerate(
        sorted(classes, key=lambda f: (distinguished_point(f), f))
    ):
        p0 = distinguished_point(fn)
        lines = ["graph deltastar_%d {" % idx]
        lines.append('  label="distinguished point %s";' % ("none" if p0 == 0 else "P%d" % p0))
        for p in fano.POINTS:
            shape = "doublecircle" if p == p0 else "circle"
            lines.append('  P%d [shape=%s];' % (p, shape))
        for d in fano.LINES:
            color = "green" if fn[d - 1] == 1 else "red"
            lines.append(
                '  D%d [shape=box, color=%s, sign="%s"];'
                % (d, color, "+1" if fn[d - 1] == 1 else "-1")
            )
            for p in sorted(fano.LINE_POINTS[d]):
                lines.append("  P%d -- D%d;" % (p, d))
        lines.append("}")
        out.append("\n".join(lines))
    return "\n".join(out)
