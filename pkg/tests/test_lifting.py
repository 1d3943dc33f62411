import json
import os

from fanog2 import compfactor, fano, lifting, octonion


def test_delta_star_pair_independent():
    a, b = fano.standard_generators()
    for g in (a, b, fano.TAU):
        for d in fano.LINES:
            vals = set()
            pts = sorted(fano.LINE_POINTS[d])
            for i in range(3):
                for j in range(3):
                    if i != j:
                        p, q = pts[i], pts[j]
                        vals.add(
                            compfactor.eps_get(compfactor.EPS_TAU, p, q)
                            * compfactor.eps_get(
                                compfactor.EPS_TAU,
                                fano.apply(g, p),
                                fano.apply(g, q),
                            )
                        )
            assert len(vals) == 1
            assert vals.pop() == lifting.delta_star(g, d)


def test_delta_star_global_identities():
    assert lifting.delta_star_properties()


def test_distinguished_points():
    a, b = fano.standard_generators()
    assert lifting.distinguished_point(lifting.delta_star_fn(a)) == 4
    assert lifting.distinguished_point(lifting.delta_star_fn(b)) == 3
    assert lifting.distinguished_point((1,) * 7) == 0


def test_aug_group_axioms():
    a, _ = fano.standard_generators()
    ahat = (a, (1, 1, 1, 1, -1, 1, -1))
    assert lifting.is_algebra_automorphism(ahat)
    assert lifting.aug_compose(ahat, lifting.aug_inverse(ahat)) == lifting.AUG_IDENTITY
    assert lifting.aug_order(ahat) in (2, 4)
    x = octonion.from_ints((1, 2, 0, -1, 3, 0, 1, 2))
    y = octonion.from_ints((0, 1, 1, 1, 0, -2, 0, 1))
    lhs = lifting.aug_apply(ahat, octonion.mul(x, y))
    rhs = octonion.mul(lifting.aug_apply(ahat, x), lifting.aug_apply(ahat, y))
    assert lhs == rhs


def test_kernel_is_translation_signs():
    ker = lifting.kernel_elements()
    assert len(ker) == 8
    for aug in ker:
        assert aug[0] == fano.IDENTITY
        assert lifting.is_algebra_automorphism(aug)


def test_lifts_count_and_validation():
    for g in [fano.IDENTITY, fano.TAU] + list(fano.all_collineations())[:6]:
        assert len(lifting.lifts(g)) == 8


def test_serialize_roundtrip():
    a, _ = fano.standard_generators()
    for aug in lifting.lifts(a):
        assert lifting.aug_deserialize(lifting.aug_serialize(aug)) == aug


def test_cache_roundtrip(tmp_path):
    cold = lifting.enumerate_aug_group(cache_dir=str(tmp_path))
    path = os.path.join(str(tmp_path), "aug-group.json")
    assert os.path.exists(path)
    with open(path) as fh:
        data = json.load(fh)
    assert data["key"]["version"] == lifting.CACHE_VERSION
    assert len(data["elements"]) == 1344
    warm = lifting.enumerate_aug_group(cache_dir=str(tmp_path))
    assert cold == warm


def test_cache_invalidation(tmp_path):
    path = os.path.join(str(tmp_path), "aug-group.json")
    with open(path, "w") as fh:
        json.dump({"key": {"version": -1}, "elements": []}, fh)
    group = lifting.enumerate_aug_group(cache_dir=str(tmp_path))
    assert len(group) == 1344
    with open(path) as fh:
        assert json.load(fh)["key"]["version"] == lifting.CACHE_VERSION


def test_order7_orientation_powers():
    sevens = [
        g
        for g in fano.all_collineations()
        if fano.order(g) == 7 and lifting.order7_same_orientation(g)
    ]
    assert len(sevens) == 3
    assert fano.TAU in sevens
    tau2 = fano.compose(fano.TAU, fano.TAU)
    tau4 = fano.compose(tau2, tau2)
    assert set(sevens) == {fano.TAU, tau2, tau4}


def test_diagram_emitters():
    text = lifting.delta_star_diagram_text()
    assert text.count("distinguished point") == 8
    dot = lifting.delta_star_diagram_dot()
    assert dot.count("graph ") == 8
    assert "doublecircle" in dot
