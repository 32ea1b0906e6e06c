from itertools import combinations

import numpy as np
import pytest

from cuspquartics.codes import (
    CuspConfiguration,
    TernaryCode,
    configuration_from_coordinate_swaps,
    constant_weight_words,
    coplanar_subsets,
    eight_cusp_code,
    enumerate_constant_weight_codes,
    enumerate_divisible_families,
    f3_word,
    griesmer_holds,
    is_constant_weight,
    signed_word,
    supports,
    weight,
)
from cuspquartics.geometry import ProjectivePoint, eight_cusp_points

KNOWN_FAMILY = ((1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 7, 8),
                (1, 4, 5, 6, 7, 8), (2, 3, 5, 6, 7, 8))


def test_weight_examples():
    assert weight((1, 1, 1, 1, 1, 1, 0, 0)) == 6
    assert weight((0,) * 8) == 0
    assert weight(f3_word((0, 0, 1, 1, -1, -1, 1, 1))) == 6


def test_signed_word():
    assert signed_word((0, 1, 2)) == (0, 1, -1)
    assert f3_word((0, 1, -1)) == (0, 1, 2)


def test_griesmer_examples():
    assert griesmer_holds(8, 2, 6)
    assert sum(-(-6 // 3 ** i) for i in range(2)) == 8  # equality
    assert not griesmer_holds(8, 3, 6)
    assert griesmer_holds(6, 1, 6)
    with pytest.raises(ValueError):
        griesmer_holds(0, 1, 1)


def test_eight_cusp_code():
    code = eight_cusp_code()
    assert code.dimension == 2
    assert code.weight_distribution() == {0: 1, 6: 8}
    assert is_constant_weight(code, 6)
    got = {tuple(sorted(s)) for s in supports(code)}
    assert got == {(1, 2, 3, 4, 5, 6), (3, 4, 5, 6, 7, 8),
                   (1, 2, 3, 4, 7, 8), (1, 2, 5, 6, 7, 8)}
    assert len(got) == 4


def test_codewords_come_in_sign_pairs():
    code = eight_cusp_code()
    words = [w for w in code.codewords() if any(w)]
    for w in words:
        neg = tuple((-v) % 3 for v in w)
        assert neg in words
        assert (frozenset(i + 1 for i, v in enumerate(w) if v)
                == frozenset(i + 1 for i, v in enumerate(neg) if v))


def test_is_constant_weight_edge_cases():
    full = TernaryCode(2, [(1, 0), (0, 1)])
    assert not is_constant_weight(full, 2)
    zero = TernaryCode(2, [(0, 0)])
    assert zero.dimension == 0
    assert is_constant_weight(zero, 5)  # vacuous


def test_supports_edge_cases():
    one_dim = TernaryCode(8, [(1, 1, 1, 1, 1, 1, 0, 0)])
    assert supports(one_dim) == {frozenset(range(1, 7))}
    zero = TernaryCode(3, [(0, 0, 0)])
    assert supports(zero) == set()


def test_code_json_surface():
    import json

    payload = eight_cusp_code().to_json_dict()
    assert json.loads(json.dumps(payload)) == payload
    assert payload["dimension"] == 2
    assert payload["generators"][1] == [0, 0, 1, 1, -1, -1, 1, 1]
    assert payload["supports"] == [[1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 7, 8],
                                   [1, 2, 5, 6, 7, 8], [3, 4, 5, 6, 7, 8]]


def test_code_validation_and_contains():
    with pytest.raises(ValueError):
        TernaryCode(8, [(1, 1), (1, 1, 1, 1, 1, 1, 0, 0)])
    code = eight_cusp_code()
    assert code.contains((1, 1, 1, 1, 1, 1, 0, 0))
    assert code.contains((1, 1, -1, -1, 0, 0, 1, 1))
    assert not code.contains((1, 0, 0, 0, 0, 0, 0, 0))


def test_enumeration_matches_rank(make_rng):
    rng = make_rng(81)
    for _ in range(30):
        gens = [tuple(rng.randrange(3) for _ in range(6))
                for _ in range(rng.randint(0, 3))]
        code = TernaryCode(6, gens)
        words = code.codewords()
        assert len(words) == 3 ** code.dimension
        assert len(set(words)) == len(words)


def test_coplanar_subsets():
    pts = eight_cusp_points()
    four = {frozenset(s) for s in coplanar_subsets(pts, 4)}
    assert frozenset({1, 2, 3, 4}) in four
    assert frozenset({5, 6, 7, 8}) not in four
    assert len(four) == 25
    five = {frozenset(s) for s in coplanar_subsets(pts, 5)}
    assert five == {frozenset(s) for s in
                    ((1, 2, 5, 7, 8), (1, 3, 5, 6, 7),
                     (2, 4, 5, 6, 8), (3, 4, 6, 7, 8))}
    assert frozenset({1, 3, 5, 6, 7}) in five  # all on x3 = 0
    with pytest.raises(ValueError):
        coplanar_subsets(pts, 3)


def test_configuration_symmetries_and_orbits():
    config = configuration_from_coordinate_swaps(eight_cusp_points())
    assert config.orbits() == [(1, 2, 3, 4), (5, 6), (7, 8)]
    with pytest.raises(ValueError):
        CuspConfiguration(eight_cusp_points(), ((0, 0, 1, 2, 3, 4, 5, 6),))
    with pytest.raises(ValueError):
        configuration_from_coordinate_swaps(
            [ProjectivePoint((1, 2, 3, 4))], ((0, 1),))


def test_constant_weight_code_search():
    codes = enumerate_constant_weight_codes(8, 6)
    assert len(codes) == 13440
    sample = codes[:25] + codes[-25:]
    for code in sample:
        assert code.dimension == 2
        assert is_constant_weight(code, 6)
        supps = list(code.supports())
        assert len(supps) == 4
        for a, b in combinations(supps, 2):
            assert len(a & b) == 4


def test_enumeration_finds_exactly_the_known_family():
    config = configuration_from_coordinate_swaps(eight_cusp_points())
    families = enumerate_divisible_families(config)
    assert families == [KNOWN_FAMILY]


def test_enumeration_generic_points_unconstrained():
    # moment-curve points: no 4 coplanar, trivial symmetry group
    points = [ProjectivePoint((1, i, i * i, i ** 3)) for i in range(8)]
    assert coplanar_subsets(points, 4) == []
    config = CuspConfiguration(tuple(points), ())
    families = enumerate_divisible_families(config)
    assert len(families) == 105  # every support family survives


def test_enumeration_needs_six_points():
    points = tuple(ProjectivePoint((1, i, i * i, i ** 3)) for i in range(5))
    config = CuspConfiguration(points, ())
    assert enumerate_divisible_families(config) == []


def test_no_three_dimensional_constant_weight_extension():
    # cross-check of the dimension bound: no found code extends to a
    # 3-dimensional all-weight-6 code.  w extends span(v1..v4) iff w is
    # pair-compatible with every vi, so empty intersections settle it.
    words = constant_weight_words(8, 6)
    n = len(words)
    index = {tuple(int(x) for x in row): i for i, row in enumerate(words)}
    compat = np.zeros((n, n), dtype=bool)
    for i in range(n):
        s1 = (words[i] + words) % 3
        s2 = (words[i] + 2 * words) % 3
        ok = ((np.count_nonzero(s1, axis=1) == 6)
              & (np.count_nonzero(s2, axis=1) == 6))
        ok[i] = False
        compat[i] = ok
    for code in enumerate_constant_weight_codes(8, 6):
        reps = []
        seen = set()
        for w in code.codewords():
            if not any(w):
                continue
            neg = tuple((-v) % 3 for v in w)
            if neg in seen:
                continue
            seen.add(w)
            reps.append(index[w])
        assert len(reps) == 4
        joint = compat[reps[0]] & compat[reps[1]] & compat[reps[2]] & compat[reps[3]]
        assert not joint.any()
