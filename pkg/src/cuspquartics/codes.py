"""Ternary linear codes attached to cusp configurations.

Words live in F3^q with the output convention that the residue 2 prints as
-1.  A code is given by generator words; supports of nonzero codewords are
the combinatorial shadows of candidate three-divisible cusp sets.  The
enumeration searches all two-dimensional constant-weight-6 subcodes
exhaustively (the space is tiny) and filters support families by symmetry
invariance, pairwise overlap and coplanarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .geometry import ProjectivePoint


def f3_word(values):
    """Normalize a word to residues 0, 1, 2 (accepts -1 for 2)."""
    return tuple(int(v) % 3 for v in values)


def signed_word(word):
    """Output form with residue 2 rendered as -1."""
    return tuple(-1 if v % 3 == 2 else v % 3 for v in word)


def weight(word):
    """Number of nonzero coordinates."""
    return sum(1 for v in word if v % 3 != 0)


def griesmer_holds(q, d, r):
    """The ternary Griesmer inequality q >= sum_{i<d} ceil(r / 3^i)."""
    if q < 1 or d < 1 or r < 1:
        raise ValueError("q, d, r must be positive")
    return q >= sum(-(-r // 3 ** i) for i in range(d))


def _rref_mod3(rows):
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] % 3 != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 if m[r][c] % 3 == 1 else 2
        m[r] = [(x * inv) % 3 for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % 3:
                f = m[i][c]
                m[i] = [(a - f * b) % 3 for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [row for row in m[:r]], pivots


class TernaryCode:
    """A linear code over F3 given by generator words."""

    def __init__(self, length, generators):
        self.length = length
        self.generators = tuple(f3_word(g) for g in generators)
        for g in self.generators:
            if len(g) != length:
                raise ValueError(f"generator {signed_word(g)} has length "
                                 f"{len(g)}, expected {length}")
        rows, pivots = _rref_mod3(self.generators)
        self.matrix = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.dimension = len(pivots)

    def codewords(self):
        """All 3^d codewords, in deterministic order."""
        words = []
        d = self.dimension
        for idx in range(3 ** d):
            coeffs = []
            n = idx
            for _ in range(d):
                coeffs.append(n % 3)
                n //= 3
            word = [0] * self.length
            for c, row in zip(coeffs, self.matrix):
                if c:
                    word = [(w + c * x) % 3 for w, x in zip(word, row)]
            words.append(tuple(word))
        return words

    def contains(self, word):
        word = f3_word(word)
        if len(word) != self.length:
            return False
        work = list(word)
        for row, pivot in zip(self.matrix, self.pivots):
            if work[pivot]:
                f = work[pivot]
                work = [(a - f * b) % 3 for a, b in zip(work, row)]
        return all(v == 0 for v in work)

    def weight_distribution(self):
        dist = {}
        for w in self.codewords():
            k = weight(w)
            dist[k] = dist.get(k, 0) + 1
        return dist

    def supports(self):
        """Supports of the nonzero codewords, as 1-based index sets."""
        return {frozenset(i + 1 for i, v in enumerate(w) if v)
                for w in self.codewords() if any(w)}

    def canonical_key(self):
        return tuple(sorted(self.codewords()))

    def to_json_dict(self):
        return {"length": self.length,
                "dimension": self.dimension,
                "generators": [list(signed_word(g)) for g in self.generators],
                "weight_distribution": {str(k): v for k, v in
                                        sorted(self.weight_distribution().items())},
                "supports": sorted(sorted(s) for s in self.supports())}

    def __repr__(self):
        return f"TernaryCode(length={self.length}, dimension={self.dimension})"


def eight_cusp_code():
    """The [8, 2, {6}] code spanned by 11111100 and 0011(-1)(-1)11."""
    return TernaryCode(8, [(1, 1, 1, 1, 1, 1, 0, 0),
                           (0, 0, 1, 1, -1, -1, 1, 1)])


def is_constant_weight(code, r):
    """True iff every nonzero codeword has weight exactly r."""
    return all(weight(w) == r for w in code.codewords() if any(w))


def supports(code):
    return code.supports()


# ---------------------------------------------------------------------------
# configurations and coplanarity
# ---------------------------------------------------------------------------

def coplanar_subsets(points, k):
    """All k-subsets of the points whose coordinate matrix has rank <= 3."""
    if k < 4:
        raise ValueError("coplanarity only constrains k >= 4 points")
    coords = [_coords(p) for p in points]
    out = []
    for sub in combinations(range(len(points)), k):
        if linalg.rank([coords[i] for i in sub]) <= 3:
            out.append(tuple(i + 1 for i in sub))
    return out


def _coords(p):
    if isinstance(p, ProjectivePoint):
        return list(p.coords)
    return [Fraction(c) for c in p]


@dataclass(frozen=True)
class CuspConfiguration:
    """Labelled points plus the index permutations of their symmetries."""

    points: tuple
    symmetries: tuple

    def __post_init__(self):
        n = len(self.points)
        for perm in self.symmetries:
            if sorted(perm) != list(range(n)):
                raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")

    def orbits(self):
        """Orbit partition of the indices under the symmetry group (1-based)."""
        n = len(self.points)
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for perm in self.symmetries:
            for i, j in enumerate(perm):
                parent[find(i)] = find(j)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i + 1)
        return sorted(tuple(g) for g in groups.values())


def configuration_from_coordinate_swaps(points, swaps=((0, 1), (2, 3))):
    """Build a configuration whose symmetries swap coordinate pairs."""
    points = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)
                   for p in points)
    index = {p: i for i, p in enumerate(points)}
    perms = []
    for i, j in swaps:
        perm = []
        for p in points:
            c = list(p.coords)
            c[i], c[j] = c[j], c[i]
            image = ProjectivePoint(c)
            if image not in index:
                raise ValueError(f"swap x{i}<->x{j} does not preserve the points")
            perm.append(index[image])
        perms.append(tuple(perm))
    return CuspConfiguration(points, tuple(perms))


# ---------------------------------------------------------------------------
# exhaustive constant-weight search
# ---------------------------------------------------------------------------

def constant_weight_words(length, w):
    """All weight-w words in F3^length as an int8 array (deterministic order)."""
    rows = []
    for supp in combinations(range(length), w):
        for signs in range(2 ** w):
            word = [0] * length
            for b, i in enumerate(supp):
                word[i] = 1 if (signs >> b) & 1 == 0 else 2
            rows.append(word)
    if not rows:
        return np.zeros((0, length), dtype=np.int8)
    return np.array(rows, dtype=np.int8)


def enumerate_constant_weight_codes(length, w):
    """All 2-dimensional codes of the given length whose nonzero words all
    have weight w.  Exhaustive over pairs of weight-w words; each code is
    returned once (canonicalized by its codeword set).
    """
    words = constant_weight_words(length, w)
    n = len(words)
    if n == 0:
        return []
    index = {tuple(int(x) for x in row): i for i, row in enumerate(words)}
    neg_index = np.array([index[tuple(int(x) for x in (2 * row) % 3)]
                          for row in words])
    found = {}
    for i in range(n):
        if neg_index[i] < i:
            continue
        s1 = (words[i] + words) % 3
        s2 = (words[i] + 2 * words) % 3
        ok = ((np.count_nonzero(s1, axis=1) == w)
              & (np.count_nonzero(s2, axis=1) == w))
        ok[:i + 1] = False
        for j in np.nonzero(ok)[0]:
            c1 = tuple(int(x) for x in s1[j])
            c2 = tuple(int(x) for x in s2[j])
            i1, i2 = index[c1], index[c2]
            members = (i, int(neg_index[i]), int(j), int(neg_index[j]),
                       i1, int(neg_index[i1]), i2, int(neg_index[i2]))
            if min(members) < i:
                continue
            key = frozenset(members)
            if key not in found:
                found[key] = (i, int(j))
    codes = []
    for i, j in sorted(found.values()):
        codes.append(TernaryCode(length, [tuple(int(x) for x in words[i]),
                                          tuple(int(x) for x in words[j])]))
    return codes


def enumerate_divisible_families(config):
    """Candidate three-divisible support families on a configuration.

    Searches every 2-dimensional constant-weight-6 subcode, keeps the
    4-support families that are invariant under the symmetry group, overlap
    pairwise in at most 4 indices and contain no coplanar 5-subset, and
    returns them deduplicated.  These are the necessary conditions; the
    output is a superset of the true three-divisible families.
    """
    points = config.points
    q = len(points)
    if q < 6:
        return []
    coplanar5 = {frozenset(s) for s in coplanar_subsets(points, 5)} if q >= 5 else set()
    families = {}
    for code in enumerate_constant_weight_codes(q, 6):
        family = frozenset(code.supports())
        if len(family) != 4:
            continue
        families.setdefault(family, []).append(code)
    kept = []
    for family in families:
        if not _symmetry_invariant(family, config.symmetries):
            continue
        if any(len(a & b) > 4 for a, b in combinations(family, 2)):
            continue
        if any(c <= s for s in family for c in coplanar5):
            continue
        kept.append(tuple(sorted(tuple(sorted(s)) for s in family)))
    return sorted(set(kept))


def _symmetry_invariant(family, symmetries):
    for perm in symmetries:
        mapped = frozenset(frozenset(perm[i - 1] + 1 for i in s) for s in family)
        if mapped != family:
            return False
    return True
