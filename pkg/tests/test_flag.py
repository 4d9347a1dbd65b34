"""Flag-space tests.  The relative-position pivot computation is checked
against an independent oracle that evaluates the incidence profile
r_ij = d_ij - d_{i-1,j} - d_{i,j-1} + d_{i-1,j-1} with d_ij computed as rank
defects of stacked prefix matrices, with its own Gaussian elimination."""

import itertools
import random

import pytest

from heckeflag.flag import Flag, build_space, canonical_cols
from heckeflag.hecke import HeckeAlgebra


# ---------------------------------------------------------------------------
# oracle: incidence profile via ranks


def _rank(vectors, q):
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    used = [False] * len(rows)
    for c in range(cols):
        piv = next(
            (r for r in range(len(rows)) if not used[r] and rows[r][c] % q), None
        )
        if piv is None:
            continue
        used[piv] = True
        rank += 1
        inv = pow(rows[piv][c], q - 2, q)
        rows[piv] = [x * inv % q for x in rows[piv]]
        for r in range(len(rows)):
            if r != piv and rows[r][c] % q:
                f = rows[r][c]
                rows[r] = [(x - f * y) % q for x, y in zip(rows[r], rows[piv])]
    return rank


def _pos_oracle(space, f1, f2):
    n, q = space.n, space.q
    d = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            if i == 0 or j == 0:
                d[i][j] = 0
                continue
            stacked = [f1.cols[a] for a in range(i)] + [f2.cols[b] for b in range(j)]
            d[i][j] = i + j - _rank(stacked, q)
    perm = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1]:
                perm[j - 1] = i
    return space.element_of_permutation(tuple(perm))


# ---------------------------------------------------------------------------
# construction


def test_build_space_counts():
    assert len(build_space(2, 3).flags) == 4
    assert len(build_space(3, 5).flags) == 186
    assert len(build_space(2, 7).flags) == 8


def test_build_space_2_3_is_the_line_set():
    # brute force: the four lines of F_3^2, each normalized so its lowest
    # nonzero coordinate is 1, must be exactly the first columns of the flags
    q = 3
    space = build_space(2, q)
    lines = set()
    for v in itertools.product(range(q), repeat=2):
        if v == (0, 0):
            continue
        inv = pow(next(x for x in reversed(v) if x), q - 2, q)
        lines.add(tuple(x * inv % q for x in v))
    got = {f.cols[0] for f in space.flags}
    assert got == lines
    assert len(got) == 4


def test_build_space_preconditions():
    with pytest.raises(ValueError, match="n <= q - 1|not prime|no split"):
        build_space(2, 2)
    with pytest.raises(ValueError, match="not prime"):
        build_space(2, 9)
    with pytest.raises(ValueError):
        build_space(1, 5)
    with pytest.raises(ValueError):
        build_space(5, 5)


def test_enumerated_flags_are_canonical():
    space = build_space(3, 5)
    for f in space.flags[:50]:
        assert canonical_cols(f.cols, 5) == f.cols


def test_canonical_form_is_coset_invariant():
    # right-multiplying by an invertible upper-triangular matrix must not
    # change the canonical form
    q = 5
    rng = random.Random(3)
    space = build_space(3, q)
    for f in rng.sample(space.flags, 25):
        upper = [[0] * 3 for _ in range(3)]
        for i in range(3):
            upper[i][i] = rng.randrange(1, q)
            for j in range(i + 1, 3):
                upper[i][j] = rng.randrange(q)
        # columns of f.cols * upper
        mixed = [
            [
                sum(f.cols[k][i] * upper[k][j] for k in range(3)) % q
                for i in range(3)
            ]
            for j in range(3)
        ]
        assert canonical_cols(mixed, q) == f.cols


def test_canonical_rejects_singular():
    with pytest.raises(ValueError, match="singular"):
        canonical_cols([[1, 0], [1, 0]], 3)


# ---------------------------------------------------------------------------
# relative position


def test_relative_position_identity():
    space = build_space(3, 5)
    for f in space.flags[:20]:
        assert space.relative_position(f, f) == space.weyl.identity


def test_relative_position_rejects_foreign_flag():
    space = build_space(3, 5)
    other = build_space(2, 3)
    with pytest.raises(ValueError, match="does not belong"):
        space.relative_position(other.standard_flag, space.standard_flag)


def test_relative_position_transverse_lines():
    space = build_space(2, 3)
    e1 = space.standard_flag
    e2 = space.coordinate_flag(space.weyl.normal_form([1]))
    assert space.relative_position(e1, e2).word == (1,)


def test_relative_position_reversed_flag():
    space = build_space(3, 5)
    std = space.standard_flag
    reversed_flag = space.flag_of_matrix(
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]]  # columns e3, e2, e1
    )
    assert space.relative_position(std, reversed_flag) == space.weyl.longest_element()


def test_relative_position_matches_incidence_oracle_gl2():
    space = build_space(2, 3)
    for f1 in space.flags:
        for f2 in space.flags:
            assert space.relative_position(f1, f2) == _pos_oracle(space, f1, f2)


def test_relative_position_matches_incidence_oracle_gl3_sampled():
    space = build_space(3, 5)
    rng = random.Random(11)
    for _ in range(300):
        f1, f2 = rng.choice(space.flags), rng.choice(space.flags)
        assert space.relative_position(f1, f2) == _pos_oracle(space, f1, f2)


def test_position_antisymmetry_exhaustive():
    for n, q in ((2, 3), (3, 5)):
        space = build_space(n, q)
        inverse = space.weyl.inverse
        for f1 in space.flags:
            for f2 in space.flags:
                assert space.relative_position(f2, f1) == inverse(
                    space.relative_position(f1, f2)
                )


def test_cell_sizes_exhaustive_gl3():
    space = build_space(3, 5)
    q = space.q
    for f in space.flags:
        sizes = {}
        for f2 in space.flags:
            w = space.relative_position(f, f2)
            sizes[w] = sizes.get(w, 0) + 1
        for w in space.weyl.elements:
            assert sizes.get(w, 0) == q**w.length


# ---------------------------------------------------------------------------
# torus-fixed flags


def test_torus_fixed_flags():
    space = build_space(3, 5)
    s = space.default_torus()
    fixed = space.torus_fixed_flags(s)
    assert len(fixed) == 6
    # independent route: filter the full enumeration by s-stability
    filtered = [f for f in space.flags if space.conjugate_flag(s, f) == f]
    assert sorted(f.cols for f in fixed) == sorted(f.cols for f in filtered)


def test_torus_fixed_flags_gl2():
    space = build_space(2, 3)
    fixed = space.torus_fixed_flags(space.default_torus())
    assert [f.cols for f in fixed] == [
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
    ]


def test_torus_validation():
    space = build_space(2, 5)
    with pytest.raises(ValueError, match="regular semisimple"):
        space.torus_fixed_flags((1, 1))
    with pytest.raises(ValueError, match="regular semisimple"):
        space.torus_fixed_flags((0, 1))
    with pytest.raises(ValueError, match="regular semisimple"):
        space.torus_fixed_flags((1, 6))  # 6 = 1 mod 5


# ---------------------------------------------------------------------------
# counts


def test_count_y_cell_example():
    space = build_space(2, 3)
    s = (1, 2)
    s1 = space.weyl.normal_form([1])
    assert space.count_Y_cell(s, space.standard_flag, s1, s1) == 2


def test_count_y_cell_identity_cases():
    space = build_space(2, 5)
    s = space.default_torus()
    B = space.standard_flag
    e = space.weyl.identity
    s1 = space.weyl.normal_form([1])
    assert space.count_Y_cell(s, B, e, s1) == 0
    assert space.count_Y_cell(s, B, e, e) == 1


def test_count_y_cell_requires_fixed_base():
    space = build_space(2, 5)
    moving = space.flag_of_matrix([[1, 1], [0, 1]])  # line through e1 + e2
    with pytest.raises(ValueError, match="not torus-fixed"):
        space.count_Y_cell(space.default_torus(), moving, space.weyl.identity,
                           space.weyl.identity)


def test_count_z_examples():
    space = build_space(2, 3)
    B = space.standard_flag
    Bp = space.coordinate_flag(space.weyl.normal_form([1]))
    s1 = space.weyl.normal_form([1])
    assert space.count_Z(B, Bp, s1) == 2
    assert space.count_Z(B, Bp, space.weyl.identity) == 1
    # degenerate pair: z = pos(B, B) = identity pins the scanned flag to B
    # itself, so the count collapses to the w = identity indicator
    for w in space.weyl.elements:
        assert space.count_Z(B, B, w) == (1 if w == space.weyl.identity else 0)


def test_count_y_total_examples():
    space = build_space(2, 3)
    s = (1, 2)
    assert space.count_Y_total(s, space.weyl.identity) == 2
    assert space.count_Y_total(s, space.weyl.normal_form([1])) == 2
    total = sum(space.count_Y_total(s, w) for w in space.weyl.elements)
    assert total == len(space.flags)


def test_count_y_total_partition_gl3():
    space = build_space(3, 5)
    s = space.default_torus()
    total = sum(space.count_Y_total(s, w) for w in space.weyl.elements)
    assert total == len(space.flags)


# ---------------------------------------------------------------------------
# the Hecke-side identities, small space (the full sweep is in acceptance)


def test_hecke_oracle_gl2():
    space = build_space(2, 3)
    H = HeckeAlgebra(space.weyl)
    s = space.default_torus()
    B = space.standard_flag
    for wb in space.weyl.elements:
        Bp = space.coordinate_flag(wb)
        z = space.relative_position(B, Bp)
        zi = space.weyl.inverse(z)
        for w in space.weyl.elements:
            assert space.count_Z(B, Bp, w) == H.structure_constant(w, zi, zi)(3)
            assert space.count_Y_cell(s, B, z, w) == space.count_Z(B, Bp, w)
    for w in space.weyl.elements:
        assert space.count_Y_total(s, w) == H.regular_trace(w)(3)
