import numpy as np
import pytest

from oracles import relabel_equal
from stronga.constructions import (
    duplication,
    duplication_projection,
    duplication_view,
    idealization,
    poly_quotient,
    product,
    quotient,
)
from stronga.errors import DegenerateRingError, PreconditionError, RingMismatchError
from stronga.ideals import all_ideals, annihilator, ideal_generate, unit_ideal, zero_ideal
from stronga.isomorphism import find_isomorphism, ring_isomorphic
from stronga.modules import module_direct_sum, module_free, module_ideal, module_quotient
from stronga.ring import check_ring_axioms, is_field, is_local, is_unit, is_zero_divisor, zmod


# -- products -----------------------------------------------------------------


def test_product_orthogonal_idempotents():
    F = product(zmod(2), zmod(2))
    assert F.size == 4
    assert F.mul(F.encode((1, 0)), F.encode((0, 1))) == F.encode((0, 0))
    assert F.descriptor == "product(Z/2, Z/2)"


def test_product_rejects_zero_factor():
    with pytest.raises(DegenerateRingError):
        product(zmod(3), zmod(1))


def test_product_crt_matches_zmod6():
    P, Z6 = product(zmod(2), zmod(3)), zmod(6)
    crt = [Z6.encode(next(k for k in range(6) if k % 2 == a and k % 3 == b)) for a, b in map(P.decode, range(6))]
    assert relabel_equal(P, Z6, crt)


# -- quotients -----------------------------------------------------------------


def test_quotient_of_z12_by_4_is_z4():
    R = zmod(12)
    Q = quotient(R, ideal_generate(R, [4]))
    assert Q.size == 4
    assert [Q.decode(i) for i in range(4)] == [0, 1, 2, 3]
    assert relabel_equal(Q, zmod(4), list(range(4)))


def test_quotient_by_zero_and_whole():
    R = zmod(6)
    Q0 = quotient(R, zero_ideal(R))
    assert relabel_equal(Q0, R, list(range(6)))
    Q1 = quotient(R, unit_ideal(R))
    assert Q1.size == 1 and Q1.is_zero


def test_quotient_representatives_are_least():
    R = product(zmod(4), zmod(2))
    I = ideal_generate(R, [R.encode((2, 0))])
    Q = quotient(R, I)
    assert Q.size == 4
    for q in range(Q.size):
        rep = R.encode(Q.decode(q))
        coset = {R.add(rep, m) for m in I.members}
        assert rep == min(coset)


def test_quotient_rejects_foreign_ideal():
    with pytest.raises(RingMismatchError):
        quotient(zmod(4), ideal_generate(zmod(4), [2]))


# -- polynomial quotients -------------------------------------------------------


def test_polyquot_dual_numbers():
    P = poly_quotient(zmod(2), [0, 0, 1])
    x = P.encode([0, 1])
    assert P.size == 4 and P.mul(x, x) == 0
    assert is_local(P)


def test_polyquot_gf4_is_field():
    P = poly_quotient(zmod(2), [1, 1, 1])
    assert is_field(P)
    assert all(is_unit(P, x) for x in range(1, 4))


def test_polyquot_degree_one_is_base():
    R = zmod(5)
    P = poly_quotient(R, [3, 1])
    assert ring_isomorphic(P, R)


def test_polyquot_rejects_non_monic():
    with pytest.raises(PreconditionError):
        poly_quotient(zmod(4), [1, 2])
    with pytest.raises(PreconditionError):
        poly_quotient(zmod(4), [1])


def test_polyquot_matches_naive_polynomial_product():
    R = zmod(3)
    f = [1, 2, 0, 1]  # X^3 + 2X + 1
    P = poly_quotient(R, f)

    def reduce(c):
        c = list(c)
        for d in range(len(c) - 1, 2, -1):
            t = c[d]
            c[d] = 0
            for i in range(3):
                c[d - 3 + i] = (c[d - 3 + i] - t * f[i]) % 3
        return [x % 3 for x in c[:3]]

    for a in range(P.size):
        for b in range(P.size):
            pa, pb = P.decode(a), P.decode(b)
            prod = [0] * 5
            for i, x in enumerate(pa):
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
            assert P.decode(P.mul(a, b)) == reduce(prod)


# -- idealization ------------------------------------------------------------------


def test_idealization_of_z2_by_free1_is_dual_numbers():
    Z2 = zmod(2)
    T = idealization(Z2, module_free(Z2, 1))
    assert T.mul(T.encode((1, 1)), T.encode((1, 1))) == T.encode((1, 0))
    assert T.mul(T.encode((0, 1)), T.encode((0, 1))) == T.encode((0, 0))
    P = poly_quotient(Z2, [0, 0, 1])
    phi = [P.encode([a, e[0]]) for a, e in map(T.decode, range(4))]
    assert relabel_equal(T, P, phi)


def test_idealization_sizes_and_law():
    Z4 = zmod(4)
    E = module_quotient(Z4, ideal_generate(Z4, [2]))
    T = idealization(Z4, E)
    assert T.size == 8
    S = idealization(Z4, module_free(Z4, 2))
    for x in range(S.size):
        for y in range(S.size):
            (a, e), (b, f) = S.decode(x), S.decode(y)
            expect = ((a * b) % 4, [(a * f[i] + b * e[i]) % 4 for i in range(2)])
            assert S.decode(S.mul(x, y)) == expect


def test_idealization_square_zero_ideal_of_zero_divisors():
    A = product(zmod(2), zmod(3))
    S = idealization(A, module_free(A, 1))
    pure = [S.encode((A.decode(0), [A.decode(e)])) for e in range(A.size)]
    for x in pure:
        for y in pure:
            assert S.mul(x, y) == 0
        assert is_zero_divisor(S, x)
    assert set(ideal_generate(S, pure).members) == set(pure)


def test_idealization_rejects_other_base():
    with pytest.raises(RingMismatchError):
        idealization(zmod(2), module_free(zmod(2), 1))


# -- duplication ---------------------------------------------------------------------


def test_duplication_law_and_view():
    R = zmod(4)
    I = ideal_generate(R, [2])
    S = duplication(R, I)
    assert S.size == 8
    for x in range(S.size):
        for y in range(S.size):
            (r, e), (s, f) = S.decode(x), S.decode(y)
            assert S.decode(S.mul(x, y)) == ((r * s) % 4, (r * f + s * e + e * f) % 4)
        r, e = S.decode(x)
        assert duplication_view(S, x) == (r, (r + e) % 4)


def test_duplication_rejects_foreign_ideal():
    with pytest.raises(RingMismatchError):
        duplication(zmod(4), ideal_generate(zmod(4), [2]))


def test_duplication_projection_is_surjective_homomorphism(corpus64):
    for R in [R for R in corpus64 if R.size <= 16]:
        for I in all_ideals(R):
            S = duplication(R, I)
            p = duplication_projection(S)
            assert set(p.tolist()) == set(range(R.size))
            assert (p[S.add_table] == R.add_table[np.ix_(p, p)]).all()
            assert (p[S.mul_table] == R.mul_table[np.ix_(p, p)]).all()
            kernel = {x for x in range(S.size) if p[x] == 0}
            assert kernel == {S.encode((R.decode(0), R.decode(e))) for e in I.members}


def test_duplication_along_zero_is_base():
    R = product(zmod(2), zmod(3))
    S = duplication(R, zero_ideal(R))
    assert ring_isomorphic(S, R)


def test_duplication_along_whole_ring_is_product():
    R = zmod(6)
    S, P = duplication(R, unit_ideal(R)), product(R, R)
    phi = [P.encode(duplication_view(S, x)) for x in range(S.size)]
    assert relabel_equal(S, P, phi)


def test_duplication_square_zero_coincides_with_idealization():
    R = zmod(4)
    I = ideal_generate(R, [2])
    D, T = duplication(R, I), idealization(R, module_ideal(R, I))
    assert np.array_equal(D.mul_table, T.mul_table)
    assert np.array_equal(D.add_table, T.add_table)


def test_constructed_rings_satisfy_axioms():
    R = zmod(4)
    I = ideal_generate(R, [2])
    rings = [
        product(R, zmod(3)),
        quotient(Z12 := zmod(12), ideal_generate(Z12, [3])),
        poly_quotient(zmod(3), [0, 0, 1]),
        idealization(R, module_free(R, 2)),
        idealization(R, module_quotient(R, I)),
        duplication(R, I),
    ]
    for S in rings:
        assert check_ring_axioms(S, mode="full").ok, S.descriptor


# -- modules ---------------------------------------------------------------------------


def test_free_module_basis():
    Z2 = zmod(2)
    F = module_free(Z2, 2)
    assert F.size == 4
    assert [F.decode(b) for b in F.basis] == [[1, 0], [0, 1]]


def test_quotient_module_is_torsion():
    Z4 = zmod(4)
    E = module_quotient(Z4, ideal_generate(Z4, [2]))
    assert (E.smul_table[2] == 0).all()


def test_direct_sum_size_and_empty():
    Z6 = zmod(6)
    D = module_direct_sum([module_quotient(Z6, ideal_generate(Z6, [2])), module_quotient(Z6, ideal_generate(Z6, [3]))])
    assert D.size == 6
    with pytest.raises(PreconditionError):
        module_direct_sum([])


def test_modules_satisfy_axioms():
    Z6 = zmod(6)
    mods = [
        module_free(Z6, 1),
        module_free(zmod(3), 3),
        module_quotient(Z6, ideal_generate(Z6, [2])),
        module_ideal(Z6, ideal_generate(Z6, [3])),
        module_direct_sum([module_free(Z6, 1), module_quotient(Z6, ideal_generate(Z6, [3]))]),
    ]
    for E in mods:
        assert E.axiom_failures() == [], E.descriptor


# -- isomorphism -------------------------------------------------------------------------


def test_isomorphism_examples():
    assert not ring_isomorphic(zmod(4), poly_quotient(zmod(2), [0, 0, 1]))
    R = product(zmod(2), zmod(4))
    assert ring_isomorphic(R, R)
    assert ring_isomorphic(zmod(6), product(zmod(2), zmod(3)))
    assert not ring_isomorphic(zmod(4), zmod(5))


def test_isomorphism_map_respects_tables():
    A = product(zmod(3), zmod(4))
    B = product(zmod(4), zmod(3))
    phi = find_isomorphism(A, B)
    assert phi is not None and relabel_equal(A, B, phi.tolist())


def test_isomorphism_distinguishes_same_fingerprint_size():
    F4 = poly_quotient(zmod(2), [1, 1, 1])
    for other in (product(zmod(2), zmod(2)), poly_quotient(zmod(2), [0, 0, 1]), zmod(4)):
        assert not ring_isomorphic(F4, other)


def test_isomorphism_cap():
    from stronga.errors import ResourceCapError

    with pytest.raises(ResourceCapError):
        ring_isomorphic(zmod(81), zmod(81))


def test_annihilator_of_pure_part_in_idealization():
    A = zmod(4)
    S = idealization(A, module_free(A, 1))
    top = ideal_generate(S, [x for x in range(S.size) if is_zero_divisor(S, x)])
    assert annihilator(S, top).size > 1
