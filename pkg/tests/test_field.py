import pytest

from simds import GF, validate_modulus


def egcd_inverse(gf, a):
    """Independent inverse oracle: extended Euclid over GF(2)[x] or Z."""
    if gf.m == 1:
        t, new_t, r, new_r = 0, 1, gf.p, a
        while new_r:
            quot = r // new_r
            t, new_t = new_t, t - quot * new_t
            r, new_r = new_r, r - quot * new_r
        assert r == 1
        return t % gf.p
    # polynomial version, coefficients in GF(2)
    def degree(p):
        return p.bit_length() - 1

    def polydivmod(num, den):
        quot = 0
        while num and degree(num) >= degree(den):
            shift = degree(num) - degree(den)
            quot ^= 1 << shift
            num ^= den << shift
        return quot, num

    def polymul(u, v):
        out = 0
        while v:
            if v & 1:
                out ^= u
            u <<= 1
            v >>= 1
        return out

    t, new_t, r, new_r = 0, 1, gf.poly, a
    while new_r:
        quot, rem = polydivmod(r, new_r)
        t, new_t = new_t, t ^ polymul(quot, new_t)
        r, new_r = new_r, rem
    assert r == 1
    return t


@pytest.fixture(params=["gf4", "gf8", "gf16a"], scope="module")
def small_field(request):
    return request.getfixturevalue(request.param)


def test_add_examples(gf4, gf8, f11):
    assert gf4.add(2, 3) == 1
    assert gf8.add(6, 1) == 7
    assert f11.add(7, 4) == 0


def test_mul_examples(gf8, gf16a):
    # alpha * alpha^2 = alpha^3 = alpha^2 + 1 under x^3+x^2+1
    assert gf8.mul(2, 4) == 5
    # alpha^3 * alpha = alpha + 1 under x^4+x+1
    assert gf16a.mul(8, 2) == 3


def test_mul_identity(small_field):
    for a in small_field.elements():
        assert small_field.mul(a, 1) == a


def test_inv_examples(gf4, f11):
    assert gf4.inv(2) == 3
    assert gf4.mul(2, 3) == 1
    assert f11.inv(2) == 6


def test_inv_of_one(small_field):
    assert small_field.inv(1) == 1


def test_inv_zero_rejected(small_field):
    with pytest.raises(ZeroDivisionError):
        small_field.inv(0)


def test_pow_examples(gf8, gf16b):
    assert gf8.pow(2, 7) == 1
    assert gf16b.pow(2, 2) == 4
    for a in gf8.elements():
        if a:
            assert gf8.pow(a, 1) == a


def test_pow_zero_zero_rejected(gf4):
    with pytest.raises(ValueError):
        gf4.pow(0, 0)
    assert gf4.pow(0, 3) == 0


def test_elements_enumeration(gf4, f11):
    assert list(gf4.elements(nonzero_only=True)) == [1, 2, 3]
    assert list(gf4.elements()) == [0, 1, 2, 3]
    assert len(list(f11.elements(nonzero_only=True))) == 10


def test_validate_modulus():
    assert validate_modulus(2, 3, 0b1101)
    assert validate_modulus(2, 3, 0b1011)
    assert validate_modulus(2, 4, 0b10011)
    assert validate_modulus(2, 4, 0b11001)
    assert not validate_modulus(2, 2, 0b110)   # x^2 + x = x(x+1)
    assert not validate_modulus(2, 3, 0b1111)  # divisible by x+1
    assert not validate_modulus(2, 3, 0b111)   # wrong degree
    assert validate_modulus(11, 1, None)


def test_validate_modulus_counts():
    # number of irreducible degree-m polynomials over GF(2): 1, 2, 3
    for m, expect in ((2, 1), (3, 2), (4, 3)):
        found = sum(validate_modulus(2, m, p)
                    for p in range(1 << m, 1 << (m + 1)))
        assert found == expect


def test_bad_construction():
    with pytest.raises(ValueError):
        GF(4, 1)            # not prime
    with pytest.raises(ValueError):
        GF(2, 2, 0b110)     # reducible modulus
    with pytest.raises(ValueError):
        GF(2, 3)            # missing modulus
    with pytest.raises(ValueError):
        GF(3, 2, None)      # odd-characteristic extension
    with pytest.raises(ValueError):
        GF(2, 17, (1 << 17) | 0b11)  # beyond the size cap


def test_field_axioms_exhaustive(small_field):
    """Associativity, commutativity, distributivity over all triples."""
    gf = small_field
    elems = list(gf.elements())
    for a in elems:
        for b in elems:
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
    for a in elems:
        for b in elems:
            for c in elems:
                assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
                assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
                assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))


def test_identities_and_inverses(small_field):
    gf = small_field
    for a in gf.elements():
        assert gf.add(a, 0) == a
        assert gf.mul(a, 0) == 0
        assert gf.add(a, a) == 0
        if a:
            assert gf.mul(a, gf.inv(a)) == 1


def test_char2_frobenius(small_field):
    gf = small_field
    for a in gf.elements():
        for b in gf.elements():
            lhs = gf.mul(gf.add(a, b), gf.add(a, b))
            rhs = gf.add(gf.mul(a, a), gf.mul(b, b))
            assert lhs == rhs


def test_multiplicative_group_order(small_field):
    for a in small_field.elements(nonzero_only=True):
        assert small_field.pow(a, small_field.q - 1) == 1


def test_inverse_vs_exhaustive_search(small_field):
    gf = small_field
    for a in gf.elements(nonzero_only=True):
        matches = [b for b in gf.elements(nonzero_only=True) if gf.mul(a, b) == 1]
        assert matches == [gf.inv(a)]


def test_inverse_vs_extended_euclid(small_field, f11):
    for gf in (small_field, f11):
        for a in gf.elements(nonzero_only=True):
            assert gf.inv(a) == egcd_inverse(gf, a)


def test_tables_match_raw_arithmetic():
    lazy = GF(2, 4, 0b10011, use_tables=False)
    eager = GF(2, 4, 0b10011, use_tables=True)
    for a in range(16):
        for b in range(16):
            assert lazy.mul(a, b) == eager.mul(a, b)
        if a:
            assert lazy.inv(a) == eager.inv(a)


def test_sqrt(small_field):
    gf = small_field
    for a in gf.elements():
        r = gf.sqrt(a)
        assert gf.mul(r, r) == a


def test_serialization_roundtrip(gf8, f11):
    assert gf8.to_dict() == {"p": 2, "m": 3, "poly": 13}
    assert GF.from_dict(gf8.to_dict()) == gf8
    assert f11.to_dict() == {"p": 11, "m": 1}
    assert GF.from_dict({"p": 11, "m": 1}) == f11


def test_field_identity_semantics(gf8, gf8b):
    # same size, different modulus: different fields
    assert gf8 != gf8b
    assert GF(2, 3, 0b1101) == gf8
    assert hash(GF(2, 3, 0b1101)) == hash(gf8)
