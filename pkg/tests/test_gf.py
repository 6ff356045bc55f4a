import pytest

from symldpc import FieldTable, factor_prime_power, field_of_size
from symldpc.exceptions import (
    BadParametersError,
    DivideByZeroError,
    NotPrimeError,
    TooLargeError,
)

PRIME_POWERS_TO_16 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@pytest.mark.parametrize("q", PRIME_POWERS_TO_16)
def test_field_axioms_exhaustive(q):
    ft = field_of_size(q)
    add, mul = ft.add_table, ft.mul_table
    for a in range(q):
        assert add[a][0] == a
        assert mul[a][1] == a
        assert mul[a][0] == 0
        assert add[a][ft.neg_table[a]] == 0
        for b in range(q):
            assert add[a][b] == add[b][a]
            assert mul[a][b] == mul[b][a]
            for c in range(q):
                assert add[add[a][b]][c] == add[a][add[b][c]]
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    for a in range(1, q):
        assert mul[a][ft.inv_table[a]] == 1


def test_fixed_moduli():
    assert field_of_size(4).modulus == (1, 1, 1)
    assert field_of_size(8).modulus == (1, 1, 0, 1)
    assert field_of_size(9).modulus == (1, 0, 1)
    assert field_of_size(16).modulus == (1, 1, 0, 0, 1)
    assert field_of_size(25).modulus == (2, 0, 1)
    assert field_of_size(7).modulus == (0, 1)


def test_gf2_is_xor_and():
    ft = field_of_size(2)
    for a in (0, 1):
        for b in (0, 1):
            assert ft.add(a, b) == a ^ b
            assert ft.mul(a, b) == a & b


def test_gf4_element_identities():
    ft = field_of_size(4)
    alpha = 2  # the polynomial x
    assert ft.mul(alpha, alpha) == 3  # x^2 = x + 1 under the fixed modulus
    assert ft.add(alpha, alpha) == 0
    assert ft.inv(alpha) == 3


def test_gf3_element_identities():
    ft = field_of_size(3)
    assert ft.inv(2) == 2
    assert ft.neg(1) == 2
    assert ft.sub(0, 1) == 2


@pytest.mark.parametrize("q", PRIME_POWERS_TO_16)
def test_primitive_has_full_order(q):
    ft = field_of_size(q)
    seen = set()
    x = 1
    for _ in range(q - 1):
        seen.add(x)
        x = ft.mul(x, ft.primitive)
    assert x == 1
    assert seen == set(range(1, q))


@pytest.mark.parametrize("q", PRIME_POWERS_TO_16)
def test_multiplication_by_primitive_is_single_cycle(q):
    ft = field_of_size(q)
    x = 1
    cycle_len = 0
    while True:
        x = ft.mul(ft.primitive, x)
        cycle_len += 1
        if x == 1:
            break
    assert cycle_len == q - 1


def test_primitive_powers_smallest_fields():
    assert field_of_size(2).primitive_powers() == [1]
    assert field_of_size(4).primitive_powers() == [1, 2, 3]


def test_primitive_powers_gf8_against_bitwise_oracle():
    # independent route: 3-bit carry-less multiply reduced by x^3 + x + 1
    def mul8(a, b):
        acc = 0
        for i in range(3):
            if (b >> i) & 1:
                acc ^= a << i
        for i in (4, 3):
            if (acc >> i) & 1:
                acc ^= 0b1011 << (i - 3)
        return acc

    ft = field_of_size(8)
    expected = [1]
    for _ in range(6):
        expected.append(mul8(expected[-1], ft.primitive))
    powers = ft.primitive_powers()
    assert powers == expected
    assert sorted(powers) == list(range(1, 8))
    for a in range(8):
        for b in range(8):
            assert ft.mul(a, b) == mul8(a, b)


def test_zero_and_one_indices():
    for q in (2, 3, 4, 9):
        ft = field_of_size(q)
        assert ft.add(0, 5 % q) == 5 % q
        assert ft.mul(1, 5 % q) == 5 % q


def test_constructor_errors():
    with pytest.raises(NotPrimeError):
        FieldTable(4, 1)
    with pytest.raises(NotPrimeError):
        FieldTable(6, 1)
    with pytest.raises(TooLargeError):
        FieldTable(2, 17)
    with pytest.raises(BadParametersError):
        FieldTable(2, 0)


def test_operation_errors():
    ft = field_of_size(4)
    with pytest.raises(DivideByZeroError):
        ft.inv(0)
    with pytest.raises(BadParametersError):
        ft.add(4, 0)
    with pytest.raises(BadParametersError):
        ft.mul(0, -1)


def test_factor_prime_power():
    assert factor_prime_power(8) == (2, 3)
    assert factor_prime_power(9) == (3, 2)
    assert factor_prime_power(7) == (7, 1)
    assert factor_prime_power(125) == (5, 3)
    with pytest.raises(BadParametersError):
        factor_prime_power(6)
    with pytest.raises(BadParametersError):
        factor_prime_power(1)
