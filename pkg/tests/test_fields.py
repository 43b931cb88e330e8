import pytest
from fractions import Fraction

from rbalg import ParseError, PrimeField, QQ


def test_rational_parsing_round_trip():
    for text in ["0", "1", "-1", "2/3", "-7/5", "10"]:
        v = QQ.parse(text)
        assert QQ.parse(QQ.format(v)) == v
    assert QQ.parse("4/6") == Fraction(2, 3)


def test_rational_rejects_garbage():
    with pytest.raises(ParseError):
        QQ.parse("1.5e3")
    with pytest.raises(ParseError):
        QQ.parse("1/0")


def test_prime_field_requires_prime():
    with pytest.raises(ParseError):
        PrimeField(4)
    with pytest.raises(ParseError):
        PrimeField(1)
    PrimeField(2)
    PrimeField(13)


def test_prime_field_canonical_representatives():
    gf5 = PrimeField(5)
    assert gf5.parse("3") == 3
    with pytest.raises(ParseError):
        gf5.parse("5")
    with pytest.raises(ParseError):
        gf5.parse("-1")


def test_prime_field_matches_integer_arithmetic():
    # exhaustive agreement with plain integer arithmetic mod p
    for p in (2, 3, 5):
        gf = PrimeField(p)
        for a in range(p):
            for b in range(p):
                assert gf.normalize(a + b) == (a + b) % p
                assert gf.normalize(a * b) == (a * b) % p
                assert gf.normalize(a - b) == (a - b) % p
                if b != 0:
                    assert (gf.inv(b) * b) % p == 1


def test_field_identity_objects():
    assert PrimeField(3) == PrimeField(3)
    assert PrimeField(3) != PrimeField(5)
    assert QQ == QQ and QQ != PrimeField(2)
