import pytest

from rbalg import ParseError, PrimeField, QQ, ResolutionError
from rbalg.certificate import input_digest, run_check, verify_certificate
from rbalg.structfile import Realizer, emit_text, parse_text

MINIMAL = """\
format 1
field rationals
object A algebra
  dim 1
  c 1 1 1 1
end
"""

DUAL_NUMBERS_RB = """\
format 1
field prime 2
object A algebra
  dim 2
  c 1 1 1 1
  c 1 2 2 1
  c 2 1 2 1
end
object P operator
  rows 2
  cols 2
  entry 2 1 1
end
object RB bundle rb-algebra
  algebra A
  operator P
  weight 0
end
"""


def test_minimal_file_parses():
    sf = parse_text(MINIMAL)
    algebra = Realizer(sf).algebra("A")
    assert algebra.dim == 1
    assert algebra.mul_basis(0, 0) == (QQ.one,)


def test_round_trip_is_canonical():
    for text in (MINIMAL, DUAL_NUMBERS_RB):
        sf = parse_text(text)
        once = emit_text(sf)
        again = emit_text(parse_text(once))
        assert once == again


def test_nonprime_field_rejected():
    with pytest.raises(ParseError):
        parse_text("format 1\nfield prime 4\n")


def test_unknown_keys_rejected():
    with pytest.raises(ParseError) as err:
        parse_text(MINIMAL.replace("c 1 1 1 1", "q 1 1 1 1"))
    assert err.value.line == 5


def test_indices_validated():
    with pytest.raises(ParseError):
        parse_text(MINIMAL.replace("c 1 1 1 1", "c 1 1 2 1"))
    with pytest.raises(ParseError):
        parse_text(MINIMAL.replace("c 1 1 1 1", "c 0 1 1 1"))


def test_scalars_parse_in_ambient_field():
    with pytest.raises(ParseError):
        parse_text(DUAL_NUMBERS_RB.replace("entry 2 1 1", "entry 2 1 2"))
    parse_text(MINIMAL.replace("c 1 1 1 1", "c 1 1 1 -2/3"))


def test_dangling_reference():
    with pytest.raises(ResolutionError):
        parse_text(DUAL_NUMBERS_RB.replace("algebra A", "algebra missing"))


def test_duplicate_names_rejected():
    doubled = MINIMAL + MINIMAL.split("\n", 2)[2]
    with pytest.raises(ParseError):
        parse_text(doubled)


def test_check_and_certificate_round_trip():
    sf = parse_text(DUAL_NUMBERS_RB)
    report, cert = run_check(sf, "RB", "rb-algebra")
    assert report.passed and cert.passed
    assert cert.digest.startswith("sha256:")
    sf.certificates.append(cert)
    text = emit_text(sf)
    back = parse_text(text)
    assert back.certificates[0] == cert
    assert verify_certificate(back, back.certificates[0])


def test_certificate_reproducibility():
    sf1 = parse_text(DUAL_NUMBERS_RB)
    sf2 = parse_text(emit_text(parse_text(DUAL_NUMBERS_RB)))
    _, c1 = run_check(sf1, "RB", "rb-algebra")
    _, c2 = run_check(sf2, "RB", "rb-algebra")
    assert c1 == c2
    assert input_digest(sf1, "RB") == input_digest(sf2, "RB")


def test_failing_check_records_witnesses():
    mutated = DUAL_NUMBERS_RB.replace("entry 2 1 1", "entry 1 1 1")
    sf = parse_text(mutated)
    report, cert = run_check(sf, "RB", "rb-algebra")
    assert not report.passed
    assert cert.verdict == "fail"
    assert cert.failures > 0
    assert cert.witnesses
