from fractions import Fraction

import pytest

from polycert import (
    Certificate,
    MonomialOrder,
    VariableSet,
    count_ops,
    ev_make,
    format_certificate,
    parse_certificate,
    parse_poly,
    poly_from_terms,
    print_poly,
    read_naive,
    read_sorted,
    term_count,
    zero,
)
from polycert.errors import CertificateFormatError, FormatError, ParseError

from conftest import BIG_COFACTOR_TEXT, BIG_COFACTOR_VARS, ORDERS, random_poly

GRLEX = MonomialOrder.GRLEX
PQXYZ = VariableSet(("p", "q", "x", "y", "z"))


def test_parse_examples():
    f3 = parse_poly("-y^2 + 2*p*x*z + 3*q*z^2", PQXYZ, GRLEX)
    assert term_count(f3) == 3
    assert parse_poly("0", PQXYZ, GRLEX).is_zero()
    big = parse_poly(BIG_COFACTOR_TEXT, BIG_COFACTOR_VARS, GRLEX)
    assert term_count(big) == 13


def test_parse_rationals_and_signs():
    vs = VariableSet(("x",))
    p = parse_poly("-1/2*x + 3", vs, GRLEX)
    assert {t.degrees.exponents: t.coeff for t in p.terms} == {
        (1,): Fraction(-1, 2),
        (0,): 3,
    }
    # repeated variables multiply out
    assert parse_poly("x*x*x", vs, GRLEX) == parse_poly("x^3", vs, GRLEX)


def test_parse_errors():
    vs = VariableSet(("x",))
    with pytest.raises(ParseError):
        parse_poly("x +", vs, GRLEX)
    with pytest.raises(ParseError):
        parse_poly("2x", vs, GRLEX)  # implicit multiplication rejected
    with pytest.raises(ParseError) as e:
        parse_poly("x + w", vs, GRLEX)
    assert "w" in str(e.value)
    with pytest.raises(ParseError):
        parse_poly("1/0", vs, GRLEX)
    with pytest.raises(ParseError):
        parse_poly("x $ 1", vs, GRLEX)
    with pytest.raises(ParseError):
        parse_poly("", vs, GRLEX)


def test_print_parse_round_trip(rng):
    vs = VariableSet(("x", "y", "z"))
    for _ in range(100):
        order = rng.choice(ORDERS)
        p = random_poly(rng, order, rng.randrange(0, 10), rational=rng.random() < 0.5)
        assert parse_poly(print_poly(p, vs), vs, order) == p


def test_print_canonical_forms():
    vs = VariableSet(("x", "y"))
    assert print_poly(zero(GRLEX), vs) == "0"
    p = parse_poly("-x^2 + 1/2*y - 1", vs, GRLEX)
    assert print_poly(p, vs) == "-x^2 + 1/2*y - 1"


def stream_of(p):
    return [(t.degrees, t.coeff) for t in p.terms]


def test_read_sorted_counts():
    big = parse_poly(BIG_COFACTOR_TEXT, BIG_COFACTOR_VARS, GRLEX)
    # the printed cofactor is already descending under grlex with x first
    assert [t.degrees for t in big.terms] == [s[0] for s in stream_of(big)]
    with count_ops() as c:
        rebuilt = read_sorted(stream_of(big), GRLEX)
    assert rebuilt == big
    assert c.comparisons == 12
    with count_ops() as c1:
        read_sorted([(ev_make((1,)), 5)], GRLEX)
    assert c1.comparisons == 0


def test_read_sorted_fallback(rng):
    import math

    for n in (8, 64, 256):
        p = poly_from_terms(
            GRLEX, [(ev_make((10 * k,)), k + 1) for k in range(n)]
        )
        reverse = list(reversed(stream_of(p)))
        with count_ops() as c:
            rebuilt = read_sorted(reverse, GRLEX)
        assert rebuilt == p
        assert c.comparisons <= 8 * n * max(math.log2(n), 1)


def test_read_zero_coefficient_rejected():
    with pytest.raises(FormatError):
        read_sorted([(ev_make((1,)), 0)], GRLEX)
    with pytest.raises(FormatError):
        read_naive([(ev_make((1,)), 0)], GRLEX)


def test_read_naive_quadratic_on_sorted_input():
    for n in (16, 64):
        stream = [(ev_make((10 * (n - k),)), 1) for k in range(n)]
        with count_ops() as c:
            p = read_naive(stream, GRLEX)
        assert term_count(p) == n
        assert c.comparisons == n * (n - 1) // 2


def test_reads_agree_on_random_streams(rng):
    for _ in range(40):
        n = rng.randrange(0, 30)
        stream = [
            (ev_make((rng.randrange(100), rng.randrange(100))), rng.choice([1, -1, 2]))
            for _ in range(n)
        ]
        # drop duplicate monomials so no zero terms can appear mid-way
        seen, uniq = set(), []
        for ev, c in stream:
            if ev.exponents not in seen:
                seen.add(ev.exponents)
                uniq.append((ev, c))
        expect = poly_from_terms(GRLEX, uniq)
        assert read_sorted(list(uniq), GRLEX) == expect
        assert read_naive(list(uniq), GRLEX) == expect


# -- certificate files -------------------------------------------------------

MINIMAL = """\
vars: x y
order: grlex
N: 1
f: x^2 - 1
lambda[1]: 1
g[1]: x^2 - 1
"""


def test_minimal_certificate():
    cert = parse_certificate(MINIMAL)
    assert cert.order is GRLEX
    assert cert.varset.names == ("x", "y")
    assert len(cert.pairs) == 1
    assert cert.f == cert.pairs[0][1]


def test_certificate_round_trip(rng):
    vs = VariableSet(("x", "y"))
    for _ in range(20):
        pairs = tuple(
            (
                random_poly(rng, GRLEX, rng.randrange(1, 4), nvars=2),
                random_poly(rng, GRLEX, rng.randrange(1, 4), nvars=2),
            )
            for _ in range(rng.randrange(1, 4))
        )
        f = random_poly(rng, GRLEX, 4, nvars=2)
        cert = Certificate(vs, GRLEX, f, pairs)
        assert parse_certificate(format_certificate(cert)) == cert


def test_certificate_continuation_lines_and_comments():
    text = MINIMAL.replace("f: x^2 - 1", "f: x^2\n - 1") + "# trailing comment\n"
    assert parse_certificate(text) == parse_certificate(MINIMAL)


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda t: t.replace("lambda[1]: 1\n", ""), "lambda[1]"),
        (lambda t: t.replace("N: 1", "N: 2"), "lambda[2]"),
        (lambda t: t.replace("order: grlex", "order: degrevlex"), "degrevlex"),
        (lambda t: t.replace("vars: x y\n", ""), "vars"),
        (lambda t: t.replace("N: 1", "N: 0"), "N"),
        (lambda t: t + "g[3]: x\n", "g[3]"),
        (lambda t: t.replace("N: 1", "junk line\nN: 1"), "junk"),
    ],
)
def test_certificate_format_errors(mutate, fragment):
    with pytest.raises(CertificateFormatError) as e:
        parse_certificate(mutate(MINIMAL))
    assert fragment in str(e.value)
