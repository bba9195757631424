"""Text form of power sums.

A sum of terms separated by ``+`` or ``-``; each term is a product of numeric
factors and ``var^exp`` factors, e.g. ``1.0*t^0.5 + -2.0*t^1.25`` or
``3*x1^0.5*x2^(-0.25)``. Whitespace is ignored. A bare number is a constant.
"""

import re

from fracsym.exceptions import ExpressionError
from fracsym.fraccore.bivariate import BivariatePowerSum, BivariateTerm
from fracsym.fraccore.polynomial import GeneralizedPolynomial, PowerTerm

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_NUMBER_RE = re.compile(_NUMBER)
_FACTOR_RE = re.compile(
    rf"(?P<var>[A-Za-z]\w*)(?:\^(?:\((?P<pexp>[+-]?{_NUMBER})\)|(?P<exp>[+-]?{_NUMBER})))?"
)
# a sign splits terms unless it belongs to an exponent, a mantissa or a preceding sign
_NO_SPLIT_AFTER = set("^(eE*+-")

DEFAULT_DIGITS = 11


def _split_terms(text: str) -> list[str]:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ExpressionError("empty expression")
    terms, start = [], 0
    for i in range(1, len(compact)):
        if compact[i] in "+-" and compact[i - 1] not in _NO_SPLIT_AFTER:
            terms.append(compact[start:i])
            start = i
    terms.append(compact[start:])
    return terms


def _parse_term(term: str, variables: tuple[str, ...]) -> tuple[float, dict[str, float]]:
    sign = 1.0
    body = term
    while body and body[0] in "+-":
        if body[0] == "-":
            sign = -sign
        body = body[1:]
    if not body:
        raise ExpressionError(f"dangling sign in term {term!r}")
    coeff = sign
    exponents = dict.fromkeys(variables, 0.0)
    for factor in body.split("*"):
        if _NUMBER_RE.fullmatch(factor):
            coeff *= float(factor)
            continue
        match = _FACTOR_RE.fullmatch(factor)
        if match is None:
            raise ExpressionError(f"cannot parse factor {factor!r} in term {term!r}")
        var = match.group("var")
        if var not in exponents:
            raise ExpressionError(f"unknown variable {var!r}; expected one of {variables}")
        raw = match.group("pexp") or match.group("exp")
        exponents[var] += 1.0 if raw is None else float(raw)
    return coeff, exponents


def parse_gp(text: str, variable: str = "t") -> GeneralizedPolynomial:
    """Parse a univariate sum of ``c*var^m`` terms."""
    terms = []
    for term in _split_terms(text):
        coeff, exponents = _parse_term(term, (variable,))
        terms.append(PowerTerm(coeff, exponents[variable]))
    return GeneralizedPolynomial(tuple(terms), variable)


def parse_bivariate(text: str) -> BivariatePowerSum:
    """Parse a sum of ``c*x1^a*x2^b`` terms; either factor may be omitted."""
    terms = []
    for term in _split_terms(text):
        coeff, exponents = _parse_term(term, ("x1", "x2"))
        terms.append(BivariateTerm(coeff, exponents["x1"], exponents["x2"]))
    return BivariatePowerSum(tuple(terms))


def _format_term(coeff: float, factors: list[tuple[str, float]], digits: int) -> str:
    parts = [f"{coeff:.{digits}g}"]
    parts.extend(f"{var}^{exp:.{digits}g}" for var, exp in factors if exp != 0.0)
    return "*".join(parts)


def format_gp(f: GeneralizedPolynomial, digits: int = DEFAULT_DIGITS) -> str:
    if f.is_zero:
        return "0"
    return " + ".join(
        _format_term(t.coeff, [(f.variable, t.exponent)], digits) for t in f.terms
    )


def format_bivariate(u: BivariatePowerSum, digits: int = DEFAULT_DIGITS) -> str:
    if u.is_zero:
        return "0"
    return " + ".join(
        _format_term(t.coeff, [("x1", t.mu1), ("x2", t.mu2)], digits) for t in u.terms
    )
