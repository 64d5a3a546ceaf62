"""
Canonical text and JSON forms of polynomials.

Text: terms in descending grlex order joined by " + ", each written as
``coef*var^k*var`` with the coefficient always present (``1*a``, ``-3/2*a^2*b``).
The zero polynomial is ``0``. Parsing needs the variable tuple and ring, which
the text form does not carry; the JSON form carries both.
"""
import json
import re

from modulilab.algebra.mpoly import MPoly
from modulilab.algebra.rings import QQ, Ring
from modulilab.shared.errors import UnknownVariableError

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def _monomial_text(variables, exponent):
    parts = []
    for name, k in zip(variables, exponent):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return parts


def to_text(poly):
    if poly.is_zero():
        return "0"
    chunks = []
    for e, c in poly.sorted_terms():
        chunks.append("*".join([poly.ring.format(c)] + _monomial_text(poly.variables, e)))
    return " + ".join(chunks)


def from_text(text, variables, ring=QQ):
    variables = tuple(variables)
    text = text.strip()
    if text == "0":
        return MPoly(variables, {}, ring)
    terms = {}
    for chunk in text.split(" + "):
        coef_text, *factors = chunk.strip().split("*")
        exponent = [0] * len(variables)
        for factor in factors:
            match = _FACTOR.match(factor)
            if not match:
                raise ValueError(f"Malformed factor {factor!r} in {chunk!r}")
            name, power = match.group(1), int(match.group(2) or 1)
            if name not in variables:
                raise UnknownVariableError(f"{name!r} is not one of {variables}")
            exponent[variables.index(name)] += power
        key = tuple(exponent)
        value = ring.coerce(coef_text)
        terms[key] = terms[key] + value if key in terms else value
    return MPoly(variables, terms, ring)


def to_dict(poly):
    data = {
        "vars": list(poly.variables),
        "terms": [{"exp": list(e), "coef": poly.ring.format(c)} for e, c in poly.sorted_terms()],
    }
    if poly.ring.modulus is not None:
        data["modulus"] = poly.ring.modulus
    return data


def from_dict(data):
    ring = Ring(data.get("modulus"))
    variables = tuple(data["vars"])
    terms = {}
    for term in data["terms"]:
        terms[tuple(term["exp"])] = ring.coerce(term["coef"])
    return MPoly(variables, terms, ring)


def to_json(poly):
    return json.dumps(to_dict(poly), sort_keys=True)


def from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to parse polynomial JSON: {e}")
    return from_dict(data)
