"""
Sparse multivariate polynomials over Q or F_p.

An ``MPoly`` is a map from exponent tuples to nonzero coefficients over a fixed,
ordered tuple of variable names. Binary operations require identical variable
tuples and coefficient rings; use ``extend_vars`` to move a polynomial into a
larger ring first. Terms are listed in graded lexicographic order, largest first.
"""
import logging
from fractions import Fraction

from modulilab.algebra.rings import QQ, FpElem, Ring, to_rat
from modulilab.shared.errors import (
    DivisionByZeroPolynomialError,
    RingMismatchError,
    UnboundVariableError,
    UnknownVariableError,
)

logger = logging.getLogger(__name__)

_SCALARS = (int, Fraction, FpElem)


def grlex_key(exponent):
    return (sum(exponent), exponent)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mul_terms(left, right):
    out = {}
    for ea, ca in left.items():
        for eb, cb in right.items():
            e = _add_exp(ea, eb)
            c = out.get(e)
            out[e] = ca * cb if c is None else c + ca * cb
    return {e: c for e, c in out.items() if c}


def _accumulate(out, terms, scale=None):
    for e, c in terms.items():
        if scale is not None:
            c = c * scale
        prev = out.get(e)
        if prev is None:
            out[e] = c
        else:
            s = prev + c
            if s:
                out[e] = s
            else:
                del out[e]


class MPoly:
    __slots__ = ("variables", "terms", "ring")

    def __init__(self, variables, terms=None, ring=QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Duplicate variable names in {variables}")
        if not isinstance(ring, Ring):
            raise TypeError("ring must be a Ring")
        clean = {}
        for exponent, coef in (terms or {}).items():
            exponent = tuple(int(k) for k in exponent)
            if len(exponent) != len(variables):
                raise ValueError(f"Exponent {exponent} does not match variables {variables}")
            if any(k < 0 for k in exponent):
                raise ValueError(f"Negative exponent in {exponent}")
            coef = ring.coerce(coef)
            if coef:
                _accumulate(clean, {exponent: coef})
        self.variables = variables
        self.terms = clean
        self.ring = ring

    @classmethod
    def _make(cls, variables, terms, ring):
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        poly.ring = ring
        return poly

    # construction

    @classmethod
    def constant(cls, value, variables, ring=QQ):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value}, ring)

    @classmethod
    def variable(cls, name, variables, ring=QQ):
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(f"{name!r} is not one of {variables}")
        exponent = tuple(1 if v == name else 0 for v in variables)
        return cls._make(variables, {exponent: ring.one}, ring)

    def zero(self):
        return MPoly._make(self.variables, {}, self.ring)

    def one(self):
        return MPoly._make(self.variables, {(0,) * len(self.variables): self.ring.one}, self.ring)

    # inspection

    def __repr__(self):
        from modulilab.algebra.codec import to_text

        return f"MPoly({to_text(self)!r}, vars={self.variables}, ring={self.ring})"

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), self.ring.zero)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.ring.zero)

    def sorted_terms(self):
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise DivisionByZeroPolynomialError("The zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degrees(self, weights):
        return {sum(w * k for w, k in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights=None):
        weights = weights or (1,) * len(self.variables)
        return len(self.weighted_degrees(weights)) <= 1

    def homogeneous_degree(self, weights=None):
        weights = weights or (1,) * len(self.variables)
        degrees = self.weighted_degrees(weights)
        if len(degrees) != 1:
            return None
        return next(iter(degrees))

    def support(self):
        """Names of the variables that actually occur."""
        used = [False] * len(self.variables)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    # equality

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return (
                self.variables == other.variables
                and self.ring == other.ring
                and self.terms == other.terms
            )
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == self.ring.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.ring, frozenset(self.terms.items())))

    # arithmetic

    def _lift(self, other):
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise RingMismatchError(f"Variable sets differ: {self.variables} vs {other.variables}")
            if other.ring != self.ring:
                raise RingMismatchError(f"Coefficient rings differ: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, _SCALARS):
            return MPoly.constant(other, self.variables, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return MPoly._make(self.variables, out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._make(self.variables, {e: -c for e, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return MPoly._make(self.variables, _mul_terms(self.terms, other.terms), self.ring)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = self.ring.coerce(scalar)
        if not scalar:
            return self.zero()
        return MPoly._make(self.variables, {e: c * scalar for e, c in self.terms.items()}, self.ring)

    def __truediv__(self, scalar):
        if not isinstance(scalar, _SCALARS):
            return NotImplemented
        scalar = self.ring.coerce(scalar)
        if not scalar:
            raise ZeroDivisionError("Division of a polynomial by zero")
        return self.scale(1 / scalar)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {k!r}")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # calculus and evaluation

    def index_of(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} is not one of {self.variables}")

    def partial(self, name):
        i = self.index_of(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MPoly._make(self.variables, {e: c for e, c in out.items() if c}, self.ring)

    def evaluate(self, values):
        """Evaluate at a point given as a mapping name -> scalar or as a sequence."""
        if isinstance(values, dict):
            missing = [v for v in self.support() if v not in values]
            if missing:
                raise UnboundVariableError(f"No value for {', '.join(missing)}")
            point = [values.get(v, 0) for v in self.variables]
        else:
            point = list(values)
            if len(point) != len(self.variables):
                raise ValueError(f"Expected {len(self.variables)} values, got {len(point)}")
        point = [self.ring.coerce(x) if isinstance(x, (int, str)) else x for x in point]
        powers = [{} for _ in point]
        total = self.ring.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = point[i] ** k
                    term = term * cache[k]
            total = total + term
        return total

    def substitute(self, bindings):
        """
        Compose with a polynomial map. Every variable occurring in ``self`` must
        be bound; bindings of absent variables are ignored. Scalar bindings are
        allowed once at least one binding is a polynomial fixing the target ring.
        """
        support = self.support()
        missing = [v for v in support if v not in bindings]
        if missing:
            raise UnboundVariableError(f"No binding for {', '.join(missing)}")
        targets = [b for b in bindings.values() if isinstance(b, MPoly)]
        if not targets:
            value = self.evaluate({v: bindings[v] for v in support})
            return MPoly.constant(value, (), self.ring)
        target_vars, target_ring = targets[0].variables, targets[0].ring
        images = []
        for v in self.variables:
            if v not in support:
                images.append(None)
                continue
            b = bindings[v]
            if isinstance(b, MPoly):
                if b.variables != target_vars or b.ring != target_ring:
                    raise RingMismatchError(f"Binding for {v!r} lives in a different ring")
                images.append(b.terms)
            else:
                images.append(MPoly.constant(b, target_vars, target_ring).terms)

        unit = {(0,) * len(target_vars): target_ring.one}
        power_cache = {}

        def power(i, k):
            key = (i, k)
            if key not in power_cache:
                if k == 1:
                    power_cache[key] = images[i]
                else:
                    half = power(i, k // 2)
                    sq = _mul_terms(half, half)
                    power_cache[key] = _mul_terms(sq, images[i]) if k % 2 else sq
            return power_cache[key]

        # Terms are visited in lexicographic order so that consecutive terms
        # share the longest possible exponent prefix; stack[i] holds the image
        # of the first i variables of the current term.
        out = {}
        n = len(self.variables)
        stack = [unit]
        previous = None
        convert = self.ring != target_ring
        for e, c in sorted(self.terms.items()):
            common = 0
            if previous is not None:
                while e[common] == previous[common]:
                    common += 1
            del stack[common + 1:]
            for i in range(common, n):
                k = e[i]
                stack.append(stack[-1] if k == 0 else _mul_terms(stack[-1], power(i, k)))
            _accumulate(out, stack[n], scale=target_ring.coerce(c) if convert else c)
            previous = e
        return MPoly._make(target_vars, out, target_ring)

    # ring changes

    def extend_vars(self, names):
        names = tuple(names)
        missing = [v for v in self.variables if v not in names]
        if missing:
            raise UnknownVariableError(f"Target variables lack {', '.join(missing)}")
        if names == self.variables:
            return self
        position = [names.index(v) for v in self.variables]
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(names)
            for i, k in zip(position, e):
                new[i] = k
            out[tuple(new)] = c
        return MPoly._make(names, out, self.ring)

    def restrict_vars(self, names):
        """Drop variables that do not occur; inverse of ``extend_vars``."""
        names = tuple(names)
        extra = [v for v in self.support() if v not in names]
        if extra:
            raise UnknownVariableError(f"{', '.join(extra)} still occur in the polynomial")
        position = [self.variables.index(v) if v in self.variables else None for v in names]
        out = {}
        for e, c in self.terms.items():
            out[tuple(0 if i is None else e[i] for i in position)] = c
        return MPoly._make(names, out, self.ring)

    def reduce_mod(self, p):
        target = Ring(p)
        if self.ring != QQ:
            raise RingMismatchError(f"Only rational polynomials can be reduced, not {self.ring}")
        out = {}
        for e, c in self.terms.items():
            r = FpElem(c, p)
            if r:
                out[e] = r
        return MPoly._make(self.variables, out, target)

    # division

    def divide_exact(self, divisor):
        """
        Return q with self == q * divisor, or None when divisor does not divide.

        A single polynomial is a Groebner basis of the ideal it generates, so the
        division remainder vanishes exactly when the division is exact; the
        loop stops at the first leading term that is not divisible.
        """
        divisor = self._lift(divisor)
        if divisor is NotImplemented:
            raise TypeError("Divisor must be a polynomial or scalar")
        if divisor.is_zero():
            raise DivisionByZeroPolynomialError("Division by the zero polynomial")
        lead_e, lead_c = divisor.leading_term()
        inv_lead = 1 / lead_c
        remainder = dict(self.terms)
        quotient = {}
        while remainder:
            e = max(remainder, key=grlex_key)
            if any(a < b for a, b in zip(e, lead_e)):
                return None
            qe = tuple(a - b for a, b in zip(e, lead_e))
            qc = remainder[e] * inv_lead
            quotient[qe] = qc
            _accumulate(remainder, _mul_terms({qe: -qc}, divisor.terms))
        return MPoly._make(self.variables, quotient, self.ring)


def poly_ring(names, ring=QQ):
    """Generators of the polynomial ring over ``ring`` in ``names``."""
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    return tuple(MPoly.variable(n, names, ring) for n in names)


def poly_ops(p, q, op, k=None):
    """Dispatch on an operation name; ``q`` is ignored by ``neg`` and ``pow``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    if op == "pow":
        return p ** k
    raise ValueError(f"Unknown polynomial operation: {op}")


def as_rat_poly(value, variables):
    """Promote a rational scalar or a polynomial to an MPoly over Q in ``variables``."""
    if isinstance(value, MPoly):
        return value.extend_vars(variables)
    return MPoly.constant(to_rat(value), variables)
