"""Crossed product of Laurent polynomials with the homocyclic group, and
the embedding theta of the Hecke algebra into it.

The y_i commute with one another, so multiplication here never rewrites
anything: (y^p g)(y^q h) = char(g, q) alpha(g, h) y^(p+q) (gh).  That makes
this algebra a fast, independent oracle for the PBW rewriting engine via

    theta(x_i) = y_i - (zeta t_i / (zeta - 1)) y_(i+1)^(-1) g_i,
    theta(g)   = g,

extended to PBW monomials by multiplying the generator images in PBW order.
The closed forms for theta of x_i^ell and of w, and the two summation
identities they satisfy over independent sets of the n-cycle, are exposed
as exact checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import NamedTuple

from .chebyshev import nu
from .coeffring import ParamPoly, ParamRing
from .cyclotomic import Cyclotomic, format_rational, join_signed_terms, zeta_power
from .group import GroupElem, action_char_exp, alpha_exp
from .hecke import HeckeElem

__all__ = ["LaurentMonomial", "LaurentElem", "LaurentAlgebra"]


class LaurentMonomial(NamedTuple):
    """y_1^(q_1) ... y_n^(q_n) g with integer (possibly negative) exponents."""

    q: tuple
    g: GroupElem

    @property
    def total_degree(self) -> int:
        return sum(self.q)


def _mono_sort_key(mono: LaurentMonomial):
    return (-sum(mono.q), tuple(-x for x in mono.q), mono.g.e)


class LaurentElem:
    """A finite sum of Laurent monomials with ParamPoly coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "LaurentAlgebra", terms: dict):
        self.alg = alg
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m.q) for m in self.terms)

    def _compat(self, other: "LaurentElem"):
        if not self.alg.compatible(other.alg):
            raise ValueError("elements from incompatible algebras")

    def __add__(self, other):
        if not isinstance(other, LaurentElem):
            return NotImplemented
        self._compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentElem(self.alg, out)

    def __sub__(self, other):
        if not isinstance(other, LaurentElem):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LaurentElem(self.alg, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentElem):
            return self.alg.lmul(self, other)
        coeff = self.alg.as_coeff(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def __rmul__(self, other):
        coeff = self.alg.as_coeff(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def scale(self, coeff: ParamPoly) -> "LaurentElem":
        if coeff.is_zero():
            return LaurentElem(self.alg, {})
        out = {}
        for m, c in self.terms.items():
            v = c * coeff
            if v:
                out[m] = v
        return LaurentElem(self.alg, out)

    def __pow__(self, k: int) -> "LaurentElem":
        if k < 0:
            raise ValueError("general Laurent elements are not invertible here")
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = self.alg.lmul(result, base)
            base = self.alg.lmul(base, base)
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentElem)
            and self.alg.compatible(other.alg)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((m, hash(c)) for m, c in self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _mono_sort_key(item[0]))

    def render(self) -> str:
        parts = []
        for mono, coeff in self.sorted_terms():
            ys = [
                f"y{j}" if k == 1 else f"y{j}^{k}"
                for j, k in enumerate(mono.q, start=1)
                if k
            ]
            # descending group factors re-evaluate with no cocycle factor
            gs = [
                f"g{j}" if k == 1 else f"g{j}^{k}"
                for j, k in sorted(enumerate(mono.g.e, start=1), reverse=True)
                if k
            ]
            for rat, zexp, texp in coeff.flat_terms():
                factors = []
                if zexp == 1:
                    factors.append("zeta")
                elif zexp > 1:
                    factors.append(f"zeta^{zexp}")
                for j, k in enumerate(texp, start=1):
                    if k:
                        factors.append(f"t{j}" if k == 1 else f"t{j}^{k}")
                factors.extend(ys)
                factors.extend(gs)
                mag = abs(rat)
                if mag != 1 or not factors:
                    factors.insert(0, format_rational(mag))
                parts.append((rat < 0, "*".join(factors)))
        return join_signed_terms(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<LaurentElem {self.render()}>"


class LaurentAlgebra:
    """C[y_1^+-, ..., y_n^+-] crossed with G, twisted by the same cocycle."""

    def __init__(self, n: int, ell: int, t_values=None):
        if n < 3:
            raise ValueError(f"n must be >= 3, got {n}")
        if ell < 2:
            raise ValueError(f"ell must be >= 2, got {ell}")
        self.n = n
        self.ell = ell
        self.ring = ParamRing(n, ell, t_values)
        self.identity_g = GroupElem.identity(n, ell)
        self._zero_q = (0,) * n
        self._theta_x: dict[int, LaurentElem] = {}
        self._theta_x_pows: dict = {}
        self._theta_mono: dict = {}

    def compatible(self, other: "LaurentAlgebra") -> bool:
        return self is other or (
            self.n == other.n
            and self.ell == other.ell
            and self.ring.t_values == other.ring.t_values
        )

    def as_coeff(self, value) -> ParamPoly | None:
        if isinstance(value, ParamPoly):
            if value.n != self.n or value.ell != self.ell:
                raise ValueError("coefficient from an incompatible parameter ring")
            return value
        if isinstance(value, Cyclotomic):
            return self.ring.from_cyclotomic(value)
        if isinstance(value, (int, Fraction)):
            return self.ring.from_rational(value)
        return None

    def zero(self) -> LaurentElem:
        return LaurentElem(self, {})

    def one(self) -> LaurentElem:
        return self.monomial(self._zero_q)

    def scalar(self, value) -> LaurentElem:
        coeff = self.as_coeff(value)
        if coeff is None:
            raise TypeError(f"cannot interpret {value!r} as a coefficient")
        if coeff.is_zero():
            return self.zero()
        return LaurentElem(self, {LaurentMonomial(self._zero_q, self.identity_g): coeff})

    def monomial(self, q, g: GroupElem | None = None, coeff=None) -> LaurentElem:
        q = tuple(q)
        if len(q) != self.n:
            raise ValueError(f"y-exponents must have length {self.n}")
        if g is None:
            g = self.identity_g
        c = self.ring.one() if coeff is None else self.as_coeff(coeff)
        if c is None or c.is_zero():
            return self.zero()
        return LaurentElem(self, {LaurentMonomial(q, g): c})

    def gen_y(self, i: int, k: int = 1) -> LaurentElem:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return self.monomial(tuple(k if j == i - 1 else 0 for j in range(self.n)))

    def gen_g(self, i: int) -> LaurentElem:
        return self.monomial(self._zero_q, GroupElem.generator(self.n, self.ell, i))

    def lmul(self, a: LaurentElem, b: LaurentElem) -> LaurentElem:
        """(y^p g)(y^q h) = char(g,q) alpha(g,h) y^(p+q) (gh), bilinearly."""
        a._compat(b)
        ell = self.ell
        out: dict = {}
        for (p, g), ca in a.terms.items():
            for (q, h), cb in b.terms.items():
                z = action_char_exp(g, q) + alpha_exp(g, h)
                v = ca * cb
                if z % ell:
                    v = v.scale(zeta_power(ell, z))
                mono = LaurentMonomial(tuple(x + y for x, y in zip(p, q)), g * h)
                prev = out.get(mono)
                if prev is None:
                    if v:
                        out[mono] = v
                else:
                    s = prev + v
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return LaurentElem(self, out)

    def commutator(self, a: LaurentElem, b: LaurentElem) -> LaurentElem:
        return self.lmul(a, b) - self.lmul(b, a)

    # -- the embedding ----------------------------------------------------

    def theta_x(self, i: int) -> LaurentElem:
        """theta(x_i) = y_i - (zeta t_i/(zeta-1)) y_(i+1)^(-1) g_i, mod-n."""
        cached = self._theta_x.get(i)
        if cached is not None:
            return cached
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        n, ell, ring = self.n, self.ell, self.ring
        zeta = zeta_power(ell, 1)
        coeff = ring.t(i).scale(-(zeta * (zeta - 1).inv()))
        q_top = tuple(1 if j == i - 1 else 0 for j in range(n))
        q_low = tuple(-1 if j == i % n else 0 for j in range(n))
        gi = GroupElem.generator(n, ell, i)
        terms = {LaurentMonomial(q_top, self.identity_g): ring.one()}
        if coeff:
            terms[LaurentMonomial(q_low, gi)] = coeff
        result = LaurentElem(self, terms)
        self._theta_x[i] = result
        return result

    def _theta_x_pow(self, i: int, k: int) -> LaurentElem:
        key = (i, k)
        cached = self._theta_x_pows.get(key)
        if cached is None:
            if k == 0:
                cached = self.one()
            else:
                cached = self.lmul(self._theta_x_pow(i, k - 1), self.theta_x(i))
            self._theta_x_pows[key] = cached
        return cached

    def _theta_monomial(self, p: tuple) -> LaurentElem:
        cached = self._theta_mono.get(p)
        if cached is None:
            cached = self.one()
            for i, k in enumerate(p, start=1):
                if k:
                    cached = self.lmul(cached, self._theta_x_pow(i, k))
            self._theta_mono[p] = cached
        return cached

    def theta(self, a: HeckeElem) -> LaurentElem:
        """Image of a Hecke element: each PBW monomial x^p g maps to
        theta(x_1)^(p_1) ... theta(x_n)^(p_n) g, extended linearly."""
        if not isinstance(a, HeckeElem):
            raise TypeError("theta expects a Hecke element")
        if (
            a.alg.n != self.n
            or a.alg.ell != self.ell
            or a.alg.ring.t_values != self.ring.t_values
        ):
            raise ValueError("Hecke element from an incompatible configuration")
        total = self.zero()
        for (p, g), c in a.terms.items():
            img = self._theta_monomial(p)
            if not g.is_identity():
                img = self.lmul(img, self.monomial(self._zero_q, g))
            total = total + img.scale(c)
        return total

    # -- closed forms and identities ---------------------------------------

    def theta_xi_ell_closed(self, i: int) -> LaurentElem:
        """Closed form y_i^ell - tau~_i y_(i+1)^(-ell) of theta(x_i^ell);
        for i = n the coefficient tau~_n carries the sign (-1)^(n(ell-1))."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        n, ell, ring = self.n, self.ell, self.ring
        q_top = tuple(ell if j == i - 1 else 0 for j in range(n))
        q_low = tuple(-ell if j == i % n else 0 for j in range(n))
        terms = {LaurentMonomial(q_top, self.identity_g): ring.one()}
        coeff = -ring.tau_tilde(i)
        if coeff:
            terms[LaurentMonomial(q_low, self.identity_g)] = coeff
        return LaurentElem(self, terms)

    def theta_w_closed(self) -> LaurentElem:
        """Closed form of theta(w):
        y_1...y_n + (-1)^n zeta^(n-2) tau_1...tau_n (y_1...y_n)^(-1)."""
        n, ell, ring = self.n, self.ell, self.ring
        scal = zeta_power(ell, n - 2)
        if n % 2:
            scal = -scal
        coeff = ring.tau_product().scale(scal)
        terms = {LaurentMonomial((1,) * n, self.identity_g): ring.one()}
        if coeff:
            terms[LaurentMonomial((-1,) * n, self.identity_g)] = coeff
        return LaurentElem(self, terms)

    def _power_sum_rhs(self) -> LaurentElem:
        # (y_1...y_n)^ell + (-1)^(n ell) (tau_1...tau_n)^ell (y_1...y_n)^(-ell)
        n, ell, ring = self.n, self.ell, self.ring
        coeff = ring.tau_product() ** ell
        if (n * ell) % 2:
            coeff = -coeff
        terms = {LaurentMonomial((ell,) * n, self.identity_g): ring.one()}
        if coeff:
            terms[LaurentMonomial((-ell,) * n, self.identity_g)] = coeff
        return LaurentElem(self, terms)

    def leftside_identity_check(self) -> bool:
        """sum over independent sets of tau~ products times products of the
        closed forms theta(x_i^ell) equals
        (y_1..y_n)^ell + (-1)^(n ell) (tau_1..tau_n)^ell (y_1..y_n)^(-ell)."""
        from .hecke import enumerate_J

        ring = self.ring
        closed = {i: self.theta_xi_ell_closed(i) for i in range(1, self.n + 1)}
        total = self.zero()
        for subset in enumerate_J(self.n):
            coeff = ring.one()
            for i in subset:
                coeff = coeff * ring.tau_tilde(i)
            v = [1] * self.n
            for i in subset:
                v[i - 1] -= 1
                v[i % self.n] -= 1
            prod = self.one()
            for i in range(1, self.n + 1):
                if v[i - 1]:
                    prod = self.lmul(prod, closed[i])
            total = total + prod.scale(coeff)
        return total == self._power_sum_rhs()

    def rightside_identity_check(self) -> bool:
        """sum_r (-1)^(nr) zeta^((n-2)r) nu_r (tau_1..tau_n)^r bt^(ell-2r),
        with bt the closed form of theta(w), equals the same right side."""
        n, ell, ring = self.n, self.ell, self.ring
        bt = self.theta_w_closed()
        bt_pows = {0: self.one()}
        for k in range(1, ell + 1):
            bt_pows[k] = self.lmul(bt_pows[k - 1], bt)
        taus = ring.tau_product()
        total = self.zero()
        for r in range(ell // 2 + 1):
            scal = zeta_power(ell, (n - 2) * r) * Cyclotomic.from_rational(ell, nu(ell, r))
            if (n * r) % 2:
                scal = -scal
            total = total + bt_pows[ell - 2 * r].scale((taus**r).scale(scal))
        return total == self._power_sum_rhs()

    def injectivity_spotcheck(self, max_degree: int) -> bool:
        """Triangularity evidence: for every PBW monomial x^p g of total
        degree at most max_degree, theta(x^p g) contains y^p g with
        coefficient exactly one and every other term has strictly smaller
        total degree."""
        one = self.ring.one()
        for p in itertools.product(range(max_degree + 1), repeat=self.n):
            d = sum(p)
            if d > max_degree:
                continue
            img_p = self._theta_monomial(p)
            for e in itertools.product(range(self.ell), repeat=self.n - 1):
                g = GroupElem(self.n, self.ell, e)
                img = img_p
                if not g.is_identity():
                    img = self.lmul(img_p, self.monomial(self._zero_q, g))
                lead = img.terms.get(LaurentMonomial(p, g))
                if lead != one:
                    return False
                for mono in img.terms:
                    if mono.total_degree >= d and mono != LaurentMonomial(p, g):
                        return False
        return True
