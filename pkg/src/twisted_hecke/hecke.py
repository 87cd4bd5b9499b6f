"""PBW engine for the twisted graded Hecke algebra of (Z/ell)^(n-1).

The algebra H is generated by x_1, ..., x_n and the group G, subject to

    x_i x_(i+1) - x_(i+1) x_i = t_i g_i      (subscripts mod n),
    x_i x_j = x_j x_i                        (|i - j| not in {1, n-1}),

on top of the crossed-product law twisted by the cocycle alpha.  Elements
are stored in PBW normal form: finite sums of monomials
x_1^(p_1) ... x_n^(p_n) g with coefficients in Q(zeta)[t_1..t_n].

Multiplication normal-orders the concatenated word by moving each left
factor x_i rightward to its slot.  Passing a power x_j^m is free unless the
pair is cyclically adjacent, in which case a correction term of total
degree two lower is emitted: the relation contributes +-t g, the group
element picks up an action character while commuting to the right end, and
a geometric sum in zeta accounts for the copies of x_j already passed.
Each step either lowers the inversion count at constant degree or lowers
the degree by two, so the rewriting terminates; associativity and agreement
with the Laurent-side embedding are checked by the test suite, which makes
the rewriting confluent on everything we compute.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import NamedTuple

from .chebyshev import nu
from .coeffring import ParamPoly, ParamRing
from .cyclotomic import Cyclotomic, format_rational, join_signed_terms, zeta_power
from .group import (
    GroupElem,
    action_char_exp,
    alpha,
    alpha_exp,
    star_mul,
)

__all__ = ["PBWMonomial", "HeckeElem", "HeckeAlgebra", "enumerate_J"]


class PBWMonomial(NamedTuple):
    """x_1^(p_1) ... x_n^(p_n) g, with the factors in exactly that order."""

    p: tuple
    g: GroupElem

    @property
    def total_degree(self) -> int:
        # filtration degree: deg(x_i) = 1, deg(g) = 0
        return sum(self.p)


def _mono_sort_key(mono: PBWMonomial):
    # graded-lex, highest degree first; ties broken by x-exponents then group
    return (-sum(mono.p), tuple(-x for x in mono.p), mono.g.e)


def enumerate_J(n: int) -> list[tuple]:
    """All independent sets of the n-cycle {1..n}, as increasing tuples.

    A subset qualifies iff no two members are cyclically adjacent, i.e.
    |i - j| is never 1 or n-1.  Includes the empty set; ordered by size and
    then lexicographically, so the output is deterministic.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    out = []
    for k in range(n + 1):
        for comb in itertools.combinations(range(1, n + 1), k):
            if all(
                abs(a - b) not in (1, n - 1)
                for a, b in itertools.combinations(comb, 2)
            ):
                out.append(comb)
    return out


class HeckeElem:
    """A finite sum of PBW monomials with ParamPoly coefficients.

    Canonical sparse form: no zero coefficients.  Do not mutate ``terms``;
    all arithmetic builds fresh dictionaries.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "HeckeAlgebra", terms: dict):
        self.alg = alg
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Filtration degree; -1 for the zero element."""
        if not self.terms:
            return -1
        return max(sum(m.p) for m in self.terms)

    def top_part(self) -> "HeckeElem":
        """The homogeneous part of highest filtration degree."""
        d = self.total_degree()
        return HeckeElem(
            self.alg, {m: c for m, c in self.terms.items() if sum(m.p) == d}
        )

    def _compat(self, other: "HeckeElem"):
        if not self.alg.compatible(other.alg):
            raise ValueError("elements from incompatible algebras")

    def __add__(self, other):
        if not isinstance(other, HeckeElem):
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
        return HeckeElem(self.alg, out)

    def __sub__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HeckeElem(self.alg, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return self.alg.mul(self, other)
        coeff = self.alg.as_coeff(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def __rmul__(self, other):
        coeff = self.alg.as_coeff(other)
        if coeff is None:
            return NotImplemented
        return self.scale(coeff)

    def scale(self, coeff: ParamPoly) -> "HeckeElem":
        if coeff.is_zero():
            return HeckeElem(self.alg, {})
        out = {}
        for m, c in self.terms.items():
            v = c * coeff
            if v:
                out[m] = v
        return HeckeElem(self.alg, out)

    def __pow__(self, k: int) -> "HeckeElem":
        if k < 0:
            raise ValueError("negative power in the Hecke algebra")
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = self.alg.mul(result, base)
            base = self.alg.mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HeckeElem)
            and self.alg.compatible(other.alg)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((m, hash(c)) for m, c in self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: _mono_sort_key(item[0]))

    def render(self) -> str:
        """Canonical text form in the shared expression grammar."""
        parts = []
        for mono, coeff in self.sorted_terms():
            xs = [
                f"x{j}" if k == 1 else f"x{j}^{k}"
                for j, k in enumerate(mono.p, start=1)
                if k
            ]
            # group factors highest index first: descending products are
            # cocycle-free, so the rendering re-evaluates to this element
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
                factors.extend(xs)
                factors.extend(gs)
                mag = abs(rat)
                if mag != 1 or not factors:
                    factors.insert(0, format_rational(mag))
                parts.append((rat < 0, "*".join(factors)))
        return join_signed_terms(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<HeckeElem {self.render()}>"


class HeckeAlgebra:
    """The twisted graded Hecke algebra for a fixed configuration (n, ell).

    ``t_values`` specializes the deformation parameters to concrete Q(zeta)
    scalars; by default they stay symbolic.  Instances cache the rewriting
    steps they have performed, so reusing one algebra across many products
    is markedly faster than constructing fresh ones.
    """

    def __init__(self, n: int, ell: int, t_values=None):
        if n < 3:
            raise ValueError(f"n must be >= 3, got {n}")
        if ell < 2:
            raise ValueError(f"ell must be >= 2, got {ell}")
        self.n = n
        self.ell = ell
        self.ring = ParamRing(n, ell, t_values)
        self.identity_g = GroupElem.identity(n, ell)
        self._zero_p = (0,) * n
        self._insert_cache: dict = {}
        self._product_cache: dict = {}
        self._w: HeckeElem | None = None
        self._w_pows: dict[int, HeckeElem] = {}

    # -- construction ---------------------------------------------------

    def compatible(self, other: "HeckeAlgebra") -> bool:
        return (
            self is other
            or (
                self.n == other.n
                and self.ell == other.ell
                and self.ring.t_values == other.ring.t_values
            )
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

    def zero(self) -> HeckeElem:
        return HeckeElem(self, {})

    def one(self) -> HeckeElem:
        return self.monomial(self._zero_p)

    def scalar(self, value) -> HeckeElem:
        coeff = self.as_coeff(value)
        if coeff is None:
            raise TypeError(f"cannot interpret {value!r} as a coefficient")
        if coeff.is_zero():
            return self.zero()
        return HeckeElem(self, {PBWMonomial(self._zero_p, self.identity_g): coeff})

    def monomial(self, p, g: GroupElem | None = None, coeff=None) -> HeckeElem:
        p = tuple(p)
        if len(p) != self.n or any(k < 0 for k in p):
            raise ValueError("x-exponents must be n nonnegative integers")
        if g is None:
            g = self.identity_g
        c = self.ring.one() if coeff is None else self.as_coeff(coeff)
        if c is None or c.is_zero():
            return self.zero()
        return HeckeElem(self, {PBWMonomial(p, g): c})

    def gen_x(self, i: int) -> HeckeElem:
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")
        return self.monomial(tuple(1 if j == i - 1 else 0 for j in range(self.n)))

    def gen_g(self, i: int) -> HeckeElem:
        return self.monomial(self._zero_p, GroupElem.generator(self.n, self.ell, i))

    def x_pow_ell(self, i: int) -> HeckeElem:
        """The central monomial x_i^ell (already in normal form)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return self.monomial(
            tuple(self.ell if j == i - 1 else 0 for j in range(self.n))
        )

    # -- multiplication --------------------------------------------------

    def _insert(self, i: int, q: tuple, g: GroupElem):
        """x_i * (x^q g) in PBW form, as ((exponents, group, coeff), ...).

        The main term moves x_i to its slot.  When x_i passes a cyclically
        adjacent block a correction appears: the pair is consumed by the
        defining relation, the geometric factor sums the characters from
        copies of the passed generator, and the action character plus
        cocycle move the new group element to the right end.
        """
        key = (i, q, g)
        hit = self._insert_cache.get(key)
        if hit is not None:
            return hit
        n, ell, ring = self.n, self.ell, self.ring
        main = list(q)
        main[i - 1] += 1
        out = [(tuple(main), g, ring.one())]
        if i >= 2 and q[i - 2]:
            m = q[i - 2]
            scal = Cyclotomic.zero(ell)
            for v in range(m):
                scal = scal + zeta_power(ell, v)
            gi = GroupElem.generator(n, ell, i - 1)
            scal = scal * zeta_power(ell, -q[i - 1]) * alpha(gi, g)
            coeff = ring.t(i - 1).scale(-scal)
            if coeff:
                lower = list(q)
                lower[i - 2] -= 1
                out.append((tuple(lower), gi * g, coeff))
        if i == n and q[0]:
            m = q[0]
            scal = Cyclotomic.zero(ell)
            for v in range(m):
                scal = scal + zeta_power(ell, -v)
            gn = GroupElem.generator(n, ell, n)
            scal = scal * zeta_power(ell, q[n - 1]) * alpha(gn, g)
            coeff = ring.t(n).scale(scal)
            if coeff:
                lower = list(q)
                lower[0] -= 1
                out.append((tuple(lower), gn * g, coeff))
        out = tuple(out)
        self._insert_cache[key] = out
        return out

    def _normal_product(self, p: tuple, q: tuple, g: GroupElem) -> dict:
        """Normal form of x^p * x^q * g as {(exponents, group): coeff}."""
        key = (p, q, g)
        hit = self._product_cache.get(key)
        if hit is not None:
            return hit
        one = self.ring.one()
        cur = {(q, g): one}
        for i in range(self.n, 0, -1):
            for _ in range(p[i - 1]):
                nxt: dict = {}
                for (qq, gg), c in cur.items():
                    for q2, g2, c2 in self._insert(i, qq, gg):
                        if c2 is one:
                            nc = c
                        elif c is one:
                            nc = c2
                        else:
                            nc = c * c2
                        k2 = (q2, g2)
                        prev = nxt.get(k2)
                        if prev is None:
                            nxt[k2] = nc
                        else:
                            s = prev + nc
                            if s:
                                nxt[k2] = s
                            else:
                                del nxt[k2]
                cur = nxt
        self._product_cache[key] = cur
        return cur

    def mul(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        """Product in H, returned in canonical PBW form."""
        a._compat(b)
        ell = self.ell
        out: dict = {}
        for (p, g), ca in a.terms.items():
            for (q, h), cb in b.terms.items():
                z = action_char_exp(g, q) + alpha_exp(g, h)
                base = ca * cb
                if z % ell:
                    base = base.scale(zeta_power(ell, z))
                for (q2, g2), c in self._normal_product(p, q, g * h).items():
                    v = base if c is self.ring._one else base * c
                    mono = PBWMonomial(q2, g2)
                    prev = out.get(mono)
                    if prev is None:
                        out[mono] = v
                    else:
                        s = prev + v
                        if s:
                            out[mono] = s
                        else:
                            del out[mono]
        return HeckeElem(self, out)

    def commutator(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        return self.mul(a, b) - self.mul(b, a)

    def gr_mul(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        """Product in the associated graded algebra: the crossed product of
        the polynomial ring (all x commuting) with the twisted group."""
        a._compat(b)
        ell = self.ell
        out: dict = {}
        for (p, g), ca in a.terms.items():
            for (q, h), cb in b.terms.items():
                z = action_char_exp(g, q) + alpha_exp(g, h)
                v = ca * cb
                if z % ell:
                    v = v.scale(zeta_power(ell, z))
                mono = PBWMonomial(tuple(x + y for x, y in zip(p, q)), g * h)
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
        return HeckeElem(self, out)

    # -- distinguished central elements ----------------------------------

    def build_w(self) -> HeckeElem:
        """The central element

            w = sum over independent sets {i_1<...<i_k} of the n-cycle of
                tau_(i_1)...tau_(i_k) x^(delta - eps_(i_1) - ... - eps_(i_k))
                g_(i_1) * ... * g_(i_k)

        where delta = (1,..,1), eps_i lowers positions i and i+1 (mod n),
        and the group factors multiply in the twisted group algebra.
        """
        if self._w is None:
            n, ell, ring = self.n, self.ell, self.ring
            acc: dict = {}
            for subset in enumerate_J(n):
                coeff = ring.one()
                for i in subset:
                    coeff = coeff * ring.tau(i)
                scal = Cyclotomic.one(ell)
                g = self.identity_g
                for i in subset:
                    c, g = star_mul(g, GroupElem.generator(n, ell, i))
                    scal = scal * c
                p = [1] * n
                for i in subset:
                    p[i - 1] -= 1
                    p[i % n] -= 1
                coeff = coeff.scale(scal)
                if coeff:
                    mono = PBWMonomial(tuple(p), g)
                    prev = acc.get(mono)
                    acc[mono] = coeff if prev is None else prev + coeff
            self._w = HeckeElem(self, {m: c for m, c in acc.items() if c})
        return self._w

    def w_power(self, k: int) -> HeckeElem:
        if k < 0:
            raise ValueError("negative power of w")
        cached = self._w_pows.get(k)
        if cached is None:
            if k == 0:
                cached = self.one()
            elif k == 1:
                cached = self.build_w()
            elif k % 2 == 0:
                half = self.w_power(k // 2)
                cached = self.mul(half, half)
            else:
                cached = self.mul(self.w_power(k - 1), self.build_w())
            self._w_pows[k] = cached
        return cached

    def is_central(self, z: HeckeElem):
        """(True, None) if z commutes with every generator of H, else
        (False, first nonzero commutator as witness)."""
        gens = [self.gen_x(i) for i in range(1, self.n + 1)]
        gens += [self.gen_g(j) for j in range(1, self.n)]
        for gen in gens:
            c = self.commutator(z, gen)
            if c:
                return False, c
        return True, None

    # -- the center relation ---------------------------------------------

    def center_relation_terms(self) -> dict:
        """The relation satisfied by a_i = x_i^ell and b = w, as a
        commutative polynomial: {(a_exponents, b_exponent): coefficient}.

            F = sum over independent sets of tau~ products times
                a^(delta - sum of eps)
              - sum_r (-1)^(nr) zeta^((n-2)r) nu_r (tau_1..tau_n)^r b^(ell-2r)
        """
        n, ell, ring = self.n, self.ell, self.ring
        terms: dict = {}

        def put(key, coeff):
            prev = terms.get(key)
            s = coeff if prev is None else prev + coeff
            if s:
                terms[key] = s
            elif prev is not None:
                del terms[key]

        for subset in enumerate_J(n):
            coeff = ring.one()
            for i in subset:
                coeff = coeff * ring.tau_tilde(i)
            a = [1] * n
            for i in subset:
                a[i - 1] -= 1
                a[i % n] -= 1
            put((tuple(a), 0), coeff)
        taus = ring.tau_product()
        for r in range(ell // 2 + 1):
            scal = zeta_power(ell, (n - 2) * r) * Cyclotomic.from_rational(ell, nu(ell, r))
            if (n * r) % 2:
                scal = -scal
            put(((0,) * n, ell - 2 * r), -(taus**r).scale(scal))
        return terms

    def evaluate_F(self) -> HeckeElem:
        """Substitute a_i -> x_i^ell, b -> w into the center relation and
        expand in H.  The result is the zero element exactly when the
        relation holds, which the acceptance suite asserts on a grid."""
        total = self.zero()
        for (a, bexp), coeff in self.center_relation_terms().items():
            mono = self.monomial(tuple(self.ell * k for k in a))
            term = self.mul(mono, self.w_power(bexp)) if bexp else mono
            total = total + term.scale(coeff)
        return total

    # -- finite evidence for the basis and spot checks --------------------

    def pbw_independence_evidence(self, max_total_degree: int) -> bool:
        """Check that the normal forms of x^(ell p) w^m (0 <= m < ell,
        bounded total degree) each contain their expected leading monomial
        x^(ell p + m delta) with nonzero coefficient, and that these leading
        monomials are pairwise distinct."""
        seen = set()
        for m in range(self.ell):
            base = m * self.n
            if base > max_total_degree:
                break
            smax = (max_total_degree - base) // self.ell
            for p in _exponents_bounded(self.n, smax):
                prod = self.mul(
                    self.monomial(tuple(self.ell * k for k in p)), self.w_power(m)
                )
                lead = PBWMonomial(
                    tuple(self.ell * k + m for k in p), self.identity_g
                )
                if lead in seen or prod.terms.get(lead) is None:
                    return False
                seen.add(lead)
        return True

    def sklyanin_check(self) -> bool:
        """For n = 3, verify phi_i phi_(i+1) - zeta phi_(i+1) phi_i = zeta t_i
        with phi_i = x_i g_(i+1), indices mod 3."""
        if self.n != 3:
            raise ValueError("the Sklyanin spot-check requires n = 3")
        zeta = self.ring.zeta()
        phi = [self.mul(self.gen_x(i), self.gen_g(i % 3 + 1)) for i in (1, 2, 3)]
        for i in range(3):
            a, b = phi[i], phi[(i + 1) % 3]
            lhs = self.mul(a, b) - self.mul(b, a).scale(zeta)
            rhs = self.scalar(zeta * self.ring.t(i + 1))
            if lhs != rhs:
                return False
        return True


def _exponents_bounded(n: int, total: int):
    """All exponent tuples of length n with sum at most total."""
    if total < 0:
        return
    for p in itertools.product(range(total + 1), repeat=n):
        if sum(p) <= total:
            yield p
