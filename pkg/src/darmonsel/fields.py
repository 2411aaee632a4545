"""Totally real base fields at desk scale.

A field is presented as Q[x]/(f) with f monic, integer, irreducible, totally
real, of degree at most 4. Real places are certified root intervals with
rational endpoints; finite primes are Kummer-Dedekind data (p, local factor,
e, f). Primes over p dividing disc(f) are not certified by mod-p factorization
and must be registered explicitly by the caller.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import polyarith, polymod
from .errors import (
    AmbiguousValuation,
    DegreeUnsupported,
    IndexObstruction,
    InputError,
    NormTooLarge,
    NotIrreducible,
    NotMonic,
    NotTotallyReal,
)
from .intmath import factor_within_bound, factorize, is_prime

DEFAULT_PRECISION = Fraction(1, 2**32)
DEFAULT_TRIAL_BOUND = 10**6


@dataclass(frozen=True)
class PrimeIdeal:
    """Prime of O_F in Kummer-Dedekind form.

    local_factor is monic over F_p (little-endian, entries in [0,p)), f is its
    degree, e the ramification index. Residue field F_(p^f).
    """

    p: int
    local_factor: tuple[int, ...]
    e: int
    f: int

    def __post_init__(self):
        assert self.f == len(self.local_factor) - 1
        assert self.local_factor[-1] == 1
        assert self.e >= 1

    @property
    def norm(self) -> int:
        return self.p**self.f

    @property
    def sort_key(self):
        return (self.p, self.f, self.e, self.local_factor)

    def residue_of(self, coeffs) -> tuple[int, ...]:
        """Image of an integer polynomial in theta inside O/P = F_p[x]/(local_factor)."""
        reduced = polymod.reduce_mod(coeffs, self.p)
        return polymod.divmod_poly(reduced, self.local_factor, self.p)[1]

    def divides_element(self, coeffs) -> bool:
        return not self.residue_of(coeffs)

    def __str__(self):
        if self.local_factor == (0, 1) and self.e == 1 and self.f == 1:
            return f"({self.p})"
        return f"({self.p}, {_poly_str(self.local_factor)}, e={self.e}, f={self.f})"


def _poly_str(c) -> str:
    terms = []
    for i, a in enumerate(c):
        if a == 0:
            continue
        if i == 0:
            terms.append(str(a))
        elif i == 1:
            terms.append(f"{a}*x" if a != 1 else "x")
        else:
            terms.append(f"{a}*x^{i}" if a != 1 else f"x^{i}")
    return " + ".join(reversed(terms)) if terms else "0"


@dataclass(frozen=True)
class RealPlace:
    """Embedding F -> R, certified by an isolating interval for its root.

    lo == hi is allowed (rational root, degree 1 only) and means the embedding
    is exact. precision is the width bound the interval was refined to.
    """

    index: int
    lo: Fraction
    hi: Fraction
    precision: Fraction

    def __post_init__(self):
        assert self.lo <= self.hi
        assert self.hi - self.lo <= self.precision

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self):
        return f"v{self.index}[{float(self.lo):.6f}, {float(self.hi):.6f}]"


@dataclass(frozen=True)
class NumberField:
    degree: int
    defining_poly: tuple[int, ...]
    poly_disc: int
    index_warning_primes: frozenset[int]
    # explicit Kummer-Dedekind data registered for warned primes
    explicit_primes: tuple[tuple[int, tuple[PrimeIdeal, ...]], ...] = field(default=())

    def explicit_for(self, p: int):
        for q, primes in self.explicit_primes:
            if q == p:
                return primes
        return None

    def with_explicit_primes(self, p: int, primes) -> "NumberField":
        """Register caller-certified primes above a warned p; returns a new field."""
        primes = tuple(sorted(primes, key=lambda pr: pr.sort_key))
        if p not in self.index_warning_primes:
            raise InputError(f"p={p} is not an index-warning prime; use primes_above")
        for pr in primes:
            _validate_prime_shape(self, pr, warned=True)
        if sum(pr.e * pr.f for pr in primes) != self.degree:
            raise InputError("explicit data must satisfy sum(e*f) = degree")
        if len({pr.local_factor for pr in primes}) != len(primes):
            raise InputError("explicit primes must have distinct local factors")
        table = tuple(t for t in self.explicit_primes if t[0] != p) + ((p, primes),)
        return replace(self, explicit_primes=tuple(sorted(table)))

    def __str__(self):
        return f"Q[x]/({_poly_str(self.defining_poly)})"


def _validate_prime_shape(F: NumberField, P: PrimeIdeal, warned: bool):
    if not is_prime(P.p):
        raise InputError(f"{P.p} is not prime")
    if tuple(c % P.p for c in P.local_factor) != P.local_factor:
        raise InputError("local_factor coefficients must be reduced mod p")
    if not polymod.is_irreducible_fp(P.local_factor, P.p):
        raise InputError(f"local_factor {P.local_factor} reducible mod {P.p}")
    if P.e * P.f > F.degree:
        raise InputError("e*f exceeds the field degree")
    if not warned:
        # local_factor^e must exactly divide the defining polynomial mod p
        fp = polymod.reduce_mod(F.defining_poly, P.p)
        power = (1,)
        for _ in range(P.e):
            power = polymod.mul(power, P.local_factor, P.p)
        q, r = polymod.divmod_poly(fp, power, P.p)
        if r:
            raise InputError("local_factor^e does not divide the defining poly mod p")
        if not polymod.divmod_poly(q, P.local_factor, P.p)[1]:
            raise InputError("division by local_factor^e is not exact")


def parse_field(coeffs) -> NumberField:
    """Build and certify a NumberField from little-endian integer coefficients.

    Raises NotMonic, DegreeUnsupported, NotIrreducible, NotTotallyReal.
    """
    try:
        poly = tuple(int(c) for c in coeffs)
    except (TypeError, ValueError) as exc:
        raise NotMonic(f"coefficients must be integers: {coeffs!r}") from exc
    if list(poly) != list(coeffs):
        raise NotMonic(f"coefficients must be integers: {coeffs!r}")
    poly = polyarith.trim(poly)
    d = polyarith.deg(poly)
    if d < 1 or not poly:
        raise DegreeUnsupported("degree must be between 1 and 4")
    if poly[-1] != 1:
        raise NotMonic(f"leading coefficient {poly[-1]} != 1")
    if d > 4:
        raise DegreeUnsupported(f"degree {d} > 4: exact kernels are capped at quartics")
    if not polyarith.is_irreducible_monic_int(poly):
        raise NotIrreducible(f"{_poly_str(poly)} factors over Q")
    if polyarith.count_real_roots(poly) != d:
        raise NotTotallyReal(f"{_poly_str(poly)} has non-real roots")
    disc = polyarith.discriminant(poly)
    assert disc != 0
    warned = frozenset(factorize(abs(disc)))
    return NumberField(degree=d, defining_poly=poly, poly_disc=disc,
                       index_warning_primes=warned)


def real_embeddings(F: NumberField, precision: Fraction = DEFAULT_PRECISION):
    """All real places, one per root, intervals sorted ascending, index 1..d."""
    intervals = polyarith.isolate_real_roots(F.defining_poly, precision)
    assert len(intervals) == F.degree
    places = tuple(
        RealPlace(index=i + 1, lo=lo, hi=hi, precision=precision)
        for i, (lo, hi) in enumerate(intervals)
    )
    for a, b in zip(places, places[1:]):
        assert a.hi < b.lo, "isolating intervals must be disjoint"
    return places


def refine_place(F: NumberField, place: RealPlace, precision: Fraction) -> RealPlace:
    """Shrink a place's interval; returns a new RealPlace, input unchanged."""
    if place.lo == place.hi or place.width <= precision:
        return replace(place, precision=min(precision, place.precision))
    lo, hi = polyarith.refine_sign_change(F.defining_poly, place.lo, place.hi, precision)
    return RealPlace(index=place.index, lo=lo, hi=hi, precision=precision)


def primes_above(F: NumberField, p: int):
    """Primes of O_F over p, by Kummer-Dedekind. Requires p prime.

    Raises IndexObstruction for p dividing disc(defining_poly) unless explicit
    data was registered with with_explicit_primes.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    explicit = F.explicit_for(p)
    if explicit is not None:
        return explicit
    if p in F.index_warning_primes:
        raise IndexObstruction(
            f"p={p} divides disc = {F.poly_disc}; mod-p factorization is not "
            "certified, register explicit prime data")
    fp_factors = polymod.factor_squarefree_monic_fp(F.defining_poly, p)
    primes = tuple(sorted(
        (PrimeIdeal(p=p, local_factor=g, e=1, f=polymod.deg(g)) for g in fp_factors),
        key=lambda pr: pr.sort_key))
    assert sum(pr.e * pr.f for pr in primes) == F.degree
    return primes


@dataclass(frozen=True)
class IdealFactorization:
    """Integral ideal in factored form; the empty product is the unit ideal."""

    factors: tuple[tuple[PrimeIdeal, int], ...]

    def __post_init__(self):
        keys = [P.sort_key for P, _ in self.factors]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        assert all(e >= 1 for _, e in self.factors)

    @classmethod
    def unit(cls) -> "IdealFactorization":
        return cls(factors=())

    @classmethod
    def from_pairs(cls, pairs) -> "IdealFactorization":
        merged: dict[PrimeIdeal, int] = {}
        for P, e in pairs:
            merged[P] = merged.get(P, 0) + e
        kept = tuple(sorted(((P, e) for P, e in merged.items() if e != 0),
                            key=lambda t: t[0].sort_key))
        assert all(e > 0 for _, e in kept)
        return cls(factors=kept)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def primes(self):
        return tuple(P for P, _ in self.factors)

    def exponent_of(self, P: PrimeIdeal) -> int:
        for Q, e in self.factors:
            if Q == P:
                return e
        return 0

    def all_exponents_one(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def mul(self, other: "IdealFactorization") -> "IdealFactorization":
        return IdealFactorization.from_pairs(self.factors + other.factors)

    def div_exact(self, other: "IdealFactorization") -> "IdealFactorization":
        counts = {P: e for P, e in self.factors}
        for P, e in other.factors:
            have = counts.get(P, 0)
            if have < e:
                raise InputError(f"division not exact at {P}")
            counts[P] = have - e
        return IdealFactorization.from_pairs(counts.items())

    def coprime_to(self, other: "IdealFactorization") -> bool:
        mine = {P for P, _ in self.factors}
        return not any(P in mine for P, _ in other.factors)

    def norm(self) -> int:
        out = 1
        for P, e in self.factors:
            out *= P.norm**e
        return out

    def __str__(self):
        if self.is_unit:
            return "(1)"
        return " * ".join(f"{P}^{e}" if e > 1 else f"{P}" for P, e in self.factors)


def prime_power(P: PrimeIdeal, e: int = 1) -> IdealFactorization:
    return IdealFactorization.from_pairs([(P, e)])


def factor_ideal(F: NumberField, *, generator=None, factors=None,
                 trial_bound: int = DEFAULT_TRIAL_BOUND) -> IdealFactorization:
    """Factor an integral ideal given either way.

    generator: little-endian integer coefficients of an element of Z[theta]
    (principal ideal; its norm must factor by trial division within
    trial_bound, and every prime dividing the norm must be certifiable).
    factors: iterable of (PrimeIdeal, exponent) pairs, validated and returned
    verbatim.
    """
    if (generator is None) == (factors is None):
        raise InputError("give exactly one of generator= or factors=")
    if factors is not None:
        pairs = list(factors)
        for P, e in pairs:
            if not isinstance(P, PrimeIdeal):
                raise InputError("factored form needs PrimeIdeal keys")
            if e < 1:
                raise InputError(f"exponent {e} < 1 at {P}")
            _validate_prime_shape(F, P, warned=P.p in F.index_warning_primes)
        by_p: dict[int, int] = {}
        for P, _ in pairs:
            by_p[P.p] = by_p.get(P.p, 0) + P.e * P.f
        for p, total in by_p.items():
            if total > F.degree:
                raise InputError(f"primes over {p} exceed sum(e*f) = degree")
        if len({P for P, _ in pairs}) != len(pairs):
            raise InputError("duplicate prime in factored input")
        return IdealFactorization.from_pairs(pairs)

    try:
        gen_coeffs = tuple(int(c) for c in generator)
    except (TypeError, ValueError) as exc:
        raise InputError(f"generator must be integer coefficients: {generator!r}") from exc
    gen = polyarith.reduce_mod_poly(gen_coeffs, F.defining_poly)
    norm = polyarith.resultant(F.defining_poly, gen) if gen else Fraction(0)
    assert norm.denominator == 1
    norm = int(norm)
    if norm == 0:
        raise InputError("zero generator does not define an integral ideal")
    if abs(norm) == 1:
        return IdealFactorization.unit()
    try:
        norm_factors = factor_within_bound(abs(norm), trial_bound)
    except ValueError as exc:
        raise NormTooLarge(f"|N(gen)| = {abs(norm)}: {exc}") from exc
    pairs = []
    for p in sorted(norm_factors):
        vp = norm_factors[p]
        primes = primes_above(F, p)  # IndexObstruction propagates
        dividing = [P for P in primes if P.divides_element(gen)]
        assert dividing, "a prime dividing the norm must divide the generator"
        if len(dividing) > 1:
            raise AmbiguousValuation(
                f"{len(dividing)} primes above {p} divide the generator; "
                "norm bookkeeping cannot split the valuation")
        P = dividing[0]
        v, rem = divmod(vp, P.f)
        if rem:
            raise InputError(
                f"norm valuation {vp} at p={p} is not a multiple of f={P.f}")
        pairs.append((P, v))
    return IdealFactorization.from_pairs(pairs)
