"""Admissible quaternion data for the two point constructions.

Given K = F(sqrt(delta)) and a conductor ideal N, classify every place, take
the functional-equation sign from the parity count, and enumerate the
quaternion algebras B (by ramification set) plus Eichler level splittings
N = N+ * N' * N- that make one of the two constructions applicable:

  gartner:   one distinguished inert real place stays split in B (r_K = 1),
             every other inert real place and every inert prime dividing N
             ramifies in B; N' = (1).
  greenberg: every inert real place ramifies in B (r_K = 0); one inert prime
             exactly dividing N is the level extension N'; the remaining inert
             primes dividing N ramify in B.

Infeasibility is data, not an error: selectors return empty lists and the
report records structured reasons.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DiscNotCoprime
from .fields import (DEFAULT_PRECISION, IdealFactorization, PrimeIdeal,
                     RealPlace, real_embeddings)
from .quadratic import (
    PlaceType,
    QuadraticExtension,
    classify_conductor,
    classify_real_place,
)


class Kind(Enum):
    GARTNER = "gartner"
    GREENBERG = "greenberg"


class ReasonCode(Enum):
    NO_INERT_REAL_PLACE = "NoInertRealPlace"
    NO_EXACT_INERT_PRIME = "NoExactInertPrime"
    INERT_PART_NOT_SQUAREFREE = "InertPartNotSquarefree"
    SIGN_PLUS_ONE = "SignPlusOne"
    DISC_NOT_COPRIME = "DiscNotCoprime"
    PARITY_OBSTRUCTION = "ParityObstruction"


@dataclass(frozen=True)
class Reason:
    code: ReasonCode
    detail: str = ""


@dataclass(frozen=True)
class ConductorProfile:
    """Everything the selectors need, classified once."""

    extension: QuadraticExtension
    conductor: IdealFactorization
    real_classes: tuple[tuple[RealPlace, PlaceType], ...]
    finite_classes: tuple[tuple[PrimeIdeal, int, PlaceType], ...]
    inert_real_count: int
    inert_finite: tuple[tuple[PrimeIdeal, int], ...]
    inert_part_squarefree: bool
    disc_coprime: bool

    def __post_init__(self):
        assert self.inert_real_count == sum(
            1 for _, t in self.real_classes if t is PlaceType.INERT)
        assert self.inert_finite == tuple(
            (P, e) for P, e, t in self.finite_classes if t is PlaceType.INERT)
        assert self.inert_part_squarefree == all(e == 1 for _, e in self.inert_finite)
        if self.disc_coprime:
            assert all(t is not PlaceType.RAMIFIED for _, _, t in self.finite_classes)

    @property
    def inert_real_places(self):
        return tuple(v for v, t in self.real_classes if t is PlaceType.INERT)

    def place_type_of(self, P: PrimeIdeal) -> PlaceType:
        for Q, _, t in self.finite_classes:
            if Q == P:
                return t
        raise KeyError(f"{P} does not divide the conductor")


@dataclass(frozen=True)
class QuaternionAlgebraSpec:
    """One admissible quaternion algebra plus Eichler level splitting.

    ramified_real and ramified_finite are the ramification set of B (always an
    even number of places in total, all inert in K). distinguished is the
    split-in-B inert real place (gartner) or the level-extension prime
    (greenberg).
    """

    kind: Kind
    distinguished: RealPlace | PrimeIdeal
    ramified_real: tuple[RealPlace, ...]
    ramified_finite: tuple[PrimeIdeal, ...]
    n_plus: IdealFactorization
    n_prime: IdealFactorization
    n_minus: IdealFactorization

    def __post_init__(self):
        assert (len(self.ramified_real) + len(self.ramified_finite)) % 2 == 0
        assert tuple(sorted(self.ramified_real, key=lambda v: v.index)) == self.ramified_real
        assert tuple(sorted(self.ramified_finite, key=lambda P: P.sort_key)) == self.ramified_finite
        assert self.n_minus.all_exponents_one()
        assert self.n_minus.primes() == self.ramified_finite
        if self.kind is Kind.GARTNER:
            assert isinstance(self.distinguished, RealPlace)
            assert self.n_prime.is_unit
            assert self.distinguished not in self.ramified_real
        else:
            assert isinstance(self.distinguished, PrimeIdeal)
            assert self.n_prime.factors == ((self.distinguished, 1),)

    @property
    def sort_key(self):
        dkey = ((0, self.distinguished.index) if isinstance(self.distinguished, RealPlace)
                else (1,) + self.distinguished.sort_key)
        return (self.kind.value, dkey,
                tuple(v.index for v in self.ramified_real),
                tuple(P.sort_key for P in self.ramified_finite))


@dataclass(frozen=True)
class FeasibilityReport:
    profile: ConductorProfile
    sign: int
    gartner_options: tuple[QuaternionAlgebraSpec, ...]
    greenberg_options: tuple[QuaternionAlgebraSpec, ...]
    failure_reasons: tuple[Reason, ...]
    theorem1_consistent: bool
    order_conductor: IdealFactorization | None = None
    assumed: tuple[str, ...] = ("B2",)

    @property
    def feasible(self) -> bool:
        return bool(self.gartner_options or self.greenberg_options)

    @property
    def both_feasible(self) -> bool:
        return bool(self.gartner_options) and bool(self.greenberg_options)


def build_profile(K: QuadraticExtension, N: IdealFactorization,
                  strict: bool = True,
                  precision: Fraction = DEFAULT_PRECISION) -> ConductorProfile:
    """Classify every real place and every prime of N.

    strict (the default) raises DiscNotCoprime as soon as a prime of N
    ramifies in K; strict=False records the ramification in the profile
    instead, for report assembly. precision bounds the reported root
    interval widths; classification itself refines further as needed.
    """
    real_classes = tuple(
        (v, classify_real_place(K, v)) for v in real_embeddings(K.base, precision))
    finite_classes = classify_conductor(K, N)
    ramified = [P for P, _, t in finite_classes if t is PlaceType.RAMIFIED]
    if ramified and strict:
        raise DiscNotCoprime(
            "conductor meets the relative discriminant at "
            + ", ".join(str(P) for P in ramified))
    inert_finite = tuple((P, e) for P, e, t in finite_classes if t is PlaceType.INERT)
    return ConductorProfile(
        extension=K,
        conductor=N,
        real_classes=real_classes,
        finite_classes=finite_classes,
        inert_real_count=sum(1 for _, t in real_classes if t is PlaceType.INERT),
        inert_finite=inert_finite,
        inert_part_squarefree=all(e == 1 for _, e in inert_finite),
        disc_coprime=not ramified,
    )


def sign_functional_equation(profile: ConductorProfile) -> int:
    """(-1) to the number of inert real places plus inert primes dividing N."""
    return -1 if (profile.inert_real_count + len(profile.inert_finite)) % 2 else 1


def check_optimal_embedding_local(spec: QuaternionAlgebraSpec,
                                  profile: ConductorProfile) -> bool:
    """Local optimal-embedding criterion for O_K into the Eichler order:
    every prime dividing N- must be inert in K, every prime dividing N+
    split. Selectors enforce this as a post-filter, never by assumption."""
    for P, _ in spec.n_minus.factors:
        if profile.place_type_of(P) is not PlaceType.INERT:
            return False
    for P, _ in spec.n_plus.factors:
        if profile.place_type_of(P) is not PlaceType.SPLIT:
            return False
    return True


def _embedding_check_drop_b4(spec: QuaternionAlgebraSpec,
                             profile: ConductorProfile) -> bool:
    # Widened mode: inert primes may sit in N+ (the construction tolerates
    # f_K > 0 there); split primes are still required split, ramified barred.
    for P, _ in spec.n_minus.factors:
        if profile.place_type_of(P) is not PlaceType.INERT:
            return False
    for P, _ in spec.n_plus.factors:
        if profile.place_type_of(P) is PlaceType.RAMIFIED:
            return False
    return True


def select_gartner(profile: ConductorProfile,
                   allow_drop_b4: bool = False) -> tuple[QuaternionAlgebraSpec, ...]:
    """Admissible specs for the construction with one split inert real place.

    Every inert prime dividing N must ramify in B, so N must be squarefree at
    the inert primes and N' = (1). With allow_drop_b4 the inert primes may
    instead be left split in B (subject to parity), which moves them into N+.
    Infeasibility is the empty tuple; the report records the reasons.
    """
    return _select_gartner(profile, allow_drop_b4)[0]


def _select_gartner(profile: ConductorProfile, allow_drop_b4: bool = False):
    reasons: list[Reason] = []
    inert_reals = profile.inert_real_places
    if not inert_reals:
        reasons.append(Reason(ReasonCode.NO_INERT_REAL_PLACE,
                              "no real place of F is inert in K"))
        return (), tuple(reasons)
    inert_primes = tuple(P for P, _ in profile.inert_finite)
    exact_primes = tuple(P for P, e in profile.inert_finite if e == 1)
    specs = []
    for tau in inert_reals:
        ram_real = tuple(v for v in inert_reals if v != tau)
        if allow_drop_b4:
            subsets = [tuple(s) for r in range(len(exact_primes) + 1)
                       for s in itertools.combinations(exact_primes, r)]
        else:
            if not profile.inert_part_squarefree:
                reasons.append(Reason(
                    ReasonCode.INERT_PART_NOT_SQUAREFREE,
                    "an inert prime divides N with exponent >= 2, so it "
                    "cannot ramify in B with N- squarefree"))
                continue
            subsets = [inert_primes]
        for ram_fin in subsets:
            if (len(ram_real) + len(ram_fin)) % 2:
                reasons.append(Reason(
                    ReasonCode.PARITY_OBSTRUCTION,
                    f"candidate with distinguished {tau} needs "
                    f"{len(ram_real)} + {len(ram_fin)} ramified places, odd"))
                continue
            n_minus = IdealFactorization.from_pairs((P, 1) for P in ram_fin)
            n_plus = profile.conductor.div_exact(n_minus)
            spec = QuaternionAlgebraSpec(
                kind=Kind.GARTNER,
                distinguished=tau,
                ramified_real=ram_real,
                ramified_finite=ram_fin,
                n_plus=n_plus,
                n_prime=IdealFactorization.unit(),
                n_minus=n_minus,
            )
            check = _embedding_check_drop_b4 if allow_drop_b4 else check_optimal_embedding_local
            if check(spec, profile):
                specs.append(spec)
    return tuple(sorted(specs, key=lambda s: s.sort_key)), tuple(reasons)


def select_greenberg(profile: ConductorProfile) -> tuple[QuaternionAlgebraSpec, ...]:
    """Admissible specs for the construction with no split inert real place:
    one inert prime exactly dividing N carries the level extension N'.
    Infeasibility is the empty tuple; the report records the reasons."""
    return _select_greenberg(profile)[0]


def _select_greenberg(profile: ConductorProfile):
    reasons: list[Reason] = []
    exact = [P for P, e in profile.inert_finite if e == 1]
    if not exact:
        reasons.append(Reason(ReasonCode.NO_EXACT_INERT_PRIME,
                              "no inert prime divides N with exponent exactly 1"))
        return (), tuple(reasons)
    inert_reals = profile.inert_real_places
    specs = []
    for p0 in exact:
        others = tuple((P, e) for P, e in profile.inert_finite if P != p0)
        if any(e >= 2 for _, e in others):
            reasons.append(Reason(
                ReasonCode.INERT_PART_NOT_SQUAREFREE,
                f"with N' = {p0} some remaining inert prime has exponent >= 2"))
            continue
        ram_fin = tuple(P for P, _ in others)
        if (len(inert_reals) + len(ram_fin)) % 2:
            reasons.append(Reason(
                ReasonCode.PARITY_OBSTRUCTION,
                f"candidate with N' = {p0} needs {len(inert_reals)} + "
                f"{len(ram_fin)} ramified places, odd"))
            continue
        n_prime = IdealFactorization.from_pairs([(p0, 1)])
        n_minus = IdealFactorization.from_pairs((P, 1) for P in ram_fin)
        n_plus = profile.conductor.div_exact(n_minus.mul(n_prime))
        spec = QuaternionAlgebraSpec(
            kind=Kind.GREENBERG,
            distinguished=p0,
            ramified_real=inert_reals,
            ramified_finite=ram_fin,
            n_plus=n_plus,
            n_prime=n_prime,
            n_minus=n_minus,
        )
        if check_optimal_embedding_local(spec, profile):
            specs.append(spec)
    return tuple(sorted(specs, key=lambda s: s.sort_key)), tuple(reasons)


def validate_spec(spec: QuaternionAlgebraSpec, profile: ConductorProfile,
                  allow_drop_b4: bool = False) -> None:
    """Assert every structural requirement of an emitted spec. Used by the
    report assembly and the test suite; raises AssertionError on violation."""
    # ramification parity (the algebra must exist)
    assert (len(spec.ramified_real) + len(spec.ramified_finite)) % 2 == 0
    # every ramified place inert in K (K embeds in B)
    inert_reals = set(profile.inert_real_places)
    assert all(v in inert_reals for v in spec.ramified_real)
    for P in spec.ramified_finite:
        assert profile.place_type_of(P) is PlaceType.INERT
    # level splitting: N = N+ N' N-, pairwise coprime, N- squarefree
    assert spec.n_plus.mul(spec.n_prime).mul(spec.n_minus) == profile.conductor
    assert spec.n_plus.coprime_to(spec.n_prime)
    assert spec.n_plus.coprime_to(spec.n_minus)
    assert spec.n_prime.coprime_to(spec.n_minus)
    assert spec.n_minus.all_exponents_one()
    # local embedding criterion
    if allow_drop_b4:
        assert _embedding_check_drop_b4(spec, profile)
    else:
        assert check_optimal_embedding_local(spec, profile)
    # kind shape
    if spec.kind is Kind.GARTNER:
        assert isinstance(spec.distinguished, RealPlace)
        assert spec.distinguished in inert_reals
        assert set(spec.ramified_real) == inert_reals - {spec.distinguished}
        if not allow_drop_b4:
            assert set(spec.ramified_finite) == {P for P, _ in profile.inert_finite}
    else:
        assert isinstance(spec.distinguished, PrimeIdeal)
        assert set(spec.ramified_real) == inert_reals
        assert profile.conductor.exponent_of(spec.distinguished) == 1
        assert set(spec.ramified_finite) == {
            P for P, _ in profile.inert_finite} - {spec.distinguished}


def feasibility_report(K: QuadraticExtension, N: IdealFactorization, *,
                       order_conductor: IdealFactorization | None = None,
                       allow_drop_b4: bool = False,
                       precision: Fraction = DEFAULT_PRECISION) -> FeasibilityReport:
    """Full decision: profile, sign, both selectors, consistency flags.

    Never raises on infeasible input; obstructions land in failure_reasons.
    """
    profile = build_profile(K, N, strict=False, precision=precision)
    reasons: list[Reason] = []
    if not profile.disc_coprime:
        ramified = [P for P, _, t in profile.finite_classes if t is PlaceType.RAMIFIED]
        reasons.append(Reason(
            ReasonCode.DISC_NOT_COPRIME,
            "conductor meets the relative discriminant at "
            + ", ".join(str(P) for P in ramified)))
    sign = sign_functional_equation(profile)
    if sign == 1:
        reasons.append(Reason(ReasonCode.SIGN_PLUS_ONE,
                              "functional-equation sign is +1"))
    gartner, g_reasons = _select_gartner(profile, allow_drop_b4=allow_drop_b4)
    greenberg, h_reasons = _select_greenberg(profile)
    reasons.extend(g_reasons)
    reasons.extend(h_reasons)
    if not profile.inert_part_squarefree and not any(
            r.code is ReasonCode.INERT_PART_NOT_SQUAREFREE for r in reasons):
        reasons.append(Reason(ReasonCode.INERT_PART_NOT_SQUAREFREE,
                              "an inert prime divides N with exponent >= 2"))
    for spec in gartner + greenberg:
        validate_spec(spec, profile, allow_drop_b4=allow_drop_b4)
    if order_conductor is not None and not order_conductor.coprime_to(N):
        shared = [str(P) for P in order_conductor.primes()
                  if N.exponent_of(P) > 0]
        reasons.append(Reason(
            ReasonCode.DISC_NOT_COPRIME,
            "order conductor shares " + ", ".join(shared) + " with N"))
    options = gartner + greenberg
    consistent = ((not options or sign == -1)
                  and (not (sign == -1 and profile.inert_part_squarefree
                            and profile.disc_coprime) or bool(options)))
    deduped = tuple(dict.fromkeys(reasons))
    return FeasibilityReport(
        profile=profile,
        sign=sign,
        gartner_options=gartner,
        greenberg_options=greenberg,
        failure_reasons=deduped,
        theorem1_consistent=consistent,
        order_conductor=order_conductor,
    )
