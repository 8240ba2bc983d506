"""Rational basis certificates, partitions, and the claim auditor.

The objects here formalize the analysis that makes the classification work.
A *rational basis certificate* for a tuple picks greedy independent positions
i_1 < ... < i_t, scales each picked element down by the least positive
multiplier l_tau clearing all denominators column-wise, and records the full
q-by-t integer exponent matrix l(i, tau) so that

    a_i = sum_tau l(i, tau) * eta_tau,      eta_tau = a_{i_tau} / l_tau

holds exactly over the rationals.  An *adequate basis*, by contrast, lives in
the span itself: a basis eta_1..eta_t of span(t) with t tuple elements being
integer multiples of distinct basis elements.  Such a basis need not exist;
``adequate_basis_decide`` settles the question with a witness or a complete
refutation, using the fact that a basis element is primitive in the span and
the primitive element parallel to a given direction is unique up to sign.

``audit_claims`` checks, on a concrete property-(P_{q,s}) instance, the
structural assertions that drive the classification: the exponent matrix is
either entirely non-negative ("case alpha") or has a negative entry ("case
beta"); in case alpha the leading-axis class sizes avoid subset-sum s and, at
rank s-1, match one of two multiplicity patterns; in case beta, splitting the
positions by sign on a negative axis leaves a zero part that inherits a
smaller property, drops rank by exactly one, and never classifies as type A.
Each claim carries pass/fail/skip status with witness data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .classify import classify
from .lattice import (
    Vector,
    hnf_rows,
    is_zero,
    primitive_representative,
    solve_rational_combination,
    sublattice_index,
    zero_vector,
)
from .tuples import (
    GroupTuple,
    equal_pair,
    has_property,
    rank,
    span,
    translate,
)


# ---------------------------------------------------------------------------
# Rational basis certificates


@dataclass(frozen=True)
class QBasisCertificate:
    """Exact rational-basis data for a tuple (0-based indices).

    eta_tau is stored as an integer numerator vector with a positive
    denominator, in lowest terms (no integer > 1 divides all numerator entries
    and the denominator).
    """

    indices: tuple[int, ...]
    multipliers: tuple[int, ...]
    eta_num: tuple[Vector, ...]
    eta_den: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.indices)

    def eta_row(self, tau: int) -> tuple[Fraction, ...]:
        den = self.eta_den[tau]
        return tuple(Fraction(x, den) for x in self.eta_num[tau])

    def to_json_obj(self) -> dict:
        return {
            "indices": [i + 1 for i in self.indices],
            "multipliers": list(self.multipliers),
            "eta_num": [list(r) for r in self.eta_num],
            "eta_den": list(self.eta_den),
            "exponents": [list(r) for r in self.exponents],
        }


def _greedy_independent(t: GroupTuple, target_rank: int) -> list[int]:
    chosen: list[int] = []
    for i, e in enumerate(t.elements):
        if is_zero(e):
            continue
        cand = hnf_rows([t.elements[j] for j in chosen] + [list(e)], t.dim)
        if cand.rank > len(chosen):
            chosen.append(i)
            if len(chosen) == target_rank:
                break
    return chosen


def q_basis_certificate(t: GroupTuple) -> QBasisCertificate:
    """Deterministic rational basis certificate (greedy indices, LCM scaling).

    Raises ValueError on a rank-0 tuple.
    """
    tr = rank(t)
    if tr == 0:
        raise ValueError("rank-0 tuple admits no basis certificate")
    chosen = _greedy_independent(t, tr)
    base = [t.elements[i] for i in chosen]
    coords: list[tuple[Fraction, ...]] = []
    for e in t.elements:
        x = solve_rational_combination(base, e)
        if x is None:  # unreachable: base spans the tuple
            raise RuntimeError("greedy base does not span the tuple")
        coords.append(x)
    mult = []
    for tau in range(tr):
        m = 1
        for row in coords:
            m = lcm(m, row[tau].denominator)
        mult.append(m)
    exponents = tuple(
        tuple(int(row[tau] * mult[tau]) for tau in range(tr)) for row in coords
    )
    eta_num = []
    eta_den = []
    for tau in range(tr):
        g = mult[tau]
        for x in base[tau]:
            g = gcd(g, x)
        eta_num.append(tuple(x // g for x in base[tau]))
        eta_den.append(mult[tau] // g)
    return QBasisCertificate(
        indices=tuple(chosen),
        multipliers=tuple(mult),
        eta_num=tuple(eta_num),
        eta_den=tuple(eta_den),
        exponents=exponents,
    )


def verify_certificate(t: GroupTuple, cert: QBasisCertificate) -> bool:
    """Exact re-check of every certificate invariant.  Pure; no search."""
    tr = cert.rank
    q = len(t)
    if not (
        len(cert.multipliers) == tr
        and len(cert.eta_num) == tr
        and len(cert.eta_den) == tr
        and len(cert.exponents) == q
        and all(len(row) == tr for row in cert.exponents)
        and all(len(r) == t.dim for r in cert.eta_num)
    ):
        return False
    if len(set(cert.indices)) != tr or not all(0 <= i < q for i in cert.indices):
        return False
    if any(l <= 0 for l in cert.multipliers) or any(d <= 0 for d in cert.eta_den):
        return False
    for num, den in zip(cert.eta_num, cert.eta_den):
        g = den
        for x in num:
            g = gcd(g, x)
        if g != 1:
            return False
    if hnf_rows(cert.eta_num, t.dim).rank != tr:
        return False
    etas = [cert.eta_row(tau) for tau in range(tr)]
    for tau, (i, l) in enumerate(zip(cert.indices, cert.multipliers)):
        if any(Fraction(x) != l * y for x, y in zip(t.elements[i], etas[tau])):
            return False
        expected = tuple(l if u == tau else 0 for u in range(tr))
        if cert.exponents[i] != expected:
            return False
    for i in range(q):
        row = cert.exponents[i]
        for c in range(t.dim):
            if Fraction(t.elements[i][c]) != sum(
                row[tau] * etas[tau][c] for tau in range(tr)
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# Partitions of positions


@dataclass(frozen=True)
class MPartition:
    """Leading-axis classes M_0..M_t (0-based positions).

    classes[0] holds the zero elements; for tau >= 1, classes[tau] holds the
    positions whose last nonzero exponent sits at axis tau (and is positive).
    """

    classes: tuple[tuple[int, ...], ...]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def to_json_obj(self) -> dict:
        return {
            "classes": [[i + 1 for i in c] for c in self.classes],
            "multiplicities": list(self.multiplicities),
        }


def m_partition(t: GroupTuple, cert: QBasisCertificate) -> MPartition:
    """Partition positions by leading exponent axis.

    Raises ValueError when some position has a negative leading exponent (the
    classes then fail to cover it) or when the certificate does not match the
    tuple's length.
    """
    if len(cert.exponents) != len(t):
        raise ValueError("certificate does not match tuple length")
    tr = cert.rank
    classes: list[list[int]] = [[] for _ in range(tr + 1)]
    for i, row in enumerate(cert.exponents):
        lead = None
        for tau in range(tr - 1, -1, -1):
            if row[tau]:
                lead = tau
                break
        if lead is None:
            classes[0].append(i)
        elif row[lead] > 0:
            classes[lead + 1].append(i)
        else:
            raise ValueError(
                f"position {i + 1} has negative leading exponent on axis "
                f"{lead + 1}; leading-axis classes do not partition the tuple"
            )
    return MPartition(classes=tuple(tuple(c) for c in classes))


@dataclass(frozen=True)
class SignPartition:
    """Positions split by the sign of their exponent on one axis (0-based)."""

    axis: int  # 1-based, as given by the caller
    plus: tuple[int, ...]
    zero: tuple[int, ...]
    minus: tuple[int, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.plus), len(self.zero), len(self.minus))

    @property
    def n_tilde(self) -> int:
        return min(len(self.plus), len(self.minus))

    def to_json_obj(self) -> dict:
        return {
            "axis": self.axis,
            "plus": [i + 1 for i in self.plus],
            "zero": [i + 1 for i in self.zero],
            "minus": [i + 1 for i in self.minus],
        }


def sign_partition(t: GroupTuple, cert: QBasisCertificate, axis: int) -> SignPartition:
    """Split positions by sign of the exponent on ``axis`` (1-based)."""
    if not (1 <= axis <= cert.rank):
        raise ValueError(f"axis {axis} out of range 1..{cert.rank}")
    if len(cert.exponents) != len(t):
        raise ValueError("certificate does not match tuple length")
    col = axis - 1
    plus, zero, minus = [], [], []
    for i, row in enumerate(cert.exponents):
        (plus if row[col] > 0 else minus if row[col] < 0 else zero).append(i)
    return SignPartition(
        axis=axis, plus=tuple(plus), zero=tuple(zero), minus=tuple(minus)
    )


# ---------------------------------------------------------------------------
# Adequate basis decision


@dataclass(frozen=True)
class AdequateBasisWitness:
    """t positions whose primitive representatives form a basis of the span.

    multipliers are the signed nonzero integers d_tau with
    element = d_tau * basis_tau (the basis rows are sign-normalized, so the
    multiplier carries the sign).
    """

    indices: tuple[int, ...]
    multipliers: tuple[int, ...]
    basis: tuple[Vector, ...]

    def to_json_obj(self) -> dict:
        return {
            "indices": [i + 1 for i in self.indices],
            "multipliers": list(self.multipliers),
            "basis": [list(r) for r in self.basis],
        }


@dataclass(frozen=True)
class AdequateBasisDecision:
    exists: bool
    witness: AdequateBasisWitness | None
    refutation: tuple[tuple[tuple[int, ...], int], ...] | None

    def to_json_obj(self) -> dict:
        obj: dict = {"exists": self.exists}
        if self.witness is not None:
            obj["witness"] = self.witness.to_json_obj()
        if self.refutation is not None:
            obj["refutation"] = [
                {"indices": [i + 1 for i in subset], "index": idx}
                for subset, idx in self.refutation
            ]
        return obj


def adequate_basis_decide(t: GroupTuple) -> AdequateBasisDecision:
    """Does some reordering admit a basis of span(t) with t elements as
    integer multiples of distinct basis members?

    Reduction: any such basis element is parallel to a tuple element and lies
    in the span, so it is the (unique up to sign) primitive representative of
    that element.  It therefore suffices to scan rank-sized position subsets
    in lexicographic order and test whether the primitive representatives of
    an independent subset generate the span (sublattice index 1).  The
    refutation lists the index of every independent subset; each is >= 2.
    """
    lat = span(t)
    tr = lat.rank
    if tr == 0:
        raise ValueError("rank-0 tuple: adequate basis undefined")
    refutation = []
    for subset in combinations(range(len(t)), tr):
        rows = [t.elements[i] for i in subset]
        if hnf_rows(rows, t.dim).rank < tr:
            continue
        prims = []
        mults = []
        for i in subset:
            p, d = primitive_representative(lat, t.elements[i])
            prims.append(p)
            mults.append(d)
        idx = sublattice_index(hnf_rows(prims, t.dim), lat)
        if idx == 1:
            return AdequateBasisDecision(
                exists=True,
                witness=AdequateBasisWitness(
                    indices=subset,
                    multipliers=tuple(mults),
                    basis=tuple(prims),
                ),
                refutation=None,
            )
        refutation.append((subset, idx))
    return AdequateBasisDecision(
        exists=False, witness=None, refutation=tuple(refutation)
    )


# ---------------------------------------------------------------------------
# Claim auditor


@dataclass(frozen=True)
class AuditClaim:
    name: str
    status: str  # "pass" | "fail" | "skip"
    witness: dict | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "status": self.status,
            "witness": self.witness,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class AuditReport:
    s: int
    q: int
    case: str  # "alpha" | "beta"
    translation: Vector | None  # value subtracted during normalization
    claims: tuple[AuditClaim, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def failures(self) -> tuple[AuditClaim, ...]:
        return tuple(c for c in self.claims if not c.passed)

    def to_json_obj(self) -> dict:
        return {
            "s": self.s,
            "q": self.q,
            "case": self.case,
            "translation": None if self.translation is None else list(self.translation),
            "claims": [c.to_json_obj() for c in self.claims],
        }


def _one_based(indices) -> list[int]:
    return [i + 1 for i in indices]


def audit_claims(t: GroupTuple, s: int) -> AuditReport:
    """Audit the structural claims on a (P_{q,s}) instance containing zero.

    Preconditions (violations raise ValueError): 2 <= s < q <= 2s, the zero
    element occurs in t, and t has property (P_{q,s}) — the last is verified
    here by exhaustive search.

    The tuple is first normalized so the zero value occurs at least twice:
    when it does not, every element is translated by the first duplicated
    value (one exists, by the equal-pair consequence of the property).  All
    claims refer to the normalized tuple; the report records the translation.
    """
    q = len(t)
    if not (2 <= s < q <= 2 * s):
        raise ValueError(f"audit requires 2 <= s < q <= 2s, got s={s}, q={q}")
    zero = zero_vector(t.dim)
    if zero not in t.elements:
        raise ValueError("audit requires the zero element to occur in the tuple")
    prop = has_property(t, q, s)
    if not prop.holds:
        raise ValueError(
            f"audit requires property (P_{{{q},{s}}}); it fails at "
            f"window {_one_based(prop.failure_witness[0])}, "
            f"selection {_one_based(prop.failure_witness[1])}"
        )

    translation: Vector | None = None
    nt = t
    if t.elements.count(zero) < 2:
        pair = equal_pair(t)
        if pair is None:  # impossible for a property instance
            raise RuntimeError("property instance without an equal pair")
        translation = t.elements[pair[0]]
        nt = translate(t, translation)

    tr = rank(nt)
    claims: list[AuditClaim] = []

    if tr == 0:
        # Every element is zero: one class of size q, no axes at all.
        mults = (q,)
        claims.append(
            AuditClaim(
                name="multiplicity_sums_avoid_s",
                status="pass" if q != s else "fail",
                witness={"multiplicities": list(mults)},
            )
        )
        claims.append(
            AuditClaim(
                name="multiplicity_pattern",
                status="skip",
                reason=f"rank 0 != s-1 = {s - 1}",
            )
        )
        for name in ("zero_axis_property", "zero_axis_rank_drop", "zero_axis_not_type_a"):
            claims.append(
                AuditClaim(name=name, status="skip", reason="no negative exponents")
            )
        return AuditReport(
            s=s, q=q, case="alpha", translation=translation, claims=tuple(claims)
        )

    cert = q_basis_certificate(nt)
    neg_axes = [
        tau
        for tau in range(cert.rank)
        if any(row[tau] < 0 for row in cert.exponents)
    ]
    case = "beta" if neg_axes else "alpha"

    if case == "alpha":
        part = m_partition(nt, cert)
        mults = part.multiplicities
        bad_subset = None
        for size in range(1, len(mults) + 1):
            for subset in combinations(range(len(mults)), size):
                if sum(mults[u] for u in subset) == s:
                    bad_subset = subset
                    break
            if bad_subset:
                break
        witness: dict = {"multiplicities": list(mults)}
        if bad_subset is not None:
            witness["subset_axes"] = list(bad_subset)
        claims.append(
            AuditClaim(
                name="multiplicity_sums_avoid_s",
                status="fail" if bad_subset is not None else "pass",
                witness=witness,
            )
        )
        if tr == s - 1:
            pattern_a = mults[0] == s + 1 and all(m == 1 for m in mults[1:])
            pattern_b = s % 2 == 1 and all(m == 2 for m in mults)
            claims.append(
                AuditClaim(
                    name="multiplicity_pattern",
                    status="pass" if (pattern_a or pattern_b) else "fail",
                    witness={
                        "multiplicities": list(mults),
                        "pattern": "a" if pattern_a else "b" if pattern_b else None,
                    },
                )
            )
        else:
            claims.append(
                AuditClaim(
                    name="multiplicity_pattern",
                    status="skip",
                    reason=f"rank {tr} != s-1 = {s - 1}",
                )
            )
        for name in ("zero_axis_property", "zero_axis_rank_drop", "zero_axis_not_type_a"):
            claims.append(
                AuditClaim(name=name, status="skip", reason="no negative exponents")
            )
    else:
        for name in ("multiplicity_sums_avoid_s", "multiplicity_pattern"):
            claims.append(
                AuditClaim(
                    name=name, status="skip", reason="negative exponents present"
                )
            )
        for tau in neg_axes:
            sp = sign_partition(nt, cert, tau + 1)
            n0 = len(sp.zero)
            s_inner = s - sp.n_tilde
            sub = GroupTuple(
                dim=nt.dim, elements=tuple(nt.elements[i] for i in sp.zero)
            )
            base_witness = {
                "axis": tau + 1,
                "zero_positions": _one_based(sp.zero),
                "counts": {"plus": len(sp.plus), "zero": n0, "minus": len(sp.minus)},
            }

            if 1 <= s_inner < n0:
                inner = has_property(sub, n0, s_inner)
                w = dict(base_witness, r=n0, s=s_inner)
                if not inner.holds:
                    window, sel = inner.failure_witness
                    w["failure_witness"] = {
                        "window": _one_based(sp.zero[i] for i in window),
                        "selection": _one_based(sp.zero[i] for i in sel),
                    }
                claims.append(
                    AuditClaim(
                        name="zero_axis_property",
                        status="pass" if inner.holds else "fail",
                        witness=w,
                    )
                )
            else:
                claims.append(
                    AuditClaim(
                        name="zero_axis_property",
                        status="skip",
                        witness=base_witness,
                        reason=f"selection size {s_inner} out of range for "
                        f"{n0} zero positions",
                    )
                )

            sub_rank = rank(sub)
            claims.append(
                AuditClaim(
                    name="zero_axis_rank_drop",
                    status="pass" if sub_rank == cert.rank - 1 else "fail",
                    witness=dict(
                        base_witness, rank=sub_rank, expected=cert.rank - 1
                    ),
                )
            )

            if 2 <= s_inner < n0 <= 2 * s_inner:
                inner_cls = classify(sub, s_inner)
                claims.append(
                    AuditClaim(
                        name="zero_axis_not_type_a",
                        status="fail" if inner_cls.variant == "type_a" else "pass",
                        witness=dict(base_witness, variant=inner_cls.variant),
                    )
                )
            else:
                claims.append(
                    AuditClaim(
                        name="zero_axis_not_type_a",
                        status="skip",
                        witness=base_witness,
                        reason=f"subtuple of {n0} with selection size {s_inner} "
                        "outside classifier range",
                    )
                )

    return AuditReport(
        s=s, q=q, case=case, translation=translation, claims=tuple(claims)
    )
