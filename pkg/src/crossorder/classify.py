"""Decision predicates for A_f and the report that collects them.

Every equivalence is evaluated along independent routes and the routes
are required to agree; a disagreement raises ``Contradiction``.  The
branch is "principal" exactly when the value group is discrete, since a
discrete group's minimal positive element generates J(V).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Optional

from . import order
from .cocycle import subgroup_H, valuation_table as valuation_table_of
from .errors import Contradiction
from .profile import ValuationProfile, ValuationTable, coarsen_profile, decomposition_group, restrict
from .valuegroup import in_m_squared

PRINCIPAL = "principal"
NON_PRINCIPAL = "non-principal"


def branch(profile: ValuationProfile) -> str:
    return PRINCIPAL if profile.gamma.is_discrete() else NON_PRINCIPAL


def unit_at(table: ValuationTable, M: int, s: int, t: int) -> bool:
    return table.w[M][s][t].is_zero()


# ---------------------------------------------------------------- semihereditary

def _full_m2_witness(table, profile):
    for M, s, t in product(range(profile.r), profile.group.elements(), profile.group.elements()):
        if in_m_squared(table.w[M][s][t]):
            return (s, t, M)
    return None


def _diagonal_m2_witness(table, profile):
    G = profile.group
    for M, s in product(range(profile.r), G.elements()):
        if in_m_squared(table.w[M][s][G.inv(s)]):
            return (s, G.inv(s), M)
    return None


def is_semihereditary(table: ValuationTable, profile: ValuationProfile) -> tuple[bool, Optional[tuple]]:
    """f(s,t) not in M^2 for all s, t, M; checked against the f(s, s^-1) form.

    Returns (verdict, witness (s, t, M) when false).
    """
    full = _full_m2_witness(table, profile)
    diag = _diagonal_m2_witness(table, profile)
    if (full is None) != (diag is None):
        raise Contradiction("semihereditary", "full and diagonal M^2 criteria disagree", full or diag)
    return full is None, full


# ---------------------------------------------------------------- primary

def is_primary(table: ValuationTable, profile: ValuationProfile) -> tuple[bool, Optional[tuple]]:
    """Every right coset D_M g contains some g' with f(g', g'^-1) a unit at M.

    Returns (verdict, witness (M, coset) when false).
    """
    G = profile.group
    for M in range(profile.r):
        D = decomposition_group(profile, M)
        for coset in G.right_cosets(D):
            if not any(unit_at(table, M, g, G.inv(g)) for g in coset):
                return False, (M, coset)
    return True, None


def primary_bruteforce(table: ValuationTable, profile: ValuationProfile) -> bool:
    """Same predicate, searching all systems of right coset representatives."""
    G = profile.group
    for M in range(profile.r):
        cosets = G.right_cosets(decomposition_group(profile, M))
        if not any(all(unit_at(table, M, g, G.inv(g)) for g in reps) for reps in product(*cosets)):
            return False
    return True


# ---------------------------------------------------------------- valuation ring

def _corollary_formula(table, profile) -> bool:
    G = profile.group
    for M in range(profile.r):
        if any(in_m_squared(table.w[M][t][G.inv(t)]) for t in G.elements()):
            return False
        cosets = G.right_cosets(decomposition_group(profile, M))
        if not any(all(unit_at(table, M, g, G.inv(g)) for g in reps) for reps in product(*cosets)):
            return False
    return True


def _primary_local_route(table, profile) -> bool:
    G = profile.group
    return any(
        all(not in_m_squared(table.w[M][t][G.inv(t)]) for t in decomposition_group(profile, M))
        for M in range(profile.r)
    )


def is_valuation_ring(table: ValuationTable, profile: ValuationProfile) -> bool:
    """Dubrovin valuation ring (equivalently maximal, equivalently Bezout)."""
    formula = _corollary_formula(table, profile)
    sh, _ = is_semihereditary(table, profile)
    pr, _ = is_primary(table, profile)
    if formula != (sh and pr):
        raise Contradiction("valuation_ring", f"coset formula gives {formula}, semihereditary and primary gives {sh and pr}")
    if pr:
        local = _primary_local_route(table, profile)
        if local != formula:
            raise Contradiction("valuation_ring", f"decomposition-group route gives {local}, coset formula gives {formula}")
    return formula


# ---------------------------------------------------------------- Azumaya

def local_H(table: ValuationTable, profile: ValuationProfile, M: int) -> list[int]:
    """H_M = {s in D_M : f(s, s^-1) is a unit at M}."""
    G = profile.group
    return [s for s in decomposition_group(profile, M) if unit_at(table, M, s, G.inv(s))]


def is_azumaya(table: ValuationTable, profile: ValuationProfile) -> bool:
    """H = G, cross-checked against the non-principal and primary characterizations."""
    H = subgroup_H(table, profile.group)
    verdict = len(H) == profile.n
    if branch(profile) == NON_PRINCIPAL:
        sh, w = is_semihereditary(table, profile)
        if sh != verdict:
            raise Contradiction("azumaya", f"non-principal branch: semihereditary {sh} but H = G is {verdict}", w or ())
    pr, _ = is_primary(table, profile)
    if pr:
        full = [len(local_H(table, profile, M)) == len(decomposition_group(profile, M)) for M in range(profile.r)]
        if any(full) != verdict:
            raise Contradiction("azumaya", f"primary: H_M = D_M for some M is {any(full)} but H = G is {verdict}")
        if verdict and not all(full):
            raise Contradiction("azumaya", "Azumaya but H_M != D_M for some M", (full.index(False),))
    return verdict


def overring_azumaya_check(table: ValuationTable, profile: ValuationProfile, keep: int) -> Optional[bool]:
    """W A_f is Azumaya over the overring W whenever A_f is semihereditary.

    Returns None when A_f is not semihereditary (nothing is asserted).
    """
    sh, _ = is_semihereditary(table, profile)
    cp, ct = coarsen_profile(profile, table, keep)
    if not sh:
        return None
    if not is_azumaya(ct, cp):
        H = subgroup_H(ct, cp.group)
        raise Contradiction("overring", f"semihereditary at V but H = {H} != G over W", tuple(H))
    return True


# ---------------------------------------------------------------- restrictions

def restriction_check(table: ValuationTable, profile: ValuationProfile) -> Optional[bool]:
    """Restrictions of a semihereditary A_f stay semihereditary; at D_M they are valuation rings.

    Every subgroup is paired with every ideal (each orbit choice corresponds
    to a valuation ring U of the fixed field).  Returns None when A_f is not
    semihereditary.
    """
    sh, _ = is_semihereditary(table, profile)
    if not sh:
        return None
    G = profile.group
    for sub in G.subgroups():
        for M0 in range(profile.r):
            rp, rt = restrict(profile, table, sub, M0)
            ok, w = is_semihereditary(rt, rp)
            if not ok:
                raise Contradiction("restriction", f"restriction to {sub} at M{M0} is not semihereditary", w)
    for M in range(profile.r):
        rp, rt = restrict(profile, table, decomposition_group(profile, M), M)
        if not is_valuation_ring(rt, rp):
            raise Contradiction("restriction", f"restriction to D_M{M} is not a valuation ring", (M,))
    return True


# ---------------------------------------------------------------- report

@dataclass
class ClassificationReport:
    mode: str
    branch: str
    n: int
    r: int
    semihereditary: bool
    primary: bool
    valuation_ring: bool
    azumaya: bool
    H: list[int]
    decomposition_groups: list[list[int]]
    local_H: list[list[int]]
    witnesses: dict = field(default_factory=dict)
    restriction_check: Optional[bool] = None
    radical_bounds: Optional[list] = None
    residue: Optional[dict] = None

    @property
    def extremal(self) -> bool:
        return self.semihereditary

    @property
    def maximal(self) -> bool:
        return self.valuation_ring

    @property
    def bezout(self) -> bool:
        return self.valuation_ring

    def to_json(self) -> dict:
        out = asdict(self)
        out["extremal"] = self.extremal
        out["maximal"] = self.maximal
        out["bezout"] = self.bezout
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationReport":
        data = dict(data)
        for alias, source in (("extremal", "semihereditary"), ("maximal", "valuation_ring"), ("bezout", "valuation_ring")):
            if alias in data and data.pop(alias) != data[source]:
                raise ValueError(f"alias {alias} disagrees with {source}")
        return cls(**data)

    def to_text(self) -> str:
        rows = [
            ("mode", self.mode),
            ("branch", f"{self.branch} J(V)"),
            ("|G|, r", f"{self.n}, {self.r}"),
            ("semihereditary", self.semihereditary),
            ("extremal", self.extremal),
            ("primary", self.primary),
            ("valuation_ring", self.valuation_ring),
            ("maximal", self.maximal),
            ("bezout", self.bezout),
            ("azumaya", self.azumaya),
            ("H", self.H),
        ]
        for M, (D, HM) in enumerate(zip(self.decomposition_groups, self.local_H)):
            rows.append((f"D_M{M} / H_M{M}", f"{D} / {HM}"))
        if self.restriction_check is not None:
            rows.append(("restrictions ok", self.restriction_check))
        if self.radical_bounds is not None:
            rows.append(("J(A_f) bounds", self.radical_bounds))
        if self.residue is not None:
            for k in sorted(self.residue):
                rows.append((f"residue.{k}", self.residue[k]))
        for k in sorted(self.witnesses):
            rows.append((f"witness.{k}", self.witnesses[k]))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {_fmt(v)}" for k, v in rows)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def classify(table: ValuationTable, profile: ValuationProfile, cocycle=None, splitting=None) -> ClassificationReport:
    """Run every predicate and assemble the report.

    With a cocycle and splitting (concrete mode) the residue-algebra
    oracle is evaluated and must agree with the H = G verdict.
    """
    sh, sh_w = is_semihereditary(table, profile)
    pr, pr_w = is_primary(table, profile)
    vr = is_valuation_ring(table, profile)
    az = is_azumaya(table, profile)
    if pr != primary_bruteforce(table, profile):
        raise Contradiction("primary", "coset existential and representative enumeration disagree")
    H = subgroup_H(table, profile.group)
    G = profile.group
    witnesses = {}
    if not sh:
        witnesses["semihereditary"] = list(sh_w)
    if not pr:
        witnesses["primary"] = [pr_w[0], list(pr_w[1])]
    if not vr:
        witnesses["valuation_ring"] = witnesses.get("semihereditary") or witnesses.get("primary")
    if not az:
        bad = next(s for s in G.elements() if s not in H)
        M = next(M for M in range(profile.r) if not unit_at(table, M, bad, G.inv(bad)))
        witnesses["azumaya"] = [bad, G.inv(bad), M]
    report = ClassificationReport(
        mode=profile.mode,
        branch=branch(profile),
        n=profile.n,
        r=profile.r,
        semihereditary=sh,
        primary=pr,
        valuation_ring=vr,
        azumaya=az,
        H=H,
        decomposition_groups=[decomposition_group(profile, M) for M in range(profile.r)],
        local_H=[local_H(table, profile, M) for M in range(profile.r)],
        witnesses=witnesses,
        restriction_check=restriction_check(table, profile),
    )
    if profile.gamma.is_discrete():
        J = order.jacobson_radical(table, profile)
        ok, w = order.verify_radical_is_ideal(J, table, profile)
        if not ok:
            raise Contradiction("radical", "J(A_f) description is not a two-sided ideal", w)
        report.radical_bounds = J.to_json()
    if cocycle is not None and splitting is not None:
        report.residue = residue_crosscheck(cocycle, splitting, profile, az, pr)
    check_report(report)
    return report


def residue_crosscheck(cocycle, splitting, profile, azumaya: bool, primary: bool) -> dict:
    """Azumaya via central simplicity of A_f/pA_f, plus dimension checks.

    J(A_f)/pA_f is the radical of A_f/pA_f, so its dimension must match the
    I_s description: I_s/pS has dimension n - f*#{M : bound at M is positive}.
    When A_f is primary, dim A/J must also be r^2 times the local one.
    """
    summary = order.summarize(order.residue_algebra(cocycle, splitting))
    if summary.central_simple != azumaya:
        raise Contradiction("azumaya", f"residue algebra central simple is {summary.central_simple}, H = G is {azumaya}")
    J = order.jacobson_radical(valuation_table_of(cocycle, splitting), profile)
    n, f = cocycle.field.degree, splitting.f
    predicted = sum(n - f * sum(1 for b in row if b.is_positive()) for row in J.bounds)
    if predicted != summary.radical_dim:
        raise Contradiction("radical", f"I_s bounds predict radical dimension {predicted}, residue algebra has {summary.radical_dim}")
    out = {"azumaya_oracle": summary.central_simple, **{k: v for k, v in summary.to_json().items() if k != "central_simple"}}
    if primary:
        local = order.summarize(order.local_residue_algebra(cocycle, splitting, profile, 0))
        expected = profile.r ** 2 * local.semisimple_dim
        if summary.semisimple_dim != expected:
            raise Contradiction("dimension", f"dim A/J = {summary.semisimple_dim} but r^2 dim A_M/J = {expected}")
        out["semisimple_dim"] = summary.semisimple_dim
        out["local_semisimple_dim"] = local.semisimple_dim
    return out


def check_report(rep: ClassificationReport) -> None:
    """The implication lattice between the predicates."""
    if rep.azumaya and not rep.semihereditary:
        raise Contradiction("lattice", "Azumaya but not semihereditary")
    if rep.azumaya and not rep.primary:
        raise Contradiction("lattice", "Azumaya but not primary")
    if rep.valuation_ring != (rep.semihereditary and rep.primary):
        raise Contradiction("lattice", "valuation ring is not semihereditary-and-primary")
    if rep.branch == NON_PRINCIPAL and rep.semihereditary != rep.azumaya:
        raise Contradiction("lattice", "non-principal branch: semihereditary != Azumaya")
