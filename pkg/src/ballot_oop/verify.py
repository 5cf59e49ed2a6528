"""Verification campaigns: every claim checked, one finding per claim."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from . import __version__
from . import reference_tables as REF, bijections as BJ, formulas as F, oracle as O, perm as P
from . import recurrences as R

CONFIRMED, MISMATCH, OUT_OF_DOMAIN = "confirmed", "mismatch", "out-of-domain"

BIJECTION_MAX_N = 9
REVERSAL_MAX_N = 8
DYCK_MAX_SIZE = 8
TABLE_MAX_N = 25


@dataclass
class Finding:
    claim: str
    status: str
    lhs: object
    rhs: object
    lhs_source: str
    rhs_source: str

    def to_dict(self):
        d = asdict(self)
        d["lhs"], d["rhs"] = _decimal(d["lhs"]), _decimal(d["rhs"])
        return d


def _decimal(value):
    """Counts become decimal strings (they overflow 64-bit JSON consumers)."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_decimal(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _decimal(v) for k, v in value.items()}
    return value if isinstance(value, (str, float)) else str(value)


@dataclass
class VerificationReport:
    scope: dict
    findings: list[Finding] = field(default_factory=list)
    elapsed: float = 0.0
    tool_version: str = __version__

    def add(self, claim, lhs, rhs, lhs_source, rhs_source, status=None):
        if any(f.claim == claim for f in self.findings):
            raise ValueError(f"duplicate claim id {claim!r}")
        if status is None:
            status = CONFIRMED if lhs == rhs else MISMATCH
        self.findings.append(Finding(claim, status, lhs, rhs, lhs_source, rhs_source))

    def check(self, claim, lhs_fn: Callable, rhs, lhs_source, rhs_source):
        """Like :meth:`add`, but a DomainError from ``lhs_fn`` becomes out-of-domain."""
        try:
            lhs = lhs_fn()
        except F.DomainError as exc:
            self.add(claim, str(exc), rhs, lhs_source, rhs_source, status=OUT_OF_DOMAIN)
            return
        self.add(claim, lhs, rhs, lhs_source, rhs_source)

    @property
    def ok(self) -> bool:
        return all(f.status == CONFIRMED for f in self.findings)

    def failures(self) -> list[Finding]:
        return [f for f in self.findings if f.status != CONFIRMED]

    def to_json(self) -> str:
        return json.dumps({
            "scope": self.scope,
            "findings": [f.to_dict() for f in self.findings],
            "elapsed": round(self.elapsed, 3),
            "tool_version": self.tool_version,
        }, indent=1)

    def to_text(self) -> str:
        lines = [f"ballot-oop {self.tool_version}  scope={self.scope}"]
        for f in self.findings:
            if f.status == CONFIRMED:
                continue
            lines.append(f"  {f.status.upper():13s} {f.claim}: {f.lhs} ({f.lhs_source})"
                         f" vs {f.rhs} ({f.rhs_source})")
        n_ok = len(self.findings) - len(self.failures())
        lines.append(f"{n_ok}/{len(self.findings)} claims confirmed in {self.elapsed:.2f}s")
        return "\n".join(lines)


# -- suites ---------------------------------------------------------------

def suite_equality(rep: VerificationReport, max_n: int, kw: dict):
    for n in range(1, max_n + 1):
        top = (n - 1) // 2
        for d in range(top + 2):
            rep.add(f"b(n,d)=p(n,d) n={n} d={d}",
                    O.count_ballot(n, d, **kw), O.count_oop(n, d, **kw), "oracle", "oracle")
        rep.add(f"sum b(n,d)=total n={n}",
                sum(O.count_ballot(n, d, **kw) for d in range(top + 1)),
                F.total_ballot(n), "oracle", "formula")
        rep.add(f"sum p(n,d)=total n={n}",
                sum(O.count_oop(n, d, **kw) for d in range(top + 1)),
                F.total_ballot(n), "oracle", "formula")


def suite_formulas(rep: VerificationReport, max_n: int, kw: dict):
    for n in range(1, max_n + 1):
        ballot = lambda d: O.count_ballot(n, d, **kw)  # noqa: E731
        oop = lambda d: O.count_oop(n, d, **kw)  # noqa: E731
        rep.check(f"b1 n={n}", lambda: F.b1_formula(n), ballot(1), "formula", "oracle")
        rep.check(f"p1 n={n}", lambda: F.b1_formula(n), oop(1), "formula", "oracle")
        if n >= 2:
            rep.check(f"b2 n={n}", lambda: F.b2_formula(n), ballot(2), "formula", "oracle")
            rep.check(f"p2 n={n}", lambda: F.b2_formula(n), oop(2), "formula", "oracle")
            for d in range(n):
                rep.check(f"a(n,d) n={n} d={d}", lambda: F.a_formula(n, d),
                          O.count_ascent_start(n, d, **kw), "formula", "oracle")
                rep.add(f"a+v=E n={n} d={d}",
                        O.count_ascent_start(n, d, **kw) + O.count_descent_start(n, d, **kw),
                        F.eulerian(n, d), "oracle", "recurrence")
        if n >= 4:
            rep.check(f"b3 n={n}", lambda: F.b3_formula(n), ballot(3), "formula", "oracle")
            rep.check(f"p3 n={n}", lambda: F.b3_formula(n), oop(3), "formula", "oracle")
        if n % 2:
            m = (n - 1) // 2
            rep.check(f"b_max n={n}", lambda: F.b_max_formula(n), ballot(m), "formula", "oracle")
            rep.check(f"p_max n={n}", lambda: F.b_max_formula(n), oop(m), "formula", "oracle")
            for d in range(m + 2):
                rep.check(f"c(n,d) n={n} d={d}", lambda: F.c_formula(n, d),
                          O.count_cycles_m(n, d, **kw), "formula", "oracle")
            if m >= 2:
                rep.check(f"p_second_last n={n}", lambda: F.p_second_last_formula(m),
                          oop(m - 1), "formula", "oracle")
        else:
            m = n // 2
            rep.check(f"b_2n n={n}", lambda: F.b_2n_formula(m), ballot(m - 1),
                      "formula", "oracle")
            rep.check(f"p_2n n={n}", lambda: F.b_2n_formula(m), oop(m - 1),
                      "formula", "oracle")
        rep.check(f"total n={n}", lambda: F.total_ballot(n),
                  sum(ballot(d) for d in range((n - 1) // 2 + 1)), "formula", "oracle")
        for r in F.UD_POLYNOMIALS:
            if n - 1 >= len(r):
                rep.check(f"UD n={n} r={r}", lambda: F.ud_polynomial(r, n),
                          O.count_ud(n, r, **kw), "formula", "oracle")
        if n in (2, 3):
            # the 011 polynomial is also claimed below its stated range
            rep.add(f"UD-011-small n={n}", F.UD_POLYNOMIALS["011"](n),
                    O.count_ascent_start(n, 2, **kw) - ballot(2), "formula",
                    "oracle |A(n,2)|-|B(n,2)|")
        for r, lo in F.F_CLOSED_MIN_N.items():
            if n >= max(lo, 2):
                rep.check(f"f_closed r={r} n={n}", lambda: F.f_closed(r, n),
                          O.count_f(r, n, **kw), "formula", "oracle")


def suite_recurrences(rep: VerificationReport, max_n: int, kw: dict):
    table = R.p_recurrence_table(TABLE_MAX_N, 5)
    alt = R.p_recurrence_table(TABLE_MAX_N, 5, form="normalized")
    rep.add("p-recurrence direct=normalized n<=25", alt.values == table.values, True,
            "recurrence", "recurrence")
    full = R.p_recurrence_table(TABLE_MAX_N, (TABLE_MAX_N - 1) // 2)
    for n in range(1, TABLE_MAX_N + 1):
        rep.add(f"p-recurrence row sum n={n}", sum(full.row(n)), F.total_ballot(n),
                "recurrence", "formula")
    small = R.p_recurrence_table(max_n, (max_n - 1) // 2 + 1)
    for n in range(1, max_n + 1):
        for d in range((n - 1) // 2 + 2):
            rep.add(f"p-recurrence vs oracle n={n} d={d}", small[n, d],
                    O.count_oop(n, d, **kw), "recurrence", "oracle")
    fr = R.FRecurrence(**kw)
    for r, lo in F.F_CLOSED_MIN_N.items():
        for n in range(max(2, lo), max_n + 1):
            rep.add(f"f-recurrence r={r} n={n}", fr(r, n), O.count_f(r, n, **kw),
                    "recurrence", "oracle")
    bt = R.bndk_table(max(max_n, 2))
    for n in range(1, max_n + 1):
        for d in range((n - 1) // 2 + 1):
            for k in range(1, n + 1):
                rep.add(f"bndk n={n} d={d} k={k}", bt.get(n, d, k),
                        O.count_ballot_last(n, d, k, **kw), "recurrence", "oracle")
                if d >= 1 and n >= 2 and k == 1:
                    rep.add(f"telescoping n={n} d={d}", bt.get(n, d, 1), bt.get(n, d - 1, n),
                            "recurrence", "recurrence")
                if n >= 2 and k >= 2:
                    rep.add(f"last-letter n={n} d={d} k={k}", bt.get(n, d, k),
                            bt.get(n, d, k - 1) + bt.get(n - 1, d, k - 1)
                            - bt.get(n - 1, d - 1, k - 1), "recurrence", "recurrence")
                if d == 1 and n >= 2:
                    rep.check(f"col1 n={n} k={k}", lambda: R.col1_formula(n, k),
                              bt.get(n, 1, k), "formula", "recurrence")
                if d == 2 and n >= 5:
                    rep.check(f"col2 n={n} k={k}", lambda: R.col2_formula(n, k),
                              bt.get(n, 2, k), "formula", "recurrence")
    for n in range(1, max_n):
        rep.add(f"telescoping n={n}", sum(bt.get(n, 1, k) for k in range(1, n + 1)),
                bt.get(n + 1, 1, n + 1), "recurrence", "recurrence")


def suite_bijections(rep: VerificationReport, max_n: int, kw: dict):
    top = min(max_n, BIJECTION_MAX_N)
    for n in range(1, top + 1):
        b1 = [p for p in O.enumerate_sn(n) if P.descent_count(p) == 1 and P.is_ballot(p)]
        images = [BJ.phi_d1(p) for p in b1]
        back = sum(1 for p, c in zip(b1, images) if BJ.psi_d1(c) == p)
        rep.add(f"psi_d1.phi_d1=id n={n}", back, len(b1), "bijection", "enumeration")
        rep.add(f"phi_d1 image n={n}", len(set(images)), O.count_oop(n, 1, **kw),
                "bijection", "oracle")
        p1 = [c for c in map(P.cycle_decomposition, O.enumerate_sn(n))
              if P.is_odd_order(c) and P.m_statistic(c) == 1]
        fwd = sum(1 for c in p1 if BJ.phi_d1(BJ.psi_d1(c)) == c)
        rep.add(f"phi_d1.psi_d1=id n={n}", fwd, len(p1), "bijection", "enumeration")
        if n % 2:
            m = (n - 1) // 2
            bm = [p for p in O.enumerate_sn(n) if P.descent_count(p) == m and P.is_ballot(p)]
            ok = sum(1 for p in bm if BJ.psi_max(BJ.phi_max(p)) == p)
            rep.add(f"psi_max.phi_max=id n={n}", ok, len(bm), "bijection", "enumeration")
            cm = [c for c in map(P.cycle_decomposition, O.enumerate_sn(n))
                  if len(c.cycles) == 1 and P.m_statistic(c) == m]
            ok = sum(1 for c in cm if BJ.phi_max(BJ.psi_max(c)) == c)
            rep.add(f"phi_max.psi_max=id n={n}", ok, len(cm), "bijection", "enumeration")
    for n in range(1, min(max_n, REVERSAL_MAX_N) + 1):
        bad = 0
        for p in O.enumerate_sn(n):
            q = BJ.reversal_map(p)
            want = BJ.reversal_target(n, P.descent_count(p), P.t_statistic(p))
            bad += (n, P.descent_count(q), P.t_statistic(q)) != want
        rep.add(f"reversal transports (d,t) n={n}", bad, 0, "bijection", "enumeration")
    for n in range(1, min(max_n, REVERSAL_MAX_N) + 1):
        for d in range(n):
            for t in range(-n, 1):
                rep.add(f"reversal s(n,d,t) n={n} d={d} t={t}",
                        O.count_by_t(n, d, t, **kw),
                        O.count_by_t(*BJ.reversal_target(n, d, t), **kw), "oracle", "oracle")
    for half in range(1, min(max_n, DYCK_MAX_SIZE) // 2 + 1):
        for f in BJ.dyck_count_check(half):
            rep.add(f"dyck size={2 * half} {f.claim}", f.lhs, f.rhs, "enumeration", "formula",
                    status=CONFIRMED if f.confirmed else MISMATCH)


def suite_reference_tables(rep: VerificationReport, max_n: int, kw: dict):
    table = R.p_recurrence_table(TABLE_MAX_N, 5)
    for n in range(1, TABLE_MAX_N + 1):
        rep.add(f"table b(n,d) row n={n} (recurrence)", table.row(n), REF.BND[n],
                "recurrence", "reference-table")
    for n in range(1, min(max_n, 10) + 1):
        rep.add(f"table b(n,d) row n={n} (oracle)",
                [O.count_ballot(n, d, **kw) for d in range(6)], REF.BND[n],
                "oracle", "reference-table")
    bt = R.bndk_table(7)
    for n in range(1, min(max_n, 7) + 1):
        tops = range((n - 1) // 2 + 1)
        rec = [[bt.get(n, d, k) for d in tops] for k in range(1, n + 1)]
        orc = [[O.count_ballot_last(n, d, k, **kw) for d in tops] for k in range(1, n + 1)]
        rep.add(f"table b(n,k,d) n={n} (recurrence)", rec, REF.BNDK[n],
                "recurrence", "reference-table")
        rep.add(f"table b(n,k,d) n={n} (oracle)", orc, REF.BNDK[n],
                "oracle", "reference-table")
        rep.add(f"table row sums n={n}", [bt.row_sum(n, k) for k in range(1, n + 1)],
                REF.BNDK_ROW_SUMS[n], "recurrence", "reference-table")
        rep.add(f"table col sums n={n}",
                ([bt.col_sum(n, d) for d in tops], bt.total(n)),
                REF.BNDK_COL_SUMS[n], "recurrence", "reference-table")


def suite_identities(rep: VerificationReport, max_n: int, kw: dict):
    for n in range(0, 31):
        rep.add(f"E1 n={n}", F.eulerian(n, 1), F.eulerian_e1(n) if n >= 1 else 0,
                "recurrence", "formula")
        rep.add(f"E2 n={n}", F.eulerian(n, 2), F.eulerian_e2(n) if n >= 1 else 0,
                "recurrence", "formula")
        rep.add(f"E3 n={n}", F.eulerian(n, 3), F.eulerian_e3(n) if n >= 1 else 0,
                "recurrence", "formula")
    for n in range(0, 16):
        rep.add(f"sum E(n,d)=n! n={n}", sum(F.eulerian(n, d) for d in range(max(n, 1))),
                factorial(n), "recurrence", "formula")
    for n in range(1, min(max_n, 10) + 1):
        for d in range(n):
            rep.add(f"E(n,d) vs oracle n={n} d={d}", F.eulerian(n, d),
                    O.count_descents(n, d, **kw), "recurrence", "oracle")
    for n in range(13):
        for r in range(n + 1):
            for s in range(n - r + 1):
                for c in (1, 2, 3):
                    for d in (1, 2, 3):
                        for par in ("all", "even"):
                            rep.add(f"binomial-sum n={n} r={r} s={s} c={c} d={d} {par}",
                                    R.binomial_sum_closed(n, r, s, c, d, par),
                                    R.binomial_sum_direct(n, r, s, c, d, par),
                                    "formula", "direct-sum")
    rep.add("b_2n(3)=b2(6)", F.b_2n_formula(3), F.b2_formula(6), "formula", "formula")
    rep.add("b_2n(4)=b3(8)", F.b_2n_formula(4), F.b3_formula(8), "formula", "formula")
    for m in range(0, 12):
        rep.add(f"EC({m})=b_max({2 * m + 1})", F.eulerian_catalan(m),
                F.b_max_formula(2 * m + 1), "formula", "formula")

SUITES = {
    "conjecture": suite_equality,
    "formulas": suite_formulas,
    "recurrences": suite_recurrences,
    "bijections": suite_bijections,
    "appendix-tables": suite_reference_tables,
    "identities": suite_identities,
}


def run(max_n: int, suites=None, jobs: int | None = 1, limit: int | None = None
        ) -> VerificationReport:
    suites = list(SUITES) if suites is None else list(suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    O.check_n(max_n, limit)
    rep = VerificationReport(scope={"max_n": max_n, "suites": suites})
    kw = {"jobs": jobs, "limit": limit}
    start = time.perf_counter()
    for name in suites:
        SUITES[name](rep, max_n, kw)
    rep.elapsed = time.perf_counter() - start
    return rep
