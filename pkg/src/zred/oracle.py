"""Mechanical verification of the package's claims at desk scale.

Every suite rechecks a theorem-shaped statement by brute enumeration,
independent re-derivation, or randomized identity testing, and returns a
VerificationReport.  Suites never trust the quantity under test: cycles
are re-walked from independently enumerated forms, expansions can be
cross-checked against rational interval refinement, calibers come from
orbit walks rather than anything cached in the maps module.

Suites shard over their discriminant range (or sample chunks) and can run
those shards in parallel; reports merge in unit order, so failures list
the smallest discriminant first and output is deterministic.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, NamedTuple

from .contfrac import (
    QuadraticSurd,
    continuant,
    continuant_matrix,
    denjoy_surd,
    is_purely_periodic_neg,
    is_purely_periodic_reg,
    neg_cf_period,
    neg_to_reg_stream,
    reg_cf_period,
    reg_cf_surd,
    reg_to_denjoy,
    surd,
)
from .forms import Form, UnimodularMatrix, act
from .maps import beta, denjoy_period, gamma, mu, sigma, tau
from .pell import fundamental_solution
from .reduction import (
    enumerate_g_reduced,
    enumerate_z_reduced,
    orbit_to_cycle,
    r_g,
    r_z,
    reducing_number,
)
from .strings import (
    eta_minus,
    eta_plus,
    is_primitive,
    knead,
    least_rotation,
    pinch_both,
    rotate_bin,
    sb_inv,
    t_g,
    t_z,
)

MAX_RECORDED_FAILURES = 50


@dataclass
class VerificationReport:
    theorem_id: str
    bound: int
    cases: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def merge(self, cases: int, failures: list) -> None:
        self.cases += cases
        self.failure_count += len(failures)
        room = MAX_RECORDED_FAILURES - len(self.failures)
        if room > 0:
            self.failures.extend(failures[:room])

    def summary(self) -> str:
        head = (f"{self.theorem_id}: {'PASS' if self.passed else 'FAIL'} "
                f"({self.cases} cases, bound {self.bound}")
        if self.passed:
            return head + ")"
        return head + f", {self.failure_count} failures; first: {self.failures[0]})"

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "bound": self.bound,
            "cases": self.cases,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": list(self.failures),
        }


def discriminants(delta_max: int) -> list:
    """Nonsquare values 0 or 1 mod 4 up to delta_max; the ones with forms."""
    return [d for d in range(5, delta_max + 1)
            if d % 4 in (0, 1) and math.isqrt(d) ** 2 != d]


def _primitive_root(s):
    n = len(s)
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return s[:d]
    raise AssertionError("unreachable")


# ---------------------------------------------------------------- suites

def _delta_units(tid):
    return lambda delta_max: [(tid, d) for d in discriminants(delta_max)]


def _rotation_work(delta):
    cases, fails = 0, []
    zf = enumerate_z_reduced(delta)
    sig = {f: sigma(f) for f in zf}
    for f in zf:
        cases += 1
        got, want = rotate_bin(sig[f]), sig[r_z(f)]
        if got != want:
            fails.append(f"delta={delta} f={f}: rotate_bin(sigma)={got} "
                         f"but sigma(r_z)={want}")
    return cases, fails


def _xi_plus_work(delta):
    cases, fails = 0, []
    for f in enumerate_g_reduced(delta):
        if f.a < 0:
            continue
        cases += 1
        got, want = beta(mu(f)), eta_plus(gamma(f))
        if got != want:
            fails.append(f"delta={delta} f={f}: beta(mu)={got} eta+(gamma)={want}")
    return cases, fails


def _xi_minus_work(delta):
    cases, fails = 0, []
    for f in enumerate_g_reduced(delta):
        if f.a > 0:
            continue
        cases += 1
        got, want = beta(mu(f)), eta_minus(gamma(f.rho()))
        if got != want:
            fails.append(f"delta={delta} f={f}: beta(mu)={got} eta-(gamma rho)={want}")
    return cases, fails


def _bead_discs(delta_max):
    out = set()
    k = 1
    while k * k + 4 <= delta_max:
        out.add(k * k + 4)
        k += 1
    k = 3
    while k * k - 4 <= delta_max:
        out.add(k * k - 4)
        k += 1
    return sorted(out)


def _beads_units(delta_max):
    units = [("formfrombeads", ("form", d)) for d in _bead_discs(delta_max)]
    if delta_max >= 5:
        units.extend(("formfrombeads", ("beads", l, q1))
                     for l in range(2, 9) for q1 in range(1, 7))
    return units


def _beads_work(payload):
    cases, fails = 0, []
    if payload[0] == "form":
        d = payload[1]
        for f in enumerate_z_reduced(d):
            cases += 1
            g = tau(beta(f))
            if g != f:
                fails.append(f"delta={d} f={f}: tau(beta(f))={g}")
    else:
        _, l, q1 = payload
        for rest in product(range(1, 7), repeat=l - 1):
            s = (q1,) + rest
            cases += 1
            got = beta(tau(s))
            if got != s:
                fails.append(f"s={s}: beta(tau(s))={got} "
                             f"(delta={tau(s).discriminant()})")
    return cases, fails


def _reduction_work(delta):
    cases, fails = 0, []

    def check(tag, f, got, want):
        nonlocal cases
        cases += 1
        if got != want:
            fails.append(f"delta={delta} f={f} [{tag}]: got {got} want {want}")

    for f in enumerate_g_reduced(delta):
        if f.a < 0:
            continue
        s = gamma(f)
        f1 = r_g(f)
        f2 = r_g(f1)
        mf = mu(f)
        check("gamma_rho_rg", f, gamma(f1.rho()), t_g(s))
        check("gamma_rg2", f, gamma(f2), t_g(t_g(s)))
        check("mu_rg", f, mu(f1), r_z(mf))
        h = mf
        for _ in range(s[1 % len(s)]):
            h = r_z(h)
        check("mu_rg2", f, mu(f2), h)
    for g in enumerate_z_reduced(delta):
        check("beta_rz", g, beta(r_z(g)), t_z(beta(g)))
    return cases, fails


def _firstcoeff_work(delta):
    cases, fails = 0, []
    for f in enumerate_g_reduced(delta):
        if f.a < 0:
            continue
        cases += 1
        m = UnimodularMatrix(gamma(f)[0], 1, -1, 0)
        got, want = act(f, m), r_g(f)
        if got != want:
            fails.append(f"delta={delta} f={f}: f|M(q1)={got} r_g={want}")
    return cases, fails


def _reversal_work(delta):
    cases, fails = 0, []
    for f in enumerate_g_reduced(delta):
        if f.a > 0:
            continue
        cases += 1
        got = gamma(f.reverse())
        want = tuple(reversed(gamma(f.rho())))
        if got != want:
            fails.append(f"delta={delta} f={f}: gamma(reverse)={got} "
                         f"reversed(gamma(rho))={want}")
    for g in enumerate_z_reduced(delta):
        cases += 1
        got, want = beta(g.reverse()), tuple(reversed(beta(g)))
        if got != want:
            fails.append(f"delta={delta} g={g}: beta(reverse)={got} "
                         f"reversed(beta)={want}")
    return cases, fails


_SWAP = UnimodularMatrix(-1, 1, -1, 0)


def _mu_fiber_work(delta):
    cases, fails = 0, []
    plus, minus = {}, {}
    for f in enumerate_g_reduced(delta):
        (plus if f.a > 0 else minus)[mu(f)] = f
    for h, g in minus.items():
        f0 = act(g, _SWAP)
        cases += 1
        if f0.is_g_reduced() and f0.a > 0:
            if mu(f0) != h or r_g(g) != f0 or plus.get(h) != f0:
                fails.append(f"delta={delta} g={g}: fiber partner {f0} "
                             f"mismatch (mu={mu(f0) if f0.is_g_reduced() else None})")
        else:
            if h in plus:
                fails.append(f"delta={delta} g={g}: mu collides with {plus[h]} "
                             f"but g(-x+y,-x)={f0} is not reduced")
    # image characterization: h has a G+/G- preimage under mu exactly when
    # its bead string starts/ends with 1
    for h in enumerate_z_reduced(delta):
        b = beta(h)
        plus_pre = Form(h.a, h.b - 2 * h.a, h.a - h.b + h.c)
        minus_pre = Form(h.a - h.b + h.c, h.b - 2 * h.c, h.c)
        cases += 2
        if plus_pre.is_g_reduced() != (b[0] == 1):
            fails.append(f"delta={delta} h={h}: mu(G+) membership "
                         f"{plus_pre.is_g_reduced()} vs beads {b}")
        if minus_pre.is_g_reduced() != (b[-1] == 1):
            fails.append(f"delta={delta} h={h}: mu(G-) membership "
                         f"{minus_pre.is_g_reduced()} vs beads {b}")
    return cases, fails


def _primitivity_work(delta):
    # sigma is injective on the primitive forms of one discriminant and
    # lands in primitive strings; scaled forms may reuse a primitive
    # string from a smaller discriminant, so nothing is claimed for them.
    # Membership in mu(G+) is read off the first bead.
    cases, fails = 0, []
    seen = {}
    for f in enumerate_z_reduced(delta):
        cases += 1
        if f.is_primitive():
            s = sigma(f)
            if not is_primitive(s):
                fails.append(f"delta={delta} f={f}: sigma={s} is a repetition")
            elif s in seen:
                fails.append(f"delta={delta} f={f}: sigma={s} collides "
                             f"with {seen[s]}")
            else:
                seen[s] = f
        pre = Form(f.a, f.b - 2 * f.a, f.a - f.b + f.c)
        in_image = pre.is_g_reduced() and pre.a > 0
        if in_image != (beta(f)[0] == 1):
            fails.append(f"delta={delta} f={f}: beta={beta(f)} disagrees "
                         f"with mu(G+) membership")
    return cases, fails


def _weightparity_work(delta):
    cases, fails = 0, []
    eps = fundamental_solution(delta).epsilon
    for f in enumerate_z_reduced(delta):
        cases += 1
        w = sigma(f).count("1")
        if (w % 2 == 1) != (eps == -4):
            fails.append(f"delta={delta} f={f}: weight {w} vs epsilon {eps:+d}")
    return cases, fails


def _zcaliber_units(delta_max):
    # desk-scale necklace sweep; the bound only gates whether it runs
    return [("zcaliber", l) for l in range(1, 10)] if delta_max >= 1 else []


def _zcaliber_work(length):
    cases, fails = 0, []
    for bits in product("01", repeat=length):
        s = "".join(bits)
        if "1" not in s or least_rotation(s) != s or not is_primitive(s):
            continue
        cases += 1
        classes = {}
        for r in range(length):
            rot = s[r:] + s[:r]
            orbit = orbit_to_cycle(tau(sb_inv(rot))).cycle
            classes[min(orbit)] = len(orbit)
        want_classes = 1 if s.count("1") % 2 == 1 else 2
        if len(classes) != want_classes or sum(classes.values()) != length:
            fails.append(f"necklace {s}: classes {sorted(classes.items())} "
                         f"(want {want_classes} classes with calibers summing "
                         f"to {length})")
    return cases, fails


def _denjoy_work(delta):
    cases, fails = 0, []
    for f in enumerate_z_reduced(delta):
        p = denjoy_period(f)
        x = surd(f.b - 2 * f.a, 2 * f.a, delta)
        cases += 1
        got = denjoy_surd(x, 3 * len(p))
        if got != p * 3:
            fails.append(f"delta={delta} f={f}: expansion {got} does not "
                         f"repeat period {p}")
        cases += 1
        if not is_primitive(p):
            fails.append(f"delta={delta} f={f}: period {p} is not minimal "
                         f"(true period {_primitive_root(p)})")
    return cases, fails


def _lgz_units(delta_max):
    units = [("lgz", ("forms", d)) for d in discriminants(delta_max)]
    units.append(("lgz", ("sample", delta_max)))
    return units


def _lgz_forms(delta):
    cases, fails = 0, []
    for f in enumerate_z_reduced(delta):
        x = surd(f.b, 2 * f.a, delta)
        cases += 1
        if not (x.cmp(1) > 0 and x.conj_cmp(0) > 0 and x.conj_cmp(1) < 0
                and is_purely_periodic_neg(x)):
            fails.append(f"delta={delta} f={f}: {x} fails the reduced "
                         f"negative characterization")
        cases += 1
        cyc = orbit_to_cycle(f).cycle
        want = tuple(reducing_number(g) for g in cyc)
        if neg_cf_period(x) != ((), want):
            fails.append(f"delta={delta} f={f}: negative period "
                         f"{neg_cf_period(x)} vs reducing numbers {want}")
    for f in enumerate_g_reduced(delta):
        if f.a < 0:
            continue
        x = surd(f.b, 2 * f.a, delta)
        cases += 1
        if not (x.cmp(1) > 0 and x.conj_cmp(-1) > 0 and x.conj_cmp(0) < 0
                and is_purely_periodic_reg(x)):
            fails.append(f"delta={delta} f={f}: {x} fails the reduced "
                         f"regular characterization")
        if f.is_primitive():
            cases += 1
            if reg_cf_period(x) != ((), gamma(f)):
                fails.append(f"delta={delta} f={f}: regular period "
                             f"{reg_cf_period(x)} vs gamma {gamma(f)}")
    return cases, fails


def _lgz_sample(delta_max):
    cases, fails = 0, []
    rng = random.Random(1729)
    hi = max(5, delta_max)
    for _ in range(500):
        d = rng.randint(2, hi)
        if math.isqrt(d) ** 2 == d:
            continue
        s = math.isqrt(d)
        p = rng.randint(-3 * s - 5, 3 * s + 5)
        q = rng.choice((-1, 1)) * rng.randint(1, 2 * s + 3)
        x = surd(p, q, d)
        reg_char = x.cmp(1) > 0 and x.conj_cmp(-1) > 0 and x.conj_cmp(0) < 0
        neg_char = x.cmp(1) > 0 and x.conj_cmp(0) > 0 and x.conj_cmp(1) < 0
        cases += 2
        if is_purely_periodic_reg(x) != reg_char:
            fails.append(f"x={x}: purely periodic regular "
                         f"{is_purely_periodic_reg(x)} but reduced is {reg_char}")
        if is_purely_periodic_neg(x) != neg_char:
            fails.append(f"x={x}: purely periodic negative "
                         f"{is_purely_periodic_neg(x)} but reduced is {neg_char}")
    # cross-engine: the two conversion algorithms against the direct
    # expanders, on random reduced surds of either kind, 50 terms each
    pool = discriminants(max(hi, 120))
    for _ in range(50):
        d = rng.choice(pool)
        f = rng.choice(enumerate_z_reduced(d))
        x = surd(f.b, 2 * f.a, d)
        pre, per = neg_cf_period(x)
        cases += 1
        if pre:
            fails.append(f"x={x}: negative expansion not purely periodic")
        elif neg_to_reg_stream(per, 50) != reg_cf_surd(x, 50):
            fails.append(f"x={x}: negative-to-regular stream diverges "
                         f"from the direct expansion")
        g = rng.choice([h for h in enumerate_g_reduced(d) if h.a > 0])
        y = surd(g.b, 2 * g.a, d)
        bits = reg_to_denjoy(reg_cf_surd(y, 50))
        cases += 1
        if bits[:50] != denjoy_surd(y, 50):
            fails.append(f"y={y}: regular-to-binary rewrite diverges "
                         f"from the direct expansion")
    return cases, fails


def _lgz_work(payload):
    if payload[0] == "forms":
        return _lgz_forms(payload[1])
    return _lgz_sample(payload[1])


def _continuant_work(n):
    cases, fails = 0, []
    rng = random.Random(271828)

    def check(tag, s, got, want):
        nonlocal cases
        cases += 1
        if got != want:
            fails.append(f"s={s} [{tag}]: got {got} want {want}")

    fixed = [(1,), (2,), (9,), (1, 1), (2, 1), (1, 2), (1, 1, 1), (3, 1, 2)]
    for i in range(int(n)):
        if i < len(fixed):
            s = fixed[i]
        else:
            s = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 12)))
        l = len(s)
        k = continuant(s)
        left, right = continuant(s[:-1]), continuant(s[1:])
        inner = continuant(s[1:-1]) if l >= 2 else 0
        sign = (-1) ** l
        check("symmetry", s, k, continuant(s[::-1]))
        check("matrix", s, continuant_matrix(s), ((k, left), (right, inner)))
        check("det", s, k * inner - left * right, sign)
        x = rng.randint(0, 5)
        check("end_shift_last", s, continuant(s[:-1] + (s[-1] + x,)), k + x * left)
        check("end_shift_first", s, continuant((s[0] + x,) + s[1:]), k + x * right)
        check("ones_last", s, continuant(s + (1,)),
              continuant(s[:-1] + (s[-1] + 1,)))
        check("ones_first", s, continuant((1,) + s),
              continuant((s[0] + 1,) + s[1:]))
        if l >= 2:
            low_both = (s[0] - 1,) + s[1:-1] + (s[-1] - 1,)
            low_first = (s[0] - 1,) + s[1:]
            low_last = s[:-1] + (s[-1] - 1,)
            check("det_lowered", s,
                  k * continuant(low_both)
                  - continuant(low_first) * continuant(low_last), sign)
        check("zero_prepend", s, continuant((0,) + s), right)
        check("zero_append", s, continuant(s + (0,)), left)
    check("zero_single", (0,), continuant((0,)), 0)
    check("empty", (), continuant(()), 1)
    return cases, fails


def _tz_knead_work(n):
    cases, fails = 0, []
    rng = random.Random(31415)
    samples = []
    for l in range(2, 7):
        samples.extend(product((1, 2, 3), repeat=l))
    samples.extend(tuple(rng.randint(1, 9) for _ in range(rng.randint(2, 12)))
                   for _ in range(int(n)))
    for s in samples:
        cases += 1
        got, want = pinch_both(knead(pinch_both(s))), t_z(s)
        if got != want:
            fails.append(f"s={s}: pinch.knead.pinch={got} t_z={want}")
        cases += 1
        if sum(t_z(s)) != sum(s):
            fails.append(f"s={s}: t_z changed the bead count")
    return cases, fails


class _Suite(NamedTuple):
    units: Callable
    work: Callable


_SUITES = {
    "rotation": _Suite(_delta_units("rotation"), _rotation_work),
    "xi_diagram_plus": _Suite(_delta_units("xi_diagram_plus"), _xi_plus_work),
    "xi_diagram_minus": _Suite(_delta_units("xi_diagram_minus"), _xi_minus_work),
    "formfrombeads": _Suite(_beads_units, _beads_work),
    "reductionrelation": _Suite(_delta_units("reductionrelation"), _reduction_work),
    "firstcoefficient": _Suite(_delta_units("firstcoefficient"), _firstcoeff_work),
    "reversal": _Suite(_delta_units("reversal"), _reversal_work),
    "mu_fiber": _Suite(_delta_units("mu_fiber"), _mu_fiber_work),
    "primitivity": _Suite(_delta_units("primitivity"), _primitivity_work),
    "weightparity": _Suite(_delta_units("weightparity"), _weightparity_work),
    "zcaliber": _Suite(_zcaliber_units, _zcaliber_work),
    "denjoy": _Suite(_delta_units("denjoy"), _denjoy_work),
    "lgz": _Suite(_lgz_units, _lgz_work),
    "continuant_identities": _Suite(lambda n: [("continuant_identities", n)],
                                    _continuant_work),
    "tz_knead": _Suite(lambda n: [("tz_knead", n)], _tz_knead_work),
}

SUITE_IDS = list(_SUITES)


def _work(unit):
    tid, payload = unit
    return _SUITES[tid].work(payload)


def verify(theorem_id: str, delta_max: int, jobs=None) -> VerificationReport:
    """Run one suite up to its bound and report.

    delta_max is the discriminant bound for sweep suites, the sample count
    for continuant_identities and tz_knead, and a simple on-switch for the
    fixed necklace sweep of zcaliber.  jobs > 1 shards units across
    processes; results are merged in unit order either way.
    """
    if theorem_id not in _SUITES:
        known = ", ".join(SUITE_IDS)
        raise ValueError(f"unknown suite {theorem_id!r}; known suites: {known}")
    bound = int(delta_max)
    if bound < 1:
        raise ValueError("delta_max must be at least 1")
    if jobs is None:
        jobs = int(os.environ.get("ZRED_JOBS") or 1)
    jobs = max(1, int(jobs))
    units = _SUITES[theorem_id].units(bound)
    report = VerificationReport(theorem_id, bound)
    if jobs > 1 and len(units) > 1:
        import multiprocessing

        with multiprocessing.Pool(processes=min(jobs, len(units))) as pool:
            results = pool.map(_work, units, chunksize=8)
    else:
        results = map(_work, units)
    for cases, failures in results:
        report.merge(cases, failures)
    return report


def expand_surd_oracle(x: QuadraticSurd, kind: str, n: int):
    """Slow independent expansion of x for cross-checking the engines.

    Tracks the tail as (a*sqrt(delta) + b)/(c*sqrt(delta) + e) with integer
    coefficients and answers each floor question by refining a Fraction
    bracket around sqrt(delta) until both endpoints agree.  Shares no code
    with the (p, q) state machinery.
    """
    if kind not in ("reg", "neg", "denjoy"):
        raise ValueError(f"kind must be reg, neg or denjoy, got {kind!r}")
    d = x.delta
    lo, hi = Fraction(math.isqrt(d)), Fraction(math.isqrt(d) + 1)
    a, b, c, e = 1, x.p, 0, x.q

    def refine():
        nonlocal lo, hi
        mid = (lo + hi) / 2
        if mid * mid < d:
            lo = mid
        else:
            hi = mid

    def floor_of_tail():
        while True:
            dlo, dhi = c * lo + e, c * hi + e
            if dlo == 0 or dhi == 0 or (dlo < 0) != (dhi < 0):
                refine()
                continue
            f1 = math.floor((a * lo + b) / dlo)
            f2 = math.floor((a * hi + b) / dhi)
            if f1 == f2:
                return f1
            refine()

    quots, bits = [], []
    for _ in range(int(n)):
        fl = floor_of_tail()
        if kind == "reg":
            quots.append(fl)
            a, b, c, e = c, e, a - fl * c, b - fl * e
        elif kind == "neg":
            quots.append(fl + 1)
            a, b, c, e = c, e, (fl + 1) * c - a, (fl + 1) * e - b
        else:
            bit = 1 if fl >= 1 else 0
            bits.append("1" if bit else "0")
            a, b, c, e = c, e, a - bit * c, b - bit * e
    return "".join(bits) if kind == "denjoy" else tuple(quots)
