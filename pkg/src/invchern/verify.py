"""Identity checks run by ``invchern verify``.

Each check takes the size bound ``max_n`` and returns ``(ok, detail)``.
Checks are independent and pure, so they may run on a thread pool; results
are always reported in registration order.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import chern, cobordism, divisibility, inversion, polytopes


@dataclass(frozen=True)
class Check:
    name: str
    func: Callable[[int], tuple[bool, str]]
    fast: bool = True


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


CHECKS: list[Check] = []


def check(name: str, fast: bool = True):
    def register(func):
        CHECKS.append(Check(name, func, fast))
        return func
    return register


def _first_failure(ns, pred) -> tuple[bool, str]:
    for n in ns:
        if not pred(n):
            return False, f"fails at n={n}"
    ns = list(ns)
    return True, f"n={ns[0]}..{ns[-1]}" if ns else "empty range"


@check("lagrange routes agree")
def _lagrange_routes(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        inversion.lagrange_polynomial(n, "recursive").polynomial
        == inversion.lagrange_polynomial(n, "direct-formula").polynomial))


@check("multiplicative routes agree (recursion vs Hessenberg)")
def _mult_routes(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        inversion.mult_inversion_polynomial(n, "recursive").polynomial
        == inversion.mult_inversion_polynomial(n, "determinant").polynomial))


@check("hat M routes agree")
def _hat_routes(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        inversion.hat_mult_inversion(n, "scaled") == inversion.hat_mult_inversion(n, "series")))


@check("C^nu(CP^n) = (n+1) L_n")
def _theorem_cpn(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        chern.cpn_normal_gf(n) == inversion.lagrange_polynomial(n).polynomial * (n + 1)))


@check("C^tau(Theta^n) = (n+1)! M_n")
def _theorem_theta(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        chern.theta_tangent_gf(n)
        == inversion.mult_inversion_polynomial(n, "determinant").polynomial * math.factorial(n + 1)))


@check("tangent times normal class of CP^n is 1")
def _duality(max_n):
    return _first_failure(range(1, max_n + 1), chern.duality_check)


@check("top normal Chern number of CP^n is (-1)^n binom(2n, n)")
def _catalan(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: (
        chern.cpn_normal_gf(n).coeff((1,) * n) == (-1) ** n * math.comb(2 * n, n)))


@check("C^tau(CP^n) = Bell(2n+1, n+1)(1, t_1..t_n)", fast=False)
def _tan_bell(max_n):
    return _first_failure(range(1, min(max_n, 8) + 1), lambda n: (
        chern.cpn_tangent_gf(n)
        == inversion.shift_bell_variables(inversion.bell_partial(2 * n + 1, n + 1))))


@check("gcd of Bell(n, k) coefficients is k / gcd(n, k)")
def _bell_gcd(max_n):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            if inversion.bell_gcd(n, k) != inversion.bell_gcd_predicted(n, k):
                return False, f"fails at (n, k) = ({n}, {k})"
    return True, f"1 <= k <= n <= {max_n}"


@check("gcd of CP^n numbers is n+1, of Theta^n numbers is (n+1)!")
def _divisibility(max_n):
    for n in range(1, max_n + 1):
        if chern.cpn_tangent_gf(n).gcd_coefficients() != n + 1:
            return False, f"tangent CP^{n}"
        if chern.cpn_normal_gf(n).gcd_coefficients() != n + 1:
            return False, f"normal CP^{n}"
        if chern.theta_tangent_gf(n).gcd_coefficients() != math.factorial(n + 1):
            return False, f"Theta^{n}"
    return True, f"n=1..{max_n}"


@check("associahedron faces match L_n")
def _assoc(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: polytopes.match_coefficients(
        polytopes.dissection_census(n, "dp"), inversion.lagrange_polynomial(n).polynomial))


@check("associahedron enumeration matches counting recursion", fast=False)
def _assoc_dual(max_n):
    return _first_failure(range(1, min(max_n, polytopes.EXPLICIT_LIMIT) + 1), lambda n: (
        polytopes.dissection_census(n, "enumerate").counts
        == polytopes.dissection_census(n, "dp").counts))


@check("permutohedron faces match hat M_n")
def _perm(max_n):
    return _first_failure(range(1, max_n + 1), lambda n: polytopes.match_coefficients(
        polytopes.ordered_partition_census(n), inversion.hat_mult_inversion(n)))


@check("permutohedron closed form matches enumeration", fast=False)
def _perm_dual(max_n):
    return _first_failure(range(1, min(max_n, 7) + 1), lambda n: (
        polytopes.ordered_partition_census(n, "enumerate").counts
        == polytopes.ordered_partition_census(n).counts))


@check("formal group log/exp round trip")
def _roundtrip(max_n):
    return cobordism.roundtrip_ok(max_n), f"order {max_n + 1}"


@check("logarithm = (n+1) L_n(tau) = theta decomposition of CP^n")
def _cobordism(max_n):
    log = cobordism.mischenko_logarithm(max_n)
    return _first_failure(range(1, max_n + 1), lambda n: (
        log[n] == cobordism.lagrange_in_tau(n)
        and log[n] == cobordism.decompose_in_theta(chern.cpn_record(n, "normal"))))


@check("Theta^n(k) = k^(n+1) Theta^n")
def _theta_scaling(max_n):
    for n in range(1, min(max_n, 4) + 1):
        for k in range(1, 4):
            tangent, normal = chern.theta_power_gf(n, k)
            scale = k ** (n + 1)
            if tangent != chern.theta_tangent_gf(n) * scale or normal != chern.theta_normal_gf(n) * scale:
                return False, f"(n, k) = ({n}, {k})"
            mu = divisibility.proportionality_check(chern.theta_record(n, k), chern.theta_record(n))
            if mu != scale:
                return False, f"proportionality at (n, k) = ({n}, {k})"
    return True, "n <= 4, k <= 3"


@check("del Pezzo, toric and hypersurface scans")
def _scans(max_n):
    dp = {d for d, v in divisibility.del_pezzo_scan().items() if v.extremely_divisible}
    toric = {n for n, v in divisibility.toric_surface_scan(12).items() if v.extremely_divisible}
    hyper = {d for d, v in divisibility.hypersurface_scan(6).items() if v.extremely_divisible}
    ok = dp == {6, 8, 9} and toric == {3, 4, 6, 12} and hyper == {1, 2, 4}
    return ok, f"del Pezzo {sorted(dp)}, toric {sorted(toric)}, V_d {sorted(hyper)}"


@check("flag variety F_3 numbers")
def _flag(max_n):
    rec = divisibility.record_from_catalog(divisibility.load_catalog_data()["records"][0])
    v = divisibility.gcd_chern_numbers(rec)
    return v.d == 6 and v.extremely_divisible, f"d={v.d}, chi={v.chi}"


def run_checks(max_n: int, suite: str = "all", jobs: int = 1) -> list[CheckResult]:
    selected = [c for c in CHECKS if suite == "all" or c.fast]

    def run(c: Check) -> CheckResult:
        try:
            ok, detail = c.func(max_n)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return CheckResult(c.name, bool(ok), detail)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, selected))
    return [run(c) for c in selected]


__all__ = ["CHECKS", "Check", "CheckResult", "run_checks"]
