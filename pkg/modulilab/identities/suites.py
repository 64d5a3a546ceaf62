"""Named verification suites: every identity and headline number as a pass/fail row, timed for tables."""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction

from modulilab.algebra.mpoly import poly_ring
from modulilab.identities import complete_intersection, lines
from modulilab.invariants import quotient
from modulilab.invariants.forms import g_form
from modulilab.invariants.invariants import invariants
from modulilab.shared.config import RunConfig
from modulilab.shared.models import CPoint, ECoeffs, GCoeffs, WeightedPoint
from modulilab.stability import profiles
from modulilab.strata import catalogue
from modulilab.toric import fan
from modulilab.weyl import groups

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    passed: bool
    terms: int
    seconds: float

    @property
    def status(self):
        return "pass" if self.passed else "FAIL"

    def to_dict(self, timings=False):
        row = {"suite": self.suite, "check": self.check, "status": self.status, "terms": self.terms}
        if timings:
            row["seconds"] = round(self.seconds, 3)
        return row


def _chi(config):
    if config.symbolic:
        return lines.verify_chi_vanishing(symbolic=True), lines.pullback_size()
    return lines.verify_chi_vanishing(symbolic=False, seed=config.random_seed)


def _chi_example(config):
    return lines.verify_chi_vanishing(symbolic=False, c=CPoint(1, 2, 3, 5), samples=50, seed=config.random_seed)


def _abcd_example(config):
    c = CPoint(1, 2, 3, 5)
    return lines.abcd_from_c(c) == GCoeffs(-165, 165, 1517, 173) and lines.discriminants(c)[:3] == (165, 845, 168)


def _tau_lines(config):
    c = CPoint(*poly_ring(lines.C_VARIABLES))
    return all(lines.tau_action_on_lines(c).values())


def _quotient_examples(config):
    reducible = quotient.quotient_point(GCoeffs(1, -1, 1, 1))
    six_nodal = quotient.quotient_point(GCoeffs(0, 0, 1, 1))
    return (
        reducible == WeightedPoint(quotient.QUOTIENT_WEIGHTS, (2, 2, 0, 0))
        and six_nodal == WeightedPoint(quotient.QUOTIENT_WEIGHTS, (2, 0, Fraction(4, 3), Fraction(8, 27)))
    )


def _phi_chain(config):
    points = (GCoeffs(1, -1, 1, 1), GCoeffs(0, 0, 1, 1), GCoeffs(1, 2, 3, 5))
    return all(quotient.phi_chain(g) == quotient.quotient_point(g) for g in points)


def _symbolic_group_invariance(config):
    x = GCoeffs(*poly_ring("a b c d"))
    base = invariants(g_form(x)).hrst()
    return all(invariants(g_form(groups.act(g, x))).hrst() == base for g in groups.gamma_generators())


def _symbolic_phi_chain(config):
    x = GCoeffs(*poly_ring("a b c d"))
    return quotient.wp_equal(quotient.quotient_point(x), quotient.phi_chain(x))


def _sing_divisibility(config):
    result = quotient.singular_image_divisibility()
    return result is not None, len(result) if result is not None else 0


def _regular_parameters(config):
    return quotient.regular_parameters(WeightedPoint(quotient.QUOTIENT_WEIGHTS, (2, 2, 0, 0))) == (0, 0, 0)


def _group_orders(config):
    full = groups.weyl_f4()
    projective = groups.project_mod_center(full)
    theta_order, kernel, image = groups.stabilizer_image_on_e(projective)
    return (
        full.order() == 1152
        and projective.order() == 576
        and len(groups.orbit(projective, groups.REDUCIBLE_POINT)) == 12
        and theta_order == 48
        and kernel == 2
        and len(image) == 24
    )


def _catalogue(config):
    ok = True
    for g in (GCoeffs(0, 0, 1, 1), GCoeffs(0, 0, 1, 2), GCoeffs(1, -1, 2, 3), GCoeffs(1, -1, 1, 2)):
        entry = catalogue.expected_singular_points(g)
        ok &= all(catalogue.jacobian_singular_q(g, p) for p in entry.points + entry.samples)
    for e in (ECoeffs(1, 0, 0), ECoeffs(0, 0, 1), ECoeffs(1, 1, 1), ECoeffs(2, 1, 1), ECoeffs(1, -1, 2), ECoeffs(2, 3, 5)):
        entry = catalogue.expected_singular_points(e)
        ok &= all(
            catalogue.jacobian_singular_e(e, p)
            for p in entry.points + entry.samples
            if catalogue.is_rational_point(p)
        )
    return ok


def _fan_multiplicities(config):
    f = fan.moduli_fan()
    return fan.multiplicities(f) == [3, 2, 1, 6, 4, 3]


def _stability_numbers(config):
    nemuro = profiles.nemuro_bound()
    return (
        profiles.s_value("divisor-E") == Fraction(5, 6)
        and profiles.s_value("divisor-F-corrected") == Fraction(5, 6)
        and profiles.s_value("divisor-Eprime") == Fraction(5, 6)
        and profiles.s_value("divisor-F-literal") == Fraction(17, 20)
        and profiles.beta_value(1, profiles.s_value("fiber-S")) == Fraction(5, 16)
        and nemuro == (Fraction(15, 16), Fraction(16, 15), Fraction(2, 3))
    )


SUITES = {
    "appendix": {
        "chi-vanishing": _chi,
        "chi-vanishing-at-(1:2:3:5)": _chi_example,
        "abcd-and-discriminants": _abcd_example,
        "tau-action-on-lines": _tau_lines,
        "rho-sigma": lambda config: lines.rho_sigma_identities(),
    },
    "section3": {
        "segre-identities": lambda config: complete_intersection.segre_identities(),
        "ci-model-segre": lambda config: complete_intersection.ci_model_segre_check(),
        "limit": lambda config: complete_intersection.limit_check(),
    },
    "invariants": {
        "molien": lambda config: quotient.molien_check(config.series_order),
        "quotient-examples": _quotient_examples,
        "phi-chain": _phi_chain,
        "regular-parameters": _regular_parameters,
        "group-invariance": _symbolic_group_invariance,
        "phi-chain-symbolic": _symbolic_phi_chain,
        "sing-divisibility": _sing_divisibility,
    },
    "group": {
        "orders": _group_orders,
    },
    "strata": {
        "catalogue-jacobian": _catalogue,
    },
    "fan": {
        "complete": lambda config: fan.fan_is_complete(fan.moduli_fan(), seed=config.random_seed),
        "base-complete": lambda config: fan.fan_is_complete(fan.weighted_projective_fan(), seed=config.random_seed),
        "multiplicities": _fan_multiplicities,
        "star-subdivision": lambda config: fan.star_subdivision_check(),
        "ideal-orders": lambda config: set(fan.ideal_weighted_orders()) == {6},
    },
    "stability": {
        "headline-numbers": _stability_numbers,
        "volume-profiles": lambda config: profiles.volume_check(),
    },
}


def suite_names():
    return list(SUITES) + ["all"]


def run_suite(name, config: RunConfig = None):
    """Run one suite (or "all") and return one CheckResult per check."""
    config = config or RunConfig.from_env()
    if name != "all" and name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}; choose from {', '.join(suite_names())}")
    selected = list(SUITES) if name == "all" else [name]
    results = []
    for suite in selected:
        for check, fn in SUITES[suite].items():
            start = time.perf_counter()
            outcome = fn(config)
            terms = 0
            if isinstance(outcome, tuple):
                outcome, terms = outcome
            elapsed = time.perf_counter() - start
            results.append(CheckResult(suite, check, bool(outcome), terms, elapsed))
            logger.info("%s/%s: %s in %.3fs", suite, check, "pass" if outcome else "FAIL", elapsed)
    return results
