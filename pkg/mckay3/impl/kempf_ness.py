"""The moment map of the gauge action on McKay-quiver data, and a Kempf-Ness solver.

For the positive diagonal gauge torus acting by b_alpha(k) -> exp(x_h - x_k) b_alpha(k),
the function

    f(x) = 1/4 sum |b_alpha(k)|^2 exp(2(x_h - x_k)) - sum theta_k x_k

is convex with gradient mu(x.B) - theta. A minimizer exists exactly when B is
theta-semistable; otherwise f decreases without bound along the indicator of
a destabilizing invariant subset, which is what the solver reports.
"""
import logging
from fractions import Fraction
from typing import Iterable, Optional, Union
import numpy as np
from mckay3.impl.config import SolverConfig
from mckay3.impl.quiver import is_invariant, is_theta_semistable, relation_residual, support
from mckay3.impl.types.moment import GaugePoint, MomentValue, Solved, SolveResult, Unstable
from mckay3.impl.types.quiver import Constellation, StabilityParam
from mckay3.utils.errors import AlarmError, InputError

log = logging.getLogger(__name__)

# Tikhonov shift added to the Newton system; the gauge Laplacian is only semidefinite
DAMPING = 1e-9
MAX_BACKTRACKS = 80

Point = Union[GaugePoint, np.ndarray, Iterable[float]]


class MaxIterExceeded(AlarmError):
    def message(self) -> str:
        return (f"Kempf-Ness solver neither converged nor diverged in {self.context['iterations']} "
                f"iterations (residual {self.context['residual']:.3e})")


class RelationViolated(InputError):
    def message(self) -> str:
        return f"constellation is off the relation locus: [B^B] residual {self.context['residual']:.3e}"


class ThetaNotIntegral(InputError):
    def message(self) -> str:
        return f"theta {self.context['theta']} must be integral to define a character of the gauge torus"


def _coords(x: Point) -> np.ndarray:
    if isinstance(x, GaugePoint):
        return x.values
    return np.asarray(x)


def _arrow_layout(rep: Constellation):
    """tails, heads and |b|^2 of the 3r arrows, flattened in (k, alpha) order."""
    r = rep.group.order
    tails = np.repeat(np.arange(r), 3)
    heads = (tails + np.tile(np.array(rep.group.weights), r)) % r
    return tails, heads, np.abs(rep.b.ravel()) ** 2


def moment_map(rep: Constellation) -> MomentValue:
    """mu_k = 1/2 sum_alpha (|b_alpha(k - w_alpha)|^2 - |b_alpha(k)|^2)"""
    r = rep.group.order
    tails, heads, energy = _arrow_layout(rep)
    incoming = np.bincount(heads, weights=energy, minlength=r)
    outgoing = np.bincount(tails, weights=energy, minlength=r)
    return MomentValue(0.5 * (incoming - outgoing))


def zeta_of_theta(theta: StabilityParam) -> MomentValue:
    return MomentValue([float(v) for v in theta.values])


def gauge_act(x: Point, rep: Constellation) -> Constellation:
    """b_alpha(k) -> exp(x_{k + w_alpha} - x_k) b_alpha(k). Complex x gives phase gauges."""
    x = _coords(x)
    tails, heads, _ = _arrow_layout(rep)
    factors = np.exp(x[heads] - x[tails]).reshape(rep.b.shape)
    return Constellation(rep.group, rep.b * factors)


def kn_functional(rep: Constellation, theta: StabilityParam, x: Point) -> float:
    x = np.asarray(_coords(x), dtype=np.float64)
    tails, heads, energy = _arrow_layout(rep)
    live = energy > 0
    with np.errstate(over="ignore"):
        growth = np.exp(2.0 * (x[heads[live]] - x[tails[live]]))
    return float(0.25 * np.sum(energy[live] * growth) - zeta_of_theta(theta).values @ x)


def kn_gradient(rep: Constellation, theta: StabilityParam, x: Point) -> MomentValue:
    """mu(gauge_act(x, B)) - zeta_theta, projected onto the sum-zero hyperplane."""
    g = (moment_map(gauge_act(x, rep)) - zeta_of_theta(theta)).values
    return MomentValue(g - g.mean())


def kn_hessian(rep: Constellation, x: Point) -> np.ndarray:
    """The weighted graph Laplacian sum |b|^2 exp(2(x_h - x_t)) (e_h - e_t)(e_h - e_t)^T."""
    r = rep.group.order
    x = np.asarray(_coords(x), dtype=np.float64)
    tails, heads, energy = _arrow_layout(rep)
    live = energy > 0
    tails, heads, energy = tails[live], heads[live], energy[live]
    w = energy * np.exp(2.0 * (x[heads] - x[tails]))
    hess = np.zeros((r, r))
    np.add.at(hess, (heads, heads), w)
    np.add.at(hess, (tails, tails), w)
    np.add.at(hess, (heads, tails), -w)
    np.add.at(hess, (tails, heads), -w)
    return hess


def _certificate(rep: Constellation, theta: StabilityParam, x: np.ndarray) -> Optional[frozenset]:
    """Low side of the widest gap in x, else of another gap, else a direct witness."""
    order = np.argsort(x, kind="stable")
    gaps = np.diff(x[order])
    for cut in np.argsort(-gaps, kind="stable"):
        subset = frozenset(int(k) for k in order[:cut + 1])
        if theta(subset) <= 0 and is_invariant(rep, subset):
            return subset
    verdict = is_theta_semistable(rep, theta)
    return None if verdict else verdict.witness


def kempf_ness_solve(rep: Constellation, theta: StabilityParam,
                     config: Optional[SolverConfig] = None) -> SolveResult:
    """Minimize the Kempf-Ness functional by damped Newton steps with Armijo backtracking.

    Returns Solved once ||mu(x.B) - theta||_inf <= tol, and Unstable once
    ||x||_inf exceeds the divergence bound, with a destabilizing invariant
    subset S (theta(S) <= 0) as certificate.

    Raises:
        RelationViolated: B is off the relation locus
        MaxIterExceeded: no verdict within max_iter Newton steps
    """
    config = config or SolverConfig()
    theta.require_order(rep.group)
    r = rep.group.order
    scale = max(1.0, float(np.max(np.abs(rep.b))) ** 2)
    defect = relation_residual(rep)
    if defect > config.tol * scale:
        raise RelationViolated(residual=defect)

    x = np.zeros(r)
    centering = np.ones((r, r)) / r
    history = []
    residual = float("inf")
    log.debug("%s: solving mu = theta for theta=%s on %d supported arrows",
              rep.group, theta.literal(), len(support(rep)))

    for it in range(config.max_iter + 1):
        g = kn_gradient(rep, theta, x).values
        residual = float(np.max(np.abs(g)))
        history.append(residual)
        if residual <= config.tol:
            log.debug("converged after %d iterations, residual %.3e", it, residual)
            return Solved(x=GaugePoint(x), residual=residual, iterations=it,
                          history=tuple(history) if config.record_history else ())
        if it == config.max_iter:
            break

        hess = kn_hessian(rep, x)
        step = np.linalg.solve(hess + centering + DAMPING * np.eye(r), -g)
        step -= step.mean()
        f0 = kn_functional(rep, theta, x)
        slope = float(g @ step)
        t = 1.0
        for _ in range(MAX_BACKTRACKS):
            if kn_functional(rep, theta, x + t * step) <= f0 + config.armijo * t * slope + 1e-14 * abs(f0):
                break
            t *= config.backtrack
        x = x + t * step
        x -= x.mean()
        log.debug("iteration %d: residual %.3e, step %.3e", it, residual, t)

        if np.max(np.abs(x)) > config.divergence_bound:
            certificate = _certificate(rep, theta, x)
            if certificate is None:
                break
            log.debug("diverged after %d iterations, certificate %s", it + 1, sorted(certificate))
            return Unstable(certificate=certificate, x=GaugePoint(x), iterations=it + 1,
                            history=tuple(history) if config.record_history else ())

    raise MaxIterExceeded(iterations=config.max_iter, residual=residual)


def moment_on_subset(rep: Constellation, subset: Iterable[int]) -> float:
    """<mu(B), i pi_S> = sum_{k in S} mu_k"""
    mu = moment_map(rep).values
    return float(sum(mu[k] for k in subset))


def entering_energy(rep: Constellation, subset: Iterable[int]) -> float:
    """1/2 sum of |b|^2 over arrows from the complement of S into S.

    Equals moment_on_subset for invariant S, hence is >= 0 there.
    """
    members = set(subset)
    tails, heads, energy = _arrow_layout(rep)
    entering = np.array([h in members and t not in members for t, h in zip(tails, heads)], dtype=bool)
    return float(0.5 * energy[entering].sum())


def theta_character(theta: StabilityParam, t: Iterable[complex]) -> complex:
    """chi_theta(t) = prod_k t_k^theta_k for integral theta."""
    if any(Fraction(v).denominator != 1 for v in theta.values):
        raise ThetaNotIntegral(theta=theta.literal())
    t = np.asarray(list(t), dtype=np.complex128)
    return complex(np.prod([t[k] ** int(v) for k, v in enumerate(theta.values)]))


def infinitesimal_action(rep: Constellation, xi: Iterable[float]) -> Constellation:
    """X_xi(B) = d/ds gauge_act(i s xi, B) at s = 0."""
    xi = np.asarray(list(xi), dtype=np.float64)
    tails, heads, _ = _arrow_layout(rep)
    rates = (1j * (xi[heads] - xi[tails])).reshape(rep.b.shape)
    return Constellation(rep.group, rep.b * rates)


def symplectic_form(u: Constellation, v: Constellation) -> float:
    """omega(u, v) = Im sum u conj(v), the imaginary part of the flat Hermitian form."""
    return float(np.sum(u.b * np.conj(v.b)).imag)
