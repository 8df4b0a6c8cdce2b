"""CDMA downlink power control and OFDMA SINR driven by the interference factor.

All SINR values are linear scale; dB conversion belongs at the CLI boundary.
Perfect power control is assumed, so each user's SINR equals its target and
the cell power follows in closed form.
"""

from dataclasses import dataclass, field

from .errors import InfeasibleCellError, ParameterError, SingularSinrError


@dataclass(frozen=True)
class CdmaUser:
    gamma_star: float  # target SINR, linear
    gain_g: float  # path gain to serving BS
    f: float  # interference factor at the user location
    noise: float = 0.0  # W

    def __post_init__(self):
        if not self.gamma_star > 0:
            raise ParameterError(f"gamma_star must be > 0, got {self.gamma_star}")
        if not self.gain_g > 0:
            raise ParameterError(f"gain_g must be > 0, got {self.gain_g}")
        if self.f < 0:
            raise ParameterError(f"f must be >= 0, got {self.f}")
        if self.noise < 0:
            raise ParameterError(f"noise must be >= 0, got {self.noise}")


@dataclass(frozen=True)
class CdmaCellConfig:
    alpha: float  # orthogonality loss factor in [0, 1]
    p_cch: float  # common-channel power, W
    users: tuple[CdmaUser, ...] = ()

    def __post_init__(self):
        if not 0 <= self.alpha <= 1:
            raise ParameterError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.p_cch < 0:
            raise ParameterError(f"p_cch must be >= 0, got {self.p_cch}")
        object.__setattr__(self, "users", tuple(self.users))


@dataclass(frozen=True)
class CellPowerSolution:
    total_power_pb: float  # W
    per_user_power: tuple[float, ...]  # W, aligned with config.users
    load: float  # sum of t_u*(alpha + f_u), < 1 when feasible


def _traffic_factor(gamma_star: float, alpha: float) -> float:
    return gamma_star / (1.0 + alpha * gamma_star)


def cdma_sinr(S: float, I_int: float, I_ext: float, noise: float, alpha: float) -> float:
    """SINR = S / (alpha*(I_int - S) + I_ext + noise).

    I_int includes the useful signal S by convention, hence S <= I_int.
    """
    for name, v in (("S", S), ("I_int", I_int), ("I_ext", I_ext), ("noise", noise)):
        if v < 0:
            raise ParameterError(f"{name} must be >= 0, got {v}")
    if S > I_int:
        raise ParameterError(
            f"S ({S}) exceeds I_int ({I_int}); the useful signal is part of the own-cell power"
        )
    denom = alpha * (I_int - S) + I_ext + noise
    if denom <= 0:
        raise SingularSinrError("SINR denominator is zero")
    return S / denom


def cdma_user_power(u: CdmaUser, alpha: float, P_b: float) -> float:
    """Power the BS must spend on user u given total BS power P_b.

    P_{b,u} = gamma*/(1 + alpha*gamma*) * (alpha*P_b + f*P_b + noise/g).
    """
    if not P_b > 0:
        raise ParameterError(f"P_b must be > 0, got {P_b}")
    t = _traffic_factor(u.gamma_star, alpha)
    return t * (alpha * P_b + u.f * P_b + u.noise / u.gain_g)


def cdma_cell_power(cfg: CdmaCellConfig) -> CellPowerSolution:
    """Closed-form total BS power under perfect power control.

    P_b = (p_cch + sum t_u*noise_u/g_u) / (1 - L) with load
    L = sum t_u*(alpha + f_u). Raises InfeasibleCellError when L >= 1
    (pole capacity).
    """
    load = 0.0
    noise_term = 0.0
    for u in cfg.users:
        t = _traffic_factor(u.gamma_star, cfg.alpha)
        load += t * (cfg.alpha + u.f)
        noise_term += t * u.noise / u.gain_g
    if load >= 1.0:
        raise InfeasibleCellError(load)
    total = (cfg.p_cch + noise_term) / (1.0 - load)
    if total > 0:
        per_user = tuple(cdma_user_power(u, cfg.alpha, total) for u in cfg.users)
    else:
        per_user = tuple(0.0 for _ in cfg.users)  # p_cch = 0 and no users
    return CellPowerSolution(total_power_pb=total, per_user_power=per_user, load=load)


def ofdma_sinr(f: float, noise_over_signal: float) -> float:
    """OFDMA SINR = 1 / (f + Noise/(P_{b,u} g_{b,u})); no own-cell interference."""
    if f < 0 or noise_over_signal < 0:
        raise ParameterError("f and noise_over_signal must be >= 0")
    denom = f + noise_over_signal
    if denom <= 0:
        raise SingularSinrError("SINR denominator is zero")
    return 1.0 / denom


def ofdma_sinr_approx(f: float) -> float:
    """Noise-neglected OFDMA SINR = 1/f."""
    if f < 0:
        raise ParameterError(f"f must be >= 0, got {f}")
    if f == 0:
        raise SingularSinrError("interference factor is zero")
    return 1.0 / f
