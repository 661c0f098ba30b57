"""Truncated Euler products with the exponential-integral correction.

The product over primes p <= x is accumulated in the log domain and
exponentiated once.  Multiplying by exp(+-E1[(s-1) log x]) compensates the
truncation of the slowest-converging component (the prime zeta part) and
extends the product's useful range from Re(s) > 1 to Re(s) > 1/2, away from
s = 1, with an empirically checkable error that decays like
x^(1/2 - sigma) log x.

Three product shapes are supported:

* Zeta:        prod (1 - p^-s)^-1  with correction +E1, approximating zeta(s)
* InverseZeta: prod (1 - p^-s)     with correction -E1, approximating 1/zeta(s)
* Ratio:       prod (1 + p^-s)^-1  with correction -E1, approximating
               zeta(2s)/zeta(s)

Per-factor principal logs never wrap because |p^-s| < 1 for Re(s) > 0, so
every factor has positive real part.  The log sum is accumulated with an
error-free transformation (math.fsum) on the real and imaginary parts; with
~78k terms at x = 10^6 a naive sum would lose about 3 digits and break the
package's 1e-12 identity invariants.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import EulerProductError, SingularFactorError, SingularityError
from .primes import PrimeTable
from .specfun import EULER_GAMMA, BranchSide, e1
from .zetaref import ZetaRefConfig, zeta_ref


class ProductVariant(Enum):
    ZETA = "zeta"
    INVERSE_ZETA = "inverse-zeta"
    RATIO_ZETA2S_OVER_ZETA = "ratio"


# (coefficient, sign) per variant: the log sum is coeff * sum log(1 + sign*p^-s).
_SHAPE = {
    ProductVariant.ZETA: (-1.0, -1.0),
    ProductVariant.INVERSE_ZETA: (1.0, -1.0),
    ProductVariant.RATIO_ZETA2S_OVER_ZETA: (-1.0, 1.0),
}

# Correction is +E1 for the zeta product and -E1 for the other two.
_CORRECTION_SIGN = {
    ProductVariant.ZETA: 1.0,
    ProductVariant.INVERSE_ZETA: -1.0,
    ProductVariant.RATIO_ZETA2S_OVER_ZETA: -1.0,
}


@dataclass(frozen=True)
class Evaluation:
    """One corrected-product evaluation at a point s with truncation x.

    ``value`` equals exp(log_raw_product + correction) to rounding, and
    ``abs_error`` is |value - reference| whenever a reference was computed.
    ``outside_domain`` marks points with Re(s) <= 1/2 (computed anyway but
    unsupported); ``on_cut`` marks points whose E1 argument lay on the
    branch cut, i.e. real s left of 1.
    """

    s: complex
    x: int
    variant: ProductVariant
    log_raw_product: complex
    correction: complex
    value: complex
    reference: Optional[complex] = None
    abs_error: Optional[float] = None
    outside_domain: bool = False
    on_cut: bool = False


def log_raw_product(s: complex, table: PrimeTable, variant: ProductVariant) -> complex:
    """Sum of per-prime log factors for the truncated product, uncorrected.

    Zeta:        -sum log(1 - p^-s)
    InverseZeta: +sum log(1 - p^-s)
    Ratio:       -sum log(1 + p^-s)

    Raises SingularFactorError if some factor vanishes at s (possible only
    outside the supported half-plane, e.g. p^s = 1 at s = 0).
    """
    s = complex(s)
    coeff, sign = _SHAPE[variant]
    if table.count == 0:
        return 0.0 + 0.0j
    w = np.exp(-s * table.log_primes)
    a = sign * w.real
    b = sign * w.imag
    dead = (1.0 + a == 0.0) & (b == 0.0)
    if dead.any():
        p = int(table.primes[int(np.argmax(dead))])
        raise SingularFactorError(
            f"Euler factor vanishes at prime {p} for s = {s}", prime=p
        )
    # log(1 + u) for u = sign * p^-s, written so the real part goes through a
    # real log1p: re = log|1+u| = log1p(2a + a^2 + b^2) / 2, im = arg(1+u).
    re_terms = 0.5 * np.log1p(2.0 * a + a * a + b * b)
    im_terms = np.arctan2(b, 1.0 + a)
    total = complex(math.fsum(re_terms.tolist()), math.fsum(im_terms.tolist()))
    return coeff * total


def _reference(s: complex, variant: ProductVariant, cfg: ZetaRefConfig) -> complex:
    if variant is ProductVariant.ZETA:
        return zeta_ref(s, cfg)
    if variant is ProductVariant.INVERSE_ZETA:
        return 1.0 / zeta_ref(s, cfg)
    return zeta_ref(2 * s, cfg) / zeta_ref(s, cfg)


def corrected_product(
    s: complex,
    table: PrimeTable,
    variant: ProductVariant = ProductVariant.ZETA,
    cut: BranchSide = BranchSide.FROM_ABOVE,
    ref_cfg: Optional[ZetaRefConfig] = None,
) -> Evaluation:
    """Truncated Euler product at s with its exponential-integral correction.

    s = 1 is a hard error: the zeta product has its pole and the inverse its
    zero exactly there, and the correction's argument (s-1) log x hits the
    singularity of E1 at 0.  Points with Re(s) <= 1/2 are evaluated anyway
    but flagged (and warned about once): the correction is only justified to
    the right of the critical line.

    When ``ref_cfg`` is given, the matching reference value (zeta(s),
    1/zeta(s) or zeta(2s)/zeta(s)) and the absolute error are filled in.
    """
    s = complex(s)
    if s == 1:
        raise SingularityError(
            "s = 1 is excluded (pole of the zeta product, zero of its inverse); "
            "use mertens_ratio for the limiting behaviour at s = 1"
        )
    outside = s.real <= 0.5
    if outside:
        warnings.warn(
            f"corrected product evaluated at Re(s) = {s.real} <= 1/2, outside "
            "the supported half-plane; result is flagged and unsupported",
            RuntimeWarning,
            stacklevel=2,
        )
    log_raw = log_raw_product(s, table, variant)
    z = (s - 1.0) * math.log(table.limit) if table.limit >= 1 else 0.0
    e1_result = e1(z, cut)  # raises SingularityError when x = 1 makes z = 0
    correction = _CORRECTION_SIGN[variant] * e1_result.value
    try:
        value = cmath.exp(log_raw + correction)
    except OverflowError:
        raise EulerProductError(
            f"corrected product overflows double precision at s = {s}, "
            f"x = {table.limit}"
        ) from None
    reference = None
    abs_error = None
    if ref_cfg is not None:
        reference = _reference(s, variant, ref_cfg)
        abs_error = abs(value - reference)
    return Evaluation(
        s=s,
        x=table.limit,
        variant=variant,
        log_raw_product=log_raw,
        correction=correction,
        value=value,
        reference=reference,
        abs_error=abs_error,
        outside_domain=outside,
        on_cut=e1_result.on_cut,
    )


def prime_zeta_truncated(
    s: complex, table: PrimeTable, cut: BranchSide = BranchSide.FROM_ABOVE
) -> complex:
    """Truncated prime zeta sum plus its E1 correction.

    Returns sum_{p <= x} p^-s + E1[(s-1) log x], the x-truncated
    approximation to the prime zeta function P(s) on Re(s) > 1/2.  P has a
    branch point at s = 1 (the cut in s runs along (1/2, 1]), so s = 1 is
    rejected.
    """
    s = complex(s)
    if s == 1:
        raise SingularityError("prime zeta has a branch point at s = 1")
    if table.count == 0 and table.limit < 1:
        raise SingularityError("prime zeta truncation needs a limit of at least 1")
    w = np.exp(-s * table.log_primes)
    head = complex(math.fsum(w.real.tolist()), math.fsum(w.imag.tolist()))
    z = (s - 1.0) * math.log(table.limit)
    return head + e1(z, cut).value  # raises SingularityError when x = 1


def mertens_ratio(table: PrimeTable) -> float:
    """Ratio of prod_{p <= x} (1 - 1/p)^-1 to its asymptote e^gamma log x.

    Computed in the log domain; tends to 1 from above as x grows.  Requires
    limit >= 2 so the product is nonempty and log x is positive.
    """
    if table.limit < 2:
        raise SingularityError(
            f"Mertens ratio needs at least one prime (limit >= 2), got {table.limit}"
        )
    inv_p = 1.0 / table.primes.astype(np.float64)
    log_product = -math.fsum(np.log1p(-inv_p).tolist())
    return math.exp(log_product - EULER_GAMMA - math.log(math.log(table.limit)))
