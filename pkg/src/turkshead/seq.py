"""The integer sequences u_n and v_n and their arithmetic.

Both satisfy the four-term recurrence s_n = 3*s_{n-2} - s_{n-4}:

    u_{-3} = -1, u_{-2} = -1, u_{-1} = 0, u_0 = 1
    v_{-3} =  7, v_{-2} =  2, v_{-1} = 3, v_0 = 1

u extends to every negative index through the reflection u_n = -u_{-n-2},
which is the proven identity rather than a backward run of the recurrence.
v is only defined from its seeds onward; indices below -3 are rejected.

Values grow like phi^n, so exact terms are plain Python integers and modular
work goes through dedicated mod-r helpers: an O(1)-state residue stream and a
logarithmic-time single-term evaluator built on powers of [[3, -1], [1, 0]]
(the recurrence splits into even- and odd-index chains of that 2x2 map).
"""

from __future__ import annotations

import math
from collections.abc import Iterator

from .zmod import check_modulus

_U_SEED_OFFSET = 3
_u_values = [-1, -1, 0, 1]  # u_{-3} .. u_0, extended upward on demand
_v_values = [7, 2, 3, 1]    # v_{-3} .. v_0


def u(n: int) -> int:
    """Exact value of u_n for any integer n."""
    if n < -3:
        return -u(-n - 2)
    idx = n + _U_SEED_OFFSET
    while idx >= len(_u_values):
        _u_values.append(3 * _u_values[-2] - _u_values[-4])
    return _u_values[idx]


def v(n: int) -> int:
    """Exact value of v_n for n >= -3 (indices below the seeds are undefined)."""
    if n < -3:
        raise ValueError(f"v_n is only defined for n >= -3, got {n}")
    idx = n + _U_SEED_OFFSET
    while idx >= len(_v_values):
        _v_values.append(3 * _v_values[-2] - _v_values[-4])
    return _v_values[idx]


# -- modular evaluation ------------------------------------------------------

def _pair_step_power(k: int, r: int) -> tuple[int, int, int, int]:
    """[[3, -1], [1, 0]]^k mod r (k >= 0), by binary exponentiation."""
    a, b, c, d = 1 % r, 0, 0, 1 % r
    e, f, g, h = 3 % r, (-1) % r, 1 % r, 0
    while k:
        if k & 1:
            a, b, c, d = (
                (a * e + b * g) % r, (a * f + b * h) % r,
                (c * e + d * g) % r, (c * f + d * h) % r,
            )
        e, f, g, h = (
            (e * e + f * g) % r, (e * f + f * h) % r,
            (g * e + h * g) % r, (g * f + h * h) % r,
        )
        k >>= 1
    return a, b, c, d


def u_mod(n: int, r: int) -> int:
    """u_n mod r in O(log |n|) time, for any integer n."""
    check_modulus(r)
    if n == -1:
        return 0
    if n < 0:
        return -u_mod(-n - 2, r) % r
    k, odd = divmod(n, 2)
    a, b, _, _ = _pair_step_power(k, r)
    if odd:
        return a  # odd-index chain seeds: (u_1, u_-1) = (1, 0)
    return (a - b) % r  # even-index chain seeds: (u_0, u_-2) = (1, -1)


def v_mod(n: int, r: int) -> int:
    """v_n mod r in O(log n) time, n >= -3."""
    check_modulus(r)
    if n < -3:
        raise ValueError(f"v_n is only defined for n >= -3, got {n}")
    if n < 1:
        return v(n) % r
    k, odd = divmod(n, 2)
    a, b, _, _ = _pair_step_power(k, r)
    if odd:
        return (2 * a + 3 * b) % r  # seeds (v_1, v_-1) = (2, 3)
    return (a + 2 * b) % r          # seeds (v_0, v_-2) = (1, 2)


def u_mod_stream(r: int) -> Iterator[int]:
    """Yield u_0 mod r, u_1 mod r, ... keeping only the last four residues."""
    check_modulus(r)
    w0, w1, w2, w3 = (-1) % r, (-1) % r, 0, 1 % r
    while True:
        yield w3
        w0, w1, w2, w3 = w1, w2, w3, (3 * w2 - w0) % r


# -- closed form and identity checks -----------------------------------------

_BINET_MAX_INDEX = 60


def binet_u(n: int) -> float:
    """Floating evaluation of the four-term closed form for u_n.

    Only a cross-check against the exact path; |n| is capped to stay well
    inside double range.
    """
    if abs(n) > _BINET_MAX_INDEX:
        raise ValueError(f"binet_u limited to |n| <= {_BINET_MAX_INDEX}, got {n}")
    s5 = math.sqrt(5.0)
    phi = (1.0 + s5) / 2.0
    phi_inv = (-1.0 + s5) / 2.0
    psi = (1.0 - s5) / 2.0
    psi_neg = (-1.0 - s5) / 2.0
    return (phi ** (n + 2) - phi_inv**n - psi ** (n + 2) + psi_neg**n) / s5


def check_sum_identity(n: int) -> bool:
    """u_{2n} = u_{2n+1} + u_{2n-1} and 5*u_{2n+1} = u_{2n+2} + u_{2n}, exactly."""
    first = u(2 * n) == u(2 * n + 1) + u(2 * n - 1)
    total = u(2 * n + 2) + u(2 * n)
    second = total % 5 == 0 and u(2 * n + 1) == total // 5
    return first and second


def check_product_identity(m: int, n: int) -> bool | None:
    """Check the index-addition product identities at (m, n).

    Case one applies when m is even or n is odd:
        u_{m+n} = u_{m+1} u_n - u_{m-1} u_{n-2}
    Case two applies when m is even and n is odd:
        u_{m+n} = u_m u_n - u_{m-1} u_{n-1}

    Returns None when neither case applies (m odd, n even), else whether all
    applicable cases hold exactly.
    """
    case_one = m % 2 == 0 or n % 2 == 1
    case_two = m % 2 == 0 and n % 2 == 1
    if not case_one and not case_two:
        return None
    ok = True
    if case_one:
        ok = ok and u(m + n) == u(m + 1) * u(n) - u(m - 1) * u(n - 2)
    if case_two:
        ok = ok and u(m + n) == u(m) * u(n) - u(m - 1) * u(n - 1)
    return ok


def check_uv_factorization(n: int) -> bool:
    """Verify the u/v factorization of block-power entries at n >= 0.

    The leading entries a_n, b_n of the n-fold product of the one-block
    transfer matrix (computed by plain repeated multiplication, independent
    of any closed form) must satisfy

        a_n = u_n v_n          a_n - 1 = u_{n-1} v_{n+1}
        b_n = u_{n-2} u_{n-1}  b_n - 1 = u_n u_{n-3}
    """
    if n < 0:
        raise ValueError(f"factorization check needs n >= 0, got {n}")
    from .thk import c_power_iterated

    power = c_power_iterated(n)
    a_n, b_n = power[0][0], power[0][1]
    return (
        a_n == u(n) * v(n)
        and a_n - 1 == u(n - 1) * v(n + 1)
        and b_n == u(n - 2) * u(n - 1)
        and b_n - 1 == u(n) * u(n - 3)
    )
