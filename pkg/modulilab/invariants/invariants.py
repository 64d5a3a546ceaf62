"""
The invariants of (1,1,1,1)-forms.

H, L, M, D generate the invariants of SL_2^4; R, S, T (degrees 6, 8, 12)
together with H generate the invariants of the full group including the
permutations of the four factors.
"""
from fractions import Fraction
from typing import NamedTuple

from modulilab.algebra.linalg import det
from modulilab.invariants.forms import Form1111


class Invariants(NamedTuple):
    H: object
    L: object
    M: object
    D: object
    R: object
    S: object
    T: object

    def hrst(self):
        return (self.H, self.R, self.S, self.T)


def invariant_h(a):
    return (
        a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12]
        - a[4] * a[11] + a[5] * a[10] + a[6] * a[9] - a[7] * a[8]
    )


def l_matrix(a):
    return [
        [a[0], a[4], a[8], a[12]],
        [a[1], a[5], a[9], a[13]],
        [a[2], a[6], a[10], a[14]],
        [a[3], a[7], a[11], a[15]],
    ]


def m_matrix(a):
    return [
        [a[0], a[8], a[2], a[10]],
        [a[1], a[9], a[3], a[11]],
        [a[4], a[12], a[6], a[14]],
        [a[5], a[13], a[7], a[15]],
    ]


def d_matrix(a):
    return [
        [
            a[0] * a[9] - a[1] * a[8],
            a[0] * a[11] + a[2] * a[9] - a[1] * a[10] - a[3] * a[8],
            a[2] * a[11] - a[3] * a[10],
        ],
        [
            a[0] * a[13] + a[4] * a[9] - a[1] * a[12] - a[5] * a[8],
            a[0] * a[15] + a[2] * a[13] + a[4] * a[11] + a[6] * a[9]
            - a[1] * a[14] - a[3] * a[12] - a[5] * a[10] - a[7] * a[8],
            a[2] * a[15] + a[6] * a[11] - a[3] * a[14] - a[7] * a[10],
        ],
        [
            a[4] * a[13] - a[5] * a[12],
            a[4] * a[15] + a[6] * a[13] - a[5] * a[14] - a[7] * a[12],
            a[6] * a[15] - a[7] * a[14],
        ],
    ]


def rst_from_hlmd(H, L, M, D):
    q = Fraction
    R = H * (L - M) + 3 * D
    H2 = H * H
    H4 = H2 * H2
    S = (
        H4 * q(1, 12)
        - H2 * L * q(2, 3)
        + H2 * M * q(2, 3)
        - 2 * H * D
        + (L * L + L * M + M * M) * q(4, 3)
    )
    T = (
        H4 * H2 * q(1, 216)
        - H4 * (L - M) * q(1, 18)
        - H2 * H * D * q(1, 6)
        + H2 * (2 * L * L - L * M + 2 * M * M) * q(1, 9)
        + H * (L - M) * D * q(2, 3)
        - (L * L * L - M * M * M) * q(8, 27)
        - L * M * (L - M) * q(4, 9)
        + D * D
    )
    return R, S, T


def invariants(f: Form1111) -> Invariants:
    a = f.coeffs
    H = invariant_h(a)
    L = det(l_matrix(a))
    M = det(m_matrix(a))
    D = det(d_matrix(a))
    R, S, T = rst_from_hlmd(H, L, M, D)
    return Invariants(H, L, M, D, R, S, T)


def s3_generators(L, M):
    """Generators of the S_3-invariants of C[L, M]."""
    return (L * L + L * M + M * M, 2 * L**3 + 3 * L * L * M - 3 * L * M * M - 2 * M**3)
