"""Pauli strings: tensor products of single-site Pauli factors with a phase.

A Pauli string is a product ``phase * s_1 (x) s_2 (x) ... (x) s_k`` with
each factor in {I, X, Y, Z} and phase in {1, -1, i, -i}.  The leftmost
factor indexes the outermost Kronecker blocks.  Strings form the canonical
operator basis used throughout: every 2^k x 2^k matrix decomposes uniquely
as a combination of the 4^k bare strings.
"""

import functools
import itertools
import re
from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, dagger, max_abs

__all__ = ['PAULI_1Q', 'PHASES', 'PauliString', 'pauli_matrix',
           'pauli_strings', 'pauli_decompose', 'parse_pauli', 'parse_pauli_sum']

PAULI_1Q = {
    'I': np.eye(2, dtype=complex),
    'X': np.array([[0, 1], [1, 0]], dtype=complex),
    'Y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'Z': np.array([[1, 0], [0, -1]], dtype=complex),
}

PHASES = (1, -1, 1j, -1j)

# single-factor products: _MUL[a, b] = (phase, c) with s_a s_b = phase * s_c
_MUL = {}
for _a in 'IXYZ':
    _MUL['I', _a] = (1, _a)
    _MUL[_a, 'I'] = (1, _a)
    _MUL[_a, _a] = (1, 'I')
for _a, _b, _c in (('X', 'Y', 'Z'), ('Y', 'Z', 'X'), ('Z', 'X', 'Y')):
    _MUL[_a, _b] = (1j, _c)
    _MUL[_b, _a] = (-1j, _c)


@functools.lru_cache(maxsize=None)
def _bare_matrix(factors):
    m = np.array([[1.0 + 0j]])
    for f in factors:
        m = np.kron(m, PAULI_1Q[f])
    m.flags.writeable = False
    return m


def pauli_matrix(factors, phase=1):
    """Materialise ``phase * factors`` as a dense complex matrix."""
    return phase * _bare_matrix(factors)


@dataclass(frozen=True)
class PauliString:
    """A phased Pauli string, e.g. ``PauliString('ZY', 1j)`` for i*ZY.

    The bare (phase 1) string is always Hermitian and unitary; phases
    +-i flip Hermitian to anti-Hermitian.
    """

    factors: str
    phase: complex = 1

    def __post_init__(self):
        if not self.factors or any(f not in 'IXYZ' for f in self.factors):
            raise ValueError(f"invalid Pauli factors {self.factors!r}")
        if self.phase not in PHASES:
            raise ValueError(f"phase must be one of {PHASES}, got {self.phase!r}")
        object.__setattr__(self, 'phase', complex(self.phase))

    @property
    def n(self):
        return 2 ** len(self.factors)

    @property
    def y_count(self):
        return self.factors.count('Y')

    def matrix(self):
        return pauli_matrix(self.factors, self.phase)

    def is_hermitian(self):
        return self.phase.imag == 0

    def conjugated(self):
        """Entrywise complex conjugate (still a Pauli string)."""
        sign = -1 if self.y_count % 2 else 1
        return PauliString(self.factors, np.conj(self.phase) * sign)

    def real_phased(self):
        """The representative of the phase class with a real matrix.

        A bare string is real iff it contains an even number of Y factors;
        an odd count is cured by one factor of i.
        """
        return PauliString(self.factors, 1j if self.y_count % 2 else 1)

    def __mul__(self, other):
        if not isinstance(other, PauliString):
            return NotImplemented
        if len(self.factors) != len(other.factors):
            raise ValueError("cannot multiply strings of different length")
        phase = self.phase * other.phase
        out = []
        for a, b in zip(self.factors, other.factors):
            p, c = _MUL[a, b]
            phase *= p
            out.append(c)
        return PauliString(''.join(out), phase)

    def __str__(self):
        prefix = {complex(1): '', complex(-1): '-',
                  complex(1j): 'i·', complex(-1j): '-i·'}
        return prefix[complex(self.phase)] + self.factors


def pauli_strings(k):
    """All 4^k factor strings of length k in lexicographic order (I<X<Y<Z)."""
    return (''.join(t) for t in itertools.product('IXYZ', repeat=k))


def _log2_side(n):
    k = n.bit_length() - 1
    if n <= 0 or 2 ** k != n:
        raise ValueError(f"matrix side {n} is not a power of two")
    return k


def pauli_decompose(m, tol=1e-12):
    """Expand a matrix in the bare Pauli-string basis.

    Returns a dict mapping factor strings to complex coefficients c_P with
    ``m = sum c_P P`` and ``c_P = tr(P^dag m) / n``; coefficients of
    magnitude <= tol * max(1, |m|) are dropped.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("pauli_decompose needs a square matrix")
    n = m.shape[0]
    k = _log2_side(n)
    cutoff = tol * max(1.0, max_abs(m))
    out = {}
    for factors in pauli_strings(k):
        c = np.trace(dagger(_bare_matrix(factors)) @ m) / n
        if abs(c) > cutoff:
            out[factors] = complex(c)
    return out


_TERM_RE = re.compile(
    r'^(?P<sign>[+-]?)\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)?\s*(?P<imag>[ij])?'
    r'\s*[*·]?\s*)?(?P<factors>[IXYZ]+)$')


def _parse_term(term):
    m = _TERM_RE.match(term.strip())
    if m is None:
        raise ValueError(f"cannot parse Pauli term {term!r}")
    coeff = complex(m.group('num')) if m.group('num') else 1.0
    if m.group('imag'):
        coeff *= 1j
    if m.group('sign') == '-':
        coeff = -coeff
    return coeff, m.group('factors')


def parse_pauli(text):
    """Parse a single phased string like 'i*ZY', '-YX' or 'XI'."""
    coeff, factors = _parse_term(text)
    if coeff not in PHASES:
        raise ValueError(f"{text!r} does not carry a unit phase from {PHASES}")
    return PauliString(factors, coeff)


def parse_pauli_sum(text, k=None):
    """Parse a sum of weighted strings ('0.5*XX - 0.5i*YZ + ZZ') to a matrix."""
    text = text.strip()
    if not text:
        raise ValueError("empty Pauli expression")
    # split on top-level +/- while keeping the sign with the term
    terms = re.findall(r'[+-]?[^+-]+', text.replace(' ', ''))
    parsed = [_parse_term(t) for t in terms]
    lengths = {len(f) for _, f in parsed}
    if len(lengths) != 1:
        raise ValueError(f"mixed string lengths in {text!r}")
    if k is not None and lengths != {k}:
        raise ValueError(f"expected strings of length {k} in {text!r}")
    length = lengths.pop()
    out = np.zeros((2 ** length, 2 ** length), dtype=complex)
    for coeff, factors in parsed:
        out += coeff * _bare_matrix(factors)
    return out
