"""Momentum-polynomial matrix Hamiltonians and the built-in Dirac zoo.

A model is a sum of momentum monomials with constant Hermitian matrix
coefficients,

    H(p) = sum_a  M_a * p^a  +  mass * B,

where ``a`` ranges over non-constant exponent tuples and ``B`` is the mass
matrix.  The built-in zoo covers the free Dirac Hamiltonians H(p) = v.p + m B
in one, two and three spatial dimensions, plus the two-flavour
two-dimensional model, with the velocity and mass matrices chosen so that
they pairwise anticommute and square to one (hence E = +-sqrt(|p|^2 + m^2)).

The momentum is an ordinary real vector throughout (plane-wave basis); only
the coefficient matrices are operators.
"""

import json
from dataclasses import dataclass, replace

import numpy as np

from .linalg import as_matrix, dagger, max_abs, is_hermitian
from .paulis import pauli_matrix, parse_pauli_sum

__all__ = ['HamiltonianModel', 'ZOO_NAMES', 'zoo', 'evaluate', 'spectrum',
           'eigenspinor', 'spin_z', 'rotation_residual', 'rotation_generator_2pi',
           'rotation_matrix', 'model_from_dict', 'load_model', 'DegeneratePointError']


class DegeneratePointError(ValueError):
    """Raised when an eigenspinor is requested at a degenerate point."""


def _readonly(m):
    m = np.array(m, dtype=complex)
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class HamiltonianModel:
    """Immutable momentum-polynomial Hamiltonian with a scalar mass knob.

    Attributes
    ----------
    name : str
    d : int
        Spatial dimension (1, 2 or 3).
    n : int
        Matrix side.
    kinetic : tuple of (exponents, matrix)
        Non-constant terms; exponents is a length-d tuple of non-negative
        integers with total degree 1 or 2.
    mass_matrix : ndarray or None
        Matrix multiplying the mass in the constant term.
    mass : float
        Non-negative coefficient of the constant term.
    """

    name: str
    d: int
    n: int
    kinetic: tuple
    mass_matrix: object = None
    mass: float = 1.0

    def __post_init__(self):
        if self.d not in (1, 2, 3):
            raise ValueError(f"spatial dimension must be 1, 2 or 3, got {self.d}")
        if self.mass < 0:
            raise ValueError("mass must be non-negative")
        kin = []
        for expo, m in self.kinetic:
            expo = tuple(int(e) for e in expo)
            if len(expo) != self.d or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent tuple {expo} for d={self.d}")
            deg = sum(expo)
            if not 1 <= deg <= 2:
                raise ValueError(f"kinetic term degree {deg} unsupported")
            m = as_matrix(m)
            if m.shape != (self.n, self.n):
                raise ValueError(f"coefficient shape {m.shape} != ({self.n}, {self.n})")
            if not is_hermitian(m):
                raise ValueError(f"coefficient of p^{expo} is not Hermitian")
            kin.append((expo, _readonly(m)))
        object.__setattr__(self, 'kinetic', tuple(kin))
        if self.mass_matrix is not None:
            b = as_matrix(self.mass_matrix)
            if b.shape != (self.n, self.n):
                raise ValueError("mass matrix has wrong shape")
            if not is_hermitian(b):
                raise ValueError("mass matrix is not Hermitian")
            object.__setattr__(self, 'mass_matrix', _readonly(b))

    def terms(self, massless=False):
        """All (exponents, matrix) pairs, with the mass folded in.

        The constant term ``mass * mass_matrix`` is included unless
        ``massless`` is set or it vanishes.
        """
        out = list(self.kinetic)
        if not massless and self.mass_matrix is not None and self.mass != 0:
            out.append(((0,) * self.d, self.mass * self.mass_matrix))
        return tuple(out)

    def with_mass(self, mass):
        return replace(self, mass=float(mass))

    def velocity(self, axis):
        """Coefficient matrix of the monomial p_axis (0-based), or None."""
        want = tuple(1 if j == axis else 0 for j in range(self.d))
        for expo, m in self.kinetic:
            if expo == want:
                return m
        return None


ZOO_NAMES = ('dirac_1p1', 'dirac_2p1', 'dirac_2f_2p1', 'dirac_3p1')


def zoo(name, mass=1.0):
    """Built-in Dirac models.

    ======================  ===  ===  =======================================
    name                     d    n   matrices
    ======================  ===  ===  =======================================
    dirac_1p1                1    2   v = X, B = Z
    dirac_2p1                2    2   v = (X, Y), B = Z
    dirac_2f_2p1             2    4   v = (XI, YI), B = ZZ  (Dirac (x) flavour)
    dirac_3p1                3    4   v = (XX, XY, XZ), B = ZI  (only v_y is
                                      imaginary)
    ======================  ===  ===  =======================================

    The mass is a free parameter, defaulting to 1; ``zoo(name, mass=0)`` is
    the massless model.
    """
    if name == 'dirac_1p1':
        kinetic = [((1,), pauli_matrix('X'))]
        beta, n, d = pauli_matrix('Z'), 2, 1
    elif name == 'dirac_2p1':
        kinetic = [((1, 0), pauli_matrix('X')), ((0, 1), pauli_matrix('Y'))]
        beta, n, d = pauli_matrix('Z'), 2, 2
    elif name == 'dirac_2f_2p1':
        kinetic = [((1, 0), pauli_matrix('XI')), ((0, 1), pauli_matrix('YI'))]
        beta, n, d = pauli_matrix('ZZ'), 4, 2
    elif name == 'dirac_3p1':
        kinetic = [((1, 0, 0), pauli_matrix('XX')),
                   ((0, 1, 0), pauli_matrix('XY')),
                   ((0, 0, 1), pauli_matrix('XZ'))]
        beta, n, d = pauli_matrix('ZI'), 4, 3
    else:
        raise ValueError(f"unknown model {name!r}; valid names: {', '.join(ZOO_NAMES)}")
    return HamiltonianModel(name=name, d=d, n=n, kinetic=tuple(kinetic),
                            mass_matrix=beta, mass=float(mass))


def evaluate(model, p, massless=False):
    """H(p) as a dense Hermitian matrix."""
    p = np.asarray(p, dtype=float).reshape(-1)
    if len(p) != model.d:
        raise ValueError(f"momentum has length {len(p)}, model needs {model.d}")
    h = np.zeros((model.n, model.n), dtype=complex)
    for expo, m in model.terms(massless=massless):
        h += m * np.prod(p ** np.array(expo))
    return h


def spectrum(model, p, massless=False):
    """Sorted (ascending) eigenvalues of H(p)."""
    return np.sort(np.linalg.eigvalsh(evaluate(model, p, massless=massless)))


def _fix_phase(v, tol=1e-12):
    # first nonzero component made real positive, for reproducible phases
    for c in v:
        if abs(c) > tol:
            return v * (abs(c) / c)
    return v


def eigenspinor(model, branch, p, massless=False):
    """Normalised eigenvector of H(p) on the positive or negative branch.

    For the single-flavour two-dimensional massless model the closed form
    (E_branch, p_x + i p_y) is used (requiring |p| > 0); any other model is
    diagonalised numerically, returning one eigenvector of the branch (the
    lowest / highest eigenvalue).  The phase is fixed by making the first
    nonzero component real positive.
    """
    if branch in ('+', 1):
        sign = +1
    elif branch in ('-', -1):
        sign = -1
    else:
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    p = np.asarray(p, dtype=float).reshape(-1)
    h = evaluate(model, p, massless=massless)
    if max_abs(h) <= 1e-14:
        raise DegeneratePointError(
            "H(p) vanishes identically at this point; no preferred eigenbasis")
    eff_massless = massless or model.mass == 0
    if model.d == 2 and model.n == 2 and eff_massless:
        e = sign * float(np.hypot(p[0], p[1]))
        spinor = np.array([e, p[0] + 1j * p[1]], dtype=complex)
        return _fix_phase(spinor / np.linalg.norm(spinor))
    w, v = np.linalg.eigh(h)
    idx = len(w) - 1 if sign > 0 else 0
    return _fix_phase(v[:, idx])


def spin_z(model):
    """Intrinsic angular momentum about z: (v_x v_y - v_y v_x) / 4i.

    Not defined in one spatial dimension (the particle is spinless there).
    """
    if model.d < 2:
        raise ValueError("spin_z requires at least two spatial dimensions")
    vx, vy = model.velocity(0), model.velocity(1)
    if vx is None or vy is None:
        raise ValueError("model lacks linear p_x / p_y terms")
    return (vx @ vy - vy @ vx) / 4j


def rotation_matrix(d, phi):
    """Momentum map matching conjugation by exp(i phi S_z).

    Rotates (p_x, p_y) clockwise by phi and leaves any remaining component
    fixed: conjugating H(p) with exp(i phi S_z) equals H(R p) for the zoo
    models.
    """
    r = np.eye(d)
    c, s = np.cos(phi), np.sin(phi)
    r[0, 0], r[0, 1], r[1, 0], r[1, 1] = c, s, -s, c
    return r


def _expm_hermitian_i(h, t):
    # exp(i t h) for Hermitian h via its eigendecomposition
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * t * w)) @ dagger(v)


def rotation_residual(model, phi, p, massless=False):
    """Max-norm residual of exp(i phi S_z) H(p) exp(-i phi S_z) - H(R(phi) p)."""
    u = _expm_hermitian_i(spin_z(model), phi)
    lhs = u @ evaluate(model, p, massless=massless) @ dagger(u)
    rhs = evaluate(model, rotation_matrix(model.d, phi) @ np.asarray(p, dtype=float),
                   massless=massless)
    return max_abs(lhs - rhs)


def rotation_generator_2pi(model):
    """The matrix exp(2 pi i S_z).

    Equals -1 for every spin-1/2 zoo model: the symmetry group is a double
    group.  The orbital factor exp(2 pi i L_z) is identically +1 (integer
    spectrum) and is not materialised here.
    """
    return _expm_hermitian_i(spin_z(model), 2 * np.pi)


def _term_matrix(entry, n):
    if isinstance(entry, str):
        m = parse_pauli_sum(entry)
    else:
        flat = list(entry)
        if len(flat) != n * n:
            raise ValueError(f"expected {n * n} [re, im] pairs, got {len(flat)}")
        vals = [complex(re, im) for re, im in flat]
        m = np.array(vals, dtype=complex).reshape(n, n)
    if m.shape != (n, n):
        raise ValueError(f"term matrix has side {m.shape[0]}, model declares {n}")
    return m


def model_from_dict(data):
    """Build a model from its JSON document.

    Schema::

        {"name": str, "d": int, "n": int, "mass": float,
         "terms": [{"exponents": [int, ...],
                    "matrix": "i*ZY"          # Pauli expression, or
                              [[re, im], ...] # row-major entries
                   }, ...]}

    Terms with all-zero exponents define the mass matrix (summed if
    repeated); the evaluated constant term is ``mass`` times that matrix.
    """
    name = data.get('name', 'custom')
    d, n = int(data['d']), int(data['n'])
    mass = float(data.get('mass', 1.0))
    kinetic = {}
    mass_matrix = None
    for term in data['terms']:
        expo = tuple(int(e) for e in term['exponents'])
        m = _term_matrix(term['matrix'], n)
        if sum(expo) == 0:
            mass_matrix = m if mass_matrix is None else mass_matrix + m
        else:
            kinetic[expo] = kinetic.get(expo, 0) + m
    return HamiltonianModel(name=name, d=d, n=n,
                            kinetic=tuple(sorted(kinetic.items())),
                            mass_matrix=mass_matrix, mass=mass)


def load_model(source, mass=None):
    """Resolve a model from a zoo name, JSON file path, or parsed dict."""
    if isinstance(source, dict):
        model = model_from_dict(source)
    elif source in ZOO_NAMES:
        model = zoo(source)
    else:
        with open(source) as fh:
            model = model_from_dict(json.load(fh))
    if mass is not None:
        model = model.with_mass(mass)
    return model
