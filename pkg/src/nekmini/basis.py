"""One-dimensional Gauss-Lobatto-Legendre (GLL) machinery.

Nodes, quadrature weights, the nodal differentiation matrix, and
interpolation matrices between node sets on the reference interval
[-1, 1].  Everything here is computed once in float64 at setup time and
cached; instances are immutable and safe to share across threads.
"""

import numpy as np

__all__ = ["SpectralBasis", "gll_rule", "interp_matrix", "InvalidOrderError"]


class InvalidOrderError(ValueError):
    """Raised when a polynomial order outside the supported range is requested."""


def legendre(n, x):
    """Evaluate P_n and its first two derivatives at x (scalar or array).

    Three-term recurrence; stable for the orders used here (n <= 64).
    """
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    d0 = np.zeros_like(x)
    s0 = np.zeros_like(x)
    if n == 0:
        return p0, d0, s0
    p1, d1, s1 = x.copy(), np.ones_like(x), np.zeros_like(x)
    for k in range(2, n + 1):
        a = (2.0 * k - 1.0) / k
        b = (k - 1.0) / k
        p2 = a * x * p1 - b * p0
        d2 = a * (p1 + x * d1) - b * d0
        s2 = a * (2.0 * d1 + x * s1) - b * s0
        p0, d0, s0 = p1, d1, s1
        p1, d1, s1 = p2, d2, s2
    return p1, d1, s1


def gll_rule(N):
    """GLL nodes and weights for order N (N+1 points on [-1, 1]).

    Nodes are the roots of (1 - r^2) P'_N(r), found by Newton iteration
    from Chebyshev-Lobatto initial guesses; weights are
    2 / (N (N+1) P_N(xi)^2).
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise InvalidOrderError(f"polynomial order must be an integer >= 1, got {N!r}")
    N = int(N)
    x = -np.cos(np.pi * np.arange(N + 1) / N)  # Chebyshev-Lobatto guesses
    for _ in range(100):
        _, d1, d2 = legendre(N, x)
        # f = (1-x^2) P'_N ;  f' = -2x P'_N + (1-x^2) P''_N
        f = (1.0 - x * x) * d1
        fp = -2.0 * x * d1 + (1.0 - x * x) * d2
        # endpoints are exact roots; avoid 0/0 there
        fp[0] = fp[-1] = 1.0
        f[0] = f[-1] = 0.0
        dx = f / fp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    x[0], x[-1] = -1.0, 1.0
    x = 0.5 * (x - x[::-1])  # enforce exact symmetry
    p, _, _ = legendre(N, x)
    w = 2.0 / (N * (N + 1) * p * p)
    w = 0.5 * (w + w[::-1])
    return x, w


def _barycentric_weights(nodes):
    n = len(nodes)
    w = np.ones(n)
    for i in range(n):
        w[i] = 1.0 / np.prod(nodes[i] - np.delete(nodes, i))
    return w


def diff_matrix(nodes):
    """Nodal differentiation matrix: D[a, i] = h_i'(nodes[a]).

    h_i are the cardinal Lagrange polynomials on `nodes`.  Diagonal
    entries are set to the negated row sums so each row sums to zero
    exactly (derivative of the constant function vanishes).
    """
    nodes = np.asarray(nodes, dtype=float)
    n = len(nodes)
    w = _barycentric_weights(nodes)
    D = np.zeros((n, n))
    for a in range(n):
        for i in range(n):
            if a != i:
                D[a, i] = (w[i] / w[a]) / (nodes[a] - nodes[i])
        D[a, a] = -np.sum(D[a, :])
    return D


def lagrange_interp_matrix(from_nodes, to_nodes):
    """Matrix J with J[a, i] = h_i(to_nodes[a]) for h_i cardinal on from_nodes.

    Uses the second barycentric form; evaluation points coinciding with a
    source node produce an exact 0/1 row.
    """
    from_nodes = np.asarray(from_nodes, dtype=float)
    to_nodes = np.asarray(to_nodes, dtype=float)
    w = _barycentric_weights(from_nodes)
    J = np.zeros((len(to_nodes), len(from_nodes)))
    for a, y in enumerate(to_nodes):
        diff = y - from_nodes
        hit = np.abs(diff) < 1e-14
        if np.any(hit):
            J[a, np.argmax(hit)] = 1.0
        else:
            t = w / diff
            J[a, :] = t / np.sum(t)
    return J


class SpectralBasis:
    """GLL nodes, weights, and the differentiation matrix for one order.

    Attributes:
        order: polynomial order N (>= 1).
        nodes: N+1 GLL points, strictly increasing, endpoints at -1, +1.
        weights: positive quadrature weights summing to 2.
        diff: (N+1) x (N+1) differentiation matrix.
    """

    def __init__(self, order):
        nodes, weights = gll_rule(order)
        self.order = int(order)
        self.nodes = nodes
        self.weights = weights
        self.diff = diff_matrix(nodes)
        self.nodes.flags.writeable = False
        self.weights.flags.writeable = False
        self.diff.flags.writeable = False

    @property
    def n(self):
        """Number of points, N + 1."""
        return self.order + 1

    def __repr__(self):
        return f"SpectralBasis(order={self.order})"

    _cache = {}

    @classmethod
    def get(cls, order):
        """Cached constructor; bases are immutable so sharing is safe."""
        b = cls._cache.get(order)
        if b is None:
            b = cls._cache[order] = cls(order)
        return b


class InterpMatrix:
    """Interpolation operator between two node sets on [-1, 1].

    values has shape (len(to_nodes), from_order + 1); rows sum to 1
    (constants are reproduced) and polynomials of degree <= from_order
    are reproduced exactly.
    """

    def __init__(self, from_order, to_order, values):
        self.from_order = from_order
        self.to_order = to_order
        self.values = values

    def __repr__(self):
        return f"InterpMatrix({self.from_order} -> {self.to_order})"


def interp_matrix(from_basis, to_nodes, to_order=None):
    """Interpolation matrix from a basis's nodes onto arbitrary points.

    `to_nodes` may be an array of points in [-1, 1] or another
    SpectralBasis, in which case its nodes are used.
    """
    if isinstance(to_nodes, SpectralBasis):
        to_order = to_nodes.order
        to_nodes = to_nodes.nodes
    to_nodes = np.asarray(to_nodes, dtype=float)
    if to_order is None:
        to_order = len(to_nodes) - 1
    values = lagrange_interp_matrix(from_basis.nodes, to_nodes)
    return InterpMatrix(from_basis.order, to_order, values)
