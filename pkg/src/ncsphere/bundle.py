"""Monopole projectors built from the translation map, and their Chern numbers.

For charge ``n`` write ``ell(n) = sum_i l_i (x) r_i`` (``i`` = power of b);
the projector has entries ``e_ij = r_i l_j``.  Idempotency follows from
``sum_i l_i r_i = 1``.  For ``|n| >= 2`` the binomial weights sit on the
left legs, so ``e`` is idempotent but not self-adjoint.

The first Chern number is computed numerically on the classical sphere
(``lam = 1``) with ``a = cos(theta/2) e^{i psi}``, ``b = sin(theta/2)``:

    c1 = 1/(2 pi i) * integral Tr(E [d_theta E, d_psi E]) dtheta dpsi

on a midpoint grid.  The theta derivative is the cell-centred difference
``(E(theta + h/2) - E(theta - h/2)) / h``; its O(h^2) error cancels the
midpoint-rule error for the charge-one integrand.  The periodic psi
derivative uses the fourth-order five-point central stencil on the same
half-spacing.  With this orientation charge +1 gives c1 = -1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .galois import ell_terms
from .ncalg import Element, eval_classical, is_coinvariant, one, star, x_minus, x_plus, z, zero
from .parsing import print_b_expr, print_expr
from .report import Report


@dataclass(frozen=True)
class Projector:
    charge: int
    entries: tuple  # tuple of row tuples of Element

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "Projector") -> "Projector":
        k = self.size
        rows = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = zero
                for t in range(k):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            rows.append(tuple(row))
        return Projector(self.charge, tuple(rows))

    def adjoint(self) -> "Projector":
        k = self.size
        return Projector(self.charge, tuple(tuple(star(self.entries[j][i]) for j in range(k)) for i in range(k)))

    def trace(self) -> Element:
        acc = zero
        for i in range(self.size):
            acc = acc + self.entries[i][i]
        return acc

    def show(self, b_alphabet: bool = True) -> str:
        fmt = print_b_expr if b_alphabet else print_expr
        return "\n".join("[ " + " | ".join(fmt(e) for e in row) + " ]" for row in self.entries)

    def evaluate(self, theta, psi) -> np.ndarray:
        """Entrywise classical evaluation; shape ``broadcast(theta, psi) + (k, k)``."""
        theta, psi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(psi, float))
        k = self.size
        out = np.empty(theta.shape + (k, k), dtype=complex)
        for i in range(k):
            for j in range(k):
                out[..., i, j] = eval_classical(self.entries[i][j], theta, psi)
        return out


def projector(n: int) -> Projector:
    legs = ell_terms(n)
    rows = tuple(tuple(r * l for l, _ in legs) for _, r in legs)
    return Projector(n, rows)


def bott_projector() -> Projector:
    """The charge-one projector written directly in z, x+, x-."""
    return Projector(1, ((z, x_minus), (x_plus, one - z)))


def verify_projector(n: int) -> Report:
    e = projector(n)
    params = {"charge": n}
    bad = [(i, j) for i in range(e.size) for j in range(e.size) if not is_coinvariant(e[i, j])]
    if bad:
        return Report("projector", params, "fail", counterexample=f"entries {bad} not coinvariant")
    sq = e @ e
    bad = [(i, j) for i in range(e.size) for j in range(e.size) if sq[i, j] != e[i, j]]
    if bad:
        return Report("projector", params, "fail", counterexample=f"e^2 != e at entries {bad}")
    if e.trace() != one:
        return Report("projector", params, "fail", counterexample=f"trace = {print_expr(e.trace())}")
    if abs(n) == 1:
        adj = e.adjoint()
        bad = [(i, j) for i in range(e.size) for j in range(e.size) if adj[i, j] != e[i, j]]
        if bad:
            return Report("projector", params, "fail", counterexample=f"e* != e at entries {bad}")
    return Report("projector", params, "pass", dims={"size": e.size},
                  extra={"self_adjoint_checked": abs(n) == 1})


# --- numerics ------------------------------------------------------------------------


def _psi_derivative(e: Projector, theta, psi, h):
    # five-point central stencil on spacing h/2
    f = lambda x: e.evaluate(theta, np.mod(x, 2 * np.pi))  # noqa: E731
    return (-f(psi + h) + 8 * f(psi + h / 2) - 8 * f(psi - h / 2) + f(psi - h)) / (6 * h)


def chern_number(n: int, grid: int, rows_per_chunk: int = 64) -> float:
    """First Chern number of ``projector(n)`` by grid quadrature (see module doc)."""
    if grid < 8:
        raise ValueError("grid must be >= 8")
    e = projector(n)
    for row in e.entries:
        for entry in row:
            if not is_coinvariant(entry):
                raise ValueError("projector entries must be coinvariant")
    ht = np.pi / grid
    hp = 2 * np.pi / grid
    theta_mid = (np.arange(grid) + 0.5) * ht
    psi_mid = (np.arange(grid) + 0.5) * hp
    row_sums = np.empty(grid, dtype=complex)
    for start in range(0, grid, rows_per_chunk):
        th = theta_mid[start : start + rows_per_chunk]
        T, P = np.meshgrid(th, psi_mid, indexing="ij")
        E = e.evaluate(T, P)
        Et = (e.evaluate(T + ht / 2, P) - e.evaluate(T - ht / 2, P)) / ht
        Ep = _psi_derivative(e, T, P, hp)
        comm = Et @ Ep - Ep @ Et
        integrand = np.einsum("...ij,...ji->...", E, comm)
        row_sums[start : start + len(th)] = integrand.sum(axis=1)
    total = row_sums.sum() * ht * hp
    return float((total / (2j * np.pi)).real)


def projector_defects(n: int, grid: int) -> dict:
    """Largest ``|E^2 - E|`` and, for ``|n| = 1``, ``|E - E^H|`` over the midpoint grid."""
    e = projector(n)
    theta = (np.arange(grid) + 0.5) * np.pi / grid
    psi = (np.arange(grid) + 0.5) * 2 * np.pi / grid
    T, P = np.meshgrid(theta, psi, indexing="ij")
    E = e.evaluate(T, P)
    out = {"idempotency": float(np.abs(E @ E - E).max())}
    if abs(n) == 1:
        out["hermiticity"] = float(np.abs(E - np.conj(np.swapaxes(E, -1, -2))).max())
    return out


def chern_report(n: int, grid: int, tol: float = 1e-4) -> Report:
    """Chern number with its nearest integer and the orientation sign (c1 of charge 1)."""
    c1 = chern_number(n, grid)
    sign = int(np.sign(round(chern_number(1, grid)))) if n != 1 else int(np.sign(round(c1)))
    nearest = int(round(c1))
    ok = abs(c1 - nearest) < tol and nearest == sign * n
    params = {"charge": n, "grid": grid}
    extra = {"c1": round(c1, 10), "nearest": nearest, "sign": sign, "deviation": float(f"{abs(c1 - nearest):.3e}")}
    return Report("chern", params, "pass" if ok else "fail", extra=extra,
                  counterexample=None if ok else f"c1 = {c1!r}, expected {sign * n}")
