"""Mean-field inversion of Ising couplings from spin time series."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from ..graph import pseudoinverse
from .base import BaseReconstructor

_MAGNETIZATION_GUARD = 1e-8


class MeanFieldIsingReconstructor(BaseReconstructor):
    """Infer couplings from {-1, +1} spin data by mean-field inversion.

    Both variants start from the connected correlation matrix
    ``C_ij = <s_i s_j> - m_i m_j`` and its pseudoinverse P.

    * ``nmf``: naive mean field, J_ij = -P_ij.
    * ``tap``: adds the Onsager reaction correction by solving
      ``2 m_i m_j J^2 + J + P_ij = 0`` per pair, taking the root
      ``J = (-1 + sqrt(1 - 8 m_i m_j P_ij)) / (4 m_i m_j)`` and falling
      back to the naive value when the magnetization product is tiny or
      the discriminant is negative.

    The returned weights are symmetrized: (J + J') / 2 with a zero diagonal.
    """

    method_name = "mean_field_ising"
    directed = False

    def __init__(self, variant: str = "tap"):
        self.variant = variant

    def _reconstruct(self, values):
        if self.variant not in ("nmf", "tap"):
            raise ParameterError(f"variant must be 'nmf' or 'tap', got {self.variant!r}")
        if not np.all((values == 1.0) | (values == -1.0)):
            raise ParameterError("mean-field Ising inversion requires entries in {-1, +1}")
        length = values.shape[1]
        magnet = values.mean(axis=1)
        corr = (values @ values.T) / length - np.outer(magnet, magnet)
        corr = (corr + corr.T) / 2.0
        prec = pseudoinverse(corr)

        couplings = -prec
        if self.variant == "tap":
            mm = np.outer(magnet, magnet)
            disc = 1.0 - 8.0 * mm * prec
            usable = (np.abs(mm) >= _MAGNETIZATION_GUARD) & (disc >= 0.0)
            tap = (-1.0 + np.sqrt(np.where(usable, disc, 1.0))) / \
                (4.0 * np.where(usable, mm, 1.0))
            couplings = np.where(usable, tap, couplings)

        w = (couplings + couplings.T) / 2.0
        np.fill_diagonal(w, 0.0)
        return w, {}
