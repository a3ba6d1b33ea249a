"""Exact shift-enabled graph analysis and sparse polynomial graph filters.

Matrices are nested sequences of ints, ``fractions.Fraction`` or strings
like ``"3/4"``; exact results come back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core

__version__ = _core.__version__

__all__ = [
    "analyze",
    "apply_poly_horner",
    "charpoly",
    "commutant_basis",
    "commutant_dimension",
    "commutes",
    "conversion_search",
    "filter_class_sample",
    "find_nonrepresentable_witness",
    "is_shift_enabled",
    "minpoly",
    "represent_filter",
    "run_counterexample",
    "spmv",
]


def _enc(m):
    return [[str(Fraction(v)) for v in row] for row in m]


def _dec_vec(v):
    return [Fraction(x) for x in v]


def _dec(m):
    return [_dec_vec(row) for row in m]


def charpoly(s):
    """Ascending coefficients of det(x I - S)."""
    return _dec_vec(_core.charpoly(_enc(s)))


def minpoly(s):
    return _dec_vec(_core.minpoly(_enc(s)))


def is_shift_enabled(s):
    return _core.is_shift_enabled(_enc(s))


def analyze(s):
    return json.loads(_core.analyze_json(_enc(s)))


def commutant_dimension(s):
    return _core.commutant_dimension(_enc(s))


def commutant_basis(s):
    return [_dec(x) for x in _core.commutant_basis(_enc(s))]


def commutes(h, s):
    return _core.commutes(_enc(h), _enc(s))


def represent_filter(h, s):
    """Verdict dict; ``coeffs`` come back as Fractions when representable."""
    out = json.loads(_core.represent_json(_enc(h), _enc(s)))
    if out["coeffs"] is not None:
        out["coeffs"] = _dec_vec(out["coeffs"])
    return out


def find_nonrepresentable_witness(s):
    w = _core.find_nonrepresentable_witness(_enc(s))
    return None if w is None else _dec(w)


def filter_class_sample(alpha, q, h, s):
    """alpha * H + q(S) with q given by ascending coefficients."""
    return _dec(_core.filter_class_sample(str(Fraction(alpha)), [str(Fraction(c)) for c in q], _enc(h), _enc(s)))


def conversion_search(s, h, samples=1000, seed=42, threads=1):
    return json.loads(_core.conversion_search_json(_enc(s), _enc(h), samples, seed, threads))


def run_counterexample(samples=1000, seed=42, tamper=False):
    return json.loads(_core.counterexample_json(samples, seed, tamper))


def _csr(s):
    if hasattr(s, "tocsr"):
        c = s.tocsr()
        c.sort_indices()
        c.sum_duplicates()
        return c.shape[0], c.indptr.tolist(), c.indices.tolist(), c.data.astype(float).tolist()
    n = len(s)
    indptr, indices, data = [0], [], []
    for row in s:
        for j, v in enumerate(row):
            if v != 0:
                indices.append(j)
                data.append(float(v))
        indptr.append(len(indices))
    return n, indptr, indices, data


def spmv(s, x):
    """S x for a dense nested list or a scipy sparse matrix."""
    return _core.spmv_csr(*_csr(s), [float(v) for v in x])


def apply_poly_horner(s, coeffs, x):
    return _core.apply_poly_horner_csr(*_csr(s), [float(c) for c in coeffs], [float(v) for v in x])
