"""Figure-reproduction data: the standard curve families as CSV rows.

Five figures are supported:
  1  Shannon information I(n, x) for n = 0, 1, 2 over x in (0, 6]
  2  two-mode linear entropy vs lambda for (|a1|, |a2|) = (2,1), (1,1), (0.5,1)
  3  two-mode linear entropy vs |a1| at |a2| = 1 for lambda = 0.5, 1, 2
  4  even-cat linear entropy vs lambda for |a| = 0.5, 1, 2
  5  odd-cat linear entropy vs lambda for the same |a|

Lambda sweeps use the kerr family; the lambda = 0 endpoints come from the
closed-form limit states (the kerr constructor is singular there).
"""

from .csvio import rows_to_text
from .deformation import DeformationSpec
from .entanglement import cat_linear_entropy, kerr_zero_entropy, linear_entropy_series
from .entropy import displaced_fock_pmf, shannon_information

FIGURE_IDS = (1, 2, 3, 4, 5)


def grid(start, stop, step):
    """Inclusive deterministic float grid start, start+step, ..., <= stop."""
    out = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + 1e-9:
            return out
        out.append(round(v, 12))
        k += 1


LAMBDA_GRID = grid(0.02, 5.0, 0.02)
INFO_X_GRID = grid(0.02, 6.0, 0.02)
ALPHA1_GRID = grid(0.05, 4.0, 0.05)


def figure_header(fig_id):
    if fig_id == 1:
        return ["n", "x", "information"]
    if fig_id in (2, 3):
        return ["lambda", "abs_alpha1", "abs_alpha2", "entropy"]
    if fig_id in (4, 5):
        return ["lambda", "abs_alpha", "sign", "entropy"]
    raise ValueError(f"unknown figure id {fig_id}")


def figure_rows(fig_id, eps=1e-12, pmap=map):
    """All rows of one figure CSV, in fixed (curve, abscissa) order."""
    if fig_id == 1:
        rows = []
        for n in (0, 1, 2):
            infos = list(
                pmap(lambda x, n=n: shannon_information(
                    displaced_fock_pmf(n, x), 2), INFO_X_GRID)
            )
            rows.extend([n, x, i] for x, i in zip(INFO_X_GRID, infos))
        return rows

    if fig_id == 2:
        rows = []
        for a1, a2 in ((2.0, 1.0), (1.0, 1.0), (0.5, 1.0)):
            rows.append([0.0, a1, a2, kerr_zero_entropy(a1, a2)])
            vals = list(
                pmap(lambda lam, a1=a1, a2=a2: linear_entropy_series(
                    a1, a2, DeformationSpec.kerr(lam), eps), LAMBDA_GRID)
            )
            rows.extend([lam, a1, a2, s] for lam, s in zip(LAMBDA_GRID, vals))
        return rows

    if fig_id == 3:
        rows = []
        for lam in (0.5, 1.0, 2.0):
            spec = DeformationSpec.kerr(lam)
            vals = list(
                pmap(lambda a1, spec=spec: linear_entropy_series(
                    a1, 1.0, spec, eps), ALPHA1_GRID)
            )
            rows.extend([lam, a1, 1.0, s] for a1, s in zip(ALPHA1_GRID, vals))
        return rows

    if fig_id in (4, 5):
        sign = +1 if fig_id == 4 else -1
        rows = []
        for a in (0.5, 1.0, 2.0):
            rows.append([0.0, a, sign, 0.0 if sign == +1 else 0.5])
            vals = list(
                pmap(lambda lam, a=a: cat_linear_entropy(
                    a, DeformationSpec.kerr(lam), sign, eps), LAMBDA_GRID)
            )
            rows.extend([lam, a, sign, s] for lam, s in zip(LAMBDA_GRID, vals))
        return rows

    raise ValueError(f"unknown figure id {fig_id}")


def figure_csv_text(fig_id, eps=1e-12, audit=False, pmap=map):
    rows = figure_rows(fig_id, eps=eps, pmap=pmap)
    comments = []
    if audit:
        values = [row[-1] for row in rows]
        lo, hi = min(values), max(values)
        ok = lo >= -1e-12 and (fig_id == 1 or hi <= 1.0 + 1e-12)
        comments.append(
            f"audit,value_range,{lo:.17g},{hi:.17g},{'pass' if ok else 'fail'}"
        )
    return rows_to_text(figure_header(fig_id), rows, comments)
