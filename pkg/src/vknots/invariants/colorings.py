"""Fox n-colorings: homomorphisms to the dihedral quandle of Z/n.

A coloring assigns ``c_k`` in Z/n to each generator.  Conjugating by a
letter ``x^(+-1)`` acts as the reflection ``c -> 2 col(x) - c``, so each
Wirtinger relator ``t_i = t_j^w`` is one linear equation.  Solutions are
counted from the Smith form of the equation matrix.
"""

from __future__ import annotations

from math import gcd

from ..errors import NotWirtinger, NotWirtingerShape, NotConjugate
from ..gauss import GaussDiagram
from ..homology import IntMatrix, smith_normal_form
from ..wirtinger import WirtingerData, recognize
from ..words import Presentation


def _wirtinger(obj) -> WirtingerData:
    if isinstance(obj, WirtingerData):
        return obj
    if isinstance(obj, GaussDiagram):
        from ..correspondence import group_of_diagram

        return group_of_diagram(obj)
    if isinstance(obj, Presentation):
        try:
            return recognize(obj)
        except (NotWirtingerShape, NotConjugate) as exc:
            raise NotWirtinger(str(exc)) from exc
    raise TypeError(f"cannot color {type(obj).__name__}")


def coloring_matrix(w: WirtingerData) -> IntMatrix:
    """One row per relator: coefficients of ``c_i - (t_j colored through w)``."""
    n = len(w.generators)
    index = {g: k for k, g in enumerate(w.generators)}
    rows = []
    for s in w.shapes:
        form = [0] * n  # color of t_j^w as a linear form in the c_k
        form[s.j] = 1
        for name, _ in s.w.letters:
            form = [-x for x in form]
            form[index[name]] += 2
        row = [-x for x in form]
        row[s.i] += 1
        rows.append(row)
    return IntMatrix.from_rows(rows, n)


def count_solutions_mod(m: IntMatrix, n: int) -> int:
    """Number of ``x`` in ``(Z/n)^cols`` with ``m x = 0 mod n``."""
    snf = smith_normal_form(m)
    diag = snf.diagonal
    count = 1
    for k in range(m.cols):
        d = diag[k] if k < len(diag) else 0
        count *= gcd(d, n)  # gcd(0, n) = n
    return count


def count_colorings(obj, n: int) -> int:
    if n < 2:
        raise ValueError("modulus must be >= 2")
    w = _wirtinger(obj)
    if not w.shapes:
        return n ** len(w.generators)
    return count_solutions_mod(coloring_matrix(w), n)
