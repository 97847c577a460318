"""Named diagrams and presentations used as fixtures and CLI shortcuts."""

from __future__ import annotations

from .gauss import GaussDiagram, parse_gauss_code
from .wirtinger import WirtingerData, recognize
from .words import Presentation, parse_presentation

CODES = {
    "unknot": "",
    "kink": "O1+ U1+",
    "trefoil": "O1- U2- O3- U1- O2- U3-",
    "trefoil_right": "O1+ U2+ O3+ U1+ O2+ U3+",
    "figure_eight": "O1- U2- O3+ U4+ O2- U1- O4+ U3+",
}

PRESENTATIONS = {
    # four-arc presentation realized by diagrams with equal peripheral data
    # but different brackets
    "trefoil_group_4": "gens: t1 t2 t3 t4 ; rels: t2^-1 t1^t4, t3^-1 t2^(t4^-1), t4^-1 t3^(t2^-1), t1^-1 t4^t2",
    "trefoil_2gen": "gens: t2 t4 ; rels: t2 t4 t2 (t4 t2 t4)^-1",
    "trefoil_chain": "gens: a b c ; rels: b = a^c, c = b^a",
    "gordon_k2": "gens: t z w ; rels: z = t^((t^-1 z)^-2), w = t^((t^-1 w)^-2), t = t^(w^-1 t z^-1)",
    "gordon_k3": "gens: t z w ; rels: z = t^((t^-1 z)^-3), w = t^((t^-1 w)^-3), t = t^(w^-1 t z^-1)",
    "bms": "gens: a b ; rels: b = a^-1 b^2 a b^-2 a, b = [b a^-1, a^-1 b]^-1 b [b a^-1, a^-1 b]",
    "fox": "gens: x y ; rels: y = x^(y^-1 x), x = y^(x y^-1)",
    "kink": "gens: t1 ; rels: t1^-1 t1^t1",
    "unknot": "gens: t ; rels:",
}


def code(name: str) -> GaussDiagram:
    return parse_gauss_code(CODES[name])


def presentation(name: str) -> Presentation:
    return parse_presentation(PRESENTATIONS[name])


def wirtinger(name: str) -> WirtingerData:
    return recognize(presentation(name))
