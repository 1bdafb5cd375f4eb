"""Built-in sessions for the worked examples."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .session import SessionFile, parse_session

SEC6 = """\
[ring]
char = 32003
vars = x, y, z
weights = 2, 2, 1
relations = x^2 + y^2 + z^4
dim = 2

[ideal I]
gens = x, y, z^2
Q = x, y

[ideal m]
gens = x, y, z

[module ImPsi]
kind = image
matrix = -z^2, 0, -y, x; 0, -z^2, x, y; x, y, 0, z^2

[module ImPhi]
kind = image
matrix = -z^2, 0, -y, x; 0, -z^2, x, y; -y, x, z^2, 0; x, y, 0, z^2

[module RI]
kind = quotient
of = I

[module R]
kind = free
rank = 1
"""

# f, g, h = x, y, z; Q = (x) is verified to be a reduction with I^2 = QI
EX26I = """\
[ring]
char = 32003
vars = x, y, z
relations = x^2 - y*z, y^2 - z*x, z^2 - x*y
dim = 1

[ideal I]
gens = x, y, z
Q = x

[module RI]
kind = quotient
of = I

[module R]
kind = free
rank = 1
"""

_NAMES = ["x", "y", "z", "w"]


def ex26ii_text(d: int, s: int, literal_odd: bool = False) -> str:
    """``K[z_1..z_{d+1}]/(z_1^2 + ... + z_d^2 + z_{d+1}^{2s})`` with
    ``I = (z_1..z_d, z_{d+1}^s)``.

    For even ``s`` the reduction is ``(z_1..z_d)``.  For odd ``s`` the
    displayed choice ``(z_2..z_d, z_{d+1}^t)``, ``s = 2t + 1``, is not inside
    ``I``; the corpus uses ``(z_2..z_d, z_{d+1}^s)`` unless ``literal_odd``.
    """
    v = _NAMES[:d + 1]
    last = v[d]
    rel = " + ".join("%s^2" % a for a in v[:d]) + " + %s^%d" % (last, 2 * s)
    if s % 2 == 0:
        Q = v[:d]
    else:
        Q = v[1:d] + ["%s^%d" % (last, s // 2 if literal_odd else s)]
    gens = v[:d] + ["%s^%d" % (last, s)]
    return "\n".join([
        "[ring]",
        "char = 32003",
        "vars = %s" % ", ".join(v),
        "weights = %s" % ", ".join([str(s)] * d + ["1"]),
        "relations = %s" % rel,
        "dim = %d" % d,
        "",
        "[ideal I]",
        "gens = %s" % ", ".join(gens),
        "Q = %s" % ", ".join(Q),
        "",
        "[module RI]",
        "kind = quotient",
        "of = I",
        "",
        "[module R]",
        "kind = free",
        "rank = 1",
        "",
    ] + ["[module Syz%d]\nkind = syzygy\nof = RI\nk = %d\n" % (k, k) for k in range(d, d + 2)])


EX26II = [(1, 1), (1, 2), (2, 2), (2, 3)]


def _texts() -> Dict[str, str]:
    out = {"sec6": SEC6, "ex2.6i": EX26I}
    for d, s in EX26II:
        out["ex2.6ii-d%ds%d" % (d, s)] = ex26ii_text(d, s)
    out["ex5.17"] = out["ex2.6ii-d1s2"]
    return out


CORPUS_IDS: List[str] = list(_texts())


def corpus_text(cid: str) -> str:
    texts = _texts()
    if cid not in texts:
        raise KeyError("unknown corpus id %r (known: %s)" % (cid, ", ".join(texts)))
    return texts[cid]


def load_corpus(cid: str) -> SessionFile:
    return parse_session(corpus_text(cid), name=cid)


def builtin_corpus() -> List[Tuple[str, SessionFile]]:
    return [(cid, load_corpus(cid)) for cid in CORPUS_IDS if cid != "ex5.17"]
