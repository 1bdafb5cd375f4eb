"""Session files.

A session is a line-oriented text file with blocks::

    [ring]
    char = 32003
    vars = x, y, z
    weights = 2, 2, 1
    relations = x^2 + y^2 + z^4
    dim = 2

    [ideal I]
    gens = x, y, z^2
    Q = x, y

    [module ImPhi]
    kind = image
    matrix = -z^2, 0, -y, x; 0, -z^2, x, y; -y, x, z^2, 0; x, y, 0, z^2

Lists are comma separated, matrix rows are separated by ``;``.  ``#`` starts
a comment.  Module kinds and their keys:

==============  ==============================================================
``image``        ``matrix``: the column span, inside ``R^rows``
``presentation`` ``matrix``: the cokernel
``free``         ``rank``
``ideal``        ``of``: an ideal, viewed as a submodule of ``R``
``quotient``     ``of``: an ideal ``I``, giving ``R/I``
``syzygy``       ``of``, ``k``: ``Omega^k`` of a module or ideal
``linkage``      ``of``: ``lambda M``
``dual``         ``of``: ``M*``
``hom``          ``of = M, N``: ``Hom(M, N)``
==============  ==============================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..core.field import DEFAULT_PRIME, is_prime
from ..core.parse import ParseError, parse_poly
from ..matrix import Matrix
from ..modules import ModuleData, dual, hom_module, lambda_module, syzygy_module
from ..ring import AmbientRing, IdealData

MODULE_KINDS = {
    "image": ("matrix",),
    "presentation": ("matrix",),
    "free": ("rank",),
    "ideal": ("of",),
    "quotient": ("of",),
    "syzygy": ("of", "k"),
    "linkage": ("of",),
    "dual": ("of",),
    "hom": ("of",),
}


class SessionError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None):
        super().__init__(msg if line is None else "line %d: %s" % (line, msg))
        self.line = line


def _split(value: str, sep: str = ",") -> List[str]:
    return [s.strip() for s in value.split(sep) if s.strip()]


def _matrix_rows(value: str) -> List[List[str]]:
    return [_split(r) for r in value.split(";") if r.strip()]


@dataclass
class SessionFile:
    ring: Dict[str, str] = field(default_factory=dict)
    ideals: Dict[str, Dict[str, str]] = field(default_factory=dict)
    modules: Dict[str, Dict[str, str]] = field(default_factory=dict)
    name: str = ""

    # -- serialization ----------------------------------------------------------
    def to_text(self) -> str:
        out = ["[ring]"]
        out += ["%s = %s" % kv for kv in self.ring.items()]
        for name, blk in self.ideals.items():
            out += ["", "[ideal %s]" % name] + ["%s = %s" % kv for kv in blk.items()]
        for name, blk in self.modules.items():
            out += ["", "[module %s]" % name] + ["%s = %s" % kv for kv in blk.items()]
        return "\n".join(out) + "\n"

    def build(self, char: Optional[int] = None) -> "Workspace":
        return Workspace(self, char)


def parse_session(text: str, name: str = "") -> SessionFile:
    s = SessionFile(name=name)
    current = None
    seen_ring = False
    lines: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise SessionError("unterminated block header", lineno)
            head = line[1:-1].split()
            if head == ["ring"]:
                if seen_ring:
                    raise SessionError("duplicate [ring] block", lineno)
                seen_ring = True
                current = s.ring
            elif len(head) == 2 and head[0] in ("ideal", "module"):
                table = s.ideals if head[0] == "ideal" else s.modules
                if head[1] in s.ideals or head[1] in s.modules:
                    raise SessionError("name %r defined twice" % head[1], lineno)
                table[head[1]] = {}
                current = table[head[1]]
                lines[head[1]] = lineno
            else:
                raise SessionError("unknown block [%s]" % " ".join(head), lineno)
            continue
        if current is None:
            raise SessionError("key outside of a block", lineno)
        if "=" not in line:
            raise SessionError("expected 'key = value'", lineno)
        key, value = (t.strip() for t in line.split("=", 1))
        if key in current:
            raise SessionError("duplicate key %r" % key, lineno)
        current[key] = value
    _validate(s, lines)
    return s


def _validate(s: SessionFile, lines: Dict[str, int]):
    if not s.ring:
        raise SessionError("missing [ring] block")
    if "vars" not in s.ring:
        raise SessionError("ring requires vars")
    variables = _split(s.ring["vars"])
    p = int(s.ring.get("char", DEFAULT_PRIME))
    if not is_prime(p):
        raise SessionError("characteristic %d is not prime" % p)
    for f in _split(s.ring.get("relations", "")):
        _check_poly(f, variables, p, "relation")
    for name, blk in s.ideals.items():
        if not _split(blk.get("gens", "")):
            raise SessionError("ideal requires gens", lines.get(name))
        for f in _split(blk["gens"]) + _split(blk.get("Q", "")):
            _check_poly(f, variables, p, "ideal %s" % name)
    for name, blk in s.modules.items():
        kind = blk.get("kind")
        if kind not in MODULE_KINDS:
            raise SessionError("module %s: unknown kind %r" % (name, kind), lines.get(name))
        for key in MODULE_KINDS[kind]:
            if key not in blk:
                raise SessionError("module %s requires %s" % (name, key), lines.get(name))
        if "matrix" in blk:
            rows = _matrix_rows(blk["matrix"])
            if len({len(r) for r in rows}) > 1:
                raise SessionError("module %s: matrix is not rectangular" % name, lines.get(name))
            for r in rows:
                for f in r:
                    _check_poly(f, variables, p, "module %s" % name)
        if "of" in blk:
            for ref in _split(blk["of"]):
                if ref not in s.ideals and ref not in s.modules:
                    raise SessionError("module %s refers to unknown %r" % (name, ref), lines.get(name))


def _check_poly(text: str, variables, p, where: str):
    try:
        parse_poly(text, variables, p)
    except ParseError as e:
        raise SessionError("%s: %s" % (where, e)) from None


class Workspace:
    """A parsed session instantiated over a concrete ring."""

    def __init__(self, session: SessionFile, char: Optional[int] = None):
        self.session = session
        r = session.ring
        p = char if char is not None else int(r.get("char", DEFAULT_PRIME))
        weights = [int(w) for w in _split(r["weights"])] if "weights" in r else None
        dim = int(r["dim"]) if "dim" in r else None
        self.ring = AmbientRing(_split(r["vars"]), _split(r.get("relations", "")), weights, dim,
                                p=p, name=session.name)
        self._ideals: Dict[str, IdealData] = {}
        self._modules: Dict[str, ModuleData] = {}
        self._building: List[str] = []

    def ideal(self, name: str) -> IdealData:
        if name not in self._ideals:
            blk = self.session.ideals.get(name)
            if blk is None:
                raise SessionError("unknown ideal %r" % name)
            Q = _split(blk["Q"]) if "Q" in blk else None
            self._ideals[name] = self.ring.ideal(_split(blk["gens"]), Q=Q, name=name)
        return self._ideals[name]

    def module(self, name: str) -> ModuleData:
        if name in self._modules:
            return self._modules[name]
        if name not in self.session.modules:
            if name in self.session.ideals:
                M = ModuleData.from_ideal(self.ideal(name), name=name)
                self._modules[name] = M
                return M
            raise SessionError("unknown module %r" % name)
        if name in self._building:
            raise SessionError("module definitions form a cycle: %s"
                               % " -> ".join(self._building[self._building.index(name):] + [name]))
        self._building.append(name)
        try:
            M = self._construct(name)
        finally:
            self._building.pop()
        M.name = name
        self._modules[name] = M
        return M

    def _construct(self, name: str) -> ModuleData:
        blk = self.session.modules[name]
        kind = blk["kind"]
        R = self.ring
        if kind in ("image", "presentation"):
            rows = [[R.poly(f) for f in row] for row in _matrix_rows(blk["matrix"])]
            mat = Matrix.from_rows(rows)
            M = ModuleData.image(R, mat, name) if kind == "image" else ModuleData.cokernel(R, mat, name)
        elif kind == "free":
            M = ModuleData.free(R, int(blk["rank"]), name)
        elif kind == "ideal":
            M = ModuleData.from_ideal(self.ideal(blk["of"]), name)
        elif kind == "quotient":
            M = ModuleData.cyclic(self.ideal(blk["of"]), name)
        elif kind == "syzygy":
            M = syzygy_module(self.module(blk["of"]), int(blk["k"]))
        elif kind == "linkage":
            M = lambda_module(self.module(blk["of"]))
        elif kind == "dual":
            M = dual(self.module(blk["of"]))
        else:
            refs = _split(blk["of"])
            if len(refs) != 2:
                raise SessionError("module %s: hom needs two modules" % name)
            M = hom_module(self.module(refs[0]), self.module(refs[1]))
        return M
