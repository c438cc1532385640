"""Group spec strings and the built-in catalog of (G, H) pairs.

A spec is ``family:param`` optionally followed by ``/selector``:

    sym:N  alt:N  alt-in-sym:N  dihedral:N  cyclic:N  gl2:Q  sl2-in-gl2:Q
    agl1:P  q8  perm-file:PATH

Selectors name the normal subgroup H: ``alt``, ``sl``, ``rot``, ``v4``,
``center``, ``derived``, ``trivial``, ``whole``, ``sub:K`` (index-K subgroup
of a cyclic group) and ``gen:I`` (cyclic subgroup generated by generator I).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import groups
from .errors import ParseError
from .group_core import DEFAULT_CAP, FiniteGroup, Permutation, QuotientData, close_group, cyclic_quotient

FAMILIES = ("sym", "alt", "alt-in-sym", "dihedral", "cyclic", "gl2", "sl2-in-gl2", "agl1", "q8", "perm-file")
DEFAULT_SELECTOR = {"alt-in-sym": "alt", "dihedral": "rot", "sl2-in-gl2": "sl"}


@dataclass(frozen=True)
class GroupSpec:
    family: str
    param: str = ""
    selector: str | None = None

    @classmethod
    def parse(cls, text: str, selector: str | None = None) -> "GroupSpec":
        text = text.strip()
        sel = None
        if text.startswith("perm-file:"):
            param = text[len("perm-file:"):]
            return cls("perm-file", param, selector)
        if "/" in text:
            text, sel = text.split("/", 1)
        fam, _, param = text.partition(":")
        if fam not in FAMILIES:
            raise ParseError(f"unknown group family {fam!r}")
        if fam == "q8":
            if param:
                raise ParseError("q8 takes no parameter")
        elif not re.fullmatch(r"\d+", param):
            raise ParseError(f"{fam} needs a positive integer parameter, got {param!r}")
        sel = selector or sel
        if sel is not None:
            _check_selector(sel)
        return cls(fam, param, sel)

    def __str__(self) -> str:
        base = self.family if self.family == "q8" else f"{self.family}:{self.param}"
        if self.selector and self.family != "perm-file":
            base += f"/{self.selector}"
        return base

    @property
    def effective_selector(self) -> str:
        return self.selector or DEFAULT_SELECTOR.get(self.family, "whole")


def _check_selector(sel: str) -> None:
    if sel in ("alt", "sl", "rot", "v4", "center", "derived", "trivial", "whole"):
        return
    if re.fullmatch(r"(sub|gen):\d+", sel):
        return
    raise ParseError(f"unknown subgroup selector {sel!r}")


def read_perm_file(path: str | Path) -> list[Permutation]:
    """One generator per line in disjoint-cycle notation; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError(f"{path}: no generators")
    try:
        perms = [Permutation.parse(ln) for ln in lines]
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    n = max(max(p.degree for p in perms), 1)
    return [Permutation.parse(ln, n) for ln in lines]


def build_group(spec: GroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    fam, k = spec.family, int(spec.param) if spec.param.isdigit() else 0
    if fam in ("sym", "alt-in-sym"):
        return groups.symmetric(k, cap)
    if fam == "alt":
        return groups.alternating(k, cap)
    if fam == "dihedral":
        return groups.dihedral(k, cap)
    if fam == "cyclic":
        return groups.cyclic(k, cap)
    if fam in ("gl2", "sl2-in-gl2"):
        return groups.general_linear_2(k, cap)
    if fam == "agl1":
        return groups.affine_line(k, cap)
    if fam == "q8":
        return groups.quaternion(cap)
    return close_group(read_perm_file(spec.param), cap, name=Path(spec.param).name)


def select_subgroup(G: FiniteGroup, selector: str) -> np.ndarray:
    if selector == "whole":
        return G.all()
    if selector == "trivial":
        return np.array([G.identity])
    if selector == "alt":
        return groups.even_permutations(G)
    if selector == "sl":
        return groups.determinant_one(G)
    if selector == "rot":
        return groups.rotations(G)
    if selector == "v4":
        return groups.klein_four_in_alt4(G)
    if selector == "center":
        return groups.center(G)
    if selector == "derived":
        return groups.derived_subgroup(G)
    kind, _, num = selector.partition(":")
    if kind == "sub":
        return groups.powers_subgroup(G, int(num))
    if kind == "gen":
        return groups.subgroup_generated(G, [G.generators[int(num)]])
    raise ParseError(f"unknown subgroup selector {selector!r}")


@lru_cache(maxsize=64)
def _load_cached(text: str, cap: int) -> QuotientData:
    spec = GroupSpec.parse(text)
    G = build_group(spec, cap)
    G.name = str(spec)
    return cyclic_quotient(G, select_subgroup(G, spec.effective_selector))


def load(text: str, selector: str | None = None, cap: int = DEFAULT_CAP) -> QuotientData:
    """Parse a spec string, build G and H, and return the cyclic quotient data."""
    spec = GroupSpec.parse(text, selector)
    canonical = spec if spec.family == "perm-file" else GroupSpec(spec.family, spec.param, spec.effective_selector)
    if spec.family == "perm-file":
        G = build_group(spec, cap)
        G.name = str(spec)
        return cyclic_quotient(G, select_subgroup(G, spec.effective_selector))
    return _load_cached(str(canonical), cap)


# -- the catalog ------------------------------------------------------------

CATALOG: tuple[str, ...] = (
    *(f"alt-in-sym:{n}" for n in range(3, 8)),
    *(f"dihedral:{n}" for n in range(3, 13)),
    "cyclic:5/trivial", "cyclic:6/sub:2", "cyclic:6/sub:3", "cyclic:8/sub:2",
    "cyclic:8/sub:4", "cyclic:9/sub:3", "cyclic:12/sub:6",
    *(f"sl2-in-gl2:{q}" for q in (3, 4, 5, 7, 9)),
    "alt:4/v4",
    "q8/gen:0",
    "agl1:5/derived", "agl1:7/derived",
)



def catalog(names=None) -> list[QuotientData]:
    return [load(s) for s in (names or CATALOG)]


def prime_index(Q: QuotientData) -> bool:
    from .fields import is_prime

    return is_prime(Q.quotient_order)
