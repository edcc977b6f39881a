"""Integral group rings Z[G] over any group context (finite table or free group)."""

from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping

from .errors import GroupContextError, MalformedInputError


class GroupRingElement:
    """A finite Z-linear combination of group elements.

    Keys are canonical group elements of ``group``; stored coefficients are
    never zero. Instances are treated as immutable.
    """

    __slots__ = ("group", "_terms", "_hash")

    def __init__(self, group, terms: Mapping | Iterable | None = None, *, _trusted=False):
        self.group = group
        self._hash = None
        if _trusted:
            self._terms = terms
            return
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for g, c in items:
                if c:
                    g = group.canonical(g)
                    acc[g] = acc.get(g, 0) + int(c)
        self._terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def zero(cls, group):
        return cls(group, {}, _trusted=True)

    @classmethod
    def one(cls, group):
        return cls(group, {group.identity: 1}, _trusted=True)

    @classmethod
    def basis(cls, group, g, coeff: int = 1):
        return cls(group, {group.canonical(g): coeff} if coeff else {}, _trusted=True)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in deterministic order (the group's sort key)."""
        return sorted(self._terms.items(), key=lambda kv: self.group.sort_key(kv[0]))

    def coefficient(self, g) -> int:
        return self._terms.get(self.group.canonical(g), 0)

    def support(self):
        return [g for g, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return False
        if other.group is not self.group and other.group != self.group:
            raise GroupContextError("group ring elements live over different groups")
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.basis(self.group, self.group.identity, other)
        if not self._check(other):
            return NotImplemented
        acc = dict(self._terms)
        for g, c in other._terms.items():
            v = acc.get(g, 0) + c
            if v:
                acc[g] = v
            else:
                acc.pop(g, None)
        return GroupRingElement(self.group, acc, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.group, {g: -c for g, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.basis(self.group, self.group.identity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return gr_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, k: int):
        if not k:
            return GroupRingElement.zero(self.group)
        return GroupRingElement(self.group, {g: c * k for g, c in self._terms.items()}, _trusted=True)

    def map(self, fn: Callable, group=None):
        """Push forward along a group map ``fn`` (into ``group``, default the same group)."""
        target = self.group if group is None else group
        return GroupRingElement(target, ((fn(g), c) for g, c in self._terms.items()))

    def conjugate(self):
        """The anti-involution ``sum c g -> sum c g^-1``."""
        return GroupRingElement(self.group, ((self.group.inv(g), c) for g, c in self._terms.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            return self == GroupRingElement.basis(self.group, self.group.identity, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def format(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for g, c in self.items():
            sign = "-" if c < 0 else "+"
            out.append(f"{sign} {abs(c)}*{self.group.format(g)}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"GroupRingElement({self.format()})"


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    if a.group is not b.group and a.group != b.group:
        raise GroupContextError("group ring elements live over different groups")
    G = a.group
    acc: dict = {}
    for g, c in a._terms.items():
        for h, d in b._terms.items():
            k = G.mul(g, h)
            acc[k] = acc.get(k, 0) + c * d
    return GroupRingElement(G, {k: v for k, v in acc.items() if v}, _trusted=True)


def augmentation(x: GroupRingElement) -> int:
    return sum(x._terms.values())


_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?(\S+)$")


def parse_group_ring(text: str, group) -> GroupRingElement:
    """Parse ``"c1*g1 + c2*g2 - g3"`` against a finite group's element labels.

    A bare integer denotes a multiple of the identity. Labels may not contain
    whitespace, ``+``, ``-`` or ``*``.
    """
    s = str(text).strip()
    if not s:
        raise MalformedInputError("empty group-ring expression")
    tokens = re.split(r"([+-])", s)
    acc: dict = {}
    sign = 1
    expect_term = True
    for tok in tokens:
        tok = tok.strip()
        if not tok:
            continue
        if tok in "+-":
            sign = sign * (1 if tok == "+" else -1) if expect_term else (1 if tok == "+" else -1)
            expect_term = True
            continue
        if not expect_term:
            raise MalformedInputError(f"missing operator before {tok!r} in {text!r}")
        if tok.isdigit() and tok not in group.labels:
            coeff, g = int(tok), group.identity
        else:
            m = _TERM.match(tok)
            if not m:
                raise MalformedInputError(f"cannot parse term {tok!r} in {text!r}")
            coeff = int(m.group(1)) if m.group(1) else 1
            try:
                g = group.element(m.group(2))
            except Exception as exc:
                raise MalformedInputError(f"unknown group element {m.group(2)!r} in {text!r}") from exc
        acc[g] = acc.get(g, 0) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise MalformedInputError(f"dangling operator in {text!r}")
    return GroupRingElement(group, acc)
