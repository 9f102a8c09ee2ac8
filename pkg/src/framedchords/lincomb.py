"""Finite formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator


def key_code(key) -> str:
    """Text code of a basis key; tuples (tensor terms) are joined with ``|``."""
    if isinstance(key, tuple):
        return "|".join(key_code(k) for k in key)
    code = getattr(key, "code", None)
    if code is not None:
        return code
    return str(key)


class LinComb:
    """A map ``basis key -> nonzero Fraction``.

    Keys are any hashable values; in this package they are canonical
    diagrams, canonical graphs, or tuples of those for tensor terms.
    Instances are treated as immutable once built.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = Fraction(c)
                if c:
                    clean[k] = clean.get(k, 0) + c
                    if not clean[k]:
                        del clean[k]
        self._terms = clean

    @classmethod
    def basis(cls, key: Hashable, coeff=1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def _raw(cls, terms: dict) -> "LinComb":
        new = cls.__new__(cls)
        new._terms = terms
        return new

    # -- container protocol --------------------------------------------
    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: key_code(kv[0]))

    # -- arithmetic -----------------------------------------------------
    def _combine(self, other: "LinComb", sign: int) -> "LinComb":
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + sign * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LinComb._raw(out)

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        s = Fraction(scalar)
        if not s:
            return LinComb()
        return LinComb._raw({k: s * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*[{key_code(k)}]" for k, c in self.sorted_items())
        return f"LinComb({body})"

    # -- linear maps ----------------------------------------------------
    def apply(self, f: Callable) -> "LinComb":
        """Linear extension of ``f``.

        ``f`` maps a key to a new key, a LinComb, or None (meaning zero).
        """
        out: dict = {}
        for k, c in self._terms.items():
            img = f(k)
            if img is None:
                continue
            if isinstance(img, LinComb):
                for k2, c2 in img._terms.items():
                    out[k2] = out.get(k2, 0) + c * c2
            else:
                out[img] = out.get(img, 0) + c
        return LinComb._raw({k: c for k, c in out.items() if c})

    def filter(self, pred: Callable) -> "LinComb":
        return LinComb._raw({k: c for k, c in self._terms.items() if pred(k)})

    def tensor(self, other: "LinComb") -> "LinComb":
        """Tensor product; keys become pairs ``(k1, k2)``."""
        return LinComb._raw({(a, b): ca * cb for a, ca in self._terms.items()
                             for b, cb in other._terms.items()})

    # -- text format ----------------------------------------------------
    def to_text(self) -> str:
        lines = []
        for k, c in self.sorted_items():
            lines.append(f"{c.numerator}/{c.denominator}\t{key_code(k)}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, parse_key: Callable[[str], Hashable]) -> "LinComb":
        """Inverse of :meth:`to_text`; ``|`` separated codes become tuples."""
        terms = []
        for line in text.splitlines():
            if not line.strip():
                continue
            coeff, code = line.split("\t")
            parts = code.split("|")
            key = parse_key(parts[0]) if len(parts) == 1 else tuple(parse_key(p) for p in parts)
            terms.append((key, Fraction(coeff)))
        return cls(terms)


def lincomb_sum(parts: Iterable[LinComb]) -> LinComb:
    out: dict = {}
    for part in parts:
        for k, c in part.items():
            out[k] = out.get(k, 0) + c
    return LinComb._raw({k: c for k, c in out.items() if c})


def as_lincomb(x) -> LinComb:
    return x if isinstance(x, LinComb) else LinComb.basis(x)
