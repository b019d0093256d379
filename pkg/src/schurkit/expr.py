"""Text and JSON forms of symmetric functions, tensors and cochains.

Expression grammar (whitespace-insensitive)::

    expr    := [sign] term (sign term)*
    term    := coeff ['*'] element | coeff | element
    coeff   := INT ['/' INT]
    element := ('s'|'h'|'e'|'m'|'p') '[' [INT (',' INT)*] ']'

Cochain specs: ``counit``, ``series:M``, ``schur``, ``schur-inv``,
``table:{[2,1]:1, [1]:-1/2}`` (arity 2: ``table:{[1],[1]:1}``),
``d(<spec>)``, ``inv(<spec>)`` and ``conv(<spec>, <spec>)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .cohomology import Cochain, coboundary, convolve, counit, from_table, invert, schur_pairing, schur_pairing_inverse
from .errors import ExpressionSyntaxError
from .partition import Partition, sort_key
from .symfunc import Basis, Number, SymFunc, TensorExp, as_coeff, format_terms

BASIS_LETTERS = "shemp"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Number:
        sign = -1 if self.accept("-") else 1
        num = self.integer()
        if self.accept("/"):
            pos = self.pos
            den = self.integer()
            if den == 0:
                raise self.error("division by zero", pos)
            return as_coeff(Fraction(sign * num, den))
        return sign * num

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "-_"):
            self.pos += 1
        return self.text[start:self.pos]

    def parts(self, warnings: list[str]) -> Partition:
        """``[a,b,...]`` or ``(a,b,...)``; non-canonical input is sorted with a warning."""
        start = self.pos
        opener = self.peek()
        if opener not in "[(" or not opener:
            raise self.error("expected '[' to open a partition")
        closer = "]" if opener == "[" else ")"
        self.pos += 1
        values: list[int] = []
        if not self.accept(closer):
            while True:
                values.append(self.integer())
                if self.accept(closer):
                    break
                self.expect(",")
        try:
            return Partition(values)
        except ValueError:
            fixed = Partition(sorted((v for v in values if v), reverse=True))
            warnings.append(f"non-canonical partition {self.text[start:self.pos].strip()} read as {fixed}")
            return fixed


def parse_expression_with_warnings(text: str) -> tuple[SymFunc, list[str]]:
    """Parse an expression; returns the value and any normalisation warnings.

    A single basis is kept; mixed bases are converted to Schur.
    """
    sc = _Scanner(text)
    warnings: list[str] = []
    terms: list[tuple[Basis | None, Partition, Number]] = []
    if sc.at_end():
        raise sc.error("empty expression")
    first = True
    while not sc.at_end():
        sign = 1
        if sc.accept("+"):
            pass
        elif sc.accept("-"):
            sign = -1
        elif not first:
            raise sc.error(f"expected '+' or '-', found {sc.peek()!r}")
        first = False
        coeff: Number = 1
        if sc.peek().isdigit():
            coeff = sc.rational()
            sc.accept("*")
            if sc.peek() not in BASIS_LETTERS or not sc.peek():
                terms.append((None, Partition(()), sign * coeff))
                continue
        ch = sc.peek()
        if not ch:
            raise sc.error("expected a term")
        if not ch.isalpha():
            raise sc.error(f"unexpected {ch!r}")
        if ch not in BASIS_LETTERS:
            raise sc.error(f"unknown basis {ch!r}; expected one of s, h, e, m, p")
        sc.pos += 1
        basis = Basis.of(ch)
        lam = sc.parts(warnings)
        terms.append((basis, lam, sign * coeff))
    bases = {b for b, _, _ in terms if b is not None}
    target = bases.pop() if len(bases) == 1 else Basis.S
    total = SymFunc._raw({}, target)
    for b, lam, c in terms:
        piece = SymFunc._raw({lam: c}, b or target) if c else SymFunc._raw({}, target)
        total = total + piece
    return total, warnings


def parse_expression(text: str) -> SymFunc:
    return parse_expression_with_warnings(text)[0]


def parse_partition(text: str) -> Partition:
    """Strict partition syntax for CLI arguments: ``[2,1]``, ``(2,1)``, ``[]`` or ``0``."""
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise ExpressionSyntaxError(str(exc), text, 0) from None


def format_expression(f: SymFunc) -> str:
    return str(f)


def format_universal(f: SymFunc, flavor: str) -> str:
    """Universal characters: ``<2> + <1,1> + <0>`` (Sp) or ``[2] + [1,1] + [0]`` (O).

    Terms run from the highest weight down, reverse-lex within a weight.
    """
    flavor = flavor.lower()
    left, right = ("<", ">") if flavor == "sp" else ("[", "]")
    items = sorted(f.convert(Basis.S).terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def render(lam: Partition) -> str:
        return left + (",".join(map(str, lam)) if lam else "0") + right

    return format_terms(items, lambda lam: render(lam)) if items else "0"


# -- JSON ------------------------------------------------------------------


def coeff_to_json(c: Number) -> str:
    return str(c)


def coeff_from_json(text: str) -> Number:
    return as_coeff(Fraction(text))


def symfunc_to_json(f: SymFunc, warnings: list[str] | None = None, flavor: str | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "basis": f.basis.value,
        "terms": [{"partition": list(lam), "coeff": coeff_to_json(c)} for lam, c in f.items()],
    }
    if f.cap is not None:
        out["cap"] = f.cap
    if warnings:
        out["warnings"] = list(warnings)
    if flavor:
        out["flavor"] = flavor
    return out


def symfunc_from_json(data: dict[str, Any]) -> SymFunc:
    terms = {Partition(t["partition"]): coeff_from_json(t["coeff"]) for t in data["terms"]}
    return SymFunc(terms, data["basis"], data.get("cap"))


def tensor_to_json(t: TensorExp) -> dict[str, Any]:
    return {
        "arity": t.arity,
        "basis": [b.value for b in t.bases],
        "terms": [{"slots": [list(x) for x in key], "coeff": coeff_to_json(c)} for key, c in t.items()],
    }


def tensor_from_json(data: dict[str, Any]) -> TensorExp:
    bases = data.get("basis") or ["s"] * data["arity"]
    return TensorExp({tuple(Partition(x) for x in t["slots"]): coeff_from_json(t["coeff"]) for t in data["terms"]}, bases)


# -- cochain specs ---------------------------------------------------------


def parse_cochain(text: str) -> Cochain:
    """Parse a cochain spec (see the module docstring)."""
    sc = _Scanner(text)
    c = _cochain(sc)
    if not sc.at_end():
        raise sc.error(f"unexpected {sc.peek()!r} after cochain spec")
    return c


def _cochain(sc: _Scanner) -> Cochain:
    start = sc.pos
    name = sc.word()
    if name == "counit":
        arity = 1
        if sc.accept("^"):
            arity = sc.integer()
        return counit(arity)
    if name == "schur":
        return schur_pairing()
    if name in ("schur-inv", "schur-inverse"):
        return schur_pairing_inverse()
    if name == "series":
        from .series import SeriesId, characteristic_cochain

        sc.expect(":")
        pos = sc.pos
        tag = sc.word()
        try:
            return characteristic_cochain(SeriesId.of(tag))
        except ValueError as exc:
            raise sc.error(str(exc), pos) from None
    if name == "table":
        sc.expect(":")
        return _table(sc)
    if name in ("d", "inv"):
        sc.expect("(")
        inner = _cochain(sc)
        sc.expect(")")
        if name == "inv":
            return invert(inner)
        if inner.arity not in (1, 2):
            raise sc.error("the coboundary is implemented for 1- and 2-cochains", start)
        return coboundary(inner)
    if name == "conv":
        sc.expect("(")
        a = _cochain(sc)
        sc.expect(",")
        b = _cochain(sc)
        sc.expect(")")
        if a.arity != b.arity:
            raise sc.error("conv() needs cochains of equal arity", start)
        return convolve(a, b)
    raise sc.error(f"unknown cochain {name!r}; expected counit, series:X, schur, schur-inv, table:{{...}}, d(...), inv(...) or conv(...)", start)


def _table(sc: _Scanner) -> Cochain:
    sc.expect("{")
    warnings: list[str] = []
    entries: dict[tuple[Partition, ...], Number] = {}
    arity = None
    if not sc.accept("}"):
        while True:
            pos = sc.pos
            key = [sc.parts(warnings)]
            while sc.accept(","):
                key.append(sc.parts(warnings))
            sc.expect(":")
            value = sc.rational()
            if arity is None:
                arity = len(key)
            elif arity != len(key):
                raise sc.error("table entries must all have the same number of slots", pos)
            entries[tuple(key)] = value
            if sc.accept("}"):
                break
            sc.expect(",")
    try:
        return from_table(entries, arity or 1, "table")
    except ValueError as exc:
        raise sc.error(str(exc)) from None


def format_table(values: dict[tuple[Partition, ...], Number]) -> str:
    """Inverse of the ``table:{...}`` syntax."""
    items = sorted(values.items(), key=lambda kv: tuple(sort_key(x) for x in kv[0]))
    body = ", ".join(",".join(str(x) for x in key) + f":{c}" for key, c in items)
    return "table:{" + body + "}"

