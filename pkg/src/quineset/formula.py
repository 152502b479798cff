"""First-order formulas over set membership: AST, parser, printer, evaluator.

Surface syntax, whitespace-insensitive, with precedence ! > & > | > -> > <->:

    formula := iff
    iff     := impl { "<->" impl }
    impl    := or [ "->" impl ]                 (right-associative)
    or      := and { "|" and }
    and     := unary { "&" unary }
    unary   := "!" unary | quant | atom
    quant   := ("forall" | "exists") ident "." unary
    atom    := "(" formula ")" | ident ("in" | "notin" | "=" | "!=") ident

``x notin y`` is sugar for ``!(x in y)`` and ``x != y`` for ``!(x = y)``;
both survive printing. A quantifier binds exactly the unary that follows the
dot, so in ``forall u. (u in u) & (u in s)`` the second ``u`` is free.

Semantics are classical and two-valued. Quantifiers range over every set id
of a universe (or over an explicitly pinned domain size). Formulas and
environments are immutable values; evaluation is pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping

from .core import SetId, Universe
from .errors import FormulaSyntaxError, UnboundVariable, WrongArity


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class Member(Formula):
    lhs: str
    rhs: str


@dataclass(frozen=True)
class Equal(Formula):
    lhs: str
    rhs: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


Env = Mapping[str, SetId]

KEYWORDS = frozenset({"forall", "exists", "in", "notin"})

_TOKEN_RE = re.compile(r"<->|->|!=|[A-Za-z][A-Za-z0-9_]*|[()!&|=.]")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((match.group(), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def _here(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def _advance(self) -> str:
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def _expect(self, tok: str) -> None:
        if self._peek() != tok:
            raise FormulaSyntaxError(
                f"expected {tok!r} but found {self._peek()!r}", self._here()
            )
        self.pos += 1

    def _ident(self, what: str) -> str:
        tok = self._peek()
        if tok is None or not _IDENT_RE.match(tok) or tok in KEYWORDS:
            raise FormulaSyntaxError(f"expected {what} but found {tok!r}", self._here())
        return self._advance()

    def formula(self) -> Formula:
        left = self._impl()
        while self._peek() == "<->":
            self._advance()
            left = Iff(left, self._impl())
        return left

    def _impl(self) -> Formula:
        left = self._or()
        if self._peek() == "->":
            self._advance()
            return Implies(left, self._impl())
        return left

    def _or(self) -> Formula:
        left = self._and()
        while self._peek() == "|":
            self._advance()
            left = Or(left, self._and())
        return left

    def _and(self) -> Formula:
        left = self._unary()
        while self._peek() == "&":
            self._advance()
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        tok = self._peek()
        if tok == "!":
            self._advance()
            return Not(self._unary())
        if tok in ("forall", "exists"):
            self._advance()
            var = self._ident("a variable")
            self._expect(".")
            body = self._unary()
            return Forall(var, body) if tok == "forall" else Exists(var, body)
        return self._atom()

    def _atom(self) -> Formula:
        if self._peek() == "(":
            self._advance()
            inner = self.formula()
            self._expect(")")
            return inner
        lhs = self._ident("a variable or '('")
        op = self._peek()
        if op not in ("in", "notin", "=", "!="):
            raise FormulaSyntaxError(
                f"expected 'in', 'notin', '=' or '!=' but found {op!r}", self._here()
            )
        self._advance()
        rhs = self._ident("a variable")
        if op == "in":
            return Member(lhs, rhs)
        if op == "notin":
            return Not(Member(lhs, rhs))
        if op == "=":
            return Equal(lhs, rhs)
        return Not(Equal(lhs, rhs))


def parse(text: str) -> Formula:
    """Parse surface syntax into a formula AST."""
    parser = _Parser(text)
    result = parser.formula()
    if parser.pos < len(parser.tokens):
        raise FormulaSyntaxError(
            f"unexpected trailing input {parser._peek()!r}", parser._here()
        )
    return result


def format_formula(f: Formula) -> str:
    """Canonical fully parenthesized text; ``parse(format_formula(f)) == f``."""
    if isinstance(f, Member):
        return f"({f.lhs} in {f.rhs})"
    if isinstance(f, Equal):
        return f"({f.lhs} = {f.rhs})"
    if isinstance(f, Not):
        body = f.body
        if isinstance(body, Member):
            return f"({body.lhs} notin {body.rhs})"
        if isinstance(body, Equal):
            return f"({body.lhs} != {body.rhs})"
        return f"(!{format_formula(body)})"
    if isinstance(f, And):
        return f"({format_formula(f.lhs)} & {format_formula(f.rhs)})"
    if isinstance(f, Or):
        return f"({format_formula(f.lhs)} | {format_formula(f.rhs)})"
    if isinstance(f, Implies):
        return f"({format_formula(f.lhs)} -> {format_formula(f.rhs)})"
    if isinstance(f, Iff):
        return f"({format_formula(f.lhs)} <-> {format_formula(f.rhs)})"
    if isinstance(f, Forall):
        return f"(forall {f.var}. {format_formula(f.body)})"
    if isinstance(f, Exists):
        return f"(exists {f.var}. {format_formula(f.body)})"
    raise TypeError(f"not a formula node: {f!r}")


def free_vars(f: Formula) -> frozenset[str]:
    """Exactly the variables with a free occurrence, under lexical binding."""
    if isinstance(f, (Member, Equal)):
        return frozenset((f.lhs, f.rhs))
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies, Iff)):
        return free_vars(f.lhs) | free_vars(f.rhs)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula node: {f!r}")


_MISSING = object()

_CompiledFn = Callable[[dict, int, list], bool]


def _compile(f: Formula) -> _CompiledFn:
    # Compiles the AST to nested closures taking (env, domain, member_sets);
    # keeps exhaustive quantifier scans cheap enough for desk-scale checks.
    kind = type(f)
    if kind is Member:
        l, r = f.lhs, f.rhs
        return lambda env, n, sets: env[l] in sets[env[r]]
    if kind is Equal:
        l, r = f.lhs, f.rhs
        return lambda env, n, sets: env[l] == env[r]
    if kind is Not:
        body = _compile(f.body)
        return lambda env, n, sets: not body(env, n, sets)
    if kind is And:
        a, b = _compile(f.lhs), _compile(f.rhs)
        return lambda env, n, sets: a(env, n, sets) and b(env, n, sets)
    if kind is Or:
        a, b = _compile(f.lhs), _compile(f.rhs)
        return lambda env, n, sets: a(env, n, sets) or b(env, n, sets)
    if kind is Implies:
        a, b = _compile(f.lhs), _compile(f.rhs)
        return lambda env, n, sets: (not a(env, n, sets)) or b(env, n, sets)
    if kind is Iff:
        a, b = _compile(f.lhs), _compile(f.rhs)
        return lambda env, n, sets: a(env, n, sets) == b(env, n, sets)
    if kind is Forall or kind is Exists:
        body = _compile(f.body)
        var = f.var
        want = kind is Exists

        def quantified(env: dict, n: int, sets: list) -> bool:
            prev = env.get(var, _MISSING)
            result = not want
            for i in range(n):
                env[var] = i
                if body(env, n, sets) == want:
                    result = want
                    break
            if prev is _MISSING:
                del env[var]
            else:
                env[var] = prev
            return result

        return quantified
    raise TypeError(f"not a formula node: {f!r}")


def evaluate(
    universe: Universe,
    f: Formula,
    env: Env | None = None,
    *,
    domain_size: int | None = None,
) -> bool:
    """Truth of ``f`` in ``universe`` under classical two-valued semantics.

    Every free variable of ``f`` must be bound to a set id in ``env``.
    Quantifiers range over the ids below ``domain_size``, which defaults to
    the current universe size; pinning it keeps a quantifier range fixed
    while other code grows the universe.
    """
    bindings = dict(env) if env else {}
    missing = free_vars(f) - bindings.keys()
    if missing:
        raise UnboundVariable(sorted(missing)[0])
    for sid in bindings.values():
        universe.node(sid)
    n = len(universe) if domain_size is None else domain_size
    return _compile(f)(bindings, n, universe.member_sets)


class Classification(Enum):
    TAUTOLOGICAL = "tautological"
    CONTRADICTORY = "contradictory"
    CONTINGENT = "contingent"


def classify(
    universe: Universe,
    f: Formula,
    var: str,
    *,
    domain_size: int | None = None,
) -> Classification:
    """Pointwise classification of a one-variable criterion over the universe.

    ``CONTRADICTORY`` means false of every set, ``TAUTOLOGICAL`` true of
    every set, ``CONTINGENT`` anything in between. The criterion's free
    variables must be exactly ``{var}``.
    """
    fv = free_vars(f)
    if fv != {var}:
        raise WrongArity(f"criterion must have exactly the free variable {var!r}, got {sorted(fv)}")
    n = len(universe) if domain_size is None else domain_size
    fn = _compile(f)
    env: dict[str, SetId] = {}
    seen_true = seen_false = False
    for i in range(n):
        env[var] = i
        if fn(env, n, universe.member_sets):
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return Classification.CONTINGENT
    return Classification.TAUTOLOGICAL if seen_true else Classification.CONTRADICTORY
