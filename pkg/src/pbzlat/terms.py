"""Term language over the algebra signature, with exhaustive checking.

Grammar (join binds loosest, then meet; the postfix unaries ' and ~
bind tightest; [] and <> are prefix sugar for '~ and ~~):

    statement := identity | identity ("&" identity)* "=>" identity
    identity  := term ("=" | "<=") term
    term      := factor ("v" factor)*
    factor    := unary ("^" unary)*
    unary     := ("[]" | "<>")* atom postfix*
    postfix   := "'" | "~"
    atom      := "0" | "1" | ident | "(" term ")"

``v`` is reserved for join and cannot be a variable name.  The prefix
modalities desugar at parse time, so the AST only ever contains the six
primitive constructors.
"""

import itertools
from dataclasses import dataclass

__all__ = [
    "Term", "Var", "Zero", "One", "Meet", "Join", "Kleene", "Brouwer",
    "Box", "Diamond", "Identity", "QuasiIdentity", "ParseError",
    "parse_term", "parse_identity", "parse_statement", "pretty",
    "term_vars", "evaluate", "holds", "holds_quasi", "THEORY",
]


class Term:
    """Base class; all nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Kleene(Term):
    arg: Term


@dataclass(frozen=True)
class Brouwer(Term):
    arg: Term


def Box(t):
    """box t = (t')~"""
    return Brouwer(Kleene(t))


def Diamond(t):
    """diamond t = (t~)~"""
    return Brouwer(Brouwer(t))


@dataclass(frozen=True)
class Identity:
    """An equation or inequality between two terms."""

    lhs: Term
    rhs: Term
    kind: str  # "eq" or "le"

    def __post_init__(self):
        if self.kind not in ("eq", "le"):
            raise ValueError(f"bad identity kind {self.kind!r}")

    def as_equation(self):
        """Equational form: s <= t becomes s ^ t = s."""
        if self.kind == "eq":
            return self
        return Identity(Meet(self.lhs, self.rhs), self.lhs, "eq")


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple
    conclusion: Identity


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TWO_CHAR = {"[]": "BOX", "<>": "DIAMOND", "<=": "LE", "=>": "IMPLIES"}
_ONE_CHAR = {"(": "LPAR", ")": "RPAR", "^": "MEET", "'": "KLEENE",
             "~": "BROUWER", "=": "EQ", "&": "AND", "0": "ZERO", "1": "ONE"}


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        two = text[i:i + 2]
        if two in _TWO_CHAR:
            toks.append((_TWO_CHAR[two], two, i))
            i += 2
            continue
        if c in "<>":
            raise ParseError(f"stray {c!r}", i)
        if c in _ONE_CHAR:
            toks.append((_ONE_CHAR[c], c, i))
            i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "v":
                toks.append(("JOIN", word, i))
            else:
                toks.append(("IDENT", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    toks.append(("END", "", n))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        return tok

    def term(self):
        t = self.factor()
        while self.peek() == "JOIN":
            self.next()
            t = Join(t, self.factor())
        return t

    def factor(self):
        t = self.unary()
        while self.peek() == "MEET":
            self.next()
            t = Meet(t, self.unary())
        return t

    def unary(self):
        prefixes = []
        while self.peek() in ("BOX", "DIAMOND"):
            prefixes.append(self.next()[0])
        t = self.atom()
        while self.peek() in ("KLEENE", "BROUWER"):
            kind = self.next()[0]
            t = Kleene(t) if kind == "KLEENE" else Brouwer(t)
        for kind in reversed(prefixes):
            t = Box(t) if kind == "BOX" else Diamond(t)
        return t

    def atom(self):
        kind, text, pos = self.next()
        if kind == "ZERO":
            return Zero()
        if kind == "ONE":
            return One()
        if kind == "IDENT":
            return Var(text)
        if kind == "LPAR":
            t = self.term()
            self.expect("RPAR")
            return t
        raise ParseError(f"expected a term, found {text!r}", pos)

    def identity(self):
        lhs = self.term()
        kind, text, pos = self.next()
        if kind == "EQ":
            return Identity(lhs, self.term(), "eq")
        if kind == "LE":
            return Identity(lhs, self.term(), "le")
        raise ParseError(f"expected '=' or '<=', found {text!r}", pos)

    def statement(self):
        first = self.identity()
        if self.peek() not in ("AND", "IMPLIES"):
            return first
        premises = [first]
        while self.peek() == "AND":
            self.next()
            premises.append(self.identity())
        self.expect("IMPLIES")
        conclusion = self.identity()
        return QuasiIdentity(tuple(premises), conclusion)


def _finish(parser, node):
    tok = parser.toks[parser.i]
    if tok[0] != "END":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return node


def parse_term(text):
    p = _Parser(text)
    return _finish(p, p.term())


def parse_identity(text):
    p = _Parser(text)
    return _finish(p, p.identity())


def parse_statement(text):
    """Parse an identity or a quasi-identity, whichever the text is."""
    p = _Parser(text)
    return _finish(p, p.statement())


# precedence levels for printing: join 0, meet 1, unary/atom 2
def _pp(t, level):
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Kleene):
        return _pp(t.arg, 2) + "'"
    if isinstance(t, Brouwer):
        return _pp(t.arg, 2) + "~"
    if isinstance(t, Meet):
        s = f"{_pp(t.left, 1)} ^ {_pp(t.right, 2)}"
        return f"({s})" if level > 1 else s
    if isinstance(t, Join):
        s = f"{_pp(t.left, 0)} v {_pp(t.right, 1)}"
        return f"({s})" if level > 0 else s
    raise TypeError(f"not a term: {t!r}")


def pretty(obj):
    """Render a term, identity or quasi-identity; reparses to an equal AST."""
    if isinstance(obj, Term):
        return _pp(obj, 0)
    if isinstance(obj, Identity):
        op = "=" if obj.kind == "eq" else "<="
        return f"{_pp(obj.lhs, 0)} {op} {_pp(obj.rhs, 0)}"
    if isinstance(obj, QuasiIdentity):
        pre = " & ".join(pretty(p) for p in obj.premises)
        return f"{pre} => {pretty(obj.conclusion)}"
    raise TypeError(f"cannot pretty-print {obj!r}")


def term_vars(obj):
    """Sorted variable names occurring in a term/identity/quasi-identity."""
    out = set()

    def walk(t):
        if isinstance(t, Var):
            out.add(t.name)
        elif isinstance(t, (Meet, Join)):
            walk(t.left)
            walk(t.right)
        elif isinstance(t, (Kleene, Brouwer)):
            walk(t.arg)

    if isinstance(obj, Term):
        walk(obj)
    elif isinstance(obj, Identity):
        walk(obj.lhs)
        walk(obj.rhs)
    elif isinstance(obj, QuasiIdentity):
        for p in obj.premises:
            out.update(term_vars(p))
        out.update(term_vars(obj.conclusion))
    else:
        raise TypeError(f"no variables in {obj!r}")
    return sorted(out)


def evaluate(A, t, assignment):
    """Value of a term in A under a variable assignment (indices)."""
    if isinstance(t, Var):
        try:
            return assignment[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    if isinstance(t, Zero):
        return A.zero
    if isinstance(t, One):
        return A.one
    if isinstance(t, Meet):
        return A.meet(evaluate(A, t.left, assignment),
                      evaluate(A, t.right, assignment))
    if isinstance(t, Join):
        return A.join(evaluate(A, t.left, assignment),
                      evaluate(A, t.right, assignment))
    if isinstance(t, Kleene):
        return A.kleene[evaluate(A, t.arg, assignment)]
    if isinstance(t, Brouwer):
        return A.brouwer[evaluate(A, t.arg, assignment)]
    raise TypeError(f"not a term: {t!r}")


def _identity_ok(A, ident, assignment):
    lv = evaluate(A, ident.lhs, assignment)
    rv = evaluate(A, ident.rhs, assignment)
    return lv == rv if ident.kind == "eq" else A.le(lv, rv)


def holds(A, ident):
    """Exhaustively check an identity; (True, None) or (False, assignment).

    Assignments run in odometer order over sorted variable names, so the
    reported counterexample is the lexicographically first one.
    """
    names = term_vars(ident)
    for values in itertools.product(range(A.n), repeat=len(names)):
        assignment = dict(zip(names, values))
        if not _identity_ok(A, ident, assignment):
            return False, assignment
    return True, None


def holds_quasi(A, quasi):
    """Check a quasi-identity; premises filter the assignments."""
    if isinstance(quasi, Identity):
        return holds(A, quasi)
    names = term_vars(quasi)
    for values in itertools.product(range(A.n), repeat=len(names)):
        assignment = dict(zip(names, values))
        if all(_identity_ok(A, p, assignment) for p in quasi.premises):
            if not _identity_ok(A, quasi.conclusion, assignment):
                return False, assignment
    return True, None


# Named identities and quasi-identities used throughout the package.
# The third entry of the distributivity chain (DCHAIN3) is implemented
# as the two-sided equation x v (y ^ z) = x v ((x v y) ^ z).
_THEORY_SOURCE = {
    "AOL1": "(x~ v y~) ^ (<>x v z~) = ((x~ v y) ^ (<>x v z))~",
    "AOL2": "x = (x ^ y~) v (x ^ <>y)",
    "AOL3": "x = (x v y~) ^ (x v <>y)",
    "DIST": "x ^ (y v z) = (x ^ y) v (x ^ z)",
    "SDM": "(x ^ y)~ = x~ v y~",
    "SK": "x ^ <>y <= []x v y",
    "STAR": "(x ^ x')~ <= x~ v x'~",
    "DIAMOND_OM": "(x~ v (<>x ^ <>y)) ^ <>x <= <>y",
    "J": "x v y = ((x v y) ^ y~) v ((x v y) ^ <>y)",
    "PK": "x ^ x' <= y v y'",
    "BZ1": "x ^ x~ = 0",
    "BZ2": "x <= x~~",
    "BZ3": "x <= y => y~ <= x~",
    "BZ4": "x~' = x~~",
    "OM": "x <= y => y = (y ^ x') v x",
    "POM": "x <= y & x' ^ y = 0 => x = y",
    "DCHAIN1": "x v []y = (x v y) ^ (<>x v []y)",
    "DCHAIN2": "x v (y ^ z) = x v ((<>y v []x) ^ (x v y) ^ z)",
    "DCHAIN3": "x v (y ^ z) = x v ((x v y) ^ z)",
    "DCHAIN4": "x ^ (y v z) = x ^ (y v (x ^ z))",
}

THEORY = {name: parse_statement(src) for name, src in _THEORY_SOURCE.items()}
