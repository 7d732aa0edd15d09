"""
Textual grammars for every term species.

    db      v(N) | l(T) | a(T,T)
    comp    v(K,N) | a(K,T,T)
    std     xN | fN | l(xN,T) | a(T,T)
    tree    x | T>T          (> right-associative)
    sk      s | k | T*T      (* left-associative)

Whitespace is ignored. Printing uses the fewest parentheses the grammar
allows, except that tree nodes always parenthesize compound children.
"""

from typing import List

from lambda_playground.errors import TermSyntaxError
from lambda_playground.terms.core import (
    A, Ap, Atom, Bin, CA, CV, Hole, K, L, LEAF, Lam, Leaf, Node, S, U, Un,
    V, App, Var,
)

GRAMMARS = ("db", "comp", "std", "tree", "sk")


class _Parser:
    """Recursive-descent reader over a string."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise TermSyntaxError(message, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def number(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def done(self):
        if self.peek():
            self.error("trailing input")

    # grammars

    def db(self):
        c = self.peek()
        if c == "v":
            self.pos += 1
            self.expect("(")
            n = self.number()
            self.expect(")")
            return V(n)
        if c == "l":
            self.pos += 1
            self.expect("(")
            body = self.db()
            self.expect(")")
            return L(body)
        if c == "a":
            self.pos += 1
            self.expect("(")
            f = self.db()
            self.expect(",")
            x = self.db()
            self.expect(")")
            return A(f, x)
        self.error("expected v(..), l(..) or a(..)")

    def comp(self):
        c = self.peek()
        if c == "v":
            self.pos += 1
            self.expect("(")
            k = self.number()
            self.expect(",")
            n = self.number()
            self.expect(")")
            return CV(k, n)
        if c == "a":
            self.pos += 1
            self.expect("(")
            k = self.number()
            self.expect(",")
            x = self.comp()
            self.expect(",")
            y = self.comp()
            self.expect(")")
            return CA(k, x, y)
        self.error("expected v(K,N) or a(K,..)")

    def ident(self) -> str:
        c = self.peek()
        if c not in ("x", "f"):
            self.error("expected a variable name xN or fN")
        self.pos += 1
        return c + str(self.number())

    def std(self):
        c = self.peek()
        if c == "l":
            self.pos += 1
            self.expect("(")
            name = self.ident()
            if name.startswith("f"):
                self.error("binder names must have the form xN")
            self.expect(",")
            body = self.std()
            self.expect(")")
            return Lam(name, body)
        if c == "a":
            self.pos += 1
            self.expect("(")
            f = self.std()
            self.expect(",")
            x = self.std()
            self.expect(")")
            return App(f, x)
        return Var(self.ident())

    def tree(self):
        left = self.tree_atom()
        if self.peek() == ">":
            self.pos += 1
            return Node(left, self.tree())
        return left

    def tree_atom(self):
        c = self.peek()
        if c == "x":
            self.pos += 1
            return LEAF
        if c == "(":
            self.pos += 1
            t = self.tree()
            self.expect(")")
            return t
        self.error("expected x or (")

    def sk(self):
        t = self.sk_atom()
        while self.peek() == "*":
            self.pos += 1
            t = Ap(t, self.sk_atom())
        return t

    def sk_atom(self):
        c = self.peek()
        if c == "s":
            self.pos += 1
            return S
        if c == "k":
            self.pos += 1
            return K
        if c == "(":
            self.pos += 1
            t = self.sk()
            self.expect(")")
            return t
        self.error("expected s, k or (")


def parse_term(text: str, grammar: str):
    """
    Parse text in the given grammar.

    Args:
        text: Term text
        grammar: One of db, comp, std, tree, sk

    Returns:
        The parsed term

    Raises:
        TermSyntaxError: with the offset of the first offending character
    """
    if grammar not in GRAMMARS:
        raise ValueError(f"unknown grammar {grammar!r}, expected one of {GRAMMARS}")
    parser = _Parser(text)
    term = getattr(parser, grammar)()
    parser.done()
    return term


def hole_name(ident: int) -> str:
    """A, B, ..., Z, A1, B1, ... like Prolog's variable naming."""
    letter = chr(ord("A") + ident % 26)
    return letter if ident < 26 else f"{letter}{ident // 26}"


def grammar_of(term) -> str:
    if isinstance(term, (V, L, A)):
        return "db"
    if isinstance(term, (CV, CA)):
        return "comp"
    if isinstance(term, (Var, Lam, App)):
        return "std"
    if isinstance(term, (Leaf, Node)):
        return "tree"
    if isinstance(term, (Atom, Ap, Hole)):
        return "sk"
    if isinstance(term, (U, Un, Bin)):
        return "motzkin"
    raise TypeError(f"not a term: {term!r}")


def print_term(term, grammar: str = None) -> str:
    """Render a term; the grammar defaults to the one of its species."""
    out: List[str] = []
    _emit(term, grammar or grammar_of(term), out)
    return "".join(out)


def _emit(t, grammar: str, out: List[str]):
    if grammar == "tree":
        if isinstance(t, Leaf):
            out.append("x")
            return
        for child, sep in ((t.left, ">"), (t.right, "")):
            if isinstance(child, Node):
                out.append("(")
                _emit(child, grammar, out)
                out.append(")")
            else:
                out.append("x")
            out.append(sep)
        return
    if grammar == "sk":
        if isinstance(t, Atom):
            out.append(t.name)
        elif isinstance(t, Hole):
            out.append(hole_name(t.ident))
        else:
            _emit(t.left, grammar, out)
            out.append("*")
            if isinstance(t.right, Ap):
                out.append("(")
                _emit(t.right, grammar, out)
                out.append(")")
            else:
                _emit(t.right, grammar, out)
        return
    if isinstance(t, V):
        out.append(f"v({t.index})")
    elif isinstance(t, CV):
        out.append(f"v({t.k},{t.n})")
    elif isinstance(t, Var):
        out.append(t.name)
    elif isinstance(t, U):
        out.append("u")
    elif isinstance(t, (L, Un)):
        out.append("l(")
        _emit(t.body if isinstance(t, L) else t.child, grammar, out)
        out.append(")")
    elif isinstance(t, Lam):
        out.append(f"l({t.name},")
        _emit(t.body, grammar, out)
        out.append(")")
    elif isinstance(t, CA):
        out.append(f"a({t.k},")
        _emit(t.x, grammar, out)
        out.append(",")
        _emit(t.y, grammar, out)
        out.append(")")
    else:
        fun, arg = (t.fun, t.arg) if isinstance(t, (A, App)) else (t.left, t.right)
        out.append("a(")
        _emit(fun, grammar, out)
        out.append(",")
        _emit(arg, grammar, out)
        out.append(")")
