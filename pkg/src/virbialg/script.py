"""A tiny single-assignment script language for algebraic input.

    # comments run to end of line
    r = d1 (x) L(1;0) - L(1;0) (x) d1;
    x = 2*L(1;0) - 1/2*d1;
    cybe(r=r)

Expressions: scalars (``3/4``, ``1/2+1/3i``, ``-i``), degrees ``(p;q)``,
elements built from ``L(p;q)``, ``d1``, ``d2``, tensor products ``(x)``,
brackets ``[x, y]``, tables ``{ d1: t, L(1;0): t }`` and a few
constructor calls (``michaelis``, ``tabulate``, ``twist``, ``antisym``,
``act``, ``cybe``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import D1, D2, LieElt, Lsym, bracket
from .lattice import Degree
from .scalars import I, ZERO, Scalar
from .tensor import Tensor2, Tensor3, act, antisymmetrize, tensor, twist

__all__ = [
    "ScriptSyntaxError",
    "ScriptTypeError",
    "Node",
    "Script",
    "parse",
    "parse_expr",
    "parse_scalar",
    "parse_degree",
    "parse_element",
    "COMMANDS",
]


class ScriptSyntaxError(SyntaxError):
    def __init__(self, msg, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{msg} at line {line}, column {col}")


class ScriptTypeError(TypeError):
    def __init__(self, msg, binding=None):
        self.binding = binding
        super().__init__(f"{msg}" + (f" (in binding '{binding}')" if binding else ""))


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<tens>\(x\))
  | (?P<num>\d+(?:/\d+)?i?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[()\[\]{};,=+\-*:])
    """,
    re.VERBOSE,
)

RESERVED = {"L", "d1", "d2", "i"}


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def _linecol(src: str, pos: int) -> tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ScriptSyntaxError(f"unexpected character {src[pos]!r}", *_linecol(src, pos))
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(src)))
    return out


@dataclass
class Node:
    kind: str
    args: tuple
    pos: int
    type: str = ""


# ---------------------------------------------------------------------------
# types

ADDITIVE = {"Scalar", "Degree", "LieElt", "Tensor2", "Tensor3"}

# name -> (required args, optional args, result type or None for commands)
CALLS = {
    "michaelis": ({"d": {"LieElt"}, "alpha": {"Degree"}}, {}, "Tensor2"),
    "tabulate": ({"r": {"Tensor2"}}, {"radius": {"Scalar"}}, "Table"),
    "twist": ({"t": {"Tensor2"}}, {}, "Tensor2"),
    "antisym": ({"t": {"Tensor2"}}, {}, "Tensor2"),
    "act": ({"x": {"LieElt"}, "t": {"Tensor2", "Tensor3"}}, {}, None),
    "cybe": ({"r": {"Tensor2"}}, {}, "Tensor3"),
}

COMMANDS = {
    "cybe": ({"r": {"Tensor2"}}, {}),
    "mybe": ({"r": {"Tensor2"}}, {"x": {"LieElt"}}),
    "cobracket": ({"x": {"LieElt"}}, {"r": {"Tensor2"}, "D": {"Table"}}),
    "michaelis": ({"d": {"LieElt"}, "alpha": {"Degree"}}, {}),
    "axioms": ({}, {"r": {"Tensor2"}, "D": {"Table"}, "radius": {"Scalar"}}),
    "innerize": ({"D": {"Table"}, "alpha": {"Degree"}}, {}),
    "innerize0": ({"D": {"Table"}}, {}),
    "witness": ({"c": {"Tensor2", "Tensor3"}}, {}),
    "reduce": ({"r": {"Tensor2"}}, {}),
    "classify": ({}, {"D": {"Table"}, "r": {"Tensor2"}}),
}

ONE_OF = {"cobracket": ("r", "D"), "axioms": ("r", "D"), "classify": ("D", "r")}


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ScriptSyntaxError(msg, *_linecol(self.src, tok.pos))

    def accept(self, text) -> bool:
        if self.tok.kind in ("op", "tens") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            got = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, got {got!r}")

    # script := (ident '=' expr ';')* [ident '(' args ')' ';'?]
    def script(self):
        bindings = []
        command = None
        while self.tok.kind != "eof":
            if self.tok.kind != "ident":
                raise self.error(f"expected a binding or command, got {self.tok.text!r}")
            name_tok = self.tok
            if self.peek().text == "=":
                if command is not None:
                    raise self.error("bindings must precede the command", name_tok)
                if name_tok.text in RESERVED:
                    raise self.error(f"'{name_tok.text}' is reserved", name_tok)
                self.i += 2
                e = self.expr()
                self.expect(";")
                bindings.append((name_tok.text, e))
            elif self.peek().text == "(":
                if command is not None:
                    raise self.error("only one command per script", name_tok)
                self.i += 1
                args = self.call_args()
                command = (name_tok.text, args, name_tok.pos, self.toks[self.i - 1].pos + 1)
                self.accept(";")
            else:
                raise self.error(f"expected '=' or '(' after {name_tok.text!r}", self.peek())
        return bindings, command

    def call_args(self, positional=()) -> dict:
        """Named arguments; ``positional`` names may also be passed in order first."""
        self.expect("(")
        args = {}
        if self.accept(")"):
            return args
        k = 0
        while True:
            if self.tok.kind == "ident" and self.peek().text == "=":
                name = self.tok.text
                self.i += 2
            elif k < len(positional) and k == len(args):
                name = positional[k]
                k += 1
            else:
                raise self.error("expected name=expr argument")
            if name in args:
                raise self.error(f"duplicate argument {name!r}")
            args[name] = self.expr()
            if self.accept(")"):
                return args
            self.expect(",")

    # expr := ['+'|'-'] term (('+'|'-') term)*
    def expr(self) -> Node:
        pos = self.tok.pos
        if self.accept("-"):
            node = Node("neg", (self.term(),), pos)
        else:
            self.accept("+")
            node = self.term()
        while True:
            pos = self.tok.pos
            if self.accept("+"):
                node = Node("add", (node, self.term()), pos)
            elif self.accept("-"):
                node = Node("sub", (node, self.term()), pos)
            else:
                return node

    def _starts_factor(self) -> bool:
        t = self.tok
        if t.kind in ("num", "ident"):
            return True
        return t.kind == "op" and t.text in ("(", "[", "{")

    # term := factor (('*' | '(x)' | juxtaposition) factor)*
    def term(self) -> Node:
        node = self.factor()
        while True:
            pos = self.tok.pos
            if self.accept("*"):
                node = Node("mul", (node, self.factor()), pos)
            elif self.accept("(x)"):
                node = Node("tens", (node, self.factor()), pos)
            elif self._starts_factor():
                node = Node("mul", (node, self.factor()), pos)
            else:
                return node

    def factor(self) -> Node:
        t = self.tok
        pos = t.pos
        if self.accept("-"):
            return Node("neg", (self.factor(),), pos)
        if t.kind == "num":
            self.i += 1
            text = t.text
            imag = text.endswith("i")
            if imag:
                text = text[:-1]
            num, _, den = text.partition("/")
            if den and int(den) == 0:
                raise self.error("zero denominator", t)
            from fractions import Fraction

            q = Fraction(int(num), int(den) if den else 1)
            return Node("num", (Scalar(0, q) if imag else Scalar(q),), pos)
        if t.kind == "ident":
            self.i += 1
            if t.text == "i":
                return Node("num", (I,), pos)
            if t.text == "d1":
                return Node("sym", (D1,), pos)
            if t.text == "d2":
                return Node("sym", (D2,), pos)
            if t.text == "L":
                if self.tok.text != "(":
                    raise self.error("expected a degree after L")
                deg = self.paren()
                if deg.kind != "degree":
                    raise self.error("expected a degree (p;q) after L", t)
                return Node("L", (deg,), pos)
            if self.tok.text == "(" and t.text in CALLS:
                req, opt, _ = CALLS[t.text]
                return Node("call", (t.text, self.call_args((*req, *opt))), pos)
            return Node("var", (t.text,), pos)
        if t.kind == "op":
            if t.text == "(":
                return self.paren()
            if t.text == "[":
                self.i += 1
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect("]")
                return Node("bracket", (a, b), pos)
            if t.text == "{":
                return self.table()
        raise self.error(f"unexpected {t.text or 'end of input'!r}")

    def paren(self) -> Node:
        pos = self.tok.pos
        self.expect("(")
        a = self.expr()
        if self.accept(";"):
            b = self.expr()
            self.expect(")")
            return Node("degree", (a, b), pos)
        self.expect(")")
        return a

    def table(self) -> Node:
        pos = self.tok.pos
        self.expect("{")
        entries = []
        if not self.accept("}"):
            while True:
                kpos = self.tok
                key = self.factor()
                if key.kind not in ("sym", "L"):
                    raise self.error("table keys must be basis symbols d1, d2 or L(p;q)", kpos)
                self.expect(":")
                entries.append((key, self.expr()))
                if self.accept("}"):
                    break
                self.expect(",")
        return Node("table", tuple(entries), pos)


# ---------------------------------------------------------------------------
# type inference


def _unify_add(a: str, b: str) -> str | None:
    if a == "Zero":
        return b
    if b == "Zero":
        return a
    if a == b and a in ADDITIVE:
        return a
    return None


def _fits(t: str, allowed: set) -> bool:
    return t in allowed or (t == "Zero" and bool(allowed & (ADDITIVE | {"Table"})))


class _Typer:
    def __init__(self, src: str, env: dict):
        self.src = src
        self.env = env
        self.binding = None

    def fail(self, msg, node):
        line, col = _linecol(self.src, node.pos)
        raise ScriptTypeError(f"{msg} at line {line}, column {col}", self.binding)

    def check(self, n: Node) -> str:
        n.type = self._check(n)
        return n.type

    def _check(self, n: Node) -> str:
        k = n.kind
        if k == "num":
            return "Zero" if not n.args[0] else "Scalar"
        if k in ("sym",):
            return "LieElt"
        if k == "L":
            self.check(n.args[0])
            return "LieElt"
        if k == "var":
            name = n.args[0]
            if name not in self.env:
                self.fail(f"unknown name '{name}'", n)
            return self.env[name]
        if k == "neg":
            t = self.check(n.args[0])
            if t not in ADDITIVE and t != "Zero":
                self.fail(f"cannot negate {t}", n)
            return t
        if k in ("add", "sub"):
            a, b = (self.check(x) for x in n.args)
            t = _unify_add(a, b)
            if t is None:
                self.fail(f"cannot add {a} and {b}", n)
            return t
        if k == "mul":
            a, b = (self.check(x) for x in n.args)
            if a in ("Scalar", "Zero") and b in ("Scalar", "Zero"):
                return "Scalar" if "Zero" not in (a, b) else "Zero"
            if a in ("Scalar", "Zero") and b in ADDITIVE:
                return b
            if b in ("Scalar", "Zero") and a in ADDITIVE:
                return a
            self.fail(f"cannot multiply {a} by {b}", n)
        if k == "tens":
            a, b = (self.check(x) for x in n.args)
            arity = {"LieElt": 1, "Tensor2": 2}
            if a not in arity or b not in arity or arity[a] + arity[b] > 3:
                self.fail(f"cannot form {a} (x) {b}", n)
            return "Tensor2" if arity[a] + arity[b] == 2 else "Tensor3"
        if k == "bracket":
            a, b = (self.check(x) for x in n.args)
            if not (_fits(a, {"LieElt"}) and _fits(b, {"LieElt"})):
                self.fail(f"cannot bracket {a} with {b}", n)
            return "LieElt"
        if k == "degree":
            a, b = (self.check(x) for x in n.args)
            if not (_fits(a, {"Scalar"}) and _fits(b, {"Scalar"})):
                self.fail("degree coordinates must be scalars", n)
            return "Degree"
        if k == "table":
            for key, val in n.args:
                self.check(key)
                t = self.check(val)
                if not _fits(t, {"Tensor2"}):
                    self.fail(f"table values must be Tensor2, got {t}", val)
            return "Table"
        if k == "call":
            name, args = n.args
            req, opt, result = CALLS[name]
            self.check_args(name, args, req, opt, n)
            if result is None:  # act: same type as t
                return args["t"].type if args["t"].type != "Zero" else "Tensor2"
            return result
        raise AssertionError(k)

    def check_args(self, name, args, req, opt, n):
        for a in req:
            if a not in args:
                self.fail(f"{name}() needs argument '{a}'", n)
        for a, node in args.items():
            allowed = req.get(a) or opt.get(a)
            if allowed is None:
                self.fail(f"{name}() has no argument '{a}'", node)
            t = self.check(node)
            if not _fits(t, allowed):
                self.fail(f"{name}(): argument '{a}' must be {' or '.join(sorted(allowed))}, got {t}", node)


# ---------------------------------------------------------------------------
# evaluation


def _coerce(value, typ: str):
    if isinstance(value, Scalar) and not value:
        if typ == "LieElt":
            return LieElt.zero()
        if typ == "Tensor2":
            return Tensor2.zero()
        if typ == "Tensor3":
            return Tensor3.zero()
        if typ == "Table":
            return {}
    return value


class _Evaluator:
    def __init__(self, env: dict, radius: int = 5):
        self.env = env
        self.radius = radius

    def ev(self, n: Node, want: str | None = None):
        v = self._ev(n)
        if want:
            v = _coerce(v, want)
        return v

    def _pair(self, n: Node):
        a, b = n.args
        t = n.type if n.type != "Zero" else "Scalar"
        return self.ev(a, t), self.ev(b, t)

    def _ev(self, n: Node):
        k = n.kind
        if k == "num":
            return n.args[0]
        if k == "sym":
            return LieElt.basis(n.args[0])
        if k == "L":
            return LieElt.basis(Lsym(self.ev(n.args[0])))
        if k == "var":
            return self.env[n.args[0]]
        if k == "neg":
            return -self.ev(n.args[0])
        if k == "add":
            a, b = self._pair(n)
            return a + b
        if k == "sub":
            a, b = self._pair(n)
            return a - b
        if k == "mul":
            a, b = (self.ev(x) for x in n.args)
            if isinstance(a, Scalar) and isinstance(b, Scalar):
                return a * b
            if isinstance(a, Scalar):
                return _coerce(b, n.type).scale(a)
            return _coerce(a, n.type).scale(b)
        if k == "tens":
            a, b = (self.ev(x) for x in n.args)
            return _tensor_product(a, b)
        if k == "bracket":
            a, b = (self.ev(x, "LieElt") for x in n.args)
            return bracket(a, b)
        if k == "degree":
            a, b = (self.ev(x, "Scalar") for x in n.args)
            return Degree(a, b)
        if k == "table":
            out = {}
            for key, val in n.args:
                sym_elt = self.ev(key)
                if len(sym_elt) != 1:
                    raise ScriptTypeError(f"table key {sym_elt} is not a basis symbol")
                (sym, _), = sym_elt.items()
                out[sym] = self.ev(val, "Tensor2")
            return out
        if k == "call":
            return self.call(*n.args)
        raise AssertionError(k)

    def call(self, name, args):
        from .bialgebra import cybe_residual, michaelis_r
        from .cohomology import box_window

        a = {}
        req, opt, _ = CALLS[name]
        for key, node in args.items():
            want = sorted(req.get(key) or opt.get(key))[0]
            a[key] = self.ev(node, want)
        if name == "michaelis":
            return michaelis_r(a["d"].to_cartan(), a["alpha"])
        if name == "tabulate":
            radius = _as_int(a.get("radius", Scalar(self.radius)))
            return {s: act(LieElt.basis(s), a["r"]) for s in box_window(radius)}
        if name == "twist":
            return twist(a["t"])
        if name == "antisym":
            return antisymmetrize(a["t"])
        if name == "act":
            return act(a["x"], a["t"])
        if name == "cybe":
            return cybe_residual(a["r"])
        raise AssertionError(name)


def _as_int(s: Scalar) -> int:
    if s.im or s.re.denominator != 1 or s.re < 0:
        raise ScriptTypeError(f"expected a nonnegative integer, got {s}")
    return int(s.re)


def _tensor_product(a, b):
    if isinstance(a, LieElt) and isinstance(b, LieElt):
        return tensor(a, b)
    out: dict = {}
    for ka, ca in a.items():
        ka = ka if isinstance(ka, tuple) else (ka,)
        for kb, cb in b.items():
            kb = kb if isinstance(kb, tuple) else (kb,)
            k = ka + kb
            nv = out.get(k, ZERO) + ca * cb
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return Tensor3._raw(out)


# ---------------------------------------------------------------------------
# public API


@dataclass
class Script:
    source: str
    bindings: list
    command: tuple | None
    types: dict = field(default_factory=dict)

    def evaluate(self, radius: int = 5) -> dict:
        env: dict = {}
        ev = _Evaluator(env, radius)
        for name, node in self.bindings:
            env[name] = ev.ev(node, node.type if node.type != "Zero" else None)
        return env

    @property
    def command_text(self) -> str:
        if self.command is None:
            return ""
        start, end = self.command[2:]
        return " ".join(self.source[start:end].split())

    def command_args(self, env: dict, radius: int = 5) -> dict:
        name, args = self.command[:2]
        req, opt = COMMANDS[name]
        ev = _Evaluator(env, radius)
        out = {}
        for key, node in args.items():
            want = sorted(req.get(key) or opt.get(key))[0]
            if node.type in (req.get(key) or opt.get(key)):
                want = node.type
            out[key] = ev.ev(node, want)
        return out


def parse(source: str) -> Script:
    """Parse and type-check a script."""
    p = _Parser(source)
    bindings, command = p.script()
    env: dict = {}
    typer = _Typer(source, env)
    for name, node in bindings:
        if name in env:
            raise ScriptTypeError(f"'{name}' is bound twice", name)
        typer.binding = name
        env[name] = typer.check(node)
    typer.binding = None
    if command is not None:
        name, args, pos, _ = command
        if name not in COMMANDS:
            line, col = _linecol(source, pos)
            raise ScriptSyntaxError(f"unknown command '{name}'", line, col)
        req, opt = COMMANDS[name]
        typer.check_args(name, args, req, opt, Node("call", (), pos))
        if name in ONE_OF:
            given = [a for a in ONE_OF[name] if a in args]
            if len(given) != 1:
                line, col = _linecol(source, pos)
                raise ScriptTypeError(
                    f"{name}() needs exactly one of {', '.join(ONE_OF[name])} (line {line}, column {col})"
                )
    return Script(source, bindings, command, dict(env))


def parse_expr(text: str, env: dict | None = None):
    """Evaluate a single expression (no bindings, no command)."""
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r}")
    types = {k: _type_of(v) for k, v in (env or {}).items()}
    _Typer(text, types).check(node)
    return _Evaluator(dict(env or {})).ev(node)


def _type_of(v) -> str:
    for cls, name in ((Scalar, "Scalar"), (Degree, "Degree"), (LieElt, "LieElt"), (Tensor2, "Tensor2"), (Tensor3, "Tensor3")):
        if isinstance(v, cls):
            return name
    if isinstance(v, dict):
        return "Table"
    raise TypeError(type(v))


def parse_scalar(text: str) -> Scalar:
    v = parse_expr(text)
    if not isinstance(v, Scalar):
        raise ScriptTypeError(f"{text!r} is not a scalar")
    return v


def parse_degree(text: str) -> Degree:
    v = parse_expr(text)
    if not isinstance(v, Degree):
        raise ScriptTypeError(f"{text!r} is not a degree")
    return v


def parse_element(text: str, arity: int | None = None):
    """Parse a LieElt / Tensor2 / Tensor3; a bare ``0`` needs ``arity``."""
    v = parse_expr(text)
    if isinstance(v, Scalar) and not v and arity:
        return _coerce(v, {1: "LieElt", 2: "Tensor2", 3: "Tensor3"}[arity])
    if not isinstance(v, (LieElt, Tensor2, Tensor3)):
        raise ScriptTypeError(f"{text!r} is not an element or tensor")
    return v
