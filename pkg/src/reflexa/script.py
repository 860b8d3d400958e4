"""A small definition language for rings, ideals and modules, and its runner.

Example::

    ring R = poly(QQ, [X,Y,Z,W], degrevlex) / ideal(X*Z-Y^2, X*W-Y*Z, Y*W-Z^2);
    ring T = R / ideal(X);
    ideal J = (Y, Z) in T;
    module TJ = cyclic(T, J);
    ext 1 TJ T expect 1;
    reflexive TJ;
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from .groebner import (FreeVector, Ideal, buchberger, colon_ideal, ideal_equal)
from .homological import dual_module, ext_module, free_resolution, hom_module, is_reflexive, \
    lemma_composite_check
from .modules import (INFINITE, PresentedModule, annihilator, free_module, ideal_module,
                      is_zero_module, k_dimension, make_presented)
from .ring_core import ParseError, QuotientRing, parse_field, parse_polynomial_raw

COMMANDS = {
    # name: (argument kinds, description)
    "gb": (("obj",), "reduced Groebner basis of an ideal or of a module's relations"),
    "resolve": (("module", "int?"), "free resolution ranks"),
    "hom": (("module", "module"), "Hom(M, N)"),
    "ext": (("int", "module", "module"), "Ext^i(M, N)"),
    "dual": (("module",), "dual module"),
    "reflexive": (("module",), "is the evaluation map an isomorphism"),
    "lemma": (("module",), "(h_N)^* o h_{N^*} == identity"),
    "annihilator": (("module",), "annihilator ideal"),
    "colon": (("ideal", "ideal"), "colon ideal (I : J)"),
    "kdim": (("module",), "dimension over the coefficient field"),
    "equal": (("ideal", "ideal"), "ideal equality"),
    "iszero": (("module",), "is the module zero"),
}

MODULE_FORMS = {"coker", "cyclic", "free", "hom", "dual", "ext", "ideal"}


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class RingStmt:
    name: str
    field: str | None = None
    variables: tuple[str, ...] = ()
    order: str = "degrevlex"
    base: str | None = None
    ideal: tuple[str, ...] | None = None

    def __str__(self):
        if self.base is not None:
            head = self.base
        else:
            head = f"poly({self.field}, [{', '.join(self.variables)}], {self.order})"
        tail = "" if self.ideal is None else f" / ideal({', '.join(self.ideal)})"
        return f"ring {self.name} = {head}{tail};"


@dataclass(frozen=True)
class IdealStmt:
    name: str
    gens: tuple[str, ...]
    ring: str | None = None

    def __str__(self):
        suffix = f" in {self.ring}" if self.ring else ""
        return f"ideal {self.name} = ({', '.join(self.gens)}){suffix};"


@dataclass(frozen=True)
class ModuleStmt:
    name: str
    form: str
    args: tuple = ()

    def __str__(self):
        parts = []
        for a in self.args:
            if isinstance(a, tuple) and a and a[0] == "polys":
                parts.append("(" + ", ".join(a[1]) + ")")
            elif isinstance(a, tuple) and a and a[0] == "matrix":
                parts.append("[" + ", ".join("[" + ", ".join(col) + "]" for col in a[1]) + "]")
            else:
                parts.append(str(a))
        return f"module {self.name} = {self.form}({', '.join(parts)});"


@dataclass(frozen=True)
class CommandStmt:
    command: str
    args: tuple = ()
    expect: str | None = None

    def __str__(self):
        s = " ".join([self.command] + [str(a) for a in self.args])
        if self.expect is not None:
            s += f" expect {self.expect}"
        return s + ";"


@dataclass(frozen=True)
class Script:
    statements: tuple = ()

    def __str__(self):
        return "\n".join(str(s) for s in self.statements) + ("\n" if self.statements else "")


def format_script(script: Script) -> str:
    return str(script)


# ---------------------------------------------------------------- parser


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def where(self, pos: int | None = None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None):
        line, col = self.where(pos)
        return ParseError(msg, line, col)

    def skip(self):
        t = self.text
        while self.pos < len(t):
            if t[self.pos].isspace():
                self.pos += 1
            elif t[self.pos] == "#":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl + 1
            else:
                break

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        self.skip()
        if not self.text.startswith(s, self.pos):
            found = self.text[self.pos:self.pos + 12] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def ident(self, what: str = "name") -> str:
        self.skip()
        t = self.text
        start = self.pos
        if start < len(t) and (t[start].isalpha() or t[start] == "_"):
            end = start + 1
            while end < len(t) and (t[end].isalnum() or t[end] == "_"):
                end += 1
            self.pos = end
            return t[start:end]
        raise self.error(f"expected {what}")

    def integer(self) -> int:
        self.skip()
        t = self.text
        start = self.pos
        end = start
        while end < len(t) and t[end].isdigit():
            end += 1
        if end == start:
            raise self.error("expected an integer")
        self.pos = end
        return int(t[start:end])

    def raw_until(self, stops: str) -> tuple[str, int]:
        """Raw text up to a top-level stop character; returns (stripped text, start offset)."""
        self.skip()
        t = self.text
        start = self.pos
        depth = 0
        i = start
        while i < len(t):
            ch = t[i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0 and ")" in stops:
                    break
                depth -= 1
            elif depth == 0 and ch in stops:
                break
            elif ch == ";" and depth == 0:
                break
            i += 1
        self.pos = i
        return t[start:i].strip(), start


class _Parser:
    def __init__(self, text: str):
        self.s = _Scanner(text)
        self.rings: dict[str, tuple[str, ...]] = {}
        self.ideals: dict[str, str] = {}
        self.modules: dict[str, str] = {}
        self.current_ring: str | None = None

    def parse(self) -> Script:
        stmts = []
        while not self.s.at_end():
            stmts.append(self.statement())
            self.s.expect(";")
        return Script(tuple(stmts))

    # -- helpers

    def known_ring(self, name: str, pos: int) -> tuple[str, ...]:
        if name not in self.rings:
            raise self.s.error(f"unknown ring {name!r}", pos)
        return self.rings[name]

    def poly_list(self, variables, close: str) -> tuple[str, ...]:
        out = []
        if self.s.peek(close):
            return ()
        while True:
            text, start = self.s.raw_until("," + close)
            if not text:
                raise self.s.error("empty polynomial", start)
            if variables is not None:
                try:
                    parse_polynomial_raw(text, variables, parse_field("QQ"))
                except ParseError as e:
                    lead = len(self.s.text[start:]) - len(self.s.text[start:].lstrip())
                    raise self.s.error(e.message, start + lead + e.column - 1) from None
            out.append(text)
            if self.s.peek(","):
                self.s.expect(",")
                continue
            break
        return tuple(out)

    def object_ref(self, kinds: tuple[str, ...]) -> str:
        pos = self.s.pos
        self.s.skip()
        pos = self.s.pos
        name = self.s.ident()
        for k in kinds:
            table = {"ring": self.rings, "ideal": self.ideals, "module": self.modules}[k]
            if name in table:
                return name
        raise self.s.error(f"unknown symbol {name!r}", pos)

    # -- statements

    def statement(self):
        self.s.skip()
        start = self.s.pos
        word = self.s.ident("statement")
        if word == "ring":
            return self.ring_stmt()
        if word == "ideal":
            return self.ideal_stmt()
        if word == "module":
            return self.module_stmt()
        if word in COMMANDS:
            return self.command(word)
        raise self.s.error(f"unknown statement {word!r}", start)

    def ring_stmt(self) -> RingStmt:
        name = self.s.ident("ring name")
        self.s.expect("=")
        self.s.skip()
        pos = self.s.pos
        head = self.s.ident("'poly' or a ring name")
        if head == "poly":
            self.s.expect("(")
            field_text, fpos = self.s.raw_until(",")
            try:
                parse_field(field_text)
            except ValueError as e:
                raise self.s.error(str(e), fpos) from None
            self.s.expect(",")
            self.s.expect("[")
            variables = [self.s.ident("variable")]
            while self.s.peek(","):
                self.s.expect(",")
                variables.append(self.s.ident("variable"))
            self.s.expect("]")
            order = "degrevlex"
            if self.s.peek(","):
                self.s.expect(",")
                self.s.skip()
                opos = self.s.pos
                order = self.s.ident("monomial order")
                if order not in ("lex", "degrevlex"):
                    raise self.s.error(f"unknown monomial order {order!r}", opos)
            self.s.expect(")")
            stmt_vars = tuple(variables)
            if len(set(stmt_vars)) != len(stmt_vars):
                raise self.s.error("duplicate variable names", pos)
            base = None
            field_name = field_text
        else:
            stmt_vars = self.known_ring(head, pos)
            base, field_name, order = head, None, "degrevlex"
        ideal = None
        if self.s.peek("/"):
            self.s.expect("/")
            kw = self.s.ident("'ideal'")
            if kw != "ideal":
                raise self.s.error("expected 'ideal'")
            self.s.expect("(")
            ideal = self.poly_list(stmt_vars, ")")
            self.s.expect(")")
        elif base is not None:
            raise self.s.error("expected '/ ideal(...)' after a ring name")
        self.rings[name] = stmt_vars
        self.current_ring = name
        if base is not None:
            return RingStmt(name, base=base, ideal=ideal)
        return RingStmt(name, field=field_name, variables=stmt_vars, order=order, ideal=ideal)

    def ideal_stmt(self) -> IdealStmt:
        name = self.s.ident("ideal name")
        self.s.expect("=")
        self.s.expect("(")
        save = self.s.pos
        # ring may follow; parse texts first, validate after
        gens = self.poly_list(None, ")")
        self.s.expect(")")
        ring = None
        self.s.skip()
        if self.s.peek("in") and not self.s.text[self.s.pos + 2:self.s.pos + 3].isalnum():
            self.s.expect("in")
            self.s.skip()
            rpos = self.s.pos
            ring = self.s.ident("ring name")
            self.known_ring(ring, rpos)
        target = ring or self.current_ring
        if target is None:
            raise self.s.error("no ring defined before this ideal", save)
        end = self.s.pos
        self.s.pos = save
        self.poly_list(self.rings[target], ")")
        self.s.pos = end
        self.ideals[name] = target
        return IdealStmt(name, gens, ring)

    def module_stmt(self) -> ModuleStmt:
        name = self.s.ident("module name")
        self.s.expect("=")
        self.s.skip()
        fpos = self.s.pos
        form = self.s.ident("module constructor")
        if form not in MODULE_FORMS:
            raise self.s.error(f"unknown module constructor {form!r}", fpos)
        self.s.expect("(")
        if form == "coker":
            ring = self.object_ref(("ring",))
            self.s.expect(",")
            rank = self.s.integer()
            self.s.expect(",")
            self.s.expect("[")
            cols = []
            while self.s.peek("["):
                self.s.expect("[")
                cpos = self.s.pos
                col = self.poly_list(self.rings[ring], "]")
                if len(col) != rank:
                    raise self.s.error(f"relation has {len(col)} entries, rank is {rank}", cpos)
                self.s.expect("]")
                cols.append(col)
                if self.s.peek(","):
                    self.s.expect(",")
            self.s.expect("]")
            args = (ring, rank, ("matrix", tuple(cols)))
        elif form == "cyclic":
            ring = self.object_ref(("ring",))
            self.s.expect(",")
            if self.s.peek("("):
                self.s.expect("(")
                gens = self.poly_list(self.rings[ring], ")")
                self.s.expect(")")
                args = (ring, ("polys", gens))
            else:
                args = (ring, self.object_ref(("ideal",)))
        elif form == "free":
            ring = self.object_ref(("ring",))
            self.s.expect(",")
            args = (ring, self.s.integer())
        elif form == "hom":
            a = self.object_ref(("module", "ring"))
            self.s.expect(",")
            args = (a, self.object_ref(("module", "ring")))
        elif form == "dual":
            args = (self.object_ref(("module", "ring")),)
        elif form == "ext":
            i = self.s.integer()
            self.s.expect(",")
            a = self.object_ref(("module", "ring"))
            self.s.expect(",")
            args = (i, a, self.object_ref(("module", "ring")))
        else:  # ideal
            args = (self.object_ref(("ideal",)),)
        self.s.expect(")")
        self.modules[name] = form
        return ModuleStmt(name, form, args)

    def command(self, word: str) -> CommandStmt:
        kinds, _ = COMMANDS[word]
        args = []
        for kind in kinds:
            self.s.skip()
            optional = kind.endswith("?")
            kind = kind.rstrip("?")
            if optional and (self.s.peek(";") or self.s.peek("expect")):
                break
            if kind == "int":
                args.append(self.s.integer())
            elif kind == "module":
                args.append(self.object_ref(("module", "ring")))
            elif kind == "ideal":
                args.append(self.object_ref(("ideal",)))
            else:
                args.append(self.object_ref(("ideal", "module", "ring")))
        expect = None
        if self.s.peek("expect"):
            self.s.expect("expect")
            expect, _ = self.s.raw_until(";")
            if not expect:
                raise self.s.error("expected a value after 'expect'")
            expect = " ".join(expect.split())
        if not self.s.peek(";"):
            raise self.s.error(f"too many arguments for {word!r}")
        return CommandStmt(word, tuple(args), expect)


def parse_script(text: str) -> Script:
    return _Parser(text).parse()


# ---------------------------------------------------------------- runner


@dataclass
class Report:
    command: str
    value: Any = None
    details: dict = field(default_factory=dict)
    field: str = ""
    verdict: str | None = None  # "PASS" / "FAIL" when an expectation was given
    error: str | None = None
    elapsed: float | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None or self.verdict == "FAIL"

    def as_dict(self, timing: bool = False) -> dict:
        d = {"command": self.command, "field": self.field, "value": _jsonable(self.value),
             "details": _jsonable(self.details), "verdict": self.verdict, "error": self.error}
        if timing:
            d["elapsed"] = self.elapsed
        return d

    def text(self, timing: bool = False) -> str:
        tag = self.verdict or ("ERROR" if self.error else "OK")
        val = self.error if self.error else _show(self.value)
        extra = ", ".join(f"{k}={_show(v)}" for k, v in self.details.items())
        line = f"[{tag:5}] {self.command:<32} = {val}"
        if extra:
            line += f"   ({extra})"
        if timing and self.elapsed is not None:
            line += f"   [{self.elapsed:.3f}s]"
        return line


def _jsonable(v):
    if isinstance(v, float) and v == INFINITE:
        return "infinite"
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _show(v) -> str:
    v = _jsonable(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


def render(reports: list[Report], fmt: str = "text", timing: bool = False) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict(timing) for r in reports], indent=2, sort_keys=True)
    return "\n".join(r.text(timing) for r in reports)


def _matches(expect: str, value, details: dict) -> bool:
    e = expect.strip().lower()
    v = _jsonable(value)
    if e in ("true", "false"):
        return isinstance(v, bool) and v == (e == "true")
    if e in ("zero", "nonzero"):
        z = details.get("zero")
        return z is not None and z == (e == "zero")
    if e == "infinite":
        return v == "infinite"
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        want = [x.replace(" ", "") for x in e.strip("[]").split(",") if x.strip()]
        return want == [x.replace(" ", "").lower() for x in v]
    if e.startswith("["):
        try:
            return [int(x) for x in e.strip("[]").split(",") if x.strip()] == list(v)
        except (TypeError, ValueError):
            return False
    try:
        return v == int(e)
    except ValueError:
        return str(v).lower() == e


class Session:
    """Symbol table and statement execution."""

    def __init__(self, field_override=None):
        self.rings: dict[str, QuotientRing] = {}
        self.ideals: dict[str, Ideal] = {}
        self.modules: dict[str, PresentedModule] = {}
        self.current_ring: str | None = None
        self.field_override = field_override

    def module(self, name: str) -> PresentedModule:
        if name in self.modules:
            return self.modules[name]
        return free_module(self.rings[name], 1)

    def define(self, st) -> None:
        if isinstance(st, RingStmt):
            if st.base is not None:
                ring = self.rings[st.base].quotient(st.ideal or ())
            else:
                f = self.field_override or parse_field(st.field)
                ring = QuotientRing(f, st.variables, st.order, st.ideal or ())
            self.rings[st.name] = ring
            self.current_ring = st.name
        elif isinstance(st, IdealStmt):
            ring = self.rings[st.ring or self.current_ring]
            self.ideals[st.name] = Ideal(ring, st.gens)
        elif isinstance(st, ModuleStmt):
            self.modules[st.name] = self._build(st)

    def _build(self, st: ModuleStmt) -> PresentedModule:
        a = st.args
        if st.form == "coker":
            ring = self.rings[a[0]]
            return make_presented(ring, a[1], [FreeVector(ring, col) for col in a[2][1]])
        if st.form == "cyclic":
            ring = self.rings[a[0]]
            gens = a[1][1] if isinstance(a[1], tuple) else self.ideals[a[1]].gens
            return make_presented(ring, 1, [FreeVector(ring, [ring(g)]) for g in gens])
        if st.form == "free":
            return free_module(self.rings[a[0]], a[1])
        if st.form == "hom":
            return hom_module(self.module(a[0]), self.module(a[1]))
        if st.form == "dual":
            return dual_module(self.module(a[0]))
        if st.form == "ext":
            return ext_module(a[0], self.module(a[1]), self.module(a[2]))
        return ideal_module(self.ideals[a[0]])

    def execute(self, st: CommandStmt) -> tuple[Any, dict]:
        c, a = st.command, st.args
        if c == "gb":
            name = a[0]
            if name in self.ideals:
                gens = self.ideals[name].reduced_basis()
                return [str(g) for g in gens], {"size": len(gens)}
            M = self.module(name)
            gens = buchberger(list(M.relations), M.ring, M.rank).generators
            return [str(g) for g in gens], {"size": len(gens)}
        if c == "resolve":
            length = a[1] if len(a) > 1 else 6
            res = free_resolution(self.module(a[0]), length)
            return res.ranks, {"complex": res.is_complex()}
        if c in ("hom", "ext", "dual"):
            if c == "hom":
                H = hom_module(self.module(a[0]), self.module(a[1]))
            elif c == "ext":
                H = ext_module(a[0], self.module(a[1]), self.module(a[2]))
            else:
                H = dual_module(self.module(a[0]))
            z = is_zero_module(H)
            return k_dimension(H), {"zero": z, "generators": H.rank}
        if c == "reflexive":
            rep = is_reflexive(self.module(a[0]))
            return rep.reflexive, {"torsionless": rep.torsionless, "coker_dim": rep.coker_dim}
        if c == "lemma":
            return lemma_composite_check(self.module(a[0])), {}
        if c == "annihilator":
            I = annihilator(self.module(a[0]))
            return [str(g) for g in I.reduced_basis()], {}
        if c == "colon":
            I = colon_ideal(self.ideals[a[0]], self.ideals[a[1]])
            return [str(g) for g in I.reduced_basis()], {}
        if c == "kdim":
            d = k_dimension(self.module(a[0]))
            return d, {"zero": d == 0}
        if c == "equal":
            return ideal_equal(self.ideals[a[0]], self.ideals[a[1]]), {}
        if c == "iszero":
            z = is_zero_module(self.module(a[0]))
            return z, {"zero": z}
        raise ValueError(f"unknown command {c!r}")


def run(script: Script, field_override=None, session: Session | None = None) -> list[Report]:
    """Execute statements in order; one report per command."""
    sess = session or Session(field_override)
    reports = []
    for st in script.statements:
        if not isinstance(st, CommandStmt):
            sess.define(st)
            continue
        ring = _command_ring(sess, st)
        rep = Report(str(st).rstrip(";"), field=repr(ring.field) if ring else "")
        t0 = time.perf_counter()
        try:
            rep.value, rep.details = sess.execute(st)
            if st.expect is not None:
                rep.verdict = "PASS" if _matches(st.expect, rep.value, rep.details) else "FAIL"
        except Exception as e:  # surfaced per command
            rep.error = f"{type(e).__name__}: {e}"
            if st.expect is not None:
                rep.verdict = "FAIL"
        rep.elapsed = time.perf_counter() - t0
        reports.append(rep)
    return reports


def _command_ring(sess: Session, st: CommandStmt):
    for a in st.args:
        if isinstance(a, str):
            if a in sess.modules:
                return sess.modules[a].ring
            if a in sess.ideals:
                return sess.ideals[a].ring
            if a in sess.rings:
                return sess.rings[a]
    return None


def exit_code(reports: list[Report]) -> int:
    return 1 if any(r.failed for r in reports) else 0
