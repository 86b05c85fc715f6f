"""Session state and the command table shared by the REPL and the batch runner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .. import algebra, projections, relations, thompson
from ..algebra import AlgebraElement
from ..errors import LeavittError
from ..polynomials import BivariatePolynomial
from ..rep import EventuallyPeriodicPath
from ..rings import ZZ, Ring
from ..tensor import TensorElement, independence_report, laurent_image, leg_left
from ..thompson import Table
from ..words import format_word
from .parser import ParseError, parse_and_evaluate


class CommandError(LeavittError, ValueError):
    pass


@dataclass
class Result:
    text: str
    data: object

    def render(self, as_json: bool) -> str:
        return json.dumps(self.data, sort_keys=True) if as_json else self.text


def split_args(text: str) -> list[str]:
    """Split on top-level commas if any, else on top-level whitespace.

    Braces and parentheses group, so tables and paths stay whole.
    """
    depth, parts, cur = 0, [], []
    has_comma = False
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "," and depth == 0:
            has_comma = True
    sep = (lambda c: c == ",") if has_comma else str.isspace
    depth = 0
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if depth == 0 and sep(ch):
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _bool(flag: bool) -> Result:
    return Result("true" if flag else "false", flag)


def _elem(x) -> Result:
    return Result(str(x), x.to_json())


@dataclass
class Session:
    ring: Ring = ZZ
    bindings: dict = field(default_factory=dict)

    # -- argument coercion -------------------------------------------------------

    def element(self, text: str) -> AlgebraElement:
        x = parse_and_evaluate(text, self.ring, self.bindings)
        if not isinstance(x, AlgebraElement):
            raise CommandError("expected an algebra element, got a tensor")
        return x

    def any_element(self, text: str):
        return parse_and_evaluate(text, self.ring, self.bindings)

    def table(self, text: str) -> Table:
        text = text.strip()
        if text in self.bindings:
            val = self.bindings[text]
            if not isinstance(val, Table):
                raise CommandError(f"{text} is not a table")
            return val
        if text.startswith("{"):
            return Table.parse(text)
        return thompson.from_unitary(self.element(text))

    def polynomial(self, text: str) -> BivariatePolynomial:
        text = text.strip()
        val = self.bindings.get(text)
        if isinstance(val, BivariatePolynomial):
            return val
        return BivariatePolynomial.parse(text, self.ring)

    def integer(self, text: str, what: str) -> int:
        try:
            return int(text)
        except ValueError:
            raise CommandError(f"expected an integer {what}, got {text!r}") from None

    # -- dispatch ----------------------------------------------------------------

    def run(self, line: str) -> Result:
        line = line.strip()
        if not line:
            return Result("", None)
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "let":
            return self._let(rest)
        fn = COMMANDS.get(head)
        if fn is None:
            raise CommandError(f"unknown command {head!r}; try 'help'")
        return fn(self, rest)

    def _let(self, rest: str) -> Result:
        name, eq, rhs = rest.partition("=")
        name, rhs = name.strip(), rhs.strip()
        if not eq or not name.isidentifier() or name in {"e", "ox"} or set(name) <= {"a", "b"}:
            raise CommandError("usage: let <name> = <expr | {table} | poly <polynomial>>")
        if rhs.startswith("{"):
            val = Table.parse(rhs)
        elif rhs.startswith("poly "):
            val = BivariatePolynomial.parse(rhs[5:], self.ring)
        else:
            val = self.any_element(rhs)
        self.bindings[name] = val
        data = val.to_json() if hasattr(val, "to_json") else str(val)
        return Result(f"{name} = {val}", {"name": name, "value": data})

    def _nargs(self, rest: str, n: int, usage: str) -> list[str]:
        args = split_args(rest)
        if len(args) != n:
            raise CommandError(f"usage: {usage}")
        return args

    def _lead_int(self, rest: str, what: str) -> tuple[int, str]:
        first, _, tail = rest.partition(" ")
        return self.integer(first, what), tail.strip()


# -- commands -------------------------------------------------------------------------


def cmd_normal(s: Session, rest: str) -> Result:
    return _elem(s.any_element(rest))


def cmd_unitary(s: Session, rest: str) -> Result:
    return _bool(algebra.is_unitary(s.element(rest)))


def cmd_reduced(s: Session, rest: str) -> Result:
    rf = algebra.reduced_form(s.element(rest))
    data = [{"sign": int(c), "alpha": format_word(a), "beta": format_word(b)} for c, a, b in rf.triples]
    return Result(str(rf), data)


def cmd_uplus(s: Session, rest: str) -> Result:
    return _elem(algebra.u_plus(s.element(rest)))


def cmd_signsplit(s: Session, rest: str) -> Result:
    pos, neg = algebra.sign_split(s.element(rest))
    return Result(f"u_+ part: {pos}\nu_- part: {neg}", {"positive": pos.to_json(), "negative": neg.to_json()})


def cmd_fullspec(s: Session, rest: str) -> Result:
    d, expr = s._lead_int(rest, "degree bound")
    rep = algebra.full_spectrum_up_to(s.element(expr), d)
    if rep.full:
        return Result(f"true (degree <= {d})", {"full": True, "degree": d})
    w = rep.witness_text()
    return Result(f"false; witness {w}", {"full": False, "degree": d, "witness": w})


def cmd_coeff_free(s: Session, rest: str) -> Result:
    m, expr = s._lead_int(rest, "level")
    return _bool(algebra.is_coefficient_free_at_level(s.element(expr), m))


def cmd_table(s: Session, rest: str) -> Result:
    return _elem(Table.parse(rest))


def cmd_compose(s: Session, rest: str) -> Result:
    g, h = s._nargs(rest, 2, "compose <g> <h>   (g after h)")
    return _elem(thompson.table_compose(s.table(g), s.table(h)))


def cmd_inverse(s: Session, rest: str) -> Result:
    return _elem(thompson.table_reduce(thompson.table_inverse(s.table(rest))))


def cmd_reduce(s: Session, rest: str) -> Result:
    return _elem(thompson.table_reduce(s.table(rest)))


def cmd_tounitary(s: Session, rest: str) -> Result:
    return _elem(thompson.to_unitary(s.table(rest), s.ring))


def cmd_fromunitary(s: Session, rest: str) -> Result:
    return _elem(thompson.from_unitary(s.element(rest)))


def cmd_act(s: Session, rest: str) -> Result:
    g, p = s._nargs(rest, 2, "act <g> <path>   e.g. act {a -> b; b -> a} a(ab)^w")
    out = thompson.act(s.table(g), EventuallyPeriodicPath.parse(p))
    return Result(str(out), str(out))


def _fixed_json(fp: thompson.FixedPointSet) -> dict:
    return {"cylinders": [format_word(w) for w in fp.cylinders], "points": [str(p) for p in sorted(fp.points)]}


def cmd_fixed(s: Session, rest: str) -> Result:
    fp = thompson.fixed_points(s.table(rest))
    return Result(str(fp), _fixed_json(fp))


def cmd_orbits(s: Session, rest: str) -> Result:
    k, g = s._lead_int(rest, "bound")
    rep = thompson.finite_orbit_search(s.table(g), k)
    lines = [f"g^{i}: {fp}" for i, fp in rep.items()]
    return Result("\n".join(lines), {str(i): _fixed_json(fp) for i, fp in rep.items()})


def cmd_tensor_eval(s: Session, rest: str) -> Result:
    x = s.any_element(rest)
    if isinstance(x, AlgebraElement):
        x = leg_left(x)
    return _elem(x)


def cmd_laurent(s: Session, rest: str) -> Result:
    p, u, v = s._nargs(rest, 3, "laurent <poly>, <u>, <v>")
    return _elem(laurent_image(s.polynomial(p), s.element(u), s.element(v)))


def cmd_indep(s: Session, rest: str) -> Result:
    d, tail = s._lead_int(rest, "degree bound")
    u, v = s._nargs(tail, 2, "indep <d> <u> <v>")
    ok, rows, cols, rank = independence_report(s.element(u), s.element(v), d)
    text = f"independent: {'true' if ok else 'false'}\nmatrix: {rows} x {cols}, rank {rank}"
    return Result(text, {"independent": ok, "rows": rows, "columns": cols, "rank": rank})


def cmd_relation(s: Session, rest: str) -> Result:
    d, tail = s._lead_int(rest, "degree bound")
    u, v = s._nargs(tail, 2, "relation <d> <u> <v>")
    rep = relations.relation_search(s.element(u), s.element(v), d)
    dims = f"matrix: {rep.rows} x {rep.columns}, rank {rep.rank}, kernel dimension {rep.kernel_dimension}"
    data = {"rows": rep.rows, "columns": rep.columns, "rank": rep.rank, "degree": d}
    if rep.polynomial is None:
        data["polynomial"] = None
        return Result(f"no relation with exponents <= {d}\n{dims}", data)
    data.update(polynomial=str(rep.polynomial), verified=rep.verified)
    return Result(f"q = {rep.polynomial}\nq(u,v) = 0: {'true' if rep.verified else 'false'}\n{dims}", data)


def cmd_transfer(s: Session, rest: str) -> Result:
    q = s.polynomial(rest)
    fac = relations.transfer_factorization(q)
    qt = relations.transfer_polynomial(q)
    text = f"q~ = {qt}\nchoice functions: {fac.choice_count}, distinct twists: {len(fac.twists)}"
    return Result(text, {"polynomial": str(qt), "choice_functions": fac.choice_count})


def cmd_projection(s: Session, rest: str) -> Result:
    return _bool(projections.is_projection(s.element(rest)))


def cmd_standard_form(s: Session, rest: str) -> Result:
    code = projections.projection_standard_form(s.element(rest))
    words = [format_word(w) for w in code]
    return Result("{" + ", ".join(words) + "}", words)


def cmd_mvn(s: Session, rest: str) -> Result:
    return _elem(projections.unit_equivalence(s.element(rest)))


def cmd_twist(s: Session, rest: str) -> Result:
    args = split_args(rest)
    if len(args) < 2:
        raise CommandError("usage: twist <p>, <x1>, <x2>, ...")
    p = s.element(args[0])
    out = projections.twist_to_unital([s.element(a) for a in args[1:]], p)
    return Result("\n".join(str(x) for x in out), [x.to_json() for x in out])


def cmd_ring(s: Session, rest: str) -> Result:
    if rest:
        s.ring = Ring.parse(rest)
    return Result(str(s.ring), str(s.ring))


def cmd_help(s: Session, rest: str) -> Result:
    names = sorted(COMMANDS) + ["let"]
    return Result("commands: " + " ".join(names), names)


COMMANDS: dict[str, Callable[[Session, str], Result]] = {
    "normal": cmd_normal,
    "unitary?": cmd_unitary,
    "reduced": cmd_reduced,
    "uplus": cmd_uplus,
    "signsplit": cmd_signsplit,
    "fullspec": cmd_fullspec,
    "coeff-free": cmd_coeff_free,
    "table": cmd_table,
    "compose": cmd_compose,
    "inverse": cmd_inverse,
    "reduce": cmd_reduce,
    "tounitary": cmd_tounitary,
    "fromunitary": cmd_fromunitary,
    "act": cmd_act,
    "fixed": cmd_fixed,
    "orbits": cmd_orbits,
    "tensor-eval": cmd_tensor_eval,
    "laurent": cmd_laurent,
    "indep": cmd_indep,
    "relation": cmd_relation,
    "transfer": cmd_transfer,
    "projection?": cmd_projection,
    "standard-form": cmd_standard_form,
    "mvn": cmd_mvn,
    "twist": cmd_twist,
    "ring": cmd_ring,
    "help": cmd_help,
}


def run_command(line: str, session: Session, as_json: bool = False) -> str:
    return session.run(line).render(as_json)


__all__ = ["Session", "Result", "CommandError", "ParseError", "run_command", "split_args", "COMMANDS"]
