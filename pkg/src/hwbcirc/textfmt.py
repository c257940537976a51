"""Line-oriented text serialization of circuits.

Format:
    hwbc 1
    wires <n> kind <reversible|quantum> ancillas <a> direction <left|right>
    <one gate per line>

Angles are printed with 17 significant digits, which round-trips IEEE
doubles bit-exactly.  `#` starts a comment; blank lines are ignored.
"""
from __future__ import annotations

from .gates import (
    Circuit,
    Cnot,
    Cperm5,
    Cz,
    FSwap,
    Fredkin,
    Mct,
    Not,
    Phase1,
    Phase011,
    Phase11,
    R,
    Rz,
    S,
    Swap,
    Toffoli,
)

FORMAT_NAME = "hwbc"
FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed circuit text; carries the 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


def _fmt_angle(x: float) -> str:
    return format(float(x), ".17g")


def _gate_line(g) -> str:
    if isinstance(g, Not):
        return f"NOT {g.target}"
    if isinstance(g, Cnot):
        return f"CNOT {g.control} {g.target}"
    if isinstance(g, Toffoli):
        return f"TOF {g.c1} {g.c2} {g.target}"
    if isinstance(g, Mct):
        return "MCT " + " ".join(map(str, g.controls + (g.target,)))
    if isinstance(g, Swap):
        return f"SWAP {g.a} {g.b}"
    if isinstance(g, Fredkin):
        return f"FRED {g.control} {g.a} {g.b}"
    if isinstance(g, Cperm5):
        parts = ["CPERM5", str(g.control), *map(str, g.targets), *map(str, g.table)]
        return " ".join(parts)
    if isinstance(g, S):
        return f"S {_fmt_angle(g.gamma)} {g.q}"
    if isinstance(g, R):
        return f"R {_fmt_angle(g.alpha)} {_fmt_angle(g.beta)} {g.p} {g.q}"
    if isinstance(g, FSwap):
        return f"FSWAP {g.p} {g.q}"
    if isinstance(g, Cz):
        return f"CZ {g.p} {g.q}"
    if isinstance(g, Phase1):
        return f"P1 {_fmt_angle(g.theta)} {g.p}"
    if isinstance(g, Phase11):
        return f"P11 {_fmt_angle(g.theta)} {g.p} {g.q}"
    if isinstance(g, Phase011):
        return f"P011 {_fmt_angle(g.theta)} {g.q0} {g.p} {g.p2}"
    if isinstance(g, Rz):
        return f"RZ {_fmt_angle(g.theta)} {g.q}"
    raise TypeError(f"cannot serialize gate {g!r}")


def serialize(circuit: Circuit) -> str:
    lines = [
        f"{FORMAT_NAME} {FORMAT_VERSION}",
        f"wires {circuit.wires} kind {circuit.kind} "
        f"ancillas {circuit.ancillas} direction {circuit.direction}",
    ]
    lines.extend(_gate_line(g) for g in circuit.gates)
    return "\n".join(lines) + "\n"


def _ints(tokens, line_no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {tokens!r}") from None


def _float(token, line_no):
    try:
        return float(token)
    except ValueError:
        raise ParseError(line_no, f"expected a number, got {token!r}") from None


def _parse_gate(name, args, line_no):
    try:
        if name == "NOT":
            (t,) = _ints(args, line_no)
            return Not(t)
        if name == "CNOT":
            c, t = _ints(args, line_no)
            return Cnot(c, t)
        if name == "TOF":
            c1, c2, t = _ints(args, line_no)
            return Toffoli(c1, c2, t)
        if name == "MCT":
            vals = _ints(args, line_no)
            if len(vals) < 2:
                raise ParseError(line_no, "MCT needs at least one control and a target")
            return Mct(tuple(vals[:-1]), vals[-1])
        if name == "SWAP":
            a, b = _ints(args, line_no)
            return Swap(a, b)
        if name == "FRED":
            c, a, b = _ints(args, line_no)
            return Fredkin(c, a, b)
        if name == "CPERM5":
            vals = _ints(args, line_no)
            if len(vals) != 1 + 5 + 32:
                raise ParseError(line_no, f"CPERM5 needs 38 fields, got {len(vals)}")
            return Cperm5(vals[0], tuple(vals[1:6]), tuple(vals[6:]))
        if name == "S":
            gamma, q = _float(args[0], line_no), _ints(args[1:], line_no)[0]
            return S(gamma, q)
        if name == "R":
            alpha = _float(args[0], line_no)
            beta = _float(args[1], line_no)
            p, q = _ints(args[2:], line_no)
            return R(alpha, beta, p, q)
        if name == "FSWAP":
            p, q = _ints(args, line_no)
            return FSwap(p, q)
        if name == "CZ":
            p, q = _ints(args, line_no)
            return Cz(p, q)
        if name == "P1":
            theta, p = _float(args[0], line_no), _ints(args[1:], line_no)[0]
            return Phase1(theta, p)
        if name == "P11":
            theta = _float(args[0], line_no)
            p, q = _ints(args[1:], line_no)
            return Phase11(theta, p, q)
        if name == "P011":
            theta = _float(args[0], line_no)
            q0, p, p2 = _ints(args[1:], line_no)
            return Phase011(theta, q0, p, p2)
        if name == "RZ":
            theta, q = _float(args[0], line_no), _ints(args[1:], line_no)[0]
            return Rz(theta, q)
    except ParseError:
        raise
    except (ValueError, IndexError) as exc:
        raise ParseError(line_no, f"bad {name} gate: {exc}") from None
    raise ParseError(line_no, f"unknown gate {name!r}")


def parse(text: str) -> Circuit:
    header = None
    meta = None
    gates = []
    seen_lines = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        seen_lines += 1
        if seen_lines == 1:
            if tokens != [FORMAT_NAME, str(FORMAT_VERSION)]:
                raise ParseError(line_no, f"expected header '{FORMAT_NAME} {FORMAT_VERSION}'")
            header = True
            continue
        if seen_lines == 2:
            if len(tokens) != 8 or tokens[0] != "wires" or tokens[2] != "kind" \
                    or tokens[4] != "ancillas" or tokens[6] != "direction":
                raise ParseError(line_no, "expected 'wires N kind K ancillas A direction D'")
            wires = _ints([tokens[1]], line_no)[0]
            kind = tokens[3]
            ancillas = _ints([tokens[5]], line_no)[0]
            direction = tokens[7]
            meta = (wires, kind, ancillas, direction)
            continue
        gates.append(_parse_gate(tokens[0], tokens[1:], line_no))
    if header is None or meta is None:
        raise ParseError(seen_lines + 1, "truncated circuit: missing header lines")
    wires, kind, ancillas, direction = meta
    try:
        return Circuit(wires=wires, kind=kind, gates=tuple(gates),
                       ancillas=ancillas, direction=direction)
    except ValueError as exc:
        raise ParseError(2, str(exc)) from None
