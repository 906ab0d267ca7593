"""Line-oriented netlist text format and canonical serialization.

Document grammar (``#`` starts a comment, tokens are whitespace
separated, sections appear in this order):

    circuit NAME
    inputs WIRE...
    const WIRE BIT              (zero or more)
    gate NAME IN... -> OUT...   (zero or more, in execution order)
    outputs WIRE...
    end

Wires must be defined before use and consumed at most once, so a
document that parses is structurally valid by construction; the checks
are purely syntactic because the format is define-before-use.  Parsing
either returns a complete netlist or raises NetlistParseError carrying
positioned diagnostics; no partial netlist escapes a failed parse.
Serialization is canonical and deterministic, and parse(serialize(n))
reproduces n exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gates import DEFAULT_REGISTRY, IDENT_RE, GateLookupError, GateRegistry
from .netlist import GateInstance, Netlist, require_valid


@dataclass(frozen=True)
class ParseDiagnostic:
    """One problem at a (line, token index) position."""

    line: int
    token: int
    rule: str
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, token {self.token}: {self.message}"


class NetlistParseError(ValueError):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def parse_netlist(text: str, registry: GateRegistry | None = None) -> Netlist:
    """Parse a netlist document, resolving gate names against a registry.

    Raises NetlistParseError with positioned diagnostics for grammar
    problems and for every wire-rule violation (unknown gate, arity
    mismatch, redefinition, use before definition, fan-out).
    """
    reg = DEFAULT_REGISTRY if registry is None else registry
    diagnostics: list[ParseDiagnostic] = []

    def diag(lineno: int, token: int, rule: str, message: str) -> None:
        diagnostics.append(ParseDiagnostic(lineno, token, rule, message))

    def fail(lineno: int, token: int, rule: str, message: str) -> NetlistParseError:
        diag(lineno, token, rule, message)
        return NetlistParseError(diagnostics)

    name = None
    inputs: list[str] = []
    constants: list[tuple[str, int]] = []
    gates: list[GateInstance] = []
    outputs: list[str] = []

    defined: set[str] = set()
    consumed: set[str] = set()

    def define_wire(lineno: int, token: int, wire: str, what: str) -> None:
        if not IDENT_RE.match(wire):
            diag(lineno, token, "bad-wire-name", f"wire {wire!r} is not a valid identifier")
        if wire in defined:
            diag(lineno, token, "redefinition", f"wire {wire!r} already defined ({what})")
        defined.add(wire)

    state = "circuit"
    for lineno, tokens in _tokenize(text):
        key = tokens[0]
        if state == "circuit":
            if key != "circuit" or len(tokens) != 2:
                raise fail(lineno, 0, "syntax", "expected 'circuit NAME'")
            if not IDENT_RE.match(tokens[1]):
                raise fail(lineno, 1, "syntax", f"bad circuit name {tokens[1]!r}")
            name = tokens[1]
            state = "inputs"
        elif state == "inputs":
            if key != "inputs":
                raise fail(lineno, 0, "syntax", f"expected 'inputs', got {key!r}")
            for token, wire in enumerate(tokens[1:], start=1):
                define_wire(lineno, token, wire, "primary input")
                inputs.append(wire)
            state = "body"
        elif state == "body":
            if key == "const":
                if gates:
                    raise fail(lineno, 0, "syntax", "const lines must precede gate lines")
                if len(tokens) != 3:
                    raise fail(lineno, 0, "syntax", "expected 'const WIRE BIT'")
                define_wire(lineno, 1, tokens[1], "constant")
                if tokens[2] not in ("0", "1"):
                    diag(lineno, 2, "bad-constant", f"constant bit must be 0 or 1, got {tokens[2]!r}")
                    constants.append((tokens[1], 0))
                else:
                    constants.append((tokens[1], int(tokens[2])))
            elif key == "gate":
                if len(tokens) < 2:
                    raise fail(lineno, 0, "syntax", "expected 'gate NAME IN... -> OUT...'")
                try:
                    gate = reg.get(tokens[1])
                except GateLookupError:
                    diag(lineno, 1, "unknown-gate", f"unknown gate {tokens[1]!r}")
                    continue
                if "->" not in tokens:
                    raise fail(lineno, 2, "syntax", "gate line is missing '->'")
                arrow = tokens.index("->")
                ins = tokens[2:arrow]
                outs = tokens[arrow + 1 :]
                if len(ins) != gate.arity or len(outs) != gate.arity:
                    diag(
                        lineno,
                        1,
                        "arity-mismatch",
                        f"gate {gate.name} has {gate.arity} lines but "
                        f"{len(ins)} inputs / {len(outs)} outputs",
                    )
                for token, wire in enumerate(ins, start=2):
                    if not IDENT_RE.match(wire):
                        diag(lineno, token, "bad-wire-name", f"wire {wire!r} is not a valid identifier")
                    if wire not in defined:
                        diag(lineno, token, "use-before-definition", f"wire {wire!r} used before definition")
                    elif wire in consumed:
                        diag(lineno, token, "fan-out", f"fan-out at {wire!r}: already consumed")
                    consumed.add(wire)
                for token, wire in enumerate(outs, start=arrow + 1):
                    define_wire(lineno, token, wire, "gate output")
                gates.append(GateInstance(gate, tuple(ins), tuple(outs)))
            elif key == "outputs":
                seen: set[str] = set()
                for token, wire in enumerate(tokens[1:], start=1):
                    if wire in seen:
                        diag(lineno, token, "duplicate-output", f"wire {wire!r} listed twice as primary output")
                        continue
                    seen.add(wire)
                    if wire not in defined:
                        diag(lineno, token, "undefined-output", f"primary output {wire!r} is never defined")
                    elif wire in consumed:
                        diag(lineno, token, "fan-out", f"fan-out at {wire!r}: already consumed")
                    consumed.add(wire)
                    outputs.append(wire)
                state = "end"
            else:
                raise fail(lineno, 0, "syntax", f"expected 'const', 'gate' or 'outputs', got {key!r}")
        elif state == "end":
            if key != "end" or len(tokens) != 1:
                raise fail(lineno, 0, "syntax", "expected 'end'")
            state = "done"
        else:
            raise fail(lineno, 0, "syntax", "unexpected content after 'end'")

    if state != "done":
        expected = {"circuit": "'circuit NAME'", "inputs": "'inputs'", "body": "'outputs'", "end": "'end'"}
        raise fail(0, 0, "syntax", f"unexpected end of document, expected {expected[state]}")
    if diagnostics:
        raise NetlistParseError(diagnostics)
    return Netlist(name, tuple(inputs), tuple(constants), tuple(gates), tuple(outputs))


def serialize_netlist(netlist: Netlist) -> str:
    """Canonical text form of a valid netlist; stable across runs."""
    require_valid(netlist)
    lines = [f"circuit {netlist.name}"]
    lines.append(" ".join(["inputs", *netlist.primary_inputs]).rstrip())
    for wire, bit in netlist.constants:
        lines.append(f"const {wire} {bit}")
    for inst in netlist.gates:
        lines.append(f"gate {inst.gate.name} {' '.join(inst.inputs)} -> {' '.join(inst.outputs)}")
    lines.append(" ".join(["outputs", *netlist.primary_outputs]).rstrip())
    lines.append("end")
    return "\n".join(lines) + "\n"
