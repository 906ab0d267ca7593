"""Fan-out-free netlist IR and structural validation.

A netlist is an ordered list of gate instances over named wires.  Three
wire rules keep the circuit reversible end to end:

  * every wire is defined exactly once (primary input, constant, or
    gate output);
  * every wire is consumed at most once (gate input or primary output),
    so there is no fan-out;
  * definition precedes use in gate order, which makes the circuit
    acyclic by construction.

Wires that are defined but never consumed and are not primary outputs
are the garbage outputs.  Netlists are immutable after construction;
validation and queries are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gates import IDENT_RE, GateDefinition


@dataclass(frozen=True)
class GateInstance:
    """One gate application: ordered input wires and fresh output wires."""

    gate: GateDefinition
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))


@dataclass(frozen=True)
class Netlist:
    """Ordered wiring of gate instances with explicit input/constant/output roles."""

    name: str
    primary_inputs: tuple[str, ...]
    constants: tuple[tuple[str, int], ...]
    gates: tuple[GateInstance, ...]
    primary_outputs: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "primary_inputs", tuple(self.primary_inputs))
        object.__setattr__(self, "constants", tuple((w, b) for w, b in self.constants))
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "primary_outputs", tuple(self.primary_outputs))

    @property
    def constant_wires(self) -> tuple[str, ...]:
        return tuple(wire for wire, _ in self.constants)


@dataclass(frozen=True)
class Violation:
    """One broken rule, naming the wire and gate index involved."""

    rule: str
    message: str
    wire: str | None = None
    gate_index: int | None = None
    severity: str = "error"


class InvalidNetlistError(ValueError):
    """Raised by operations whose precondition is a valid netlist."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def validate(netlist: Netlist) -> list[Violation]:
    """Check every structural invariant; an empty list of errors means ok.

    Unused constants are reported as warnings (wasteful but legal); all
    other findings are errors.
    """
    violations: list[Violation] = []

    def report(rule, message, wire=None, gate_index=None, severity="error"):
        violations.append(Violation(rule, message, wire, gate_index, severity))

    defined: set[str] = set()
    consumed: set[str] = set()

    def define(wire, what, gate_index=None):
        if not IDENT_RE.match(wire):
            report("bad-wire-name", f"wire {wire!r} is not a valid identifier", wire, gate_index)
        if wire in defined:
            report("redefinition", f"wire {wire!r} defined more than once ({what})", wire, gate_index)
        defined.add(wire)

    for wire in netlist.primary_inputs:
        define(wire, "primary input")
    for wire, bit in netlist.constants:
        define(wire, "constant")
        if bit not in (0, 1):
            report("bad-constant", f"constant {wire!r} must be 0 or 1, got {bit!r}", wire)

    for index, inst in enumerate(netlist.gates):
        gate = inst.gate
        if len(inst.inputs) != gate.arity or len(inst.outputs) != gate.arity:
            report(
                "arity-mismatch",
                f"gate {index} ({gate.name}) has {gate.arity} lines but "
                f"{len(inst.inputs)} inputs / {len(inst.outputs)} outputs",
                gate_index=index,
            )
        if len(set(gate.table)) != len(gate.table):
            report("non-bijective-gate", f"gate {index} ({gate.name}) is not a bijection", gate_index=index)
        for wire in inst.inputs:
            if wire not in defined:
                report(
                    "use-before-definition",
                    f"gate {index} ({gate.name}) reads {wire!r} before it is defined",
                    wire,
                    index,
                )
            elif wire in consumed:
                report("fan-out", f"wire {wire!r} consumed more than once (gate {index})", wire, index)
            consumed.add(wire)
        for wire in inst.outputs:
            define(wire, f"gate {index} output", index)

    seen_outputs: set[str] = set()
    for wire in netlist.primary_outputs:
        if wire in seen_outputs:
            report("duplicate-output", f"wire {wire!r} listed as primary output more than once", wire)
            continue
        seen_outputs.add(wire)
        if wire not in defined:
            report("undefined-output", f"primary output {wire!r} is never defined", wire)
        elif wire in consumed:
            report("fan-out", f"wire {wire!r} consumed more than once (primary output)", wire)
        consumed.add(wire)

    if not any(v.severity == "error" for v in violations):
        for wire, _ in netlist.constants:
            if wire not in consumed:
                report("unused-constant", f"constant {wire!r} is never consumed", wire, severity="warning")
        # line conservation holds whenever the rules above do; checked, not assumed
        sources = len(netlist.primary_inputs) + len(netlist.constants)
        garbage = len(_garbage_scan(netlist))
        if sources != len(netlist.primary_outputs) + garbage:
            report(
                "line-conservation",
                f"{sources} source lines but {len(netlist.primary_outputs)} outputs + {garbage} garbage",
            )

    return violations


def is_valid(netlist: Netlist) -> bool:
    return not any(v.severity == "error" for v in validate(netlist))


def require_valid(netlist: Netlist) -> None:
    errors = [v for v in validate(netlist) if v.severity == "error"]
    if errors:
        raise InvalidNetlistError(errors)


def _garbage_scan(netlist: Netlist) -> list[str]:
    consumed: set[str] = set()
    for inst in netlist.gates:
        consumed.update(inst.inputs)
    consumed.update(netlist.primary_outputs)
    order = list(netlist.primary_inputs)
    order.extend(wire for wire, _ in netlist.constants)
    for inst in netlist.gates:
        order.extend(inst.outputs)
    return [wire for wire in order if wire not in consumed]


def garbage_wires(netlist: Netlist) -> list[str]:
    """Defined-but-unconsumed wires that are not primary outputs, in definition order."""
    require_valid(netlist)
    return _garbage_scan(netlist)
