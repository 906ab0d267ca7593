"""Forward and inverse netlist evaluation, truth tables, and oracle checks.

Input patterns index the primary inputs in declaration order with the
first wire as the most significant bit; truth tables enumerate patterns
in ascending binary order.  All functions are pure over immutable
netlists, so exhaustive sweeps may be partitioned across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, NamedTuple, Sequence

from .netlist import Netlist, _garbage_scan, require_valid

DEFAULT_INPUT_LIMIT = 20
DEFAULT_COUNTEREXAMPLE_LIMIT = 16


class TruthTableLimitError(ValueError):
    """Exhaustive enumeration refused because the input count exceeds the limit."""


def int_to_bits(value: int, width: int) -> list[int]:
    """Big-endian bit list of the given width."""
    if not 0 <= value < 1 << width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def bits_to_int(bits: Sequence[int]) -> int:
    """Integer value of a big-endian bit sequence."""
    value = 0
    for bit in bits:
        value = (value << 1) | bit
    return value


@dataclass(frozen=True)
class TraceResult:
    """Wire values after one forward run, split by role."""

    primary_out: dict[str, int]
    garbage_out: dict[str, int]
    all_lines: dict[str, int]

    @property
    def terminals(self) -> dict[str, int]:
        """Primary outputs plus garbage: the full terminal assignment."""
        merged = dict(self.primary_out)
        merged.update(self.garbage_out)
        return merged


class TruthTableRow(NamedTuple):
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    garbage: tuple[int, ...]


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple[int, ...]
    expected: tuple[int, ...]
    actual: tuple[int, ...]


class _Plan:
    """Slot-indexed evaluation schedule for one already-validated netlist."""

    def __init__(self, netlist: Netlist) -> None:
        slots: dict[str, int] = {}
        for wire in netlist.primary_inputs:
            slots[wire] = len(slots)
        self.const_slots: list[tuple[int, int]] = []
        for wire, bit in netlist.constants:
            slots[wire] = len(slots)
            self.const_slots.append((slots[wire], bit))
        self.steps: list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = []
        for inst in netlist.gates:
            in_slots = tuple(slots[w] for w in inst.inputs)
            for wire in inst.outputs:
                slots[wire] = len(slots)
            out_slots = tuple(slots[w] for w in inst.outputs)
            self.steps.append((inst.gate.table, inst.gate.inverse_table, in_slots, out_slots))
        self.slots = slots
        self.netlist = netlist
        self.po_slots = tuple(slots[w] for w in netlist.primary_outputs)
        self.garbage_wires = _garbage_scan(netlist)
        self.garbage_slots = tuple(slots[w] for w in self.garbage_wires)

    def forward(self, input_bits: Sequence[int]) -> list[int]:
        values = [0] * len(self.slots)
        values[: len(input_bits)] = input_bits
        for slot, bit in self.const_slots:
            values[slot] = bit
        for table, _inverse, in_slots, out_slots in self.steps:
            pattern = 0
            for slot in in_slots:
                pattern = (pattern << 1) | values[slot]
            out = table[pattern]
            shift = len(out_slots) - 1
            for slot in out_slots:
                values[slot] = (out >> shift) & 1
                shift -= 1
        return values

    def backward(self, terminal: Mapping[str, int]) -> list[int]:
        values = [0] * len(self.slots)
        for wire, bit in terminal.items():
            values[self.slots[wire]] = bit
        for _table, inverse, in_slots, out_slots in reversed(self.steps):
            pattern = 0
            for slot in out_slots:
                pattern = (pattern << 1) | values[slot]
            src = inverse[pattern]
            shift = len(in_slots) - 1
            for slot in in_slots:
                values[slot] = (src >> shift) & 1
                shift -= 1
        return values


def _check_assignment(kind: str, wires: Sequence[str], assignment: Mapping[str, int]) -> None:
    missing = [w for w in wires if w not in assignment]
    extra = [w for w in assignment if w not in set(wires)]
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {kind} bindings: {', '.join(missing)}")
        if extra:
            parts.append(f"unexpected bindings: {', '.join(extra)}")
        raise ValueError("; ".join(parts))
    bad = [w for w in wires if assignment[w] not in (0, 1)]
    if bad:
        raise ValueError(f"bindings must be 0 or 1: {', '.join(bad)}")


def run(netlist: Netlist, inputs: Mapping[str, int]) -> TraceResult:
    """Forward-simulate: bind constants, apply gates in order.

    ``inputs`` must bind exactly the primary inputs.  Every wire
    receives exactly one value; the result reports primary outputs,
    garbage, and all lines.
    """
    require_valid(netlist)
    _check_assignment("input", netlist.primary_inputs, inputs)
    plan = _Plan(netlist)
    values = plan.forward([inputs[w] for w in netlist.primary_inputs])
    all_lines = {wire: values[slot] for wire, slot in plan.slots.items()}
    primary = {wire: all_lines[wire] for wire in netlist.primary_outputs}
    garbage = {wire: all_lines[wire] for wire in plan.garbage_wires}
    return TraceResult(primary, garbage, all_lines)


def run_inverse(netlist: Netlist, terminal: Mapping[str, int]) -> dict[str, int]:
    """Apply gate inverses in reverse order from a total terminal assignment.

    ``terminal`` must bind exactly the primary outputs plus the garbage
    wires.  Returns the values on all source lines: the primary inputs
    and what each constant line must have been.
    """
    require_valid(netlist)
    plan = _Plan(netlist)
    _check_assignment("terminal", list(netlist.primary_outputs) + plan.garbage_wires, terminal)
    values = plan.backward(terminal)
    recovered = {wire: values[plan.slots[wire]] for wire in netlist.primary_inputs}
    for wire, _bit in netlist.constants:
        recovered[wire] = values[plan.slots[wire]]
    return recovered


def _check_width(netlist: Netlist, limit: int) -> int:
    width = len(netlist.primary_inputs)
    if width > limit:
        raise TruthTableLimitError(
            f"{width} primary inputs exceed the exhaustive-enumeration limit of {limit}; "
            f"raise it via the limit argument (--max-inputs on the command line)"
        )
    return width


def truth_table(netlist: Netlist, limit: int = DEFAULT_INPUT_LIMIT) -> list[TruthTableRow]:
    """All 2^k rows (input, primary output, garbage) in ascending input order."""
    require_valid(netlist)
    width = _check_width(netlist, limit)
    plan = _Plan(netlist)
    rows = []
    for pattern in range(1 << width):
        bits = int_to_bits(pattern, width)
        values = plan.forward(bits)
        rows.append(
            TruthTableRow(
                tuple(bits),
                tuple(values[s] for s in plan.po_slots),
                tuple(values[s] for s in plan.garbage_slots),
            )
        )
    return rows


def check_equivalence(
    netlist: Netlist,
    oracle: Callable[[tuple[int, ...]], Sequence[int]],
    domain: Callable[[tuple[int, ...]], bool] | None = None,
    limit: int = DEFAULT_INPUT_LIMIT,
    max_counterexamples: int = DEFAULT_COUNTEREXAMPLE_LIMIT,
) -> list[Counterexample]:
    """Compare primary outputs against an oracle on every in-domain pattern.

    Returns up to ``max_counterexamples`` mismatches; an empty list
    means the circuit agrees with the oracle everywhere in the domain.
    """
    require_valid(netlist)
    width = _check_width(netlist, limit)
    plan = _Plan(netlist)
    mismatches: list[Counterexample] = []
    for pattern in range(1 << width):
        bits = tuple(int_to_bits(pattern, width))
        if domain is not None and not domain(bits):
            continue
        values = plan.forward(bits)
        actual = tuple(values[s] for s in plan.po_slots)
        expected = tuple(oracle(bits))
        if actual != expected:
            mismatches.append(Counterexample(bits, expected, actual))
            if len(mismatches) >= max_counterexamples:
                break
    return mismatches
