"""
TTP Benchmark Format - reader and writer for the textual instance format

Node and item indices are 1-based in files and 0-based in TtpInstance.
"""
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from shared.config.constants import COORD_BOUNDS
from shared.models.ttp_models import TtpInstance
from shared.utils.errors import TtpFormatError

HEADER_KEYS = (
    "PROBLEM NAME",
    "KNAPSACK DATA TYPE",
    "DIMENSION",
    "NUMBER OF ITEMS",
    "CAPACITY OF KNAPSACK",
    "MIN SPEED",
    "MAX SPEED",
    "RENTING RATIO",
    "EDGE_WEIGHT_TYPE",
)
EDGE_WEIGHT_TYPE = "CEIL_2D"
NODE_SECTION = "NODE_COORD_SECTION"
ITEMS_SECTION = "ITEMS SECTION"
NODE_SECTION_LINE = f"{NODE_SECTION}\t(INDEX, X, Y): "
ITEMS_SECTION_LINE = f"{ITEMS_SECTION}\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER): "


def format_number(value: float) -> str:
    """Integral values as integers, everything else with round-trip precision"""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def format_instance(instance: TtpInstance, integer_coords: bool = False) -> str:
    """Serialize an instance; integer_coords rounds coordinates for legacy readers"""
    header = {
        "PROBLEM NAME": instance.name,
        "KNAPSACK DATA TYPE": instance.data_type,
        "DIMENSION": str(instance.n_nodes),
        "NUMBER OF ITEMS": str(instance.n_items),
        "CAPACITY OF KNAPSACK": format_number(instance.capacity),
        "MIN SPEED": format_number(instance.v_min),
        "MAX SPEED": format_number(instance.v_max),
        "RENTING RATIO": format_number(instance.renting_rate),
        "EDGE_WEIGHT_TYPE": EDGE_WEIGHT_TYPE,
    }
    lines = [f"{key}:\t{value}" for key, value in header.items()]

    lines.append(NODE_SECTION_LINE)
    for index, (x, y) in enumerate(instance.coords, start=1):
        if integer_coords:
            x, y = round(x), round(y)
        lines.append(f"{index}\t{format_number(x)}\t{format_number(y)}")

    lines.append(ITEMS_SECTION_LINE)
    for index, (profit, weight, node) in enumerate(instance.items, start=1):
        lines.append(f"{index}\t{format_number(profit)}\t{format_number(weight)}\t{node + 1}")

    return "\n".join(lines) + "\n"


def write_instance(
    instance: TtpInstance,
    path: Union[str, Path],
    integer_coords: bool = False
) -> None:
    output = Path(path)
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(format_instance(instance, integer_coords))


class _Parser:
    """Line-by-line parser keeping track of the current location"""

    def __init__(self, text: str, source: str):
        self.source = source
        self.lines = text.splitlines()
        self.header: Dict[str, Tuple[str, int]] = {}

    def error(self, message: str, line: Optional[int] = None) -> TtpFormatError:
        return TtpFormatError(message, line=line, source=self.source)

    def header_value(self, key: str, cast: type, end_line: int):
        if key not in self.header:
            raise self.error(f"Missing header '{key}'", end_line)
        raw, line = self.header[key]
        try:
            return cast(raw)
        except ValueError:
            raise self.error(f"Header '{key}' has invalid value '{raw}'", line)

    def numbers(self, fields: List[str], line: int) -> List[float]:
        try:
            return [float(field) for field in fields]
        except ValueError:
            raise self.error(f"Non-numeric field in '{' '.join(fields)}'", line)

    def parse(self) -> TtpInstance:
        position = 0
        total = len(self.lines)

        # Header
        while position < total and not self.lines[position].startswith(NODE_SECTION):
            line_no = position + 1
            text = self.lines[position].strip()
            position += 1
            if not text:
                continue
            if ":" not in text:
                raise self.error(f"Expected 'KEY: value', got '{text}'", line_no)
            key, value = (part.strip() for part in text.split(":", 1))
            if key not in HEADER_KEYS:
                raise self.error(f"Unknown header '{key}'", line_no)
            if key in self.header:
                raise self.error(f"Duplicate header '{key}'", line_no)
            self.header[key] = (value, line_no)

        if position == total:
            raise self.error(f"Missing {NODE_SECTION}", total)
        section_line = position + 1
        position += 1

        n = self.header_value("DIMENSION", int, section_line)
        m = self.header_value("NUMBER OF ITEMS", int, section_line)
        edge_type = self.header_value("EDGE_WEIGHT_TYPE", str, section_line)
        if edge_type != EDGE_WEIGHT_TYPE:
            raise self.error(
                f"Unsupported EDGE_WEIGHT_TYPE '{edge_type}'", self.header["EDGE_WEIGHT_TYPE"][1]
            )

        # Node coordinates
        coords: List[Tuple[float, float]] = []
        while position < total and not self.lines[position].startswith(ITEMS_SECTION):
            line_no = position + 1
            fields = self.lines[position].split()
            position += 1
            if not fields:
                continue
            if len(fields) != 3:
                raise self.error("Coordinate line needs INDEX X Y", line_no)
            index, x, y = self.numbers(fields, line_no)
            if index != len(coords) + 1:
                raise self.error(f"Node index {fields[0]} breaks the sequence 1..{n}", line_no)
            low, high = COORD_BOUNDS
            if not (low <= x <= high and low <= y <= high):
                raise self.error(
                    f"Coordinate ({fields[1]}, {fields[2]}) outside [{low}, {high}]^2", line_no
                )
            coords.append((x, y))

        items_line = min(position + 1, total)
        if len(coords) != n:
            raise self.error(f"DIMENSION is {n} but {len(coords)} coordinate lines follow", items_line)
        if position == total:
            raise self.error(f"Missing {ITEMS_SECTION}", total)
        position += 1

        # Items
        profits: List[float] = []
        weights: List[float] = []
        availability: List[int] = []
        while position < total:
            line_no = position + 1
            fields = self.lines[position].split()
            position += 1
            if not fields:
                continue
            if len(fields) != 4:
                raise self.error("Item line needs INDEX PROFIT WEIGHT NODE", line_no)
            index, profit, weight, node = self.numbers(fields, line_no)
            if index != len(profits) + 1:
                raise self.error(f"Item index {fields[0]} breaks the sequence 1..{m}", line_no)
            if not node.is_integer() or not 2 <= node <= n:
                raise self.error(
                    f"Item assigned to node {fields[3]}; items belong to nodes 2..{n}", line_no
                )
            if weight <= 0:
                raise self.error(f"Item weight {fields[2]} must be positive", line_no)
            if profit < 0:
                raise self.error(f"Item profit {fields[1]} must be non-negative", line_no)
            profits.append(profit)
            weights.append(weight)
            availability.append(int(node) - 1)

        if len(profits) != m:
            raise self.error(f"NUMBER OF ITEMS is {m} but {len(profits)} item lines follow", total)

        capacity = self.header_value("CAPACITY OF KNAPSACK", float, section_line)
        capacity_line = self.header["CAPACITY OF KNAPSACK"][1]
        if capacity <= 0:
            raise self.error(f"Capacity {capacity} must be positive", capacity_line)
        if capacity > sum(weights) * (1 + 1e-12):
            raise self.error(
                f"Capacity {capacity} exceeds total item weight {sum(weights)}", capacity_line
            )

        renting_rate = self.header_value("RENTING RATIO", float, section_line)
        if renting_rate < 0:
            raise self.error(
                f"Renting rate {renting_rate} must be non-negative", self.header["RENTING RATIO"][1]
            )
        v_min = self.header_value("MIN SPEED", float, section_line)
        v_max = self.header_value("MAX SPEED", float, section_line)
        if v_min <= 0:
            raise self.error(f"MIN SPEED {v_min} must be positive", self.header["MIN SPEED"][1])
        if v_max <= v_min:
            raise self.error(
                f"MAX SPEED {v_max} must exceed MIN SPEED {v_min}", self.header["MAX SPEED"][1]
            )

        try:
            return TtpInstance(
                name=self.header_value("PROBLEM NAME", str, section_line),
                data_type=self.header_value("KNAPSACK DATA TYPE", str, section_line),
                coords=coords,
                profits=profits,
                weights=weights,
                availability=availability,
                capacity=capacity,
                renting_rate=renting_rate,
                v_min=v_min,
                v_max=v_max,
            )
        except ValidationError as e:
            raise self.error(f"Invalid instance: {e.errors()[0]['msg']}", section_line)


def parse_instance(text: str, source: str = "<string>") -> TtpInstance:
    """Parse benchmark text, raising TtpFormatError with the offending line"""
    return _Parser(text, source).parse()


def read_instance(path: Union[str, Path]) -> TtpInstance:
    input_path = Path(path)
    return parse_instance(input_path.read_text(), source=str(input_path))
