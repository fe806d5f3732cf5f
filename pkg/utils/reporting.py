"""
Run reports for the arc_partitions command line tool.

A RunReport holds one item per checked identity, count row or weight; it renders
as an aligned text table, a tab-separated CSV ('|' as quote character) or JSON
with the schema
    {"version", "command", "params", "items": [{"name", "params", "status", "data"}], "status"}.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd

__version__ = "1.0.0"

FORMATS = ("table", "csv", "json")
STATUSES = ("pass", "fail", "info")


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def _params_text(params: dict) -> str:
    return " ".join(f"{key}={value}" for key, value in params.items())


@dataclass
class ReportItem:
    """
    One line of a report. `data` is shown everywhere, `detail` only in JSON
    (long coefficient vectors, leading-monomial lists).
    """
    name: str
    params: dict
    status: str
    data: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")

    def as_dict(self) -> dict:
        return {"name": self.name, "params": self.params, "status": self.status, "data": {**self.data, **self.detail}}


@dataclass
class RunReport:
    command: str
    params: dict
    items: list = field(default_factory=list)
    version: str = __version__

    def add(self, name: str, params: dict, status: str, data: dict = None, detail: dict = None) -> ReportItem:
        item = ReportItem(name, params, status, data or {}, detail or {})
        self.items.append(item)
        return item

    @property
    def status(self) -> str:
        """pass iff no item with an equality contract failed; info items never count."""
        return "fail" if any(item.status == "fail" for item in self.items) else "pass"

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "pass" else 1

    def as_dict(self) -> dict:
        return {
            "version": self.version,
            "command": self.command,
            "params": self.params,
            "items": [item.as_dict() for item in self.items],
            "status": self.status,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for item in self.items:
            row = {"name": item.name, "params": _params_text(item.params), "status": item.status}
            row.update({key: _cell(value) for key, value in item.data.items()})
            rows.append(row)
        return pd.DataFrame(rows).fillna("-")

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, default=_jsonable)

    def to_table(self) -> str:
        frame = self.to_frame()
        body = frame.to_string(index=False) if not frame.empty else "(no items)"
        return f"{body}\nstatus: {self.status}"

    def to_csv(self) -> str:
        return self.to_frame().to_csv(sep="\t", quotechar="|", index=False)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "table":
            return self.to_table()
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
