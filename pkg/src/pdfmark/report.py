"""Job reports as flat ``key=value`` text or JSON.

Text reports start with one ``#`` header line carrying the timestamp; the
rest is deterministic. JSON reports carry no timestamp at all.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone


def _value(v):
    if isinstance(v, float):
        if math.isinf(v):
            return "inf"
        return round(v, 10)
    if hasattr(v, "to_dict"):
        return {k: _value(x) for k, x in v.to_dict().items()}
    if isinstance(v, dict):
        return {k: _value(x) for k, x in v.items()}
    return v


@dataclass
class Report:
    command: str
    settings: dict = field(default_factory=dict)
    images: list[dict] = field(default_factory=list)

    def add(self, label: str, **values):
        self.images.append({"image": label, **values})

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "settings": _value(self.settings),
            "images": [_value(entry) for entry in self.images],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self, timestamp: str | None = None) -> str:
        if timestamp is None:
            timestamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        lines = [f"# pdfmark {self.command} {timestamp}", f"command={self.command}"]
        for key, value in self.settings.items():
            lines.append(f"{key}={_flat(_value(value))}")
        for entry in self.images:
            label = entry["image"]
            for key, value in _flatten(_value({k: v for k, v in entry.items() if k != "image"})):
                lines.append(f"image.{label}.{key}={_flat(value)}")
        return "\n".join(lines) + "\n"

    def render(self, path) -> str:
        return self.to_json() if str(path).lower().endswith(".json") else self.to_text()


def _flatten(d, prefix=""):
    for key, value in d.items():
        if isinstance(value, dict):
            yield from _flatten(value, f"{prefix}{key}.")
        else:
            yield f"{prefix}{key}", value


def _flat(v):
    if v is None:
        return "n/a"
    if isinstance(v, float):
        return repr(v)
    return str(v)
