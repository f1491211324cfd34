"""Named boolean results with machine-readable witnesses.

A false verdict always carries a concrete, replayable counterexample
(subgroups by generator lists, maps by image tables, chambers by index).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm import cycle_string


def describe(obj):
    """Convert witness payloads into JSON-friendly data."""
    from .groups import GroupMap, PermGroup
    if obj is None or isinstance(obj, (bool, int, str, float)):
        return obj
    if isinstance(obj, tuple) and all(isinstance(x, int) for x in obj):
        return cycle_string(obj)  # a permutation
    if isinstance(obj, PermGroup):
        return {"order": obj.order, "generators": obj.gens_json()}
    if isinstance(obj, GroupMap):
        return {
            "domain": [cycle_string(g) for g in obj.source.generators] or ["()"],
            "images": [cycle_string(obj.mapping[g]) for g in obj.source.generators] or ["()"],
            "table": {cycle_string(x): cycle_string(y) for x, y in sorted(obj.mapping.items())},
        }
    if isinstance(obj, dict):
        return {str(k): describe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = list(obj)
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=repr)
        return [describe(x) for x in items]
    return repr(obj)


@dataclass
class Verdict:
    prop: str
    holds: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"property": self.prop, "holds": self.holds,
                "witness": describe(self.witness)}

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return f"<Verdict {self.prop}: {'holds' if self.holds else 'FAILS'}>"
