"""JSON interchange format for families and sequences.

Example::

    {"n": 7, "k": 3, "group": "S", "ordered": false,
     "family": [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 5, 6]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .core import GroupKind, KSetError, SetFamily, SetSequence, Subset


class FamilyFileError(KSetError):
    pass


@dataclass(frozen=True)
class FamilyFile:
    n: int
    k: int | None
    group: GroupKind
    family: tuple[tuple[int, ...], ...]
    ordered: bool

    @property
    def payload(self) -> SetFamily | SetSequence:
        if self.ordered:
            return SetSequence.of(self.n, self.family)
        return SetFamily.of(self.n, self.family)

    @classmethod
    def from_payload(cls, payload, group: GroupKind, k: int | None = None) -> "FamilyFile":
        sizes = {len(m) for m in payload.members}
        if k is None and len(sizes) == 1:
            k = sizes.pop()
        return cls(payload.n, k, GroupKind.parse(group),
                   tuple(m.elements for m in payload.members),
                   isinstance(payload, SetSequence))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "group": self.group.value,
            "ordered": self.ordered,
            "family": [list(s) for s in self.family],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict()) + "\n"

    def dump(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def loads(cls, text: str, source: str = "<string>") -> "FamilyFile":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise FamilyFileError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None
        return cls.from_dict(raw, source)

    @classmethod
    def load(cls, path) -> "FamilyFile":
        p = Path(path)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as e:
            raise FamilyFileError(f"{p}: {e.strerror}") from None
        return cls.loads(text, str(p))

    @classmethod
    def from_dict(cls, raw, source: str = "<string>") -> "FamilyFile":
        def fail(field, msg):
            raise FamilyFileError(f"{source}: field '{field}': {msg}")

        if not isinstance(raw, dict):
            raise FamilyFileError(f"{source}: top level must be a JSON object")
        for name in ("n", "group", "family", "ordered"):
            if name not in raw:
                fail(name, "missing")
        n = raw["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            fail("n", f"must be a positive integer, got {n!r}")
        k = raw.get("k")
        if k is not None and (not isinstance(k, int) or isinstance(k, bool) or k < 1):
            fail("k", f"must be a positive integer or null, got {k!r}")
        try:
            group = GroupKind.parse(raw["group"])
        except KSetError as e:
            fail("group", str(e))
        ordered = raw["ordered"]
        if not isinstance(ordered, bool):
            fail("ordered", f"must be true or false, got {ordered!r}")
        fam = raw["family"]
        if not isinstance(fam, list):
            fail("family", "must be a list of integer lists")
        members = []
        for i, s in enumerate(fam):
            where = f"family[{i}]"
            if not isinstance(s, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in s):
                fail(where, f"must be a list of integers, got {s!r}")
            try:
                Subset(n, tuple(s))
            except KSetError as e:
                fail(where, str(e))
            if k is not None and len(s) != k:
                fail(where, f"has {len(s)} elements but k = {k}")
            members.append(tuple(s))
        if not ordered:
            seen = {}
            for i, s in enumerate(members):
                if s in seen:
                    fail(f"family[{i}]", f"duplicates family[{seen[s]}] in an unordered family")
                seen[s] = i
        return cls(n, k, group, tuple(members), ordered)
