"""JSON check reports with stable key order (common)."""

import hashlib
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from .linalg import format_rational


TOOL_NAME = 'cube-ideal'
TOOL_VERSION = '0.1.0'
INFINITY = 'infinity'

PASS = 'pass'
FAIL = 'fail'
INFO = 'info'


def inf_or(value: Optional[Any]) -> Any:
    """None stands for +infinity in the Python API."""
    return INFINITY if value is None else value


def jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        if value != value or value in (float('inf'), float('-inf')):
            return INFINITY if value > 0 else str(value)
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        items = [jsonable(v) for v in value]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_json'):
        return value.to_json()
    if hasattr(value, 'item'):
        # numpy scalars
        return jsonable(value.item())
    return value

def digest_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class Check:
    name: str
    status: str = INFO
    values: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[Any] = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'seconds': round(self.seconds, 6),
            'status': self.status,
            'values': jsonable(self.values),
            'witnesses': jsonable(self.witnesses),
        }


@dataclass
class Report:
    input_digest: Optional[str] = None
    checks: List[Check] = field(default_factory=list)

    @contextmanager
    def check(self, name: str) -> Iterator[Check]:
        """Time a block and append the check it fills in."""
        record = Check(name)
        start = time.perf_counter()
        try:
            yield record
        finally:
            record.seconds = time.perf_counter() - start
            self.checks.append(record)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            'checks': [c.to_json() for c in self.checks],
            'input_digest': self.input_digest,
            'tool': TOOL_NAME,
            'version': TOOL_VERSION,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)
