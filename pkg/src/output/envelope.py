"""
Output Envelope
The single JSON document every command emits, plus payload builders.

All big integers are rendered as decimal strings.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from src.core.batch import BatchSummary
from src.core.linrep import Certificate, LinearRepresentation, RowPolynomials
from src.core.oracle import SearchResult


logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = Path(__file__).with_name('envelope.schema.json')


@dataclass
class OutputEnvelope:
    """Machine-readable result of one CLI invocation"""
    command: str
    input: str
    result: Dict[str, Any]
    diagnostics: List[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def add_diagnostic(self, notice: str) -> 'OutputEnvelope':
        self.diagnostics.append(notice)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def load_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH, 'r') as f:
        return json.load(f)


def validate_envelope(data: Dict[str, Any]) -> None:
    """
    Validate a parsed envelope against the published schema.

    Raises:
        jsonschema.ValidationError: If the document does not conform
    """
    jsonschema.validate(instance=data, schema=load_schema())


def polynomial_payload(rp: RowPolynomials) -> Dict[str, Any]:
    """Characteristic polynomial, adjugate and row polynomials as coefficient lists"""
    return {
        'n': rp.n,
        'char_poly': _coeffs(rp.char_poly.to_list()),
        'adjugate': [[_coeffs(entry) for entry in row] for row in rp.adjugate.to_lists()],
        'row_polynomials': [_coeffs(p.to_list()) for p in rp.p],
    }


def repr_payload(
    rep: LinearRepresentation,
    certificate: Certificate,
    threshold: Optional[int] = None,
) -> Dict[str, Any]:
    payload = rep.to_dict()
    payload['threshold'] = None if threshold is None else str(threshold)
    payload['certificate'] = certificate.to_dict()
    return payload


def verify_payload(rep: LinearRepresentation, certificate: Certificate) -> Dict[str, Any]:
    payload = rep.to_dict()
    payload['valid'] = certificate.passed
    payload['certificate'] = certificate.to_dict()
    return payload


def minimal_payload(
    result: SearchResult,
    constructive: Optional[LinearRepresentation],
) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        'found': result.found,
        'searched_through': str(result.searched_through),
        'nodes': result.nodes,
        'exhausted': result.exhausted,
        'constructive_m': None if constructive is None else str(constructive.m),
        'constructive_x': None if constructive is None else str(constructive.x),
    }
    if result.found:
        rep = result.representation
        payload.update({'m': str(rep.m), 'a': str(rep.a), 'j': [str(v) for v in rep.j]})
    return payload


def batch_payload(summary: BatchSummary, out: str) -> Dict[str, Any]:
    payload = summary.to_dict()
    payload['out'] = out
    return payload


def _coeffs(values: List[int]) -> List[str]:
    return [str(v) for v in values]
