"""
Output module: JSON envelopes, human-readable reports and CSV export
"""

from .envelope import OutputEnvelope, SCHEMA_VERSION, validate_envelope, load_schema
from .report import write_batch_csv, CSV_HEADER

__all__ = [
    'OutputEnvelope',
    'SCHEMA_VERSION',
    'validate_envelope',
    'load_schema',
    'write_batch_csv',
    'CSV_HEADER'
]
