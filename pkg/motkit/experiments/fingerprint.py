import hashlib
import json
from typing import Any, Dict

EXCLUDED_FINGERPRINT_FIELDS = {
    "runtime_ms",
    "fingerprint",
}


def compute_report_fingerprint(payload: Dict[str, Any]) -> str:
    """
    SHA-256 over the canonical JSON of a report, leaving out the fields that
    legitimately differ between two runs of the same experiment.
    """
    canonical_payload = {
        k: payload[k]
        for k in sorted(payload.keys())
        if k not in EXCLUDED_FINGERPRINT_FIELDS
    }

    serialized = json.dumps(
        canonical_payload,
        sort_keys=True,
        separators=(",", ":"),
    )

    return hashlib.sha256(serialized.encode("utf-8")).hexdigest()
