"""
The whole pipeline as one certificate
=====================================

certify() runs every step and only attaches a verdict when all of them pass.
The same run is available as ``excsing certify --paper-data --out cert.json``.
"""

import tempfile
from pathlib import Path

from excsing.certify import Certificate, certify

cert = certify("paper-data")
for step in cert.steps:
    print(f"{'ok ' if step.passed else 'BAD'} {step.name}")
print("verdict:", cert.verdict["statement"])
print("note:", cert.verdict["note"])

out = Path(tempfile.mkdtemp()) / "certificate.json"
out.write_text(cert.dumps())
assert Certificate.loads(out.read_text()) == cert
print("written and re-read:", out)
