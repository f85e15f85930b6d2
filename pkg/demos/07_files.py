"""Saving and loading complexes as JSON.

The command line tool reads the same format, e.g.

    zpjoin homology V.json
    zpjoin join V.json V.json -o VV.json
"""
import tempfile
from pathlib import Path

from zpjoin import PrimeField, complex_V, homology, load_complex, save_complex

c = complex_V(PrimeField(3))
with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "V.json"
    save_complex(c, path)
    print(path.read_text())
    back = load_complex(path)
    print("round trip homology:", homology(back).jordan_types)
