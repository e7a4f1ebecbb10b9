#!/usr/bin/env python3
"""Re-run every oracle and compare with its frozen output."""
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).parent
bad = 0
for script in sorted(here.glob("*_oracle.py")):
    want = (here / "expected" / (script.stem + ".txt")).read_text()
    got = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, check=True).stdout
    if got != want:
        print(f"{script.name}: output changed")
        bad += 1
    else:
        print(f"{script.name}: ok")
sys.exit(1 if bad else 0)
