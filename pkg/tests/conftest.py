import sys
from pathlib import Path

# make the shared corpus/oracles helpers importable however pytest is invoked
sys.path.insert(0, str(Path(__file__).resolve().parent))
