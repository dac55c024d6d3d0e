"""Size caps, overridable through MVMLAB_CAP_* environment variables."""

import os

_DEFAULTS = {
    "CONGRUENCE": 12,   # full congruence lattice
    "SUBALGEBRA": 16,   # subset scan for subalgebras
    "PRODUCT": 64,      # product size
    "ENUM_CHAIN": 7,    # chain enumeration
    "ENUM_LATTICE": 6,  # enumeration over a fixed non-chain lattice
    "DOWNSET": 16,      # downset lattice of a poset
    "HOM": 10 ** 7,     # |B|^|A| bound for homomorphism search
}


def cap(name):
    env = os.environ.get(f"MVMLAB_CAP_{name}")
    if env is not None:
        return int(env)
    return _DEFAULTS[name]
