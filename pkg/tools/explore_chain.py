"""Dev harness: inspect chain-model output and fit the closed-form pairing
rule against it.  Not part of the shipped package."""

import sys
from collections import defaultdict
from fractions import Fraction

sys.path.insert(0, "src")

from vmorse._chainmodel import ChainConfig, chain_state, configurations


def show(mu):
    for cfg in configurations(mu):
        st = chain_state(cfg)
        print(
            f"mu={mu} ranks={cfg.ranks} neg={cfg.neg} idx={st.indices} "
            f"ev={st.even} odd={st.odd}"
        )
        print("   S=", st.matrix)


if __name__ == "__main__":
    for mu in (1, 2):
        show(mu)
