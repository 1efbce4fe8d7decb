"""Smith form of an irreducible system matrix two ways: direct elimination on P,
and via the Smith-McMillan form of its (smaller) transfer function.

    python3 scripts/schur_smith_demo.py --ranks 1 2 3 4 --trials 5
"""

import argparse
import random
import time
from dataclasses import dataclass, field

from rosenbrock_edd import ZZ, QZ, smith, smith_mcmillan
from rosenbrock_edd.generators import rand_irreducible
from rosenbrock_edd.system import is_irreducible


@dataclass
class DemoConfig:
    ring: str = "Z"
    ranks: list = field(default_factory=lambda: [1, 2, 3, 4])
    pad: int = 2
    trials: int = 5
    seed: int = 0


def via_schur(P):
    if not is_irreducible(P).irreducible:
        return None
    sm = smith_mcmillan(P.transfer())
    return (P.ring.one(),) * P.n + tuple(sm.eps)


def run(cfg):
    R = {"Z": ZZ, "Qz": QZ}[cfg.ring]
    rng = random.Random(cfg.seed)
    print(f"{'rank':>4} {'size of P':>10} {'direct s':>10} {'schur s':>10} {'agree':>6}")
    for r in cfg.ranks:
        t_direct = t_schur = 0.0
        agree = True
        sizes = []
        for _ in range(cfg.trials):
            P, _ = rand_irreducible(R, rng, max_rank=r, pad_max=cfg.pad)
            sizes.append(P.P.shape)
            t0 = time.perf_counter()
            a = smith(P.P).inv_factors
            t1 = time.perf_counter()
            b = via_schur(P)
            t2 = time.perf_counter()
            t_direct += t1 - t0
            t_schur += t2 - t1
            agree &= a == b
        big = max(sizes)
        print(f"{r:>4} {str(big):>10} {t_direct:>10.4f} {t_schur:>10.4f} {str(agree):>6}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ring", choices=("Z", "Qz"), default=DemoConfig.ring)
    ap.add_argument("--ranks", type=int, nargs="+", default=DemoConfig().ranks)
    ap.add_argument("--pad", type=int, default=DemoConfig.pad)
    ap.add_argument("--trials", type=int, default=DemoConfig.trials)
    ap.add_argument("--seed", type=int, default=DemoConfig.seed)
    run(DemoConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
