"""Time basis extraction with the compiled kernels and the numpy fallback.

    python benchmarks/compare_backends.py [--n 50] [--k 125,250,500,1000] [--method residuation]
"""
import argparse

from maxcone import _backend
from maxcone.bench import generate_matrix, time_basis


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--k", default="125,250,500,1000")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", default="residuation")
    args = p.parse_args()

    backends = sorted(_backend.BACKENDS)
    print(f"{'k':>6} " + " ".join(f"{b:>12}" for b in backends) + f" {'speedup':>9}")
    for k in (int(t) for t in args.k.split(",")):
        V = generate_matrix(args.n, k, args.seed)
        cells = {b: time_basis(V, args.method, args.reps, backend=b) for b in backends}
        kept = {c.basis_size for c in cells.values()}
        assert len(kept) == 1, f"backends disagree at k={k}: {kept}"
        line = f"{k:>6} " + " ".join(f"{cells[b].median_s:>11.4f}s" for b in backends)
        if "compiled" in cells:
            line += f" {cells['python'].median_s / cells['compiled'].median_s:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
