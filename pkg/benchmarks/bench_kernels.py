"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import random
import timeit

from fixtrace.groups import cyclic_group, dihedral_group, direct_product, symmetric_group
from fixtrace.kernels import compiled_backend, python_backend


def dense(rng, order, rows, cols, density=0.3):
    return [[[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(order)]
             for _ in range(cols)] for _ in range(rows)]


def cases(rng, size):
    S5 = symmetric_group(5)
    G = direct_product(dihedral_group(6), cyclic_group(2))
    phi = tuple(range(S5.order))
    A, B = dense(rng, G.order, size, size), dense(rng, G.order, size, size)
    return [
        (f"grmat_mul {size}x{size} over Z[D6 x C2]", "grmat_mul", (A, B, G.product)),
        ("twisted_class_labels S5", "twisted_class_labels", (S5.product, S5.inverse, phi)),
        ("is_associative D6 x C2", "is_associative", (G.product,)),
    ]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--size", type=int, default=12, help="matrix size for the multiplication case")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if compiled_backend is None:
        print("compiled kernels are not built; only the pure-Python times are shown")
    rng = random.Random(args.seed)
    print(f"{'case':42s} {'python (s)':>12s} {'compiled (s)':>13s} {'speedup':>8s}")
    for label, name, call_args in cases(rng, args.size):
        py = min(timeit.repeat(lambda: getattr(python_backend, name)(*call_args), number=1, repeat=args.repeat))
        if compiled_backend is None:
            print(f"{label:42s} {py:12.5f} {'-':>13s} {'-':>8s}")
            continue
        fast = getattr(compiled_backend, name)
        c = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat))
        print(f"{label:42s} {py:12.5f} {c:13.5f} {py / c:7.1f}x")


if __name__ == "__main__":
    main()
