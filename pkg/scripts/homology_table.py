"""Cyclic homology dimensions for every module-algebra and module-coring datum in the corpus.

    python3 scripts/homology_table.py --max-degree 5
"""

import argparse

from hopfcyc.complexes import build_cyclic_module_algebra, build_cyclic_module_coring
from hopfcyc.cyclic import cyclic_homology
from hopfcyc.zoo import REGISTRY, example


def rows(N: int):
    for name in REGISTRY:
        ex = example(name)
        for T, M in ex.algebra_data:
            yield name, f"{T.name} / {M.name}", cyclic_homology(build_cyclic_module_algebra(T, M, N))
        for C, M in ex.coring_data:
            yield name, f"coring {C.name} / {M.name}", cyclic_homology(build_cyclic_module_coring(C, M, N))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-degree", type=int, default=4, help="truncation; HC is exact up to one less")
    args = p.parse_args()
    N = args.max_degree
    header = f"{'example':<16} {'datum':<40} " + " ".join(f"HC{n:<2}" for n in range(N))
    print(header)
    print("-" * len(header))
    for name, label, hc in rows(N):
        print(f"{name:<16} {label[:40]:<40} " + " ".join(f"{d:<4}" for d in hc.as_list()))


if __name__ == "__main__":
    main()
