"""Throughput benchmark for point-set evolution and wedge ages."""

import time

import numpy as np

from bck_net import ArrowField, FieldParams, Window
from bck_net.dual import wedge_ages
from bck_net.walkers import bc_point_set


def benchmark_point_set(half_width: int, steps: int, b_site: float = 0.05):
    """Time one full-line point set evolved inside its light cone."""
    print(f"\n{'=' * 60}")
    print(f"Point set: half-width {half_width}, {steps} steps, b_site={b_site}")
    print(f"{'=' * 60}")

    field = ArrowField(FieldParams(b=b_site, seed=1))
    window = Window(-half_width, half_width, buffer=steps)

    start = time.time()
    ps = bc_point_set(field, 0, steps, window, killing=False)
    elapsed = time.time() - start

    site_steps = (2 * half_width + steps) * steps / 2
    print(f"  Total time: {elapsed:.3f}s")
    print(f"  Steps per second: {steps / elapsed:.1f}")
    print(f"  Cone sites per second: {site_steps / elapsed:.3g}")
    print(f"  Points left in the core: {len(ps)}")
    return steps / elapsed


def benchmark_wedges(n_sites: int, depth: int, b_site: float = 0.05):
    """Time wedge ages for many sites at once."""
    field = ArrowField(FieldParams(b=b_site, seed=2))
    xs = 2 * np.arange(n_sites, dtype=np.int64)
    start = time.time()
    ages, censored = wedge_ages(field, xs, 0, depth)
    elapsed = time.time() - start
    print(
        f"\nWedge ages: {n_sites} sites, depth {depth}: {elapsed:.3f}s "
        f"({n_sites / elapsed:.0f} sites/sec, {censored.mean():.3f} censored)"
    )
    return n_sites / elapsed


def main():
    """Run benchmarks with increasing lattice times (e^2beta for beta = 2..5)."""
    print("bck-net Performance Test")
    print("=" * 60)

    test_cases = [(7, 55), (20, 403), (55, 2981), (148, 22026)]
    results = {}

    for half_width, steps in test_cases:
        try:
            results[steps] = benchmark_point_set(half_width, steps)
        except Exception as e:
            print(f"\nError with {steps} steps: {e}")
            import traceback

            traceback.print_exc()
            break

    benchmark_wedges(10_000, 2981)

    print(f"\n{'=' * 60}")
    print("PERFORMANCE SUMMARY")
    print(f"{'=' * 60}")
    print(f"{'Steps':<10} {'Steps/s':<10}")
    print(f"{'-' * 10} {'-' * 10}")
    for steps, rate in results.items():
        print(f"{steps:<10} {rate:<10.1f}")


if __name__ == "__main__":
    main()
