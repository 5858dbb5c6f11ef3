# Largest lattice width simulated for one replicate before the run is refused
MAX_CONE_WIDTH: int = 2_000_000

# theta and renewal runs degrade to this beta when the light cone is too wide
FALLBACK_BETA: float = 4.0

# Critical density of independent oriented site percolation (literature value)
ORIENTED_SITE_PC: float = 0.7055

N_STANDARD_ERRORS: float = 3.0

# Two-sample Kolmogorov-Smirnov coefficient at the 5% level, scaled by sqrt(2/n)
KS_CRITICAL_5PCT: float = 1.358

DEFAULT_QUANTILES: tuple[float, ...] = (0.1, 0.25, 0.5, 0.75, 0.9)
