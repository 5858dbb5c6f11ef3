# Variate streams drawn per site
ARROW_STREAM: int = 0
KILL_STREAM: int = 1
RESAMPLE_STREAM: int = 2
HOP_STREAM: int = 3
INITIAL_STREAM: int = 4
N_STREAMS: int = 5

# splitmix64 finaliser constants
GOLDEN_GAMMA: int = 0x9E3779B97F4A7C15
MIX_MULT_1: int = 0xBF58476D1CE4E5B9
MIX_MULT_2: int = 0x94D049BB133111EB

SEED_LIMIT: int = 2**64
EPS: float = 1e-12
