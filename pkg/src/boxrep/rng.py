"""SplitMix64 pseudo-random generator.

A tiny, fully specified 64-bit generator (Steele, Lea and Vigna's splitmix64
finalizer) implemented here so that seeded runs are byte-identical across
platforms and Python versions. All randomized code in the package draws from
this class and records ALGORITHM in its metadata.
"""

ALGORITHM = "splitmix64"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = _MASK64 + 1 - (_MASK64 + 1) % n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def sample(self, population: int, k: int) -> list[int]:
        """k distinct integers from range(population), via partial Fisher-Yates.

        Returned sorted so callers iterate deterministically.
        """
        if k > population:
            raise ValueError("sample larger than population")
        pool = list(range(population))
        for i in range(k):
            j = i + self.below(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:k])
