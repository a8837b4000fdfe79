"""Deterministic case generation.

A 64-bit linear congruential generator with the constants below makes the
seeded suites reproducible from the documented recipe alone:

    state_{k+1} = (6364136223846793005 * state_k + 1442695040888963407) mod 2^64
    draw(bound) = ((state >> 33) mod bound)   after advancing the state

Instances are derived from draws in a fixed documented order, so any
implementation can regenerate them from the seed.
"""

MUL = 6364136223846793005
INC = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state * MUL + INC) & MASK
        return self.state

    def draw(self, bound):
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() >> 33) % bound

    def draw_nonzero(self, bound):
        return 1 + self.draw(bound - 1)

    def choice(self, seq):
        return seq[self.draw(len(seq))]
