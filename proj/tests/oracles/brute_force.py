"""Independent brute-force oracle for the frozen constants in the C++ tests.

Shares no code with the library: every value comes from parking each
candidate list directly. Run with `python3 tests/oracles/brute_force.py`.
"""

from collections import Counter
from itertools import permutations, product


def park(prefs, spots):
    occupied = [0] * spots
    unparked = []
    for car, p in enumerate(prefs, start=1):
        spot = p - 1
        while spot < spots and occupied[spot]:
            spot += 1
        if spot < spots:
            occupied[spot] = car
        else:
            unparked.append(car)
    return occupied, unparked


def is_pf(prefs):
    return not park(prefs, len(prefs))[1]


def is_prime(prefs):
    n = len(prefs)
    if n == 0:
        return False
    # Removing one car that prefers spot 1 must leave a parking function.
    if 1 not in prefs:
        return False
    rest = list(prefs)
    rest.remove(1)
    return is_pf(rest) and all(
        sum(1 for p in prefs if p <= i) > i for i in range(1, n)
    )


def restricted(n, allowed, prime=False):
    test = is_prime if prime else is_pf
    return [w for w in product(sorted(allowed), repeat=n) if test(w)]


def circular_park(prefs, spots):
    occupied = [0] * spots
    for car, p in enumerate(prefs, start=1):
        spot = p - 1
        while occupied[spot]:
            spot = (spot + 1) % spots
        occupied[spot] = car
    return occupied


def main():
    print("pf[n][s] for s = 1..n")
    for n in range(1, 7):
        print(n, [len(restricted(n, range(1, s + 1))) for s in range(1, n + 1)])
    print("ppf[n][s] for s = 1..n")
    for n in range(1, 7):
        print(n, [len(restricted(n, range(1, s + 1), True)) for s in range(1, n + 1)])
    print("nondecreasing pf[n][s]")
    for n in range(1, 9):
        row = []
        for s in range(1, n + 1):
            row.append(sum(1 for w in restricted(n, range(1, s + 1)) if list(w) == sorted(w)) if n <= 6 else None)
        print(n, row)
    print("ones distribution c_0..c_n for (n, s)")
    for n, s in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 3)]:
        c = Counter(w.count(1) for w in restricted(n, range(1, s + 1)))
        print((n, s), [c.get(j, 0) for j in range(n + 1)])
    print("fibers n=3, s=2 by outcome")
    fib = Counter(tuple(park(w, 3)[0]) for w in restricted(3, [1, 2]))
    print(sorted(fib.items()))
    print("fibers n=4, s=2 for selected outcomes")
    fib4 = Counter(tuple(park(w, 4)[0]) for w in restricted(4, [1, 2]))
    for sigma in [(1, 2, 3, 4), (4, 3, 2, 1), (2, 1, 4, 3), (1, 3, 2, 4)]:
        print(sigma, fib4.get(sigma, 0))
    print("modular #PF_{gs-k | S}")
    for g, s, k in [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 3, 1), (3, 3, 2), (2, 3, 2), (2, 4, 3), (3, 3, 4)]:
        n = g * s - k
        S = [j for j in range(1, n + 1) if j % g == 1 % g]
        print((g, s, k), len(restricted(n, S)))
    print("circular occupancies (g = s = 3)")
    for prefs in [(7, 1, 1, 7, 7, 7, 4), (1, 4, 1, 4, 7, 4, 4)]:
        print(prefs, circular_park(prefs, 9))
    print("prime sets: #PPF_{n|S} for S containing 1, n = 4")
    for S in [(1,), (1, 2), (1, 3), (1, 2, 3), (1, 2, 3, 4), (1, 3, 4)]:
        print(S, len(restricted(4, S, True)))
    print("defect: lists in [s]^n with least defect, n = 4")
    for s in range(1, 5):
        words = list(product(range(1, s + 1), repeat=4))
        d = [len(park(w, 4)[1]) for w in words]
        print(s, d.count(min(d)))


if __name__ == "__main__":
    main()
