"""Search an Edwards curve x^2 + y^2 = 1 + d x^2 y^2 over the secp160r1 prime.

Offline helper, needs cypari2 for point counting (not a runtime dependency).
Walks d = 2, 3, ... over non-squares, counts points on the birationally
equivalent short Weierstrass model and keeps the first curve whose order is
4 * prime. The base point is 4 * (x, y) for the smallest usable y >= 2.

    python tools/derive_edwards160.py > src/ecbench/data/edwards160.cfg
"""
import cypari2

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)

P = 2**160 - 2**31 - 1


def inv(x):
    return pow(x, -1, P)


def weierstrass_model(d):
    A = 2 * (1 + d) * inv(1 - d) % P
    B = 4 * inv(1 - d) % P
    a = (3 - A * A) * inv(3 * B * B) % P
    b = (2 * A**3 - 9 * A) * inv(27 * B**3) % P
    return a, b


def ed_add(p1, p2, d):
    x1, y1 = p1
    x2, y2 = p2
    t = d * x1 * x2 * y1 * y2 % P
    return ((x1 * y2 + y1 * x2) * inv(1 + t) % P, (y1 * y2 - x1 * x2) * inv(1 - t) % P)


def sqrt(a):
    r = pow(a, (P + 1) // 4, P)
    return r if r * r % P == a % P else None


def main():
    d = 1
    while True:
        d += 1
        if pow(d, (P - 1) // 2, P) != P - 1:
            continue
        a, b = weierstrass_model(d)
        order = int(pari(f"ellcard(ellinit([0,0,0,{a},{b}],{P}))"))
        if order % 4 or not pari(f"isprime({order // 4})"):
            continue
        y = 1
        while True:
            y += 1
            x = sqrt((1 - y * y) * inv(1 - d * y * y) % P)
            if x is None:
                continue
            pt = (x, y)
            pt = ed_add(pt, pt, d)
            pt = ed_add(pt, pt, d)
            if pt != (0, 1):
                break
        print("# Edwards curve x^2 + y^2 = c^2 (1 + d x^2 y^2), c = 1, over the secp160r1 prime.")
        print("# Generated by tools/derive_edwards160.py; group order = n * h.")
        print("model = edwards")
        print("name = edwards160")
        print(f"p = {P:#x}")
        print("c = 1")
        print(f"d = {d}")
        print(f"gx = {pt[0]:#x}")
        print(f"gy = {pt[1]:#x}")
        print(f"n = {order // 4:#x}")
        print("h = 4")
        return


if __name__ == "__main__":
    main()
