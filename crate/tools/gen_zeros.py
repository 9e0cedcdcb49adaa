#!/usr/bin/env python3
"""Generate zero-ordinate fixture files.

Writes plaintext tables (one ascending ordinate per line, '#' comments)
for the Riemann zeta function and for L(s, chi_{-4}), plus the merged
table for the Dedekind zeta function of Q(i).
"""
import mpmath as mp

mp.mp.dps = 30

N_ZETA = 120
CHI4_HEIGHT = 110.0


def zeta_zeros(n):
    return [mp.im(mp.zetazero(k)) for k in range(1, n + 1)]


def l_chi4(s):
    # L(s, chi_{-4}) = 4^{-s} (zeta(s,1/4) - zeta(s,3/4))
    return mp.power(4, -s) * (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4))


def lambda_chi4(t):
    # Completed L: (pi/4)^{-(s+1)/2} Gamma((s+1)/2) L(s, chi_{-4});
    # real on the critical line (odd character, root number 1).
    s = mp.mpf("0.5") + mp.mpc(0, 1) * t
    v = mp.power(mp.pi / 4, -(s + 1) / 2) * mp.gamma((s + 1) / 2) * l_chi4(s)
    return mp.re(v)


def chi4_zeros(tmax):
    zeros = []
    step = mp.mpf("0.05")
    t = mp.mpf("0.5")
    prev_t, prev_v = t, lambda_chi4(t)
    while t < tmax:
        t += step
        v = lambda_chi4(t)
        if mp.sign(v) != mp.sign(prev_v) and prev_v != 0:
            root = mp.findroot(lambda x: lambda_chi4(x), (prev_t, t), solver="bisect", tol=mp.mpf(10) ** (-24))
            zeros.append(mp.mpf(root))
        prev_t, prev_v = t, v
    return zeros


def write_table(path, header, ordinates):
    with open(path, "w") as f:
        f.write(header)
        for g in ordinates:
            f.write(mp.nstr(g, 17, strip_zeros=False) + "\n")
    print(f"{path}: {len(ordinates)} ordinates, last = {mp.nstr(ordinates[-1], 17)}")


zz = zeta_zeros(N_ZETA)
write_table(
    "data/zeros_zeta.txt",
    "# Nontrivial zero ordinates of the Riemann zeta function (first %d, 17 digits)\n" % N_ZETA,
    zz,
)

cz = chi4_zeros(mp.mpf(CHI4_HEIGHT))
write_table(
    "data/zeros_chi4.txt",
    "# Nontrivial zero ordinates of L(s, chi_{-4}) up to height %.0f (17 digits)\n" % CHI4_HEIGHT,
    cz,
)

merged = sorted(zz + cz)
merged = [g for g in merged if g <= CHI4_HEIGHT]
write_table(
    "data/zeros_zqi.txt",
    "# Nontrivial zero ordinates of zeta_{Q(i)}(s) = zeta(s) L(s, chi_{-4}) up to height %.0f\n" % CHI4_HEIGHT,
    merged,
)
