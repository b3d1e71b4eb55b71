"""Independent high-precision reference values for the unit and acceptance tests.

Uses mpmath only; none of the C++ code paths are involved.
"""
import mpmath as mp

mp.mp.dps = 40


def hermite_fn(n, y):
    # normalized Hermite function, beta = 1
    return mp.hermite(n, y) * mp.exp(-y * y / 2) / mp.sqrt(2**n * mp.factorial(n) * mp.sqrt(mp.pi))


def entropy_unit(n):
    # -int h_n^2 ln h_n^2 dy, split at the Hermite zeros
    f = lambda y: -(hermite_fn(n, y) ** 2) * mp.log(hermite_fn(n, y) ** 2) if hermite_fn(n, y) != 0 else mp.mpf(0)
    pts = [-mp.inf] + sorted(mp.polyroots(mp.taylor(lambda t: mp.hermite(n, t), 0, n)[::-1])) + [mp.inf] if n > 0 else [-mp.inf, mp.inf]
    pts = [mp.re(p) for p in pts]
    return mp.quad(f, pts)


def fourier_density(n, beta, p):
    # |(2 pi)^-1/2 int psi_n(x) e^{-ipx} dx|^2 with hbar = m = 1
    s = mp.sqrt(beta)
    psi = lambda x: s**0.5 * hermite_fn(n, s * x)
    re = mp.quad(lambda x: psi(x) * mp.cos(p * x), [-mp.inf, 0, mp.inf])
    im = mp.quad(lambda x: psi(x) * mp.sin(p * x), [-mp.inf, 0, mp.inf])
    return (re**2 + im**2) / (2 * mp.pi)


print("lambda(omega=2,kappa=0.2) =", mp.nstr(4 * mp.mpf('0.2') / (2 * mp.pi**2), 17))
print("E0(omega=2,kappa=0.2) =", mp.nstr(2 * mp.sqrt(mp.mpf('0.8')) / 2 + 4 * mp.mpf('0.2') / (2 * mp.pi**2), 17))
we = mp.sqrt(mp.mpf('0.8'))
print("S_x ground(omega=1,kappa=0.2) =", mp.nstr((1 + mp.log(mp.pi / we)) / 2, 17))
print("S_p ground(omega=1,kappa=0.2) =", mp.nstr((1 + mp.log(mp.pi * we)) / 2, 17))
print("1+ln pi =", mp.nstr(1 + mp.log(mp.pi), 17))
for n in range(0, 6):
    s = entropy_unit(n)
    J = mp.exp(2 * s) / (2 * mp.pi * mp.e)
    P = J * 2 * (2 * n + 1)
    print(f"S_unit(n={n}) =", mp.nstr(s, 17), " P =", mp.nstr(P, 17))
print("fourier n=1 beta=sqrt(0.5) p=0.7:", mp.nstr(fourier_density(1, mp.sqrt(mp.mpf('0.5')), mp.mpf('0.7')), 17))
print("fourier n=4 beta=2*sqrt(0.8) p=-1.1:", mp.nstr(fourier_density(4, 2 * mp.sqrt(mp.mpf('0.8')), mp.mpf('-1.1')), 17))
print("psi_5(1.3) beta=1:", mp.nstr(hermite_fn(5, mp.mpf('1.3')), 17))
