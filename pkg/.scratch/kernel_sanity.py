import numpy as np
import sys
sys.path.insert(0, "/root/pkg/src")
from shearvortex import kernels as K

# --- wall exactness
for y in (0.0, 1.0):
    g = K.green(0.3, y, -0.2, 0.77)
    kx, ky = K.kernel(0.3, y, -0.2, 0.77, eps_blob=0.0)
    print(f"wall y={y}: G={g!r} ky={ky!r}")

# source on wall
print("src wall:", K.green(0.3, 0.44, -0.2, 1.0), K.kernel(0.3, 0.44, -0.2, 1.0)[1])

# --- symmetry
a = K.green(0.3, 0.41, -1.2, 0.77)
b = K.green(-1.2, 0.77, 0.3, 0.41)
print("symmetry:", float(a - b))

# --- near-field log behavior
for r in (1e-3, 1e-4):
    g = K.green(0.5 + r, 0.5, 0.5, 0.5)
    print(f"r={r}: G={g:.8f} vs log(r)/2pi={np.log(r)/(2*np.pi):.8f}")

# --- FD gradient consistency
for h in (1e-3, 5e-4, 2.5e-4):
    res = K.green_gradient_residual((0.31, 0.62), (-0.4, 0.37), h=h)
    print(f"h={h}: residual={res:.3e}")

# near-boundary
for h in (2e-3, 1e-3, 5e-4):
    res = K.green_gradient_residual((0.31, 0.01), (-0.4, 0.37), h=h)
    print(f"near-wall h={h}: residual={res:.3e}")

# --- kx parts sum
kx, ky = K.kernel(0.3, 0.62, -0.4, 0.37, eps_blob=0.02)
p1, p2 = K.kernel_x_parts(0.3, 0.62, -0.4, 0.37, eps_blob=0.02)
print("parts sum residual:", float(kx - (p1 + p2)))

# --- method-of-images series oracle
def green_images(x, y, xp, yp, kmax=100000):
    X2 = (x - xp) ** 2
    def term(k):
        return 0.5 * (np.log(X2 + (y - yp - 2.0 * k) ** 2)
                      - np.log(X2 + (y + yp - 2.0 * k) ** 2))
    k = np.arange(1, kmax + 1, dtype=float)
    s_full = term(0.0) + np.sum(term(k) + term(-k))
    s_half = term(0.0) + np.sum(term(k[: kmax // 2]) + term(-k[: kmax // 2]))
    # tail ~ alpha/k: Aitken-style correction using the two partial sums
    s = s_full + (s_full - s_half)
    return s / (2.0 * np.pi)

rng = np.random.default_rng(7)
worst = 0.0
for _ in range(20):
    x, xp = rng.uniform(-2, 2, 2)
    y, yp = rng.uniform(0.05, 0.95, 2)
    if abs(x - xp) + abs(y - yp) < 1e-3:
        continue
    gi = green_images(x, y, xp, yp)
    gc = float(K.green(x, y, xp, yp))
    worst = max(worst, abs(gi - gc))
print("images-vs-closed-form worst:", worst)

# --- mollifier vs FD Laplacian of regularized stream function
eps = 0.07
def psi(x, y):
    # regularized stream function of unit blob at (0.2, 0.6)
    xp, yp = 0.2, 0.6
    dxa = abs(x - xp)
    reg = 0.5 * (np.pi * eps) ** 2
    cm = np.cos(np.pi * (y - yp)); cp2 = np.cos(np.pi * (y + yp))
    gm = np.cosh(np.pi * dxa) - cm + reg
    gp = np.cosh(np.pi * dxa) - cp2 + reg
    return -np.log(gp / gm) / (4 * np.pi)

h = 1e-4
x0, y0 = 0.25, 0.55
lap = (psi(x0 + h, y0) + psi(x0 - h, y0) + psi(x0, y0 + h) + psi(x0, y0 - h)
       - 4 * psi(x0, y0)) / h**2
mol = float(K.vorticity_mollifier(x0, y0, 0.2, 0.6, eps))
print("mollifier vs FD laplacian:", lap, mol, abs(lap - mol))

# free-space shape near core
r = 0.0
mol0 = float(K.vorticity_mollifier(0.2, 0.6, 0.2, 0.6, eps))
print("mollifier core vs eps^-2/pi:", mol0, 1.0 / (np.pi * eps**2))
