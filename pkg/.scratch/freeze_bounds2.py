import sys, time
sys.path.insert(0, "/root/pkg/src")
from shearvortex import oracle as orc

t0 = time.time()
for comp in ("kx", "ky"):
    for xp in (-3.0, 0.0, 3.0):
        vals = [orc.kernel_integral_bound(xp, yp, comp)
                for yp in (0.01, 0.02, 0.05, 0.1, 0.25, 0.5)]
        print(comp, xp, [float(f"{v:.8g}") for v in vals])
print("sweep time", time.time() - t0)
# symmetry / convergence / tail at the new definition
a = orc.kernel_integral_bound(0.0, 0.3, "ky")
b = orc.kernel_integral_bound(0.0, 0.7, "ky")
print("mirror rel", abs(a - b) / a)
v1 = orc.kernel_integral_bound(0.0, 0.05, "ky")
v2 = orc.kernel_integral_bound(0.0, 0.05, "ky", band_step=0.005, n_theta=512, n_r=128)
print("refine rel", abs(v1 - v2) / v2)
v3 = orc.kernel_integral_bound(0.0, 0.25, "kx")
v4 = orc.kernel_integral_bound(0.0, 0.25, "kx", x_extent=14.0)
print("extent rel", abs(v3 - v4) / v3)
