import sys, time
sys.path.insert(0, "/root/pkg/src")
import numpy as np
from shearvortex.kernels import RegularizationParams, kernel
from shearvortex.profiles import make_profile
from shearvortex import dynamics as dyn
from shearvortex import oracle as orc

prof = make_profile("constant", value=0.0)
reg = RegularizationParams(eps_blob=0.1)
ens = dyn.from_blobs(x=[-0.2, 0.25, 0.0, -0.1], y=[0.55, 0.7, 0.45, 0.62],
                     area=[0.01]*4, omega0=[3.0, -2.0, 1.5, -1.0],
                     profile=prof, reg=reg)

# correction ablation at h=0.02: recompute without the gradient term
h = 0.02
x_lo = float(np.min(ens.x)) - 1.5
tx = np.array([x_lo + h*(round((-0.3-x_lo)/h-0.5)+0.5)])
ty = np.array([h*(round(0.55/h-0.5)+0.5)])
qx, qy = orc.quadrature_velocity(ens, tx, ty, h=h)
dx_, dy_ = orc.direct_velocity(ens, tx, ty)
# manual no-correction sum
ny = round(1/h); x_hi = float(np.max(ens.x)) + 1.5
nx = int(np.ceil((x_hi-x_lo)/h-1e-12))
xg = np.repeat(x_lo+h*(np.arange(nx)+0.5), ny)
yg = np.tile(h*(np.arange(ny)+0.5), nx)
vort = orc.mollified_vorticity(ens, xg, yg)
kx, ky = kernel(tx[0], ty[0], xg, yg, eps_blob=0.0)
near = int(np.argmin((xg-tx[0])**2+(yg-ty[0])**2))
kx[near] = 0.0; ky[near] = 0.0
raw = h*h*np.array([np.sum(kx*vort), np.sum(ky*vort)])
print("with corr err:", abs(qx[0]-dx_[0]), abs(qy[0]-dy_[0]))
print("no   corr err:", abs(raw[0]-dx_[0]), abs(raw[1]-dy_[0]))

# field checks on a proper patch ensemble
prof2 = make_profile("couette")
reg2 = RegularizationParams(eps_blob=0.05)
def patch(x, y):
    return np.where((np.abs(x) <= 1.0) & (y >= 0.25) & (y <= 0.75), 2.0, 0.0)
ens2 = dyn.discretize_initial(patch, -1.0, 1.0, 0.05, prof2, reg2)
rng = np.random.default_rng(7)
px = rng.uniform(-1.5, 1.5, 40)
py = rng.uniform(0.1, 0.9, 40)
for hf in (1e-2, 1e-3, 1e-4):
    rep = orc.field_checks(ens2, px, py, h_fd=hf)
    print(f"h_fd={hf:g} div_max={rep.div_max:.3e} curl_resid={rep.curl_resid_max:.3e}")

# kernel integral bound: symmetry, convergence, tail, runtime, sweep
t0 = time.time()
for comp in ("kx", "ky"):
    for yp in (0.01, 0.02, 0.05, 0.1, 0.25, 0.5):
        v = orc.kernel_integral_bound(yp, comp)
        print(f"I[{comp}](y'={yp:4g}) = {v:.6f}")
print("sweep time", time.time()-t0)
a, b = orc.kernel_integral_bound(0.3, "kx"), orc.kernel_integral_bound(0.7, "kx")
print("symmetry rel diff", abs(a-b)/a)
v1 = orc.kernel_integral_bound(0.25, "kx")
v2 = orc.kernel_integral_bound(0.25, "kx", band_step=0.005, n_theta=512, n_r=128)
print("refinement rel move", abs(v1-v2)/v2)
v3 = orc.kernel_integral_bound(0.25, "kx", x_extent=14.0)
print("extent rel move", abs(v1-v3)/v1)
