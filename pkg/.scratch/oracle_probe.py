import sys, time
sys.path.insert(0, "/root/pkg/src")
import numpy as np
from shearvortex.kernels import RegularizationParams
from shearvortex.profiles import make_profile
from shearvortex import dynamics as dyn
from shearvortex import oracle as orc

prof = make_profile("constant", value=0.0)
reg = RegularizationParams(eps_blob=0.1)

# dipole-ish ensemble, wide cores for smooth omega_eps
ens = dyn.from_blobs(
    x=[-0.2, 0.25, 0.0, -0.1],
    y=[0.55, 0.7, 0.45, 0.62],
    area=[0.01, 0.01, 0.01, 0.01],
    omega0=[3.0, -2.0, 1.5, -1.0],
    profile=prof, reg=reg)

# targets at cell centres for each h
for h in (0.04, 0.02, 0.01):
    x_lo = float(np.min(ens.x)) - 1.5
    # pick centres near the blobs
    tx, ty = [], []
    for (bx, by) in [(-0.3, 0.35), (0.4, 0.6), (0.05, 0.5), (-0.15, 0.75)]:
        i = round((bx - x_lo) / h - 0.5)
        j = round(by / h - 0.5)
        tx.append(x_lo + h * (i + 0.5))
        ty.append(h * (j + 0.5))
    tx, ty = np.array(tx), np.array(ty)
    t0 = time.time()
    qx, qy = orc.quadrature_velocity(ens, tx, ty, h=h, pad=1.5)
    dt = time.time() - t0
    dx_, dy_ = orc.direct_velocity(ens, tx, ty)
    err = max(np.max(np.abs(qx - dx_)), np.max(np.abs(qy - dy_)))
    scale = max(np.max(np.abs(dx_)), np.max(np.abs(dy_)))
    print(f"h={h:5.3f} err={err:.3e} scale={scale:.3e} rel={err/scale:.3e} t={dt:.2f}s")

# no-correction comparison at h=0.02 to show the correction earns its keep
