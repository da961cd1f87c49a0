"""One-time scan fixing ENVELOPE_COEFF: max of |K| e^{pi |dx|} over a dense grid."""
import numpy as np
import sys
sys.path.insert(0, "/root/pkg/src")
from shearvortex import kernels

yg = np.linspace(0.0, 1.0, 201)
Y, YP = np.meshgrid(yg, yg, indexing="ij")
dxs = np.arange(1.0, 8.0 + 1e-12, 1.0 / 200.0)

worst = 0.0
worst_where = None
for eps in (0.0, 0.01, 0.05, 0.1, 0.3):
    for chunk in np.array_split(dxs, 64):
        dx = chunk[:, None, None]
        kx, ky = kernels.kernel(dx, Y[None], dx * 0.0, YP[None], eps_blob=eps)
        mag = np.hypot(kx, ky) * np.exp(np.pi * dx)
        i = np.unravel_index(np.nanargmax(mag), mag.shape)
        if mag[i] > worst:
            worst = float(mag[i])
            worst_where = (eps, float(chunk[i[0]]), float(yg[i[1]]), float(yg[i[2]]))
print("max ratio:", worst)
print("at (eps, dx, y, yp):", worst_where)
print("with 1.25 safety:", worst * 1.25)
