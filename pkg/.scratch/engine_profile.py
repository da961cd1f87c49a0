import sys, time
sys.path.insert(0, "/root/pkg/src")
import numpy as np
from shearvortex import dynamics as dyn
from shearvortex.kernels import RegularizationParams
from shearvortex.profiles import sine_perturbed

prof = sine_perturbed(0.05, 1.0)
reg = RegularizationParams(eps_blob=0.05)

def patch(x, y):
    return np.where((np.abs(x) <= 1.0) & (y >= 0.25) & (y <= 0.75), 0.1, 0.0)

for h in (0.05, 0.025):
    ens = dyn.discretize_initial(patch, -1.0, 1.0, h, prof, reg, tol=1e-10)
    # warm up then time a velocity evaluation and a full step
    dyn.induced_velocity(ens)
    t0 = time.time()
    for _ in range(5):
        dyn.induced_velocity(ens)
    ev = (time.time() - t0) / 5
    t0 = time.time()
    dyn.step(ens, 0.01)
    st = time.time() - t0
    print(f"n={ens.n}: eval {ev*1e3:.1f} ms, rk4 step {st*1e3:.1f} ms, "
          f"l_cut {ens.trunc.l_cut:.2f}")
