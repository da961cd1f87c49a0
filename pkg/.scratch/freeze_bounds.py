import sys
sys.path.insert(0, "/root/pkg/src")
from shearvortex import oracle as orc
for comp in ("kx", "ky"):
    vals = [orc.kernel_integral_bound(yp, comp)
            for yp in (0.01, 0.02, 0.05, 0.1, 0.25, 0.5)]
    print(comp, "=", [float(f"{v:.10g}") for v in vals])
