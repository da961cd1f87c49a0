import sys, time, json
sys.path.insert(0, "/root/pkg/src")
from shearvortex import harness as H

# tiny run: couette patch at coarse resolution, short horizon
cfg = H.parse_config("""
profile.kind = couette
init.x_lo = -0.5
init.x_hi = 0.5
init.y_lo = 0.4
init.y_hi = 0.6
numerics.h = 0.1
numerics.dt = 0.05
numerics.t_end = 0.5
numerics.record_every = 2
out = .scratch/smoke-run
""")
t0 = time.time()
man = H.simulate(cfg, workers=2)
print("simulate ok", man["status"], "blobs", man["n_blobs"],
      "slices", len(man["slices"]), f"{time.time()-t0:.2f}s")
print("slice steps:", [s["step"] for s in man["slices"]])

rep = H.kernel_selftest()
for c in rep.checks:
    print(f"  {'PASS' if c.ok else 'FAIL'} {c.name}: {c.value:.3g} tol {c.tol:.3g}")
print("selftest ok:", rep.ok)

bad = H.kernel_selftest(c_env=H.ENVELOPE_COEFF / 2.0)
names = {c.name: c.ok for c in bad.checks}
print("halved envelope fails screening:", not names["screening-envelope"])

t0 = time.time()
checks, ok = H.oracle_compare(out_dir=".scratch/oracle-out")
for c in checks:
    print(f"  {'PASS' if c.ok else 'FAIL'} {c.name}: {c.value:.3g} tol {c.tol:.3g}")
print("oracle_compare ok:", ok, f"{time.time()-t0:.2f}s")
