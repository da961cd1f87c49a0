"""Measure every acceptance margin from the preset runs."""
import csv
import numpy as np
from shearvortex.diagnostics import fit_decay_rate
from shearvortex.harness import prop41_check

def load(name):
    with open(f".scratch/runs/{name}/diagnostics.csv") as fh:
        rows = list(csv.DictReader(fh))
    cols = {k: np.array([float(r[k]) for r in rows]) for k in rows[0]}
    return cols

cp = load("couette-patch")
nc = load("nonstagnant-const")
ns = load("nonstagnant-sine")
bt = load("boundary-touching")
de = load("dipole-escape")

print("== A5: sup_phi ratio (tol 1.05) ==")
for nm, d in (("nonstagnant-const", nc), ("nonstagnant-sine", ns)):
    ratio = np.max(d["sup_phi"]) / d["sup_phi"][0]
    print(f"  {nm}: max ratio {ratio:.6f}")

print("== A6: local_l1 decay fit, nonstagnant-const t in [2,10] (rate>=0.4, r2>=0.9) ==")
m = (nc["t"] >= 2.0) & (nc["t"] <= 10.0)
rate, r2 = fit_decay_rate(nc["t"][m], nc["local_l1"][m])
print(f"  rate {rate:.4f}  r2 {r2:.5f}")
# also the sine preset for reference
m2 = (ns["t"] >= 2.0) & (ns["t"] <= 10.0)
rate2, r22 = fit_decay_rate(ns["t"][m2], ns["local_l1"][m2])
print(f"  (sine ref) rate {rate2:.4f}  r2 {r22:.5f}")

print("== A7: prop41 on couette-patch ==")
rep = prop41_check(cp["t"], cp["M"], cp["damping_rhs"])
print(f"  ok {rep.ok}  worst_margin {rep.worst_margin:.6e}")

print("== A8: t=20 fractions (<0.1) ==")
for nm, d in (("couette-patch", cp), ("boundary-touching", bt)):
    an = abs(d["a_n"][-1]) / abs(d["a_n"][0])
    ls = d["local_sup"][-1] / d["local_sup"][0]
    print(f"  {nm}: a_n frac {an:.5f}  local_sup frac {ls:.5f}")

print("== A4: conservation drift, nonstagnant-sine (tol 2%) ==")
for col in ("excess_enstrophy", "excess_casimir"):
    v = ns[col]
    drift = np.max(np.abs(v - v[0])) / abs(v[0])
    print(f"  {col}: base {v[0]:.6f}  max drift {drift:.5%}")

print("== A10: dipole excess energy (positive, drift <= 5%) ==")
e = de["excess_energy"]
print(f"  min {np.min(e):.6e}  e0 {e[0]:.6e}  drift {np.max(np.abs(e - e[0]))/abs(e[0]):.5%}")

print("== A9 context: sup_phi vs bound, all presets ==")
for nm, d in (("couette-patch", cp), ("nonstagnant-const", nc),
              ("nonstagnant-sine", ns), ("boundary-touching", bt),
              ("dipole-escape", de)):
    print(f"  {nm}: sup_phi max {np.max(d['sup_phi']):.6f} first {d['sup_phi'][0]:.6f}")
