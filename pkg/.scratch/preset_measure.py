import sys, time, json
sys.path.insert(0, "/root/pkg/src")
import numpy as np
from shearvortex import harness as H

for name in H.preset_names():
    cfg = H.preset_config(name)
    cfg.out = f"/root/pkg/.scratch/runs/{name}"
    t0 = time.time()
    man = H.simulate(cfg, workers=1)
    print(f"{name}: {man['n_blobs']} blobs, {len(man['slices'])} slices, "
          f"{man['status']}, {time.time()-t0:.1f}s", flush=True)
