"""
Wave operators at finite time
=============================

exp(i H_a t) exp(-i H_1 t) e_0 approaches the image of e_0 under the wave
operator, which is built from the eigenfunction transforms and the
multipliers sigma_+-.  The distance decays roughly like 1/t.
"""

import numpy as np

from gcheb import scattering as sc

f = np.array([1.0])
for t in (10.0, 50.0, 200.0):
    print(f"t = {t:5.0f}   deviation = {sc.wave_operator_check(1.5, t, f, 4096):.4f}")

# the wave operator image is an isometry on the band
img = sc.wave_operator_image(1.2, f, 1, 2048, nodes=4096)
print("norm of image:", np.linalg.norm(img))
