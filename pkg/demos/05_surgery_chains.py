"""Casson-Walker invariants from chains of rational surgeries.

Each step p/q on a knot updates (lambda', |H_1|) affinely. Lens spaces arise as
surgery on the unknot, which gives a cross-check against the lens spectra.
"""

import json
import tempfile
from pathlib import Path

from ntheta.alexander import TREFOIL, UNKNOT
from ntheta.cli import main
from ntheta.lens import LensSpec, lens_lambda
from ntheta.surgery import SurgeryStep, casson_integral_chain, run_chain

print("1/n surgery on the trefoil:", {n: str(casson_integral_chain([(n, TREFOIL)])) for n in range(-3, 4)})

for p, q in [(5, 2), (7, 3), (12, 5)]:
    rep = run_chain([SurgeryStep(p, q, alexander=UNKNOT)])
    print(f"L({p},{q}) via unknot surgery: lambda = {rep.lambda_}  (lens spectra give {lens_lambda(LensSpec(p, q))})")

chain = [SurgeryStep(3, 1, alexander=UNKNOT), SurgeryStep(2, 1, d=1, k=3, weight=1)]
rep = run_chain(chain)
print("\ntwo-step chain trace:", [(str(s.lambda_prime), s.h1_order) for s in rep.trace], " lambda =", rep.lambda_)

doc = {"steps": [{"p": 1, "q": 1, "d": 1, "k": 1, "alexander": "2:1,0:-1,-2:1"}, {"p": 1, "q": -1, "d": 1, "k": 1, "weight": "2"}]}
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "chain.json"
    path.write_text(json.dumps(doc))
    print("\n$ ntheta chain chain.json")
    main(["chain", str(path)])
