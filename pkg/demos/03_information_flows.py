"""Information measures of the symmetric mixed scheme as the correlation knob turns.

t = 0 is the fully correlated (common-trigger) limit, t = 1 the independent
one.  The table tracks the classical communication needed to correlate the
triggers (i_aux), the channel's entanglement-assisted and classical
capacities (i_tot, i_class), discord, the channel-state concurrence, and
the coherent information.  i_class crosses i_aux exactly where the channels
become entanglement breaking and the fidelity meets the classical bound.
"""
import numpy as np

from bellbidir import critical_t, info_report

print(" t      i_aux    i_tot    i_class  discord  concur   i_coh    min_pt    EB")
for t in np.linspace(0.0, 1.0, 11):
    r = info_report(float(t))
    print(
        f"{r.t:5.2f}  {r.i_aux:8.5f} {r.i_tot:8.5f} {r.i_class:8.5f} {r.discord:8.5f}"
        f" {r.concurrence:8.5f} {r.i_coh:8.5f} {r.min_pt_eigenvalue:9.5f}  {r.entanglement_breaking}"
    )

t0 = critical_t()
r = info_report(t0)
print(f"\nAt the critical point t0 = {t0:.6f}:")
print(f"  i_aux   = {r.i_aux:.6f}")
print(f"  i_class = {r.i_class:.6f}   (they cross here)")
print(f"  concurrence = {r.concurrence:.2e}, min PT eigenvalue = {r.min_pt_eigenvalue:.2e}")
print(f"  entanglement breaking: {r.entanglement_breaking}")

r0, r1 = info_report(0.0), info_report(1.0)
print("\nWhat one bit of trigger correlation buys:")
print(f"  i_tot:   {r1.i_tot:.4f} -> {r0.i_tot:.4f}  (x{r0.i_tot / r1.i_tot:.2f})")
print(f"  i_class: {r1.i_class:.4f} -> {r0.i_class:.4f}  (x{r0.i_class / r1.i_class:.2f})")
print(f"  i_coh stays negative throughout: {r0.i_coh:.3f} at t=0, {r1.i_coh:.3f} at t=1")
