"""How subjective disbelief becomes a qubit rotation.

A fact's disbelief delta in [0, 100] maps linearly to alpha = pi*delta/100,
then to the rotation angle theta = (pi - alpha)/2; the fact's state carries
sin(theta) on TRUE and cos(theta) on FALSE, so P(true) = sin^2(theta).
"""

from qrbs.uncertainty import (
    credibility,
    delta_to_alpha,
    fact_amplitudes,
    qualitative_label,
)

print(f"{'delta':>6} {'cred':>5} {'alpha':>8} {'theta':>8} "
      f"{'amp_T':>7} {'amp_F':>7} {'P(true)':>8}  label")
for delta in range(0, 101, 10):
    amps = fact_amplitudes(delta)
    print(f"{delta:6d} {credibility(delta):5.0f} {delta_to_alpha(delta):8.4f} "
          f"{amps.theta:8.4f} {amps.amp_true:7.3f} {amps.amp_false:7.3f} "
          f"{amps.p_true:8.4f}  {qualitative_label(delta)}")

print("\nThe scale is symmetric: P(true) at delta equals P(false) at 100-delta,")
print("and the sum P(true)+P(false) is exactly 1 everywhere:")
for delta in (12.5, 33.3, 77.1):
    a, b = fact_amplitudes(delta), fact_amplitudes(100 - delta)
    print(f"delta={delta:5.1f}: P(true)={a.p_true:.6f}  "
          f"mirror P(false)={b.p_false:.6f}  total={a.p_true + a.p_false:.12f}")
