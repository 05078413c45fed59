"""
Stochastic packet delays on a fading link
=========================================

Each packet is retransmitted until it lands: the attempt count is geometric
with the outage probability eps, so the delay is R * Gamma with Gamma the
per-attempt transmission time at the eps-dependent effective rate. This
script checks the sampled law against its closed forms.
"""

import numpy as np

from twisim import (
    ChannelProfile,
    delay_mean,
    delay_variance,
    effective_rate,
    mean_tx_time,
    sample_attempts,
    sample_delays,
)

rng = np.random.Generator(np.random.PCG64(12345))

# the effective rate rises with eps (more aggressive coding at higher outage)
# while the expected attempt count 1/(1-eps) rises too; the product shapes a
# non-monotone per-packet mean delay
print("audio link, 1.08 MHz bandwidth, 0 dB mean SNR, 5120-bit packets:")
print(f"{'eps':>6} {'rate Mb/s':>10} {'Gamma ms':>9} {'mean delay ms':>14}")
for eps in (0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99):
    rate = effective_rate(1.08e6, 1.0, eps)
    gamma = mean_tx_time(5120, rate)
    ch = ChannelProfile(1.08e6, 1.0, eps)
    print(f"{eps:>6} {rate/1e6:>10.4f} {gamma*1e3:>9.4f} "
          f"{delay_mean(ch, gamma)*1e3:>14.4f}")

# attempt counts at eps = 0.5: 1 w.p. 1/2, 2 w.p. 1/4, 3 w.p. 1/8, ...
n = 200_000
attempts = sample_attempts(0.5, n, rng)
print("\nattempt histogram at eps=0.5 (200k draws):")
for r in range(1, 6):
    frac = (attempts == r).mean()
    bar = "#" * round(frac * 80)
    print(f"  R={r}: {frac:>7.4f} (exact {0.5**r:.4f}) {bar}")

# delay moments vs closed forms at the benchmark audio point
ch = ChannelProfile(1.08e6, 1.0, 0.5)
gamma = mean_tx_time(5120, ch.effective_rate_bps)
draws = sample_delays(ch, gamma, n, rng)
print(f"\nper-packet delay at eps=0.5 ({n} draws):")
print(f"  mean     {draws.mean()*1e3:.5f} ms  closed form {delay_mean(ch, gamma)*1e3:.5f} ms")
print(f"  variance {draws.var(ddof=1)*1e6:.5f} ms^2 closed form {delay_variance(ch, gamma)*1e6:.5f} ms^2")
ratios = draws / gamma
print(f"  every delay is an attempt multiple of Gamma: "
      f"{np.allclose(ratios, np.round(ratios))}")
