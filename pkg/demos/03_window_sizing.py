"""
Sizing the integration window
=============================

The wrapper wakes on a fixed clock. Two closed-form rules pick the period:
packet-mean sizing (one expected packet per modality per window) and
token-mean sizing (one expected token's worth of packets). This script
prints both at the benchmark operating point, cross-checks them with a
Monte Carlo estimate, and shows how the window tracks the outage rate.
"""

from fractions import Fraction

import numpy as np

from twisim import (
    ChannelProfile,
    Modality,
    ModalityProfile,
    PerModality,
    TwiVariant,
    channel_mean_tx_time,
    delay_mean,
    monte_carlo_twi,
    optimize_twi,
)

profiles = PerModality(
    audio=ModalityProfile(Modality.AUDIO, 16000, 16, 5120,
                          Fraction(10), Fraction(1)),
    visual=ModalityProfile(Modality.VISUAL, 16, 1204224, 1204224,
                           Fraction(10), Fraction(1)),
)
channels = PerModality(
    audio=ChannelProfile.from_db(1.08e6, 0.0, 0.5),
    visual=ChannelProfile.from_db(100e6, 0.0, 0.5),
)

print("benchmark point: 0 dB both links, eps = 0.5 both links")
for m in Modality:
    gamma = channel_mean_tx_time(profiles[m], channels[m])
    print(f"  {m.value}: mean per-packet delay "
          f"{delay_mean(channels[m], gamma)*1e3:.4f} ms, "
          f"{profiles[m].packets_per_token} packets per token")

pamo = optimize_twi(TwiVariant.packet_mean(), profiles, channels)
tomo = optimize_twi(TwiVariant.token_mean(), profiles, channels)
print(f"\npacket-mean window: {pamo*1e3:.4f} ms  (visual dominates: one visual")
print("  packet takes longer than one audio packet)")
print(f"token-mean window:  {tomo*1e3:.4f} ms  (audio dominates: 50 audio")
print("  packets per token outweigh 16 visual packets per token)")
print(f"ratio tomo/pamo: {tomo/pamo:.2f}x coarser latency grid")

rng = np.random.Generator(np.random.PCG64(7))
for variant, closed in ((TwiVariant.packet_mean(), pamo),
                        (TwiVariant.token_mean(), tomo)):
    mc = monte_carlo_twi(variant, profiles, channels, 100_000, rng)
    print(f"\n{variant.wire_name} Monte Carlo (100k trials): {mc*1e3:.4f} ms "
          f"vs closed {closed*1e3:.4f} ms "
          f"(rel err {abs(mc - closed)/closed:.2e})")

# the window shrinks as the link cleans up, then saturates: lower eps means
# fewer retries but also a lower effective rate
print("\ntoken-mean window vs outage probability (both links same eps):")
print(f"{'eps':>6} {'window ms':>10}")
for eps in (0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95):
    chs = PerModality(
        audio=ChannelProfile.from_db(1.08e6, 0.0, eps),
        visual=ChannelProfile.from_db(100e6, 0.0, eps),
    )
    tw = optimize_twi(TwiVariant.token_mean(), profiles, chs)
    print(f"{eps:>6} {tw*1e3:>10.3f}")
