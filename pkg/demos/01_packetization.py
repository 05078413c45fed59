"""
Packetized multimodal sources: packets, tokens and their overlap
================================================================

A 10 s audio-visual observation is carried as two packet streams and
consumed as ten 1 s tokens. This script builds the benchmark profiles and
walks their exact sample geometry.
"""

from fractions import Fraction

from twisim import Modality, ModalityProfile, generate_observation_packets
from twisim.source_model import (
    packet_token_overlap_scaled,
    tokens_overlapping_packet,
)

audio = ModalityProfile(
    modality=Modality.AUDIO,
    sample_rate_hz=16_000,
    bits_per_sample=16,
    packet_bits=5120,
    observation_duration_s=Fraction(10),
    token_duration_s=Fraction(1),
)
visual = ModalityProfile(
    modality=Modality.VISUAL,
    sample_rate_hz=16,            # frames per second
    bits_per_sample=1_204_224,    # one encoded frame
    packet_bits=1_204_224,        # one frame per packet
    observation_duration_s=Fraction(10),
    token_duration_s=Fraction(1),
)

for p in (audio, visual):
    print(f"{p.modality.value}:")
    print(f"  samples per packet   {p.samples_per_packet}")
    print(f"  packet duration      {float(p.packet_duration_s)*1000:.4g} ms")
    print(f"  packets/observation  {p.packets_per_observation}")
    print(f"  packets/token        {p.packets_per_token}")
    print(f"  tokens/observation   {p.tokens_per_observation}")

# every packet carries a presentation timestamp: the time its last sample
# was produced, on the source timeline (observation i occupies [i*T, (i+1)*T))
packets = generate_observation_packets(audio, observation_index=2)
print("\nfirst audio packets of observation 2:")
for pkt in packets[:3]:
    lo, hi = pkt.sample_range
    print(f"  packet {pkt.packet_index}: pts_end={pkt.pts_end_s}s samples [{lo}, {hi})")

# the packet grid divides the token grid evenly here, so each packet feeds
# exactly one token
print("\naudio packet 50 feeds tokens", list(tokens_overlapping_packet(audio, 50)))
print("audio packet 51 feeds tokens", list(tokens_overlapping_packet(audio, 51)))

# a deliberately misaligned profile: 3-sample packets over 5-sample tokens;
# packet 2 straddles the token boundary and the trailing packet is
# zero-padded past the observation end
straddler = ModalityProfile(Modality.AUDIO, 10, 1, 3, Fraction(1), Fraction(1, 2))
print(f"\nstraddling example: {straddler.packets_per_observation} packets, "
      f"{straddler.tokens_per_observation} tokens of "
      f"{straddler.samples_per_token} samples")
for j in range(1, straddler.packets_per_observation + 1):
    parts = ", ".join(
        f"{packet_token_overlap_scaled(straddler, j, k)} samples of token {k}"
        for k in tokens_overlapping_packet(straddler, j)
    )
    print(f"  packet {j} carries {parts}")
