#pragma once

#include <cstdint>

namespace neurodvfs::snn {

enum class SynapseType : std::uint8_t { Excitatory = 0, Inhibitory = 1 };

/// Decoded form of one 32-bit synapse word.
///
/// Wire layout (little-endian word, bit 0 = LSB):
///   [15:0]  weight, unsigned fixed-point
///   [23:16] target neuron, core-local index
///   [24]    type, 0 = excitatory, 1 = inhibitory
///   [28:25] delay in timesteps
///   [31:29] reserved, always zero
struct SynapseWord {
    std::uint16_t weight = 0;
    std::uint8_t target = 0;
    SynapseType type = SynapseType::Excitatory;
    std::uint8_t delay = 0;

    friend bool operator==(const SynapseWord&, const SynapseWord&) = default;
};

inline constexpr unsigned kDelaySlots = 16;
inline constexpr unsigned kMaxDelay = kDelaySlots - 1;
inline constexpr unsigned kMaxTargets = 256;

/// Packs raw field values. Throws EncodingError if any field is out of
/// range, including target >= neurons_per_core.
std::uint32_t encode_synapse_word(std::uint32_t weight, std::uint32_t target, std::uint32_t type,
                                  std::uint32_t delay, std::uint32_t neurons_per_core = kMaxTargets);

std::uint32_t encode(const SynapseWord& word);

/// Throws EncodingError when a reserved bit is set.
SynapseWord decode(std::uint32_t raw);

} // namespace neurodvfs::snn
