#include "neurodvfs/snn/synapse_word.hpp"

#include "neurodvfs/errors.hpp"

#include <string>

namespace neurodvfs::snn {

namespace {

constexpr std::uint32_t kWeightMask = 0xFFFFu;
constexpr unsigned kTargetShift = 16;
constexpr unsigned kTypeShift = 24;
constexpr unsigned kDelayShift = 25;
constexpr std::uint32_t kReservedMask = 0xE0000000u;

} // namespace

std::uint32_t encode_synapse_word(std::uint32_t weight, std::uint32_t target, std::uint32_t type,
                                  std::uint32_t delay, std::uint32_t neurons_per_core)
{
    if (weight > kWeightMask) {
        throw EncodingError("synapse weight " + std::to_string(weight) + " exceeds 16 bits");
    }
    if (target >= kMaxTargets || target >= neurons_per_core) {
        throw EncodingError("synapse target " + std::to_string(target) + " out of range for " +
                            std::to_string(neurons_per_core) + " neurons per core");
    }
    if (type > 1) {
        throw EncodingError("synapse type must be 0 or 1, got " + std::to_string(type));
    }
    if (delay > kMaxDelay) {
        throw EncodingError("synapse delay " + std::to_string(delay) + " exceeds 4 bits");
    }
    return weight | (target << kTargetShift) | (type << kTypeShift) | (delay << kDelayShift);
}

std::uint32_t encode(const SynapseWord& word)
{
    return encode_synapse_word(word.weight, word.target, static_cast<std::uint32_t>(word.type), word.delay);
}

SynapseWord decode(std::uint32_t raw)
{
    if ((raw & kReservedMask) != 0) {
        throw EncodingError("synapse word has reserved bits set");
    }
    SynapseWord word;
    word.weight = static_cast<std::uint16_t>(raw & kWeightMask);
    word.target = static_cast<std::uint8_t>((raw >> kTargetShift) & 0xFFu);
    word.type = static_cast<SynapseType>((raw >> kTypeShift) & 0x1u);
    word.delay = static_cast<std::uint8_t>((raw >> kDelayShift) & 0xFu);
    return word;
}

} // namespace neurodvfs::snn
