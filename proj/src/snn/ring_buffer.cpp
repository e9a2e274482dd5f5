#include "neurodvfs/snn/ring_buffer.hpp"

#include "neurodvfs/errors.hpp"

#include <limits>
#include <string>

namespace neurodvfs::snn {

namespace {

bool saturating_add(std::uint32_t& acc, std::uint32_t value)
{
    constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
    if (acc > kMax - value) {
        acc = kMax;
        return true;
    }
    acc += value;
    return false;
}

} // namespace

InputRingBuffer::InputRingBuffer(std::size_t neuron_count)
    : neuron_count_(neuron_count), slots_(kDelaySlots * neuron_count)
{
}

void InputRingBuffer::add(unsigned target, unsigned delay, SynapseType type, std::uint16_t weight)
{
    if (target >= neuron_count_) {
        throw NetworkError("synapse target " + std::to_string(target) + " out of range (core has " +
                           std::to_string(neuron_count_) + " neurons)");
    }
    if (delay > kMaxDelay) {
        throw NetworkError("synapse delay " + std::to_string(delay) + " out of range");
    }
    SlotInput& slot = slots_[index((cursor_ + delay) % kDelaySlots, target)];
    std::uint32_t& acc = type == SynapseType::Excitatory ? slot.excitatory : slot.inhibitory;
    const std::uint32_t before = acc;
    if (saturating_add(acc, weight)) {
        ++saturations_;
    }
    inserted_ += acc - before;
}

const SlotInput& InputRingBuffer::peek(unsigned target, unsigned delay) const
{
    return slots_.at(index((cursor_ + delay) % kDelaySlots, target));
}

std::vector<SlotInput> InputRingBuffer::consume()
{
    std::vector<SlotInput> out(neuron_count_);
    for (std::size_t n = 0; n < neuron_count_; ++n) {
        SlotInput& slot = slots_[index(cursor_, static_cast<unsigned>(n))];
        out[n] = slot;
        consumed_ += static_cast<std::uint64_t>(slot.excitatory) + slot.inhibitory;
        slot = {};
    }
    cursor_ = (cursor_ + 1) % kDelaySlots;
    return out;
}

void InputRingBuffer::skip()
{
    consume();
}

std::uint64_t InputRingBuffer::pending() const noexcept
{
    std::uint64_t sum = 0;
    for (const auto& s : slots_) {
        sum += static_cast<std::uint64_t>(s.excitatory) + s.inhibitory;
    }
    return sum;
}

} // namespace neurodvfs::snn
