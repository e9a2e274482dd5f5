#pragma once

#include <cstdint>
#include <filesystem>
#include <unordered_map>
#include <vector>

namespace neurodvfs::snn {

using NeuronId = std::uint32_t;

/// All synapses from one source neuron onto the neurons of one core.
struct SynapseRow {
    NeuronId source = 0;
    std::vector<std::uint32_t> words;

    std::size_t fan_out() const noexcept { return words.size(); }
};

/// Source neuron -> row, as held in the per-core lookup table.
using RowTable = std::unordered_map<NeuronId, SynapseRow>;

/// Binary row dump, all fields little-endian u32:
///   magic "SROW" (0x574F5253), version (1), row count,
///   then per row: source id, word count, words...
/// Rows are written in ascending source order.
void write_rows(const std::filesystem::path& path, const RowTable& rows);
RowTable read_rows(const std::filesystem::path& path);

} // namespace neurodvfs::snn
