#include "neurodvfs/snn/synapse_row.hpp"

#include "neurodvfs/errors.hpp"

#include <algorithm>
#include <array>
#include <fstream>

namespace neurodvfs::snn {

namespace {

constexpr std::uint32_t kMagic = 0x574F5253u; // "SROW"
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v)
{
    const std::array<char, 4> bytes{static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                                     static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
    out.write(bytes.data(), bytes.size());
}

std::uint32_t get_u32(std::istream& in)
{
    std::array<unsigned char, 4> bytes{};
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!in) {
        throw Error("truncated synapse row file");
    }
    return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
           (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

} // namespace

void write_rows(const std::filesystem::path& path, const RowTable& rows)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    std::vector<NeuronId> sources;
    sources.reserve(rows.size());
    for (const auto& [source, row] : rows) {
        sources.push_back(source);
    }
    std::sort(sources.begin(), sources.end());

    put_u32(out, kMagic);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(sources.size()));
    for (NeuronId source : sources) {
        const SynapseRow& row = rows.at(source);
        put_u32(out, source);
        put_u32(out, static_cast<std::uint32_t>(row.words.size()));
        for (std::uint32_t w : row.words) {
            put_u32(out, w);
        }
    }
}

RowTable read_rows(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    if (get_u32(in) != kMagic) {
        throw Error(path.string() + " is not a synapse row file");
    }
    if (const auto version = get_u32(in); version != kVersion) {
        throw Error("unsupported synapse row file version " + std::to_string(version));
    }
    RowTable rows;
    const std::uint32_t count = get_u32(in);
    for (std::uint32_t i = 0; i < count; ++i) {
        SynapseRow row;
        row.source = get_u32(in);
        const std::uint32_t n = get_u32(in);
        row.words.resize(n);
        for (auto& w : row.words) {
            w = get_u32(in);
        }
        rows.emplace(row.source, std::move(row));
    }
    return rows;
}

} // namespace neurodvfs::snn
