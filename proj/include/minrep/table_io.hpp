#pragma once

#include "minrep/engine.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>

namespace minrep {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary table layout, little-endian throughout:
///   "OCMP" | version u8 | id length u8 | id bytes | N u64
///   | N complexity values (u8 for version 1, u16 for version 2)
///   | N provenance records (tag u8, operand u32)
/// Version 1 is written whenever every complexity fits in a byte.
inline constexpr char kTableMagic[4] = {'O', 'C', 'M', 'P'};
inline constexpr std::uint8_t kVersionByteLengths = 1;
inline constexpr std::uint8_t kVersionWordLengths = 2;

void write_table(const ComplexityTable& table, std::ostream& out);
ComplexityTable read_table(std::istream& in);

void save_table(const ComplexityTable& table, const std::filesystem::path& path);
ComplexityTable load_table(const std::filesystem::path& path);

/// Writes through a sibling temp file and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace minrep
