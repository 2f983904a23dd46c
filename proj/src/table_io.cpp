#include "minrep/table_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

namespace minrep {

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) throw FormatError("table file truncated");
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(static_cast<T>(bytes[i]) << (8 * i));
    return value;
}

}  // namespace

void write_table(const ComplexityTable& table, std::ostream& out) {
    const auto& id = table.ops().id();
    const std::uint64_t n = table.limit();
    const std::uint8_t version = table.max_complexity() <= 0xFF ? kVersionByteLengths : kVersionWordLengths;
    out.write(kTableMagic, 4);
    put_le<std::uint8_t>(out, version);
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(id.size()));
    out.write(id.data(), static_cast<std::streamsize>(id.size()));
    put_le<std::uint64_t>(out, n);

    const auto c = table.complexities();
    if (version == kVersionByteLengths) {
        std::vector<char> buf(n);
        for (std::uint64_t i = 0; i < n; ++i) buf[i] = static_cast<char>(c[i + 1]);
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    } else {
        for (std::uint64_t i = 1; i <= n; ++i) put_le<std::uint16_t>(out, c[i]);
    }
    const auto p = table.provenances();
    std::vector<char> buf(n * 5);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto& rec = p[i + 1];
        buf[5 * i] = static_cast<char>(rec.rule);
        for (int b = 0; b < 4; ++b) buf[5 * i + 1 + b] = static_cast<char>((rec.operand >> (8 * b)) & 0xFF);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FormatError("failed writing table");
}

ComplexityTable read_table(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kTableMagic)) throw FormatError("bad table magic");
    const auto version = get_le<std::uint8_t>(in);
    if (version != kVersionByteLengths && version != kVersionWordLengths)
        throw FormatError("unsupported table version " + std::to_string(version));
    const auto id_len = get_le<std::uint8_t>(in);
    std::string id(id_len, '\0');
    if (!in.read(id.data(), id_len)) throw FormatError("table file truncated");
    OperatorSet ops = [&] {
        try {
            return OperatorSet::from_id(id);
        } catch (const InvalidOperatorSet& e) {
            throw FormatError(std::string("bad operator set in table: ") + e.what());
        }
    }();
    const auto n = get_le<std::uint64_t>(in);
    if (n == 0 || n > std::numeric_limits<std::uint32_t>::max()) throw FormatError("bad table limit");

    std::vector<std::uint16_t> complexity(n + 1, 0);
    if (version == kVersionByteLengths) {
        std::vector<unsigned char> buf(n);
        if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n)))
            throw FormatError("table file truncated");
        for (std::uint64_t i = 0; i < n; ++i) complexity[i + 1] = buf[i];
    } else {
        for (std::uint64_t i = 1; i <= n; ++i) complexity[i] = get_le<std::uint16_t>(in);
    }
    std::vector<Provenance> provenance(n + 1);
    std::vector<unsigned char> buf(n * 5);
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
        throw FormatError("table file truncated");
    for (std::uint64_t i = 0; i < n; ++i) {
        const unsigned char tag = buf[5 * i];
        if (tag > static_cast<unsigned char>(Rule::Pow)) throw FormatError("bad provenance tag");
        std::uint32_t operand = 0;
        for (int b = 0; b < 4; ++b) operand |= static_cast<std::uint32_t>(buf[5 * i + 1 + b]) << (8 * b);
        const Rule rule = static_cast<Rule>(tag);
        const std::uint64_t v = i + 1;
        // cheap structural sanity: presence must agree, operands index smaller entries
        if ((rule == Rule::Absent) != (complexity[v] == 0) || (rule == Rule::Base) != (v == 1) ||
            (rule != Rule::Absent && rule != Rule::Base && rule != Rule::Successor && (operand == 0 || operand >= v)))
            throw FormatError("inconsistent table entry at n=" + std::to_string(v));
        provenance[v] = {rule, operand};
    }
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes after table");
    return ComplexityTable(std::move(ops), std::move(complexity), std::move(provenance));
}

void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        try {
            writer(out);
            out.flush();
            if (!out) throw std::runtime_error("failed writing " + tmp.string());
        } catch (...) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw;
        }
    }
    std::filesystem::rename(tmp, path);
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
    write_atomically(path, [&](std::ostream& out) { write_table(table, out); });
}

ComplexityTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_table(in);
}

}  // namespace minrep
