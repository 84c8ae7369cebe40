#include "qsar/matrix_io.hpp"

#include "qsar/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <vector>

namespace qsar::io {

namespace {

constexpr std::string_view kBinaryMagic = "QSAR";
constexpr std::string_view kTextMagic = "QSAR-CSV v1";
constexpr std::size_t kBinaryHeader = 4 + 2 + 4 + 4;

template <class T>
void put_le(std::string& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
    }
}

template <class T>
T get_le(std::string_view bytes, std::size_t offset) {
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        value |= static_cast<T>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
    }
    return value;
}

std::string serialize_binary(const ComplexMatrix& m) {
    if (m.n_range() > std::numeric_limits<std::uint32_t>::max() || m.n_azimuth() > std::numeric_limits<std::uint32_t>::max()) {
        throw ShapeError("matrix too large for the binary format");
    }
    std::string out;
    out.reserve(kBinaryHeader + m.size() * 16);
    out.append(kBinaryMagic);
    put_le<std::uint16_t>(out, kBinaryVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(m.n_range()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(m.n_azimuth()));
    for (const cplx& z : m.data()) {
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.real()));
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(z.imag()));
    }
    return out;
}

ComplexMatrix parse_binary(std::string_view bytes) {
    if (bytes.size() < kBinaryHeader) {
        throw FormatError("truncated binary header", bytes.size());
    }
    const auto version = get_le<std::uint16_t>(bytes, 4);
    if (version != kBinaryVersion) {
        throw FormatError("unsupported binary version " + std::to_string(version), 4);
    }
    const std::size_t nr = get_le<std::uint32_t>(bytes, 6);
    const std::size_t na = get_le<std::uint32_t>(bytes, 10);
    if (na != 0 && nr > (std::numeric_limits<std::size_t>::max() - kBinaryHeader) / 16 / na) {
        throw FormatError("header dimensions overflow", 6);
    }
    const std::size_t expected = kBinaryHeader + nr * na * 16;
    if (bytes.size() < expected) {
        throw FormatError("truncated sample data: expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(bytes.size()),
                          bytes.size());
    }
    if (bytes.size() > expected) {
        throw FormatError("trailing bytes after sample data", expected);
    }
    std::vector<cplx> data(nr * na);
    std::size_t off = kBinaryHeader;
    for (cplx& z : data) {
        const double re = std::bit_cast<double>(get_le<std::uint64_t>(bytes, off));
        const double im = std::bit_cast<double>(get_le<std::uint64_t>(bytes, off + 8));
        z = cplx{re, im};
        off += 16;
    }
    return ComplexMatrix(nr, na, std::move(data));
}

void append_double(std::string& out, double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    out.append(buf, static_cast<std::size_t>(n));
}

std::string serialize_text(const ComplexMatrix& m) {
    std::string out(kTextMagic);
    out += "," + std::to_string(m.n_range()) + "," + std::to_string(m.n_azimuth()) + "\n";
    for (std::size_t k = 0; k < m.n_range(); ++k) {
        for (std::size_t a = 0; a < m.n_azimuth(); ++a) {
            if (a > 0) {
                out.push_back(',');
            }
            append_double(out, m(k, a).real());
            out.push_back(',');
            append_double(out, m(k, a).imag());
        }
        out.push_back('\n');
    }
    return out;
}

// Cursor over the text format that knows its byte offset for error messages.
class TextReader {
public:
    explicit TextReader(std::string_view bytes) : bytes_(bytes) {}

    void expect(char c) {
        if (pos_ >= bytes_.size()) {
            throw FormatError(std::string("unexpected end of file, expected '") + c + "'", pos_);
        }
        if (bytes_[pos_] == '\r' && c == '\n' && pos_ + 1 < bytes_.size() && bytes_[pos_ + 1] == '\n') {
            ++pos_;
        }
        if (bytes_[pos_] != c) {
            throw FormatError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    template <class T>
    T number() {
        if (pos_ >= bytes_.size()) {
            throw FormatError("unexpected end of file, expected a number", pos_);
        }
        T value{};
        const char* first = bytes_.data() + pos_;
        const char* last = bytes_.data() + bytes_.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{}) {
            throw FormatError("malformed number", pos_);
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    void skip_trailing_newlines() {
        while (pos_ < bytes_.size() && (bytes_[pos_] == '\n' || bytes_[pos_] == '\r')) {
            ++pos_;
        }
        if (pos_ != bytes_.size()) {
            throw FormatError("trailing content after the last row", pos_);
        }
    }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

ComplexMatrix parse_text(std::string_view bytes) {
    TextReader in(bytes);
    for (char c : kTextMagic) {
        in.expect(c);
    }
    in.expect(',');
    const auto nr = in.number<std::size_t>();
    in.expect(',');
    const auto na = in.number<std::size_t>();
    in.expect('\n');
    std::vector<cplx> data;
    // every sample takes at least 4 bytes ("0,0,"), so cap the reservation by the input size
    data.reserve(std::min(nr * na, bytes.size() / 4));
    for (std::size_t k = 0; k < nr; ++k) {
        for (std::size_t a = 0; a < na; ++a) {
            if (a > 0) {
                in.expect(',');
            }
            const double re = in.number<double>();
            in.expect(',');
            const double im = in.number<double>();
            data.emplace_back(re, im);
        }
        if (k + 1 < nr) {
            in.expect('\n');
        }
    }
    in.skip_trailing_newlines();
    return ComplexMatrix(nr, na, std::move(data));
}

}  // namespace

MatrixFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? MatrixFormat::Text : MatrixFormat::Binary;
}

std::string serialize_matrix(const ComplexMatrix& m, MatrixFormat format) {
    return format == MatrixFormat::Binary ? serialize_binary(m) : serialize_text(m);
}

ComplexMatrix parse_matrix(std::string_view bytes) {
    if (bytes.starts_with(kTextMagic)) {
        return parse_text(bytes);
    }
    if (bytes.starts_with(kBinaryMagic) && !bytes.starts_with("QSAR-")) {
        return parse_binary(bytes);
    }
    throw FormatError("unrecognized matrix file (bad magic)", 0);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw Error("short write to " + path.string());
    }
}

void store_matrix(const ComplexMatrix& m, const std::filesystem::path& path) {
    store_matrix(m, path, format_for_path(path));
}

void store_matrix(const ComplexMatrix& m, const std::filesystem::path& path, MatrixFormat format) {
    write_file(path, serialize_matrix(m, format));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

}  // namespace qsar::io
