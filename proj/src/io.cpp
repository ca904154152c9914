#include "derf/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace derf {

namespace {
constexpr char kMagic[6] = {'C', 'I', 'F', 'L', 'D', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[3]) << 24);
}
} // namespace

void write_dump(const std::string& path, const FieldDump& d) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    os.write(kMagic, 6);
    put_u32(os, std::uint32_t(d.n_per_axis));
    put_u32(os, std::uint32_t(d.n_time));
    put_u32(os, std::uint32_t(d.n_components));
    static_assert(sizeof(double) == 8);
    // doubles written natively; all supported targets are little-endian
    os.write(reinterpret_cast<const char*>(d.samples.data()),
             std::streamsize(d.samples.size() * sizeof(double)));
    if (!os) throw std::runtime_error("short write: " + path);
}

FieldDump read_dump(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for read: " + path);
    char magic[6];
    is.read(magic, 6);
    if (!is || std::memcmp(magic, kMagic, 6) != 0)
        throw std::runtime_error("bad magic in " + path);
    FieldDump d;
    d.n_per_axis = int(get_u32(is));
    d.n_time = int(get_u32(is));
    d.n_components = int(get_u32(is));
    d.samples.resize(std::size_t(d.n_time) * d.n_components * d.comp_size());
    is.read(reinterpret_cast<char*>(d.samples.data()),
            std::streamsize(d.samples.size() * sizeof(double)));
    if (!is) throw std::runtime_error("short read: " + path);
    return d;
}

ScalarField to_field(const FieldDump& d, int t, int c, Grid3 g) {
    if (g.n != d.n_per_axis) throw std::runtime_error("grid mismatch in dump");
    ScalarField f(g);
    std::memcpy(f.data(), d.component(t, c), d.comp_size() * sizeof(double));
    return f;
}

void store_field(FieldDump& d, int t, int c, const ScalarField& f) {
    std::memcpy(d.component(t, c), f.data(), d.comp_size() * sizeof(double));
}

} // namespace derf
