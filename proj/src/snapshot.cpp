#include "ddl/snapshot.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace ddl {

namespace {
constexpr char kMagic[4] = {'D', 'D', 'L', '1'};

void put_u32(char* p, std::uint32_t v) { std::memcpy(p, &v, 4); }
void put_f64(char* p, double v) { std::memcpy(p, &v, 8); }
std::uint32_t get_u32(const char* p) {
    std::uint32_t v;
    std::memcpy(&v, p, 4);
    return v;
}
double get_f64(const char* p) {
    double v;
    std::memcpy(&v, p, 8);
    return v;
}
}  // namespace

void write_snapshot(const std::string& path, const Field& f) {
    const Grid& g = *f.grid();
    char hdr[32] = {};
    std::memcpy(hdr, kMagic, 4);
    put_u32(hdr + 4, std::uint32_t(g.dim()));
    put_u32(hdr + 8, std::uint32_t(g.points(0)));
    put_u32(hdr + 12, g.dim() == 2 ? std::uint32_t(g.points(1)) : 0u);
    put_f64(hdr + 16, g.box_length(0));
    put_f64(hdr + 24, g.dim() == 2 ? g.box_length(1) : 0.0);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("snapshot: cannot open " + path);
    out.write(hdr, 32);
    out.write(reinterpret_cast<const char*>(f.phys().data()),
              std::streamsize(f.phys().size() * sizeof(double)));
    if (!out) throw std::runtime_error("snapshot: write failed for " + path);
}

Field read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    char hdr[32];
    in.read(hdr, 32);
    if (in.gcount() != 32 || std::memcmp(hdr, kMagic, 4) != 0)
        throw std::runtime_error("snapshot: bad header in " + path);
    const int dim = int(get_u32(hdr + 4));
    const int n0 = int(get_u32(hdr + 8));
    const int n1 = int(get_u32(hdr + 12));
    const double l0 = get_f64(hdr + 16);
    const double l1 = get_f64(hdr + 24);

    GridPtr grid = dim == 1 ? make_grid(1, l0, n0)
                            : make_grid(2, std::vector<double>{l0, l1},
                                        std::vector<int>{n0, n1});
    std::vector<double> phys(grid->size());
    in.read(reinterpret_cast<char*>(phys.data()),
            std::streamsize(phys.size() * sizeof(double)));
    if (std::size_t(in.gcount()) != phys.size() * sizeof(double))
        throw std::runtime_error("snapshot: truncated payload in " + path);
    return Field(grid, std::move(phys));
}

std::uint64_t fnv1a_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("snapshot: cannot open " + path);
    std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
    return fnv1a_bytes(buf.data(), buf.size());
}

}  // namespace ddl
