#ifndef DDL_SNAPSHOT_HPP
#define DDL_SNAPSHOT_HPP

#include <cstdint>
#include <string>

#include "ddl/field.hpp"

namespace ddl {

// Binary snapshot, 32-byte header then row-major float64 LE samples:
//   bytes  0-3   magic "DDL1"
//   bytes  4-7   uint32 dim
//   bytes  8-11  uint32 points axis 0
//   bytes 12-15  uint32 points axis 1 (0 for 1d)
//   bytes 16-23  float64 box length axis 0
//   bytes 24-31  float64 box length axis 1 (0 for 1d)
void write_snapshot(const std::string& path, const Field& f);

// Throws std::runtime_error on missing file, bad magic, or truncated payload.
Field read_snapshot(const std::string& path);

// FNV-1a over the raw file bytes
std::uint64_t fnv1a_file(const std::string& path);
std::uint64_t fnv1a_bytes(const void* data, std::size_t n);

}  // namespace ddl

#endif
