#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gstir/combinatorics.hpp"

namespace gstir {

// On-disk Bell cache:
//
//   BELLCACHE v1
//   <B_0>
//   <B_1>
//   ...
//
// Decimal values, one per line, every line newline-terminated, no other
// whitespace. A header-only file holds just B_0.
inline constexpr const char* kBellCacheHeader = "BELLCACHE v1";

class CacheFormatError : public std::runtime_error {
public:
    CacheFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("bell cache line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Parses and validates (B_0 = 1 and the binomial recurrence on a sample of
// entries). Throws CacheFormatError naming the offending line.
BellSequence read_bell_cache(std::istream& in);
void write_bell_cache(std::ostream& out, const BellSequence& seq);

BellSequence load_bell_cache(const std::filesystem::path& path);
void save_bell_cache(const std::filesystem::path& path, const BellSequence& seq);

}  // namespace gstir
