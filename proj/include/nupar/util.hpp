#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nupar {

// Format-level problem in an input file (bad column count, bad ids, ...).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data that parses but violates a documented precondition (misaligned
// treebanks, missing gold tree where one is required, ...).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant was broken; indicates a bug, not bad input.
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

// "aux:pass" -> "aux"; the subtype after ':' is kept only for serialization.
std::string_view universal_label(std::string_view deprel);

// Deterministic RNG used everywhere randomness is needed. Wraps a fixed
// 64-bit generator and derives values itself so that sequences do not
// depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next_u64();
  // uniform in [0, 1)
  double next_double();
  // uniform in [0, n)
  uint64_t next_below(uint64_t n);
  // uniform in [lo, hi]
  double next_uniform(double lo, double hi);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t s_;
};

// FNV-1a 64-bit fingerprint; identifies inputs/outputs in manifests.
// Not cryptographic.
uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64_file(const std::string& path);
std::string hex64(uint64_t v);

// Decodes UTF-8 into codepoints; invalid bytes become U+FFFD.
std::vector<uint32_t> utf8_codepoints(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nupar
