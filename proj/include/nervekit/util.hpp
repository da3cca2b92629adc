#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nervekit {

using CellId = std::uint32_t;
using ObjId = std::uint32_t;

/// A monotone map [m] -> [n], listed by its values.
using Sequence = std::vector<int>;

/// Raised when an operation would need data above a truncation level.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FNV-1a over 32-bit words; good enough for hash maps keyed by cell tuples.
struct VecHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (const auto& x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Binomial coefficient; exact for the small arguments used here.
std::uint64_t binomial(int n, int k);

/// Number of monotone maps [m] -> [n].
std::uint64_t monotone_count(int m, int n);

/// Position of a monotone sequence in the lexicographic order of all
/// monotone maps [len-1] -> [n].
std::uint64_t monotone_rank(std::span<const int> seq, int n);

/// Inverse of monotone_rank.
Sequence monotone_unrank(std::uint64_t rank, int m, int n);

/// True when seq is weakly increasing.
bool is_monotone(std::span<const int> seq);

/// d_i and s_i on sequences: drop entry i, repeat entry i.
Sequence drop_entry(const Sequence& s, int i);
Sequence repeat_entry(const Sequence& s, int i);

std::string sequence_string(std::span<const int> seq);

}  // namespace nervekit
