#include "nervekit/util.hpp"

#include "nervekit/report.hpp"

namespace nervekit {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t monotone_count(int m, int n) {
  if (m < 0) return 1;
  if (n < 0) return 0;
  return binomial(n + m + 1, m + 1);
}

// Sequences starting with value v at position 0 of length len over [lo..n]
// number monotone_count(len-2, n-v) once the head is fixed.
std::uint64_t monotone_rank(std::span<const int> seq, int n) {
  std::uint64_t rank = 0;
  int lo = 0;
  const int len = static_cast<int>(seq.size());
  for (int pos = 0; pos < len; ++pos) {
    const int rest = len - pos - 1;
    for (int v = lo; v < seq[pos]; ++v) rank += monotone_count(rest - 1, n - v);
    lo = seq[pos];
  }
  return rank;
}

Sequence monotone_unrank(std::uint64_t rank, int m, int n) {
  Sequence seq(static_cast<std::size_t>(m + 1));
  int lo = 0;
  for (int pos = 0; pos <= m; ++pos) {
    const int rest = m - pos;
    int v = lo;
    for (;; ++v) {
      const std::uint64_t block = monotone_count(rest - 1, n - v);
      if (rank < block) break;
      rank -= block;
    }
    seq[pos] = v;
    lo = v;
  }
  return seq;
}

bool is_monotone(std::span<const int> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] < seq[i - 1]) return false;
  return true;
}

Sequence drop_entry(const Sequence& s, int i) {
  Sequence out;
  out.reserve(s.size() - 1);
  for (int t = 0; t < static_cast<int>(s.size()); ++t)
    if (t != i) out.push_back(s[t]);
  return out;
}

Sequence repeat_entry(const Sequence& s, int i) {
  Sequence out(s);
  out.insert(out.begin() + i, s[i]);
  return out;
}

std::string sequence_string(std::span<const int> seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

ValidationError::ValidationError(ValidationReport r) : report_(std::move(r)) {
  message_ = "validation failed with " + std::to_string(report_.size()) + " violation(s)";
  if (!report_.ok())
    message_ += "; first: " + report_.violations[0].rule + " at " + report_.violations[0].witness;
}

}  // namespace nervekit
