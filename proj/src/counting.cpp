#include "cycpath/counting.hpp"

#include <algorithm>

#include "cycpath/errors.hpp"

namespace cycpath {

std::size_t LengthMultiset::count() const {
  std::size_t k = 0;
  for (auto j : multiplicities) k += j;
  return k;
}

std::size_t LengthMultiset::total() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) n += (i + 1) * multiplicities[i];
  return n;
}

std::size_t LengthMultiset::at(std::size_t length) const {
  if (length == 0 || length > multiplicities.size()) return 0;
  return multiplicities[length - 1];
}

LengthMultiset LengthMultiset::from_lengths(const std::vector<std::size_t>& lengths) {
  LengthMultiset m;
  for (auto l : lengths) {
    if (l == 0) throw Error(ErrorCode::InvalidMultiset, "interval of length 0");
    if (m.multiplicities.size() < l) m.multiplicities.resize(l, 0);
    ++m.multiplicities[l - 1];
  }
  return m;
}

LengthMultiset LengthMultiset::normalized() const {
  LengthMultiset m = *this;
  while (!m.multiplicities.empty() && m.multiplicities.back() == 0) m.multiplicities.pop_back();
  return m;
}

namespace {

Integer multinomial_count(std::size_t n, std::size_t k, const std::vector<std::size_t>& j) {
  Integer num = factorial(k - 1) * static_cast<unsigned long>(n);
  Integer den = 1;
  for (auto ji : j) den *= factorial(ji);
  if (num % den != 0) throw Error(ErrorCode::VerificationFailed, "count is not an integer");
  return num / den;
}

}  // namespace

Integer count_interval_partitions(std::size_t n, const LengthMultiset& lengths) {
  const std::size_t k = lengths.count();
  if (k < 2) throw Error(ErrorCode::InvalidMultiset, "need at least two intervals");
  if (lengths.total() != n) throw Error(ErrorCode::InvalidMultiset, "interval lengths do not add up to n");
  return multinomial_count(n, k, lengths.multiplicities);
}

Integer count_decompositions(std::size_t n, std::size_t k, const LengthMultiset& t_lengths) {
  if (k < 1) throw Error(ErrorCode::InvalidMultiset, "S must be nonempty");
  const std::size_t intervals = t_lengths.count();
  if (intervals > k) throw Error(ErrorCode::InvalidMultiset, "more complement intervals than |S|");
  if (k + t_lengths.total() != n) throw Error(ErrorCode::InvalidMultiset, "|S| + |T| differs from n");
  // Shift every complement length by one (the endpoint it gets from S).
  std::vector<std::size_t> j{k - intervals};
  j.insert(j.end(), t_lengths.multiplicities.begin(), t_lengths.multiplicities.end());
  return multinomial_count(n, k, j);
}

std::uint64_t right_endpoints(std::size_t n, const std::vector<CyclicInterval>& partition) {
  std::uint64_t s = 0;
  for (const auto& iv : partition) s |= std::uint64_t{1} << ((iv.start + iv.length - 1) % n);
  return s;
}

std::vector<CyclicInterval> complement_intervals(std::size_t n, std::uint64_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "S must be nonempty");
  std::vector<CyclicInterval> out;
  std::size_t anchor = 0;
  while (!(s >> anchor & 1)) ++anchor;
  std::size_t run_start = 0, run_len = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = (anchor + step) % n;
    if (s >> i & 1) {
      if (run_len > 0) out.push_back({run_start, run_len});
      run_len = 0;
    } else {
      if (run_len == 0) run_start = i;
      ++run_len;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CyclicInterval> intervals_from_endpoints(std::size_t n, std::uint64_t s) {
  std::vector<CyclicInterval> out;
  std::uint64_t used = 0;
  for (const auto& iv : complement_intervals(n, s)) {
    const std::size_t next = (iv.start + iv.length) % n;
    used |= std::uint64_t{1} << next;
    out.push_back({iv.start, iv.length + 1});
  }
  for (std::size_t i = 0; i < n; ++i)
    if ((s >> i & 1) && !(used >> i & 1)) out.push_back({i, 1});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cycpath
