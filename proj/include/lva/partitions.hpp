#ifndef LVA_PARTITIONS_HPP
#define LVA_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace lva {

/// All partitions of n with parts <= max_part and at most max_parts parts,
/// as non-increasing part lists in reverse lexicographic order
/// ([n], [n-1,1], ..., [1,...,1]). Pass -1 to leave a bound off.
inline std::vector<std::vector<std::int64_t>> partitions(std::int64_t n,
                                                         std::int64_t max_part = -1,
                                                         std::int64_t max_parts = -1) {
  std::vector<std::vector<std::int64_t>> out;
  if (n < 0) return out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest,
                                                            std::int64_t cap) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<std::int64_t>(current.size()) >= max_parts) return;
    for (std::int64_t p = std::min(rest, cap); p >= 1; --p) {
      current.push_back(p);
      rec(rest - p, p);
      current.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : std::min(n, max_part));
  return out;
}

inline std::int64_t partition_count(std::int64_t n, std::int64_t max_part = -1,
                                    std::int64_t max_parts = -1) {
  return n < 0 ? 0 : static_cast<std::int64_t>(partitions(n, max_part, max_parts).size());
}

}  // namespace lva

#endif  // LVA_PARTITIONS_HPP
