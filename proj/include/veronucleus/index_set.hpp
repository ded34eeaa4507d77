#ifndef VERONUCLEUS_INDEX_SET_HPP
#define VERONUCLEUS_INDEX_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace veronucleus {

/// A subset of {0, ..., n}, naming the base points F c_j whose span it
/// denotes. Members are kept sorted and unique.
class IndexSet {
 public:
  explicit IndexSet(std::size_t n) : n_(n) {}
  IndexSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() > n_)
      throw std::invalid_argument("index " + std::to_string(members_.back()) + " exceeds n = " + std::to_string(n_));
  }
  IndexSet(std::size_t n, std::initializer_list<std::size_t> members)
      : IndexSet(n, std::vector<std::size_t>(members)) {}

  static IndexSet full(std::size_t n) {
    std::vector<std::size_t> all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    return {n, std::move(all)};
  }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] const std::vector<std::size_t>& members() const noexcept { return members_; }
  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }

  [[nodiscard]] bool contains(std::size_t j) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), j);
  }

  [[nodiscard]] bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  [[nodiscard]] IndexSet united(const IndexSet& other) const {
    if (other.n_ != n_) throw std::invalid_argument("index sets over different n");
    std::vector<std::size_t> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    IndexSet r(n_);
    r.members_ = std::move(out);
    return r;
  }

  /// "{0,1,5}"
  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(members_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  /// Size first, then lexicographic; gives a deterministic order for output.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> members_;
};

}  // namespace veronucleus

#endif  // VERONUCLEUS_INDEX_SET_HPP
