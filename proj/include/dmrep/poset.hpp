#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dmrep/bitset.hpp"
#include "dmrep/error.hpp"

namespace dmrep {

/// Index of an element in its carrier; elements are numbered in label order.
using Element = std::uint32_t;

using NamePair = std::pair<std::string, std::string>;

/// Finite bounded poset. The order is stored twice: down(x) = {y | y <= x}
/// and up(x) = {y | x <= y}, one bitset row per element.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of `pairs` (each pair reads
  /// first <= second). Throws Error with kAntisymmetryViolation, kNoBottom,
  /// kNoTop or kInvalidInput.
  static Poset build(std::vector<std::string> labels, std::span<const NamePair> pairs);

  /// Adopts an already closed order given as down-set rows. Validates
  /// reflexivity, antisymmetry, transitivity and bounds.
  static Poset from_down_rows(std::vector<std::string> labels, BitMatrix down);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  std::optional<Element> find(std::string_view label) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element x, Element y) const { return down_.test(y, x); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  Bitset down(Element x) const { return down_.row(x); }
  Bitset up(Element x) const { return up_.row(x); }
  const BitMatrix& down_rows() const { return down_; }
  const BitMatrix& up_rows() const { return up_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.down_ == b.down_;
  }

 private:
  Poset(std::vector<std::string> labels, BitMatrix down);
  void index_labels();
  void find_bounds();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> index_;
  BitMatrix down_;
  BitMatrix up_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Proper down-sets in this library contain the bottom and omit the top.
struct DownSet {
  Bitset members;

  bool contains(Element x) const { return members.test(x); }
  std::size_t size() const { return members.count(); }

  friend bool operator==(const DownSet&, const DownSet&) = default;
  friend std::strong_ordering operator<=>(const DownSet& a, const DownSet& b) {
    return canonical_compare(a.members, b.members);
  }
};

enum class Bound { kMeet, kJoin };

/// Greatest lower bound (kMeet) or least upper bound (kJoin) of `subset`,
/// or nullopt when it does not exist. The empty meet is the top and the
/// empty join the bottom.
std::optional<Element> bound_of_subset(const Poset& p, const Bitset& subset, Bound direction);
std::optional<Element> meet(const Poset& p, Element x, Element y);
std::optional<Element> join(const Poset& p, Element x, Element y);

bool is_lattice(const Poset& p);

bool is_down_closed(const Poset& p, const Bitset& subset);
bool is_proper(const Poset& p, const DownSet& d);

/// All down-closed subsets in canonical order. With `proper_nonempty` only
/// those containing the bottom and omitting the top are kept. Throws
/// kLimitExceeded when p.size() > limit.
std::vector<DownSet> enumerate_down_sets(const Poset& p, bool proper_nonempty,
                                         std::size_t limit = Limits{}.down_set_elements);

DownSet principal_down_set(const Poset& p, Element b);

/// Human-readable "{0,a,b}" rendering.
std::string format_set(const Poset& p, const Bitset& members);

}  // namespace dmrep
