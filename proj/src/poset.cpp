#include "dmrep/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace dmrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kAntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::kNoBottom: return "NoBottom";
    case ErrorKind::kNoTop: return "NoTop";
    case ErrorKind::kNotDeMorgan: return "NotDeMorgan";
    case ErrorKind::kIsNotLattice: return "IsNotLattice";
    case ErrorKind::kEmptyFrame: return "EmptyFrame";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kHypothesisFailed: return "HypothesisFailed";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kGiveUp: return "GiveUp";
    case ErrorKind::kInternal: return "InternalInconsistency";
  }
  return "Unknown";
}

Poset::Poset(std::vector<std::string> labels, BitMatrix down)
    : labels_(std::move(labels)), down_(std::move(down)) {
  up_ = down_.transposed();
}

void Poset::index_labels() {
  index_.clear();
  for (Element i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw Error(ErrorKind::kInvalidInput, "empty element label");
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::kInvalidInput, "duplicate element label '" + labels_[i] + "'");
    }
  }
}

void Poset::find_bounds() {
  const std::size_t n = size();
  std::optional<Element> bottom;
  std::optional<Element> top;
  for (Element x = 0; x < n; ++x) {
    if (up_.row(x).all()) {
      if (bottom) throw Error(ErrorKind::kInternal, "two bottoms in an antisymmetric order");
      bottom = x;
    }
    if (down_.row(x).all()) top = x;
  }
  if (!bottom) throw Error(ErrorKind::kNoBottom, "the order has no least element");
  if (!top) throw Error(ErrorKind::kNoTop, "the order has no greatest element");
  bottom_ = *bottom;
  top_ = *top;
}

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_antisymmetry(const std::vector<std::string>& labels, const BitMatrix& down) {
  for (std::size_t x = 0; x < labels.size(); ++x) {
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      if (down.test(x, y) && down.test(y, x)) {
        throw Error(ErrorKind::kAntisymmetryViolation,
                    "cycle between distinct elements '" + labels[x] + "' and '" +
                        labels[y] + "'");
      }
    }
  }
}

}  // namespace

Poset Poset::build(std::vector<std::string> labels, std::span<const NamePair> pairs) {
  if (labels.empty()) throw Error(ErrorKind::kInvalidInput, "a poset needs at least one element");
  const std::size_t n = labels.size();
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(ErrorKind::kInvalidInput, "duplicate element label '" + labels[i] + "'");
    }
  }
  // Row y holds {x | x <= y}.
  BitMatrix down(n, n);
  for (Element i = 0; i < n; ++i) down.set(i, i);
  for (const auto& [lo, hi] : pairs) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end() || h == index.end()) {
      throw Error(ErrorKind::kInvalidInput,
                  "order pair references unknown element '" +
                      (l == index.end() ? lo : hi) + "'");
    }
    down.set(h->second, l->second);
  }
  // Warshall on rows: if k <= i then everything below k is below i.
  const auto& k_or = kernels::active().or_into;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && down.test(i, k)) {
        k_or(down.row_words(i).data(), down.row_words(k).data(), down.stride());
      }
    }
  }
  check_antisymmetry(labels, down);
  Poset p(std::move(labels), std::move(down));
  p.index_labels();
  p.find_bounds();
  return p;
}

Poset Poset::from_down_rows(std::vector<std::string> labels, BitMatrix down) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "a poset needs at least one element");
  if (down.rows() != n || down.cols() != n) {
    throw Error(ErrorKind::kInvalidInput, "order matrix does not match the label count");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!down.test(x, x)) {
      throw Error(ErrorKind::kInvalidInput, "order is not reflexive at '" + labels[x] + "'");
    }
  }
  check_antisymmetry(labels, down);
  // Transitive iff down(y) ⊆ down(x) whenever y <= x.
  const auto& subset = kernels::active().is_subset;
  for (std::size_t x = 0; x < n; ++x) {
    down.row(x).for_each([&](std::size_t y) {
      if (!subset(down.row_words(y).data(), down.row_words(x).data(), down.stride())) {
        throw Error(ErrorKind::kInvalidInput, "order is not transitive below '" + labels[x] + "'");
      }
    });
  }
  Poset p(std::move(labels), std::move(down));
  p.index_labels();
  p.find_bounds();
  return p;
}

std::optional<Element> bound_of_subset(const Poset& p, const Bitset& subset, Bound direction) {
  const std::size_t n = p.size();
  const BitMatrix& toward = direction == Bound::kMeet ? p.down_rows() : p.up_rows();
  // Common lower (resp. upper) bounds.
  Bitset common = Bitset::full(n);
  subset.for_each([&](std::size_t s) { common &= toward.row(static_cast<Element>(s)); });
  std::optional<Element> found;
  common.for_each([&](std::size_t c) {
    if (!found && common.is_subset_of(toward.row(c))) found = static_cast<Element>(c);
  });
  return found;
}

std::optional<Element> meet(const Poset& p, Element x, Element y) {
  Bitset s(p.size());
  s.set(x);
  s.set(y);
  return bound_of_subset(p, s, Bound::kMeet);
}

std::optional<Element> join(const Poset& p, Element x, Element y) {
  Bitset s(p.size());
  s.set(x);
  s.set(y);
  return bound_of_subset(p, s, Bound::kJoin);
}

bool is_lattice(const Poset& p) {
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      if (!meet(p, x, y) || !join(p, x, y)) return false;
    }
  }
  return true;
}

bool is_down_closed(const Poset& p, const Bitset& subset) {
  bool closed = true;
  subset.for_each([&](std::size_t x) {
    if (closed && !p.down(static_cast<Element>(x)).is_subset_of(subset)) closed = false;
  });
  return closed;
}

bool is_proper(const Poset& p, const DownSet& d) {
  return d.contains(p.bottom()) && !d.contains(p.top()) && is_down_closed(p, d.members);
}

namespace {

struct DownSetWalker {
  const Poset& poset;
  std::vector<Element> order;        // a linear extension
  std::vector<Bitset> strictly_below;
  std::optional<Element> forced_in;
  std::optional<Element> forced_out;
  std::vector<DownSet> out;

  void walk(std::size_t i, Bitset& current) {
    if (i == order.size()) {
      out.push_back(DownSet{current});
      return;
    }
    const Element e = order[i];
    if (e != forced_in) walk(i + 1, current);
    if (e != forced_out && strictly_below[e].is_subset_of(current)) {
      current.set(e);
      walk(i + 1, current);
      current.reset(e);
    }
  }
};

}  // namespace

std::vector<DownSet> enumerate_down_sets(const Poset& p, bool proper_nonempty, std::size_t limit) {
  const std::size_t n = p.size();
  if (n > limit) {
    throw Error(ErrorKind::kLimitExceeded,
                "down-set enumeration over " + std::to_string(n) +
                    " elements exceeds the limit of " + std::to_string(limit));
  }
  DownSetWalker walker{p, {}, {}, {}, {}, {}};
  walker.order.resize(n);
  std::iota(walker.order.begin(), walker.order.end(), Element{0});
  // Strictly larger elements have strictly larger down-sets.
  std::stable_sort(walker.order.begin(), walker.order.end(), [&](Element a, Element b) {
    return p.down(a).count() < p.down(b).count();
  });
  walker.strictly_below.reserve(n);
  for (Element x = 0; x < n; ++x) {
    Bitset below = p.down(x);
    below.reset(x);
    walker.strictly_below.push_back(std::move(below));
  }
  if (proper_nonempty) {
    // In the one-element poset bottom = top and nothing is proper.
    if (p.bottom() == p.top()) return {};
    walker.forced_in = p.bottom();
    walker.forced_out = p.top();
  }
  Bitset current(n);
  walker.walk(0, current);
  std::sort(walker.out.begin(), walker.out.end());
  return std::move(walker.out);
}

DownSet principal_down_set(const Poset& p, Element b) { return DownSet{p.down(b)}; }

std::string format_set(const Poset& p, const Bitset& members) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  members.for_each([&](std::size_t x) {
    if (!first) os << ',';
    os << p.label(static_cast<Element>(x));
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace dmrep
