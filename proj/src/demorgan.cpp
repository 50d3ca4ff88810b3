#include "dmrep/demorgan.hpp"

#include <limits>
#include <sstream>

namespace dmrep {

namespace {
constexpr Element kUnset = std::numeric_limits<Element>::max();
}

std::string_view to_string(Law law) {
  switch (law) {
    case Law::kNotInvolution: return "NotInvolution";
    case Law::kNotAntitone: return "NotAntitone";
    case Law::kBoundsNotSwapped: return "BoundsNotSwapped";
  }
  return "Unknown";
}

std::string LawViolation::describe(const Poset& p, std::span<const Element> neg) const {
  std::ostringstream os;
  switch (law) {
    case Law::kNotInvolution:
      os << "NotInvolution: " << p.label(x) << "' = " << p.label(y) << " but " << p.label(y)
         << "' = " << p.label(neg[y]);
      break;
    case Law::kNotAntitone:
      os << "NotAntitone: " << p.label(x) << " <= " << p.label(y) << " but " << p.label(y)
         << "' = " << p.label(neg[y]) << " is not below " << p.label(x)
         << "' = " << p.label(neg[x]);
      break;
    case Law::kBoundsNotSwapped:
      os << "BoundsNotSwapped: " << p.label(x) << "' = " << p.label(y) << ", expected "
         << p.label(p.top());
      break;
  }
  return os.str();
}

std::vector<LawViolation> demorgan_violations(const Poset& p, std::span<const Element> neg) {
  const auto n = static_cast<Element>(p.size());
  if (neg.size() != n) throw Error(ErrorKind::kInvalidInput, "negation table has the wrong size");
  for (Element x : neg) {
    if (x >= n) throw Error(ErrorKind::kInvalidInput, "negation value out of range");
  }
  std::vector<LawViolation> out;
  for (Element x = 0; x < n; ++x) {
    if (neg[neg[x]] != x) out.push_back({Law::kNotInvolution, x, neg[x]});
  }
  if (neg[p.bottom()] != p.top()) out.push_back({Law::kBoundsNotSwapped, p.bottom(), neg[p.bottom()]});
  for (Element x = 0; x < n; ++x) {
    p.up(x).for_each([&](std::size_t yy) {
      const auto y = static_cast<Element>(yy);
      if (y != x && !p.leq(neg[y], neg[x])) out.push_back({Law::kNotAntitone, x, y});
    });
  }
  return out;
}

DeMorganPoset::DeMorganPoset(Poset poset, std::vector<Element> neg)
    : poset_(std::move(poset)), neg_(std::move(neg)) {
  auto violations = demorgan_violations(poset_, neg_);
  if (!violations.empty()) {
    std::string message = violations.front().describe(poset_, neg_);
    if (violations.size() > 1) {
      message += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    throw DeMorganError(message, std::move(violations));
  }
}

NegationTable resolve_negation(const Poset& p, std::span<const NamePair> neg_pairs) {
  NegationTable table{std::vector<Element>(p.size(), kUnset), {}};
  auto lookup = [&](const std::string& name) {
    auto e = p.find(name);
    if (!e) throw Error(ErrorKind::kInvalidInput, "negation references unknown element '" + name + "'");
    return *e;
  };
  auto assign = [&](Element x, Element y) {
    if (table.neg[x] == kUnset) {
      table.neg[x] = y;
    } else if (table.neg[x] != y) {
      table.conflicts.push_back({Law::kNotInvolution, x, y});
    }
  };
  for (const auto& [a, b] : neg_pairs) {
    const Element x = lookup(a);
    const Element y = lookup(b);
    assign(x, y);
    assign(y, x);
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (table.neg[x] == kUnset) {
      throw Error(ErrorKind::kInvalidInput, "no negation given for '" + p.label(x) + "'");
    }
  }
  return table;
}

DeMorganPoset validate_demorgan(Poset p, std::span<const NamePair> neg_pairs) {
  NegationTable table = resolve_negation(p, neg_pairs);
  if (!table.conflicts.empty()) {
    auto rest = demorgan_violations(p, table.neg);
    auto all = table.conflicts;
    all.insert(all.end(), rest.begin(), rest.end());
    const auto& c = table.conflicts.front();
    throw DeMorganError("NotInvolution: conflicting negation pairs for '" + p.label(c.x) +
                            "' (" + p.label(table.neg[c.x]) + " and " + p.label(c.y) + ")",
                        std::move(all));
  }
  return DeMorganPoset(std::move(p), std::move(table.neg));
}

std::string_view M2Value::label() const {
  static constexpr std::array<std::string_view, 4> kLabels{"00", "10", "01", "11"};
  return kLabels[bits_];
}

std::optional<M2Value> M2Value::parse(std::string_view text) {
  for (M2Value v : kM2Values) {
    if (v.label() == text) return v;
  }
  return std::nullopt;
}

const AlgebraPtr& m2_algebra() {
  static const AlgebraPtr algebra = [] {
    std::vector<std::string> labels;
    for (M2Value v : kM2Values) labels.emplace_back(v.label());
    const std::vector<NamePair> order{{"00", "10"}, {"00", "01"}, {"10", "11"}, {"01", "11"}};
    std::vector<Element> neg;
    for (M2Value v : kM2Values) neg.push_back(v.neg().bits());
    return std::make_shared<const DeMorganPoset>(Poset::build(labels, order), std::move(neg));
  }();
  return algebra;
}

PartialMap dual_partial_map(const DeMorganPoset& source, const DeMorganPoset& target,
                            const PartialMap& h) {
  if (h.size() != source.size()) {
    throw Error(ErrorKind::kInvalidInput, "partial map does not match its source");
  }
  PartialMap out(source.size());
  for (Element a = 0; a < source.size(); ++a) {
    if (const auto& v = h[source.neg(a)]) out[a] = target.neg(*v);
  }
  return out;
}

DownSet d_partial(const DeMorganPoset& a, const DownSet& d) {
  Bitset negated(a.size());
  d.members.for_each([&](std::size_t x) { negated.set(a.neg(static_cast<Element>(x))); });
  return DownSet{negated.complement()};
}

std::optional<std::string> morphism_defect(const DeMorganPoset& source,
                                           const DeMorganPoset& target,
                                           std::span<const Element> f) {
  if (f.size() != source.size()) return "map has the wrong size";
  for (Element v : f) {
    if (v >= target.size()) return "map value out of range";
  }
  if (f[source.bottom()] != target.bottom()) return "bottom not preserved";
  if (f[source.top()] != target.top()) return "top not preserved";
  for (Element a = 0; a < source.size(); ++a) {
    if (f[source.neg(a)] != target.neg(f[a])) {
      return "negation not preserved at " + source.label(a);
    }
    std::optional<std::string> defect;
    source.poset().up(a).for_each([&](std::size_t b) {
      if (!defect && !target.leq(f[a], f[b])) {
        defect = "order not preserved at " + source.label(a) + " <= " +
                 source.label(static_cast<Element>(b));
      }
    });
    if (defect) return defect;
  }
  return std::nullopt;
}

std::vector<Element> KappaMorphism::as_map() const {
  std::vector<Element> out;
  out.reserve(values_.size());
  for (M2Value v : values_) out.push_back(v.bits());
  return out;
}

KappaMorphism kappa(const DeMorganPoset& a, const DownSet& d) {
  if (d.members.size() != a.size() || !is_proper(a.poset(), d)) {
    throw Error(ErrorKind::kInvalidInput, "kappa needs a proper down-set");
  }
  KappaMorphism k;
  k.downset_ = d;
  k.dual_ = d_partial(a, d);
  k.values_.reserve(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    k.values_.emplace_back(two_valued(k.downset_, x), two_valued(k.dual_, x));
  }
  if (auto defect = morphism_defect(a, *m2_algebra(), k.as_map())) {
    throw Error(ErrorKind::kInternal,
                "kappa" + format_set(a.poset(), d.members) + " is not a morphism: " + *defect);
  }
  return k;
}

std::optional<std::pair<Element, Element>> full_set_counterexample(
    const Poset& source, const Poset& target, std::span<const std::vector<Element>> maps) {
  const auto n = static_cast<Element>(source.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (source.leq(a, b)) continue;
      bool all_below = true;
      for (const auto& t : maps) {
        if (!target.leq(t[a], t[b])) {
          all_below = false;
          break;
        }
      }
      if (all_below) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool is_full_set(const Poset& source, const Poset& target,
                 std::span<const std::vector<Element>> maps) {
  return !full_set_counterexample(source, target, maps).has_value();
}

bool is_full_set(const Poset& source, std::span<const KappaMorphism> maps) {
  std::vector<std::vector<Element>> tables;
  tables.reserve(maps.size());
  for (const auto& k : maps) tables.push_back(k.as_map());
  return is_full_set(source, m2_algebra()->poset(), tables);
}

bool is_order_preserving(const Poset& source, const Poset& target, std::span<const Element> f) {
  if (f.size() != source.size()) return false;
  for (Element v : f) {
    if (v >= target.size()) return false;
  }
  for (Element a = 0; a < source.size(); ++a) {
    for (Element b = 0; b < source.size(); ++b) {
      if (source.leq(a, b) && !target.leq(f[a], f[b])) return false;
    }
  }
  return true;
}

AdjunctionCheck adjunction_characterizations(const Poset& p, const Poset& q,
                                             std::span<const Element> f,
                                             std::span<const Element> g) {
  if (!is_order_preserving(p, q, f) || !is_order_preserving(q, p, g)) {
    throw Error(ErrorKind::kInvalidInput, "adjunction check needs total order-preserving maps");
  }
  AdjunctionCheck check{true, true};
  for (Element a = 0; a < p.size() && check.by_equivalence; ++a) {
    for (Element b = 0; b < q.size(); ++b) {
      if (q.leq(f[a], b) != p.leq(a, g[b])) {
        check.by_equivalence = false;
        break;
      }
    }
  }
  for (Element a = 0; a < p.size(); ++a) {
    if (!p.leq(a, g[f[a]])) check.by_unit_counit = false;
  }
  for (Element b = 0; b < q.size(); ++b) {
    if (!q.leq(f[g[b]], b)) check.by_unit_counit = false;
  }
  return check;
}

bool check_adjunction(const Poset& p, const Poset& q, std::span<const Element> f,
                      std::span<const Element> g) {
  const AdjunctionCheck c = adjunction_characterizations(p, q, f, g);
  if (c.by_equivalence != c.by_unit_counit) {
    throw Error(ErrorKind::kInternal, "adjunction characterizations disagree");
  }
  return c.by_equivalence;
}

}  // namespace dmrep
