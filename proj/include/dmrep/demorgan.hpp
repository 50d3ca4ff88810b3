#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmrep/poset.hpp"

namespace dmrep {

enum class Law { kNotInvolution, kNotAntitone, kBoundsNotSwapped };

std::string_view to_string(Law law);

/// One violated De Morgan law. For kNotAntitone, x <= y while
/// neg(y) is not below neg(x); for kNotInvolution, neg(x) = y but neg(y) != x.
struct LawViolation {
  Law law;
  Element x;
  Element y;

  std::string describe(const Poset& p, std::span<const Element> neg) const;
  friend bool operator==(const LawViolation&, const LawViolation&) = default;
};

class DeMorganError : public Error {
 public:
  DeMorganError(std::string message, std::vector<LawViolation> violations)
      : Error(ErrorKind::kNotDeMorgan, message), violations_(std::move(violations)) {}

  const std::vector<LawViolation>& violations() const { return violations_; }

 private:
  std::vector<LawViolation> violations_;
};

/// Every violated law, in canonical order (laws first by kind, then by
/// element pair). Empty when (p, neg) is a De Morgan poset.
std::vector<LawViolation> demorgan_violations(const Poset& p, std::span<const Element> neg);

/// Bounded poset with an antitone involution.
class DeMorganPoset {
 public:
  /// Throws DeMorganError listing every violated law.
  DeMorganPoset(Poset poset, std::vector<Element> neg);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element bottom() const { return poset_.bottom(); }
  Element top() const { return poset_.top(); }
  bool leq(Element x, Element y) const { return poset_.leq(x, y); }
  const std::string& label(Element x) const { return poset_.label(x); }

  Element neg(Element x) const { return neg_[x]; }
  std::span<const Element> neg_table() const { return neg_; }

  friend bool operator==(const DeMorganPoset&, const DeMorganPoset&) = default;

 private:
  Poset poset_;
  std::vector<Element> neg_;
};

using AlgebraPtr = std::shared_ptr<const DeMorganPoset>;

/// Resolves `x:y` negation pairs (each read as x' = y and y' = x; write
/// fixpoints as x:x) into a table. Throws kInvalidInput for unknown or
/// uncovered elements; conflicting pairs surface as kNotInvolution.
struct NegationTable {
  std::vector<Element> neg;
  std::vector<LawViolation> conflicts;
};
NegationTable resolve_negation(const Poset& p, std::span<const NamePair> neg_pairs);

/// Throws DeMorganError (with witnesses) or Error(kInvalidInput).
DeMorganPoset validate_demorgan(Poset p, std::span<const NamePair> neg_pairs);

// ---------------------------------------------------------------------------
// M2: {0,1}^2 with componentwise order and (a,b)' = (b',a').

class M2Value {
 public:
  constexpr M2Value() = default;
  constexpr M2Value(bool first, bool second)
      : bits_(static_cast<std::uint8_t>((first ? 1u : 0u) | (second ? 2u : 0u))) {}
  static constexpr M2Value from_bits(std::uint8_t bits) {
    return M2Value((bits & 1u) != 0, (bits & 2u) != 0);
  }

  constexpr bool first() const { return (bits_ & 1u) != 0; }
  constexpr bool second() const { return (bits_ & 2u) != 0; }
  /// Also the element index in m2_algebra().
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr M2Value neg() const { return M2Value(!second(), !first()); }
  constexpr bool leq(M2Value other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr M2Value meet(M2Value other) const { return from_bits(bits_ & other.bits_); }
  constexpr M2Value join(M2Value other) const { return from_bits(bits_ | other.bits_); }

  std::string_view label() const;
  static std::optional<M2Value> parse(std::string_view text);

  friend constexpr bool operator==(M2Value, M2Value) = default;

 private:
  std::uint8_t bits_ = 0;
};

inline constexpr M2Value kM2Bottom{false, false};
inline constexpr M2Value kM2Top{true, true};
inline constexpr std::array<M2Value, 4> kM2Values{
    M2Value(false, false), M2Value(true, false), M2Value(false, true), M2Value(true, true)};

/// M2 as a De Morgan poset with elements 00, 10, 01, 11 (in that order).
const AlgebraPtr& m2_algebra();

// ---------------------------------------------------------------------------
// Partial maps, duals, two-valued morphisms.

using PartialMap = std::vector<std::optional<Element>>;

/// h^d(a) = h(a')', defined exactly where a' is in dom h.
PartialMap dual_partial_map(const DeMorganPoset& source, const DeMorganPoset& target,
                            const PartialMap& h);

/// h_D(x) as a truth value: false (0) on D, true (1) elsewhere.
inline bool two_valued(const DownSet& d, Element x) { return !d.contains(x); }

/// The down-set A \ {d' | d in D}.
DownSet d_partial(const DeMorganPoset& a, const DownSet& d);

/// Checks that f preserves order, negation, bottom and top. Returns a
/// description of the first defect found, or nullopt.
std::optional<std::string> morphism_defect(const DeMorganPoset& source,
                                           const DeMorganPoset& target,
                                           std::span<const Element> f);

/// kappa_D(a) = (h_D(a), h_{d(D)}(a)), a De Morgan morphism into M2.
class KappaMorphism {
 public:
  const DownSet& downset() const { return downset_; }
  const DownSet& dual_downset() const { return dual_; }
  M2Value operator()(Element a) const { return values_[a]; }
  std::span<const M2Value> values() const { return values_; }
  /// Values as element indices of m2_algebra().
  std::vector<Element> as_map() const;

 private:
  friend KappaMorphism kappa(const DeMorganPoset& a, const DownSet& d);
  DownSet downset_;
  DownSet dual_;
  std::vector<M2Value> values_;
};

/// Throws kInvalidInput if D is not proper and kInternal if the result is
/// not a De Morgan morphism.
KappaMorphism kappa(const DeMorganPoset& a, const DownSet& d);

/// A pair (a, b) with t(a) <= t(b) for every map t but a not below b, or
/// nullopt when the maps jointly reflect the order.
std::optional<std::pair<Element, Element>> full_set_counterexample(
    const Poset& source, const Poset& target, std::span<const std::vector<Element>> maps);
bool is_full_set(const Poset& source, const Poset& target,
                 std::span<const std::vector<Element>> maps);
bool is_full_set(const Poset& source, std::span<const KappaMorphism> maps);

// ---------------------------------------------------------------------------
// Galois connections.

bool is_order_preserving(const Poset& source, const Poset& target, std::span<const Element> f);

struct AdjunctionCheck {
  /// f(a) <= b iff a <= g(b), for all a, b.
  bool by_equivalence = false;
  /// a <= g(f(a)) and f(g(b)) <= b.
  bool by_unit_counit = false;
};

/// Both characterizations; throws kInvalidInput unless f and g are total
/// and order-preserving.
AdjunctionCheck adjunction_characterizations(const Poset& p, const Poset& q,
                                             std::span<const Element> f,
                                             std::span<const Element> g);

/// Throws kInternal if the two characterizations disagree.
bool check_adjunction(const Poset& p, const Poset& q, std::span<const Element> f,
                      std::span<const Element> g);

}  // namespace dmrep
