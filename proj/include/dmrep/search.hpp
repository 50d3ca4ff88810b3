#pragma once

// Seeded generation of De Morgan posets and partial operators, exhaustive
// small-instance enumeration, property sweeps and fixture hunting.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dmrep/frame.hpp"
#include "dmrep/representation.hpp"

namespace dmrep {

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t min_size = 1;
  std::size_t max_size = 8;
  /// Expected fraction of inner element pairs that get an order edge.
  double edge_density = 0.35;
  /// Share of posets built symmetric under a random pairing (so an
  /// involution surely exists); the rest are unconstrained random orders.
  double mirrored_share = 0.75;
  /// Probability that an element enters a random operator's domain.
  double domain_density = 0.8;
  std::size_t retries = 64;
};

/// Deterministic stream of random structures: the same config always
/// yields the same sequence.
class Generator {
 public:
  explicit Generator(GeneratorConfig cfg);

  const GeneratorConfig& config() const { return cfg_; }

  /// Uniform in [0, n). Avoids std::uniform_int_distribution so results do
  /// not depend on the standard library.
  std::uint64_t below(std::uint64_t n);
  bool chance(double p);

  /// Random bounded poset with n elements (labels 0, a, b, ..., 1).
  Poset poset(std::size_t n);
  /// Random De Morgan poset; size drawn from [min_size, max_size].
  AlgebraPtr algebra();
  /// Throws kGiveUp when no compatible involution turns up within the
  /// retry budget.
  AlgebraPtr algebra(std::size_t n);
  /// Random partial operator. With `fix_bounds`, 0 -> 0 and 1 -> 1.
  PartialUnaryOp op(const DeMorganPoset& a, bool fix_bounds);

 private:
  Poset mirrored_poset(std::size_t n);
  Poset plain_poset(std::size_t n);

  GeneratorConfig cfg_;
  std::mt19937_64 rng_;
};

AlgebraPtr gen_demorgan(const GeneratorConfig& cfg);

/// Labels 0, a, b, ..., 1 for an n-element bounded poset.
std::vector<std::string> generated_labels(std::size_t n);

/// Antitone involutions of p, found by backtracking over pairings. With a
/// generator the candidate order is shuffled and the first hit returned.
std::optional<std::vector<Element>> find_involution(const Poset& p, Generator* gen = nullptr);
std::vector<std::vector<Element>> all_involutions(const Poset& p);

/// Canonical form of (leq, neg) minimized over relabelings of the inner
/// elements; equal strings mean isomorphic algebras.
std::string canonical_form(const DeMorganPoset& a);

/// Every De Morgan poset with exactly n elements, one per isomorphism
/// class, in a fixed order. Throws kLimitExceeded for n > 6.
std::vector<AlgebraPtr> enumerate_demorgan_posets(std::size_t n);
/// All sizes 1..max_n.
std::vector<AlgebraPtr> demorgan_posets_up_to(std::size_t max_n);

/// Seeded random algebras with sizes in [1, max_n].
std::vector<AlgebraPtr> random_population(std::uint64_t seed, std::size_t count, std::size_t max_n);

/// Calls f for every partial operator on n elements (values in 0..n-1 or
/// undefined). With `fix_bounds`, bottom and top are fixed points.
void for_each_partial_op(const DeMorganPoset& a, bool fix_bounds,
                         const std::function<void(const PartialUnaryOp&)>& f);

/// Partial operators G (with H = identity) that are semi-tense on the G
/// side, over every given algebra. At most `per_algebra` from each.
std::vector<TenseStructure> semi_tense_population(const std::vector<AlgebraPtr>& algebras,
                                                  std::size_t per_algebra = SIZE_MAX);

/// Every relation on n points (2^(n*n) of them) as frames t1..tn.
std::vector<Frame> all_frames(std::size_t n);

/// Closure of {o, j, seed} under ', G and H inside a product structure,
/// returned as a dynamic structure on that subset.
TenseStructure harvest_substructure(const ProductStructure& ps, Element seed);

/// Distinct operator-closed substructures harvested from every frame on
/// `points` points that is serial in both directions, over M2.
std::vector<TenseStructure> harvested_population(std::size_t points);

/// Short single-line description of an algebra for witness lists.
std::string summarize(const DeMorganPoset& a);
std::string summarize(const TenseStructure& s);

/// Named property suites. sweep_small returns sorted counterexample
/// descriptions (empty when the property holds throughout).
std::vector<std::string_view> sweep_properties();
/// Throws kInvalidInput for an unknown property and kLimitExceeded when
/// max_n exceeds the property's enumeration cap.
std::vector<std::string> sweep_small(std::string_view property, std::size_t max_n);

enum class Verdict { kAny, kPass, kFail };

struct FixtureSpec {
  /// Required outcome per axiom (both sides combined), indexed by Axiom.
  std::array<Verdict, 4> axioms{};
  bool require_total = false;
  std::optional<Classification> classification;
  std::function<bool(const TenseStructure&)> extra;
  std::size_t min_n = 2;
  std::size_t max_n = 4;
  /// Maximum number of candidate structures examined.
  std::uint64_t budget = 20'000'000;
};

/// Parses "P1+P2-P3+P4" style verdict vectors; omitted axioms are kAny.
/// Also accepts "total" and a classification name after a comma,
/// e.g. "P1+P2+P3-P4+,total".
FixtureSpec parse_fixture_spec(std::string_view text);

/// Smallest structure matching the spec, minimized by element count and
/// then by |dom G| + |dom H|; nullopt when nothing matches in budget.
std::optional<TenseStructure> find_fixture(const FixtureSpec& spec);

}  // namespace dmrep
