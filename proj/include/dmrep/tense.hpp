#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmrep/demorgan.hpp"

namespace dmrep {

/// Partial self-map of a finite carrier with an explicit domain.
class PartialUnaryOp {
 public:
  PartialUnaryOp() = default;
  /// Empty domain over n elements.
  explicit PartialUnaryOp(std::size_t n) : values_(n) {}
  explicit PartialUnaryOp(PartialMap values) : values_(std::move(values)) {}

  static PartialUnaryOp identity(std::size_t n);
  static PartialUnaryOp total(std::span<const Element> values);

  std::size_t size() const { return values_.size(); }
  bool defined(Element x) const { return values_[x].has_value(); }
  /// Precondition: defined(x).
  Element operator()(Element x) const { return *values_[x]; }
  const std::optional<Element>& at(Element x) const { return values_[x]; }

  void set(Element x, Element value) { values_[x] = value; }
  void erase(Element x) { values_[x].reset(); }

  bool is_total() const;
  std::size_t domain_size() const;
  Bitset domain() const;
  const PartialMap& values() const { return values_; }

  friend bool operator==(const PartialUnaryOp&, const PartialUnaryOp&) = default;

 private:
  PartialMap values_;
};

/// A De Morgan poset with partial operators G, H and the derived F = G^d,
/// P = H^d.
class TenseStructure {
 public:
  /// Throws kInvalidInput if an operator does not match the carrier.
  TenseStructure(AlgebraPtr algebra, PartialUnaryOp g, PartialUnaryOp h);

  const DeMorganPoset& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const PartialUnaryOp& G() const { return g_; }
  const PartialUnaryOp& H() const { return h_; }
  const PartialUnaryOp& F() const { return f_; }
  const PartialUnaryOp& P() const { return p_; }

 private:
  AlgebraPtr algebra_;
  PartialUnaryOp g_;
  PartialUnaryOp h_;
  PartialUnaryOp f_;
  PartialUnaryOp p_;
};

enum class DualOf { kF, kP };

/// F = G^d or P = H^d, recomputed from the structure's G or H.
PartialUnaryOp derive_dual(const TenseStructure& s, DualOf which);
PartialUnaryOp dual_op(const DeMorganPoset& a, const PartialUnaryOp& op);

enum class Axiom { kP1 = 0, kP2 = 1, kP3 = 2, kP4 = 3 };
/// kG covers the clauses stated for G (P3: x <= GP(x)); kH the ones for H.
enum class Side { kG = 0, kH = 1 };
enum class Classification { kNone, kSemiTense, kPartialDynamic, kDynamic };

std::string_view to_string(Axiom a);
std::string_view to_string(Side s);
std::string_view to_string(Classification c);
std::optional<Classification> parse_classification(std::string_view text);

inline constexpr std::array<Axiom, 4> kAxioms{Axiom::kP1, Axiom::kP2, Axiom::kP3, Axiom::kP4};
inline constexpr std::array<Side, 2> kSides{Side::kG, Side::kH};

struct AxiomWitness {
  Axiom axiom;
  Side side;
  Element x;
  std::optional<Element> y;
  std::string detail;
};

struct AxiomReport {
  std::array<bool, 8> holds{};
  std::vector<AxiomWitness> witnesses;
  bool g_total = false;
  bool h_total = false;
  Classification classification = Classification::kNone;

  bool passes(Axiom a, Side s) const {
    return holds[static_cast<std::size_t>(a) * 2 + static_cast<std::size_t>(s)];
  }
  bool passes(Axiom a) const { return passes(a, Side::kG) && passes(a, Side::kH); }
  /// P1, P2 and P4 on one side.
  bool side_semi_tense(Side s) const {
    return passes(Axiom::kP1, s) && passes(Axiom::kP2, s) && passes(Axiom::kP4, s);
  }
  std::vector<AxiomWitness> witnesses_for(Axiom a, Side s) const;
};

/// Evaluates P1-P4 with their definedness guards and records every witness.
AxiomReport check_axioms(const TenseStructure& s);
Classification classify(const TenseStructure& s);

struct MorphismCheck {
  bool ok = true;
  std::vector<std::string> witnesses;
};

/// f(G1(a)) = G2(f(a)) on dom G1 and f(H1(b)) = H2(f(b)) on dom H1.
/// Throws kInvalidInput unless f is a De Morgan morphism.
MorphismCheck check_dynamic_morphism(std::span<const Element> f, const TenseStructure& s1,
                                     const TenseStructure& s2);

}  // namespace dmrep
