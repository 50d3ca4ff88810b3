#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmrep/tense.hpp"

namespace dmrep {

/// Binary relation on {0, ..., n-1}, kept as successor and predecessor rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : forward_(n, n), backward_(n, n) {}
  static Relation from_pairs(std::size_t n, std::span<const std::pair<Element, Element>> pairs);
  static Relation from_forward(BitMatrix forward);

  std::size_t size() const { return forward_.rows(); }
  bool contains(Element s, Element t) const { return forward_.test(s, t); }
  void add(Element s, Element t) {
    forward_.set(s, t);
    backward_.set(t, s);
  }

  Bitset successors(Element s) const { return forward_.row(s); }
  Bitset predecessors(Element t) const { return backward_.row(t); }
  const BitMatrix& forward() const { return forward_; }
  const BitMatrix& backward() const { return backward_; }

  Relation inverse() const;
  std::size_t pair_count() const { return forward_.count(); }
  std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const Relation& a, const Relation& b) { return a.forward_ == b.forward_; }

 private:
  BitMatrix forward_;
  BitMatrix backward_;
};

/// Every point has an R-successor (or, with `inverse`, an R-predecessor).
bool is_serial(const Relation& r, bool inverse = false);

/// A time scale T (non-empty) with accessibility relation R.
class Frame {
 public:
  /// Throws kEmptyFrame for empty T and kInvalidInput for mismatched sizes
  /// or duplicate point names.
  Frame(std::vector<std::string> points, Relation rel);
  /// Points named t1, t2, ...
  static Frame anonymous(Relation rel);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(Element t) const { return points_[t]; }
  std::optional<Element> find(std::string_view label) const;
  const Relation& relation() const { return rel_; }
  Frame inverse() const { return Frame(points_, rel_.inverse()); }

 private:
  std::vector<std::string> points_;
  Relation rel_;
};

/// Meet/join tables of a finite De Morgan lattice (finite, hence complete).
class FiniteLattice {
 public:
  /// Throws kIsNotLattice.
  explicit FiniteLattice(AlgebraPtr algebra);

  const DeMorganPoset& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t size() const { return algebra_->size(); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }

 private:
  AlgebraPtr algebra_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

/// A total map T -> M, stored as M-element indices.
using ProductElement = std::vector<Element>;

/// G(p)(x) = meet of p(y) over x R y; empty meets are the top of M.
ProductElement hat_G(const Frame& f, const FiniteLattice& m, const ProductElement& p);
/// H(p)(x) = meet of p(y) over y R x.
ProductElement hat_H(const Frame& f, const FiniteLattice& m, const ProductElement& p);
/// F = G^d: join of p(y) over x R y; empty joins are the bottom.
ProductElement hat_F(const Frame& f, const FiniteLattice& m, const ProductElement& p);
/// P = H^d: join of p(y) over y R x.
ProductElement hat_P(const Frame& f, const FiniteLattice& m, const ProductElement& p);

/// M^T materialized as a De Morgan poset with componentwise order and
/// negation. Element index = sum of p(t) * |M|^t; labels join the
/// component labels with '.' in point order.
class ProductAlgebra {
 public:
  /// Throws kLimitExceeded when |M|^|T| > limit.
  ProductAlgebra(FiniteLattice base, std::size_t points,
                 std::size_t limit = Limits{}.product_elements);

  const FiniteLattice& base() const { return base_; }
  std::size_t points() const { return points_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return algebra_->size(); }

  ProductElement decode(Element e) const;
  Element encode(const ProductElement& p) const;

 private:
  FiniteLattice base_;
  std::size_t points_;
  AlgebraPtr algebra_;
};

struct ProductStructure {
  ProductAlgebra algebra;
  TenseStructure structure;
};

/// (M^T; G, H) with G, H built from the frame.
ProductStructure product_algebra(const FiniteLattice& m, const Frame& f,
                                 std::size_t limit = Limits{}.product_elements);

struct FrameTheoremReport {
  bool serial_forward = false;
  bool serial_backward = false;
  AxiomReport axioms;
  bool g_semi_tense = false;
  bool h_semi_tense = false;
  bool dynamic = false;

  bool clause_a = false;  // G, H total
  bool clause_b = false;  // R serial => G semi-tense
  bool clause_c = false;  // R^-1 serial => H semi-tense
  bool clause_d = false;  // both serial => dynamic
  /// Semi-tense / dynamic status coincides exactly with the seriality flags.
  bool prediction_exact = false;

  bool holds() const { return clause_a && clause_b && clause_c && clause_d; }
};

/// Throws kIsNotLattice or kLimitExceeded.
FrameTheoremReport verify_frame_theorem(const AlgebraPtr& m, const Frame& f,
                                        std::size_t limit = Limits{}.product_elements);

}  // namespace dmrep
