#pragma once

// Canonical frame of a De Morgan poset with tense operators.
//
// Time points are the morphisms kappa_D into M2, one per proper down-set D.
// Elements embed into M2^T via i(a)(s) = s(a); an operator G induces
// s R_G t  iff  s(G(x)) <= t(x) for every x in dom G.
// Elements of M2^T are held as two bit planes over T (first and second
// components), so the meets and joins over successors that define the
// frame operators reduce to the rows_subset_of / rows_intersecting kernels,
// and R_G itself to paired_subset_scan.

#include <string>
#include <vector>

#include "dmrep/frame.hpp"

namespace dmrep {

/// Element of M2^T as two bit planes over T.
class M2Power {
 public:
  M2Power() = default;
  explicit M2Power(std::size_t points) : first_(points), second_(points) {}
  M2Power(Bitset first, Bitset second);
  static M2Power constant(std::size_t points, M2Value v);

  std::size_t points() const { return first_.size(); }
  M2Value at(Element t) const { return M2Value(first_.test(t), second_.test(t)); }
  void set(Element t, M2Value v) {
    first_.set(t, v.first());
    second_.set(t, v.second());
  }
  const Bitset& first_plane() const { return first_; }
  const Bitset& second_plane() const { return second_; }

  bool leq(const M2Power& other) const {
    return first_.is_subset_of(other.first_) && second_.is_subset_of(other.second_);
  }
  M2Power neg() const { return M2Power(second_.complement(), first_.complement()); }

  /// As M2 element indices, for the generic frame operators.
  ProductElement to_product() const;
  static M2Power from_product(const ProductElement& p);
  std::string format() const;

  friend bool operator==(const M2Power&, const M2Power&) = default;

 private:
  Bitset first_;
  Bitset second_;
};

/// Meet over R-successors, planewise.
M2Power hat_G_planes(const Relation& r, const M2Power& p);
/// Meet over R-predecessors.
M2Power hat_H_planes(const Relation& r, const M2Power& p);
/// Join over R-successors.
M2Power hat_F_planes(const Relation& r, const M2Power& p);
/// Join over R-predecessors.
M2Power hat_P_planes(const Relation& r, const M2Power& p);

struct TimeScale {
  AlgebraPtr algebra;
  std::vector<KappaMorphism> points;

  std::size_t size() const { return points.size(); }
  M2Value value(Element s, Element a) const { return points[s](a); }
  std::string point_label(Element s) const;
};

/// One point per proper down-set, in canonical down-set order. Throws
/// kLimitExceeded.
TimeScale time_scale(const AlgebraPtr& a, const Limits& limits = {});

/// Frame over the scale's points (named by their down-sets).
Frame scale_frame(const TimeScale& scale, Relation r);

struct EmbeddingCheck {
  bool morphism = true;
  bool order_reflecting = true;
  std::vector<std::string> witnesses;
  bool ok() const { return morphism && order_reflecting; }
};

/// i(a) for every element a.
std::vector<M2Power> embedding_table(const TimeScale& scale);
EmbeddingCheck verify_embedding(const TimeScale& scale, const std::vector<M2Power>& table);

struct Embedding {
  TimeScale scale;
  std::vector<M2Power> table;
  EmbeddingCheck check;
};
Embedding embed(const AlgebraPtr& a, const Limits& limits = {});

/// R_op over the scale. Throws kLimitExceeded when |T|^2 * |dom op|
/// exceeds limits.relation_budget.
Relation induced_relation(const DeMorganPoset& a, const PartialUnaryOp& op,
                          const TimeScale& scale, const Limits& limits = {});

/// Pointwise meet/join identities for a semi-tense G, evaluated element by
/// element without the plane kernels:
///   1. s(G(b)) = meet{ t(b) | s R_G t }   for b in dom G,
///   2. s(F(b)) = join{ t(b) | s R_G t }   for b in dom F (F = G^d),
/// plus seriality of R_G.
struct PointwiseReport {
  bool statement1 = true;
  bool statement2 = true;
  bool serial = true;
  std::size_t pairs1 = 0;
  std::size_t pairs2 = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return statement1 && statement2 && serial; }
};
PointwiseReport verify_pointwise(const DeMorganPoset& a, const PartialUnaryOp& g,
                                 const TimeScale& scale, const Relation& rg);

struct InterrelationReport {
  Classification classification = Classification::kNone;
  /// x in dom G implies G(x)' in dom H.
  bool condition_a = true;
  /// x in dom H implies H(x)' in dom G.
  bool condition_b = true;
  std::vector<std::string> witnesses_a;
  std::vector<std::string> witnesses_b;
  Relation rg;
  Relation rh;
  bool inverse_equal = true;
  std::vector<std::string> inverse_witnesses;
};
InterrelationReport check_interrelation(const TenseStructure& s, const TimeScale& scale,
                                        const Limits& limits = {});
InterrelationReport check_interrelation(const TenseStructure& s, const Limits& limits = {});

class HypothesisFailed : public Error {
 public:
  HypothesisFailed(std::string hypothesis, std::vector<std::string> witnesses)
      : Error(ErrorKind::kHypothesisFailed,
              "hypothesis failed: " + hypothesis +
                  (witnesses.empty() ? std::string() : " (" + witnesses.front() + ")")),
        hypothesis_(std::move(hypothesis)),
        witnesses_(std::move(witnesses)) {}

  const std::string& hypothesis() const { return hypothesis_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  std::string hypothesis_;
  std::vector<std::string> witnesses_;
};

struct SquareCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;
};

struct RepresentationResult {
  TimeScale scale;
  Relation rg;
  Relation rh;
  bool rg_serial = true;
  bool rg_inverse_serial = true;
  std::vector<M2Power> embedding;
  EmbeddingCheck embedding_check;
  PointwiseReport pointwise;
  bool interrelation_a = true;
  bool interrelation_b = true;
  SquareCheck g_square;
  SquareCheck h_square;
  SquareCheck f_square;
  /// One-element algebra: no points, nothing to check.
  bool empty_scale = false;

  bool success() const {
    return empty_scale || (embedding_check.ok() && rg_serial && rg_inverse_serial &&
                           pointwise.ok() && g_square.ok && h_square.ok && f_square.ok);
  }
};

/// Builds the canonical frame (T, R_G) and checks that i maps G, H and F to
/// the frame operators. Throws HypothesisFailed when G or H is not
/// semi-tense or R_G != (R_H)^-1, and kLimitExceeded on budget overrun.
RepresentationResult verify_representation(const TenseStructure& s, const Limits& limits = {});

}  // namespace dmrep
