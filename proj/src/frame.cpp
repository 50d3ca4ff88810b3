#include "dmrep/frame.hpp"

#include <unordered_set>

namespace dmrep {

Relation Relation::from_pairs(std::size_t n, std::span<const std::pair<Element, Element>> pairs) {
  Relation r(n);
  for (const auto& [s, t] : pairs) {
    if (s >= n || t >= n) throw Error(ErrorKind::kInvalidInput, "relation pair out of range");
    r.add(s, t);
  }
  return r;
}

Relation Relation::from_forward(BitMatrix forward) {
  if (forward.rows() != forward.cols()) {
    throw Error(ErrorKind::kInvalidInput, "relation matrix must be square");
  }
  Relation r;
  r.backward_ = forward.transposed();
  r.forward_ = std::move(forward);
  return r;
}

Relation Relation::inverse() const {
  Relation r;
  r.forward_ = backward_;
  r.backward_ = forward_;
  return r;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element s = 0; s < size(); ++s) {
    forward_.row(s).for_each([&](std::size_t t) { out.emplace_back(s, static_cast<Element>(t)); });
  }
  return out;
}

bool is_serial(const Relation& r, bool inverse) {
  const BitMatrix& rows = inverse ? r.backward() : r.forward();
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (rows.row(s).none()) return false;
  }
  return true;
}

Frame::Frame(std::vector<std::string> points, Relation rel)
    : points_(std::move(points)), rel_(std::move(rel)) {
  if (points_.empty()) throw Error(ErrorKind::kEmptyFrame, "a frame needs a non-empty time scale");
  if (rel_.size() != points_.size()) {
    throw Error(ErrorKind::kInvalidInput, "relation size does not match the point count");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw Error(ErrorKind::kInvalidInput, "duplicate point '" + p + "'");
  }
}

Frame Frame::anonymous(Relation rel) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rel.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  return Frame(std::move(names), std::move(rel));
}

std::optional<Element> Frame::find(std::string_view label) const {
  for (Element i = 0; i < points_.size(); ++i) {
    if (points_[i] == label) return i;
  }
  return std::nullopt;
}

FiniteLattice::FiniteLattice(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  const std::size_t n = algebra_->size();
  meet_.resize(n * n);
  join_.resize(n * n);
  const Poset& p = algebra_->poset();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      auto m = dmrep::meet(p, x, y);
      auto j = dmrep::join(p, x, y);
      if (!m || !j) {
        throw Error(ErrorKind::kIsNotLattice,
                    "base algebra is not a lattice: " + p.label(x) + " and " + p.label(y) +
                        " lack a " + (m ? "join" : "meet"));
      }
      meet_[x * n + y] = meet_[y * n + x] = *m;
      join_[x * n + y] = join_[y * n + x] = *j;
    }
  }
}

namespace {

template <typename Combine>
ProductElement fold_neighbours(const BitMatrix& rows, const ProductElement& p, Element start,
                               Combine combine) {
  ProductElement out(p.size(), start);
  for (std::size_t x = 0; x < p.size(); ++x) {
    rows.row(x).for_each([&](std::size_t y) { out[x] = combine(out[x], p[y]); });
  }
  return out;
}

void check_size(const Frame& f, const ProductElement& p) {
  if (p.size() != f.size()) throw Error(ErrorKind::kInvalidInput, "product element does not match the frame");
}

}  // namespace

ProductElement hat_G(const Frame& f, const FiniteLattice& m, const ProductElement& p) {
  check_size(f, p);
  return fold_neighbours(f.relation().forward(), p, m.algebra().top(),
                         [&](Element a, Element b) { return m.meet(a, b); });
}

ProductElement hat_H(const Frame& f, const FiniteLattice& m, const ProductElement& p) {
  check_size(f, p);
  return fold_neighbours(f.relation().backward(), p, m.algebra().top(),
                         [&](Element a, Element b) { return m.meet(a, b); });
}

ProductElement hat_F(const Frame& f, const FiniteLattice& m, const ProductElement& p) {
  check_size(f, p);
  return fold_neighbours(f.relation().forward(), p, m.algebra().bottom(),
                         [&](Element a, Element b) { return m.join(a, b); });
}

ProductElement hat_P(const Frame& f, const FiniteLattice& m, const ProductElement& p) {
  check_size(f, p);
  return fold_neighbours(f.relation().backward(), p, m.algebra().bottom(),
                         [&](Element a, Element b) { return m.join(a, b); });
}

ProductAlgebra::ProductAlgebra(FiniteLattice base, std::size_t points, std::size_t limit)
    : base_(std::move(base)), points_(points) {
  const std::size_t m = base_.size();
  std::size_t total = 1;
  for (std::size_t t = 0; t < points_; ++t) {
    if (total > limit / m) {
      throw Error(ErrorKind::kLimitExceeded,
                  "product algebra " + std::to_string(m) + "^" + std::to_string(points_) +
                      " exceeds the materialization limit of " + std::to_string(limit));
    }
    total *= m;
  }
  if (total > limit) {
    throw Error(ErrorKind::kLimitExceeded, "product algebra exceeds the materialization limit");
  }
  const DeMorganPoset& a = base_.algebra();

  std::vector<std::string> labels(total);
  std::vector<Element> neg(total);
  for (Element e = 0; e < total; ++e) {
    ProductElement p = decode(e);
    std::string label;
    ProductElement np(points_);
    for (std::size_t t = 0; t < points_; ++t) {
      if (t) label += '.';
      label += a.label(p[t]);
      np[t] = a.neg(p[t]);
    }
    labels[e] = label.empty() ? std::string("()") : label;
    neg[e] = encode(np);
  }

  // down(q) is the product of the componentwise down-sets.
  std::vector<std::vector<Element>> below(m);
  for (Element x = 0; x < m; ++x) {
    for (std::size_t y : a.poset().down(x).indices()) below[x].push_back(static_cast<Element>(y));
  }
  BitMatrix down(total, total);
  for (Element q = 0; q < total; ++q) {
    const ProductElement qc = decode(q);
    std::vector<std::size_t> pos(points_, 0);
    while (true) {
      Element idx = 0;
      Element scale = 1;
      for (std::size_t t = 0; t < points_; ++t) {
        idx += below[qc[t]][pos[t]] * scale;
        scale *= static_cast<Element>(m);
      }
      down.set(q, idx);
      std::size_t t = 0;
      while (t < points_ && ++pos[t] == below[qc[t]].size()) pos[t++] = 0;
      if (t == points_) break;
    }
  }
  algebra_ = std::make_shared<const DeMorganPoset>(
      Poset::from_down_rows(std::move(labels), std::move(down)), std::move(neg));
}

ProductElement ProductAlgebra::decode(Element e) const {
  const auto m = static_cast<Element>(base_.size());
  ProductElement p(points_);
  for (std::size_t t = 0; t < points_; ++t) {
    p[t] = e % m;
    e /= m;
  }
  return p;
}

Element ProductAlgebra::encode(const ProductElement& p) const {
  const auto m = static_cast<Element>(base_.size());
  Element e = 0;
  for (std::size_t t = points_; t-- > 0;) e = e * m + p[t];
  return e;
}

ProductStructure product_algebra(const FiniteLattice& m, const Frame& f, std::size_t limit) {
  ProductAlgebra algebra(m, f.size(), limit);
  const std::size_t n = algebra.size();
  PartialUnaryOp g(n);
  PartialUnaryOp h(n);
  for (Element e = 0; e < n; ++e) {
    const ProductElement p = algebra.decode(e);
    g.set(e, algebra.encode(hat_G(f, m, p)));
    h.set(e, algebra.encode(hat_H(f, m, p)));
  }
  TenseStructure structure(algebra.algebra(), std::move(g), std::move(h));
  return ProductStructure{std::move(algebra), std::move(structure)};
}

FrameTheoremReport verify_frame_theorem(const AlgebraPtr& m, const Frame& f, std::size_t limit) {
  FiniteLattice lattice(m);
  ProductStructure ps = product_algebra(lattice, f, limit);
  FrameTheoremReport r;
  r.serial_forward = is_serial(f.relation(), false);
  r.serial_backward = is_serial(f.relation(), true);
  r.axioms = check_axioms(ps.structure);
  r.g_semi_tense = r.axioms.side_semi_tense(Side::kG);
  r.h_semi_tense = r.axioms.side_semi_tense(Side::kH);
  r.dynamic = r.axioms.classification == Classification::kDynamic;
  r.clause_a = r.axioms.g_total && r.axioms.h_total;
  r.clause_b = !r.serial_forward || r.g_semi_tense;
  r.clause_c = !r.serial_backward || r.h_semi_tense;
  r.clause_d = !(r.serial_forward && r.serial_backward) || r.dynamic;
  r.prediction_exact = r.g_semi_tense == r.serial_forward &&
                       r.h_semi_tense == r.serial_backward &&
                       r.dynamic == (r.serial_forward && r.serial_backward);
  return r;
}

}  // namespace dmrep
