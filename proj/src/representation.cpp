#include "dmrep/representation.hpp"

#include <sstream>

namespace dmrep {

M2Power::M2Power(Bitset first, Bitset second) : first_(std::move(first)), second_(std::move(second)) {
  if (first_.size() != second_.size()) {
    throw Error(ErrorKind::kInvalidInput, "M2 planes differ in size");
  }
}

M2Power M2Power::constant(std::size_t points, M2Value v) {
  return M2Power(v.first() ? Bitset::full(points) : Bitset(points),
                 v.second() ? Bitset::full(points) : Bitset(points));
}

ProductElement M2Power::to_product() const {
  ProductElement p(points());
  for (Element t = 0; t < points(); ++t) p[t] = at(t).bits();
  return p;
}

M2Power M2Power::from_product(const ProductElement& p) {
  M2Power out(p.size());
  for (Element t = 0; t < p.size(); ++t) out.set(t, M2Value::from_bits(static_cast<std::uint8_t>(p[t])));
  return out;
}

std::string M2Power::format() const {
  std::string out;
  for (Element t = 0; t < points(); ++t) {
    if (t) out += '.';
    out += at(t).label();
  }
  return out;
}

namespace {

Bitset scan_rows(const BitMatrix& rows, const Bitset& plane, bool subset) {
  Bitset out(rows.rows());
  const auto& k = kernels::active();
  (subset ? k.rows_subset_of : k.rows_intersecting)(rows.data(), rows.rows(), rows.stride(),
                                                    plane.words().data(), out.words().data());
  return out;
}

M2Power plane_op(const BitMatrix& rows, const M2Power& p, bool meet) {
  if (rows.rows() != p.points()) throw Error(ErrorKind::kInvalidInput, "element does not match the relation");
  return M2Power(scan_rows(rows, p.first_plane(), meet), scan_rows(rows, p.second_plane(), meet));
}

}  // namespace

M2Power hat_G_planes(const Relation& r, const M2Power& p) { return plane_op(r.forward(), p, true); }
M2Power hat_H_planes(const Relation& r, const M2Power& p) { return plane_op(r.backward(), p, true); }
M2Power hat_F_planes(const Relation& r, const M2Power& p) { return plane_op(r.forward(), p, false); }
M2Power hat_P_planes(const Relation& r, const M2Power& p) { return plane_op(r.backward(), p, false); }

std::string TimeScale::point_label(Element s) const {
  return format_set(algebra->poset(), points[s].downset().members);
}

TimeScale time_scale(const AlgebraPtr& a, const Limits& limits) {
  TimeScale scale{a, {}};
  auto downsets = enumerate_down_sets(a->poset(), true, limits.down_set_elements);
  if (downsets.size() > limits.time_scale_points) {
    throw Error(ErrorKind::kLimitExceeded,
                "time scale has " + std::to_string(downsets.size()) + " points, limit is " +
                    std::to_string(limits.time_scale_points));
  }
  scale.points.reserve(downsets.size());
  for (const auto& d : downsets) scale.points.push_back(kappa(*a, d));
  return scale;
}

Frame scale_frame(const TimeScale& scale, Relation r) {
  std::vector<std::string> names;
  for (Element s = 0; s < scale.size(); ++s) names.push_back(scale.point_label(s));
  return Frame(std::move(names), std::move(r));
}

std::vector<M2Power> embedding_table(const TimeScale& scale) {
  const std::size_t n = scale.algebra->size();
  std::vector<M2Power> table(n, M2Power(scale.size()));
  for (Element s = 0; s < scale.size(); ++s) {
    for (Element a = 0; a < n; ++a) table[a].set(s, scale.value(s, a));
  }
  return table;
}

EmbeddingCheck verify_embedding(const TimeScale& scale, const std::vector<M2Power>& table) {
  const DeMorganPoset& a = *scale.algebra;
  const std::size_t points = scale.size();
  EmbeddingCheck check;
  auto fail = [&](bool& flag, std::string w) {
    flag = false;
    check.witnesses.push_back(std::move(w));
  };
  if (table[a.bottom()] != M2Power::constant(points, kM2Bottom)) {
    fail(check.morphism, "i(" + a.label(a.bottom()) + ") is not the constant 00");
  }
  if (table[a.top()] != M2Power::constant(points, kM2Top)) {
    fail(check.morphism, "i(" + a.label(a.top()) + ") is not the constant 11");
  }
  for (Element x = 0; x < a.size(); ++x) {
    if (table[a.neg(x)] != table[x].neg()) {
      fail(check.morphism, "i(" + a.label(x) + "') differs from i(" + a.label(x) + ")'");
    }
    for (Element y = 0; y < a.size(); ++y) {
      const bool below = table[x].leq(table[y]);
      if (a.leq(x, y) && !below) {
        fail(check.morphism, a.label(x) + " <= " + a.label(y) + " but i(" + a.label(x) +
                                 ") is not below i(" + a.label(y) + ")");
      }
      if (below && !a.leq(x, y)) {
        fail(check.order_reflecting, "i(" + a.label(x) + ") <= i(" + a.label(y) + ") but " +
                                         a.label(x) + " is not below " + a.label(y));
      }
    }
  }
  return check;
}

Embedding embed(const AlgebraPtr& a, const Limits& limits) {
  Embedding e{time_scale(a, limits), {}, {}};
  e.table = embedding_table(e.scale);
  e.check = verify_embedding(e.scale, e.table);
  return e;
}

Relation induced_relation(const DeMorganPoset& a, const PartialUnaryOp& op, const TimeScale& scale,
                          const Limits& limits) {
  if (op.size() != a.size()) throw Error(ErrorKind::kInvalidInput, "operator does not match the algebra");
  const std::size_t points = scale.size();
  std::vector<Element> dom;
  for (Element x = 0; x < a.size(); ++x) {
    if (op.defined(x)) dom.push_back(x);
  }
  const auto work = static_cast<std::uint64_t>(points) * points * (dom.empty() ? 1 : dom.size());
  if (work > limits.relation_budget) {
    throw Error(ErrorKind::kLimitExceeded, "relation construction needs " + std::to_string(work) +
                                               " steps, budget is " +
                                               std::to_string(limits.relation_budget));
  }
  const std::size_t words = kernels::words_for(dom.size());
  // Right-hand sides t(x) for x in dom, word-major columns over t.
  std::vector<Word> rhs_first(words * points, 0);
  std::vector<Word> rhs_second(words * points, 0);
  for (Element t = 0; t < points; ++t) {
    for (std::size_t k = 0; k < dom.size(); ++k) {
      const M2Value v = scale.value(t, dom[k]);
      const Word bit = Word{1} << (k % kernels::kWordBits);
      const std::size_t at = (k / kernels::kWordBits) * points + t;
      if (v.first()) rhs_first[at] |= bit;
      if (v.second()) rhs_second[at] |= bit;
    }
  }
  BitMatrix forward(points, points);
  std::vector<Word> lhs_first(words);
  std::vector<Word> lhs_second(words);
  const auto& scan = kernels::active().paired_subset_scan;
  for (Element s = 0; s < points; ++s) {
    std::fill(lhs_first.begin(), lhs_first.end(), 0);
    std::fill(lhs_second.begin(), lhs_second.end(), 0);
    for (std::size_t k = 0; k < dom.size(); ++k) {
      const M2Value v = scale.value(s, op(dom[k]));
      const Word bit = Word{1} << (k % kernels::kWordBits);
      if (v.first()) lhs_first[k / kernels::kWordBits] |= bit;
      if (v.second()) lhs_second[k / kernels::kWordBits] |= bit;
    }
    scan(lhs_first.data(), lhs_second.data(), rhs_first.data(), rhs_second.data(), points, words,
         forward.row_words(s).data());
  }
  return Relation::from_forward(std::move(forward));
}

PointwiseReport verify_pointwise(const DeMorganPoset& a, const PartialUnaryOp& g,
                                 const TimeScale& scale, const Relation& rg) {
  PointwiseReport report;
  const std::size_t points = scale.size();
  for (Element s = 0; s < points; ++s) {
    bool has_successor = false;
    for (Element t = 0; t < points; ++t) has_successor = has_successor || rg.contains(s, t);
    if (!has_successor) {
      report.serial = false;
      report.witnesses.push_back("point " + scale.point_label(s) + " has no R_G-successor");
    }
  }
  for (Element b = 0; b < a.size(); ++b) {
    // Statement 1 at b in dom G.
    if (g.defined(b)) {
      for (Element s = 0; s < points; ++s) {
        M2Value m = kM2Top;
        for (Element t = 0; t < points; ++t) {
          if (rg.contains(s, t)) m = m.meet(scale.value(t, b));
        }
        ++report.pairs1;
        const M2Value lhs = scale.value(s, g(b));
        if (lhs != m) {
          report.statement1 = false;
          report.witnesses.push_back("meet identity fails at b=" + a.label(b) + ", s=" +
                                     scale.point_label(s) + ": s(G(b)) = " +
                                     std::string(lhs.label()) + ", meet = " +
                                     std::string(m.label()));
        }
      }
    }
    // Statement 2 at b in dom F, i.e. b' in dom G.
    if (g.defined(a.neg(b))) {
      const Element fb = a.neg(g(a.neg(b)));
      for (Element s = 0; s < points; ++s) {
        M2Value j = kM2Bottom;
        for (Element t = 0; t < points; ++t) {
          if (rg.contains(s, t)) j = j.join(scale.value(t, b));
        }
        ++report.pairs2;
        const M2Value lhs = scale.value(s, fb);
        if (lhs != j) {
          report.statement2 = false;
          report.witnesses.push_back("join identity fails at b=" + a.label(b) + ", s=" +
                                     scale.point_label(s) + ": s(F(b)) = " +
                                     std::string(lhs.label()) + ", join = " +
                                     std::string(j.label()));
        }
      }
    }
  }
  return report;
}

namespace {

std::vector<std::string> inverse_mismatches(const TimeScale& scale, const Relation& rg,
                                            const Relation& rh) {
  std::vector<std::string> out;
  for (Element s = 0; s < scale.size(); ++s) {
    for (Element t = 0; t < scale.size(); ++t) {
      if (rg.contains(s, t) != rh.contains(t, s)) {
        out.push_back("(" + scale.point_label(s) + ", " + scale.point_label(t) + ") " +
                      (rg.contains(s, t) ? "in R_G but reversed pair not in R_H"
                                         : "not in R_G but reversed pair in R_H"));
      }
    }
  }
  return out;
}

void domain_condition(const DeMorganPoset& a, const PartialUnaryOp& from, const PartialUnaryOp& to,
                      std::string_view from_name, std::string_view to_name, bool& flag,
                      std::vector<std::string>& witnesses) {
  for (Element x = 0; x < a.size(); ++x) {
    if (!from.defined(x)) continue;
    const Element target = a.neg(from(x));
    if (!to.defined(target)) {
      flag = false;
      witnesses.push_back("x=" + a.label(x) + ": " + std::string(from_name) + "(x)' = " +
                          a.label(target) + " is not in dom " + std::string(to_name));
    }
  }
}

}  // namespace

InterrelationReport check_interrelation(const TenseStructure& s, const TimeScale& scale,
                                        const Limits& limits) {
  InterrelationReport r;
  const DeMorganPoset& a = s.algebra();
  r.classification = classify(s);
  domain_condition(a, s.G(), s.H(), "G", "H", r.condition_a, r.witnesses_a);
  domain_condition(a, s.H(), s.G(), "H", "G", r.condition_b, r.witnesses_b);
  r.rg = induced_relation(a, s.G(), scale, limits);
  r.rh = induced_relation(a, s.H(), scale, limits);
  r.inverse_witnesses = inverse_mismatches(scale, r.rg, r.rh);
  r.inverse_equal = r.inverse_witnesses.empty();
  return r;
}

InterrelationReport check_interrelation(const TenseStructure& s, const Limits& limits) {
  return check_interrelation(s, time_scale(s.algebra_ptr(), limits), limits);
}

RepresentationResult verify_representation(const TenseStructure& s, const Limits& limits) {
  RepresentationResult r;
  const DeMorganPoset& a = s.algebra();
  r.scale = time_scale(s.algebra_ptr(), limits);
  if (r.scale.size() == 0) {
    r.empty_scale = true;
    return r;
  }

  const AxiomReport axioms = check_axioms(s);
  for (Side side : kSides) {
    if (axioms.side_semi_tense(side)) continue;
    std::vector<std::string> w;
    for (Axiom ax : {Axiom::kP1, Axiom::kP2, Axiom::kP4}) {
      for (const auto& aw : axioms.witnesses_for(ax, side)) {
        w.push_back(std::string(to_string(ax)) + ": " + aw.detail);
      }
    }
    throw HypothesisFailed(std::string(to_string(side)) + " is semi-tense", std::move(w));
  }

  r.rg = induced_relation(a, s.G(), r.scale, limits);
  r.rh = induced_relation(a, s.H(), r.scale, limits);
  if (auto w = inverse_mismatches(r.scale, r.rg, r.rh); !w.empty()) {
    throw HypothesisFailed("R_G = (R_H)^-1", std::move(w));
  }
  r.rg_serial = is_serial(r.rg, false);
  r.rg_inverse_serial = is_serial(r.rg, true);

  r.embedding = embedding_table(r.scale);
  r.embedding_check = verify_embedding(r.scale, r.embedding);
  r.pointwise = verify_pointwise(a, s.G(), r.scale, r.rg);

  std::vector<std::string> unused;
  domain_condition(a, s.G(), s.H(), "G", "H", r.interrelation_a, unused);
  domain_condition(a, s.H(), s.G(), "H", "G", r.interrelation_b, unused);

  auto square = [&](const PartialUnaryOp& op, M2Power (*frame_op)(const Relation&, const M2Power&),
                    std::string_view name, SquareCheck& out) {
    for (Element x = 0; x < a.size(); ++x) {
      if (!op.defined(x)) continue;
      ++out.checked;
      const M2Power lhs = frame_op(r.rg, r.embedding[x]);
      const M2Power& rhs = r.embedding[op(x)];
      if (lhs != rhs) {
        out.ok = false;
        out.witnesses.push_back("i(" + std::string(name) + "(" + a.label(x) + ")) = " +
                                rhs.format() + " but " + std::string(name) + "^(i(" +
                                a.label(x) + ")) = " + lhs.format());
      }
    }
  };
  square(s.G(), hat_G_planes, "G", r.g_square);
  square(s.H(), hat_H_planes, "H", r.h_square);
  square(s.F(), hat_F_planes, "F", r.f_square);
  return r;
}

}  // namespace dmrep
