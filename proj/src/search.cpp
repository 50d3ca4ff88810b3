#include "dmrep/search.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>

namespace dmrep {

namespace {

constexpr Element kUnset = UINT32_MAX;

using StrictOrder = std::vector<std::vector<bool>>;

void close_transitively(StrictOrder& lt) {
  const std::size_t k = lt.size();
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!lt[i][m]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (lt[m][j]) lt[i][j] = true;
      }
    }
  }
}

bool has_cycle(const StrictOrder& lt) {
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt[i][i]) return true;
  }
  return false;
}

// Inner element i becomes element i + 1; bounds are adjoined.
Poset bounded_from_strict(const StrictOrder& lt) {
  const std::size_t k = lt.size();
  const std::size_t n = k + 2;
  BitMatrix down(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    down.set(x, x);
    down.set(x, 0);
    down.set(n - 1, x);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (lt[j][i]) down.set(i + 1, j + 1);
    }
  }
  return Poset::from_down_rows(generated_labels(n), std::move(down));
}

Poset trivial_poset(std::size_t n) {
  BitMatrix down(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y <= x; ++y) down.set(x, y);
  }
  return Poset::from_down_rows(generated_labels(n), std::move(down));
}

class InvolutionSearch {
 public:
  InvolutionSearch(const Poset& p, Generator* gen) : p_(p), gen_(gen), neg_(p.size(), kUnset) {
    neg_[p.bottom()] = p.top();
    neg_[p.top()] = p.bottom();
  }

  template <typename OnFound>
  bool run(Element from, OnFound&& on_found) {
    while (from < neg_.size() && neg_[from] != kUnset) ++from;
    if (from == neg_.size()) return on_found(neg_);
    const Element x = from;
    std::vector<Element> candidates;
    for (Element y = x; y < neg_.size(); ++y) {
      if (neg_[y] == kUnset) candidates.push_back(y);
    }
    if (gen_) {
      for (std::size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[gen_->below(i)]);
      }
    }
    for (Element y : candidates) {
      neg_[x] = y;
      neg_[y] = x;
      if (consistent(x) && consistent(y) && run(x + 1, on_found)) return true;
      neg_[x] = kUnset;
      neg_[y] = kUnset;
    }
    return false;
  }

 private:
  bool consistent(Element x) const {
    for (Element z = 0; z < neg_.size(); ++z) {
      if (neg_[z] == kUnset) continue;
      if (p_.leq(x, z) && !p_.leq(neg_[z], neg_[x])) return false;
      if (p_.leq(z, x) && !p_.leq(neg_[x], neg_[z])) return false;
    }
    return true;
  }

  const Poset& p_;
  Generator* gen_;
  std::vector<Element> neg_;
};

std::string element_list(const DeMorganPoset& a, const PartialUnaryOp& op) {
  std::string out;
  for (Element x = 0; x < a.size(); ++x) {
    if (!op.defined(x)) continue;
    if (!out.empty()) out += ' ';
    out += a.label(x) + ":" + a.label(op(x));
  }
  return out.empty() ? "-" : out;
}

}  // namespace

Generator::Generator(GeneratorConfig cfg) : cfg_(cfg), rng_(cfg.seed) {}

std::uint64_t Generator::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return x % n;
}

bool Generator::chance(double p) {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

std::vector<std::string> generated_labels(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  }
  if (n >= 2) labels.push_back("1");
  return labels;
}

Poset Generator::poset(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "a poset needs at least one element");
  if (n <= 2) return trivial_poset(n);
  return chance(cfg_.mirrored_share) ? mirrored_poset(n) : plain_poset(n);
}

Poset Generator::mirrored_poset(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  std::vector<std::size_t> sigma(k);
  for (std::size_t i = 0; i < k;) {
    if (i + 1 < k && chance(0.7)) {
      sigma[perm[i]] = perm[i + 1];
      sigma[perm[i + 1]] = perm[i];
      i += 2;
    } else {
      sigma[perm[i]] = perm[i];
      i += 1;
    }
  }
  StrictOrder lt(k, std::vector<bool>(k, false));
  const std::size_t attempts = k * (k - 1) / 2;
  for (std::size_t a = 0; a < attempts; ++a) {
    const auto u = static_cast<std::size_t>(below(k));
    const auto v = static_cast<std::size_t>(below(k));
    if (!chance(cfg_.edge_density) || u == v || lt[u][v] || lt[v][u]) continue;
    StrictOrder next = lt;
    next[u][v] = true;
    next[sigma[v]][sigma[u]] = true;
    close_transitively(next);
    if (!has_cycle(next)) lt = std::move(next);
  }
  return bounded_from_strict(lt);
}

Poset Generator::plain_poset(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  StrictOrder lt(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (chance(cfg_.edge_density)) lt[perm[i]][perm[j]] = true;
    }
  }
  close_transitively(lt);
  return bounded_from_strict(lt);
}

AlgebraPtr Generator::algebra() {
  const std::size_t lo = std::max<std::size_t>(1, cfg_.min_size);
  const std::size_t hi = std::max(lo, cfg_.max_size);
  return algebra(lo + below(hi - lo + 1));
}

AlgebraPtr Generator::algebra(std::size_t n) {
  for (std::size_t attempt = 0; attempt <= cfg_.retries; ++attempt) {
    Poset p = poset(n);
    if (auto neg = find_involution(p, this)) {
      return std::make_shared<const DeMorganPoset>(std::move(p), std::move(*neg));
    }
  }
  throw Error(ErrorKind::kGiveUp, "no De Morgan poset of size " + std::to_string(n) + " after " +
                                      std::to_string(cfg_.retries + 1) + " attempts");
}

PartialUnaryOp Generator::op(const DeMorganPoset& a, bool fix_bounds) {
  PartialUnaryOp op(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    if (fix_bounds && (x == a.bottom() || x == a.top())) {
      op.set(x, x);
    } else if (chance(cfg_.domain_density)) {
      op.set(x, static_cast<Element>(below(a.size())));
    }
  }
  return op;
}

AlgebraPtr gen_demorgan(const GeneratorConfig& cfg) { return Generator(cfg).algebra(); }

std::optional<std::vector<Element>> find_involution(const Poset& p, Generator* gen) {
  std::optional<std::vector<Element>> found;
  InvolutionSearch(p, gen).run(0, [&](const std::vector<Element>& neg) {
    found = neg;
    return true;
  });
  return found;
}

std::vector<std::vector<Element>> all_involutions(const Poset& p) {
  std::vector<std::vector<Element>> out;
  InvolutionSearch(p, nullptr).run(0, [&](const std::vector<Element>& neg) {
    out.push_back(neg);
    return false;
  });
  return out;
}

std::string canonical_form(const DeMorganPoset& a) {
  const std::size_t n = a.size();
  std::vector<Element> inner;
  for (Element x = 0; x < n; ++x) {
    if (x != a.bottom() && x != a.top()) inner.push_back(x);
  }
  std::vector<Element> old(n);
  std::vector<Element> pos(n);
  std::string best;
  do {
    old[0] = a.bottom();
    old[n - 1] = a.top();
    for (std::size_t i = 0; i < inner.size(); ++i) old[i + 1] = inner[i];
    for (Element i = 0; i < n; ++i) pos[old[i]] = i;
    std::string code;
    code.reserve(n * n + n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) code += a.leq(old[i], old[j]) ? '1' : '0';
    }
    for (Element i = 0; i < n; ++i) code += static_cast<char>('A' + pos[a.neg(old[i])]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(inner.begin(), inner.end()));
  return best;
}

std::vector<AlgebraPtr> enumerate_demorgan_posets(std::size_t n) {
  if (n == 0) return {};
  if (n > 6) {
    throw Error(ErrorKind::kLimitExceeded,
                "exhaustive enumeration is capped at 6 elements, got " + std::to_string(n));
  }
  std::vector<AlgebraPtr> out;
  if (n <= 2) {
    Poset p = trivial_poset(n);
    std::vector<Element> neg = n == 1 ? std::vector<Element>{0} : std::vector<Element>{1, 0};
    out.push_back(std::make_shared<const DeMorganPoset>(std::move(p), std::move(neg)));
    return out;
  }
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::map<std::string, AlgebraPtr> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    StrictOrder lt(k, std::vector<bool>(k, false));
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) lt[slots[b].first][slots[b].second] = true;
    }
    bool order = true;
    for (std::size_t i = 0; i < k && order; ++i) {
      for (std::size_t j = 0; j < k && order; ++j) {
        if (!lt[i][j]) continue;
        if (lt[j][i]) order = false;
        for (std::size_t l = 0; l < k && order; ++l) {
          if (lt[j][l] && !lt[i][l]) order = false;
        }
      }
    }
    if (!order) continue;
    Poset p = bounded_from_strict(lt);
    for (auto& neg : all_involutions(p)) {
      auto a = std::make_shared<const DeMorganPoset>(p, std::move(neg));
      classes.emplace(canonical_form(*a), std::move(a));
    }
  }
  for (auto& [code, a] : classes) out.push_back(std::move(a));
  return out;
}

std::vector<AlgebraPtr> demorgan_posets_up_to(std::size_t max_n) {
  std::vector<AlgebraPtr> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_demorgan_posets(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<AlgebraPtr> random_population(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.min_size = 1;
  cfg.max_size = max_n;
  Generator gen(cfg);
  std::vector<AlgebraPtr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.algebra());
  return out;
}

void for_each_partial_op(const DeMorganPoset& a, bool fix_bounds,
                         const std::function<void(const PartialUnaryOp&)>& f) {
  const auto n = static_cast<Element>(a.size());
  std::vector<Element> free;
  for (Element x = 0; x < n; ++x) {
    if (!fix_bounds || (x != a.bottom() && x != a.top())) free.push_back(x);
  }
  PartialUnaryOp op(n);
  if (fix_bounds) {
    op.set(a.bottom(), a.bottom());
    op.set(a.top(), a.top());
  }
  // Digit value n means undefined.
  std::vector<Element> digit(free.size(), n);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (digit[i] == n) {
        op.erase(free[i]);
      } else {
        op.set(free[i], digit[i]);
      }
    }
    f(op);
    std::size_t i = 0;
    while (i < free.size()) {
      digit[i] = digit[i] == n ? 0 : digit[i] + 1;
      if (digit[i] != n) break;
      ++i;
    }
    if (i == free.size()) break;
  }
}

std::vector<TenseStructure> semi_tense_population(const std::vector<AlgebraPtr>& algebras,
                                                  std::size_t per_algebra) {
  std::vector<TenseStructure> out;
  for (const auto& a : algebras) {
    std::size_t taken = 0;
    const PartialUnaryOp id = PartialUnaryOp::identity(a->size());
    for_each_partial_op(*a, true, [&](const PartialUnaryOp& g) {
      if (taken >= per_algebra) return;
      TenseStructure s(a, g, id);
      if (check_axioms(s).side_semi_tense(Side::kG)) {
        out.push_back(std::move(s));
        ++taken;
      }
    });
  }
  return out;
}

std::vector<Frame> all_frames(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kEmptyFrame, "a frame needs a non-empty time scale");
  if (n > 4) throw Error(ErrorKind::kLimitExceeded, "frame enumeration is capped at 4 points");
  std::vector<Frame> out;
  const std::size_t bits = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Relation r(n);
    for (std::size_t b = 0; b < bits; ++b) {
      if (mask >> b & 1) r.add(static_cast<Element>(b / n), static_cast<Element>(b % n));
    }
    out.push_back(Frame::anonymous(std::move(r)));
  }
  return out;
}

TenseStructure harvest_substructure(const ProductStructure& ps, Element seed) {
  const DeMorganPoset& a = ps.structure.algebra();
  const PartialUnaryOp& g = ps.structure.G();
  const PartialUnaryOp& h = ps.structure.H();
  if (seed >= a.size()) throw Error(ErrorKind::kInvalidInput, "seed element out of range");
  Bitset in(a.size());
  std::vector<Element> work{a.bottom(), a.top(), seed};
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    if (in.test(x)) continue;
    in.set(x);
    work.push_back(a.neg(x));
    if (g.defined(x)) work.push_back(g(x));
    if (h.defined(x)) work.push_back(h(x));
  }
  std::vector<Element> members;
  in.for_each([&](std::size_t x) { members.push_back(static_cast<Element>(x)); });
  std::vector<Element> index(a.size(), kUnset);
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;

  const std::size_t k = members.size();
  std::vector<std::string> labels;
  BitMatrix down(k, k);
  std::vector<Element> neg(k);
  PartialUnaryOp sg(k);
  PartialUnaryOp sh(k);
  for (Element i = 0; i < k; ++i) {
    const Element x = members[i];
    labels.push_back(a.label(x));
    for (Element j = 0; j < k; ++j) {
      if (a.leq(members[j], x)) down.set(i, j);
    }
    neg[i] = index[a.neg(x)];
    if (g.defined(x)) sg.set(i, index[g(x)]);
    if (h.defined(x)) sh.set(i, index[h(x)]);
  }
  auto sub = std::make_shared<const DeMorganPoset>(
      Poset::from_down_rows(std::move(labels), std::move(down)), std::move(neg));
  return TenseStructure(std::move(sub), std::move(sg), std::move(sh));
}

std::vector<TenseStructure> harvested_population(std::size_t points) {
  FiniteLattice m2(m2_algebra());
  std::vector<TenseStructure> out;
  const auto frames = all_frames(points);
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const Frame& f = frames[fi];
    if (!is_serial(f.relation(), false) || !is_serial(f.relation(), true)) continue;
    ProductStructure ps = product_algebra(m2, f);
    std::set<std::vector<std::string>> seen;
    for (Element seed = 0; seed < ps.structure.algebra().size(); ++seed) {
      TenseStructure sub = harvest_substructure(ps, seed);
      if (seen.insert(sub.algebra().poset().labels()).second) out.push_back(std::move(sub));
    }
  }
  return out;
}

std::string summarize(const DeMorganPoset& a) {
  std::string covers;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (!a.poset().less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < a.size() && cover; ++z) {
        if (a.poset().less(x, z) && a.poset().less(z, y)) cover = false;
      }
      if (!cover) continue;
      if (!covers.empty()) covers += ' ';
      covers += a.label(x) + "<" + a.label(y);
    }
  }
  std::string neg;
  for (Element x = 0; x < a.size(); ++x) {
    if (a.neg(x) < x) continue;
    if (!neg.empty()) neg += ' ';
    neg += a.label(x) + ":" + a.label(a.neg(x));
  }
  return "n=" + std::to_string(a.size()) + " order[" + covers + "] neg[" + neg + "]";
}

std::string summarize(const TenseStructure& s) {
  return summarize(s.algebra()) + " G[" + element_list(s.algebra(), s.G()) + "] H[" +
         element_list(s.algebra(), s.H()) + "]";
}

// ---------------------------------------------------------------------------
// Property sweeps.

namespace {

using Witnesses = std::vector<std::string>;

void sweep_downset_duality(std::size_t max_n, Witnesses& out) {
  for (const auto& a : demorgan_posets_up_to(max_n)) {
    const auto downs = enumerate_down_sets(a->poset(), true);
    const std::set<DownSet> all(downs.begin(), downs.end());
    for (const auto& d : downs) {
      const std::string where = summarize(*a) + " D=" + format_set(a->poset(), d.members);
      const DownSet dd = d_partial(*a, d);
      if (!all.count(dd)) out.push_back(where + ": dual is not a proper down-set");
      if (d_partial(*a, dd) != d) out.push_back(where + ": dual is not an involution");
      for (Element x = 0; x < a->size(); ++x) {
        const bool dual_h = !two_valued(d, a->neg(x));
        if (dual_h != two_valued(dd, x)) {
          out.push_back(where + ": dual map differs from the dual down-set's map at " +
                        a->label(x));
        }
      }
      const KappaMorphism k = kappa(*a, d);
      if (auto defect = morphism_defect(*a, *m2_algebra(), k.as_map())) {
        out.push_back(where + ": kappa is not a morphism: " + *defect);
      }
    }
  }
}

void sweep_embedding(std::size_t max_n, Witnesses& out) {
  for (const auto& a : demorgan_posets_up_to(max_n)) {
    const Embedding e = embed(a);
    for (const auto& w : e.check.witnesses) out.push_back(summarize(*a) + ": " + w);
  }
}

void sweep_meet_identity(std::size_t max_n, Witnesses& out) {
  for (const auto& s : semi_tense_population(demorgan_posets_up_to(max_n))) {
    const TimeScale scale = time_scale(s.algebra_ptr());
    const Relation rg = induced_relation(s.algebra(), s.G(), scale);
    const PointwiseReport r = verify_pointwise(s.algebra(), s.G(), scale, rg);
    for (const auto& w : r.witnesses) out.push_back(summarize(s) + ": " + w);
  }
}

// Pairs (G, H) that are semi-tense on both sides; `total_only` restricts to
// total operators.
template <typename Visit>
void for_each_semi_tense_pair(const AlgebraPtr& a, bool total_only, Visit&& visit) {
  std::vector<PartialUnaryOp> g_ops;
  std::vector<PartialUnaryOp> h_ops;
  const PartialUnaryOp id = PartialUnaryOp::identity(a->size());
  for_each_partial_op(*a, true, [&](const PartialUnaryOp& op) {
    if (total_only && !op.is_total()) return;
    const AxiomReport r = check_axioms(TenseStructure(a, op, op));
    if (r.side_semi_tense(Side::kG)) g_ops.push_back(op);
    if (r.side_semi_tense(Side::kH)) h_ops.push_back(op);
  });
  for (const auto& g : g_ops) {
    for (const auto& h : h_ops) visit(TenseStructure(a, g, h));
  }
}

void check_representation(const TenseStructure& s, Witnesses& out) {
  try {
    const RepresentationResult r = verify_representation(s);
    if (r.success()) return;
    std::string why;
    for (const auto* list : {&r.embedding_check.witnesses, &r.pointwise.witnesses,
                             &r.g_square.witnesses, &r.h_square.witnesses,
                             &r.f_square.witnesses}) {
      if (!list->empty()) {
        why = list->front();
        break;
      }
    }
    if (why.empty()) why = "a frame relation is not serial";
    out.push_back(summarize(s) + ": " + why);
  } catch (const HypothesisFailed& e) {
    out.push_back(summarize(s) + ": " + e.what());
  }
}

void sweep_interrelation(std::size_t max_n, Witnesses& out) {
  for (const auto& a : demorgan_posets_up_to(max_n)) {
    for_each_semi_tense_pair(a, false, [&](const TenseStructure& s) {
      const AxiomReport r = check_axioms(s);
      if (!r.passes(Axiom::kP3)) return;
      const InterrelationReport ir = check_interrelation(s);
      if (!ir.condition_a || !ir.condition_b) return;
      if (!ir.inverse_equal) {
        out.push_back(summarize(s) + ": " + ir.inverse_witnesses.front());
        return;
      }
      check_representation(s, out);
    });
  }
}

void sweep_total_representation(std::size_t max_n, Witnesses& out) {
  for (const auto& a : demorgan_posets_up_to(max_n)) {
    for_each_semi_tense_pair(a, true, [&](const TenseStructure& s) {
      if (classify(s) == Classification::kDynamic) check_representation(s, out);
    });
  }
}

void sweep_frame_seriality(std::size_t max_n, Witnesses& out) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const Frame& f : all_frames(n)) {
      const FrameTheoremReport r = verify_frame_theorem(m2_algebra(), f);
      std::string rel;
      for (const auto& [s, t] : f.relation().pairs()) rel += " " + f.label(s) + "->" + f.label(t);
      const std::string where = "|T|=" + std::to_string(n) + " R[" + rel + " ]";
      if (!r.holds()) out.push_back(where + ": a seriality clause fails");
      if (!r.prediction_exact) out.push_back(where + ": seriality does not predict the class");
      if (!r.serial_forward && r.axioms.witnesses_for(Axiom::kP1, Side::kG).empty()) {
        out.push_back(where + ": no P1 witness for G");
      }
      if (!r.serial_backward && r.axioms.witnesses_for(Axiom::kP1, Side::kH).empty()) {
        out.push_back(where + ": no P1 witness for H");
      }
    }
  }
}

void sweep_semi_tense_is_tense(std::size_t max_n, Witnesses& out) {
  for (const auto& a : demorgan_posets_up_to(max_n)) {
    for_each_semi_tense_pair(a, false, [&](const TenseStructure& s) {
      const AxiomReport r = check_axioms(s);
      if (r.classification != Classification::kSemiTense) return;
      for (const auto& w : r.witnesses) {
        if (w.axiom == Axiom::kP3) {
          out.push_back(summarize(s) + ": P3 fails, " + w.detail);
          return;
        }
      }
    });
  }
}

struct PropertyEntry {
  std::string_view name;
  std::size_t cap;
  void (*run)(std::size_t, Witnesses&);
};

constexpr std::array<PropertyEntry, 7> kProperties{{
    {"downset-duality", 6, sweep_downset_duality},
    {"embedding", 6, sweep_embedding},
    {"meet-identity", 5, sweep_meet_identity},
    {"interrelation", 5, sweep_interrelation},
    {"total-representation", 6, sweep_total_representation},
    {"frame-seriality", 3, sweep_frame_seriality},
    {"semi-tense-implies-tense", 5, sweep_semi_tense_is_tense},
}};

}  // namespace

std::vector<std::string_view> sweep_properties() {
  std::vector<std::string_view> names;
  for (const auto& p : kProperties) names.push_back(p.name);
  return names;
}

std::vector<std::string> sweep_small(std::string_view property, std::size_t max_n) {
  for (const auto& p : kProperties) {
    if (p.name != property) continue;
    if (max_n > p.cap) {
      throw Error(ErrorKind::kLimitExceeded, std::string(property) + " sweeps are capped at n = " +
                                                 std::to_string(p.cap));
    }
    Witnesses out;
    p.run(max_n, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  throw Error(ErrorKind::kInvalidInput, "unknown property '" + std::string(property) + "'");
}

// ---------------------------------------------------------------------------
// Fixture hunting.

FixtureSpec parse_fixture_spec(std::string_view text) {
  FixtureSpec spec;
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::kInvalidInput, "bad fixture spec '" + std::string(text) + "': " + why);
  };
  auto axioms = [&](std::string_view item) {
    for (std::size_t i = 0; i < item.size(); i += 3) {
      if (i + 1 >= item.size() || item[i] != 'P' || item[i + 1] < '1' || item[i + 1] > '4') {
        throw bad("expected P1..P4");
      }
      if (i + 2 >= item.size() || (item[i + 2] != '+' && item[i + 2] != '-')) {
        throw bad("expected + or - after P" + std::string(1, item[i + 1]));
      }
      spec.axioms[item[i + 1] - '1'] = item[i + 2] == '+' ? Verdict::kPass : Verdict::kFail;
    }
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t next = rest.find(',');
    std::string_view item = rest.substr(0, next);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "total") {
      spec.require_total = true;
    } else if (auto c = parse_classification(item)) {
      spec.classification = c;
    } else if (!item.empty() && item.front() == 'P') {
      axioms(item);
    } else if (!item.empty()) {
      throw bad("unknown option '" + std::string(item) + "'");
    }
    rest = next == std::string_view::npos ? std::string_view() : rest.substr(next + 1);
  }
  return spec;
}

std::optional<TenseStructure> find_fixture(const FixtureSpec& spec) {
  std::uint64_t examined = 0;
  const bool fix_bounds = spec.axioms[0] == Verdict::kPass;
  auto matches = [&](const TenseStructure& s) {
    const AxiomReport r = check_axioms(s);
    for (Axiom ax : kAxioms) {
      const Verdict v = spec.axioms[static_cast<std::size_t>(ax)];
      if (v == Verdict::kPass && !r.passes(ax)) return false;
      if (v == Verdict::kFail && r.passes(ax)) return false;
    }
    if (spec.require_total && !(r.g_total && r.h_total)) return false;
    if (spec.classification && r.classification != *spec.classification) return false;
    return !spec.extra || spec.extra(s);
  };

  for (std::size_t n = std::max<std::size_t>(1, spec.min_n); n <= spec.max_n; ++n) {
    std::optional<TenseStructure> best;
    std::size_t best_dom = SIZE_MAX;
    for (const auto& a : enumerate_demorgan_posets(n)) {
      // Operators bucketed by domain size so pairs come in order of
      // |dom G| + |dom H|.
      std::vector<std::vector<PartialUnaryOp>> by_dom(n + 1);
      for_each_partial_op(*a, fix_bounds, [&](const PartialUnaryOp& op) {
        if (!spec.require_total || op.is_total()) by_dom[op.domain_size()].push_back(op);
      });
      for (std::size_t total = 0; total <= 2 * n && total < best_dom; ++total) {
        bool found = false;
        for (std::size_t dg = 0; dg <= std::min(total, n) && !found; ++dg) {
          const std::size_t dh = total - dg;
          if (dh > n) continue;
          for (const auto& g : by_dom[dg]) {
            for (const auto& h : by_dom[dh]) {
              if (++examined > spec.budget) return best;
              TenseStructure s(a, g, h);
              if (matches(s)) {
                best = std::move(s);
                best_dom = total;
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (found) break;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace dmrep
