#pragma once

// Fixture loaders and brute-force oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dmrep/dsl.hpp"
#include "dmrep/representation.hpp"

namespace testing {

using namespace dmrep;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_text(const std::string& name) {
  return read_file(std::string(DMREP_FIXTURE_DIR) + "/" + name);
}

inline dsl::Document fixture(const std::string& name) { return dsl::parse(fixture_text(name)); }

inline AlgebraPtr fixture_algebra(const std::string& name) {
  return dsl::to_algebra(fixture(name).algebras.front());
}

inline TenseStructure fixture_structure(const std::string& name) {
  return dsl::to_structure(fixture(name).algebras.front());
}

inline AlgebraPtr fig1() { return fixture_algebra("m6.dmp"); }

/// 0 < x1 < ... < 1 with neg reversing the chain.
inline AlgebraPtr chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "0" : i + 1 == n ? "1" : "x" + std::to_string(i));
  std::vector<NamePair> order;
  for (std::size_t i = 0; i + 1 < n; ++i) order.emplace_back(labels[i], labels[i + 1]);
  std::vector<Element> neg(n);
  for (Element i = 0; i < n; ++i) neg[i] = static_cast<Element>(n - 1 - i);
  return std::make_shared<const DeMorganPoset>(Poset::build(labels, order), neg);
}

/// Down-closed subsets by scanning every subset mask. Masks come out in
/// numeric order, which is the canonical order.
inline std::vector<std::uint64_t> brute_down_sets(const Poset& p, bool proper) {
  std::vector<std::uint64_t> out;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (Element y = 0; y < n && closed; ++y) {
        if (p.leq(y, x) && !(mask >> y & 1)) closed = false;
      }
    }
    if (!closed) continue;
    if (proper && (!(mask >> p.bottom() & 1) || (mask >> p.top() & 1))) continue;
    out.push_back(mask);
  }
  return out;
}

inline std::uint64_t mask_of(const Bitset& b) {
  std::uint64_t m = 0;
  b.for_each([&](std::size_t i) { m |= std::uint64_t{1} << i; });
  return m;
}

/// R_op straight from its definition.
inline Relation brute_relation(const DeMorganPoset& a, const PartialUnaryOp& op,
                               const TimeScale& scale) {
  Relation r(scale.size());
  for (Element s = 0; s < scale.size(); ++s) {
    for (Element t = 0; t < scale.size(); ++t) {
      bool ok = true;
      for (Element x = 0; x < a.size() && ok; ++x) {
        if (op.defined(x) && !scale.value(s, op(x)).leq(scale.value(t, x))) ok = false;
      }
      if (ok) r.add(s, t);
    }
  }
  return r;
}

}  // namespace testing

#include "dmrep/search.hpp"

namespace testing {

/// A fixed mixed population: every algebra up to five elements plus forty
/// random ones up to eight.
inline std::vector<dmrep::AlgebraPtr> random_algebras_for_tests() {
  auto out = dmrep::demorgan_posets_up_to(5);
  const auto extra = dmrep::random_population(99, 40, 8);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

inline std::string random_name(dmrep::Generator& gen) {
  static constexpr std::string_view kChars =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.";
  std::string out;
  const std::size_t len = 1 + gen.below(6);
  for (std::size_t i = 0; i < len; ++i) out.push_back(kChars[gen.below(kChars.size())]);
  return out;
}

inline dsl::FrameDecl random_frame(dmrep::Generator& gen, std::size_t index) {
  dsl::FrameDecl f;
  f.name = "f" + std::to_string(index);
  const std::size_t n = 1 + gen.below(5);
  while (f.points.size() < n) {
    std::string p = random_name(gen);
    if (std::find(f.points.begin(), f.points.end(), p) == f.points.end()) f.points.push_back(p);
  }
  for (const auto& s : f.points) {
    for (const auto& t : f.points) {
      if (gen.chance(0.3)) f.rel.emplace_back(s, t);
    }
  }
  return f;
}

/// Mixed algebra and frame declarations for round-trip checks.
inline dsl::Document random_document(dmrep::Generator& gen) {
  dsl::Document doc;
  const std::size_t algebras = gen.below(3);
  for (std::size_t i = 0; i < algebras; ++i) {
    const dmrep::AlgebraPtr a = gen.algebra();
    dsl::AlgebraDecl d =
        dsl::from_structure("alg" + std::to_string(i), dmrep::TenseStructure(a, gen.op(*a, false), gen.op(*a, true)));
    if (gen.chance(0.2)) d.h.reset();
    if (gen.chance(0.2)) d.g.reset();
    if (gen.chance(0.1)) d.neg.reset();
    doc.algebras.push_back(std::move(d));
  }
  const std::size_t frames = (doc.algebras.empty() ? 1 : 0) + gen.below(2);
  for (std::size_t i = 0; i < frames; ++i) doc.frames.push_back(random_frame(gen, i));
  return doc;
}

}  // namespace testing
