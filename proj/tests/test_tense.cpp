#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace testing;

namespace {

// The guarded quantifiers spelled out one by one, sharing nothing with
// check_axioms.
std::array<bool, 8> literal_axioms(const TenseStructure& s) {
  const auto& a = s.algebra();
  const std::size_t n = a.size();
  const Element z = a.bottom(), u = a.top();
  std::array<bool, 8> holds;
  holds.fill(true);
  auto slot = [](Axiom ax, Side side) {
    return static_cast<std::size_t>(ax) * 2 + static_cast<std::size_t>(side);
  };
  for (Side side : kSides) {
    const PartialUnaryOp& op = side == Side::kG ? s.G() : s.H();
    const PartialUnaryOp& other = side == Side::kG ? s.H() : s.G();
    if (!op.defined(z) || !op.defined(u) || op(z) != z || op(u) != u) {
      holds[slot(Axiom::kP1, side)] = false;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!a.leq(x, y)) continue;
        if (op.defined(x) && op.defined(y) && !a.leq(op(x), op(y))) {
          holds[slot(Axiom::kP2, side)] = false;
        }
        if (op.defined(x) && op.defined(a.neg(y)) && !a.leq(op(x), a.neg(op(a.neg(y))))) {
          holds[slot(Axiom::kP4, side)] = false;
        }
      }
      if (!other.defined(a.neg(x))) continue;
      const Element px = a.neg(other(a.neg(x)));
      if (op.defined(px) && !a.leq(x, op(px))) holds[slot(Axiom::kP3, side)] = false;
    }
  }
  return holds;
}

Classification literal_class(const TenseStructure& s, const std::array<bool, 8>& h) {
  const bool all = std::all_of(h.begin(), h.end(), [](bool b) { return b; });
  const bool semi = h[0] && h[1] && h[2] && h[3] && h[6] && h[7];
  if (all && s.G().is_total() && s.H().is_total()) return Classification::kDynamic;
  if (all) return Classification::kPartialDynamic;
  if (semi) return Classification::kSemiTense;
  return Classification::kNone;
}

std::vector<TenseStructure> random_structures(std::uint64_t seed, std::size_t count) {
  Generator gen(GeneratorConfig{.seed = seed, .max_size = 8});
  std::vector<TenseStructure> out;
  while (out.size() < count) {
    AlgebraPtr a = gen.algebra();
    const bool fix = gen.chance(0.5);
    PartialUnaryOp g = gen.op(*a, fix);
    PartialUnaryOp h = gen.op(*a, fix);
    out.emplace_back(a, std::move(g), std::move(h));
  }
  return out;
}

PartialUnaryOp from_pairs(const DeMorganPoset& a,
                          std::initializer_list<std::pair<const char*, const char*>> pairs) {
  PartialUnaryOp op(a.size());
  for (const auto& [x, y] : pairs) op.set(*a.poset().find(x), *a.poset().find(y));
  return op;
}

}  // namespace

TEST_CASE("identity operators on the six element algebra are dynamic") {
  const TenseStructure s = fixture_structure("m6_id.dmp");
  const AxiomReport r = check_axioms(s);
  for (Axiom ax : kAxioms) CHECK(r.passes(ax));
  CHECK(r.witnesses.empty());
  CHECK(r.classification == Classification::kDynamic);
  CHECK(derive_dual(s, DualOf::kF) == PartialUnaryOp::identity(6));
  CHECK(derive_dual(s, DualOf::kP) == PartialUnaryOp::identity(6));
}

TEST_CASE("identity on M2 is dynamic") {
  const TenseStructure s(m2_algebra(), PartialUnaryOp::identity(4), PartialUnaryOp::identity(4));
  CHECK(classify(s) == Classification::kDynamic);
  CHECK(classify(fixture_structure("m2_id.dmp")) == Classification::kDynamic);
}

TEST_CASE("dual of the bounds-only operator") {
  const AlgebraPtr a = fig1();
  const PartialUnaryOp g = from_pairs(*a, {{"0", "0"}, {"1", "1"}});
  const TenseStructure s(a, g, g);
  const PartialUnaryOp f = derive_dual(s, DualOf::kF);
  CHECK(f.domain_size() == 2);
  CHECK(f(a->bottom()) == a->bottom());
  CHECK(f(a->top()) == a->top());
  CHECK(classify(s) == Classification::kPartialDynamic);
}

TEST_CASE("P1 failures carry the offending element") {
  const AlgebraPtr a = fig1();
  PartialUnaryOp g = PartialUnaryOp::identity(6);
  g.set(a->bottom(), a->top());
  const AxiomReport r = check_axioms(TenseStructure(a, g, PartialUnaryOp::identity(6)));
  REQUIRE_FALSE(r.passes(Axiom::kP1, Side::kG));
  CHECK(r.passes(Axiom::kP1, Side::kH));
  const auto w = r.witnesses_for(Axiom::kP1, Side::kG);
  REQUIRE(w.size() == 1);
  CHECK(w[0].x == a->bottom());

  const AlgebraPtr c2 = chain(2);
  const PartialUnaryOp g2 = from_pairs(*c2, {{"0", "0"}, {"1", "0"}});
  const AxiomReport r2 = check_axioms(TenseStructure(c2, g2, g2));
  const auto w2 = r2.witnesses_for(Axiom::kP1, Side::kG);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].x == c2->top());
}

TEST_CASE("empty domains fail P1") {
  const AlgebraPtr a = chain(3);
  const TenseStructure s(a, PartialUnaryOp(3), PartialUnaryOp(3));
  const AxiomReport r = check_axioms(s);
  CHECK_FALSE(r.passes(Axiom::kP1, Side::kG));
  CHECK_FALSE(r.passes(Axiom::kP1, Side::kH));
  CHECK(r.passes(Axiom::kP2));
  CHECK(r.passes(Axiom::kP3));
  CHECK(r.passes(Axiom::kP4));
  CHECK(r.classification == Classification::kNone);
}

TEST_CASE("shipped semi-tense fixture fails only P3, at m") {
  const TenseStructure s = fixture_structure("chain3_semi.dmp");
  const AxiomReport r = check_axioms(s);
  CHECK(r.classification == Classification::kSemiTense);
  CHECK(r.passes(Axiom::kP1));
  CHECK(r.passes(Axiom::kP2));
  CHECK(r.passes(Axiom::kP4));
  const auto w = r.witnesses_for(Axiom::kP3, Side::kG);
  REQUIRE(w.size() == 1);
  CHECK(s.algebra().label(w[0].x) == "m");
  CHECK(r.passes(Axiom::kP3, Side::kH));
}

TEST_CASE("searched fixtures: semi-tense and none") {
  // P3 only fails: the smallest hit is the shipped chain3_semi fixture.
  auto semi = find_fixture(parse_fixture_spec("P1+P2+P3-P4+"));
  REQUIRE(semi.has_value());
  CHECK(semi->algebra().size() == 3);
  CHECK(classify(*semi) == Classification::kSemiTense);
  // Same operators as the shipped fixture, whose middle element is named m.
  const TenseStructure shipped = fixture_structure("chain3_semi.dmp");
  CHECK(semi->G() == shipped.G());
  CHECK(semi->H() == shipped.H());

  auto mono = find_fixture(parse_fixture_spec("P1+P2-"));
  REQUIRE(mono.has_value());
  CHECK(classify(*mono) == Classification::kNone);
  CHECK_FALSE(check_axioms(*mono).passes(Axiom::kP2));
}

TEST_CASE("check_axioms agrees with the literal restatement") {
  std::size_t checked = 0;
  std::array<std::size_t, 4> seen{};
  for (const auto& s : random_structures(11, 600)) {
    const auto expected = literal_axioms(s);
    const AxiomReport r = check_axioms(s);
    INFO(summarize(s));
    CHECK(r.holds == expected);
    CHECK(r.classification == literal_class(s, expected));
    for (Side side : kSides) {
      for (Axiom ax : kAxioms) {
        CHECK(r.passes(ax, side) == r.witnesses_for(ax, side).empty());
      }
    }
    ++seen[static_cast<std::size_t>(r.classification)];
    ++checked;
  }
  CHECK(checked == 600);
  // Every label shows up so the comparison is not vacuous.
  for (std::size_t c : seen) CHECK(c > 0);
}

TEST_CASE("exhaustive agreement on the 3-chain and M2") {
  for (const AlgebraPtr& a : {chain(3), m2_algebra()}) {
    std::vector<PartialUnaryOp> ops;
    for_each_partial_op(*a, false, [&](const PartialUnaryOp& op) { ops.push_back(op); });
    for (std::size_t i = 0; i < ops.size(); i += 7) {
      for (std::size_t j = 0; j < ops.size(); j += 5) {
        const TenseStructure s(a, ops[i], ops[j]);
        const auto expected = literal_axioms(s);
        REQUIRE(check_axioms(s).holds == expected);
      }
    }
  }
}

TEST_CASE("dynamic never comes with witnesses") {
  for (const auto& s : random_structures(12, 400)) {
    const AxiomReport r = check_axioms(s);
    if (r.classification == Classification::kDynamic) CHECK(r.witnesses.empty());
    if (!r.witnesses.empty()) CHECK(r.classification != Classification::kDynamic);
  }
}

TEST_CASE("classification is stable under recomputing the duals") {
  for (const auto& s : random_structures(13, 200)) {
    const TenseStructure again(s.algebra_ptr(), s.G(), s.H());
    CHECK(again.F() == derive_dual(s, DualOf::kF));
    CHECK(again.P() == derive_dual(s, DualOf::kP));
    CHECK(dual_op(s.algebra(), s.F()) == s.G());
    CHECK(classify(again) == classify(s));
  }
}

TEST_CASE("identity is a dynamic morphism") {
  for (const auto& s : random_structures(14, 200)) {
    std::vector<Element> id(s.algebra().size());
    std::iota(id.begin(), id.end(), Element{0});
    const MorphismCheck m = check_dynamic_morphism(id, s, s);
    CHECK(m.ok);
    CHECK(m.witnesses.empty());
  }
}

TEST_CASE("morphism from the 2-chain into M2 that breaks the G square") {
  const AlgebraPtr c2 = chain(2);
  const PartialUnaryOp g1 = from_pairs(*c2, {{"0", "0"}, {"1", "0"}});
  const TenseStructure s1(c2, g1, PartialUnaryOp::identity(2));
  const TenseStructure s2(m2_algebra(), PartialUnaryOp::identity(4), PartialUnaryOp::identity(4));
  const std::vector<Element> f{0, 3};
  const MorphismCheck m = check_dynamic_morphism(f, s1, s2);
  CHECK_FALSE(m.ok);
  REQUIRE(m.witnesses.size() == 1);
  CHECK(m.witnesses[0] == "f(G1(1)) = 00 but G2(f(1)) = 11");

  // Undefined target values are failures too.
  const TenseStructure s3(m2_algebra(), PartialUnaryOp(4), PartialUnaryOp::identity(4));
  const MorphismCheck u = check_dynamic_morphism(f, TenseStructure(c2, PartialUnaryOp::identity(2),
                                                                   PartialUnaryOp::identity(2)),
                                                 s3);
  CHECK_FALSE(u.ok);
  CHECK(u.witnesses.size() == 2);

  const std::vector<Element> not_morphism{0, 1};
  CHECK_THROWS_AS(check_dynamic_morphism(not_morphism, s1, s2), Error);
}

TEST_CASE("mismatched operator sizes are rejected") {
  CHECK_THROWS_AS(TenseStructure(chain(3), PartialUnaryOp(2), PartialUnaryOp(3)), Error);
}

TEST_CASE("classification names round trip") {
  for (auto c : {Classification::kNone, Classification::kSemiTense,
                 Classification::kPartialDynamic, Classification::kDynamic}) {
    CHECK(parse_classification(to_string(c)) == c);
  }
  CHECK(to_string(Classification::kPartialDynamic) == "partial-dynamic");
  CHECK_FALSE(parse_classification("tense").has_value());
}
