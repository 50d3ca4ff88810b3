#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

using namespace testing;

namespace {

// Isomorphism classes of De Morgan posets on n points, from scratch: every
// relation, every involution, minimum encoding over all relabelings. Each
// poset has a linear extension, so relations with i <= j only suffice.
std::size_t brute_demorgan_count(std::size_t n) {
  const std::size_t free_bits = n * (n - 1) / 2;
  std::vector<std::size_t> perm(n);
  std::set<std::vector<int>> classes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << free_bits); ++code) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    std::uint64_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      le[i][i] = true;
      for (std::size_t j = i + 1; j < n; ++j) le[i][j] = (code >> bit++) & 1;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && le[i][j] && le[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (le[i][j] && le[j][k] && !le[i][k]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::size_t bottoms = 0, tops = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool is_bottom = true, is_top = true;
      for (std::size_t j = 0; j < n; ++j) {
        is_bottom = is_bottom && le[i][j];
        is_top = is_top && le[j][i];
      }
      bottoms += is_bottom;
      tops += is_top;
    }
    if (bottoms != 1 || tops != 1) continue;
    std::vector<std::size_t> neg(n);
    std::iota(neg.begin(), neg.end(), 0);
    do {
      bool dm = true;
      for (std::size_t i = 0; i < n && dm; ++i) {
        if (neg[neg[i]] != i) dm = false;
        for (std::size_t j = 0; j < n && dm; ++j) {
          if (le[i][j] && !le[neg[j]][neg[i]]) dm = false;
        }
      }
      if (!dm) continue;
      std::vector<int> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        // perm maps old index -> new index.
        std::vector<int> enc(n * n + n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) enc[perm[i] * n + perm[j]] = le[i][j];
          enc[n * n + perm[i]] = static_cast<int>(perm[neg[i]]);
        }
        if (best.empty() || enc < best) best = enc;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    } while (std::next_permutation(neg.begin(), neg.end()));
  }
  return classes.size();
}

// The same algebra with its elements stored in another order.
AlgebraPtr shuffled(const DeMorganPoset& a, Generator& gen) {
  const std::size_t n = a.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[gen.below(i)]);
  std::vector<std::string> labels;
  std::vector<Element> where(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(a.label(order[i]));
    where[order[i]] = static_cast<Element>(i);
  }
  std::vector<NamePair> pairs;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.poset().less(x, y)) pairs.emplace_back(a.label(x), a.label(y));
    }
  }
  std::vector<Element> neg(n);
  for (Element x = 0; x < n; ++x) neg[where[x]] = where[a.neg(x)];
  return std::make_shared<const DeMorganPoset>(Poset::build(labels, pairs), neg);
}

}  // namespace

TEST_CASE("brute-force oracle sanity") {
  CHECK(brute_demorgan_count(1) == 1);
  CHECK(brute_demorgan_count(2) == 1);
  CHECK(brute_demorgan_count(3) == 1);
  // 4-chain, and the diamond with swapped or fixed atoms.
  CHECK(brute_demorgan_count(4) == 3);
}

TEST_CASE("enumeration counts match the oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    INFO("n = ", n);
    const auto all = enumerate_demorgan_posets(n);
    CHECK(all.size() == brute_demorgan_count(n));
    std::set<std::string> forms;
    for (const auto& a : all) {
      CHECK(a->size() == n);
      CHECK(demorgan_violations(a->poset(), a->neg_table()).empty());
      forms.insert(canonical_form(*a));
    }
    CHECK(forms.size() == all.size());
  }
  CHECK(demorgan_posets_up_to(4).size() == 6);
  CHECK_THROWS_AS(enumerate_demorgan_posets(7), Error);
}

TEST_CASE("canonical form ignores storage order") {
  Generator gen(GeneratorConfig{.seed = 31});
  for (const auto& a : random_algebras_for_tests()) {
    CHECK(canonical_form(*shuffled(*a, gen)) == canonical_form(*a));
  }
  CHECK(canonical_form(*chain(4)) != canonical_form(*m2_algebra()));
}

TEST_CASE("generator is deterministic per seed") {
  auto draw = [](std::uint64_t seed) {
    Generator gen(GeneratorConfig{.seed = seed});
    std::vector<std::string> out;
    for (int i = 0; i < 30; ++i) {
      const AlgebraPtr a = gen.algebra();
      out.push_back(summarize(TenseStructure(a, gen.op(*a, true), gen.op(*a, false))));
    }
    return out;
  };
  CHECK(draw(5) == draw(5));
  CHECK(draw(5) != draw(6));
  CHECK(random_population(8, 20, 7).size() == 20);
  auto p1 = random_population(8, 20, 7), p2 = random_population(8, 20, 7);
  for (std::size_t i = 0; i < p1.size(); ++i) CHECK(*p1[i] == *p2[i]);
}

TEST_CASE("bounded draws are uniform enough") {
  Generator gen(GeneratorConfig{.seed = 32});
  std::array<int, 6> counts{};
  for (int i = 0; i < 60000; ++i) ++counts[gen.below(6)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("generated algebras are valid and sized as asked") {
  Generator gen(GeneratorConfig{.seed = 33, .min_size = 3, .max_size = 9});
  for (int i = 0; i < 200; ++i) {
    const AlgebraPtr a = gen.algebra();
    CHECK(a->size() >= 3);
    CHECK(a->size() <= 9);
    CHECK(demorgan_violations(a->poset(), a->neg_table()).empty());
    CHECK(a->poset().labels() == generated_labels(a->size()));
  }
  CHECK(gen.algebra(1)->size() == 1);
  CHECK(gen.algebra(2)->size() == 2);
  CHECK(generated_labels(1) == std::vector<std::string>{"0"});
  CHECK(generated_labels(4) == std::vector<std::string>{"0", "a", "b", "1"});
}

TEST_CASE("random operators honour fix_bounds") {
  Generator gen(GeneratorConfig{.seed = 34});
  for (int i = 0; i < 100; ++i) {
    const AlgebraPtr a = gen.algebra();
    const PartialUnaryOp op = gen.op(*a, true);
    REQUIRE(op.defined(a->bottom()));
    REQUIRE(op.defined(a->top()));
    CHECK(op(a->bottom()) == a->bottom());
    CHECK(op(a->top()) == a->top());
  }
}

TEST_CASE("involution search") {
  for (const auto& a : random_algebras_for_tests()) {
    const auto all = all_involutions(a->poset());
    CHECK_FALSE(all.empty());
    for (const auto& neg : all) CHECK(demorgan_violations(a->poset(), neg).empty());
    const auto one = find_involution(a->poset());
    REQUIRE(one.has_value());
    CHECK(std::find(all.begin(), all.end(), *one) != all.end());
  }
  // The diamond admits the swap and the identity on its atoms.
  CHECK(all_involutions(m2_algebra()->poset()).size() == 2);
  // A 3-chain beside a single atom: only c <-> a with b fixed works.
  const std::vector<NamePair> pairs{{"0", "a"}, {"a", "c"}, {"0", "b"}, {"c", "1"}, {"b", "1"}};
  const Poset lopsided = Poset::build({"0", "a", "b", "c", "1"}, pairs);
  CHECK(all_involutions(lopsided) == std::vector<std::vector<Element>>{{4, 3, 2, 1, 0}});
  // An atom with a cover above it next to a bare atom has no involution.
  const std::vector<NamePair> uneven{{"0", "a"}, {"a", "c"}, {"0", "b"}, {"c", "1"},
                                     {"b", "1"}, {"b", "c"}};
  CHECK(all_involutions(Poset::build({"0", "a", "b", "c", "1"}, uneven)).empty());
}

TEST_CASE("partial operator enumeration") {
  std::size_t all = 0, fixed = 0;
  for_each_partial_op(*chain(3), false, [&](const PartialUnaryOp&) { ++all; });
  for_each_partial_op(*chain(3), true, [&](const PartialUnaryOp& op) {
    ++fixed;
    CHECK(op(0) == 0);
    CHECK(op(2) == 2);
  });
  CHECK(all == 64);
  CHECK(fixed == 4);
  std::set<PartialMap> seen;
  for_each_partial_op(*m2_algebra(), false, [&](const PartialUnaryOp& op) { seen.insert(op.values()); });
  CHECK(seen.size() == 625);
}

TEST_CASE("semi-tense population") {
  const auto pop = semi_tense_population(demorgan_posets_up_to(4), 5);
  CHECK(pop.size() >= 20);
  for (const auto& s : pop) {
    CHECK(check_axioms(s).side_semi_tense(Side::kG));
    CHECK(s.H() == PartialUnaryOp::identity(s.algebra().size()));
  }
}

TEST_CASE("frame enumeration") {
  CHECK(all_frames(1).size() == 2);
  CHECK(all_frames(2).size() == 16);
  CHECK(all_frames(3).size() == 512);
  CHECK_THROWS_AS(all_frames(5), Error);
}

TEST_CASE("harvested substructures are closed and dynamic") {
  const auto pop = harvested_population(2);
  CHECK(pop.size() >= 10);
  for (const auto& s : pop) {
    CHECK(classify(s) == Classification::kDynamic);
    CHECK(s.algebra().size() <= 16);
  }
}

TEST_CASE("fixture spec parsing") {
  const FixtureSpec s = parse_fixture_spec("P1+P2+P3-P4+,total,dynamic");
  CHECK(s.axioms[0] == Verdict::kPass);
  CHECK(s.axioms[2] == Verdict::kFail);
  CHECK(s.require_total);
  CHECK(s.classification == Classification::kDynamic);
  const FixtureSpec partial = parse_fixture_spec("P3-");
  CHECK(partial.axioms[0] == Verdict::kAny);
  CHECK(partial.axioms[2] == Verdict::kFail);
  CHECK_FALSE(partial.require_total);
  CHECK_THROWS_AS(parse_fixture_spec("P5+"), Error);
  CHECK_THROWS_AS(parse_fixture_spec("P1"), Error);
  CHECK_THROWS_AS(parse_fixture_spec("P1+P2"), Error);
  CHECK_THROWS_AS(parse_fixture_spec("P1+,sometimes"), Error);
}

TEST_CASE("fixture search finds minimal matches") {
  const auto dyn = find_fixture(parse_fixture_spec("total,dynamic"));
  REQUIRE(dyn.has_value());
  CHECK(dyn->algebra().size() == 2);
  CHECK(classify(*dyn) == Classification::kDynamic);

  const auto semi = find_fixture(parse_fixture_spec("P3-,semi-tense"));
  REQUIRE(semi.has_value());
  CHECK(classify(*semi) == Classification::kSemiTense);

  FixtureSpec custom = parse_fixture_spec("P1+P2+P3+P4+");
  custom.extra = [](const TenseStructure& s) { return !s.G().is_total(); };
  const auto part = find_fixture(custom);
  REQUIRE(part.has_value());
  CHECK(classify(*part) == Classification::kPartialDynamic);

  FixtureSpec impossible = parse_fixture_spec("P1+P2+P3+P4+,semi-tense");
  impossible.max_n = 3;
  CHECK_FALSE(find_fixture(impossible).has_value());

  FixtureSpec starved = parse_fixture_spec("P3-");
  starved.budget = 0;
  CHECK_FALSE(find_fixture(starved).has_value());
}

TEST_CASE("property sweeps hold on small instances") {
  for (std::string_view property : sweep_properties()) {
    INFO(std::string(property));
    const auto found = sweep_small(property, property == "frame-seriality" ? 3 : 4);
    // The one deliberately false property must produce counterexamples.
    CHECK(found.empty() == (property != "semi-tense-implies-tense"));
  }
  CHECK_THROWS_AS(sweep_small("no-such-property", 3), Error);
  CHECK_THROWS_AS(sweep_small("frame-seriality", 4), Error);
}
