#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dmrep/bitset.hpp"
#include "dmrep/kernels.hpp"

using namespace dmrep;
using kernels::Table;
using kernels::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < density; ++i) w &= rng();
  }
  return v;
}

// Reference answers computed bit by bit.
bool ref_subset(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t i = 0; i < a.size() * 64; ++i) {
    if ((a[i / 64] >> (i % 64) & 1) && !(b[i / 64] >> (i % 64) & 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every available table matches the bitwise reference") {
  std::mt19937_64 rng(7);
  for (const Table* t : kernels::available_tables()) {
    CAPTURE(kernels::isa_name(t->isa));
    for (std::size_t words : {1u, 2u, 3u, 4u, 5u, 9u}) {
      for (int trial = 0; trial < 200; ++trial) {
        auto a = random_words(rng, words, trial % 3);
        auto b = random_words(rng, words, 0);
        if (trial % 4 == 0) {
          for (std::size_t i = 0; i < words; ++i) b[i] |= a[i];
        }
        CHECK(t->is_subset(a.data(), b.data(), words) == ref_subset(a, b));
        bool meet = false;
        for (std::size_t i = 0; i < words; ++i) meet = meet || (a[i] & b[i]);
        CHECK(t->intersects(a.data(), b.data(), words) == meet);
        auto dst = a;
        bool changed = t->or_into(dst.data(), b.data(), words);
        for (std::size_t i = 0; i < words; ++i) CHECK(dst[i] == (a[i] | b[i]));
        CHECK(changed == (dst != a));
      }
    }
  }
}

TEST_CASE("row scans and paired scans agree across tables") {
  std::mt19937_64 rng(11);
  const auto tables = kernels::available_tables();
  for (std::size_t n_rows : {1u, 3u, 4u, 7u, 64u, 65u, 130u}) {
    for (std::size_t words : {1u, 2u, 3u}) {
      const auto rows = random_words(rng, n_rows * words, 1);
      auto v = random_words(rng, words, 0);
      std::vector<std::vector<Word>> subset_out;
      std::vector<std::vector<Word>> meet_out;
      for (const Table* t : tables) {
        std::vector<Word> o1(kernels::words_for(n_rows), 0xdeadbeef);
        std::vector<Word> o2(kernels::words_for(n_rows), 0xdeadbeef);
        t->rows_subset_of(rows.data(), n_rows, words, v.data(), o1.data());
        t->rows_intersecting(rows.data(), n_rows, words, v.data(), o2.data());
        for (std::size_t r = 0; r < n_rows; ++r) {
          std::vector<Word> row(rows.begin() + r * words, rows.begin() + (r + 1) * words);
          CHECK(bool(o1[r / 64] >> (r % 64) & 1) == ref_subset(row, v));
        }
        subset_out.push_back(o1);
        meet_out.push_back(o2);
      }
      for (std::size_t i = 1; i < tables.size(); ++i) {
        CHECK(subset_out[i] == subset_out[0]);
        CHECK(meet_out[i] == meet_out[0]);
      }

      const std::size_t n_cols = n_rows;
      const auto la = random_words(rng, words, 2);
      const auto lb = random_words(rng, words, 2);
      auto rc = random_words(rng, words * n_cols, 0);
      auto rd = random_words(rng, words * n_cols, 0);
      for (std::size_t t = 0; t < n_cols; t += 2) {
        for (std::size_t w = 0; w < words; ++w) {
          rc[w * n_cols + t] |= la[w];
          rd[w * n_cols + t] |= lb[w];
        }
      }
      std::vector<std::vector<Word>> scans;
      for (const Table* t : tables) {
        std::vector<Word> out(kernels::words_for(n_cols), 0xfeed);
        t->paired_subset_scan(la.data(), lb.data(), rc.data(), rd.data(), n_cols, words, out.data());
        for (std::size_t c = 0; c < n_cols; ++c) {
          std::vector<Word> col_c(words);
          std::vector<Word> col_d(words);
          for (std::size_t w = 0; w < words; ++w) {
            col_c[w] = rc[w * n_cols + c];
            col_d[w] = rd[w * n_cols + c];
          }
          const bool expect = ref_subset(la, col_c) && ref_subset(lb, col_d);
          CHECK(bool(out[c / 64] >> (c % 64) & 1) == expect);
          if (c % 2 == 0) CHECK(expect);
        }
        scans.push_back(out);
      }
      for (std::size_t i = 1; i < tables.size(); ++i) CHECK(scans[i] == scans[0]);
    }
  }
}

TEST_CASE("selection switches the active table") {
  const auto before = kernels::active().isa;
  kernels::select(kernels::Isa::kScalar);
  CHECK(kernels::active().isa == kernels::Isa::kScalar);
  if (kernels::avx2_table() != nullptr) {
    kernels::select(kernels::Isa::kAvx2);
    CHECK(kernels::active().isa == kernels::Isa::kAvx2);
  } else {
    CHECK_THROWS_AS(kernels::select(kernels::Isa::kAvx2), std::invalid_argument);
  }
  kernels::select(before);
}

TEST_CASE("bitset basics") {
  Bitset a(70);
  a.set(0);
  a.set(69);
  CHECK(a.count() == 2);
  CHECK(a.complement().count() == 68);
  CHECK(a.complement().complement() == a);
  Bitset b = Bitset::full(70);
  CHECK(a.is_subset_of(b));
  CHECK(!b.is_subset_of(a));
  CHECK(a.intersects(b));
  CHECK(a.indices() == std::vector<std::size_t>{0, 69});

  Bitset low(70);
  low.set(5);
  Bitset high(70);
  high.set(64);
  CHECK(canonical_compare(low, high) == std::strong_ordering::less);

  BitMatrix m(3, 70);
  m.set(0, 69);
  m.set(2, 1);
  const BitMatrix t = m.transposed();
  CHECK(t.rows() == 70);
  CHECK(t.test(69, 0));
  CHECK(t.test(1, 2));
  CHECK(t.count() == 2);
  CHECK(t.transposed() == m);
}
