#include "dmrep/kernels.hpp"

#include <cstring>

namespace dmrep::kernels {
namespace {

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

bool or_into(Word* dst, const Word* src, std::size_t words) {
  Word changed = 0;
  for (std::size_t w = 0; w < words; ++w) {
    Word next = dst[w] | src[w];
    changed |= next ^ dst[w];
    dst[w] = next;
  }
  return changed != 0;
}

void rows_subset_of(const Word* rows, std::size_t n_rows, std::size_t words,
                    const Word* v, Word* out) {
  std::memset(out, 0, words_for(n_rows) * sizeof(Word));
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (is_subset(rows + r * words, v, words)) {
      out[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
  }
}

void rows_intersecting(const Word* rows, std::size_t n_rows, std::size_t words,
                       const Word* v, Word* out) {
  std::memset(out, 0, words_for(n_rows) * sizeof(Word));
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (intersects(rows + r * words, v, words)) {
      out[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
  }
}

void paired_subset_scan(const Word* lhs_a, const Word* lhs_b,
                        const Word* rhs_c, const Word* rhs_d,
                        std::size_t n_cols, std::size_t words, Word* out) {
  std::memset(out, 0, words_for(n_cols) * sizeof(Word));
  for (std::size_t t = 0; t < n_cols; ++t) {
    Word miss = 0;
    for (std::size_t w = 0; w < words; ++w) {
      miss |= lhs_a[w] & ~rhs_c[w * n_cols + t];
      miss |= lhs_b[w] & ~rhs_d[w * n_cols + t];
    }
    if (miss == 0) out[t / kWordBits] |= Word{1} << (t % kWordBits);
  }
}

constexpr Table kScalar{Isa::kScalar, is_subset,         intersects,
                        or_into,      rows_subset_of,    rows_intersecting,
                        paired_subset_scan};

}  // namespace

const Table& scalar_table() { return kScalar; }

}  // namespace dmrep::kernels
