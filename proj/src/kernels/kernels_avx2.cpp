#include "dmrep/kernels.hpp"

#include <immintrin.h>

#include <cstring>

namespace dmrep::kernels {
namespace {

inline __m256i load4(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// 4-bit mask, bit i set iff 64-bit lane i of x is zero.
inline unsigned zero_lanes(__m256i x) {
  __m256i eq = _mm256_cmpeq_epi64(x, _mm256_setzero_si256());
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
}

inline void put_bits(Word* out, std::size_t first, unsigned mask4) {
  out[first / kWordBits] |= Word{mask4} << (first % kWordBits);
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    if (!_mm256_testc_si256(load4(b + w), load4(a + w))) return false;
  }
  for (; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    if (!_mm256_testz_si256(load4(a + w), load4(b + w))) return true;
  }
  for (; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

bool or_into(Word* dst, const Word* src, std::size_t words) {
  __m256i changed = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i d = load4(dst + w);
    __m256i next = _mm256_or_si256(d, load4(src + w));
    changed = _mm256_or_si256(changed, _mm256_xor_si256(next, d));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), next);
  }
  Word tail = 0;
  for (; w < words; ++w) {
    Word next = dst[w] | src[w];
    tail |= next ^ dst[w];
    dst[w] = next;
  }
  return tail != 0 || !_mm256_testz_si256(changed, changed);
}

void rows_subset_of(const Word* rows, std::size_t n_rows, std::size_t words,
                    const Word* v, Word* out) {
  std::memset(out, 0, words_for(n_rows) * sizeof(Word));
  std::size_t r = 0;
  if (words == 1) {
    // Single-word rows: four rows per vector.
    const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(v[0]));
    for (; r + 4 <= n_rows; r += 4) {
      put_bits(out, r, zero_lanes(_mm256_andnot_si256(vb, load4(rows + r))));
    }
  }
  for (; r < n_rows; ++r) {
    if (is_subset(rows + r * words, v, words)) {
      out[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
  }
}

void rows_intersecting(const Word* rows, std::size_t n_rows, std::size_t words,
                       const Word* v, Word* out) {
  std::memset(out, 0, words_for(n_rows) * sizeof(Word));
  std::size_t r = 0;
  if (words == 1) {
    const __m256i vb = _mm256_set1_epi64x(static_cast<long long>(v[0]));
    for (; r + 4 <= n_rows; r += 4) {
      unsigned empty = zero_lanes(_mm256_and_si256(vb, load4(rows + r)));
      put_bits(out, r, ~empty & 0xFu);
    }
  }
  for (; r < n_rows; ++r) {
    if (intersects(rows + r * words, v, words)) {
      out[r / kWordBits] |= Word{1} << (r % kWordBits);
    }
  }
}

void paired_subset_scan(const Word* lhs_a, const Word* lhs_b,
                        const Word* rhs_c, const Word* rhs_d,
                        std::size_t n_cols, std::size_t words, Word* out) {
  std::memset(out, 0, words_for(n_cols) * sizeof(Word));
  std::size_t t = 0;
  for (; t + 4 <= n_cols; t += 4) {
    __m256i miss = _mm256_setzero_si256();
    for (std::size_t w = 0; w < words; ++w) {
      const __m256i a = _mm256_set1_epi64x(static_cast<long long>(lhs_a[w]));
      const __m256i b = _mm256_set1_epi64x(static_cast<long long>(lhs_b[w]));
      miss = _mm256_or_si256(miss,
                             _mm256_andnot_si256(load4(rhs_c + w * n_cols + t), a));
      miss = _mm256_or_si256(miss,
                             _mm256_andnot_si256(load4(rhs_d + w * n_cols + t), b));
    }
    put_bits(out, t, zero_lanes(miss));
  }
  for (; t < n_cols; ++t) {
    Word miss = 0;
    for (std::size_t w = 0; w < words; ++w) {
      miss |= lhs_a[w] & ~rhs_c[w * n_cols + t];
      miss |= lhs_b[w] & ~rhs_d[w * n_cols + t];
    }
    if (miss == 0) out[t / kWordBits] |= Word{1} << (t % kWordBits);
  }
}

constexpr Table kAvx2{Isa::kAvx2, is_subset,         intersects,
                      or_into,    rows_subset_of,    rows_intersecting,
                      paired_subset_scan};

}  // namespace

const Table* avx2_table_compiled() { return &kAvx2; }

}  // namespace dmrep::kernels
