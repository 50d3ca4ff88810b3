#pragma once

// Word-level bit kernels behind every set, relation and M2-plane operation.
//
// Two tables exist: a portable scalar one and an AVX2 one (x86-64 only,
// compiled with -mavx2 in its own translation unit). The active table is
// picked once at startup from the CPU features; DMREP_ISA=scalar in the
// environment, or select(), pins it. Both tables must produce bit-identical
// results; tests/test_kernels.cpp checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dmrep::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

enum class Isa { kScalar, kAvx2 };

struct Table {
  Isa isa;

  // a ⊆ b over `words` words.
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  // a ∩ b ≠ ∅.
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  // dst |= src; returns true when dst changed.
  bool (*or_into)(Word* dst, const Word* src, std::size_t words);

  // rows is a row-major matrix of n_rows rows, `words` words each.
  // Bit r of out is set iff row r ⊆ v. out holds ceil(n_rows/64) words.
  void (*rows_subset_of)(const Word* rows, std::size_t n_rows,
                         std::size_t words, const Word* v, Word* out);
  // Bit r of out is set iff row r ∩ v ≠ ∅.
  void (*rows_intersecting)(const Word* rows, std::size_t n_rows,
                            std::size_t words, const Word* v, Word* out);

  // Paired subset scan used to build induced relations.
  // lhs_a, lhs_b: `words` words each. rhs_c, rhs_d: word-major columns,
  // word w of column t lives at [w * n_cols + t].
  // Bit t of out is set iff lhs_a ⊆ rhs_c[t] and lhs_b ⊆ rhs_d[t].
  void (*paired_subset_scan)(const Word* lhs_a, const Word* lhs_b,
                             const Word* rhs_c, const Word* rhs_d,
                             std::size_t n_cols, std::size_t words, Word* out);
};

const Table& scalar_table();

// nullptr when the AVX2 table was not compiled in or the CPU lacks AVX2.
const Table* avx2_table();

// Tables usable on this machine, scalar first.
std::vector<const Table*> available_tables();

const Table& active();
Isa detected_isa();
// Throws std::invalid_argument when the requested table is unavailable.
void select(Isa isa);

std::string_view isa_name(Isa isa);

inline std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace dmrep::kernels
