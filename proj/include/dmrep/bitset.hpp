#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dmrep/kernels.hpp"

namespace dmrep {

using kernels::Word;

/// Fixed-size dynamic bitset. Bits past size() are always zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_(kernels::words_for(size), 0) {}
  Bitset(std::size_t size, std::span<const Word> words);

  static Bitset full(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const {
    return (words_[i / kernels::kWordBits] >> (i % kernels::kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    words_[i / kernels::kWordBits] |= Word{1} << (i % kernels::kWordBits);
  }
  void set(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }
  void reset(std::size_t i) {
    words_[i / kernels::kWordBits] &= ~(Word{1} << (i % kernels::kWordBits));
  }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& subtract(const Bitset& other);
  Bitset complement() const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// Canonical order: compares the characteristic vectors as binary numbers
  /// with element i weighted 2^i.
  friend std::strong_ordering canonical_compare(const Bitset& a, const Bitset& b);

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(w * kernels::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const;

 private:
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Square or rectangular bit matrix stored row-major and contiguously, so
/// whole-matrix kernels can scan it.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(kernels::words_for(cols)),
        words_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  const Word* data() const { return words_.data(); }

  bool test(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / kernels::kWordBits] >> (c % kernels::kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / kernels::kWordBits] |= Word{1} << (c % kernels::kWordBits);
  }
  void reset(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / kernels::kWordBits] &= ~(Word{1} << (c % kernels::kWordBits));
  }

  std::span<const Word> row_words(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<Word> row_words(std::size_t r) {
    return {words_.data() + r * stride_, stride_};
  }
  Bitset row(std::size_t r) const { return Bitset(cols_, row_words(r)); }
  void set_row(std::size_t r, const Bitset& bits);

  BitMatrix transposed() const;
  std::size_t count() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

}  // namespace dmrep
