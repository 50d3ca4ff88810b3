#include "dmrep/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace dmrep {

Bitset::Bitset(std::size_t size, std::span<const Word> words)
    : size_(size), words_(words.begin(), words.end()) {
  assert(words_.size() == kernels::words_for(size));
  clear_tail();
}

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
  b.clear_tail();
  return b;
}

void Bitset::clear_tail() {
  if (std::size_t rem = size_ % kernels::kWordBits; rem != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << rem) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
}

bool Bitset::intersects(const Bitset& other) const {
  assert(size_ == other.size_);
  return kernels::active().intersects(words_.data(), other.words_.data(), words_.size());
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(size_ == other.size_);
  kernels::active().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset out(*this);
  for (Word& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::strong_ordering canonical_compare(const Bitset& a, const Bitset& b) {
  assert(a.size_ == b.size_);
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

void BitMatrix::set_row(std::size_t r, const Bitset& bits) {
  assert(bits.size() == cols_);
  std::copy(bits.words().begin(), bits.words().end(), words_.begin() + r * stride_);
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    row(r).for_each([&](std::size_t c) { out.set(c, r); });
  }
  return out;
}

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace dmrep
