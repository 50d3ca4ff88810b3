#pragma once

// Line-oriented fixture format.
//
//   # comment
//   poset NAME
//   elements 0 a b 1
//   order 0 < a < 1 ; 0 < b < 1
//   neg 0:1 a:b
//   op G 0:0 1:1 a:a        (elements left out are undefined)
//   op H 0:0 1:1
//   frame NAME
//   points t1 t2
//   rel t1 -> t2 ; t2 -> t1
//
// Names are runs of [A-Za-z0-9_.]. LF and CRLF line ends are accepted.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmrep/frame.hpp"

namespace dmrep::dsl {

struct AlgebraDecl {
  std::string name;
  std::vector<std::string> elements;
  /// (x, y) reads x < y.
  std::vector<NamePair> order;
  std::optional<std::vector<NamePair>> neg;
  std::optional<std::vector<NamePair>> g;
  std::optional<std::vector<NamePair>> h;

  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct FrameDecl {
  std::string name;
  std::vector<std::string> points;
  std::vector<NamePair> rel;

  friend bool operator==(const FrameDecl&, const FrameDecl&) = default;
};

struct Document {
  std::vector<AlgebraDecl> algebras;
  std::vector<FrameDecl> frames;

  bool empty() const { return algebras.empty() && frames.empty(); }
  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError (line and column are 1-based).
Document parse(std::string_view text);
/// Canonical text; parse(print(d)) == d.
std::string print(const Document& d);

Poset to_poset(const AlgebraDecl& decl);
/// Throws kInvalidInput without a neg line, DeMorganError on bad negation.
AlgebraPtr to_algebra(const AlgebraDecl& decl);
/// Missing op lines give operators with empty domains.
TenseStructure to_structure(const AlgebraDecl& decl);
Frame to_frame(const FrameDecl& decl);

/// Declaration listing the cover pairs of the order.
AlgebraDecl from_algebra(std::string name, const DeMorganPoset& a);
AlgebraDecl from_structure(std::string name, const TenseStructure& s);

}  // namespace dmrep::dsl
