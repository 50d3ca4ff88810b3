#include "dmrep/dsl.hpp"

#include <set>

namespace dmrep::dsl {

namespace {

enum class Tok { kName, kLess, kSemi, kColon, kArrow };

struct Token {
  Tok kind;
  std::string text;
  std::size_t col;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::kName: return "a name";
    case Tok::kLess: return "'<'";
    case Tok::kSemi: return "';'";
    case Tok::kColon: return "':'";
    case Tok::kArrow: return "'->'";
  }
  return "?";
}

bool name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.';
}

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (name_char(c)) {
      const std::size_t start = i;
      while (i < line.size() && name_char(line[i])) ++i;
      out.push_back({Tok::kName, std::string(line.substr(start, i - start)), start + 1});
    } else if (c == '<') {
      out.push_back({Tok::kLess, "<", ++i});
    } else if (c == ';') {
      out.push_back({Tok::kSemi, ";", ++i});
    } else if (c == ':') {
      out.push_back({Tok::kColon, ":", ++i});
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", i + 1});
      i += 2;
    } else {
      throw ParseError(line_no, i + 1, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

class Parser {
 public:
  Document run(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      ++line_no;
      const std::size_t nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      line_ = line_no;
      toks_ = lex_line(line, line_no);
      pos_ = 0;
      end_col_ = line.size() + 1;
      if (!toks_.empty()) statement();
    }
    if (doc_.empty()) throw ParseError(1, 1, "no declarations");
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
    throw ParseError(line_, col, msg);
  }

  bool at_end() const { return pos_ >= toks_.size(); }
  std::size_t col() const { return at_end() ? end_col_ : toks_[pos_].col; }

  const Token& expect(Tok kind, std::string_view context) {
    if (at_end()) fail(col(), "expected " + std::string(describe(kind)) + " " + std::string(context));
    if (toks_[pos_].kind != kind) {
      fail(col(), "expected " + std::string(describe(kind)) + " " + std::string(context) +
                      ", found '" + toks_[pos_].text + "'");
    }
    return toks_[pos_++];
  }

  bool accept(Tok kind) {
    if (!at_end() && toks_[pos_].kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  void statement() {
    const Token& kw = expect(Tok::kName, "at the start of a line");
    const std::size_t kw_col = kw.col;
    const std::string word = kw.text;
    if (word == "poset") {
      const std::string name = expect(Tok::kName, "after 'poset'").text;
      for (const auto& a : doc_.algebras) {
        if (a.name == name) fail(kw_col, "poset '" + name + "' is declared twice");
      }
      doc_.algebras.push_back({name, {}, {}, {}, {}, {}});
      current_ = Context::kAlgebra;
      element_set_.clear();
    } else if (word == "frame") {
      const std::string name = expect(Tok::kName, "after 'frame'").text;
      for (const auto& f : doc_.frames) {
        if (f.name == name) fail(kw_col, "frame '" + name + "' is declared twice");
      }
      doc_.frames.push_back({name, {}, {}});
      current_ = Context::kFrame;
      point_set_.clear();
    } else if (word == "elements") {
      AlgebraDecl& a = algebra(kw_col, word);
      while (!at_end()) {
        const Token& t = expect(Tok::kName, "in element list");
        if (!element_set_.insert(t.text).second) fail(t.col, "duplicate element '" + t.text + "'");
        a.elements.push_back(t.text);
      }
    } else if (word == "order") {
      AlgebraDecl& a = algebra(kw_col, word);
      while (!at_end()) {
        std::string lhs = element("in order");
        expect(Tok::kLess, "after '" + lhs + "'");
        do {
          std::string rhs = element("after '<'");
          a.order.emplace_back(lhs, rhs);
          lhs = std::move(rhs);
        } while (accept(Tok::kLess));
        if (!at_end()) expect(Tok::kSemi, "between order chains");
      }
    } else if (word == "neg") {
      AlgebraDecl& a = algebra(kw_col, word);
      if (!a.neg) a.neg.emplace();
      pairs(*a.neg, "neg");
    } else if (word == "op") {
      AlgebraDecl& a = algebra(kw_col, word);
      const Token& which = expect(Tok::kName, "after 'op'");
      if (which.text != "G" && which.text != "H") {
        fail(which.col, "expected G or H after 'op', found '" + which.text + "'");
      }
      auto& slot = which.text == "G" ? a.g : a.h;
      if (!slot) slot.emplace();
      pairs(*slot, "op " + which.text);
    } else if (word == "points") {
      FrameDecl& f = frame(kw_col, word);
      while (!at_end()) {
        const Token& t = expect(Tok::kName, "in point list");
        if (!point_set_.insert(t.text).second) fail(t.col, "duplicate point '" + t.text + "'");
        f.points.push_back(t.text);
      }
    } else if (word == "rel") {
      FrameDecl& f = frame(kw_col, word);
      while (!at_end()) {
        std::string s = point("in rel");
        expect(Tok::kArrow, "after '" + s + "'");
        std::string t = point("after '->'");
        f.rel.emplace_back(std::move(s), std::move(t));
        if (!at_end()) expect(Tok::kSemi, "between rel pairs");
      }
    } else {
      fail(kw_col, "unknown keyword '" + word +
                       "' (expected poset, elements, order, neg, op, frame, points or rel)");
    }
    if (!at_end()) fail(col(), "unexpected '" + toks_[pos_].text + "'");
  }

  void pairs(std::vector<NamePair>& out, const std::string& context) {
    std::set<std::string> keys;
    for (const auto& [k, v] : out) keys.insert(k);
    while (!at_end()) {
      const std::size_t key_col = col();
      std::string k = element("in " + context);
      expect(Tok::kColon, "after '" + k + "'");
      std::string v = element("after ':'");
      if (context != "neg" && !keys.insert(k).second) {
        fail(key_col, context + " assigns '" + k + "' twice");
      }
      out.emplace_back(std::move(k), std::move(v));
    }
  }

  std::string element(std::string_view context) {
    const Token& t = expect(Tok::kName, context);
    if (!element_set_.count(t.text)) {
      fail(t.col, "unknown element '" + t.text + "' in poset '" + doc_.algebras.back().name + "'");
    }
    return t.text;
  }

  std::string point(std::string_view context) {
    const Token& t = expect(Tok::kName, context);
    if (!point_set_.count(t.text)) {
      fail(t.col, "unknown point '" + t.text + "' in frame '" + doc_.frames.back().name + "'");
    }
    return t.text;
  }

  AlgebraDecl& algebra(std::size_t col, const std::string& word) {
    if (current_ != Context::kAlgebra) fail(col, "'" + word + "' must follow a 'poset' line");
    return doc_.algebras.back();
  }

  FrameDecl& frame(std::size_t col, const std::string& word) {
    if (current_ != Context::kFrame) fail(col, "'" + word + "' must follow a 'frame' line");
    return doc_.frames.back();
  }

  enum class Context { kNone, kAlgebra, kFrame };

  Document doc_;
  Context current_ = Context::kNone;
  std::set<std::string> element_set_;
  std::set<std::string> point_set_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::size_t end_col_ = 1;
};

void print_pairs(std::string& out, const std::vector<NamePair>& pairs) {
  for (const auto& [k, v] : pairs) out += " " + k + ":" + v;
}

void print_chain(std::string& out, const std::vector<NamePair>& pairs, std::string_view sym) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += i ? " ; " : " ";
    out += pairs[i].first + " " + std::string(sym) + " " + pairs[i].second;
  }
}

PartialUnaryOp to_op(const Poset& p, const std::optional<std::vector<NamePair>>& pairs) {
  PartialUnaryOp op(p.size());
  if (!pairs) return op;
  for (const auto& [k, v] : *pairs) {
    auto x = p.find(k);
    auto y = p.find(v);
    if (!x || !y) throw Error(ErrorKind::kInvalidInput, "operator refers to an unknown element");
    op.set(*x, *y);
  }
  return op;
}

std::vector<NamePair> from_op(const DeMorganPoset& a, const PartialUnaryOp& op) {
  std::vector<NamePair> out;
  for (Element x = 0; x < a.size(); ++x) {
    if (op.defined(x)) out.emplace_back(a.label(x), a.label(op(x)));
  }
  return out;
}

}  // namespace

Document parse(std::string_view text) { return Parser().run(text); }

std::string print(const Document& d) {
  std::string out;
  for (const auto& a : d.algebras) {
    if (!out.empty()) out += '\n';
    out += "poset " + a.name + "\nelements";
    for (const auto& e : a.elements) out += " " + e;
    out += '\n';
    if (!a.order.empty()) {
      out += "order";
      print_chain(out, a.order, "<");
      out += '\n';
    }
    if (a.neg) {
      out += "neg";
      print_pairs(out, *a.neg);
      out += '\n';
    }
    if (a.g) {
      out += "op G";
      print_pairs(out, *a.g);
      out += '\n';
    }
    if (a.h) {
      out += "op H";
      print_pairs(out, *a.h);
      out += '\n';
    }
  }
  for (const auto& f : d.frames) {
    if (!out.empty()) out += '\n';
    out += "frame " + f.name + "\npoints";
    for (const auto& p : f.points) out += " " + p;
    out += '\n';
    if (!f.rel.empty()) {
      out += "rel";
      print_chain(out, f.rel, "->");
      out += '\n';
    }
  }
  return out;
}

Poset to_poset(const AlgebraDecl& decl) {
  if (decl.elements.empty()) {
    throw Error(ErrorKind::kInvalidInput, "poset '" + decl.name + "' has no elements");
  }
  return Poset::build(decl.elements, decl.order);
}

AlgebraPtr to_algebra(const AlgebraDecl& decl) {
  if (!decl.neg) throw Error(ErrorKind::kInvalidInput, "poset '" + decl.name + "' declares no neg");
  return std::make_shared<const DeMorganPoset>(validate_demorgan(to_poset(decl), *decl.neg));
}

TenseStructure to_structure(const AlgebraDecl& decl) {
  AlgebraPtr a = to_algebra(decl);
  PartialUnaryOp g = to_op(a->poset(), decl.g);
  PartialUnaryOp h = to_op(a->poset(), decl.h);
  return TenseStructure(std::move(a), std::move(g), std::move(h));
}

Frame to_frame(const FrameDecl& decl) {
  Relation r(decl.points.size());
  std::vector<std::string> names = decl.points;
  for (const auto& [s, t] : decl.rel) {
    Element si = 0;
    Element ti = 0;
    bool fs = false;
    bool ft = false;
    for (Element i = 0; i < names.size(); ++i) {
      if (names[i] == s) si = i, fs = true;
      if (names[i] == t) ti = i, ft = true;
    }
    if (!fs || !ft) throw Error(ErrorKind::kInvalidInput, "rel refers to an unknown point");
    r.add(si, ti);
  }
  return Frame(std::move(names), std::move(r));
}

AlgebraDecl from_algebra(std::string name, const DeMorganPoset& a) {
  AlgebraDecl d;
  d.name = std::move(name);
  d.elements = a.poset().labels();
  const Poset& p = a.poset();
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < a.size() && cover; ++z) cover = !(p.less(x, z) && p.less(z, y));
      if (cover) d.order.emplace_back(a.label(x), a.label(y));
    }
  }
  d.neg.emplace();
  for (Element x = 0; x < a.size(); ++x) {
    if (a.neg(x) >= x) d.neg->emplace_back(a.label(x), a.label(a.neg(x)));
  }
  return d;
}

AlgebraDecl from_structure(std::string name, const TenseStructure& s) {
  AlgebraDecl d = from_algebra(std::move(name), s.algebra());
  d.g = from_op(s.algebra(), s.G());
  d.h = from_op(s.algebra(), s.H());
  return d;
}

}  // namespace dmrep::dsl
