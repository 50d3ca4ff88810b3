#include "dmrep/tense.hpp"

#include <sstream>

namespace dmrep {

PartialUnaryOp PartialUnaryOp::identity(std::size_t n) {
  PartialUnaryOp op(n);
  for (Element x = 0; x < n; ++x) op.set(x, x);
  return op;
}

PartialUnaryOp PartialUnaryOp::total(std::span<const Element> values) {
  PartialUnaryOp op(values.size());
  for (Element x = 0; x < values.size(); ++x) op.set(x, values[x]);
  return op;
}

bool PartialUnaryOp::is_total() const { return domain_size() == size(); }

std::size_t PartialUnaryOp::domain_size() const {
  std::size_t n = 0;
  for (const auto& v : values_) n += v.has_value() ? 1 : 0;
  return n;
}

Bitset PartialUnaryOp::domain() const {
  Bitset d(size());
  for (Element x = 0; x < size(); ++x) {
    if (defined(x)) d.set(x);
  }
  return d;
}

PartialUnaryOp dual_op(const DeMorganPoset& a, const PartialUnaryOp& op) {
  return PartialUnaryOp(dual_partial_map(a, a, op.values()));
}

TenseStructure::TenseStructure(AlgebraPtr algebra, PartialUnaryOp g, PartialUnaryOp h)
    : algebra_(std::move(algebra)), g_(std::move(g)), h_(std::move(h)) {
  if (!algebra_) throw Error(ErrorKind::kInvalidInput, "tense structure without an algebra");
  const std::size_t n = algebra_->size();
  for (const PartialUnaryOp* op : {&g_, &h_}) {
    if (op->size() != n) throw Error(ErrorKind::kInvalidInput, "operator size does not match the algebra");
    for (const auto& v : op->values()) {
      if (v && *v >= n) throw Error(ErrorKind::kInvalidInput, "operator value out of range");
    }
  }
  f_ = dual_op(*algebra_, g_);
  p_ = dual_op(*algebra_, h_);
}

PartialUnaryOp derive_dual(const TenseStructure& s, DualOf which) {
  return dual_op(s.algebra(), which == DualOf::kF ? s.G() : s.H());
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::kP1: return "P1";
    case Axiom::kP2: return "P2";
    case Axiom::kP3: return "P3";
    case Axiom::kP4: return "P4";
  }
  return "?";
}

std::string_view to_string(Side s) { return s == Side::kG ? "G" : "H"; }

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kNone: return "none";
    case Classification::kSemiTense: return "semi-tense";
    case Classification::kPartialDynamic: return "partial-dynamic";
    case Classification::kDynamic: return "dynamic";
  }
  return "?";
}

std::optional<Classification> parse_classification(std::string_view text) {
  for (auto c : {Classification::kNone, Classification::kSemiTense,
                 Classification::kPartialDynamic, Classification::kDynamic}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::vector<AxiomWitness> AxiomReport::witnesses_for(Axiom a, Side s) const {
  std::vector<AxiomWitness> out;
  for (const auto& w : witnesses) {
    if (w.axiom == a && w.side == s) out.push_back(w);
  }
  return out;
}

namespace {

class AxiomChecker {
 public:
  AxiomChecker(const TenseStructure& s, AxiomReport& report)
      : a_(s.algebra()), s_(s), report_(report) {}

  void run() {
    for (Side side : kSides) {
      const PartialUnaryOp& op = side == Side::kG ? s_.G() : s_.H();
      const PartialUnaryOp& other = side == Side::kG ? s_.H() : s_.G();
      p1(side, op);
      p2(side, op);
      p3(side, op, other);
      p4(side, op);
    }
  }

 private:
  const std::string& L(Element x) const { return a_.label(x); }
  std::string name(Side s) const { return std::string(to_string(s)); }

  void fail(Axiom axiom, Side side, Element x, std::optional<Element> y, std::string detail) {
    report_.holds[static_cast<std::size_t>(axiom) * 2 + static_cast<std::size_t>(side)] = false;
    report_.witnesses.push_back({axiom, side, x, y, std::move(detail)});
  }

  // op(0) = 0 and op(1) = 1.
  void p1(Side side, const PartialUnaryOp& op) {
    for (Element c : {a_.bottom(), a_.top()}) {
      if (!op.defined(c)) {
        fail(Axiom::kP1, side, c, std::nullopt, name(side) + "(" + L(c) + ") is undefined");
      } else if (op(c) != c) {
        fail(Axiom::kP1, side, c, std::nullopt,
             name(side) + "(" + L(c) + ") = " + L(op(c)) + ", expected " + L(c));
      }
    }
  }

  // x <= y implies op(x) <= op(y) where both exist.
  void p2(Side side, const PartialUnaryOp& op) {
    for (Element x = 0; x < a_.size(); ++x) {
      if (!op.defined(x)) continue;
      a_.poset().up(x).for_each([&](std::size_t yy) {
        const auto y = static_cast<Element>(yy);
        if (op.defined(y) && !a_.leq(op(x), op(y))) {
          fail(Axiom::kP2, side, x, y,
               L(x) + " <= " + L(y) + " but " + name(side) + "(" + L(x) + ") = " + L(op(x)) +
                   " is not below " + name(side) + "(" + L(y) + ") = " + L(op(y)));
        }
      });
    }
  }

  // G side: x <= G(H(x')') whenever H(x') and G(H(x')') exist.
  // H side: x <= H(G(x')') whenever G(x') and H(G(x')') exist.
  void p3(Side side, const PartialUnaryOp& op, const PartialUnaryOp& other) {
    const std::string inner = side == Side::kG ? "P" : "F";
    for (Element x = 0; x < a_.size(); ++x) {
      const Element xn = a_.neg(x);
      if (!other.defined(xn)) continue;
      const Element dual = a_.neg(other(xn));
      if (!op.defined(dual)) continue;
      if (!a_.leq(x, op(dual))) {
        fail(Axiom::kP3, side, x, std::nullopt,
             L(x) + " is not below " + name(side) + inner + "(" + L(x) + ") = " +
                 name(side) + "(" + L(dual) + ") = " + L(op(dual)));
      }
    }
  }

  // x <= y implies op(x) <= op(y')' whenever op(x) and op(y') exist.
  void p4(Side side, const PartialUnaryOp& op) {
    const std::string dual = side == Side::kG ? "F" : "P";
    for (Element x = 0; x < a_.size(); ++x) {
      if (!op.defined(x)) continue;
      a_.poset().up(x).for_each([&](std::size_t yy) {
        const auto y = static_cast<Element>(yy);
        const Element yn = a_.neg(y);
        if (!op.defined(yn)) return;
        const Element rhs = a_.neg(op(yn));
        if (!a_.leq(op(x), rhs)) {
          fail(Axiom::kP4, side, x, y,
               L(x) + " <= " + L(y) + " but " + name(side) + "(" + L(x) + ") = " + L(op(x)) +
                   " is not below " + dual + "(" + L(y) + ") = " + L(rhs));
        }
      });
    }
  }

  const DeMorganPoset& a_;
  const TenseStructure& s_;
  AxiomReport& report_;
};

}  // namespace

AxiomReport check_axioms(const TenseStructure& s) {
  AxiomReport report;
  report.holds.fill(true);
  AxiomChecker(s, report).run();
  report.g_total = s.G().is_total();
  report.h_total = s.H().is_total();
  const bool semi = report.passes(Axiom::kP1) && report.passes(Axiom::kP2) &&
                    report.passes(Axiom::kP4);
  if (semi && report.passes(Axiom::kP3)) {
    report.classification = report.g_total && report.h_total ? Classification::kDynamic
                                                              : Classification::kPartialDynamic;
  } else if (semi) {
    report.classification = Classification::kSemiTense;
  }
  return report;
}

Classification classify(const TenseStructure& s) { return check_axioms(s).classification; }

MorphismCheck check_dynamic_morphism(std::span<const Element> f, const TenseStructure& s1,
                                     const TenseStructure& s2) {
  if (auto defect = morphism_defect(s1.algebra(), s2.algebra(), f)) {
    throw Error(ErrorKind::kInvalidInput, "not a De Morgan morphism: " + *defect);
  }
  MorphismCheck check;
  const auto& a1 = s1.algebra();
  const auto& a2 = s2.algebra();
  auto square = [&](const PartialUnaryOp& op1, const PartialUnaryOp& op2, std::string_view name) {
    for (Element a = 0; a < a1.size(); ++a) {
      if (!op1.defined(a)) continue;
      std::ostringstream os;
      if (!op2.defined(f[a])) {
        os << name << "2(f(" << a1.label(a) << ")) = " << name << "2(" << a2.label(f[a])
           << ") is undefined";
      } else if (f[op1(a)] != op2(f[a])) {
        os << "f(" << name << "1(" << a1.label(a) << ")) = " << a2.label(f[op1(a)]) << " but "
           << name << "2(f(" << a1.label(a) << ")) = " << a2.label(op2(f[a]));
      } else {
        continue;
      }
      check.ok = false;
      check.witnesses.push_back(os.str());
    }
  };
  square(s1.G(), s2.G(), "G");
  square(s1.H(), s2.H(), "H");
  return check;
}

}  // namespace dmrep
