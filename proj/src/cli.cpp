#include "dmrep/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dmrep/dsl.hpp"
#include "dmrep/representation.hpp"
#include "dmrep/search.hpp"

namespace dmrep::cli {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kOk: return "ok";
    case Status::kParseError: return "parse-error";
    case Status::kInputError: return "input-error";
    case Status::kLimitExceeded: return "limit-exceeded";
  }
  return "?";
}

void Report::verdict(std::string name, bool pass, std::vector<std::string> witnesses) {
  if (!pass && witnesses.empty()) witnesses.push_back("no detail available");
  verdicts.push_back({std::move(name), pass, std::move(witnesses)});
}

int exit_code(const Report& r) {
  switch (r.status) {
    case Status::kParseError:
    case Status::kInputError: return 2;
    case Status::kLimitExceeded: return 3;
    case Status::kOk: break;
  }
  for (const auto& v : r.verdicts) {
    if (!v.pass) return 1;
  }
  return 0;
}

namespace {

void render_value(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) {
      if (item.is_structured() && !item.empty()) {
        os << pad << k << ":\n";
        render_value(os, item, indent + 1);
      } else {
        os << pad << k << ": " << (item.is_string() ? item.get<std::string>() : item.dump())
           << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_object()) {
        os << pad << "-\n";
        render_value(os, item, indent + 1);
      } else {
        os << pad << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
      }
    }
  } else {
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string render_human(const Report& r, std::size_t witness_max) {
  std::ostringstream os;
  if (r.status != Status::kOk) {
    os << "error (" << to_string(r.status) << "): " << r.message << '\n';
    return os.str();
  }
  for (const auto& s : r.summary) os << s << '\n';
  for (const auto& v : r.verdicts) {
    os << (v.pass ? "PASS " : "FAIL ") << v.name << '\n';
    const std::size_t shown = std::min(witness_max, v.witnesses.size());
    for (std::size_t i = 0; i < shown; ++i) os << "  witness: " << v.witnesses[i] << '\n';
    if (shown < v.witnesses.size()) os << "  ... " << v.witnesses.size() - shown << " more\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (!r.data.empty()) render_value(os, r.data, 0);
  return os.str();
}

json render_json(const Report& r, std::size_t witness_max) {
  json out;
  out["command"] = r.command;
  out["status"] = to_string(r.status);
  out["exit_code"] = exit_code(r);
  if (!r.message.empty()) out["message"] = r.message;
  out["summary"] = r.summary;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json item{{"name", v.name}, {"pass", v.pass}};
    const std::size_t shown = std::min(witness_max, v.witnesses.size());
    item["witnesses"] = std::vector<std::string>(v.witnesses.begin(), v.witnesses.begin() + shown);
    if (shown < v.witnesses.size()) item["witnesses_omitted"] = v.witnesses.size() - shown;
    verdicts.push_back(std::move(item));
  }
  out["verdicts"] = std::move(verdicts);
  out["notes"] = r.notes;
  out["data"] = r.data;
  json timings = json::object();
  for (const auto& [k, ms] : r.timings_ms) timings[k] = ms;
  out["timings_ms"] = std::move(timings);
  return out;
}

// ---------------------------------------------------------------------------
// Commands.

namespace {

Limits limits_for(const Options& opt, bool product) {
  Limits l;
  if (opt.limit) {
    if (product) {
      l.product_elements = *opt.limit;
    } else {
      l.down_set_elements = *opt.limit;
    }
  }
  return l;
}

void cmd_validate(const dsl::Document& doc, Report& r) {
  for (const auto& decl : doc.algebras) {
    const std::string prefix = decl.name + ": ";
    std::optional<Poset> parsed;
    try {
      parsed = dsl::to_poset(decl);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInvalidInput) throw;
      r.verdict(prefix + "bounded poset", false, {e.what()});
      continue;
    }
    const Poset& p = *parsed;
    r.verdict(prefix + "bounded poset", true);
    json info{{"elements", p.size()}, {"lattice", is_lattice(p)}};
    if (!decl.neg) {
      r.notes.push_back(prefix + "no neg line, De Morgan laws not checked");
      r.data[decl.name] = std::move(info);
      continue;
    }
    const NegationTable table = resolve_negation(p, *decl.neg);
    std::vector<std::string> witnesses;
    for (const auto& c : table.conflicts) witnesses.push_back(c.describe(p, table.neg));
    for (const auto& v : demorgan_violations(p, table.neg)) {
      witnesses.push_back(v.describe(p, table.neg));
    }
    r.verdict(prefix + "De Morgan negation", witnesses.empty(), witnesses);
    json neg = json::object();
    for (Element x = 0; x < p.size(); ++x) neg[p.label(x)] = p.label(table.neg[x]);
    info["neg"] = std::move(neg);
    r.summary.push_back(decl.name + ": " + (witnesses.empty() ? "De Morgan poset" : "not De Morgan") +
                        ", " + (is_lattice(p) ? "lattice" : "not a lattice"));
    r.data[decl.name] = std::move(info);
  }
  for (const auto& decl : doc.frames) {
    try {
      const Frame f = dsl::to_frame(decl);
      r.verdict(decl.name + ": frame", true);
      r.data[decl.name] = json{{"points", f.size()},
                               {"serial", is_serial(f.relation(), false)},
                               {"inverse_serial", is_serial(f.relation(), true)}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmptyFrame) throw;
      r.verdict(decl.name + ": frame", false, {e.what()});
    }
  }
}

void cmd_downsets(const dsl::Document& doc, const Options& opt, Report& r) {
  const Limits limits = limits_for(opt, false);
  for (const auto& decl : doc.algebras) {
    const Poset p = dsl::to_poset(decl);
    const auto all = enumerate_down_sets(p, false, limits.down_set_elements);
    const auto proper = enumerate_down_sets(p, true, limits.down_set_elements);
    json list = json::array();
    for (const auto& d : proper) list.push_back(format_set(p, d.members));
    r.summary.push_back(decl.name + ": " + std::to_string(proper.size()) + " proper down-sets (" +
                        std::to_string(all.size()) + " down-sets in all)");
    r.data[decl.name] = json{{"down_sets", all.size()}, {"proper", std::move(list)}};
  }
}

void cmd_timescale(const dsl::Document& doc, const Options& opt, Report& r) {
  const Limits limits = limits_for(opt, false);
  for (const auto& decl : doc.algebras) {
    const AlgebraPtr a = dsl::to_algebra(decl);
    const TimeScale scale = time_scale(a, limits);
    if (scale.size() == 0) r.notes.push_back(decl.name + ": empty time scale");
    json points = json::array();
    for (Element s = 0; s < scale.size(); ++s) {
      const KappaMorphism& k = scale.points[s];
      json values = json::object();
      for (Element x = 0; x < a->size(); ++x) values[a->label(x)] = std::string(k(x).label());
      points.push_back(json{{"down_set", format_set(a->poset(), k.downset().members)},
                            {"dual", format_set(a->poset(), k.dual_downset().members)},
                            {"values", std::move(values)}});
    }
    r.verdict(decl.name + ": every point is a De Morgan morphism", true);
    r.summary.push_back(decl.name + ": " + std::to_string(scale.size()) + " points");
    r.data[decl.name] = json{{"points", std::move(points)}};
  }
}

void cmd_classify(const dsl::Document& doc, Report& r) {
  for (const auto& decl : doc.algebras) {
    const TenseStructure s = dsl::to_structure(decl);
    const AxiomReport ax = check_axioms(s);
    for (Axiom a : kAxioms) {
      std::vector<std::string> w;
      for (const auto& x : ax.witnesses) {
        if (x.axiom == a) w.push_back(std::string(to_string(x.side)) + ": " + x.detail);
      }
      r.verdict(decl.name + ": " + std::string(to_string(a)), ax.passes(a), std::move(w));
    }
    r.summary.push_back(decl.name + ": " + std::string(to_string(ax.classification)));
    r.data[decl.name] = json{{"classification", to_string(ax.classification)},
                             {"G_total", ax.g_total},
                             {"H_total", ax.h_total},
                             {"G_semi_tense", ax.side_semi_tense(Side::kG)},
                             {"H_semi_tense", ax.side_semi_tense(Side::kH)}};
  }
}

AlgebraPtr base_algebra(const dsl::Document& doc, Report& r) {
  for (const auto& decl : doc.algebras) {
    if (decl.neg) return dsl::to_algebra(decl);
  }
  r.notes.push_back("no algebra declared, using M2");
  return m2_algebra();
}

ProductElement parse_product_element(const DeMorganPoset& m, const Frame& f, std::string_view text) {
  const char sep = text.find(',') != std::string_view::npos ? ',' : '.';
  ProductElement p;
  while (true) {
    const std::size_t cut = text.find(sep);
    const std::string_view part = text.substr(0, cut);
    const auto x = m.poset().find(part);
    if (!x) throw Error(ErrorKind::kInvalidInput, "unknown base element '" + std::string(part) + "'");
    p.push_back(*x);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  if (p.size() != f.size()) {
    throw Error(ErrorKind::kInvalidInput, "element has " + std::to_string(p.size()) +
                                              " components but the frame has " +
                                              std::to_string(f.size()) + " points");
  }
  return p;
}

std::string format_product(const DeMorganPoset& m, const ProductElement& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += m.label(p[i]);
  }
  return out;
}

void cmd_frame_apply(const dsl::Document& doc, const Options& opt, Report& r) {
  if (opt.element.empty()) throw Error(ErrorKind::kInvalidInput, "frame-apply needs --element");
  if (doc.frames.empty()) throw Error(ErrorKind::kInvalidInput, "no frame declared");
  const AlgebraPtr m = base_algebra(doc, r);
  const FiniteLattice lattice(m);
  for (const auto& decl : doc.frames) {
    const Frame f = dsl::to_frame(decl);
    const ProductElement p = parse_product_element(*m, f, opt.element);
    json out{{"p", format_product(*m, p)},
             {"G", format_product(*m, hat_G(f, lattice, p))},
             {"H", format_product(*m, hat_H(f, lattice, p))},
             {"F", format_product(*m, hat_F(f, lattice, p))},
             {"P", format_product(*m, hat_P(f, lattice, p))}};
    r.summary.push_back(decl.name + ": G(p) = " + out["G"].get<std::string>() + ", H(p) = " +
                        out["H"].get<std::string>());
    r.data[decl.name] = std::move(out);
  }
}

void cmd_verify_frame_theorem(const dsl::Document& doc, const Options& opt, Report& r) {
  if (doc.frames.empty()) throw Error(ErrorKind::kInvalidInput, "no frame declared");
  const AlgebraPtr m = base_algebra(doc, r);
  const Limits limits = limits_for(opt, true);
  for (const auto& decl : doc.frames) {
    const Frame f = dsl::to_frame(decl);
    const FrameTheoremReport t = verify_frame_theorem(m, f, limits.product_elements);
    const std::string prefix = decl.name + ": ";
    r.verdict(prefix + "G and H are total", t.clause_a);
    r.verdict(prefix + "R serial implies G semi-tense", t.clause_b);
    r.verdict(prefix + "R inverse serial implies H semi-tense", t.clause_c);
    r.verdict(prefix + "both serial implies dynamic", t.clause_d);
    json witnesses = json::object();
    for (Side side : kSides) {
      json list = json::array();
      std::size_t total = 0;
      for (const auto& w : t.axioms.witnesses) {
        if (w.side != side) continue;
        if (total++ < opt.witness_max) {
          list.push_back(std::string(to_string(w.axiom)) + ": " + w.detail);
        }
      }
      witnesses[std::string(to_string(side))] = std::move(list);
      witnesses[std::string(to_string(side)) + "_total"] = total;
    }
    for (Side side : kSides) {
      const bool serial = side == Side::kG ? t.serial_forward : t.serial_backward;
      const auto p1 = t.axioms.witnesses_for(Axiom::kP1, side);
      if (serial || p1.empty()) continue;
      r.notes.push_back(prefix + (side == Side::kG ? "R is not serial; G" : "R inverse is not serial; H") +
                        " fails P1, e.g. " + p1.front().detail);
    }
    r.summary.push_back(prefix + std::string(to_string(t.axioms.classification)));
    r.data[decl.name] = json{{"serial", t.serial_forward},
                             {"inverse_serial", t.serial_backward},
                             {"classification", to_string(t.axioms.classification)},
                             {"product_elements", std::to_string(m->size()) + "^" +
                                                      std::to_string(f.size())},
                             {"axiom_witnesses", std::move(witnesses)}};
  }
}

void cmd_represent(const dsl::Document& doc, const Options& opt, Report& r) {
  const Limits limits = limits_for(opt, false);
  for (const auto& decl : doc.algebras) {
    const TenseStructure s = dsl::to_structure(decl);
    const std::string prefix = decl.name + ": ";
    RepresentationResult res;
    try {
      res = verify_representation(s, limits);
    } catch (const HypothesisFailed& e) {
      r.verdict(prefix + "hypothesis " + e.hypothesis(), false, e.witnesses());
      continue;
    }
    if (res.empty_scale) {
      r.notes.push_back(prefix + "empty time scale, nothing to check");
      r.summary.push_back(prefix + "|T| = 0");
      continue;
    }
    const DeMorganPoset& a = s.algebra();
    r.verdict(prefix + "R_G equals the inverse of R_H", true);
    r.verdict(prefix + "embedding is an order-reflecting De Morgan morphism",
              res.embedding_check.ok(), res.embedding_check.witnesses);
    r.verdict(prefix + "R_G serial", res.rg_serial,
              res.rg_serial ? std::vector<std::string>{} : std::vector<std::string>{"see R_G"});
    r.verdict(prefix + "R_G inverse serial", res.rg_inverse_serial,
              res.rg_inverse_serial ? std::vector<std::string>{}
                                    : std::vector<std::string>{"see R_G"});
    r.verdict(prefix + "meet and join identities", res.pointwise.ok(), res.pointwise.witnesses);
    r.verdict(prefix + "G square commutes", res.g_square.ok, res.g_square.witnesses);
    r.verdict(prefix + "H square commutes", res.h_square.ok, res.h_square.witnesses);
    r.verdict(prefix + "F square commutes", res.f_square.ok, res.f_square.witnesses);
    if (!res.interrelation_a || !res.interrelation_b) {
      r.notes.push_back(prefix + "domain conditions linking G and H do not hold");
    }

    json points = json::array();
    for (Element t = 0; t < res.scale.size(); ++t) points.push_back(res.scale.point_label(t));
    auto pairs = [&](const Relation& rel) {
      json list = json::array();
      for (const auto& [x, y] : rel.pairs()) {
        list.push_back(json::array({res.scale.point_label(x), res.scale.point_label(y)}));
      }
      return list;
    };
    json embedding = json::object();
    for (Element x = 0; x < a.size(); ++x) embedding[a.label(x)] = res.embedding[x].format();
    r.summary.push_back(prefix + "|T| = " + std::to_string(res.scale.size()) + ", " +
                        (res.success() ? "represented" : "not represented"));
    r.data[decl.name] = json{{"time_scale_size", res.scale.size()},
                             {"points", std::move(points)},
                             {"R_G", pairs(res.rg)},
                             {"R_H", pairs(res.rh)},
                             {"serial", {{"R_G", res.rg_serial}, {"R_G_inverse", res.rg_inverse_serial}}},
                             {"squares_commute", res.g_square.ok && res.h_square.ok && res.f_square.ok},
                             {"embedding", std::move(embedding)},
                             {"domain_conditions", {{"G_to_H", res.interrelation_a},
                                                    {"H_to_G", res.interrelation_b}}}};
  }
}

void cmd_search(const Options& opt, Report& r) {
  if (!opt.property.empty()) {
    const auto witnesses = sweep_small(opt.property, opt.max_n);
    r.verdict(opt.property + " up to n = " + std::to_string(opt.max_n), witnesses.empty(),
              witnesses);
    r.data["counterexamples"] = witnesses.size();
    return;
  }
  if (!opt.spec.empty()) {
    FixtureSpec spec = parse_fixture_spec(opt.spec);
    spec.max_n = opt.max_n;
    const auto found = find_fixture(spec);
    if (!found) {
      r.verdict("fixture " + opt.spec, false,
                {"nothing matches with at most " + std::to_string(opt.max_n) + " elements"});
      return;
    }
    r.verdict("fixture " + opt.spec, true);
    const dsl::Document d{{dsl::from_structure("found", *found)}, {}};
    r.summary.push_back(summarize(*found));
    r.data["fixture"] = dsl::print(d);
    r.data["classification"] = to_string(classify(*found));
    return;
  }
  GeneratorConfig cfg;
  cfg.seed = opt.seed;
  cfg.max_size = std::max<std::size_t>(1, opt.max_n);
  const AlgebraPtr a = gen_demorgan(cfg);
  const dsl::Document d{{dsl::from_algebra("random", *a)}, {}};
  r.summary.push_back(summarize(*a));
  r.data["algebra"] = dsl::print(d);
}

}  // namespace

Report execute(const Options& opt, std::string_view text) {
  Report r;
  r.command = opt.command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (opt.command == "search" && opt.file.empty()) {
      cmd_search(opt, r);
    } else {
      const dsl::Document doc = dsl::parse(text);
      if (opt.command == "validate") {
        cmd_validate(doc, r);
      } else if (opt.command == "downsets") {
        cmd_downsets(doc, opt, r);
      } else if (opt.command == "timescale") {
        cmd_timescale(doc, opt, r);
      } else if (opt.command == "classify") {
        cmd_classify(doc, r);
      } else if (opt.command == "frame-apply") {
        cmd_frame_apply(doc, opt, r);
      } else if (opt.command == "verify-frame-theorem") {
        cmd_verify_frame_theorem(doc, opt, r);
      } else if (opt.command == "represent") {
        cmd_represent(doc, opt, r);
      } else if (opt.command == "search") {
        cmd_search(opt, r);
      } else {
        throw Error(ErrorKind::kInvalidInput, "unknown command '" + opt.command + "'");
      }
    }
  } catch (const ParseError& e) {
    r.status = Status::kParseError;
    r.message = e.what();
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kLimitExceeded: r.status = Status::kLimitExceeded; break;
      case ErrorKind::kGiveUp:
        r.verdict("generation", false, {e.what()});
        break;
      default: r.status = Status::kInputError; break;
    }
    r.message = e.what();
  }
  const auto end = std::chrono::steady_clock::now();
  r.timings_ms.emplace_back("total",
                            std::chrono::duration<double, std::milli>(end - start).count());
  return r;
}

namespace {

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"De Morgan posets with tense operators: validation, frames and representations"};
  app.require_subcommand(1);
  Options opt;
  std::size_t limit = 0;

  struct Sub {
    const char* name;
    const char* help;
    bool file_required;
  };
  const Sub subs[] = {
      {"validate", "Check posets, negations and frames", true},
      {"downsets", "List proper down-sets", true},
      {"timescale", "List the time-scale points and their values", true},
      {"classify", "Check the tense axioms and classify", true},
      {"frame-apply", "Apply the frame operators to one element of M^T", true},
      {"verify-frame-theorem", "Check the seriality clauses on each declared frame", true},
      {"represent", "Build the canonical frame and verify the representation", true},
      {"search", "Generate algebras, hunt fixtures or sweep properties", false},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    auto* file = sub->add_option("file", opt.file, "Input file ('-' for stdin)");
    if (s.file_required) file->required();
    sub->add_flag("--json", opt.json, "Machine-readable output");
    sub->add_option("--limit", limit, "Override the enumeration or materialization budget");
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--witness-max", opt.witness_max, "Witnesses shown per verdict");
    if (std::string_view(s.name) == "frame-apply") {
      sub->add_option("--element", opt.element, "Element of M^T, components joined by '.' or ','");
    }
    if (std::string_view(s.name) == "search") {
      sub->add_option("--spec", opt.spec, "Axiom verdict vector, e.g. P1+P2+P3-P4+");
      sub->add_option("--property", opt.property, "Property suite to sweep");
      sub->add_option("--max-n", opt.max_n, "Largest algebra size to consider");
    }
    sub->callback([&opt, name = std::string(s.name)] { opt.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--limit")) opt.limit = limit;
  }

  std::string text;
  if (!opt.file.empty()) {
    auto loaded = read_input(opt.file);
    if (!loaded) {
      Report r;
      r.command = opt.command;
      r.status = Status::kInputError;
      r.message = "cannot read '" + opt.file + "'";
      if (opt.json) {
        out << render_json(r, opt.witness_max).dump(2) << '\n';
      } else {
        err << render_human(r, opt.witness_max);
      }
      return exit_code(r);
    }
    text = std::move(*loaded);
  }

  const Report r = execute(opt, text);
  if (opt.json) {
    out << render_json(r, opt.witness_max).dump(2) << '\n';
  } else if (r.status != Status::kOk) {
    err << render_human(r, opt.witness_max);
  } else {
    out << render_human(r, opt.witness_max);
  }
  return exit_code(r);
}

}  // namespace dmrep::cli
