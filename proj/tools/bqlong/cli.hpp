#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bqlong/bqlong.hpp"

// Command-line front end. Exit codes: 0 success / EQUAL, 1 semantic failure
// (axiom violation, invariant mismatch, DIFFERENT), 2 usage or parse error.

namespace bqlong::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

/// Exit with status 2 after printing the message.
struct UsageError : Error {
  using Error::Error;
};

/// Exit with status 1 after printing the message.
struct SemanticFailure : Error {
  using Error::Error;
};

struct RunConfig {
  std::optional<std::string> table_file;
  std::optional<unsigned> wada_sn;
  std::optional<std::size_t> wada_zn;
  std::optional<std::string> alexander;
  Format format = Format::Text;
  unsigned threads = 1;

  std::vector<std::string> codes;
  std::optional<std::string> initial;
  std::optional<std::string> apply;
  bool list = false;
  std::string level = "biquandle";
  std::uint64_t seed = 0;
  unsigned trials = 100;
  std::size_t max_crossings = 6;
  bool flip_over_positive_token = false;

  std::size_t source_count() const {
    return static_cast<std::size_t>(table_file.has_value()) + wada_sn.has_value() +
           wada_zn.has_value() + alexander.has_value();
  }
  ParallelOptions parallel() const { return {threads}; }
};

/// Resolved biquandle source: raw tables plus the group they came from, if any.
struct Source {
  OperationTables tables;
  std::optional<FiniteGroup> group;
  std::string label;
  bool reference_setting = false;  // Wada switch on S5
};

inline Source resolve_source(const RunConfig& cfg, bool default_to_wada_s5 = false) {
  if (cfg.source_count() > 1) throw UsageError("give exactly one biquandle source");
  if (cfg.source_count() == 0) {
    if (!default_to_wada_s5) {
      throw UsageError("no biquandle source; use --table, --wada-sn, --wada-zn or --alexander");
    }
    RunConfig fallback = cfg;
    fallback.wada_sn = 5;
    return resolve_source(fallback);
  }
  Source s;
  if (cfg.table_file) {
    std::ifstream in(*cfg.table_file);
    if (!in) throw UsageError("cannot open " + *cfg.table_file);
    s.tables = read_table(in);
    s.label = "table " + *cfg.table_file;
  } else if (cfg.wada_sn) {
    if (*cfg.wada_sn < 1 || *cfg.wada_sn > 6) {
      throw UsageError("--wada-sn must be in [1, 6] (larger groups cannot be verified exhaustively)");
    }
    s.group = symmetric_group(*cfg.wada_sn);
    s.tables = wada_tables(*s.group);
    s.label = "Wada S" + std::to_string(*cfg.wada_sn);
    s.reference_setting = *cfg.wada_sn == 5;
  } else if (cfg.wada_zn) {
    if (*cfg.wada_zn < 1 || *cfg.wada_zn > 1000) throw UsageError("--wada-zn must be in [1, 1000]");
    s.group = cyclic_group(*cfg.wada_zn);
    s.tables = wada_tables(*s.group);
    s.label = "Wada Z/" + std::to_string(*cfg.wada_zn);
  } else {
    long long n = 0, lambda = 0, mu = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(*cfg.alexander);
    std::string rest;
    if (!(in >> n >> c1 >> lambda >> c2 >> mu) || c1 != ',' || c2 != ',' || (in >> rest) ||
        n < 1 || n > 1000) {
      throw UsageError("--alexander expects N,LAMBDA,MU with 1 <= N <= 1000");
    }
    s.tables = alexander_tables(static_cast<std::size_t>(n), lambda, mu);
    s.label = "Alexander Z/" + std::to_string(n) + " lambda=" + std::to_string(lambda) +
              " mu=" + std::to_string(mu);
  }
  return s;
}

inline FiniteBiquandle build(const Source& s, Level required, const RunConfig& cfg) {
  try {
    return FiniteBiquandle::build(s.tables, required, cfg.parallel());
  } catch (const AxiomError& e) {
    throw SemanticFailure(e.what());
  }
}

inline Element resolve_element(const Source& s, const FiniteBiquandle& B, const std::string& text,
                               const char* flag) {
  std::optional<Element> e = s.group ? s.group->find(text) : B.find(text);
  if (!e) throw UsageError(std::string(flag) + ": unknown element '" + text + "'");
  return *e;
}

inline LongGaussCode code_arg(const RunConfig& cfg, std::size_t i) {
  return parse_gauss_code(cfg.codes.at(i));
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline std::string names_of(const FiniteBiquandle& B, const std::vector<Element>& elems,
                            const char* open = "{", const char* close = "}") {
  std::string s = open;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += B.name(elems[i]);
  }
  return s + close;
}

inline Json names_json(const FiniteBiquandle& B, const std::vector<Element>& elems) {
  Json j = Json::array();
  for (Element e : elems) j.push_back(B.name(e));
  return j;
}

/// Renders a longitude map. For a group biquandle whose map is a right
/// translation x -> x*w, prints the translating element; otherwise the image
/// vector by names.
inline std::string describe_map(const Source& s, const FiniteBiquandle& B, const LongitudeMap& m) {
  if (s.group) {
    const FiniteGroup& g = *s.group;
    const Element w = m.images[g.identity()];
    bool translation = true;
    for (Element x = 0; x < g.order() && translation; ++x) translation = m.images[x] == g.mul(x, w);
    if (translation) return "x -> x*" + g.name(w);
  }
  return names_of(B, m.images, "[", "]");
}

// ---------------------------------------------------------------------------

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Source s = resolve_source(cfg);
  Level requested = Level::Biquandle;
  if (cfg.level == "switch") {
    requested = Level::Switch;
  } else if (cfg.level == "birack") {
    requested = Level::Birack;
  } else if (cfg.level != "biquandle") {
    throw UsageError("--level must be switch, birack or biquandle");
  }

  struct Row {
    Level level;
    std::optional<AxiomCheck> check;  // nullopt: skipped
  };
  std::vector<Row> rows;
  const AxiomCheck sw = verify_switch(s.tables, cfg.parallel());
  rows.push_back({Level::Switch, sw});
  const bool birack_wanted = requested >= Level::Birack;
  std::optional<AxiomCheck> br, bq;
  if (birack_wanted && sw) br = verify_birack(s.tables);
  rows.push_back({Level::Birack, br});
  if (requested >= Level::Biquandle && br && *br) bq = verify_biquandle(s.tables);
  rows.push_back({Level::Biquandle, bq});

  bool all_ok = true;
  Json j;
  j["source"] = s.label;
  j["n"] = s.tables.n;
  for (const Row& r : rows) {
    const bool wanted = r.level <= requested;
    const std::string key(to_string(r.level));
    if (!wanted) {
      if (cfg.format == Format::Text) out << key << ": not requested\n";
      j[key] = Json{{"status", "not requested"}};
      continue;
    }
    if (!r.check) {
      all_ok = false;
      if (cfg.format == Format::Text) out << key << ": skipped\n";
      j[key] = Json{{"status", "skipped"}};
      continue;
    }
    const AxiomCheck& c = *r.check;
    all_ok = all_ok && c.ok;
    if (cfg.format == Format::Text) {
      out << key << ": " << (c.ok ? "ok" : "FAIL " + c.describe(s.tables.names)) << "\n";
    }
    Json entry{{"status", c.ok ? "ok" : "FAIL"}};
    if (!c.ok) {
      entry["axiom"] = c.axiom;
      Json w = Json::array();
      for (Element e : c.witness) w.push_back(s.tables.name(e));
      entry["witness"] = w;
    }
    j[key] = entry;
  }
  if (cfg.format == Format::Json) emit(out, j);
  return all_ok ? 0 : 1;
}

inline int cmd_colorings(const RunConfig& cfg, std::ostream& out) {
  const Source s = resolve_source(cfg);
  const FiniteBiquandle B = build(s, Level::Birack, cfg);
  const LongGaussCode code = code_arg(cfg, 0);
  std::optional<Element> initial;
  if (cfg.initial) initial = resolve_element(s, B, *cfg.initial, "--initial");

  const bool need_list = cfg.list || cfg.format == Format::Json;
  std::vector<Coloring> all;
  std::uint64_t count = 0;
  if (need_list) {
    all = enumerate_colorings(code, B, initial, cfg.parallel());
    count = all.size();
  } else {
    count = initial ? count_fixed(code, B, *initial, cfg.parallel())
                    : count_colorings(code, B, cfg.parallel());
  }

  if (cfg.format == Format::Json) {
    Json j;
    j["code"] = to_string(code);
    j["source"] = s.label;
    j["initial"] = initial ? Json(B.name(*initial)) : Json(nullptr);
    j["colorings"] = count;
    Json list = Json::array();
    for (const Coloring& c : all) list.push_back(c.segment_colors);
    j["segment_colors"] = list;
    emit(out, j);
    return 0;
  }
  if (initial) out << "initial: " << B.name(*initial) << "\n";
  out << "colorings: " << count << "\n";
  if (cfg.list) {
    for (const Coloring& c : all) out << names_of(B, c.segment_colors, "[", "]") << "\n";
  }
  return 0;
}

inline int cmd_longitude(const RunConfig& cfg, std::ostream& out) {
  const Source s = resolve_source(cfg);
  const FiniteBiquandle B = build(s, Level::Biquandle, cfg);
  const LongGaussCode code = code_arg(cfg, 0);
  if (!cfg.initial) throw UsageError("longitude needs --initial");
  const Element p = resolve_element(s, B, *cfg.initial, "--initial");

  if (cfg.apply) {
    const Element x = resolve_element(s, B, *cfg.apply, "--apply");
    const InvariantSum sum = invariant_sum(code, B, p, x, cfg.parallel());
    if (cfg.format == Format::Json) {
      Json j;
      j["code"] = to_string(code);
      j["source"] = s.label;
      j["initial"] = B.name(p);
      j["apply"] = B.name(x);
      j["sum"] = names_json(B, sum.terms);
      emit(out, j);
    } else {
      out << "sum: " << names_of(B, sum.terms) << "\n";
    }
    return 0;
  }

  const auto family = invariant_family(code, B, p, cfg.parallel());
  if (cfg.format == Format::Json) {
    Json j;
    j["code"] = to_string(code);
    j["source"] = s.label;
    j["initial"] = B.name(p);
    j["family_size"] = family.size();
    Json maps = Json::array();
    for (const auto& m : family) maps.push_back(m.images);
    j["maps"] = maps;
    emit(out, j);
    return 0;
  }
  out << "initial: " << B.name(p) << "\n" << "family: " << family.size() << "\n";
  for (const auto& m : family) out << "map: " << describe_map(s, B, m) << "\n";
  return 0;
}

inline int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const Source s = resolve_source(cfg);
  const FiniteBiquandle B = build(s, Level::Biquandle, cfg);
  const LongGaussCode d1 = code_arg(cfg, 0);
  const LongGaussCode d2 = code_arg(cfg, 1);
  if (!cfg.initial) throw UsageError("compare needs --initial");
  const Element p = resolve_element(s, B, *cfg.initial, "--initial");
  std::optional<Element> x;
  if (cfg.apply) x = resolve_element(s, B, *cfg.apply, "--apply");

  const InvariantComparison cmp = compare_invariants(d1, d2, B, p, x, cfg.parallel());
  Json j;
  j["result"] = cmp.equal ? "EQUAL" : "DIFFERENT";
  std::string witness_text;
  if (const auto* d = std::get_if<Difference<LongitudeMap>>(&cmp.witness)) {
    auto render = [&](const std::optional<LongitudeMap>& m) {
      return m ? describe_map(s, B, *m) : std::string("(none)");
    };
    witness_text = "family entry " + std::to_string(d->position) + ": " + render(d->left) +
                   " vs " + render(d->right);
    j["witness"] = Json{{"position", d->position},
                        {"left", d->left ? Json(d->left->images) : Json(nullptr)},
                        {"right", d->right ? Json(d->right->images) : Json(nullptr)}};
  } else if (const auto* e = std::get_if<Difference<Element>>(&cmp.witness)) {
    auto render = [&](const std::optional<Element>& v) {
      return v ? B.name(*v) : std::string("(none)");
    };
    witness_text = "sum entry " + std::to_string(e->position) + ": " + render(e->left) + " vs " +
                   render(e->right);
    j["witness"] = Json{{"position", e->position},
                        {"left", e->left ? Json(B.name(*e->left)) : Json(nullptr)},
                        {"right", e->right ? Json(B.name(*e->right)) : Json(nullptr)}};
  }
  if (cfg.format == Format::Json) {
    emit(out, j);
  } else {
    out << (cmp.equal ? "EQUAL" : "DIFFERENT") << "\n";
    if (!cmp.equal) out << "witness: " << witness_text << "\n";
  }
  return cmp.equal ? 0 : 1;
}

inline int cmd_moves(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Source s = resolve_source(cfg);
  const FiniteBiquandle B = build(s, Level::Biquandle, cfg);
  const LongGaussCode code = code_arg(cfg, 0);
  HarnessOptions options;
  options.seed = cfg.seed;
  options.trials = cfg.trials;
  options.max_crossings = cfg.max_crossings;
  options.parallel = cfg.parallel();
  if (cfg.flip_over_positive_token) options.rule = TokenRule::FlippedOverPositive;
  options.progress = [&err](unsigned done, unsigned total) {
    if (done % 10 == 0 || done == total) err << "moves: " << done << "/" << total << "\r";
    if (done == total) err << "\n";
  };
  const HarnessReport report = run_move_harness(code, B, options);

  if (cfg.format == Format::Json) {
    Json j;
    j["code"] = to_string(code);
    j["source"] = s.label;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["checks"] = report.steps.size();
    j["failures"] = report.failures;
    Json steps = Json::array();
    for (const auto& st : report.steps) {
      steps.push_back(Json{{"move", st.move},
                           {"before", st.before},
                           {"after", st.after},
                           {"passed", st.passed},
                           {"detail", st.detail}});
    }
    j["steps"] = steps;
    emit(out, j);
  } else {
    out << "checks: " << report.steps.size() << "\n" << "failures: " << report.failures << "\n";
    for (const auto& st : report.steps) {
      if (!st.passed) {
        out << "FAIL " << st.move << ": [" << st.before << "] -> [" << st.after
            << "]: " << st.detail << "\n";
      }
    }
    out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  }
  return report.ok() ? 0 : 1;
}

/// Published values for the long virtual trefoil over the Wada biquandle of S5.
struct TrefoilReference {
  static constexpr const char* d1 = "U1+ U2+ O1+ O2+";
  static constexpr const char* initial = "(1,2,3,4)";
  static constexpr const char* apply = "()";
  static constexpr std::uint64_t total = 240;
  static constexpr std::uint64_t fixed = 5;
  static inline const std::vector<std::string> sum_d1{"(1,3,2,5,4)", "()", "(1,5,3,4,2)",
                                                      "(1,4,5,2,3)", "(1,2,4,3,5)"};
  static inline const std::vector<std::string> sum_d2{"(1,4,2,3,5)", "()", "(1,2,5,4,3)",
                                                      "(1,3,4,5,2)", "(1,5,3,2,4)"};
};

inline int cmd_paper_example(const RunConfig& cfg, std::ostream& out) {
  const Source s = resolve_source(cfg, /*default_to_wada_s5=*/true);
  const FiniteBiquandle B = build(s, Level::Biquandle, cfg);
  const LongGaussCode d1 = parse_gauss_code(TrefoilReference::d1);
  const LongGaussCode d2 = reverse_orientation(d1);

  Element p = B.size() > 1 ? 1 : 0;
  Element x = s.group ? s.group->identity() : 0;
  if (s.reference_setting) p = resolve_element(s, B, TrefoilReference::initial, "initial");
  if (cfg.initial) p = resolve_element(s, B, *cfg.initial, "--initial");
  if (cfg.apply) x = resolve_element(s, B, *cfg.apply, "--apply");

  const auto par = cfg.parallel();
  const std::uint64_t total1 = count_colorings(d1, B, par);
  const std::uint64_t total2 = count_colorings(d2, B, par);
  const std::uint64_t fixed1 = count_fixed(d1, B, p, par);
  const std::uint64_t fixed2 = count_fixed(d2, B, p, par);
  const InvariantSum sum1 = invariant_sum(d1, B, p, x, par);
  const InvariantSum sum2 = invariant_sum(d2, B, p, x, par);
  const bool noninvertible = sum1 != sum2;

  // Expectations bind only to the published setting.
  const bool check = s.reference_setting && !cfg.initial && !cfg.apply;
  std::vector<std::string> mismatches;
  if (check) {
    auto expect_sum = [&](const char* label, const InvariantSum& got,
                          const std::vector<std::string>& names) {
      std::vector<Element> want;
      for (const auto& n : names) want.push_back(resolve_element(s, B, n, "expected"));
      std::sort(want.begin(), want.end());
      if (want != got.terms) {
        mismatches.push_back(std::string(label) + ": expected " + names_of(B, want) + ", got " +
                             names_of(B, got.terms));
      }
    };
    auto expect_count = [&](const char* label, std::uint64_t got, std::uint64_t want) {
      if (got != want) {
        mismatches.push_back(std::string(label) + ": expected " + std::to_string(want) +
                             ", got " + std::to_string(got));
      }
    };
    expect_count("D1 colorings", total1, TrefoilReference::total);
    expect_count("D2 colorings", total2, TrefoilReference::total);
    expect_count("D1 fixed colorings", fixed1, TrefoilReference::fixed);
    expect_count("D2 fixed colorings", fixed2, TrefoilReference::fixed);
    expect_sum("D1 sum", sum1, TrefoilReference::sum_d1);
    expect_sum("D2 sum", sum2, TrefoilReference::sum_d2);
    if (!noninvertible) mismatches.push_back("verdict: expected noninvertible");
  }
  std::string expected_status = mismatches.empty() ? "match" : "MISMATCH";
  if (!s.reference_setting) {
    expected_status = "skipped (non-paper biquandle)";
  } else if (!check) {
    expected_status = "skipped (overridden initial or apply)";
  }

  if (cfg.format == Format::Json) {
    Json j;
    j["source"] = s.label;
    j["d1"] = to_string(d1);
    j["d2"] = to_string(d2);
    j["initial"] = B.name(p);
    j["apply"] = B.name(x);
    j["d1_colorings"] = total1;
    j["d2_colorings"] = total2;
    j["d1_fixed_colorings"] = fixed1;
    j["d2_fixed_colorings"] = fixed2;
    j["d1_sum"] = names_json(B, sum1.terms);
    j["d2_sum"] = names_json(B, sum2.terms);
    j["noninvertible"] = noninvertible;
    j["expected_values"] = expected_status;
    j["mismatches"] = mismatches;
    emit(out, j);
  } else {
    out << "biquandle: " << s.label << " (order " << B.size() << ")\n"
        << "D1: " << to_string(d1) << "\n"
        << "D2: " << to_string(d2) << "\n"
        << "D1 colorings: " << total1 << "\n"
        << "D2 colorings: " << total2 << "\n"
        << "D1 colorings with initial " << B.name(p) << ": " << fixed1 << "\n"
        << "D2 colorings with initial " << B.name(p) << ": " << fixed2 << "\n"
        << "S(D1, " << B.name(p) << ", " << B.name(x) << ") = " << names_of(B, sum1.terms) << "\n"
        << "S(D2, " << B.name(p) << ", " << B.name(x) << ") = " << names_of(B, sum2.terms) << "\n"
        << "noninvertible: " << (noninvertible ? "YES" : "UNDETERMINED") << "\n"
        << "expected-values: " << expected_status << "\n";
    for (const auto& m : mismatches) out << "  " << m << "\n";
  }
  return mismatches.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------

/// Parses `args` (without the program name) and runs the chosen subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquandle colorings and longitude invariants of long virtual knots", "bqlong"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--table", cfg.table_file, "Biquandle table file (biquandle v1 format)");
  app.add_option("--wada-sn", cfg.wada_sn, "Wada biquandle of the symmetric group S_K");
  app.add_option("--wada-zn", cfg.wada_zn, "Wada biquandle of the cyclic group Z/N");
  app.add_option("--alexander", cfg.alexander, "Alexander biquandle N,LAMBDA,MU on Z/N");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* verify = app.add_subcommand("verify", "Check switch, birack and biquandle axioms");
  verify->add_option("--level", cfg.level, "Highest level to require")
      ->check(CLI::IsMember({"switch", "birack", "biquandle"}));

  auto* colorings = app.add_subcommand("colorings", "Count or list colorings of a Gauss code");
  colorings->add_option("code", cfg.codes, "Signed Gauss code, e.g. 'U1+ U2+ O1+ O2+'")
      ->required()
      ->expected(1);
  colorings->add_option("--initial", cfg.initial, "Color of the initial arc");
  colorings->add_flag("--list", cfg.list, "Print every coloring");

  auto* longitude = app.add_subcommand("longitude", "Longitude family or invariant sum");
  longitude->add_option("code", cfg.codes, "Signed Gauss code")->required()->expected(1);
  longitude->add_option("--initial", cfg.initial, "Color of the initial arc")->required();
  longitude->add_option("--apply", cfg.apply, "Evaluate the family at this element");

  auto* compare = app.add_subcommand("compare", "Compare the invariants of two codes");
  compare->add_option("codes", cfg.codes, "Two signed Gauss codes")->required()->expected(2);
  compare->add_option("--initial", cfg.initial, "Color of the initial arc")->required();
  compare->add_option("--apply", cfg.apply, "Compare invariant sums at this element");

  auto* moves = app.add_subcommand("moves", "Random Reidemeister-move invariance check");
  moves->add_option("code", cfg.codes, "Starting signed Gauss code")->required()->expected(1);
  moves->add_option("--trials", cfg.trials, "Number of random moves")->required();
  moves->add_option("--seed", cfg.seed, "Random seed")->required();
  moves->add_option("--max-crossings", cfg.max_crossings, "Crossing budget for insertions");
  // Test hook: deliberately wrong longitude rule.
  moves->add_flag("--flip-over-positive-token", cfg.flip_over_positive_token)->group("");

  auto* example = app.add_subcommand("paper-example",
                                   "Long virtual trefoil vs its reverse over Wada S5");
  example->add_option("--initial", cfg.initial, "Override the initial color");
  example->add_option("--apply", cfg.apply, "Override the evaluation point");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (colorings->parsed()) return cmd_colorings(cfg, out);
    if (longitude->parsed()) return cmd_longitude(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out);
    if (moves->parsed()) return cmd_moves(cfg, out, err);
    if (example->parsed()) return cmd_paper_example(cfg, out);
  } catch (const SemanticFailure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // Usage, argument, table-format and Gauss-code errors.
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bqlong::cli
