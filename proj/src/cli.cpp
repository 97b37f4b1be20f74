#include "descalg/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/coxeter_oracle.hpp"
#include "descalg/error.hpp"
#include "descalg/filled_template.hpp"
#include "descalg/quotient.hpp"
#include "descalg/verify.hpp"

namespace descalg {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string type = "D";
  std::string n;
  std::string format;
  unsigned jobs = 1;
  int max_rank = 0;
  bool no_cache = false;
  std::vector<std::string> operands;
  std::string suite;
};

CoxeterType parse_type(const std::string& s) {
  if (s == "D" || s == "d") return CoxeterType::D;
  if (s == "B" || s == "b") return CoxeterType::B;
  throw UsageError("--type must be D or B");
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad " + std::string(what) + ": " + std::string(s));
  return v;
}

std::pair<int, int> parse_range(const std::string& s) {
  if (s.empty()) throw UsageError("--n is required");
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = parse_int(std::string_view(s).substr(0, dots), "--n");
    const int hi = parse_int(std::string_view(s).substr(dots + 2), "--n");
    if (lo > hi) throw UsageError("empty --n range");
    return {lo, hi};
  }
  const int v = parse_int(s, "--n");
  return {v, v};
}

int single_rank(const Options& o) {
  auto [lo, hi] = parse_range(o.n);
  if (lo != hi) throw UsageError("this command takes a single --n");
  return lo;
}

bool json_output(const Options& o, bool default_json = false) {
  if (o.format.empty()) return default_json;
  if (o.format == "json") return true;
  if (o.format == "text") return false;
  throw UsageError("--format must be text or json");
}

TableLimits limits_for(const Options& o) {
  TableLimits limits;
  if (o.max_rank > 0) limits.max_rank_d = limits.max_rank_b = o.max_rank;
  return limits;
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
  if (o.no_cache) return std::nullopt;
  if (const char* dir = std::getenv("DESCALG_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "descalg";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "descalg";
  return std::nullopt;
}

void check_rank_cap(CoxeterType type, int n, const TableLimits& limits) {
  const int cap = type == CoxeterType::D ? limits.max_rank_d : limits.max_rank_b;
  if (n > cap) throw CapExceededError("rank " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
}

void require_operands(const Options& o, std::size_t count) {
  if (o.operands.size() != count)
    throw UsageError("expected " + std::to_string(count) + " operand(s), got " + std::to_string(o.operands.size()));
}

Json parts_json(const Composition& q) {
  Json a = Json::array();
  for (int p : q.parts()) a.push_back(p);
  return a;
}

Json generators_json(const GeneratorSet& j, CoxeterType type) {
  Json a = Json::array();
  if (j.has_branch()) a.push_back(type == CoxeterType::D ? "s_1'" : "t");
  for (int i : j.plain()) a.push_back("s_" + std::to_string(i));
  return a;
}

int cmd_multiply(const Options& o, std::ostream& out) {
  require_operands(o, 2);
  const CoxeterType type = parse_type(o.type);
  const int n = single_rank(o);
  if (type == CoxeterType::D) {
    const auto product = multiply_basis(parse_index(o.operands[0], n), parse_index(o.operands[1], n));
    out << (json_output(o) ? to_json(product).dump() : to_text(product)) << '\n';
  } else {
    const auto product =
        multiply_basis_b(parse_composition(o.operands[0]), parse_composition(o.operands[1]), n);
    out << (json_output(o) ? to_json(product).dump() : to_text(product)) << '\n';
  }
  return kExitOk;
}

Json template_json(const FilledTemplate& t) {
  Json z = Json::array();
  for (int i = 0; i <= t.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= t.cols(); ++j) row.push_back(t.z(i, j));
    z.push_back(row);
  }
  Json y = Json::array();
  for (int i = 1; i <= t.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= t.cols(); ++j) row.push_back(t.y(i, j));
    y.push_back(row);
  }
  return {{"z", z}, {"y", y}, {"border_sum", border_sum(t)}, {"y_sum", y_sum(t)}};
}

int cmd_templates(const Options& o, std::ostream& out) {
  require_operands(o, 2);
  const CoxeterType type = parse_type(o.type);
  const int n = single_rank(o);
  const bool as_json = json_output(o);
  Json list = Json::array();
  std::ostringstream text;
  std::size_t count = 0;

  auto emit_text = [&](const FilledTemplate& t, const std::string& word, const std::string& rule_case,
                       const std::string& terms) {
    text << "template " << ++count << "\n" << render_template(t);
    text << "reading word: " << word << "  border-sum: " << border_sum(t) << "  y-sum: " << y_sum(t)
         << "  case: " << rule_case << "  contributes: " << terms << "\n\n";
  };

  if (type == CoxeterType::D) {
    const BasisIndex p = parse_index(o.operands[0], n);
    const BasisIndex q = parse_index(o.operands[1], n);
    AlgebraElement product(n);
    for (const FilledTemplate& t : enumerate_z_d(p, q)) {
      const auto contribution = apply_rule(p, q, t);
      AlgebraElement part(n);
      for (const auto& [b, c] : contribution.terms) part.add_term(b, c);
      product += part;
      const Composition word = reading_word(t);
      if (as_json) {
        Json j = template_json(t);
        j["reading_word"] = parts_json(word);
        j["case"] = std::string(to_string(contribution.rule_case));
        j["contributes"] = to_json(part)["terms"];
        list.push_back(j);
      } else {
        emit_text(t, format_composition(word), std::string(to_string(contribution.rule_case)), to_text(part));
      }
    }
    if (as_json) {
      out << Json{{"algebra", "D"}, {"n", n}, {"left", format_index(p)}, {"right", format_index(q)},
                  {"count", list.size()}, {"templates", list}, {"product", to_json(product)}}
                 .dump()
          << '\n';
    } else {
      out << text.str() << count << " template(s)\nproduct: " << to_text(product) << '\n';
    }
  } else {
    const Composition p = parse_composition(o.operands[0]);
    const Composition q = parse_composition(o.operands[1]);
    BAlgebraElement product(n);
    for (const FilledTemplate& t : enumerate_z_b(p, q, n)) {
      const Composition word = reading_word_b(t);
      product.add_term(word, 1);
      if (as_json) {
        Json j = template_json(t);
        j["reading_word"] = parts_json(word);
        list.push_back(j);
      } else {
        emit_text(t, format_composition(word), "B", "1*" + format_composition(word));
      }
    }
    if (as_json) {
      out << Json{{"algebra", "B"}, {"n", n}, {"left", format_composition(p)}, {"right", format_composition(q)},
                  {"count", list.size()}, {"templates", list}, {"product", to_json(product)}}
                 .dump()
          << '\n';
    } else {
      out << text.str() << count << " template(s)\nproduct: " << to_text(product) << '\n';
    }
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  require_operands(o, 0);
  const CoxeterType type = parse_type(o.type);
  const int n = single_rank(o);
  check_rank_cap(type, n, limits_for(o));
  const bool as_json = json_output(o);
  Json rows = Json::array();
  std::vector<std::pair<std::string, std::string>> lines;

  auto record = [&](const std::string& left, const std::string& right, const Json& pj, const std::string& pt) {
    if (as_json)
      rows.push_back({{"left", left}, {"right", right}, {"product", pj}});
    else
      lines.emplace_back(left + " * " + right, pt);
  };
  if (type == CoxeterType::D) {
    const auto basis = enumerate_basis(n);
    for (const auto& p : basis)
      for (const auto& q : basis) {
        const auto prod = multiply_basis(p, q);
        record(format_index(p), format_index(q), to_json(prod), to_text(prod));
      }
  } else {
    const auto basis = enumerate_b_basis(n);
    for (const auto& p : basis)
      for (const auto& q : basis) {
        const auto prod = multiply_basis_b(p, q, n);
        record(format_composition(p), format_composition(q), to_json(prod), to_text(prod));
      }
  }
  if (as_json) {
    out << rows.dump() << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& l : lines) width = std::max(width, l.first.size());
    for (const auto& [lhs, rhs] : lines)
      out << std::left << std::setw(static_cast<int>(width)) << lhs << " = " << rhs << '\n';
  }
  return kExitOk;
}

int cmd_bijection(const Options& o, std::ostream& out) {
  require_operands(o, 1);
  const CoxeterType type = parse_type(o.type);
  const int n = single_rank(o);
  GeneratorSet j(n);
  std::string cls;
  std::string index;
  if (type == CoxeterType::D) {
    const BasisIndex b = parse_index(o.operands[0], n);
    j = subset_of(b);
    cls = std::string(to_string(b.class_tag()));
    index = format_index(b);
  } else {
    const Composition q = parse_composition(o.operands[0]);
    j = b_subset_of(q, n);
    index = format_composition(q);
  }
  const GeneratorSet jc = complement(j);
  if (json_output(o)) {
    Json r = {{"index", index}, {"n", n}};
    if (!cls.empty()) r["class"] = cls;
    r["J"] = generators_json(j, type);
    r["J^c"] = generators_json(jc, type);
    out << r.dump() << '\n';
  } else {
    out << "J=" << format_generators(j, type) << "\nJ^c=" << format_generators(jc, type) << '\n';
  }
  return kExitOk;
}

const std::vector<std::string> kSuites = {"rule", "strategies", "ideal", "quotient", "associativity",
                                          "relations", "all"};

int cmd_verify(const Options& o, std::ostream& out) {
  if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end())
    throw UsageError("unknown suite \"" + o.suite + "\"");
  const CoxeterType type = parse_type(o.type);
  const auto [lo, hi] = parse_range(o.n);
  const TableLimits limits = limits_for(o);
  TableStore tables(limits, cache_dir(o));
  const bool all = o.suite == "all";
  const bool d = type == CoxeterType::D;
  const bool needs_group = all || o.suite == "rule" || o.suite == "strategies" || o.suite == "relations";

  std::vector<CheckReport> reports;
  for (int n = lo; n <= hi; ++n) {
    if (needs_group) check_rank_cap(type, n, limits);
    if (all || o.suite == "relations") reports.push_back(verify_relations(type, n, tables));
    if (all || o.suite == "rule") reports.push_back(verify_rule(type, n, tables, o.jobs));
    // The convolution strategy is quadratic in the group order; "all" keeps it to small ranks.
    if (o.suite == "strategies" || (all && n <= (d ? 4 : 3)))
      reports.push_back(verify_oracle_strategies(type, n, tables, o.jobs));
    if (d && (all || o.suite == "ideal")) reports.push_back(verify_ideal(n, o.jobs));
    if (d && (all || o.suite == "quotient") && n >= 3) reports.push_back(verify_quotient_iso(n, o.jobs));
    if (all || o.suite == "associativity") reports.push_back(verify_associativity(type, n, o.jobs));
  }
  if (!d && (o.suite == "ideal" || o.suite == "quotient"))
    throw UsageError("the " + o.suite + " suite applies to type D only");
  if (!d && reports.empty()) throw UsageError("nothing to verify");

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (json_output(o, true)) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(r.to_json());
    out << Json{{"suite", o.suite}, {"type", d ? "D" : "B"}, {"pass", pass}, {"reports", list}}.dump(2)
        << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check << " n=" << r.n << " (" << r.cases << " cases)\n";
      for (const auto& c : r.counterexamples) out << "  " << c.left << " * " << c.right << ": " << c.detail << '\n';
      for (const auto& f : r.findings) out << "  finding: " << f.dump() << '\n';
    }
    out << (pass ? "all checks passed" : "verification FAILED") << '\n';
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Coxeter type, D or B")->envname("DESCALG_TYPE");
  sub->add_option("--n", o.n, "rank, or A..B for verify")->envname("DESCALG_N");
  sub->add_option("--format", o.format, "text or json")->envname("DESCALG_FORMAT");
  sub->add_option("--jobs", o.jobs, "worker threads")->envname("DESCALG_JOBS");
  sub->add_option("--max-rank", o.max_rank, "override the group enumeration cap")->envname("DESCALG_MAX_RANK");
  sub->add_flag("--no-cache", o.no_cache, "do not read or write the group table cache")
      ->envname("DESCALG_NO_CACHE");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent algebras of types D and B: products, templates and verification", "descalg"};
  app.require_subcommand(1);
  Options o;

  auto* multiply = app.add_subcommand("multiply", "product of two basis elements");
  auto* templates = app.add_subcommand("templates", "filled templates of a product");
  auto* table = app.add_subcommand("table", "full multiplication table");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* bijection = app.add_subcommand("bijection", "generator subset of a basis index");
  for (auto* sub : {multiply, templates, table, verify, bijection}) add_common(sub, o);
  // Single-string positionals: CLI11 would split "[1,3]" on a vector option.
  std::string left, right;
  for (auto* sub : {multiply, templates}) {
    sub->add_option("left", left, "left factor, e.g. \"[3,1]'\"");
    sub->add_option("right", right, "right factor");
  }
  bijection->add_option("index", left, "basis index");
  verify->add_option("suite", o.suite, "rule|strategies|ideal|quotient|associativity|relations|all")->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("descalg");
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  for (const std::string* operand : {&left, &right})
    if (!operand->empty()) o.operands.push_back(*operand);

  try {
    if (multiply->parsed()) return cmd_multiply(o, out);
    if (templates->parsed()) return cmd_templates(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (bijection->parsed()) return cmd_bijection(o, out);
  } catch (const Error& e) {
    err << "descalg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "descalg: internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace descalg
