// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "descalg/algebra_b.hpp"
#include "descalg/algebra_d.hpp"
#include "descalg/coxeter_oracle.hpp"
#include "descalg/quotient.hpp"
#include "descalg/verify.hpp"

using namespace descalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
  void require(const CheckReport& r) {
    std::string what = r.check + " n=" + std::to_string(r.n);
    if (!r.counterexamples.empty()) {
      const auto& c = r.counterexamples.front();
      what += ": " + c.left + " * " + c.right + " " + c.detail;
    }
    require(r.pass, what);
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failures;
  std::printf("%s AC%d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), seconds_since(start),
              o.detail.empty() ? "" : " - ", o.detail.c_str());
  std::fflush(stdout);
}

BasisIndex idx(const char* text, int n = 4) { return parse_index(text, n); }

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main() {
  TableStore tables;

  criterion(1, "printed rank-4 products", [] {
    Outcome o;
    const struct {
      const char* p;
      const char* q;
      const char* expected;
    } golden[] = {
        {"[4]", "[1,3]", "2*[1,3] + 1*[1,2,1] + 1*[1,1,2]"},
        {"[3,1]'", "[4]", "1*[3,1] + 1*[1,3] + 2*[1,2,1]"},
        {"[4]", "[2]", "2*[2,2] + 1*[2,1,1]'"},
        {"[2]", "[2]", "2*[2] + 1*[1,1] + 1*[2,2] + 1*[2,2]' + 2*[1,1,1,1]"},
        {"[1,1]", "[2]", "4*[1,1] + 2*[1,1,2] + 4*[1,1,1,1]"},
    };
    const auto start = Clock::now();
    for (const auto& g : golden) {
      const std::string got = to_text(multiply_basis(idx(g.p), idx(g.q)));
      o.require(got == g.expected, std::string(g.p) + " * " + g.q + " gave " + got);
    }
    o.require(seconds_since(start) < 1.0, "slower than 1s");
    return o;
  });

  criterion(2, "[2,2]' * [4]' rule equals oracle; discrepancy report emitted", [&] {
    Outcome o;
    const auto& table = tables.get(CoxeterType::D, 4);
    const auto p = idx("[2,2]'"), q = idx("[4]'");
    const auto rule = multiply_basis(p, q);
    const auto oracle = oracle_multiply(p, q, table);
    o.require(to_json(rule).dump() == to_json(oracle).dump(),
              "rule " + to_text(rule) + " vs oracle " + to_text(oracle));
    const auto report = known_misprint_report(tables);
    std::cout << "  discrepancy report: " << report.dump() << '\n';
    o.require(report.value("rule_equals_oracle", false), "report disagrees");
    return o;
  });

  criterion(3, "rule equals oracle on all basis pairs, n = 2..6", [&] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
      const auto start = Clock::now();
      const auto r = verify_rule(CoxeterType::D, n, tables, 1);
      o.require(r);
      o.require(r.cases == (std::size_t{1} << (2 * n)), "missing pairs at n=" + std::to_string(n));
      std::printf("  n=%d: %zu pairs, single thread, %.2fs\n", n, r.cases, seconds_since(start));
      if (n == 5) o.require(seconds_since(start) < 300.0, "n=5 slower than 5 minutes");
    }
    return o;
  });

  criterion(4, "counting and convolution strategies agree", [&] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) o.require(verify_oracle_strategies(CoxeterType::D, n, tables, worker_count()));
    for (int n = 1; n <= 3; ++n) o.require(verify_oracle_strategies(CoxeterType::B, n, tables, worker_count()));
    return o;
  });

  criterion(5, "weight-n span is a two-sided ideal, n = 2..5", [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) o.require(verify_ideal(n, worker_count()));
    return o;
  });

  criterion(6, "quotient agrees with type B rank n-2, n = 3..5", [] {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
      const auto r = verify_quotient_iso(n, worker_count());
      o.require(r);
      o.require(r.cases == (std::size_t{1} << (2 * (n - 2))), "missing pairs at n=" + std::to_string(n));
    }
    return o;
  });

  criterion(7, "associativity, identity, augmentation, signs and weights", [&] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
      const auto r = verify_associativity(CoxeterType::D, n, worker_count());
      o.require(r);
      if (n <= 4) o.require(r.cases >= (std::size_t{1} << (3 * n)), "not exhaustive at n=" + std::to_string(n));
      else o.require(r.cases >= 1000, "fewer than 1000 samples at n=5");
    }
    // verify_rule also checks augmentation, non-negativity and the absent weight.
    for (int n = 2; n <= 4; ++n) o.require(verify_rule(CoxeterType::D, n, tables, worker_count()));
    for (int n = 1; n <= 3; ++n) {
      o.require(verify_associativity(CoxeterType::B, n, worker_count()));
      o.require(verify_rule(CoxeterType::B, n, tables, worker_count()));
    }
    return o;
  });

  criterion(8, "group orders, relations and coset counts", [&] {
    Outcome o;
    for (int n = 2; n <= 7; ++n) o.require(verify_relations(CoxeterType::D, n, tables));
    for (int n = 1; n <= 5; ++n) o.require(verify_relations(CoxeterType::B, n, tables));
    return o;
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
