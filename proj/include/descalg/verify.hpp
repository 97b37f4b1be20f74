#pragma once

// Exhaustive and sampled checks of the template rules against the group
// oracle and of the algebraic identities they must satisfy.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "descalg/coxeter_oracle.hpp"
#include "descalg/report.hpp"

namespace descalg {

/// Rule product == oracle product (counting strategy) for every basis pair,
/// plus: coefficients >= 0, no term of weight n-1, and the augmentation
/// identity sum_L c_L |B_L| = |B_p| |B_q|.
CheckReport verify_rule(CoxeterType type, int n, TableStore& tables, unsigned jobs = 1);

/// Counting strategy == convolution + Moebius strategy on every basis pair.
CheckReport verify_oracle_strategies(CoxeterType type, int n, TableStore& tables, unsigned jobs = 1);

struct AssociativityOptions {
  /// Ranks up to this bound check every triple; larger ranks sample.
  int exhaustive_max_rank = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 0x5eed;
};

/// (B_p B_q) B_r == B_p (B_q B_r) and the two-sided identity law.
CheckReport verify_associativity(CoxeterType type, int n, unsigned jobs = 1,
                                 AssociativityOptions options = {});

/// Group orders, Coxeter relations, l(ws) = l(w) +- 1, X_S = {e}, X_empty = W
/// and |X_J| |W_J| = |W| for every J.
CheckReport verify_relations(CoxeterType type, int n, TableStore& tables);

/// Compares the rule and the oracle with a claimed product line; the
/// returned JSON lists the terms on which the claim differs.
nlohmann::ordered_json discrepancy_report(const BasisIndex& p, const BasisIndex& q,
                                          const std::string& claimed, const GroupTable& table);

/// The known misprinted product: B_[2,2]' B_[4]' in rank 4, claimed as
/// "4*[2,2]' + 1*[1,3] + 1*[1,1,1,1]".
nlohmann::ordered_json known_misprint_report(TableStore& tables);

}  // namespace descalg
