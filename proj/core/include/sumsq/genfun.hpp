#pragma once

// Both sides of the exact single-variable q-series identities, built as
// IntSeries and compared coefficient by coefficient.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumsq/series.hpp"

namespace sumsq::genfun {

using series::IntSeries;

enum class IdentityId {
    andrews516,
    gauss_gen,
    eyphka,
    jacobi4,
    two_square,
    triple_product,
    eta_limits,
};

// CLI spelling, e.g. "gauss-gen".
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identity_ids();

struct IdentityCheckResult {
    IdentityId identity_id;
    std::string label;
    std::size_t order = 0;
    bool passed = true;
    std::optional<series::Mismatch> first_mismatch;
};

// Compares lhs and rhs through `order`; the shared harness behind every check.
IdentityCheckResult check_series_identity(IdentityId id, std::string label, const IntSeries& lhs,
                                          const IntSeries& rhs, std::size_t order);

// sum r_s(n) (-q)^n, as the s-th power of the signed theta series. s in {2,3,4}.
IntSeries series_R(int s, std::size_t order);

// sum r_3Delta(n) q^n. Built as the cube of sum q^(k(k+1)/2) and as
// (q^2;q^2)^6 / (q;q)^3; throws ConsistencyError if they differ.
IntSeries series_triangular3(std::size_t order);

// 1 + 4 sum (-1)^n q^n/(1+q^n) - 2 sum_{n>=1,|j|<n} q^(n^2-j^2)(1-q^n)(-1)^j/(1+q^n).
IntSeries series_andrews_rhs(std::size_t order);

// 1 + 6 sum (-q)^(rs)(-1)^(rs+r+s+1) + 4 sum (-q)^(rs+rt+st)(-1)^(rs+rt+st+r+s+t+1).
IntSeries series_gauss_gen_rhs(std::size_t order);

// 1 + 3 sum q^r + 3 sum q^(2rs+r+s) + (sum_{r,s,t>0} + sum_{r,s,t<0}) q^(2rs+2rt+2st+r+s+t).
IntSeries series_eyphka_rhs(std::size_t order);

// The three eta-quotient identities the x -> -1 and q -> q^2, x -> q
// specialisations reduce to.
std::vector<IdentityCheckResult> series_eta_limit_checks(std::size_t order);

// Dispatches one identity at the given order. eta_limits yields three results.
std::vector<IdentityCheckResult> run_identity(IdentityId id, std::size_t order);

} // namespace sumsq::genfun
