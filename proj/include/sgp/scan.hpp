#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/factorization.hpp"

namespace sgp::families {

enum class Family { SymS, SymT, Unbounded, Bresinsky };

std::string_view to_string(Family f) noexcept;
/// Accepts sym-s, sym-t, unbounded and bresinsky.
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Inclusive integer range lo..hi.
struct Range {
  Int lo = 0;
  Int hi = 0;
  bool operator==(const Range&) const = default;
};

/// Parses "a..b" or a single integer "a". Throws InvalidInput.
Range parse_range(std::string_view text);

enum class ScanStatus { Ok, BudgetExceeded, Invalid };
std::string_view to_string(ScanStatus s) noexcept;

struct ScanRow {
  std::optional<Int> n, e, q, d;
  std::optional<std::size_t> mu;
  std::optional<Int> frobenius, genus;
  std::optional<bool> symmetric;
  ScanStatus status = ScanStatus::Ok;
};

/// Which parameters are swept depends on the family: sym-s and sym-t use
/// (e, q, d); unbounded uses (n, e, q), with q = e - 4 when q is unset;
/// bresinsky sweeps q2 and reports it in the q column with e = 4.
struct ScanGrid {
  Family family = Family::SymS;
  std::optional<Range> n, e, q, d;
};

/// One row per grid point in lexicographic (n, e, q, d) order. Points that
/// violate the family constraints are reported as Invalid; fibers over the
/// budget as BudgetExceeded. Any contract violation is rethrown. `jobs`
/// workers share the grid; the result does not depend on it.
std::vector<ScanRow> scan(const ScanGrid& grid, EnumerationBudget budget = {}, unsigned jobs = 1);

/// Unbounded family at q = e - 4 over the given ranges.
std::vector<ScanRow> conjecture_scan(Range n, Range e, EnumerationBudget budget = {}, unsigned jobs = 1);

/// mu >= n + 2, the conjectured lower bound; false for rows without mu.
bool meets_conjectured_bound(const ScanRow& row);

/// Header `n,e,q,d,mu,frobenius,genus,symmetric,status`, LF line endings.
std::string to_csv(const std::vector<ScanRow>& rows);

}  // namespace sgp::families
