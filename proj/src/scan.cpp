#include "sgp/scan.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "sgp/families.hpp"

namespace sgp::families {
namespace {

Int parse_int(std::string_view text) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) raise(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<Int> values(const std::optional<Range>& r, const char* name) {
  if (!r) raise(ErrorKind::InvalidInput, std::string("scan needs a range for ") + name);
  std::vector<Int> out;
  for (Int v = r->lo; v <= r->hi; ++v) out.push_back(v);
  return out;
}

ScanRow point(std::optional<Int> n, Int e, Int q, std::optional<Int> d) {
  ScanRow r;
  r.n = n;
  r.e = e;
  r.q = q;
  r.d = d;
  return r;
}

std::vector<ScanRow> grid_points(const ScanGrid& g) {
  std::vector<ScanRow> rows;
  switch (g.family) {
    case Family::SymS:
    case Family::SymT:
      for (Int e : values(g.e, "e"))
        for (Int q : values(g.q, "q"))
          for (Int d : values(g.d, "d")) rows.push_back(point(std::nullopt, e, q, d));
      break;
    case Family::Unbounded:
      for (Int n : values(g.n, "n"))
        for (Int e : values(g.e, "e")) {
          if (!g.q) {
            rows.push_back(point(n, e, e - 4, std::nullopt));
            continue;
          }
          for (Int q : values(g.q, "q")) rows.push_back(point(n, e, q, std::nullopt));
        }
      break;
    case Family::Bresinsky:
      for (Int q2 : values(g.q, "q2")) rows.push_back(point(std::nullopt, 4, q2, std::nullopt));
      break;
  }
  return rows;
}

Semigroup build(Family family, const ScanRow& row) {
  switch (family) {
    case Family::SymS: return gamma_s_generators({*row.e, *row.q, *row.d});
    case Family::SymT: return gamma_t_generators({*row.e, *row.q, *row.d});
    case Family::Unbounded: return unbounded_generators({*row.n, *row.e, *row.q});
    case Family::Bresinsky: return bresinsky_generators({*row.q});
  }
  raise(ErrorKind::InvalidInput, "unknown family");
}

void fill(Family family, ScanRow& row, EnumerationBudget budget) {
  std::optional<Semigroup> s;
  try {
    s.emplace(build(family, row));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::InvalidInput) throw;
    row.status = ScanStatus::Invalid;
    return;
  }
  const auto p = profile(*s);
  row.frobenius = p.frobenius;
  row.genus = p.genus;
  row.symmetric = p.symmetric;
  try {
    row.mu = minimal_presentation_cardinality(*s, budget);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BudgetExceeded) throw;
    row.status = ScanStatus::BudgetExceeded;
  }
}

template <class T>
void put(std::ostringstream& os, const std::optional<T>& v) {
  if (v) os << *v;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::SymS: return "sym-s";
    case Family::SymT: return "sym-t";
    case Family::Unbounded: return "unbounded";
    case Family::Bresinsky: return "bresinsky";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::SymS, Family::SymT, Family::Unbounded, Family::Bresinsky}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) raise(ErrorKind::InvalidInput, "empty range '" + std::string(text) + "'");
  return r;
}

std::string_view to_string(ScanStatus s) noexcept {
  switch (s) {
    case ScanStatus::Ok: return "ok";
    case ScanStatus::BudgetExceeded: return "budget_exceeded";
    case ScanStatus::Invalid: return "invalid";
  }
  return "unknown";
}

std::vector<ScanRow> scan(const ScanGrid& grid, EnumerationBudget budget, unsigned jobs) {
  auto rows = grid_points(grid);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        fill(grid.family, rows[i], budget);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<ScanRow> conjecture_scan(Range n, Range e, EnumerationBudget budget, unsigned jobs) {
  return scan({Family::Unbounded, n, e, std::nullopt, std::nullopt}, budget, jobs);
}

bool meets_conjectured_bound(const ScanRow& row) {
  return row.mu && row.n && static_cast<Int>(*row.mu) >= *row.n + 2;
}

std::string to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "n,e,q,d,mu,frobenius,genus,symmetric,status\n";
  for (const auto& r : rows) {
    put(os, r.n);
    os << ',';
    put(os, r.e);
    os << ',';
    put(os, r.q);
    os << ',';
    put(os, r.d);
    os << ',';
    put(os, r.mu);
    os << ',';
    put(os, r.frobenius);
    os << ',';
    put(os, r.genus);
    os << ',';
    if (r.symmetric) os << (*r.symmetric ? "true" : "false");
    os << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

}  // namespace sgp::families
