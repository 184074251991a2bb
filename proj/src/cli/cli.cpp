#include "sgp/cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sgp/cli/report.hpp"
#include "sgp/factorization.hpp"
#include "sgp/families.hpp"
#include "sgp/scan.hpp"
#include "sgp/semigroup.hpp"

namespace sgp::cli {
namespace {

using families::Family;

struct Options {
  std::string gens;
  std::string gens_file;
  bool json = false;
  bool apery = false;
  bool betti = false;
  std::optional<Int> element;
  std::size_t budget = 0;

  std::string family;
  std::optional<Int> n, e, q, d, q2;
  bool ideal = false;
  bool csv_stdout = false;

  std::string n_range, e_range, q_range, d_range, q2_range;
  unsigned jobs = 1;
  std::string csv_path;
};

std::vector<Int> parse_list(const std::string& text, char sep) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t\r");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value <= 0) {
      raise(ErrorKind::InvalidInput, "not a positive integer: '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<Int> read_generators(const Options& o) {
  if (!o.gens.empty() && !o.gens_file.empty()) {
    raise(ErrorKind::InvalidInput, "give either --gens or --gens-file, not both");
  }
  if (!o.gens_file.empty()) {
    std::ifstream in(o.gens_file);
    if (!in) raise(ErrorKind::InvalidInput, "cannot read " + o.gens_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_list(buffer.str(), '\n');
  }
  if (o.gens.empty()) raise(ErrorKind::InvalidInput, "no generators given (--gens or --gens-file)");
  return parse_list(o.gens, ',');
}

EnumerationBudget resolve_budget(const Options& o) {
  if (o.budget > 0) return {o.budget};
  return EnumerationBudget::from_environment();
}

Json to_json(const Factorization& f) { return Json(f.exponents); }

Json generators_json(const std::vector<Int>& v) { return Json(v); }

Int need(const std::optional<Int>& v, const char* name) {
  if (!v) raise(ErrorKind::InvalidInput, std::string("missing --") + name);
  return *v;
}

ReportDocument cmd_info(const Options& o) {
  ReportDocument doc;
  doc.command = "info";
  const auto input = read_generators(o);
  doc.params["gens"] = generators_json(input);
  const Semigroup s = Semigroup::generated_by(input);
  std::vector<Int> sorted = input;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const bool minimal = sorted == s.generators();
  doc.values["minimal_generators"] = generators_json(s.generators());
  if (!minimal) doc.values["notice"] = "input generators are not minimal; reduced";
  doc.values["multiplicity"] = s.multiplicity();
  doc.values["embedding_dimension"] = s.embedding_dimension();
  const auto p = profile(s);
  doc.values["frobenius"] = p.frobenius;
  doc.values["genus"] = p.genus;
  doc.values["symmetric"] = p.symmetric;
  if (o.apery) doc.values["apery"] = generators_json(s.multiplicity_apery().elements());
  if (o.betti) doc.values["presentation_cardinality"] = minimal_presentation_cardinality(s, resolve_budget(o));
  return doc;
}

ReportDocument cmd_apery(const Options& o) {
  ReportDocument doc;
  doc.command = "apery";
  const auto input = read_generators(o);
  doc.params["gens"] = generators_json(input);
  const Semigroup s = Semigroup::generated_by(input);
  const Int a = o.element.value_or(s.multiplicity());
  doc.params["element"] = a;
  const auto table = apery(s, a);
  doc.values["apery"] = generators_json(table.elements());
  doc.values["by_residue"] = generators_json(table.entries);
  doc.values["frobenius"] = frobenius(s);
  return doc;
}

ReportDocument cmd_betti(const Options& o) {
  ReportDocument doc;
  doc.command = "betti";
  const auto input = read_generators(o);
  doc.params["gens"] = generators_json(input);
  const Semigroup s = Semigroup::generated_by(input);
  const auto betti = betti_elements(s, resolve_budget(o));
  Json list = Json::array();
  std::size_t mu = 0;
  for (const auto& b : betti) {
    Json item;
    item["element"] = b.element;
    item["components"] = b.component_count;
    item["witnesses"] = Json::array();
    for (const auto& w : b.witnesses) item["witnesses"].push_back(to_json(w));
    list.push_back(std::move(item));
    mu += b.component_count - 1;
  }
  doc.values["betti_elements"] = std::move(list);
  doc.values["presentation_cardinality"] = mu;
  doc.values["search_bound"] = betti_search_bound(s);
  return doc;
}

ReportDocument cmd_family_verify(const Options& o) {
  ReportDocument doc;
  doc.command = "family verify";
  const auto family = families::parse_family(o.family);
  if (!family) raise(ErrorKind::InvalidInput, "unknown family '" + o.family + "'");
  doc.params["family"] = o.family;
  const auto budget = resolve_budget(o);
  families::VerificationReport report;
  switch (*family) {
    case Family::SymS: {
      families::SymSParams p{need(o.e, "e"), need(o.q, "q"), need(o.d, "d")};
      doc.params["e"] = p.e;
      doc.params["q"] = p.q;
      doc.params["d"] = p.d;
      p.validate();
      doc.values["generators"] = generators_json(families::gamma_s_generators(p).generators());
      report = families::verify_symmetric_family(p, budget);
      break;
    }
    case Family::SymT: {
      families::SymTParams p{need(o.e, "e"), need(o.q, "q"), need(o.d, "d")};
      doc.params["e"] = p.e;
      doc.params["q"] = p.q;
      doc.params["d"] = p.d;
      p.validate();
      doc.values["generators"] = generators_json(families::gamma_t_generators(p).generators());
      report = families::verify_symmetric_family(p, budget);
      break;
    }
    case Family::Unbounded: {
      families::UnboundedParams p{need(o.n, "n"), need(o.e, "e"), need(o.q, "q")};
      doc.params["n"] = p.n;
      doc.params["e"] = p.e;
      doc.params["q"] = p.q;
      doc.params["ideal"] = o.ideal;
      p.validate();
      doc.values["generators"] = generators_json(families::unbounded_generators(p).generators());
      report = families::verify_unbounded_family(p, o.ideal, budget);
      break;
    }
    case Family::Bresinsky: {
      families::BresinskyParams p{need(o.q2, "q2")};
      doc.params["q2"] = p.q2;
      p.validate();
      doc.values["generators"] = generators_json(families::bresinsky_generators(p).generators());
      report = families::verify_bresinsky_family(p, budget);
      break;
    }
  }
  doc.checks = std::move(report.checks);
  return doc;
}

std::optional<families::Range> range_of(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return families::parse_range(text);
}

std::string cell(const families::ScanRow& r) {
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](const char* name, const std::optional<Int>& v) {
    if (v) {
      os << sep << name << '=' << *v;
      sep = ",";
    }
  };
  put("n", r.n);
  put("e", r.e);
  put(r.d || r.n ? "q" : "q2", r.q);
  put("d", r.d);
  return os.str();
}

void add_scan_checks(Family family, const std::vector<families::ScanRow>& rows, ReportDocument& doc) {
  using families::ScanStatus;
  std::optional<std::size_t> previous;
  std::string increasing_witness;
  for (const auto& r : rows) {
    if (r.status != ScanStatus::Ok) continue;
    switch (family) {
      case Family::SymS:
      case Family::SymT: {
        const auto expected = static_cast<std::size_t>(*r.e * (*r.e - 1) / 2 - 1);
        doc.checks.push_back({cell(r) + " symmetric with mu = e(e-1)/2 - 1", *r.symmetric && *r.mu == expected,
                              *r.symmetric && *r.mu == expected ? "" : "mu " + std::to_string(*r.mu),
                              std::to_string(*r.mu)});
        break;
      }
      case Family::Unbounded:
        if (*r.e == 4 && *r.q == 0) {
          const auto expected = static_cast<std::size_t>(2 * (*r.n + 1));
          doc.checks.push_back({cell(r) + " mu = 2(n+1)", *r.mu == expected,
                                *r.mu == expected ? "" : "mu " + std::to_string(*r.mu), std::to_string(*r.mu)});
        } else if (*r.q == *r.e - 4) {
          const bool ok = families::meets_conjectured_bound(r);
          doc.checks.push_back({cell(r) + " mu >= n+2", ok, ok ? "" : "mu " + std::to_string(*r.mu),
                                std::to_string(*r.mu)});
        }
        break;
      case Family::Bresinsky:
        if (previous && *r.mu <= *previous && increasing_witness.empty()) {
          increasing_witness = cell(r) + " has mu " + std::to_string(*r.mu);
        }
        previous = r.mu;
        break;
    }
  }
  if (family == Family::Bresinsky) {
    doc.checks.push_back({"mu strictly increasing in q2", increasing_witness.empty(), increasing_witness, ""});
  }
}

ReportDocument cmd_scan(const Options& o, std::string& csv) {
  ReportDocument doc;
  doc.command = "scan";
  const auto family = families::parse_family(o.family);
  if (!family) raise(ErrorKind::InvalidInput, "unknown family '" + o.family + "'");
  doc.params["family"] = o.family;
  families::ScanGrid grid{*family, range_of(o.n_range), range_of(o.e_range), range_of(o.q_range),
                          range_of(o.d_range)};
  if (*family == Family::Bresinsky) grid.q = range_of(o.q2_range);
  for (const auto& [name, text] : {std::pair{"n", o.n_range}, {"e", o.e_range}, {"q", o.q_range},
                                   {"d", o.d_range}, {"q2", o.q2_range}}) {
    if (!text.empty()) doc.params[name] = text;
  }
  const auto budget = resolve_budget(o);
  doc.params["budget"] = budget.max_fiber;
  if (o.jobs == 0) raise(ErrorKind::InvalidInput, "--jobs must be positive");

  const auto rows = families::scan(grid, budget, o.jobs);
  Json table = Json::array();
  for (const auto& r : rows) {
    Json row;
    auto put = [&](const char* key, const auto& v) {
      if (v) row[key] = *v;
    };
    put("n", r.n);
    put("e", r.e);
    put("q", r.q);
    put("d", r.d);
    put("mu", r.mu);
    put("frobenius", r.frobenius);
    put("genus", r.genus);
    put("symmetric", r.symmetric);
    row["status"] = std::string(to_string(r.status));
    table.push_back(std::move(row));
  }
  doc.values["rows"] = std::move(table);
  add_scan_checks(*family, rows, doc);
  csv = families::to_csv(rows);
  return doc;
}

ReportDocument cmd_ideal_check(const Options& o) {
  ReportDocument doc;
  doc.command = "ideal check";
  const Int n = need(o.n, "n");
  doc.params["n"] = n;
  const Semigroup s = families::unbounded_generators({n, 4, 0});
  doc.values["generators"] = generators_json(s.generators());
  doc.checks = families::verify_ed4_ideal(n, resolve_budget(o)).checks;
  return doc;
}

void add_generator_options(CLI::App* sub, Options& o) {
  sub->add_option("--gens", o.gens, "comma-separated generators, e.g. 7,8,17,18");
  sub->add_option("--gens-file", o.gens_file, "file with one generator per line");
  sub->add_flag("--json", o.json, "emit a JSON report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical semigroups from concatenated arithmetic sequences", "sgp"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "invariants of one semigroup");
  add_generator_options(info, o);
  info->add_flag("--apery", o.apery, "include the Apery set of the multiplicity");
  info->add_flag("--betti", o.betti, "include the minimal presentation cardinality");
  info->add_option("--budget", o.budget, "largest fiber to enumerate");

  auto* apery_cmd = app.add_subcommand("apery", "Apery set with respect to an element");
  add_generator_options(apery_cmd, o);
  apery_cmd->add_option("--element", o.element, "element of the semigroup (default: multiplicity)");

  auto* betti = app.add_subcommand("betti", "Betti elements and presentation cardinality");
  add_generator_options(betti, o);
  betti->add_option("--budget", o.budget, "largest fiber to enumerate");

  auto* family = app.add_subcommand("family", "parametric families");
  family->require_subcommand(1);
  auto* verify = family->add_subcommand("verify", "check every closed-form claim for one parameter point");
  verify->add_option("--family", o.family, "sym-s, sym-t, unbounded or bresinsky")->required();
  verify->add_option("--n", o.n);
  verify->add_option("--e", o.e);
  verify->add_option("--q", o.q);
  verify->add_option("--d", o.d);
  verify->add_option("--q2", o.q2);
  verify->add_flag("--ideal", o.ideal, "unbounded family: certify the binomial generating sets");
  verify->add_flag("--json", o.json, "emit a JSON report");
  verify->add_flag("--csv", o.csv_stdout, "emit the checks as CSV");
  verify->add_option("--budget", o.budget, "largest fiber to enumerate");

  auto* scan = app.add_subcommand("scan", "sweep a parameter grid");
  scan->add_option("--family", o.family, "sym-s, sym-t, unbounded or bresinsky")->required();
  scan->add_option("--n", o.n_range, "range a..b");
  scan->add_option("--e", o.e_range, "range a..b");
  scan->add_option("--q", o.q_range, "range a..b (unbounded: defaults to e-4)");
  scan->add_option("--d", o.d_range, "range a..b");
  scan->add_option("--q2", o.q2_range, "range a..b (bresinsky)");
  scan->add_option("--jobs", o.jobs, "worker threads");
  scan->add_option("--budget", o.budget, "largest fiber to enumerate (overrides SGP_BUDGET)");
  scan->add_option("--csv", o.csv_path, "write the table to this CSV file");
  scan->add_flag("--json", o.json, "emit a JSON report");

  auto* ideal = app.add_subcommand("ideal", "defining ideal certificates");
  ideal->require_subcommand(1);
  auto* check = ideal->add_subcommand("check", "binomial generating sets of the e = 4 unbounded family");
  check->add_option("--n", o.n)->required();
  check->add_flag("--json", o.json, "emit a JSON report");
  check->add_option("--budget", o.budget, "largest fiber to enumerate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  std::string csv;
  try {
    if (*info) {
      doc = cmd_info(o);
    } else if (*apery_cmd) {
      doc = cmd_apery(o);
    } else if (*betti) {
      doc = cmd_betti(o);
    } else if (*verify) {
      doc = cmd_family_verify(o);
    } else if (*scan) {
      doc = cmd_scan(o, csv);
    } else {
      doc = cmd_ideal_check(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::FamilyContractViolation ? kCheckFailed : kInvalidInput;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();

  if (*scan && !o.csv_path.empty()) {
    std::ofstream file(o.csv_path, std::ios::binary);
    if (!(file << csv) || !file.flush()) {
      err << "error: cannot write " << o.csv_path << '\n';
      return kInvalidInput;
    }
  }

  if (o.json) {
    out << doc.to_json().dump(2) << '\n';
  } else if (o.csv_stdout) {
    out << doc.checks_csv();
  } else {
    out << doc.to_text();
    if (*scan && o.csv_path.empty()) out << csv;
  }
  return doc.passed() ? kOk : kCheckFailed;
}

}  // namespace sgp::cli
