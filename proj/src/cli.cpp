#include "overpart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "overpart/errors.hpp"
#include "overpart/hyper.hpp"
#include "overpart/maps.hpp"
#include "overpart/reports.hpp"
#include "parallel.hpp"

namespace overpart::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int t = 1;
  std::string t_range = "1..5";
  int max_n = 0;  // 0: command default
  int order = 30;
  std::string z = "tracked";
  std::string format = "text";
  bool format_given = false;
  std::string output;
  bool check = false;
  std::string map = "phi";
  std::string suite = "all";
  std::string input;
};

struct Result {
  std::string text;
  int code = kOk;
  std::string diagnostic;  // for err
};

ZMode parse_z(const std::string& z) {
  if (z == "0") return ZMode::zero;
  if (z == "1") return ZMode::one;
  return ZMode::tracked;
}

std::vector<int> parse_t_range(const std::string& s) {
  auto parse_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 1) throw UsageError("bad t range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  const int lo = parse_int(s.substr(0, dots));
  const int hi = dots == std::string::npos ? lo : parse_int(s.substr(dots + 2));
  if (hi < lo) throw UsageError("empty t range '" + s + "'");
  std::vector<int> out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

int default_order() {
  const char* env = std::getenv("OVERPART_DEFAULT_ORDER");
  if (env == nullptr || *env == '\0') return 30;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 100000) throw UsageError("OVERPART_DEFAULT_ORDER must be a positive integer");
  return static_cast<int>(v);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Table of g_t(m, n).

Result cmd_table(const Config& c) {
  const int max_n = c.max_n > 0 ? c.max_n : 10;
  const ZMode mode = parse_z(c.z);
  const QSeries series = rhs_theorem11(c.t, mode, max_n + 1);

  int max_m = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto& coeff = series.coeff(n);
    if (!coeff.is_zero()) max_m = std::max(max_m, coeff.max_exp());
  }
  std::vector<std::string> columns;
  if (mode == ZMode::one) {
    columns.push_back("total");
  } else {
    for (int m = 0; m <= max_m; ++m) columns.push_back("m=" + std::to_string(m));
  }
  std::vector<std::vector<std::string>> rows;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> row;
    const auto& coeff = series.coeff(n);
    for (int m = 0; m < static_cast<int>(columns.size()); ++m) row.push_back(coeff.coeff(m).get_str());
    rows.push_back(std::move(row));
  }

  Result r;
  std::ostringstream os;
  if (c.format == "json") {
    json jrows = json::array();
    for (int n = 1; n <= max_n; ++n) jrows.push_back({{"n", n}, {"counts", rows[static_cast<std::size_t>(n - 1)]}});
    os << dump({{"t", c.t}, {"z", c.z}, {"max_n", max_n}, {"columns", columns}, {"rows", std::move(jrows)}});
  } else if (c.format == "csv") {
    os << "n";
    for (const auto& col : columns) os << ',' << col;
    os << '\n';
    for (int n = 1; n <= max_n; ++n) {
      os << n;
      for (const auto& v : rows[static_cast<std::size_t>(n - 1)]) os << ',' << v;
      os << '\n';
    }
  } else {
    std::vector<std::size_t> width(columns.size() + 1, std::to_string(max_n).size());
    width[0] = std::max<std::size_t>(width[0], 1);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      width[j + 1] = columns[j].size();
      for (const auto& row : rows) width[j + 1] = std::max(width[j + 1], row[j].size());
    }
    os << "g_" << c.t << "(m, n), z " << c.z << '\n';
    os << std::setw(static_cast<int>(width[0])) << "n";
    for (std::size_t j = 0; j < columns.size(); ++j) os << "  " << std::setw(static_cast<int>(width[j + 1])) << columns[j];
    os << '\n';
    for (int n = 1; n <= max_n; ++n) {
      os << std::setw(static_cast<int>(width[0])) << n;
      const auto& row = rows[static_cast<std::size_t>(n - 1)];
      for (std::size_t j = 0; j < row.size(); ++j) os << "  " << std::setw(static_cast<int>(width[j + 1])) << row[j];
      os << '\n';
    }
  }
  r.text = os.str();

  if (c.check) {
    const QSeries enumerated = gf_from_enumeration(Family::Gt, c.t, max_n).specialize(mode);
    const int diff = enumerated.first_difference(series, max_n + 1);
    if (diff != max_n + 1) {
      r.code = kVerificationFailed;
      r.diagnostic = "check failed: series and enumeration differ at n = " + std::to_string(diff) + "\n";
    }
  }
  return r;
}

// phi, psi.

void require_plain_or_json(const Config& c) {
  if (c.format == "csv") throw UsageError("csv output is only available for table");
}

Result cmd_phi(const Config& c) {
  require_plain_or_json(c);
  const Overpartition pi = parse_overpartition(c.input);
  const Overpartition image = phi(pi, c.t);
  const PartitionStats st = stats(pi, c.t);
  std::ostringstream os;
  if (c.format == "json") {
    os << dump({{"t", c.t},
                {"input", format(pi)},
                {"image", format(image)},
                {"s", st.s},
                {"k", st.k},
                {"weight", pi.weight()},
                {"o", st.o},
                {"image_o", image.overlined_count()}});
  } else {
    os << format(image) << '\n'
       << "s=" << st.s << " k=" << st.k << " weight=" << pi.weight() << " o=" << st.o
       << " image_o=" << image.overlined_count() << '\n';
  }
  return {os.str(), kOk, {}};
}

Result cmd_psi(const Config& c) {
  require_plain_or_json(c);
  const Bipartition beta = parse_bipartition(c.input);
  const Overpartition image = psi(beta, c.t);
  std::ostringstream os;
  if (c.format == "json") {
    os << dump({{"t", c.t},
                {"input", format(beta)},
                {"image", format(image)},
                {"t_count", beta.t_count},
                {"weight", beta.weight()},
                {"o", beta.overlined_count()},
                {"image_o", image.overlined_count()}});
  } else {
    os << format(image) << '\n'
       << "t_count=" << beta.t_count << " weight=" << beta.weight() << " o=" << beta.overlined_count()
       << " image_o=" << image.overlined_count() << '\n';
  }
  return {os.str(), kOk, {}};
}

// preimages.

template <class Member>
Result render_preimages(const Config& c, const PreimageReport<Member>& report,
                        const std::map<Overpartition, std::vector<Member>>* brute) {
  std::optional<bool> check;
  if (brute != nullptr) {
    auto it = brute->find(report.mu);
    std::set<Member> expected;
    if (it != brute->end()) expected.insert(it->second.begin(), it->second.end());
    const std::set<Member> got(report.fiber.begin(), report.fiber.end());
    check = got == expected && static_cast<int>(report.fiber.size()) == report.expected_size;
  }
  std::ostringstream os;
  if (c.format == "json") {
    json j = to_json(report);
    if (check) j["brute_force_match"] = *check;
    os << dump(j);
  } else {
    for (const auto& x : report.fiber) os << format(x) << '\n';
    os << "size=" << report.fiber.size() << " same_overlines=" << report.same_overlines
       << " one_more_overline=" << report.one_more_overline << " expected_size=" << report.expected_size << '\n';
    if (check) os << "brute_force_match=" << (*check ? "true" : "false") << '\n';
  }
  return {os.str(), check.value_or(true) ? kOk : kVerificationFailed, {}};
}

Result cmd_preimages(const Config& c) {
  require_plain_or_json(c);
  const Overpartition mu = parse_overpartition(c.input);
  if (c.map == "psi") {
    auto report = psi_preimages(mu, c.t);
    if (!c.check) return render_preimages<Bipartition>(c, report, nullptr);
    const auto brute = psi_fibers_by_enumeration(c.t, mu.weight());
    return render_preimages(c, report, &brute);
  }
  auto report = phi_preimages(mu, c.t);
  if (!c.check) return render_preimages<Overpartition>(c, report, nullptr);
  const auto brute = phi_fibers_by_enumeration(c.t, mu.weight());
  return render_preimages(c, report, &brute);
}

// verify.

struct Task {
  std::string suite;
  int t = 0;  // 0 for cases not tied to one t
  json detail;
};

const char* mode_name(ZMode m) { return m == ZMode::tracked ? "tracked" : m == ZMode::zero ? "0" : "1"; }

json run_gf(int t, int order) {
  const QSeries enumerated = gf_from_enumeration(Family::Gt, t, order - 1);
  const QSeries tracked = rhs_theorem11(t, ZMode::tracked, order);
  const bool z_tracked = tracked.equal_to(enumerated, order);
  const bool z0 = rhs_theorem11(t, ZMode::zero, order).equal_to(rhs_breuer_kronholm(t, order), order) &&
                  enumerated.specialize(ZMode::zero).equal_to(rhs_breuer_kronholm(t, order), order);
  const bool z1 = rhs_theorem11(t, ZMode::one, order).equal_to(rhs_overpartition_count(t, order), order) &&
                  enumerated.specialize(ZMode::one).equal_to(rhs_overpartition_count(t, order), order);
  return {{"case", "t=" + std::to_string(t)},
          {"pass", z_tracked && z0 && z1},
          {"z_tracked", z_tracked},
          {"z_0", z0},
          {"z_1", z1}};
}

json run_fibers(int t, int max_n) {
  json j{{"case", "t=" + std::to_string(t)}};
  bool pass = true;
  for (auto which : {MapKind::phi, MapKind::psi}) {
    const char* name = which == MapKind::phi ? "phi" : "psi";
    const FiberCheckReport fibers = check_fibers(t, max_n, which);
    const FiberIdentityReport identity = verify_fiber_identity(t, max_n, which);
    json sub = to_json(fibers);
    sub["aggregation"] = identity.pass;
    if (!identity.pass) sub["aggregation_failure"] = identity.first_failure;
    pass = pass && fibers.pass && identity.pass;
    j[name] = std::move(sub);
  }
  j["pass"] = pass;
  return j;
}

json run_chu_instance(int t, int order) {
  const bool ok = check_chu({-1, 1, 0}, {-1, 1, 1}, t, order);
  return {{"case", "a=-z c=-z*q n=" + std::to_string(t)}, {"pass", ok}};
}

json run_chu_grid(int order) {
  const std::vector<QMonomial> as{QMonomial::q(1), {-1, 1, 0}, {-1, 1, 2}};
  const std::vector<QMonomial> cs{QMonomial::q(3), {-1, 1, 1}, {1, 1, 2}};
  int checked = 0;
  json failures = json::array();
  for (const auto& a : as) {
    for (const auto& c : cs) {
      for (int n = 0; n <= 6; ++n) {
        ++checked;
        if (!check_chu(a, c, n, order)) {
          failures.push_back("a=" + a.to_string() + " c=" + c.to_string() + " n=" + std::to_string(n));
        }
      }
    }
  }
  json j{{"case", "grid of 9 (a, c) pairs, n <= 6"}, {"pass", failures.empty()}, {"checked", checked}};
  if (!failures.empty()) j["failures"] = std::move(failures);
  return j;
}

json run_transform(int t, int order) {
  const QMonomial q = QMonomial::q(1);
  const bool ok = check_32_transform(q, q, {-1, 1, t + 1}, {-1, 1, 2}, QMonomial::q(t + 2), order);
  return {{"case", "a=q b=q c=-z*q^" + std::to_string(t + 1) + " d=-z*q^2 e=q^" + std::to_string(t + 2)},
          {"pass", ok}};
}

json run_chain(int t, int order) {
  json j{{"case", "t=" + std::to_string(t)}};
  bool pass = true;
  for (auto mode : {ZMode::tracked, ZMode::zero, ZMode::one}) {
    const ChainReport report = verify_section3_chain(t, order, mode, true, Exec::serial);
    json sub = to_json(report);
    if (!report.pass) sub["first_failure"] = report.first_failure;
    pass = pass && report.pass;
    j[std::string("z_") + mode_name(mode)] = std::move(sub);
  }
  j["pass"] = pass;
  return j;
}

Result cmd_verify(const Config& c) {
  static const std::vector<std::string> kSuites{"gf", "fibers", "chu", "transform", "chain"};
  const std::vector<int> ts = parse_t_range(c.t_range);
  const int max_n = c.max_n > 0 ? c.max_n : 20;
  std::vector<std::string> suites = c.suite == "all" ? kSuites : std::vector<std::string>{c.suite};

  std::vector<Task> tasks;
  for (const auto& s : suites) {
    for (int t : ts) tasks.push_back({s, t, {}});
    if (s == "chu") tasks.push_back({s, 0, {}});
  }
  // Suites are independent; results land in their own slots so the output
  // order does not depend on scheduling.
  detail::for_each_index(static_cast<int>(tasks.size()), Exec::automatic, [&](int i) {
    Task& task = tasks[static_cast<std::size_t>(i)];
    try {
      if (task.suite == "gf") task.detail = run_gf(task.t, c.order);
      if (task.suite == "fibers") task.detail = run_fibers(task.t, max_n);
      if (task.suite == "chu") task.detail = task.t == 0 ? run_chu_grid(c.order) : run_chu_instance(task.t, c.order);
      if (task.suite == "transform") task.detail = run_transform(task.t, c.order);
      if (task.suite == "chain") task.detail = run_chain(task.t, c.order);
    } catch (const std::exception& e) {
      task.detail = {{"case", "t=" + std::to_string(task.t)}, {"pass", false}, {"error", e.what()}};
    }
    task.detail["suite"] = task.suite;
  });

  bool pass = true;
  json details = json::array();
  for (const auto& task : tasks) {
    pass = pass && task.detail.at("pass").get<bool>();
    details.push_back(task.detail);
  }

  std::ostringstream os;
  if (c.format_given && c.format == "text") {
    for (const auto& task : tasks) {
      os << (task.detail.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << task.suite << "  "
         << task.detail.at("case").get<std::string>() << '\n';
    }
    os << (pass ? "all checks passed" : "some checks failed") << '\n';
  } else {
    json j{{"suite", c.suite}, {"t", ts}, {"order", c.order}, {"pass", pass}, {"details", std::move(details)}};
    if (c.suite == "fibers" || c.suite == "all") j["max_n"] = max_n;
    os << dump(j);
  }
  return {os.str(), pass ? kOk : kVerificationFailed, {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Overpartitions with bounded part differences: tables, maps, fibers and identity checks"};
  app.name(args.empty() ? "overpart" : args.front());
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json", "csv"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("-o,--output", c.output, "Write output to this file instead of stdout");
  };

  auto* table = app.add_subcommand("table", "Print g_t(m, n) from the generating function");
  table->add_option("--t", c.t, "Difference bound t")->check(CLI::PositiveNumber);
  table->add_option("--max-n", c.max_n, "Largest weight n (default 10)")->check(CLI::PositiveNumber);
  table->add_option("--z", c.z, "z tracked, or specialized to 0 or 1")
      ->check(CLI::IsMember({"tracked", "0", "1"}));
  table->add_flag("--check", c.check, "Cross-check every entry against enumeration");
  add_common(table);

  auto* phi_cmd = app.add_subcommand("phi", "Apply phi: G_t -> P_t to an overpartition such as \"7,4~\"");
  phi_cmd->add_option("--t", c.t, "Difference bound t")->required()->check(CLI::PositiveNumber);
  phi_cmd->add_option("partition", c.input, "Overpartition")->required();
  add_common(phi_cmd);

  auto* psi_cmd = app.add_subcommand("psi", "Apply psi: B_t -> P_t to a bipartition such as \"[3^1 | 3,3,1~,1]\"");
  psi_cmd->add_option("--t", c.t, "Difference bound t")->required()->check(CLI::PositiveNumber);
  psi_cmd->add_option("bipartition", c.input, "Bipartition")->required();
  add_common(psi_cmd);

  auto* pre = app.add_subcommand("preimages", "List the fiber of phi or psi over mu in P_t");
  pre->add_option("--t", c.t, "Difference bound t")->required()->check(CLI::PositiveNumber);
  pre->add_option("--map", c.map, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));
  pre->add_flag("--check", c.check, "Compare with the brute-force fiber");
  pre->add_option("mu", c.input, "Overpartition in P_t")->required();
  add_common(pre);

  auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON summary");
  verify->add_option("--suite", c.suite, "gf, fibers, chu, transform, chain or all")
      ->check(CLI::IsMember({"gf", "fibers", "chu", "transform", "chain", "all"}));
  verify->add_option("--t", c.t_range, "t or a range a..b (default 1..5)");
  verify->add_option("--order", c.order, "Truncation order (default 30 or $OVERPART_DEFAULT_ORDER)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-n", c.max_n, "Largest weight for the fiber suite (default 20)")
      ->check(CLI::PositiveNumber);
  add_common(verify);

  try {
    c.order = default_order();
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  CLI::App* used = app.get_subcommands().front();
  c.format_given = used->count("--format") > 0;

  Result result;
  try {
    if (used == table) result = cmd_table(c);
    if (used == phi_cmd) result = cmd_phi(c);
    if (used == psi_cmd) result = cmd_psi(c);
    if (used == pre) result = cmd_preimages(c);
    if (used == verify) result = cmd_verify(c);
  } catch (const std::exception& e) {
    // Parse errors, domain violations and bad arguments alike.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  err << result.diagnostic;
  if (c.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!(file << result.text)) {
      err << "error: cannot write " << c.output << '\n';
      return kUsageError;
    }
  }
  return result.code;
}

}  // namespace overpart::cli
