#include "overpart/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "overpart/errors.hpp"
#include "parallel.hpp"

namespace overpart {

LemmaSolution solve_system(int n, int nprime) {
  if (n < 1) throw std::invalid_argument("solve_system: n must be positive");
  if (nprime < 0) throw std::invalid_argument("solve_system: n' must be nonnegative");
  LemmaSolution sol;
  sol.s = nprime / n;
  sol.y = nprime - sol.s * n;
  sol.x = n - sol.y;
  return sol;
}

Overpartition phi(const Overpartition& pi, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (!in_Gt(pi, t)) throw NotInDomain(format(pi) + " is not in G_" + std::to_string(t));
  const PartitionStats st = stats(pi, t);
  const auto parts = pi.parts();
  const auto k = static_cast<std::size_t>(st.k);

  std::vector<std::pair<int, bool>> image(static_cast<std::size_t>(st.s * (st.ell - st.k) + (st.s + 1) * st.k),
                                          {t, false});
  auto push_residue = [&image](int r, bool overlined) {
    if (r > 0) image.emplace_back(r, overlined);  // zero residues vanish, marks included
  };
  for (std::size_t j = k; j < parts.size(); ++j) push_residue(parts[j].first - st.s * t, parts[j].second);
  for (std::size_t i = 0; i < k; ++i) push_residue(parts[i].first - (st.s + 1) * t, parts[i].second);
  return Overpartition::from_parts(image);
}

Overpartition psi(const Bipartition& beta, int t) {
  if (beta.t != t) {
    throw NotInDomain("bipartition is built on t = " + std::to_string(beta.t) + ", not " + std::to_string(t));
  }
  const int count = beta.t_count + beta.second.multiplicity(t);
  std::vector<Run> runs;
  if (count > 0) runs.push_back({t, count, false});
  for (const auto& r : beta.second.runs()) {
    if (r.part != t) runs.push_back(r);
  }
  return Overpartition::from_runs(std::move(runs));
}

int expected_fiber_size(const Overpartition& mu, int t) {
  const int m = mu.multiplicity(t);
  return mu.length() == m ? 2 * m : 2 * m + 1;
}

ZLaurentPoly fiber_weight(const Overpartition& mu, int t) {
  const int m = mu.multiplicity(t);
  const long plain = (mu.length() == m ? 0 : 1) + m;
  return ZLaurentPoly{{0, plain}, {1, m}}.times_monomial(1, mu.overlined_count());
}

namespace {

void require_Pt(const Overpartition& mu, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (!in_Pt(mu, t)) throw NotInDomain(format(mu) + " is not in P_" + std::to_string(t));
}

template <class Member>
void tally_overlines(PreimageReport<Member>& report) {
  const int base = report.mu.overlined_count();
  for (const auto& member : report.fiber) {
    const int o = member.overlined_count();
    if (o == base) ++report.same_overlines;
    if (o == base + 1) ++report.one_more_overline;
  }
}

// Marks the first occurrence of the smallest multiple of t.
Overpartition overline_smallest_multiple(const Overpartition& pi, int t) {
  auto runs = pi.runs();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    if (it->part % t == 0) {
      it->first_overlined = true;
      return Overpartition::from_runs(std::move(runs));
    }
  }
  throw std::logic_error("no multiple of t to overline in " + format(pi));
}

}  // namespace

PreimageReport<Overpartition> phi_preimages(const Overpartition& mu, int t) {
  require_Pt(mu, t);
  PreimageReport<Overpartition> report{mu, t, {}, 0, 0, expected_fiber_size(mu, t)};
  const int m = mu.multiplicity(t);
  std::vector<std::pair<int, bool>> rest;
  for (const auto& p : mu.parts()) {
    if (p.first != t) rest.push_back(p);
  }
  const int r = static_cast<int>(rest.size());
  const int delta = r == 0 ? 1 : 0;

  for (int ell = r + delta; ell <= r + m; ++ell) {
    const LemmaSolution sol = solve_system(ell, m);
    const int s = sol.s;
    const int k = sol.y;
    auto residues = rest;
    residues.resize(static_cast<std::size_t>(ell), {0, false});

    // The first ell - k residues sit at positions k..ell-1 with quotient s,
    // the last k at positions 0..k-1 with quotient s + 1.
    std::vector<std::pair<int, bool>> parts(static_cast<std::size_t>(ell));
    for (int j = 0; j < ell - k; ++j) {
      const auto& res = residues[static_cast<std::size_t>(j)];
      parts[static_cast<std::size_t>(k + j)] = {res.first + s * t, res.second};
    }
    for (int j = 0; j < k; ++j) {
      const auto& res = residues[static_cast<std::size_t>(ell - k + j)];
      parts[static_cast<std::size_t>(j)] = {res.first + (s + 1) * t, res.second};
    }
    for (const auto& p : parts) {
      if (p.first < 1) throw std::logic_error("preimage construction produced a nonpositive part");
    }
    Overpartition pi = Overpartition::from_parts(parts);
    report.fiber.push_back(pi);
    if (ell > r) report.fiber.push_back(overline_smallest_multiple(pi, t));
  }
  tally_overlines(report);
  return report;
}

PreimageReport<Bipartition> psi_preimages(const Overpartition& mu, int t) {
  require_Pt(mu, t);
  PreimageReport<Bipartition> report{mu, t, {}, 0, 0, expected_fiber_size(mu, t)};
  const int m = mu.multiplicity(t);
  std::vector<Run> rest;
  for (const auto& run : mu.runs()) {
    if (run.part != t) rest.push_back(run);
  }
  const int x_min = rest.empty() ? 1 : 0;
  for (int x = x_min; x <= m; ++x) {
    std::vector<Run> second;
    if (x > 0) second.push_back({t, x, false});
    second.insert(second.end(), rest.begin(), rest.end());
    report.fiber.push_back(Bipartition::make(t, m - x, Overpartition::from_runs(second)));
    if (x > 0) {
      second.front().first_overlined = true;
      report.fiber.push_back(Bipartition::make(t, m - x, Overpartition::from_runs(second)));
    }
  }
  tally_overlines(report);
  return report;
}

std::map<Overpartition, std::vector<Overpartition>> phi_fibers_by_enumeration(int t, int max_n) {
  std::map<Overpartition, std::vector<Overpartition>> fibers;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& pi : enumerate_Gt(t, n)) fibers[phi(pi, t)].push_back(pi);
  }
  return fibers;
}

std::map<Overpartition, std::vector<Bipartition>> psi_fibers_by_enumeration(int t, int max_n) {
  std::map<Overpartition, std::vector<Bipartition>> fibers;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& beta : enumerate_Bt(t, n)) fibers[psi(beta, t)].push_back(beta);
  }
  return fibers;
}

namespace {

std::vector<Overpartition> collect_Pt(int t, int max_n) {
  std::vector<Overpartition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& mu : enumerate_Pt(t, n)) out.push_back(mu);
  }
  return out;
}

template <class Member>
std::string describe_fiber_mismatch(const PreimageReport<Member>& report, const std::vector<Member>& brute) {
  const std::set<Member> built(report.fiber.begin(), report.fiber.end());
  const std::set<Member> found(brute.begin(), brute.end());
  const std::string mu = format(report.mu);
  if (built.size() != report.fiber.size()) return mu + ": constructed fiber repeats a member";
  if (built != found) {
    return mu + ": constructed fiber has " + std::to_string(built.size()) + " members, brute force finds " +
           std::to_string(found.size());
  }
  if (static_cast<int>(report.fiber.size()) != report.expected_size) {
    return mu + ": fiber size " + std::to_string(report.fiber.size()) + " != " + std::to_string(report.expected_size);
  }
  const int m = report.mu.multiplicity(report.t);
  if (report.one_more_overline != m) return mu + ": expected " + std::to_string(m) + " members with an extra overline";
  if (report.same_overlines + report.one_more_overline != report.expected_size) {
    return mu + ": some fiber member changes the overline count by more than one";
  }
  return {};
}

// Length bounds and the count of multiples of t for a phi fiber member.
std::string check_phi_member_bounds(const Overpartition& mu, const Overpartition& pi, int t) {
  const int m = mu.multiplicity(t);
  const int l_mu = mu.length();
  const int delta = l_mu == m ? 1 : 0;
  const int l_pi = pi.length();
  if (l_pi < l_mu - m + delta || l_pi > l_mu) return format(pi) + ": length outside the admissible range";
  int multiples = 0;
  for (const auto& run : pi.runs()) {
    if (run.part % t == 0) multiples += run.mult;
  }
  if (multiples != l_pi - (l_mu - m)) return format(pi) + ": wrong number of multiples of t";
  return {};
}

}  // namespace

FiberCheckReport check_fibers(int t, int max_n, MapKind which, Exec exec) {
  const auto mus = collect_Pt(t, max_n);
  std::vector<std::string> failures(mus.size());
  std::string image_failure;

  auto run = [&](const auto& brute, auto&& build) {
    for (const auto& [image, members] : brute) {
      if (!in_Pt(image, t)) {
        image_failure = format(image) + ": image outside P_" + std::to_string(t);
        return;
      }
    }
    detail::for_each_index(static_cast<int>(mus.size()), exec, [&](int i) {
      const auto& mu = mus[static_cast<std::size_t>(i)];
      try {
        auto report = build(mu);
        auto it = brute.find(mu);
        using Member = typename decltype(report.fiber)::value_type;
        static const std::vector<Member> kEmpty;
        std::string msg = describe_fiber_mismatch(report, it == brute.end() ? kEmpty : it->second);
        if constexpr (std::is_same_v<Member, Overpartition>) {
          for (const auto& pi : report.fiber) {
            if (!msg.empty()) break;
            msg = check_phi_member_bounds(mu, pi, t);
          }
        }
        failures[static_cast<std::size_t>(i)] = std::move(msg);
      } catch (const std::exception& e) {
        failures[static_cast<std::size_t>(i)] = format(mu) + ": " + e.what();
      }
    });
  };

  if (which == MapKind::phi) {
    run(phi_fibers_by_enumeration(t, max_n), [t](const Overpartition& mu) { return phi_preimages(mu, t); });
  } else {
    run(psi_fibers_by_enumeration(t, max_n), [t](const Overpartition& mu) { return psi_preimages(mu, t); });
  }

  FiberCheckReport report;
  report.checked = static_cast<int>(mus.size());
  if (!image_failure.empty()) {
    report.pass = false;
    report.first_failure = image_failure;
    return report;
  }
  for (const auto& f : failures) {
    if (!f.empty()) {
      report.pass = false;
      report.first_failure = f;
      break;
    }
  }
  return report;
}

FiberIdentityReport verify_fiber_identity(int t, int max_n, MapKind which, Exec exec) {
  const auto mus = collect_Pt(t, max_n);
  const int order = max_n + 1;
  std::vector<std::string> failures(mus.size());
  std::vector<ZLaurentPoly> contributions(mus.size());

  detail::for_each_index(static_cast<int>(mus.size()), exec, [&](int i) {
    const auto& mu = mus[static_cast<std::size_t>(i)];
    try {
      ZLaurentPoly actual;
      if (which == MapKind::phi) {
        for (const auto& pi : phi_preimages(mu, t).fiber) actual += ZLaurentPoly::monomial(pi.overlined_count(), 1);
      } else {
        for (const auto& beta : psi_preimages(mu, t).fiber) actual += ZLaurentPoly::monomial(beta.overlined_count(), 1);
      }
      ZLaurentPoly predicted = fiber_weight(mu, t);
      if (!(actual == predicted)) {
        failures[static_cast<std::size_t>(i)] =
            format(mu) + ": fiber contributes " + actual.to_string() + ", expected " + predicted.to_string();
      }
      contributions[static_cast<std::size_t>(i)] = std::move(predicted);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = format(mu) + ": " + e.what();
    }
  });

  FiberIdentityReport report;
  report.checked = static_cast<int>(mus.size());
  std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < mus.size(); ++i) {
    coeffs[static_cast<std::size_t>(mus[i].weight())] += contributions[i];
    if (report.pass && !failures[i].empty()) {
      report.pass = false;
      report.first_failure = failures[i];
    }
  }
  report.predicted = QSeries(0, order, std::move(coeffs));
  report.enumerated = gf_from_enumeration(which == MapKind::phi ? Family::Gt : Family::Bt, t, max_n, exec);
  const int diff = report.predicted.first_difference(report.enumerated, order);
  if (diff != order && report.pass) {
    report.pass = false;
    report.first_failure = "aggregated series differ from the enumerated generating function at q^" + std::to_string(diff);
  }
  return report;
}

}  // namespace overpart
