#include "overpart/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "overpart/errors.hpp"

namespace overpart {

Overpartition Overpartition::from_runs(std::vector<Run> runs) {
  if (runs.empty()) throw std::invalid_argument("overpartition must be nonempty");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].part < 1) throw std::invalid_argument("parts must be positive");
    if (runs[i].mult < 1) throw std::invalid_argument("multiplicities must be positive");
    if (i > 0 && runs[i].part >= runs[i - 1].part) {
      throw std::invalid_argument("runs must be strictly decreasing in part");
    }
  }
  Overpartition pi;
  pi.runs_ = std::move(runs);
  return pi;
}

Overpartition Overpartition::from_parts(const std::vector<std::pair<int, bool>>& parts) {
  std::vector<Run> runs;
  for (const auto& [part, overlined] : parts) {
    if (!runs.empty() && runs.back().part == part) {
      if (overlined && runs.back().first_overlined) {
        throw std::invalid_argument("part " + std::to_string(part) + " is overlined more than once");
      }
      ++runs.back().mult;
      runs.back().first_overlined = runs.back().first_overlined || overlined;
    } else {
      if (!runs.empty() && part > runs.back().part) {
        throw std::invalid_argument("parts must be weakly decreasing");
      }
      runs.push_back({part, 1, overlined});
    }
  }
  return from_runs(std::move(runs));
}

std::vector<std::pair<int, bool>> Overpartition::parts() const {
  std::vector<std::pair<int, bool>> out;
  for (const auto& r : runs_) {
    for (int i = 0; i < r.mult; ++i) out.emplace_back(r.part, i == 0 && r.first_overlined);
  }
  return out;
}

int Overpartition::length() const {
  int n = 0;
  for (const auto& r : runs_) n += r.mult;
  return n;
}

long Overpartition::weight() const {
  long w = 0;
  for (const auto& r : runs_) w += static_cast<long>(r.part) * r.mult;
  return w;
}

int Overpartition::overlined_count() const {
  return static_cast<int>(std::count_if(runs_.begin(), runs_.end(), [](const Run& r) { return r.first_overlined; }));
}

int Overpartition::multiplicity(int part) const {
  for (const auto& r : runs_) {
    if (r.part == part) return r.mult;
  }
  return 0;
}

bool Overpartition::is_overlined(int part) const {
  for (const auto& r : runs_) {
    if (r.part == part) return r.first_overlined;
  }
  return false;
}

Bipartition Bipartition::make(int t, int t_count, Overpartition second) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (t_count < 0) throw std::invalid_argument("t_count must be nonnegative");
  if (second.largest() > t) {
    throw std::invalid_argument("second subpartition has a part larger than t = " + std::to_string(t));
  }
  return Bipartition{t, t_count, std::move(second)};
}

PartitionStats stats(const Overpartition& pi, int t) {
  PartitionStats st;
  st.ell = pi.length();
  st.o = pi.overlined_count();
  st.m_t = pi.multiplicity(t);
  st.s = pi.smallest() / t;
  const int threshold = (st.s + 1) * t;
  for (const auto& r : pi.runs()) {
    if (r.part >= threshold) st.k += r.mult;
  }
  return st;
}

bool in_Gt(const Overpartition& pi, int t) {
  const int diff = pi.largest() - pi.smallest();
  if (diff > t) return false;
  return diff < t || !pi.runs().front().first_overlined;
}

bool in_Pt(const Overpartition& mu, int t) { return mu.largest() <= t && !mu.is_overlined(t); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Overpartition parse_overpartition(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty overpartition");
  std::vector<std::pair<int, bool>> parts;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    bool overlined = false;
    if (!token.empty() && token.back() == '~') {
      overlined = true;
      token.remove_suffix(1);
    }
    const int part = parse_int(token, "a positive part");
    if (part < 1) throw ParseError("parts must be positive");
    if (!parts.empty() && part > parts.back().first) {
      throw ParseError("parts must be weakly decreasing: " + std::to_string(part) + " follows " +
                       std::to_string(parts.back().first));
    }
    parts.emplace_back(part, overlined);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Overpartition::from_parts(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Bipartition parse_bipartition(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("bipartition must look like [t^a | parts]");
  }
  text = text.substr(1, text.size() - 2);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("bipartition is missing '|'");
  const std::string_view head = trim(text.substr(0, bar));
  const auto caret = head.find('^');
  if (caret == std::string_view::npos) throw ParseError("bipartition head must be t^a");
  const int t = parse_int(head.substr(0, caret), "t");
  const int count = parse_int(head.substr(caret + 1), "a multiplicity");
  Overpartition second = parse_overpartition(text.substr(bar + 1));
  try {
    return Bipartition::make(t, count, std::move(second));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format(const Overpartition& pi) {
  std::string out;
  for (const auto& [part, overlined] : pi.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(part);
    if (overlined) out += '~';
  }
  return out;
}

std::string format(const Bipartition& beta) {
  return "[" + std::to_string(beta.t) + "^" + std::to_string(beta.t_count) + " | " + format(beta.second) + "]";
}

OverpartitionRange::iterator::iterator(int n, int max_part) : max_part_(max_part) {
  if (n < 1 || max_part < 1) return;
  done_ = false;
  fill(n, max_part + 1);
}

void OverpartitionRange::iterator::fill(int rem, int bound) {
  auto& runs = current_.runs_;
  while (rem > 0) {
    const int part = std::min(rem, bound - 1);
    const int mult = rem / part;
    runs.push_back({part, mult, false});
    rem -= part * mult;
    bound = part;
  }
}

void OverpartitionRange::iterator::advance() {
  auto& runs = current_.runs_;
  int suffix = 0;  // weight of runs[i..]
  while (!runs.empty()) {
    Run& run = runs.back();
    const int rem = suffix + run.part * run.mult;
    if (!run.first_overlined) {
      run.first_overlined = true;
      fill(suffix, run.part);
      return;
    }
    if (run.part > 1 && run.mult > 1) {
      --run.mult;
      run.first_overlined = false;
      fill(rem - run.part * run.mult, run.part);
      return;
    }
    if (run.part > 1) {
      --run.part;
      run.mult = rem / run.part;
      run.first_overlined = false;
      fill(rem - run.part * run.mult, run.part);
      return;
    }
    suffix = rem;
    runs.pop_back();
  }
  done_ = true;
}

BipartitionRange::iterator::iterator(int t, int n) : t_(t), n_(n) {
  if (t < 1 || n < 1) return;
  done_ = false;
  inner_ = OverpartitionRange(n_, t_).begin();
  settle();
}

// Moves to the next t_count whose second component has weight >= 1 whenever
// the current inner range is exhausted.
void BipartitionRange::iterator::settle() {
  while (inner_ == std::default_sentinel) {
    ++t_count_;
    const int rest = n_ - t_ * t_count_;
    if (rest < 1) {
      done_ = true;
      return;
    }
    inner_ = OverpartitionRange(rest, t_).begin();
  }
}

void BipartitionRange::iterator::advance() {
  ++inner_;
  settle();
}

QSeries gf_from_enumeration(Family family, int t, int max_n, Exec exec) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const int order = max_n + 1;
  std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(std::max(order, 0)));

  auto count_weight = [family, t](int n) {
    std::vector<BigInt> by_o;
    auto tally = [&by_o](int o) {
      if (static_cast<std::size_t>(o) >= by_o.size()) by_o.resize(static_cast<std::size_t>(o) + 1);
      ++by_o[static_cast<std::size_t>(o)];
    };
    switch (family) {
      case Family::Gt:
        for (const auto& pi : enumerate_Gt(t, n)) tally(pi.overlined_count());
        break;
      case Family::Pt:
        for (const auto& mu : enumerate_Pt(t, n)) tally(mu.overlined_count());
        break;
      case Family::Bt:
        for (const auto& beta : enumerate_Bt(t, n)) tally(beta.overlined_count());
        break;
    }
    std::vector<ZLaurentPoly::Term> terms;
    for (std::size_t o = 0; o < by_o.size(); ++o) terms.emplace_back(static_cast<int>(o), by_o[o]);
    return ZLaurentPoly::from_terms(std::move(terms));
  };

  if (exec == Exec::serial) {
    for (int n = 1; n <= max_n; ++n) coeffs[static_cast<std::size_t>(n)] = count_weight(n);
  } else {
    // The largest weights dominate the cost; hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < max_n; ++i) {
      const int n = max_n - i;
      coeffs[static_cast<std::size_t>(n)] = count_weight(n);
    }
  }
  return QSeries(0, order, std::move(coeffs));
}

}  // namespace overpart
