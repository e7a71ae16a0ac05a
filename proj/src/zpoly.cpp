#include "overpart/zpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace overpart {

ZLaurentPoly::ZLaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

ZLaurentPoly::ZLaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [e, c] : terms) terms_.emplace_back(e, BigInt(c));
  normalize();
}

ZLaurentPoly ZLaurentPoly::monomial(int z_exp, BigInt coeff) {
  ZLaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(z_exp, std::move(coeff));
  return p;
}

ZLaurentPoly ZLaurentPoly::from_terms(std::vector<Term> terms) {
  ZLaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void ZLaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

int ZLaurentPoly::min_exp() const {
  assert(!terms_.empty());
  return terms_.front().first;
}

int ZLaurentPoly::max_exp() const {
  assert(!terms_.empty());
  return terms_.back().first;
}

BigInt ZLaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

bool ZLaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && abs(terms_.front().second) == 1;
}

ZLaurentPoly ZLaurentPoly::operator-() const {
  ZLaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

// Merge of two sorted term lists; sign selects addition or subtraction.
std::vector<ZLaurentPoly::Term> merge_terms(const std::vector<ZLaurentPoly::Term>& a,
                                            const std::vector<ZLaurentPoly::Term>& b,
                                            bool subtract) {
  std::vector<ZLaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? BigInt(-b[j].second) : b[j].second);
      ++j;
    } else {
      BigInt c = subtract ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ZLaurentPoly& ZLaurentPoly::operator+=(const ZLaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

ZLaurentPoly& ZLaurentPoly::operator-=(const ZLaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

ZLaurentPoly& ZLaurentPoly::operator*=(const ZLaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

ZLaurentPoly operator*(const ZLaurentPoly& a, const ZLaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1) return a.times_monomial(1, b.min_exp()).scaled(b.terms_.front().second);
  if (a.size() == 1) return b.times_monomial(1, a.min_exp()).scaled(a.terms_.front().second);
  ZAccumulator acc(a.min_exp() + b.min_exp(), a.max_exp() + b.max_exp());
  acc.add_product(a, b);
  return acc.take();
}

bool operator==(const ZLaurentPoly& a, const ZLaurentPoly& b) {
  return a.terms_ == b.terms_;
}

ZLaurentPoly ZLaurentPoly::times_monomial(int sign, int shift) const {
  ZLaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) {
    e += shift;
    if (sign < 0) c = -c;
  }
  return r;
}

ZLaurentPoly ZLaurentPoly::scaled(const BigInt& factor) const {
  if (factor == 0) return {};
  ZLaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= factor;
  return r;
}

BigInt ZLaurentPoly::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BigInt ZLaurentPoly::at_zero() const {
  if (!terms_.empty() && terms_.front().first < 0) {
    throw std::domain_error("z = 0 substituted into a negative power of z");
  }
  return coeff(0);
}

std::string ZLaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

ZAccumulator::ZAccumulator(int lo, int hi) : lo_(lo), dense_(static_cast<std::size_t>(std::max(0, hi - lo + 1))) {}

void ZAccumulator::add_product(const ZLaurentPoly& a, const ZLaurentPoly& b) {
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      auto& slot = dense_[static_cast<std::size_t>(ea + eb - lo_)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
}

void ZAccumulator::sub_product(const ZLaurentPoly& a, const ZLaurentPoly& b) {
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      auto& slot = dense_[static_cast<std::size_t>(ea + eb - lo_)];
      mpz_submul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
}

void ZAccumulator::add(const ZLaurentPoly& a) {
  for (const auto& [e, c] : a.terms()) dense_[static_cast<std::size_t>(e - lo_)] += c;
}

ZLaurentPoly ZAccumulator::take() {
  std::vector<ZLaurentPoly::Term> terms;
  for (std::size_t i = 0; i < dense_.size(); ++i) {
    if (dense_[i] != 0) terms.emplace_back(lo_ + static_cast<int>(i), std::move(dense_[i]));
  }
  dense_.clear();
  return ZLaurentPoly::from_terms(std::move(terms));
}

}  // namespace overpart
