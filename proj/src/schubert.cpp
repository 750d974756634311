#include "pipedream/schubert.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "pipedream/pipe_dream.hpp"

namespace pipedream {

ExponentVector::ExponentVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
}

int ExponentVector::operator[](int i) const {
  const auto idx = static_cast<std::size_t>(i - 1);
  return idx < exponents_.size() ? exponents_[idx] : 0;
}

int ExponentVector::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool GradedLexDescending::operator()(const ExponentVector& a, const ExponentVector& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto len = static_cast<int>(std::max(a.exponents().size(), b.exponents().size()));
  for (int i = 1; i <= len; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

void Polynomial::add_term(const ExponentVector& monomial, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coefficient(const ExponentVector& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Integer{0} : it->second;
}

std::string to_string(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [monomial, coeff] : poly.terms()) {
    Integer magnitude = coeff;
    if (first_term) {
      if (coeff < 0) out += '-';
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (magnitude < 0) magnitude = -magnitude;
    first_term = false;

    std::string factors;
    const auto& e = monomial.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += 'x' + std::to_string(i + 1);
      if (e[i] > 1) factors += '^' + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + '*';
      out += factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& poly) {
  return os << to_string(poly);
}

nlohmann::json to_json(const Polynomial& poly) {
  auto out = nlohmann::json::array();
  for (const auto& [monomial, coeff] : poly.terms()) {
    nlohmann::json jc;
    if (coeff >= std::numeric_limits<std::int64_t>::min() &&
        coeff <= std::numeric_limits<std::int64_t>::max())
      jc = coeff.convert_to<std::int64_t>();
    else
      jc = coeff.str();
    out.push_back({{"coeff", jc}, {"exponents", monomial.exponents()}});
  }
  return out;
}

Polynomial schubert_polynomial(const Permutation& w) {
  Polynomial poly;
  for (const auto& dream : enumerate_rp(w)) {
    std::vector<int> exponents(static_cast<std::size_t>(w.size()), 0);
    dream.for_each([&](GridBox b) { ++exponents[static_cast<std::size_t>(b.row - 1)]; });
    poly.add_term(ExponentVector(std::move(exponents)), 1);
  }
  return poly;
}

Integer specialize_all_ones(const Polynomial& poly) {
  Integer total = 0;
  for (const auto& [monomial, coeff] : poly.terms()) total += coeff;
  return total;
}

}  // namespace pipedream
