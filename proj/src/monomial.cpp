#include "ntf/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace ntf {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("monomial exponents must be >= 0");
  trim();
}

Monomial Monomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(i), 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

int Monomial::exponent(int i) const {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  if (i > var_count()) return 0;
  return exps_[i - 1];
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < var_count(); ++i)
    if (exps_[i] > 0) s.push_back(i + 1);
  return s;
}

int Monomial::min_support() const {
  for (int i = 0; i < var_count(); ++i)
    if (exps_[i] > 0) return i + 1;
  return 0;
}

int Monomial::max_support() const {
  for (int i = var_count(); i > 0; --i)
    if (exps_[i - 1] > 0) return i;
  return 0;
}

int Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (var_count() > other.var_count()) return false;
  for (int i = 0; i < var_count(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_var(int i) const {
  return *this * Monomial::variable(i);
}

Monomial Monomial::div_var(int i) const {
  if (exponent(i) == 0)
    throw std::invalid_argument("monomial not divisible by x" +
                                std::to_string(i));
  Monomial out = *this;
  out.exps_[i - 1] -= 1;
  out.trim();
  return out;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < var_count(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

}  // namespace ntf
