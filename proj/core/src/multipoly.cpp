#include "valtree/multipoly.hpp"

#include <algorithm>

namespace valtree {

namespace {
void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}
}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return term(Rational(1), std::move(m));
}

MultiPoly MultiPoly::term(const Rational& c, Monomial exps) {
  MultiPoly p;
  trim(exps);
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t MultiPoly::arity() const {
  std::size_t a = 0;
  for (const auto& [m, c] : terms_) a = std::max(a, m.size());
  return a;
}

std::size_t MultiPoly::total_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::size_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::shift_variables(std::size_t offset) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) {
      out.add_term(m, c);
      continue;
    }
    Monomial shifted(offset, 0);
    shifted.insert(shifted.end(), m.begin(), m.end());
    out.add_term(shifted, c);
  }
  return out;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  Rational acc;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m[i] == 0) continue;
      term *= i < point.size() ? pow(point[i], m[i]) : Rational(0);
    }
    acc += term;
  }
  return acc;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (m.empty()) {
      out += mag.str();
      continue;
    }
    bool first = true;
    if (!mag.is_one()) {
      out += mag.str();
      first = false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first) out += '*';
      first = false;
      out += "t" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace valtree
