#include "abdim/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abdim {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::divides(const Monomial& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::divide(const Monomial& m) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= m.e[i];
    if (r.e[i] < 0) throw std::invalid_argument("monomial division underflow");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

Poly Poly::constant(FieldCtx ctx, int nvars, const Fe& c) {
  Poly p(ctx, nvars);
  p.add_term(Monomial::one(nvars), c);
  return p;
}

Poly Poly::term(FieldCtx ctx, const Monomial& m, const Fe& c) {
  Poly p(ctx, m.nvars());
  p.add_term(m, c);
  return p;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->first;
}

const Fe& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->second;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Fe& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
  if (ctx_.is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  Fe s = ctx_.add(it->second, c);
  if (ctx_.is_zero(s))
    terms_.erase(it);
  else
    it->second = s;
}

Poly Poly::operator+(const Poly& g) const {
  Poly r = *this;
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& g) const {
  Poly r = *this;
  for (const auto& [m, c] : g.terms_) r.add_term(m, ctx_.neg(c));
  return r;
}

Poly Poly::operator*(const Poly& g) const {
  Poly r(ctx_, nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : g.terms_)
      r.add_term(m1 * m2, ctx_.mul(c1, c2));
  return r;
}

Poly Poly::scaled(const Fe& c) const {
  Poly r(ctx_, nvars_);
  if (ctx_.is_zero(c)) return r;
  for (const auto& [m, cf] : terms_) r.add_term(m, ctx_.mul(cf, c));
  return r;
}

Poly Poly::times_term(const Monomial& m, const Fe& c) const {
  Poly r(ctx_, nvars_);
  if (ctx_.is_zero(c)) return r;
  for (const auto& [mm, cf] : terms_) r.add_term(mm * m, ctx_.mul(cf, c));
  return r;
}

Poly Poly::monic() const {
  return scaled(ctx_.inv(leading_coeff()));
}

bool Poly::operator==(const Poly& g) const {
  if (nvars_ != g.nvars_ || terms_.size() != g.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!ctx_.eq(it->second, jt->second)) return false;
  }
  return true;
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = ctx_.to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    first = false;
    std::string ms;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!ms.empty()) ms += "*";
      ms += vars[i];
      if (m.e[i] > 1) ms += "^" + std::to_string(m.e[i]);
    }
    if (ms.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += ms;
    } else {
      s += cs + "*" + ms;
    }
  }
  return s;
}

}  // namespace abdim
