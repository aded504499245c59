#include "abdim/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace abdim {

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
  const FieldCtx& ctx = f.ctx();
  Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.times_term(L.divide(f.leading_monomial()), ctx.inv(f.leading_coeff()));
  Poly b = g.times_term(L.divide(g.leading_monomial()), ctx.inv(g.leading_coeff()));
  return a - b;
}

struct Pair {
  int i, j;
  Monomial lcm;
};

// normal selection strategy: smallest lcm first
bool pair_less(const Pair& a, const Pair& b) {
  if (a.lcm != b.lcm) return degrevlex_less(a.lcm, b.lcm);
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  const FieldCtx& ctx = f.ctx();
  Poly h = f;
  Poly r(ctx, f.nvars());
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    bool divided = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lm)) continue;
      Fe c = ctx.div(h.leading_coeff(), g.leading_coeff());
      h = h - g.times_term(lm.divide(g.leading_monomial()), c);
      divided = true;
      break;
    }
    if (!divided) {
      r.add_term(lm, h.leading_coeff());
      Poly h2(ctx, h.nvars());
      bool skip = true;
      for (const auto& [m, c] : h.terms()) {
        if (skip) {
          skip = false;
          continue;
        }
        h2.add_term(m, c);
      }
      h = std::move(h2);
    }
  }
  return r;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  return normal_form(f, G.gens);
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, int nvars,
                         const BuchbergerOpts& opts) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  const FieldCtx& ctx = gens.front().ctx();
  for (const Poly& g : gens) {
    if (g.nvars() != nvars || g.ctx() != ctx)
      throw std::invalid_argument("buchberger: inconsistent generators");
  }

  std::vector<Poly> G;
  for (const Poly& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) throw std::invalid_argument("buchberger: all generators zero");

  std::set<std::pair<int, int>> pending;
  std::vector<Pair> queue;
  auto push_pairs = [&](int n) {
    for (int i = 0; i < n; ++i) {
      queue.push_back({i, n,
                       Monomial::lcm(G[i].leading_monomial(),
                                     G[n].leading_monomial())});
      pending.insert({i, n});
    }
  };
  for (int j = 1; j < static_cast<int>(G.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);
    pending.erase({p.i, p.j});

    const Monomial& lmi = G[p.i].leading_monomial();
    const Monomial& lmj = G[p.j].leading_monomial();
    if (opts.coprime_criterion &&
        Monomial::gcd(lmi, lmj).degree() == 0)
      continue;
    if (opts.chain_criterion) {
      bool skip = false;
      for (int l = 0; l < static_cast<int>(G.size()) && !skip; ++l) {
        if (l == p.i || l == p.j) continue;
        if (!G[l].leading_monomial().divides(p.lcm)) continue;
        auto key1 = std::minmax(p.i, l);
        auto key2 = std::minmax(p.j, l);
        if (!pending.count({key1.first, key1.second}) &&
            !pending.count({key2.first, key2.second}))
          skip = true;
      }
      if (skip) continue;
    }

    Poly h = normal_form(s_polynomial(G[p.i], G[p.j]), G);
    if (!h.is_zero()) {
      G.push_back(h.monic());
      push_pairs(static_cast<int>(G.size()) - 1);
    }
  }

  // inter-reduce: drop generators with redundant leading monomials, then
  // fully reduce each survivor against the others
  std::vector<Poly> reduced;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &mi = G[i].leading_monomial(), &mj = G[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) reduced.push_back(G[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(reduced.size() - 1);
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = normal_form(reduced[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return degrevlex_less(a.leading_monomial(), b.leading_monomial());
  });

  return GroebnerBasis{ctx, nvars, std::move(reduced)};
}

std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& G) {
  int n = G.nvars;
  std::vector<Monomial> lms;
  for (const Poly& g : G.gens) lms.push_back(g.leading_monomial());

  // finiteness: every variable needs a pure power among the leading monomials
  std::vector<int> bound(n, -1);
  for (const Monomial& m : lms) {
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (m.e[i] == 0) continue;
      if (nz >= 0) {
        pure = false;
        break;
      }
      nz = i;
    }
    if (pure && nz >= 0 && (bound[nz] < 0 || m.e[nz] < bound[nz]))
      bound[nz] = m.e[nz];
    if (pure && nz < 0)
      return {};  // 1 in the ideal: zero ring
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw InfiniteDimensionalError(
          "quotient is not finite-dimensional: variable " + std::to_string(i + 1) +
          " has no pure power among the leading monomials");

  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  // odometer over the box [0, bound_i)
  for (;;) {
    bool normal = true;
    for (const Monomial& m : lms)
      if (m.divides(cur)) {
        normal = false;
        break;
      }
    if (normal) out.push_back(cur);
    int i = n - 1;
    while (i >= 0) {
      if (++cur.e[i] < bound[i]) break;
      cur.e[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return degrevlex_less(b, a);
  });
  return out;
}

std::vector<std::vector<std::vector<Fe>>> multiplication_table(
    const GroebnerBasis& G, const std::vector<Monomial>& basis) {
  const FieldCtx& ctx = G.ctx;
  int d = static_cast<int>(basis.size());
  std::map<Monomial, int, DegRevLexGreater> index;
  for (int i = 0; i < d; ++i) index[basis[i]] = i;

  std::vector<std::vector<std::vector<Fe>>> table(
      d, std::vector<std::vector<Fe>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      Poly prod = Poly::term(ctx, basis[i] * basis[j], ctx.one());
      Poly nf = normal_form(prod, G);
      std::vector<Fe> coords(d, ctx.zero());
      for (const auto& [m, c] : nf.terms()) {
        auto it = index.find(m);
        if (it == index.end())
          throw std::logic_error("normal form left the quotient basis");
        coords[it->second] = c;
      }
      table[i][j] = coords;
      table[j][i] = coords;
    }
  return table;
}

}  // namespace abdim
