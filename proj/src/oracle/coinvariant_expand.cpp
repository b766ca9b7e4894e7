#include <map>
#include <numeric>

#include "green/error.hpp"
#include "green/oracle.hpp"

namespace green::oracle {

namespace {

using Monomial = std::vector<int>;  // exponents of x_1..x_n
using Poly = std::map<Monomial, Integer>;

void all_monomials(int vars_from, int n, int degree, Monomial& m, std::vector<Monomial>& out) {
  if (vars_from == n - 1) {
    m[vars_from] = degree;
    out.push_back(m);
    m[vars_from] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    m[vars_from] = e;
    all_monomials(vars_from + 1, n, degree - e, m, out);
  }
  m[vars_from] = 0;
}

/*
  Normal forms modulo the ideal of positive-degree symmetric polynomials.
  The polynomials g_k = h_k(x_k, ..., x_n), k = 1..n, form a lex Gröbner
  basis with leading terms x_k^k, so x_k^k reduces to minus the remaining
  degree-k monomials in x_k..x_n.
*/
class Reducer {
 public:
  explicit Reducer(int n) : n_(n), tails_(n + 1) {
    for (int k = 1; k <= n; ++k) {
      Monomial m(n, 0);
      std::vector<Monomial> mons;
      all_monomials(k - 1, n, k, m, mons);
      for (auto& mon : mons)
        if (mon[k - 1] != k) tails_[k].push_back(std::move(mon));
    }
  }

  const Poly& normal_form(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Poly result;
    int k = 1;
    while (k <= n_ && m[k - 1] < k) ++k;
    if (k > n_) {
      result.emplace(m, 1);
    } else {
      Monomial rest = m;
      rest[k - 1] -= k;
      for (const auto& tail : tails_[k]) {
        Monomial next = rest;
        for (int i = 0; i < n_; ++i) next[i] += tail[i];
        for (const auto& [mon, c] : normal_form(next)) {
          auto& slot = result[mon];
          slot -= c;
          if (slot == 0) result.erase(mon);
        }
      }
    }
    return memo_.emplace(m, std::move(result)).first->second;
  }

 private:
  int n_;
  std::vector<std::vector<Monomial>> tails_;
  std::map<Monomial, Poly> memo_;
};

std::vector<int> permutation_of_type(const Partition& cycle_type) {
  std::vector<int> perm;
  int start = 0;
  for (int len : cycle_type) {
    for (int i = 0; i < len; ++i) perm.push_back(start + (i + 1) % len);
    start += len;
  }
  return perm;
}

}  // namespace

CoinvariantExpansion coinvariant_expand(int n, int max_degree) {
  if (n < 2 || n > 6) throw BoundExceeded("coinvariant_expand supports 2 <= n <= 6, got " + std::to_string(n));
  CoinvariantExpansion out;
  out.weyl = generate_symmetric_group(n);
  const int d = out.weyl.flag_dimension();
  if (max_degree < 0 || max_degree > d) max_degree = d;

  std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(d + 1));
  {
    // Artin basis: 0 <= a_i < i.
    Monomial a(n, 0);
    auto rec = [&](auto&& self, int i, int deg) -> void {
      if (i == n) {
        basis[deg].push_back(a);
        return;
      }
      for (int e = 0; e <= i; ++e) {
        a[i] = e;
        self(self, i + 1, deg + e);
      }
      a[i] = 0;
    };
    rec(rec, 0, 0);
  }

  Reducer reducer(n);
  std::vector<std::vector<int>> reps;
  for (const auto& c : out.weyl.classes) reps.push_back(permutation_of_type(*parse_partition(c.label)));

  for (int k = 0; k <= max_degree; ++k) {
    ClassFunction trace(reps.size(), 0);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Integer tr = 0;
      for (const auto& m : basis[k]) {
        Monomial image(n, 0);
        for (int i = 0; i < n; ++i) image[reps[c][i]] = m[i];
        const Poly& nf = reducer.normal_form(image);
        if (auto it = nf.find(m); it != nf.end()) tr += it->second;
      }
      trace[c] = tr.get_si();
    }
    out.traces.push_back(std::move(trace));
  }

  for (const auto& chi : out.weyl.irreducibles) {
    LaurentPoly mult;
    for (int k = 0; k <= max_degree; ++k)
      mult += LaurentPoly::monomial(inner_product(out.weyl, chi.values, out.traces[k]), 2 * k);
    out.multiplicities.push_back(std::move(mult));
  }
  return out;
}

}  // namespace green::oracle
