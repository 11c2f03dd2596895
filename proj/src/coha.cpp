#include "wallcross/coha.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wallcross {

void MultiPoly::add_term(Exponents e, Rat c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != nvars_)
    fail(ErrorCode::InvalidInput, "exponent tuple has wrong arity");
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (int i = 0; i < nvars_; ++i) e[i] += e2[i];
      r.add_term(std::move(e), c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
  MultiPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MultiPoly MultiPoly::constant(int nvars, Rat c) {
  MultiPoly r(nvars);
  r.add_term(Exponents(nvars, 0), std::move(c));
  return r;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly r(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  r.add_term(std::move(e), Rat(1));
  return r;
}

MultiPoly MultiPoly::linear_diff(int nvars, int a, int b) {
  MultiPoly r(nvars);
  Exponents ea(nvars, 0), eb(nvars, 0);
  ea[a] = 1;
  eb[b] = 1;
  r.add_term(std::move(ea), Rat(1));
  r.add_term(std::move(eb), Rat(-1));
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  Rat v(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    v += m;
  }
  return v;
}

MultiPoly divide_linear_diff(const MultiPoly& p, int a, int b) {
  MultiPoly quotient(p.nvars());
  MultiPoly rem = p;
  while (true) {
    int dmax = 0;
    for (const auto& [e, c] : rem.terms()) dmax = std::max(dmax, e[a]);
    if (dmax == 0) break;
    // Peel the top x_a-degree block.
    MultiPoly block(p.nvars());
    for (const auto& [e, c] : rem.terms()) {
      if (e[a] != dmax) continue;
      auto eq = e;
      eq[a] = dmax - 1;
      block.add_term(std::move(eq), c);
    }
    quotient = quotient + block;
    rem = rem - block * MultiPoly::linear_diff(p.nvars(), a, b);
  }
  if (!rem.is_zero())
    fail(ErrorCode::NotDivisible,
         "shuffle numerator not divisible by the Vandermonde kernel");
  return quotient;
}

SymPoly SymPoly::one(int nvars) {
  SymPoly s(nvars);
  s.add_term({}, Rat(1));
  return s;
}

SymPoly SymPoly::monomial_sym(int nvars, Partition lambda, Rat c) {
  SymPoly s(nvars);
  s.add_term(std::move(lambda), std::move(c));
  return s;
}

void SymPoly::add_term(Partition lambda, Rat c) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
    fail(ErrorCode::InvalidInput, "partition parts must be weakly decreasing");
  for (auto part : lambda)
    if (part < 0) fail(ErrorCode::InvalidInput, "negative partition part");
  if (static_cast<int>(lambda.size()) > nvars_)
    fail(ErrorCode::InvalidInput, "partition longer than variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(lambda), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  SymPoly r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

SymPoly SymPoly::scaled(const Rat& s) const {
  SymPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [l, c] : terms_) r.add_term(l, c * s);
  return r;
}

bool SymPoly::is_homogeneous() const {
  std::int64_t deg = -1;
  for (const auto& [l, c] : terms_) {
    std::int64_t s = std::accumulate(l.begin(), l.end(), std::int64_t{0});
    if (deg < 0) deg = s;
    else if (s != deg) return false;
  }
  return true;
}

std::int64_t SymPoly::degree() const {
  std::int64_t deg = 0;
  for (const auto& [l, c] : terms_)
    deg = std::max(deg,
                   std::accumulate(l.begin(), l.end(), std::int64_t{0}));
  return deg;
}

MultiPoly SymPoly::expand() const {
  MultiPoly p(nvars_);
  for (const auto& [lambda, c] : terms_) {
    std::vector<int> e(nvars_, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
      e[i] = static_cast<int>(lambda[i]);
    std::sort(e.begin(), e.end());
    // All distinct permutations of the padded exponent tuple.
    do {
      p.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return p;
}

SymPoly SymPoly::collect(const MultiPoly& p) {
  SymPoly s(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (!std::is_sorted(e.rbegin(), e.rend())) continue;
    Partition lambda(e.begin(), e.end());
    s.add_term(std::move(lambda), c);
  }
  if (s.expand() != p)
    fail(ErrorCode::InvalidInput, "polynomial is not symmetric");
  return s;
}

namespace {

// Places f (in k variables) on the index subset, in increasing order.
MultiPoly place_on(const SymPoly& f, const std::vector<int>& indices,
                   int nvars) {
  MultiPoly out(nvars);
  MultiPoly expanded = f.expand();
  for (const auto& [e, c] : expanded.terms()) {
    std::vector<int> big(nvars, 0);
    for (std::size_t i = 0; i < indices.size(); ++i) big[indices[i]] = e[i];
    out.add_term(std::move(big), c);
  }
  return out;
}

void for_each_subset(int total, int size,
                     const std::function<void(const std::vector<int>&,
                                              const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> rest;
    {
      std::size_t pi = 0;
      for (int v = 0; v < total; ++v) {
        if (pi < pick.size() && pick[pi] == v) ++pi;
        else rest.push_back(v);
      }
    }
    fn(pick, rest);
    int i = size - 1;
    while (i >= 0 && pick[i] == total - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

SymPoly shuffle_mul(const SymPoly& f1, const SymPoly& f2, int d) {
  if (d < 0) fail(ErrorCode::InvalidInput, "loop count d must be >= 0");
  const int n = f1.nvars();
  const int m = f2.nvars();
  const int N = n + m;
  if (n == 0) return f2.scaled(f1.terms().empty() ? Rat(0)
                                                  : f1.terms().begin()->second);
  if (m == 0) return f1.scaled(f2.terms().empty() ? Rat(0)
                                                  : f2.terms().begin()->second);

  MultiPoly sum(N);
  if (d >= 1) {
    for_each_subset(N, n, [&](const std::vector<int>& I,
                              const std::vector<int>& J) {
      MultiPoly term = place_on(f1, I, N) * place_on(f2, J, N);
      if (d >= 2) {
        MultiPoly kernel = MultiPoly::constant(N, Rat(1));
        for (int i : I)
          for (int j : J) kernel = kernel * MultiPoly::linear_diff(N, j, i);
        for (int rep = 0; rep < d - 1; ++rep) term = term * kernel;
      }
      sum = sum + term;
    });
  } else {
    // d = 0: kernel exponent -1. Work over the ordered Vandermonde
    // denominator: 1 / prod_{i in I, j in J} (x_j - x_i) equals
    // (-1)^{#{i<j}} prod_{a<b in I} (x_a-x_b) prod_{a<b in J} (x_a-x_b) / V
    // with V = prod_{a<b} (x_a - x_b).
    for_each_subset(N, n, [&](const std::vector<int>& I,
                              const std::vector<int>& J) {
      MultiPoly term = place_on(f1, I, N) * place_on(f2, J, N);
      int sign_flips = 0;
      for (int i : I)
        for (int j : J)
          if (i < j) ++sign_flips;
      if (sign_flips % 2 != 0) term = term.scaled(Rat(-1));
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b)
          term = term * MultiPoly::linear_diff(N, I[a], I[b]);
      for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = a + 1; b < J.size(); ++b)
          term = term * MultiPoly::linear_diff(N, J[a], J[b]);
      sum = sum + term;
    });
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b)
        sum = divide_linear_diff(sum, a, b);
  }
  return SymPoly::collect(sum);
}

Bigrading bigrade(const SymPoly& f, int d) {
  if (!f.is_homogeneous())
    fail(ErrorCode::NotHomogeneous, "bigrading needs a homogeneous input");
  std::int64_t n = f.nvars();
  std::int64_t K = f.degree();
  return Bigrading{n, 2 * K + (1 - d) * n * n};
}

namespace {

// Partitions of K into at most n parts, by direct DP on the part count.
std::vector<std::int64_t> partition_counts_at_most_n_parts(int n,
                                                           std::int64_t kmax) {
  // dp[parts][k]
  std::vector<std::vector<std::int64_t>> dp(
      n + 1, std::vector<std::int64_t>(kmax + 1, 0));
  for (int parts = 0; parts <= n; ++parts) dp[parts][0] = 1;
  // p(k, <= parts) = p(k - parts, <= parts) + p(k, <= parts - 1)
  for (int parts = 1; parts <= n; ++parts)
    for (std::int64_t k = 1; k <= kmax; ++k) {
      dp[parts][k] = dp[parts - 1][k];
      if (k >= parts) dp[parts][k] += dp[parts][k - parts];
    }
  return dp[n];
}

// q-series coefficients of 1/((1-q)...(1-q^n)) by iterated geometric sums.
std::vector<std::int64_t> euler_product_inverse(int n, std::int64_t kmax) {
  std::vector<std::int64_t> s(kmax + 1, 0);
  s[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (std::int64_t k = i; k <= kmax; ++k) s[k] += s[k - i];
  return s;
}

}  // namespace

HilbertTable coha_hilbert(int d, int n_max, std::int64_t m_min,
                          std::int64_t m_max) {
  if (n_max > 6) fail(ErrorCode::InvalidInput, "n_max capped at 6");
  HilbertTable table;
  table.match = true;
  for (int n = 0; n <= n_max; ++n) {
    std::int64_t shift = (1 - d) * static_cast<std::int64_t>(n) * n;
    std::int64_t kmax = 0;
    for (std::int64_t m = m_min; m <= m_max; ++m)
      if ((m - shift) % 2 == 0 && m - shift >= 0)
        kmax = std::max(kmax, (m - shift) / 2);
    auto by_partitions =
        n == 0 ? std::vector<std::int64_t>{1}
               : partition_counts_at_most_n_parts(n, kmax);
    auto by_series = euler_product_inverse(n, kmax);
    for (std::int64_t m = m_min; m <= m_max; ++m) {
      std::int64_t k2 = m - shift;
      std::int64_t dp = 0, ds = 0;
      if (k2 >= 0 && k2 % 2 == 0) {
        std::int64_t K = k2 / 2;
        dp = K < static_cast<std::int64_t>(by_partitions.size())
                 ? by_partitions[K]
                 : 0;
        ds = K < static_cast<std::int64_t>(by_series.size()) ? by_series[K]
                                                             : 0;
      }
      if (dp != 0 || ds != 0) {
        table.entries.push_back({n, m, dp, ds});
        if (dp != ds) table.match = false;
      }
    }
  }
  return table;
}

QRational coha_series_coefficient(int d, int n) {
  if (n == 0) return QRational(1);
  std::int64_t e = (1 - d) * static_cast<std::int64_t>(n) * n;
  QRational num = QRational::t_power(static_cast<int>(e));
  Poly den(Rat(1));
  for (int i = 1; i <= n; ++i)
    den = den * (Poly(Rat(1)) - Poly::monomial(2 * i));
  return num * QRational(Poly(Rat(1)), std::move(den));
}

}  // namespace wallcross
