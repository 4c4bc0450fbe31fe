#include "kturan/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kturan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Count binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Count>(n - k + i) / static_cast<Count>(i);
  return r;
}

Graph universal_join(int k, const Graph& g) {
  require(k >= 1, "universal join needs k >= 1");
  if (k == 1) return g;
  if (g.order() + k - 1 > Graph::kMaxVertices)
    throw std::length_error("universal join exceeds 64 vertices");
  return join(complete(k - 1), g);
}

int x_exponent(int k, int t, int s) {
  require(k >= 2, "x exponent needs k >= 2");
  require(s >= t && t >= 2, "x exponent needs s >= t >= 2");
  const int num = k * t - s;
  const int den = k - 1;
  int q = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) ++q;
  return q - 1;
}

Graph thm32_lower(int n, int s, int t, int k) {
  const int x = x_exponent(k, t, s);
  require(x >= 1, "construction needs x >= 1");
  require(n >= s, "construction needs n >= s");
  const Graph base = turan(n - s + x, x);
  return s - x == 0 ? base : join(complete(s - x), base);
}

Graph thm35_lower(int n, int t, int k) {
  require(t >= 2 && k >= 1, "construction needs t >= 2, k >= 1");
  require(n - k + 1 >= t - 1, "construction needs n - k + 1 >= t - 1");
  return universal_join(k, turan(n - k + 1, t - 1));
}

Count thm35_leading(int n, int s, int t, int k) {
  require(s >= t && t >= s - k + 2 && t >= 2, "leading term needs s >= t >= s-k+2");
  require(n - k + 1 >= t - 1, "leading term needs n - k + 1 >= t - 1");
  const auto parts = turan_parts(n - k + 1, t - 1);
  return binomial(k - 1, s - t + 1) * multipartite_clique_count(parts, t - 1);
}

Graph thm62_lower(int n, int k) {
  require(n >= k && k >= 2, "construction needs n >= k >= 2");
  const int m = n - k + 1;
  const Graph side = m >= 2 ? complete_bipartite(m / 2, m - m / 2) : empty(m);
  return universal_join(k, side);
}

Graph prop54_lower(int n, int s) {
  require(n > s && s >= 1, "construction needs n > s >= 1");
  return s == 1 ? empty(n) : complete_bipartite(s - 1, n - s + 1);
}

Graph prop61_host(int n) {
  require(n >= 1, "host needs n >= 1");
  return n >= 2 ? complete_bipartite(n / 2, n - n / 2) : empty(n);
}

Graph f_star(const Graph& f, int u, int k) {
  require(f.order() >= 2, "F* needs |V(F)| >= 2");
  require(k >= 1, "F* needs k >= 1");
  if (u < 0 || u >= f.order()) throw std::out_of_range("F* vertex out of range");
  const long m = static_cast<long>(k - 1) * f.order() + 1;
  const long total = m * (f.order() - 1) + 1;
  if (total > Graph::kMaxVertices)
    throw std::length_error("F* needs " + std::to_string(total) + " vertices; limit is 64");

  const Graph fu = delete_vertex(f, u);
  std::vector<int> x_u;  // neighbors of u, renumbered as in F_u
  for (int v = 0; v < f.order(); ++v)
    if (f.adjacent(u, v)) x_u.push_back(v < u ? v : v - 1);

  Graph g(static_cast<int>(total));
  const int w = fu.order();
  for (long c = 0; c < m; ++c) {
    const int off = 1 + static_cast<int>(c) * w;
    for (int a = 0; a < w; ++a)
      for (int b = a + 1; b < w; ++b)
        if (fu.adjacent(a, b)) g.add_edge(off + a, off + b);
    for (int a : x_u) g.add_edge(0, off + a);
  }
  return g;
}

BigCount prop61_value(int n, int l) {
  require(l >= 1, "matching size must be positive");
  if (n < 2 * l) throw std::invalid_argument("prop61_value needs n >= 2l");
  BigCount prod = 1;
  for (int i = 0; i < l; ++i) {
    const long long m = n - 2LL * i;
    prod *= (m * m) / 4;
  }
  BigCount fact = 1;
  for (int i = 2; i <= l; ++i) fact *= i;
  if (prod % fact != 0) throw std::logic_error("matching product not divisible by l!");
  return prod / fact;
}

Count multipartite_clique_count(std::span<const int> parts, int s) {
  if (s < 0) return 0;
  // e[j] = elementary symmetric polynomial of degree j over the parts seen so far
  std::vector<Count> e(static_cast<std::size_t>(s) + 1, 0);
  e[0] = 1;
  for (int size : parts)
    for (int j = s; j >= 1; --j) e[j] += e[j - 1] * static_cast<Count>(size);
  return e[s];
}

Count erdos_value(int n, int s, int t) {
  require(2 <= s && s < t && t <= n, "Erdos value needs 2 <= s < t <= n");
  const auto parts = turan_parts(n, t - 1);
  return multipartite_clique_count(parts, s);
}

}  // namespace kturan
