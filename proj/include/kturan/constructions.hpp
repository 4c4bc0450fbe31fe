#pragma once

#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "kturan/graph.hpp"

namespace kturan {

using BigCount = boost::multiprecision::cpp_int;

/// K_{k-1} + G. The k-1 universal vertices take indices 0..k-2.
Graph universal_join(int k, const Graph& g);

/// Universal vertices of universal_join(k, g): the first k-1 indices.
inline VertexSet universal_vertices(int k) { return first_n(k - 1); }

/// ceil((kt - s)/(k - 1)) - 1 for k >= 2, s >= t >= 2.
int x_exponent(int k, int t, int s);

/// K_{s-x} + T_x(n-s+x) with x = x_exponent(k, t, s).
Graph thm32_lower(int n, int s, int t, int k);

/// K_{k-1} + T_{t-1}(n-k+1).
Graph thm35_lower(int n, int t, int k);

/// C(k-1, s-t+1) * N(K_{t-1}, T_{t-1}(n-k+1)), from the closed form.
Count thm35_leading(int n, int s, int t, int k);

/// K_{k-1} + K_{floor((n-k+1)/2), ceil((n-k+1)/2)}.
Graph thm62_lower(int n, int k);

/// K_{s-1, n-s+1}.
Graph prop54_lower(int n, int s);

/// K_{floor(n/2), ceil(n/2)}: the host attaining the matching count.
Graph prop61_host(int n);

/// (k-1)|V(F)|+1 copies of F glued at u. The glued vertex (the center) is
/// vertex 0; copy c occupies the next |V(F)|-1 indices in F_u order.
Graph f_star(const Graph& f, int u, int k);

/// Number of copies of F glued into f_star(f, u, k).
inline int f_star_copies(const Graph& f, int k) { return (k - 1) * f.order() + 1; }

/// (1/l!) prod_{i<l} floor((n-2i)^2/4), evaluated exactly.
BigCount prop61_value(int n, int l);

/// Number of K_s in the complete multipartite graph with the given part sizes:
/// the s-th elementary symmetric polynomial of the sizes.
Count multipartite_clique_count(std::span<const int> parts, int s);

/// N(K_s, T_{t-1}(n)) for 2 <= s < t <= n.
Count erdos_value(int n, int s, int t);

Count binomial(int n, int k);

}  // namespace kturan
