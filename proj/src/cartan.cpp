#include "slmn/cartan.hpp"

namespace slmn {

CartanData cartan(int M, int N) {
  if (M < 1 || N < 1) throw std::invalid_argument("cartan: M, N >= 1 required");
  if (M == N) throw std::invalid_argument("cartan: M = N is excluded");
  CartanData c;
  c.M = M;
  c.N = N;
  int n = M + N;
  c.nu.resize(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c.nu[static_cast<size_t>(i)] = (i >= 1 && i <= M) ? 1 : -1;
  c.A.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  auto delta = [n](int i, int j) { return ((i - j) % n + n) % n == 0 ? 1 : 0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          (c.nu[static_cast<size_t>(i)] + c.nu[static_cast<size_t>(i + 1)]) * delta(i, j) -
          c.nu[static_cast<size_t>(i)] * delta(i, j + 1) -
          c.nu[static_cast<size_t>(i + 1)] * delta(i + 1, j);
  return c;
}

}  // namespace slmn
