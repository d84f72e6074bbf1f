#include "higgs/spectral/formulas.hpp"

#include <string>

#include "higgs/arith/error.hpp"

namespace higgs::spectral {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::int64_t genus(std::int64_t n, std::int64_t deg_n, std::int64_t g_base) {
  if (n < 1) throw PreconditionError("genus: n must be positive");
  const std::int64_t g = n * (g_base - 1) + 1 + binomial(n, 2) * deg_n;
  if (g < 0) throw PreconditionError("genus: inconsistent data gives genus " + std::to_string(g));
  return g;
}

std::int64_t pushforward_degree(std::int64_t deg_l, std::int64_t n, std::int64_t deg_n) {
  return deg_l - binomial(n, 2) * deg_n;
}

}  // namespace higgs::spectral
