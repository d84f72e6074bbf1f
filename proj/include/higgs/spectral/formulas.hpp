#pragma once

#include <cstdint>

namespace higgs::spectral {

std::int64_t binomial(std::int64_t n, std::int64_t r);

/// Genus of a smooth spectral cover of degree n over a base of genus g_base,
/// n(g - 1) + 1 + C(n,2) deg N. Throws PreconditionError if negative.
std::int64_t genus(std::int64_t n, std::int64_t deg_n, std::int64_t g_base);

/// Degree of the pushforward of a degree-degL line bundle: degL - C(n,2) deg N.
std::int64_t pushforward_degree(std::int64_t deg_l, std::int64_t n, std::int64_t deg_n);

}  // namespace higgs::spectral
