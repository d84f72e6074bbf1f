#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace higgs::covers {

/// rho(g, r, d) = g - (r+1)(g+r-d).
std::int64_t bn_number(std::int64_t g, std::int64_t r, std::int64_t d);

enum class ThetaParity { even, odd };

std::optional<ThetaParity> parse_parity(std::string_view s);
const char* to_string(ThetaParity p);

/// Gonality of the canonical double cover of a general genus-g curve branched
/// along the divisor of a theta characteristic of the given parity, where the
/// known results state it; nullopt outside their hypotheses (never
/// extrapolated).
///   g = 2: even 3, odd 2.   g = 3: even 5, odd 4.
///   g even >= 4, even theta: g + 2.   g even >= 7, odd theta: g + 2.
///   g odd >= 8, even theta: g + 3.    g odd >= 11, odd theta: g + 3.
std::optional<int> gonality_prediction(int g, ThetaParity parity);

}  // namespace higgs::covers
