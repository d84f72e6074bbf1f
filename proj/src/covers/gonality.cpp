#include "higgs/covers/gonality.hpp"

#include "higgs/arith/error.hpp"

namespace higgs::covers {

std::int64_t bn_number(std::int64_t g, std::int64_t r, std::int64_t d) {
  if (g < 0 || r < 0) throw PreconditionError("bn_number: g and r must be nonnegative");
  return g - (r + 1) * (g + r - d);
}

std::optional<ThetaParity> parse_parity(std::string_view s) {
  if (s == "even") return ThetaParity::even;
  if (s == "odd") return ThetaParity::odd;
  return std::nullopt;
}

const char* to_string(ThetaParity p) { return p == ThetaParity::even ? "even" : "odd"; }

std::optional<int> gonality_prediction(int g, ThetaParity parity) {
  if (g < 2) throw PreconditionError("gonality_prediction: g must be at least 2");
  const bool even_theta = parity == ThetaParity::even;
  if (g == 2) return even_theta ? 3 : 2;
  if (g == 3) return even_theta ? 5 : 4;
  if (g % 2 == 0) {
    if (even_theta && g >= 4) return g + 2;
    if (!even_theta && g >= 7) return g + 2;
  } else {
    if (even_theta && g >= 8) return g + 3;
    if (!even_theta && g >= 11) return g + 3;
  }
  return std::nullopt;
}

}  // namespace higgs::covers
