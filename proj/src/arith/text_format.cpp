#include "higgs/arith/text_format.hpp"

#include <charconv>

namespace higgs::arith::detail {

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw DataError(std::string("form: bad ") + what + " '" + std::string(s) + "'");
  return value;
}

}  // namespace higgs::arith::detail
