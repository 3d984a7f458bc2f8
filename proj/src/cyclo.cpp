#include "atlas/cyclo.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace atlas {

std::string Dyadic::str() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& s) {
  auto slash = s.find("/2^");
  if (slash == std::string::npos) {
    return Dyadic(std::strtoll(s.c_str(), nullptr, 10));
  }
  int64_t n = std::strtoll(s.substr(0, slash).c_str(), nullptr, 10);
  int32_t e = static_cast<int32_t>(std::strtol(s.c_str() + slash + 3, nullptr, 10));
  return Dyadic::make(n, e);
}

std::string Cyclo8::str() const {
  static const char* pow[4] = {"", "*z", "*z^2", "*z^3"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    out += pow[k];
  }
  return out.empty() ? "0" : out;
}

std::string Cyclo8::dump_str() const {
  std::string out = c_[0].str();
  for (int k = 1; k < 4; ++k) {
    out += ' ';
    out += c_[k].str();
  }
  return out;
}

Cyclo8 Cyclo8::parse_dump(const std::string& s) {
  std::istringstream in(s);
  std::string tok;
  std::array<Dyadic, 4> c;
  for (int k = 0; k < 4; ++k) {
    if (!(in >> tok)) throw IoError("Cyclo8::parse_dump: short input: " + s);
    c[k] = Dyadic::parse(tok);
  }
  return Cyclo8(c[0], c[1], c[2], c[3]);
}

}  // namespace atlas
