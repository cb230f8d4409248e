#include "specdec/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace specdec {

namespace {
unsigned g_precision_bits = 0;  // 0 = not yet initialized

unsigned clamp_bits(unsigned bits) {
  return std::min(16384u, std::max(64u, bits));
}

void apply_bits(unsigned bits) {
  g_precision_bits = clamp_bits(bits);
  // boost's mpfr backend takes decimal digits; round up so the mantissa is
  // at least the requested number of bits
  const unsigned digits10 =
      static_cast<unsigned>(std::ceil(g_precision_bits * 0.3010299956639812)) + 2;
  Real::default_precision(digits10);
}
}  // namespace

void set_precision_bits(unsigned bits) { apply_bits(bits); }

unsigned precision_bits() {
  if (g_precision_bits == 0) init_precision_from_env();
  return g_precision_bits;
}

void init_precision_from_env() {
  unsigned bits = 128;
  if (const char* env = std::getenv("SPECDEC_PRECISION")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && parsed > 0) bits = static_cast<unsigned>(parsed);
  }
  apply_bits(bits);
}

long long checked_pow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1LL << 62) / base)
      throw resource_error("checked_pow: result exceeds 2^62");
    out *= base;
  }
  return out;
}

long long graph_dimension(int m, int n) {
  if (m < 3) throw std::domain_error("graph_dimension: need m >= 3");
  if (n < 0) throw std::domain_error("graph_dimension: need n >= 0");
  return 1 + (m - 1) * checked_pow(m, n);
}

}  // namespace specdec
