#include "ncposet/counting.hpp"

#include <stdexcept>
#include <string>

#include "ncposet/poset.hpp"

namespace ncposet {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw PosetError("64-bit overflow in binomial");
  return out;
}

void require_exact(std::int64_t num, std::int64_t den, const char* what) {
  if (den == 0 || num % den != 0) throw std::logic_error(std::string(what) + " is not an integer");
}

std::int64_t sign(int n) { return (n - 1) % 2 == 0 ? 1 : -1; }

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

std::int64_t catalan(std::int64_t n) {
  if (n < 0) throw std::out_of_range("catalan of a negative index");
  return binomial(2 * n, n) / (n + 1);
}

std::int64_t pe_cardinality(int n) {
  if (n < 3) throw std::out_of_range("pe_cardinality needs n >= 3");
  return catalan(n) - 2 * catalan(n - 2);
}

std::int64_t pe_cardinality_closed(int n) {
  if (n < 4) throw std::out_of_range("pe_cardinality_closed needs n >= 4");
  // (5(n-3) + 9(n+1)) / ((n+1)(n-3)) * C(2n-4, n-4)
  const std::int64_t num = checked_mul(5 * (n - 3) + 9 * (n + 1), binomial(2 * n - 4, n - 4));
  const std::int64_t den = static_cast<std::int64_t>(n + 1) * (n - 3);
  require_exact(num, den, "PE cardinality closed form");
  return num / den;
}

std::int64_t nc_moebius_closed(int n) {
  if (n < 1) throw std::out_of_range("nc_moebius_closed needs n >= 1");
  return sign(n) * catalan(n - 1);
}

std::int64_t pe_moebius_closed(int n) {
  if (n < 3) throw std::out_of_range("pe_moebius_closed needs n >= 3");
  const std::int64_t num = checked_mul(4, binomial(2 * n - 5, n - 4));
  require_exact(num, n, "PE Moebius closed form");
  return sign(n) * (num / n);
}

}  // namespace ncposet
