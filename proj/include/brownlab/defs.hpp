#pragma once

// Shared error types and tiny numeric helpers.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace brownlab {

// Malformed user input: cycle text, group specs. CLI exit code 2.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested group enumeration exceeded the configured cap. CLI exit code 3.
class order_cap_exceeded : public std::runtime_error {
public:
  explicit order_cap_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency check that should never fail did. CLI exit code 4.
class invariant_violation : public std::logic_error {
public:
  explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

inline constexpr std::size_t kDefaultOrderCap = 20000;

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Largest power of p dividing n (n > 0).
inline long long p_part(long long n, long long p) {
  long long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

}  // namespace brownlab
