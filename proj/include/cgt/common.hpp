#ifndef CGT_COMMON_HPP_
#define CGT_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgt {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Malformed input: bad file, bad parameters, violated preconditions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit (group order, dimension) was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical expectation failed at runtime.  Either a bug or a
// genuine counterexample; both must be loud.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap on enumerated group order (3^7).
inline constexpr u32 kDefaultOrderCap = 2187;
// Dense exact linear algebra is kept to desk scale.
inline constexpr u32 kMaxDim = 64;

bool is_prime(u32 n);

// p^e with the cap as overflow guard; throws CapExceeded when p^e > cap.
u64 checked_pow(u32 p, u32 e, u64 cap);

// log_p(n) for exact powers; throws InvariantViolation otherwise.
u32 exact_log(u32 p, u64 n);

u64 fnv1a64(const void* data, std::size_t len);

#define CGT_CHECK(cond, msg)                              \
  do {                                                    \
    if (!(cond)) throw ::cgt::InvariantViolation((msg));  \
  } while (0)

}  // namespace cgt

#endif  // CGT_COMMON_HPP_
