#include "scartest/rng.hpp"

// Rng is header-only; this translation unit pins the static checks.

namespace scartest {

static_assert(mix64(0) != 0, "mix64 must not fix zero");
static_assert(derive_seed(1, 2) != derive_seed(2, 1),
              "seed derivation must be order sensitive");
static_assert(hash_bytes("a") != hash_bytes("b"));

}  // namespace scartest
