#pragma once
// Arithmetic in GF(2^m) for odd m, polynomial basis.
//
// Field elements are bitmasks of polynomials over GF(2) modulo a chosen
// irreducible of degree m.  All higher modules fix q = 2^m with m = 2n+1
// and use the twist sigma(x) = x^omega, omega = 2^(n+1), which satisfies
// sigma(sigma(x)) = x^2.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace moore3 {

using Felt = std::uint32_t; // field element, valid range [0, q)

// ---- polynomials over GF(2) as bitmasks ------------------------------------

inline int poly_degree(std::uint64_t p) {
  if (p == 0) return -1;
  int d = 0;
  while (p >> 1) { p >>= 1; ++d; }
  return d;
}

// carry-less product; operands must keep the result below 2^64
inline std::uint64_t poly_clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = poly_degree(p);
  for (int d = poly_degree(a); d >= dp; d = poly_degree(a))
    a ^= p << (d - dp);
  return a;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b,
                                 std::uint64_t p) {
  return poly_mod(poly_clmul(a, b), p);
}

// Rabin's criterion: p of degree m is irreducible iff x^(2^m) == x (mod p)
// and gcd(x^(2^(m/d)) - x, p) == 1 for every prime divisor d of m.
inline bool poly_irreducible(std::uint64_t p) {
  const int m = poly_degree(p);
  if (m <= 0) return false;
  if (m == 1) return true;
  if ((p & 1) == 0) return false; // divisible by x

  auto pow2k_of_x = [&](int k) {
    std::uint64_t t = 2; // the polynomial x
    for (int i = 0; i < k; ++i) t = poly_mulmod(t, t, p);
    return t;
  };

  if (pow2k_of_x(m) != 2) return false;
  int rem = m;
  for (int d = 2; d * d <= rem; ++d) {
    if (rem % d) continue;
    while (rem % d == 0) rem /= d;
    if (poly_gcd(pow2k_of_x(m / d) ^ 2, p) != 1) return false;
  }
  if (rem > 1 && rem < m) {
    if (poly_gcd(pow2k_of_x(m / rem) ^ 2, p) != 1) return false;
  }
  return true;
}

// lexicographically smallest irreducible of degree m (as a bitmask)
inline std::uint32_t smallest_irreducible(int m) {
  const std::uint64_t lo = (std::uint64_t{1} << m) | 1; // constant term forced
  const std::uint64_t hi = std::uint64_t{1} << (m + 1);
  for (std::uint64_t p = lo; p < hi; p += 2)
    if (poly_irreducible(p)) return static_cast<std::uint32_t>(p);
  throw std::logic_error("no irreducible of degree " + std::to_string(m));
}

// ---- the field --------------------------------------------------------------

class FieldCtx {
public:
  int m = 0;            // extension degree, odd, m = 2n+1
  int n = 0;
  Felt q = 0;           // 2^m
  Felt omega = 0;       // 2^(n+1)
  std::uint32_t red_poly = 0;

  explicit FieldCtx(int m_) : FieldCtx(m_, smallest_irreducible(check_m(m_))) {}

  FieldCtx(int m_, std::uint32_t poly) {
    m = check_m(m_);
    n = (m - 1) / 2;
    q = Felt{1} << m;
    omega = Felt{1} << (n + 1);
    if (poly_degree(poly) != m)
      throw std::invalid_argument("reduction polynomial must have degree m");
    if (!poly_irreducible(poly))
      throw std::invalid_argument("reduction polynomial is reducible");
    red_poly = poly;
    build_tables();
  }

  static Felt add(Felt x, Felt y) { return x ^ y; }

  // reference product straight from the definition; also the table builder
  Felt mul_ref(Felt x, Felt y) const {
    return static_cast<Felt>(poly_mod(poly_clmul(x, y), red_poly));
  }

  Felt mul(Felt x, Felt y) const {
    if (!mul_tab_.empty()) return mul_tab_[(std::size_t)x * q + y];
    if (x == 0 || y == 0) return 0;
    std::uint64_t e = (std::uint64_t)log_[x] + log_[y];
    if (e >= q - 1u) e -= q - 1u;
    return exp_[e];
  }

  Felt inv(Felt x) const {
    if (x == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : q - 1u - l];
  }

  // x^e with e any integer; 0^0 = 1, 0^negative rejected
  Felt pow(Felt x, long long e) const {
    if (x == 0) {
      if (e < 0) throw std::domain_error("negative power of zero");
      return e == 0 ? 1 : 0;
    }
    const long long ord = (long long)q - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    return exp_[((std::uint64_t)log_[x] * (std::uint64_t)r) % (std::uint64_t)ord];
  }

  // Tits twist x -> x^omega as (n+1) squarings; sigma(sigma(x)) == x^2
  Felt sigma(Felt x) const {
    for (int i = 0; i <= n; ++i) x = mul(x, x);
    return x;
  }

  // unique square root: x -> x^(2^(m-1))
  Felt sqrt(Felt x) const {
    for (int i = 0; i < m - 1; ++i) x = mul(x, x);
    return x;
  }

  // f(x,y) = x^(omega+2) + x*y + y^omega; cuts out the ovoid and fills the
  // corner entry of the group matrices
  Felt ovoid_form(Felt x, Felt y) const {
    return pow(x, (long long)omega + 2) ^ mul(x, y) ^ sigma(y);
  }

  Felt generator() const { return g0_; } // smallest primitive element
  std::uint32_t log_of(Felt x) const {
    if (x == 0) throw std::domain_error("log of zero");
    return log_[x];
  }
  Felt exp_of(std::uint32_t e) const { return exp_[e % (q - 1u)]; }

private:
  static int check_m(int m_) {
    if (m_ < 3 || m_ > 21 || m_ % 2 == 0)
      throw std::invalid_argument("m must be odd and within [3, 21]");
    return m_;
  }

  void build_tables() {
    // smallest primitive g0: order of g0 is q-1 iff g0^((q-1)/p) != 1 for
    // every prime p | q-1
    std::vector<std::uint32_t> primes;
    {
      std::uint32_t v = q - 1u;
      for (std::uint32_t d = 2; (std::uint64_t)d * d <= v; ++d)
        if (v % d == 0) {
          primes.push_back(d);
          while (v % d == 0) v /= d;
        }
      if (v > 1) primes.push_back(v);
    }
    auto pow_ref = [&](Felt b, std::uint32_t e) {
      Felt r = 1;
      while (e) {
        if (e & 1) r = mul_ref(r, b);
        b = mul_ref(b, b);
        e >>= 1;
      }
      return r;
    };
    for (Felt c = 2; c < q; ++c) {
      bool primitive = true;
      for (std::uint32_t p : primes)
        if (pow_ref(c, (q - 1u) / p) == 1) { primitive = false; break; }
      if (primitive) { g0_ = c; break; }
    }

    exp_.resize(q - 1u);
    log_.assign(q, 0);
    Felt acc = 1;
    for (std::uint32_t i = 0; i < q - 1u; ++i) {
      exp_[i] = acc;
      log_[acc] = i;
      acc = mul_ref(acc, g0_);
    }
    if (acc != 1) throw std::logic_error("generator order mismatch");

    if (q <= 256) { // dense product table pays off only for tiny fields
      mul_tab_.resize((std::size_t)q * q);
      for (Felt x = 0; x < q; ++x)
        for (Felt y = 0; y < q; ++y)
          mul_tab_[(std::size_t)x * q + y] = mul_ref(x, y);
    }
  }

  Felt g0_ = 0;
  std::vector<Felt> exp_, log_, mul_tab_;
};

} // namespace moore3
