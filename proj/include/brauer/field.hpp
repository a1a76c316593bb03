#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <gmpxx.h>

namespace brauer {

/// Exact rationals; the default scalar type everywhere.
using Rational = mpq_class;

/// Prime field GF(P) with a compile-time modulus.
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  Zp() = default;
  Zp(long long x) {  // NOLINT(google-explicit-constructor): mirrors mpq_class
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += P;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }

  Zp& operator+=(Zp o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % P);
    return *this;
  }
  Zp& operator-=(Zp o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + P - o.v_) % P);
    return *this;
  }
  Zp& operator*=(Zp o) {
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % P);
    return *this;
  }
  Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  Zp inverse() const {
    // Fermat; P is assumed prime.
    std::uint64_t base = v_, result = 1, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Zp(static_cast<long long>(result));
  }

  friend Zp operator+(Zp a, Zp b) { return a += b; }
  friend Zp operator-(Zp a, Zp b) { return a -= b; }
  friend Zp operator*(Zp a, Zp b) { return a *= b; }
  friend Zp operator/(Zp a, Zp b) { return a /= b; }
  friend Zp operator-(Zp a) { return Zp() - a; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

template <class K>
inline bool is_zero(const K& x) {
  return x == K(0);
}

template <class K>
inline std::string scalar_to_string(const K& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

template <class K>
struct FieldName {
  static std::string get() { return "Q"; }
};

template <std::uint32_t P>
struct FieldName<Zp<P>> {
  static std::string get() { return "GF(" + std::to_string(P) + ")"; }
};

template <class K>
std::string field_name() {
  return FieldName<K>::get();
}

}  // namespace brauer
