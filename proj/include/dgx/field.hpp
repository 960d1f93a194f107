#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dgx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatchError : Error {
  using Error::Error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct WindowError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

// Exact scalar. For Fp the canonical representative lives in the numerator
// (0 <= num < p, den == 1); for Q it is a normalized fraction.
using Scalar = mpq_class;

class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(long p);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long n) const;
  Scalar from_rational(const mpq_class& q) const;  // rejects p | denominator in Fp

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  Scalar reduce(const Scalar& a) const;

  // number of elements, only for prime fields (enumeration loops)
  long order() const;

  std::string to_string() const;
  std::string scalar_to_string(const Scalar& a) const;

 private:
  Field(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

bool is_prime_long(long p);

}  // namespace dgx
