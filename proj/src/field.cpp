#include "dgx/field.hpp"

namespace dgx {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime_long(p)) throw PreconditionError("field Fp requires a prime, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Scalar Field::reduce(const Scalar& a) const {
  if (kind_ == Kind::Rationals) {
    Scalar r = a;
    r.canonicalize();
    return r;
  }
  // a has an invertible denominator mod p by construction
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pz(p_);
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  if (den == 1) return Scalar(n);
  mpz_class d = den % pz;
  if (d < 0) d += pz;
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw FieldMismatchError("denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (n * dinv) % pz;
  return Scalar(r);
}

Scalar Field::from_long(long n) const { return reduce(Scalar(n)); }

Scalar Field::from_rational(const mpq_class& q) const { return reduce(q); }

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw PreconditionError("division by zero");
  if (kind_ == Kind::Rationals) {
    Scalar r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class pz(p_);
  mpz_class n = a.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class ninv;
  if (mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw PreconditionError("non-invertible element mod " + std::to_string(p_));
  return Scalar(ninv);
}

long Field::order() const {
  if (kind_ != Kind::Prime) throw PreconditionError("order() only for prime fields");
  return p_;
}

std::string Field::to_string() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

std::string Field::scalar_to_string(const Scalar& a) const { return a.get_str(); }

}  // namespace dgx
