#include "conjtrace/matrices.hpp"

namespace conjtrace {

Matrix<Fp> reduce_mod_p(const Matrix<mpq_class>& m, long p) {
  Matrix<Fp> r(m.dim(), Fp(0, p));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      const mpq_class& q = m.at(i, j);
      mpz_class den = q.get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        fail(ErrorKind::BadPrime, "denominator divisible by p");
      Fp num = Fp::from_mpz(q.get_num(), p);
      Fp d = Fp::from_mpz(den, p);
      r.at(i, j) = num * d.inverse();
    }
  return r;
}

Matrix<mpq_class> specialize_matrix(
    const Matrix<Laurent>& m,
    const std::map<std::string, mpz_class>& assignment) {
  Matrix<mpq_class> r(m.dim(), mpq_class(0));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      r.at(i, j) = specialize(m.at(i, j), assignment);
  return r;
}

Matrix<Fp> pow_mod(const Matrix<Fp>& m, const mpz_class& e) {
  if (e < 0) fail(ErrorKind::BadInput, "pow_mod: negative exponent");
  Matrix<Fp> base = m;
  Matrix<Fp> acc = Matrix<Fp>::identity(m.dim(), m.at(0, 0));
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

}  // namespace conjtrace
