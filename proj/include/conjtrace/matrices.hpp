#pragma once

#include <gmpxx.h>

#include <vector>

#include "conjtrace/errors.hpp"
#include "conjtrace/laurent.hpp"
#include "conjtrace/parallel.hpp"

namespace conjtrace {

// ---------------------------------------------------------------------------
// Prime field scalar with runtime modulus.

inline long mod_inverse(long a, long p) {
  long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long q = r / newr;
    long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(ErrorKind::ArithmeticDomainError, "not invertible mod p");
  return ((t % p) + p) % p;
}

struct Fp {
  long v = 0;
  long p = 0;

  Fp() = default;
  Fp(long value, long prime) : p(prime) {
    if (prime < 2) fail(ErrorKind::BadPrime, "modulus must be >= 2");
    v = ((value % prime) + prime) % prime;
  }
  static Fp from_mpz(const mpz_class& value, long prime) {
    mpz_class m = value % prime;
    return Fp(m.get_si(), prime);
  }

  Fp operator+(const Fp& o) const { return Fp(v + o.check(*this).v, p); }
  Fp operator-(const Fp& o) const { return Fp(v - o.check(*this).v, p); }
  Fp operator*(const Fp& o) const { return Fp(v * o.check(*this).v, p); }
  Fp operator-() const { return Fp(-v, p); }
  Fp inverse() const { return Fp(mod_inverse(v, p), p); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  const Fp& check(const Fp& other) const {
    if (p != other.p) fail(ErrorKind::BadPrime, "mixed moduli");
    return *this;
  }
};

// ---------------------------------------------------------------------------
// Ring glue used by the generic matrix algorithms.

inline mpz_class ring_zero(const mpz_class&) { return 0; }
inline mpz_class ring_one(const mpz_class&) { return 1; }
inline bool ring_is_zero(const mpz_class& x) { return x == 0; }
inline mpz_class ring_divexact(const mpz_class& x, long k) {
  mpz_class q, r, kk(k);
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), kk.get_mpz_t());
  if (r != 0) fail(ErrorKind::ArithmeticDomainError, "inexact integer division");
  return q;
}

inline mpq_class ring_zero(const mpq_class&) { return 0; }
inline mpq_class ring_one(const mpq_class&) { return 1; }
inline bool ring_is_zero(const mpq_class& x) { return x == 0; }
inline mpq_class ring_divexact(const mpq_class& x, long k) {
  if (k == 0) fail(ErrorKind::ArithmeticDomainError, "division by zero");
  mpq_class r = x / mpq_class(k);
  r.canonicalize();
  return r;
}

inline Fp ring_zero(const Fp& proto) { return Fp(0, proto.p); }
inline Fp ring_one(const Fp& proto) { return Fp(1, proto.p); }
inline bool ring_is_zero(const Fp& x) { return x.v == 0; }
inline Fp ring_divexact(const Fp& x, long k) {
  return x * Fp(mod_inverse(((k % x.p) + x.p) % x.p, x.p), x.p);
}

inline Laurent ring_zero(const Laurent& proto) {
  return Laurent(proto.registry());
}
inline Laurent ring_one(const Laurent& proto) {
  return Laurent(proto.registry(), 1);
}
inline bool ring_is_zero(const Laurent& x) { return x.is_zero(); }
inline Laurent ring_divexact(const Laurent& x, long k) {
  return x.divided_exact(k);
}

// ---------------------------------------------------------------------------
// Square matrix over any of the supported rings.

template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int n, const R& zero) : n_(n), a_(static_cast<std::size_t>(n) * n, zero) {}

  static Matrix identity(int n, const R& proto) {
    Matrix m(n, ring_zero(proto));
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(proto);
    return m;
  }

  int dim() const { return n_; }
  R& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const R& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_dim(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_dim(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  // Entry-parallel product. Entries are independent, so the parallel path
  // is bit-identical to the serial reference.
  Matrix operator*(const Matrix& o) const {
    check_dim(o);
    Matrix r(n_, ring_zero(a_.empty() ? R() : a_[0]));
    auto row_job = [&](std::size_t i) {
      for (int j = 0; j < n_; ++j) {
        R acc = ring_zero(a_[0]);
        for (int k = 0; k < n_; ++k) {
          if (ring_is_zero(at(static_cast<int>(i), k))) continue;
          acc += at(static_cast<int>(i), k) * o.at(k, j);
        }
        r.at(static_cast<int>(i), j) = acc;
      }
    };
    if (n_ >= 6) {
      par::for_each_index(static_cast<std::size_t>(n_), row_job);
    } else {
      par::for_each_index_serial(static_cast<std::size_t>(n_), row_job);
    }
    return r;
  }

  R trace() const {
    R t = ring_zero(a_[0]);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  Matrix scaled(const R& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }

  Matrix pow(unsigned long e) const {
    Matrix base = *this;
    Matrix acc = identity(n_, a_[0]);
    while (e) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

 private:
  void check_dim(const Matrix& o) const {
    if (n_ != o.n_) fail(ErrorKind::BadDimension, "matrix dimension mismatch");
  }
  int n_ = 0;
  std::vector<R> a_;
};

// Characteristic polynomial coefficients C_0..C_n in the convention
// det(tI - A) = sum_k (-1)^{n-k} C_k t^k, so C_n = 1, C_{n-1} = trace,
// C_0 = det. Division-free Faddeev-LeVerrier recurrence; the interior
// divisions are exact in any integral domain of characteristic zero (or
// p > dimension), and a failed exact division reports
// ArithmeticDomainError.
template <class R>
std::vector<R> char_poly(const Matrix<R>& m) {
  int n = m.dim();
  if (n < 1) fail(ErrorKind::BadDimension, "empty matrix");
  const R proto = m.at(0, 0);
  std::vector<R> monic(static_cast<std::size_t>(n) + 1, ring_zero(proto));
  monic[static_cast<std::size_t>(n)] = ring_one(proto);
  Matrix<R> work = m;  // M_1 = A
  R c = ring_zero(proto);
  c -= work.trace();
  monic[static_cast<std::size_t>(n - 1)] = c;
  for (int k = 2; k <= n; ++k) {
    Matrix<R> step = work + Matrix<R>::identity(n, proto).scaled(c);
    work = m * step;
    R t = work.trace();
    c = ring_divexact(t, -static_cast<long>(k));
    monic[static_cast<std::size_t>(n - k)] = c;
  }
  std::vector<R> out(static_cast<std::size_t>(n) + 1, ring_zero(proto));
  for (int k = 0; k <= n; ++k) {
    R ck = monic[static_cast<std::size_t>(k)];
    if ((n - k) % 2 != 0) {
      R flipped = ring_zero(proto);
      flipped -= ck;
      ck = flipped;
    }
    out[static_cast<std::size_t>(k)] = ck;
  }
  return out;
}

// Newton's identities: elementary symmetric functions from power sums.
// Input power_traces[i-1] = trace of the i-th power; output[k-1] = C^n_k,
// the coefficient in the convention above, as exact expressions. Requires
// exact division by 1..n in the coefficient ring.
template <class R>
std::vector<R> newton_coefficients(const std::vector<R>& power_traces, int n) {
  if (n < 1) fail(ErrorKind::BadDimension, "newton: n must be positive");
  if (static_cast<int>(power_traces.size()) < n)
    fail(ErrorKind::BadInput, "newton: need n power traces");
  const R proto = power_traces[0];
  std::vector<R> e(static_cast<std::size_t>(n) + 1, ring_zero(proto));
  e[0] = ring_one(proto);
  for (int k = 1; k <= n; ++k) {
    R acc = ring_zero(proto);
    for (int i = 1; i <= k; ++i) {
      R term = e[static_cast<std::size_t>(k - i)] *
               power_traces[static_cast<std::size_t>(i - 1)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[static_cast<std::size_t>(k)] = ring_divexact(acc, k);
  }
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    out.push_back(e[static_cast<std::size_t>(n - k)]);
  return out;
}

// Entrywise reduction of a rational matrix modulo p. BadPrime when p
// divides any entry denominator.
Matrix<Fp> reduce_mod_p(const Matrix<mpq_class>& m, long p);

// Specialization of a symbolic matrix at an integer assignment.
Matrix<mpq_class> specialize_matrix(
    const Matrix<Laurent>& m, const std::map<std::string, mpz_class>& assignment);

// Matrix power with arbitrary-precision exponent over a prime field.
Matrix<Fp> pow_mod(const Matrix<Fp>& m, const mpz_class& e);

}  // namespace conjtrace
