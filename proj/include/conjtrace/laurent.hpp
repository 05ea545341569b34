#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "conjtrace/errors.hpp"

namespace conjtrace {

// Named variables with an invertibility flag. Negative exponents are only
// allowed on invertible variables. Shared immutably by all polynomials over
// the same ring.
class VariableRegistry {
 public:
  int add(const std::string& name, bool invertible);
  int size() const { return static_cast<int>(vars_.size()); }
  const std::string& name(int i) const { return vars_[static_cast<std::size_t>(i)].name; }
  bool invertible(int i) const { return vars_[static_cast<std::size_t>(i)].invertible; }
  int find(const std::string& name) const;  // -1 if absent

 private:
  struct Var {
    std::string name;
    bool invertible;
  };
  std::vector<Var> vars_;
};

using Registry = std::shared_ptr<const VariableRegistry>;

using Exponents = std::vector<int>;

// Sparse multivariate Laurent polynomial with integer coefficients. Terms
// are kept in a canonical order (lexicographic on the exponent tuple) with
// no zero coefficients, so equality and display are structural.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(Registry reg) : reg_(std::move(reg)) {}
  Laurent(Registry reg, const mpz_class& constant);

  static Laurent variable(const Registry& reg, int index, int exponent = 1);
  static Laurent monomial(const Registry& reg, Exponents exps,
                          const mpz_class& coeff);

  const Registry& registry() const { return reg_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const mpz_class& constant_value() const;  // requires is_constant
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent scaled(const mpz_class& c) const;
  // Exact division of every coefficient; ArithmeticDomainError otherwise.
  Laurent divided_exact(const mpz_class& c) const;

  // A unit of the ring: one term, coefficient +-1, exponents only on
  // invertible variables. Units have inverses.
  bool is_unit() const;
  Laurent unit_inverse() const;

  // Collects terms by the exponent of one variable: exponent -> polynomial
  // in the remaining variables (that variable's slot zeroed).
  std::map<int, Laurent> collect(int var_index) const;

  std::string to_string() const;   // canonical display, e.g. "2 + 2*T"
  std::string to_machine() const;  // (exponent tuple):coeff; ... list

  void add_term(const Exponents& e, const mpz_class& c);

 private:
  void check_compatible(const Laurent& o) const;
  void check_exponents(const Exponents& e) const;
  Registry reg_;
  std::map<Exponents, mpz_class> terms_;
};

// Exact value of the polynomial at an integer assignment. Every variable
// must be assigned; invertible variables must get nonzero values. The
// result is an exact rational whose denominator divides a product of powers
// of the invertible assignments.
mpq_class specialize(const Laurent& p,
                     const std::map<std::string, mpz_class>& assignment);

}  // namespace conjtrace
