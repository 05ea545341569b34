#include "conjtrace/laurent.hpp"

#include <sstream>

namespace conjtrace {

int VariableRegistry::add(const std::string& name, bool invertible) {
  if (find(name) != -1)
    fail(ErrorKind::BadInput, "duplicate variable " + name);
  vars_.push_back(Var{name, invertible});
  return static_cast<int>(vars_.size()) - 1;
}

int VariableRegistry::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

Laurent::Laurent(Registry reg, const mpz_class& constant) : reg_(std::move(reg)) {
  if (constant != 0)
    terms_[Exponents(static_cast<std::size_t>(reg_ ? reg_->size() : 0), 0)] = constant;
}

Laurent Laurent::variable(const Registry& reg, int index, int exponent) {
  Exponents e(static_cast<std::size_t>(reg->size()), 0);
  e[static_cast<std::size_t>(index)] = exponent;
  return monomial(reg, std::move(e), 1);
}

Laurent Laurent::monomial(const Registry& reg, Exponents exps,
                          const mpz_class& coeff) {
  Laurent p(reg);
  if (coeff != 0) {
    p.check_exponents(exps);
    p.terms_[std::move(exps)] = coeff;
  }
  return p;
}

void Laurent::check_exponents(const Exponents& e) const {
  if (static_cast<int>(e.size()) != (reg_ ? reg_->size() : 0))
    fail(ErrorKind::BadInput, "exponent tuple size mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && !reg_->invertible(static_cast<int>(i)))
      fail(ErrorKind::BadInput,
           "negative exponent on non-invertible " + reg_->name(static_cast<int>(i)));
}

void Laurent::check_compatible(const Laurent& o) const {
  if (reg_ != o.reg_ && !(terms_.empty() || o.terms_.empty()))
    fail(ErrorKind::BadInput, "mixed polynomial rings");
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

const mpz_class& Laurent::constant_value() const {
  static const mpz_class zero = 0;
  if (terms_.empty()) return zero;
  return terms_.begin()->second;
}

void Laurent::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  check_exponents(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  check_compatible(o);
  if (!reg_) reg_ = o.reg_;
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  check_compatible(o);
  if (!reg_) reg_ = o.reg_;
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  check_compatible(o);
  Laurent r(reg_ ? reg_ : o.reg_);
  if (terms_.empty() || o.terms_.empty()) return r;
  // iterate the smaller factor on the outside
  const Laurent& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Laurent& big = terms_.size() <= o.terms_.size() ? o : *this;
  Exponents sum(terms_.begin()->first.size());
  mpz_class prod;
  for (const auto& [es, cs] : small.terms_) {
    for (const auto& [eb, cb] : big.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = es[i] + eb[i];
      prod = cs * cb;
      auto it = r.terms_.find(sum);
      if (it == r.terms_.end()) {
        r.terms_.emplace(sum, prod);
      } else {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Laurent Laurent::scaled(const mpz_class& c) const {
  Laurent r(reg_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Laurent Laurent::divided_exact(const mpz_class& c) const {
  if (c == 0) fail(ErrorKind::ArithmeticDomainError, "division by zero");
  Laurent r(reg_);
  for (const auto& [e, v] : terms_) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    if (rem != 0)
      fail(ErrorKind::ArithmeticDomainError, "inexact coefficient division");
    r.terms_.emplace(e, q);
  }
  return r;
}

bool Laurent::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1 && c != -1) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !reg_->invertible(static_cast<int>(i))) return false;
  return true;
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit()) fail(ErrorKind::ArithmeticDomainError, "not a unit");
  const auto& [e, c] = *terms_.begin();
  Exponents inv = e;
  for (int& x : inv) x = -x;
  return monomial(reg_, std::move(inv), c);
}

std::map<int, Laurent> Laurent::collect(int var_index) const {
  std::map<int, Laurent> out;
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(var_index)];
    Exponents rest = e;
    rest[static_cast<std::size_t>(var_index)] = 0;
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, Laurent(reg_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += reg_->name(static_cast<int>(i));
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << a;
    } else if (a == 1) {
      os << vars;
    } else {
      os << a << "*" << vars;
    }
  }
  return os.str();
}

std::string Laurent::to_machine() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ",";
      os << e[i];
    }
    os << "):" << c << ";";
  }
  return os.str();
}

mpq_class specialize(const Laurent& p,
                     const std::map<std::string, mpz_class>& assignment) {
  const Registry& reg = p.registry();
  std::vector<mpz_class> values;
  if (reg) {
    values.resize(static_cast<std::size_t>(reg->size()));
    for (int i = 0; i < reg->size(); ++i) {
      auto it = assignment.find(reg->name(i));
      if (it == assignment.end())
        fail(ErrorKind::MissingAssignment, "unassigned variable " + reg->name(i));
      if (reg->invertible(i) && it->second == 0)
        fail(ErrorKind::ZeroInverse, "zero assigned to invertible " + reg->name(i));
      values[static_cast<std::size_t>(i)] = it->second;
    }
  }
  mpq_class total = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(),
                 static_cast<unsigned long>(e[i] > 0 ? e[i] : -e[i]));
      if (e[i] > 0) {
        term *= pw;
      } else {
        term /= pw;
      }
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

}  // namespace conjtrace
