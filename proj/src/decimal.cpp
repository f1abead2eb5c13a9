#include "cyclosvp/decimal.hpp"

#include <mpfr.h>

#include "cyclosvp/error.hpp"

namespace cyclosvp {

namespace {

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, 512); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::string render(mpfr_ptr value, int digits) {
  if (mpfr_zero_p(value)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), value, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!s.empty() && s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  // value = 0.s * 10^exp
  if (exp <= 0) return sign + "0." + std::string(static_cast<size_t>(-exp), '0') + s;
  if (exp >= static_cast<mpfr_exp_t>(s.size())) return sign + s + std::string(static_cast<size_t>(exp) - s.size(), '0');
  return sign + s.substr(0, static_cast<size_t>(exp)) + "." + s.substr(static_cast<size_t>(exp));
}

}  // namespace

std::string decimal_scaled_root(const Integer& scale, const Integer& x, unsigned long k, int digits) {
  if (x < 0 || k == 0) throw DomainError("invalid_root", "decimal root needs x >= 0 and k >= 1");
  Mpfr v;
  Mpfr s;
  mpfr_set_z(v.get(), x.backend().data(), MPFR_RNDN);
  mpfr_rootn_ui(v.get(), v.get(), k, MPFR_RNDN);
  mpfr_set_z(s.get(), scale.backend().data(), MPFR_RNDN);
  mpfr_mul(v.get(), v.get(), s.get(), MPFR_RNDN);
  return render(v.get(), digits);
}

std::string decimal_root(const Integer& x, unsigned long k, int digits) {
  return decimal_scaled_root(Integer(1), x, k, digits);
}

}  // namespace cyclosvp
