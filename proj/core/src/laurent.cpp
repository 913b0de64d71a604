#include "hecke/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

LaurentT LaurentT::constant(long long N, Int c) {
  LaurentT r = zero(N);
  if (c != 0) r.terms_.emplace_back(0, std::move(c));
  return r;
}

LaurentT LaurentT::t_pow(long long N, long long k) {
  check(N >= 1, Errc::ConfigInvalid, "t_pow needs N >= 1");
  LaurentT r = zero(N);
  r.terms_.emplace_back(k, 1);
  return r;
}

LaurentT LaurentT::q_pow(long long N, long long k) { return t_pow(N, N * k); }

LaurentT LaurentT::q_term(long long N, Int c, long long k) {
  LaurentT r = zero(N);
  if (c != 0) r.terms_.emplace_back(N * k, std::move(c));
  return r;
}

Int LaurentT::coeff_t(long long exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<long long, Int>& p, long long e) {
        return p.first < e;
      });
  return it == terms_.end() || it->first != exp ? Int(0) : it->second;
}

long long LaurentT::merge_n(const LaurentT& a, const LaurentT& b) {
  if (a.n_ == 0) return b.n_;
  if (b.n_ == 0) return a.n_;
  check(a.n_ == b.n_, Errc::MixedN,
        "coefficients attached to different root data (N " +
            std::to_string(a.n_) + " vs " + std::to_string(b.n_) + ")");
  return a.n_;
}

void LaurentT::merge_add(const LaurentT& o, int sign) {
  n_ = merge_n(*this, o);
  if (o.terms_.empty()) return;
  std::vector<std::pair<long long, Int>> r;
  r.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first < b->first) {
      r.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      r.emplace_back(b->first, sign > 0 ? b->second : Int(-b->second));
      ++b;
    } else {
      Int s = std::move(a->second);
      if (sign > 0)
        s += b->second;
      else
        s -= b->second;
      if (s != 0) r.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) r.push_back(std::move(*a));
  for (; b != o.terms_.end(); ++b)
    r.emplace_back(b->first, sign > 0 ? b->second : Int(-b->second));
  terms_ = std::move(r);
}

LaurentT& LaurentT::operator+=(const LaurentT& o) {
  merge_add(o, +1);
  return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& o) {
  merge_add(o, -1);
  return *this;
}

LaurentT LaurentT::operator+(const LaurentT& o) const {
  LaurentT r = *this;
  r += o;
  return r;
}

LaurentT LaurentT::operator-(const LaurentT& o) const {
  LaurentT r = *this;
  r -= o;
  return r;
}

LaurentT LaurentT::operator*(const LaurentT& o) const {
  LaurentT r = zero(merge_n(*this, o));
  if (terms_.empty() || o.terms_.empty()) return r;
  // Scaling by a monomial shifts exponents and keeps sorted order; Z is a
  // domain, so no cancellation can appear.
  if (o.terms_.size() == 1) {
    const auto& [e2, c2] = o.terms_.front();
    r.terms_.reserve(terms_.size());
    for (const auto& [e1, c1] : terms_) r.terms_.emplace_back(e1 + e2, c1 * c2);
    return r;
  }
  if (terms_.size() == 1) return o * *this;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      const long long e = e1 + e2;
      auto it = std::lower_bound(
          r.terms_.begin(), r.terms_.end(), e,
          [](const std::pair<long long, Int>& p, long long x) {
            return p.first < x;
          });
      if (it != r.terms_.end() && it->first == e)
        it->second += c1 * c2;
      else
        r.terms_.emplace(it, e, c1 * c2);
    }
  r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                [](const std::pair<long long, Int>& p) {
                                  return p.second == 0;
                                }),
                 r.terms_.end());
  return r;
}

LaurentT LaurentT::operator-() const {
  LaurentT r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool LaurentT::operator==(const LaurentT& o) const {
  if (!terms_.empty() && !o.terms_.empty()) merge_n(*this, o);
  return terms_ == o.terms_;
}

bool LaurentT::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.front().second;
  return c == 1 || c == -1;
}

LaurentT LaurentT::inverted_unit() const {
  check(is_unit(), Errc::NotAUnit,
        "only +-t^k is invertible in Z[t,t^-1], got " + str());
  const auto& [e, c] = terms_.front();
  LaurentT r = zero(n_);
  r.terms_.emplace_back(-e, c);
  return r;
}

bool LaurentT::is_in_Zq() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || (n_ > 0 && e % n_ != 0)) return false;
  return true;
}

Rat LaurentT::eval_at_t(const Rat& t) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat p = 1;
    long long k = e < 0 ? -e : e;
    for (long long j = 0; j < k; ++j) p *= t;
    if (e < 0) p = Rat(1) / p;
    acc += Rat(c) * p;
  }
  return acc;
}

Rat LaurentT::eval_at_q(const Rat& q) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    check(n_ > 0 && e % n_ == 0, Errc::NonIntegralExponent,
          "exponent " + std::to_string(e) + " is not a multiple of N");
    long long k = e / n_;
    Rat p = 1;
    long long a = k < 0 ? -k : k;
    for (long long j = 0; j < a; ++j) p *= q;
    if (k < 0) p = Rat(1) / p;
    acc += Rat(c) * p;
  }
  return acc;
}

long long LaurentT::deg_t() const {
  check(!is_zero(), Errc::ZeroElement, "degree of zero");
  return terms_.back().first;
}

long long LaurentT::low_t() const {
  check(!is_zero(), Errc::ZeroElement, "valuation of zero");
  return terms_.front().first;
}

long long LaurentT::deg_q() const {
  long long d = deg_t();
  check(n_ > 0 && d % n_ == 0, Errc::NonIntegralExponent,
        "t-degree " + std::to_string(d) + " is not a multiple of N");
  return d / n_;
}

std::string LaurentT::str() const {
  if (terms_.empty()) return "0";
  // Prefer q when every exponent is a multiple of N.
  bool in_q = n_ > 0;
  if (in_q)
    for (const auto& [e, c] : terms_)
      if (e % n_ != 0) in_q = false;
  std::ostringstream os;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    long long e = in_q ? it->first / n_ : it->first;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = c < 0 ? Int(-c) : c;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << '*';
      os << (in_q ? 'q' : 't');
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace hecke
