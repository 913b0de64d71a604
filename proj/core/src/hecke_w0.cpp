#include "hecke/hecke_w0.hpp"

#include <set>
#include <sstream>

namespace hecke {

HWElt HWElt::term(const WeylElt& w, LaurentT c) {
  HWElt h;
  if (!c.is_zero()) h.c_.emplace(w, std::move(c));
  return h;
}

LaurentT HWElt::coeff(const WeylElt& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? LaurentT() : it->second;
}

void HWElt::add_term(const WeylElt& w, const LaurentT& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HWElt& HWElt::operator+=(const HWElt& o) {
  for (const auto& [w, c] : o.c_) add_term(w, c);
  return *this;
}

HWElt& HWElt::operator-=(const HWElt& o) {
  for (const auto& [w, c] : o.c_) add_term(w, -c);
  return *this;
}

HWElt HWElt::operator+(const HWElt& o) const {
  HWElt r = *this;
  r += o;
  return r;
}

HWElt HWElt::operator-(const HWElt& o) const {
  HWElt r = *this;
  r -= o;
  return r;
}

HWElt HWElt::operator-() const {
  HWElt r = *this;
  for (auto& [w, c] : r.c_) c = -c;
  return r;
}

HWElt HWElt::scaled(const LaurentT& c) const {
  HWElt r;
  if (c.is_zero()) return r;
  for (const auto& [w, d] : c_) {
    LaurentT p = d * c;
    if (!p.is_zero()) r.c_.emplace(w, std::move(p));
  }
  return r;
}

std::string HWElt::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*T[" << w.str() << ']';
  }
  return os.str();
}

HeckeOps::HeckeOps(const WeylOps& weyl) : w_(weyl) {}

HWElt HeckeOps::one() const { return basis(w_.id()); }

HWElt HeckeOps::basis(const WeylElt& w) const {
  return HWElt::term(w, datum().lt_one());
}

HWElt HeckeOps::mul_gen_left(int i, int sign, const HWElt& h) const {
  const long long N = datum().N();
  HWElt out;
  if (sign >= 0) {
    for (const auto& [v, c] : h.c_) {
      WeylElt rv = w_.mul_gen_left(i, v);
      if (rv.length() > v.length()) {
        out.add_term(rv, c);
      } else {
        // T_i T_v = (q-1) T_v + q T_{r_i v} when l(r_i v) < l(v).
        out.add_term(v, c * (LaurentT::q_pow(N, 1) - LaurentT::one(N)));
        out.add_term(rv, c * LaurentT::q_pow(N, 1));
      }
    }
    return out;
  }
  // T_i^{-1} x = q^{-1} (T_i x) - (1 - q^{-1}) x.
  HWElt ti = mul_gen_left(i, +1, h);
  out = ti.scaled(LaurentT::q_pow(N, -1));
  out -= h.scaled(LaurentT::one(N) - LaurentT::q_pow(N, -1));
  return out;
}

HWElt HeckeOps::mul_gen_right(const HWElt& h, int i, int sign) const {
  const long long N = datum().N();
  HWElt out;
  if (sign >= 0) {
    for (const auto& [v, c] : h.c_) {
      WeylElt vr = w_.mul_gen_right(v, i);
      if (vr.length() > v.length()) {
        out.add_term(vr, c);
      } else {
        out.add_term(v, c * (LaurentT::q_pow(N, 1) - LaurentT::one(N)));
        out.add_term(vr, c * LaurentT::q_pow(N, 1));
      }
    }
    return out;
  }
  HWElt ti = mul_gen_right(h, i, +1);
  out = ti.scaled(LaurentT::q_pow(N, -1));
  out -= h.scaled(LaurentT::one(N) - LaurentT::q_pow(N, -1));
  return out;
}

HWElt HeckeOps::mul(const HWElt& a, const HWElt& b) const {
  HWElt out;
  for (const auto& [u, c] : a.terms()) {
    // T_u b by folding the letters of u from the right.
    HWElt acc = b.scaled(c);
    const std::vector<int>& word = u.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = mul_gen_left(*it, +1, acc);
    out += acc;
  }
  return out;
}

std::map<WeylElt, LaurentT> HeckeOps::a_polys_for(const WeylElt& w) const {
  const long long N = datum().N();
  std::map<WeylElt, LaurentT> cur;
  cur.emplace(w_.id(), LaurentT::one(N));
  if (w.is_id()) return cur;
  // For w = r_{i_1} ... r_{i_k}, q^{l(w)} T_w^{-1} is the ordered product
  // (T_{i_k} + (1-q)) ... (T_{i_1} + (1-q)), so the family is built by
  // left-multiplying by (T_i + (1-q)) for the letters in word order.
  const std::vector<int>& word = w.word();
  const LaurentT q = LaurentT::q_pow(N, 1);
  const LaurentT qm1 = q - LaurentT::one(N);
  for (auto it = word.begin(); it != word.end(); ++it) {
    const int i = *it;
    std::map<WeylElt, LaurentT> out;
    // Support of the next family is [1, next] = [1, v] u r_i [1, v].
    std::set<WeylElt> support;
    for (const auto& [u, c] : cur) {
      support.insert(u);
      support.insert(w_.mul_gen_left(i, u));
    }
    auto coeff = [&cur](const WeylElt& u) -> LaurentT {
      auto jt = cur.find(u);
      return jt == cur.end() ? LaurentT() : jt->second;
    };
    for (const WeylElt& u : support) {
      WeylElt ru = w_.mul_gen_left(i, u);
      LaurentT val;
      if (ru.length() < u.length()) {
        val = coeff(ru);
      } else {
        val = q * coeff(ru) - qm1 * coeff(u);
      }
      if (!val.is_zero()) out.emplace(u, std::move(val));
    }
    cur = std::move(out);
  }
  return cur;
}

LaurentT HeckeOps::a_poly(const WeylElt& u, const WeylElt& w) const {
  auto fam = a_polys_for(w);
  auto it = fam.find(u);
  return it == fam.end() ? datum().lt_zero() : it->second;
}

HWElt HeckeOps::t_inverse(const WeylElt& w) const {
  const long long N = datum().N();
  HWElt out;
  LaurentT qinv = LaurentT::q_pow(N, -w.length());
  for (const auto& [u, a] : a_polys_for(w)) out.add_term(u, a * qinv);
  return out;
}

long long HeckeOps::elt_length(const HWElt& h) const {
  check(!h.is_zero(), Errc::ZeroElement, "elt_length of zero");
  long long m = 0;
  for (const auto& [w, c] : h.terms())
    m = std::max<long long>(m, w.length());
  return m;
}

}  // namespace hecke
