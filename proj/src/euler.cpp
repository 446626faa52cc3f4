#include "origami/euler.hpp"

#include <sstream>

#include "origami/ratfun.hpp"

namespace origami {

FactoredK bracket(const Character& chi) {
  FactoredK f;
  for (auto& [m, c] : chi.terms()) {
    if (mono_fixed(m, Torus::BigT))
      throw std::domain_error("bracket: fully fixed term " + mono_str(m));
    f.factors[m] = c;
  }
  return f;
}

Rat eval_k(const FactoredK& f, const EvalPoint& p) {
  Rat out(f.sign);
  for (auto& [m, c] : f.factors) {
    for (int i = 0; i < 3; ++i)
      if (m.dt[i] % 2 != 0)
        throw std::domain_error("eval_k: genuine half power in " + mono_str(m));
    for (auto& [k, d] : m.dw)
      if (d % 2 != 0) throw std::domain_error("eval_k: genuine half power in " + mono_str(m));
    Rat h = eval_sqrt(m, p);  // value of m^(1/2)
    Rat factor = h - Rat(1) / h;
    if (factor == 0)
      throw PoleError("eval_k: factor for " + mono_str(m) + " vanishes at the point");
    out *= rat_pow(factor, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string form_str(const LinearForm& f) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](long c, const std::string& name) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    long a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << name;
  };
  for (int i = 0; i < 3; ++i) emit(f.s[i], "s" + std::to_string(i + 1));
  for (auto& [k, c] : f.v) emit(c, "v[" + std::string(plane_name(slot_plane(k))) + "," +
                                       std::to_string(slot_alpha(k)) + "]");
  if (first) os << "0";
  return os.str();
}

LinearForm form_of(const Monomial& m) {
  LinearForm f;
  for (int i = 0; i < 3; ++i) {
    if (m.dt[i] % 2 != 0)
      throw std::domain_error("form_of: genuine half power in " + mono_str(m));
    f.s[i] = m.dt[i] / 2;
  }
  for (auto& [k, d] : m.dw) {
    if (d % 2 != 0) throw std::domain_error("form_of: genuine half power in " + mono_str(m));
    f.v.emplace_back(k, d / 2);
  }
  return f;
}

FactoredCoh euler_coh(const Character& chi) {
  FactoredCoh f;
  for (auto& [m, c] : chi.terms()) {
    if (mono_fixed(m, Torus::BigT))
      throw std::domain_error("euler_coh: fully fixed term " + mono_str(m));
    f.factors[form_of(m)] += c;
  }
  for (auto it = f.factors.begin(); it != f.factors.end();)
    it = it->second == 0 ? f.factors.erase(it) : std::next(it);
  return f;
}

// ---------------------------------------------------------------------------

bool CohPoint::has_symbolic() const {
  for (auto& [k, val] : v)
    if (val.xc != 0) return true;
  return false;
}

const CohPoint::VVal& CohPoint::v_at(SlotKey k) const {
  auto it = v.find(k);
  if (it == v.end()) throw std::out_of_range("CohPoint: no value for slot " + slot_name(k));
  return it->second;
}

CohPoint CohPoint::draw(std::uint64_t seed, const std::vector<SlotKey>& slots) {
  CohPoint p;
  p.seed = seed;
  RatDraw d(seed);
  for (int i = 0; i < 3; ++i) p.s[i] = d.next();
  for (SlotKey k : slots) p.v[k] = VVal{d.next(), 0};
  return p;
}

CohPoint CohPoint::draw_cy3(std::uint64_t seed, const std::vector<SlotKey>& slots) {
  for (std::uint64_t salt = 0;; ++salt) {
    CohPoint p = draw(seed + salt, slots);
    p.seed = seed + salt;
    p.s[2] = -p.s[0] - p.s[1];
    if (p.s[2] != 0) return p;
  }
}

CohPoint CohPoint::draw_diagonal(std::uint64_t seed, const std::vector<SlotKey>& slots) {
  CohPoint p;
  p.seed = seed;
  RatDraw d(seed);
  Rat s = d.next();
  p.s = {s, s, s};
  Rat v = d.next();
  for (SlotKey k : slots) p.v[k] = VVal{v, 0};
  return p;
}

namespace {

// Evaluate a form at a point: returns (constant part, x coefficient).
std::pair<Rat, Rat> form_value(const LinearForm& f, const CohPoint& p) {
  Rat c(0), a(0);
  for (int i = 0; i < 3; ++i)
    if (f.s[i] != 0) c += Rat(f.s[i]) * p.s[i];
  for (auto& [k, coeff] : f.v) {
    const auto& val = p.v_at(k);
    c += Rat(coeff) * val.c;
    if (val.xc != 0) a += Rat(coeff) * Rat(val.xc);
  }
  return {c, a};
}

}  // namespace

Rat eval_coh(const FactoredCoh& f, const CohPoint& p) {
  Rat out(f.sign);
  for (auto& [form, mult] : f.factors) {
    auto [c, a] = form_value(form, p);
    if (a != 0)
      throw std::domain_error("eval_coh: factor " + form_str(form) +
                              " involves the symbolic variable");
    if (c == 0) throw PoleError("eval_coh: factor " + form_str(form) + " vanishes at the point");
    out *= rat_pow(c, mult);
  }
  return out;
}

RationalFunction1V eval_coh_in_x(const FactoredCoh& f, const CohPoint& p) {
  Poly num = Poly::constant(Rat(f.sign)), den = Poly::constant(Rat(1));
  for (auto& [form, mult] : f.factors) {
    auto [c, a] = form_value(form, p);
    if (a == 0 && c == 0)
      throw PoleError("eval_coh_in_x: factor " + form_str(form) + " vanishes at the point");
    Poly lin = Poly::linear(a, c);
    long long m = mult;
    for (long long i = 0; i < (m < 0 ? -m : m); ++i) {
      if (m > 0)
        num = num * lin;
      else
        den = den * lin;
    }
  }
  return RationalFunction1V(std::move(num), std::move(den));
}

}  // namespace origami
