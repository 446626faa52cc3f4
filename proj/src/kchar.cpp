#include "origami/kchar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace origami {

namespace {

constexpr std::array<std::pair<int, int>, 6> kAxes{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
constexpr std::array<int, 6> kComplement{5, 4, 3, 2, 1, 0};
constexpr std::array<const char*, 6> kNames{"12", "13", "14", "23", "24", "34"};

void check_plane(int p) {
  if (p < 0 || p >= kNumPlanes) throw std::invalid_argument("bad plane index");
}

}  // namespace

std::pair<int, int> plane_axes(int p) {
  check_plane(p);
  return kAxes[p];
}

int plane_of_axes(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int p = 0; p < kNumPlanes; ++p)
    if (kAxes[p].first == a && kAxes[p].second == b) return p;
  throw std::invalid_argument("bad axis pair");
}

int plane_complement(int p) {
  check_plane(p);
  return kComplement[p];
}

bool plane_in3(int p) {
  check_plane(p);
  return p == 0 || p == 1 || p == 3;  // 12, 13, 23
}

int plane_phi(int p) { return plane_axes(plane_complement(p)).first; }
int plane_psi(int p) { return plane_axes(plane_complement(p)).second; }

const char* plane_name(int p) {
  check_plane(p);
  return kNames[p];
}

int plane_from_name(const std::string& s) {
  for (int p = 0; p < kNumPlanes; ++p)
    if (s == kNames[p]) return p;
  throw std::invalid_argument("unknown plane label '" + s + "'");
}

std::string slot_name(SlotKey k) {
  return std::string(plane_name(slot_plane(k))) + "." + std::to_string(slot_alpha(k));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial mono_t(int axis, int doubled) {
  Monomial m;
  if (axis >= 1 && axis <= 3) {
    m.dt[axis - 1] = doubled;
  } else if (axis == 4) {
    m.dt = {-doubled, -doubled, -doubled};
  } else {
    throw std::invalid_argument("bad axis");
  }
  return m;
}

Monomial mono_w(int plane, int alpha, int doubled) {
  check_plane(plane);
  if (alpha < 1 || alpha > 255) throw std::invalid_argument("bad slot index");
  Monomial m;
  if (doubled != 0) m.dw.emplace_back(slot_key(plane, alpha), doubled);
  return m;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (int i = 0; i < 3; ++i) r.dt[i] = x.dt[i] + y.dt[i];
  r.dw.reserve(x.dw.size() + y.dw.size());
  auto it = x.dw.begin(), jt = y.dw.begin();
  while (it != x.dw.end() || jt != y.dw.end()) {
    if (jt == y.dw.end() || (it != x.dw.end() && it->first < jt->first)) {
      r.dw.push_back(*it++);
    } else if (it == x.dw.end() || jt->first < it->first) {
      r.dw.push_back(*jt++);
    } else {
      int d = it->second + jt->second;
      if (d != 0) r.dw.emplace_back(it->first, d);
      ++it;
      ++jt;
    }
  }
  return r;
}

Monomial mono_inverse(const Monomial& m) {
  Monomial r;
  for (int i = 0; i < 3; ++i) r.dt[i] = -m.dt[i];
  r.dw.reserve(m.dw.size());
  for (auto& [k, d] : m.dw) r.dw.emplace_back(k, -d);
  return r;
}

namespace {

// Doubled exponent rendered as an integer or a reduced half "d/2".
std::string exp_str(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

void append_power(std::ostringstream& os, const std::string& base, int doubled, bool& first) {
  if (doubled == 0) return;
  if (!first) os << " ";
  first = false;
  os << base;
  if (doubled != 2) os << "^{" << exp_str(doubled) << "}";
}

}  // namespace

std::string mono_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 3; ++i) append_power(os, "t" + std::to_string(i + 1), m.dt[i], first);
  for (auto& [k, d] : m.dw) {
    std::string base = "w[" + std::string(plane_name(slot_plane(k))) + "," +
                       std::to_string(slot_alpha(k)) + "]";
    append_power(os, base, d, first);
  }
  return os.str();
}

bool mono_fixed(const Monomial& m, Torus torus) {
  switch (torus) {
    case Torus::BigT:
      return m.dt == std::array<int, 3>{0, 0, 0} && m.dw.empty();
    case Torus::SmallT:
      return m.dt == std::array<int, 3>{0, 0, 0};
    case Torus::BigT0:
      return m.dt[0] == m.dt[1] && m.dt[1] == m.dt[2] && m.dt[0] % 2 == 0 && m.dw.empty();
    case Torus::SmallT0:
      return m.dt[0] == m.dt[1] && m.dt[1] == m.dt[2] && m.dt[0] % 2 == 0;
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// EvalPoint

Rat RatDraw::next() {
  std::uniform_int_distribution<int> num_d(1, 64), den_d(1, 64), sign_d(0, 1);
  for (int tries = 0; tries < 100000; ++tries) {
    Rat r(num_d(rng_), den_d(rng_));
    r.canonicalize();
    if (r == 0 || r == 1) continue;
    Rat a = abs(r);
    if (std::find(used_abs_.begin(), used_abs_.end(), a) != used_abs_.end()) continue;
    used_abs_.push_back(a);
    if (sign_d(rng_)) r = -r;
    return r;
  }
  throw std::runtime_error("RatDraw: exhausted draw attempts");
}

EvalPoint EvalPoint::draw(std::uint64_t seed, const std::vector<SlotKey>& slots) {
  EvalPoint p;
  p.seed = seed;
  RatDraw d(seed);
  for (int i = 0; i < 3; ++i) p.u[i] = d.next();
  for (SlotKey k : slots) p.y[k] = d.next();
  return p;
}

EvalPoint EvalPoint::pow(long n) const {
  EvalPoint p;
  p.seed = seed;
  for (int i = 0; i < 3; ++i) p.u[i] = rat_pow(u[i], n);
  for (auto& [k, v] : y) p.y[k] = rat_pow(v, n);
  return p;
}

const Rat& EvalPoint::y_at(SlotKey k) const {
  auto it = y.find(k);
  if (it == y.end())
    throw std::out_of_range("EvalPoint: no value for slot " + slot_name(k));
  return it->second;
}

// ---------------------------------------------------------------------------
// Character

Character Character::from(const Monomial& m, long long coeff) {
  Character c;
  if (coeff != 0) c.terms_[m] = coeff;
  return c;
}

long long Character::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Character::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Character operator-(const Character& a) {
  Character r;
  for (auto& [m, c] : a.terms()) r.add_term(m, -c);
  return r;
}

Character Character::scaled(long long c) const {
  Character r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

std::string Character::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << " * " << mono_str(m);
  }
  return os.str();
}

Character dual(const Character& chi) {
  Character r;
  for (auto& [m, c] : chi.terms()) r.add_term(mono_inverse(m), c);
  return r;
}

long long rank(const Character& chi) {
  long long s = 0;
  for (auto& [m, c] : chi.terms()) s += c;
  return s;
}

Character fixed_part(const Character& chi, Torus torus) {
  Character r;
  for (auto& [m, c] : chi.terms())
    if (mono_fixed(m, torus)) r.add_term(m, c);
  return r;
}

long long fixed_dim(const Character& chi, Torus torus) {
  long long s = 0;
  for (auto& [m, c] : chi.terms())
    if (mono_fixed(m, torus)) {
      if (c < 0)
        throw std::domain_error("fixed_dim: negative coefficient at " + mono_str(m));
      s += c;
    }
  return s;
}

long long moving_rank(const Character& chi, Torus torus) {
  return rank(chi) - rank(fixed_part(chi, torus));
}

Character subst_costable(const Character& chi) {
  Character r;
  for (auto& [m, c] : chi.terms()) {
    Monomial n;
    n.dt = m.dt;
    for (auto& [k, d] : m.dw) {
      auto [a, b] = plane_axes(slot_plane(k));
      // w^(d/2) -> t_A^(d/2) w^(-d/2): doubled exponent d lands on both axes.
      n = n * mono_t(a, d) * mono_t(b, d);
      n.dw.emplace_back(k, -d);  // slots stay sorted; only signs change
    }
    r.add_term(n, c);
  }
  return r;
}

Rat eval_sqrt(const Monomial& m, const EvalPoint& p) {
  Rat v(1);
  for (int i = 0; i < 3; ++i)
    if (m.dt[i] != 0) v *= rat_pow(p.u[i], m.dt[i]);
  for (auto& [k, d] : m.dw) v *= rat_pow(p.y_at(k), d);
  return v;
}

Rat eval(const Character& chi, const EvalPoint& p) {
  Rat s(0);
  for (auto& [m, c] : chi.terms()) {
    // Full monomial value: square of the half-power value.
    Rat h = eval_sqrt(m, p);
    s += Rat(c) * h * h;
  }
  return s;
}

}  // namespace origami
