#include "origami/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace origami {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int j = 0; j < parts_[0]; ++j) c[j] = col(j);
  return Partition(std::move(c));
}

int Partition::col(int j) const {
  int n = 0;
  for (int p : parts_)
    if (p > j) ++n;
  return n;
}

int Partition::hook(int i, int j) const {
  if (!contains(i, j)) return 0;
  return (row(i) - j) + (col(j) - i - 1);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("Partition::parse: expected '(...)' in '" + s + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  if (!t.empty()) {
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part");
      parts.push_back(std::stoi(tok));
    }
  }
  return Partition(std::move(parts));
}

namespace {

void gen_partitions(int n, int maxp, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n, acc, out);
  if (n == 0) out = {Partition()};
  return cache.emplace(n, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

int RankVector::total() const { return std::accumulate(r.begin(), r.end(), 0); }

std::vector<SlotKey> RankVector::slot_keys() const {
  std::vector<SlotKey> keys;
  for (int p = 0; p < kNumPlanes; ++p)
    for (int a = 1; a <= r[p]; ++a) keys.push_back(slot_key(p, a));
  return keys;
}

std::string RankVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < kNumPlanes; ++p) {
    if (r[p] == 0) continue;
    if (!first) os << ",";
    first = false;
    os << plane_name(p) << "=" << r[p];
  }
  return os.str();
}

RankVector RankVector::parse(const std::string& s) {
  RankVector rv;
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) return rv;
  std::array<bool, 6> seen{};
  std::istringstream is(t);
  std::string tok;
  int pos = 0;
  while (std::getline(is, tok, ',')) {
    ++pos;
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("rank entry " + std::to_string(pos) + " ('" + tok +
                                  "') is not of the form plane=rank");
    int plane;
    try {
      plane = plane_from_name(tok.substr(0, eq));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("rank entry " + std::to_string(pos) + ": unknown plane label '" +
                                  tok.substr(0, eq) + "'");
    }
    if (seen[plane])
      throw std::invalid_argument("rank entry " + std::to_string(pos) + ": duplicate plane label '" +
                                  tok.substr(0, eq) + "'");
    seen[plane] = true;
    int rank = std::stoi(tok.substr(eq + 1));
    if (rank < 0)
      throw std::invalid_argument("rank entry " + std::to_string(pos) + ": negative rank");
    rv.r[plane] = rank;
  }
  return rv;
}

// ---------------------------------------------------------------------------

PartitionTuple::PartitionTuple(const RankVector& ranks, std::vector<Partition> by_slot)
    : ranks_(ranks), slots_(ranks.slot_keys()), parts_(std::move(by_slot)) {
  if (parts_.size() != slots_.size())
    throw std::invalid_argument("PartitionTuple: slot count mismatch");
}

const Partition& PartitionTuple::at(SlotKey k) const {
  auto it = std::find(slots_.begin(), slots_.end(), k);
  if (it == slots_.end()) throw std::out_of_range("PartitionTuple: no slot " + slot_name(k));
  return parts_[it - slots_.begin()];
}

int PartitionTuple::total_size() const {
  int n = 0;
  for (auto& p : parts_) n += p.size();
  return n;
}

std::string PartitionTuple::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (parts_[i].empty()) continue;
    if (!first) os << ", ";
    first = false;
    os << slot_name(slots_[i]) << ":" << parts_[i].str();
  }
  os << "}";
  return os.str();
}

PartitionTuple PartitionTuple::parse(const std::string& s, const RankVector& ranks) {
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("PartitionTuple::parse: expected '{...}'");
  t = t.substr(1, t.size() - 2);
  auto slots = ranks.slot_keys();
  std::vector<Partition> parts(slots.size());
  std::size_t i = 0;
  while (i < t.size()) {
    auto colon = t.find(':', i);
    if (colon == std::string::npos)
      throw std::invalid_argument("PartitionTuple::parse: missing ':'");
    std::string label = t.substr(i, colon - i);
    auto dot = label.find('.');
    if (dot == std::string::npos)
      throw std::invalid_argument("PartitionTuple::parse: slot label '" + label +
                                  "' is not plane.alpha");
    int plane = plane_from_name(label.substr(0, dot));
    int alpha = std::stoi(label.substr(dot + 1));
    SlotKey key = slot_key(plane, alpha);
    auto it = std::find(slots.begin(), slots.end(), key);
    if (it == slots.end())
      throw std::invalid_argument("PartitionTuple::parse: slot " + label +
                                  " not present in ranks " + ranks.str());
    auto close = t.find(')', colon);
    if (close == std::string::npos)
      throw std::invalid_argument("PartitionTuple::parse: unterminated partition");
    parts[it - slots.begin()] = Partition::parse(t.substr(colon + 1, close - colon));
    i = close + 1;
    if (i < t.size()) {
      if (t[i] != ',') throw std::invalid_argument("PartitionTuple::parse: expected ','");
      ++i;
    }
  }
  return PartitionTuple(ranks, std::move(parts));
}

namespace {

void gen_tuples(const RankVector& ranks, const std::vector<SlotKey>& slots, std::size_t k, int rem,
                std::vector<Partition>& acc, std::vector<PartitionTuple>& out) {
  if (k + 1 == slots.size()) {
    for (const Partition& p : partitions_of(rem)) {
      acc.push_back(p);
      out.emplace_back(ranks, acc);
      acc.pop_back();
    }
    return;
  }
  for (int s = 0; s <= rem; ++s) {
    for (const Partition& p : partitions_of(s)) {
      acc.push_back(p);
      gen_tuples(ranks, slots, k + 1, rem - s, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<PartitionTuple> enumerate_tuples(const RankVector& ranks, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_tuples: negative size");
  auto slots = ranks.slot_keys();
  std::vector<PartitionTuple> out;
  if (slots.empty()) {
    if (n == 0) out.emplace_back(ranks, std::vector<Partition>{});
    return out;
  }
  std::vector<Partition> acc;
  acc.reserve(slots.size());
  gen_tuples(ranks, slots, 0, n, acc, out);
  return out;
}

long long count_tuples(const RankVector& ranks, int n) {
  // Coefficient of q^n in prod over slots of 1/(1-q)(1-q^2)...
  int slots = (int)ranks.slot_keys().size();
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int s = 0; s < slots; ++s) {
    for (int part = 1; part <= n; ++part)
      for (int k = part; k <= n; ++k) c[k] += c[k - part];
  }
  return c[n];
}

Character k_char(const Partition& lambda, int plane, int alpha) {
  auto [a, b] = plane_axes(plane);
  Character out;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.row(i); ++j)
      out.add_term(mono_t(a, 2 * i) * mono_t(b, 2 * j) * mono_w(plane, alpha, 2), 1);
  return out;
}

}  // namespace origami
