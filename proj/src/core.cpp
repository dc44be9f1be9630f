#include "ftpoly/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "ftpoly/error.hpp"

namespace ftpoly {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::ScaleCap: return "ScaleCap";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotHalfMax: return "NotHalfMax";
    case ErrorCode::IndexInSubset: return "IndexInSubset";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t first = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    return pos > first ? std::string(text.substr(start, pos - start)) : std::string();
  };
  std::string num = digits(true);
  if (num.empty()) return false;
  if (num.front() == '+') num.erase(0, 1);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(false);
    if (den.empty()) return false;
  }
  if (pos != text.size()) return false;
  mpz_class n, q;
  if (n.set_str(num, 10) != 0 || q.set_str(den, 10) != 0 || q == 0) return false;
  out = Rational(n, q);
  out.canonicalize();
  return true;
}

std::vector<std::string> to_strings(const Point& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

Instance::Instance(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::Empty, "instance has no elements");
  if (elements_.size() % 2 != 0)
    throw Error(ErrorCode::OddCount,
                "instance has " + std::to_string(elements_.size()) + " elements; need an even count");
  for (Element e : elements_) {
    if (e > kMaxAbsElement || e < -kMaxAbsElement)
      throw Error(ErrorCode::OutOfRange, "element " + std::to_string(e) + " exceeds 2^40 in magnitude");
  }
  if (elements_.size() > (std::size_t{1} << 20))
    throw Error(ErrorCode::OutOfRange, "instance has too many elements");
}

Element Instance::min() const { return *std::min_element(elements_.begin(), elements_.end()); }
Element Instance::max() const { return *std::max_element(elements_.begin(), elements_.end()); }
Element Instance::sum() const { return std::accumulate(elements_.begin(), elements_.end(), Element{0}); }

std::string Instance::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << '}';
  return os.str();
}

Translated translate_positive(const Instance& inst) {
  Element lo = inst.min();
  if (lo >= 1) return {inst, 0};
  Element shift = 1 - lo;
  std::vector<Element> out(inst.elements().begin(), inst.elements().end());
  for (auto& e : out) e += shift;
  return {Instance(std::move(out)), shift};
}

Oddified oddify(const Instance& inst) {
  if (!inst.positive()) throw Error(ErrorCode::NotPositive, "oddify requires positive elements");
  if (inst.max() % 2 != 0) return {inst, 0};
  std::vector<Element> out(inst.elements().begin(), inst.elements().end());
  for (auto& e : out) e += 1;
  return {Instance(std::move(out)), 1};
}

Element DerivedConstants::sum_d() const { return std::accumulate(d.begin(), d.end(), Element{0}); }

DerivedConstants derive_constants(const Instance& inst) {
  if (!inst.positive()) throw Error(ErrorCode::NotPositive, "constants require positive elements");
  DerivedConstants c;
  c.total = inst.sum();
  c.s_max = inst.max();
  c.big_m = c.total + 1;
  c.epsilon = Rational(1, 2 * static_cast<long>(c.big_m));
  c.epsilon.canonicalize();
  c.d.reserve(inst.size());
  for (Element s : inst.elements()) c.d.push_back(c.s_max - s);

  const Rational mm = rational(static_cast<Element>(inst.half())) * rational(c.big_m);
  c.k1_rhs = rational(c.total, 2) + mm + c.epsilon;
  c.k2_rhs = rational(c.sum_d(), 2) + mm + c.epsilon;
  return c;
}

std::size_t ConstraintMask::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<ConstraintId> ConstraintMask::ids() const {
  std::vector<ConstraintId> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ConstraintId>(std::countr_zero(b)));
  return out;
}

ConstraintSystem::ConstraintSystem(Instance inst, DerivedConstants consts)
    : instance_(std::move(inst)), consts_(std::move(consts)) {
  const std::size_t n = instance_.size();
  if (n > kMaxSupportedDimension)
    throw Error(ErrorCode::DimensionCap, "dimension " + std::to_string(n) + " exceeds the supported maximum of " +
                                             std::to_string(kMaxSupportedDimension));
  rows_.reserve(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> a(n, Rational(0));
    a[i] = -1;
    rows_.push_back({ConstraintKind::LowerBound, i, std::move(a), Rational(0)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> a(n, Rational(0));
    a[i] = 1;
    rows_.push_back({ConstraintKind::UpperBound, i, std::move(a), Rational(1)});
  }
  std::vector<Rational> k1(n), k2(n);
  for (std::size_t i = 0; i < n; ++i) {
    k1[i] = rational(consts_.big_m + instance_[i]);
    k2[i] = rational(consts_.big_m + consts_.d[i]);
  }
  rows_.push_back({ConstraintKind::K1, 0, std::move(k1), consts_.k1_rhs});
  rows_.push_back({ConstraintKind::K2, 0, std::move(k2), consts_.k2_rhs});
}

std::string ConstraintSystem::label(ConstraintId id) const {
  const Halfspace& h = row(id);
  switch (h.kind) {
    case ConstraintKind::LowerBound: return "x" + std::to_string(h.index + 1) + ">=0";
    case ConstraintKind::UpperBound: return "x" + std::to_string(h.index + 1) + "<=1";
    case ConstraintKind::K1: return "K1";
    case ConstraintKind::K2: return "K2";
  }
  return "?";
}

void ConstraintSystem::check_dimension(std::span<const Rational> p) const {
  if (p.size() != dimension())
    throw Error(ErrorCode::DimensionMismatch, "point has dimension " + std::to_string(p.size()) + ", system has " +
                                                  std::to_string(dimension()));
}

Rational ConstraintSystem::slack(ConstraintId id, std::span<const Rational> p) const {
  check_dimension(p);
  const Halfspace& h = row(id);
  switch (h.kind) {
    case ConstraintKind::LowerBound: return p[h.index];
    case ConstraintKind::UpperBound: return h.rhs - p[h.index];
    default: break;
  }
  Rational lhs(0);
  for (std::size_t i = 0; i < p.size(); ++i) lhs += h.coeffs[i] * p[i];
  return h.rhs - lhs;
}

bool ConstraintSystem::is_feasible(std::span<const Rational> p) const {
  check_dimension(p);
  for (ConstraintId id = 0; id < size(); ++id) {
    if (sgn(slack(id, p)) < 0) return false;
  }
  return true;
}

ConstraintMask ConstraintSystem::active_set(std::span<const Rational> p) const {
  check_dimension(p);
  ConstraintMask mask;
  for (ConstraintId id = 0; id < size(); ++id) {
    if (sgn(slack(id, p)) == 0) mask.insert(id);
  }
  return mask;
}

ConstraintSystem build_constraints(const Instance& inst, const DerivedConstants& consts) {
  return ConstraintSystem(inst, consts);
}

ConstraintSystem build_constraints(const Instance& inst) { return ConstraintSystem(inst, derive_constants(inst)); }

}  // namespace ftpoly
