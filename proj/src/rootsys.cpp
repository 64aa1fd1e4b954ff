#include "ydilog/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace ydilog {

namespace {

using Edge = std::pair<int, int>;

std::vector<Edge> chain(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<Edge> dynkin_edges(const TypeLabel& label) {
  const int n = label.rank;
  switch (label.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
    case Family::T:
      return chain(n);
    case Family::D: {
      auto edges = chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      return edges;
    }
    case Family::E: {
      // Bourbaki: 1-3-4-5-...-n with 2 attached to 4.
      std::vector<Edge> edges{{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return edges;
    }
  }
  return {};
}

std::vector<int> symmetrizers(const TypeLabel& label) {
  const int n = label.rank;
  std::vector<int> nu(static_cast<std::size_t>(n), 1);
  switch (label.family) {
    case Family::B:
      std::fill(nu.begin(), nu.end() - 1, 2);
      break;
    case Family::C:
      nu.back() = 2;
      break;
    case Family::F:
      nu = {2, 2, 1, 1};
      break;
    case Family::G:
      nu = {1, 3};
      break;
    default:
      break;
  }
  return nu;
}

std::optional<int> coxeter_number(const TypeLabel& label) {
  const int n = label.rank;
  switch (label.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
    case Family::T: return std::nullopt;
  }
  return std::nullopt;
}

// Skips label validation so that folding sources such as D_3 can be built.
RootSystem build_unchecked(const TypeLabel& label) {
  RootSystem rs;
  rs.label = label;
  rs.nu = symmetrizers(label);
  rs.coxeter = coxeter_number(label);
  const auto n = static_cast<std::size_t>(label.rank);
  rs.cartan = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i) rs.cartan(i, i) = 2;
  // (a_i,a_j) = -max(nu_i,nu_j) on every bond; c_ij = (a_i,a_j)/nu_i.
  for (auto [a, b] : dynkin_edges(label)) {
    const auto i = static_cast<std::size_t>(a);
    const auto j = static_cast<std::size_t>(b);
    const int pairing = -std::max(rs.nu[i], rs.nu[j]);
    rs.cartan(i, j) = pairing / rs.nu[i];
    rs.cartan(j, i) = pairing / rs.nu[j];
  }
  if (label.family == Family::T) rs.cartan(n - 1, n - 1) = 1;
  return rs;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFGT"[static_cast<int>(f)]; }

std::string variant_name(Variant v) { return v == Variant::A ? "A" : "AFlat"; }

TypeLabel TypeLabel::parse(std::string_view text, int max_rank) {
  if (text.size() < 2) throw std::invalid_argument("type label too short: '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const std::string_view letters = "ABCDEFGT";
  const auto pos = letters.find(letter);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("unknown root system family in '" + std::string(text) + "'");
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("malformed rank in type label '" + std::string(text) + "'");
  TypeLabel label{static_cast<Family>(pos), rank};
  validate_label(label, max_rank);
  return label;
}

std::string TypeLabel::to_string() const { return family_letter(family) + std::to_string(rank); }

void validate_label(const TypeLabel& label, int max_rank) {
  const int n = label.rank;
  auto reject = [&](const std::string& why) {
    throw std::invalid_argument("invalid type " + label.to_string() + ": " + why);
  };
  if (n < 1) reject("rank must be positive");
  if (n > max_rank) reject("rank exceeds the supported maximum " + std::to_string(max_rank));
  switch (label.family) {
    case Family::A:
    case Family::T:
      break;
    case Family::B:
    case Family::C:
      if (n < 2) reject("rank must be at least 2");
      break;
    case Family::D:
      if (n < 4) reject("rank must be at least 4");
      break;
    case Family::E:
      if (n < 6 || n > 8) reject("rank must be 6, 7 or 8");
      break;
    case Family::F:
      if (n != 4) reject("rank must be 4");
      break;
    case Family::G:
      if (n != 2) reject("rank must be 2");
      break;
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RootSystem build_root_system(const TypeLabel& label, int max_rank) {
  validate_label(label, max_rank);
  return build_unchecked(label);
}

RationalMatrix scaled_cartan(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rs.cartan(i, j), rs.nu[j]);
  return m;
}

RationalMatrix weight_gram(const RootSystem& rs, Variant variant) {
  const std::size_t n = rs.rank();
  RationalMatrix flat(n);
  if (rs.label.family == Family::T) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat(i, j) = static_cast<long>(std::min(i, j) + 1);
  } else {
    flat = inverse(scaled_cartan(rs));
  }
  if (variant == Variant::AFlat) return flat;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat(i, j) *= 2;
  return flat;
}

std::string LanglandsDual::affine_name() const {
  return finite.to_string() + "^(" + std::to_string(twist) + ")";
}

LanglandsDual langlands_dual(const TypeLabel& label) {
  const int n = label.rank;
  LanglandsDual d;
  switch (label.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      d.finite = label;
      break;
    case Family::B:
      d.finite = {Family::A, 2 * n - 1};
      d.twist = 2;
      break;
    case Family::C:
      d.finite = {Family::D, n + 1};
      d.twist = 2;
      break;
    case Family::F:
      d.finite = {Family::E, 6};
      d.twist = 2;
      break;
    case Family::G:
      d.finite = {Family::D, 4};
      d.twist = 3;
      break;
    case Family::T:
      d.finite = {Family::A, 2 * n};
      d.twist = 2;
      break;
  }
  d.rank = d.finite.rank;
  d.coxeter = *coxeter_number(d.finite);
  return d;
}

std::vector<std::vector<int>> FoldingData::orbits() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(target_rank));
  for (std::size_t s = 0; s < orbit_map.size(); ++s)
    out[static_cast<std::size_t>(orbit_map[s])].push_back(static_cast<int>(s));
  return out;
}

FoldingData folding(const TypeLabel& label) {
  validate_label(label);
  if (label.is_simply_laced())
    throw std::invalid_argument("folding: " + label.to_string() + " is simply laced");
  const int n = label.rank;
  FoldingData fd;
  fd.source = langlands_dual(label).finite;
  fd.target_rank = n;
  fd.automorphism_order = 2;
  const int m = fd.source.rank;
  fd.orbit_map.resize(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    int target = 0;
    switch (label.family) {
      case Family::B:
      case Family::T:
        // Reflection of the A_m chain.
        target = std::min(s, m - 1 - s);
        break;
      case Family::C:
        // Spin nodes of D_{n+1} merge into the long node.
        target = std::min(s, n - 1);
        break;
      case Family::F: {
        constexpr int kE6ToF4[] = {0, 3, 1, 2, 1, 0};
        target = kE6ToF4[s];
        break;
      }
      case Family::G:
        target = s == 1 ? 0 : 1;
        break;
      default:
        break;
    }
    fd.orbit_map[static_cast<std::size_t>(s)] = target;
  }
  if (label.family == Family::G) fd.automorphism_order = 3;
  return fd;
}

RootSystem folding_source_system(const FoldingData& fd) { return build_unchecked(fd.source); }

}  // namespace ydilog
