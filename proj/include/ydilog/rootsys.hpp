#pragma once

#include "ydilog/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ydilog {

enum class Family { A, B, C, D, E, F, G, T };

/// Weight Gram matrix variant: A = 2(w_i,w_j) or AFlat = (w_i,w_j).
enum class Variant { A, AFlat };

inline constexpr int kDefaultMaxRank = 64;

char family_letter(Family f);
std::string variant_name(Variant v);  // "A" or "AFlat"

struct TypeLabel {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A7", "e8", "T3". Throws std::invalid_argument on malformed or invalid labels.
  static TypeLabel parse(std::string_view text, int max_rank = kDefaultMaxRank);

  std::string to_string() const;  // "A7"
  bool is_simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Throws std::invalid_argument unless the family/rank pair names a supported type.
void validate_label(const TypeLabel& label, int max_rank = kDefaultMaxRank);

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const { return n_; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> data_;
};

/// Cartan data with c_ij = 2(a_i,a_j)/(a_i,a_i) and nu_i = (a_i,a_i)/2, short roots normalized
/// to squared length 2. Nodes are 0-based in Bourbaki order.
struct RootSystem {
  TypeLabel label;
  IntMatrix cartan;
  std::vector<int> nu;
  std::optional<int> coxeter;  // absent for the tadpole family

  std::size_t rank() const { return nu.size(); }
  bool is_simply_laced() const { return label.is_simply_laced(); }
};

RootSystem build_root_system(const TypeLabel& label, int max_rank = kDefaultMaxRank);

/// Exact A or AFlat. For T_n these are 2 min(i,j) and min(i,j).
RationalMatrix weight_gram(const RootSystem& rs, Variant variant);

/// The matrix (c_ij / nu_j) whose inverse is AFlat; for T_n this is C itself.
RationalMatrix scaled_cartan(const RootSystem& rs);

struct LanglandsDual {
  TypeLabel finite;  // the simply-laced S_m
  int twist = 1;     // r in S_m^(r)
  int rank = 0;      // m
  int coxeter = 0;   // h*

  std::string affine_name() const;  // e.g. "A5^(2)"
};

LanglandsDual langlands_dual(const TypeLabel& label);

struct FoldingData {
  TypeLabel source;
  std::vector<int> orbit_map;  // source node -> target node
  int automorphism_order = 1;
  int target_rank = 0;

  std::vector<std::vector<int>> orbits() const;
};

/// Folding of the simply-laced source onto a B, C, F, G or T target.
/// Throws std::invalid_argument for simply-laced input.
FoldingData folding(const TypeLabel& label);

/// Root system of a folding source. C_2 folds from D_3, which build_root_system rejects as a label.
RootSystem folding_source_system(const FoldingData& fd);

}  // namespace ydilog
