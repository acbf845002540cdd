#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootharm/scalar.hpp"

namespace rootharm {

constexpr int kMaxRank = 4;

// Element of the weight lattice P in fundamental-weight coordinates.
struct Weight {
  std::array<int, kMaxRank> c{};

  int operator[](int i) const { return c[i]; }
  int& operator[](int i) { return c[i]; }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int s) const;
  bool is_zero() const { return c == std::array<int, kMaxRank>{}; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 0;
    for (int x : w.c) h = h * 1000003u + static_cast<std::size_t>(x + 4096);
    return h;
  }
};

using IntMatrix = std::array<std::array<int, kMaxRank>, kMaxRank>;
// Point of a_C^* given by its values on the simple coroots.
using Spectral = std::vector<Scalar>;
// Element of a given in simple-coroot coordinates.
using CoVector = std::vector<Scalar>;

struct Root {
  Weight weight;                        // fundamental-weight coordinates
  std::array<int, kMaxRank> coroot{};  // simple-coroot coordinates of the coroot
  Rational norm2;                       // (alpha, alpha)
  int orbit = 0;
  bool positive = false;
  bool multipliable = false;  // 2*alpha is a root
  bool divisible = false;     // alpha/2 is a root
};

struct WeylElement {
  IntMatrix act;     // on fundamental-weight coordinates (columns)
  IntMatrix coact;   // on simple-coroot coordinates
  std::vector<int> word;
  int length = 0;
  int inverse = 0;
};

class RootDatum;

class WeylGroup {
 public:
  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }
  const WeylElement& element(int w) const { return elems_[w]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int simple(int i) const { return simple_[i]; }
  int inverse(int w) const { return elems_[w].inverse; }
  int length(int w) const { return elems_[w].length; }
  int multiply(int a, int b) const;
  int times_simple(int w, int i) const { return right_[w][i]; }  // w * s_i
  int simple_times(int i, int w) const { return left_[w][i]; }   // s_i * w
  bool has_right_descent(int w, int i) const { return length(right_[w][i]) < length(w); }
  int find(const IntMatrix& act) const;

  Weight act(int w, const Weight& mu) const;
  Spectral act(int w, const Spectral& lambda) const;
  CoVector coact(int w, const CoVector& xi) const;
  bool bruhat_leq(int u, int w) const;
  std::string word_string(int w) const;

 private:
  friend class RootDatum;
  int rank_ = 0;
  int longest_ = 0;
  std::vector<WeylElement> elems_;
  std::vector<int> simple_;
  std::vector<std::array<int, kMaxRank>> right_, left_;
  std::unordered_map<std::string, int> index_;
  mutable std::unordered_map<long long, bool> bruhat_cache_;
};

// Immutable root datum; cheap to copy (shared state).
class RootDatum {
 public:
  // Labels such as "A2", "B2", "BC1", "G2", "F4".
  static RootDatum build(std::string_view label);
  static RootDatum build(std::string_view type, int rank);

  const std::string& label() const { return d_->label; }
  const std::string& type() const { return d_->type; }
  int rank() const { return d_->rank; }
  bool is_reduced() const { return d_->reduced; }

  const std::vector<Root>& roots() const { return d_->roots; }
  const std::vector<int>& positive_roots() const { return d_->positive; }
  // R^0_+: positive roots whose double is not a root.
  const std::vector<int>& positive_unmultipliable() const { return d_->positive_unmult; }
  const std::vector<Weight>& simple_roots() const { return d_->simple; }
  int root_index(const Weight& alpha) const;  // -1 if not a root
  int simple_root_index(int i) const { return d_->simple_index[i]; }
  const IntMatrix& cartan() const { return d_->cartan; }
  const WeylGroup& weyl() const { return d_->weyl; }

  int orbit_count() const { return static_cast<int>(d_->orbit_names.size()); }
  const std::vector<std::string>& orbit_names() const { return d_->orbit_names; }
  // Orbit of the simple root alpha_i.
  int simple_orbit(int i) const { return d_->roots[d_->simple_index[i]].orbit; }

  Rational inner(const Weight& a, const Weight& b) const;
  Scalar inner(const Spectral& a, const Spectral& b) const;
  Rational gram(int i, int j) const { return d_->gram[i][j]; }
  static int pair(const Weight& mu, const std::array<int, kMaxRank>& coroot, int rank);
  int pair(const Weight& mu, int root) const { return pair(mu, d_->roots[root].coroot, rank()); }
  Scalar pair(const Spectral& lambda, int root) const;
  Scalar pair(const Weight& mu, const CoVector& xi) const;
  Scalar pair(const Spectral& lambda, const CoVector& xi) const;
  Spectral to_spectral(const Weight& mu) const;
  CoVector coroot_vector(int root) const;
  Weight reflect(int root, const Weight& mu) const;

  // Dominant representative and an element w with w(mu_+) = mu.
  Weight dominant(const Weight& mu) const;
  bool is_dominant(const Weight& mu) const;
  std::vector<Weight> orbit(const Weight& mu) const;
  // Longest w with w(mu_+) = mu.
  int w_mu(const Weight& mu) const;
  // Longest element of the stabilizer of a dominant weight.
  int stabilizer_longest(const Weight& dominant_mu) const;
  int height(const Weight& mu) const;  // sum of fundamental-weight coordinates of mu_+

  // mu - nu is a nonnegative real combination of simple roots.
  bool dominance_leq(const Weight& nu, const Weight& mu) const;
  // Strict triangular order nu ◁ mu.
  bool triangular_less(const Weight& nu, const Weight& mu) const;
  bool triangular_leq(const Weight& nu, const Weight& mu) const {
    return nu == mu || triangular_less(nu, mu);
  }
  // Weights nu ⊴ mu, topologically sorted with mu last.
  std::vector<Weight> order_ideal(const Weight& mu) const;
  // All nu with nu_+ ≤ some listed dominant weight, in a linear extension of ⊴.
  std::vector<Weight> saturated_ideal(const std::vector<Weight>& tops) const;
  // Dominant weights of height ≤ h.
  std::vector<Weight> dominant_of_height(int h) const;
  // Sort key realising a linear extension of ⊴.
  bool topological_before(const Weight& a, const Weight& b) const;

  std::string weight_string(const Weight& mu) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.d_ == b.d_; }

 private:
  struct Data {
    std::string label, type;
    int rank = 0;
    bool reduced = true;
    IntMatrix cartan{};
    std::array<std::array<Rational, kMaxRank>, kMaxRank> gram;
    std::array<std::array<Rational, kMaxRank>, kMaxRank> to_root_coords;  // (A^T)^{-1}
    std::vector<Root> roots;
    std::vector<int> positive, positive_unmult;
    std::vector<Weight> simple;
    std::vector<int> simple_index;
    std::unordered_map<Weight, int, WeightHash> root_lookup;
    std::vector<std::string> orbit_names;
    WeylGroup weyl;
    mutable std::unordered_map<Weight, int, WeightHash> wmu_cache;
  };
  std::shared_ptr<Data> d_;
};

// Orbit-wise multiplicity parameter.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(const RootDatum& rd, std::vector<Scalar> values);
  static Multiplicity symbolic(const RootDatum& rd);
  static Multiplicity constant(const RootDatum& rd, const Scalar& value);
  // Parses "symbolic", a single value, or a comma list (one per orbit).
  static Multiplicity parse(const RootDatum& rd, std::string_view text);

  const RootDatum& datum() const { return rd_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& orbit_value(int orbit) const { return values_[orbit]; }
  const Scalar& of_root(int root) const { return values_[rd_.roots()[root].orbit]; }
  // k_alpha + k_{alpha/2}/2 for alpha in R^0 (the half term vanishes if alpha/2 is not a root).
  Scalar k0(int root) const;
  // k_alpha + k_{alpha/2}/2 attached to the simple reflection s_i.
  Scalar simple_parameter(int i) const;
  // k + s*1 where 1_alpha = 1 iff 2*alpha is not a root.
  Multiplicity shifted(int s) const;
  Multiplicity operator+(const Multiplicity& o) const;
  bool is_nonnegative_integer() const;
  Multiplicity substitute(const std::map<int, Rational>& values) const;
  Spectral rho() const;
  std::string to_string() const;

 private:
  RootDatum rd_;
  std::vector<Scalar> values_;
};

}  // namespace rootharm
