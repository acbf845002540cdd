#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootharm/report.hpp"
#include "rootharm/rootdata.hpp"

namespace rootharm {

using Complex = std::complex<double>;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HyperValue {
  Complex value;
  double est_error = 0;
  std::string method;  // series, terminating, pfaff, inversion, inversion-perturbed
};

// Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n for |z| < 1 with a ratio-test tail bound.
HyperValue gauss_2f1(Complex a, Complex b, Complex c, Complex z, double tol = 1e-15);
// Adds the Pfaff and 1/z transformations so that every z off the cut [1, inf) is reachable.
HyperValue hyp2f1(Complex a, Complex b, Complex c, Complex z, double tol = 1e-15);

enum class ArgumentMap { Printed, Standard };
std::string to_string(ArgumentMap m);
// X = e^s with s the value of the short root (alpha/2 in BC1, omega in A1).
double argument(ArgumentMap m, double s);

// Rank one parameters. lam is lambda evaluated on the simple coroot of the BC1 datum
// (the coroot of the long root), k1 = k_{alpha/2}, k2 = k_alpha.
struct Rank1Params {
  Complex lam;
  double k1 = 0;
  double k2 = 0;

  double rho() const { return 0.5 * k1 + k2; }
  Complex a() const { return lam + rho(); }
  Complex b() const { return -lam + rho(); }
  double c() const { return 0.5 + k1 + k2; }
};

// Outcome of the startup comparison of the two argument maps.
struct MapSelection {
  ArgumentMap chosen = ArgumentMap::Standard;
  bool printed_ok = false;
  bool standard_ok = false;
  double printed_residual = 0;
  double standard_residual = 0;
  Json to_json() const;
};
// Runs once; throws DomainError when neither map reproduces the polynomial specialization.
const MapSelection& argument_map_selection();
// Residual max |F(mu+rho) P(mu;1) - P(mu;e^s)| over mu of height <= 3, k in {1/2, 1, 5/2}.
double specialization_residual(ArgumentMap m);

struct FValue {
  Complex value;
  double est_error = 0;
  ArgumentMap map = ArgumentMap::Standard;
  std::string method;
};
FValue rank1_F(const Rank1Params& p, double s, double tol = 1e-15);
FValue rank1_F(const Rank1Params& p, double s, ArgumentMap map, double tol = 1e-15);

enum class CVariant { Tilde, Normalized };
struct CValue {
  Complex value;
  bool near_pole = false;
};
// c~(lambda,k) = prod_{R_+} Gamma(lambda(a^v) + k_{a/2}/2) / Gamma(lambda(a^v) + k_{a/2}/2 + k_a), and c = c~(lambda)/c~(rho(k)).
// k is read numerically; lambda in simple-coroot coordinates.
CValue c_numeric(const RootDatum& rd, const std::vector<double>& k, const std::vector<Complex>& lambda, CVariant variant);

struct LimitEstimate {
  std::vector<double> t;
  std::vector<Complex> samples;  // e^{(rho - lambda) t s} F(lambda; t s)
  Complex extrapolated;
};
// Rank one limit form of c along s = 1.
LimitEstimate c_limit(const Rank1Params& p, const std::vector<double>& t = {5, 10, 20});

// F(0) = 1, F(lambda) = F(-lambda), specialization, map self-test and the two c evaluations.
Report check_hyper_rank1();

}  // namespace rootharm
