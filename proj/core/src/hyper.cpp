#include "rootharm/hyper.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_psi.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>

#include "rootharm/jacobi.hpp"

namespace rootharm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Integer n <= 0 within tolerance of x, if any.
std::optional<long> nonpositive_integer(Complex x, double tol = 1e-12) {
  double r = std::round(x.real());
  if (r > 0 || std::abs(x - Complex(r, 0)) > tol * std::max(1.0, std::abs(r))) return std::nullopt;
  return static_cast<long>(r);
}

bool near_integer(Complex x, double tol) {
  return std::abs(x - Complex(std::round(x.real()), 0)) <= tol;
}

// log Gamma with the branch supplied by GSL; nullopt at a pole.
std::optional<Complex> log_gamma(Complex x) {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
  if (nonpositive_integer(x, 1e-14)) return std::nullopt;
  gsl_sf_result lnr, arg;
  if (gsl_sf_lngamma_complex_e(x.real(), x.imag(), &lnr, &arg) != GSL_SUCCESS) return std::nullopt;
  return Complex(lnr.val, arg.val);
}

// Gamma(n1) Gamma(n2) / (Gamma(d1) Gamma(d2)); zero when a denominator sits on a pole.
Complex gamma_ratio(Complex n1, Complex n2, Complex d1, Complex d2) {
  auto ln1 = log_gamma(n1), ln2 = log_gamma(n2), ld1 = log_gamma(d1), ld2 = log_gamma(d2);
  if (!ln1 || !ln2) throw DomainError("Gamma pole in a connection coefficient");
  if (!ld1 || !ld2) return 0.0;
  return std::exp(*ln1 + *ln2 - *ld1 - *ld2);
}

HyperValue finite_sum(Complex a, Complex b, Complex c, Complex z, long terms) {
  Complex term = 1.0, sum = 1.0;
  double mag = 1.0;
  for (long n = 0; n < terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
    mag += std::abs(term);
  }
  return {sum, 4 * kEps * mag * double(terms + 1), "terminating"};
}

Complex snap(Complex x) {
  if (auto n = nonpositive_integer(x)) return Complex(double(*n), 0);
  return x;
}

Complex digamma(Complex x) {
  gsl_sf_result re, im;
  if (gsl_sf_complex_psi_e(x.real(), x.imag(), &re, &im) != GSL_SUCCESS) throw DomainError("digamma failed");
  return {re.val, im.val};
}

Complex rgamma(Complex x) {
  auto l = log_gamma(x);
  return l ? std::exp(-*l) : Complex(0);
}

// psi(x)/Gamma(x), continuous through the poles.
Complex psi_over_gamma(Complex x) {
  if (auto n = nonpositive_integer(x, 1e-14)) {
    double f = 1;
    for (long j = 2; j <= -*n; ++j) f *= double(j);
    return Complex((-*n) % 2 ? f : -f, 0);
  }
  return digamma(x) * rgamma(x);
}

// 1/z expansion when b - a = m is a nonnegative integer; the logarithmic case of the connection formula.
HyperValue inversion_log(Complex a, Complex b, Complex c, Complex z, double tol) {
  if (b.real() < a.real()) std::swap(a, b);
  long m = std::lround((b - a).real());
  b = a + double(m);
  Complex lz = std::log(-z), iz = 1.0 / z;
  Complex gc = std::exp(*log_gamma(c));
  Complex pre = gc * std::exp(-a * lz);

  Complex head = 0;
  double mag = 0;
  if (m > 0) {
    Complex poch = 1.0, zk = 1.0;
    double fact_k = 1;
    for (long k = 0; k < m; ++k) {
      double fact_rest = 1;
      for (long j = 2; j <= m - k - 1; ++j) fact_rest *= double(j);
      Complex t = poch * fact_rest / fact_k * rgamma(c - a - double(k)) * zk;
      head += t;
      mag += std::abs(t);
      poch *= a + double(k);
      fact_k *= double(k + 1);
      zk *= iz;
    }
    head *= rgamma(b);
  }

  Complex tail = 0;
  double p = 1;
  for (long j = 2; j <= m; ++j) p *= double(j);
  Complex P = 1.0 / p;  // (a+m)_k / (k! (k+m)!)
  Complex zk = std::pow(iz, double(m));
  double sign = 1;
  long k = 0;
  int quiet = 0;
  for (; k < 100000; ++k) {
    Complex x = c - a - double(m + k);
    Complex bracket = rgamma(x) * (lz + gsl_sf_psi_int(int(1 + m + k)) + gsl_sf_psi_int(int(1 + k)) - digamma(b + double(k))) -
                      psi_over_gamma(x);
    Complex t = P * sign * zk * bracket;
    tail += t;
    mag += std::abs(t);
    quiet = std::abs(t) <= tol * std::max(std::abs(tail), 1e-300) ? quiet + 1 : 0;
    if (quiet >= 3 && double(k) > std::abs(b) + std::abs(c) + 2) break;
    P *= (b + double(k)) / (double(k + 1) * double(k + m + 1));
    zk *= iz;
    sign = -sign;
  }
  if (k >= 100000) throw DomainError("logarithmic expansion did not converge");
  tail *= rgamma(a);
  Complex v = pre * (head + tail);
  return {v, 16 * kEps * std::abs(pre) * mag * double(k + 1) + tol * std::abs(v), "inversion-log"};
}

HyperValue inversion(Complex a, Complex b, Complex c, Complex z, double tol) {
  auto branch = [&](Complex a1, Complex b1) {
    Complex coef = gamma_ratio(c, b1 - a1, b1, c - a1);
    if (coef == 0.0) return HyperValue{0.0, 0.0, ""};
    HyperValue f = gauss_2f1(a1, a1 - c + 1.0, a1 - b1 + 1.0, 1.0 / z, tol);
    Complex scale = coef * std::exp(-a1 * std::log(-z));
    return HyperValue{scale * f.value, std::abs(scale) * (f.est_error + 8 * kEps * std::abs(f.value)), ""};
  };
  auto both = [&](Complex b1) {
    HyperValue u = branch(a, b1), v = branch(b1, a);
    return HyperValue{u.value + v.value, u.est_error + v.est_error + 4 * kEps * (std::abs(u.value) + std::abs(v.value)),
                      ""};
  };
  if (!near_integer(a - b, 1e-8)) {
    HyperValue r = both(b);
    r.method = "inversion";
    return r;
  }
  return inversion_log(a, b, c, z, tol);
}

}  // namespace

HyperValue gauss_2f1(Complex a, Complex b, Complex c, Complex z, double tol) {
  if (nonpositive_integer(c)) throw DomainError("c is a nonpositive integer");
  a = snap(a);
  b = snap(b);
  auto na = nonpositive_integer(a), nb = nonpositive_integer(b);
  if (na || nb) {
    long terms = std::min(na ? -*na : std::numeric_limits<long>::max(), nb ? -*nb : std::numeric_limits<long>::max());
    return finite_sum(a, b, c, z, terms);
  }
  if (std::abs(z) >= 1) throw DomainError("series needs |z| < 1");
  Complex term = 1.0, sum = 1.0;
  double mag = 1.0;
  const long max_terms = 2000000;
  for (long n = 0; n < max_terms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
    mag += std::abs(term);
    double m = double(n + 1);
    if (m + c.real() <= 0) continue;
    // Ratio of later terms is bounded by r because both factor bounds decrease in m.
    double r = std::abs(z) * (1 + std::abs(a - 1.0) / (m + 1)) * (1 + std::abs(b - c) / (m + c.real()));
    if (r >= 1) continue;
    double tail = std::abs(term) * r / (1 - r);
    if (tail <= tol * std::max(std::abs(sum), 1e-300))
      return {sum, tail + 4 * kEps * mag * std::sqrt(double(n + 2)), "series"};
  }
  throw DomainError("series did not converge");
}

HyperValue hyp2f1(Complex a, Complex b, Complex c, Complex z, double tol) {
  a = snap(a);
  b = snap(b);
  if (nonpositive_integer(a) || nonpositive_integer(b) || std::abs(z) <= 0.75) return gauss_2f1(a, b, c, z, tol);
  Complex w = z / (z - 1.0);
  if (std::abs(w) <= 0.75) {
    HyperValue f = gauss_2f1(a, c - b, c, w, tol);
    Complex scale = std::exp(-a * std::log(1.0 - z));
    return {scale * f.value, std::abs(scale) * f.est_error + 4 * kEps * std::abs(scale * f.value), "pfaff"};
  }
  if (std::abs(z) >= 1 / 0.75) {
    if (z.imag() == 0 && z.real() > 0) throw DomainError("z on the branch cut");
    return inversion(a, b, c, z, tol);
  }
  throw DomainError("no transformation covers this z");
}

std::string to_string(ArgumentMap m) { return m == ArgumentMap::Printed ? "printed" : "standard"; }

double argument(ArgumentMap m, double s) {
  double x = std::exp(s), xi = std::exp(-s);
  if (m == ArgumentMap::Printed) return 0.25 - 0.5 * (x + xi);
  return (2 - x - xi) / 4;
}

Json MapSelection::to_json() const {
  return {{"chosen", to_string(chosen)},
          {"printed_ok", printed_ok},
          {"standard_ok", standard_ok},
          {"printed_residual", printed_residual},
          {"standard_residual", standard_residual}};
}

FValue rank1_F(const Rank1Params& p, double s, ArgumentMap map, double tol) {
  HyperValue h = hyp2f1(p.a(), p.b(), Complex(p.c(), 0), Complex(argument(map, s), 0), tol);
  return {h.value, h.est_error, map, h.method};
}

FValue rank1_F(const Rank1Params& p, double s, double tol) { return rank1_F(p, s, argument_map_selection().chosen, tol); }

double specialization_residual(ArgumentMap map) {
  double worst = 0;
  const std::vector<double> grid = {-1.5, 0.3, 1.0, 2.0};
  for (const char* label : {"A1", "BC1"}) {
    RootDatum rd = RootDatum::build(label);
    for (Rational kv : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
      Multiplicity k = Multiplicity::constant(rd, Scalar(kv));
      JacobiSystem J(k);
      double kd = kv.get_d();
      Rank1Params base{0.0, rd.is_reduced() ? 0.0 : kd, kd};
      for (int m = 0; m <= 3; ++m) {
        Weight mu;
        mu.c[0] = m;
        LaurentPolynomial P = J.symmetric(mu);
        double at_one = P.evaluate({1.0});
        Rank1Params p = base;
        p.lam = double(m) + p.rho();
        for (double s : grid) {
          double exact = P.evaluate({std::exp(s)});
          Complex f = rank1_F(p, s, map).value;
          worst = std::max(worst, std::abs(f * at_one - exact) / std::max(1.0, std::abs(exact)));
        }
      }
    }
  }
  return worst;
}

const MapSelection& argument_map_selection() {
  static const MapSelection sel = [] {
    MapSelection s;
    s.printed_residual = specialization_residual(ArgumentMap::Printed);
    s.standard_residual = specialization_residual(ArgumentMap::Standard);
    s.printed_ok = s.printed_residual <= 1e-10;
    s.standard_ok = s.standard_residual <= 1e-10;
    if (s.standard_ok)
      s.chosen = ArgumentMap::Standard;
    else if (s.printed_ok)
      s.chosen = ArgumentMap::Printed;
    else
      throw DomainError("neither argument map reproduces the Jacobi polynomials");
    return s;
  }();
  return sel;
}

CValue c_numeric(const RootDatum& rd, const std::vector<double>& k, const std::vector<Complex>& lambda, CVariant variant) {
  if (static_cast<int>(k.size()) != rd.orbit_count() || static_cast<int>(lambda.size()) != rd.rank())
    throw std::invalid_argument("c_numeric: parameter sizes do not match the datum");
  auto half_k = [&](int a) {
    const Root& r = rd.roots()[a];
    if (!r.divisible) return 0.0;
    Weight h;
    for (int j = 0; j < rd.rank(); ++j) h.c[j] = r.weight.c[j] / 2;
    return 0.5 * k[rd.roots()[rd.root_index(h)].orbit];
  };
  auto tilde = [&](const std::vector<Complex>& lam, bool& pole) {
    Complex log_value = 0;
    bool zero = false;
    for (int a : rd.positive_roots()) {
      if (k[rd.roots()[a].orbit] == 0) continue;
      Complex x = 0;
      for (int i = 0; i < rd.rank(); ++i) x += double(rd.roots()[a].coroot[i]) * lam[i];
      x += half_k(a);
      Complex y = x + k[rd.roots()[a].orbit];
      if (nonpositive_integer(x, 1e-8) || nonpositive_integer(y, 1e-8)) pole = true;
      auto ln = log_gamma(x), ld = log_gamma(y);
      if (!ln) return Complex(std::numeric_limits<double>::quiet_NaN(), 0);
      if (!ld) zero = true;
      else log_value += *ln - *ld;
    }
    return zero ? Complex(0) : std::exp(log_value);
  };
  CValue out;
  out.value = tilde(lambda, out.near_pole);
  if (variant == CVariant::Normalized) {
    Multiplicity km(rd, [&] {
      std::vector<Scalar> v;
      for (double x : k) v.push_back(Scalar(Rational(x)));
      return v;
    }());
    std::vector<Complex> rho;
    for (const auto& r : km.rho()) rho.push_back(r.to_double());
    out.value /= tilde(rho, out.near_pole);
  }
  return out;
}

LimitEstimate c_limit(const Rank1Params& p, const std::vector<double>& t) {
  LimitEstimate est;
  est.t = t;
  for (double s : t) {
    FValue f = rank1_F(p, s);
    est.samples.push_back(std::exp((p.rho() - p.lam) * s) * f.value);
  }
  est.extrapolated = est.samples.back();
  if (est.samples.size() >= 3) {
    std::size_t n = est.samples.size();
    Complex f1 = est.samples[n - 3], f2 = est.samples[n - 2], f3 = est.samples[n - 1];
    Complex den = (f3 - f2) - (f2 - f1);
    if (std::abs(den) > 0) {
      Complex aitken = f3 - (f3 - f2) * (f3 - f2) / den;
      if (std::abs(aitken - f3) <= std::abs(f3 - f2)) est.extrapolated = aitken;
    }
  }
  return est;
}

Report check_hyper_rank1() {
  Report rep("rank one hypergeometric function: specialization, symmetry and c asymptotics");
  const MapSelection& sel = argument_map_selection();
  rep.details["argument_map"] = sel.to_json();
  if (!sel.standard_ok && !sel.printed_ok) rep.fail({{"argument_map", "inconclusive"}});
  double residual = sel.chosen == ArgumentMap::Standard ? sel.standard_residual : sel.printed_residual;
  if (residual > 1e-10) rep.fail({{"specialization_residual", residual}});

  const std::vector<Rank1Params> params = {
      {Complex(0.7, 0), 0, 1}, {Complex(1.3, 2.1), 0.5, 1.2}, {Complex(0, 3.5), 1, 0.5}, {Complex(2.5, 0), 0, 0.7}};
  for (const auto& p : params) {
    FValue zero = rank1_F(p, 0.0);
    if (std::abs(zero.value - 1.0) > 1e-12) rep.fail({{"F_at_0", std::abs(zero.value - 1.0)}});
    for (double s : {0.4, 1.7, 4.0}) {
      Rank1Params q = p;
      q.lam = -p.lam;
      Complex u = rank1_F(p, s).value, v = rank1_F(q, s).value, w = rank1_F(p, -s).value;
      double scale = std::max(1.0, std::abs(u));
      if (std::abs(u - v) > 1e-10 * scale) rep.fail({{"lambda_symmetry", std::abs(u - v)}, {"s", s}});
      if (std::abs(u - w) > 1e-10 * scale) rep.fail({{"x_symmetry", std::abs(u - w)}, {"s", s}});
    }
  }

  // mu = omega on A1: F(mu + rho) = cosh.
  for (double kv : {0.5, 1.0, 2.5}) {
    Rank1Params p{Complex(1 + kv, 0), 0, kv};
    for (double s : {0.3, 1.1}) {
      double diff = std::abs(rank1_F(p, s).value - std::cosh(s));
      if (diff > 1e-10) rep.fail({{"cosh", diff}, {"k", kv}, {"s", s}});
    }
  }

  Json cs = Json::array();
  RootDatum a1 = RootDatum::build("A1"), bc1 = RootDatum::build("BC1");
  for (const auto& p : std::vector<Rank1Params>{{Complex(3, 0), 0, 1}, {Complex(2.3, 0), 0, 0.7},
                                                {Complex(2.5, 0), 0, 0.7}, {Complex(1.8, 0), 0.5, 1.2}}) {
    bool reduced = p.k1 == 0;
    CValue g = reduced ? c_numeric(a1, {p.k2}, {p.lam}, CVariant::Normalized)
                       : c_numeric(bc1, {p.k1, p.k2}, {p.lam}, CVariant::Normalized);
    LimitEstimate lim = c_limit(p);
    double diff = std::abs(g.value - lim.extrapolated);
    cs.push_back({{"lambda", p.lam.real()}, {"k1", p.k1}, {"k2", p.k2}, {"gamma", g.value.real()},
                  {"limit", lim.extrapolated.real()}, {"diff", diff}});
    if (!(diff <= 1e-6)) rep.fail({{"c_function", cs.back()}});
  }
  rep.details["c_function"] = cs;
  return rep;
}

}  // namespace rootharm
