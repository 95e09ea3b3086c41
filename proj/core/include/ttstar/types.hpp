#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace ttstar {

using Cplx = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Rmat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

// The three two-function reductions of the radial tt*-Toda system.
// The tag fixes the matrix size n+1 and the primitive root omega.
class CaseId {
 public:
  enum Tag { k4a, k5a, k6a };

  constexpr CaseId(Tag t = k4a) : tag_(t) {}

  constexpr Tag tag() const { return tag_; }
  constexpr int size() const { return tag_ == k4a ? 4 : tag_ == k5a ? 5 : 6; }

  // omega = e^{2 pi i / (n+1)}
  Cplx omega() const {
    return std::polar(1.0, 2.0 * kPi / static_cast<double>(size()));
  }
  // half power e^{pi i / (n+1)}; omega_pow(j) below accepts half-integers via 2j
  Cplx omega_half() const {
    return std::polar(1.0, kPi / static_cast<double>(size()));
  }
  // omega^{halves/2}, exact phase arithmetic
  Cplx omega_pow_half(int halves) const {
    return std::polar(1.0, kPi * static_cast<double>(halves) /
                               static_cast<double>(size()));
  }

  std::string name() const {
    switch (tag_) {
      case k4a: return "4a";
      case k5a: return "5a";
      default: return "6a";
    }
  }

  static CaseId parse(std::string_view s) {
    if (s == "4a") return CaseId(k4a);
    if (s == "5a") return CaseId(k5a);
    if (s == "6a") return CaseId(k6a);
    throw std::invalid_argument("unknown case tag: " + std::string(s));
  }

  friend bool operator==(CaseId a, CaseId b) { return a.tag_ == b.tag_; }
  friend bool operator!=(CaseId a, CaseId b) { return !(a == b); }

 private:
  Tag tag_;
};

// Real Stokes parameters (s1^R, s2^R) with their case.
struct StokesParams {
  double s1 = 0.0;
  double s2 = 0.0;
  CaseId cs = CaseId::k4a;

  StokesParams() = default;
  StokesParams(double s1_, double s2_, CaseId c = CaseId::k4a)
      : s1(s1_), s2(s2_), cs(c) {}

  // complexified values s1 = omega^{3/2} s1^R, s2 = omega^3 s2^R (case 4a)
  Cplx s1_complex() const { return cs.omega_pow_half(3) * s1; }
  Cplx s2_complex() const { return cs.omega_pow_half(6) * s2; }
};

// Asymptotic exponents at x -> 0, convention 2 w_i(x) ~ gamma_i log x.
struct AsymptoticData {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  CaseId cs = CaseId::k4a;

  AsymptoticData() = default;
  AsymptoticData(double g0, double g1, CaseId c = CaseId::k4a)
      : gamma0(g0), gamma1(g1), cs(c) {}
};

// Exact lattice index k = num/den for Stokes sector bookkeeping; avoids
// floating-point keys.  den is normally the case size n+1.
struct Frac {
  int num = 0;
  int den = 1;

  constexpr Frac() = default;
  constexpr Frac(int n, int d) : num(n), den(d) {}
  static constexpr Frac whole(int n) { return Frac(n, 1); }

  double value() const { return static_cast<double>(num) / den; }

  // numerator when rescaled to denominator d; throws if not on that lattice
  int scaled_num(int d) const {
    long long t = static_cast<long long>(num) * d;
    if (t % den != 0)
      throw std::invalid_argument("index " + std::to_string(num) + "/" +
                                  std::to_string(den) +
                                  " is not on the 1/" + std::to_string(d) +
                                  " lattice");
    return static_cast<int>(t / den);
  }
};

struct BlowUpError : std::runtime_error {
  double x;
  explicit BlowUpError(double x_)
      : std::runtime_error("solution blow-up at x = " + std::to_string(x_)),
        x(x_) {}
};

struct NotInRegionAError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DeterminantNearZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PathObstruction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ttstar
