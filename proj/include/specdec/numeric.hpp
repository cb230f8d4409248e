#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specdec {

// Exact arithmetic for everything that must be exact (matrix assembly,
// projector identities, multiplicities); MPFR reals everywhere else.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;
using RealMatrix = DenseMatrix<Real>;
using RealVector = DenseVector<Real>;

/// Thrown when a request would exceed a configured size budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Set the working mantissa size for Real. Values are clamped to [64, 16384].
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Reads SPECDEC_PRECISION (mantissa bits) from the environment, default 128.
/// Safe to call more than once; later calls win.
void init_precision_from_env();

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline Real to_real(const Rational& q) { return Real(q); }

/// base^exp for small integers; throws resource_error past 2^62.
long long checked_pow(long long base, int exp);

/// Number of vertices of the level-n approximation, 1 + (m-1)*m^n.
long long graph_dimension(int m, int n);

}  // namespace specdec
