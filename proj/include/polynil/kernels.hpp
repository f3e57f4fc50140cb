#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

// Low-level coefficient kernels. Each kernel comes in a serial reference
// flavour (`*_ref`) and an OpenMP flavour (`*_omp`); the undecorated entry
// point dispatches on problem size. The two flavours must agree exactly --
// tests compare them coefficient by coefficient.
namespace polynil::kernel {

// Force the serial reference path everywhere (used by tests and the
// benchmark driver to get a baseline).
void force_serial(bool on);
bool serial_forced();

// Minimum number of coefficient multiplications before the OpenMP path
// is worth the fork/join overhead.
inline constexpr std::size_t parallel_work_threshold = std::size_t{1} << 15;

// Cauchy convolution: out[n] = sum_{i+j=n} a[i]*b[j] for n < nout.
// The `_int` variants require every input entry to have denominator 1 and
// accumulate in plain mpz arithmetic.
void conv_int_ref(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout);
void conv_int_omp(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout);
void conv_rat_ref(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout);
void conv_rat_omp(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout);

// Dispatching convolution; `integral` selects the mpz fast path.
void conv(const mpq_class* a, std::size_t na, const mpq_class* b,
          std::size_t nb, mpq_class* out, std::size_t nout, bool integral);

// Multiply a dense series by a factor supported on powers of t^stride:
// out[i] = sum_j f[j] * a[i - stride*j].  This is the inner loop of the
// Euler-transform product over (1-t^n)^{-b_n}.
std::vector<mpz_class> stride_mul_ref(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& f,
                                      std::size_t stride);
std::vector<mpz_class> stride_mul_omp(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& f,
                                      std::size_t stride);
std::vector<mpz_class> stride_mul(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& f,
                                  std::size_t stride);

}  // namespace polynil::kernel
