#include "polynil/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polynil::kernel {

namespace {
std::atomic<bool> g_force_serial{false};

bool use_parallel(std::size_t work) {
#ifdef _OPENMP
  return !g_force_serial.load(std::memory_order_relaxed) &&
         work >= parallel_work_threshold && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

// [ilo, ihi] index range of a contributing to out[n].
inline void conv_range(long n, std::size_t na, std::size_t nb, long& ilo,
                       long& ihi) {
  ilo = (n >= static_cast<long>(nb)) ? n - static_cast<long>(nb) + 1 : 0;
  ihi = std::min<long>(n, static_cast<long>(na) - 1);
}

inline void conv_int_one(const mpq_class* a, std::size_t na,
                         const mpq_class* b, std::size_t nb, mpq_class* out,
                         long n) {
  mpz_t acc;
  mpz_init(acc);
  long ilo, ihi;
  conv_range(n, na, nb, ilo, ihi);
  for (long i = ilo; i <= ihi; ++i) {
    mpq_srcptr ai = a[i].get_mpq_t();
    mpq_srcptr bj = b[n - i].get_mpq_t();
    if (mpz_sgn(mpq_numref(ai)) == 0 || mpz_sgn(mpq_numref(bj)) == 0) continue;
    mpz_addmul(acc, mpq_numref(ai), mpq_numref(bj));
  }
  out[n] = mpq_class(mpz_class(acc));
  mpz_clear(acc);
}

inline void conv_rat_one(const mpq_class* a, std::size_t na,
                         const mpq_class* b, std::size_t nb, mpq_class* out,
                         long n) {
  mpq_t acc, tmp;
  mpq_init(acc);
  mpq_init(tmp);
  long ilo, ihi;
  conv_range(n, na, nb, ilo, ihi);
  for (long i = ilo; i <= ihi; ++i) {
    if (mpq_sgn(a[i].get_mpq_t()) == 0 || mpq_sgn(b[n - i].get_mpq_t()) == 0)
      continue;
    mpq_mul(tmp, a[i].get_mpq_t(), b[n - i].get_mpq_t());
    mpq_add(acc, acc, tmp);
  }
  out[n] = mpq_class(acc);
  mpq_clear(acc);
  mpq_clear(tmp);
}
}  // namespace

void force_serial(bool on) { g_force_serial.store(on); }
bool serial_forced() { return g_force_serial.load(); }

void conv_int_ref(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout) {
  for (long n = 0; n < static_cast<long>(nout); ++n)
    conv_int_one(a, na, b, nb, out, n);
}

void conv_int_omp(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout) {
#pragma omp parallel for schedule(dynamic, 16)
  for (long n = 0; n < static_cast<long>(nout); ++n)
    conv_int_one(a, na, b, nb, out, n);
}

void conv_rat_ref(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout) {
  for (long n = 0; n < static_cast<long>(nout); ++n)
    conv_rat_one(a, na, b, nb, out, n);
}

void conv_rat_omp(const mpq_class* a, std::size_t na, const mpq_class* b,
                  std::size_t nb, mpq_class* out, std::size_t nout) {
#pragma omp parallel for schedule(dynamic, 16)
  for (long n = 0; n < static_cast<long>(nout); ++n)
    conv_rat_one(a, na, b, nb, out, n);
}

void conv(const mpq_class* a, std::size_t na, const mpq_class* b,
          std::size_t nb, mpq_class* out, std::size_t nout, bool integral) {
  const std::size_t work = std::min(na, nout) * std::min(nb, nout);
  if (integral) {
    if (use_parallel(work))
      conv_int_omp(a, na, b, nb, out, nout);
    else
      conv_int_ref(a, na, b, nb, out, nout);
  } else {
    if (use_parallel(work))
      conv_rat_omp(a, na, b, nb, out, nout);
    else
      conv_rat_ref(a, na, b, nb, out, nout);
  }
}

namespace {
inline void stride_mul_one(const std::vector<mpz_class>& a,
                           const std::vector<mpz_class>& f, std::size_t stride,
                           std::vector<mpz_class>& out, long n) {
  mpz_t acc;
  mpz_init(acc);
  const long jmax = std::min<long>(n / static_cast<long>(stride),
                                   static_cast<long>(f.size()) - 1);
  for (long j = 0; j <= jmax; ++j) {
    const mpz_class& av = a[n - static_cast<long>(stride) * j];
    if (mpz_sgn(av.get_mpz_t()) == 0) continue;
    mpz_addmul(acc, f[j].get_mpz_t(), av.get_mpz_t());
  }
  out[n] = mpz_class(acc);
  mpz_clear(acc);
}
}  // namespace

std::vector<mpz_class> stride_mul_ref(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& f,
                                      std::size_t stride) {
  std::vector<mpz_class> out(a.size());
  for (long n = 0; n < static_cast<long>(a.size()); ++n)
    stride_mul_one(a, f, stride, out, n);
  return out;
}

std::vector<mpz_class> stride_mul_omp(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& f,
                                      std::size_t stride) {
  std::vector<mpz_class> out(a.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (long n = 0; n < static_cast<long>(a.size()); ++n)
    stride_mul_one(a, f, stride, out, n);
  return out;
}

std::vector<mpz_class> stride_mul(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& f,
                                  std::size_t stride) {
  const std::size_t work = a.size() * f.size();
  if (use_parallel(work)) return stride_mul_omp(a, f, stride);
  return stride_mul_ref(a, f, stride);
}

}  // namespace polynil::kernel
