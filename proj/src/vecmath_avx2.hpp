#pragma once

// 4-wide double-precision exp and sin/cos on __m256d, Cephes-style:
// Cody-Waite reduction plus minimax polynomials. Absolute accuracy ~1-2 ulp
// for |x| up to ~2^30, which covers every phase argument the evaluators
// form (|t log n| < 10^6 at desk scale). Only included by the AVX2
// translation unit.

#include <immintrin.h>

namespace rsl::kernels::avx2 {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// exp(x), inputs clamped to [-708, 708].
inline __m256d exp_pd(__m256d x) {
  const __m256d max_x = splat(708.0), min_x = splat(-708.0);
  x = _mm256_min_pd(max_x, _mm256_max_pd(min_x, x));

  const __m256d log2e = splat(1.4426950408889634073599);
  const __m256d c1 = splat(6.93145751953125e-1);
  const __m256d c2 = splat(1.42860682030941723212e-6);

  __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(n, c1, x);
  x = _mm256_fnmadd_pd(n, c2, x);

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d px = splat(1.26177193074810590878e-4);
  px = _mm256_fmadd_pd(px, xx, splat(3.02994407707441961300e-2));
  px = _mm256_fmadd_pd(px, xx, splat(9.99999999999999999910e-1));
  px = _mm256_mul_pd(px, x);
  __m256d qx = splat(3.00198505138664455042e-6);
  qx = _mm256_fmadd_pd(qx, xx, splat(2.52448340349684104192e-3));
  qx = _mm256_fmadd_pd(qx, xx, splat(2.27265548208155028766e-1));
  qx = _mm256_fmadd_pd(qx, xx, splat(2.00000000000000000005e0));
  __m256d r = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  r = _mm256_fmadd_pd(splat(2.0), r, splat(1.0));

  // scale by 2^n: n is an integer in [-1075, 1024]
  __m128i ni = _mm256_cvtpd_epi32(n);
  __m256i nl = _mm256_cvtepi32_epi64(ni);
  __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(nl, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(r, _mm256_castsi256_pd(bits));
}

// sin(x) and cos(x) together.
inline void sincos_pd(__m256d x, __m256d* s_out, __m256d* c_out) {
  const __m256d sign_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x8000000000000000ll));
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
  const __m256d x_sign = _mm256_and_pd(x, sign_mask);
  __m256d ax = _mm256_and_pd(x, abs_mask);

  const __m256d four_over_pi = splat(1.27323954473516268615);
  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, four_over_pi));
  // force y even
  __m256d y_half = _mm256_mul_pd(y, splat(0.5));
  __m256d odd = _mm256_sub_pd(y_half, _mm256_floor_pd(y_half));  // 0 or 0.5
  y = _mm256_add_pd(y, _mm256_add_pd(odd, odd));

  const __m256d dp1 = splat(7.85398125648498535156e-1);
  const __m256d dp2 = splat(3.77489470793079817668e-8);
  const __m256d dp3 = splat(2.69515142907905952645e-15);
  __m256d z = _mm256_fnmadd_pd(y, dp1, ax);
  z = _mm256_fnmadd_pd(y, dp2, z);
  z = _mm256_fnmadd_pd(y, dp3, z);

  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d sp = splat(1.58962301576546568060e-10);
  sp = _mm256_fmadd_pd(sp, zz, splat(-2.50507477628578072866e-8));
  sp = _mm256_fmadd_pd(sp, zz, splat(2.75573136213857245213e-6));
  sp = _mm256_fmadd_pd(sp, zz, splat(-1.98412698295895385996e-4));
  sp = _mm256_fmadd_pd(sp, zz, splat(8.33333333332211858878e-3));
  sp = _mm256_fmadd_pd(sp, zz, splat(-1.66666666666666307295e-1));
  __m256d psin = _mm256_fmadd_pd(_mm256_mul_pd(sp, zz), z, z);

  __m256d cp = splat(-1.13585365213876817300e-11);
  cp = _mm256_fmadd_pd(cp, zz, splat(2.08757008419747316778e-9));
  cp = _mm256_fmadd_pd(cp, zz, splat(-2.75573141792967388112e-7));
  cp = _mm256_fmadd_pd(cp, zz, splat(2.48015872888517179954e-5));
  cp = _mm256_fmadd_pd(cp, zz, splat(-1.38888888888730564116e-3));
  cp = _mm256_fmadd_pd(cp, zz, splat(4.16666666666665929218e-2));
  __m256d pcos = _mm256_fmadd_pd(_mm256_mul_pd(cp, zz), zz,
                                 _mm256_fnmadd_pd(zz, splat(0.5), splat(1.0)));

  // quadrant q = (y mod 8)/2 in {0,1,2,3}
  __m256d y8 = _mm256_mul_pd(y, splat(0.125));
  __m256d jm = _mm256_sub_pd(y8, _mm256_floor_pd(y8));  // {0, .25, .5, .75}
  __m256d q1 = _mm256_cmp_pd(jm, splat(0.25), _CMP_EQ_OQ);
  __m256d q2 = _mm256_cmp_pd(jm, splat(0.50), _CMP_EQ_OQ);
  __m256d q3 = _mm256_cmp_pd(jm, splat(0.75), _CMP_EQ_OQ);

  __m256d swap = _mm256_or_pd(q1, q3);
  __m256d s = _mm256_blendv_pd(psin, pcos, swap);
  __m256d c = _mm256_blendv_pd(pcos, psin, swap);

  __m256d s_neg = _mm256_and_pd(_mm256_or_pd(q2, q3), sign_mask);
  __m256d c_neg = _mm256_and_pd(_mm256_or_pd(q1, q2), sign_mask);
  s = _mm256_xor_pd(s, s_neg);
  c = _mm256_xor_pd(c, c_neg);

  *s_out = _mm256_xor_pd(s, x_sign);  // sin is odd
  *c_out = c;
}

// Deterministic horizontal sum: lane 0 + lane 1 + lane 2 + lane 3.
inline double hsum(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

}  // namespace rsl::kernels::avx2
