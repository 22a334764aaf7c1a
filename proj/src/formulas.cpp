#include "sally/formulas.hpp"

#include <algorithm>
#include <string>

namespace sally {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::ParamOutOfRange, message);
}

void require_m(Integer e, Integer m) {
  require(e >= 4 && m >= 1 && m <= e - 1,
          "need e >= 4 and 1 <= m <= e-1, got e=" + std::to_string(e) + " m=" + std::to_string(m));
}

void require_mn(Integer e, Integer m, Integer n) {
  require(e >= 6 && m >= 1 && m < n && n <= e - 1,
          "need e >= 6 and 1 <= m < n <= e-1, got e=" + std::to_string(e) + " m=" + std::to_string(m) +
              " n=" + std::to_string(n));
}

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::ParamOutOfRange, "integer overflow");
  return out;
}

Integer exact_div(Integer num, Integer den, const char* formula) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::NonIntegerFormulaValue,
                std::string(formula) + ": " + std::to_string(num) + "/" + std::to_string(den));
  }
  return num / den;
}

// Type-3 branch of t(S_e<1,n>): n in [4, (e+1)/2) or n = (e+2)/2, compared
// as rationals so odd e behaves.
bool one_n_has_type_three(Integer e, Integer n) {
  if (n == 2 || n == 3) return false;
  return 2 * n < e + 1 || 2 * n == e + 2;
}

std::set<Integer> interval(Integer lo, Integer hi) {
  std::set<Integer> out;
  for (Integer x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

}  // namespace

Integer binomial(Integer n, Integer k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (Integer i = 1; i <= k; ++i) out = checked_mul(out, n - k + i) / i;
  return out;
}

ClosedFormResult frobenius_m(Integer e, Integer m) {
  require_m(e, m);
  if (m == 1) return {2 * e + 1, "m=1"};
  return {e + m, "otherwise"};
}

ClosedFormResult type_m(Integer e, Integer m) {
  require_m(e, m);
  if (m == 1 || m == e - 1) return {1, "m in {1,e-1}"};
  return {e - m, "otherwise"};
}

ClosedFormResult frobenius_mn(Integer e, Integer m, Integer n) {
  require_mn(e, m, n);
  if (m == 2 && n == 3) return {2 * e + 3, "(m,n)=(2,3)"};
  if (m == 1 && (n == 2 || n == 3)) return {2 * e + n, "m=1, n in {2,3}"};
  if (m == 1) return {2 * e + 1, "m=1, n>=4"};
  return {e + n, "otherwise"};
}

ClosedFormResult type_mn(Integer e, Integer m, Integer n) {
  require_mn(e, m, n);
  if (m == 1) {
    if (n == 2 || n == 3) return {2, "m=1, n in {2,3}"};
    if (2 * n == e + 2) return {3, "m=1, n=(e+2)/2"};
    if (one_n_has_type_three(e, n)) return {3, "m=1, 4<=n<(e+1)/2"};
    return {2, "m=1, n>=(e+1)/2"};
  }
  if (m == 2 && n == 3) return {1, "(m,n)=(2,3)"};
  if (n <= 2 * m) return {e - n + 1, "n<=2m"};
  return {e - n + 2, "n>2m"};
}

Integer mu_m(Integer e, Integer m) {
  require_m(e, m);
  const Integer full = binomial(e - 1, 2);
  return m == 2 ? full : full - 1;
}

std::set<Integer> gaps_closed(const SallyParams& params) {
  params.validate();
  const Integer e = params.e;
  auto out = interval(1, e - 1);
  const auto& d = params.dropped;
  if (d.size() == 1) {
    const Integer m = *d.begin();
    if (m == 1) {
      out.insert({e + 1, 2 * e + 1});
    } else if (m == e - 1) {
      out.insert(2 * e - 1);
    } else {
      out.insert(e + m);
    }
    return out;
  }
  const Integer m = *d.begin(), n = *d.rbegin();
  if (m == 1) {
    out.insert({e + 1, e + n, 2 * e + 1});
    if (n == 2 || n == 3) out.insert(2 * e + n);
  } else if (m == 2 && n == 3) {
    out.insert({e + 2, e + 3, 2 * e + 3});
  } else {
    out.insert({e + m, e + n});
  }
  return out;
}

std::set<Integer> pseudo_frobenius_closed(const SallyParams& params) {
  params.validate();
  const Integer e = params.e;
  const auto& d = params.dropped;
  if (d.size() == 1) {
    const Integer m = *d.begin();
    if (m == 1) return {2 * e + 1};
    if (m == e - 1) return {2 * e - 1};
    auto out = interval(m + 1, e - 1);
    out.insert(e + m);
    return out;
  }
  const Integer m = *d.begin(), n = *d.rbegin();
  if (m == 1) {
    if (n == 2 || n == 3) return {2 * e + 1, 2 * e + n};
    if (one_n_has_type_three(e, n)) return {e + n, 2 * e + 1, e - n + 1};
    return {e + n, 2 * e + 1};
  }
  if (m == 2 && n == 3) return {2 * e + 3};
  std::set<Integer> out;
  for (Integer x : gaps_closed(params)) {
    if (x > n) out.insert(x);
  }
  if (n > 2 * m) out.insert(n - m);
  return out;
}

bool is_symmetric_closed(const SallyParams& params) {
  params.validate();
  const auto& d = params.dropped;
  if (d.size() == 1) return *d.begin() == 1 || *d.begin() == params.e - 1;
  return *d.begin() == 2 && *d.rbegin() == 3;
}

bool is_almost_symmetric_closed(const SallyParams& params) {
  params.validate();
  const auto& d = params.dropped;
  const Integer e = params.e;
  ClosedFormResult f, t;
  if (d.size() == 1) {
    f = frobenius_m(e, *d.begin());
    t = type_m(e, *d.begin());
  } else {
    f = frobenius_mn(e, *d.begin(), *d.rbegin());
    t = type_mn(e, *d.begin(), *d.rbegin());
  }
  return 2 * static_cast<Integer>(gaps_closed(params).size()) == f.value + t.value;
}

bool almost_symmetric_as_stated(Integer e, Integer m, Integer n) {
  require_mn(e, m, n);
  return m >= 2 && n > 2 * m;
}

const char* to_string(BettiFamily family) {
  switch (family) {
    case BettiFamily::S1: return "S1";
    case BettiFamily::S2: return "S2";
    case BettiFamily::S23: return "S23";
    case BettiFamily::S34: return "S34";
    case BettiFamily::SeMinus1: return "Se-1";
  }
  return "?";
}

Integer betti_top_index(BettiFamily family, Integer e) {
  switch (family) {
    case BettiFamily::S1:
    case BettiFamily::S2:
    case BettiFamily::SeMinus1: return e - 2;
    case BettiFamily::S23:
    case BettiFamily::S34: return e - 3;
  }
  return 0;
}

Integer betti_closed(BettiFamily family, Integer e, Integer t) {
  const bool two_drop = family == BettiFamily::S23 || family == BettiFamily::S34;
  require(e >= (two_drop ? 6 : 4), "e too small for family " + std::string(to_string(family)));
  const Integer top = betti_top_index(family, e);
  require(t >= 0 && t <= top, "t=" + std::to_string(t) + " outside [0, " + std::to_string(top) + "]");
  if (t == 0) return 1;
  switch (family) {
    case BettiFamily::S1:
    case BettiFamily::SeMinus1:
      // e t / (e - t - 1) * C(e-2, t+1) for t <= e-3; the last module is free of rank one.
      if (t == e - 2) return 1;
      return exact_div(checked_mul(e * t, binomial(e - 2, t + 1)), e - t - 1, "et/(e-t-1) C(e-2,t+1)");
    case BettiFamily::S2:
      return checked_mul(t, binomial(e - 1, t + 1));
    case BettiFamily::S23:
      if (t == e - 3) return 1;
      return exact_div(checked_mul(t * (e - 1), binomial(e - 3, t + 1)), e - t - 2, "t(e-1)/(e-t-2) C(e-3,t+1)");
    case BettiFamily::S34:
      return checked_mul(t, binomial(e - 2, t + 1));
  }
  return 0;
}

std::vector<Integer> betti_sequence_closed(BettiFamily family, Integer e) {
  std::vector<Integer> out;
  for (Integer t = 0; t <= betti_top_index(family, e); ++t) out.push_back(betti_closed(family, e, t));
  return out;
}

Integer cms_bound(Integer width, Integer t) {
  require(t >= 0, "t must be nonnegative");
  return checked_mul(t, binomial(width + 1, t + 1));
}

}  // namespace sally
