#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>

#include "twofold/audit.hpp"
#include "twofold/exp_params.hpp"
#include "twofold/platform.hpp"

namespace twofold::audit {

namespace {

template <Dotted T>
std::string show(Twofold<T> t) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%a, %a)", double(t.value), double(t.error));
  return buf;
}

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0 || (std::isnan(a) && std::isnan(b));
}

class Suite {
 public:
  void check(std::string name, bool ok, std::string detail = {}) {
    rep_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  template <Dotted T>
  void expect(std::string name, Twofold<T> got, Twofold<T> want) {
    const bool ok = same_bits(got.value, want.value) &&
                    same_bits(got.error, want.error);
    check(std::move(name), ok, "got " + show(got) + " want " + show(want));
  }

  DemoReport finish() {
    rep_.pass = true;
    for (const auto& c : rep_.checks) rep_.pass = rep_.pass && c.pass;
    return std::move(rep_);
  }

 private:
  DemoReport rep_;
};

template <Dotted T>
void bitwise(Suite& s, const std::string& w) {
  const T one = 1, two = 2;
  const auto a = texp0(one);
  s.check("bitwise exp(1) " + w, a.value == platform::exp(one), show(a));
  const auto b = texpm10(one);
  s.check("bitwise expm1(1) " + w, b.value == platform::expm1(one), show(b));
  const auto c = tlog0(two);
  s.check("bitwise log(2) " + w, c.value == platform::log(two), show(c));
  const auto d = tlog1p0(one);
  s.check("bitwise log1p(1) " + w, d.value == platform::log1p(one), show(d));
}

template <Dotted T>
void specials(Suite& s, const std::string& w) {
  using L = std::numeric_limits<T>;
  using P = ExpParams<T>;
  const T inf = L::infinity();
  const T nan = L::quiet_NaN();
  const T zero = 0;

  s.expect<T>("texp0(+inf) " + w, texp0(inf), {inf, inf});
  s.expect<T>("texp0(-inf) " + w, texp0(-inf), {zero, zero});
  s.expect<T>("texp0(nan) " + w, texp0(nan), {nan, nan});
  s.check("texp((nan,0)).value is nan " + w,
          std::isnan(texp(Twofold<T>{nan, 0}).value));
  s.expect<T>("texpm10(-inf) " + w, texpm10(-inf), {T(-1), zero});
  s.expect<T>("texpm10(+inf) " + w, texpm10(inf), {inf, inf});
  s.expect<T>("tlog0(+inf) " + w, tlog0(inf), {inf, inf});
  s.expect<T>("tlog0(0) " + w, tlog0(zero), {-inf, -inf});
  s.expect<T>("tlog0(-0) " + w, tlog0(-zero), {-inf, -inf});
  s.check("tlog0(-1) is nan " + w, std::isnan(tlog0(T(-1)).value));
  s.check("tlog0(nan) is nan " + w, std::isnan(tlog0(nan).value));
  s.expect<T>("tlog1p0(-1) " + w, tlog1p0(T(-1)), {-inf, -inf});
  s.check("tlog1p0(-2) is nan " + w, std::isnan(tlog1p0(T(-2)).value));
  s.expect<T>("tlog1p0(+inf) " + w, tlog1p0(inf), {inf, inf});

  // Signed zeros.
  s.expect<T>("texp0(-0) " + w, texp0(-zero), {T(1), zero});
  s.check("tlog1p0(-0) keeps the sign " + w,
          std::signbit(tlog1p0(-zero).value) && tlog1p0(-zero).value == 0);
  s.check("texpm10(-0) keeps the sign " + w,
          std::signbit(texpm10(-zero).value) && texpm10(-zero).value == 0);

  // Subnormal arguments.
  const T tiny = L::denorm_min();
  const auto e = texp0(tiny);
  s.check("texp0(denorm_min) " + w,
          e.value == 1 && std::fabs(e.error) <= L::epsilon() * L::epsilon(),
          show(e));
  const auto l = tlog0(tiny);
  s.check("tlog0(denorm_min) " + w,
          l.value == platform::log(tiny) && std::isfinite(l.error) &&
              std::fabs(l.error) <= std::fabs(l.value) * L::epsilon(),
          show(l));
  const auto m = texpm10(tiny);
  s.check("texpm10(denorm_min) " + w, m.value == tiny && m.error == 0, show(m));
  const auto q = tlog1p0(tiny);
  s.check("tlog1p0(denorm_min) " + w, q.value == tiny && q.error == 0, show(q));

  // Saturation at the domain bounds.
  const T below = std::nextafter(P::lo_bound, -inf);
  const T above = std::nextafter(P::hi_bound, inf);
  const T top = std::nextafter(P::hi_bound, zero);
  const auto lo = pexp0(P::lo_bound);
  s.check("pexp0(lo_bound) finite " + w,
          std::isfinite(lo.value) && lo.value >= 0 && std::isfinite(lo.error),
          show(Twofold<T>(lo)));
  s.expect<T>("pexp0(below lo_bound) " + w, pexp0(below), {zero, zero});
  s.expect<T>("pexp0(-inf) " + w, pexp0(-inf), {zero, zero});
  s.expect<T>("pexp0(hi_bound) " + w, pexp0(P::hi_bound), {inf, inf});
  s.expect<T>("pexp0(above hi_bound) " + w, pexp0(above), {inf, inf});
  const auto hi = pexp0(top);
  s.check("pexp0(below hi_bound) finite " + w,
          std::isfinite(hi.value) && std::isfinite(hi.error),
          show(Twofold<T>(hi)));
  s.expect<T>("texp0(hi_bound) " + w, texp0(P::hi_bound), {inf, inf});
  s.check("pexpm10(below lo_bound) is -1 " + w,
          pexpm10(below).value == -1 && pexpm10(below).error == 0);

  // A value part that is finite although the exact result is not.
  const auto bad = tlog(Twofold<T>{T(1), T(-1)});
  s.check("tlog((1,-1)) value 0, error nan " + w,
          bad.value == 0 && std::isnan(bad.error), show(bad));
}

}  // namespace

DemoReport run_demo() {
  Suite s;
  bitwise<double>(s, "binary64");
  bitwise<float>(s, "binary32");
  specials<double>(s, "binary64");
  specials<float>(s, "binary32");
  return s.finish();
}

}  // namespace twofold::audit
