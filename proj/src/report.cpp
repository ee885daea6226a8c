#include "rigidsum/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include "rigidsum/cohomology.hpp"
#include "rigidsum/weyl.hpp"

namespace rigidsum {

namespace {

using nlohmann::json;

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13};

long require_int(const json& v, const char* key, long lo, long hi) {
  if (!v.is_number_integer())
    throw SpecError(std::string(key) + ": integer expected");
  long n = v.get<long>();
  if (n < lo || n > hi)
    throw SpecError(std::string(key) + ": out of range");
  return n;
}

std::vector<long> parse_twist(const json& v, unsigned p) {
  if (!v.is_array() || v.size() < 2 || v.size() > 9)
    throw SpecError("twist: 2..9 integer coefficients expected");
  std::vector<long> t;
  for (const auto& c : v)
    t.push_back(require_int(c, "twist coefficient", -1000000, 1000000));
  if (t.front() != 0) throw SpecError("twist: constant term must vanish");
  if (t.back() == 0) throw SpecError("twist: leading coefficient is zero");
  if ((t.size() - 1) % p == 0)
    throw SpecError("twist: degree divisible by p is out of scope");
  return t;
}

bool oracle_fits(unsigned p, unsigned order) {
  uint64_t n = 1;
  for (unsigned i = 0; i < order; ++i) {
    n *= p;
    if (n > kEnumerationBudget) return false;
  }
  return true;
}

SigmaNablaModule build_module(const JobSpec& s, long t) {
  SigmaNablaModule m = make_dwork_module(s.p, s.twists[0], s.q, t);
  for (size_t i = 1; i < s.twists.size(); ++i)
    m = direct_sum(m, make_dwork_module(s.p, s.twists[i], s.q, t));
  return m;
}

std::vector<CycloElem> oracle_sums(const JobSpec& s, unsigned n) {
  std::vector<CycloElem> acc(n, CycloElem(s.p));
  for (const auto& t : s.twists) {
    SumSeries ss = sum_series(t, s.p, n);
    for (unsigned k = 0; k < n; ++k) acc[k] += ss.values[k];
  }
  return acc;
}

struct Pipeline {
  long d = 0;
  size_t dim = 0;
  CharPoly cp;
  bool oracle_checked = false;
  bool identified = false;
  LPolynomial lp;
};

Pipeline run_pipeline(const JobSpec& s) {
  Pipeline pl;
  pl.d = static_cast<long>(s.twists[0].size()) - 1;
  long bump = std::max<long>(16, pl.d * static_cast<long>(s.q) / 2);
  Rat work = s.precision + 16;
  Mat<PiAdicApprox> f = frobenius_on_h1_certified(
      [&](long t) { return build_module(s, t); }, s.trunc, bump, work);
  pl.dim = f.rows();
  pl.cp = char_poly(f, s.p, s.q);
  unsigned need = std::max<unsigned>(static_cast<unsigned>(pl.dim) + 2, 4);
  if (oracle_fits(s.p, need)) {
    pl.oracle_checked = true;
    std::vector<CycloElem> sums = oracle_sums(s, need);
    pl.lp = l_poly_from_sums(sums, s.p, s.q,
                             static_cast<unsigned>(pl.dim));
    pl.identified =
        pl.lp.consistent && identify_with_oracle(pl.cp, pl.lp.h1, Rat(8));
  }
  return pl;
}

json coeff_json(const PiAdicApprox& c) {
  return json{{"value", c.value().to_string()},
              {"known_mod", c.known_mod().to_string()},
              {"valuation", c.valuation().to_string()}};
}

json coeffs_json(const CharPoly& cp) {
  json a = json::array();
  for (const PiAdicApprox& c : cp.coeffs) a.push_back(coeff_json(c));
  return a;
}

json slopes_json(const CharPoly& cp) {
  json a = json::array();
  for (const Rat& s : newton_slopes(cp)) a.push_back(s.get_str());
  return a;
}

std::string deviation_string(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", d);
  return buf;
}

json weight_json(const CharPoly& cp) {
  WeightReport wr = weight_check(cp, Rat(1), 1e-6);
  return json{{"ok", wr.ok}, {"deviation", deviation_string(wr.worst_deviation)}};
}

void attach_timing(json& r, bool timings,
                   std::chrono::steady_clock::time_point t0) {
  if (!timings) return;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  r["timings"] = json{{"total_ms", ms}};
}

}  // namespace

JobSpec parse_spec(const json& j) {
  if (!j.is_object()) throw SpecError("job: object expected");
  static const std::set<std::string> allowed = {"p",     "q",         "P",
                                                "base",  "trunc",     "precision",
                                                "fibers"};
  for (const auto& kv : j.items())
    if (!allowed.count(kv.key()))
      throw SpecError("job: unknown key '" + kv.key() + "'");

  JobSpec s;
  if (!j.contains("p")) throw SpecError("job: missing p");
  long p = require_int(j.at("p"), "p", 2, 13);
  if (std::find(std::begin(kPrimes), std::end(kPrimes),
                static_cast<unsigned>(p)) == std::end(kPrimes))
    throw SpecError("p: prime up to 13 expected");
  s.p = static_cast<unsigned>(p);
  s.q = j.contains("q")
            ? static_cast<unsigned>(require_int(j.at("q"), "q", 2, 1 << 20))
            : s.p;
  if (s.q != s.p) throw SpecError("q: only q = p is supported");

  bool has_p = j.contains("P"), has_base = j.contains("base");
  if (has_p == has_base)
    throw SpecError("job: exactly one of P and base required");
  if (has_p) {
    s.twists.push_back(parse_twist(j.at("P"), s.p));
  } else {
    const json& b = j.at("base");
    if (!b.is_object()) throw SpecError("base: object expected");
    for (const auto& kv : b.items())
      if (kv.key() != "rank" && kv.key() != "twists")
        throw SpecError("base: unknown key '" + kv.key() + "'");
    if (!b.contains("rank") || !b.contains("twists"))
      throw SpecError("base: rank and twists required");
    long rank = require_int(b.at("rank"), "rank", 1, 4);
    const json& tw = b.at("twists");
    if (!tw.is_array() || static_cast<long>(tw.size()) != rank)
      throw SpecError("base: twists must be an array of length rank");
    for (const auto& t : tw) s.twists.push_back(parse_twist(t, s.p));
  }
  for (const auto& t : s.twists)
    if (t.size() != s.twists[0].size())
      throw SpecError("base: twists must share one degree");

  long d = static_cast<long>(s.twists[0].size()) - 1;
  s.trunc = j.contains("trunc")
                ? require_int(j.at("trunc"), "trunc", 16, 20000)
                : 25 * d * static_cast<long>(s.q);
  if (j.contains("precision"))
    s.precision = Rat(require_int(j.at("precision"), "precision", 4, 64));
  if (j.contains("fibers")) {
    const json& fb = j.at("fibers");
    if (!fb.is_array() || fb.empty() || fb.size() > 32)
      throw SpecError("fibers: 1..32 integers expected");
    for (const auto& a : fb)
      s.fibers.push_back(require_int(a, "fiber", -1000000, 1000000));
    s.fibers_given = true;
  } else {
    for (long a = 0; a < static_cast<long>(s.p); ++a) s.fibers.push_back(a);
  }
  return s;
}

json lfunction_report(const JobSpec& s, bool timings) {
  auto t0 = std::chrono::steady_clock::now();
  Pipeline pl = run_pipeline(s);
  json r;
  r["command"] = "lfunction";
  r["p"] = s.p;
  r["q"] = s.q;
  r["twists"] = s.twists;
  r["trunc"] = s.trunc;
  r["precision"] = s.precision.get_str();
  r["dim"] = pl.dim;
  r["coefficients"] = coeffs_json(pl.cp);
  r["slopes"] = slopes_json(pl.cp);
  r["oracle_checked"] = pl.oracle_checked;
  r["identified"] = pl.identified;
  if (pl.identified) {
    json oracle = json::array();
    for (const CycloElem& c : pl.lp.h1) oracle.push_back(c.to_string());
    r["oracle"] = oracle;
    r["weight"] = weight_json(pl.cp);
  }
  r["ok"] = !pl.oracle_checked || pl.identified;
  attach_timing(r, timings, t0);
  return r;
}

json fourier_report(const JobSpec& s, bool timings) {
  if (s.twists.size() != 1)
    throw SpecError("fourier: a single twist P is required");
  auto t0 = std::chrono::steady_clock::now();
  json fibers = json::array();
  bool all_ok = true;
  for (long a : s.fibers) {
    FourierFiber fb = fourier_fiber(s.twists[0], a, s.p, s.precision);
    json e;
    e["a"] = fb.a;
    e["dim"] = fb.dim;
    e["identified"] = fb.identified;
    e["lift_agreement"] = fb.lift_agreement.to_string();
    e["coefficients"] = coeffs_json(fb.cp);
    e["slopes"] = slopes_json(fb.cp);
    if (fb.identified) e["weight"] = weight_json(fb.cp);
    all_ok = all_ok && fb.identified;
    fibers.push_back(e);
  }
  json r;
  r["command"] = "fourier";
  r["p"] = s.p;
  r["q"] = s.q;
  r["twist"] = s.twists[0];
  r["precision"] = s.precision.get_str();
  r["fibers"] = fibers;
  r["ok"] = all_ok;
  attach_timing(r, timings, t0);
  return r;
}

json verify_report(const JobSpec& s, bool timings) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<json> checks;
  auto add = [&checks](const std::string& name, const std::string& inputs,
                       bool ok, const std::string& detail) {
    checks.push_back(json{
        {"check", name}, {"inputs", inputs}, {"ok", ok}, {"detail", detail}});
  };

  for (const auto& t : s.twists) {
    std::string in = json(t).dump();
    long d = static_cast<long>(t.size()) - 1;

    SigmaNablaModule mc =
        make_dwork_module(s.p, t, s.q, std::min<long>(s.trunc, 200));
    CompatibilityReport cr = check_compatibility(mc);
    add("compatibility", in, cr.ok, "window " + std::to_string(cr.window));

    SigmaNablaModule mh =
        make_dwork_module(s.p, t, s.q, std::min<long>(s.trunc, 80));
    Mat<TruncatedSeries> u = horizontal_basis(mh);
    bool trick = true;
    for (size_t i = 0; trick && i < mh.rank; ++i)
      for (size_t j = 0; trick && j < mh.rank; ++j) {
        TruncatedSeries lhs(mh.p, mh.trunc);
        for (size_t k = 0; k < mh.rank; ++k)
          lhs = lhs + mh.frobenius.at(i, k) *
                          frobenius_substitute(u.at(k, j), mh.q);
        trick = (lhs - u.at(i, j)).is_zero();
      }
    add("dwork-trick", in, trick, "window " + std::to_string(mh.trunc));

    // Phi(1) is the splitting value zeta^T(1): evaluate far enough out for
    // the tail certificate to reach 6 pi-units.
    long tf = 6 * static_cast<long>(s.p) * s.p * d /
                  ((static_cast<long>(s.p) - 1) * (static_cast<long>(s.p) - 1)) +
              48;
    SigmaNablaModule mf = make_dwork_module(s.p, t, s.q, tf);
    PiAdicApprox at_one =
        fiber_frobenius(mf, PiAdicApprox::exact(PiFieldElem::from_int(s.p, 1)))
            .at(0, 0);
    long t1 = 0;
    for (long c : t) t1 += c;
    PiAdicApprox want = embed_cyclo(CycloElem::zeta_pow(s.p, t1),
                                    hensel_zeta_p(s.p, Rat(8)));
    Val fib_agree = agreement_valuation(at_one, want);
    add("unit-fiber", in, fib_agree >= Rat(6, s.p - 1),
        "agreement " + fib_agree.to_string());
  }

  const std::string mod_in = "module";
  Pipeline pl = run_pipeline(s);
  if (!pl.oracle_checked)
    throw SpecError("verify: oracle enumeration exceeds the budget");

  SigmaNablaModule msmall = build_module(s, 24);
  SwanPrediction sp = swan_predict(msmall);
  bool dims = h1_dim(msmall) == sp.dim_h1 && sp.dim_h1 == pl.dim;
  add("dimension", mod_in, dims,
      "dim " + std::to_string(pl.dim) + ", swan " + std::to_string(sp.swan));

  add("identification", mod_in, pl.identified,
      pl.lp.consistent ? "threshold 8" : "oracle inversion inconsistent");

  bool dual_ok = false;
  std::string dual_detail;
  try {
    CharPoly dual = h1c_via_duality(pl.cp);
    JobSpec neg = s;
    for (auto& t : neg.twists)
      for (long& c : t) c = -c;
    std::vector<CycloElem> nsums =
        oracle_sums(neg, std::max<unsigned>(static_cast<unsigned>(pl.dim) + 2, 4));
    LPolynomial nlp = l_poly_from_sums(nsums, s.p, s.q,
                                       static_cast<unsigned>(pl.dim));
    dual_ok = nlp.consistent && identify_with_oracle(dual, nlp.h1, Rat(8));
    dual_detail = "dual twist oracle, threshold 8";
  } catch (const std::exception& e) {
    dual_detail = e.what();
  }
  add("duality", mod_in, dual_ok, dual_detail);

  SumSeries agg;
  agg.p = s.p;
  agg.q = s.q;
  agg.values = oracle_sums(s, 4);
  Val lef = lefschetz_verify(pl.cp, 0, agg, 4);
  add("lefschetz", mod_in, lef >= Rat(8), "agreement " + lef.to_string());

  std::vector<Rat> sl = newton_slopes(pl.cp);
  bool in_range = true;
  std::string slist;
  for (const Rat& x : sl) {
    in_range = in_range && x >= Rat(0) && Rat(1) >= x;
    slist += (slist.empty() ? "" : " ") + x.get_str();
  }
  add("slopes", mod_in, in_range, slist);

  if (pl.identified) {
    WeightReport wr = weight_check(pl.cp, Rat(1), 1e-6);
    add("weight", mod_in, wr.ok,
        "deviation " + deviation_string(wr.worst_deviation));
  }

  {
    unsigned p = s.p;
    PolyK n = poly_scale(poly_derivative(poly_from_ints(p, s.twists[0])),
                         -PiFieldElem::pi(p));
    auto twisted_d = [&](const PolyK& f) {
      return poly_add(poly_derivative(f), poly_mul(n, f));
    };
    std::vector<PolyK> w0;
    for (long i = 0; i < 6; ++i) {
      PolyK f(static_cast<size_t>(i) + 2, PiFieldElem(p));
      f[static_cast<size_t>(i) + 1] = PiFieldElem::from_int(p, 1);
      f[0] = PiFieldElem::from_int(p, i - 2);
      w0.push_back(poly_trim(f));
    }
    std::vector<PolyK> v(w0.size() + 1, poly_zero(p));
    for (size_t i = 0; i < w0.size(); ++i) {
      v[i] = poly_add(v[i], twisted_d(w0[i]));
      v[i + 1] = poly_add(v[i + 1], poly_scale(w0[i], PiFieldElem::pi(p)));
    }
    ProbeResult pr = fourier_surjectivity_probe(p, n, v);
    bool ok = poly_is_zero(pr.residual);
    for (size_t i = 0; ok && i < w0.size(); ++i)
      ok = poly_is_zero(poly_sub(pr.w[i], w0[i]));
    add("probe", mod_in, ok, "order 6, exact round trip");
  }

  std::sort(checks.begin(), checks.end(), [](const json& a, const json& b) {
    auto ka = std::make_pair(a.at("check").get<std::string>(),
                             a.at("inputs").get<std::string>());
    auto kb = std::make_pair(b.at("check").get<std::string>(),
                             b.at("inputs").get<std::string>());
    return ka < kb;
  });
  bool all_ok = true;
  json arr = json::array();
  for (const json& c : checks) {
    all_ok = all_ok && c.at("ok").get<bool>();
    arr.push_back(c);
  }

  json r;
  r["command"] = "verify";
  r["p"] = s.p;
  r["q"] = s.q;
  r["twists"] = s.twists;
  r["trunc"] = s.trunc;
  r["precision"] = s.precision.get_str();
  r["checks"] = arr;
  r["ok"] = all_ok;
  attach_timing(r, timings, t0);
  return r;
}

bool report_ok(const nlohmann::json& r) { return r.value("ok", false); }

std::string render_report(const nlohmann::json& r) { return r.dump(2) + "\n"; }

}  // namespace rigidsum
